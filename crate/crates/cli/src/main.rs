use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use idemfree::constants::{davenport, erdos_burgess, strong_erdos_burgess, ConstantKind};
use idemfree::construct::{
    cyclic_group, cyclic_nil, extremal_pair, group_nil_chain, ideal_extension_trivial, ExtremalSpec,
};
use idemfree::enumerate::{EnumerateOptions, SemigroupEnumerator};
use idemfree::seqprod::{
    any_order_products_capped, is_strongly_free, is_weakly_free_capped, natural_order_products,
    DEFAULT_DP_CAP,
};
use idemfree::structure::{extremal_equivalence, extremal_structure_check};
use idemfree::verify::{cmd_verify, CheckId, VerificationRun, VerifyOptions};
use idemfree::{FiniteSemigroup, Seq};

/// Finite semigroup toolkit: idempotent-product free sequences and the
/// constants they define.
///
/// Tables are read in the Cayley text format: the order on the first line,
/// then one line of space-separated 0-based indices per row. Sequences are
/// one line of space-separated indices. Results go to stdout as JSON.
#[derive(Parser, Debug)]
#[command(name = "idemfree", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a table and summarise it.
    Validate {
        table: PathBuf,
        /// Print the table in canonical text form instead of a summary.
        #[arg(long)]
        canonical: bool,
    },
    /// Compute I(S), SI(S) and D(S) by exhaustive search.
    Constants {
        table: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "I,SI,D")]
        which: Vec<Which>,
        #[arg(long, env = "IDEMFREE_WORKERS", default_value_t = 0)]
        workers: usize,
    },
    /// Any-order and natural-order product sets of a sequence.
    Products {
        table: PathBuf,
        seq: PathBuf,
        #[arg(long, env = "IDEMFREE_DP_CAP", default_value_t = DEFAULT_DP_CAP)]
        dp_cap: usize,
    },
    /// Test a sequence for weak (default) or strong idempotent-product freeness.
    FreeCheck {
        table: PathBuf,
        seq: PathBuf,
        #[arg(long)]
        strong: bool,
        #[arg(long, env = "IDEMFREE_DP_CAP", default_value_t = DEFAULT_DP_CAP)]
        dp_cap: usize,
    },
    /// Compare weak freeness of a length-|S \ E(S)| sequence with its
    /// structural certificate.
    CheckExtremal { table: PathBuf, seq: PathBuf },
    /// Run the verification checks over every semigroup up to an order.
    Verify {
        #[arg(long, env = "IDEMFREE_MAX_ORDER", default_value_t = 4)]
        max_order: usize,
        #[arg(long)]
        commutative: bool,
        /// Comma-separated check names; all by default.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Write the full per-instance log here.
        #[arg(long)]
        log: Option<PathBuf>,
        #[arg(long, env = "IDEMFREE_WORKERS", default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        allow_order_five: bool,
        #[arg(long, default_value_t = 10)]
        extremal_budget: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
    },
    /// Generate a table from a named family.
    ///
    /// Families: cyclic-group P, cyclic-nil N, monogenic I P,
    /// ideal-extension N P, group-nil-chain N1 N2, extremal SPEC
    /// (e.g. `mono:3:2,gbn:2:3,+1`).
    Gen {
        family: Family,
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Companion sequence file for `extremal`.
        #[arg(long)]
        seq_out: Option<PathBuf>,
    },
    /// Stream every semigroup of an order as JSON lines, in lexicographic order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        commutative: bool,
        /// One table per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Flattened table prefix, comma-separated, to resume from.
        #[arg(long, value_delimiter = ',')]
        resume_from: Option<Vec<u8>>,
        /// Permit order 5, which runs for a long time.
        #[arg(long)]
        allow_order_five: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "I")]
    I,
    #[value(name = "SI")]
    Si,
    #[value(name = "D")]
    D,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    CyclicGroup,
    CyclicNil,
    Monogenic,
    IdealExtension,
    GroupNilChain,
    Extremal,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn read_table(path: &Path) -> anyhow::Result<FiniteSemigroup> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    FiniteSemigroup::parse(&text).with_context(|| format!("invalid table {}", path.display()))
}

fn read_seq(path: &Path, s: &FiniteSemigroup) -> anyhow::Result<Seq> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let t = Seq::parse(&text).with_context(|| format!("invalid sequence {}", path.display()))?;
    t.check_against(s)?;
    Ok(t)
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>()
        .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
}

fn emit(value: &impl Serialize) -> anyhow::Result<()> {
    writeln!(
        io::stdout().lock(),
        "{}",
        serde_json::to_string_pretty(value)?
    )?;
    Ok(())
}

fn write_or_print(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => Ok(io::stdout().lock().write_all(text.as_bytes())?),
    }
}

fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Validate { table, canonical } => {
            let s = read_table(&table)?;
            if canonical {
                write!(io::stdout().lock(), "{s}")?;
            } else {
                emit(&json!({
                    "order": s.order(),
                    "idempotents": s.idempotents().len(),
                    "idempotentElements": s.idempotents(),
                    "commutative": s.is_commutative(),
                    "zero": s.zero_element(),
                    "identity": s.identity_element(),
                }))?;
            }
        }
        Command::Constants {
            table,
            which,
            workers,
        } => {
            let s = read_table(&table)?;
            let pool = rayon_pool(workers)?;
            let mut reports = Vec::new();
            let mut notes = Vec::new();
            for w in dedup(which) {
                match w {
                    Which::I => reports.push(pool.install(|| erdos_burgess(&s))),
                    Which::Si => reports.push(pool.install(|| strong_erdos_burgess(&s))),
                    Which::D => match pool.install(|| davenport(&s)) {
                        Ok(r) => reports.push(r),
                        Err(e) => {
                            eprintln!("note: D skipped: {e}");
                            notes.push(json!({ "kind": ConstantKind::Davenport, "skipped": e.to_string() }));
                        }
                    },
                }
            }
            emit(&json!({ "reports": reports, "skipped": notes }))?;
        }
        Command::Products { table, seq, dp_cap } => {
            let s = read_table(&table)?;
            let t = read_seq(&seq, &s)?;
            emit(&json!({
                "anyOrder": any_order_products_capped(&s, &t, dp_cap)?,
                "naturalOrder": natural_order_products(&s, &t),
            }))?;
        }
        Command::FreeCheck {
            table,
            seq,
            strong,
            dp_cap,
        } => {
            let s = read_table(&table)?;
            let t = read_seq(&seq, &s)?;
            let free = if strong {
                is_strongly_free(&s, &t)
            } else {
                is_weakly_free_capped(&s, &t, dp_cap)?
            };
            emit(&json!({ "mode": if strong { "strong" } else { "weak" }, "free": free }))?;
        }
        Command::CheckExtremal { table, seq } => {
            let s = read_table(&table)?;
            let t = read_seq(&seq, &s)?;
            let certificate = extremal_structure_check(&s, &t)?;
            let equivalent = extremal_equivalence(&s, &t)?;
            emit(&json!({
                "weaklyFree": is_weakly_free_capped(&s, &t, DEFAULT_DP_CAP)?,
                "certificate": certificate,
                "equivalent": equivalent,
            }))?;
            return Ok(equivalent);
        }
        Command::Verify {
            max_order,
            commutative,
            checks,
            log,
            workers,
            allow_order_five,
            extremal_budget,
            samples,
            seed,
        } => {
            let checks = if checks.is_empty() {
                CheckId::ALL.to_vec()
            } else {
                checks.iter().map(|c| c.parse()).collect::<Result<_, _>>()?
            };
            let run = cmd_verify(&VerifyOptions {
                max_order,
                commutative_only: commutative,
                checks,
                workers,
                allow_order_five,
                extremal_budget,
                oracle_samples: samples,
                seed,
            })?;
            if let Some(path) = log {
                fs::write(&path, run.to_json_with_timing())
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            emit(&summary(&run))?;
            for report in run.results.iter().filter(|r| !r.is_pass()) {
                eprintln!("{}: {} failing instances", report.check, report.failed);
            }
            return Ok(run.is_pass());
        }
        Command::Gen {
            family,
            params,
            out,
            seq_out,
        } => {
            let (s, t) = generate(family, &params)?;
            write_or_print(out.as_deref(), &s.to_string())?;
            if let Some(t) = t {
                match seq_out {
                    Some(p) => fs::write(&p, format!("{t}\n"))
                        .with_context(|| format!("cannot write {}", p.display()))?,
                    None => eprintln!("sequence: {t}"),
                }
            } else if seq_out.is_some() {
                bail!("--seq-out applies only to the extremal family");
            }
        }
        Command::Enumerate {
            order,
            commutative,
            dedup,
            resume_from,
            allow_order_five,
        } => {
            let enumerator = SemigroupEnumerator::new(
                order,
                EnumerateOptions {
                    commutative_only: commutative,
                    dedup_iso: dedup,
                    allow_order_five,
                    resume_from,
                },
            )?;
            let mut stdout = io::BufWriter::new(io::stdout().lock());
            let mut count = 0;
            for s in enumerator {
                writeln!(stdout, "{}", serde_json::to_string(&s)?)?;
                count += 1;
            }
            stdout.flush()?;
            eprintln!("{count} tables");
        }
    }
    Ok(true)
}

fn rayon_pool(workers: usize) -> anyhow::Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()?)
}

fn dedup(which: Vec<Which>) -> Vec<Which> {
    let mut seen = Vec::new();
    for w in which {
        if !seen.contains(&w) {
            seen.push(w);
        }
    }
    seen
}

fn summary(run: &VerificationRun) -> serde_json::Value {
    let checks: Vec<_> = run
        .results
        .iter()
        .map(|r| {
            let failures: Vec<_> = r
                .instances
                .iter()
                .filter(|i| !i.verdict.is_pass())
                .take(5)
                .collect();
            json!({
                "check": r.check,
                "passed": r.passed,
                "failed": r.failed,
                "counters": r.counters,
                "firstFailures": failures,
            })
        })
        .collect();
    json!({
        "corpus": run.corpus,
        "checks": checks,
        "summary": run.summary,
        "elapsedMs": run.elapsed_ms as u64,
    })
}

fn parse_params<const N: usize>(family: Family, params: &[String]) -> anyhow::Result<[usize; N]> {
    if params.len() != N {
        bail!("{family:?} takes {N} parameter(s), got {}", params.len());
    }
    let mut out = [0; N];
    for (slot, p) in out.iter_mut().zip(params) {
        *slot = p
            .parse()
            .with_context(|| format!("parameter {p:?} is not a nonnegative integer"))?;
    }
    Ok(out)
}

fn generate(family: Family, params: &[String]) -> anyhow::Result<(FiniteSemigroup, Option<Seq>)> {
    let s = match family {
        Family::CyclicGroup => {
            let [p] = parse_params(family, params)?;
            cyclic_group(p)?
        }
        Family::CyclicNil => {
            let [n] = parse_params(family, params)?;
            cyclic_nil(n)?
        }
        Family::Monogenic => {
            let [i, p] = parse_params(family, params)?;
            FiniteSemigroup::monogenic(i, p)?
        }
        Family::IdealExtension => {
            let [n, p] = parse_params(family, params)?;
            ideal_extension_trivial(n, p)?
        }
        Family::GroupNilChain => {
            let [n1, n2] = parse_params(family, params)?;
            group_nil_chain(n1, n2)?
        }
        Family::Extremal => {
            let [spec] = params else {
                bail!("extremal takes one spec such as mono:3:2,gbn:2:3,+1");
            };
            let spec: ExtremalSpec = spec.parse()?;
            let (s, t) = extremal_pair(&spec)?;
            return Ok((s, Some(t)));
        }
    };
    Ok((s, None))
}
