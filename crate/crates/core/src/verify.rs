//! Batch verification over every semigroup of small order.
//!
//! Each check produces one verdict per instance. The driver owns a rayon
//! pool sized by `workers`; instances are evaluated in parallel and
//! collected in corpus order, so the JSON log is byte-identical across
//! worker counts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constants::{davenport, erdos_burgess, strong_erdos_burgess, strong_free_bound};
use crate::construct::{extremal_pair, group_nil_chain, ComponentSpec, ExtremalSpec};
use crate::enumerate::{
    enumerate_semigroups, EnumerateOptions, SemigroupEnumerator, DEFAULT_MAX_ORDER,
};
use crate::error::{Error, Result};
use crate::semigroup::{ElementId, FiniteSemigroup};
use crate::seqprod::{any_order_products, is_weakly_free, lambda, natural_order_products, Seq};
use crate::structure::{extremal_equivalence, extremal_structure_check, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    /// `SI(S) ≤ |S ∖ E(S)| + 1` over the corpus.
    StrongBound,
    /// The structural certificate agrees with weak freeness for every
    /// sequence of length `|S ∖ E(S)|` over commutative members.
    ExtremalEquivalence,
    /// Generated extremal pairs pass the certificate and attain `I(S)`.
    ExtremalFamilies,
    /// `I` and `D` of the cyclic group absorbed by a cyclic nilsemigroup.
    GroupNilChain,
    /// `I(S) ≤ SI(S)`, with equality for commutative members.
    WeakVsStrong,
    /// Removing and re-appending a term of a weakly free sequence adds
    /// at least one new product.
    LambdaPositive,
    /// Monogenic tables against direct exponent arithmetic.
    MonogenicFormula,
    /// In a commutative nilsemigroup, `ab ∈ {a, b}` forces a zero factor.
    NilAbsorption,
    /// Product-set DP against naive enumeration on random inputs.
    ProductOracle,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::StrongBound,
        CheckId::ExtremalEquivalence,
        CheckId::ExtremalFamilies,
        CheckId::GroupNilChain,
        CheckId::WeakVsStrong,
        CheckId::LambdaPositive,
        CheckId::MonogenicFormula,
        CheckId::NilAbsorption,
        CheckId::ProductOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::StrongBound => "strong-bound",
            CheckId::ExtremalEquivalence => "extremal-equivalence",
            CheckId::ExtremalFamilies => "extremal-families",
            CheckId::GroupNilChain => "group-nil-chain",
            CheckId::WeakVsStrong => "weak-vs-strong",
            CheckId::LambdaPositive => "lambda-positive",
            CheckId::MonogenicFormula => "monogenic-formula",
            CheckId::NilAbsorption => "nil-absorption",
            CheckId::ProductOracle => "product-oracle",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| {
                let known = CheckId::ALL.iter().map(|c| c.name()).join(", ");
                Error::InvalidParameters(format!("unknown check {s:?}; known: {known}"))
            })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_order: usize,
    pub commutative_only: bool,
    pub checks: Vec<CheckId>,
    /// Size of the rayon pool; 0 means rayon's default.
    pub workers: usize,
    pub allow_order_five: bool,
    /// Bound on `|S ∖ E(S)|` for generated extremal families.
    pub extremal_budget: usize,
    pub oracle_samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_order: DEFAULT_MAX_ORDER,
            commutative_only: false,
            checks: CheckId::ALL.to_vec(),
            workers: 0,
            allow_order_five: false,
            extremal_budget: 10,
            oracle_samples: 1000,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Corpus {
    pub max_order: usize,
    pub commutative_only: bool,
    /// Members per order, starting at order 1.
    pub sizes: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceVerdict {
    pub instance: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: CheckId,
    pub passed: usize,
    pub failed: usize,
    pub counters: BTreeMap<String, u64>,
    pub instances: Vec<InstanceVerdict>,
}

impl CheckReport {
    pub fn is_pass(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub verdict: Verdict,
}

/// Complete log of one run. `elapsed_ms` is kept out of [`Self::to_json`]
/// so logs compare byte for byte.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationRun {
    pub corpus: Corpus,
    pub checks: Vec<CheckId>,
    pub results: Vec<CheckReport>,
    pub summary: Summary,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl VerificationRun {
    pub fn is_pass(&self) -> bool {
        self.summary.verdict.is_pass()
    }

    pub fn report(&self, check: CheckId) -> Option<&CheckReport> {
        self.results.iter().find(|r| r.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("run serializes")
    }

    pub fn to_json_with_timing(&self) -> String {
        let mut value = serde_json::to_value(self).expect("run serializes");
        value["elapsedMs"] = serde_json::json!(self.elapsed_ms as u64);
        serde_json::to_string_pretty(&value).expect("run serializes")
    }
}

/// Runs the selected checks over every semigroup of order `1..=max_order`.
pub fn cmd_verify(options: &VerifyOptions) -> Result<VerificationRun> {
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .map_err(|e| Error::InvalidParameters(format!("cannot start worker pool: {e}")))?;
    let mut run = pool.install(|| run_checks(options))?;
    run.elapsed_ms = started.elapsed().as_millis();
    Ok(run)
}

fn enumerate_corpus(options: &VerifyOptions) -> Result<Vec<Vec<FiniteSemigroup>>> {
    if options.max_order == 0 {
        return Err(Error::EmptyOrder);
    }
    (1..=options.max_order)
        .map(|order| {
            Ok(SemigroupEnumerator::new(
                order,
                EnumerateOptions {
                    commutative_only: options.commutative_only,
                    allow_order_five: options.allow_order_five,
                    ..Default::default()
                },
            )?
            .collect())
        })
        .collect()
}

fn run_checks(options: &VerifyOptions) -> Result<VerificationRun> {
    let by_order = enumerate_corpus(options)?;
    let corpus = Corpus {
        max_order: options.max_order,
        commutative_only: options.commutative_only,
        sizes: by_order.iter().map(Vec::len).collect(),
    };
    let members: Vec<(String, &FiniteSemigroup)> = by_order
        .iter()
        .flat_map(|tables| tables.iter().enumerate())
        .map(|(i, s)| (format!("order {} #{i} {}", s.order(), s.compact()), s))
        .collect();
    let commutative: Vec<(String, &FiniteSemigroup)> = members
        .iter()
        .filter(|(_, s)| s.is_commutative())
        .cloned()
        .collect();

    let checks: Vec<CheckId> = options.checks.iter().copied().sorted().dedup().collect();
    let mut results = Vec::with_capacity(checks.len());
    for &check in &checks {
        let report = match check {
            CheckId::StrongBound => over(check, &members, strong_bound),
            CheckId::ExtremalEquivalence => over(check, &commutative, equivalence_sweep),
            CheckId::ExtremalFamilies => {
                let specs = extremal_specs(options.extremal_budget);
                let labelled: Vec<(String, &ExtremalSpec)> =
                    specs.iter().map(|spec| (spec.to_string(), spec)).collect();
                over(check, &labelled, extremal_family)
            }
            CheckId::GroupNilChain => {
                let params: Vec<(usize, usize)> = (2..=5).cartesian_product(2..=5).collect();
                let labelled: Vec<(String, &(usize, usize))> = params
                    .iter()
                    .map(|p| (format!("n1={} n2={}", p.0, p.1), p))
                    .collect();
                over(check, &labelled, |&(n1, n2)| group_nil_formulas(n1, n2))
            }
            CheckId::WeakVsStrong => over(check, &members, weak_vs_strong),
            CheckId::LambdaPositive => over(check, &commutative, lambda_sweep),
            CheckId::MonogenicFormula => {
                let params: Vec<(usize, usize)> = (1..=12)
                    .flat_map(|i| (1..=13 - i).map(move |p| (i, p)))
                    .collect();
                let labelled: Vec<(String, &(usize, usize))> = params
                    .iter()
                    .map(|p| (format!("index={} period={}", p.0, p.1), p))
                    .collect();
                over(check, &labelled, |&(i, p)| monogenic_formula(i, p))
            }
            CheckId::NilAbsorption => {
                let nil: Vec<(String, &FiniteSemigroup)> = commutative
                    .iter()
                    .filter(|(_, s)| is_nilsemigroup(s))
                    .cloned()
                    .collect();
                over(check, &nil, nil_absorption)
            }
            CheckId::ProductOracle => {
                let samples = oracle_samples(options.oracle_samples, options.seed)?;
                let labelled: Vec<(String, &(FiniteSemigroup, Seq))> = samples
                    .iter()
                    .enumerate()
                    .map(|(k, pair)| {
                        (
                            format!("sample {k} S={} T={}", pair.0.compact(), pair.1),
                            pair,
                        )
                    })
                    .collect();
                over(check, &labelled, |(s, t)| product_oracle(s, t))
            }
        };
        results.push(report);
    }

    let passed = results.iter().filter(|r| r.is_pass()).count();
    let failed = results.len() - passed;
    Ok(VerificationRun {
        corpus,
        checks,
        summary: Summary {
            passed,
            failed,
            verdict: Verdict::from_bool(failed == 0),
        },
        results,
        elapsed_ms: 0,
    })
}

/// Outcome of one instance: pass/fail, a failure detail, and counters.
struct Outcome {
    ok: bool,
    detail: Option<String>,
    counters: Vec<(&'static str, u64)>,
}

impl Outcome {
    fn pass(counters: Vec<(&'static str, u64)>) -> Self {
        Outcome {
            ok: true,
            detail: None,
            counters,
        }
    }

    fn fail(detail: String, counters: Vec<(&'static str, u64)>) -> Self {
        Outcome {
            ok: false,
            detail: Some(detail),
            counters,
        }
    }

    fn from_error(e: Error) -> Self {
        Outcome::fail(format!("error: {e}"), Vec::new())
    }
}

fn over<T: Sync + ?Sized>(
    check: CheckId,
    items: &[(String, &T)],
    eval: impl Fn(&T) -> Outcome + Sync,
) -> CheckReport {
    let outcomes: Vec<Outcome> = items.par_iter().map(|(_, item)| eval(item)).collect();
    let mut counters = BTreeMap::new();
    let mut instances = Vec::with_capacity(items.len());
    for ((label, _), outcome) in items.iter().zip(outcomes) {
        for (name, value) in outcome.counters {
            *counters.entry(name.to_string()).or_insert(0) += value;
        }
        instances.push(InstanceVerdict {
            instance: label.clone(),
            verdict: Verdict::from_bool(outcome.ok),
            detail: outcome.detail,
        });
    }
    let passed = instances.iter().filter(|v| v.verdict.is_pass()).count();
    CheckReport {
        check,
        passed,
        failed: instances.len() - passed,
        counters,
        instances,
    }
}

fn strong_bound(s: &FiniteSemigroup) -> Outcome {
    let report = strong_erdos_burgess(s);
    let bound = strong_free_bound(s);
    let counters = vec![("nodesExplored", report.nodes_explored)];
    if report.value <= bound {
        Outcome::pass(counters)
    } else {
        Outcome::fail(
            format!(
                "SI = {} exceeds {bound}; witness {}",
                report.value, report.witness
            ),
            counters,
        )
    }
}

fn weak_vs_strong(s: &FiniteSemigroup) -> Outcome {
    let weak = erdos_burgess(s);
    let strong = strong_erdos_burgess(s);
    let counters = vec![("nodesExplored", weak.nodes_explored + strong.nodes_explored)];
    let ok = if s.is_commutative() {
        weak.value == strong.value
    } else {
        weak.value <= strong.value
    };
    if ok {
        Outcome::pass(counters)
    } else {
        Outcome::fail(
            format!("I = {}, SI = {}", weak.value, strong.value),
            counters,
        )
    }
}

/// Every word of length `len` over `alphabet`, lexicographic.
fn words(alphabet: &[ElementId], len: usize) -> Vec<Seq> {
    if len == 0 {
        return vec![Seq::empty()];
    }
    (0..len)
        .map(|_| alphabet.iter().copied())
        .multi_cartesian_product()
        .map(Seq::new)
        .collect()
}

fn equivalence_sweep(s: &FiniteSemigroup) -> Outcome {
    let alphabet = s.non_idempotents().to_vec();
    let mut sequences = 0;
    let mut extremal = 0;
    for t in words(&alphabet, alphabet.len()) {
        sequences += 1;
        let outcome = (|| -> Result<Option<String>> {
            if !extremal_equivalence(s, &t)? {
                return Ok(Some("certificate disagrees with weak freeness".into()));
            }
            let certificate = extremal_structure_check(s, &t)?;
            if certificate.main_form != certificate.verdict.is_pass() {
                return Ok(Some(
                    "component form disagrees with the flat conditions".into(),
                ));
            }
            if certificate.verdict.is_pass() {
                extremal += 1;
            }
            Ok(None)
        })();
        match outcome {
            Ok(None) => {}
            Ok(Some(why)) => {
                return Outcome::fail(format!("T = {t}: {why}"), vec![("sequences", sequences)]);
            }
            Err(e) => {
                return Outcome::fail(
                    format!("T = {t}: error: {e}"),
                    vec![("sequences", sequences)],
                )
            }
        }
    }
    Outcome::pass(vec![("sequences", sequences), ("extremal", extremal)])
}

/// Weakly free words of every length up to `|S ∖ E(S)|`.
fn lambda_sweep(s: &FiniteSemigroup) -> Outcome {
    let alphabet = s.non_idempotents().to_vec();
    let mut free = 0;
    let mut pairs = 0;
    for len in 1..=alphabet.len() {
        for t in words(&alphabet, len) {
            match is_weakly_free(s, &t) {
                Ok(true) => {}
                Ok(false) => continue,
                Err(e) => return Outcome::from_error(e),
            }
            free += 1;
            for x in t.support() {
                pairs += 1;
                let rest = t.without_one(x).expect("x is in the support");
                match lambda(s, &rest, x) {
                    Ok(0) => {
                        return Outcome::fail(
                            format!("T = {t}, x = {x}: no new product"),
                            vec![("weaklyFree", free), ("pairs", pairs)],
                        )
                    }
                    Ok(_) => {}
                    Err(e) => return Outcome::from_error(e),
                }
            }
        }
    }
    Outcome::pass(vec![("weaklyFree", free), ("pairs", pairs)])
}

/// Every chain of at most three components with at most `budget`
/// non-idempotents in total, each with and without an adjoined identity.
pub fn extremal_specs(budget: usize) -> Vec<ExtremalSpec> {
    let mut components = Vec::new();
    for period in 1..=budget + 1 {
        let mut index = 1;
        while index + period - 2 <= budget {
            components.push(ComponentSpec::Monogenic { index, period });
            index += period;
        }
    }
    for nil_index in 2..=4 {
        for group_order in 2..=4 {
            let c = ComponentSpec::GroupByNil {
                nil_index,
                group_order,
            };
            if c.non_idempotents() <= budget {
                components.push(c);
            }
        }
    }
    let mut specs = Vec::new();
    for len in 1..=3 {
        for chain in (0..len)
            .map(|_| components.iter().copied())
            .multi_cartesian_product()
        {
            let spec = ExtremalSpec::new(chain);
            if spec.non_idempotents() > budget {
                continue;
            }
            specs.push(ExtremalSpec {
                adjoin_identity: true,
                ..spec.clone()
            });
            specs.push(spec);
        }
    }
    specs
}

fn extremal_family(spec: &ExtremalSpec) -> Outcome {
    let (s, t) = match extremal_pair(spec) {
        Ok(pair) => pair,
        Err(e) => return Outcome::from_error(e),
    };
    match is_weakly_free(&s, &t) {
        Ok(true) => {}
        Ok(false) => return Outcome::fail(format!("T = {t} is not weakly free"), Vec::new()),
        Err(e) => return Outcome::from_error(e),
    }
    match extremal_structure_check(&s, &t) {
        Ok(c) if c.verdict.is_pass() => {}
        Ok(c) => {
            let why = c.fail_reason.map_or('?', |r| r.id());
            return Outcome::fail(format!("certificate fails condition ({why})"), Vec::new());
        }
        Err(e) => return Outcome::from_error(e),
    }
    let report = erdos_burgess(&s);
    let counters = vec![("nodesExplored", report.nodes_explored)];
    let expected = s.non_idempotents().len() + 1;
    if report.value == expected {
        Outcome::pass(counters)
    } else {
        Outcome::fail(
            format!("I = {}, expected {expected}", report.value),
            counters,
        )
    }
}

fn group_nil_formulas(n1: usize, n2: usize) -> Outcome {
    let s = match group_nil_chain(n1, n2) {
        Ok(s) => s,
        Err(e) => return Outcome::from_error(e),
    };
    let weak = erdos_burgess(&s);
    let dav = match davenport(&s) {
        Ok(r) => r,
        Err(e) => return Outcome::from_error(e),
    };
    let counters = vec![("nodesExplored", weak.nodes_explored + dav.nodes_explored)];
    let (want_i, want_d) = ((n1 - 1) + (n2 - 1) + 1, n1.max(n2 + 1));
    if weak.value == want_i && dav.value == want_d {
        Outcome::pass(counters)
    } else {
        Outcome::fail(
            format!(
                "I = {} (expected {want_i}), D = {} (expected {want_d})",
                weak.value, dav.value
            ),
            counters,
        )
    }
}

fn monogenic_formula(index: usize, period: usize) -> Outcome {
    let s = match FiniteSemigroup::monogenic(index, period) {
        Ok(s) => s,
        Err(e) => return Outcome::from_error(e),
    };
    let top = index + period - 1;
    for a in 1..=top {
        for b in 1..=top {
            let want = oracle::monogenic_exponent(index, period, a + b);
            let got = s.mul(ElementId::new(a - 1), ElementId::new(b - 1)).index() + 1;
            if got != want {
                return Outcome::fail(
                    format!("x^{a} * x^{b} = x^{got}, expected x^{want}"),
                    Vec::new(),
                );
            }
        }
    }
    let x = ElementId::new(0);
    let data = s.cyclic_data(x);
    if (data.index, data.period) != (index, period) {
        return Outcome::fail(
            format!(
                "cyclic data gives index {} period {}",
                data.index, data.period
            ),
            Vec::new(),
        );
    }
    let e = s.unique_cycle_idempotent(x);
    let l = e.index() + 1;
    if !(index..=top).contains(&l) || l % period != 0 || !s.is_idempotent(e) {
        return Outcome::fail(format!("cycle idempotent is x^{l}"), Vec::new());
    }
    Outcome::pass(Vec::new())
}

/// Has a zero, and every element has a power equal to it.
fn is_nilsemigroup(s: &FiniteSemigroup) -> bool {
    let Some(z) = s.zero_element() else {
        return false;
    };
    s.elements().all(|x| s.cyclic_data(x).powers.contains(&z))
}

fn nil_absorption(s: &FiniteSemigroup) -> Outcome {
    let z = s.zero_element().expect("nilsemigroup has a zero");
    for (a, b) in s.elements().cartesian_product(s.elements()) {
        let ab = s.mul(a, b);
        if (ab == a || ab == b) && a != z && b != z {
            return Outcome::fail(format!("{a} * {b} = {ab} with no zero factor"), Vec::new());
        }
    }
    Outcome::pass(Vec::new())
}

/// Random `(S, T)` pairs: `S` of order at most 4 from the full corpus, or
/// of order 5 by adjoining an identity or a zero to an order-4 member and
/// relabelling at random; `|T| ≤ 6`.
fn oracle_samples(count: usize, seed: u64) -> Result<Vec<(FiniteSemigroup, Seq)>> {
    let mut pool = Vec::new();
    for order in 1..=4 {
        pool.extend(enumerate_semigroups(order, false, false)?);
    }
    let order_four: Vec<&FiniteSemigroup> = pool.iter().filter(|s| s.order() == 4).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(count);
    for _ in 0..count {
        let s = if rng.gen_bool(0.5) {
            pool[rng.gen_range(0..pool.len())].clone()
        } else {
            let base = order_four[rng.gen_range(0..order_four.len())];
            let extended = if rng.gen_bool(0.5) {
                base.adjoin_identity()?
            } else {
                base.adjoin_zero()?
            };
            let mut perm: Vec<usize> = (0..extended.order()).collect();
            perm.shuffle(&mut rng);
            extended.relabel(&perm)?
        };
        let len = rng.gen_range(0..=6);
        let terms: Vec<usize> = (0..len).map(|_| rng.gen_range(0..s.order())).collect();
        samples.push((s, Seq::from_indices(&terms)));
    }
    Ok(samples)
}

fn product_oracle(s: &FiniteSemigroup, t: &Seq) -> Outcome {
    let any = match any_order_products(s, t) {
        Ok(set) => set,
        Err(e) => return Outcome::from_error(e),
    };
    let naive_any = oracle::any_order_products(s, t);
    if any != naive_any {
        return Outcome::fail(
            format!("any-order {any:?}, naive {naive_any:?}"),
            Vec::new(),
        );
    }
    let natural = natural_order_products(s, t);
    let naive_natural = oracle::natural_order_products(s, t);
    if natural != naive_natural {
        return Outcome::fail(
            format!("natural-order {natural:?}, naive {naive_natural:?}"),
            Vec::new(),
        );
    }
    Outcome::pass(vec![("terms", t.len() as u64)])
}

/// Direct reference evaluations, deliberately naive.
pub mod oracle {
    use itertools::Itertools;

    use crate::elemset::ElemSet;
    use crate::semigroup::{ElementId, FiniteSemigroup};
    use crate::seqprod::Seq;

    fn product(
        s: &FiniteSemigroup,
        terms: impl IntoIterator<Item = ElementId>,
    ) -> Option<ElementId> {
        terms.into_iter().reduce(|acc, x| s.mul(acc, x))
    }

    /// Products of every nonempty subsequence in every order.
    pub fn any_order_products(s: &FiniteSemigroup, t: &Seq) -> ElemSet {
        let n = t.len();
        let mut out = ElemSet::EMPTY;
        for mask in 1u32..1 << n {
            let chosen: Vec<ElementId> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| t.terms()[i])
                .collect();
            for order in chosen.iter().copied().permutations(chosen.len()) {
                out.extend(product(s, order));
            }
        }
        out
    }

    /// Products of every nonempty subsequence in its original order.
    pub fn natural_order_products(s: &FiniteSemigroup, t: &Seq) -> ElemSet {
        let n = t.len();
        (1u32..1 << n)
            .filter_map(|mask| {
                product(
                    s,
                    (0..n).filter(|i| mask >> i & 1 == 1).map(|i| t.terms()[i]),
                )
            })
            .collect()
    }

    /// Exponent of `x^e` in the monogenic semigroup of the given index and
    /// period, by folding the exponent back one period at a time.
    pub fn monogenic_exponent(index: usize, period: usize, mut e: usize) -> usize {
        while e >= index + period {
            e -= period;
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(checks: Vec<CheckId>, workers: usize) -> VerificationRun {
        cmd_verify(&VerifyOptions {
            max_order: 3,
            checks,
            workers,
            extremal_budget: 4,
            oracle_samples: 50,
            ..Default::default()
        })
        .unwrap()
    }

    #[test]
    fn check_names_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
            assert_eq!(
                serde_json::to_string(&c).unwrap(),
                format!("\"{}\"", c.name())
            );
        }
        assert!("nope".parse::<CheckId>().is_err());
    }

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let one = quick(CheckId::ALL.to_vec(), 1);
        assert!(one.is_pass(), "{}", one.to_json());
        let many = quick(CheckId::ALL.to_vec(), 4);
        assert_eq!(one.to_json(), many.to_json());
        assert_eq!(one.corpus.sizes, vec![1, 8, 113]);
        assert!(!one.to_json().contains("elapsedMs"));
        assert!(one.to_json_with_timing().contains("elapsedMs"));
    }

    #[test]
    fn specs_respect_budget_and_congruence() {
        let specs = extremal_specs(4);
        assert!(specs
            .iter()
            .all(|s| s.non_idempotents() <= 4 && s.validate().is_ok()));
        assert!(specs.contains(&"mono:3:2".parse().unwrap()));
        assert!(specs.contains(&"gbn:2:2,mono:1:1,+1".parse().unwrap()));
        assert!(!specs
            .iter()
            .any(|s| s.chain.contains(&ComponentSpec::Monogenic {
                index: 2,
                period: 2
            })));
    }

    #[test]
    fn monogenic_exponent_oracle() {
        // index 3, period 2: x^3 = x^5, x^4 = x^6
        assert_eq!(oracle::monogenic_exponent(3, 2, 5), 3);
        assert_eq!(oracle::monogenic_exponent(3, 2, 6), 4);
        assert_eq!(oracle::monogenic_exponent(3, 2, 4), 4);
    }

    #[test]
    fn oracle_sampling_is_seeded() {
        let a = oracle_samples(20, 7).unwrap();
        let b = oracle_samples(20, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|(s, t)| s.order() <= 5 && t.len() <= 6));
    }

    #[test]
    fn nilsemigroups_are_found() {
        let nil = FiniteSemigroup::monogenic(3, 1).unwrap();
        assert!(is_nilsemigroup(&nil));
        assert!(!is_nilsemigroup(&FiniteSemigroup::monogenic(1, 2).unwrap()));
    }
}
