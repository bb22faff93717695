//! Generators for cyclic, nil, ideal-extension and chain-glued semigroups,
//! and for extremal `(S, T)` pairs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{ElementId, FiniteSemigroup, MAX_ORDER};
use crate::seqprod::Seq;

/// `Z_p` as `monogenic(1, p)`; element `k-1` is `g^k`, so the identity is
/// the last element.
pub fn cyclic_group(p: usize) -> Result<FiniteSemigroup> {
    FiniteSemigroup::monogenic(1, p)
}

/// Cyclic nilsemigroup of index `n`; its zero is the top power `x^n`.
pub fn cyclic_nil(n: usize) -> Result<FiniteSemigroup> {
    FiniteSemigroup::monogenic(n, 1)
}

/// Ideal extension of `Z_p` by the cyclic nilsemigroup of index `n` along the
/// trivial partial homomorphism.
///
/// Layout: `x^a` at index `a-1` for `a ∈ [1, n-1]`, then `g^k` at
/// `n-1+k` for `k ∈ [0, p-1]` (identity `e = g⁰` at `n-1`). Nil powers
/// overflowing `n-1` land on `e`; nil elements act as `e` on the group.
pub fn ideal_extension_trivial(n: usize, p: usize) -> Result<FiniteSemigroup> {
    if n < 2 || p < 2 {
        return Err(Error::InvalidParameters(format!(
            "ideal extension needs nil index >= 2 and group order >= 2, got ({n}, {p})"
        )));
    }
    let nil = n - 1;
    check_size(nil + p)?;
    FiniteSemigroup::from_fn(nil + p, |a, b| match (a < nil, b < nil) {
        (true, true) => {
            let k = a + b + 2;
            if k <= nil {
                k - 1
            } else {
                nil
            }
        }
        (true, false) => b,
        (false, true) => a,
        (false, false) => nil + ((a - nil) + (b - nil)) % p,
    })
}

/// Disjoint union in which later components absorb earlier ones:
/// `g*h = h*g = h` for `g` in an earlier component than `h`.
pub fn chain_glue(components: &[FiniteSemigroup]) -> Result<FiniteSemigroup> {
    if components.is_empty() {
        return Err(Error::InvalidParameters(
            "chain needs at least one component".into(),
        ));
    }
    let mut owner = Vec::new();
    let mut offsets = Vec::with_capacity(components.len());
    for (i, c) in components.iter().enumerate() {
        offsets.push(owner.len());
        owner.extend(std::iter::repeat_n(i, c.order()));
    }
    check_size(owner.len())?;
    let n = owner.len();
    let mut flat = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let (ca, cb) = (owner[a], owner[b]);
            let v = match ca.cmp(&cb) {
                std::cmp::Ordering::Less => b,
                std::cmp::Ordering::Greater => a,
                std::cmp::Ordering::Equal => {
                    let off = offsets[ca];
                    let c = &components[ca];
                    off + c
                        .mul(ElementId::new(a - off), ElementId::new(b - off))
                        .index()
                }
            };
            flat.push(v as u8);
        }
    }
    FiniteSemigroup::from_flat(n, flat).map_err(|err| match err {
        Error::NotAssociative { a, b, c } => Error::NotAssociativeAfterGlue { a, b, c },
        other => other,
    })
}

/// `⟨x₁⟩ ∪ ⟨x₂⟩` with `⟨x₁⟩ = Z_{n1}` absorbed by the cyclic nilsemigroup
/// `⟨x₂⟩` of index `n2`, so `x₁*x₂ = x₂*x₁ = x₂`.
pub fn group_nil_chain(n1: usize, n2: usize) -> Result<FiniteSemigroup> {
    if n1 < 2 || n2 < 2 {
        return Err(Error::InvalidParameters(format!(
            "group-nil chain needs n1 >= 2 and n2 >= 2, got ({n1}, {n2})"
        )));
    }
    chain_glue(&[cyclic_group(n1)?, cyclic_nil(n2)?])
}

fn check_size(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        Err(Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

/// One archimedean component of an extremal semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum ComponentSpec {
    /// `monogenic(index, period)` with `index ≡ 1 (mod period)`.
    Monogenic { index: usize, period: usize },
    /// `ideal_extension_trivial(nil_index, group_order)`.
    #[serde(rename_all = "camelCase")]
    GroupByNil {
        nil_index: usize,
        group_order: usize,
    },
}

impl ComponentSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ComponentSpec::Monogenic { index, period } => {
                if index < 1 || period < 1 || index % period != 1 % period {
                    return Err(Error::InvalidParameters(format!(
                        "monogenic component needs index ≡ 1 (mod period), got ({index}, {period})"
                    )));
                }
            }
            ComponentSpec::GroupByNil {
                nil_index,
                group_order,
            } => {
                if nil_index < 2 || group_order < 2 {
                    return Err(Error::InvalidParameters(format!(
                        "group-by-nil component needs n >= 2 and p >= 2, got ({nil_index}, {group_order})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Non-idempotent elements contributed.
    pub fn non_idempotents(&self) -> usize {
        match *self {
            ComponentSpec::Monogenic { index, period } => index + period - 2,
            ComponentSpec::GroupByNil {
                nil_index,
                group_order,
            } => (nil_index - 1) + (group_order - 1),
        }
    }

    fn build(&self) -> Result<(FiniteSemigroup, Vec<ElementId>)> {
        match *self {
            ComponentSpec::Monogenic { index, period } => Ok((
                FiniteSemigroup::monogenic(index, period)?,
                vec![ElementId::new(0)],
            )),
            ComponentSpec::GroupByNil {
                nil_index,
                group_order,
            } => Ok((
                ideal_extension_trivial(nil_index, group_order)?,
                vec![ElementId::new(0), ElementId::new(nil_index)],
            )),
        }
    }
}

impl fmt::Display for ComponentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentSpec::Monogenic { index, period } => write!(f, "mono:{index}:{period}"),
            ComponentSpec::GroupByNil {
                nil_index,
                group_order,
            } => write!(f, "gbn:{nil_index}:{group_order}"),
        }
    }
}

/// Recipe for an extremal `(S, T)` pair: a chain of components, earlier
/// ones absorbed by later ones, optionally with an identity adjoined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtremalSpec {
    pub chain: Vec<ComponentSpec>,
    pub adjoin_identity: bool,
}

impl ExtremalSpec {
    pub fn new(chain: Vec<ComponentSpec>) -> Self {
        ExtremalSpec {
            chain,
            adjoin_identity: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.chain.is_empty() {
            return Err(Error::InvalidParameters(
                "extremal spec has no components".into(),
            ));
        }
        self.chain.iter().try_for_each(ComponentSpec::validate)
    }

    /// `|S ∖ E(S)|` of the generated semigroup.
    pub fn non_idempotents(&self) -> usize {
        self.chain.iter().map(ComponentSpec::non_idempotents).sum()
    }
}

/// `mono:I:P` and `gbn:N:P` joined by commas, with an optional `+1` suffix
/// component for the adjoined identity, e.g. `mono:3:2,gbn:2:3,+1`.
impl FromStr for ExtremalSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |part: &str| Error::InvalidParameters(format!("cannot parse component {part:?}"));
        let mut spec = ExtremalSpec::new(Vec::new());
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "+1" {
                spec.adjoin_identity = true;
                continue;
            }
            let fields: Vec<&str> = part.split(':').collect();
            let [kind, a, b] = fields[..] else {
                return Err(bad(part));
            };
            let a: usize = a.parse().map_err(|_| bad(part))?;
            let b: usize = b.parse().map_err(|_| bad(part))?;
            spec.chain.push(match kind {
                "mono" => ComponentSpec::Monogenic {
                    index: a,
                    period: b,
                },
                "gbn" => ComponentSpec::GroupByNil {
                    nil_index: a,
                    group_order: b,
                },
                _ => return Err(bad(part)),
            });
        }
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for ExtremalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.chain.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))?;
        if self.adjoin_identity {
            write!(f, ",+1")?;
        }
        Ok(())
    }
}

/// Builds `S` by gluing the components in order and `T` as the
/// concatenation of `x^[I(x)+P(x)-2]` over the generators.
pub fn extremal_pair(spec: &ExtremalSpec) -> Result<(FiniteSemigroup, Seq)> {
    spec.validate()?;
    let mut parts = Vec::with_capacity(spec.chain.len());
    let mut generators = Vec::new();
    let mut offset = 0;
    for component in &spec.chain {
        let (table, gens) = component.build()?;
        generators.extend(gens.iter().map(|g| ElementId::new(offset + g.index())));
        offset += table.order();
        parts.push(table);
    }
    let mut s = chain_glue(&parts)?;
    if spec.adjoin_identity {
        s = s.adjoin_identity()?;
    }
    let mut t = Seq::empty();
    for g in generators {
        let d = s.cyclic_data(g);
        for _ in 0..d.index + d.period - 2 {
            t.push(g);
        }
    }
    debug_assert_eq!(t.len(), s.non_idempotents().len());
    Ok((s, t))
}
