//! Sequences over a semigroup and the sets of products they reach.
//!
//! Two product sets matter. The *any-order* set `Π(T)` takes every nonempty
//! subsequence multiplied in every order; the *natural-order* set keeps the
//! order in which terms appear in `T`. A sequence is weakly free when `Π(T)`
//! avoids the idempotents and strongly free when the natural-order set does.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::semigroup::{ElementId, FiniteSemigroup};

/// Length cap for the general (noncommutative) sub-multiset dynamic program.
pub const DEFAULT_DP_CAP: usize = 24;

/// A finite ordered sequence of elements.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seq {
    terms: Vec<ElementId>,
}

impl Seq {
    pub fn new(terms: Vec<ElementId>) -> Self {
        Seq { terms }
    }

    pub fn empty() -> Self {
        Seq::default()
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Seq::new(indices.iter().map(|&i| ElementId::new(i)).collect())
    }

    /// `x^[k]`: the term `x` repeated `k` times.
    pub fn repeat(x: ElementId, k: usize) -> Self {
        Seq::new(vec![x; k])
    }

    pub fn terms(&self) -> &[ElementId] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, x: ElementId) {
        self.terms.push(x);
    }

    /// `T · x`.
    pub fn with(&self, x: ElementId) -> Seq {
        let mut terms = self.terms.clone();
        terms.push(x);
        Seq { terms }
    }

    /// `T · x^[-1]`: drops the last occurrence of `x`, if present.
    pub fn without_one(&self, x: ElementId) -> Option<Seq> {
        let pos = self.terms.iter().rposition(|&t| t == x)?;
        let mut terms = self.terms.clone();
        terms.remove(pos);
        Some(Seq { terms })
    }

    /// `v_x(T)`.
    pub fn multiplicity(&self, x: ElementId) -> usize {
        self.terms.iter().filter(|&&t| t == x).count()
    }

    /// `supp(T)`.
    pub fn support(&self) -> ElemSet {
        self.terms.iter().copied().collect()
    }

    /// Support paired with multiplicities, ascending by element.
    pub fn multiplicities(&self) -> Vec<(ElementId, usize)> {
        self.support()
            .iter()
            .map(|x| (x, self.multiplicity(x)))
            .collect()
    }

    /// The same multiset with terms sorted ascending.
    pub fn sorted(&self) -> Seq {
        let mut terms = self.terms.clone();
        terms.sort();
        Seq { terms }
    }

    /// Checks every term indexes an element of `s`.
    pub fn check_against(&self, s: &FiniteSemigroup) -> Result<()> {
        match self.terms.iter().find(|t| t.index() >= s.order()) {
            Some(t) => Err(Error::ElementOutOfRange {
                element: t.index(),
                order: s.order(),
            }),
            None => Ok(()),
        }
    }

    /// Parses the sequence text format: one line of space-separated indices.
    /// Lines starting with `#` are ignored; no content is the empty sequence.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.starts_with('#'))
            .skip_while(|(_, l)| l.is_empty());
        let Some((line, content)) = lines.next() else {
            return Ok(Seq::empty());
        };
        if let Some((extra, _)) = lines.find(|(_, l)| !l.is_empty()) {
            return Err(Error::Parse {
                line: extra,
                message: "a sequence occupies a single line".into(),
            });
        }
        content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .ok()
                    .filter(|&i| i < crate::semigroup::MAX_ORDER)
                    .map(ElementId::new)
                    .ok_or_else(|| Error::Parse {
                        line,
                        message: format!("{tok:?} is not an element index"),
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(Seq::new)
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", cells.join(" "))
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Seq[{self}]")
    }
}

impl FromStr for Seq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Seq::parse(s)
    }
}

impl FromIterator<ElementId> for Seq {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        Seq::new(iter.into_iter().collect())
    }
}

impl Serialize for Seq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter())
    }
}

/// Both product sets of one sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProductSets {
    pub any_order: ElemSet,
    pub natural_order: ElemSet,
}

/// `π(T)`: the left-to-right product of all terms.
pub fn pi(s: &FiniteSemigroup, t: &Seq) -> Result<ElementId> {
    let (&first, rest) = t.terms().split_first().ok_or(Error::EmptySequence)?;
    Ok(rest.iter().fold(first, |acc, &x| s.mul(acc, x)))
}

/// `Π(T)` with the default length cap.
pub fn any_order_products(s: &FiniteSemigroup, t: &Seq) -> Result<ElemSet> {
    any_order_products_capped(s, t, DEFAULT_DP_CAP)
}

/// `Π(T)`. Commutative tables use the incremental rule
/// `Π(T·x) = Π(T) ∪ {x} ∪ Π(T)*x`; all others run the sub-multiset DP,
/// which refuses sequences longer than `cap`.
pub fn any_order_products_capped(s: &FiniteSemigroup, t: &Seq, cap: usize) -> Result<ElemSet> {
    if s.is_commutative() {
        return Ok(incremental_closure(s, t));
    }
    if t.len() > cap {
        return Err(Error::SequenceTooLong { len: t.len(), cap });
    }
    Ok(submultiset_products(s, t))
}

/// Products over every ordering of every nonempty sub-multiset.
///
/// `reach[U]` is the set of products of all orderings of the full multiset
/// `U`; the last factor of any ordering is some `x ∈ U`, so
/// `reach[U] = ⋃_{x ∈ U} reach[U - x] * x` with `reach[{x}] = {x}`.
/// Sub-multisets are multiplicity vectors over `supp(T)` in mixed radix, so
/// every `U - x` has a smaller code than `U`.
pub(crate) fn submultiset_products(s: &FiniteSemigroup, t: &Seq) -> ElemSet {
    let mults = t.multiplicities();
    if mults.is_empty() {
        return ElemSet::EMPTY;
    }
    let mut strides = Vec::with_capacity(mults.len());
    let mut states = 1usize;
    for &(_, m) in &mults {
        strides.push(states);
        states *= m + 1;
    }
    let mut reach = vec![ElemSet::EMPTY; states];
    let mut digits = vec![0usize; mults.len()];
    let mut all = ElemSet::EMPTY;
    for code in 1..states {
        // increment the mixed-radix counter
        for (d, &(_, m)) in digits.iter_mut().zip(&mults) {
            if *d < m {
                *d += 1;
                break;
            }
            *d = 0;
        }
        let mut set = ElemSet::EMPTY;
        for (j, &d) in digits.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let x = mults[j].0;
            let prev = code - strides[j];
            if prev == 0 {
                set.insert(x);
            } else {
                set |= s.right_translate(reach[prev], x);
            }
        }
        reach[code] = set;
        all |= set;
    }
    all
}

/// `A_ℓ` of the closure `A_k = A_{k-1} ∪ {a_k} ∪ A_{k-1}*a_k`, `A_0 = ∅`.
fn incremental_closure(s: &FiniteSemigroup, t: &Seq) -> ElemSet {
    t.terms()
        .iter()
        .fold(ElemSet::EMPTY, |acc, &x| extend_closure(s, acc, x))
}

/// One step of the natural-order closure.
#[inline]
pub fn extend_closure(s: &FiniteSemigroup, acc: ElemSet, x: ElementId) -> ElemSet {
    let mut next = acc | s.right_translate(acc, x);
    next.insert(x);
    next
}

/// Products of nonempty subsequences taken in their natural order.
pub fn natural_order_products(s: &FiniteSemigroup, t: &Seq) -> ElemSet {
    incremental_closure(s, t)
}

pub fn product_sets(s: &FiniteSemigroup, t: &Seq) -> Result<ProductSets> {
    Ok(ProductSets {
        any_order: any_order_products(s, t)?,
        natural_order: natural_order_products(s, t),
    })
}

/// `Π(T) ∩ E(S) = ∅`. The empty sequence is free.
pub fn is_weakly_free(s: &FiniteSemigroup, t: &Seq) -> Result<bool> {
    is_weakly_free_capped(s, t, DEFAULT_DP_CAP)
}

pub fn is_weakly_free_capped(s: &FiniteSemigroup, t: &Seq, cap: usize) -> Result<bool> {
    Ok(any_order_products_capped(s, t, cap)?.is_disjoint(s.idempotents()))
}

/// No natural-order subsequence product is idempotent.
pub fn is_strongly_free(s: &FiniteSemigroup, t: &Seq) -> bool {
    natural_order_products(s, t).is_disjoint(s.idempotents())
}

/// `λ_T(x) = |Π(T·x) ∖ Π(T)|`.
pub fn lambda(s: &FiniteSemigroup, t: &Seq, x: ElementId) -> Result<usize> {
    let before = any_order_products(s, t)?;
    let after = any_order_products(s, &t.with(x))?;
    Ok((after - before).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    fn set(xs: &[usize]) -> ElemSet {
        xs.iter().map(|&x| e(x)).collect()
    }

    fn z(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(n, |a, b| (a + b) % n).unwrap()
    }

    fn left_zero() -> FiniteSemigroup {
        FiniteSemigroup::from_fn(2, |a, _| a).unwrap()
    }

    /// Every nonempty subsequence in every order.
    fn naive_any_order(s: &FiniteSemigroup, t: &Seq) -> ElemSet {
        let terms = t.terms();
        let mut out = ElemSet::EMPTY;
        for mask in 1u32..(1 << terms.len()) {
            let chosen: Vec<ElementId> = (0..terms.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| terms[i])
                .collect();
            for perm in chosen.iter().permutations(chosen.len()) {
                out.insert(perm[1..].iter().fold(*perm[0], |acc, &&x| s.mul(acc, x)));
            }
        }
        out
    }

    #[test]
    fn pi_examples() {
        let z3 = z(3);
        assert_eq!(pi(&z3, &Seq::from_indices(&[1])).unwrap(), e(1));
        assert_eq!(pi(&z3, &Seq::from_indices(&[1, 1, 1])).unwrap(), e(0));
        assert_eq!(pi(&z3, &Seq::empty()), Err(Error::EmptySequence));
    }

    #[test]
    fn any_order_examples() {
        let z3 = z(3);
        assert_eq!(
            any_order_products(&z3, &Seq::from_indices(&[1, 1])).unwrap(),
            set(&[1, 2])
        );
        assert_eq!(
            any_order_products(&z3, &Seq::from_indices(&[1, 1, 1])).unwrap(),
            set(&[0, 1, 2])
        );
        assert_eq!(
            any_order_products(&z3, &Seq::empty()).unwrap(),
            ElemSet::EMPTY
        );

        let m = FiniteSemigroup::monogenic(3, 2).unwrap();
        let t = Seq::from_indices(&[0, 0, 0]);
        let expected = naive_any_order(&m, &t);
        assert_eq!(expected, set(&[0, 1, 2]));
        assert_eq!(any_order_products(&m, &t).unwrap(), expected);
    }

    #[test]
    fn general_dp_matches_naive_on_noncommutative_tables() {
        // x*y = y (right-zero) and the 2×2 rectangular band
        let right_zero = FiniteSemigroup::from_fn(3, |_, b| b).unwrap();
        let band = FiniteSemigroup::from_fn(4, |a, b| (a & 2) | (b & 1)).unwrap();
        for s in [left_zero(), right_zero, band] {
            assert!(!s.is_commutative());
            let n = s.order();
            for len in 0..=4 {
                for t in (0..len).map(|_| 0..n).multi_cartesian_product() {
                    let t = Seq::from_indices(&t);
                    assert_eq!(
                        submultiset_products(&s, &t),
                        naive_any_order(&s, &t),
                        "{t:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn cap_applies_only_to_general_dp() {
        let long = Seq::from_indices(&[0; 30]);
        assert!(any_order_products(&z(3), &long).is_ok());
        assert_eq!(
            any_order_products(&left_zero(), &long),
            Err(Error::SequenceTooLong { len: 30, cap: 24 })
        );
    }

    #[test]
    fn natural_order_examples() {
        let lz = left_zero();
        let t = Seq::from_indices(&[0, 1]);
        // a*b = a is already present
        assert_eq!(natural_order_products(&lz, &t), set(&[0, 1]));
        assert_eq!(natural_order_products(&lz, &Seq::empty()), ElemSet::EMPTY);
    }

    #[test]
    fn freeness_examples() {
        let z3 = z(3);
        assert!(is_weakly_free(&z3, &Seq::from_indices(&[1, 1])).unwrap());
        assert!(!is_weakly_free(&z3, &Seq::from_indices(&[1, 1, 1])).unwrap());
        assert!(is_weakly_free(&z3, &Seq::empty()).unwrap());
        assert!(is_strongly_free(&z3, &Seq::empty()));
        assert!(!is_strongly_free(&z3, &Seq::from_indices(&[1, 0])));
    }

    #[test]
    fn lambda_examples() {
        let z3 = z(3);
        assert_eq!(lambda(&z3, &Seq::empty(), e(1)).unwrap(), 1);
        assert_eq!(lambda(&z3, &Seq::from_indices(&[1]), e(1)).unwrap(), 1);
    }

    #[test]
    fn seq_helpers_and_text() {
        let t = Seq::parse("# comment\n2 0 2 1\n").unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.multiplicity(e(2)), 2);
        assert_eq!(t.support(), set(&[0, 1, 2]));
        assert_eq!(t.without_one(e(2)).unwrap(), Seq::from_indices(&[2, 0, 1]));
        assert_eq!(t.without_one(e(5)), None);
        assert_eq!(t.to_string(), "2 0 2 1");
        assert_eq!(Seq::parse("").unwrap(), Seq::empty());
        assert_eq!(Seq::parse("\n").unwrap(), Seq::empty());
        assert!(Seq::parse("1 x").is_err());
        assert!(Seq::parse("1\n2").is_err());
        assert_eq!(serde_json::to_string(&t).unwrap(), "[2,0,2,1]");
        let s = z(2);
        assert_eq!(
            t.check_against(&s),
            Err(Error::ElementOutOfRange {
                element: 2,
                order: 2
            })
        );
    }
}
