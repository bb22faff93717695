//! Exhaustive computation of the Erdős–Burgess constants `I(S)`, `SI(S)` and
//! the Davenport constant `D(S)`.
//!
//! Each constant is one more than the length of the longest sequence with a
//! defining property that is antitone under appending a term. The search is a
//! depth-first extension that prunes the first time the property fails. The
//! first level fans out across the rayon pool, one subtree per first term,
//! and subtree results merge by (length desc, lexicographic asc). Reports do
//! not depend on the number of workers.

use rayon::prelude::*;
use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::semigroup::{ElementId, FiniteSemigroup};
use crate::seqprod::{extend_closure, submultiset_products, Seq};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConstantKind {
    ErdosBurgess,
    StrongErdosBurgess,
    Davenport,
}

impl ConstantKind {
    pub fn symbol(self) -> &'static str {
        match self {
            ConstantKind::ErdosBurgess => "I",
            ConstantKind::StrongErdosBurgess => "SI",
            ConstantKind::Davenport => "D",
        }
    }
}

/// Result of one exhaustive search.
///
/// `witness` is the lexicographically least sequence of length `value - 1`
/// with the defining property; `nodes_explored` counts candidate extensions
/// tested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConstantReport {
    pub kind: ConstantKind,
    pub value: usize,
    pub witness: Seq,
    pub nodes_explored: u64,
}

/// `|S ∖ E(S)| + 1`: no sequence this long is strongly free.
pub fn strong_free_bound(s: &FiniteSemigroup) -> usize {
    s.non_idempotents().len() + 1
}

/// `I(S)`: one more than the longest weakly free sequence.
///
/// Weak freeness depends only on the multiset, so only nondecreasing
/// sequences over `S ∖ E(S)` are visited.
pub fn erdos_burgess(s: &FiniteSemigroup) -> ConstantReport {
    let alphabet = s.non_idempotents().to_vec();
    let idempotents = s.idempotents();
    let (witness, nodes) = if s.is_commutative() {
        longest(
            s,
            &alphabet,
            Shape::Multiset,
            CommutativeWeak {
                products: ElemSet::EMPTY,
                idempotents,
            },
        )
    } else {
        longest(
            s,
            &alphabet,
            Shape::Multiset,
            GeneralWeak {
                terms: Seq::empty(),
                idempotents,
            },
        )
    };
    report(ConstantKind::ErdosBurgess, witness, nodes)
}

/// `SI(S)`: one more than the longest strongly free word over `S ∖ E(S)`.
pub fn strong_erdos_burgess(s: &FiniteSemigroup) -> ConstantReport {
    let alphabet = s.non_idempotents().to_vec();
    let root = Strong {
        reached: ElemSet::EMPTY,
        idempotents: s.idempotents(),
    };
    let (witness, nodes) = longest(s, &alphabet, Shape::Word, root);
    let report = report(ConstantKind::StrongErdosBurgess, witness, nodes);
    debug_assert!(report.value <= strong_free_bound(s));
    report
}

/// `D(S)` for commutative `S`: one more than the longest sequence with no
/// proper subsequence sharing its product.
///
/// The empty subsequence takes part only when `S` has an identity, whose
/// value it then takes.
pub fn davenport(s: &FiniteSemigroup) -> Result<ConstantReport> {
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let alphabet: Vec<ElementId> = s.elements().collect();
    let root = Irreducible {
        identity: s.identity_element(),
        ..Default::default()
    };
    let (witness, nodes) = longest(s, &alphabet, Shape::Multiset, root);
    Ok(report(ConstantKind::Davenport, witness, nodes))
}

fn report(kind: ConstantKind, witness: Vec<ElementId>, nodes_explored: u64) -> ConstantReport {
    ConstantReport {
        kind,
        value: witness.len() + 1,
        witness: Seq::new(witness),
        nodes_explored,
    }
}

/// Search state for a property that, once lost, stays lost.
trait Extend: Clone + Send + Sync {
    /// The state after appending `x`, or `None` when the property fails.
    fn extend(&self, s: &FiniteSemigroup, x: ElementId) -> Option<Self>;
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    /// Nondecreasing sequences only.
    Multiset,
    /// Every word.
    Word,
}

/// Longest sequence accepted by the state machine, and the node count.
fn longest<S: Extend>(
    s: &FiniteSemigroup,
    alphabet: &[ElementId],
    shape: Shape,
    root: S,
) -> (Vec<ElementId>, u64) {
    // Every searched property fails by length |S| + 1 for finite S; the cap
    // only guards against a broken state machine.
    let depth_cap = s.order() + 1;
    alphabet
        .par_iter()
        .enumerate()
        .map(|(j, &first)| {
            let mut best = Vec::new();
            let mut nodes = 1;
            if let Some(state) = root.extend(s, first) {
                let mut prefix = vec![first];
                best = prefix.clone();
                let start = if shape == Shape::Multiset { j } else { 0 };
                dfs(
                    s,
                    alphabet,
                    shape,
                    &state,
                    start,
                    &mut prefix,
                    &mut best,
                    &mut nodes,
                    depth_cap,
                );
            }
            (best, nodes)
        })
        .reduce(
            || (Vec::new(), 0),
            |(a, na), (b, nb)| (better(a, b), na + nb),
        )
}

fn better(a: Vec<ElementId>, b: Vec<ElementId>) -> Vec<ElementId> {
    match a.len().cmp(&b.len()) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => a.min(b),
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs<S: Extend>(
    s: &FiniteSemigroup,
    alphabet: &[ElementId],
    shape: Shape,
    state: &S,
    start: usize,
    prefix: &mut Vec<ElementId>,
    best: &mut Vec<ElementId>,
    nodes: &mut u64,
    depth_cap: usize,
) {
    if prefix.len() >= depth_cap {
        return;
    }
    for j in start..alphabet.len() {
        let x = alphabet[j];
        *nodes += 1;
        let Some(next) = state.extend(s, x) else {
            continue;
        };
        prefix.push(x);
        // pre-order visits in lexicographic order, so the first longest wins
        if prefix.len() > best.len() {
            best.clone_from(prefix);
        }
        let child_start = if shape == Shape::Multiset { j } else { 0 };
        dfs(
            s,
            alphabet,
            shape,
            &next,
            child_start,
            prefix,
            best,
            nodes,
            depth_cap,
        );
        prefix.pop();
    }
}

/// `Π(T)` maintained incrementally; valid only for commutative tables.
#[derive(Clone)]
struct CommutativeWeak {
    products: ElemSet,
    idempotents: ElemSet,
}

impl Extend for CommutativeWeak {
    fn extend(&self, s: &FiniteSemigroup, x: ElementId) -> Option<Self> {
        let products = extend_closure(s, self.products, x);
        products
            .is_disjoint(self.idempotents)
            .then_some(CommutativeWeak {
                products,
                idempotents: self.idempotents,
            })
    }
}

/// Recomputes `Π(T)` with the sub-multiset DP at every node.
#[derive(Clone)]
struct GeneralWeak {
    terms: Seq,
    idempotents: ElemSet,
}

impl Extend for GeneralWeak {
    fn extend(&self, s: &FiniteSemigroup, x: ElementId) -> Option<Self> {
        let terms = self.terms.with(x);
        submultiset_products(s, &terms)
            .is_disjoint(self.idempotents)
            .then_some(GeneralWeak {
                terms,
                idempotents: self.idempotents,
            })
    }
}

/// The natural-order closure `A_k`.
#[derive(Clone)]
struct Strong {
    reached: ElemSet,
    idempotents: ElemSet,
}

impl Extend for Strong {
    fn extend(&self, s: &FiniteSemigroup, x: ElementId) -> Option<Self> {
        let reached = extend_closure(s, self.reached, x);
        reached.is_disjoint(self.idempotents).then_some(Strong {
            reached,
            idempotents: self.idempotents,
        })
    }
}

/// Tracks, for commutative `S`, the product `π(T)`, the set `Π(T)` of all
/// nonempty sub-multiset products, and the set `Q(T)` of nonempty *proper*
/// sub-multiset products. Appending `y` gives
/// `Q(T·y) = Π(T) ∪ Q(T)*y`, plus `{y}` when `T` is nonempty, plus the
/// identity as the empty product.
#[derive(Clone, Default)]
struct Irreducible {
    identity: Option<ElementId>,
    total: Option<ElementId>,
    all: ElemSet,
    proper: ElemSet,
}

impl Extend for Irreducible {
    fn extend(&self, s: &FiniteSemigroup, y: ElementId) -> Option<Self> {
        let total = match self.total {
            None => y,
            Some(p) => s.mul(p, y),
        };
        let mut proper = self.all | s.right_translate(self.proper, y);
        if self.total.is_some() {
            proper.insert(y);
        }
        if let Some(e) = self.identity {
            proper.insert(e);
        }
        if proper.contains(total) {
            return None;
        }
        Some(Irreducible {
            identity: self.identity,
            total: Some(total),
            all: extend_closure(s, self.all, y),
            proper,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqprod::{is_strongly_free, is_weakly_free, pi};
    use itertools::Itertools;

    fn z(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(n, |a, b| (a + b) % n).unwrap()
    }

    /// Z_{n1} on 0..n1 absorbed by the nil ⟨x⟩ of index n2
    /// (x^k at n1 + k - 1), with group elements acting as identities on it.
    fn group_then_nil(n1: usize, n2: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(n1 + n2, |a, b| match (a < n1, b < n1) {
            (true, true) => (a + b) % n1,
            (true, false) => b,
            (false, true) => a,
            (false, false) => n1 + ((a - n1 + 1) + (b - n1 + 1)).min(n2) - 1,
        })
        .unwrap()
    }

    /// Longest length with the property over every word up to `max_len`.
    fn brute_force(
        _s: &FiniteSemigroup,
        alphabet: &[usize],
        max_len: usize,
        ok: impl Fn(&Seq) -> bool,
    ) -> usize {
        let mut best = 0;
        for len in 1..=max_len {
            let found = (0..len)
                .map(|_| alphabet.iter().copied())
                .multi_cartesian_product()
                .any(|w| ok(&Seq::from_indices(&w)));
            if found {
                best = len;
            }
        }
        best + 1
    }

    /// No proper subsequence (by position) shares the total product; the
    /// empty one counts as the identity when there is one.
    fn irreducible(s: &FiniteSemigroup, t: &Seq) -> bool {
        let n = t.len();
        let total = pi(s, t).unwrap();
        if s.identity_element() == Some(total) {
            return false;
        }
        (1u32..(1 << n) - 1).all(|mask| {
            let sub: Seq = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| t.terms()[i])
                .collect();
            pi(s, &sub).unwrap() != total
        })
    }

    #[test]
    fn strong_free_bound_examples() {
        assert_eq!(strong_free_bound(&z(5)), 5);
        assert_eq!(strong_free_bound(&group_then_nil(2, 2)), 3);
        assert_eq!(strong_free_bound(&z(1)), 1);
    }

    #[test]
    fn cyclic_groups_match_brute_force() {
        for n in 1..=6 {
            let s = z(n);
            let alpha: Vec<usize> = (0..n).collect();
            let weak = brute_force(&s, &alpha, n, |t| is_weakly_free(&s, t).unwrap());
            let strong = brute_force(&s, &alpha, n, |t| is_strongly_free(&s, t));
            let dav = brute_force(&s, &alpha, n, |t| irreducible(&s, t));
            assert_eq!(weak, n);
            assert_eq!(dav, n);
            assert_eq!(erdos_burgess(&s).value, weak);
            assert_eq!(strong_erdos_burgess(&s).value, strong);
            assert_eq!(davenport(&s).unwrap().value, dav);
        }
        for n in 7..=8 {
            assert_eq!(erdos_burgess(&z(n)).value, n);
            assert_eq!(davenport(&z(n)).unwrap().value, n);
        }
    }

    #[test]
    fn monogenic_two_two() {
        let s = FiniteSemigroup::monogenic(2, 2).unwrap();
        let r = erdos_burgess(&s);
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.len(), 1);
    }

    #[test]
    fn example_constants() {
        let s = group_then_nil(2, 2);
        assert_eq!(erdos_burgess(&s).value, 3);
        assert_eq!(davenport(&s).unwrap().value, 3);
        let alpha: Vec<usize> = (0..4).collect();
        assert_eq!(brute_force(&s, &alpha, 4, |t| irreducible(&s, t)), 3);
        let s = group_then_nil(3, 2);
        assert_eq!(erdos_burgess(&s).value, 4);
        assert_eq!(davenport(&s).unwrap().value, 3);
        let alpha: Vec<usize> = (0..5).collect();
        assert_eq!(brute_force(&s, &alpha, 4, |t| irreducible(&s, t)), 3);
    }

    #[test]
    fn left_zero_has_no_non_idempotents() {
        let lz = FiniteSemigroup::from_fn(2, |a, _| a).unwrap();
        assert_eq!(strong_erdos_burgess(&lz).value, 1);
        assert_eq!(erdos_burgess(&lz).value, 1);
        assert_eq!(erdos_burgess(&lz).nodes_explored, 0);
        assert_eq!(davenport(&lz), Err(Error::NotCommutative));
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // Z_5: longest zero-sum free multisets have length 4 and are g^[4]
        // for a generator g; the least is 1 1 1 1.
        let r = erdos_burgess(&z(5));
        assert_eq!(r.witness, Seq::from_indices(&[1, 1, 1, 1]));
        let r = strong_erdos_burgess(&z(5));
        assert_eq!(r.witness, Seq::from_indices(&[1, 1, 1, 1]));
    }

    #[test]
    fn noncommutative_weak_search_matches_brute_force() {
        let band = FiniteSemigroup::from_fn(4, |a, b| (a & 2) | (b & 1)).unwrap();
        let s = band.adjoin_zero().unwrap();
        // a noncommutative table with non-idempotents: Z_2 × right-zero(2)
        let t = FiniteSemigroup::from_fn(4, |a, b| ((a ^ b) & 1) | (b & 2)).unwrap();
        for s in [s, t] {
            let alpha: Vec<usize> = s.non_idempotents().iter().map(|x| x.index()).collect();
            let n = s.order();
            let weak = brute_force(&s, &alpha, n, |t| is_weakly_free(&s, t).unwrap());
            let strong = brute_force(&s, &alpha, n, |t| is_strongly_free(&s, t));
            assert_eq!(erdos_burgess(&s).value, weak);
            assert_eq!(strong_erdos_burgess(&s).value, strong);
        }
    }

    #[test]
    fn report_json_shape() {
        let r = erdos_burgess(&z(3));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["kind"], "ErdosBurgess");
        assert_eq!(json["value"], 3);
        assert_eq!(json["witness"], serde_json::json!([1, 1]));
        assert!(json["nodesExplored"].as_u64().unwrap() > 0);
    }
}
