//! Structure of commutative semigroups: the divisibility preorder `≤_N`, the
//! archimedean decomposition over the universal semilattice, kernel groups
//! and nil parts, and the certificate that characterises weakly free
//! sequences of the extremal length `|S ∖ E(S)|`.
//!
//! `a ≤_N b` holds when `a^m = b*c` for some `m ≥ 1` and some `c ∈ S`. No
//! identity is adjoined for `c`. On finite semigroups this agrees with the
//! `S¹` variant: `a^m = b` gives `a^(m+1) = b*a`.

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::semigroup::{ElementId, FiniteSemigroup};
use crate::seqprod::Seq;

/// `a ≤_N b`: some power of `a` lies in the principal ideal `b*S`.
///
/// Powers beyond `I(a)+P(a)-1` repeat earlier ones, so scanning one full
/// power cycle decides the relation.
pub fn n_leq(s: &FiniteSemigroup, a: ElementId, b: ElementId) -> Result<bool> {
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    Ok(n_leq_unchecked(s, a, b))
}

fn n_leq_unchecked(s: &FiniteSemigroup, a: ElementId, b: ElementId) -> bool {
    s.cyclic_data(a)
        .elements()
        .intersects(s.left_translate(b, s.all()))
}

/// Group-and-nil data of one archimedean component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentInfo {
    pub elements: ElemSet,
    pub idempotent: ElementId,
    pub kernel_group: ElemSet,
    pub nil_part: ElemSet,
}

/// Archimedean components of a commutative semigroup, ordered by least
/// element, with the induced partial order of the universal semilattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ArchDecomposition {
    pub components: Vec<ComponentInfo>,
    /// `component_of[x]` is the id of the component holding element `x`.
    pub component_of: Vec<usize>,
    /// `leq[i][j]`: component `i` lies below or at component `j`.
    pub leq: Vec<Vec<bool>>,
}

impl ArchDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, x: ElementId) -> usize {
        self.component_of[x.index()]
    }

    /// Greatest lower bound of two components, if the order has one.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len())
            .filter(|&k| self.leq[k][i] && self.leq[k][j])
            .collect();
        lower
            .iter()
            .copied()
            .find(|&k| lower.iter().all(|&l| self.leq[l][k]))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.leq[i][j] || self.leq[j][i]))
    }
}

pub fn archimedean_decomposition(s: &FiniteSemigroup) -> Result<ArchDecomposition> {
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let n = s.order();
    let ideals: Vec<ElemSet> = s.elements().map(|b| s.left_translate(b, s.all())).collect();
    let cycles: Vec<ElemSet> = s.elements().map(|a| s.cyclic_data(a).elements()).collect();
    let below = |a: usize, b: usize| cycles[a].intersects(ideals[b]);

    let mut component_of = vec![usize::MAX; n];
    let mut members: Vec<ElemSet> = Vec::new();
    for a in 0..n {
        if component_of[a] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut class = ElemSet::EMPTY;
        for (b, slot) in component_of.iter_mut().enumerate().skip(a) {
            if *slot == usize::MAX && below(a, b) && below(b, a) {
                *slot = id;
                class.insert(ElementId::new(b));
            }
        }
        members.push(class);
    }
    let reps: Vec<usize> = members.iter().map(|c| c.first().unwrap().index()).collect();
    let leq = reps
        .iter()
        .map(|&i| reps.iter().map(|&j| below(i, j)).collect())
        .collect();
    let components = members
        .into_iter()
        .map(|elements| component_info(s, elements))
        .collect::<Result<Vec<_>>>()?;
    Ok(ArchDecomposition {
        components,
        component_of,
        leq,
    })
}

fn component_info(s: &FiniteSemigroup, elements: ElemSet) -> Result<ComponentInfo> {
    let kernel_group = kernel_group(s, elements)?;
    let idempotent = (elements & s.idempotents()).first().unwrap();
    Ok(ComponentInfo {
        elements,
        idempotent,
        kernel_group,
        nil_part: elements - kernel_group,
    })
}

/// Chain order on components, and `g*h = g` whenever `g`'s component is
/// strictly below `h`'s.
pub fn is_chain_lower_absorbing(s: &FiniteSemigroup, dec: &ArchDecomposition) -> bool {
    if !dec.is_chain() {
        return false;
    }
    s.elements().all(|g| {
        s.elements().all(|h| {
            let (cg, ch) = (dec.component(g), dec.component(h));
            cg == ch || !dec.leq[cg][ch] || s.mul(g, h) == g
        })
    })
}

/// `e * A` for the unique idempotent `e` of the component `A`. Checked to be
/// a group with identity `e`.
pub fn kernel_group(s: &FiniteSemigroup, component: ElemSet) -> Result<ElemSet> {
    let idempotents = component & s.idempotents();
    if idempotents.len() != 1 {
        return Err(Error::NotArchimedean {
            idempotents: idempotents.len(),
        });
    }
    let e = idempotents.first().unwrap();
    let group = s.left_translate(e, component);
    let is_group = s.is_closed(group)
        && group.iter().all(|g| {
            s.mul(e, g) == g && s.mul(g, e) == g && group.iter().any(|h| s.mul(g, h) == e)
        });
    if !is_group {
        return Err(Error::NotArchimedean { idempotents: 1 });
    }
    Ok(group)
}

/// `a ↦ a*e` from the nil part of a component into its kernel group.
pub fn partial_hom(s: &FiniteSemigroup, component: ElemSet, a: ElementId) -> Result<ElementId> {
    let group = kernel_group(s, component)?;
    if !component.contains(a) || group.contains(a) {
        return Err(Error::NotInNilPart(a));
    }
    let e = (component & s.idempotents()).first().unwrap();
    Ok(s.mul(a, e))
}

/// Structural conditions of the extremal characterisation, in check order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Condition {
    /// `R = ⟨supp(T)⟩` is commutative.
    #[serde(rename = "a")]
    CommutativeSupport,
    /// `S ∖ R ⊆ E(S)`.
    #[serde(rename = "b")]
    OutsideIdempotent,
    /// `supp(T)` orders as `x_1 … x_k` with `x_i*x_j = x_j` for `i < j`.
    #[serde(rename = "c")]
    AbsorptionOrder,
    /// `R = ⋃ ⟨x_i⟩`.
    #[serde(rename = "d")]
    UnionOfCyclic,
    /// Non-idempotent parts `⟨x_i⟩°` pairwise disjoint.
    #[serde(rename = "e")]
    DisjointCores,
    /// `I(x_i) ≡ 1 (mod P(x_i))`.
    #[serde(rename = "f")]
    IndexPeriod,
    /// `v_{x_i}(T) = I(x_i) + P(x_i) - 2`.
    #[serde(rename = "g")]
    Multiplicity,
}

impl Condition {
    pub const ALL: [Condition; 7] = [
        Condition::CommutativeSupport,
        Condition::OutsideIdempotent,
        Condition::AbsorptionOrder,
        Condition::UnionOfCyclic,
        Condition::DisjointCores,
        Condition::IndexPeriod,
        Condition::Multiplicity,
    ];

    pub fn id(self) -> char {
        (b'a' + Condition::ALL.iter().position(|&c| c == self).unwrap() as u8) as char
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub condition: Condition,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorData {
    pub element: ElementId,
    pub index: usize,
    pub period: usize,
    pub multiplicity: usize,
}

/// Shape of one archimedean component of `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum ComponentKind {
    /// `⟨x⟩` for one support element with `I(x) ≡ 1 (mod P(x))`.
    #[serde(rename_all = "camelCase")]
    MonogenicOnly { generator: ElementId },
    /// Nontrivial cyclic group `⟨group⟩` extended by the nontrivial cyclic
    /// nilsemigroup `⟨nil⟩`, with `nil * e = e`.
    #[serde(rename_all = "camelCase")]
    GroupByNilExtension {
        nil_generator: ElementId,
        group_generator: ElementId,
    },
    /// Neither shape.
    Other,
}

/// Witness that `(S, T)` has, or lacks, the extremal structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtremalCertificate {
    pub verdict: Verdict,
    pub fail_reason: Option<Condition>,
    /// Conditions in check order, up to and including the first failure.
    pub evaluated: Vec<ConditionResult>,
    /// Absorption order when condition (c) holds, ascending order otherwise.
    pub generator_order: Vec<ElementId>,
    pub per_generator: Vec<GeneratorData>,
    /// One entry per archimedean component of `R`, when `R` is commutative.
    pub component_kinds: Vec<ComponentKind>,
    /// The characterisation through the archimedean components of `R`: chain
    /// semilattice with lower absorption, every component of a recognised
    /// kind, and the multiplicity rule.
    pub main_form: bool,
}

/// Checks the flat extremal conditions (a)–(g) against `(S, T)` and
/// classifies the archimedean components of `⟨supp(T)⟩`.
pub fn extremal_structure_check(s: &FiniteSemigroup, t: &Seq) -> Result<ExtremalCertificate> {
    t.check_against(s)?;
    let expected = s.non_idempotents().len();
    if t.len() != expected {
        return Err(Error::WrongLength {
            expected,
            actual: t.len(),
        });
    }
    let idempotents = s.idempotents();
    let support = t.support();
    let r = if support.is_empty() {
        ElemSet::EMPTY
    } else {
        s.generated_subsemigroup(support)?
    };
    let cyclic: Vec<_> = support.iter().map(|x| (x, s.cyclic_data(x))).collect();
    let mut per_generator: Vec<GeneratorData> = cyclic
        .iter()
        .map(|(x, d)| GeneratorData {
            element: *x,
            index: d.index,
            period: d.period,
            multiplicity: t.multiplicity(*x),
        })
        .collect();

    let commutative = s.commutes_on(r);
    let order = commutative.then(|| absorption_order(s, support)).flatten();
    if let Some(order) = &order {
        per_generator.sort_by_key(|g| order.iter().position(|&x| x == g.element));
    }
    let union: ElemSet = cyclic
        .iter()
        .fold(ElemSet::EMPTY, |acc, (_, d)| acc | d.elements());
    let disjoint = {
        let mut seen = ElemSet::EMPTY;
        cyclic.iter().all(|(_, d)| {
            let core = d.elements() - idempotents;
            let fresh = core.is_disjoint(seen);
            seen |= core;
            fresh
        })
    };
    let checks: [(Condition, &dyn Fn() -> bool); 7] = [
        (Condition::CommutativeSupport, &|| commutative),
        (Condition::OutsideIdempotent, &|| {
            (s.all() - r).is_subset(idempotents)
        }),
        (Condition::AbsorptionOrder, &|| order.is_some()),
        (Condition::UnionOfCyclic, &|| union == r),
        (Condition::DisjointCores, &|| disjoint),
        (Condition::IndexPeriod, &|| {
            cyclic
                .iter()
                .all(|(_, d)| d.index % d.period == 1 % d.period)
        }),
        (Condition::Multiplicity, &|| {
            multiplicities_match(&per_generator)
        }),
    ];
    let mut evaluated = Vec::new();
    let mut fail_reason = None;
    for (condition, check) in checks {
        let holds = check();
        evaluated.push(ConditionResult { condition, holds });
        if !holds {
            fail_reason = Some(condition);
            break;
        }
    }

    let (component_kinds, main_form) = if commutative {
        main_form(s, t, r, support)?
    } else {
        (Vec::new(), false)
    };
    Ok(ExtremalCertificate {
        verdict: Verdict::from_bool(fail_reason.is_none()),
        fail_reason,
        evaluated,
        generator_order: order.unwrap_or_else(|| support.to_vec()),
        per_generator,
        component_kinds,
        main_form,
    })
}

/// Weak freeness and the structural certificate agree.
pub fn extremal_equivalence(s: &FiniteSemigroup, t: &Seq) -> Result<bool> {
    let certificate = extremal_structure_check(s, t)?;
    let free = crate::seqprod::is_weakly_free(s, t)?;
    Ok(free == certificate.verdict.is_pass())
}

fn multiplicities_match(generators: &[GeneratorData]) -> bool {
    generators
        .iter()
        .all(|g| g.multiplicity + 2 == g.index + g.period)
}

/// Orders `support` so that `x_i * x_j = x_j` for all `i < j`.
///
/// The absorption relation must be a transitive tournament; sorting by
/// out-degree recovers its unique linear order.
fn absorption_order(s: &FiniteSemigroup, support: ElemSet) -> Option<Vec<ElementId>> {
    let xs = support.to_vec();
    let absorbs = |a: ElementId, b: ElementId| a != b && s.mul(a, b) == b;
    let mut order = xs.clone();
    order.sort_by_key(|&a| std::cmp::Reverse(xs.iter().filter(|&&b| absorbs(a, b)).count()));
    let linear = order.iter().enumerate().all(|(i, &a)| {
        order[i + 1..]
            .iter()
            .all(|&b| absorbs(a, b) && !absorbs(b, a))
    });
    linear.then_some(order)
}

/// Classifies the components of `R` and evaluates the component-wise form.
fn main_form(
    s: &FiniteSemigroup,
    t: &Seq,
    r: ElemSet,
    support: ElemSet,
) -> Result<(Vec<ComponentKind>, bool)> {
    let outside_ok = (s.all() - r).is_subset(s.idempotents());
    if r.is_empty() {
        return Ok((Vec::new(), outside_ok));
    }
    let (sub, map) = s.restrict(r)?;
    let dec = archimedean_decomposition(&sub)?;
    let kinds: Vec<ComponentKind> = dec
        .components
        .iter()
        .map(|c| {
            let elements: ElemSet = c.elements.iter().map(|x| map[x.index()]).collect();
            let kernel: ElemSet = c.kernel_group.iter().map(|x| map[x.index()]).collect();
            classify_component(s, elements, kernel, support)
        })
        .collect();
    let multiplicity_ok = support.iter().all(|x| {
        let d = s.cyclic_data(x);
        t.multiplicity(x) + 2 == d.index + d.period
    });
    let holds = outside_ok
        && is_chain_lower_absorbing(&sub, &dec)
        && kinds.iter().all(|k| *k != ComponentKind::Other)
        && multiplicity_ok;
    Ok((kinds, holds))
}

fn classify_component(
    s: &FiniteSemigroup,
    elements: ElemSet,
    kernel: ElemSet,
    support: ElemSet,
) -> ComponentKind {
    let gens = (elements & support).to_vec();
    match gens[..] {
        [x] => {
            let d = s.cyclic_data(x);
            if d.elements() == elements && d.index % d.period == 1 % d.period {
                ComponentKind::MonogenicOnly { generator: x }
            } else {
                ComponentKind::Other
            }
        }
        [u, v] => [(u, v), (v, u)]
            .into_iter()
            .find(|&(nil, group)| {
                let g = s.cyclic_data(group).elements();
                let e = (kernel & s.idempotents()).first();
                g == kernel
                    && g.len() >= 2
                    && !kernel.contains(nil)
                    && (s.cyclic_data(nil).elements() | g) == elements
                    && e.is_some_and(|e| s.mul(nil, e) == e)
            })
            .map_or(ComponentKind::Other, |(nil, group)| {
                ComponentKind::GroupByNilExtension {
                    nil_generator: nil,
                    group_generator: group,
                }
            }),
        _ => ComponentKind::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqprod::is_weakly_free;
    use itertools::Itertools;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    fn z(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(n, |a, b| (a + b) % n).unwrap()
    }

    /// Z_2 = {0, 1} absorbed by the nil {x = 2, 0 = 3}, x² = 0.
    fn example22() -> FiniteSemigroup {
        FiniteSemigroup::new(vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 2, 3],
            vec![2, 2, 3, 3],
            vec![3, 3, 3, 3],
        ])
        .unwrap()
    }

    /// Nil part {x = 0, x² = 1} (n = 3) and Z_2 = {e = 2, g = 3}, x³ = e.
    fn ideal_ext_3_2() -> FiniteSemigroup {
        FiniteSemigroup::from_fn(4, |a, b| match (a < 2, b < 2) {
            (true, true) => {
                let k = a + b + 2;
                if k <= 2 {
                    k - 1
                } else {
                    2
                }
            }
            (true, false) => b,
            (false, true) => a,
            (false, false) => 2 + ((a - 2) + (b - 2)) % 2,
        })
        .unwrap()
    }

    #[test]
    fn n_leq_examples() {
        let s = example22();
        for a in s.elements() {
            assert!(n_leq(&s, a, a).unwrap());
        }
        // x (=2) below the group generator, not conversely
        assert!(n_leq(&s, e(2), e(1)).unwrap());
        assert!(!n_leq(&s, e(1), e(2)).unwrap());
        let z5 = z(5);
        for (a, b) in z5.elements().cartesian_product(z5.elements()) {
            assert!(n_leq(&z5, a, b).unwrap());
        }
        let lz = FiniteSemigroup::from_fn(2, |a, _| a).unwrap();
        assert_eq!(n_leq(&lz, e(0), e(1)), Err(Error::NotCommutative));
    }

    #[test]
    fn decomposition_examples() {
        let dec = archimedean_decomposition(&z(4)).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.components[0].kernel_group, z(4).all());
        assert!(dec.components[0].nil_part.is_empty());

        let s = example22();
        let dec = archimedean_decomposition(&s).unwrap();
        assert_eq!(dec.len(), 2);
        let group = dec.component(e(0));
        let nil = dec.component(e(2));
        assert_eq!(
            dec.components[group].elements,
            ElemSet::from_iter([e(0), e(1)])
        );
        assert_eq!(
            dec.components[nil].elements,
            ElemSet::from_iter([e(2), e(3)])
        );
        assert!(dec.leq[nil][group] && !dec.leq[group][nil]);
        assert!(is_chain_lower_absorbing(&s, &dec));

        let s = ideal_ext_3_2();
        let dec = archimedean_decomposition(&s).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(
            dec.components[0].kernel_group,
            ElemSet::from_iter([e(2), e(3)])
        );
    }

    #[test]
    fn non_chain_semilattice() {
        // {a, b, 0} with a*b = 0: two incomparable components above 0
        let s = FiniteSemigroup::new(vec![vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]]).unwrap();
        let dec = archimedean_decomposition(&s).unwrap();
        assert_eq!(dec.len(), 3);
        assert!(!dec.is_chain());
        assert!(!is_chain_lower_absorbing(&s, &dec));
        assert_eq!(
            dec.meet(dec.component(e(0)), dec.component(e(1))),
            Some(dec.component(e(2)))
        );
    }

    #[test]
    fn kernel_and_partial_hom() {
        let nil = FiniteSemigroup::monogenic(4, 1).unwrap();
        assert_eq!(
            kernel_group(&nil, nil.all()).unwrap(),
            ElemSet::singleton(e(3))
        );
        assert_eq!(partial_hom(&nil, nil.all(), e(0)).unwrap(), e(3));
        assert_eq!(
            partial_hom(&nil, nil.all(), e(3)),
            Err(Error::NotInNilPart(e(3)))
        );

        let s = ideal_ext_3_2();
        for j in 0..2 {
            assert_eq!(partial_hom(&s, s.all(), e(j)).unwrap(), e(2));
        }
        assert_eq!(
            kernel_group(&example22(), example22().all()),
            Err(Error::NotArchimedean { idempotents: 2 })
        );
    }

    #[test]
    fn cyclic_group_is_extremal() {
        for n in 2..7 {
            let s = z(n);
            let t = Seq::repeat(e(1), n - 1);
            let cert = extremal_structure_check(&s, &t).unwrap();
            assert_eq!(cert.verdict, Verdict::Pass, "{cert:?}");
            assert!(cert.main_form);
            assert_eq!(cert.per_generator[0].multiplicity, n - 1);
            assert!(extremal_equivalence(&s, &t).unwrap());
        }
    }

    #[test]
    fn monogenic_two_two_fails() {
        let s = FiniteSemigroup::monogenic(2, 2).unwrap();
        // x = 0, x² = 1 (idempotent), x³ = 2; candidates over {x, x³}
        for t in [[0, 0], [0, 2], [2, 0], [2, 2]] {
            let t = Seq::from_indices(&t);
            let cert = extremal_structure_check(&s, &t).unwrap();
            assert_eq!(cert.verdict, Verdict::Fail);
            assert!(!is_weakly_free(&s, &t).unwrap());
            assert!(extremal_equivalence(&s, &t).unwrap());
        }
        let cert = extremal_structure_check(&s, &Seq::from_indices(&[0, 0])).unwrap();
        assert_eq!(cert.fail_reason, Some(Condition::IndexPeriod));
    }

    #[test]
    fn wrong_length_is_an_error() {
        assert_eq!(
            extremal_structure_check(&z(3), &Seq::from_indices(&[1])),
            Err(Error::WrongLength {
                expected: 2,
                actual: 1
            })
        );
    }

    #[test]
    fn example_pair_classifies_components() {
        let s = example22();
        let t = Seq::from_indices(&[1, 2]);
        let cert = extremal_structure_check(&s, &t).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass, "{cert:?}");
        assert_eq!(cert.generator_order, vec![e(1), e(2)]);
        assert!(cert.main_form);
        assert_eq!(cert.component_kinds.len(), 2);

        let s = ideal_ext_3_2();
        let t = Seq::from_indices(&[0, 0, 3]);
        let cert = extremal_structure_check(&s, &t).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass, "{cert:?}");
        assert_eq!(
            cert.component_kinds,
            vec![ComponentKind::GroupByNilExtension {
                nil_generator: e(0),
                group_generator: e(3)
            }]
        );
        assert!(cert.main_form);
    }

    #[test]
    fn noncommutative_support_fails_at_a() {
        // Z_2 × right-zero(2); non-idempotents 1 and 3 do not commute
        let s = FiniteSemigroup::from_fn(4, |a, b| ((a ^ b) & 1) | (b & 2)).unwrap();
        let cert = extremal_structure_check(&s, &Seq::from_indices(&[1, 3])).unwrap();
        assert_eq!(cert.fail_reason, Some(Condition::CommutativeSupport));
        assert_eq!(cert.evaluated.len(), 1);
        assert!(!cert.main_form);
    }

    #[test]
    fn condition_ids() {
        let ids: String = Condition::ALL.iter().map(|c| c.id()).collect();
        assert_eq!(ids, "abcdefg");
        let json = serde_json::to_string(&Condition::IndexPeriod).unwrap();
        assert_eq!(json, "\"f\"");
    }
}
