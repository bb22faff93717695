use std::sync::OnceLock;

use idemfree::constants::{davenport, erdos_burgess, strong_erdos_burgess};
use idemfree::construct::{extremal_pair, ComponentSpec, ExtremalSpec};
use idemfree::enumerate::enumerate_up_to;
use idemfree::seqprod::{
    any_order_products, extend_closure, is_strongly_free, is_weakly_free, lambda,
    natural_order_products, pi,
};
use idemfree::structure::{archimedean_decomposition, extremal_structure_check, n_leq};
use idemfree::verify::{cmd_verify, CheckId, VerifyOptions};
use idemfree::{ElemSet, ElementId, FiniteSemigroup, Seq};
use proptest::prelude::*;
use proptest::sample::Index;

fn corpus() -> &'static [FiniteSemigroup] {
    static CORPUS: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    CORPUS.get_or_init(|| enumerate_up_to(4, false).unwrap())
}

fn commutative_corpus() -> &'static [FiniteSemigroup] {
    static CORPUS: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    CORPUS.get_or_init(|| enumerate_up_to(4, true).unwrap())
}

fn semigroup(pool: fn() -> &'static [FiniteSemigroup]) -> impl Strategy<Value = FiniteSemigroup> {
    any::<Index>().prop_map(move |i| i.get(pool()).clone())
}

fn with_seq(
    pool: fn() -> &'static [FiniteSemigroup],
    max_len: usize,
) -> impl Strategy<Value = (FiniteSemigroup, Seq)> {
    semigroup(pool).prop_flat_map(move |s| {
        let n = s.order();
        (Just(s), prop::collection::vec(0..n, 0..=max_len))
            .prop_map(|(s, terms)| (s, Seq::from_indices(&terms)))
    })
}

fn component() -> impl Strategy<Value = ComponentSpec> {
    prop_oneof![
        (1usize..=4, 0usize..=2).prop_map(|(period, k)| ComponentSpec::Monogenic {
            index: 1 + k * period,
            period
        }),
        (2usize..=4, 2usize..=4).prop_map(|(nil_index, group_order)| ComponentSpec::GroupByNil {
            nil_index,
            group_order
        }),
    ]
}

fn extremal_spec() -> impl Strategy<Value = ExtremalSpec> {
    (prop::collection::vec(component(), 1..=3), any::<bool>())
        .prop_filter("small enough to search", |(chain, _)| {
            chain
                .iter()
                .map(ComponentSpec::non_idempotents)
                .sum::<usize>()
                <= 8
        })
        .prop_map(|(chain, adjoin_identity)| ExtremalSpec {
            chain,
            adjoin_identity,
        })
}

proptest! {
    #[test]
    fn any_order_products_ignore_term_order((s, t) in with_seq(corpus, 6), seed in any::<u64>()) {
        let mut terms = t.terms().to_vec();
        let k = terms.len().max(1);
        terms.rotate_left(seed as usize % k);
        if terms.len() > 1 && seed % 2 == 0 {
            terms.swap(0, 1);
        }
        prop_assert_eq!(any_order_products(&s, &t).unwrap(), any_order_products(&s, &Seq::new(terms)).unwrap());
    }

    #[test]
    fn natural_order_products_are_a_subset((s, t) in with_seq(corpus, 6)) {
        let natural = natural_order_products(&s, &t);
        prop_assert!(natural.is_subset(any_order_products(&s, &t).unwrap()));
        if s.is_commutative() {
            prop_assert_eq!(natural, any_order_products(&s, &t).unwrap());
        }
        if let Ok(p) = pi(&s, &t) {
            prop_assert!(natural.contains(p));
        }
    }

    #[test]
    fn strongly_free_follows_from_weakly_free((s, t) in with_seq(corpus, 5)) {
        if is_weakly_free(&s, &t).unwrap() {
            prop_assert!(is_strongly_free(&s, &t));
        }
    }

    #[test]
    fn natural_closure_grows_strictly_while_free((s, t) in with_seq(corpus, 6)) {
        let idempotents = s.idempotents();
        let mut acc = ElemSet::EMPTY;
        for &x in t.terms() {
            let next = extend_closure(&s, acc, x);
            prop_assert!(acc.is_subset(next));
            if next.is_disjoint(idempotents) {
                prop_assert!(next.len() > acc.len());
            }
            acc = next;
        }
    }

    #[test]
    fn weakly_free_terms_add_new_products((s, t) in with_seq(commutative_corpus, 4)) {
        let alphabet = s.non_idempotents().to_vec();
        prop_assume!(!alphabet.is_empty());
        let t: Seq = t.terms().iter().map(|x| alphabet[x.index() % alphabet.len()]).collect();
        prop_assume!(!t.is_empty() && is_weakly_free(&s, &t).unwrap());
        for x in t.support() {
            let rest = t.without_one(x).unwrap();
            prop_assert!(lambda(&s, &rest, x).unwrap() >= 1);
        }
    }

    #[test]
    fn divisibility_preorder((s, a, b, c) in semigroup(commutative_corpus)
        .prop_flat_map(|s| { let n = s.order(); (Just(s), 0..n, 0..n, 0..n) }))
    {
        let (a, b, c) = (ElementId::new(a), ElementId::new(b), ElementId::new(c));
        prop_assert!(n_leq(&s, a, a).unwrap());
        if n_leq(&s, a, b).unwrap() && n_leq(&s, b, c).unwrap() {
            prop_assert!(n_leq(&s, a, c).unwrap());
        }
    }

    #[test]
    fn components_multiply_by_meet((s, a, b) in semigroup(commutative_corpus)
        .prop_flat_map(|s| { let n = s.order(); (Just(s), 0..n, 0..n) }))
    {
        let dec = archimedean_decomposition(&s).unwrap();
        let (a, b) = (ElementId::new(a), ElementId::new(b));
        let meet = dec.meet(dec.component(a), dec.component(b));
        prop_assert_eq!(meet, Some(dec.component(s.mul(a, b))));
    }

    #[test]
    fn generated_subsemigroup_is_a_closure((s, g, h) in semigroup(corpus)
        .prop_flat_map(|s| { let n = s.order(); (Just(s), 1u32..1 << n, 0u32..1 << n) }))
    {
        let set = |mask: u32| -> ElemSet {
            (0..s.order()).filter(|i| mask >> i & 1 == 1).map(ElementId::new).collect()
        };
        let (g, h) = (set(g), set(g | h));
        let closure = s.generated_subsemigroup(g).unwrap();
        prop_assert!(g.is_subset(closure));
        prop_assert!(s.is_closed(closure));
        prop_assert_eq!(s.generated_subsemigroup(closure).unwrap(), closure);
        prop_assert!(closure.is_subset(s.generated_subsemigroup(h).unwrap()));
    }

    #[test]
    fn monogenic_round_trips(index in 1usize..=20, period in 1usize..=20) {
        let s = FiniteSemigroup::monogenic(index, period).unwrap();
        let data = s.cyclic_data(ElementId::new(0));
        prop_assert_eq!((data.index, data.period), (index, period));
        prop_assert_eq!(data.order(), s.order());
        let e = s.unique_cycle_idempotent(ElementId::new(0));
        prop_assert_eq!(s.idempotents(), ElemSet::singleton(e));
    }

    #[test]
    fn witnesses_are_maximal(s in semigroup(corpus)) {
        let weak = erdos_burgess(&s);
        prop_assert!(is_weakly_free(&s, &weak.witness).unwrap());
        let strong = strong_erdos_burgess(&s);
        prop_assert!(is_strongly_free(&s, &strong.witness));
        for x in s.non_idempotents() {
            prop_assert!(!is_strongly_free(&s, &strong.witness.with(x)));
            prop_assert!(!is_weakly_free(&s, &weak.witness.with(x)).unwrap());
        }
        if s.is_commutative() {
            prop_assert!(davenport(&s).is_ok());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn extremal_pairs_are_extremal(spec in extremal_spec()) {
        let (s, t) = extremal_pair(&spec).unwrap();
        prop_assert!(is_weakly_free(&s, &t).unwrap());
        prop_assert_eq!(any_order_products(&s, &t).unwrap(), s.non_idempotents());
        let certificate = extremal_structure_check(&s, &t).unwrap();
        prop_assert!(certificate.verdict.is_pass());
        prop_assert!(certificate.main_form);
    }
}

#[test]
fn verify_log_independent_of_workers() {
    let options = |workers| VerifyOptions {
        max_order: 3,
        checks: vec![
            CheckId::StrongBound,
            CheckId::ExtremalEquivalence,
            CheckId::WeakVsStrong,
        ],
        workers,
        ..Default::default()
    };
    let logs: Vec<String> = [1, 2, 3, 8]
        .into_iter()
        .map(|w| cmd_verify(&options(w)).unwrap().to_json())
        .collect();
    assert!(logs.windows(2).all(|w| w[0] == w[1]));
}
