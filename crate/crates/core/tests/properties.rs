//! Property tests over the small models, EX6 and random relabellings.

mod common;

use std::sync::LazyLock;

use common::*;
use pbci::congruences::{kernel, relative_congruences, relcong_lattice};
use pbci::decomposition::{
    associativity_conditions, check_dot_star_laws, check_group_arrows_agree, check_group_part_laws, decompose,
    delta_identities, dot_equals_star, mixed_law_holds,
};
use pbci::embedding::{build_f, build_j, embed, image_set};
use pbci::filters::{filter_generated, is_ideal_closed, prefilter_generated, theta_from_filter};
use pbci::search::{enumerate, Class, SearchSpec};
use pbci::structure::{delta, delta_of, gamma, group_part, group_view, integral_part};
use pbci::{
    all_filters, all_prefilters, check_arithmetic_laws, check_pseudo_bci, check_pseudo_bck, derive_order,
    find_isomorphism, is_filter, is_isomorphism, is_prefilter, word_arrow, word_squig, Algebra, FiniteLattice,
    Subset,
};
use proptest::prelude::*;

static MODELS: LazyLock<Vec<Algebra>> = LazyLock::new(small_with_ex6);

fn model() -> impl Strategy<Value = &'static Algebra> {
    (0..MODELS.len()).prop_map(|i| &MODELS[i])
}

fn model_and_subset() -> impl Strategy<Value = (&'static Algebra, Subset)> {
    model().prop_flat_map(|a| (Just(a), (0..1u64 << a.size()).prop_map(Subset)))
}

fn model_and_perm() -> impl Strategy<Value = (&'static Algebra, Vec<usize>)> {
    model().prop_flat_map(|a| (Just(a), Just((0..a.size()).collect::<Vec<_>>()).prop_shuffle()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn verified_algebras_have_a_poset_with_maximal_unit(a in model()) {
        let order = derive_order(a).unwrap();
        let u = a.unit();
        for x in a.elements() {
            prop_assert!(order.leq(x, x));
            prop_assert!(!order.leq(u, x) || x == u);
            for y in a.elements() {
                prop_assert!(!(order.leq(x, y) && order.leq(y, x)) || x == y);
                for z in a.elements() {
                    prop_assert!(!(order.leq(x, y) && order.leq(y, z)) || order.leq(x, z));
                }
            }
        }
        prop_assert!(check_arithmetic_laws(a).passed);
        prop_assert!(check_pseudo_bci(&a.dagger()).passed);
        prop_assert_eq!(&a.dagger().dagger(), a);
        if check_pseudo_bck(a).passed {
            prop_assert!(a.elements().all(|x| order.leq(x, u)));
        }
    }

    #[test]
    fn isomorphism_search_is_reflexive_and_symmetric((a, perm) in model_and_perm()) {
        let b = a.permute(&perm);
        prop_assert!(find_isomorphism(a, a).is_some());
        let f = find_isomorphism(a, &b);
        let g = find_isomorphism(&b, a);
        prop_assert!(f.is_some() && g.is_some());
        prop_assert!(is_isomorphism(a, &b, &f.unwrap()));
        prop_assert_eq!(pbci::canonical_key(a), pbci::canonical_key(&b));
    }

    #[test]
    fn text_format_round_trips((a, perm) in model_and_perm()) {
        let b = a.permute(&perm);
        prop_assert_eq!(Algebra::parse(&b.to_text()).unwrap(), b);
    }

    #[test]
    fn word_arrows_agree_on_reaching_the_unit(
        a in model(),
        word in prop::collection::vec(0usize..64, 1..5),
        x in 0usize..64,
    ) {
        let word: Vec<usize> = word.into_iter().map(|w| w % a.size()).collect();
        let x = x % a.size();
        let u = a.unit();
        prop_assert_eq!(word_arrow(a, &word, x).unwrap() == u, word_squig(a, &word, x).unwrap() == u);
    }

    #[test]
    fn integral_and_group_parts(a in model()) {
        let i = integral_part(a);
        let g = group_part(a);
        prop_assert!(a.is_subuniverse(i) && a.is_subuniverse(g));
        prop_assert_eq!(i.intersection(g), Subset::singleton(a.unit()));
        for x in a.elements() {
            let d = delta_of(a, x);
            prop_assert!(g.contains(d) && a.leq(x, d));
            prop_assert_eq!(g.iter().filter(|&h| a.leq(x, h)).count(), 1);
        }
        let view = group_view(a).unwrap();
        for &p in &view.members {
            for &q in &view.members {
                prop_assert_eq!(a.arrow(p, q), view.mul(q, view.inv(p)));
                prop_assert_eq!(a.squig(p, q), view.mul(view.inv(p), q));
            }
        }
        prop_assert_eq!(gamma(a).unwrap().image, g);
        prop_assert_eq!(delta(a).unwrap().image, g);
    }

    #[test]
    fn filters_are_prefilters_and_closures_behave((a, s) in model_and_subset(), t in any::<u64>()) {
        if is_filter(a, s).unwrap().is_ok() {
            prop_assert!(is_prefilter(a, s).unwrap().is_ok());
        }
        prop_assert_eq!(is_filter(a, s).unwrap().is_ok(), is_ideal_closed(a, s));
        if s.is_empty() {
            return Ok(());
        }
        let larger = Subset(s.0 | (t & a.full_set().0));
        for close in [prefilter_generated, filter_generated] {
            let c = close(a, s).unwrap();
            prop_assert!(s.is_subset(c));
            prop_assert_eq!(close(a, c).unwrap(), c);
            prop_assert!(c.is_subset(close(a, larger).unwrap()));
        }
        prop_assert!(prefilter_generated(a, s).unwrap().is_subset(filter_generated(a, s).unwrap()));
    }

    #[test]
    fn filters_and_relative_congruences_correspond(a in model()) {
        let filters = all_filters(a).unwrap();
        let thetas: Vec<_> = filters.iter().map(|&f| theta_from_filter(a, f).unwrap()).collect();
        for (&f, theta) in filters.iter().zip(&thetas) {
            prop_assert_eq!(kernel(a, theta), f);
        }
        let rel = relative_congruences(a).unwrap();
        prop_assert_eq!(rel.len(), filters.len());
        for theta in &rel {
            let k = kernel(a, theta);
            prop_assert!(is_filter(a, k).unwrap().is_ok());
            prop_assert_eq!(&theta_from_filter(a, k).unwrap(), theta);
        }
        for (i, f) in filters.iter().enumerate() {
            for (j, g) in filters.iter().enumerate() {
                prop_assert_eq!(f.is_subset(*g), thetas[i].refines(&thetas[j]));
            }
        }
    }

    #[test]
    fn lattice_identities_imply_each_other(a in model()) {
        let families = [all_prefilters(a).unwrap(), all_filters(a).unwrap()];
        for family in families {
            let l = FiniteLattice::from_closed_family(family.clone(), a.names()).unwrap();
            let dist = l.is_distributive().is_ok();
            let arg = l.is_arguesian().unwrap().is_ok();
            let modular = l.is_modular().is_ok();
            prop_assert!(!dist || arg);
            prop_assert!(!arg || modular);
            for x in 0..l.size() {
                for y in 0..l.size() {
                    prop_assert_eq!(l.elements()[l.meet(x, y)], family[x].intersection(family[y]));
                }
            }
        }
        let r = relcong_lattice(a).unwrap();
        prop_assert!(r.is_arguesian().unwrap().is_ok());
    }

    #[test]
    fn embedding_is_an_injective_homomorphism(a in model()) {
        let e = embed(a).unwrap();
        prop_assert!(e.check.passed() && e.check.semi_integral);
        prop_assert_eq!(e.check.integral, check_pseudo_bck(a).passed);
        let r = &e.target.structure;
        prop_assert_eq!(e.map[a.unit()], r.unit);
        for x in a.elements() {
            for y in a.elements() {
                prop_assert!(x == y || e.map[x] != e.map[y]);
                prop_assert_eq!(e.map[a.arrow(x, y)], r.res_l(e.map[x], e.map[y]));
                prop_assert_eq!(e.map[a.squig(x, y)], r.res_r(e.map[x], e.map[y]));
                // a ↦ J(a) is antitone and injective
                let (jx, jy) = (image_set(a, &[x]).unwrap(), image_set(a, &[y]).unwrap());
                prop_assert_eq!(a.leq(x, y), jy.is_subset(jx));
            }
        }
        let j = build_j(a).unwrap();
        prop_assert!(j.size() <= 1 << a.size());
        prop_assert!(build_f(&j).unwrap().filters.len() < 1 << j.size());
    }

    #[test]
    fn decomposition_criteria_agree(a in model()) {
        prop_assert!(check_dot_star_laws(a).passed);
        prop_assert!(check_group_part_laws(a).passed);
        let v = associativity_conditions(a);
        prop_assert!(v.iter().all(|c| c.is_ok() == v[0].is_ok()));
        let r = decompose(a).unwrap();
        prop_assert!(r.triad_agrees && r.conditions_agree && r.product_isomorphic_to_dagger_product);
        let d = delta_identities(a).unwrap();
        prop_assert_eq!(d.group_part_is_filter, r.group_part_is_filter.holds);
        prop_assert_eq!(d.group_arrows_agree, check_group_arrows_agree(a).is_ok());
        let everything_group = group_part(a) == a.full_set();
        prop_assert_eq!(dot_equals_star(a), everything_group);
        prop_assert!(!mixed_law_holds(a) || everything_group);
    }

    #[test]
    fn axiom_check_matches_direct_evaluation(
        ar in prop::collection::vec(0usize..3, 9),
        sq in prop::collection::vec(0usize..3, 9),
    ) {
        let names = vec!["p".to_string(), "q".to_string(), "1".to_string()];
        let a = Algebra::new(names, 2, ar.clone(), sq.clone()).unwrap();
        prop_assert_eq!(check_pseudo_bci(&a).passed, naive_is_pbci(3, 2, &ar, &sq));
    }
}

#[test]
fn ideal_term_characterisation_up_to_five() {
    for n in 1..=5 {
        for a in enumerate(&SearchSpec::new(n, Class::Pbci)).unwrap() {
            for s in subsets(n) {
                assert_eq!(is_filter(&a, s).unwrap().is_ok(), is_ideal_closed(&a, s));
            }
        }
    }
}

#[test]
fn relative_congruence_lattices_up_to_five() {
    for a in enumerate(&SearchSpec::new(5, Class::Pbci)).unwrap() {
        let l = relcong_lattice(&a).unwrap();
        assert!(l.is_arguesian().unwrap().is_ok());
        if check_pseudo_bck(&a).passed {
            assert!(l.is_distributive().is_ok());
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    for class in [Class::Pbci, Class::Pbck] {
        let spec = SearchSpec::new(4, class);
        assert_eq!(enumerate(&spec).unwrap(), enumerate(&spec).unwrap());
    }
}
