//! Library results compared against brute-force computations.

mod common;

use common::*;
use pbci::congruences::{all_congruences, check_congruence, quotient, relcong_lattice};
use pbci::embedding::{build_f, build_j, image_set, monoid_product, WordImageSet};
use pbci::filters::{filter_generated, prefilter_generated};
use pbci::search::{enumerate, Class, SearchSpec};
use pbci::structure::{group_part, group_to_algebra, integral_part, Group};
use pbci::{all_filters, all_prefilters, check_pseudo_bci, check_pseudo_bck, find_isomorphism, library, Subset};

#[test]
fn two_element_models_by_full_scan() {
    // every pair of 2x2 tables over {0, 1}, no pruning at all
    let mut models = Vec::new();
    for code in 0..1u32 << 8 {
        let ar: Vec<usize> = (0..4).map(|i| (code >> i & 1) as usize).collect();
        let sq: Vec<usize> = (0..4).map(|i| (code >> (4 + i) & 1) as usize).collect();
        if naive_is_pbci(2, 1, &ar, &sq) {
            models.push((ar, sq));
        }
    }
    assert_eq!(models.len(), 2);
    assert_eq!(enumerate(&SearchSpec::new(2, Class::Pbci)).unwrap().len(), 2);
}

#[test]
fn enumeration_matches_naive_scan_up_to_three() {
    for n in 1..=3 {
        let naive = naive_models(n);
        let emitted = enumerate(&SearchSpec::new(n, Class::Pbci)).unwrap();
        assert_eq!(naive.len(), emitted.len(), "n = {n}");
        for a in &naive {
            assert_eq!(emitted.iter().filter(|b| naive_isomorphic(a, b)).count(), 1);
        }
    }
}

#[test]
fn enumeration_is_isomorphism_free() {
    for (i, a) in SMALL.iter().enumerate() {
        for b in &SMALL[..i] {
            assert!(find_isomorphism(a, b).is_none());
        }
    }
}

#[test]
fn isomorphism_search_agrees_with_permutation_scan() {
    let three: Vec<_> = SMALL.iter().filter(|a| a.size() <= 3).collect();
    for a in &three {
        for b in &three {
            assert_eq!(find_isomorphism(a, b).is_some(), naive_isomorphic(a, b));
        }
    }
}

#[test]
fn group_prefilters_are_subgroups() {
    let groups = [Group::cyclic(2), Group::cyclic(4), Group::cyclic(6), Group::dihedral(3), Group::dihedral(4)];
    for g in &groups {
        let a = group_to_algebra(g);
        let mut subgroups = naive_subgroups(g);
        let mut normal = naive_normal_subgroups(g);
        pbci::subset::sort_family(&mut subgroups);
        pbci::subset::sort_family(&mut normal);
        assert_eq!(all_prefilters(&a).unwrap(), subgroups);
        assert_eq!(all_filters(&a).unwrap(), normal);
    }
    let d4 = Group::dihedral(4);
    assert_eq!(naive_subgroups(&d4).len(), 10);
    assert_eq!(naive_normal_subgroups(&d4).len(), 6);
}

#[test]
fn generated_prefilters_and_filters() {
    for a in small_with_ex6() {
        let filters = all_filters(&a).unwrap();
        let full = a.full_set();
        for s in subsets(a.size()).filter(|s| !s.is_empty()) {
            assert_eq!(prefilter_generated(&a, s).unwrap(), naive_prefilter_closure(&a, s));
            assert_eq!(filter_generated(&a, s).unwrap(), intersection_above(&filters, s, full));
        }
    }
}

/// Join of two subgroups as the closure of their union.
fn subgroup_join(g: &Group, s: Subset, t: Subset) -> Subset {
    let mut c = s.union(t);
    loop {
        let mut next = c;
        for x in c.iter() {
            for y in c.iter() {
                next.insert(g.mul(x, y));
            }
        }
        if next == c {
            return c;
        }
        c = next;
    }
}

#[test]
fn d4_subgroup_lattice_fails_the_arguesian_identity_by_direct_scan() {
    let g = Group::dihedral(4);
    let subs = naive_subgroups(&g);
    let j = |a: Subset, b: Subset| subgroup_join(&g, a, b);
    let m = |a: Subset, b: Subset| a.intersection(b);
    let mut violated = false;
    'scan: for &x1 in &subs {
        for &x2 in &subs {
            for &x3 in &subs {
                for &y1 in &subs {
                    for &y2 in &subs {
                        for &y3 in &subs {
                            let lhs = m(m(j(x1, y1), j(x2, y2)), j(x3, y3));
                            let z12 = m(j(x1, x2), j(y1, y2));
                            let z13 = m(j(x1, x3), j(y1, y3));
                            let z23 = m(j(x2, x3), j(y2, y3));
                            let z = m(z12, j(z13, z23));
                            let rhs = j(m(x1, j(x2, z)), m(y1, j(y2, z)));
                            if !lhs.is_subset(rhs) {
                                violated = true;
                                break 'scan;
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(violated);
    let a = group_to_algebra(&g);
    let l = pbci::FiniteLattice::from_closed_family(all_prefilters(&a).unwrap(), a.names()).unwrap();
    assert!(l.is_arguesian().unwrap().is_err());
}

#[test]
fn ex6_values() {
    let a = library::ex6();
    let i = |n: &str| a.index_of(n).unwrap();
    assert!(check_pseudo_bci(&a).passed);
    assert!(!check_pseudo_bck(&a).passed);
    assert_eq!(integral_part(&a), Subset::from_elements([i("a"), i("b"), i("1")]));
    assert_eq!(group_part(&a), Subset::from_elements([i("g"), i("1")]));
    assert_eq!(a.arrow(i("x"), i("y")), i("a"));
    assert_eq!(a.squig(i("x"), i("y")), i("b"));
    assert_eq!(a.arrow(i("g"), i("a")), i("y"));
    assert_eq!(a.squig(i("g"), i("a")), i("x"));
    let ia = a.subalgebra(integral_part(&a)).unwrap();
    let ga = a.subalgebra(group_part(&a)).unwrap();
    assert!(ia.arrows_coincide() && ga.arrows_coincide() && !a.arrows_coincide());
}

#[test]
fn word_image_products_by_table_evaluation() {
    let a = library::ex6();
    let g = a.index_of("g").unwrap();
    let jg = WordImageSet {
        set: image_set(&a, &[g]).unwrap(),
        rep: vec![g],
    };
    let direct: Subset = a.elements().filter(|&x| a.arrow(g, a.arrow(g, x)) == a.unit()).collect();
    assert_eq!(monoid_product(&a, &jg, &jg).unwrap().set, direct);

    // J(x) is the up-set of x for every letter, in every small algebra
    for a in small_with_ex6() {
        for x in a.elements() {
            let up: Subset = a.elements().filter(|&y| a.arrow(x, y) == a.unit()).collect();
            assert_eq!(image_set(&a, &[x]).unwrap(), up);
        }
    }
}

#[test]
fn word_images_of_groups_are_singletons() {
    for g in [Group::cyclic(3), Group::dihedral(3)] {
        let a = group_to_algebra(&g);
        let j = build_j(&a).unwrap();
        assert_eq!(j.size(), g.order());
        assert!(j.elements.iter().all(|w| w.set.len() == 1));
    }
}

#[test]
fn chain_order_filters_are_integral_and_ex6_is_not() {
    let f = build_f(&build_j(&library::chain2()).unwrap()).unwrap();
    assert!(f.structure.is_integral());
    let f = build_f(&build_j(&library::ex6()).unwrap()).unwrap();
    assert!(f.structure.is_semi_integral() && !f.structure.is_integral());
}

#[test]
fn congruences_by_compatibility_scan() {
    // every partition of a three-element carrier, kept when compatible
    for a in SMALL.iter().filter(|a| a.size() == 3) {
        let mut found = Vec::new();
        for ids in [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1], [0, 1, 2]] {
            let p = pbci::Partition::from_block_ids(ids.to_vec());
            let ok = a.elements().all(|x| {
                a.elements().all(|y| {
                    !p.same(x, y)
                        || a.elements().all(|z| {
                            p.same(a.arrow(x, z), a.arrow(y, z))
                                && p.same(a.arrow(z, x), a.arrow(z, y))
                                && p.same(a.squig(x, z), a.squig(y, z))
                                && p.same(a.squig(z, x), a.squig(z, y))
                        })
                })
            });
            if ok {
                assert!(check_congruence(a, &p).is_ok());
                found.push(p);
            }
        }
        let mut got = all_congruences(a);
        got.sort_by_key(|p| format!("{p:?}"));
        found.sort_by_key(|p| format!("{p:?}"));
        assert_eq!(got, found);
    }
}

#[test]
fn quotient_by_integral_kernel_is_the_group_part() {
    for a in small_with_ex6() {
        let f = integral_part(&a);
        if pbci::is_filter(&a, f).unwrap().is_err() {
            continue;
        }
        let theta = pbci::filters::theta_from_filter(&a, f).unwrap();
        let q = quotient(&a, &theta).unwrap();
        let g = a.subalgebra(group_part(&a)).unwrap();
        assert!(find_isomorphism(&q, &g).is_some());
    }
}

#[test]
fn pbck_relative_congruence_lattices_are_distributive() {
    for a in SMALL.iter().filter(|a| check_pseudo_bck(a).passed) {
        assert!(relcong_lattice(a).unwrap().is_distributive().is_ok());
    }
}

#[test]
fn size_six_search_reaches_the_example() {
    let spec = SearchSpec::new(6, Class::Pbci).with_predicate("g-not-filter");
    let found = enumerate(&spec).unwrap();
    let ex6 = library::ex6();
    assert!(found.iter().all(|a| pbci::is_filter(a, group_part(a)).unwrap().is_err()));
    assert_eq!(found.iter().filter(|a| find_isomorphism(a, &ex6).is_some()).count(), 1);
}
