//! Shared fixtures and brute-force oracles for the integration suites.
#![allow(dead_code)]

use std::sync::LazyLock;

use itertools::Itertools;
use pbci::search::{enumerate, Class, SearchSpec};
use pbci::structure::{direct_product, group_to_algebra, union_construction, Group};
use pbci::{library, Algebra, Subset};

/// Every pseudo-BCI-algebra of size 1 to 4, up to isomorphism.
pub static SMALL: LazyLock<Vec<Algebra>> = LazyLock::new(|| {
    (1..=4)
        .flat_map(|n| enumerate(&SearchSpec::new(n, Class::Pbci)).unwrap())
        .collect()
});

pub fn small_with_ex6() -> Vec<Algebra> {
    let mut v = SMALL.clone();
    v.push(library::ex6());
    v
}

/// Products and unions built from small pieces.
pub fn constructions() -> Vec<Algebra> {
    let z2 = group_to_algebra(&Group::cyclic(2));
    let z3 = group_to_algebra(&Group::cyclic(3));
    let c2 = library::chain2();
    let ex6 = library::ex6();
    vec![
        direct_product(&c2, &z2).unwrap(),
        direct_product(&c2, &z3).unwrap(),
        direct_product(&c2, &c2).unwrap(),
        direct_product(&ex6, &z2).unwrap(),
        union_construction(&c2, &Group::cyclic(3), true).unwrap(),
        union_construction(&c2, &Group::cyclic(2), true).unwrap(),
    ]
}

pub fn subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1u64 << n).map(Subset)
}

/// Both axioms, both unit laws and antisymmetry, evaluated straight from
/// the tables.
pub fn naive_is_pbci(n: usize, u: usize, ar: &[usize], sq: &[usize]) -> bool {
    let a = |x: usize, y: usize| ar[x * n + y];
    let s = |x: usize, y: usize| sq[x * n + y];
    for x in 0..n {
        if a(u, x) != x || s(u, x) != x {
            return false;
        }
        for y in 0..n {
            if x != y && a(x, y) == u && a(y, x) == u {
                return false;
            }
            for z in 0..n {
                if s(a(x, y), s(a(y, z), a(x, z))) != u || a(s(x, y), a(s(y, z), s(x, z))) != u {
                    return false;
                }
            }
        }
    }
    true
}

/// Unit-preserving bijection test by trying every permutation.
pub fn naive_isomorphic(a: &Algebra, b: &Algebra) -> bool {
    let n = a.size();
    if n != b.size() {
        return false;
    }
    (0..n).permutations(n).any(|f| {
        f[a.unit()] == b.unit()
            && a.elements().all(|x| {
                a.elements()
                    .all(|y| f[a.arrow(x, y)] == b.arrow(f[x], f[y]) && f[a.squig(x, y)] == b.squig(f[x], f[y]))
            })
    })
}

/// Pseudo-BCI-algebras of size `n` with the unit last, by scanning every
/// pair of tables; squig tables are only paired with arrow tables that have
/// the same entries equal to the unit.
pub fn naive_models(n: usize) -> Vec<Algebra> {
    let u = n - 1;
    let cells = n * n;
    let tables: Vec<Vec<usize>> = (0..cells)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .filter(|t| (0..n).all(|x| t[u * n + x] == x && t[x * n + x] == u))
        .collect();
    let ones = |t: &[usize]| t.iter().map(|&v| v == u).collect::<Vec<_>>();
    let mut found: Vec<Algebra> = Vec::new();
    let names: Vec<String> = (0..n).map(|i| if i == u { "1".into() } else { format!("e{i}") }).collect();
    for ar in &tables {
        for sq in tables.iter().filter(|sq| ones(sq) == ones(ar)) {
            if naive_is_pbci(n, u, ar, sq) {
                let a = Algebra::new(names.clone(), u, ar.clone(), sq.clone()).unwrap();
                if !found.iter().any(|b| naive_isomorphic(b, &a)) {
                    found.push(a);
                }
            }
        }
    }
    found
}

/// Least subset containing `s` closed under the prefilter rules.
pub fn naive_prefilter_closure(a: &Algebra, s: Subset) -> Subset {
    let mut c = s.with(a.unit());
    loop {
        let mut next = c;
        for x in c.iter() {
            next.insert(a.arrow(x, a.unit()));
            for y in a.elements() {
                if c.contains(a.arrow(x, y)) {
                    next.insert(y);
                }
            }
        }
        if next == c {
            return c;
        }
        c = next;
    }
}

/// Intersection of all members of `family` containing `s`.
pub fn intersection_above(family: &[Subset], s: Subset, full: Subset) -> Subset {
    family
        .iter()
        .filter(|f| s.is_subset(**f))
        .fold(full, |acc, f| acc.intersection(*f))
}

/// Subgroups by testing every subset for closure under products.
pub fn naive_subgroups(g: &Group) -> Vec<Subset> {
    let n = g.order();
    subsets(n)
        .filter(|s| {
            s.contains(g.unit()) && s.iter().all(|x| s.iter().all(|y| s.contains(g.mul(x, g.inv(y)))))
        })
        .collect()
}

pub fn naive_normal_subgroups(g: &Group) -> Vec<Subset> {
    let n = g.order();
    naive_subgroups(g)
        .into_iter()
        .filter(|s| s.iter().all(|h| (0..n).all(|x| s.contains(g.mul(g.mul(x, h), g.inv(x))))))
        .collect()
}
