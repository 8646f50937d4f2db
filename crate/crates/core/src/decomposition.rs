//! The operations `x·y = (x→1)⇝y` and `x⋆y = (y⇝1)→x`, the associativity
//! conditions, and decomposition into integral part times group part.

use serde::Serialize;

use crate::algebra::{resolver, Algebra};
use crate::error::Result;
use crate::filters::is_filter;
use crate::iso::{find_isomorphism, is_isomorphism};
use crate::library;
use crate::report::{run_laws, Domain, Law, Verdict, VerificationReport, Violation};
use crate::structure::{direct_product, group_part, integral_part};
use crate::term::{check_term_identity, Term};

/// `x·y = (x→1)⇝y`
pub fn dot(a: &Algebra, x: usize, y: usize) -> usize {
    a.squig(a.arrow(x, a.unit()), y)
}

/// `x⋆y = (y⇝1)→x`
pub fn star(a: &Algebra, x: usize, y: usize) -> usize {
    a.arrow(a.squig(y, a.unit()), x)
}

fn inv(a: &Algebra, g: usize) -> usize {
    a.arrow(g, a.unit())
}

fn eq(a: &Algebra, l: usize, r: usize) -> Option<String> {
    (l != r).then(|| format!("{} ≠ {}", a.name(l), a.name(r)))
}

fn le(a: &Algebra, l: usize, r: usize) -> Option<String> {
    (!a.leq(l, r)).then(|| format!("{} ≰ {}", a.name(l), a.name(r)))
}

use Domain::{All, GroupPart as G, IntegralPart as I};

fn dot_star_laws() -> Vec<Law<Algebra>> {
    vec![
        Law {
            name: "1·x = x",
            domains: &[All],
            check: |a, v| eq(a, dot(a, a.unit(), v[0]), v[0]),
        },
        Law {
            name: "x⋆1 = x",
            domains: &[All],
            check: |a, v| eq(a, star(a, v[0], a.unit()), v[0]),
        },
        Law {
            name: "x·(x→1) = 1",
            domains: &[All],
            check: |a, v| eq(a, dot(a, v[0], a.arrow(v[0], a.unit())), a.unit()),
        },
        Law {
            name: "(x⇝1)⋆x = 1",
            domains: &[All],
            check: |a, v| eq(a, star(a, a.squig(v[0], a.unit()), v[0]), a.unit()),
        },
        Law {
            name: "x·(y⋆z) = (x·y)⋆z",
            domains: &[All, All, All],
            check: |a, v| eq(a, dot(a, v[0], star(a, v[1], v[2])), star(a, dot(a, v[0], v[1]), v[2])),
        },
        Law {
            name: "(x·y)·z ≤ x·(y·z)",
            domains: &[All, All, All],
            check: |a, v| le(a, dot(a, dot(a, v[0], v[1]), v[2]), dot(a, v[0], dot(a, v[1], v[2]))),
        },
        Law {
            name: "x⋆(y⋆z) ≤ (x⋆y)⋆z",
            domains: &[All, All, All],
            check: |a, v| le(a, star(a, v[0], star(a, v[1], v[2])), star(a, star(a, v[0], v[1]), v[2])),
        },
    ]
}

/// Unit laws, inverse laws, mixed associativity and the two one-sided
/// associativity inequalities of `·` and `⋆`.
pub fn check_dot_star_laws(a: &Algebra) -> VerificationReport {
    run_laws(a, &dot_star_laws(), resolver(a), usize::MAX)
}

fn group_part_laws() -> Vec<Law<Algebra>> {
    vec![
        Law {
            name: "x→g = (g→x)→1",
            domains: &[All, G],
            check: |a, v| eq(a, a.arrow(v[0], v[1]), a.arrow(a.arrow(v[1], v[0]), a.unit())),
        },
        Law {
            name: "x⇝g = (g⇝x)→1",
            domains: &[All, G],
            check: |a, v| eq(a, a.squig(v[0], v[1]), a.arrow(a.squig(v[1], v[0]), a.unit())),
        },
        Law {
            name: "g→x = x⋆g⁻¹",
            domains: &[All, G],
            check: |a, v| eq(a, a.arrow(v[1], v[0]), star(a, v[0], inv(a, v[1]))),
        },
        Law {
            name: "g⇝x = g⁻¹·x",
            domains: &[All, G],
            check: |a, v| eq(a, a.squig(v[1], v[0]), dot(a, inv(a, v[1]), v[0])),
        },
        Law {
            name: "(x→g)→1 = x·g⁻¹",
            domains: &[All, G],
            check: |a, v| eq(a, a.arrow(a.arrow(v[0], v[1]), a.unit()), dot(a, v[0], inv(a, v[1]))),
        },
        Law {
            name: "(x⇝g)→1 = g⁻¹⋆x",
            domains: &[All, G],
            check: |a, v| eq(a, a.arrow(a.squig(v[0], v[1]), a.unit()), star(a, inv(a, v[1]), v[0])),
        },
    ]
}

/// Identities linking the arrows with `·`, `⋆` and group-part elements,
/// for `x ∈ A`, `g ∈ G_A`.
pub fn check_group_part_laws(a: &Algebra) -> VerificationReport {
    run_laws(a, &group_part_laws(), resolver(a), usize::MAX)
}

/// Names of the six associativity conditions, in order.
pub const ASSOCIATIVITY_CONDITIONS: [&str; 6] = [
    "(x·y)·z = x·(y·z)",
    "(g·h)·x = g·(h·x)",
    "g⁻¹⇝(g⇝x) = x",
    "(x⋆y)⋆z = x⋆(y⋆z)",
    "x⋆(h⋆g) = (x⋆h)⋆g",
    "g⁻¹→(g→x) = x",
];

fn associativity_laws() -> [Law<Algebra>; 6] {
    let n = ASSOCIATIVITY_CONDITIONS;
    [
        Law {
            name: n[0],
            domains: &[All, All, All],
            check: |a, v| eq(a, dot(a, dot(a, v[0], v[1]), v[2]), dot(a, v[0], dot(a, v[1], v[2]))),
        },
        Law {
            name: n[1],
            domains: &[G, G, All],
            check: |a, v| eq(a, dot(a, dot(a, v[0], v[1]), v[2]), dot(a, v[0], dot(a, v[1], v[2]))),
        },
        Law {
            name: n[2],
            domains: &[G, All],
            check: |a, v| eq(a, a.squig(inv(a, v[0]), a.squig(v[0], v[1])), v[1]),
        },
        Law {
            name: n[3],
            domains: &[All, All, All],
            check: |a, v| eq(a, star(a, star(a, v[0], v[1]), v[2]), star(a, v[0], star(a, v[1], v[2]))),
        },
        Law {
            name: n[4],
            domains: &[All, G, G],
            check: |a, v| eq(a, star(a, v[0], star(a, v[1], v[2])), star(a, star(a, v[0], v[1]), v[2])),
        },
        Law {
            name: n[5],
            domains: &[G, All],
            check: |a, v| eq(a, a.arrow(inv(a, v[0]), a.arrow(v[0], v[1])), v[1]),
        },
    ]
}

/// The six associativity conditions, each evaluated on its own. They are
/// equivalent in every pseudo-BCI-algebra.
pub fn associativity_conditions(a: &Algebra) -> [Verdict; 6] {
    associativity_laws().map(|law| {
        let r = run_laws(a, std::slice::from_ref(&law), resolver(a), 1);
        match r.violations.into_iter().next() {
            Some(v) => Err(v),
            None => Ok(()),
        }
    })
}

/// `g→x = g⇝x` for `g ∈ G_A`, `x ∈ I_A`.
pub fn check_group_arrows_agree(a: &Algebra) -> Verdict {
    let law = Law::<Algebra> {
        name: "g→x = g⇝x",
        domains: &[G, I],
        check: |a, v| {
            let (l, r) = (a.arrow(v[0], v[1]), a.squig(v[0], v[1]));
            (l != r).then(|| {
                let (g, x) = (a.name(v[0]), a.name(v[1]));
                format!("{g}→{x}={} ≠ {}={g}⇝{x}", a.name(l), a.name(r))
            })
        },
    };
    match run_laws(a, &[law], resolver(a), 1).violations.into_iter().next() {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// `·` and `⋆` coincide everywhere; this happens exactly when `G_A = A`.
pub fn dot_equals_star(a: &Algebra) -> bool {
    a.elements().all(|x| a.elements().all(|y| dot(a, x, y) == star(a, x, y)))
}

/// `x⋆(y·z) = (x⋆y)·z` for all `x, y, z`; forces `·` and `⋆` to coincide.
pub fn mixed_law_holds(a: &Algebra) -> bool {
    a.elements().all(|x| {
        a.elements()
            .all(|y| a.elements().all(|z| star(a, x, dot(a, y, z)) == dot(a, star(a, x, y), z)))
    })
}

/// The group-part retraction written as identities: whether `G_A` being a
/// filter and the group-arrow agreement hold, each read off term identities
/// with `δ(t) = (t→1)→1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeltaIdentities {
    /// `δ(t1(x,y1,y2)) = t1(x,δy1,δy2)` and `δ(t2(x,y)) = t2(x,δy)`.
    pub group_part_is_filter: bool,
    /// `δ(y)→(δ(x)→x) = δ(y)⇝(δ(x)→x)`.
    pub group_arrows_agree: bool,
}

pub fn delta_identities(a: &Algebra) -> Result<DeltaIdentities> {
    let v = Term::var;
    let d = Term::delta;
    let t1 = |x: Term, y1: Term, y2: Term| Term::arrow(Term::arrow(y1, Term::arrow(y2, x.clone())), x);
    let t2 = |x: Term, y: Term| Term::squig(Term::squig(y, x.clone()), x);
    let first = check_term_identity(
        a,
        &d(t1(v("x"), v("y1"), v("y2"))),
        &t1(v("x"), d(v("y1")), d(v("y2"))),
    )?;
    let second = check_term_identity(a, &d(t2(v("x"), v("y"))), &t2(v("x"), d(v("y"))))?;
    let residue = Term::arrow(d(v("x")), v("x"));
    let third = check_term_identity(
        a,
        &Term::arrow(d(v("y")), residue.clone()),
        &Term::squig(d(v("y")), residue),
    )?;
    Ok(DeltaIdentities {
        group_part_is_filter: first.passed && second.passed,
        group_arrows_agree: third.passed,
    })
}

/// A checked condition in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
    pub witness: Option<Violation>,
}

impl Condition {
    fn from_verdict(name: &str, v: Verdict) -> Condition {
        Condition {
            name: name.to_string(),
            holds: v.is_ok(),
            witness: v.err(),
        }
    }
}

/// One value of the decomposition map `(i, g) ↦ g→i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaEntry {
    pub integral: String,
    pub group: String,
    pub image: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub integral_part: Vec<String>,
    pub group_part: Vec<String>,
    pub conditions: Vec<Condition>,
    pub conditions_agree: bool,
    pub group_arrows_agree: Condition,
    pub group_part_is_filter: Condition,
    /// `A ≅ I_A × G_A` by exhaustive isomorphism search.
    pub isomorphic_to_product: bool,
    /// `I_A × G_A ≅ I_A × G_A†`.
    pub product_isomorphic_to_dagger_product: bool,
    /// The map `(i, g) ↦ g→i` from `I_A × G_A†`, present when `G_A` is a
    /// filter.
    pub eta: Option<Vec<EtaEntry>>,
    /// Whether `eta` is a bijective homomorphism onto `A`.
    pub eta_verified: Option<bool>,
    /// Isomorphism found, `G_A` a filter, and all associativity conditions
    /// together with group-arrow agreement: all three agree.
    pub triad_agrees: bool,
}

impl DecompositionReport {
    pub fn decomposable(&self) -> bool {
        self.isomorphic_to_product
    }

    /// One-line reason for non-decomposability, naming the first failure.
    pub fn failure_summary(&self) -> Option<String> {
        if self.decomposable() {
            return None;
        }
        let mut parts = Vec::new();
        if !self.group_part_is_filter.holds {
            parts.push("G_A not a filter".to_string());
        }
        if let Some(c) = self.conditions.iter().find(|c| !c.holds) {
            parts.push(format!("{} fails at ({})", c.name, witness_of(c)));
        }
        if !self.group_arrows_agree.holds {
            parts.push(format!("g→x=g⇝x fails at ({})", witness_of(&self.group_arrows_agree)));
        }
        Some(parts.join("; "))
    }
}

fn witness_of(c: &Condition) -> String {
    c.witness.as_ref().map(|w| w.witness.join(",")).unwrap_or_default()
}

/// Evaluates every decomposition criterion and, when `G_A` is a filter,
/// builds and verifies `(i, g) ↦ g→i` from `I_A × G_A†` onto `A`.
pub fn decompose(a: &Algebra) -> Result<DecompositionReport> {
    let i_set = integral_part(a);
    let g_set = group_part(a);
    let i_alg = a.subalgebra(i_set)?;
    let g_alg = a.subalgebra(g_set)?;
    let product = direct_product(&i_alg, &g_alg)?;
    let dagger_product = direct_product(&i_alg, &g_alg.dagger())?;

    let verdicts = associativity_conditions(a);
    let conditions_agree = verdicts.iter().all(|v| v.is_ok() == verdicts[0].is_ok());
    let conditions: Vec<Condition> = verdicts
        .into_iter()
        .zip(ASSOCIATIVITY_CONDITIONS)
        .map(|(v, n)| Condition::from_verdict(n, v))
        .collect();
    let group_arrows_agree = Condition::from_verdict("g→x = g⇝x", check_group_arrows_agree(a));
    let group_part_is_filter = Condition::from_verdict("G_A is a filter", is_filter(a, g_set)?);
    let isomorphic_to_product = find_isomorphism(a, &product).is_some();
    let product_isomorphic_to_dagger_product = find_isomorphism(&product, &dagger_product).is_some();

    let (eta, eta_verified) = if group_part_is_filter.holds {
        let is: Vec<usize> = i_set.iter().collect();
        let gs: Vec<usize> = g_set.iter().collect();
        let map: Vec<usize> = (0..dagger_product.size())
            .map(|p| a.arrow(gs[p % gs.len()], is[p / gs.len()]))
            .collect();
        let entries = (0..map.len())
            .map(|p| EtaEntry {
                integral: a.name(is[p / gs.len()]).to_string(),
                group: a.name(gs[p % gs.len()]).to_string(),
                image: a.name(map[p]).to_string(),
            })
            .collect();
        (Some(entries), Some(is_isomorphism(&dagger_product, a, &map)))
    } else {
        (None, None)
    };

    let third = conditions.iter().all(|c| c.holds) && group_arrows_agree.holds;
    let triad_agrees = isomorphic_to_product == group_part_is_filter.holds
        && group_part_is_filter.holds == third
        && eta_verified.unwrap_or(true);

    Ok(DecompositionReport {
        integral_part: i_set.iter().map(|x| a.name(x).to_string()).collect(),
        group_part: g_set.iter().map(|x| a.name(x).to_string()).collect(),
        conditions,
        conditions_agree,
        group_arrows_agree,
        group_part_is_filter,
        isomorphic_to_product,
        product_isomorphic_to_dagger_product,
        eta,
        eta_verified,
        triad_agrees,
    })
}

/// The six-element algebra `{a,b,x,y,g,1}` satisfying all associativity
/// conditions while `g→a = y ≠ x = g⇝a`.
pub fn builtin_example() -> Algebra {
    library::ex6()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::{chain2, trivial};
    use crate::structure::{group_to_algebra, union_construction, Group};

    #[test]
    fn ex6_profile() {
        let a = builtin_example();
        let i = |n: &str| a.index_of(n).unwrap();
        assert_eq!(dot(&a, i("g"), i("a")), i("x"));
        assert!(check_dot_star_laws(&a).passed);
        assert!(check_group_part_laws(&a).passed);
        assert!(associativity_conditions(&a).iter().all(|v| v.is_ok()));
        let v = check_group_arrows_agree(&a).unwrap_err();
        assert_eq!(v.witness, vec!["g", "a"]);
        assert_eq!(v.detail, "g→a=y ≠ x=g⇝a");

        let r = decompose(&a).unwrap();
        assert!(!r.decomposable());
        assert!(!r.group_part_is_filter.holds);
        assert!(r.triad_agrees && r.conditions_agree);
        assert!(r.eta.is_none());
        assert!(r.product_isomorphic_to_dagger_product);
        assert_eq!(r.failure_summary().unwrap(), "G_A not a filter; g→x=g⇝x fails at (g,a)");

        let d = delta_identities(&a).unwrap();
        assert!(!d.group_part_is_filter && !d.group_arrows_agree);
        assert!(!dot_equals_star(&a) && !mixed_law_holds(&a));
    }

    #[test]
    fn product_decomposes() {
        let z2 = group_to_algebra(&Group::cyclic(2));
        let p = direct_product(&chain2(), &z2).unwrap();
        assert!(check_group_arrows_agree(&p).is_ok());
        let r = decompose(&p).unwrap();
        assert!(r.decomposable() && r.triad_agrees);
        assert_eq!(r.eta_verified, Some(true));
        assert_eq!(r.failure_summary(), None);
        let d = delta_identities(&p).unwrap();
        assert!(d.group_part_is_filter && d.group_arrows_agree);
    }

    #[test]
    fn trivial_and_groups_decompose() {
        for a in [trivial(), group_to_algebra(&Group::cyclic(3)), group_to_algebra(&Group::dihedral(3))] {
            let r = decompose(&a).unwrap();
            assert!(r.decomposable() && r.triad_agrees);
            assert!(dot_equals_star(&a) && mixed_law_holds(&a));
        }
    }

    #[test]
    fn union_conditions_agree() {
        let u = union_construction(&chain2(), &Group::cyclic(2), true).unwrap();
        let r = decompose(&u).unwrap();
        assert!(r.conditions_agree && r.triad_agrees);
    }
}
