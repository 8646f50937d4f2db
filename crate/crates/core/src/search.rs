//! Enumeration of small models up to isomorphism, and counterexample hunting.
//!
//! Pseudo-BCI-algebras are generated poset by poset: the order fixes every
//! table entry equal to `1`, and the remaining entries are filled by
//! backtracking with partial evaluation of laws every model satisfies.

use std::collections::HashSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{check_pseudo_bci, check_pseudo_bck, Algebra};
use crate::decomposition::{dot, star};
use crate::error::{Error, Result};
use crate::filters::{all_filters, all_prefilters, is_filter};
use crate::iso::{canonical_key, find_isomorphism};
use crate::lattice::FiniteLattice;
use crate::structure::{group_part, group_to_algebra, is_p_semisimple, Group};

/// Default largest size for the pseudo-BCI and pseudo-BCK classes.
pub const DEFAULT_SIZE_CAP: usize = 6;
/// Default largest size for the group class.
pub const GROUP_SIZE_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Pbci,
    Pbck,
    /// Algebras derived from groups, i.e. with trivial order.
    Group,
}

impl Class {
    pub fn default_cap(self) -> usize {
        match self {
            Class::Group => GROUP_SIZE_CAP,
            _ => DEFAULT_SIZE_CAP,
        }
    }

    pub fn contains(self, a: &Algebra) -> bool {
        match self {
            Class::Pbci => check_pseudo_bci(a).passed,
            Class::Pbck => check_pseudo_bck(a).passed,
            Class::Group => check_pseudo_bci(a).passed && is_p_semisimple(a),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSpec {
    pub size: usize,
    pub class: Class,
    pub predicate: Option<String>,
    pub limit: Option<usize>,
}

impl SearchSpec {
    pub fn new(size: usize, class: Class) -> Self {
        SearchSpec {
            size,
            class,
            predicate: None,
            limit: None,
        }
    }

    pub fn with_predicate(mut self, name: &str) -> Self {
        self.predicate = Some(name.to_string());
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }
}

type Predicate = fn(&Algebra) -> Result<bool>;

fn prefilter_lattice_nonmodular(a: &Algebra) -> Result<bool> {
    let l = FiniteLattice::from_closed_family(all_prefilters(a)?, a.names())?;
    Ok(l.is_modular().is_err())
}

fn dot_neq_star_bci(a: &Algebra) -> Result<bool> {
    Ok(a.arrows_coincide() && a.elements().any(|x| a.elements().any(|y| dot(a, x, y) != star(a, x, y))))
}

fn g_not_filter(a: &Algebra) -> Result<bool> {
    Ok(is_filter(a, group_part(a))?.is_err())
}

fn pbck_filter_lattice_nondistributive(a: &Algebra) -> Result<bool> {
    if !check_pseudo_bck(a).passed {
        return Ok(false);
    }
    let l = FiniteLattice::from_closed_family(all_filters(a)?, a.names())?;
    Ok(l.is_distributive().is_err())
}

/// Registered predicate names with their descriptions.
pub const PREDICATES: [(&str, &str); 4] = [
    ("prefilter-lattice-nonmodular", "the prefilter lattice is not modular"),
    ("dot-neq-star-bci", "a BCI-algebra whose two products differ"),
    ("g-not-filter", "the group part is not a filter"),
    (
        "pbck-filter-lattice-nondistributive",
        "a pseudo-BCK-algebra with a non-distributive filter lattice",
    ),
];

pub fn predicate(name: &str) -> Result<Predicate> {
    Ok(match name {
        "prefilter-lattice-nonmodular" => prefilter_lattice_nonmodular,
        "dot-neq-star-bci" => dot_neq_star_bci,
        "g-not-filter" => g_not_filter,
        "pbck-filter-lattice-nondistributive" => pbck_filter_lattice_nondistributive,
        _ => return Err(Error::UnknownPredicate(name.to_string())),
    })
}

/// Element names for generated models: `a, b, c, …` and the unit `1` last.
pub fn default_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = (0..n - 1)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect();
    names.push("1".to_string());
    names
}

/// All models of the spec's class and size up to isomorphism, in canonical
/// order, filtered by the predicate and truncated to the limit.
pub fn enumerate(spec: &SearchSpec) -> Result<Vec<Algebra>> {
    enumerate_capped(spec, spec.class.default_cap())
}

pub fn enumerate_capped(spec: &SearchSpec, cap: usize) -> Result<Vec<Algebra>> {
    let n = spec.size;
    if n == 0 {
        return Err(Error::Malformed("search size must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::SizeCap {
            what: "search",
            size: n,
            cap,
        });
    }
    let pred = spec.predicate.as_deref().map(predicate).transpose()?;
    let models = match spec.class {
        Class::Group => groups(n)?,
        class => arrow_models(n, class == Class::Pbck)?,
    };
    let mut out = Vec::new();
    for a in models {
        if spec.limit.is_some_and(|l| out.len() >= l) {
            break;
        }
        if match pred {
            Some(p) => p(&a)?,
            None => true,
        } {
            out.push(a);
        }
    }
    Ok(out)
}

/// The first enumerated model satisfying the predicate.
pub fn find_counterexample(spec: &SearchSpec) -> Result<Option<Algebra>> {
    find_counterexample_capped(spec, spec.class.default_cap())
}

pub fn find_counterexample_capped(spec: &SearchSpec, cap: usize) -> Result<Option<Algebra>> {
    if spec.predicate.is_none() {
        return Err(Error::UnknownPredicate(String::new()));
    }
    let mut s = spec.clone();
    s.limit = Some(1);
    Ok(enumerate_capped(&s, cap)?.into_iter().next())
}

/// Posets on `0..n` with `n-1` maximal (and greatest when `top`), one per
/// isomorphism class fixing `n-1`. Entry `x*n+y` is `x ≤ y`.
fn posets(n: usize, top: bool) -> Vec<Vec<bool>> {
    let m = n - 1;
    let pairs: Vec<(usize, usize)> = (0..m).tuple_combinations().collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let perms: Vec<Vec<usize>> = (0..m).permutations(m).collect();
    for rels in (0..pairs.len()).map(|_| 0..3u8).multi_cartesian_product() {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for (&(x, y), &r) in pairs.iter().zip(&rels) {
            match r {
                1 => leq[x * n + y] = true,
                2 => leq[y * n + x] = true,
                _ => {}
            }
        }
        let transitive = (0..m).all(|x| {
            (0..m).all(|y| (0..m).all(|z| !(leq[x * n + y] && leq[y * n + z]) || leq[x * n + z]))
        });
        if !transitive {
            continue;
        }
        // elements below the unit form a down-set
        let downsets: Vec<u64> = if top {
            vec![(1u64 << m) - 1]
        } else {
            (0..1u64 << m)
                .filter(|&d| {
                    (0..m).all(|x| d >> x & 1 == 0 || (0..m).all(|y| !leq[y * n + x] || d >> y & 1 == 1))
                })
                .collect()
        };
        for d in downsets {
            let mut p = leq.clone();
            for x in 0..m {
                p[x * n + m] = d >> x & 1 == 1;
            }
            let key = perms
                .iter()
                .map(|perm| {
                    let mut code = vec![false; n * n];
                    for x in 0..n {
                        for y in 0..n {
                            let px = if x == m { m } else { perm[x] };
                            let py = if y == m { m } else { perm[y] };
                            code[px * n + py] = p[x * n + y];
                        }
                    }
                    code
                })
                .min()
                .unwrap_or_else(|| p.clone());
            if seen.insert(key) {
                out.push(p);
            }
        }
    }
    out
}

const UNSET: u8 = u8::MAX;

struct Filler {
    n: usize,
    leq: Vec<bool>,
    arrow: Vec<u8>,
    squig: Vec<u8>,
    /// Free cells `(x, y)`, each filled in both tables.
    cells: Vec<(usize, usize)>,
    found: Vec<Algebra>,
}

impl Filler {
    fn new(n: usize, leq: Vec<bool>) -> Self {
        let u = n - 1;
        let mut arrow = vec![UNSET; n * n];
        let mut squig = vec![UNSET; n * n];
        let mut cells = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x == u {
                    arrow[x * n + y] = y as u8;
                    squig[x * n + y] = y as u8;
                } else if leq[x * n + y] {
                    arrow[x * n + y] = u as u8;
                    squig[x * n + y] = u as u8;
                } else {
                    cells.push((x, y));
                }
            }
        }
        Filler {
            n,
            leq,
            arrow,
            squig,
            cells,
            found: Vec::new(),
        }
    }

    fn le(&self, x: u8, y: u8) -> bool {
        self.leq[x as usize * self.n + y as usize]
    }

    fn ar(&self, x: u8, y: u8) -> Option<u8> {
        let v = self.arrow[x as usize * self.n + y as usize];
        (v != UNSET).then_some(v)
    }

    fn sq(&self, x: u8, y: u8) -> Option<u8> {
        let v = self.squig[x as usize * self.n + y as usize];
        (v != UNSET).then_some(v)
    }

    /// False if some fully evaluable instance of a valid law fails.
    fn consistent(&self) -> bool {
        let n = self.n as u8;
        let u = n - 1;
        for x in 0..n {
            for y in 0..n {
                // x ≤ (x→y)⇝y and x ≤ (x⇝y)→y
                if let Some(v) = self.ar(x, y).and_then(|v| self.sq(v, y)) {
                    if !self.le(x, v) {
                        return false;
                    }
                }
                if let Some(v) = self.sq(x, y).and_then(|v| self.ar(v, y)) {
                    if !self.le(x, v) {
                        return false;
                    }
                }
                for z in 0..n {
                    let xy = self.ar(x, y);
                    let yz = self.ar(y, z);
                    let xz = self.ar(x, z);
                    if let (Some(xy), Some(yz), Some(xz)) = (xy, yz, xz) {
                        if self.sq(yz, xz).and_then(|v| self.sq(xy, v)).is_some_and(|v| v != u) {
                            return false;
                        }
                    }
                    let xy = self.sq(x, y);
                    let yz = self.sq(y, z);
                    let xz = self.sq(x, z);
                    if let (Some(xy), Some(yz), Some(xz)) = (xy, yz, xz) {
                        if self.ar(yz, xz).and_then(|v| self.ar(xy, v)).is_some_and(|v| v != u) {
                            return false;
                        }
                    }
                    // x→(y⇝z) = y⇝(x→z)
                    let l = self.sq(y, z).and_then(|v| self.ar(x, v));
                    let r = self.ar(x, z).and_then(|v| self.sq(y, v));
                    if let (Some(l), Some(r)) = (l, r) {
                        if l != r {
                            return false;
                        }
                    }
                    // x ≤ y→z ⟺ y ≤ x⇝z
                    if let (Some(l), Some(r)) = (self.ar(y, z), self.sq(x, z)) {
                        if self.le(x, l) != self.le(y, r) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, k: usize) {
        if !self.consistent() {
            return;
        }
        let n = self.n;
        let u = n - 1;
        if k == self.cells.len() {
            let a = Algebra::new(
                default_names(n),
                u,
                self.arrow.iter().map(|&v| v as usize).collect(),
                self.squig.iter().map(|&v| v as usize).collect(),
            )
            .expect("filled tables are well formed");
            if check_pseudo_bci(&a).passed {
                self.found.push(a);
            }
            return;
        }
        let (x, y) = self.cells[k];
        let i = x * n + y;
        for v in 0..u as u8 {
            self.arrow[i] = v;
            // x→1 = x⇝1
            let squig_values: Vec<u8> = if y == u { vec![v] } else { (0..u as u8).collect() };
            for w in squig_values {
                self.squig[i] = w;
                self.fill(k + 1);
            }
        }
        self.arrow[i] = UNSET;
        self.squig[i] = UNSET;
    }
}

fn dedup_sorted(models: Vec<Algebra>) -> Vec<Algebra> {
    let mut keyed: Vec<(Vec<u8>, Algebra)> = models.into_par_iter().map(|a| (canonical_key(&a), a)).collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    keyed.dedup_by(|x, y| x.0 == y.0);
    keyed.into_iter().map(|(_, a)| a).collect()
}

fn arrow_models(n: usize, bck: bool) -> Result<Vec<Algebra>> {
    let found: Vec<Vec<Algebra>> = posets(n, bck)
        .into_par_iter()
        .map(|leq| {
            let mut f = Filler::new(n, leq);
            f.fill(0);
            f.found
        })
        .collect();
    let all = dedup_sorted(found.into_iter().flatten().collect());
    Ok(if bck {
        all.into_iter().filter(|a| check_pseudo_bck(a).passed).collect()
    } else {
        all
    })
}

/// Groups of order `n` up to isomorphism, via Cayley tables with the
/// identity at index 0, filled row by row with associativity pruning.
fn groups(n: usize) -> Result<Vec<Algebra>> {
    const U: usize = usize::MAX;
    // Sets `(x, y)` to `v` if the Latin property allows, recording it.
    fn place(t: &mut [usize], n: usize, x: usize, y: usize, v: usize, trail: &mut Vec<usize>) -> bool {
        if t[x * n + y] != U {
            return t[x * n + y] == v;
        }
        if (0..n).any(|j| t[x * n + j] == v) || (0..n).any(|i| t[i * n + y] == v) {
            return false;
        }
        t[x * n + y] = v;
        trail.push(x * n + y);
        true
    }
    // Closes under the consequences of associativity; false on a conflict.
    fn propagate(t: &mut [usize], n: usize, trail: &mut Vec<usize>) -> bool {
        loop {
            let mut changed = false;
            for p in 0..n {
                for q in 0..n {
                    let pq = t[p * n + q];
                    if pq == U {
                        continue;
                    }
                    for r in 0..n {
                        let qr = t[q * n + r];
                        if qr == U {
                            continue;
                        }
                        let (l, rr) = (t[pq * n + r], t[p * n + qr]);
                        match (l == U, rr == U) {
                            (false, false) if l != rr => return false,
                            (false, true) => {
                                if !place(t, n, p, qr, l, trail) {
                                    return false;
                                }
                                changed = true;
                            }
                            (true, false) => {
                                if !place(t, n, pq, r, rr, trail) {
                                    return false;
                                }
                                changed = true;
                            }
                            _ => {}
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
    fn go(t: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        let Some(k) = t.iter().position(|&v| v == U) else {
            out.push(t.clone());
            return;
        };
        for v in 0..n {
            let mut trail = Vec::new();
            if place(t, n, k / n, k % n, v, &mut trail) && propagate(t, n, &mut trail) {
                go(t, n, out);
            }
            for i in trail {
                t[i] = U;
            }
        }
    }
    let mut t = vec![U; n * n];
    for i in 0..n {
        t[i] = i;
        t[i * n] = i;
    }
    let mut tables = Vec::new();
    go(&mut t, n, &mut tables);

    // buckets by the multiset of element orders, then exact isomorphism
    let order_profile = |t: &[usize]| {
        let mut orders: Vec<usize> = (0..n)
            .map(|x| {
                let (mut p, mut k) = (x, 1);
                while p != 0 {
                    p = t[p * n + x];
                    k += 1;
                }
                k
            })
            .collect();
        orders.sort_unstable();
        orders
    };
    let mut reps: Vec<(Vec<usize>, Algebra)> = Vec::new();
    for table in tables {
        let profile = order_profile(&table);
        let names: Vec<String> = std::iter::once("1".to_string())
            .chain((1..n).map(|i| format!("g{i}")))
            .collect();
        let a = group_to_algebra(&Group::new(names, table)?);
        let dup = reps
            .iter()
            .any(|(p, b)| *p == profile && find_isomorphism(b, &a).is_some());
        if !dup {
            reps.push((profile, a));
        }
    }
    // relabel so the unit is last, matching the other classes
    let perm: Vec<usize> = (0..n).map(|x| if x == 0 { n - 1 } else { x - 1 }).collect();
    let models = reps
        .into_iter()
        .map(|(_, a)| a.permute(&perm).with_names(default_names(n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(dedup_sorted(models))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::ex6;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate(&SearchSpec::new(1, Class::Pbci)).unwrap().len(), 1);
        let two = enumerate(&SearchSpec::new(2, Class::Pbci)).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two.iter().filter(|a| check_pseudo_bck(a).passed).count(), 1);
    }

    #[test]
    fn group_counts() {
        let counts: Vec<usize> = (1..=8)
            .map(|n| enumerate(&SearchSpec::new(n, Class::Group)).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 2, 1, 5]);
    }

    #[test]
    fn pbck_is_filtered_pbci() {
        for n in 1..=4 {
            let bci = enumerate(&SearchSpec::new(n, Class::Pbci)).unwrap();
            let bck = enumerate(&SearchSpec::new(n, Class::Pbck)).unwrap();
            let filtered: Vec<_> = bci.into_iter().filter(|a| check_pseudo_bck(a).passed).collect();
            assert_eq!(filtered, bck);
        }
    }

    #[test]
    fn unknown_predicate_and_cap() {
        let spec = SearchSpec::new(3, Class::Pbci).with_predicate("nope");
        assert!(matches!(enumerate(&spec), Err(Error::UnknownPredicate(_))));
        assert!(matches!(
            enumerate(&SearchSpec::new(7, Class::Pbci)),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn d4_found_by_nonmodularity() {
        let spec = SearchSpec::new(8, Class::Group).with_predicate("prefilter-lattice-nonmodular");
        let found = find_counterexample(&spec).unwrap().unwrap();
        let d4 = group_to_algebra(&Group::dihedral(4));
        assert!(find_isomorphism(&found, &d4).is_some());
    }

    #[test]
    fn ex6_poset_is_enumerated() {
        let e = ex6();
        let n = e.size();
        let ps = posets(n, false);
        let profile = |leq: &dyn Fn(usize, usize) -> bool| {
            let mut v: Vec<(usize, usize)> = (0..n)
                .map(|x| ((0..n).filter(|&y| leq(y, x)).count(), (0..n).filter(|&y| leq(x, y)).count()))
                .collect();
            v.sort_unstable();
            v
        };
        let target = profile(&|x, y| e.leq(x, y));
        assert!(ps.iter().any(|p| profile(&|x, y| p[x * n + y]) == target));
    }
}
