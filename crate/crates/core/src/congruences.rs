//! Partitions, congruences, relative congruences and quotients.
//!
//! A congruence is relative when its quotient is again a pseudo-BCI-algebra.
//! Identities survive quotients, so only antisymmetry can fail there.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::algebra::{check_pseudo_bci, Algebra};
use crate::error::{Error, Result};
use crate::filters::{all_filters, filter_generated, theta_from_filter};
use crate::lattice::FiniteLattice;
use crate::report::{Verdict, Violation};
use crate::subset::Subset;

/// An equivalence relation on `0..n` stored as block ids numbered in order
/// of first occurrence, so equal partitions have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    block_of: Vec<usize>,
}

impl Partition {
    pub fn from_block_ids(ids: Vec<usize>) -> Partition {
        let mut renumber: Vec<(usize, usize)> = Vec::new();
        let block_of = ids
            .iter()
            .map(|&b| match renumber.iter().find(|(old, _)| *old == b) {
                Some(&(_, new)) => new,
                None => {
                    let new = renumber.len();
                    renumber.push((b, new));
                    new
                }
            })
            .collect();
        Partition { block_of }
    }

    pub fn identity(n: usize) -> Partition {
        Partition {
            block_of: (0..n).collect(),
        }
    }

    pub fn total(n: usize) -> Partition {
        Partition { block_of: vec![0; n] }
    }

    /// Blocks given as subsets; uncovered elements become singletons.
    pub fn from_blocks(n: usize, blocks: &[Subset]) -> Result<Partition> {
        let mut ids: Vec<usize> = (0..n).map(|x| blocks.len() + x).collect();
        let mut seen = Subset::EMPTY;
        for (b, s) in blocks.iter().enumerate() {
            if !s.intersection(seen).is_empty() || s.iter().any(|x| x >= n) {
                return Err(Error::Malformed("blocks overlap or leave the carrier".into()));
            }
            seen = seen.union(*s);
            for x in s.iter() {
                ids[x] = b;
            }
        }
        Ok(Partition::from_block_ids(ids))
    }

    /// Parses `a,b,1|x,y,g`; unnamed elements become singletons.
    pub fn parse(a: &Algebra, spec: &str) -> Result<Partition> {
        let blocks = spec
            .split('|')
            .map(|block| {
                block
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|name| a.index_of(name))
                    .collect::<Result<Subset>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_blocks(a.size(), &blocks)
    }

    pub fn size(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.block_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn block_containing(&self, x: usize) -> Subset {
        (0..self.size()).filter(|&y| self.same(x, y)).collect()
    }

    pub fn blocks(&self) -> Vec<Subset> {
        let mut out = vec![Subset::EMPTY; self.block_count()];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].insert(x);
        }
        out
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        (0..self.size()).all(|x| (0..self.size()).all(|y| !self.same(x, y) || other.same(x, y)))
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let ids = (0..self.size())
            .map(|x| self.block_of[x] * other.block_count() + other.block_of[x])
            .collect();
        Partition::from_block_ids(ids)
    }

    /// Join as equivalence relations.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut ids = self.block_of.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for x in 0..self.size() {
                for y in 0..self.size() {
                    if other.same(x, y) && ids[x] != ids[y] {
                        let (keep, drop) = (ids[x].min(ids[y]), ids[x].max(ids[y]));
                        ids.iter_mut().filter(|b| **b == drop).for_each(|b| *b = keep);
                        changed = true;
                    }
                }
            }
        }
        Partition::from_block_ids(ids)
    }

    fn merge(&mut self, x: usize, y: usize) -> bool {
        let (bx, by) = (self.block_of[x], self.block_of[y]);
        if bx == by {
            return false;
        }
        for b in self.block_of.iter_mut() {
            if *b == by {
                *b = bx;
            }
        }
        true
    }

    fn canonical(self) -> Partition {
        Partition::from_block_ids(self.block_of)
    }

    /// `{a,b,1 | x,y,g}`.
    pub fn display_with<S: AsRef<str>>(&self, names: &[S]) -> String {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|x| names[x].as_ref()).collect::<Vec<_>>().join(","))
            .collect();
        format!("{{{}}}", blocks.join(" | "))
    }

    /// The relation as a list of pairs, for relational composition.
    fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.same(x, y))
            .collect()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.size()).map(|x| x.to_string()).collect();
        f.write_str(&self.display_with(&names))
    }
}

/// Compatibility with both arrows, checked one argument at a time.
pub fn check_congruence(a: &Algebra, theta: &Partition) -> Verdict {
    if theta.size() != a.size() {
        return Err(Violation::new("partition of the carrier", vec![], "size mismatch"));
    }
    for x in a.elements() {
        for x2 in a.elements().filter(|&x2| x2 > x && theta.same(x, x2)) {
            for y in a.elements() {
                for (op, l, r) in [
                    ("→", a.arrow(x, y), a.arrow(x2, y)),
                    ("→", a.arrow(y, x), a.arrow(y, x2)),
                    ("⇝", a.squig(x, y), a.squig(x2, y)),
                    ("⇝", a.squig(y, x), a.squig(y, x2)),
                ] {
                    if !theta.same(l, r) {
                        return Err(Violation::new(
                            format!("x θ x' ⇒ compatible with {op}"),
                            vec![a.name(x).into(), a.name(x2).into(), a.name(y).into()],
                            format!("{} and {} in different blocks", a.name(l), a.name(r)),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The least congruence containing `theta`.
pub fn congruence_generated(a: &Algebra, theta: &Partition) -> Partition {
    let mut p = theta.clone();
    loop {
        let mut changed = false;
        for x in a.elements() {
            for x2 in a.elements().filter(|&x2| x2 > x) {
                if !p.same(x, x2) {
                    continue;
                }
                for y in a.elements() {
                    changed |= p.merge(a.arrow(x, y), a.arrow(x2, y));
                    changed |= p.merge(a.arrow(y, x), a.arrow(y, x2));
                    changed |= p.merge(a.squig(x, y), a.squig(x2, y));
                    changed |= p.merge(a.squig(y, x), a.squig(y, x2));
                }
            }
        }
        if !changed {
            return p.canonical();
        }
    }
}

/// Congruence generated by one pair.
pub fn principal_congruence(a: &Algebra, x: usize, y: usize) -> Partition {
    let mut p = Partition::identity(a.size());
    p.merge(x, y);
    congruence_generated(a, &p.canonical())
}

/// All congruences, from the identity up to the total relation: identity
/// plus the join-closure of the principal congruences. Ordered by
/// decreasing number of blocks, then by block ids.
pub fn all_congruences(a: &Algebra) -> Vec<Partition> {
    let n = a.size();
    let mut found: Vec<Partition> = vec![Partition::identity(n)];
    let mut seen: HashSet<Partition> = found.iter().cloned().collect();
    for x in a.elements() {
        for y in a.elements().filter(|&y| y > x) {
            let p = principal_congruence(a, x, y);
            if seen.insert(p.clone()) {
                found.push(p);
            }
        }
    }
    let principal = found.clone();
    let mut k = 0;
    while k < found.len() {
        for q in &principal {
            let j = congruence_generated(a, &found[k].join(q));
            if seen.insert(j.clone()) {
                found.push(j);
            }
        }
        k += 1;
    }
    sort_partitions(&mut found);
    found
}

fn sort_partitions(ps: &mut [Partition]) {
    ps.sort_by(|p, q| {
        q.block_count()
            .cmp(&p.block_count())
            .then_with(|| p.block_of.cmp(&q.block_of))
    });
}

/// The quotient by a congruence. Blocks are represented by their least
/// element; the unit block takes the unit's name.
pub fn quotient(a: &Algebra, theta: &Partition) -> Result<Algebra> {
    check_congruence(a, theta).map_err(Error::NotACongruence)?;
    let blocks = theta.blocks();
    let reps: Vec<usize> = blocks.iter().map(|b| b.iter().next().unwrap()).collect();
    let ub = theta.block_of(a.unit());
    let names = reps
        .iter()
        .enumerate()
        .map(|(b, &r)| a.name(if b == ub { a.unit() } else { r }).to_string())
        .collect();
    Algebra::from_fns(
        names,
        ub,
        |p, q| theta.block_of(a.arrow(reps[p], reps[q])),
        |p, q| theta.block_of(a.squig(reps[p], reps[q])),
    )
}

/// `[1]_θ`, the block of the unit.
pub fn kernel(a: &Algebra, theta: &Partition) -> Subset {
    theta.block_containing(a.unit())
}

/// Whether the quotient by `theta` is a pseudo-BCI-algebra.
pub fn is_relative(a: &Algebra, theta: &Partition) -> Result<bool> {
    Ok(check_pseudo_bci(&quotient(a, theta)?).passed)
}

pub fn relative_congruences(a: &Algebra) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for p in all_congruences(a) {
        if is_relative(a, &p)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// The least relative congruence above a congruence: blocks identified by
/// antisymmetry in the quotient are merged and the result re-closed.
pub fn relative_closure(a: &Algebra, theta: &Partition) -> Result<Partition> {
    let mut p = congruence_generated(a, theta);
    loop {
        let reps: Vec<usize> = p.blocks().iter().map(|b| b.iter().next().unwrap()).collect();
        let u = p.block_of(a.unit());
        let pair = reps.iter().enumerate().find_map(|(i, &r)| {
            reps[i + 1..]
                .iter()
                .find(|&&s| p.block_of(a.arrow(r, s)) == u && p.block_of(a.arrow(s, r)) == u)
                .map(|&s| (r, s))
        });
        match pair {
            Some((r, s)) => {
                p.merge(r, s);
                p = congruence_generated(a, &p.canonical());
            }
            None => break,
        }
    }
    if !is_relative(a, &p)? {
        return Err(Error::Inconsistent("relative closure is not relative".into()));
    }
    Ok(p)
}

/// Join in the lattice of relative congruences, cross-checked against the
/// congruence of the filter generated by both kernels.
pub fn relative_join(a: &Algebra, phi: &Partition, psi: &Partition) -> Result<Partition> {
    let j = relative_closure(a, &phi.join(psi))?;
    let via_filters = theta_from_filter(a, filter_generated(a, kernel(a, phi).union(kernel(a, psi)))?)?;
    if j != via_filters {
        return Err(Error::Inconsistent(format!(
            "relative join {} differs from the filter route {}",
            j.display_with(a.names()),
            via_filters.display_with(a.names())
        )));
    }
    Ok(j)
}

/// The lattice of relative congruences under refinement. Its joins and
/// meets are checked against [`relative_join`] and intersection.
pub fn relcong_lattice(a: &Algebra) -> Result<FiniteLattice<Partition>> {
    let rel = relative_congruences(a)?;
    let labels = rel.iter().map(|p| p.display_with(a.names())).collect();
    let rel2 = rel.clone();
    let l = FiniteLattice::from_order(rel, labels, |x, y| rel2[x].refines(&rel2[y]))?;
    let el = l.elements();
    for x in 0..l.size() {
        for y in 0..l.size() {
            if el[l.meet(x, y)] != el[x].meet(&el[y]) {
                return Err(Error::Inconsistent("meet of relative congruences is not intersection".into()));
            }
            if el[l.join(x, y)] != relative_join(a, &el[x], &el[y])? {
                return Err(Error::Inconsistent("lattice join differs from the relative join".into()));
            }
        }
    }
    Ok(l)
}

/// Checks that `θ ↦ [1]_θ` is an order isomorphism from the relative
/// congruences onto the filters with inverse `F ↦ θ_F`. Returns, for each
/// relative congruence in [`relcong_lattice`] order, the index of its
/// kernel in `all_filters` order.
pub fn iso_with_filters(a: &Algebra) -> Result<Vec<usize>> {
    let rel = relative_congruences(a)?;
    let filters = all_filters(a)?;
    if rel.len() != filters.len() {
        return Err(Error::Inconsistent(format!(
            "{} relative congruences but {} filters",
            rel.len(),
            filters.len()
        )));
    }
    let mut map = Vec::with_capacity(rel.len());
    for theta in &rel {
        let k = kernel(a, theta);
        let idx = filters
            .iter()
            .position(|&f| f == k)
            .ok_or_else(|| Error::Inconsistent(format!("kernel {} is not a filter", k.display_with(a.names()))))?;
        if &theta_from_filter(a, k)? != theta {
            return Err(Error::Inconsistent(format!(
                "θ of the kernel of {} differs from it",
                theta.display_with(a.names())
            )));
        }
        map.push(idx);
    }
    for (i, p) in rel.iter().enumerate() {
        for (j, q) in rel.iter().enumerate() {
            if p.refines(q) != filters[map[i]].is_subset(filters[map[j]]) {
                return Err(Error::Inconsistent("kernel map is not an order isomorphism".into()));
            }
        }
    }
    Ok(map)
}

/// Whether `(x,1) ∈ θ∘ψ`, read as: some `z` has `x θ z` and `z ψ 1`.
fn composes_to_unit(a: &Algebra, theta: &Partition, psi: &Partition, x: usize) -> bool {
    theta
        .pairs()
        .iter()
        .any(|&(p, z)| p == x && psi.same(z, a.unit()))
}

/// For every `x`: `(x,1) ∈ φ∨ψ` iff `(x,1) ∈ φ∘ψ` iff `(x,1) ∈ ψ∘φ`, with
/// the join taken among relative congruences.
pub fn join_characterization(a: &Algebra, phi: &Partition, psi: &Partition) -> Result<Verdict> {
    let j = relative_join(a, phi, psi)?;
    for x in a.elements() {
        let in_join = j.same(x, a.unit());
        let l = composes_to_unit(a, phi, psi, x);
        let r = composes_to_unit(a, psi, phi, x);
        if in_join != l || in_join != r {
            return Ok(Err(Violation::new(
                "(x,1) ∈ φ∨ψ ⟺ (x,1) ∈ φ∘ψ ⟺ (x,1) ∈ ψ∘φ",
                vec![a.name(x).to_string()],
                format!("join {in_join}, φ∘ψ {l}, ψ∘φ {r}"),
            )));
        }
    }
    Ok(Ok(()))
}
