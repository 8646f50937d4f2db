//! Finite lattices given by an order, with modular, distributive and
//! arguesian identity checks.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::{Verdict, Violation};
use crate::subset::Subset;

/// Default size cap for the arguesian check, which is sextic in the size.
pub const ARGUESIAN_CAP: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice<T> {
    elements: Vec<T>,
    labels: Vec<String>,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl<T> FiniteLattice<T> {
    /// Builds the lattice of `elements` under `leq`, which must be a
    /// partial order with all binary joins and meets.
    pub fn from_order(elements: Vec<T>, labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let m = elements.len();
        if m == 0 || labels.len() != m {
            return Err(Error::Lattice("empty carrier or label mismatch".into()));
        }
        let mut rel = vec![false; m * m];
        for x in 0..m {
            for y in 0..m {
                rel[x * m + y] = leq(x, y);
            }
        }
        let le = |x: usize, y: usize| rel[x * m + y];
        for x in 0..m {
            if !le(x, x) {
                return Err(Error::Lattice(format!("not reflexive at {}", labels[x])));
            }
            for y in 0..m {
                if x != y && le(x, y) && le(y, x) {
                    return Err(Error::Lattice(format!("not antisymmetric at {},{}", labels[x], labels[y])));
                }
                for z in 0..m {
                    if le(x, y) && le(y, z) && !le(x, z) {
                        return Err(Error::Lattice(format!(
                            "not transitive at {},{},{}",
                            labels[x], labels[y], labels[z]
                        )));
                    }
                }
            }
        }
        let bound = |x: usize, y: usize, upper: bool| -> Result<usize> {
            let cands: Vec<usize> = (0..m)
                .filter(|&z| if upper { le(x, z) && le(y, z) } else { le(z, x) && le(z, y) })
                .collect();
            cands
                .iter()
                .copied()
                .find(|&c| cands.iter().all(|&d| if upper { le(c, d) } else { le(d, c) }))
                .ok_or_else(|| {
                    Error::Lattice(format!(
                        "{},{} have no {}",
                        labels[x],
                        labels[y],
                        if upper { "join" } else { "meet" }
                    ))
                })
        };
        let mut join = vec![0; m * m];
        let mut meet = vec![0; m * m];
        for x in 0..m {
            for y in 0..m {
                join[x * m + y] = bound(x, y, true)?;
                meet[x * m + y] = bound(x, y, false)?;
            }
        }
        Ok(FiniteLattice {
            elements,
            labels,
            leq: rel,
            join,
            meet,
        })
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size() + y]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size() + y]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size() + y]
    }

    pub fn top(&self) -> usize {
        (0..self.size()).fold(0, |acc, x| self.join(acc, x))
    }

    pub fn bottom(&self) -> usize {
        (0..self.size()).fold(0, |acc, x| self.meet(acc, x))
    }

    /// Covering pairs `(lower, upper)`.
    pub fn hasse_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.size();
        let lt = |x: usize, y: usize| x != y && self.leq(x, y);
        let mut out = Vec::new();
        for x in 0..m {
            for y in 0..m {
                if lt(x, y) && !(0..m).any(|z| lt(x, z) && lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn witness(&self, law: &str, xs: &[usize]) -> Violation {
        Violation::new(law, xs.iter().map(|&x| self.labels[x].clone()).collect(), String::new())
    }

    /// `x ≤ z ⇒ x∨(y∧z) = (x∨y)∧z`; the first failing `(x,y,z)`.
    pub fn is_modular(&self) -> Verdict {
        let m = self.size();
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if self.leq(x, z) && self.join(x, self.meet(y, z)) != self.meet(self.join(x, y), z) {
                        return Err(self.witness("x≤z ⇒ x∨(y∧z) = (x∨y)∧z", &[x, y, z]));
                    }
                }
            }
        }
        Ok(())
    }

    /// `x∧(y∨z) = (x∧y)∨(x∧z)`; the first failing `(x,y,z)`.
    pub fn is_distributive(&self) -> Verdict {
        let m = self.size();
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)) {
                        return Err(self.witness("x∧(y∨z) = (x∧y)∨(x∧z)", &[x, y, z]));
                    }
                }
            }
        }
        Ok(())
    }

    /// A pentagon sublattice `[bottom, p, q, y, top]` with `p < q`, built
    /// from the first modular-law failure, or `None` for modular lattices.
    pub fn n5_witness(&self) -> Option<[usize; 5]> {
        let m = self.size();
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if !self.leq(x, z) {
                        continue;
                    }
                    let p = self.join(x, self.meet(y, z));
                    let q = self.meet(self.join(x, y), z);
                    if p != q {
                        let five = [self.meet(y, z), p, q, y, self.join(x, y)];
                        debug_assert!(self.is_pentagon(five));
                        return Some(five);
                    }
                }
            }
        }
        None
    }

    /// Whether `[b, p, q, y, t]` are distinct and form a pentagon:
    /// `b < p < q < t`, `b < y < t`, `y` incomparable to `p` and `q`.
    pub fn is_pentagon(&self, [b, p, q, y, t]: [usize; 5]) -> bool {
        let five = [b, p, q, y, t];
        let distinct = (0..5).all(|i| (i + 1..5).all(|j| five[i] != five[j]));
        distinct
            && self.leq(b, p)
            && self.leq(p, q)
            && self.leq(q, t)
            && self.join(p, y) == t
            && self.join(q, y) == t
            && self.meet(p, y) == b
            && self.meet(q, y) == b
    }

    /// The arguesian identity
    /// `(x1∨y1)∧(x2∨y2)∧(x3∨y3) ≤ (x1∧(x2∨z))∨(y1∧(y2∨z))` with
    /// `z = z12∧(z13∨z23)` and `zij = (xi∨xj)∧(yi∨yj)`, over all 6-tuples.
    /// The identity is invariant under swapping every `xi` with `yi`, so
    /// only tuples with `x1 ≤ y1` by index are visited.
    pub fn is_arguesian(&self) -> Result<Verdict>
    where
        T: Sync,
    {
        self.is_arguesian_capped(ARGUESIAN_CAP)
    }

    pub fn is_arguesian_capped(&self, cap: usize) -> Result<Verdict>
    where
        T: Sync,
    {
        let m = self.size();
        if m > cap {
            return Err(Error::SizeCap {
                what: "arguesian check",
                size: m,
                cap,
            });
        }
        let bottom = self.bottom();
        let (j, mt) = (|a, b| self.join(a, b), |a, b| self.meet(a, b));
        let first = (0..m).into_par_iter().find_map_first(|x1| {
            for y1 in x1..m {
                let l1 = j(x1, y1);
                if l1 == bottom {
                    continue;
                }
                for x2 in 0..m {
                    for y2 in 0..m {
                        let l2 = mt(l1, j(x2, y2));
                        if l2 == bottom {
                            continue;
                        }
                        let z12 = mt(j(x1, x2), j(y1, y2));
                        for x3 in 0..m {
                            for y3 in 0..m {
                                let lhs = mt(l2, j(x3, y3));
                                if lhs == bottom {
                                    continue;
                                }
                                let z13 = mt(j(x1, x3), j(y1, y3));
                                let z23 = mt(j(x2, x3), j(y2, y3));
                                let z = mt(z12, j(z13, z23));
                                let rhs = j(mt(x1, j(x2, z)), mt(y1, j(y2, z)));
                                if !self.leq(lhs, rhs) {
                                    return Some([x1, x2, x3, y1, y2, y3]);
                                }
                            }
                        }
                    }
                }
            }
            None
        });
        Ok(match first {
            Some(t) => Err(self.witness(
                "(x1∨y1)∧(x2∨y2)∧(x3∨y3) ≤ (x1∧(x2∨z))∨(y1∧(y2∨z))",
                &t,
            )),
            None => Ok(()),
        })
    }

    /// An order isomorphism onto `other` as `f[x]`, by backtracking.
    pub fn find_isomorphism<U>(&self, other: &FiniteLattice<U>) -> Option<Vec<usize>> {
        let m = self.size();
        if other.size() != m {
            return None;
        }
        let profile = |l: &dyn Fn(usize, usize) -> bool, x: usize| {
            let down = (0..m).filter(|&y| l(y, x)).count();
            let up = (0..m).filter(|&y| l(x, y)).count();
            (down, up)
        };
        let pa: Vec<_> = (0..m).map(|x| profile(&|a, b| self.leq(a, b), x)).collect();
        let pb: Vec<_> = (0..m).map(|x| profile(&|a, b| other.leq(a, b), x)).collect();
        let mut map = vec![usize::MAX; m];
        let mut used = vec![false; m];
        fn go<T, U>(
            k: usize,
            s: &FiniteLattice<T>,
            o: &FiniteLattice<U>,
            pa: &[(usize, usize)],
            pb: &[(usize, usize)],
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let m = s.size();
            if k == m {
                return true;
            }
            for y in 0..m {
                if used[y] || pa[k] != pb[y] {
                    continue;
                }
                let ok = (0..k).all(|x| s.leq(x, k) == o.leq(map[x], y) && s.leq(k, x) == o.leq(y, map[x]));
                if ok {
                    map[k] = y;
                    used[y] = true;
                    if go(k + 1, s, o, pa, pb, map, used) {
                        return true;
                    }
                    used[y] = false;
                }
            }
            map[k] = usize::MAX;
            false
        }
        go(0, self, other, &pa, &pb, &mut map, &mut used).then_some(map)
    }
}

impl FiniteLattice<Subset> {
    /// The lattice of a family of subsets closed under intersection and
    /// containing the union of all members: meet is intersection and join
    /// is the least member containing the union.
    pub fn from_closed_family<S: AsRef<str>>(family: Vec<Subset>, names: &[S]) -> Result<Self> {
        if family.is_empty() {
            return Err(Error::Lattice("empty family".into()));
        }
        let show = |s: Subset| s.display_with(names);
        let top = family.iter().fold(Subset::EMPTY, |acc, &s| acc.union(s));
        if !family.contains(&top) {
            return Err(Error::Lattice(format!("family lacks its union {}", show(top))));
        }
        for &s in &family {
            for &t in &family {
                if !family.contains(&s.intersection(t)) {
                    return Err(Error::Lattice(format!(
                        "family is not closed under intersection: {} ∩ {}",
                        show(s),
                        show(t)
                    )));
                }
            }
        }
        let labels = family.iter().map(|&s| show(s)).collect();
        let fam = family.clone();
        let lattice = FiniteLattice::from_order(family, labels, |x, y| fam[x].is_subset(fam[y]))?;
        for x in 0..lattice.size() {
            for y in 0..lattice.size() {
                let (s, t) = (fam[x], fam[y]);
                if fam[lattice.meet(x, y)] != s.intersection(t) {
                    return Err(Error::Inconsistent("meet is not intersection".into()));
                }
                let least = fam
                    .iter()
                    .filter(|f| s.union(t).is_subset(**f))
                    .min_by_key(|f| f.len())
                    .copied();
                if least != Some(fam[lattice.join(x, y)]) {
                    return Err(Error::Inconsistent("join is not the least member above the union".into()));
                }
            }
        }
        Ok(lattice)
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.elements.iter().position(|&e| e == s)
    }
}

/// Whether the members of `sub` are members of `sup` with the same joins
/// and meets. Fails if some member of `sub` is missing from `sup`.
pub fn is_sublattice(sub: &FiniteLattice<Subset>, sup: &FiniteLattice<Subset>) -> Result<bool> {
    let pos: Vec<usize> = sub
        .elements()
        .iter()
        .map(|&s| {
            sup.index_of(s)
                .ok_or_else(|| Error::Lattice(format!("{} is not in the larger lattice", sub.labels[sub.index_of(s).unwrap()])))
        })
        .collect::<Result<_>>()?;
    let m = sub.size();
    Ok((0..m).all(|x| {
        (0..m).all(|y| {
            pos[sub.join(x, y)] == sup.join(pos[x], pos[y]) && pos[sub.meet(x, y)] == sup.meet(pos[x], pos[y])
        })
    }))
}
