//! Integral part, group part, the retractions onto the group part, and the
//! product and union constructions.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::report::Violation;
use crate::subset::{Subset, MAX_ELEMENTS};

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Group {
    names: Vec<String>,
    unit: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
}

impl Group {
    /// Validates a row-major multiplication table and builds the group.
    pub fn new(names: Vec<String>, mult: Vec<usize>) -> Result<Group> {
        let n = names.len();
        let not_group = |law: &str, w: &[usize], detail: String| {
            Error::NotAGroup(Violation::new(
                law,
                w.iter().map(|&i| names[i].clone()).collect(),
                detail,
            ))
        };
        if n == 0 || mult.len() != n * n || mult.iter().any(|&v| v >= n) {
            return Err(Error::NotAGroup(Violation::new(
                "closed table",
                vec![],
                "table is not a total operation on the carrier",
            )));
        }
        let m = |x: usize, y: usize| mult[x * n + y];
        let unit = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| not_group("identity exists", &[], "no two-sided identity".into()))?;
        let inv = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| m(x, y) == unit && m(y, x) == unit)
                    .ok_or_else(|| not_group("inverses exist", &[x], "no inverse".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(not_group("(xy)z = x(yz)", &[x, y, z], String::new()));
                    }
                }
            }
        }
        Ok(Group {
            names,
            unit,
            mult,
            inv,
        })
    }

    /// The cyclic group of order `n`, elements `1, g, g2, …`.
    pub fn cyclic(n: usize) -> Group {
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                k => format!("g{k}"),
            })
            .collect();
        let mult = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Group::new(names, mult).expect("cyclic group")
    }

    /// The dihedral group of order `2m` from `r^m = s^2 = 1`, `srs = r⁻¹`:
    /// elements `r^i s^j` multiply as `r^(i + (-1)^j k) s^(j+l)`.
    pub fn dihedral(m: usize) -> Group {
        let n = 2 * m;
        let name = |i: usize, j: usize| {
            let r = match i {
                0 => String::new(),
                1 => "r".to_string(),
                i => format!("r{i}"),
            };
            match (r.is_empty(), j) {
                (true, 0) => "1".to_string(),
                (false, 0) => r,
                (_, _) => format!("{r}s"),
            }
        };
        let names = (0..n).map(|e| name(e % m, e / m)).collect();
        let mult = (0..n * n)
            .map(|idx| {
                let (x, y) = (idx / n, idx % n);
                let (i, j) = (x % m, x / m);
                let (k, l) = (y % m, y / m);
                let r = if j == 0 { (i + k) % m } else { (i + m - k) % m };
                r + ((j + l) % 2) * m
            })
            .collect();
        Group::new(names, mult).expect("dihedral group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mult[x * self.order() + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.mult
    }

    /// Closed under products and containing the identity; for finite
    /// groups this is exactly being a subgroup.
    pub fn is_subgroup(&self, s: Subset) -> bool {
        s.contains(self.unit) && s.iter().all(|x| s.iter().all(|y| s.contains(self.mul(x, y))))
    }

    pub fn is_normal(&self, s: Subset) -> bool {
        self.is_subgroup(s)
            && (0..self.order())
                .all(|g| s.iter().all(|h| s.contains(self.mul(self.mul(g, h), self.inv(g)))))
    }

    /// All subgroups by scanning subsets; for group orders up to 20.
    pub fn subgroups(&self) -> Result<Vec<Subset>> {
        self.scan(|s| self.is_subgroup(s))
    }

    pub fn normal_subgroups(&self) -> Result<Vec<Subset>> {
        self.scan(|s| self.is_normal(s))
    }

    fn scan(&self, keep: impl Fn(Subset) -> bool) -> Result<Vec<Subset>> {
        let n = self.order();
        if n > 20 {
            return Err(Error::SizeCap {
                what: "subgroup scan",
                size: n,
                cap: 20,
            });
        }
        let mut out: Vec<Subset> = (0u64..1 << n)
            .map(Subset)
            .filter(|&s| keep(s))
            .collect();
        crate::subset::sort_family(&mut out);
        Ok(out)
    }
}

/// The pseudo-BCI-algebra of a group: `g→h = h·g⁻¹`, `g⇝h = g⁻¹·h`.
pub fn group_to_algebra(g: &Group) -> Algebra {
    Algebra::from_fns(
        g.names().to_vec(),
        g.unit(),
        |x, y| g.mul(y, g.inv(x)),
        |x, y| g.mul(g.inv(x), y),
    )
    .expect("group tables are total")
}

/// Builds a group from a table and converts it; fails with the group-axiom
/// witness if the table is not a group.
pub fn table_to_algebra(names: Vec<String>, mult: Vec<usize>) -> Result<Algebra> {
    Ok(group_to_algebra(&Group::new(names, mult)?))
}

/// `I_A = {x : x ≤ 1}`.
pub fn integral_part(a: &Algebra) -> Subset {
    a.elements().filter(|&x| a.leq(x, a.unit())).collect()
}

/// `G_A = {x→1 : x ∈ A}`.
pub fn group_part(a: &Algebra) -> Subset {
    a.elements().map(|x| a.arrow(x, a.unit())).collect()
}

/// `G_A = A`.
pub fn is_p_semisimple(a: &Algebra) -> bool {
    group_part(a) == a.full_set()
}

/// `(x→1)→1`.
pub fn delta_of(a: &Algebra, x: usize) -> usize {
    a.arrow(a.arrow(x, a.unit()), a.unit())
}

/// `((x→1)→1)→x`, always in the integral part.
pub fn integral_residue(a: &Algebra, x: usize) -> usize {
    a.arrow(delta_of(a, x), x)
}

/// The group part as a group under `g·h = (g→1)⇝h`. Element `i` of
/// `group` is element `members[i]` of the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupView {
    pub members: Vec<usize>,
    pub group: Group,
}

impl GroupView {
    pub fn position(&self, x: usize) -> Option<usize> {
        self.members.iter().position(|&m| m == x)
    }

    /// `g·h` on algebra elements.
    pub fn mul(&self, g: usize, h: usize) -> usize {
        let (i, j) = (self.position(g).unwrap(), self.position(h).unwrap());
        self.members[self.group.mul(i, j)]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.members[self.group.inv(self.position(g).unwrap())]
    }

    pub fn subset(&self) -> Subset {
        self.members.iter().copied().collect()
    }
}

/// Recovers the group on `G_A` and verifies the group axioms, the recovery
/// identities `g→h = h·g⁻¹`, `g⇝h = g⁻¹·h`, `g⁻¹ = g→1`, and that inversion
/// is an isomorphism from the group-part subalgebra onto its dagger.
pub fn group_view(a: &Algebra) -> Result<GroupView> {
    let members: Vec<usize> = group_part(a).iter().collect();
    let pos = |x: usize| members.iter().position(|&m| m == x);
    let u = a.unit();
    let mut mult = Vec::with_capacity(members.len() * members.len());
    for &g in &members {
        for &h in &members {
            let gh = a.squig(a.arrow(g, u), h);
            mult.push(pos(gh).ok_or_else(|| {
                Error::Inconsistent(format!(
                    "{}·{} = {} leaves the group part",
                    a.name(g),
                    a.name(h),
                    a.name(gh)
                ))
            })?);
        }
    }
    let names = members.iter().map(|&m| a.name(m).to_string()).collect();
    let group = Group::new(names, mult).map_err(|e| Error::Inconsistent(e.to_string()))?;
    let view = GroupView { members, group };

    for &g in &view.members {
        if view.inv(g) != a.arrow(g, u) || view.inv(g) != a.squig(g, u) {
            return Err(Error::Inconsistent(format!("inverse of {} is not {}→1", a.name(g), a.name(g))));
        }
        for &h in &view.members {
            if a.arrow(g, h) != view.mul(h, view.inv(g)) || a.squig(g, h) != view.mul(view.inv(g), h) {
                return Err(Error::Inconsistent(format!(
                    "arrows on {},{} not recovered from the group",
                    a.name(g),
                    a.name(h)
                )));
            }
            let (gi, hi) = (view.inv(g), view.inv(h));
            if view.inv(a.arrow(g, h)) != a.squig(gi, hi) || view.inv(a.squig(g, h)) != a.arrow(gi, hi) {
                return Err(Error::Inconsistent(format!(
                    "inversion is not an isomorphism onto the dagger at {},{}",
                    a.name(g),
                    a.name(h)
                )));
            }
        }
    }
    Ok(view)
}

/// A verified homomorphism onto the group part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomomorphismWitness {
    pub map: Vec<usize>,
    pub image: Subset,
    pub kernel: Subset,
    /// The codomain is the group part with its two arrows swapped.
    pub onto_dagger: bool,
}

fn homomorphism(a: &Algebra, map: Vec<usize>, onto_dagger: bool, label: &str) -> Result<HomomorphismWitness> {
    let u = a.unit();
    if map[u] != u {
        return Err(Error::Inconsistent(format!("{label} does not fix 1")));
    }
    for x in a.elements() {
        for y in a.elements() {
            let (fx, fy) = (map[x], map[y]);
            let (t_arrow, t_squig) = if onto_dagger {
                (a.squig(fx, fy), a.arrow(fx, fy))
            } else {
                (a.arrow(fx, fy), a.squig(fx, fy))
            };
            if map[a.arrow(x, y)] != t_arrow || map[a.squig(x, y)] != t_squig {
                return Err(Error::Inconsistent(format!(
                    "{label} is not a homomorphism at {},{}",
                    a.name(x),
                    a.name(y)
                )));
            }
        }
    }
    let image = map.iter().copied().collect();
    let kernel = a.elements().filter(|&x| map[x] == u).collect();
    Ok(HomomorphismWitness {
        map,
        image,
        kernel,
        onto_dagger,
    })
}

/// `x ↦ x→1`, a homomorphism onto the dagger of the group part.
pub fn gamma(a: &Algebra) -> Result<HomomorphismWitness> {
    let map = a.elements().map(|x| a.arrow(x, a.unit())).collect();
    homomorphism(a, map, true, "x ↦ x→1")
}

/// `x ↦ (x→1)→1`, a homomorphism onto the group part.
pub fn delta(a: &Algebra) -> Result<HomomorphismWitness> {
    let map = a.elements().map(|x| delta_of(a, x)).collect();
    homomorphism(a, map, false, "x ↦ (x→1)→1")
}

/// Componentwise product; element `(x,y)` sits at `x·|B| + y`.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    direct_product_capped(a, b, MAX_ELEMENTS)
}

pub fn direct_product_capped(a: &Algebra, b: &Algebra, cap: usize) -> Result<Algebra> {
    let (na, nb) = (a.size(), b.size());
    let size = na * nb;
    let cap = cap.min(MAX_ELEMENTS);
    if size > cap {
        return Err(Error::SizeCap {
            what: "direct product",
            size,
            cap,
        });
    }
    let names = (0..size)
        .map(|i| format!("({},{})", a.name(i / nb), b.name(i % nb)))
        .collect();
    let pair = |x: usize, y: usize| x * nb + y;
    Algebra::from_fns(
        names,
        pair(a.unit(), b.unit()),
        |p, q| pair(a.arrow(p / nb, q / nb), b.arrow(p % nb, q % nb)),
        |p, q| pair(a.squig(p / nb, q / nb), b.squig(p % nb, q % nb)),
    )
}

/// `B ∪ H` for a pseudo-BCK-algebra `B` and a group `H` sharing only the
/// unit: operations inside `B` or inside `H` are kept, `x◇y = y` for
/// `x ∈ B, y ∈ H`, and `x◇y = x⁻¹` for `x ∈ H∖{1}, y ∈ B`.
///
/// Non-unit elements of `H` come after those of `B`. With `rename`, names
/// of `H` that clash with names of `B` get primes appended; otherwise a
/// clash is an error.
pub fn union_construction(b: &Algebra, h: &Group, rename: bool) -> Result<Algebra> {
    let nb = b.size();
    let hs: Vec<usize> = (0..h.order()).filter(|&g| g != h.unit()).collect();
    let size = nb + hs.len();
    if size > MAX_ELEMENTS {
        return Err(Error::SizeCap {
            what: "union",
            size,
            cap: MAX_ELEMENTS,
        });
    }
    let mut names: Vec<String> = b.names().to_vec();
    for &g in &hs {
        let mut name = h.name(g).to_string();
        while names.contains(&name) {
            if !rename {
                return Err(Error::NameClash(name));
            }
            name.push('\'');
        }
        names.push(name);
    }

    let u = b.unit();
    let in_b = |k: usize| k < nb;
    let in_h = |k: usize| k == u || k >= nb;
    let to_h = |k: usize| if k == u { h.unit() } else { hs[k - nb] };
    let from_h = |g: usize| {
        if g == h.unit() {
            u
        } else {
            nb + hs.iter().position(|&x| x == g).unwrap()
        }
    };
    let op = |x: usize, y: usize, squig: bool| {
        if in_b(x) && in_b(y) {
            if squig {
                b.squig(x, y)
            } else {
                b.arrow(x, y)
            }
        } else if in_h(x) && in_h(y) {
            let (g, k) = (to_h(x), to_h(y));
            from_h(if squig {
                h.mul(h.inv(g), k)
            } else {
                h.mul(k, h.inv(g))
            })
        } else if in_b(x) {
            y
        } else {
            from_h(h.inv(to_h(x)))
        }
    };
    Algebra::from_fns(names, u, |x, y| op(x, y, false), |x, y| op(x, y, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_pseudo_bci, check_pseudo_bck};
    use crate::library::{chain2, ex6, trivial};

    fn names(a: &Algebra, s: Subset) -> String {
        s.display_with(a.names())
    }

    #[test]
    fn parts_of_ex6() {
        let a = ex6();
        assert_eq!(names(&a, integral_part(&a)), "{a,b,1}");
        assert_eq!(names(&a, group_part(&a)), "{g,1}");
        assert!(!is_p_semisimple(&a));
    }

    #[test]
    fn parts_of_chain_and_groups() {
        let c = chain2();
        assert_eq!(integral_part(&c), c.full_set());
        assert_eq!(group_part(&c), Subset::singleton(c.unit()));
        let z3 = group_to_algebra(&Group::cyclic(3));
        assert_eq!(integral_part(&z3), Subset::singleton(z3.unit()));
        assert!(is_p_semisimple(&z3));
    }

    #[test]
    fn group_view_of_ex6_is_z2() {
        let a = ex6();
        let v = group_view(&a).unwrap();
        let g = a.index_of("g").unwrap();
        assert_eq!(v.mul(g, g), a.unit());
        assert_eq!(v.group.order(), 2);
    }

    #[test]
    fn z4_round_trip() {
        let z4 = Group::cyclic(4);
        let a = group_to_algebra(&z4);
        assert!(check_pseudo_bci(&a).passed);
        let v = group_view(&a).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(v.mul(x, y), z4.mul(x, y));
            }
        }
    }

    #[test]
    fn trivial_group_view() {
        let v = group_view(&trivial()).unwrap();
        assert_eq!(v.group.order(), 1);
    }

    #[test]
    fn gamma_delta_on_ex6() {
        let a = ex6();
        let i = |n: &str| a.index_of(n).unwrap();
        let gm = gamma(&a).unwrap();
        let dl = delta(&a).unwrap();
        assert_eq!(gm.map[i("a")], i("1"));
        assert_eq!(gm.map[i("x")], i("g"));
        assert_eq!(dl.map[i("x")], i("g"));
        assert_eq!(gm.kernel, integral_part(&a));
        assert_eq!(dl.kernel, integral_part(&a));
        assert_eq!(dl.image, group_part(&a));
    }

    #[test]
    fn integral_residue_of_ex6() {
        let a = ex6();
        let i = |n: &str| a.index_of(n).unwrap();
        assert_eq!(integral_residue(&a, i("x")), i("b"));
        assert_eq!(integral_residue(&a, a.unit()), a.unit());
    }

    #[test]
    fn dihedral_group() {
        let d4 = Group::dihedral(4);
        assert_eq!(d4.order(), 8);
        let r = d4.names().iter().position(|n| n == "r").unwrap();
        let s = d4.names().iter().position(|n| n == "s").unwrap();
        // srs = r⁻¹
        assert_eq!(d4.mul(d4.mul(s, r), s), d4.inv(r));
        assert_eq!(d4.subgroups().unwrap().len(), 10);
        assert_eq!(d4.normal_subgroups().unwrap().len(), 6);
        let a = group_to_algebra(&d4);
        assert!(check_pseudo_bci(&a).passed);
        assert!(is_p_semisimple(&a));
    }

    #[test]
    fn non_group_table_rejected() {
        let names = vec!["e".to_string(), "a".to_string()];
        let err = table_to_algebra(names, vec![0, 1, 1, 1]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn product_parts() {
        let z2 = group_to_algebra(&Group::cyclic(2));
        let p = direct_product(&chain2(), &z2).unwrap();
        assert!(check_pseudo_bci(&p).passed);
        assert_eq!(names(&p, integral_part(&p)), "{(0,1),(1,1)}");
        assert_eq!(names(&p, group_part(&p)), "{(1,1),(1,g)}");
        assert!(direct_product_capped(&p, &p, 8).is_err());
    }

    #[test]
    fn unions() {
        let z2 = Group::cyclic(2);
        let u = union_construction(&trivial(), &z2, true).unwrap();
        assert!(crate::iso::find_isomorphism(&u, &group_to_algebra(&z2)).is_some());

        let u = union_construction(&chain2(), &z2, true).unwrap();
        assert_eq!(u.size(), 3);
        assert!(check_pseudo_bci(&u).passed);
        assert_eq!(names(&u, integral_part(&u)), "{0,1}");
        assert_eq!(names(&u, group_part(&u)), "{1,g}");

        let u = union_construction(&chain2(), &Group::cyclic(3), true).unwrap();
        assert_eq!(u.size(), 4);
        assert!(check_pseudo_bci(&u).passed);

        // trivial group leaves B unchanged and pseudo-BCK
        let u = union_construction(&chain2(), &Group::cyclic(1), true).unwrap();
        assert_eq!(u, chain2());
        assert!(check_pseudo_bck(&u).passed);
    }

    #[test]
    fn union_name_clash() {
        let b = Algebra::from_rows(&["g", "1"], "1", &["1 1", "g 1"], &["1 1", "g 1"]).unwrap();
        let z2 = Group::cyclic(2);
        assert!(matches!(union_construction(&b, &z2, false), Err(Error::NameClash(_))));
        let u = union_construction(&b, &z2, true).unwrap();
        assert_eq!(u.names(), &["g", "1", "g'"]);
    }
}
