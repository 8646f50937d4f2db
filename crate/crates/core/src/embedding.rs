//! Embedding a pseudo-BCI-algebra into the arrow reduct of a semi-integral
//! residuated po-monoid.
//!
//! The word images `J(α) = {x : α→x = 1}` form a po-monoid under inclusion
//! with `J(α)*J(β) = J(αβ)`. Its nonempty order filters lying above a single
//! minimal element form a residuated po-monoid `F`, and `x ↦ [J(x))` embeds
//! the algebra into `F`.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{word_arrow, word_squig, Algebra};
use crate::error::{Error, Result};
use crate::report::{run_laws, Domain, Law, Named, VerificationReport, Violation};
use crate::structure::{group_part, group_view};
use crate::subset::Subset;
use crate::term::{Op, Operations};

/// Largest word-image monoid passed on to the order-filter construction.
pub const J_CAP: usize = 18;
/// Largest residuated po-monoid built from order filters.
pub const F_CAP: usize = 512;

/// `J(α)` with one shortest word `α` producing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordImageSet {
    pub set: Subset,
    pub rep: Vec<usize>,
}

/// `{x : α→x = 1}`.
pub fn image_set(a: &Algebra, word: &[usize]) -> Result<Subset> {
    let mut s = Subset::EMPTY;
    for x in a.elements() {
        if word_arrow(a, word, x)? == a.unit() {
            s.insert(x);
        }
    }
    Ok(s)
}

/// `J(α)*J(β) = J(αβ)`, evaluated from the concatenated word and checked
/// against `{x : β→x ∈ J(α)}` and `{x : α⇝x ∈ J(β)}`, each of which
/// depends on only one of the two representatives.
pub fn monoid_product(a: &Algebra, s: &WordImageSet, t: &WordImageSet) -> Result<WordImageSet> {
    let rep: Vec<usize> = s.rep.iter().chain(&t.rep).copied().collect();
    let direct = image_set(a, &rep)?;
    let mut via_right = Subset::EMPTY;
    let mut via_left = Subset::EMPTY;
    for x in a.elements() {
        if s.set.contains(word_arrow(a, &t.rep, x)?) {
            via_right.insert(x);
        }
        if t.set.contains(word_squig(a, &s.rep, x)?) {
            via_left.insert(x);
        }
    }
    if direct != via_right || direct != via_left {
        return Err(Error::Inconsistent(format!(
            "J-product of {} and {} depends on the representatives",
            s.set.display_with(a.names()),
            t.set.display_with(a.names())
        )));
    }
    Ok(WordImageSet { set: direct, rep })
}

/// A finite po-monoid whose minimal elements carry a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderedMonoid {
    pub elements: Vec<WordImageSet>,
    pub labels: Vec<String>,
    star: Vec<usize>,
    pub unit: usize,
    /// Minimal elements, in the order of the group-part elements they hold.
    pub minimals: Vec<usize>,
    /// Group product on positions in `minimals`.
    group: Vec<usize>,
}

impl OrderedMonoid {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].set.is_subset(self.elements[j].set)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.star[i * self.size() + j]
    }

    /// Group product of the minimal elements `minimals[p]` and `minimals[q]`.
    pub fn group_mul(&self, p: usize, q: usize) -> usize {
        self.minimals[self.group[p * self.minimals.len() + q]]
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.elements.iter().position(|e| e.set == s)
    }

    /// Elements that are minimal under inclusion.
    pub fn order_minimal(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| !(0..self.size()).any(|j| j != i && self.leq(j, i)))
            .collect()
    }

    fn up_set(&self, i: usize) -> Subset {
        (0..self.size()).filter(|&j| self.leq(i, j)).collect()
    }
}

/// The word-image po-monoid of `a`, closed from single-letter words.
/// Elements are listed in canonical subset order.
pub fn build_j(a: &Algebra) -> Result<OrderedMonoid> {
    let mut found: Vec<WordImageSet> = Vec::new();
    for x in a.elements() {
        let w = WordImageSet {
            set: image_set(a, &[x])?,
            rep: vec![x],
        };
        if !found.iter().any(|f| f.set == w.set) {
            found.push(w);
        }
    }
    let letters = found.clone();
    let mut k = 0;
    while k < found.len() {
        for l in &letters {
            let p = monoid_product(a, &found[k], l)?;
            if !found.iter().any(|f| f.set == p.set) {
                found.push(p);
            }
        }
        k += 1;
    }
    found.sort_by(|x, y| x.set.canonical_cmp(&y.set));
    let m = found.len();
    let pos: HashMap<Subset, usize> = found.iter().enumerate().map(|(i, w)| (w.set, i)).collect();
    let mut star = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            let p = monoid_product(a, &found[i], &found[j])?;
            star[i * m + j] = *pos.get(&p.set).ok_or_else(|| {
                Error::Inconsistent("word images are not closed under products".into())
            })?;
        }
    }
    let unit = pos[&Subset::singleton(a.unit())];

    let view = group_view(a)?;
    let minimals: Vec<usize> = view
        .members
        .iter()
        .map(|&g| {
            pos.get(&Subset::singleton(g))
                .copied()
                .ok_or_else(|| Error::Inconsistent(format!("J({}) is not {{{}}}", a.name(g), a.name(g))))
        })
        .collect::<Result<_>>()?;
    let ng = minimals.len();
    let group = (0..ng * ng).map(|i| view.group.mul(i / ng, i % ng)).collect();
    let labels = found.iter().map(|w| w.set.display_with(a.names())).collect();
    let j = OrderedMonoid {
        elements: found,
        labels,
        star,
        unit,
        minimals,
        group,
    };
    verify_j(a, &j)?;
    Ok(j)
}

fn verify_j(a: &Algebra, j: &OrderedMonoid) -> Result<()> {
    let bad = |m: String| Err(Error::Inconsistent(m));
    let m = j.size();
    let g = group_part(a);
    for (i, w) in j.elements.iter().enumerate() {
        let delta = a.arrow(word_arrow(a, &w.rep, a.unit())?, a.unit());
        if w.set.intersection(g) != Subset::singleton(delta) {
            return bad(format!("{} does not meet the group part in exactly (α→1)→1", j.labels[i]));
        }
        if j.mul(j.unit, i) != i || j.mul(i, j.unit) != i {
            return bad(format!("{{1}} is not a unit at {}", j.labels[i]));
        }
        for k in 0..m {
            for l in 0..m {
                if j.mul(j.mul(i, k), l) != j.mul(i, j.mul(k, l)) {
                    return bad("word-image product is not associative".into());
                }
                if j.leq(k, l) && !(j.leq(j.mul(i, k), j.mul(i, l)) && j.leq(j.mul(k, i), j.mul(l, i))) {
                    return bad("word-image product is not monotone".into());
                }
            }
        }
    }
    for x in a.elements() {
        let jx = image_set(a, &[x])?;
        let up: Subset = a.elements().filter(|&y| a.leq(x, y)).collect();
        if jx != up {
            return bad(format!("J({}) is not the up-set of {}", a.name(x), a.name(x)));
        }
    }
    let mut mins = j.order_minimal();
    let mut expected = j.minimals.clone();
    mins.sort_unstable();
    expected.sort_unstable();
    if mins != expected {
        return bad("minimal word images are not the group-part singletons".into());
    }
    Ok(())
}

/// A semi-integral residuated po-monoid on `0..n` with explicit order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResiduatedPoMonoid {
    pub labels: Vec<String>,
    leq: Vec<bool>,
    prod: Vec<usize>,
    res_l: Vec<usize>,
    res_r: Vec<usize>,
    pub unit: usize,
}

impl ResiduatedPoMonoid {
    /// Assembles a structure from tables without checking it; see
    /// [`check_residuated_pomonoid`].
    pub fn from_tables(
        labels: Vec<String>,
        leq: Vec<bool>,
        prod: Vec<usize>,
        res_l: Vec<usize>,
        res_r: Vec<usize>,
        unit: usize,
    ) -> Result<Self> {
        let n = labels.len();
        let ok = n > 0
            && unit < n
            && leq.len() == n * n
            && [&prod, &res_l, &res_r].iter().all(|t| t.len() == n * n && t.iter().all(|&v| v < n));
        if !ok {
            return Err(Error::Malformed("residuated po-monoid tables do not match the carrier".into()));
        }
        Ok(ResiduatedPoMonoid {
            labels,
            leq,
            prod,
            res_l,
            res_r,
            unit,
        })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size() + y]
    }

    pub fn prod(&self, x: usize, y: usize) -> usize {
        self.prod[x * self.size() + y]
    }

    /// `x→y`
    pub fn res_l(&self, x: usize, y: usize) -> usize {
        self.res_l[x * self.size() + y]
    }

    /// `x⇝y`
    pub fn res_r(&self, x: usize, y: usize) -> usize {
        self.res_r[x * self.size() + y]
    }

    pub fn set_prod(&mut self, x: usize, y: usize, v: usize) {
        let n = self.size();
        self.prod[x * n + y] = v;
    }

    /// The unit is maximal.
    pub fn is_semi_integral(&self) -> bool {
        (0..self.size()).all(|x| !self.leq(self.unit, x) || x == self.unit)
    }

    /// The unit is the greatest element.
    pub fn is_integral(&self) -> bool {
        (0..self.size()).all(|x| self.leq(x, self.unit))
    }

    /// The `{→, ⇝, 1}` reduct as an algebra with the given element names.
    pub fn arrow_reduct(&self, names: Vec<String>) -> Result<Algebra> {
        Algebra::from_fns(names, self.unit, |x, y| self.res_l(x, y), |x, y| self.res_r(x, y))
    }
}

impl Named for ResiduatedPoMonoid {
    fn size(&self) -> usize {
        self.labels.len()
    }
    fn element_name(&self, x: usize) -> &str {
        &self.labels[x]
    }
}

impl Operations for ResiduatedPoMonoid {
    fn carrier_size(&self) -> usize {
        self.size()
    }
    fn unit_element(&self) -> usize {
        self.unit
    }
    fn apply(&self, op: Op, x: usize, y: usize) -> Option<usize> {
        Some(match op {
            Op::Arrow => self.res_l(x, y),
            Op::Squig => self.res_r(x, y),
            Op::Product => self.prod(x, y),
        })
    }
    fn label(&self, x: usize) -> String {
        self.labels[x].clone()
    }
}

type R = ResiduatedPoMonoid;

fn is_one(r: &R, v: usize) -> Option<String> {
    (v != r.unit).then(|| format!("{} ≠ 1", r.labels[v]))
}

fn same(r: &R, l: usize, rhs: usize) -> Option<String> {
    (l != rhs).then(|| format!("{} ≠ {}", r.labels[l], r.labels[rhs]))
}

const ALL3: &[Domain] = &[Domain::All, Domain::All, Domain::All];
const ALL2: &[Domain] = &[Domain::All, Domain::All];
const ALL1: &[Domain] = &[Domain::All];

/// Identities and the quasi-identity of the arrow axiomatisation, with the
/// order read off the tables.
fn axiom_laws() -> Vec<Law<R>> {
    vec![
        Law {
            name: "(x→y)⇝((y→z)⇝(x→z)) = 1",
            domains: ALL3,
            check: |r, v| is_one(r, r.res_r(r.res_l(v[0], v[1]), r.res_r(r.res_l(v[1], v[2]), r.res_l(v[0], v[2])))),
        },
        Law {
            name: "(x⇝y)→((y⇝z)→(x⇝z)) = 1",
            domains: ALL3,
            check: |r, v| is_one(r, r.res_l(r.res_r(v[0], v[1]), r.res_l(r.res_r(v[1], v[2]), r.res_r(v[0], v[2])))),
        },
        Law {
            name: "1→x = x",
            domains: ALL1,
            check: |r, v| same(r, r.res_l(r.unit, v[0]), v[0]),
        },
        Law {
            name: "1⇝x = x",
            domains: ALL1,
            check: |r, v| same(r, r.res_r(r.unit, v[0]), v[0]),
        },
        Law {
            name: "(x·y)→z = x→(y→z)",
            domains: ALL3,
            check: |r, v| same(r, r.res_l(r.prod(v[0], v[1]), v[2]), r.res_l(v[0], r.res_l(v[1], v[2]))),
        },
        Law {
            name: "x→y = 1 & y→x = 1 ⇒ x = y",
            domains: ALL2,
            check: |r, v| {
                (v[0] != v[1] && r.res_l(v[0], v[1]) == r.unit && r.res_l(v[1], v[0]) == r.unit)
                    .then(|| "distinct elements identified".to_string())
            },
        },
        Law {
            name: "x ≤ y ⟺ x→y = 1",
            domains: ALL2,
            check: |r, v| {
                (r.leq(v[0], v[1]) != (r.res_l(v[0], v[1]) == r.unit)).then(|| "order and arrow disagree".to_string())
            },
        },
    ]
}

/// Partial order, monoid laws, residuation law and maximality of the unit,
/// checked directly.
fn residuation_laws() -> Vec<Law<R>> {
    vec![
        Law {
            name: "≤ is a partial order",
            domains: ALL3,
            check: |r, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                let bad = !r.leq(x, x)
                    || (x != y && r.leq(x, y) && r.leq(y, x))
                    || (r.leq(x, y) && r.leq(y, z) && !r.leq(x, z));
                bad.then(|| "reflexivity, antisymmetry or transitivity fails".to_string())
            },
        },
        Law {
            name: "(x·y)·z = x·(y·z)",
            domains: ALL3,
            check: |r, v| same(r, r.prod(r.prod(v[0], v[1]), v[2]), r.prod(v[0], r.prod(v[1], v[2]))),
        },
        Law {
            name: "1·x = x = x·1",
            domains: ALL1,
            check: |r, v| same(r, r.prod(r.unit, v[0]), v[0]).or_else(|| same(r, r.prod(v[0], r.unit), v[0])),
        },
        Law {
            name: "x ≤ y→z ⟺ x·y ≤ z",
            domains: ALL3,
            check: |r, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                (r.leq(x, r.res_l(y, z)) != r.leq(r.prod(x, y), z)).then(|| "residuation fails".to_string())
            },
        },
        Law {
            name: "x ≤ y⇝z ⟺ y·x ≤ z",
            domains: ALL3,
            check: |r, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                (r.leq(x, r.res_r(y, z)) != r.leq(r.prod(y, x), z)).then(|| "residuation fails".to_string())
            },
        },
        Law {
            name: "1 ≤ x ⇒ x = 1",
            domains: ALL1,
            check: |r, v| (r.leq(r.unit, v[0]) && v[0] != r.unit).then(|| "unit is not maximal".to_string()),
        },
    ]
}

/// Outcome of checking a residuated po-monoid by two independent routes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResiduatedCheck {
    pub axioms: VerificationReport,
    pub residuation: VerificationReport,
    pub semi_integral: bool,
    pub integral: bool,
}

impl ResiduatedCheck {
    pub fn routes_agree(&self) -> bool {
        self.axioms.passed == self.residuation.passed
    }

    pub fn passed(&self) -> bool {
        self.axioms.passed && self.residuation.passed
    }

    /// Both routes merged, with an extra violation if they disagree.
    pub fn report(&self) -> VerificationReport {
        let mut r = self.axioms.clone().merge(self.residuation.clone(), usize::MAX);
        if !self.routes_agree() {
            r = r.merge(
                VerificationReport::from_violations(vec![Violation::new(
                    "arrow axioms ⟺ residuation law",
                    vec![],
                    "the two routes disagree",
                )]),
                usize::MAX,
            );
        }
        r
    }
}

/// Checks `r` through the arrow axioms (with `(x·y)→z = x→(y→z)`) and
/// through the residuation law directly.
pub fn check_residuated_pomonoid(r: &ResiduatedPoMonoid) -> ResiduatedCheck {
    let all = |_: Domain| (0..r.size()).collect::<Vec<_>>();
    ResiduatedCheck {
        axioms: run_laws(r, &axiom_laws(), all, usize::MAX),
        residuation: run_laws(r, &residuation_laws(), all, usize::MAX),
        semi_integral: r.is_semi_integral(),
        integral: r.is_integral(),
    }
}

/// `F` over a po-monoid: elements are nonempty order filters (as sets of
/// monoid indices) each inside the up-set of one minimal element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterMonoid {
    pub filters: Vec<Subset>,
    pub structure: ResiduatedPoMonoid,
}

impl FilterMonoid {
    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.filters.iter().position(|&f| f == s)
    }
}

fn check_hypotheses(m: &OrderedMonoid) -> Result<()> {
    let mins = m.order_minimal();
    if !mins.contains(&m.unit) {
        return Err(Error::Hypothesis("the monoid unit is not minimal".into()));
    }
    let mut sorted = m.minimals.clone();
    sorted.sort_unstable();
    if sorted != mins {
        return Err(Error::Hypothesis("the group carrier is not the set of minimal elements".into()));
    }
    for i in 0..m.size() {
        let below = mins.iter().filter(|&&g| m.leq(g, i)).count();
        if below != 1 {
            return Err(Error::Hypothesis(format!(
                "{} lies above {below} minimal elements",
                m.labels[i]
            )));
        }
    }
    let ng = m.minimals.len();
    for p in 0..ng {
        for q in 0..ng {
            let gh = m.group_mul(p, q);
            if !m.leq(gh, m.mul(m.minimals[p], m.minimals[q])) {
                return Err(Error::Hypothesis(format!(
                    "g·h ≰ g*h for g = {}, h = {}",
                    m.labels[m.minimals[p]],
                    m.labels[m.minimals[q]]
                )));
            }
        }
    }
    Ok(())
}

fn up_sets_within(m: &OrderedMonoid, region: Subset, cap: usize, out: &mut Vec<Subset>) -> Result<()> {
    // larger sets first: a linear extension of the reversed inclusion order
    let mut order: Vec<usize> = region.iter().collect();
    order.sort_by_key(|&i| std::cmp::Reverse(m.elements[i].set.len()));
    fn go(
        m: &OrderedMonoid,
        order: &[usize],
        k: usize,
        cur: Subset,
        cap: usize,
        out: &mut Vec<Subset>,
    ) -> Result<()> {
        if k == order.len() {
            if !cur.is_empty() {
                if out.len() >= cap {
                    return Err(Error::SizeCap {
                        what: "order-filter monoid",
                        size: cap + 1,
                        cap,
                    });
                }
                out.push(cur);
            }
            return Ok(());
        }
        let i = order[k];
        go(m, order, k + 1, cur, cap, out)?;
        if m.up_set(i).is_subset(cur.with(i)) {
            go(m, order, k + 1, cur.with(i), cap, out)?;
        }
        Ok(())
    }
    go(m, &order, 0, Subset::EMPTY, cap, out)
}

/// Builds `F` with `X⊙Y = [{x*y})`, `X→Y = {a : a*X ⊆ Y}`,
/// `X⇝Y = {a : X*a ⊆ Y}` and unit `[e)`, after checking the hypotheses
/// the construction needs.
pub fn build_f(m: &OrderedMonoid) -> Result<FilterMonoid> {
    build_f_capped(m, J_CAP, F_CAP)
}

pub fn build_f_capped(m: &OrderedMonoid, j_cap: usize, f_cap: usize) -> Result<FilterMonoid> {
    if m.size() > j_cap {
        return Err(Error::SizeCap {
            what: "word-image monoid",
            size: m.size(),
            cap: j_cap,
        });
    }
    check_hypotheses(m)?;
    let mut filters = Vec::new();
    for &g in &m.minimals {
        up_sets_within(m, m.up_set(g), f_cap, &mut filters)?;
    }
    filters.sort_by(Subset::canonical_cmp);
    let n = filters.len();
    let pos: HashMap<Subset, usize> = filters.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let lookup = |s: Subset, what: &str| {
        pos.get(&s).copied().ok_or_else(|| {
            Error::Inconsistent(format!("{what} leaves the order-filter family"))
        })
    };
    let mj = m.size();
    let up_close = |s: Subset| -> Subset { (0..mj).filter(|&a| s.iter().any(|x| m.leq(x, a))).collect() };

    let mut prod = vec![0; n * n];
    let mut res_l = vec![0; n * n];
    let mut res_r = vec![0; n * n];
    for (i, &x) in filters.iter().enumerate() {
        for (j, &y) in filters.iter().enumerate() {
            let products: Subset = x.iter().flat_map(|p| y.iter().map(move |q| m.mul(p, q))).collect();
            prod[i * n + j] = lookup(up_close(products), "X⊙Y")?;
            // X→Y uses the left argument X as the right factor
            let l: Subset = (0..mj).filter(|&a| x.iter().all(|p| y.contains(m.mul(a, p)))).collect();
            let r: Subset = (0..mj).filter(|&a| x.iter().all(|p| y.contains(m.mul(p, a)))).collect();
            res_l[i * n + j] = lookup(l, "X→Y")?;
            res_r[i * n + j] = lookup(r, "X⇝Y")?;
        }
    }
    let unit = lookup(m.up_set(m.unit), "[e)")?;
    let labels = filters
        .iter()
        .map(|&f| {
            let gens: Vec<&str> = f
                .iter()
                .filter(|&a| !f.iter().any(|b| b != a && m.leq(b, a)))
                .map(|a| m.labels[a].as_str())
                .collect();
            format!("⟨{}⟩", gens.join(" "))
        })
        .collect();
    let leq = (0..n * n).map(|k| filters[k / n].is_subset(filters[k % n])).collect();
    let structure = ResiduatedPoMonoid::from_tables(labels, leq, prod, res_l, res_r, unit)?;
    Ok(FilterMonoid { filters, structure })
}

/// The verified embedding `x ↦ {J(α) : x ∈ J(α)}` into `F`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub monoid: OrderedMonoid,
    pub target: FilterMonoid,
    /// `map[x]` is the index in `target` of the image of `x`.
    pub map: Vec<usize>,
    pub check: ResiduatedCheck,
}

impl Embedding {
    pub fn j_size(&self) -> usize {
        self.monoid.size()
    }

    pub fn f_size(&self) -> usize {
        self.target.filters.len()
    }
}

/// Builds `J`, then `F`, checks `F`, and verifies that the image map is
/// injective and preserves the unit and both arrows.
pub fn embed(a: &Algebra) -> Result<Embedding> {
    let monoid = build_j(a)?;
    let target = build_f(&monoid)?;
    let check = check_residuated_pomonoid(&target.structure);
    if !check.passed() {
        return Err(Error::Inconsistent(format!(
            "order-filter monoid fails: {}",
            check.report().first().map(|v| v.to_string()).unwrap_or_default()
        )));
    }
    let map: Vec<usize> = a
        .elements()
        .map(|x| {
            let s: Subset = (0..monoid.size())
                .filter(|&i| monoid.elements[i].set.contains(x))
                .collect();
            target
                .index_of(s)
                .ok_or_else(|| Error::Inconsistent(format!("image of {} is not in F", a.name(x))))
        })
        .collect::<Result<_>>()?;
    let r = &target.structure;
    let injective = (0..map.len()).all(|x| (0..x).all(|y| map[x] != map[y]));
    let homomorphic = map[a.unit()] == r.unit
        && a.elements().all(|x| {
            a.elements().all(|y| {
                map[a.arrow(x, y)] == r.res_l(map[x], map[y]) && map[a.squig(x, y)] == r.res_r(map[x], map[y])
            })
        });
    if !injective || !homomorphic {
        return Err(Error::Inconsistent(format!(
            "x ↦ [J(x)) is not an embedding (injective: {injective}, homomorphic: {homomorphic})"
        )));
    }
    Ok(Embedding {
        monoid,
        target,
        map,
        check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::{chain2, ex6, trivial};
    use crate::structure::{group_to_algebra, Group};

    #[test]
    fn j_of_small_algebras() {
        let t = build_j(&trivial()).unwrap();
        assert_eq!(t.size(), 1);
        let z3 = group_to_algebra(&Group::cyclic(3));
        let j = build_j(&z3).unwrap();
        assert_eq!(j.size(), 3);
        assert!(j.elements.iter().all(|w| w.set.len() == 1));
    }

    #[test]
    fn j_product_of_g_with_itself() {
        let a = ex6();
        let g = a.index_of("g").unwrap();
        let jg = WordImageSet {
            set: image_set(&a, &[g]).unwrap(),
            rep: vec![g],
        };
        let p = monoid_product(&a, &jg, &jg).unwrap();
        let direct: Subset = a.elements().filter(|&x| a.arrow(g, a.arrow(g, x)) == a.unit()).collect();
        assert_eq!(p.set, direct);
        assert_eq!(p.set, a.elements().filter(|&x| a.arrow(g, x) == g).collect());
    }

    #[test]
    fn embeddings() {
        for a in [trivial(), chain2(), ex6(), group_to_algebra(&Group::cyclic(2))] {
            let e = embed(&a).unwrap();
            assert!(e.check.passed() && e.check.semi_integral);
            let bck = crate::algebra::check_pseudo_bck(&a).passed;
            assert_eq!(e.check.integral, bck);
        }
    }

    #[test]
    fn mutated_product_is_caught() {
        let e = embed(&chain2()).unwrap();
        let mut r = e.target.structure.clone();
        let n = r.size();
        let (x, y) = (0, n - 1);
        let v = (r.prod(x, y) + 1) % n;
        r.set_prod(x, y, v);
        let c = check_residuated_pomonoid(&r);
        assert!(!c.passed());
        assert!(c.routes_agree());
    }
}
