//! Finite algebras with two arrows and a unit, their axioms and derived order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{
    run_laws, Domain, Law, Named, VerificationReport, DEFAULT_VIOLATION_CAP,
};
use crate::subset::{Subset, MAX_ELEMENTS};

/// A finite algebra `(A, →, ⇝, 1)`. Elements are indices `0..n`; names are
/// only used for input and output. Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    names: Vec<String>,
    unit: usize,
    arrow: Vec<u8>,
    squig: Vec<u8>,
}

impl Algebra {
    /// Builds an algebra from row-major tables (row = left operand).
    pub fn new(
        names: Vec<String>,
        unit: usize,
        arrow: Vec<usize>,
        squig: Vec<usize>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Malformed("empty carrier".into()));
        }
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap {
                what: "carrier",
                size: n,
                cap: MAX_ELEMENTS,
            });
        }
        if unit >= n {
            return Err(Error::Malformed(format!("unit index {unit} out of range")));
        }
        for (i, name) in names.iter().enumerate() {
            validate_name(name)?;
            if names[..i].contains(name) {
                return Err(Error::Malformed(format!("duplicate element name `{name}`")));
            }
        }
        for (label, table) in [("arrow", &arrow), ("squig", &squig)] {
            if table.len() != n * n {
                return Err(Error::Malformed(format!(
                    "{label} table has {} entries, expected {}",
                    table.len(),
                    n * n
                )));
            }
            if let Some(bad) = table.iter().find(|&&v| v >= n) {
                return Err(Error::Malformed(format!("{label} table entry {bad} out of range")));
            }
        }
        Ok(Algebra {
            names,
            unit,
            arrow: arrow.into_iter().map(|v| v as u8).collect(),
            squig: squig.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// Builds an algebra by tabulating two operations.
    pub fn from_fns(
        names: Vec<String>,
        unit: usize,
        arrow: impl Fn(usize, usize) -> usize,
        squig: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = names.len();
        let tab = |f: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
            (0..n * n).map(|i| f(i / n, i % n)).collect()
        };
        let arrow = tab(&arrow);
        let squig = tab(&squig);
        Algebra::new(names, unit, arrow, squig)
    }

    /// Builds an algebra from rows of element names, as in the text format.
    pub fn from_rows(elements: &[&str], unit: &str, arrow: &[&str], squig: &[&str]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|s| s.to_string()).collect();
        let lookup = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let unit = lookup(unit)?;
        let mut tables = Vec::new();
        for rows in [arrow, squig] {
            if rows.len() != names.len() {
                return Err(Error::Malformed("wrong number of rows".into()));
            }
            let mut t = Vec::with_capacity(names.len() * names.len());
            for row in rows {
                let cells: Vec<&str> = row.split_whitespace().collect();
                if cells.len() != names.len() {
                    return Err(Error::Malformed(format!("row `{row}` has wrong length")));
                }
                for c in cells {
                    t.push(lookup(c)?);
                }
            }
            tables.push(t);
        }
        let squig = tables.pop().unwrap();
        let arrow = tables.pop().unwrap();
        Algebra::new(names, unit, arrow, squig)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn unit(&self) -> usize {
        self.unit
    }

    #[inline]
    pub fn arrow(&self, x: usize, y: usize) -> usize {
        self.arrow[x * self.size() + y] as usize
    }

    #[inline]
    pub fn squig(&self, x: usize, y: usize) -> usize {
        self.squig[x * self.size() + y] as usize
    }

    /// `x ≤ y` in the derived order, read off the `→` table.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.arrow(x, y) == self.unit
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.size())
    }

    pub fn arrow_table(&self) -> Vec<usize> {
        self.arrow.iter().map(|&v| v as usize).collect()
    }

    pub fn squig_table(&self) -> Vec<usize> {
        self.squig.iter().map(|&v| v as usize).collect()
    }

    /// `x` with both arrows coinciding, i.e. a (plain) BCI-algebra.
    pub fn arrows_coincide(&self) -> bool {
        self.arrow == self.squig
    }

    /// The algebra `(A, ⇝, →, 1)` with the two tables swapped.
    pub fn dagger(&self) -> Algebra {
        Algebra {
            names: self.names.clone(),
            unit: self.unit,
            arrow: self.squig.clone(),
            squig: self.arrow.clone(),
        }
    }

    /// The same algebra with element `x` renamed to position `perm[x]`.
    pub fn permute(&self, perm: &[usize]) -> Algebra {
        let n = self.size();
        let mut inv = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        let names = (0..n).map(|p| self.names[inv[p]].clone()).collect();
        let mut arrow = vec![0u8; n * n];
        let mut squig = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                arrow[perm[x] * n + perm[y]] = perm[self.arrow(x, y)] as u8;
                squig[perm[x] * n + perm[y]] = perm[self.squig(x, y)] as u8;
            }
        }
        Algebra {
            names,
            unit: perm[self.unit],
            arrow,
            squig,
        }
    }

    pub fn with_names(&self, names: Vec<String>) -> Result<Algebra> {
        Algebra::new(names, self.unit, self.arrow_table(), self.squig_table())
    }

    /// Whether `s` contains the unit and is closed under both arrows.
    pub fn is_subuniverse(&self, s: Subset) -> bool {
        s.contains(self.unit)
            && s.iter().all(|x| {
                s.iter()
                    .all(|y| s.contains(self.arrow(x, y)) && s.contains(self.squig(x, y)))
            })
    }

    /// The subalgebra induced on `s`, keeping element order and names.
    pub fn subalgebra(&self, s: Subset) -> Result<Algebra> {
        if !s.contains(self.unit) {
            return Err(Error::NotClosed(crate::report::Violation::new(
                "1 ∈ S",
                vec![],
                "unit missing",
            )));
        }
        let members: Vec<usize> = s.iter().collect();
        let pos = |x: usize| members.iter().position(|&m| m == x);
        let mut arrow = Vec::with_capacity(members.len() * members.len());
        let mut squig = Vec::with_capacity(members.len() * members.len());
        for &x in &members {
            for &y in &members {
                for (op, table) in [(self.arrow(x, y), &mut arrow), (self.squig(x, y), &mut squig)] {
                    match pos(op) {
                        Some(p) => table.push(p),
                        None => {
                            return Err(Error::NotClosed(crate::report::Violation::new(
                                "closed under → and ⇝",
                                vec![self.names[x].clone(), self.names[y].clone()],
                                format!("result {} leaves the subset", self.names[op]),
                            )))
                        }
                    }
                }
            }
        }
        let names = members.iter().map(|&m| self.names[m].clone()).collect();
        Algebra::new(names, pos(self.unit).unwrap(), arrow, squig)
    }

    /// Parses the algebra text format.
    pub fn parse(text: &str) -> Result<Algebra> {
        crate::format::parse(text)
    }

    /// Serializes to the algebra text format.
    pub fn to_text(&self) -> String {
        crate::format::write(self)
    }
}

pub(crate) fn validate_name(name: &str) -> Result<()> {
    if name.is_empty()
        || name.starts_with('#')
        || !name.bytes().all(|b| b.is_ascii_graphic())
        || name.ends_with(':')
    {
        return Err(Error::Malformed(format!("invalid element name `{name}`")));
    }
    Ok(())
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(\n{})", self.to_text())
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algebra::parse(s)
    }
}

impl Named for Algebra {
    fn size(&self) -> usize {
        self.size()
    }
    fn element_name(&self, x: usize) -> &str {
        self.name(x)
    }
}

/// The integral part `{x : x ≤ 1}` read off the tables.
pub(crate) fn integral_members(a: &Algebra) -> Vec<usize> {
    a.elements().filter(|&x| a.leq(x, a.unit())).collect()
}

/// The group part `{x → 1}` read off the tables.
pub(crate) fn group_members(a: &Algebra) -> Vec<usize> {
    let s: Subset = a.elements().map(|x| a.arrow(x, a.unit())).collect();
    s.iter().collect()
}

pub(crate) fn resolver(a: &Algebra) -> impl Fn(Domain) -> Vec<usize> + '_ {
    move |d| match d {
        Domain::All => a.elements().collect(),
        Domain::GroupPart => group_members(a),
        Domain::IntegralPart => integral_members(a),
    }
}

// Failure descriptions below print the evaluated sides of each law.

fn eq_detail(a: &Algebra, lhs: usize, rhs: usize) -> Option<String> {
    (lhs != rhs).then(|| format!("{} ≠ {}", a.name(lhs), a.name(rhs)))
}

fn leq_detail(a: &Algebra, lhs: usize, rhs: usize) -> Option<String> {
    (!a.leq(lhs, rhs)).then(|| format!("{} ≰ {}", a.name(lhs), a.name(rhs)))
}

const XYZ: &[Domain] = &[Domain::All, Domain::All, Domain::All];
const XY: &[Domain] = &[Domain::All, Domain::All];
const X: &[Domain] = &[Domain::All];

fn pseudo_bci_laws() -> Vec<Law<Algebra>> {
    vec![
        Law {
            name: "(x→y)⇝((y→z)⇝(x→z)) = 1",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                let val = a.squig(a.arrow(x, y), a.squig(a.arrow(y, z), a.arrow(x, z)));
                eq_detail(a, val, a.unit())
            },
        },
        Law {
            name: "(x⇝y)→((y⇝z)→(x⇝z)) = 1",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                let val = a.arrow(a.squig(x, y), a.arrow(a.squig(y, z), a.squig(x, z)));
                eq_detail(a, val, a.unit())
            },
        },
        Law {
            name: "1→x = x",
            domains: X,
            check: |a, v| eq_detail(a, a.arrow(a.unit(), v[0]), v[0]),
        },
        Law {
            name: "1⇝x = x",
            domains: X,
            check: |a, v| eq_detail(a, a.squig(a.unit(), v[0]), v[0]),
        },
        Law {
            name: "x→y = 1 & y→x = 1 ⇒ x = y",
            domains: XY,
            check: |a, v| {
                let (x, y) = (v[0], v[1]);
                (x != y && a.leq(x, y) && a.leq(y, x))
                    .then(|| format!("{}→{} = {}→{} = 1", a.name(x), a.name(y), a.name(y), a.name(x)))
            },
        },
    ]
}

/// Checks the pseudo-BCI axioms: the four identities and the antisymmetry
/// quasi-identity, quantified over all tuples.
pub fn check_pseudo_bci(a: &Algebra) -> VerificationReport {
    check_pseudo_bci_capped(a, DEFAULT_VIOLATION_CAP)
}

pub fn check_pseudo_bci_capped(a: &Algebra, cap: usize) -> VerificationReport {
    run_laws(a, &pseudo_bci_laws(), resolver(a), cap)
}

/// Pseudo-BCI axioms plus integrality `x→1 = 1`.
pub fn check_pseudo_bck(a: &Algebra) -> VerificationReport {
    check_pseudo_bck_capped(a, DEFAULT_VIOLATION_CAP)
}

pub fn check_pseudo_bck_capped(a: &Algebra, cap: usize) -> VerificationReport {
    let integral: Law<Algebra> = Law {
        name: "x→1 = 1",
        domains: X,
        check: |a, v| {
            let val = a.arrow(v[0], a.unit());
            (val != a.unit())
                .then(|| format!("{}→{}={}", a.name(v[0]), a.name(a.unit()), a.name(val)))
        },
    };
    let mut laws = pseudo_bci_laws();
    laws.push(integral);
    run_laws(a, &laws, resolver(a), cap)
}

/// `x ≤ y iff x → y = 1`, materialized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedOrder {
    n: usize,
    leq: Vec<bool>,
}

impl DerivedOrder {
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn up_set(&self, x: usize) -> Subset {
        (0..self.n).filter(|&y| self.leq(x, y)).collect()
    }

    pub fn down_set(&self, x: usize) -> Subset {
        (0..self.n).filter(|&y| self.leq(y, x)).collect()
    }

    pub fn maximal(&self) -> Subset {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|y| y == x || !self.leq(x, y)))
            .collect()
    }

    /// Covering pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn hasse_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y
                    && self.leq(x, y)
                    && !(0..self.n).any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y))
                {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Strictly-related pairs, in lexicographic order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y && self.leq(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Derives the order. Fails when `→` and `⇝` disagree on which pairs map to
/// the unit, or when the relation is not a partial order; both mean the
/// input skipped verification.
pub fn derive_order(a: &Algebra) -> Result<DerivedOrder> {
    let n = a.size();
    let u = a.unit();
    let mut leq = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let by_arrow = a.arrow(x, y) == u;
            let by_squig = a.squig(x, y) == u;
            if by_arrow != by_squig {
                return Err(Error::Inconsistent(format!(
                    "{}→{} and {}⇝{} disagree on being 1",
                    a.name(x),
                    a.name(y),
                    a.name(x),
                    a.name(y)
                )));
            }
            leq[x * n + y] = by_arrow;
        }
    }
    let order = DerivedOrder { n, leq };
    for x in 0..n {
        if !order.leq(x, x) {
            return Err(Error::Inconsistent(format!("{} ≰ {}", a.name(x), a.name(x))));
        }
        for y in 0..n {
            if x != y && order.leq(x, y) && order.leq(y, x) {
                return Err(Error::Inconsistent(format!(
                    "{} and {} are mutually below each other",
                    a.name(x),
                    a.name(y)
                )));
            }
            for z in 0..n {
                if order.leq(x, y) && order.leq(y, z) && !order.leq(x, z) {
                    return Err(Error::Inconsistent(format!(
                        "order not transitive at {},{},{}",
                        a.name(x),
                        a.name(y),
                        a.name(z)
                    )));
                }
            }
        }
    }
    Ok(order)
}

fn arithmetic_laws() -> Vec<Law<Algebra>> {
    vec![
        Law {
            name: "x→x = 1",
            domains: X,
            check: |a, v| eq_detail(a, a.arrow(v[0], v[0]), a.unit()),
        },
        Law {
            name: "x⇝x = 1",
            domains: X,
            check: |a, v| eq_detail(a, a.squig(v[0], v[0]), a.unit()),
        },
        Law {
            name: "x→y ≤ (y→z)⇝(x→z)",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                leq_detail(a, a.arrow(x, y), a.squig(a.arrow(y, z), a.arrow(x, z)))
            },
        },
        Law {
            name: "x⇝y ≤ (y⇝z)→(x⇝z)",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                leq_detail(a, a.squig(x, y), a.arrow(a.squig(y, z), a.squig(x, z)))
            },
        },
        Law {
            name: "x ≤ (x→y)⇝y",
            domains: XY,
            check: |a, v| leq_detail(a, v[0], a.squig(a.arrow(v[0], v[1]), v[1])),
        },
        Law {
            name: "x ≤ (x⇝y)→y",
            domains: XY,
            check: |a, v| leq_detail(a, v[0], a.arrow(a.squig(v[0], v[1]), v[1])),
        },
        Law {
            name: "x→y = 1 iff x⇝y = 1",
            domains: XY,
            check: |a, v| {
                ((a.arrow(v[0], v[1]) == a.unit()) != (a.squig(v[0], v[1]) == a.unit()))
                    .then(|| "arrows disagree".to_string())
            },
        },
        Law {
            name: "x ≤ y ⇒ y→z ≤ x→z",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                if a.leq(x, y) {
                    leq_detail(a, a.arrow(y, z), a.arrow(x, z))
                } else {
                    None
                }
            },
        },
        Law {
            name: "x ≤ y ⇒ y⇝z ≤ x⇝z",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                if a.leq(x, y) {
                    leq_detail(a, a.squig(y, z), a.squig(x, z))
                } else {
                    None
                }
            },
        },
        Law {
            name: "x→(y⇝z) = y⇝(x→z)",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                eq_detail(a, a.arrow(x, a.squig(y, z)), a.squig(y, a.arrow(x, z)))
            },
        },
        Law {
            name: "x ≤ y→z iff y ≤ x⇝z",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                (a.leq(x, a.arrow(y, z)) != a.leq(y, a.squig(x, z)))
                    .then(|| "sides disagree".to_string())
            },
        },
        Law {
            name: "x→y ≤ (z→x)→(z→y)",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                leq_detail(a, a.arrow(x, y), a.arrow(a.arrow(z, x), a.arrow(z, y)))
            },
        },
        Law {
            name: "x⇝y ≤ (z⇝x)⇝(z⇝y)",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                leq_detail(a, a.squig(x, y), a.squig(a.squig(z, x), a.squig(z, y)))
            },
        },
        Law {
            name: "x ≤ y ⇒ z→x ≤ z→y",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                if a.leq(x, y) {
                    leq_detail(a, a.arrow(z, x), a.arrow(z, y))
                } else {
                    None
                }
            },
        },
        Law {
            name: "x ≤ y ⇒ z⇝x ≤ z⇝y",
            domains: XYZ,
            check: |a, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                if a.leq(x, y) {
                    leq_detail(a, a.squig(z, x), a.squig(z, y))
                } else {
                    None
                }
            },
        },
        Law {
            name: "x→1 = x⇝1",
            domains: X,
            check: |a, v| eq_detail(a, a.arrow(v[0], a.unit()), a.squig(v[0], a.unit())),
        },
        Law {
            name: "(x→y)→1 = (x→1)⇝(y→1)",
            domains: XY,
            check: |a, v| {
                let (x, y, u) = (v[0], v[1], a.unit());
                eq_detail(a, a.arrow(a.arrow(x, y), u), a.squig(a.arrow(x, u), a.arrow(y, u)))
            },
        },
        Law {
            name: "(x⇝y)⇝1 = (x⇝1)→(y⇝1)",
            domains: XY,
            check: |a, v| {
                let (x, y, u) = (v[0], v[1], a.unit());
                eq_detail(a, a.squig(a.squig(x, y), u), a.arrow(a.squig(x, u), a.squig(y, u)))
            },
        },
        Law {
            name: "((x→y)⇝y)→y = x→y",
            domains: XY,
            check: |a, v| {
                let (x, y) = (v[0], v[1]);
                eq_detail(a, a.arrow(a.squig(a.arrow(x, y), y), y), a.arrow(x, y))
            },
        },
        Law {
            name: "((x⇝y)→y)⇝y = x⇝y",
            domains: XY,
            check: |a, v| {
                let (x, y) = (v[0], v[1]);
                eq_detail(a, a.squig(a.arrow(a.squig(x, y), y), y), a.squig(x, y))
            },
        },
    ]
}

/// Exhaustively checks the basic arithmetic laws every pseudo-BCI-algebra
/// satisfies (reflexivity, suffixing, exchange, monotonicity, the laws for
/// `x→1`, and the triple-arrow law). A sanity suite, not an axiom filter.
pub fn check_arithmetic_laws(a: &Algebra) -> VerificationReport {
    run_laws(a, &arithmetic_laws(), resolver(a), usize::MAX)
}

/// `a1→(a2→(…→(an→x)…))`.
pub fn word_arrow(a: &Algebra, word: &[usize], x: usize) -> Result<usize> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(word.iter().rev().fold(x, |acc, &w| a.arrow(w, acc)))
}

/// `an⇝(…⇝(a1⇝x)…)`.
pub fn word_squig(a: &Algebra, word: &[usize], x: usize) -> Result<usize> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(word.iter().fold(x, |acc, &w| a.squig(w, acc)))
}
