//! Prefilters, filters, their generation, and the ideal-term basis.
//!
//! A prefilter contains `1`, is closed under modus ponens and under
//! `a ↦ a→1`. A filter is a prefilter with `a→b ∈ F ⟺ a⇝b ∈ F`.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::congruences::Partition;
use crate::error::{Error, Result};
use crate::report::{Verdict, Violation};
use crate::subset::{sort_family, Subset};
use crate::term::Term;

/// Carriers up to this size have their filter families found by scanning
/// every subset; larger ones by closing generated filters.
pub const SUBSET_SCAN_CAP: usize = 20;

fn violation(a: &Algebra, law: &str, witness: &[usize], detail: String) -> Violation {
    Violation::new(law, witness.iter().map(|&x| a.name(x).to_string()).collect(), detail)
}

/// Modus ponens with the given arrow.
fn modus_ponens(a: &Algebra, s: Subset, squig: bool) -> Verdict {
    for p in s.iter() {
        for b in a.elements() {
            let imp = if squig { a.squig(p, b) } else { a.arrow(p, b) };
            if s.contains(imp) && !s.contains(b) {
                let law = if squig {
                    "a, a⇝b ∈ F ⇒ b ∈ F"
                } else {
                    "a, a→b ∈ F ⇒ b ∈ F"
                };
                return Err(violation(a, law, &[p, b], format!("{} ∉ F", a.name(b))));
            }
        }
    }
    Ok(())
}

fn prefilter_with(a: &Algebra, s: Subset, squig: bool) -> Verdict {
    if !s.contains(a.unit()) {
        return Err(violation(a, "1 ∈ F", &[], String::new()));
    }
    modus_ponens(a, s, squig)?;
    for p in s.iter() {
        let q = a.arrow(p, a.unit());
        if !s.contains(q) {
            return Err(violation(a, "a ∈ F ⇒ a→1 ∈ F", &[p], format!("{} ∉ F", a.name(q))));
        }
    }
    Ok(())
}

fn same_outcome(x: &Verdict, y: &Verdict) -> bool {
    x.is_ok() == y.is_ok()
}

/// Prefilter test. Modus ponens is checked with both arrows; the two
/// outcomes must agree.
pub fn is_prefilter(a: &Algebra, s: Subset) -> Result<Verdict> {
    let by_arrow = prefilter_with(a, s, false);
    let by_squig = prefilter_with(a, s, true);
    if !same_outcome(&by_arrow, &by_squig) {
        return Err(Error::Inconsistent(format!(
            "modus ponens with → and ⇝ disagree on {}",
            s.display_with(a.names())
        )));
    }
    Ok(by_arrow)
}

/// `a→b ∈ F ⟺ a⇝b ∈ F` for all `a, b`.
fn arrows_agree_on(a: &Algebra, s: Subset) -> Verdict {
    for p in a.elements() {
        for q in a.elements() {
            let (l, r) = (a.arrow(p, q), a.squig(p, q));
            if s.contains(l) != s.contains(r) {
                return Err(violation(
                    a,
                    "a→b ∈ F ⟺ a⇝b ∈ F",
                    &[p, q],
                    format!("a→b = {}, a⇝b = {}", a.name(l), a.name(r)),
                ));
            }
        }
    }
    Ok(())
}

/// `(b→a)→a ∈ F` and `(b⇝a)⇝a ∈ F` for all `a ∈ A`, `b ∈ F`.
fn double_arrows_in(a: &Algebra, s: Subset) -> Verdict {
    for p in a.elements() {
        for q in s.iter() {
            let l = a.arrow(a.arrow(q, p), p);
            let r = a.squig(a.squig(q, p), p);
            if !s.contains(l) {
                return Err(violation(a, "(b→a)→a ∈ F", &[p, q], format!("{} ∉ F", a.name(l))));
            }
            if !s.contains(r) {
                return Err(violation(a, "(b⇝a)⇝a ∈ F", &[p, q], format!("{} ∉ F", a.name(r))));
            }
        }
    }
    Ok(())
}

/// Filter test, evaluated both as prefilter plus arrow agreement and as
/// prefilter plus the double-arrow condition. Disagreement is an
/// [`Error::Inconsistent`].
pub fn is_filter(a: &Algebra, s: Subset) -> Result<Verdict> {
    let pre = is_prefilter(a, s)?;
    let by_agreement = pre.clone().and_then(|_| arrows_agree_on(a, s));
    let by_double = pre.and_then(|_| double_arrows_in(a, s));
    if !same_outcome(&by_agreement, &by_double) {
        return Err(Error::Inconsistent(format!(
            "the two filter characterisations disagree on {}",
            s.display_with(a.names())
        )));
    }
    Ok(by_agreement)
}

/// Smallest set containing `s` and `1`, closed under modus ponens and
/// `a ↦ a→1`, by plain iteration.
pub fn prefilter_closure_naive(a: &Algebra, s: Subset) -> Subset {
    let mut r = s.with(a.unit());
    loop {
        let mut next = r;
        for p in r.iter() {
            next.insert(a.arrow(p, a.unit()));
            for b in a.elements() {
                if r.contains(a.arrow(p, b)) {
                    next.insert(b);
                }
            }
        }
        if next == r {
            return r;
        }
        r = next;
    }
}

/// Elements `x` with `a1→(a2→(…→(an→x)…)) = 1` for some nonempty word over
/// `T = S ∪ {s→1 : s ∈ S}`. Grown as a fixpoint: seeded with `x ≥ t` for
/// letters `t`, then `x` is added whenever `t→x` is already present.
fn prefilter_by_words(a: &Algebra, s: Subset) -> Subset {
    let letters = s.union(s.iter().map(|p| a.arrow(p, a.unit())).collect());
    let mut r: Subset = a
        .elements()
        .filter(|&x| letters.iter().any(|t| a.leq(t, x)))
        .collect();
    loop {
        let next: Subset = a
            .elements()
            .filter(|&x| r.contains(x) || letters.iter().any(|t| r.contains(a.arrow(t, x))))
            .collect();
        if next == r {
            return r;
        }
        r = next;
    }
}

/// Smallest prefilter containing `s`, computed from words over `s` and
/// cross-checked against [`prefilter_closure_naive`].
pub fn prefilter_generated(a: &Algebra, s: Subset) -> Result<Subset> {
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    let words = prefilter_by_words(a, s);
    let naive = prefilter_closure_naive(a, s);
    if words != naive {
        return Err(Error::Inconsistent(format!(
            "generated prefilter of {}: word route {} but closure {}",
            s.display_with(a.names()),
            words.display_with(a.names()),
            naive.display_with(a.names())
        )));
    }
    Ok(words)
}

/// Whether `s` contains `1` and is closed under `t1`, `t2`, `t3` for all
/// `x` in the carrier and all `y` in `s`.
pub fn is_ideal_closed(a: &Algebra, s: Subset) -> bool {
    s.contains(a.unit()) && ideal_closure_step(a, s) == s
}

fn ideal_closure_step(a: &Algebra, s: Subset) -> Subset {
    let mut next = s;
    for y1 in s.iter() {
        next.insert(a.arrow(y1, a.unit()));
        for x in a.elements() {
            next.insert(a.squig(a.squig(y1, x), x));
            for y2 in s.iter() {
                next.insert(a.arrow(a.arrow(y1, a.arrow(y2, x)), x));
            }
        }
    }
    next
}

/// Smallest filter containing `s`: closure of `s ∪ {1}` under the ideal
/// terms `t1`, `t2`, `t3`.
pub fn filter_generated(a: &Algebra, s: Subset) -> Result<Subset> {
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut r = s.with(a.unit());
    loop {
        let next = ideal_closure_step(a, r);
        if next == r {
            break;
        }
        r = next;
    }
    if let Err(v) = is_filter(a, r)? {
        return Err(Error::Inconsistent(format!(
            "ideal-term closure {} is not a filter: {v}",
            r.display_with(a.names())
        )));
    }
    Ok(r)
}

fn family(a: &Algebra, keep: impl Fn(Subset) -> Result<bool> + Sync, generate: impl Fn(Subset) -> Result<Subset>) -> Result<Vec<Subset>> {
    let n = a.size();
    let u = a.unit();
    let mut out = if n <= SUBSET_SCAN_CAP {
        // subsets containing the unit: insert bit `u` into every (n-1)-bit word
        let low = (1u64 << u) - 1;
        (0u64..1 << (n - 1))
            .into_par_iter()
            .map(|w| Subset((w & low) | ((w & !low) << 1) | (1 << u)))
            .filter_map(|s| match keep(s) {
                Ok(true) => Some(Ok(s)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        let mut found = vec![generate(Subset::singleton(u))?];
        let mut k = 0;
        while k < found.len() {
            let f = found[k];
            for x in a.elements().filter(|&x| !f.contains(x)) {
                let g = generate(f.with(x))?;
                if !found.contains(&g) {
                    found.push(g);
                }
            }
            k += 1;
        }
        found
    };
    sort_family(&mut out);
    Ok(out)
}

/// All prefilters in canonical order.
pub fn all_prefilters(a: &Algebra) -> Result<Vec<Subset>> {
    family(a, |s| Ok(is_prefilter(a, s)?.is_ok()), |s| prefilter_generated(a, s))
}

/// All filters in canonical order.
pub fn all_filters(a: &Algebra) -> Result<Vec<Subset>> {
    family(a, |s| Ok(is_filter(a, s)?.is_ok()), |s| filter_generated(a, s))
}

/// `θ_F`: `a θ b` iff `a→b ∈ F` and `b→a ∈ F`.
pub fn theta_from_filter(a: &Algebra, f: Subset) -> Result<Partition> {
    is_filter(a, f)?.map_err(Error::NotAFilter)?;
    let related = |x: usize, y: usize| f.contains(a.arrow(x, y)) && f.contains(a.arrow(y, x));
    let mut block = vec![usize::MAX; a.size()];
    let mut reps: Vec<usize> = Vec::new();
    for x in a.elements() {
        match reps.iter().position(|&r| related(r, x)) {
            Some(b) => block[x] = b,
            None => {
                block[x] = reps.len();
                reps.push(x);
            }
        }
    }
    // the relation must be an equivalence for block assignment to be sound
    for x in a.elements() {
        for y in a.elements() {
            if related(x, y) != (block[x] == block[y]) {
                return Err(Error::Inconsistent(format!(
                    "θ_F is not an equivalence at {},{}",
                    a.name(x),
                    a.name(y)
                )));
            }
        }
    }
    Ok(Partition::from_block_ids(block))
}

/// The ideal-term basis and the combined term `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdealTerm {
    /// `t1(x, y1, y2) = (y1→(y2→x))→x`
    T1,
    /// `t2(x, y) = (y⇝x)⇝x`
    T2,
    /// `t3(y) = y→1`
    T3,
    /// `w(x1, x2, y1, y2) = ([(y1→(y2→x1))→x1]⇝x2)⇝x2`
    W,
}

impl IdealTerm {
    pub const ALL: [IdealTerm; 4] = [IdealTerm::T1, IdealTerm::T2, IdealTerm::T3, IdealTerm::W];

    /// Number of `x` and `y` arguments.
    pub fn arity(self) -> (usize, usize) {
        match self {
            IdealTerm::T1 => (1, 2),
            IdealTerm::T2 => (1, 1),
            IdealTerm::T3 => (0, 1),
            IdealTerm::W => (2, 2),
        }
    }

    /// The term over variables `x…` then `y…`, in argument order.
    pub fn term(self) -> Term {
        let v = Term::var;
        match self {
            IdealTerm::T1 => Term::arrow(Term::arrow(v("y1"), Term::arrow(v("y2"), v("x"))), v("x")),
            IdealTerm::T2 => Term::squig(Term::squig(v("y"), v("x")), v("x")),
            IdealTerm::T3 => Term::arrow(v("y"), Term::Unit),
            IdealTerm::W => {
                let inner = Term::arrow(Term::arrow(v("y1"), Term::arrow(v("y2"), v("x1"))), v("x1"));
                Term::squig(Term::squig(inner, v("x2")), v("x2"))
            }
        }
    }

    pub fn variables(self) -> Vec<String> {
        let names: &[&str] = match self {
            IdealTerm::T1 => &["x", "y1", "y2"],
            IdealTerm::T2 => &["x", "y"],
            IdealTerm::T3 => &["y"],
            IdealTerm::W => &["x1", "x2", "y1", "y2"],
        };
        names.iter().map(|s| s.to_string()).collect()
    }
}

/// Evaluates an ideal term at `xs` and `ys`.
pub fn ideal_term_eval(a: &Algebra, t: IdealTerm, xs: &[usize], ys: &[usize]) -> Result<usize> {
    let (nx, ny) = t.arity();
    if xs.len() != nx || ys.len() != ny {
        return Err(Error::Arity(format!(
            "{t:?} takes {nx} x- and {ny} y-arguments, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    if let Some(&bad) = xs.iter().chain(ys).find(|&&e| e >= a.size()) {
        return Err(Error::UnknownElement(bad.to_string()));
    }
    let u = a.unit();
    Ok(match t {
        IdealTerm::T1 => a.arrow(a.arrow(ys[0], a.arrow(ys[1], xs[0])), xs[0]),
        IdealTerm::T2 => a.squig(a.squig(ys[0], xs[0]), xs[0]),
        IdealTerm::T3 => a.arrow(ys[0], u),
        IdealTerm::W => {
            let inner = a.arrow(a.arrow(ys[0], a.arrow(ys[1], xs[0])), xs[0]);
            a.squig(a.squig(inner, xs[1]), xs[1])
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::{chain2, ex6, trivial};
    use crate::structure::{group_part, group_to_algebra, integral_part, Group};

    fn set(a: &Algebra, names: &[&str]) -> Subset {
        names.iter().map(|n| a.index_of(n).unwrap()).collect()
    }

    #[test]
    fn unit_is_a_filter_everywhere() {
        for a in [trivial(), chain2(), ex6()] {
            let one = Subset::singleton(a.unit());
            assert!(is_prefilter(&a, one).unwrap().is_ok());
            assert!(is_filter(&a, one).unwrap().is_ok());
            assert!(is_filter(&a, a.full_set()).unwrap().is_ok());
        }
    }

    #[test]
    fn ex6_parts() {
        let a = ex6();
        assert!(is_filter(&a, integral_part(&a)).unwrap().is_ok());
        let g = group_part(&a);
        assert!(is_prefilter(&a, g).unwrap().is_ok());
        let v = is_filter(&a, g).unwrap().unwrap_err();
        assert_eq!(v.law, "a→b ∈ F ⟺ a⇝b ∈ F");
    }

    #[test]
    fn generation() {
        let a = ex6();
        assert_eq!(prefilter_generated(&a, set(&a, &["1"])).unwrap(), set(&a, &["1"]));
        let gx = prefilter_generated(&a, set(&a, &["x"])).unwrap();
        assert!(gx.contains(a.index_of("g").unwrap()));
        let fg = filter_generated(&a, set(&a, &["g"])).unwrap();
        assert!(set(&a, &["g", "1"]).is_subset(fg) && fg != set(&a, &["g", "1"]));
        assert_eq!(prefilter_generated(&a, Subset::EMPTY), Err(Error::EmptySubset));
        assert_eq!(filter_generated(&a, Subset::EMPTY), Err(Error::EmptySubset));

        let z2 = group_to_algebra(&Group::cyclic(2));
        assert_eq!(prefilter_generated(&z2, set(&z2, &["g"])).unwrap(), z2.full_set());
    }

    #[test]
    fn families_of_small_algebras() {
        assert_eq!(all_prefilters(&trivial()).unwrap(), vec![Subset::singleton(0)]);
        assert_eq!(all_filters(&trivial()).unwrap(), vec![Subset::singleton(0)]);
        let c = chain2();
        assert_eq!(all_filters(&c).unwrap(), vec![set(&c, &["1"]), c.full_set()]);
        let a = ex6();
        let f = all_filters(&a).unwrap();
        assert!(f.contains(&integral_part(&a)) && f.contains(&a.full_set()));
    }

    #[test]
    fn theta_of_integral_part() {
        let a = ex6();
        let t = theta_from_filter(&a, integral_part(&a)).unwrap();
        assert_eq!(t.display_with(a.names()), "{a,b,1 | x,y,g}");
        assert!(matches!(
            theta_from_filter(&a, group_part(&a)),
            Err(Error::NotAFilter(_))
        ));
    }

    #[test]
    fn ideal_terms() {
        let a = ex6();
        let u = a.unit();
        assert_eq!(ideal_term_eval(&a, IdealTerm::T3, &[], &[u]).unwrap(), u);
        assert!(matches!(
            ideal_term_eval(&a, IdealTerm::T1, &[u], &[u]),
            Err(Error::Arity(_))
        ));
        // b = ((a→b)→(a→b))→b
        for p in a.elements() {
            for b in a.elements() {
                let ab = a.arrow(p, b);
                assert_eq!(ideal_term_eval(&a, IdealTerm::T1, &[b], &[ab, p]).unwrap(), b);
            }
        }
        for t in IdealTerm::ALL {
            let vars = t.variables();
            let (nx, ny) = t.arity();
            for x1 in a.elements() {
                for x2 in a.elements() {
                    let xs = &[x1, x2][..nx];
                    let ys = vec![u; ny];
                    let env: Vec<usize> = xs.iter().chain(&ys).copied().collect();
                    let direct = ideal_term_eval(&a, t, xs, &ys).unwrap();
                    assert_eq!(direct, u);
                    assert_eq!(t.term().eval(&a, &vars, &env).unwrap(), direct);
                }
            }
        }
    }
}
