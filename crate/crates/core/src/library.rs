//! Small named algebras used throughout the crate and its tests.

use crate::algebra::Algebra;

/// The one-element algebra `{1}`.
pub fn trivial() -> Algebra {
    Algebra::from_rows(&["1"], "1", &["1"], &["1"]).expect("valid table")
}

/// The two-element chain `0 < 1` with `x→y = 1` if `x ≤ y`, else `y`;
/// both arrows coincide.
pub fn chain2() -> Algebra {
    Algebra::from_rows(&["0", "1"], "1", &["1 1", "0 1"], &["1 1", "0 1"]).expect("valid table")
}

/// Six-element proper pseudo-BCI-algebra with integral part `{a,b,1}` and
/// group part `{g,1}`. It satisfies every associativity condition for `·`
/// and `⋆` yet is not the direct product of its integral and group parts,
/// because `g→a = y` while `g⇝a = x`.
pub fn ex6() -> Algebra {
    Algebra::from_rows(
        &["a", "b", "x", "y", "g", "1"],
        "1",
        &[
            "1 b g y g 1",
            "a 1 x g g 1",
            "g x 1 a 1 g",
            "y g b 1 1 g",
            "y x b a 1 g",
            "a b x y g 1",
        ],
        &[
            "1 b x g g 1",
            "a 1 g y g 1",
            "x g 1 b 1 g",
            "g y a 1 1 g",
            "x y a b 1 g",
            "a b x y g 1",
        ],
    )
    .expect("valid table")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ex6_spot_values() {
        let a = ex6();
        let i = |n: &str| a.index_of(n).unwrap();
        assert_eq!(a.arrow(i("x"), i("y")), i("a"));
        assert_eq!(a.squig(i("x"), i("y")), i("b"));
        assert_eq!(a.arrow(i("g"), i("a")), i("y"));
        assert_eq!(a.squig(i("g"), i("a")), i("x"));
        assert_eq!(a.arrow(i("x"), i("1")), i("g"));
    }
}
