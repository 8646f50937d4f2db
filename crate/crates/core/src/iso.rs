//! Isomorphism testing and canonical forms.
//!
//! Both start from an isomorphism-invariant colouring of the elements: the
//! order profile (down-set size, up-set size, group-part and integral-part
//! membership), refined by the colours of the rows and columns of both
//! tables until the partition into colour classes stops growing.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use itertools::Itertools;

use crate::algebra::Algebra;

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

/// Order profile of `x`: sizes of its down-set and up-set and whether it is
/// in the group part and in the integral part.
pub fn order_profile(a: &Algebra, x: usize) -> (usize, usize, bool, bool) {
    let u = a.unit();
    let down = a.elements().filter(|&y| a.leq(y, x)).count();
    let up = a.elements().filter(|&y| a.leq(x, y)).count();
    let in_group = a.arrow(a.arrow(x, u), u) == x;
    (down, up, in_group, a.leq(x, u))
}

/// Isomorphism-invariant element colours.
pub fn invariant_colours(a: &Algebra) -> Vec<u64> {
    let n = a.size();
    let u = a.unit();
    let mut colour: Vec<u64> = a
        .elements()
        .map(|x| hash_of(&(order_profile(a, x), x == u)))
        .collect();
    let mut classes = colour.iter().unique().count();
    loop {
        let next: Vec<u64> = (0..n)
            .map(|x| {
                let mut row: Vec<(u64, u64, u64, u64, u64, bool, bool)> = (0..n)
                    .map(|y| {
                        (
                            colour[y],
                            colour[a.arrow(x, y)],
                            colour[a.arrow(y, x)],
                            colour[a.squig(x, y)],
                            colour[a.squig(y, x)],
                            a.arrow(x, y) == x,
                            a.squig(x, y) == x,
                        )
                    })
                    .collect();
                row.sort_unstable();
                hash_of(&(colour[x], row))
            })
            .collect();
        let next_classes = next.iter().unique().count();
        colour = next;
        if next_classes == classes {
            return colour;
        }
        classes = next_classes;
    }
}

/// Finds a unit-preserving bijection `f` (as `f[x]` for `x` in `a`) with
/// `f(x→y) = f(x)→f(y)` and `f(x⇝y) = f(x)⇝f(y)`. Exhaustive backtracking.
pub fn find_isomorphism(a: &Algebra, b: &Algebra) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let ca = invariant_colours(a);
    let cb = invariant_colours(b);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb || ca[a.unit()] != cb[b.unit()] {
        return None;
    }

    const NONE: usize = usize::MAX;
    let mut map = vec![NONE; n];
    let mut used = vec![false; n];
    map[a.unit()] = b.unit();
    used[b.unit()] = true;
    // assign rarest colours first
    let order: Vec<usize> = a
        .elements()
        .filter(|&x| x != a.unit())
        .sorted_by_key(|&x| (ca.iter().filter(|&&c| c == ca[x]).count(), x))
        .collect();

    fn consistent(a: &Algebra, b: &Algebra, map: &[usize], x: usize) -> bool {
        let mut rev = vec![usize::MAX; map.len()];
        for (p, &q) in map.iter().enumerate() {
            if q != usize::MAX {
                rev[q] = p;
            }
        }
        for y in a.elements() {
            if map[y] == usize::MAX {
                continue;
            }
            for (p, q) in [(x, y), (y, x)] {
                let pairs = [
                    (a.arrow(p, q), b.arrow(map[p], map[q])),
                    (a.squig(p, q), b.squig(map[p], map[q])),
                ];
                for (img_a, img_b) in pairs {
                    let clash = if map[img_a] == usize::MAX {
                        rev[img_b] != usize::MAX
                    } else {
                        map[img_a] != img_b
                    };
                    if clash {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        order: &[usize],
        a: &Algebra,
        b: &Algebra,
        ca: &[u64],
        cb: &[u64],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for y in b.elements() {
            if used[y] || cb[y] != ca[x] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if consistent(a, b, map, x) && go(k + 1, order, a, b, ca, cb, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    if !consistent(a, b, &map, a.unit()) {
        return None;
    }
    if go(0, &order, a, b, &ca, &cb, &mut map, &mut used) && is_isomorphism(a, b, &map) {
        Some(map)
    } else {
        None
    }
}

/// Whether `map` is a unit-preserving bijection commuting with both arrows.
pub fn is_isomorphism(a: &Algebra, b: &Algebra, map: &[usize]) -> bool {
    let n = a.size();
    if b.size() != n || map.len() != n || map[a.unit()] != b.unit() {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    a.elements().all(|x| {
        a.elements().all(|y| {
            map[a.arrow(x, y)] == b.arrow(map[x], map[y])
                && map[a.squig(x, y)] == b.squig(map[x], map[y])
        })
    })
}

/// A byte string equal for two algebras exactly when they are isomorphic:
/// the lexicographically least encoding of both tables over all
/// relabellings that list colour classes in a fixed order (unit last).
pub fn canonical_key(a: &Algebra) -> Vec<u8> {
    let n = a.size();
    let colour = invariant_colours(a);
    let u = a.unit();
    let mut classes: Vec<(u64, Vec<usize>)> = Vec::new();
    for x in a.elements().filter(|&x| x != u) {
        match classes.iter_mut().find(|(c, _)| *c == colour[x]) {
            Some((_, v)) => v.push(x),
            None => classes.push((colour[x], vec![x])),
        }
    }
    classes.sort_by_key(|(c, _)| *c);

    let mut best: Option<Vec<u8>> = None;
    let per_class: Vec<Vec<Vec<usize>>> = classes
        .iter()
        .map(|(_, members)| members.iter().copied().permutations(members.len()).collect())
        .collect();
    let choices = per_class.iter().map(|v| v.iter()).multi_cartesian_product();
    let mut perm = vec![0usize; n];
    let mut encode = |order: &[&Vec<usize>]| {
        let mut pos = 0;
        for members in order {
            for &x in members.iter() {
                perm[x] = pos;
                pos += 1;
            }
        }
        perm[u] = n - 1;
        let mut code = Vec::with_capacity(2 * n * n + 1);
        code.push(n as u8);
        let mut inv = vec![0; n];
        for x in 0..n {
            inv[perm[x]] = x;
        }
        for table in 0..2 {
            for p in 0..n {
                for q in 0..n {
                    let (x, y) = (inv[p], inv[q]);
                    let v = if table == 0 { a.arrow(x, y) } else { a.squig(x, y) };
                    code.push(perm[v] as u8);
                }
            }
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    };
    if per_class.is_empty() {
        encode(&[]);
    } else {
        for choice in choices {
            encode(&choice);
        }
    }
    let mut key = best.expect("at least one relabelling");
    key.extend(colour.iter().sorted().flat_map(|c| c.to_le_bytes()));
    key
}
