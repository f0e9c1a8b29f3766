//! Order-isomorphism primitives: Prev/Next arrays, incremental verification
//! and the order-preserving Z-array.

use crate::error::{OppmError, Result};

/// Nearest predecessor arrays of a sequence `s`.
///
/// For position `i` (1-based), `prev[i]` is the rightmost earlier position
/// holding the largest value `<= s[i]`, and `next[i]` the rightmost earlier
/// position holding the smallest value `>= s[i]`. Both are 0 when no such
/// position exists. The vectors themselves are indexed 0-based, so
/// `prev()[k]` describes position `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrevNext {
    prev: Vec<usize>,
    next: Vec<usize>,
    // s[prev[i]] == s[i]; when set, prev[i] == next[i].
    tied: Vec<bool>,
}

impl PrevNext {
    pub fn new(s: &[i64]) -> Self {
        let (by_index, by_index_rev) = sorted_orders(s);
        Self::from_orders(s, &by_index, &by_index_rev)
    }

    /// Builds the arrays from two precomputed sort orders of `s`: indices
    /// sorted by `(value, index)` and by `(value, reverse index)`.
    pub(crate) fn from_orders(s: &[i64], by_index: &[usize], by_index_rev: &[usize]) -> Self {
        let n = s.len();
        debug_assert_eq!(by_index.len(), n);
        debug_assert_eq!(by_index_rev.len(), n);
        let prev = predecessors(by_index, Side::Left);
        let next = predecessors(by_index_rev, Side::Right);
        let tied = (0..n)
            .map(|i| prev[i] != 0 && s[prev[i] - 1] == s[i])
            .collect();
        PrevNext { prev, next, tied }
    }

    pub fn prev(&self) -> &[usize] {
        &self.prev
    }

    pub fn next(&self) -> &[usize] {
        &self.next
    }

    pub fn len(&self) -> usize {
        self.prev.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prev.is_empty()
    }

    /// Whether position `i` (0-based) repeats an earlier value.
    pub fn is_tied(&self, i: usize) -> bool {
        self.tied[i]
    }

    /// Decides whether `window[..=i]` stays order-isomorphic to the sequence
    /// these arrays were built from, given that `window[..i]` already is.
    ///
    /// Uses at most two comparisons on `window`, which are added to `cmps`.
    #[inline]
    pub fn extends(&self, window: &[i64], i: usize, cmps: &mut u64) -> bool {
        let lo = self.prev[i];
        let hi = self.next[i];
        let w = window[i];
        if self.tied[i] {
            *cmps += 1;
            return window[lo - 1] == w;
        }
        if lo != 0 {
            *cmps += 1;
            if window[lo - 1] >= w {
                return false;
            }
        }
        if hi != 0 {
            *cmps += 1;
            if w >= window[hi - 1] {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// Walks positions from last to first, unlinking each from a list kept in
/// `order`; the neighbour on `side` at the moment of removal is the answer.
fn predecessors(order: &[usize], side: Side) -> Vec<usize> {
    const NIL: usize = usize::MAX;
    let n = order.len();
    let mut rank = vec![0; n];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let mut left: Vec<usize> = (0..n).map(|r| if r == 0 { NIL } else { r - 1 }).collect();
    let mut right: Vec<usize> = (0..n)
        .map(|r| if r + 1 == n { NIL } else { r + 1 })
        .collect();
    let mut out = vec![0; n];
    for i in (0..n).rev() {
        let r = rank[i];
        let (l, rt) = (left[r], right[r]);
        let neighbour = match side {
            Side::Left => l,
            Side::Right => rt,
        };
        if neighbour != NIL {
            out[i] = order[neighbour] + 1;
        }
        if l != NIL {
            right[l] = rt;
        }
        if rt != NIL {
            left[rt] = l;
        }
    }
    out
}

/// Returns the positions of `s` sorted by `(value, index)` and by
/// `(value, reverse index)`.
///
/// When the value range is below `n^3` a three-pass radix sort is used, which
/// keeps the whole preprocessing linear; otherwise falls back to comparison
/// sorting.
pub(crate) fn sorted_orders(s: &[i64]) -> (Vec<usize>, Vec<usize>) {
    let n = s.len();
    if n >= 2 {
        let lo = *s.iter().min().unwrap();
        let hi = *s.iter().max().unwrap();
        let range = (hi as i128 - lo as i128) as u128;
        let base = n as u128;
        if range < base * base * base {
            let keys: Vec<u64> = s.iter().map(|&v| (v as i128 - lo as i128) as u64).collect();
            let forward: Vec<usize> = (0..n).collect();
            let backward: Vec<usize> = (0..n).rev().collect();
            return (
                radix_sort(&keys, forward, n as u64),
                radix_sort(&keys, backward, n as u64),
            );
        }
    }
    let mut by_index: Vec<usize> = (0..n).collect();
    by_index.sort_unstable_by_key(|&i| (s[i], i));
    let mut by_index_rev: Vec<usize> = (0..n).collect();
    by_index_rev.sort_unstable_by_key(|&i| (s[i], std::cmp::Reverse(i)));
    (by_index, by_index_rev)
}

/// Stable LSD sort of `order` by `keys[i] < base^3`.
fn radix_sort(keys: &[u64], mut order: Vec<usize>, base: u64) -> Vec<usize> {
    let mut buf = vec![0; order.len()];
    let mut count = vec![0usize; base as usize + 1];
    let mut div = 1u64;
    for _ in 0..3 {
        count.iter_mut().for_each(|c| *c = 0);
        for &i in &order {
            count[((keys[i] / div) % base) as usize + 1] += 1;
        }
        for d in 1..count.len() {
            count[d] += count[d - 1];
        }
        for &i in &order {
            let d = ((keys[i] / div) % base) as usize;
            buf[count[d]] = i;
            count[d] += 1;
        }
        std::mem::swap(&mut order, &mut buf);
        div = div.saturating_mul(base);
    }
    order
}

pub fn prev_next(s: &[i64]) -> PrevNext {
    PrevNext::new(s)
}

/// One step of incremental verification: with `window[..i]` known to be
/// order-isomorphic to `pattern[..i]`, checks position `i`.
pub fn verify_step(pn: &PrevNext, window: &[i64], i: usize) -> bool {
    pn.extends(window, i, &mut 0)
}

/// Whether `s` and `t` are order-isomorphic.
pub fn order_isomorphic(s: &[i64], t: &[i64]) -> Result<bool> {
    if s.len() != t.len() {
        return Err(OppmError::LengthMismatch {
            left: s.len(),
            right: t.len(),
        });
    }
    let pn = PrevNext::new(s);
    Ok((0..s.len()).all(|i| verify_step(&pn, t, i)))
}

/// Order-preserving Z-array: `z[i]` is the length of the longest substring
/// starting at `i` that is order-isomorphic to a prefix of `s`.
///
/// `pn` must be `prev_next(s)`.
pub fn z_array(s: &[i64], pn: &PrevNext) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    // s[l..r] is order-isomorphic to s[..r - l]
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        let mut k = if i < r { z[i - l].min(r - i) } else { 0 };
        let window = &s[i..];
        while i + k < n && pn.extends(window, k, &mut 0) {
            k += 1;
        }
        z[i] = k;
        if i + k > r {
            l = i;
            r = i + k;
        }
    }
    z
}

/// Z-array of a pattern against another string: `out[i]` is the longest `j`
/// with `pattern[..j]` order-isomorphic to `text[i..i + j]`.
///
/// `pn` and `pattern_z` are the Prev/Next arrays and [`z_array`] of the
/// pattern.
pub fn z_against(pn: &PrevNext, pattern_z: &[usize], text: &[i64]) -> Vec<usize> {
    let m = pn.len();
    let n = text.len();
    let mut out = vec![0; n];
    let (mut l, mut r) = (0, 0);
    for i in 0..n {
        let mut k = if i < r {
            pattern_z[i - l].min(r - i)
        } else {
            0
        };
        let window = &text[i..];
        while k < m && i + k < n && pn.extends(window, k, &mut 0) {
            k += 1;
        }
        out[i] = k;
        if i + k > r {
            l = i;
            r = i + k;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pairs(s: &[i64], t: &[i64]) -> bool {
        (0..s.len()).all(|i| (0..s.len()).all(|j| s[i].cmp(&s[j]) == t[i].cmp(&t[j])))
    }

    #[test]
    fn prev_next_table() {
        let pn = prev_next(&[18, 22, 12, 50, 10, 17]);
        assert_eq!(pn.prev(), &[0, 1, 0, 2, 0, 3]);
        assert_eq!(pn.next(), &[0, 0, 1, 0, 3, 1]);
    }

    #[test]
    fn prev_next_trivial() {
        let pn = prev_next(&[1, 2, 3]);
        assert_eq!(pn.prev(), &[0, 1, 2]);
        assert_eq!(pn.next(), &[0, 0, 0]);

        let pn = prev_next(&[5, 5, 5]);
        assert_eq!(pn.prev(), &[0, 1, 2]);
        assert_eq!(pn.next(), &[0, 1, 2]);

        assert!(prev_next(&[]).is_empty());
        assert_eq!(prev_next(&[7]).prev(), &[0]);
    }

    #[test]
    fn wide_values_take_comparison_sort() {
        let s = [i64::MIN, i64::MAX, 0, i64::MAX, -5];
        let pn = prev_next(&s);
        assert_eq!(pn.prev(), &[0, 1, 1, 2, 1]);
        assert_eq!(pn.next(), &[0, 0, 2, 2, 3]);
    }

    #[test]
    fn radix_and_comparison_orders_agree() {
        let s = [3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5];
        let (a, b) = sorted_orders(&s);
        let mut c: Vec<usize> = (0..s.len()).collect();
        c.sort_by_key(|&i| (s[i], i));
        let mut d: Vec<usize> = (0..s.len()).collect();
        d.sort_by_key(|&i| (s[i], std::cmp::Reverse(i)));
        assert_eq!(a, c);
        assert_eq!(b, d);
    }

    #[test]
    fn isomorphism_examples() {
        assert!(order_isomorphic(&[12, 35, 5], &[25, 30, 21]).unwrap());
        assert!(!order_isomorphic(&[12, 35, 5], &[11, 13, 20]).unwrap());
        assert!(order_isomorphic(&[], &[]).unwrap());
        assert_eq!(
            order_isomorphic(&[1, 2], &[1]),
            Err(OppmError::LengthMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn verify_step_examples() {
        let p = [18, 22, 12];
        let pn = prev_next(&p);
        let w = [25, 30, 21];
        assert!(all_pairs(&p[..2], &w[..2]));
        assert!(verify_step(&pn, &w, 2));
        assert_eq!(all_pairs(&p, &w), verify_step(&pn, &w, 2));

        let pn = prev_next(&[5, 5]);
        assert!(!verify_step(&pn, &[3, 7], 1));
        assert!(verify_step(&pn, &[3, 7], 0));
    }

    #[test]
    fn z_array_examples() {
        let s = [18, 22, 12, 50, 10, 17];
        assert_eq!(z_array(&s, &prev_next(&s)), vec![6, 1, 3, 1, 2, 1]);
        let s = [1, 2, 3, 4];
        assert_eq!(z_array(&s, &prev_next(&s)), vec![4, 3, 2, 1]);
        assert!(z_array(&[], &prev_next(&[])).is_empty());
    }

    #[test]
    fn z_against_strips() {
        let p1 = [36, 47, 42, 44, 17, 39, 22, 12, 24, 29];
        let p2 = [9, 49, 8, 11, 12, 23, 15, 27, 42, 49];
        let pn = prev_next(&p1);
        let z = z_array(&p1, &pn);
        assert_eq!(z_against(&pn, &z, &p2), vec![2, 1, 2, 2, 3, 1, 2, 2, 2, 1]);
    }
}
