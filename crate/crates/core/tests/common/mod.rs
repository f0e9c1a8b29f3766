// Brute-force oracles, written from the definitions only.
#![allow(dead_code)]

use oppm::Matrix;
use rand::Rng;

pub fn iso(s: &[i64], t: &[i64]) -> bool {
    s.len() == t.len()
        && (0..s.len()).all(|i| (0..s.len()).all(|j| (s[i] <= s[j]) == (t[i] <= t[j])))
}

pub fn brute_z(s: &[i64]) -> Vec<usize> {
    (0..s.len())
        .map(|i| {
            let mut j = 0;
            while i + j < s.len() && iso(&s[..j + 1], &s[i..i + j + 1]) {
                j += 1;
            }
            j
        })
        .collect()
}

pub fn brute_z_against(p: &[i64], t: &[i64]) -> Vec<usize> {
    (0..t.len())
        .map(|i| {
            let mut j = 0;
            while j < p.len() && i + j < t.len() && iso(&p[..j + 1], &t[i..i + j + 1]) {
                j += 1;
            }
            j
        })
        .collect()
}

pub fn brute_match(t: &[i64], p: &[i64]) -> Vec<usize> {
    if p.len() > t.len() {
        return Vec::new();
    }
    (0..=t.len() - p.len())
        .filter(|&x| iso(p, &t[x..x + p.len()]))
        .collect()
}

/// Smallest `j` of any witness pair for shift `a`, if the overlap is not
/// order-isomorphic.
pub fn smallest_witness_j(p: &[i64], a: usize) -> Option<usize> {
    let len = p.len() - a;
    (0..len).find(|&j| (0..j).any(|i| p[i].cmp(&p[j]) != p[i + a].cmp(&p[j + a])))
}

/// The two overlapping regions of `p` superimposed on itself at `(a, b)`,
/// serialized in the same cell order.
pub fn overlap_2d(p: &Matrix, a: usize, b: isize) -> (Vec<i64>, Vec<i64>) {
    let (w, h) = (p.width() as isize, p.height() as isize);
    let (mut first, mut second) = (Vec::new(), Vec::new());
    for y in 0..h {
        for x in 0..w {
            let (sx, sy) = (x + a as isize, y + b);
            if sx < w && sy >= 0 && sy < h {
                first.push(p.get(x as usize, y as usize));
                second.push(p.get(sx as usize, sy as usize));
            }
        }
    }
    (first, second)
}

pub fn brute_match_2d(t: &Matrix, p: &Matrix) -> Vec<(usize, usize)> {
    let (w, h) = (p.width(), p.height());
    let mut out = Vec::new();
    if w > t.width() || h > t.height() {
        return out;
    }
    for x in 0..=t.width() - w {
        for y in 0..=t.height() - h {
            let mut block = Vec::new();
            for yy in y..y + h {
                for xx in x..x + w {
                    block.push(t.get(xx, yy));
                }
            }
            if iso(p.cells(), &block) {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn random_seq<R: Rng>(rng: &mut R, len: usize, sigma: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(1..=sigma)).collect()
}

pub fn random_matrix<R: Rng>(rng: &mut R, w: usize, h: usize, sigma: i64) -> Matrix {
    Matrix::new(w, h, random_seq(rng, w * h, sigma)).unwrap()
}

/// All sequences of length `len` over `1..=sigma`.
pub fn all_strings(len: usize, sigma: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (1..=sigma).map(move |c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

/// The pattern of the worked 2D example. Only columns 1, 2, 4 and 5 are
/// known; the middle column is filler and does not take part in any offset
/// with a = 3.
pub fn sample_5x5() -> Matrix {
    Matrix::from_rows(&[
        [36, 47, 50, 9, 49],
        [42, 44, 3, 8, 11],
        [17, 39, 31, 12, 23],
        [22, 12, 6, 15, 27],
        [24, 29, 33, 42, 49],
    ])
    .unwrap()
}
