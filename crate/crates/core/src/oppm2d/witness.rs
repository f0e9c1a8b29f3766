use crate::opcore::{sorted_orders, z_against, z_array, PrevNext};
use crate::oppm1d::pick_witness;

use super::matrix::{serialize_columns, Matrix};

/// Two pattern cells, as `(x, y)` coordinates, whose comparison flips when
/// the pattern is shifted by the table offset `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessPair2D {
    pub i: (usize, usize),
    pub j: (usize, usize),
}

impl WitnessPair2D {
    fn flipped(self, height: usize) -> Self {
        WitnessPair2D {
            i: (self.i.0, height - 1 - self.i.1),
            j: (self.j.0, height - 1 - self.j.1),
        }
    }
}

/// The pattern columns `[0, w - a)` and `[a, w)` serialized row by row,
/// together with the order-preserving Z-array of the first against the
/// second.
///
/// Entry `b * (w - a)` of the Z-array tells how far the self-overlap at
/// offset `(a, b)` stays order-isomorphic, which is enough to read off a
/// witness for every vertical shift `b >= 0` in constant time.
#[derive(Debug, Clone)]
pub struct Strip {
    width: usize,
    height: usize,
    left: Vec<i64>,
    right: Vec<i64>,
    pn: PrevNext,
    z: Vec<usize>,
}

impl Strip {
    /// Panics unless `a < p.width()`.
    pub fn new(p: &Matrix, a: usize) -> Self {
        assert!(a < p.width(), "strip offset out of range");
        let left = serialize_columns(p, 0, p.width() - a);
        let pn = PrevNext::new(&left);
        Self::build(p, a, left, pn)
    }

    /// Like [`Strip::new`], but derives the left strip's Prev/Next arrays
    /// from sort orders of the whole serialized pattern instead of sorting
    /// again.
    fn with_orders(p: &Matrix, a: usize, orders: &(Vec<usize>, Vec<usize>)) -> Self {
        let w = p.width() - a;
        let left = serialize_columns(p, 0, w);
        let project = |order: &[usize]| -> Vec<usize> {
            order
                .iter()
                .filter(|&&k| k % p.width() < w)
                .map(|&k| (k / p.width()) * w + k % p.width())
                .collect()
        };
        let pn = PrevNext::from_orders(&left, &project(&orders.0), &project(&orders.1));
        Self::build(p, a, left, pn)
    }

    fn build(p: &Matrix, a: usize, left: Vec<i64>, pn: PrevNext) -> Self {
        let width = p.width() - a;
        let right = serialize_columns(p, a, width);
        let self_z = z_array(&left, &pn);
        let z = z_against(&pn, &self_z, &right);
        Strip {
            width,
            height: p.height(),
            left,
            right,
            pn,
            z,
        }
    }

    pub fn left(&self) -> &[i64] {
        &self.left
    }

    pub fn right(&self) -> &[i64] {
        &self.right
    }

    pub fn z(&self) -> &[usize] {
        &self.z
    }

    /// Matched length of the overlap at vertical shift `b`.
    pub fn z_at(&self, b: usize) -> usize {
        self.z[b * self.width]
    }

    /// Number of cells in the overlap at vertical shift `b`.
    pub fn overlap(&self, b: usize) -> usize {
        self.width * (self.height - b)
    }

    /// Witness for the offset `(a, b)`, `b >= 0`, or `None` when the overlap
    /// is order-isomorphic.
    pub fn witness_at(&self, b: usize) -> Option<WitnessPair2D> {
        assert!(b < self.height, "vertical shift out of range");
        let z = self.z_at(b);
        if z >= self.overlap(b) {
            return None;
        }
        let pair = pick_witness(&self.pn, &self.right[b * self.width..], z);
        let at = |s: usize| (s % self.width, s / self.width);
        Some(WitnessPair2D {
            i: at(pair.i),
            j: at(pair.j),
        })
    }
}

/// Order-preserving Z-array of the strips for horizontal offset `a`.
pub fn strip_z(p: &Matrix, a: usize) -> Vec<usize> {
    Strip::new(p, a).z
}

/// Witnesses for every offset `(a, b)` with `0 <= a < w` and `-h < b < h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTable2D {
    width: usize,
    height: usize,
    entries: Vec<Option<WitnessPair2D>>,
}

impl WitnessTable2D {
    /// Panics on an empty pattern.
    pub fn new(p: &Matrix) -> Self {
        assert!(!p.is_empty(), "empty pattern");
        let (w, h) = (p.width(), p.height());
        let mut table = WitnessTable2D {
            width: w,
            height: h,
            entries: vec![None; w * (2 * h - 1)],
        };
        // Negative shifts are positive shifts of the upside-down pattern.
        let flipped = p.flipped_vertically();
        let down = sorted_orders(p.cells());
        let up = sorted_orders(flipped.cells());
        for a in 0..w {
            let strip = Strip::with_orders(p, a, &down);
            for b in 0..h {
                let k = table.index(a, b as isize);
                table.entries[k] = strip.witness_at(b);
            }
            if h > 1 {
                let strip = Strip::with_orders(&flipped, a, &up);
                for b in 1..h {
                    let k = table.index(a, -(b as isize));
                    table.entries[k] = strip.witness_at(b).map(|pair| pair.flipped(h));
                }
            }
        }
        table
    }

    fn index(&self, a: usize, b: isize) -> usize {
        assert!(a < self.width, "horizontal offset out of range");
        assert!(
            b.unsigned_abs() < self.height,
            "vertical offset out of range"
        );
        a * (2 * self.height - 1) + (b + self.height as isize - 1) as usize
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn get(&self, a: usize, b: isize) -> Option<WitnessPair2D> {
        self.entries[self.index(a, b)]
    }
}
