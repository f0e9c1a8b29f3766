use crate::error::{OppmError, Result};
use crate::oppm1d::{isomorphic_all_pairs, sweep, Pattern1D};
use crate::stats::Counters;

use super::matrix::{serialize, serialize_columns, Matrix};
use super::witness::WitnessTable2D;

/// Top-left corner `(x, y)` of an occurrence, 0-based.
pub type Position = (usize, usize);

/// A preprocessed matrix pattern.
///
/// Holds the 2D witness table for the direct duel-and-sweep matcher and the
/// serialized pattern for the strip reduction to the 1D problem.
#[derive(Debug, Clone)]
pub struct Pattern2D {
    matrix: Matrix,
    serial: Pattern1D,
    wit: WitnessTable2D,
}

impl Pattern2D {
    pub fn new(pattern: Matrix) -> Result<Self> {
        if pattern.is_empty() {
            return Err(OppmError::EmptyPattern);
        }
        let serial = Pattern1D::new(&serialize(&pattern))?;
        let wit = WitnessTable2D::new(&pattern);
        Ok(Pattern2D {
            matrix: pattern,
            serial,
            wit,
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn serial(&self) -> &Pattern1D {
        &self.serial
    }

    pub fn witness_table(&self) -> &WitnessTable2D {
        &self.wit
    }

    fn grid(&self, text: &Matrix) -> Option<(usize, usize)> {
        let (w, h) = (self.matrix.width(), self.matrix.height());
        if w > text.width() || h > text.height() {
            return None;
        }
        Some((text.width() - w + 1, text.height() - h + 1))
    }

    /// Duel between the candidates at `first` and `first + (a, b)`; returns
    /// the one that cannot match. Costs one text comparison.
    ///
    /// Panics if offset `(a, b)` has no witness.
    pub fn duel(
        &self,
        text: &Matrix,
        first: Position,
        a: usize,
        b: isize,
        counters: &mut Counters,
    ) -> Position {
        let w = self.wit.get(a, b).expect("duel on a consistent offset");
        let p = &self.matrix;
        let required = p.get(w.i.0, w.i.1).cmp(&p.get(w.j.0, w.j.1));
        let second = (first.0 + a, (first.1 as isize + b) as usize);
        counters.duels += 1;
        counters.duel_comparisons += 1;
        let ti = text.get(second.0 + w.i.0, second.1 + w.i.1);
        let tj = text.get(second.0 + w.j.0, second.1 + w.j.1);
        if ti.cmp(&tj) != required {
            second
        } else {
            first
        }
    }

    /// Eliminates candidates until every overlapping pair of survivors is
    /// consistent, never eliminating an occurrence.
    ///
    /// Each column is first reduced with a stack, as in one dimension. Then
    /// every survivor duels the live candidates of the `w - 1` columns to its
    /// left that it overlaps inconsistently. The cross-column pass costs
    /// O(w * h) lookups per candidate, so the stage is O(n^2 m^2) overall
    /// rather than O(n^2).
    pub fn dueling_stage(&self, text: &Matrix, counters: &mut Counters) -> Vec<Position> {
        let Some((cols, rows)) = self.grid(text) else {
            return Vec::new();
        };
        let (w, h) = (self.matrix.width(), self.matrix.height());
        let mut alive = vec![false; cols * rows];
        let mut stack: Vec<usize> = Vec::with_capacity(rows);
        for x in 0..cols {
            stack.clear();
            for y in 0..rows {
                let mut survives = true;
                while let Some(&y0) = stack.last() {
                    let b = y - y0;
                    if b >= h || self.wit.get(0, b as isize).is_none() {
                        break;
                    }
                    if self.duel(text, (x, y0), 0, b as isize, counters) == (x, y0) {
                        stack.pop();
                    } else {
                        survives = false;
                        break;
                    }
                }
                if survives {
                    stack.push(y);
                }
            }

            for &y in &stack {
                let mut survives = true;
                'left: for x0 in x.saturating_sub(w - 1)..x {
                    let a = x - x0;
                    for y0 in y.saturating_sub(h - 1)..(y + h).min(rows) {
                        if !alive[x0 * rows + y0] {
                            continue;
                        }
                        let b = y as isize - y0 as isize;
                        if self.wit.get(a, b).is_none() {
                            continue;
                        }
                        if self.duel(text, (x0, y0), a, b, counters) == (x0, y0) {
                            alive[x0 * rows + y0] = false;
                        } else {
                            survives = false;
                            break 'left;
                        }
                    }
                }
                if survives {
                    alive[x * rows + y] = true;
                }
            }
        }
        (0..cols)
            .flat_map(|x| (0..rows).map(move |y| (x, y)))
            .filter(|&(x, y)| alive[x * rows + y])
            .collect()
    }

    /// Verifies pairwise-consistent candidates, sorted by `(x, y)`.
    ///
    /// Candidates sharing a column are checked on the serialized column
    /// strip, where a vertical shift `dy` becomes a 1D shift of `w * dy`, so
    /// the verified overlap between vertical neighbours is reused.
    pub fn sweeping_stage(
        &self,
        text: &Matrix,
        candidates: &[Position],
        counters: &mut Counters,
    ) -> Vec<Position> {
        let w = self.matrix.width();
        let pn = self.serial.prev_next();
        let mut out = Vec::new();
        let mut starts = Vec::new();
        for column in candidates.chunk_by(|p, q| p.0 == q.0) {
            let x = column[0].0;
            let strip = serialize_columns(text, x, w);
            starts.clear();
            starts.extend(column.iter().map(|&(_, y)| y * w));
            out.extend(
                sweep(pn, &strip, &starts, counters)
                    .into_iter()
                    .map(|s| (x, s / w)),
            );
        }
        out
    }

    pub fn find(&self, text: &Matrix) -> Vec<Position> {
        self.find_counted(text, &mut Counters::default())
    }

    pub fn find_counted(&self, text: &Matrix, counters: &mut Counters) -> Vec<Position> {
        let candidates = self.dueling_stage(text, counters);
        self.sweeping_stage(text, &candidates, counters)
    }

    /// Matches through the 1D matcher: for each column `x`, the strip of
    /// width `w` starting there is serialized and searched for the
    /// serialized pattern; only hits at multiples of `w` are block
    /// occurrences.
    pub fn find_by_reduction(&self, text: &Matrix) -> Vec<Position> {
        self.find_by_reduction_counted(text, &mut Counters::default())
    }

    pub fn find_by_reduction_counted(
        &self,
        text: &Matrix,
        counters: &mut Counters,
    ) -> Vec<Position> {
        let Some((cols, _)) = self.grid(text) else {
            return Vec::new();
        };
        let w = self.matrix.width();
        let mut out = Vec::new();
        for x in 0..cols {
            let strip = serialize_columns(text, x, w);
            out.extend(
                self.serial
                    .find_counted(&strip, counters)
                    .into_iter()
                    .filter(|s| s % w == 0)
                    .map(|s| (x, s / w)),
            );
        }
        out
    }
}

/// Occurrences of `pattern` in `text` by witness dueling and sweeping.
pub fn match_2d(text: &Matrix, pattern: &Matrix) -> Result<Vec<Position>> {
    Ok(Pattern2D::new(pattern.clone())?.find(text))
}

/// Occurrences of `pattern` in `text` through the 1D reduction.
pub fn match_2d_reduction(text: &Matrix, pattern: &Matrix) -> Result<Vec<Position>> {
    Ok(Pattern2D::new(pattern.clone())?.find_by_reduction(text))
}

/// Checks every block pair by pair.
pub fn naive_match_2d(text: &Matrix, pattern: &Matrix) -> Vec<Position> {
    naive_match_2d_counted(text, pattern, &mut Counters::default())
}

pub fn naive_match_2d_counted(
    text: &Matrix,
    pattern: &Matrix,
    counters: &mut Counters,
) -> Vec<Position> {
    let (w, h) = (pattern.width(), pattern.height());
    if pattern.is_empty() || w > text.width() || h > text.height() {
        return Vec::new();
    }
    let p = serialize(pattern);
    let mut out = Vec::new();
    for x in 0..=text.width() - w {
        for y in 0..=text.height() - h {
            let block = serialize(&text.block(x, y, w, h));
            counters.scan_comparisons += pair_checks(&p, &block);
            if isomorphic_all_pairs(&p, &block) {
                out.push((x, y));
            }
        }
    }
    out
}

// comparisons an early-exit all-pairs check performs
fn pair_checks(p: &[i64], t: &[i64]) -> u64 {
    let mut n = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            n += 1;
            if p[i].cmp(&p[j]) != t[i].cmp(&t[j]) {
                return n;
            }
        }
    }
    n
}
