use crate::error::{OppmError, Result};
use crate::opcore::{z_array, PrevNext};
use crate::stats::Counters;

use super::witness::WitnessTable1D;

/// A preprocessed pattern for duel-and-sweep matching.
///
/// Immutable once built, so one pattern can be matched against many texts
/// concurrently.
#[derive(Debug, Clone)]
pub struct Pattern1D {
    chars: Vec<i64>,
    pn: PrevNext,
    z: Vec<usize>,
    wit: WitnessTable1D,
}

impl Pattern1D {
    pub fn new(pattern: &[i64]) -> Result<Self> {
        if pattern.is_empty() {
            return Err(OppmError::EmptyPattern);
        }
        let pn = PrevNext::new(pattern);
        let z = z_array(pattern, &pn);
        let wit = WitnessTable1D::new(pattern, &pn, &z);
        Ok(Pattern1D {
            chars: pattern.to_vec(),
            pn,
            z,
            wit,
        })
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn chars(&self) -> &[i64] {
        &self.chars
    }

    pub fn prev_next(&self) -> &PrevNext {
        &self.pn
    }

    pub fn z(&self) -> &[usize] {
        &self.z
    }

    pub fn witness_table(&self) -> &WitnessTable1D {
        &self.wit
    }

    /// Duel between the candidates starting at `x` and `x + a`, returning the
    /// one that cannot match. Costs exactly one text comparison.
    ///
    /// Panics if offset `a` has no witness.
    pub fn duel(&self, text: &[i64], x: usize, a: usize, counters: &mut Counters) -> usize {
        let w = self.wit.get(a).expect("duel on a consistent offset");
        let required = self.chars[w.i].cmp(&self.chars[w.j]);
        // Both candidates read these two cells: the right one at (i, j), the
        // left one at (i + a, j + a), where the pattern relation differs.
        let base = x + a;
        counters.duels += 1;
        counters.duel_comparisons += 1;
        if text[base + w.i].cmp(&text[base + w.j]) != required {
            x + a
        } else {
            x
        }
    }

    /// Eliminates candidates until the survivors are pairwise consistent.
    /// Never eliminates a true occurrence.
    pub fn dueling_stage(&self, text: &[i64], counters: &mut Counters) -> Vec<usize> {
        let m = self.len();
        let n = text.len();
        if m > n {
            return Vec::new();
        }
        // survivors so far, pairwise consistent
        let mut stack: Vec<usize> = Vec::new();
        for x in 0..=n - m {
            let mut alive = true;
            while let Some(&y) = stack.last() {
                let a = x - y;
                if a >= m || self.wit.get(a).is_none() {
                    break;
                }
                if self.duel(text, y, a, counters) == y {
                    stack.pop();
                } else {
                    alive = false;
                    break;
                }
            }
            if alive {
                stack.push(x);
            }
        }
        stack
    }

    /// Verifies pairwise-consistent `candidates` (sorted ascending) and keeps
    /// the occurrences.
    pub fn sweeping_stage(
        &self,
        text: &[i64],
        candidates: &[usize],
        counters: &mut Counters,
    ) -> Vec<usize> {
        sweep(&self.pn, text, candidates, counters)
    }

    pub fn find(&self, text: &[i64]) -> Vec<usize> {
        self.find_counted(text, &mut Counters::default())
    }

    pub fn find_counted(&self, text: &[i64], counters: &mut Counters) -> Vec<usize> {
        let candidates = self.dueling_stage(text, counters);
        self.sweeping_stage(text, &candidates, counters)
    }
}

/// Sweeps sorted, pairwise-consistent candidates for the pattern described
/// by `pn`, carrying verified overlap from each candidate into the next.
pub(crate) fn sweep(
    pn: &PrevNext,
    text: &[i64],
    candidates: &[usize],
    counters: &mut Counters,
) -> Vec<usize> {
    let m = pn.len();
    let mut out = Vec::new();
    // length of the current candidate's prefix already known to match
    let mut known = 0;
    for (idx, &x) in candidates.iter().enumerate() {
        let window = &text[x..x + m];
        let mut k = known;
        let mut matched = true;
        while k < m {
            counters.sweep_steps += 1;
            if !pn.extends(window, k, &mut counters.sweep_comparisons) {
                matched = false;
                break;
            }
            k += 1;
        }
        if matched {
            out.push(x);
        }
        known = match candidates.get(idx + 1) {
            Some(&next) if next - x < m => {
                let a = next - x;
                if matched {
                    m - a
                } else {
                    // k is the mismatch position; the overlap before it was
                    // verified and carries over by consistency.
                    k.saturating_sub(a)
                }
            }
            _ => 0,
        };
    }
    out
}

/// Every start position of a window of `text` order-isomorphic to `pattern`.
pub fn match_1d(text: &[i64], pattern: &[i64]) -> Result<Vec<usize>> {
    Ok(Pattern1D::new(pattern)?.find(text))
}
