use std::cmp::Ordering;

use crate::opcore::PrevNext;

/// Two pattern positions `i < j` whose comparison flips when the pattern is
/// shifted by the table offset `a`: `cmp(P[i], P[j]) != cmp(P[i+a], P[j+a])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessPair1D {
    pub i: usize,
    pub j: usize,
}

/// Witness pairs for every offset `0 < a < m`; `None` marks an offset whose
/// self-overlap is order-isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTable1D {
    // entries[0] is unused
    entries: Vec<Option<WitnessPair1D>>,
}

impl WitnessTable1D {
    /// Builds the table from the pattern, its Prev/Next arrays and its
    /// Z-array in linear time.
    pub fn new(pattern: &[i64], pn: &PrevNext, z: &[usize]) -> Self {
        let m = pattern.len();
        let mut entries = vec![None; m.max(1)];
        for a in 1..m {
            let overlap = m - a;
            if z[a] < overlap {
                entries[a] = Some(pick_witness(pn, &pattern[a..], z[a]));
            }
        }
        WitnessTable1D { entries }
    }

    /// Pattern length minus one, the number of meaningful offsets.
    pub fn offsets(&self) -> usize {
        self.entries.len() - 1
    }

    /// Witness for offset `a`, or `None` when the overlap is consistent.
    ///
    /// Panics if `a` is 0 or not below the pattern length.
    #[inline]
    pub fn get(&self, a: usize) -> Option<WitnessPair1D> {
        assert!(a >= 1, "offset must be positive");
        self.entries[a]
    }
}

/// Chooses the witness partner for a prefix verification that failed at
/// position `j` of `shifted`, where `shifted[..j]` is order-isomorphic to the
/// pattern prefix described by `pn`.
///
/// The failing check compared `shifted[j]` against the positions `prev[j]`
/// and `next[j]`; whichever side broke forms the pair. The prev side wins
/// when both broke.
pub(crate) fn pick_witness(pn: &PrevNext, shifted: &[i64], j: usize) -> WitnessPair1D {
    let lo = pn.prev()[j];
    let hi = pn.next()[j];
    let v = shifted[j];
    let lo_broken = lo != 0
        && if pn.is_tied(j) {
            shifted[lo - 1] != v
        } else {
            shifted[lo - 1].cmp(&v) != Ordering::Less
        };
    if lo_broken {
        WitnessPair1D { i: lo - 1, j }
    } else {
        debug_assert!(hi != 0, "verification cannot fail without a partner");
        WitnessPair1D { i: hi - 1, j }
    }
}
