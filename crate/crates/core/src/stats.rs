//! Instrumentation counters.
//!
//! Every counter tracks three-way comparisons between *text* characters.
//! Pattern preprocessing is never counted.

use std::ops::AddAssign;

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Counters {
    /// Text comparisons spent in duels.
    pub duel_comparisons: u64,
    /// Number of duels fought.
    pub duels: u64,
    /// Text comparisons spent verifying survivors.
    pub sweep_comparisons: u64,
    /// Incremental verification steps executed while sweeping.
    pub sweep_steps: u64,
    /// Text comparisons spent by the baseline scanners (KMP, naive).
    pub scan_comparisons: u64,
}

impl Counters {
    pub fn comparisons(&self) -> u64 {
        self.duel_comparisons + self.sweep_comparisons + self.scan_comparisons
    }
}

impl AddAssign for Counters {
    fn add_assign(&mut self, rhs: Self) {
        self.duel_comparisons += rhs.duel_comparisons;
        self.duels += rhs.duels;
        self.sweep_comparisons += rhs.sweep_comparisons;
        self.sweep_steps += rhs.sweep_steps;
        self.scan_comparisons += rhs.scan_comparisons;
    }
}
