//! One-dimensional order-preserving matching.
//!
//! [`Pattern1D`] holds the preprocessed pattern and runs the duel-and-sweep
//! matcher. [`KmpMatcher`] and [`naive_match_1d`] are baselines used for
//! comparison and as correctness oracles.

mod kmp;
mod matcher;
mod naive;
mod witness;

pub use self::kmp::{kmp_match_1d, KmpMatcher};
pub use self::matcher::{match_1d, Pattern1D};
pub use self::naive::{isomorphic_all_pairs, naive_match_1d, naive_match_1d_counted};
pub use self::witness::{WitnessPair1D, WitnessTable1D};

pub(crate) use self::matcher::sweep;
pub(crate) use self::witness::pick_witness;
