//! Order-preserving pattern matching (OPPM).
//!
//! Two strings are *order-isomorphic* when every pair of positions compares
//! the same way in both. This crate finds every window of a text that is
//! order-isomorphic to a pattern, for integer sequences ([`oppm1d`]) and
//! integer matrices ([`oppm2d`]), using the duel-and-sweep method:
//!
//! 1. the pattern is preprocessed into a witness table, one entry per
//!    self-overlap offset;
//! 2. overlapping candidate windows *duel* with a single text comparison at
//!    a witness location until the survivors are pairwise consistent;
//! 3. the survivors are *swept* left to right, reusing the verified overlap
//!    of consecutive candidates.
//!
//! All positions in the public API are 0-based. The raw [`PrevNext`] arrays
//! keep the conventional 1-based encoding where 0 means "undefined".
//!
//! ```
//! let text = [10, 50, 30, 60, 40];
//! let pattern = [1, 3, 2];
//! assert_eq!(oppm::match_1d(&text, &pattern).unwrap(), vec![0, 2]);
//! ```

pub mod error;
pub mod opcore;
pub mod oppm1d;
pub mod oppm2d;
pub mod stats;

pub use crate::error::{OppmError, Result};
pub use crate::opcore::{order_isomorphic, prev_next, verify_step, z_against, z_array, PrevNext};
pub use crate::oppm1d::{
    kmp_match_1d, match_1d, naive_match_1d, KmpMatcher, Pattern1D, WitnessPair1D, WitnessTable1D,
};
pub use crate::oppm2d::{
    match_2d, match_2d_reduction, naive_match_2d, serialize, strip_z, Matrix, Pattern2D, Strip,
    WitnessPair2D, WitnessTable2D,
};
pub use crate::stats::Counters;
