//! Two-dimensional order-preserving matching.
//!
//! A pattern block occurs at `(x, y)` when it is order-isomorphic to the text
//! block with that top-left corner. Isomorphism of blocks is isomorphism of
//! their row-major serializations, which gives both the strip reduction
//! ([`Pattern2D::find_by_reduction`]) and the strip Z-arrays behind the
//! witness table ([`WitnessTable2D`]).

mod matcher;
mod matrix;
mod witness;

pub use self::matcher::{
    match_2d, match_2d_reduction, naive_match_2d, naive_match_2d_counted, Pattern2D, Position,
};
pub use self::matrix::{serialize, Matrix};
pub use self::witness::{strip_z, Strip, WitnessPair2D, WitnessTable2D};
