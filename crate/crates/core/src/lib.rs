//! Exact counting and exact uniform sampling of `m x n` matrices with
//! prescribed row and column sums.
//!
//! Two families are supported, selected by [`Mode`]:
//!
//! * [`Mode::Binary`]: entries in `{0, 1}` (simple bipartite graphs with a
//!   given degree sequence),
//! * [`Mode::Natural`]: entries in `{0, 1, 2, ...}` (contingency tables,
//!   bipartite multigraphs).
//!
//! Counting is a memoized recursion over rows. The state after placing the
//! first `j` rows is the vector of column-sum multiplicities
//! ([`CountsVector`]), which is what makes the recursion polynomial when the
//! column sums are bounded. The populated [`MemoTable`] then drives an exact
//! uniform sampler ([`SamplerContext`]).
//!
//! The [`ehrhart`] module uses the counter to recover the Ehrhart polynomial
//! of the Birkhoff polytope, and [`oracle`] holds brute-force reference
//! implementations for small instances.
//!
//! ```
//! use tablecount::{count, MarginSpec, Mode};
//!
//! let spec = MarginSpec::new(vec![2, 2, 1, 1], vec![3, 2, 1]);
//! let (binary, _) = count(&spec, Mode::Binary);
//! let (natural, _) = count(&spec, Mode::Natural);
//! assert_eq!(binary, 8u32.into());
//! assert_eq!(natural, 24u32.into());
//! ```

pub mod cli;
pub mod ehrhart;
pub mod enumerate;
mod error;
pub mod margins;
pub mod oracle;
pub mod sample;

pub use enumerate::{count, count_with, CountOptions, MemoTable, Mode, Stats};
pub use error::{Error, Result};
pub use margins::{conjugate, gale_ryser_feasible, Composition, CountsVector, MarginSpec};
pub use sample::{RandomSource, SamplerContext};

/// Arbitrary-precision count of matrices.
pub type BigCount = num_bigint::BigUint;

/// A dense row-major matrix with non-negative entries, as produced by the
/// sampler and the oracle.
pub type Matrix = Vec<Vec<u32>>;
