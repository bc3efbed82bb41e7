//! Longest common subsequence counting.
//!
//! For two sequences of comparable symbols this crate computes the length of
//! a longest common subsequence (LCS), the exact number of *distinct* LCSs
//! (as symbol strings) and the exact number of LCS *embeddings* (position
//! pairs in both inputs). Counts are arbitrary-precision, so they never
//! overflow.
//!
//! Two algorithm families are provided, both `O(mn)` time:
//!
//! * [`count_distinct_full`] / [`count_embeddings_full`] fill the whole
//!   `(m+1) x (n+1)` table.
//! * [`count_linear_space`] keeps a single rolling column of
//!   `min(m, n) + 1` cells.
//!
//! The [`oracle`] module holds exponential brute-force versions of both
//! counts for cross-checking on small inputs.
//!
//! ```
//! use lcscount::{count_linear_space, CountKind};
//!
//! let a = b"ABCBDAB";
//! let b = b"BDCABA";
//! let (len, distinct) = count_linear_space(a, b, CountKind::Distinct);
//! assert_eq!(len, 4);
//! assert_eq!(distinct, 3u32.into());
//! ```
//!
//! Runnable walkthroughs live in the crate's `examples/` directory
//! (`cargo run --example <name>`).

pub mod cli;
mod full;
mod length;
pub mod oracle;
mod rolling;
mod summary;
pub mod trace;

pub use full::{count_distinct_full, count_embeddings_full, count_full, count_full_traced};
pub use length::lcs_length;
pub use rolling::{count_linear_space, count_linear_space_traced, RollingState};
pub use summary::{Algorithm, LcsSummary, Selection};

/// Exact nonnegative count of LCSs or LCS embeddings.
pub type Count = num_bigint::BigUint;

/// Which quantity a counting pass produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountKind {
    /// Distinct LCSs, compared as symbol strings.
    Distinct,
    /// LCS embeddings, i.e. distinct pairs of position vectors.
    Embeddings,
}

impl CountKind {
    pub const ALL: [CountKind; 2] = [CountKind::Distinct, CountKind::Embeddings];
}
