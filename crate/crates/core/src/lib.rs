//! Longest common substring with k mismatches (k-LCF).
//!
//! Given two sequences and a budget `k`, find the longest pair of equal-length
//! substrings, one from each sequence, that differ in at most `k` positions.
//!
//! Three solvers are provided, all exact and all agreeing with the quadratic
//! reference in [`oracle`]:
//!
//! * [`neighborhood`]: binary search on the answer length, testing each
//!   candidate length with sorted indexes of k-deletion neighborhoods.
//! * [`strided`]: diagonal scans visiting every h-th cell with a shrinking
//!   stride, extending through each visited cell with O(k) LCE queries.
//! * [`tabulation`]: word-packed mismatch vectors per diagonal, scanned with
//!   lookup tables for the longest window with at most k set bits.
//!
//! With the default `parallel` feature the per-diagonal and per-keyword work
//! runs on the rayon thread pool; without it everything is sequential and the
//! results are identical.
//!
//! ```
//! use klcf::{solve, Algorithm, SolveConfig, Text};
//!
//! let text = Text::from_bytes(b"abba", b"aaba");
//! let sol = solve(&text, 1, Algorithm::Strided, &SolveConfig::default())?;
//! assert_eq!((sol.span.len, sol.span.pos1(), sol.span.pos2()), (4, 1, 1));
//! assert_eq!(sol.span.mismatches, vec![1]);
//! # Ok::<(), klcf::Error>(())
//! ```

pub mod error;
pub mod gen;
pub mod lce;
pub mod neighborhood;
pub mod oracle;
mod par;
pub mod solve;
pub mod strided;
pub mod tabulation;
pub mod text;

pub use error::{Error, Result};
pub use lce::{build_lce, LceIndex};
pub use oracle::{klcf_bounds, klcf_oracle, verify_match};
pub use solve::{solve, solve_with_index, Algorithm, Solution, SolveConfig, Solver};
pub use text::{MatchSpan, Seq, Text, Window};
