//! Exact symmetric functions and the Witt vector functors they induce on
//! semirings: big Witt vectors over ℕ, ℤ, ℚ⁺ and ℚ, their Schur variant,
//! p-typical Witt vectors of finite length, and total positivity tests for
//! truncated power series.
//!
//! All arithmetic is over exact rationals.

pub mod bigwitt;
pub mod cache;
pub mod error;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod ptypical;
pub mod rational;
pub mod series;
pub mod symfunc;
pub mod totalpos;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{partitions_of, Partition};
pub use rational::Q;
pub use symfunc::{BasisTag, SymFunc, TensorSymFunc, DEFAULT_DEGREE_BOUND};
