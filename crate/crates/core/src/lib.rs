//! Exact and asymptotic counting of Hamilton cycles in tournaments.
//!
//! The centrepiece is the triangular composition `C3(T1, T2, T3)`, whose
//! Hamilton cycles decompose into one `k`-path cover per part joined in
//! `k!³/k` ways. The crate provides:
//!
//! * [`tournament`]: construction, validation and the `.trn` file format;
//! * [`exact`]: subset dynamic programs for Hamilton paths, cycles and
//!   path covers, with brute-force oracles;
//! * [`formula`]: Stirling numbers, the triangular identity and its lower
//!   bound, ordered Bell numbers, all as exact big integers;
//! * [`asymptotics`]: log-space asymptotic forms;
//! * [`experiments`]: Monte Carlo checks, convergence tables, self test.
//!
//! Exact counting is generic over [`num::Count`] and log-space evaluation
//! over [`num_traits::Float`]; the aliases below fix the usual choices.

pub mod asymptotics;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod formula;
pub mod num;
pub mod tournament;

pub use error::{Error, Result};
pub use tournament::{Tournament, TriangularComposition, VertexSubset};

/// Exact nonnegative count.
pub type BigCount = num_bigint::BigUint;

/// Positive real in natural-log space, double precision.
pub type LogValue = asymptotics::Log<f64>;

/// Single-precision variant of [`LogValue`].
pub type LogValue32 = asymptotics::Log<f32>;

/// Path-cover profile counted in [`BigCount`].
pub type PathCoverProfile = exact::PathCoverProfile<BigCount>;

/// Parameters of the limiting normal law, double precision.
pub type NormalParams = asymptotics::NormalParams<f64>;
