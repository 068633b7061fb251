//! Exact counting of Hamilton paths, Hamilton cycles and k-path covers.
//!
//! The dynamic programs are generic over [`Count`](crate::num::Count); the
//! plain-named entry points count in [`BigCount`](crate::BigCount).

mod brute;
mod covers;
mod hamilton;

pub use brute::{brute_force_cycles, brute_force_path_covers, brute_force_paths, BRUTE_CYCLES_MAX, BRUTE_COVERS_MAX};
pub use covers::{
    count_k_path_covers, count_k_path_covers_with, induced_path_counts, path_cover_profile,
    path_cover_profile_with, PathCoverProfile,
};
pub use hamilton::{
    count_hamilton_cycles, count_hamilton_cycles_with, count_hamilton_paths, count_hamilton_paths_with,
    find_hamilton_path, HamiltonPath,
};

use crate::error::{Error, Result};

/// Size limits for the exponential-space dynamic programs.
///
/// The subset tables hold `2^n · n` counts, so these are memory budgets
/// rather than correctness limits. Masks are `u64`, which puts a hard
/// ceiling of 63 on either cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for Hamilton path and cycle counting.
    pub paths: usize,
    /// Largest `n` for path-cover counting.
    pub covers: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            paths: 24,
            covers: 20,
        }
    }
}

impl Caps {
    /// Both caps set to `cap`.
    pub fn uniform(cap: usize) -> Self {
        Caps {
            paths: cap,
            covers: cap,
        }
    }
}

const HARD_LIMIT: usize = 63;

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(HARD_LIMIT);
    if n > cap {
        return Err(Error::CapExceeded { what, n, cap });
    }
    Ok(())
}
