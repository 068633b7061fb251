use num_bigint::BigUint;

use super::{check_cap, Caps};
use crate::error::{Error, Result};
use crate::num::Count;
use crate::tournament::Tournament;

/// A Hamilton path given as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonPath(Vec<usize>);

impl HamiltonPath {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn validates(&self, t: &Tournament) -> bool {
        t.is_hamilton_path(&self.0)
    }
}

/// Fills `dp[mask * n + v]` = number of directed paths covering exactly
/// `mask` and ending at `v`, starting from the single-vertex paths in `seeds`.
pub(crate) fn path_endpoint_table<C: Count>(t: &Tournament, seeds: u64) -> Result<Vec<C>> {
    let n = t.n();
    let full = (1u64 << n) - 1;
    let mut dp = vec![C::zero(); n << n];
    for v in 0..n {
        if seeds >> v & 1 == 1 {
            dp[(1 << v) * n + v] = C::one();
        }
    }
    let outs: Vec<u64> = (0..n).map(|v| t.out_mask(v)).collect();
    for mask in 1..full {
        // every successor mask is larger, so its states sit past the split
        let split = (mask as usize + 1) * n;
        let (lo, hi) = dp.split_at_mut(split);
        let mut ends = mask;
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let src = &lo[mask as usize * n + v];
            if src.is_zero() {
                continue;
            }
            let mut next = outs[v] & !mask;
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                let idx = (mask | 1 << u) as usize * n + u - split;
                hi[idx].try_add_assign(src).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(dp)
}

/// Number of Hamilton paths, by subset DP over `(visited set, last vertex)`.
pub fn count_hamilton_paths_with<C: Count>(t: &Tournament, caps: &Caps) -> Result<C> {
    let n = t.n();
    check_cap("hamilton path count", n, caps.paths)?;
    let full = (1u64 << n) - 1;
    let dp = path_endpoint_table::<C>(t, full)?;
    let mut total = C::zero();
    for c in &dp[full as usize * n..] {
        total.try_add_assign(c).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

pub fn count_hamilton_paths(t: &Tournament) -> Result<BigUint> {
    count_hamilton_paths_with(t, &Caps::default())
}

/// Number of Hamilton cycles, each counted once.
///
/// Paths are anchored at vertex 0 and closed by an arc back to it, so no
/// rotation is counted twice.
pub fn count_hamilton_cycles_with<C: Count>(t: &Tournament, caps: &Caps) -> Result<C> {
    let n = t.n();
    check_cap("hamilton cycle count", n, caps.paths)?;
    if n < 3 {
        return Ok(C::zero());
    }
    let full = (1u64 << n) - 1;
    let dp = path_endpoint_table::<C>(t, 1)?;
    let mut total = C::zero();
    for v in 1..n {
        if t.arc(v, 0) {
            total
                .try_add_assign(&dp[full as usize * n + v])
                .ok_or(Error::Overflow)?;
        }
    }
    Ok(total)
}

pub fn count_hamilton_cycles(t: &Tournament) -> Result<BigUint> {
    count_hamilton_cycles_with(t, &Caps::default())
}

/// A Hamilton path built by insertion: each new vertex goes in front of the
/// first path vertex it beats, or at the end if it beats none.
pub fn find_hamilton_path(t: &Tournament) -> HamiltonPath {
    let mut path: Vec<usize> = Vec::with_capacity(t.n());
    for v in 0..t.n() {
        let at = path.iter().position(|&w| t.arc(v, w)).unwrap_or(path.len());
        path.insert(at, v);
    }
    HamiltonPath(path)
}
