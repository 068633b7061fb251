use num_bigint::BigUint;

use super::hamilton::path_endpoint_table;
use super::{check_cap, Caps};
use crate::error::{Error, Result};
use crate::num::Count;
use crate::tournament::Tournament;

/// `P(T, k)` for every `k = 1..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCoverProfile<C = BigUint> {
    counts: Vec<C>,
}

impl<C: Count> PathCoverProfile<C> {
    /// Tournament size `m`.
    pub fn m(&self) -> usize {
        self.counts.len()
    }

    /// Number of `k`-path covers, `1 <= k <= m`.
    pub fn get(&self, k: usize) -> Option<&C> {
        k.checked_sub(1).and_then(|i| self.counts.get(i))
    }

    /// Counts in order `k = 1, 2, ..., m`.
    pub fn counts(&self) -> &[C] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<C> {
        self.counts
    }
}

/// Hamilton path count of the subtournament induced by every vertex subset,
/// indexed by bitmask (`result[0]` is zero).
pub fn induced_path_counts<C: Count>(t: &Tournament) -> Result<Vec<C>> {
    let n = t.n();
    let dp = path_endpoint_table::<C>(t, (1u64 << n) - 1)?;
    dp.chunks(n)
        .map(|row| {
            let mut s = C::zero();
            for c in row {
                s.try_add_assign(c).ok_or(Error::Overflow)?;
            }
            Ok(s)
        })
        .collect()
}

/// `covers[S][j]` = number of `j`-path covers of the vertex set `S`.
///
/// A cover of `S` is a partition into blocks with one Hamilton path per
/// block. Peeling off the block that holds the lowest vertex of `S`
/// generates every unordered partition exactly once.
fn cover_polynomials<C: Count>(t: &Tournament) -> Result<Vec<Vec<C>>> {
    let n = t.n();
    let hp = induced_path_counts::<C>(t)?;
    let size = 1usize << n;
    let mut covers: Vec<Vec<C>> = Vec::with_capacity(size);
    covers.push(vec![C::one()]);
    for s in 1..size {
        let mut poly = vec![C::zero(); s.count_ones() as usize + 1];
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut sub = rest;
        loop {
            let block = sub | low;
            let remainder = &covers[s ^ block];
            for (j, c) in remainder.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = hp[block].try_mul(c).ok_or(Error::Overflow)?;
                poly[j + 1].try_add_assign(&term).ok_or(Error::Overflow)?;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        covers.push(poly);
    }
    Ok(covers)
}

pub fn path_cover_profile_with<C: Count>(t: &Tournament, caps: &Caps) -> Result<PathCoverProfile<C>> {
    check_cap("path cover count", t.n(), caps.covers)?;
    let mut covers = cover_polynomials::<C>(t)?;
    let mut full = covers.pop().expect("at least the full set");
    full.remove(0);
    Ok(PathCoverProfile { counts: full })
}

/// Every `P(T, k)` in one pass over the shared subset tables.
pub fn path_cover_profile(t: &Tournament) -> Result<PathCoverProfile> {
    path_cover_profile_with(t, &Caps::default())
}

pub fn count_k_path_covers_with<C: Count>(t: &Tournament, k: usize, caps: &Caps) -> Result<C> {
    if k == 0 || k > t.n() {
        return Err(Error::KOutOfRange { k, n: t.n() });
    }
    let profile = path_cover_profile_with::<C>(t, caps)?;
    Ok(profile.into_counts().swap_remove(k - 1))
}

/// Number of sets of `k` vertex-disjoint directed paths covering `T`.
pub fn count_k_path_covers(t: &Tournament, k: usize) -> Result<BigUint> {
    count_k_path_covers_with(t, k, &Caps::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::count_hamilton_paths;
    use crate::tournament::{cyclic_triangle, make_random, make_transitive};

    fn nums(p: &PathCoverProfile) -> Vec<u64> {
        p.counts().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn triangle_and_transitive_profiles() {
        assert_eq!(nums(&path_cover_profile(&cyclic_triangle()).unwrap()), vec![3, 3, 1]);
        assert_eq!(nums(&path_cover_profile(&make_transitive(4).unwrap()).unwrap()), vec![1, 7, 6, 1]);
        assert_eq!(nums(&path_cover_profile(&make_transitive(1).unwrap()).unwrap()), vec![1]);
    }

    #[test]
    fn boundary_k() {
        for seed in 0..10 {
            let t = make_random(7, seed).unwrap();
            assert_eq!(count_k_path_covers(&t, 7).unwrap(), BigUint::from(1u8));
            assert_eq!(count_k_path_covers(&t, 1).unwrap(), count_hamilton_paths(&t).unwrap());
        }
    }

    #[test]
    fn k_range_and_cap() {
        let t = make_transitive(4).unwrap();
        assert_eq!(count_k_path_covers(&t, 0), Err(Error::KOutOfRange { k: 0, n: 4 }));
        assert_eq!(count_k_path_covers(&t, 5), Err(Error::KOutOfRange { k: 5, n: 4 }));
        assert!(matches!(
            path_cover_profile_with::<u64>(&t, &Caps::uniform(3)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn induced_counts_of_triangle() {
        let hp: Vec<u64> = induced_path_counts(&cyclic_triangle()).unwrap();
        // subsets: {}, {0}, {1}, {0,1}, {2}, {0,2}, {1,2}, {0,1,2}
        assert_eq!(hp, vec![0, 1, 1, 1, 1, 1, 1, 3]);
    }
}
