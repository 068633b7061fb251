//! Permutation and partition enumeration, independent of the subset DPs.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

pub const BRUTE_CYCLES_MAX: usize = 10;
pub const BRUTE_COVERS_MAX: usize = 8;

/// Visits every permutation of `items` (Heap's algorithm).
fn for_each_permutation(items: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    f(items);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            items.swap(j, i);
            f(items);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn is_directed_path(t: &Tournament, seq: &[usize]) -> bool {
    seq.windows(2).all(|w| t.arc(w[0], w[1]))
}

fn too_large(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { what, n, cap });
    }
    Ok(())
}

/// Hamilton cycles counted over all cyclic orders with vertex 0 first.
pub fn brute_force_cycles(t: &Tournament) -> Result<BigUint> {
    let n = t.n();
    too_large("brute-force cycle count", n, BRUTE_CYCLES_MAX)?;
    let mut rest: Vec<usize> = (1..n).collect();
    let mut count = 0u64;
    let mut seq = vec![0usize; n];
    for_each_permutation(&mut rest, &mut |p| {
        seq[1..].copy_from_slice(p);
        if is_directed_path(t, &seq) && t.arc(seq[n - 1], 0) {
            count += 1;
        }
    });
    Ok(count.into())
}

/// Hamilton paths counted over all `n!` orderings.
pub fn brute_force_paths(t: &Tournament) -> Result<BigUint> {
    let n = t.n();
    too_large("brute-force path count", n, BRUTE_CYCLES_MAX)?;
    let mut all: Vec<usize> = (0..n).collect();
    let mut count = 0u64;
    for_each_permutation(&mut all, &mut |p| {
        if is_directed_path(t, p) {
            count += 1;
        }
    });
    Ok(count.into())
}

fn block_path_count(t: &Tournament, block: &[usize]) -> u64 {
    let mut items = block.to_vec();
    let mut count = 0;
    for_each_permutation(&mut items, &mut |p| {
        if is_directed_path(t, p) {
            count += 1;
        }
    });
    count
}

/// `k`-path covers counted over every set partition into `k` blocks
/// (restricted growth strings), multiplying per-block path counts.
pub fn brute_force_path_covers(t: &Tournament, k: usize) -> Result<BigUint> {
    let n = t.n();
    too_large("brute-force path cover count", n, BRUTE_COVERS_MAX)?;
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let mut labels = vec![0usize; n];
    let mut total = 0u64;
    partitions(&mut labels, 1, 1, k, &mut |labels| {
        let mut product = 1u64;
        for b in 0..k {
            let block: Vec<usize> = (0..n).filter(|&v| labels[v] == b).collect();
            product *= block_path_count(t, &block);
            if product == 0 {
                break;
            }
        }
        total += product;
    });
    Ok(total.into())
}

/// Restricted growth strings: `labels[0] = 0`, each label at most one more
/// than the running maximum, exactly `k` distinct labels.
fn partitions(labels: &mut [usize], pos: usize, used: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    let n = labels.len();
    if pos == n {
        if used == k {
            f(labels);
        }
        return;
    }
    // not enough positions left to open the remaining blocks
    if k - used.min(k) > n - pos || used > k {
        return;
    }
    for label in 0..=used.min(k - 1) {
        labels[pos] = label;
        let next_used = if label == used { used + 1 } else { used };
        partitions(labels, pos + 1, next_used, k, f);
    }
}
