//! Tournaments: dense, bit-packed orientations of complete graphs.

mod compose;
mod io;

pub use compose::{compose_c3, Block, TriangularComposition};
pub use io::{parse, read_trn, serialize, write_trn, BlockSizes};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, InvariantViolation, Result};

const WORD: usize = 64;

/// An orientation of the complete graph on vertices `0..n`.
///
/// Row `i` is a bitset of the out-neighbours of `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Tournament {
    fn blank(n: usize) -> Self {
        let stride = n.div_ceil(WORD).max(1);
        Tournament {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.rows[i * self.stride + j / WORD];
        let bit = 1u64 << (j % WORD);
        if v {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    /// Builds a tournament from a predicate on ordered pairs `i < j`:
    /// `beats(i, j)` true orients `i -> j`, false orients `j -> i`.
    pub fn from_pair_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        check_size(n)?;
        let mut t = Self::blank(n);
        for i in 0..n {
            for j in i + 1..n {
                if beats(i, j) {
                    t.set(i, j, true);
                } else {
                    t.set(j, i, true);
                }
            }
        }
        Ok(t)
    }

    /// Builds a tournament from pair bits in lexicographic `(i, j), i < j`
    /// order, least significant bit first; a set bit orients `i -> j`.
    pub fn from_pair_bits(n: usize, bits: &[u64]) -> Result<Self> {
        let pairs = n * n.saturating_sub(1) / 2;
        if bits.len() * WORD < pairs {
            return Err(Error::InvalidSize(format!(
                "{} pair bits supplied, {pairs} needed",
                bits.len() * WORD
            )));
        }
        let mut idx = 0usize;
        Self::from_pair_fn(n, |_, _| {
            let b = bits[idx / WORD] >> (idx % WORD) & 1 == 1;
            idx += 1;
            b
        })
    }

    /// Validated construction from a full boolean matrix.
    pub fn from_matrix(matrix: &[Vec<bool>]) -> Result<Self> {
        let n = matrix.len();
        check_size(n)?;
        if let Some(row) = matrix.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidSize(format!(
                "row of length {} in a {n}x{n} matrix",
                row.len()
            )));
        }
        let t = Self::from_matrix_unchecked(matrix);
        t.validate().map_err(Error::Invalid)?;
        Ok(t)
    }

    /// Copies a square matrix without checking the tournament invariants.
    ///
    /// Only meant for exercising validation; every other operation assumes
    /// a valid tournament.
    #[doc(hidden)]
    pub fn from_matrix_unchecked(matrix: &[Vec<bool>]) -> Self {
        let n = matrix.len();
        let mut t = Self::blank(n);
        for (i, row) in matrix.iter().enumerate() {
            for (j, &a) in row.iter().enumerate().take(n) {
                t.set(i, j, a);
            }
        }
        t
    }

    /// Full matrix scan of both invariants.
    pub fn validate(&self) -> std::result::Result<(), InvariantViolation> {
        for i in 0..self.n {
            if self.arc(i, i) {
                return Err(InvariantViolation::Loop(i));
            }
            for j in i + 1..self.n {
                if self.arc(i, j) == self.arc(j, i) {
                    return Err(InvariantViolation::Orientation(i, j));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff the arc `i -> j` is present.
    #[inline]
    pub fn arc(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    /// Out-neighbourhood of `i` as a bitmask. Only valid for `n <= 64`.
    #[inline]
    pub fn out_mask(&self, i: usize) -> u64 {
        debug_assert!(self.n <= WORD);
        self.rows[i * self.stride]
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.rows[i * self.stride..(i + 1) * self.stride]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.out_degree(i)).collect()
    }

    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.arc(i, j)).collect())
            .collect()
    }

    /// Transitivity via the score sequence: a tournament is acyclic iff its
    /// out-degrees are a permutation of `0..n`.
    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.n];
        for d in self.out_degrees() {
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
        true
    }

    /// Depth-first search for any directed cycle.
    pub fn has_directed_cycle(&self) -> bool {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let mut mark = vec![Mark::New; self.n];
        for root in 0..self.n {
            if mark[root] != Mark::New {
                continue;
            }
            // (vertex, next successor to try)
            let mut stack = vec![(root, 0usize)];
            mark[root] = Mark::Active;
            while let Some(top) = stack.last_mut() {
                let (v, next) = *top;
                if next == self.n {
                    mark[v] = Mark::Done;
                    stack.pop();
                    continue;
                }
                top.1 += 1;
                if !self.arc(v, next) {
                    continue;
                }
                match mark[next] {
                    Mark::Active => return true,
                    Mark::New => {
                        mark[next] = Mark::Active;
                        stack.push((next, 0));
                    }
                    Mark::Done => {}
                }
            }
        }
        false
    }

    /// Subtournament induced by `subset`, relabelled in increasing order.
    pub fn induced(&self, subset: &VertexSubset) -> Result<Tournament> {
        let verts: Vec<usize> = subset.iter().collect();
        if verts.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&v) = verts.last().filter(|&&v| v >= self.n) {
            return Err(Error::InvalidSize(format!(
                "vertex {v} outside a tournament on {} vertices",
                self.n
            )));
        }
        Tournament::from_pair_fn(verts.len(), |a, b| self.arc(verts[a], verts[b]))
    }

    /// Checks that a vertex sequence is a Hamilton path of this tournament.
    pub fn is_hamilton_path(&self, path: &[usize]) -> bool {
        if path.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &v in path {
            if v >= self.n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        path.windows(2).all(|w| self.arc(w[0], w[1]))
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tournament({}) ", self.n)?;
        f.debug_list()
            .entries((0..self.n).map(|i| {
                (0..self.n)
                    .map(|j| if self.arc(i, j) { '1' } else { '0' })
                    .collect::<String>()
            }))
            .finish()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSize("tournaments need at least one vertex".into()));
    }
    Ok(())
}

/// Transitive tournament on `m` vertices: `i -> j` iff `i < j`.
pub fn make_transitive(m: usize) -> Result<Tournament> {
    Tournament::from_pair_fn(m, |_, _| true)
}

/// Uniformly random tournament.
///
/// The generator is ChaCha8 seeded with [`SeedableRng::seed_from_u64`]. Pairs
/// `(i, j), i < j` are visited in lexicographic order, each consuming one bit
/// of the stream of `u64` words (least significant bit first); a set bit
/// orients `i -> j`. Output is identical on every platform.
pub fn make_random(m: usize, seed: u64) -> Result<Tournament> {
    check_size(m)?;
    let pairs = m * (m - 1) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<u64> = (0..pairs.div_ceil(WORD)).map(|_| rng.next_u64()).collect();
    Tournament::from_pair_bits(m, &words)
}

/// The directed cycle `0 -> 1 -> 2 -> 0`.
pub fn cyclic_triangle() -> Tournament {
    Tournament::from_pair_fn(3, |i, j| !(i == 0 && j == 2)).expect("n = 3")
}

/// Every labelled tournament on `n` vertices, indexed by its pair bits.
///
/// Requires `n(n-1)/2 < 64`, i.e. `n <= 11`.
pub fn all_tournaments(n: usize) -> impl Iterator<Item = Tournament> {
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(pairs < WORD, "exhaustive enumeration limited to n <= 11");
    (0..1u64 << pairs).map(move |bits| Tournament::from_pair_bits(n, &[bits]).expect("valid n"))
}

/// A set of vertices stored as a bitmask.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    words: Vec<u64>,
}

impl VertexSubset {
    pub fn from_mask(mask: u64) -> Self {
        VertexSubset { words: vec![mask] }
    }

    pub fn full(n: usize) -> Self {
        Self::from_indices(0..n)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSubset::default();
        for v in indices {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        let w = v / WORD;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (v % WORD);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / WORD)
            .is_some_and(|w| w >> (v % WORD) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            })
        })
    }
}
