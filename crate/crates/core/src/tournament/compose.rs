use crate::error::{Error, Result};

use super::Tournament;

/// Which part of a triangular composition a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    First,
    Second,
    Third,
}

impl Block {
    /// The block every vertex of `self` points to.
    pub fn successor(self) -> Block {
        match self {
            Block::First => Block::Second,
            Block::Second => Block::Third,
            Block::Third => Block::First,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// `C3(T1, T2, T3)`: three tournaments joined with every cross arc running
/// `T1 -> T2`, `T2 -> T3` or `T3 -> T1`.
///
/// Blocks occupy contiguous vertex ranges in the order `T1, T2, T3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularComposition {
    parts: [Tournament; 3],
    composed: Tournament,
}

/// Builds the triangular composition of three nonempty tournaments.
pub fn compose_c3(t1: &Tournament, t2: &Tournament, t3: &Tournament) -> Result<TriangularComposition> {
    let parts = [t1.clone(), t2.clone(), t3.clone()];
    if parts.iter().any(|p| p.n() == 0) {
        return Err(Error::InvalidSize("composition parts must be nonempty".into()));
    }
    let offsets = [0, t1.n(), t1.n() + t2.n()];
    let n = offsets[2] + t3.n();
    let block_of = |v: usize| -> usize { (1..3).rev().find(|&b| v >= offsets[b]).unwrap_or(0) };
    let composed = Tournament::from_pair_fn(n, |i, j| {
        let (bi, bj) = (block_of(i), block_of(j));
        if bi == bj {
            parts[bi].arc(i - offsets[bi], j - offsets[bi])
        } else {
            // i < j, so bi < bj: forward unless the pair is (First, Third).
            !(bi == 0 && bj == 2)
        }
    })?;
    Ok(TriangularComposition { parts, composed })
}

impl TriangularComposition {
    pub fn composed(&self) -> &Tournament {
        &self.composed
    }

    pub fn parts(&self) -> &[Tournament; 3] {
        &self.parts
    }

    pub fn into_composed(self) -> Tournament {
        self.composed
    }

    /// Block sizes `(m1, m2, m3)`.
    pub fn sizes(&self) -> [usize; 3] {
        [self.parts[0].n(), self.parts[1].n(), self.parts[2].n()]
    }

    /// First vertex index of `block`.
    pub fn offset(&self, block: Block) -> usize {
        self.parts[..block.index()].iter().map(Tournament::n).sum()
    }

    pub fn part_of(&self, v: usize) -> Option<Block> {
        if v >= self.composed.n() {
            return None;
        }
        [Block::Third, Block::Second, Block::First]
            .into_iter()
            .find(|&b| v >= self.offset(b))
    }

    /// The composed tournament restricted to one block.
    pub fn restrict(&self, block: Block) -> Tournament {
        let off = self.offset(block);
        let m = self.parts[block.index()].n();
        Tournament::from_pair_fn(m, |i, j| self.composed.arc(off + i, off + j)).expect("nonempty block")
    }

    /// Re-checks both composition invariants against the composed matrix.
    pub fn check_invariants(&self) -> bool {
        let blocks = [Block::First, Block::Second, Block::Third];
        if blocks.iter().any(|&b| self.restrict(b) != self.parts[b.index()]) {
            return false;
        }
        let n = self.composed.n();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (bi, bj) = (self.part_of(i).unwrap(), self.part_of(j).unwrap());
                bi == bj || self.composed.arc(i, j) == (bi.successor() == bj)
            })
        })
    }
}
