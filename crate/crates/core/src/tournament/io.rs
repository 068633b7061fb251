//! The `.trn` text format.
//!
//! ```text
//! 3        <- vertex count n
//! 010      <- row i: character j is 1 iff the arc i -> j is present
//! 001
//! 100
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseErrorKind, Result};

use super::{Tournament, TriangularComposition};

/// Sidecar recording the block sizes of an exported composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSizes {
    pub m1: usize,
    pub m2: usize,
    pub m3: usize,
}

fn perr(line: usize, column: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { line, column, kind }
}

/// Parses `.trn` text, enforcing both tournament invariants.
///
/// Line and column numbers in errors are 1-based.
pub fn parse(text: &str) -> Result<Tournament> {
    let mut lines = text.lines().map(|l| l.trim_end_matches('\r'));
    let header = lines.next().unwrap_or("").trim();
    let n: usize = header
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| perr(1, 1, ParseErrorKind::BadHeader))?;

    let rows: Vec<&str> = lines.collect();
    // trailing blank lines are tolerated
    let used = rows.iter().rposition(|r| !r.trim().is_empty()).map_or(0, |p| p + 1);
    if used != n {
        return Err(perr(
            used.min(n) + 2,
            1,
            ParseErrorKind::RowCount {
                expected: n,
                found: used,
            },
        ));
    }

    let mut matrix = vec![vec![false; n]; n];
    for (i, row) in rows[..n].iter().enumerate() {
        let line = i + 2;
        let chars: Vec<char> = row.chars().collect();
        if chars.len() != n {
            return Err(perr(
                line,
                chars.len().min(n) + 1,
                ParseErrorKind::RowLength {
                    expected: n,
                    found: chars.len(),
                },
            ));
        }
        for (j, c) in chars.into_iter().enumerate() {
            matrix[i][j] = match c {
                '0' => false,
                '1' => true,
                other => return Err(perr(line, j + 1, ParseErrorKind::BadChar(other))),
            };
        }
        if matrix[i][i] {
            return Err(perr(line, i + 1, ParseErrorKind::Diagonal));
        }
    }
    for i in 0..n {
        for j in 0..i {
            if matrix[i][j] == matrix[j][i] {
                return Err(perr(i + 2, j + 1, ParseErrorKind::Orientation));
            }
        }
    }
    Ok(Tournament::from_matrix_unchecked(&matrix))
}

pub fn serialize(t: &Tournament) -> String {
    let n = t.n();
    let mut out = String::with_capacity((n + 1) * (n + 1) + 8);
    out.push_str(&n.to_string());
    out.push('\n');
    for i in 0..n {
        out.extend((0..n).map(|j| if t.arc(i, j) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn read_trn(path: impl AsRef<Path>) -> Result<Tournament> {
    parse(&fs::read_to_string(path)?)
}

pub fn write_trn(path: impl AsRef<Path>, t: &Tournament) -> Result<()> {
    fs::write(path, serialize(t))?;
    Ok(())
}

impl TriangularComposition {
    pub fn block_sizes(&self) -> BlockSizes {
        let [m1, m2, m3] = self.sizes();
        BlockSizes { m1, m2, m3 }
    }

    /// Writes the composed tournament to `path` and the block sizes to a
    /// JSON sidecar next to it (same stem, `.json` extension). Returns the
    /// sidecar path.
    pub fn export(&self, path: impl AsRef<Path>) -> Result<PathBuf> {
        let path = path.as_ref();
        write_trn(path, self.composed())?;
        let sidecar = path.with_extension("json");
        let json = serde_json::to_string(&self.block_sizes()).expect("plain struct");
        fs::write(&sidecar, json + "\n")?;
        Ok(sidecar)
    }
}
