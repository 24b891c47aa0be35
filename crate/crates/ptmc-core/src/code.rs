//! Construction of the Pascal-block zero-cross-correlation code.
//!
//! A code for N users at weight W is laid out as `ceil(W/2)` left blocks,
//! a W-chip center run, and `floor(W/2)` right blocks. Each block is N-1
//! columns wide and holds one chip per user 2..=N: anti-diagonal on the
//! left, diagonal on the right. User 1 owns the center run. Columns never
//! overlap, so every pair of codewords has inner product zero and the
//! total length is exactly N*W.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Requested family parameters: N users at code weight W.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeSpec {
    users: usize,
    weight: usize,
}

impl CodeSpec {
    /// Validates N >= 2 and W >= 2; smaller values are degenerate.
    pub fn new(users: usize, weight: usize) -> Result<Self> {
        if users < 2 {
            return Err(Error::TooFewUsers {
                users: users as u64,
            });
        }
        if weight < 2 {
            return Err(Error::WeightTooSmall {
                weight: weight as u64,
            });
        }
        Ok(Self { users, weight })
    }

    pub fn users(&self) -> usize {
        self.users
    }

    pub fn weight(&self) -> usize {
        self.weight
    }
}

/// Resolved construction layout for one spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockPlan {
    /// Number of anti-diagonal blocks left of the center run, `ceil(W/2)`.
    pub left_blocks: usize,
    /// Number of diagonal blocks right of the center run, `floor(W/2)`.
    pub right_blocks: usize,
    /// Width of every block: N-1 columns.
    pub block_width: usize,
    /// First column of the W-chip center run.
    pub center_start: usize,
    /// The n of W = 2n or W = 2n+1, i.e. `floor(W/2)`.
    pub parity_param: usize,
}

impl BlockPlan {
    /// Total code length: left blocks + center run + right blocks = N*W.
    pub fn length(&self) -> usize {
        (self.left_blocks + self.right_blocks) * self.block_width
            + self.left_blocks
            + self.right_blocks
    }
}

/// Resolves the block layout for a spec.
///
/// Left and right block counts always differ by at most one and sum to W,
/// which makes every user's weight W: user 1 from the center run, users
/// 2..=N from one chip per block.
pub fn block_plan(spec: CodeSpec) -> Result<BlockPlan> {
    let n = spec.users();
    let w = spec.weight();
    // The full length N*W must be addressable before any column math.
    n.checked_mul(w).ok_or(Error::ArithmeticOverflow)?;
    let left_blocks = w.div_ceil(2);
    let right_blocks = w / 2;
    let block_width = n - 1;
    Ok(BlockPlan {
        left_blocks,
        right_blocks,
        block_width,
        center_start: left_blocks * block_width,
        parity_param: w / 2,
    })
}

/// Column offset of user `user`'s chip inside each left block.
///
/// Anti-diagonal placement: user 2 sits at the rightmost offset N-2,
/// user N at offset 0.
pub fn left_block_offset(users: usize, user: usize) -> Result<usize> {
    check_block_user(users, user)?;
    Ok(users - user)
}

/// Column offset of user `user`'s chip inside each right block.
///
/// Diagonal placement: user 2 at offset 0, user N at offset N-2.
pub fn right_block_offset(users: usize, user: usize) -> Result<usize> {
    check_block_user(users, user)?;
    Ok(user - 2)
}

fn check_block_user(users: usize, user: usize) -> Result<()> {
    if users < 2 {
        return Err(Error::TooFewUsers {
            users: users as u64,
        });
    }
    if user < 2 || user > users {
        return Err(Error::UserOutOfRange { user, users });
    }
    Ok(())
}

/// An N x L binary matrix; one row per user codeword, one column per
/// spectral chip, column 0 leftmost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<u8>,
}

impl CodeMatrix {
    /// All-zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            bits: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from explicit rows, rejecting ragged shapes and
    /// entries other than 0 or 1.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut bits = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRows {
                    row: r,
                    expected: cols,
                    actual: row.len(),
                });
            }
            for (c, &bit) in row.iter().enumerate() {
                if bit > 1 {
                    return Err(Error::NonBinaryEntry { row: r, col: c });
                }
                bits.push(bit);
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            bits,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at (row, col). Panics when out of bounds, like slice indexing.
    pub fn get(&self, row: usize, col: usize) -> u8 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.bits[row * self.cols + col]
    }

    pub(crate) fn set(&mut self, row: usize, col: usize) {
        self.bits[row * self.cols + col] = 1;
    }

    /// Bits of one row.
    pub fn row(&self, row: usize) -> &[u8] {
        &self.bits[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    /// Number of 1s in one row.
    pub fn row_weight(&self, row: usize) -> usize {
        self.row(row).iter().filter(|&&b| b == 1).count()
    }

    /// Number of 1s in one column.
    pub fn column_sum(&self, col: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, col) == 1).count()
    }

    /// Chip columns occupied by `user` (1-indexed), ascending.
    pub fn codeword(&self, user: usize) -> Result<Vec<usize>> {
        if user == 0 || user > self.rows {
            return Err(Error::UserOutOfRange {
                user,
                users: self.rows,
            });
        }
        Ok(self
            .row(user - 1)
            .iter()
            .enumerate()
            .filter(|(_, &bit)| bit == 1)
            .map(|(col, _)| col)
            .collect())
    }

    /// Copy with all all-zero columns removed; row order and relative
    /// column order are preserved.
    pub fn canonicalize(&self) -> CodeMatrix {
        let keep: Vec<usize> = (0..self.cols)
            .filter(|&c| (0..self.rows).any(|r| self.get(r, c) == 1))
            .collect();
        let mut out = CodeMatrix::zero(self.rows, keep.len());
        for r in 0..self.rows {
            for (new_c, &old_c) in keep.iter().enumerate() {
                if self.get(r, old_c) == 1 {
                    out.set(r, new_c);
                }
            }
        }
        out
    }
}

/// Generates the canonical N x (N*W) code matrix for a spec.
///
/// Row 0 (user 1) carries the center run; row i-1 (user i, i >= 2)
/// carries one chip per block at its left/right offsets. Output has no
/// all-zero columns and is fully determined by the spec.
pub fn generate_ptmc(spec: CodeSpec) -> Result<CodeMatrix> {
    let plan = block_plan(spec)?;
    let n = spec.users();
    let w = spec.weight();
    let mut matrix = CodeMatrix::zero(n, plan.length());

    for col in plan.center_start..plan.center_start + w {
        matrix.set(0, col);
    }
    let right_start = plan.center_start + w;
    for user in 2..=n {
        let row = user - 1;
        let left_offset = left_block_offset(n, user)?;
        let right_offset = right_block_offset(n, user)?;
        for block in 0..plan.left_blocks {
            matrix.set(row, block * plan.block_width + left_offset);
        }
        for block in 0..plan.right_blocks {
            matrix.set(row, right_start + block * plan.block_width + right_offset);
        }
    }
    Ok(matrix)
}
