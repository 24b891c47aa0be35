//! Rows of Pascal's triangle in exact 64-bit arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest row index served; rows past this are rejected so every entry
/// stays exact in a `u64`.
pub const MAX_ROW: usize = 60;

/// One row of Pascal's triangle: entries `C(n, 0) ..= C(n, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalRow {
    n: usize,
    entries: Vec<u64>,
}

impl PascalRow {
    /// Row index, starting at 0 for the apex.
    pub fn index(&self) -> usize {
        self.n
    }

    /// The n+1 binomial coefficients of the row.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }
}

/// Computes row `n` by the additive rule `C(n, k) = C(n-1, k-1) + C(n-1, k)`
/// with boundary 1s.
pub fn binomial_row(n: usize) -> Result<PascalRow> {
    if n > MAX_ROW {
        return Err(Error::RowTooLarge { n, max: MAX_ROW });
    }
    let mut entries = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(entries.len() + 1);
        next.push(1);
        next.extend(entries.windows(2).map(|pair| pair[0] + pair[1]));
        next.push(1);
        entries = next;
    }
    Ok(PascalRow { n, entries })
}
