//! Sylvester-Hadamard spectral-amplitude code construction.

use alloc::vec;

use crate::code::CodeMatrix;
use crate::error::{Error, Result};

pub const MIN_ORDER: u32 = 2;
/// Orders past this would need a 2^M x 2^M sign matrix too large to hold.
pub const MAX_ORDER: u32 = 20;

/// Builds the 2^M x 2^M Sylvester Hadamard matrix over {+1, -1} by
/// recursive doubling, maps +1 to 1 and -1 to 0, and drops the all-ones
/// first row.
///
/// The result has 2^M - 1 codewords of length 2^M, each of weight
/// 2^(M-1), and every distinct pair has cross-correlation 2^(M-2).
pub fn generate_hadamard_code(order: u32) -> Result<CodeMatrix> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&order) {
        return Err(Error::HadamardOrderOutOfRange {
            order,
            min: MIN_ORDER,
            max: MAX_ORDER,
        });
    }
    let size = 1usize << order;

    // signs[r * dim + c] is true for +1; doubling maps H to [[H, H], [H, -H]].
    let mut signs = vec![true];
    let mut dim = 1usize;
    while dim < size {
        let doubled = dim * 2;
        let mut next = vec![false; doubled * doubled];
        for r in 0..dim {
            for c in 0..dim {
                let s = signs[r * dim + c];
                next[r * doubled + c] = s;
                next[r * doubled + dim + c] = s;
                next[(dim + r) * doubled + c] = s;
                next[(dim + r) * doubled + dim + c] = !s;
            }
        }
        signs = next;
        dim = doubled;
    }

    let mut matrix = CodeMatrix::zero(size - 1, size);
    for r in 1..size {
        for c in 0..size {
            if signs[r * size + c] {
                matrix.set(r - 1, c);
            }
        }
    }
    Ok(matrix)
}
