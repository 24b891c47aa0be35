//! Verification of code properties: weights, length, and pairwise
//! cross-correlation.

use alloc::vec::Vec;

use crate::code::CodeMatrix;
use crate::error::{Error, Result};

/// Inner product of two equal-length bit sequences.
pub fn cross_correlation(a: &[u8], b: &[u8]) -> Result<u64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    Ok(a.iter()
        .zip(b)
        .map(|(&x, &y)| u64::from(x) * u64::from(y))
        .sum())
}

/// One pair of users whose codewords overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Violation {
    pub user_a: usize,
    pub user_b: usize,
    pub value: u64,
}

/// Verification outcome over a full code matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CorrelationReport {
    pub users: usize,
    pub length: usize,
    /// Per-user weights, user 1 first.
    pub weights: Vec<usize>,
    /// Maximum cross-correlation over all distinct user pairs.
    pub lambda_max: u64,
    pub is_zcc: bool,
    /// Every pair with nonzero cross-correlation.
    pub violations: Vec<Violation>,
    /// Users (1-indexed) whose weight differs from the expected weight,
    /// when one was given.
    pub weight_mismatches: Vec<usize>,
}

/// Measures every defining property of a code matrix in one pass.
///
/// When `expected_weight` is given, rows with a different weight are
/// flagged in `weight_mismatches`.
pub fn verify(matrix: &CodeMatrix, expected_weight: Option<usize>) -> Result<CorrelationReport> {
    if matrix.rows() == 0 || matrix.cols() == 0 {
        return Err(Error::EmptyMatrix);
    }
    let users = matrix.rows();
    let weights: Vec<usize> = (0..users).map(|r| matrix.row_weight(r)).collect();

    let mut lambda_max = 0u64;
    let mut violations = Vec::new();
    for i in 0..users {
        for j in i + 1..users {
            let value = cross_correlation(matrix.row(i), matrix.row(j))?;
            if value > 0 {
                lambda_max = lambda_max.max(value);
                violations.push(Violation {
                    user_a: i + 1,
                    user_b: j + 1,
                    value,
                });
            }
        }
    }

    let weight_mismatches = match expected_weight {
        Some(expected) => weights
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != expected)
            .map(|(i, _)| i + 1)
            .collect(),
        None => Vec::new(),
    };

    Ok(CorrelationReport {
        users,
        length: matrix.cols(),
        weights,
        lambda_max,
        is_zcc: violations.is_empty(),
        violations,
        weight_mismatches,
    })
}
