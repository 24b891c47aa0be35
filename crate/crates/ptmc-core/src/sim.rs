//! Chip-level SAC transmission: spectral encoding, direct detection, and
//! interference measurement.
//!
//! The channel model is deliberately minimal. Every active user adds unit
//! power on each chip its codeword occupies; the receiver correlates the
//! aggregate spectrum with its own codeword and thresholds at W/2 (ties
//! round up). For a zero-cross-correlation code the correlator sees
//! bit * W exactly, so noiseless decoding is error-free; for overlapping
//! codes the cross-terms show up as multiple-access interference.
//!
//! Monte Carlo runs draw one ChaCha stream per trial, keyed by the trial
//! index, so a report depends only on the matrix and the config, never on
//! execution order. Per trial the draw order is: N user bits, then L
//! noise samples when noise is enabled.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::code::CodeMatrix;
use crate::error::{Error, Result};

/// Exhaustive runs enumerate 2^N traffic patterns; N is capped here.
pub const MAX_EXHAUSTIVE_USERS: usize = 20;

/// Aggregate received power per chip, one unit per active occupying user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumVector {
    pub power: Vec<u32>,
}

impl SpectrumVector {
    pub fn len(&self) -> usize {
        self.power.len()
    }

    pub fn is_empty(&self) -> bool {
        self.power.is_empty()
    }
}

/// Monte Carlo parameters. `activity` is the probability each user sends
/// bit 1; noise is additive zero-mean Gaussian per chip.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub trials: u64,
    pub seed: u64,
    pub activity: f64,
    pub noise_sigma: f64,
}

impl SimConfig {
    /// Config with the defaults: activity 0.5, no noise.
    pub fn new(trials: u64, seed: u64) -> Self {
        Self {
            trials,
            seed,
            activity: 0.5,
            noise_sigma: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::ZeroTrials);
        }
        if !(0.0..=1.0).contains(&self.activity) {
            return Err(Error::InvalidActivity {
                activity: self.activity,
            });
        }
        if !self.noise_sigma.is_finite() || self.noise_sigma < 0.0 {
            return Err(Error::InvalidNoiseSigma {
                sigma: self.noise_sigma,
            });
        }
        Ok(())
    }
}

/// Transmission tally. `max_interference_observed` is the largest
/// correlator contribution from other users seen at any receiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimReport {
    pub trials: u64,
    pub bit_errors: u64,
    pub bits_total: u64,
    pub max_interference_observed: u64,
}

impl SimReport {
    pub fn error_rate(&self) -> f64 {
        self.bit_errors as f64 / self.bits_total as f64
    }
}

/// Superimposes the codewords of all active users: chip t carries
/// `sum_u bits[u] * matrix[u][t]`.
pub fn encode(matrix: &CodeMatrix, bits: &[u8]) -> Result<SpectrumVector> {
    if bits.len() != matrix.rows() {
        return Err(Error::LengthMismatch {
            expected: matrix.rows(),
            actual: bits.len(),
        });
    }
    if let Some(index) = bits.iter().position(|&b| b > 1) {
        return Err(Error::NonBinaryBit { index });
    }
    let mut power = vec![0u32; matrix.cols()];
    for (user, &bit) in bits.iter().enumerate() {
        if bit == 1 {
            for (chip, &code_bit) in matrix.row(user).iter().enumerate() {
                power[chip] += u32::from(code_bit);
            }
        }
    }
    Ok(SpectrumVector { power })
}

/// Correlator value of `user` (1-indexed) against an aggregate spectrum.
pub fn correlator(matrix: &CodeMatrix, spectrum: &SpectrumVector, user: usize) -> Result<u64> {
    check_receiver(matrix, spectrum.len(), user)?;
    Ok(matrix
        .row(user - 1)
        .iter()
        .zip(&spectrum.power)
        .map(|(&bit, &p)| u64::from(bit) * u64::from(p))
        .sum())
}

/// Direct detection: correlate and threshold at W/2, ties rounding up,
/// where W is the weight of the user's own codeword.
pub fn detect_direct(matrix: &CodeMatrix, spectrum: &SpectrumVector, user: usize) -> Result<u8> {
    let s = correlator(matrix, spectrum, user)?;
    let weight = matrix.row_weight(user - 1) as u64;
    Ok(u8::from(2 * s >= weight))
}

fn detect_direct_real(matrix: &CodeMatrix, spectrum: &[f64], user: usize) -> Result<u8> {
    check_receiver(matrix, spectrum.len(), user)?;
    let s: f64 = matrix
        .row(user - 1)
        .iter()
        .zip(spectrum)
        .map(|(&bit, &p)| f64::from(bit) * p)
        .sum();
    let weight = matrix.row_weight(user - 1) as f64;
    Ok(u8::from(s >= weight / 2.0))
}

fn check_receiver(matrix: &CodeMatrix, spectrum_len: usize, user: usize) -> Result<()> {
    if user == 0 || user > matrix.rows() {
        return Err(Error::UserOutOfRange {
            user,
            users: matrix.rows(),
        });
    }
    if spectrum_len != matrix.cols() {
        return Err(Error::LengthMismatch {
            expected: matrix.cols(),
            actual: spectrum_len,
        });
    }
    Ok(())
}

/// Runs every one of the 2^N traffic patterns through the noiseless
/// channel and decodes every user under direct detection.
pub fn run_exhaustive(matrix: &CodeMatrix) -> Result<SimReport> {
    if matrix.rows() == 0 || matrix.cols() == 0 {
        return Err(Error::EmptyMatrix);
    }
    let users = matrix.rows();
    if users > MAX_EXHAUSTIVE_USERS {
        return Err(Error::TooManyUsersForExhaustive {
            users,
            max: MAX_EXHAUSTIVE_USERS,
        });
    }
    let weights: Vec<u64> = (0..users).map(|r| matrix.row_weight(r) as u64).collect();
    let patterns = 1u64 << users;
    let mut bit_errors = 0u64;
    let mut max_interference = 0u64;
    let mut bits = vec![0u8; users];

    for pattern in 0..patterns {
        for (user, bit) in bits.iter_mut().enumerate() {
            *bit = ((pattern >> user) & 1) as u8;
        }
        let spectrum = encode(matrix, &bits)?;
        for user in 1..=users {
            let s = correlator(matrix, &spectrum, user)?;
            let sent = bits[user - 1];
            let interference = s - u64::from(sent) * weights[user - 1];
            max_interference = max_interference.max(interference);
            let decoded = u8::from(2 * s >= weights[user - 1]);
            if decoded != sent {
                bit_errors += 1;
            }
        }
    }

    Ok(SimReport {
        trials: patterns,
        bit_errors,
        bits_total: patterns * users as u64,
        max_interference_observed: max_interference,
    })
}

/// Runs seeded Monte Carlo trials: random traffic at the configured
/// activity, optional per-chip Gaussian noise, direct detection.
///
/// Identical (matrix, config) pairs produce identical reports.
pub fn run_monte_carlo(matrix: &CodeMatrix, config: &SimConfig) -> Result<SimReport> {
    if matrix.rows() == 0 || matrix.cols() == 0 {
        return Err(Error::EmptyMatrix);
    }
    config.validate()?;
    let users = matrix.rows();
    let weights: Vec<u64> = (0..users).map(|r| matrix.row_weight(r) as u64).collect();
    let noise = if config.noise_sigma > 0.0 {
        Some(Normal::new(0.0, config.noise_sigma).expect("validated sigma"))
    } else {
        None
    };

    let mut bit_errors = 0u64;
    let mut max_interference = 0u64;
    let mut bits = vec![0u8; users];
    let mut received = vec![0f64; matrix.cols()];

    for trial in 0..config.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(trial);

        for bit in bits.iter_mut() {
            *bit = u8::from(rng.random_bool(config.activity));
        }
        let spectrum = encode(matrix, &bits)?;

        // Interference is measured on the noiseless cross-terms; noise is
        // channel impairment, not another user's signal.
        for user in 1..=users {
            let s = correlator(matrix, &spectrum, user)?;
            let interference = s - u64::from(bits[user - 1]) * weights[user - 1];
            max_interference = max_interference.max(interference);
        }

        match noise {
            Some(normal) => {
                for (chip, out) in received.iter_mut().enumerate() {
                    *out = f64::from(spectrum.power[chip]) + normal.sample(&mut rng);
                }
                for user in 1..=users {
                    let decoded = detect_direct_real(matrix, &received, user)?;
                    if decoded != bits[user - 1] {
                        bit_errors += 1;
                    }
                }
            }
            None => {
                for user in 1..=users {
                    let decoded = detect_direct(matrix, &spectrum, user)?;
                    if decoded != bits[user - 1] {
                        bit_errors += 1;
                    }
                }
            }
        }
    }

    Ok(SimReport {
        trials: config.trials,
        bit_errors,
        bits_total: config.trials * users as u64,
        max_interference_observed: max_interference,
    })
}
