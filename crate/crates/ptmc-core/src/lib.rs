//! Zero-cross-correlation spreading codes for spectral-amplitude-coding
//! optical CDMA, built from Pascal-triangle block patterns.
//!
//! The crate generates the code matrix for any number of users N >= 2 at
//! any weight W >= 2, verifies the defining properties (per-user weight,
//! length N*W, pairwise cross-correlation zero), evaluates the published
//! code families for comparison, and simulates chip-level transmission
//! with direct detection to measure multiple-access interference.
//!
//! ```
//! use ptmc_core::{generate_ptmc, verify, CodeSpec};
//!
//! let matrix = generate_ptmc(CodeSpec::new(6, 3).unwrap()).unwrap();
//! let report = verify(&matrix, Some(3)).unwrap();
//! assert!(report.is_zcc);
//! assert_eq!(report.length, 18);
//! ```
//!
//! Everything is pure and allocation-only; the crate is `no_std` with
//! `alloc`. IO, file formats, and the command-line front end live in the
//! companion `ptmc-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod code;
pub mod error;
pub mod families;
pub mod hadamard;
pub mod pascal;
pub mod sim;

pub use analysis::{cross_correlation, verify, CorrelationReport, Violation};
pub use code::{
    block_plan, generate_ptmc, left_block_offset, right_block_offset, BlockPlan, CodeMatrix,
    CodeSpec,
};
pub use error::{Error, Result};
pub use families::{compare_table, family_length, Family, FamilyParams, FamilyRow, Weight};
pub use hadamard::generate_hadamard_code;
pub use pascal::{binomial_row, PascalRow};
pub use sim::{
    correlator, detect_direct, encode, run_exhaustive, run_monte_carlo, SimConfig, SimReport,
    SpectrumVector,
};
