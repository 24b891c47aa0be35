//! IO companion to `ptmc-core`: file formats and report rendering for
//! the `ptmc` binary.

pub mod format;
