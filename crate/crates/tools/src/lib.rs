//! File formats, embedded fixtures and multi-threaded drivers around
//! `golomb-core`, plus the command implementations behind the `golomb`
//! binary.

pub mod cli;
pub mod fixtures;
pub mod format;
pub mod parallel;
