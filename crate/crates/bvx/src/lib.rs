//! File formats, solver dispatch, validation and benchmarks on top of
//! `bvx-core`, plus the `bvx` command-line tool.

pub mod bench;
pub mod cli;
pub mod error;
pub mod formats;
pub mod instance;
pub mod solve;
pub mod validate;

pub use error::{CliError, CliResult};
