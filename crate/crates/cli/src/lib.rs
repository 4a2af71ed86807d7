//! Command-line harness: corpus files, batch runs, reports and caching.

pub mod cache;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod report;
pub mod run;

pub use error::{CliError, ErrorRecord};
