//! Command-line front end for `satk-core`: argument parsing, JSON formats and the oracle
//! verification driver.

mod cli;
pub mod dto;
pub mod error;
pub mod input;

pub use cli::{run, Output};
pub use error::CliError;
