pub mod commands;
pub mod error;
pub mod gamma;
pub mod transport;

pub use error::{CliError, CliResult};
