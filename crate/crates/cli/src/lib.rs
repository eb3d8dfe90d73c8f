//! Module files, verification suites and the `strel` command line.

pub mod app;
pub mod error;
pub mod format;
pub mod report;
pub mod suites;

pub use app::run;
pub use error::CliError;
