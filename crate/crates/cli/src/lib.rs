//! File formats and the `gentle` command line.

mod app;
pub mod dsl;
pub mod surface_format;
pub mod syntax;

pub use app::{run, Outcome, EXIT_INTERNAL, EXIT_INVALID, EXIT_OK};
