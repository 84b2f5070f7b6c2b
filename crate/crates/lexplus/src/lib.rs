//! Command-line front end for `lexplus-core`: text input, JSON output and
//! parallel exhaustive scans.

pub mod cli;
pub mod input;
pub mod scan;

pub use cli::{run, Outcome};
