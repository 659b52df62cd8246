//! Command-line front end, input loading, reports and DOT export.

pub mod cli;
pub mod dot;
pub mod input;
pub mod report;

pub use dot::export_dot;
pub use report::{Report, Value};
