//! Problem files, the `fpure` command line and the built-in example suite.

pub mod commands;
pub mod oracle;
pub mod problem;
pub mod report;
pub mod suite;

pub use commands::dispatch;
