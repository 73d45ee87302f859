//! Command-line front end for `lcf-core`: JSON records, a result cache,
//! threaded search, and reproduction reports.

pub mod cache;
pub mod cli;
pub mod records;
pub mod reproduce;
pub mod runtime;
