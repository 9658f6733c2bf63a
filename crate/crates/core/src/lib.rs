#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod cli;
pub mod closed_forms;
pub mod conjectures;
pub mod error;
pub mod hankel;
pub mod harness;
pub mod report;
pub mod sequences;
pub mod series;

pub use error::{Error, Result};
