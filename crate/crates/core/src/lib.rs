#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod grid;
pub mod polycert;
pub mod proofaudit;
pub mod quotient;
pub mod refcore;
pub mod report;
pub mod search;

pub use error::{Error, Result};
