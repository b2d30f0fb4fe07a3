#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod curve;
pub mod error;
pub mod info;
pub mod lab;
pub mod numeric;
pub mod optim;
pub mod spectrum;

pub use error::{Error, Result};
