//! Exact K-stability invariants of projectivised split bundles viewed as
//! polarised fibrations.

pub mod arith;
pub mod chow;
pub mod cli;
mod error;
pub mod invariants;
pub mod models;
pub mod oracle;

pub use error::{Error, Result};
