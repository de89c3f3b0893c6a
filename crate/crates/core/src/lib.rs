pub mod bundles;
pub mod error;
pub mod flag;
pub mod positivity;
pub mod rootsys;

pub use error::{Error, Result};
pub mod cli;
