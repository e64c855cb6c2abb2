pub mod algebra;
pub mod bimod;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod graded;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod mscell;
pub mod report;
pub mod suite;
pub mod text;

pub use error::{Error, Result};
