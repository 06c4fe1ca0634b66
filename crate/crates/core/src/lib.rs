pub mod butterfly;
pub mod cli;
pub mod construct;
pub mod cover;
pub mod error;
pub mod graph;
pub mod partition;
pub mod solve;

pub use error::{Error, Result};
