pub mod abelian;
pub mod arith;
pub mod bialgebra;
pub mod cache;
pub mod chartab;
pub mod cli;
pub mod error;
pub mod group;
pub mod tower;
pub mod wreath;

pub use error::{Error, Result};
