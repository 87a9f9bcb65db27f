pub mod algebra;
pub mod braiding;
pub mod cli;
pub mod determinants;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod permutations;
pub mod report;
pub mod scalar;
pub mod tensor_ops;

pub use error::{Error, Result};
