//! Piatetski-Shapiro primes, Chen-type weights and the numerics behind the level-of-distribution argument.

pub mod arith;
pub mod bracket;
pub mod error;
pub mod exec;
pub mod levels;
pub mod oracle;
pub mod pairs;
pub mod ps;
pub mod quad;
pub mod sievefn;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
