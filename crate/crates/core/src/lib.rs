//! Rotating normal form and sigma-definite normal form of braids, computed in the
//! dual braid monoid on band generators.

pub mod error;
pub mod garside;
pub mod harness;
pub mod ladders;
pub mod oracle;
pub mod reversing;
pub mod rotating;
pub mod sigmadef;
pub mod words;

pub use error::{Error, WordError};
pub use words::{Alphabet, Letter, SigmaClass, Word};
