pub mod classification;
pub mod clifford;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod oracle;
pub mod rational;
pub mod reference;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::RationalMatrix;
pub use rational::Rational;
