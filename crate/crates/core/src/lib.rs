//! Exact divisor-class calculus on moduli spaces of pointed curves and
//! certificates for the Kodaira dimension of their symmetric quotients.

pub mod catalog;
pub mod certify;
pub mod error;
pub mod oracle;
pub mod picard;
pub mod pullback;
pub mod rational;
pub mod selfcheck;
pub mod symmetry;

pub use error::{Error, Result};
pub use rational::Rational;
