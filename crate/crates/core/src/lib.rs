pub mod bfqsym;
pub mod coxeter;
pub mod descent;
pub mod error;
pub mod exact;
pub mod garside;
pub mod reference;
pub mod spectra;
pub mod typeb;

pub use error::{Error, Result};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
pub type IntPolynomial = exact::Polynomial<Integer>;
pub type IntMatrix = exact::Matrix<Integer>;
pub type RationalMatrix = exact::Matrix<Rational>;
pub type GoldenNumber = exact::Golden<Integer>;
