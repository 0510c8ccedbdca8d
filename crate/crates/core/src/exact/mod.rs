//! Exact arithmetic: big integers and rationals, the golden ring, dense
//! polynomials, matrices with a division-free characteristic polynomial, and
//! rational generating functions.

pub mod golden;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub(crate) mod decimal;

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use golden::Golden;
pub use matrix::{charpoly, matrix_rank_exact, Matrix};
pub use poly::Polynomial;
pub use ratfunc::{series_coeffs, solve_rational_series, RationalFunction};

/// Commutative ring with unit, as far as the kernels in this module need.
///
/// Blanket-implemented, so `i64`, `f64`, `BigInt`, `BigRational` and
/// [`Golden`] all qualify.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}
