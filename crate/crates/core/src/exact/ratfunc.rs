//! Rational functions over `Z` and the transfer-matrix series solver.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{charpoly, Matrix, Polynomial};
use crate::error::{Error, Result};

/// `num / den` in lowest terms with `den` having positive leading
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial<BigInt>,
    den: Polynomial<BigInt>,
}

impl RationalFunction {
    pub fn new(num: Polynomial<BigInt>, den: Polynomial<BigInt>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(Self { num, den: Polynomial::one() });
        }
        let g = num.gcd(&den).primitive_part();
        let mut num = num.div_exact(&g)?.expect("gcd divides numerator");
        let mut den = den.div_exact(&g)?.expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.leading().expect("nonzero").is_negative() {
            c = -c;
        }
        num = num.map(|a| a / &c);
        den = den.map(|a| a / &c);
        Ok(Self { num, den })
    }

    pub fn polynomial(p: Polynomial<BigInt>) -> Self {
        Self { num: p, den: Polynomial::one() }
    }

    pub fn num(&self) -> &Polynomial<BigInt> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<BigInt> {
        &self.den
    }

    /// Same function, compared by cross-multiplication (so representations
    /// differing by a common unit or factor are equivalent).
    pub fn equivalent(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn series(&self, n: usize) -> Result<Vec<BigInt>> {
        series_coeffs(self, n)
    }

    /// `(f(t) - f(0)) / t`, i.e. the series with its constant term dropped
    /// and every other coefficient moved down one degree.
    pub fn tail(&self) -> Result<Self> {
        let c0 = series_coeffs(self, 1)?.pop().unwrap_or_default();
        let shifted = &self.num - &self.den.scale(&c0);
        Self::new(shifted.unshift(1), self.den.clone())
    }

    /// `c + t f(t)`.
    pub fn prepend(&self, c: &BigInt) -> Result<Self> {
        Self::new(&self.num.shift(1) + &self.den.scale(c), self.den.clone())
    }

    /// Renders as `(num)/(den)` in descending powers of `var`.
    pub fn render(&self, var: &str) -> String {
        format!("({})/({})", self.num.render(var), self.den.render(var))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

/// First `n` Taylor coefficients at `t = 0`.
///
/// Fails when the denominator vanishes at zero or a coefficient would not be
/// an integer.
pub fn series_coeffs(f: &RationalFunction, n: usize) -> Result<Vec<BigInt>> {
    let d0 = f.den.coeff(0);
    if d0.is_zero() {
        return Err(Error::PoleAtZero);
    }
    let den = f.den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = f.num.coeff(k);
        for (j, dj) in den.iter().enumerate().skip(1).take(k) {
            acc -= dj * &out[k - j];
        }
        let (q, r) = acc.div_rem(&d0);
        if !r.is_zero() {
            return Err(Error::NonIntegerCoefficient { index: k });
        }
        out.push(q);
    }
    Ok(out)
}

/// The rational function `Y^t (I - tA)^{-1} Z`, whose coefficient of `t^d`
/// is `Y^t A^d Z`.
///
/// The denominator is taken as `det(I - tA)`, the reversed characteristic
/// polynomial; the numerator is then forced by the first `n` coefficients
/// (Cayley-Hamilton), and the pair is reduced to lowest terms.
pub fn solve_rational_series(
    a: &Matrix<BigInt>,
    y: &[BigInt],
    z: &[BigInt],
) -> Result<RationalFunction> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if y.len() != n || z.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{n}x{n} matrix with vectors of length {} and {}",
            y.len(),
            z.len()
        )));
    }
    let den = charpoly(a)?.reversed(n);
    let mut coeffs = Vec::with_capacity(n);
    let mut v = z.to_vec();
    for _ in 0..n {
        coeffs.push(dot(y, &v));
        v = a.mul_vec(&v)?;
    }
    let num = (&den * &Polynomial::new(coeffs)).truncate(n);
    RationalFunction::new(num, den)
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Serialize, Deserialize)]
struct RatRepr {
    num: Polynomial<BigInt>,
    den: Polynomial<BigInt>,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatRepr { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = RatRepr::deserialize(d)?;
        Self::new(r.num, r.den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> Polynomial<BigInt> {
        Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn geometric_series() {
        let a = Matrix::from_rows(vec![ints(&[2])]).unwrap();
        let f = solve_rational_series(&a, &ints(&[1]), &ints(&[1])).unwrap();
        // leading denominator coefficient is made positive: -1 / (2t - 1)
        assert_eq!(f.num(), &ip(&[-1]));
        assert_eq!(f.den(), &ip(&[-1, 2]));
        assert_eq!(f.series(5).unwrap(), ints(&[1, 2, 4, 8, 16]));
    }

    #[test]
    fn lowest_terms_and_sign() {
        // (t^2 - 1) / (2 - 2t) = -(t + 1) / 2
        let f = RationalFunction::new(ip(&[-1, 0, 1]), ip(&[2, -2])).unwrap();
        assert_eq!(f.num(), &ip(&[-1, -1]));
        assert_eq!(f.den(), &ip(&[2]));
    }

    #[test]
    fn all_ones() {
        let f = RationalFunction::new(ip(&[1]), ip(&[1, -1])).unwrap();
        assert_eq!(f.series(4).unwrap(), ints(&[1, 1, 1, 1]));
        assert!(f.equivalent(&RationalFunction::new(ip(&[-1]), ip(&[-1, 1])).unwrap()));
    }

    #[test]
    fn pole_and_fraction_errors() {
        let f = RationalFunction::new(ip(&[1]), ip(&[0, 1])).unwrap();
        assert_eq!(series_coeffs(&f, 2), Err(Error::PoleAtZero));
        let g = RationalFunction::new(ip(&[1]), ip(&[2, 1])).unwrap();
        assert_eq!(series_coeffs(&g, 2), Err(Error::NonIntegerCoefficient { index: 0 }));
    }

    #[test]
    fn tail_and_prepend() {
        // 1/(1 - 2t) = 1 + 2t + 4t^2 + ...
        let f = RationalFunction::new(ip(&[1]), ip(&[1, -2])).unwrap();
        let g = f.tail().unwrap();
        assert_eq!(g.series(3).unwrap(), ints(&[2, 4, 8]));
        assert_eq!(g.prepend(&BigInt::from(1)).unwrap(), f);
    }

    #[test]
    fn dimension_mismatch() {
        let a = Matrix::<BigInt>::identity(2);
        assert!(matches!(
            solve_rational_series(&a, &ints(&[1]), &ints(&[1, 1])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn json_shape() {
        let f = RationalFunction::new(ip(&[7, -3]), ip(&[1, -4, 3])).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"num":{"coeffs":["7","-3"]},"den":{"coeffs":["1","-4","3"]}}"#);
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
