//! Dense univariate polynomials with ascending coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Ring;
use crate::error::{Error, Result};

/// Polynomial `c[0] + c[1] x + ... + c[d] x^d`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `x - root`.
    pub fn linear(root: T) -> Self {
        Self::new(vec![-root, T::one()])
    }

    /// Builds a polynomial from coefficients listed from the highest power down.
    pub fn from_descending(mut coeffs: Vec<T>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Largest `k` with `x^k` dividing `self` (zero for the zero polynomial).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the low-order factor `x^k`; the caller guarantees divisibility.
    pub fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.is_zero() || self.x_valuation() >= k);
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// `t^n p(1/t)`; requires `n >= degree`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut coeffs: Vec<T> = (0..=n).map(|k| self.coeff(k)).collect();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Keeps the terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Product of a list of `(factor, multiplicity)` pairs.
    pub fn product<'a, I>(factors: I) -> Self
    where
        I: IntoIterator<Item = (&'a Self, u32)>,
        T: 'a,
    {
        factors
            .into_iter()
            .fold(Self::one(), |acc, (f, m)| &acc * &f.pow(m))
    }
}

impl<T: Ring> Default for Polynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Ring> Add<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Ring> Sub<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Ring> Mul<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Ring> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr<Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Ring> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Field coefficients

impl Polynomial<BigRational> {
    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &c * d;
            }
            quot[k] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// The same polynomial over `Z`, if every coefficient is an integer.
    pub fn to_integer(&self) -> Option<Polynomial<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }
}

// ---------------------------------------------------------------------------
// Integer coefficients

impl Polynomial<BigInt> {
    pub fn to_rational(&self) -> Polynomial<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().expect("nonzero").is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact division `self / divisor` in `Z[x]`; `None` when the quotient
    /// is not an integer polynomial.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let Some(nd) = self.degree() else {
            return Ok(Some(Self::zero()));
        };
        if nd < dd {
            return Ok(None);
        }
        let lead = divisor.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let (c, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return Ok(None);
            }
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().all(Zero::is_zero) {
            Ok(Some(Self::new(quot)))
        } else {
            Ok(None)
        }
    }

    /// Divisibility over the rationals; on success returns the quotient `q`
    /// with `divisor * q == self`.
    pub fn divides(divisor: &Self, dividend: &Self) -> Result<Option<Polynomial<BigRational>>> {
        let (q, r) = dividend.to_rational().div_rem(&divisor.to_rational())?;
        Ok(r.is_zero().then_some(q))
    }

    /// Pseudo-remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("nonzero divisor");
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading().expect("nonzero").clone();
            let scaled = rem.scale(&lead);
            let sub = divisor.scale(&c).shift(rd - dd);
            rem = &scaled - &sub;
        }
        rem
    }

    /// Greatest common divisor in `Z[x]`, primitive with positive leading
    /// coefficient (primitive pseudo-remainder sequence).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        let g = a.primitive_part();
        g.scale(&content)
    }

    /// Descending-power rendering in the given variable, e.g.
    /// `x^4 - 42x^3 + 229x^2 - 244x + 72`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                out.push_str(&abs.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

impl fmt::Display for Polynomial<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    #[serde(with = "super::decimal::vec")]
    coeffs: Vec<BigInt>,
}

impl Serialize for Polynomial<BigInt> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr { coeffs: self.coeffs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial<BigInt> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        PolyRepr::deserialize(d).map(|r| Self::new(r.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial<BigInt> {
        Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn zero_absorbs() {
        assert!((&p(&[3, 4, 5]) * &Polynomial::zero()).is_zero());
        assert_eq!(Polynomial::<BigInt>::zero().degree(), None);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]), Polynomial::zero());
    }

    #[test]
    fn divides_with_quotient() {
        let q = Polynomial::divides(&p(&[-1, 1]), &p(&[-1, 0, 1])).unwrap().unwrap();
        assert_eq!(q, p(&[1, 1]).to_rational());
        assert!(Polynomial::divides(&p(&[-2, 1]), &p(&[-1, 0, 1])).unwrap().is_none());
        assert_eq!(
            Polynomial::divides(&Polynomial::zero(), &p(&[1])),
            Err(Error::ZeroDivisor)
        );
    }

    #[test]
    fn exact_integer_division() {
        let a = &p(&[2, 3]) * &p(&[-5, 0, 7]);
        assert_eq!(a.div_exact(&p(&[2, 3])).unwrap(), Some(p(&[-5, 0, 7])));
        // divisible over Q but not over Z
        assert_eq!(p(&[1, 1]).div_exact(&p(&[2, 2])).unwrap(), None);
    }

    #[test]
    fn gcd_is_primitive() {
        let common = p(&[-3, 1]);
        let a = &(&common * &p(&[1, 1])).scale(&BigInt::from(4)) * &Polynomial::one();
        let b = (&common * &p(&[2, 0, 1])).scale(&BigInt::from(6));
        assert_eq!(a.gcd(&b), common.scale(&BigInt::from(2)));
        assert_eq!(p(&[1, 1]).gcd(&p(&[-1, 1])), p(&[1]));
    }

    #[test]
    fn render_descending() {
        let f = Polynomial::from_descending(
            [1, -42, 229, -244, 72].iter().map(|&c| BigInt::from(c)).collect(),
        );
        assert_eq!(f.to_string(), "x^4 - 42x^3 + 229x^2 - 244x + 72");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(Polynomial::<BigInt>::zero().to_string(), "0");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let f = p(&[-1, 0, 1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"coeffs":["-1","0","1"]}"#);
        let back: Polynomial<BigInt> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn generic_over_f64() {
        let f = Polynomial::new(vec![1.0_f64, -3.0, 2.0]);
        assert_eq!(f.eval(&1.0), 0.0);
        assert_eq!(f.eval(&0.5), 0.0);
    }
}
