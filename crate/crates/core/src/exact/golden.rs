//! The ring `Z[phi]` with `phi^2 = phi + 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

/// `a + b * phi`, where `phi = (1 + sqrt 5) / 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Golden<T> {
    pub a: T,
    pub b: T,
}

impl<T> Golden<T> {
    pub const fn new(a: T, b: T) -> Self {
        Self { a, b }
    }
}

impl<T: Clone + Zero + One> Golden<T> {
    pub fn phi() -> Self {
        Self::new(T::zero(), T::one())
    }

    pub fn from_int(a: T) -> Self {
        Self::new(a, T::zero())
    }
}

impl<T> Golden<T>
where
    T: Clone + Signed + Ord,
{
    /// Exact sign of `a + b phi`.
    ///
    /// Writes `2(a + b phi) = p + q sqrt 5` with `p = 2a + b`, `q = b`, and
    /// compares `p^2` with `5 q^2` when the two parts disagree in sign.
    pub fn signum_exact(&self) -> Ordering {
        let two = T::one() + T::one();
        let five = two.clone() + two.clone() + T::one();
        let p = two * self.a.clone() + self.b.clone();
        let q = self.b.clone();
        let zero = T::zero();
        match (p.cmp(&zero), q.cmp(&zero)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            (ps, _) => {
                // p and q have opposite signs: the larger magnitude wins
                let p2 = p.clone() * p;
                let q2 = five * q.clone() * q;
                if p2 > q2 {
                    ps
                } else {
                    ps.reverse()
                }
            }
        }
    }

    pub fn is_positive_exact(&self) -> bool {
        self.signum_exact() == Ordering::Greater
    }

    pub fn is_negative_exact(&self) -> bool {
        self.signum_exact() == Ordering::Less
    }
}

impl<T: ToPrimitive> Golden<T> {
    /// Floating-point approximation, for display and test oracles only.
    pub fn to_f64(&self) -> Option<f64> {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        Some(self.a.to_f64()? + self.b.to_f64()? * phi)
    }
}

impl<T: Add<Output = T>> Add for Golden<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<T: Sub<Output = T>> Sub for Golden<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<T: Neg<Output = T>> Neg for Golden<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<T> Mul for Golden<T>
where
    T: Clone + Add<Output = T> + Mul<Output = T>,
{
    type Output = Self;
    /// `(a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi`.
    fn mul(self, rhs: Self) -> Self {
        let bd = self.b.clone() * rhs.b.clone();
        Self::new(
            self.a.clone() * rhs.a.clone() + bd.clone(),
            self.a * rhs.b + self.b * rhs.a + bd,
        )
    }
}

impl<T: Clone + Zero + PartialEq> Zero for Golden<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Clone + Zero + One + PartialEq> One for Golden<T> {
    fn one() -> Self {
        Self::new(T::one(), T::zero())
    }
}

impl<T: fmt::Display + Zero + PartialEq> fmt::Display for Golden<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}φ", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type G = Golden<i64>;

    #[test]
    fn phi_squared() {
        assert_eq!(G::phi() * G::phi(), G::new(1, 1));
    }

    #[test]
    fn signs() {
        assert_eq!((G::from_int(1) - G::phi()).signum_exact(), Ordering::Less);
        // 2 - phi: p = 3, q = -1, 9 > 5
        assert_eq!((G::from_int(2) - G::phi()).signum_exact(), Ordering::Greater);
        assert_eq!(G::zero().signum_exact(), Ordering::Equal);
        assert_eq!(G::new(-1, 1).signum_exact(), Ordering::Greater);
    }

    #[test]
    fn works_over_bigint() {
        let x = Golden::new(BigInt::from(3), BigInt::from(-2));
        // 3 - 2 phi ~ -0.236
        assert!(x.is_negative_exact());
        assert_eq!(x.clone() * Golden::one(), x);
    }
}
