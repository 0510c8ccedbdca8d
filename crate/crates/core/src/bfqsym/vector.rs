use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::typeb::SignedPermutation;
use crate::Rational;

/// A finite linear combination of signed permutations with rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PermVector {
    terms: BTreeMap<SignedPermutation, Rational>,
}

impl PermVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(p: SignedPermutation) -> Self {
        Self::term(p, Rational::one())
    }

    pub fn term(p: SignedPermutation, c: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(p, c);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (SignedPermutation, Rational)>) -> Self {
        let mut v = Self::zero();
        for (p, c) in terms {
            v.add_term(p, c);
        }
        v
    }

    pub fn add_term(&mut self, p: SignedPermutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedPermutation, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &SignedPermutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect() }
    }

    /// The common rank of the terms; `None` for the zero vector.
    pub fn rank(&self) -> Result<Option<usize>> {
        let mut ranks = self.terms.keys().map(SignedPermutation::rank);
        let Some(first) = ranks.next() else {
            return Ok(None);
        };
        if ranks.all(|r| r == first) {
            Ok(Some(first))
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    /// Extends `f` linearly.
    pub fn map_linear(&self, mut f: impl FnMut(&SignedPermutation) -> Result<Self>) -> Result<Self> {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            out += &f(p)?.scale(c);
        }
        Ok(out)
    }

    /// Extends `f` bilinearly.
    pub fn map_bilinear(
        &self,
        other: &Self,
        mut f: impl FnMut(&SignedPermutation, &SignedPermutation) -> Result<Self>,
    ) -> Result<Self> {
        let mut out = Self::zero();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out += &f(p, q)?.scale(&(a * b));
            }
        }
        Ok(out)
    }
}

impl FromIterator<SignedPermutation> for PermVector {
    /// Sum of the permutations, each with coefficient one.
    fn from_iter<I: IntoIterator<Item = SignedPermutation>>(iter: I) -> Self {
        Self::from_terms(iter.into_iter().map(|p| (p, Rational::one())))
    }
}

impl AddAssign<&PermVector> for PermVector {
    fn add_assign(&mut self, rhs: &PermVector) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl Add for &PermVector {
    type Output = PermVector;

    fn add(self, rhs: &PermVector) -> PermVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &PermVector {
    type Output = PermVector;

    fn neg(self) -> PermVector {
        PermVector { terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }
}

impl Sub for &PermVector {
    type Output = PermVector;

    fn sub(self, rhs: &PermVector) -> PermVector {
        self + &(-rhs)
    }
}

fn write_terms<K: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (K, Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let sign = if c.is_negative() { "-" } else { "+" };
        match (first, sign) {
            (true, "+") => {}
            (true, _) => f.write_str("-")?,
            (false, s) => write!(f, " {s} ")?,
        }
        let a = c.abs();
        if !a.is_one() {
            write!(f, "{a}")?;
        }
        write!(f, "{k}")?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for PermVector {
    /// `(1,2) - 1/2(-1,2)`; the zero vector prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(p, c)| (p, c.clone())))
    }
}

/// `[{"perm": "(1,-2)", "coeff": "-1/2"}, ...]` in window order.
impl Serialize for PermVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            perm: String,
            coeff: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (p, c) in &self.terms {
            seq.serialize_element(&Term { perm: p.to_string(), coeff: c.to_string() })?;
        }
        seq.end()
    }
}

/// A linear combination of subsets of `[0, n-1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DescentVector {
    terms: BTreeMap<DescentSet, Rational>,
}

impl DescentVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, d: DescentSet, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DescentSet, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: DescentSet) -> Rational {
        self.terms.get(&d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<(DescentSet, Rational)> for DescentVector {
    fn from_iter<I: IntoIterator<Item = (DescentSet, Rational)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (d, c) in iter {
            v.add_term(d, c);
        }
        v
    }
}

impl fmt::Display for DescentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(d, c)| (d, c.clone())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut v = PermVector::basis(p("(1,2)"));
        v.add_term(p("(1,2)"), q(-1, 1));
        assert!(v.is_zero());
        assert_eq!(v.rank().unwrap(), None);
    }

    #[test]
    fn display_and_json() {
        let v = PermVector::from_terms([(p("(1,2)"), q(1, 1)), (p("(-1,2)"), q(-1, 2))]);
        assert_eq!(v.to_string(), "-1/2(-1,2) + (1,2)");
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"[{"perm":"(-1,2)","coeff":"-1/2"},{"perm":"(1,2)","coeff":"1"}]"#
        );
        assert_eq!(PermVector::zero().to_string(), "0");
    }

    #[test]
    fn mixed_ranks_are_rejected() {
        let v: PermVector = [p("(1)"), p("(1,2)")].into_iter().collect();
        assert_eq!(v.rank(), Err(Error::NotHomogeneous));
    }
}
