//! The derivation `partial` built from letter deletion and local signs,
//! and the linear descent map.

use num_bigint::BigInt;
use num_traits::One;

use super::{DescentVector, PermVector};
use crate::error::{Error, Result};
use crate::typeb::{SignedPermutation, SignedWord};
use crate::{IntMatrix, Rational};

/// How the local sign is evaluated. `FlipLeft` negates the comparison
/// with the left neighbour; it is only a fault injection for checking that
/// the verification suite notices a broken derivation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SignRule {
    #[default]
    Standard,
    FlipLeft,
}

pub fn sign_with(word: &SignedWord, i: usize, rule: SignRule) -> Result<i8> {
    let (left, right) = word.sign_parts(i)?;
    let left = match rule {
        SignRule::Standard => left,
        SignRule::FlipLeft => -left,
    };
    Ok((left + right) / 2)
}

/// `sign_i(w(s)) * rho(del_i(w(s)))`, or zero.
pub fn partial_i(s: &SignedPermutation, i: usize) -> Result<PermVector> {
    partial_i_with(s, i, SignRule::Standard)
}

pub fn partial_i_with(s: &SignedPermutation, i: usize, rule: SignRule) -> Result<PermVector> {
    let word = SignedWord::from(s);
    let sign = sign_with(&word, i, rule)?;
    if sign == 0 {
        return Ok(PermVector::zero());
    }
    let target = word.del(i)?.to_permutation()?;
    Ok(PermVector::term(target, Rational::from_integer(BigInt::from(sign))))
}

/// `sum over i of partial_i`, extended linearly. Requires rank `>= 1`.
pub fn partial(v: &PermVector) -> Result<PermVector> {
    partial_with(v, SignRule::Standard)
}

pub fn partial_with(v: &PermVector, rule: SignRule) -> Result<PermVector> {
    if v.rank()? == Some(0) {
        return Err(Error::RankZero);
    }
    v.map_linear(|s| {
        let mut out = PermVector::zero();
        for i in 1..=s.rank() {
            out += &partial_i_with(s, i, rule)?;
        }
        Ok(out)
    })
}

/// Matrix of `partial` from rank `n` to rank `n - 1`; columns and rows
/// follow [`SignedPermutation::all`].
pub fn partial_matrix(n: usize) -> Result<IntMatrix> {
    if n == 0 {
        return Err(Error::RankZero);
    }
    let rows = SignedPermutation::all(n - 1);
    let cols = SignedPermutation::all(n);
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (j, s) in cols.iter().enumerate() {
        for (t, c) in partial(&PermVector::basis(s.clone()))?.terms() {
            let i = rows.iter().position(|r| r == t).expect("image has rank n - 1");
            m[(i, j)] = c.to_integer();
        }
    }
    Ok(m)
}

/// `Des` extended linearly.
pub fn descent_linear(v: &PermVector) -> DescentVector {
    v.terms().map(|(s, c)| (s.descent_set(), c.clone())).collect()
}

/// `Des(s)` with coefficient one.
pub fn descent_of(s: &SignedPermutation) -> DescentVector {
    [(s.descent_set(), Rational::one())].into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::DescentSet;

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn worked_example() {
        let s = p("(-1,2,-4,-5,3,6)");
        for i in [1, 2, 5, 6] {
            assert!(partial_i(&s, i).unwrap().is_zero(), "i = {i}");
        }
        assert_eq!(partial_i(&s, 3).unwrap(), PermVector::basis(p("(-1,2,-3,-4,5)")));
        assert_eq!(partial_i(&s, 4).unwrap(), PermVector::term(p("(-1,2,-4,3,5)"), int(-1)));
        let expected = PermVector::from_terms([(p("(-1,2,-3,-4,5)"), int(1)), (p("(-1,2,-4,3,5)"), int(-1))]);
        assert_eq!(partial(&PermVector::basis(s)).unwrap(), expected);
    }

    #[test]
    fn rank_two_matrix() {
        let m = partial_matrix(2).unwrap();
        let rows: Vec<Vec<i64>> =
            m.to_rows().iter().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
        assert_eq!(rows, vec![vec![1, -1, 0, 0, -1, -1, 0, 0], vec![0, 0, 0, -2, 0, 0, 0, 0]]);
    }

    #[test]
    fn flip_changes_the_map() {
        let s = PermVector::basis(p("(1,2)"));
        assert_ne!(partial(&s).unwrap(), partial_with(&s, SignRule::FlipLeft).unwrap());
    }

    #[test]
    fn rank_zero_rejected() {
        let e = PermVector::basis(SignedPermutation::identity(0));
        assert_eq!(partial(&e), Err(Error::RankZero));
        assert!(partial(&PermVector::zero()).unwrap().is_zero());
    }

    #[test]
    fn descent_map() {
        let v = PermVector::from_terms([(p("(2,1)"), int(1)), (p("(1,-2)"), int(2))]);
        let d = descent_linear(&v);
        assert_eq!(d.coeff(DescentSet::singleton(1)), int(3));
        assert!(descent_linear(&PermVector::zero()).is_zero());
        assert_eq!(descent_of(&SignedPermutation::identity(3)).coeff(DescentSet::EMPTY), int(1));
    }
}
