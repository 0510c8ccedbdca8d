//! Shuffle and convolution products, the coproduct and the inversion map.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use super::PermVector;
use crate::error::{Error, Result};
use crate::typeb::{SignedPermutation, SignedWord};
use crate::Rational;

/// A `k`-subset of `[1, k + l]`: the positions receiving the letters of the
/// left word in an X-shuffle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShuffleSelector {
    k: usize,
    l: usize,
    positions: Vec<usize>,
}

impl ShuffleSelector {
    pub fn new(k: usize, l: usize, positions: Vec<usize>) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidSelector(format!("{positions:?}: {why}")));
        if positions.len() != k {
            return bad(&format!("expected {k} positions"));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return bad("positions must be strictly increasing");
        }
        if positions.iter().any(|&x| x == 0 || x > k + l) {
            return bad(&format!("positions must lie in [1, {}]", k + l));
        }
        Ok(Self { k, l, positions })
    }

    /// Every selector for the given sizes, in lexicographic order.
    pub fn all(k: usize, l: usize) -> impl Iterator<Item = Self> {
        (1..=k + l).combinations(k).map(move |positions| Self { k, l, positions })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }
}

/// Letters of `u` at the selected positions, the letters of `v` shifted by
/// `|u|` everywhere else.
pub fn x_shuffle(u: &SignedWord, v: &SignedWord, x: &ShuffleSelector) -> Result<SignedWord> {
    if u.len() != x.k || v.len() != x.l {
        return Err(Error::InvalidSelector(format!(
            "selector for sizes ({}, {}) applied to words of lengths ({}, {})",
            x.k,
            x.l,
            u.len(),
            v.len()
        )));
    }
    let shifted = v.shift(x.k as i32);
    let mut left = u.letters().iter();
    let mut right = shifted.letters().iter();
    let mut picks = x.positions.iter().peekable();
    let mut letters = Vec::with_capacity(x.k + x.l);
    for pos in 1..=x.k + x.l {
        let from_u = picks.next_if_eq(&&pos).is_some();
        let src = if from_u { left.next() } else { right.next() };
        letters.push(*src.expect("selector sizes match the words"));
    }
    SignedWord::new(letters)
}

pub fn shuffle_perms(s: &SignedPermutation, t: &SignedPermutation) -> Result<PermVector> {
    let (u, v) = (SignedWord::from(s), SignedWord::from(t));
    collect_perms(
        ShuffleSelector::all(s.rank(), t.rank()).map(|x| x_shuffle(&u, &v, &x)?.to_permutation()),
    )
}

/// The shuffle product, extended bilinearly.
pub fn shuffle(a: &PermVector, b: &PermVector) -> Result<PermVector> {
    a.rank()?;
    b.rank()?;
    a.map_bilinear(b, shuffle_perms)
}

/// Shuffle of several vectors, left to right. The empty product is the
/// empty permutation.
pub fn shuffle_all<'a>(factors: impl IntoIterator<Item = &'a PermVector>) -> Result<PermVector> {
    factors
        .into_iter()
        .try_fold(PermVector::basis(SignedPermutation::identity(0)), |acc, f| shuffle(&acc, f))
}

/// Words of rank `k + l` whose first `k` letters standardize to `s` and
/// whose last `l` letters standardize to `t`.
pub fn convolution_perms(s: &SignedPermutation, t: &SignedPermutation) -> Result<PermVector> {
    let (k, l) = (s.rank(), t.rank());
    let n = k + l;
    let relabel = |w: &[i32], values: &[i32]| -> Vec<i32> {
        w.iter().map(|&x| x.signum() * values[x.unsigned_abs() as usize - 1]).collect()
    };
    collect_perms((1..=n as i32).combinations(k).map(|left| {
        let right: Vec<i32> = (1..=n as i32).filter(|x| !left.contains(x)).collect();
        let mut window = relabel(s.window(), &left);
        window.extend(relabel(t.window(), &right));
        SignedPermutation::new(window)
    }))
}

/// The product dual to the coproduct, extended bilinearly.
pub fn convolution(a: &PermVector, b: &PermVector) -> Result<PermVector> {
    a.rank()?;
    b.rank()?;
    a.map_bilinear(b, convolution_perms)
}

pub fn convolution_all<'a>(
    factors: impl IntoIterator<Item = &'a PermVector>,
) -> Result<PermVector> {
    factors.into_iter().try_fold(PermVector::basis(SignedPermutation::identity(0)), |acc, f| {
        convolution(&acc, f)
    })
}

fn collect_perms(iter: impl Iterator<Item = Result<SignedPermutation>>) -> Result<PermVector> {
    iter.collect::<Result<Vec<_>>>().map(|ps| ps.into_iter().collect())
}

/// One term `coeff * left (x) right` of a tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorTerm {
    pub left: SignedPermutation,
    pub right: SignedPermutation,
    pub coeff: Rational,
}

fn std_perm(letters: &[i32]) -> Result<SignedPermutation> {
    SignedWord::new(letters.to_vec())?.std()?.to_permutation()
}

/// Deconcatenation followed by standardization, cut after `k = 0..=n`
/// letters.
pub fn coproduct_perm(s: &SignedPermutation) -> Result<Vec<(SignedPermutation, SignedPermutation)>> {
    let w = s.window();
    (0..=w.len()).map(|k| Ok((std_perm(&w[..k])?, std_perm(&w[k..])?))).collect()
}

/// Linear extension of [`coproduct_perm`], collected by `(left, right)`.
pub fn coproduct(v: &PermVector) -> Result<Vec<TensorTerm>> {
    let mut acc: BTreeMap<(SignedPermutation, SignedPermutation), Rational> = BTreeMap::new();
    for (p, c) in v.terms() {
        for pair in coproduct_perm(p)? {
            *acc.entry(pair).or_insert_with(Rational::zero) += c;
        }
    }
    Ok(acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((left, right), coeff)| TensorTerm { left, right, coeff })
        .collect())
}

/// `sigma -> sigma^-1`, extended linearly.
pub fn iota(v: &PermVector) -> PermVector {
    PermVector::from_terms(v.terms().map(|(p, c)| (p.inverse(), c.clone())))
}

/// `<a, b>` for the pairing making the permutations orthonormal.
pub fn pairing(a: &PermVector, b: &PermVector) -> Rational {
    a.terms().map(|(p, c)| c * b.coeff(p)).sum()
}

/// `<s (x) t, tensor>`.
pub fn tensor_pairing(s: &SignedPermutation, t: &SignedPermutation, tensor: &[TensorTerm]) -> Rational {
    tensor
        .iter()
        .filter(|term| term.left == *s && term.right == *t)
        .map(|term| term.coeff.clone())
        .sum()
}

/// The unit for both products.
pub fn unit() -> PermVector {
    PermVector::from_terms([(SignedPermutation::identity(0), Rational::one())])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn w(l: &[i32]) -> SignedWord {
        SignedWord::new(l.to_vec()).unwrap()
    }

    fn sum(ps: &[&str]) -> PermVector {
        ps.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn selectors() {
        let all: Vec<Vec<usize>> = ShuffleSelector::all(2, 3).map(|x| x.positions).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], vec![1, 2]);
        assert_eq!(all[9], vec![4, 5]);
        assert!(ShuffleSelector::new(2, 3, vec![4, 2]).is_err());
        assert!(ShuffleSelector::new(2, 3, vec![1, 6]).is_err());
        assert!(ShuffleSelector::new(2, 3, vec![1]).is_err());
    }

    #[test]
    fn x_shuffle_examples() {
        let (u, v) = (w(&[-2, 1]), w(&[3, -1, 2]));
        let x = ShuffleSelector::new(2, 3, vec![2, 4]).unwrap();
        assert_eq!(x_shuffle(&u, &v, &x).unwrap(), w(&[5, -2, -3, 1, 4]));
        let x = ShuffleSelector::new(2, 3, vec![4, 5]).unwrap();
        assert_eq!(x_shuffle(&u, &v, &x).unwrap(), w(&[5, -3, 4, -2, 1]));
        let x = ShuffleSelector::new(2, 0, vec![1, 2]).unwrap();
        assert_eq!(x_shuffle(&u, &SignedWord::empty(), &x).unwrap(), u);
    }

    #[test]
    fn shuffle_example() {
        let got = shuffle_perms(&p("(-2,1)"), &p("(3,-1,2)")).unwrap();
        let expected = sum(&[
            "(-2,1,5,-3,4)",
            "(-2,5,1,-3,4)",
            "(-2,5,-3,1,4)",
            "(-2,5,-3,4,1)",
            "(5,-2,1,-3,4)",
            "(5,-2,-3,1,4)",
            "(5,-2,-3,4,1)",
            "(5,-3,-2,1,4)",
            "(5,-3,-2,4,1)",
            "(5,-3,4,-2,1)",
        ]);
        assert_eq!(got, expected);
        assert_eq!(shuffle_perms(&p("(1,2)"), &p("(2,1)")).unwrap().len(), 6);
        assert_eq!(shuffle(&sum(&["(2,-1)"]), &unit()).unwrap(), sum(&["(2,-1)"]));
    }

    #[test]
    fn convolution_example() {
        let got = convolution_perms(&p("(2,-1)"), &p("(3,-1,2)")).unwrap();
        let expected = sum(&[
            "(2,-1,5,-3,4)",
            "(3,-1,5,-2,4)",
            "(4,-1,5,-2,3)",
            "(5,-1,4,-2,3)",
            "(3,-2,5,-1,4)",
            "(4,-2,5,-1,3)",
            "(5,-2,4,-1,3)",
            "(4,-3,5,-1,2)",
            "(5,-3,4,-1,2)",
            "(5,-4,3,-1,2)",
        ]);
        assert_eq!(got, expected);
        assert_eq!(convolution_perms(&p("(1)"), &p("(1)")).unwrap(), sum(&["(1,2)", "(2,1)"]));
    }

    #[test]
    fn coproduct_example() {
        let got = coproduct_perm(&p("(4,-2,3,1)")).unwrap();
        let shown: Vec<(String, String)> =
            got.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let expected = [
            ("()", "(4,-2,3,1)"),
            ("(1)", "(-2,3,1)"),
            ("(2,-1)", "(2,1)"),
            ("(3,-1,2)", "(1)"),
            ("(4,-2,3,1)", "()"),
        ];
        let expected: Vec<(String, String)> =
            expected.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(shown, expected);
    }

    #[test]
    fn iota_is_involution() {
        let v = sum(&["(2,-1)", "(-2,-1)", "(1,2)"]);
        assert_eq!(iota(&iota(&v)), v);
        assert_eq!(iota(&sum(&["(2,-1)"])), sum(&["(-2,1)"]));
    }
}
