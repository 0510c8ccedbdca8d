//! Normal pairs and left Garside normal forms of positive braids, with
//! simple braids represented by their group elements.

use std::fmt;
use std::str::FromStr;

use crate::coxeter::CoxeterModel;
use crate::error::{Error, Result};

/// A positive braid word: generator indices, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PositiveBraidWord {
    letters: Vec<usize>,
}

impl PositiveBraidWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.letters.iter().find(|&&i| i >= rank) {
            Some(&i) => Err(Error::GeneratorOutOfRange { index: i, rank }),
            None => Ok(()),
        }
    }
}

impl FromStr for PositiveBraidWord {
    type Err = Error;

    /// Whitespace- or comma-separated generator indices, e.g. `"1 1 0 1"`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("letter {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl fmt::Display for PositiveBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `(a, b)` is normal when `Des(b^-1)` is contained in `Des(a)`.
pub fn is_normal_pair<M: CoxeterModel>(model: &M, a: &M::Element, b: &M::Element) -> bool {
    model.left_descents(b).is_subset(model.right_descents(a))
}

/// Slides generators from the front of `b` onto the end of `a` until the
/// pair is normal. The product `ab` and the total length are unchanged, and
/// `b` may end up as the identity.
pub fn normalize_pair<M: CoxeterModel>(
    model: &M,
    a: &M::Element,
    b: &M::Element,
) -> Result<(M::Element, M::Element)> {
    let mut a = a.clone();
    let mut b = b.clone();
    while let Some(i) = model.left_descents(&b).difference(model.right_descents(&a)).min() {
        a = model.mul_generator(&a, i)?;
        b = model.generator_mul(i, &b)?;
    }
    Ok((a, b))
}

/// Left normal form: the factors are pairwise normal and none is the
/// identity. The empty word has no factors.
pub fn left_normal_form<M: CoxeterModel>(
    model: &M,
    word: &PositiveBraidWord,
) -> Result<Vec<M::Element>> {
    word.check_rank(model.rank())?;
    let identity = model.identity();
    let mut factors = word
        .letters()
        .iter()
        .map(|&i| model.generator(i))
        .collect::<Result<Vec<_>>>()?;
    loop {
        let mut changed = false;
        for k in (1..factors.len()).rev() {
            if is_normal_pair(model, &factors[k - 1], &factors[k]) {
                continue;
            }
            let (a, b) = normalize_pair(model, &factors[k - 1], &factors[k])?;
            factors[k - 1] = a;
            factors[k] = b;
            changed = true;
        }
        factors.retain(|f| *f != identity);
        if !changed {
            return Ok(factors);
        }
    }
}

pub fn garside_length<M: CoxeterModel>(model: &M, word: &PositiveBraidWord) -> Result<usize> {
    left_normal_form(model, word).map(|f| f.len())
}

/// First factor of the normal form, i.e. the left gcd with the Garside
/// element.
pub fn first_factor<M: CoxeterModel>(model: &M, word: &PositiveBraidWord) -> Result<M::Element> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    left_normal_form(model, word)?
        .into_iter()
        .next()
        .ok_or(Error::EmptyWord)
}

/// A reduced word of `w`, built by stripping the smallest right descent.
pub fn reduced_word<M: CoxeterModel>(model: &M, w: &M::Element) -> Result<Vec<usize>> {
    let mut word = Vec::new();
    let mut cur = w.clone();
    while let Some(i) = model.right_descents(&cur).min() {
        word.push(i);
        cur = model.mul_generator(&cur, i)?;
    }
    word.reverse();
    Ok(word)
}

/// Concatenated reduced words of a factor sequence.
pub fn factors_to_word<M: CoxeterModel>(
    model: &M,
    factors: &[M::Element],
) -> Result<PositiveBraidWord> {
    let mut letters = Vec::new();
    for f in factors {
        letters.extend(reduced_word(model, f)?);
    }
    Ok(PositiveBraidWord::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterModel;
    use crate::typeb::{SignedPermutation, TypeB};

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn example_word_has_two_factors() {
        let b2 = TypeB::new(2);
        let word: PositiveBraidWord = "1 1 0 1 0 0".parse().unwrap();
        let nf = left_normal_form(&b2, &word).unwrap();
        assert_eq!(nf, vec![p("(-1,-2)"), p("(-2,1)")]);
        assert_eq!(first_factor(&b2, &word).unwrap(), p("(-1,-2)"));
    }

    #[test]
    fn trailing_one_gives_three_factors() {
        // 1 (1 0 1 0) 1 = (1 0 1 0) 1 1 = delta s1 s1
        let b2 = TypeB::new(2);
        let nf = left_normal_form(&b2, &"1 1 0 1 0 1".parse().unwrap()).unwrap();
        let s1 = b2.generator(1).unwrap();
        assert_eq!(nf, vec![p("(-1,-2)"), s1.clone(), s1]);
    }

    #[test]
    fn empty_and_single_letters() {
        let b3 = TypeB::new(3);
        assert!(left_normal_form(&b3, &PositiveBraidWord::default()).unwrap().is_empty());
        assert_eq!(first_factor(&b3, &PositiveBraidWord::default()), Err(Error::EmptyWord));
        let nf = left_normal_form(&b3, &"0".parse().unwrap()).unwrap();
        assert_eq!(nf, vec![SignedPermutation::generator(3, 0).unwrap()]);
    }

    #[test]
    fn slide_examples() {
        let b2 = TypeB::new(2);
        let s0 = b2.generator(0).unwrap();
        let s1 = b2.generator(1).unwrap();
        let (a, b) = normalize_pair(&b2, &s1, &p("(-2,-1)")).unwrap();
        assert_eq!(a, p("(-1,-2)"));
        assert!(b.is_identity());
        let (a, b) = normalize_pair(&b2, &s0, &s1).unwrap();
        assert_eq!(a, p("(2,-1)"));
        assert!(b.is_identity());
        assert!(!is_normal_pair(&b2, &p("(2,-1)"), &p("(2,-1)")));
    }

    #[test]
    fn simple_products_stay_single() {
        let b2 = TypeB::new(2);
        let nf = left_normal_form(&b2, &"0 1".parse().unwrap()).unwrap();
        assert_eq!(nf, vec![p("(2,-1)")]);
        let delta_twice: PositiveBraidWord = "0 1 0 1 0 1 0 1".parse().unwrap();
        assert_eq!(garside_length(&b2, &delta_twice).unwrap(), 2);
    }

    #[test]
    fn out_of_range_letter() {
        let b2 = TypeB::new(2);
        assert!(matches!(
            left_normal_form(&b2, &"0 2".parse().unwrap()),
            Err(Error::GeneratorOutOfRange { index: 2, rank: 2 })
        ));
    }
}
