use std::fmt;

use crate::error::{Error, Result};
use crate::typeb::SignedPermutation;

/// A word over the nonzero integers. The words whose absolute values are
/// exactly `[1, n]` are the windows of signed permutations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord {
    letters: Vec<i32>,
}

impl SignedWord {
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidWindow(format!("{letters:?} contains 0")));
        }
        Ok(Self { letters })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Moves every letter `k` further from zero.
    pub fn shift(&self, k: i32) -> Self {
        Self { letters: self.letters.iter().map(|&x| x + x.signum() * k).collect() }
    }

    /// Closes the gap left by a missing `±k`: letters with absolute value
    /// above `k` move one step towards zero.
    pub fn dec(&self, k: i32) -> Result<Self> {
        if self.letters.iter().any(|x| x.abs() == k) {
            return Err(Error::DecUndefined(k));
        }
        Ok(Self {
            letters: self
                .letters
                .iter()
                .map(|&x| if x.abs() > k { x - x.signum() } else { x })
                .collect(),
        })
    }

    /// Relabels absolute values by the increasing bijection onto `[1, len]`,
    /// keeping every sign.
    pub fn std(&self) -> Result<Self> {
        let mut abs: Vec<i32> = self.letters.iter().map(|x| x.abs()).collect();
        abs.sort_unstable();
        if let Some(w) = abs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedLetter(w[0]));
        }
        let letters = self
            .letters
            .iter()
            .map(|&x| {
                let rank = abs.binary_search(&x.abs()).expect("present") as i32 + 1;
                x.signum() * rank
            })
            .collect();
        Ok(Self { letters })
    }

    /// Whether the absolute values are exactly `[1, len]`.
    pub fn is_permutation_word(&self) -> bool {
        SignedPermutation::new(self.letters.clone()).is_ok()
    }

    /// The signed permutation with this window.
    pub fn to_permutation(&self) -> Result<SignedPermutation> {
        SignedPermutation::new(self.letters.clone())
    }

    fn position_of(&self, i: usize) -> Result<usize> {
        let n = self.len();
        if !(1..=n).contains(&i) || !self.is_permutation_word() {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(self
            .letters
            .iter()
            .position(|x| x.unsigned_abs() as usize == i)
            .expect("permutation word contains every absolute value"))
    }

    /// Deletes the letter `±i` and closes the gap.
    pub fn del(&self, i: usize) -> Result<Self> {
        let j = self.position_of(i)?;
        let mut letters = self.letters.clone();
        letters.remove(j);
        Self { letters }.dec(i as i32)
    }

    /// `eps(u_{j-1}, u_j, u_{j+1})` where `|u_j| = i`, reading `u_0 = 0`
    /// and `u_{n+1} = -infinity`.
    pub fn sign_at(&self, i: usize) -> Result<i8> {
        let (left, right) = self.sign_parts(i)?;
        Ok((left + right) / 2)
    }

    /// The two comparisons `(eps(u_{j-1}, u_j), eps(u_j, u_{j+1}))` that
    /// [`sign_at`](Self::sign_at) averages.
    pub fn sign_parts(&self, i: usize) -> Result<(i8, i8)> {
        let j = self.position_of(i)?;
        let u = self.letters[j];
        let before = if j == 0 { 0 } else { self.letters[j - 1] };
        // anything is above -infinity
        let right = match self.letters.get(j + 1) {
            Some(&next) => eps(u, next),
            None => -1,
        };
        Ok((eps(before, u), right))
    }
}

/// `1` if `a < b`, `-1` if `a > b`.
fn eps(a: i32, b: i32) -> i8 {
    if a < b {
        1
    } else {
        -1
    }
}

impl From<&SignedPermutation> for SignedWord {
    fn from(p: &SignedPermutation) -> Self {
        Self { letters: p.window().to_vec() }
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        let parts: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        f.write_str(&parts.join("·"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[i32]) -> SignedWord {
        SignedWord::new(l.to_vec()).unwrap()
    }

    #[test]
    fn shift_and_dec() {
        let u = w(&[1, -5, 3, -2, 6]);
        assert_eq!(u.shift(2), w(&[3, -7, 5, -4, 8]));
        assert_eq!(u.dec(4).unwrap(), w(&[1, -4, 3, -2, 5]));
        assert_eq!(u.shift(0), u);
        assert_eq!(u.dec(5), Err(Error::DecUndefined(5)));
    }

    #[test]
    fn standardization() {
        assert_eq!(w(&[4, -2]).std().unwrap(), w(&[2, -1]));
        assert_eq!(w(&[3, -1, 2]).std().unwrap(), w(&[3, -1, 2]));
        assert_eq!(w(&[2, -2]).std(), Err(Error::RepeatedLetter(2)));
    }

    #[test]
    fn deletion() {
        let u = w(&[-1, 2, -4, -5, 3, 6]);
        assert_eq!(u.del(1).unwrap(), w(&[1, -3, -4, 2, 5]));
        assert_eq!(u.del(6).unwrap(), w(&[-1, 2, -4, -5, 3]));
        assert_eq!(w(&[1]).del(1).unwrap(), SignedWord::empty());
        assert!(matches!(u.del(7), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn local_signs() {
        let u = w(&[-1, 2, -4, -5, 3, 6]);
        let signs: Vec<i8> = (1..=6).map(|i| u.sign_at(i).unwrap()).collect();
        assert_eq!(signs, vec![0, 0, 1, -1, 0, 0]);
        let id = w(&[1, 2, 3, 4]);
        assert_eq!(id.sign_at(4).unwrap(), 0);
    }
}
