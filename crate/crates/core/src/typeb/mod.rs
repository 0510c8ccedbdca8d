//! The hyperoctahedral group in window notation, and the signed-word
//! operators built on it.

mod perm;
mod word;

pub use perm::SignedPermutation;
pub use word::SignedWord;

use crate::coxeter::{CoxeterModel, DescentSource};
use crate::descent::DescentSet;
use crate::error::{Error, Result};

/// Type `B_n` modelled by signed permutations, generator 0 being `s_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeB {
    n: usize,
}

impl TypeB {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Every element, in the order of [`SignedPermutation::all`].
    pub fn elements(&self) -> Vec<SignedPermutation> {
        SignedPermutation::all(self.n)
    }

    fn check(&self, a: &SignedPermutation) -> Result<()> {
        if a.rank() == self.n {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.n, a.rank()))
        }
    }
}

impl CoxeterModel for TypeB {
    type Element = SignedPermutation;

    fn rank(&self) -> usize {
        self.n
    }
    fn identity(&self) -> SignedPermutation {
        SignedPermutation::identity(self.n)
    }
    fn generator(&self, i: usize) -> Result<SignedPermutation> {
        SignedPermutation::generator(self.n, i)
    }
    fn mul(&self, a: &SignedPermutation, b: &SignedPermutation) -> Result<SignedPermutation> {
        self.check(a)?;
        a.compose(b)
    }
    fn inverse(&self, a: &SignedPermutation) -> Result<SignedPermutation> {
        self.check(a)?;
        Ok(a.inverse())
    }
    fn right_descents(&self, a: &SignedPermutation) -> DescentSet {
        a.descent_set()
    }
    fn left_descents(&self, a: &SignedPermutation) -> DescentSet {
        a.inverse().descent_set()
    }
    fn length(&self, a: &SignedPermutation) -> usize {
        a.length()
    }
    fn longest(&self) -> SignedPermutation {
        SignedPermutation::coxeter_element(self.n)
    }
    fn mul_generator(&self, a: &SignedPermutation, i: usize) -> Result<SignedPermutation> {
        self.check(a)?;
        a.mul_generator(i)
    }
    fn generator_mul(&self, i: usize, a: &SignedPermutation) -> Result<SignedPermutation> {
        self.check(a)?;
        a.generator_mul(i)
    }
}

impl DescentSource for TypeB {
    fn rank(&self) -> usize {
        self.n
    }

    fn for_each_descent_pair(&self, f: &mut dyn FnMut(DescentSet, DescentSet)) -> Result<()> {
        for (d, di) in self.descent_pairs()? {
            f(d, di);
        }
        Ok(())
    }

    fn descent_pairs(&self) -> Result<Vec<(DescentSet, DescentSet)>> {
        Ok(self
            .elements()
            .iter()
            .map(|w| (w.descent_set(), w.inverse().descent_set()))
            .collect())
    }
}
