//! Interfaces shared by the concrete group models.

use std::fmt::Debug;
use std::hash::Hash;

use crate::coxeter::{DihedralElement, DihedralGroup, GroupElement, RootGroup};
use crate::descent::DescentSet;
use crate::error::Result;

/// A finite Coxeter group with a fixed generator numbering.
pub trait CoxeterModel {
    type Element: Clone + Eq + Hash + Debug;

    fn rank(&self) -> usize;
    fn identity(&self) -> Self::Element;
    fn generator(&self, i: usize) -> Result<Self::Element>;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element>;
    fn inverse(&self, a: &Self::Element) -> Result<Self::Element>;
    /// `{i : l(a s_i) < l(a)}`.
    fn right_descents(&self, a: &Self::Element) -> DescentSet;
    /// `Des(a^-1)`.
    fn left_descents(&self, a: &Self::Element) -> DescentSet;
    fn length(&self, a: &Self::Element) -> usize;
    fn longest(&self) -> Self::Element;

    fn mul_generator(&self, a: &Self::Element, i: usize) -> Result<Self::Element> {
        self.mul(a, &self.generator(i)?)
    }

    fn generator_mul(&self, i: usize, a: &Self::Element) -> Result<Self::Element> {
        self.mul(&self.generator(i)?, a)
    }

    fn from_word(&self, word: &[usize]) -> Result<Self::Element> {
        word.iter()
            .try_fold(self.identity(), |acc, &i| self.mul_generator(&acc, i))
    }
}

/// Anything that can report `(Des w, Des w^-1)` for every element `w`.
///
/// This is all the descent-class matrix and the full adjacency matrix
/// need to know about a group.
pub trait DescentSource {
    fn rank(&self) -> usize;

    /// Calls `f(Des w, Des w^-1)` once per element, in any order.
    fn for_each_descent_pair(&self, f: &mut dyn FnMut(DescentSet, DescentSet)) -> Result<()>;

    /// The pairs in the model's canonical element order.
    fn descent_pairs(&self) -> Result<Vec<(DescentSet, DescentSet)>>;
}

impl CoxeterModel for RootGroup {
    type Element = GroupElement;

    fn rank(&self) -> usize {
        RootGroup::rank(self)
    }
    fn identity(&self) -> GroupElement {
        RootGroup::identity(self)
    }
    fn generator(&self, i: usize) -> Result<GroupElement> {
        RootGroup::generator(self, i)
    }
    fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.multiply(a, b)
    }
    fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        RootGroup::inverse(self, a)
    }
    fn right_descents(&self, a: &GroupElement) -> DescentSet {
        RootGroup::right_descents(self, a)
    }
    fn left_descents(&self, a: &GroupElement) -> DescentSet {
        RootGroup::left_descents(self, a)
    }
    fn length(&self, a: &GroupElement) -> usize {
        a.length()
    }
    fn longest(&self) -> GroupElement {
        RootGroup::longest(self)
    }
    fn mul_generator(&self, a: &GroupElement, i: usize) -> Result<GroupElement> {
        self.apply_generator(a, i)
    }
    fn generator_mul(&self, i: usize, a: &GroupElement) -> Result<GroupElement> {
        self.left_apply_generator(i, a)
    }
}

impl DescentSource for RootGroup {
    fn rank(&self) -> usize {
        RootGroup::rank(self)
    }

    fn for_each_descent_pair(&self, f: &mut dyn FnMut(DescentSet, DescentSet)) -> Result<()> {
        self.for_each_element(|w| f(self.right_descents(w), self.left_descents(w)))
    }

    fn descent_pairs(&self) -> Result<Vec<(DescentSet, DescentSet)>> {
        Ok(self
            .enumerate()?
            .iter()
            .map(|w| (self.right_descents(w), self.left_descents(w)))
            .collect())
    }
}

impl CoxeterModel for DihedralGroup {
    type Element = DihedralElement;

    fn rank(&self) -> usize {
        2
    }
    fn identity(&self) -> DihedralElement {
        DihedralGroup::identity(self)
    }
    fn generator(&self, i: usize) -> Result<DihedralElement> {
        DihedralGroup::generator(self, i)
    }
    fn mul(&self, a: &DihedralElement, b: &DihedralElement) -> Result<DihedralElement> {
        Ok(self.multiply(a, b))
    }
    fn inverse(&self, a: &DihedralElement) -> Result<DihedralElement> {
        Ok(DihedralGroup::inverse(self, a))
    }
    fn right_descents(&self, a: &DihedralElement) -> DescentSet {
        DihedralGroup::right_descents(self, a)
    }
    fn left_descents(&self, a: &DihedralElement) -> DescentSet {
        DihedralGroup::left_descents(self, a)
    }
    fn length(&self, a: &DihedralElement) -> usize {
        DihedralGroup::length(self, a)
    }
    fn longest(&self) -> DihedralElement {
        DihedralGroup::longest(self)
    }
}

impl DescentSource for DihedralGroup {
    fn rank(&self) -> usize {
        2
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
            .map(|w| (self.right_descents(w), self.left_descents(w)))
            .collect())
    }
}
