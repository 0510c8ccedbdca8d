//! Finite Coxeter groups: type tags, exact root systems, element
//! enumeration, lengths, products and descent sets.

mod dihedral;
mod group;
mod model;
pub mod roots;
mod types;

pub use dihedral::{DihedralElement, DihedralGroup};
pub use group::{GroupElement, RootGroup, HUGE_ORDER};
pub use model::{CoxeterModel, DescentSource};
pub use roots::{build_root_system, AnyRootSystem, GoldenRootSystem, IntRootSystem, RootScalar, RootSystem};
pub use types::{CoxeterGraph, CoxeterType, SUPPORTED_TAGS};

use crate::descent::DescentSet;
use crate::error::Result;

/// A group built from a type tag: dihedral types use the abstract table
/// (any order `m`), everything else the root-system realization.
#[derive(Clone, Debug)]
pub enum CoxeterGroup {
    Roots(RootGroup),
    Dihedral(DihedralGroup),
}

impl CoxeterGroup {
    pub fn from_type(t: CoxeterType) -> Result<Self> {
        match t {
            CoxeterType::I(m) => DihedralGroup::new(m).map(Self::Dihedral),
            _ => RootGroup::from_type(t).map(Self::Roots),
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        Self::from_type(tag.parse()?)
    }

    pub fn allow_huge(self, allow: bool) -> Self {
        match self {
            Self::Roots(g) => Self::Roots(g.allow_huge(allow)),
            d => d,
        }
    }

    pub fn label(&self) -> Option<CoxeterType> {
        match self {
            Self::Roots(g) => g.graph().label(),
            Self::Dihedral(d) => Some(CoxeterType::I(d.m())),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Self::Roots(g) => g.rank(),
            Self::Dihedral(_) => 2,
        }
    }

    /// `|W|`, counted by enumeration.
    pub fn order(&self) -> Result<u64> {
        match self {
            Self::Roots(g) => g.order(),
            Self::Dihedral(d) => Ok(d.order()),
        }
    }
}

impl DescentSource for CoxeterGroup {
    fn rank(&self) -> usize {
        CoxeterGroup::rank(self)
    }

    fn for_each_descent_pair(&self, f: &mut dyn FnMut(DescentSet, DescentSet)) -> Result<()> {
        match self {
            Self::Roots(g) => g.for_each_descent_pair(f),
            Self::Dihedral(d) => d.for_each_descent_pair(f),
        }
    }

    fn descent_pairs(&self) -> Result<Vec<(DescentSet, DescentSet)>> {
        match self {
            Self::Roots(g) => g.descent_pairs(),
            Self::Dihedral(d) => d.descent_pairs(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_matches_roots_up_to_six() {
        for m in 2..=6u32 {
            let d = DihedralGroup::new(m).unwrap();
            let r = RootGroup::from_type(CoxeterType::I(m)).unwrap();
            let mut a = d.descent_pairs().unwrap();
            let mut b = r.descent_pairs().unwrap();
            a.sort();
            b.sort();
            assert_eq!(a, b, "I2({m})");
        }
    }
}
