//! Group elements as signed permutations of the positive roots.

use std::sync::Arc;

use crate::coxeter::roots::{build_root_system, is_negative, root_index, AnyRootSystem, SignedRoot};
use crate::coxeter::{CoxeterGraph, CoxeterType};
use crate::descent::DescentSet;
use crate::error::{Error, Result};

/// `w` stored as the signed indices of `w(beta_r)` for each positive root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    images: Box<[SignedRoot]>,
}

impl GroupElement {
    pub fn images(&self) -> &[SignedRoot] {
        &self.images
    }

    /// Number of positive roots sent to negative ones.
    pub fn length(&self) -> usize {
        self.images.iter().filter(|&&s| is_negative(s)).count()
    }
}

/// Groups whose order exceeds this need an explicit override to enumerate.
pub const HUGE_ORDER: u128 = 1_000_000;

/// Finite Coxeter group realized on its root system.
#[derive(Clone, Debug)]
pub struct RootGroup {
    graph: CoxeterGraph,
    rank: usize,
    n_pos: usize,
    action: Arc<[Vec<SignedRoot>]>,
    golden: bool,
    allow_huge: bool,
}

impl RootGroup {
    pub fn new(graph: CoxeterGraph) -> Result<Self> {
        let rs = build_root_system(&graph)?;
        Ok(Self::from_root_system(graph, &rs))
    }

    pub fn from_type(t: CoxeterType) -> Result<Self> {
        Self::new(t.graph())
    }

    pub fn from_root_system(graph: CoxeterGraph, rs: &AnyRootSystem) -> Self {
        Self {
            rank: rs.rank(),
            n_pos: rs.positive_count(),
            action: rs.action().to_vec().into(),
            golden: rs.is_golden(),
            graph,
            allow_huge: false,
        }
    }

    /// Lifts the refusal to enumerate groups of order above [`HUGE_ORDER`].
    pub fn allow_huge(mut self, allow: bool) -> Self {
        self.allow_huge = allow;
        self
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_count(&self) -> usize {
        self.n_pos
    }

    /// Whether the realization needed `Z[phi]`.
    pub fn is_golden(&self) -> bool {
        self.golden
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { images: (0..self.n_pos as SignedRoot).map(|r| r << 1).collect() }
    }

    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        self.check_generator(i)?;
        Ok(GroupElement { images: self.action[i].clone().into() })
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange { index: i, rank: self.rank })
        }
    }

    fn check(&self, w: &GroupElement) -> Result<()> {
        if w.images.len() == self.n_pos {
            Ok(())
        } else {
            Err(Error::MixedGroups)
        }
    }

    /// `w v`, acting as `(w v)(beta) = w(v(beta))`.
    pub fn multiply(&self, w: &GroupElement, v: &GroupElement) -> Result<GroupElement> {
        self.check(w)?;
        self.check(v)?;
        Ok(compose(&w.images, &v.images))
    }

    pub fn inverse(&self, w: &GroupElement) -> Result<GroupElement> {
        self.check(w)?;
        Ok(invert(&w.images))
    }

    /// `w s_i`.
    pub fn apply_generator(&self, w: &GroupElement, i: usize) -> Result<GroupElement> {
        self.check(w)?;
        self.check_generator(i)?;
        Ok(compose(&w.images, &self.action[i]))
    }

    /// `s_i w`.
    pub fn left_apply_generator(&self, i: usize, w: &GroupElement) -> Result<GroupElement> {
        self.check(w)?;
        self.check_generator(i)?;
        Ok(compose(&self.action[i], &w.images))
    }

    /// `{i : w(alpha_i) < 0}`.
    pub fn right_descents(&self, w: &GroupElement) -> DescentSet {
        (0..self.rank).filter(|&i| is_negative(w.images[i])).collect()
    }

    /// `Des(w^-1)`: the `i` with `-alpha_i` in the image of `w`.
    pub fn left_descents(&self, w: &GroupElement) -> DescentSet {
        let mut d = DescentSet::EMPTY;
        for &s in w.images.iter() {
            if is_negative(s) && root_index(s) < self.rank {
                d.insert(root_index(s));
            }
        }
        d
    }

    pub fn length(&self, w: &GroupElement) -> usize {
        w.length()
    }

    /// The element sending every positive root to a negative one.
    pub fn longest(&self) -> GroupElement {
        let mut w = self.identity();
        while let Some(i) = (0..self.rank).find(|&i| !is_negative(w.images[i])) {
            w = compose(&w.images, &self.action[i]);
        }
        w
    }

    /// A reduced word, read left to right.
    pub fn reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while let Some(i) = self.right_descents(&cur).min() {
            word.push(i);
            cur = compose(&cur.images, &self.action[i]);
        }
        word.reverse();
        word
    }

    pub fn from_word(&self, word: &[usize]) -> Result<GroupElement> {
        let mut w = self.identity();
        for &i in word {
            w = self.apply_generator(&w, i)?;
        }
        Ok(w)
    }

    fn order_estimate(&self) -> Option<u128> {
        self.graph.label().and_then(CoxeterType::group_order)
    }

    fn guard(&self, what: &str) -> Result<()> {
        if self.allow_huge {
            return Ok(());
        }
        if let Some(order) = self.order_estimate().filter(|&o| o > HUGE_ORDER) {
            let bytes = order * (self.n_pos as u128 * 2 + 16);
            let label = self.graph.label().map(|t| t.to_string()).unwrap_or_default();
            return Err(Error::ResourceLimit {
                what: format!("{what} of {label}"),
                detail: format!(
                    "{order} elements, about {} MiB to materialize; pass --allow-huge to override",
                    bytes >> 20
                ),
            });
        }
        Ok(())
    }

    /// Visits every element once, depth first, without storing them.
    ///
    /// The parent of `c != 1` is `c s_j` with `j = min Des(c)`, so each child
    /// `w s_j` (with `j` not a descent of `w`) is accepted exactly when `j`
    /// is the smallest descent of the child.
    pub fn for_each_element(&self, mut f: impl FnMut(&GroupElement)) -> Result<()> {
        self.guard("the elements")?;
        let mut stack = vec![self.identity()];
        while let Some(w) = stack.pop() {
            for j in 0..self.rank {
                if is_negative(w.images[j]) {
                    continue;
                }
                let child = compose(&w.images, &self.action[j]);
                let first = (0..self.rank).find(|&i| is_negative(child.images[i]));
                if first == Some(j) {
                    stack.push(child);
                }
            }
            f(&w);
        }
        Ok(())
    }

    /// All elements, sorted by length and then by image vector.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        self.guard("the element list")?;
        let mut all = Vec::new();
        self.for_each_element(|w| all.push(w.clone()))?;
        all.sort_by_cached_key(|w| (w.length(), w.images.clone()));
        Ok(all)
    }

    /// `|W|` by streaming enumeration.
    pub fn order(&self) -> Result<u64> {
        let mut n = 0u64;
        self.for_each_element(|_| n += 1)?;
        Ok(n)
    }
}

fn compose(w: &[SignedRoot], v: &[SignedRoot]) -> GroupElement {
    GroupElement {
        images: v.iter().map(|&s| w[root_index(s)] ^ (s & 1)).collect(),
    }
}

fn invert(w: &[SignedRoot]) -> GroupElement {
    let mut out = vec![0 as SignedRoot; w.len()];
    for (r, &s) in w.iter().enumerate() {
        out[root_index(s)] = (r as SignedRoot) << 1 | (s & 1);
    }
    GroupElement { images: out.into() }
}
