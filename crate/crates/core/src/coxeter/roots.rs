//! Exact root systems of finite Coxeter graphs.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::coxeter::CoxeterGraph;
use crate::error::{Error, Result};
use crate::exact::{Golden, Ring};

/// Scalars a root system can be realized over.
pub trait RootScalar: Ring + Eq + Hash + Debug {
    /// Sign of the value as a real number.
    fn sign(&self) -> Ordering;

    /// Cartan pair `(c(i,j), c(j,i))` for an edge of order `m`, if this
    /// ring contains it.
    fn cartan_pair(m: u32) -> Option<(Self, Self)>;

    /// Cheap size check used to detect runaway closures.
    fn is_small(&self) -> bool;
}

impl RootScalar for i64 {
    fn sign(&self) -> Ordering {
        self.cmp(&0)
    }

    fn cartan_pair(m: u32) -> Option<(Self, Self)> {
        match m {
            2 => Some((0, 0)),
            3 => Some((-1, -1)),
            4 => Some((-1, -2)),
            6 => Some((-1, -3)),
            _ => None,
        }
    }

    fn is_small(&self) -> bool {
        self.abs() <= SMALL
    }
}

impl RootScalar for Golden<i64> {
    fn sign(&self) -> Ordering {
        self.signum_exact()
    }

    fn cartan_pair(m: u32) -> Option<(Self, Self)> {
        if m == 5 {
            // 2 cos(pi/5) = phi
            let c = -Golden::phi();
            return Some((c, c));
        }
        i64::cartan_pair(m).map(|(a, b)| (Golden::from_int(a), Golden::from_int(b)))
    }

    fn is_small(&self) -> bool {
        self.a.abs() <= SMALL && self.b.abs() <= SMALL
    }
}

/// Root coordinates of finite types stay far below this.
const SMALL: i64 = 64;

/// Encoded signed root index: `2r` for the positive root `r`, `2r + 1` for
/// its negative.
pub type SignedRoot = u16;

pub(crate) fn is_negative(s: SignedRoot) -> bool {
    s & 1 == 1
}

pub(crate) fn root_index(s: SignedRoot) -> usize {
    usize::from(s >> 1)
}

/// Root system over `R`, with simple roots the standard basis vectors and
/// `s_i(v) = v - (sum_j c(i,j) v_j) alpha_i`.
///
/// Positive roots are indexed with the simple roots first; `action[i][r]`
/// is the signed index of `s_i(beta_r)`.
#[derive(Clone, Debug)]
pub struct RootSystem<R> {
    rank: usize,
    cartan: Vec<Vec<R>>,
    positive: Vec<Vec<R>>,
    action: Vec<Vec<SignedRoot>>,
}

pub type IntRootSystem = RootSystem<i64>;
pub type GoldenRootSystem = RootSystem<Golden<i64>>;

impl<R: RootScalar> RootSystem<R> {
    pub fn build(graph: &CoxeterGraph) -> Result<Self> {
        let n = graph.rank();
        let mut cartan = vec![vec![R::zero(); n]; n];
        for i in 0..n {
            cartan[i][i] = R::one() + R::one();
            for j in i + 1..n {
                let m = graph.order(i, j);
                let (cij, cji) = R::cartan_pair(m).ok_or(Error::UnsupportedOrder(m))?;
                cartan[i][j] = cij;
                cartan[j][i] = cji;
            }
        }
        // Finite types of rank n have at most max(n^2, 120) positive roots.
        let cap = (n * n).max(120);
        let mut positive: Vec<Vec<R>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { R::one() } else { R::zero() }).collect())
            .collect();
        let mut index: HashMap<Vec<R>, usize> =
            positive.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        let mut next = 0;
        while next < positive.len() {
            for i in 0..n {
                if next == i {
                    continue;
                }
                let image = reflect(&cartan, i, &positive[next]);
                if index.contains_key(&image) {
                    continue;
                }
                if image.iter().any(|c| c.sign() == Ordering::Less || !c.is_small())
                    || positive.len() >= cap
                {
                    return Err(Error::NonSpherical(cap));
                }
                index.insert(image.clone(), positive.len());
                positive.push(image);
            }
            next += 1;
        }
        if positive.len() > u16::MAX as usize / 2 {
            return Err(Error::NonSpherical(positive.len()));
        }
        let action = (0..n)
            .map(|i| {
                positive
                    .iter()
                    .enumerate()
                    .map(|(r, beta)| {
                        if r == i {
                            (i as SignedRoot) << 1 | 1
                        } else {
                            (index[&reflect(&cartan, i, beta)] as SignedRoot) << 1
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self { rank: n, cartan, positive, action })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<R>] {
        &self.cartan
    }

    /// Number of positive roots.
    pub fn positive_count(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_roots(&self) -> &[Vec<R>] {
        &self.positive
    }

    /// The reflection `s_i` applied to an arbitrary vector.
    pub fn reflect(&self, i: usize, v: &[R]) -> Vec<R> {
        reflect(&self.cartan, i, v)
    }

    pub fn action(&self) -> &[Vec<SignedRoot>] {
        &self.action
    }
}

fn reflect<R: RootScalar>(cartan: &[Vec<R>], i: usize, v: &[R]) -> Vec<R> {
    let pairing = cartan[i]
        .iter()
        .zip(v)
        .fold(R::zero(), |acc, (c, x)| acc + c.clone() * x.clone());
    let mut out = v.to_vec();
    out[i] = out[i].clone() - pairing;
    out
}

/// A root system over whichever ring the graph needs: integers unless some
/// edge has order 5.
#[derive(Clone, Debug)]
pub enum AnyRootSystem {
    Integer(IntRootSystem),
    Golden(GoldenRootSystem),
}

impl AnyRootSystem {
    pub fn rank(&self) -> usize {
        match self {
            Self::Integer(r) => r.rank(),
            Self::Golden(r) => r.rank(),
        }
    }

    pub fn positive_count(&self) -> usize {
        match self {
            Self::Integer(r) => r.positive_count(),
            Self::Golden(r) => r.positive_count(),
        }
    }

    pub fn action(&self) -> &[Vec<SignedRoot>] {
        match self {
            Self::Integer(r) => r.action(),
            Self::Golden(r) => r.action(),
        }
    }

    pub fn is_golden(&self) -> bool {
        matches!(self, Self::Golden(_))
    }
}

pub fn build_root_system(graph: &CoxeterGraph) -> Result<AnyRootSystem> {
    let needs_golden = graph.matrix().iter().flatten().any(|&m| m == 5);
    if needs_golden {
        RootSystem::build(graph).map(AnyRootSystem::Golden)
    } else {
        RootSystem::build(graph).map(AnyRootSystem::Integer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;

    fn count(t: &str) -> usize {
        let t: CoxeterType = t.parse().unwrap();
        build_root_system(&t.graph()).unwrap().positive_count()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(count("A1"), 1);
        assert_eq!(count("B2"), 4);
        assert_eq!(count("H3"), 15);
        assert_eq!(count("I6"), 6);
        assert_eq!(count("I5"), 5);
    }

    #[test]
    fn affine_graph_rejected() {
        // triangle of order-3 edges: affine A2
        let g = CoxeterGraph::new(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert!(matches!(build_root_system(&g), Err(Error::NonSpherical(_))));
    }

    #[test]
    fn order_seven_unsupported() {
        let g = CoxeterType::I(7).graph();
        assert_eq!(build_root_system(&g).unwrap_err(), Error::UnsupportedOrder(7));
    }

    #[test]
    fn generator_flips_only_its_root() {
        let rs = build_root_system(&CoxeterType::F4.graph()).unwrap();
        for (i, row) in rs.action().iter().enumerate() {
            let negatives: Vec<_> = (0..row.len()).filter(|&r| is_negative(row[r])).collect();
            assert_eq!(negatives, vec![i]);
            // involution on root indices
            for (r, &img) in row.iter().enumerate() {
                assert_eq!(root_index(row[root_index(img)]), r);
            }
        }
    }
}
