//! Normal-pair adjacency matrices, their characteristic polynomials, braid
//! counts by Garside length and the counting series.
//!
//! Subsets of generators index rows and columns through their bitmask
//! value, so the descent-class matrix of a rank-`r` group is
//! `2^r x 2^r` with row `I` at position `sum of 2^i for i in I`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterModel, DescentSource};
use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::exact::{charpoly, solve_rational_series, Polynomial, RationalFunction};
use crate::{IntMatrix, IntPolynomial, Integer};

/// Default bound on `|W|` for building the full `|W| x |W|` matrix.
pub const DEFAULT_FULL_CAP: usize = 10_000;

/// The 0/1 matrix with `a(s, t) = 1` exactly when `Des(t^-1)` is a subset
/// of `Des(s)`, rows and columns in the source's canonical element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullAdjacency {
    matrix: IntMatrix,
    descents: Vec<(DescentSet, DescentSet)>,
}

impl FullAdjacency {
    /// From `(Des w, Des w^-1)` for each element, in the desired order.
    pub fn from_descent_pairs(descents: Vec<(DescentSet, DescentSet)>) -> Self {
        let n = descents.len();
        let matrix = IntMatrix::from_fn(n, n, |s, t| {
            if descents[t].1.is_subset(descents[s].0) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        Self { matrix, descents }
    }

    pub fn build(source: &impl DescentSource, cap: usize) -> Result<Self> {
        let mut order = 0usize;
        source.for_each_descent_pair(&mut |_, _| order += 1)?;
        if order > cap {
            return Err(Error::ResourceLimit {
                what: "full adjacency matrix".into(),
                detail: format!("{order} elements exceed the cap of {cap}"),
            });
        }
        Ok(Self::from_descent_pairs(source.descent_pairs()?))
    }

    /// Rows and columns follow `elements`.
    pub fn from_elements<M: CoxeterModel>(model: &M, elements: &[M::Element]) -> Self {
        Self::from_descent_pairs(
            elements
                .iter()
                .map(|w| (model.right_descents(w), model.left_descents(w)))
                .collect(),
        )
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.descents.len()
    }

    pub fn descent_pairs(&self) -> &[(DescentSet, DescentSet)] {
        &self.descents
    }

    pub fn charpoly(&self) -> Result<IntPolynomial> {
        charpoly(&self.matrix)
    }

    /// Number of normal sequences of length `d` from element `s` to element
    /// `t` (indices into the element order): `e_s^t A^(d-1) e_t`.
    pub fn count_fixed_endpoints(&self, s: usize, t: usize, d: usize) -> Result<Integer> {
        let n = self.order();
        for idx in [s, t] {
            if idx >= n {
                return Err(Error::ElementOutOfRange { index: idx, order: n });
            }
            if self.descents[idx].0.is_empty() {
                return Err(Error::IdentityEndpoint);
            }
        }
        if d == 0 {
            return Err(Error::ZeroLength);
        }
        let mut v: Vec<Integer> = (0..n).map(|k| BigInt::from(u8::from(k == t))).collect();
        for _ in 1..d {
            v = self.matrix.mul_vec(&v)?;
        }
        Ok(v.swap_remove(s))
    }
}

pub fn build_full_adjacency(source: &impl DescentSource, cap: usize) -> Result<FullAdjacency> {
    FullAdjacency::build(source, cap)
}

/// Normal sequences of length `d` from `sigma` to `tau`, neither being the
/// identity.
pub fn count_braids_fixed_endpoints<M: CoxeterModel>(
    model: &M,
    elements: &[M::Element],
    sigma: &M::Element,
    tau: &M::Element,
    d: usize,
) -> Result<Integer> {
    let identity = model.identity();
    if *sigma == identity || *tau == identity {
        return Err(Error::IdentityEndpoint);
    }
    let find = |x: &M::Element| {
        elements
            .iter()
            .position(|e| e == x)
            .ok_or_else(|| Error::InvalidWindow(format!("{x:?} is not among the elements")))
    };
    let (s, t) = (find(sigma)?, find(tau)?);
    FullAdjacency::from_elements(model, elements).count_fixed_endpoints(s, t, d)
}

/// `a'(I, J) = #{w : Des(w^-1) = I and J is a subset of Des(w)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentClassMatrix {
    rank: usize,
    #[serde(with = "order_string")]
    order: u64,
    matrix: IntMatrix,
}

mod order_string {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &u64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

impl DescentClassMatrix {
    /// One pass over the group, adding one to `(Des w^-1, J)` for every
    /// `J` contained in `Des w`.
    pub fn build(source: &impl DescentSource) -> Result<Self> {
        let rank = source.rank();
        if rank >= 16 {
            return Err(Error::ResourceLimit {
                what: "descent-class matrix".into(),
                detail: format!("rank {rank} would need a 2^{rank}-square matrix"),
            });
        }
        let size = 1usize << rank;
        let mut counts = vec![0u64; size * size];
        let mut order = 0u64;
        source.for_each_descent_pair(&mut |des, des_inv| {
            order += 1;
            let row = des_inv.index() * size;
            for j in des.subsets() {
                counts[row + j.index()] += 1;
            }
        })?;
        let matrix = IntMatrix::from_fn(size, size, |i, j| BigInt::from(counts[i * size + j]));
        Ok(Self { rank, order, matrix })
    }

    pub fn from_matrix(rank: usize, matrix: IntMatrix) -> Result<Self> {
        let size = 1usize << rank;
        if matrix.rows() != size || matrix.cols() != size {
            return Err(Error::DimensionMismatch(format!(
                "rank {rank} needs a {size}x{size} matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let order: BigInt = (0..size).map(|i| matrix[(i, 0)].clone()).sum();
        let order = u64::try_from(order)
            .map_err(|e| Error::DimensionMismatch(format!("column sum: {e}")))?;
        Ok(Self { rank, order, matrix })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `|W|`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn entry(&self, i: DescentSet, j: DescentSet) -> &Integer {
        &self.matrix[(i.index(), j.index())]
    }

    pub fn size(&self) -> usize {
        1 << self.rank
    }

    /// `Y(I) = 1` for nonempty `I`, `Y(empty) = 0`.
    pub fn y(&self) -> Vec<Integer> {
        (0..self.size()).map(|i| BigInt::from(u8::from(i != 0))).collect()
    }

    /// `Z(I) = (-1)^(|I| + 1)` for nonempty `I`, `Z(empty) = 0`.
    pub fn z(&self) -> Vec<Integer> {
        (0..self.size())
            .map(|i| match (i, (i as u32).count_ones() % 2) {
                (0, _) => BigInt::zero(),
                (_, 1) => BigInt::one(),
                _ => -BigInt::one(),
            })
            .collect()
    }

    /// Characteristic polynomial of the compressed matrix.
    pub fn charpoly(&self) -> Result<IntPolynomial> {
        charpoly(&self.matrix)
    }

    /// Characteristic polynomial of the full matrix: the compressed one
    /// times `x^(|W| - 2^rank)`.
    pub fn charpoly_full(&self) -> Result<IntPolynomial> {
        let extra = usize::try_from(self.order)
            .ok()
            .and_then(|o| o.checked_sub(self.size()))
            .ok_or_else(|| {
                Error::DimensionMismatch(format!(
                    "|W| = {} is smaller than 2^{}",
                    self.order, self.rank
                ))
            })?;
        Ok(self.charpoly()?.shift(extra))
    }

    /// Braids of Garside length `d`: `Y^t A'^d Z` (which is 1 at `d = 0`).
    pub fn count(&self, d: usize) -> Integer {
        self.counts(d + 1).pop().expect("at least one term")
    }

    /// `b(0), ..., b(n - 1)`.
    pub fn counts(&self, n: usize) -> Vec<Integer> {
        let y = self.y();
        let mut v = self.z();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(y.iter().zip(&v).map(|(a, b)| a * b).sum());
            if k + 1 < n {
                v = self.matrix.mul_vec(&v).expect("square matrix");
            }
        }
        out
    }

    /// `F(t) = sum over d >= 0 of b(d) t^d`.
    pub fn generating_series(&self) -> Result<RationalFunction> {
        solve_rational_series(&self.matrix, &self.y(), &self.z())
    }
}

pub fn build_descent_class_matrix(source: &impl DescentSource) -> Result<DescentClassMatrix> {
    DescentClassMatrix::build(source)
}

pub fn charpoly_full(source: &impl DescentSource) -> Result<IntPolynomial> {
    DescentClassMatrix::build(source)?.charpoly_full()
}

pub fn count_braids(source: &impl DescentSource, d: usize) -> Result<Integer> {
    Ok(DescentClassMatrix::build(source)?.count(d))
}

pub fn generating_series(source: &impl DescentSource) -> Result<RationalFunction> {
    DescentClassMatrix::build(source)?.generating_series()
}

/// Outcome of testing `p | q`.
///
/// Write `p = x^a p'` and `q = x^b q'` with `p'`, `q'` not divisible by
/// `x`. Since `p'` is coprime to `x`, `p | q` exactly when `a <= b` and
/// `p' | q'`. Characteristic polynomials of full matrices carry huge powers
/// of `x`, so only the small parts are ever divided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityVerdict {
    pub divides: bool,
    /// `[a, b]`.
    pub x_powers: [usize; 2],
    /// `q / p` when the division is exact over `Q`, if integral.
    pub quotient: Option<IntPolynomial>,
    /// `q' mod p'` when it is nonzero, if integral (always the case for
    /// monic `p`).
    pub remainder: Option<IntPolynomial>,
}

pub fn divisibility_verdict(p: &IntPolynomial, q: &IntPolynomial) -> Result<DivisibilityVerdict> {
    if p.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if q.is_zero() {
        let a = p.x_valuation();
        return Ok(DivisibilityVerdict { divides: true, x_powers: [a, a], quotient: Some(q.clone()), remainder: None });
    }
    let (a, b) = (p.x_valuation(), q.x_valuation());
    let (quot, rem) = q.unshift(b).to_rational().div_rem(&p.unshift(a).to_rational())?;
    let divides = a <= b && rem.is_zero();
    Ok(DivisibilityVerdict {
        divides,
        x_powers: [a, b],
        quotient: if divides { quot.shift(b - a).to_integer() } else { None },
        remainder: if rem.is_zero() { None } else { rem.to_integer() },
    })
}

/// `x^k` times a product of factors with multiplicities, for comparing
/// against factored displays.
pub fn expand_factored(x_power: usize, factors: &[(IntPolynomial, u32)]) -> IntPolynomial {
    Polynomial::product(factors.iter().map(|(f, m)| (f, *m))).shift(x_power)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterGroup, DihedralGroup};
    use crate::typeb::TypeB;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn a1_matrices() {
        let a1 = CoxeterGroup::from_tag("A1").unwrap();
        let full = build_full_adjacency(&a1, DEFAULT_FULL_CAP).unwrap();
        assert_eq!(full.matrix().to_rows(), vec![ints(&[1, 0]), ints(&[1, 1])]);
        let red = build_descent_class_matrix(&a1).unwrap();
        assert_eq!(red.matrix().to_rows(), vec![ints(&[1, 0]), ints(&[1, 1])]);
        assert_eq!(red.counts(4), ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn b2_counts_closed_form() {
        let red = build_descent_class_matrix(&TypeB::new(2)).unwrap();
        let expected: Vec<Integer> = (0..8u32).map(|d| BigInt::from(3u64.pow(d + 1) - 2)).collect();
        assert_eq!(red.counts(8)[1..], expected[1..]);
        assert_eq!(red.count(0), BigInt::one());
    }

    #[test]
    fn dihedral_closed_form() {
        for n in 2..=10u32 {
            let red = build_descent_class_matrix(&DihedralGroup::new(n).unwrap()).unwrap();
            let (a, b) = (i64::from((n - 1) / 2), i64::from(n / 2));
            let k = i64::from(n) - 1;
            let expected = [[1, 0, 0, 0], [k, b, a, 0], [k, a, b, 0], [1, 1, 1, 1]];
            let rows: Vec<Vec<Integer>> = expected.iter().map(|r| ints(r)).collect();
            assert_eq!(red.matrix().to_rows(), rows, "I2({n})");
        }
    }

    #[test]
    fn fixed_endpoints_base_case() {
        let b2 = TypeB::new(2);
        let els = b2.elements();
        let w0 = b2.longest();
        assert_eq!(count_braids_fixed_endpoints(&b2, &els, &w0, &w0, 1).unwrap(), BigInt::one());
        assert_eq!(count_braids_fixed_endpoints(&b2, &els, &w0, &w0, 2).unwrap(), BigInt::one());
        assert_eq!(
            count_braids_fixed_endpoints(&b2, &els, &w0, &els[1], 1).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            count_braids_fixed_endpoints(&b2, &els, &b2.identity(), &w0, 1),
            Err(Error::IdentityEndpoint)
        );
    }

    #[test]
    fn verdict_reports_remainder() {
        let p = Polynomial::new(ints(&[-1, 1]));
        let q = Polynomial::new(ints(&[-1, 0, 1]));
        let v = divisibility_verdict(&p, &q).unwrap();
        assert!(v.divides);
        assert_eq!(v.quotient, Some(Polynomial::new(ints(&[1, 1]))));
        let v = divisibility_verdict(&p, &Polynomial::new(ints(&[1, 0, 1]))).unwrap();
        assert!(!v.divides);
        assert_eq!(v.remainder, Some(Polynomial::new(ints(&[2]))));
    }

    #[test]
    fn verdict_splits_off_powers_of_x() {
        let p = Polynomial::new(ints(&[0, 0, -1, 1]));
        let q = Polynomial::new(ints(&[0, 0, 0, 0, 0, 1, 1]));
        for (p, q) in [
            (p.clone(), q.clone()),
            (p.clone(), &q * &Polynomial::new(ints(&[-1, 1]))),
            (p.shift(5), &q * &Polynomial::new(ints(&[-1, 1]))),
            (Polynomial::new(ints(&[3, 1])).shift(1), Polynomial::new(ints(&[1, 2, 0, 4]))),
        ] {
            let v = divisibility_verdict(&p, &q).unwrap();
            let (quot, rem) = q.to_rational().div_rem(&p.to_rational()).unwrap();
            assert_eq!(v.divides, rem.is_zero());
            if v.divides {
                assert_eq!(v.quotient, quot.to_integer());
            }
        }
        let v = divisibility_verdict(&p, &q).unwrap();
        assert_eq!(v.x_powers, [2, 5]);
        assert_eq!(v.remainder, Some(Polynomial::new(ints(&[2]))));
    }

    #[test]
    fn json_roundtrip() {
        let red = build_descent_class_matrix(&TypeB::new(2)).unwrap();
        let s = serde_json::to_string(&red).unwrap();
        let back: DescentClassMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, red);
        assert!(s.starts_with(r#"{"rank":2,"order":"8","matrix":"#));
    }
}
