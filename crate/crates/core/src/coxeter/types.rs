//! Type tags and Coxeter graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Finite irreducible type, with the generator numbering used throughout.
///
/// * `A(n)`: path `0 - 1 - ... - (n-1)`.
/// * `B(n)`: `0 =4= 1 - 2 - ...`; node 0 is the order-4 node.
/// * `D(n)`: nodes 0 (the `s'_0` node) and 1 both attach to node 2, then a
///   path `2 - 3 - ...`. `D1 = A1`, `D2 = A1 x A1`, `D3 = A3`.
/// * `E(n)`: branch node 3, chain `0 - 2 - 3 - 4 - ...`, node 1 attached
///   to node 3.
/// * `F4`: `0 - 1 =4= 2 - 3`.
/// * `H(n)`: `0 =5= 1 - 2 - ...`.
/// * `I(m)`: two nodes joined by an edge of order `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I(u32),
}

pub const SUPPORTED_TAGS: &str = "A<n>, B<n>, D<n> (n >= 1), E6, E7, E8, F4, H3, H4, I<m> (m >= 2)";

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            Self::A(n) | Self::B(n) | Self::D(n) | Self::E(n) | Self::H(n) => n,
            Self::F4 => 4,
            Self::I(_) => 2,
        }
    }

    /// Family letter.
    pub fn family(self) -> char {
        match self {
            Self::A(_) => 'A',
            Self::B(_) => 'B',
            Self::D(_) => 'D',
            Self::E(_) => 'E',
            Self::F4 => 'F',
            Self::H(_) => 'H',
            Self::I(_) => 'I',
        }
    }

    /// The number written after the family letter (the order `m` for `I`).
    pub fn parameter(self) -> u64 {
        match self {
            Self::I(m) => u64::from(m),
            t => t.rank() as u64,
        }
    }

    /// `|W|` from the closed forms; `None` on overflow.
    pub fn group_order(self) -> Option<u128> {
        fn factorial(n: usize) -> Option<u128> {
            (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
        }
        match self {
            Self::A(n) => factorial(n + 1),
            Self::B(n) => factorial(n)?.checked_mul(1u128.checked_shl(n as u32)?),
            // D1 is A1 (one generator), outside the 2^(n-1) n! formula
            Self::D(1) => Some(2),
            Self::D(n) => factorial(n)?.checked_mul(1u128.checked_shl(n as u32 - 1)?),
            Self::E(6) => Some(51_840),
            Self::E(7) => Some(2_903_040),
            Self::E(8) => Some(696_729_600),
            Self::E(_) => None,
            Self::F4 => Some(1152),
            Self::H(3) => Some(120),
            Self::H(4) => Some(14_400),
            Self::H(_) => None,
            Self::I(m) => Some(2 * u128::from(m)),
        }
    }

    /// Number of positive roots (reflections).
    pub fn positive_roots(self) -> Option<usize> {
        match self {
            Self::A(n) => Some(n * (n + 1) / 2),
            Self::B(n) => Some(n * n),
            Self::D(1) => Some(1),
            Self::D(n) => Some(n * (n - 1)),
            Self::E(6) => Some(36),
            Self::E(7) => Some(63),
            Self::E(8) => Some(120),
            Self::F4 => Some(24),
            Self::H(3) => Some(15),
            Self::H(4) => Some(60),
            Self::I(m) => Some(m as usize),
            _ => None,
        }
    }

    pub fn graph(self) -> CoxeterGraph {
        let n = self.rank();
        let mut edges: Vec<(usize, usize, u32)> = Vec::new();
        let path = |edges: &mut Vec<_>, from: usize| {
            for i in from..n.saturating_sub(1) {
                edges.push((i, i + 1, 3));
            }
        };
        match self {
            Self::A(_) => path(&mut edges, 0),
            Self::B(_) => {
                if n >= 2 {
                    edges.push((0, 1, 4));
                }
                path(&mut edges, 1);
            }
            Self::D(_) => {
                if n >= 3 {
                    edges.push((0, 2, 3));
                    edges.push((1, 2, 3));
                }
                path(&mut edges, 2);
            }
            Self::E(_) => {
                edges.extend([(0, 2, 3), (2, 3, 3), (1, 3, 3)]);
                path(&mut edges, 3);
            }
            Self::F4 => edges.extend([(0, 1, 3), (1, 2, 4), (2, 3, 3)]),
            Self::H(_) => {
                edges.push((0, 1, 5));
                path(&mut edges, 1);
            }
            Self::I(m) => edges.push((0, 1, m)),
        }
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (i, j, o) in edges {
            m[i][j] = o;
            m[j][i] = o;
        }
        CoxeterGraph { m, label: Some(self) }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            Self::A(n) | Self::B(n) | Self::D(n) => (1..crate::descent::MAX_RANK).contains(&n),
            Self::E(n) => (6..=8).contains(&n),
            Self::F4 => true,
            Self::H(n) => n == 3 || n == 4,
            Self::I(m) => m >= 2,
        };
        if ok {
            Ok(self)
        } else {
            Err(unknown(&self.to_string()))
        }
    }
}

fn unknown(tag: &str) -> Error {
    Error::UnknownType { tag: tag.to_owned(), supported: SUPPORTED_TAGS.to_owned() }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family(), self.parameter())
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Accepts `"B4"`, `"B 4"`, `"b4"`, `"I7"` and `"I2(7)"`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut chars = compact.chars();
        let Some(letter) = chars.next() else {
            return Err(unknown(s));
        };
        let rest = chars.as_str();
        let rest = match letter.to_ascii_uppercase() {
            'I' => rest
                .strip_prefix("2(")
                .and_then(|r| r.strip_suffix(')'))
                .unwrap_or(rest),
            _ => rest,
        };
        let num: u32 = rest.parse().map_err(|_| unknown(s))?;
        let n = num as usize;
        let t = match letter.to_ascii_uppercase() {
            'A' => Self::A(n),
            'B' => Self::B(n),
            'D' => Self::D(n),
            'E' => Self::E(n),
            'F' if n == 4 => Self::F4,
            'H' => Self::H(n),
            'I' => Self::I(num),
            _ => return Err(unknown(s)),
        };
        t.validate().map_err(|_| unknown(s))
    }
}

/// Symmetric matrix of orders `m(s, t)`, with `m(s, s) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    m: Vec<Vec<u32>>,
    label: Option<CoxeterType>,
}

impl CoxeterGraph {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let n = m.len();
        if n > crate::descent::MAX_RANK {
            return Err(Error::InvalidCoxeterMatrix(format!("rank {n} is too large")));
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCoxeterMatrix("matrix is not square".into()));
            }
            for (j, &o) in row.iter().enumerate() {
                if i == j && o != 1 {
                    return Err(Error::InvalidCoxeterMatrix(format!("m({i},{i}) = {o}")));
                }
                if i != j && o < 2 {
                    return Err(Error::InvalidCoxeterMatrix(format!("m({i},{j}) = {o}")));
                }
                if m[j][i] != o {
                    return Err(Error::InvalidCoxeterMatrix(format!("m({i},{j}) != m({j},{i})")));
                }
            }
        }
        Ok(Self { m, label: None })
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn order(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.m
    }

    pub fn label(&self) -> Option<CoxeterType> {
        self.label
    }

    pub fn max_order(&self) -> u32 {
        self.m.iter().flatten().copied().max().unwrap_or(1)
    }
}
