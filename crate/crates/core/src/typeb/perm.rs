use std::fmt;
use std::str::FromStr;

use crate::descent::DescentSet;
use crate::error::{Error, Result};

/// A signed permutation of `[-n, n]` in window notation `(w(1), ..., w(n))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > n || seen[a] {
                return Err(Error::InvalidWindow(render(&window)));
            }
            seen[a] = true;
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        Self { window: (1..=n as i32).collect() }
    }

    /// `(-1, ..., -n)`, the longest element.
    pub fn coxeter_element(n: usize) -> Self {
        Self { window: (1..=n as i32).map(|x| -x).collect() }
    }

    /// `s_0 = (-1, 2, ..., n)` and, for `i >= 1`, `s_i` exchanging the
    /// values at positions `i` and `i + 1`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, rank: n });
        }
        let mut w = Self::identity(n);
        if i == 0 {
            w.window[0] = -1;
        } else {
            w.window.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &x)| x == k as i32 + 1)
    }

    /// `sigma(i)` for `i` in `[-n, n]`, with `sigma(0) = 0`.
    pub fn value(&self, i: i32) -> i32 {
        match i.cmp(&0) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => self.window[i as usize - 1],
            std::cmp::Ordering::Less => -self.window[(-i) as usize - 1],
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank() == other.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.rank(), other.rank()))
        }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(Self { window: other.window.iter().map(|&x| self.value(x)).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.rank()];
        for (k, &x) in self.window.iter().enumerate() {
            let pos = k as i32 + 1;
            window[x.unsigned_abs() as usize - 1] = if x > 0 { pos } else { -pos };
        }
        Self { window }
    }

    /// `self * s_i`: acts on positions.
    pub fn mul_generator(&self, i: usize) -> Result<Self> {
        if i >= self.rank() {
            return Err(Error::GeneratorOutOfRange { index: i, rank: self.rank() });
        }
        let mut w = self.clone();
        if i == 0 {
            w.window[0] = -w.window[0];
        } else {
            w.window.swap(i - 1, i);
        }
        Ok(w)
    }

    /// `s_i * self`: acts on values.
    pub fn generator_mul(&self, i: usize) -> Result<Self> {
        if i >= self.rank() {
            return Err(Error::GeneratorOutOfRange { index: i, rank: self.rank() });
        }
        let i = i as i32;
        let window = self
            .window
            .iter()
            .map(|&x| match (i, x.abs()) {
                (0, 1) => -x,
                (0, _) => x,
                (i, a) if a == i => x.signum() * (i + 1),
                (i, a) if a == i + 1 => x.signum() * i,
                _ => x,
            })
            .collect();
        Ok(Self { window })
    }

    /// `{i in [0, n-1] : sigma(i) > sigma(i+1)}` with `sigma(0) = 0`.
    pub fn descent_set(&self) -> DescentSet {
        let mut d = DescentSet::EMPTY;
        let mut prev = 0;
        for (i, &x) in self.window.iter().enumerate() {
            if prev > x {
                d.insert(i);
            }
            prev = x;
        }
        d
    }

    /// Coxeter length: window inversions plus the absolute values of the
    /// negative entries.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut len = 0usize;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    len += 1;
                }
            }
            if w[i] < 0 {
                len += w[i].unsigned_abs() as usize;
            }
        }
        len
    }

    /// The image under `S_n^B -> S_{n+1}^B`, fixing `n + 1`.
    pub fn embed(&self) -> Self {
        let mut window = self.window.clone();
        window.push(self.rank() as i32 + 1);
        Self { window }
    }

    /// All `2^n n!` elements: absolute values in lexicographic order, and
    /// for each, sign patterns from all-positive to all-negative with the
    /// first position varying slowest. For `n = 2` this is
    /// `(1,2), (1,-2), (-1,2), (-1,-2), (2,1), (2,-1), (-2,1), (-2,-1)`.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut perm: Vec<i32> = (1..=n as i32).collect();
        loop {
            for mask in 0u32..1 << n {
                let window = perm
                    .iter()
                    .enumerate()
                    .map(|(k, &x)| if mask >> (n - 1 - k) & 1 == 1 { -x } else { x })
                    .collect();
                out.push(Self { window });
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }
}

/// Advances to the next permutation in lexicographic order; false after the
/// last one.
fn next_permutation(v: &mut [i32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn render(w: &[i32]) -> String {
    let body: Vec<String> = w.iter().map(i32::to_string).collect();
    format!("({})", body.join(","))
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.window))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses `"(-2,1)"`, `"-2,1"`, `"-2 1"` or `"()"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let window = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.replace('−', "-").parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("window {s:?}: {e}")))?;
        Self::new(window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("(2,-1)").inverse(), p("(-2,1)"));
        assert_eq!(SignedPermutation::identity(3).inverse(), SignedPermutation::identity(3));
    }

    #[test]
    fn compose_generators() {
        let s0 = SignedPermutation::generator(2, 0).unwrap();
        let s1 = SignedPermutation::generator(2, 1).unwrap();
        assert_eq!(s1.compose(&s0).unwrap(), p("(-2,1)"));
        assert_eq!(s1.mul_generator(0).unwrap(), p("(-2,1)"));
        assert_eq!(s0.generator_mul(1).unwrap(), p("(-2,1)"));
        assert!(matches!(
            s0.compose(&SignedPermutation::identity(3)),
            Err(Error::RankMismatch(2, 3))
        ));
    }

    #[test]
    fn descents() {
        assert_eq!(p("(-2,1)").descent_set().to_string(), "{0}");
        assert!(SignedPermutation::identity(4).descent_set().is_empty());
        assert_eq!(p("(-1,2,-4,-5,3,6)").descent_set().to_string(), "{0,2,3}");
    }

    #[test]
    fn lengths() {
        assert_eq!(p("(-1,-2)").length(), 4);
        assert_eq!(SignedPermutation::identity(5).length(), 0);
        assert_eq!(SignedPermutation::coxeter_element(3).length(), 9);
    }

    #[test]
    fn invalid_windows() {
        assert!(SignedPermutation::new(vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![0, 1]).is_err());
        assert!(SignedPermutation::new(vec![3, 1]).is_err());
        assert!("(1,x)".parse::<SignedPermutation>().is_err());
        assert_eq!("()".parse::<SignedPermutation>().unwrap().rank(), 0);
        assert_eq!("-2 1".parse::<SignedPermutation>().unwrap(), p("(-2,1)"));
    }

    #[test]
    fn enumeration_order() {
        let all = SignedPermutation::all(2);
        let shown: Vec<String> = all.iter().map(ToString::to_string).collect();
        assert_eq!(
            shown,
            ["(1,2)", "(1,-2)", "(-1,2)", "(-1,-2)", "(2,1)", "(2,-1)", "(-2,1)", "(-2,-1)"]
        );
        assert_eq!(SignedPermutation::all(4).len(), 384);
        assert_eq!(SignedPermutation::all(0).len(), 1);
    }

    #[test]
    fn embed_fixes_new_point() {
        assert_eq!(p("(-2,1)").embed(), p("(-2,1,3)"));
    }
}
