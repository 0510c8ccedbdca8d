//! The dihedral groups `I2(m)`, handled abstractly for every `m >= 2`.

use crate::descent::DescentSet;
use crate::error::{Error, Result};

/// `rho^k` (when `reflection` is false) or `rho^k s`, where `rho = s t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    k: u32,
    reflection: bool,
}

/// Dihedral group of order `2m` generated by `s` (index 0) and `t`
/// (index 1) with `(st)^m = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralGroup {
    m: u32,
}

impl DihedralGroup {
    pub fn new(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidCoxeterMatrix(format!("dihedral order m = {m} < 2")));
        }
        Ok(Self { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn rank(&self) -> usize {
        2
    }

    pub fn order(&self) -> u64 {
        2 * u64::from(self.m)
    }

    pub fn identity(&self) -> DihedralElement {
        DihedralElement { k: 0, reflection: false }
    }

    pub fn generator(&self, i: usize) -> Result<DihedralElement> {
        match i {
            0 => Ok(DihedralElement { k: 0, reflection: true }),
            // t = rho^{-1} s
            1 => Ok(DihedralElement { k: self.m - 1, reflection: true }),
            _ => Err(Error::GeneratorOutOfRange { index: i, rank: 2 }),
        }
    }

    pub fn multiply(&self, a: &DihedralElement, b: &DihedralElement) -> DihedralElement {
        // s rho^b = rho^{-b} s
        let k = if a.reflection {
            (a.k + self.m - b.k) % self.m
        } else {
            (a.k + b.k) % self.m
        };
        DihedralElement { k, reflection: a.reflection ^ b.reflection }
    }

    pub fn inverse(&self, a: &DihedralElement) -> DihedralElement {
        if a.reflection {
            *a
        } else {
            DihedralElement { k: (self.m - a.k) % self.m, reflection: false }
        }
    }

    /// The reduced alternating word of `a`, as generator indices.
    ///
    /// `(st)^k` has length `2k` and `(st)^k s` has length `2k + 1`; the other
    /// half of the group is reached by the words starting with `t`.
    pub fn reduced_word(&self, a: &DihedralElement) -> Vec<usize> {
        let m = self.m;
        let (len, first) = match (a.reflection, a.k) {
            (false, k) if 2 * k <= m => (2 * k, 0),
            (false, k) => (2 * (m - k), 1),
            (true, k) if 2 * k < m => (2 * k + 1, 0),
            (true, k) => (2 * (m - k) - 1, 1),
        };
        (0..len as usize).map(|p| (first + p) % 2).collect()
    }

    pub fn length(&self, a: &DihedralElement) -> usize {
        self.reduced_word(a).len()
    }

    /// Last letters of the reduced words: `Pi(s,t;k)` ends in `t` for even
    /// `k` and in `s` for odd `k`; the longest element has both.
    pub fn right_descents(&self, a: &DihedralElement) -> DescentSet {
        let word = self.reduced_word(a);
        if word.len() == self.m as usize {
            return DescentSet::full(2);
        }
        word.last().map_or(DescentSet::EMPTY, |&i| DescentSet::singleton(i))
    }

    pub fn left_descents(&self, a: &DihedralElement) -> DescentSet {
        self.right_descents(&self.inverse(a))
    }

    pub fn longest(&self) -> DihedralElement {
        self.alternating(0, self.m as usize)
    }

    /// `Pi(x, y; len)`: the alternating product of length `len` starting
    /// with generator `first`.
    pub fn alternating(&self, first: usize, len: usize) -> DihedralElement {
        (0..len).fold(self.identity(), |acc, p| {
            let g = self.generator((first + p) % 2).expect("index is 0 or 1");
            self.multiply(&acc, &g)
        })
    }

    /// All `2m` elements sorted by length, `s`-words before `t`-words.
    pub fn elements(&self) -> Vec<DihedralElement> {
        let mut out = vec![self.identity()];
        for len in 1..self.m as usize {
            out.push(self.alternating(0, len));
            out.push(self.alternating(1, len));
        }
        out.push(self.longest());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commuting_case() {
        let g = DihedralGroup::new(2).unwrap();
        let els = g.elements();
        assert_eq!(els.len(), 4);
        for e in &els {
            assert_eq!(g.multiply(e, e), g.identity());
        }
    }

    #[test]
    fn braid_relation() {
        for m in 2..12 {
            let g = DihedralGroup::new(m).unwrap();
            assert_eq!(g.alternating(0, m as usize), g.alternating(1, m as usize));
            assert_eq!(g.length(&g.longest()), m as usize);
            let mut els = g.elements();
            els.sort();
            els.dedup();
            assert_eq!(els.len(), 2 * m as usize);
        }
    }

    #[test]
    fn descents_of_alternating_words() {
        let g = DihedralGroup::new(5).unwrap();
        assert_eq!(g.right_descents(&g.alternating(0, 2)), DescentSet::singleton(1));
        let g7 = DihedralGroup::new(7).unwrap();
        let with_s = g7
            .elements()
            .iter()
            .filter(|e| g7.right_descents(e) == DescentSet::singleton(0))
            .count();
        assert_eq!(with_s, 6);
    }

    #[test]
    fn descent_means_length_drop() {
        for m in 2..10 {
            let g = DihedralGroup::new(m).unwrap();
            for e in g.elements() {
                for i in 0..2 {
                    let es = g.multiply(&e, &g.generator(i).unwrap());
                    let drops = g.length(&es) + 1 == g.length(&e);
                    assert_eq!(drops, g.right_descents(&e).contains(i));
                }
            }
        }
    }

    #[test]
    fn rejects_small_m() {
        assert!(DihedralGroup::new(1).is_err());
    }
}
