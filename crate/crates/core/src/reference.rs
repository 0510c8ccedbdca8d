//! Published values bundled with the crate: factored characteristic
//! polynomials, generating series, count tables, the B2 matrix and the
//! Hopf algebra worked examples. The JSON lives in `data/` and is embedded
//! at compile time.
//!
//! A few printed values are misprints. Their entries carry a `misprint`
//! block with the corrected value, so callers can report a mismatch and
//! still confirm that it is exactly the known one.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::{Polynomial, RationalFunction};
use crate::spectra::expand_factored;
use crate::typeb::SignedPermutation;
use crate::{IntMatrix, IntPolynomial, Integer};

const CHARPOLYS: &str = include_str!("../data/charpolys.json");
const SERIES: &str = include_str!("../data/series.json");
const COUNTS: &str = include_str!("../data/counts.json");
const ADJACENCY_B2: &str = include_str!("../data/adjacency_b2.json");
const HOPF: &str = include_str!("../data/hopf.json");

/// Which version of a value to return.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    Printed,
    /// The printed value with known misprints repaired.
    Corrected,
}

type Factors = Vec<(Vec<String>, u32)>;

#[derive(Clone, Debug, Deserialize)]
struct CharpolyMisprint {
    note: String,
    x_power: Option<usize>,
    factors: Option<Factors>,
}

#[derive(Clone, Debug, Deserialize)]
struct CharpolyEntry {
    group: String,
    times: Option<String>,
    x_power: usize,
    factors: Factors,
    misprint: Option<CharpolyMisprint>,
}

#[derive(Clone, Debug, Deserialize)]
struct SeriesMisprint {
    note: String,
    num: Vec<String>,
    den: Factors,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `sum b(d) t^d`.
    Plain,
    /// `sum b(d+1) t^d`.
    Shifted,
}

#[derive(Clone, Debug, Deserialize)]
struct SeriesEntry {
    group: String,
    convention: Convention,
    num: Vec<String>,
    den: Factors,
    misprint: Option<SeriesMisprint>,
}

#[derive(Clone, Debug, Deserialize)]
struct CountEntry {
    group: String,
    first_d: usize,
    values: Vec<String>,
}

#[derive(Deserialize)]
struct Entries<T> {
    entries: Vec<T>,
}

#[derive(Deserialize)]
struct AdjacencyFile {
    order: Vec<String>,
    matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ShiftDecExample {
    pub word: String,
    pub shift: i32,
    pub shifted: String,
    pub dec: i32,
    pub decremented: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct XShuffleExample {
    pub u: String,
    pub v: String,
    pub positions: Vec<usize>,
    pub result: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ProductExample {
    pub left: String,
    pub right: String,
    pub result: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct CoproductExample {
    pub perm: String,
    pub result: Vec<(String, String)>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SignDelExample {
    pub word: String,
    pub signs: Vec<i8>,
    pub deletions: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct DerivativeExample {
    pub perm: String,
    pub result: Vec<(String, String)>,
}

/// The Hopf algebra examples, as stored.
#[derive(Clone, Debug, Deserialize)]
pub struct HopfExamples {
    pub shift_dec: ShiftDecExample,
    pub x_shuffles: Vec<XShuffleExample>,
    pub shuffle: ProductExample,
    pub convolution: ProductExample,
    pub coproduct: CoproductExample,
    pub p2: Vec<String>,
    pub q2: Vec<String>,
    pub p4: Vec<String>,
    pub sign_del: SignDelExample,
    pub derivative: DerivativeExample,
    pub derivative_matrix_rank2: Vec<Vec<i64>>,
}

fn bad(what: &str, detail: impl std::fmt::Display) -> Error {
    Error::Parse(format!("bundled {what}: {detail}"))
}

fn int(s: &str) -> Result<Integer> {
    BigInt::from_str(s).map_err(|e| bad("integer", format!("{s:?}: {e}")))
}

fn descending(coeffs: &[String]) -> Result<IntPolynomial> {
    Ok(Polynomial::from_descending(coeffs.iter().map(|c| int(c)).collect::<Result<_>>()?))
}

fn product(x_power: usize, factors: &Factors) -> Result<IntPolynomial> {
    let fs = factors.iter().map(|(c, m)| Ok((descending(c)?, *m))).collect::<Result<Vec<_>>>()?;
    Ok(expand_factored(x_power, &fs))
}

/// Parses a space-separated word such as `-1 2 -4`.
pub fn parse_letters(s: &str) -> Result<Vec<i32>> {
    s.split_whitespace()
        .map(|t| t.parse::<i32>().map_err(|e| Error::Parse(format!("letter {t:?}: {e}"))))
        .collect()
}

/// The bundled tables, parsed.
#[derive(Clone, Debug)]
pub struct Reference {
    charpolys: BTreeMap<String, CharpolyEntry>,
    charpoly_order: Vec<String>,
    series: Vec<SeriesEntry>,
    counts: Vec<CountEntry>,
}

impl Reference {
    pub fn load() -> Result<Self> {
        let cp: Entries<CharpolyEntry> =
            serde_json::from_str(CHARPOLYS).map_err(|e| bad("charpolys.json", e))?;
        let series: Entries<SeriesEntry> = serde_json::from_str(SERIES).map_err(|e| bad("series.json", e))?;
        let counts: Entries<CountEntry> = serde_json::from_str(COUNTS).map_err(|e| bad("counts.json", e))?;
        let charpoly_order = cp.entries.iter().map(|e| e.group.clone()).collect();
        let charpolys = cp.entries.into_iter().map(|e| (e.group.clone(), e)).collect();
        Ok(Self { charpolys, charpoly_order, series: series.entries, counts: counts.entries })
    }

    /// Groups with a stored characteristic polynomial, in file order. The
    /// dihedral family is given by [`dihedral_charpoly`] instead.
    pub fn charpoly_groups(&self) -> &[String] {
        &self.charpoly_order
    }

    /// The expanded characteristic polynomial of the full matrix.
    pub fn charpoly(&self, group: &str, reading: Reading) -> Result<IntPolynomial> {
        let e = self.charpolys.get(group).ok_or_else(|| bad("charpolys.json", format!("no entry for {group}")))?;
        let fix = e.misprint.as_ref().filter(|_| reading == Reading::Corrected);
        let x_power = fix.and_then(|m| m.x_power).unwrap_or(e.x_power);
        let factors = fix.and_then(|m| m.factors.as_ref()).unwrap_or(&e.factors);
        let own = product(x_power, factors)?;
        match &e.times {
            Some(base) => Ok(&self.charpoly(base, reading)? * &own),
            None => Ok(own),
        }
    }

    /// Description of the misprint affecting `group`, following `times`.
    pub fn charpoly_misprint(&self, group: &str) -> Option<&str> {
        let e = self.charpolys.get(group)?;
        match &e.misprint {
            Some(m) => Some(&m.note),
            None => e.times.as_deref().and_then(|b| self.charpoly_misprint(b)),
        }
    }

    pub fn series_groups(&self) -> impl Iterator<Item = &str> {
        self.series.iter().map(|e| e.group.as_str())
    }

    fn series_entry(&self, group: &str) -> Result<&SeriesEntry> {
        self.series.iter().find(|e| e.group == group).ok_or_else(|| bad("series.json", format!("no entry for {group}")))
    }

    pub fn series(&self, group: &str, reading: Reading) -> Result<(RationalFunction, Convention)> {
        let e = self.series_entry(group)?;
        let (num, den) = match (&e.misprint, reading) {
            (Some(m), Reading::Corrected) => (&m.num, &m.den),
            _ => (&e.num, &e.den),
        };
        Ok((RationalFunction::new(descending(num)?, product(0, den)?)?, e.convention))
    }

    pub fn series_misprint(&self, group: &str) -> Option<&str> {
        self.series_entry(group).ok()?.misprint.as_ref().map(|m| m.note.as_str())
    }

    pub fn count_groups(&self) -> impl Iterator<Item = &str> {
        self.counts.iter().map(|e| e.group.as_str())
    }

    /// `(first_d, [b(first_d), b(first_d + 1), ...])`.
    pub fn counts(&self, group: &str) -> Result<(usize, Vec<Integer>)> {
        let e = self
            .counts
            .iter()
            .find(|e| e.group == group)
            .ok_or_else(|| bad("counts.json", format!("no entry for {group}")))?;
        Ok((e.first_d, e.values.iter().map(|v| int(v)).collect::<Result<_>>()?))
    }
}

/// `x^(2m-4) (x-1)^3 (x-m+1)` for even `m`, `x^(2m-3) (x-1)^2 (x-m+1)`
/// for odd `m`.
pub fn dihedral_charpoly(m: u32) -> IntPolynomial {
    let root = Polynomial::linear(BigInt::from(m) - 1);
    let one = Polynomial::linear(BigInt::from(1));
    let m = m as usize;
    if m % 2 == 0 {
        expand_factored(2 * m - 4, &[(one, 3), (root, 1)])
    } else {
        expand_factored(2 * m - 3, &[(one, 2), (root, 1)])
    }
}

/// `((m-1)t + 1) / (((m-1)t - 1)(t - 1))`, summed from `d = 0`.
pub fn dihedral_series(m: u32) -> RationalFunction {
    let a: BigInt = BigInt::from(m) - 1;
    let num = Polynomial::new(vec![BigInt::from(1), a.clone()]);
    let den: IntPolynomial =
        &Polynomial::new(vec![BigInt::from(-1), a]) * &Polynomial::new(vec![BigInt::from(-1), BigInt::from(1)]);
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// The B2 element order and matrix.
pub fn b2_adjacency() -> Result<(Vec<SignedPermutation>, IntMatrix)> {
    let f: AdjacencyFile = serde_json::from_str(ADJACENCY_B2).map_err(|e| bad("adjacency_b2.json", e))?;
    let order = f.order.iter().map(|s| s.parse()).collect::<Result<Vec<SignedPermutation>>>()?;
    let rows = f.matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    Ok((order, IntMatrix::from_rows(rows)?))
}

pub fn hopf_examples() -> Result<HopfExamples> {
    serde_json::from_str(HOPF).map_err(|e| bad("hopf.json", e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_files_parse() {
        let r = Reference::load().unwrap();
        assert_eq!(r.charpoly_groups().len(), 14);
        assert_eq!(r.series_groups().count(), 9);
        assert_eq!(r.count_groups().count(), 10);
        hopf_examples().unwrap();
        let (order, m) = b2_adjacency().unwrap();
        assert_eq!(order.len(), 8);
        assert_eq!(m.rows(), 8);
    }

    #[test]
    fn printed_degrees_match_group_orders() {
        let r = Reference::load().unwrap();
        let orders = [
            ("B1", 2),
            ("B2", 8),
            ("B3", 48),
            ("B4", 384),
            ("B5", 3840),
            ("D1", 2),
            ("D2", 4),
            ("D3", 24),
            ("D4", 192),
            ("D5", 1920),
            ("F4", 1152),
            ("H3", 120),
            ("H4", 14400),
            ("E6", 51840),
        ];
        for (g, n) in orders {
            for reading in [Reading::Printed, Reading::Corrected] {
                assert_eq!(r.charpoly(g, reading).unwrap().degree(), Some(n), "{g}");
            }
        }
        for m in 2..=10 {
            assert_eq!(dihedral_charpoly(m).degree(), Some(2 * m as usize));
        }
    }

    #[test]
    fn misprints_follow_times() {
        let r = Reference::load().unwrap();
        assert!(r.charpoly_misprint("B5").is_some());
        assert!(r.charpoly_misprint("B3").is_none());
        assert_ne!(r.charpoly("B5", Reading::Printed).unwrap(), r.charpoly("B5", Reading::Corrected).unwrap());
        assert_eq!(r.charpoly("B3", Reading::Printed).unwrap(), r.charpoly("B3", Reading::Corrected).unwrap());
        assert!(r.series_misprint("D3").is_some());
    }

    #[test]
    fn dihedral_series_starts_at_one() {
        let s = dihedral_series(5).series(3).unwrap();
        assert_eq!(s, vec![BigInt::from(1), BigInt::from(9), BigInt::from(41)]);
    }
}
