//! Finite-rank checks of the derivation identities. Every check returns a
//! [`Report`] carrying the first counterexample found.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::derivation::{descent_linear, partial_i_with, partial_with, SignRule};
use super::products::{convolution_all, iota, shuffle, shuffle_all};
use super::special::{i_vector, j_vector, p_vector, phi, phi_tilde, phi_tilde_blocks, phi_tilde_product, q_vector};
use super::PermVector;
use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::typeb::{SignedPermutation, SignedWord};
use crate::Rational;

pub const DEFAULT_TRIALS: usize = 200;
pub const DEFAULT_SEED: u64 = 0x5eed;
/// Leibniz is checked on every pair up to this total rank and sampled above.
pub const LEIBNIZ_EXHAUSTIVE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    pub rank: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
}

impl Report {
    fn new(check: Check, rank: usize, counterexample: Option<Vec<String>>) -> Self {
        let status = if counterexample.is_some() { Status::Fail } else { Status::Pass };
        Self { check: check.name().to_string(), rank, status, counterexample }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{} rank {}: {status}", self.check, self.rank)?;
        if let Some(c) = &self.counterexample {
            write!(f, " at {}", c.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Leibniz,
    Commutation,
    Surjectivity,
    Products,
    Derivatives,
    Descents,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Leibniz,
        Check::Commutation,
        Check::Surjectivity,
        Check::Products,
        Check::Derivatives,
        Check::Descents,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Leibniz => "leibniz",
            Check::Commutation => "commutation",
            Check::Surjectivity => "surjectivity",
            Check::Products => "products",
            Check::Derivatives => "derivatives",
            Check::Descents => "descents",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
            Error::Parse(format!("unknown check {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn window(s: &SignedPermutation) -> String {
    s.to_string()
}

/// `partial` with the rank-zero convention `partial(empty) = 0`.
fn derive(v: &PermVector, rule: SignRule) -> Result<PermVector> {
    match v.rank()? {
        Some(0) => Ok(PermVector::zero()),
        _ => partial_with(v, rule),
    }
}

fn derive_i(v: &PermVector, i: usize, rule: SignRule) -> Result<PermVector> {
    v.map_linear(|s| partial_i_with(s, i, rule))
}

/// Leibniz rule and its refinement position by position for one pair.
fn leibniz_pair(s: &SignedPermutation, t: &SignedPermutation, rule: SignRule) -> Result<bool> {
    let (a, b) = (PermVector::basis(s.clone()), PermVector::basis(t.clone()));
    let (k, l) = (s.rank(), t.rank());
    let prod = shuffle(&a, &b)?;
    let lhs = derive(&prod, rule)?;
    let rhs = &shuffle(&derive(&a, rule)?, &b)? + &shuffle(&a, &derive(&b, rule)?)?;
    if lhs != rhs {
        return Ok(false);
    }
    for i in 1..=k {
        if derive_i(&prod, i, rule)? != shuffle(&derive_i(&a, i, rule)?, &b)? {
            return Ok(false);
        }
    }
    for i in 1..=l {
        if derive_i(&prod, k + i, rule)? != shuffle(&a, &derive_i(&b, i, rule)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn random_perm(n: usize, rng: &mut impl Rng) -> SignedPermutation {
    let mut window: Vec<i32> = (1..=n as i32).collect();
    window.shuffle(rng);
    for x in &mut window {
        if rng.gen::<bool>() {
            *x = -*x;
        }
    }
    SignedPermutation::new(window).expect("valid window")
}

/// `partial(s sh t) = partial(s) sh t + s sh partial(t)` and the
/// per-position identities behind it, for `s` of rank `k` and `t` of rank
/// `l`. Exhaustive when `k + l <= 4`, otherwise `trials` random pairs.
pub fn verify_leibniz(k: usize, l: usize, trials: usize, seed: u64, rule: SignRule) -> Result<Report> {
    let pairs: Vec<(SignedPermutation, SignedPermutation)> = if k + l <= LEIBNIZ_EXHAUSTIVE {
        let right = SignedPermutation::all(l);
        SignedPermutation::all(k)
            .into_iter()
            .flat_map(|s| right.iter().map(move |t| (s.clone(), t.clone())))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((k as u64) << 32 | l as u64));
        (0..trials).map(|_| (random_perm(k, &mut rng), random_perm(l, &mut rng))).collect()
    };
    for (s, t) in &pairs {
        if !leibniz_pair(s, t, rule)? {
            return Ok(Report::new(Check::Leibniz, k + l, Some(vec![window(s), window(t)])));
        }
    }
    Ok(Report::new(Check::Leibniz, k + l, None))
}

/// Leibniz for every split `k + l = rank` with `k, l >= 1`.
pub fn verify_leibniz_rank(rank: usize, trials: usize, seed: u64, rule: SignRule) -> Result<Report> {
    for k in 1..rank {
        let r = verify_leibniz(k, rank - k, trials, seed, rule)?;
        if !r.passed() {
            return Ok(r);
        }
    }
    Ok(Report::new(Check::Leibniz, rank, None))
}

/// `partial(Phi(s)) = Phi(partial(s))` for every `s` of rank `n`.
pub fn verify_commutation(n: usize, rule: SignRule) -> Result<Report> {
    if n == 0 {
        return Err(Error::RankZero);
    }
    for s in SignedPermutation::all(n) {
        let v = PermVector::basis(s.clone());
        let lhs = partial_with(&phi(&v)?, rule)?;
        let rhs = phi(&partial_with(&v, rule)?)?;
        if lhs != rhs {
            return Ok(Report::new(Check::Commutation, n, Some(vec![window(&s)])));
        }
    }
    Ok(Report::new(Check::Commutation, n, None))
}

/// The matrix of `partial` from rank `n + 1` to rank `n` has full row rank
/// `2^n n!`.
pub fn verify_surjectivity(n: usize) -> Result<Report> {
    let m = super::derivation::partial_matrix(n + 1)?;
    let ok = m.rank() == m.rows();
    let cx = (!ok).then(|| vec![format!("rank {} < {}", m.rank(), m.rows())]);
    Ok(Report::new(Check::Surjectivity, n, cx))
}

fn sum_where(n: usize, pred: impl Fn(&SignedPermutation) -> bool) -> PermVector {
    SignedPermutation::all(n).into_iter().filter(|s| pred(s)).collect()
}

/// For every composition of `n`: the four descent-class product formulas,
/// `P_n` as a sum of `J_k sh I_(n-k)`, the product formula for
/// `phi_tilde` against its definition, and `iota(P_n) = Q_n`.
pub fn verify_product_lemmas(n: usize) -> Result<Report> {
    let fail = |what: String| Ok(Report::new(Check::Products, n, Some(vec![what])));
    let all = SignedPermutation::all(n);
    let by_des: Vec<(DescentSet, DescentSet)> =
        all.iter().map(|s| (s.descent_set(), s.inverse().descent_set())).collect();
    let sum_if = |pred: &dyn Fn(&(DescentSet, DescentSet)) -> bool| -> PermVector {
        all.iter().zip(&by_des).filter(|(_, d)| pred(d)).map(|(s, _)| s.clone()).collect()
    };
    let inner = DescentSet::full(n).difference(DescentSet::singleton(0));
    for d in inner.subsets() {
        let blocks = phi_tilde_blocks(d, n);
        let d0 = d.with(0);
        let qs: Vec<PermVector> = blocks.iter().map(|&k| q_vector(k)).collect();
        let ps: Vec<PermVector> = blocks.iter().map(|&k| p_vector(k)).collect();
        let mut iq = qs.clone();
        let mut ip = ps.clone();
        if let Some(&k) = blocks.first() {
            iq[0] = i_vector(k);
            ip[0] = i_vector(k);
        }
        let checks = [
            ("Q*...*Q", convolution_all(&qs)?, sum_if(&|&(des, _)| des.is_subset(d0))),
            ("I*Q*...*Q", convolution_all(&iq)?, sum_if(&|&(des, _)| des.is_subset(d))),
            ("P sh ... sh P", shuffle_all(&ps)?, sum_if(&|&(_, ides)| ides.is_subset(d0))),
            ("I sh P sh ... sh P", shuffle_all(&ip)?, sum_if(&|&(_, ides)| ides.is_subset(d))),
        ];
        for (name, got, want) in checks {
            if got != want {
                return fail(format!("{name} for blocks {blocks:?}"));
            }
        }
    }
    for d in DescentSet::full(n).subsets() {
        if phi_tilde_product(d, n)? != phi_tilde(d, n) {
            return fail(format!("phi_tilde product for {d}"));
        }
    }
    let mut pn = PermVector::zero();
    for k in 0..=n {
        pn += &shuffle(&j_vector(k), &i_vector(n - k))?;
    }
    if pn != p_vector(n) {
        return fail("P_n as a sum of J_k sh I_(n-k)".into());
    }
    if iota(&p_vector(n)) != q_vector(n) {
        return fail("iota(P_n) = Q_n".into());
    }
    if p_vector(n) != sum_where(n, |s| s.inverse().descent_set().is_subset(DescentSet::singleton(0))) {
        return fail("P_n definition".into());
    }
    Ok(Report::new(Check::Products, n, None))
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(-1, ..., -n)`.
pub fn decreasing_negatives(n: usize) -> PermVector {
    let window = (1..=n as i32).map(|x| -x).collect();
    PermVector::basis(SignedPermutation::new(window).expect("valid window"))
}

/// `partial(I_n) = (n-1) I_(n-1)`, `partial(J_n) = (n-2) J_(n-1)`,
/// `partial(P_n) = (n-2) P_(n-1)` and, for `J'_n = (-1, ..., -n)`,
/// `partial(J'_n) = -n J'_(n-1)`.
pub fn verify_derivative_identities(n: usize) -> Result<Report> {
    if n == 0 {
        return Err(Error::RankZero);
    }
    let m = n as i64;
    let cases = [
        ("I", i_vector(n), i_vector(n - 1).scale(&int(m - 1))),
        ("J", j_vector(n), j_vector(n - 1).scale(&int(m - 2))),
        ("P", p_vector(n), p_vector(n - 1).scale(&int(m - 2))),
        ("J'", decreasing_negatives(n), decreasing_negatives(n - 1).scale(&int(-m))),
    ];
    for (name, v, want) in cases {
        if partial_with(&v, SignRule::Standard)? != want {
            return Ok(Report::new(Check::Derivatives, n, Some(vec![format!("{name}_{n}")])));
        }
    }
    Ok(Report::new(Check::Derivatives, n, None))
}

/// Descent set after deleting the letter at position `i`, predicted from
/// `Des(s)` and the comparison of the two neighbours (`s(0) = 0`,
/// `s(n+1) = +infinity`).
pub fn predicted_descents_after_delete(s: &SignedPermutation, i: usize) -> DescentSet {
    let des = s.descent_set();
    let n = s.rank();
    let kept: DescentSet = des
        .iter()
        .filter_map(|d| match d {
            _ if d + 2 <= i => Some(d),
            _ if d > i => Some(d - 1),
            _ => None,
        })
        .collect();
    let w = s.window();
    let before = if i == 1 { 0 } else { w[i - 2] };
    if i < n && before > w[i] {
        kept.with(i - 1)
    } else {
        kept
    }
}

fn descents_after_delete(s: &SignedPermutation, i: usize) -> Result<DescentSet> {
    let letter = s.window()[i - 1].unsigned_abs() as usize;
    Ok(SignedWord::from(s).del(letter)?.to_permutation()?.descent_set())
}

/// `Des` of the derivative restricted to the letters in positions
/// `lo..=hi`.
fn block_derivative_descents(s: &SignedPermutation, lo: usize, hi: usize) -> Result<super::DescentVector> {
    let mut v = PermVector::zero();
    for e in lo..=hi {
        let letter = s.window()[e - 1].unsigned_abs() as usize;
        v += &partial_i_with(s, letter, SignRule::Standard)?;
    }
    Ok(descent_linear(&v))
}

fn scaled(c: i64, d: DescentSet) -> super::DescentVector {
    [(d, int(c))].into_iter().collect()
}

/// The deletion rule for descent sets, and the block formula for the
/// descents of the derivative, for every `s` of rank `n`.
pub fn verify_descent_lemmas(n: usize) -> Result<Report> {
    if n == 0 {
        return Err(Error::RankZero);
    }
    let fail = |s: &SignedPermutation, what: String| {
        Ok(Report::new(Check::Descents, n, Some(vec![window(s), what])))
    };
    for s in SignedPermutation::all(n) {
        for i in 1..=n {
            if descents_after_delete(&s, i)? != predicted_descents_after_delete(&s, i) {
                return fail(&s, format!("delete at position {i}"));
            }
        }
        let des = s.descent_set();
        let mut cuts: Vec<usize> = des.iter().filter(|&d| d > 0).collect();
        cuts.push(n);
        let zero = des.contains(0);
        let first = cuts[0] as i64;
        let want = scaled(if zero { first - 2 } else { first - 1 }, des.dec(cuts[0]));
        if block_derivative_descents(&s, 1, cuts[0])? != want {
            return fail(&s, format!("first block 1..={}", cuts[0]));
        }
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let want = scaled(hi as i64 - lo as i64 - 2, des.dec(hi));
            if block_derivative_descents(&s, lo + 1, hi)? != want {
                return fail(&s, format!("block {}..={hi}", lo + 1));
            }
        }
    }
    Ok(Report::new(Check::Descents, n, None))
}

/// Options for [`verify_all`].
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_rank: usize,
    pub checks: Vec<Check>,
    pub trials: usize,
    pub seed: u64,
    pub rule: SignRule,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_rank: 3,
            checks: Check::ALL.to_vec(),
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            rule: SignRule::Standard,
        }
    }
}

/// Runs the selected checks for every rank up to `max_rank`. The sign
/// rule only affects the checks built on `partial_with`.
pub fn verify_all(opts: &VerifyOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for &check in &opts.checks {
        for n in 1..=opts.max_rank {
            let report = match check {
                Check::Leibniz if n < 2 => continue,
                Check::Leibniz => verify_leibniz_rank(n, opts.trials, opts.seed, opts.rule)?,
                Check::Commutation => verify_commutation(n, opts.rule)?,
                Check::Surjectivity => verify_surjectivity(n)?,
                Check::Products => verify_product_lemmas(n)?,
                Check::Derivatives => verify_derivative_identities(n)?,
                Check::Descents => verify_descent_lemmas(n)?,
            };
            out.push(report);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks_pass() {
        for r in verify_all(&VerifyOptions::default()).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn flipped_sign_breaks_commutation() {
        let r = verify_commutation(2, SignRule::FlipLeft).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(r.counterexample.is_some());
    }

    #[test]
    fn report_json() {
        let r = Report::new(Check::Commutation, 2, None);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"check":"commutation","rank":2,"status":"pass"}"#);
        let r = Report::new(Check::Leibniz, 3, Some(vec!["(1)".into(), "(2,-1)".into()]));
        assert!(serde_json::to_string(&r).unwrap().ends_with(r#""counterexample":["(1)","(2,-1)"]}"#));
    }

    #[test]
    fn check_names_parse() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn sampled_leibniz() {
        assert!(verify_leibniz(3, 2, 20, 1, SignRule::Standard).unwrap().passed());
    }
}
