//! The vectors `I_n`, `J_n`, `P_n`, `Q_n` and the endomorphism `Phi`.

use std::collections::HashMap;

use super::products::{iota, shuffle_all};
use super::PermVector;
use crate::descent::DescentSet;
use crate::error::Result;
use crate::typeb::SignedPermutation;

/// `I_n = (1, ..., n)`.
pub fn i_vector(n: usize) -> PermVector {
    PermVector::basis(SignedPermutation::identity(n))
}

/// `J_n = (-n, ..., -1)`.
pub fn j_vector(n: usize) -> PermVector {
    let window = (1..=n as i32).rev().map(|x| -x).collect();
    PermVector::basis(SignedPermutation::new(window).expect("valid window"))
}

/// `Q_n`: the `2^n` permutations with increasing window. A sign pattern
/// fixes which values are negative; the window lists them by decreasing
/// absolute value, then the positive ones increasing.
pub fn q_vector(n: usize) -> PermVector {
    (0u32..1 << n)
        .map(|mask| {
            let neg = |x: i32| mask >> (x - 1) & 1 == 1;
            let mut window: Vec<i32> = (1..=n as i32).rev().filter(|&x| neg(x)).map(|x| -x).collect();
            window.extend((1..=n as i32).filter(|&x| !neg(x)));
            SignedPermutation::new(window).expect("valid window")
        })
        .collect()
}

/// `P_n = iota(Q_n)`: the permutations whose inverse has descents in `{0}`.
pub fn p_vector(n: usize) -> PermVector {
    iota(&q_vector(n))
}

/// `sum of tau with Des(tau^-1) contained in d`, straight from the
/// definition.
pub fn phi_tilde(d: DescentSet, n: usize) -> PermVector {
    SignedPermutation::all(n)
        .into_iter()
        .filter(|t| t.inverse().descent_set().is_subset(d))
        .collect()
}

/// Block sizes of the product formula for `phi_tilde(d, n)`: for nonzero
/// descents `d_1 < ... < d_l` the blocks are `d_1, d_2 - d_1, ...,
/// n - d_l`, with an empty first block dropped.
pub fn phi_tilde_blocks(d: DescentSet, n: usize) -> Vec<usize> {
    let mut cuts: Vec<usize> = d.iter().filter(|&x| x > 0).collect();
    cuts.push(n);
    let mut prev = 0;
    cuts.iter()
        .map(|&c| {
            let k = c - prev;
            prev = c;
            k
        })
        .filter(|&k| k > 0)
        .collect()
}

/// `phi_tilde(d, n)` as `X_{k_1} sh P_{k_2} sh ... sh P_{k_l}` with
/// `X = P` when `0` is in `d` and `X = I` otherwise.
pub fn phi_tilde_product(d: DescentSet, n: usize) -> Result<PermVector> {
    let blocks = phi_tilde_blocks(d, n);
    let factors: Vec<PermVector> = blocks
        .iter()
        .enumerate()
        .map(|(j, &k)| if j == 0 && !d.contains(0) { i_vector(k) } else { p_vector(k) })
        .collect();
    shuffle_all(&factors)
}

/// `Phi(sigma) = phi_tilde(Des sigma)`, extended linearly.
pub fn phi(v: &PermVector) -> Result<PermVector> {
    let mut cache: HashMap<(DescentSet, usize), PermVector> = HashMap::new();
    v.map_linear(|s| {
        let key = (s.descent_set(), s.rank());
        Ok(cache.entry(key).or_insert_with(|| phi_tilde(key.0, key.1)).clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sum(ps: &[&str]) -> PermVector {
        ps.iter().map(|s| s.parse::<SignedPermutation>().unwrap()).collect()
    }

    #[test]
    fn small_p_and_q() {
        assert_eq!(p_vector(2), sum(&["(1,2)", "(-1,2)", "(2,-1)", "(-2,-1)"]));
        assert_eq!(q_vector(2), sum(&["(1,2)", "(-1,2)", "(-2,1)", "(-2,-1)"]));
        assert_eq!(j_vector(3), sum(&["(-3,-2,-1)"]));
    }

    #[test]
    fn p4_matches_listing() {
        let expected = sum(&[
            "(1,2,3,4)",
            "(-1,2,3,4)",
            "(2,-1,3,4)",
            "(-2,-1,3,4)",
            "(2,3,-1,4)",
            "(-2,3,-1,4)",
            "(2,3,4,-1)",
            "(-2,3,4,-1)",
            "(3,-2,-1,4)",
            "(-3,-2,-1,4)",
            "(3,-2,4,-1)",
            "(-3,-2,4,-1)",
            "(3,4,-2,-1)",
            "(-3,4,-2,-1)",
            "(4,-3,-2,-1)",
            "(-4,-3,-2,-1)",
        ]);
        assert_eq!(p_vector(4), expected);
    }

    #[test]
    fn definitions_agree_with_filters() {
        for n in 0..=4 {
            let zero = DescentSet::singleton(0);
            let all = SignedPermutation::all(n);
            let p: PermVector =
                all.iter().filter(|s| s.inverse().descent_set().is_subset(zero)).cloned().collect();
            let q: PermVector = all.iter().filter(|s| s.descent_set().is_subset(zero)).cloned().collect();
            assert_eq!(p_vector(n), p, "P_{n}");
            assert_eq!(q_vector(n), q, "Q_{n}");
            assert_eq!(p.len(), 1 << n);
        }
    }

    #[test]
    fn phi_edge_cases() {
        let n = 3;
        assert_eq!(phi(&i_vector(n)).unwrap(), i_vector(n));
        let w0 = PermVector::basis(SignedPermutation::coxeter_element(n));
        let everything: PermVector = SignedPermutation::all(n).into_iter().collect();
        assert_eq!(phi(&w0).unwrap(), everything);
        assert_eq!(phi_tilde(DescentSet::singleton(0), 2), p_vector(2));
    }

    #[test]
    fn blocks() {
        let d: DescentSet = [0, 2, 3].into_iter().collect();
        assert_eq!(phi_tilde_blocks(d, 5), vec![2, 1, 2]);
        assert_eq!(phi_tilde_blocks(DescentSet::EMPTY, 4), vec![4]);
        assert_eq!(phi_tilde_blocks(DescentSet::singleton(0), 4), vec![4]);
    }
}
