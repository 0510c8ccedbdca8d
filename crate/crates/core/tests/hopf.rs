use garside::bfqsym::products::{pairing, tensor_pairing};
use garside::bfqsym::{convolution, coproduct, iota, partial, phi, shuffle, PermVector};
use garside::spectra::FullAdjacency;
use garside::typeb::{SignedPermutation, TypeB};
use garside::Rational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn perm(max_rank: usize) -> impl Strategy<Value = SignedPermutation> {
    (0..=max_rank).prop_flat_map(|n| {
        let values: Vec<i32> = (1..=n as i32).collect();
        (Just(values).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(|(vals, signs)| {
            let window = vals.iter().zip(signs).map(|(&v, neg)| if neg { -v } else { v }).collect();
            SignedPermutation::new(window).unwrap()
        })
    })
}

fn basis(p: &SignedPermutation) -> PermVector {
    PermVector::basis(p.clone())
}

fn total(v: &PermVector) -> Rational {
    v.terms().map(|(_, c)| c.clone()).sum()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shuffle_is_associative(a in perm(2), b in perm(2), c in perm(2)) {
        let (a, b, c) = (basis(&a), basis(&b), basis(&c));
        let left = shuffle(&shuffle(&a, &b).unwrap(), &c).unwrap();
        let right = shuffle(&a, &shuffle(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn convolution_is_associative(a in perm(2), b in perm(2), c in perm(2)) {
        let (a, b, c) = (basis(&a), basis(&b), basis(&c));
        let left = convolution(&convolution(&a, &b).unwrap(), &c).unwrap();
        let right = convolution(&a, &convolution(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_sizes(a in perm(3), b in perm(3)) {
        let (k, l) = (a.rank(), b.rank());
        let sh = shuffle(&basis(&a), &basis(&b)).unwrap();
        prop_assert_eq!(sh.len(), binomial(k + l, k));
        prop_assert_eq!(total(&sh), Rational::from_integer(binomial(k + l, k).into()));
        let conv = convolution(&basis(&a), &basis(&b)).unwrap();
        prop_assert_eq!(conv.len(), binomial(k + l, k));
    }

    #[test]
    fn iota_swaps_the_products(a in perm(3), b in perm(2)) {
        let sh = shuffle(&basis(&a), &basis(&b)).unwrap();
        let conv = convolution(&iota(&basis(&a)), &iota(&basis(&b))).unwrap();
        prop_assert_eq!(iota(&sh), conv);
    }

    #[test]
    fn coproduct_counit_and_size(s in perm(4)) {
        let terms = coproduct(&basis(&s)).unwrap();
        prop_assert_eq!(terms.len(), s.rank() + 1);
        prop_assert!(terms.iter().any(|t| t.left.rank() == 0 && t.right == s));
        prop_assert!(terms.iter().any(|t| t.right.rank() == 0 && t.left == s));
    }

    #[test]
    fn derivation_lowers_rank(s in perm(4)) {
        prop_assume!(s.rank() > 0);
        let d = partial(&basis(&s)).unwrap();
        prop_assert!(d.terms().all(|(p, _)| p.rank() == s.rank() - 1));
    }

    #[test]
    fn phi_sees_only_descents(s in perm(3), t in perm(3)) {
        prop_assume!(s.rank() == t.rank() && s.descent_set() == t.descent_set());
        prop_assert_eq!(phi(&basis(&s)).unwrap(), phi(&basis(&t)).unwrap());
    }
}

#[test]
fn convolution_is_dual_to_the_coproduct() {
    // <s * t, c> = <s (x) t, Delta c> for every c of rank up to 4
    for n in 0..=4 {
        for c in SignedPermutation::all(n) {
            let delta = coproduct(&basis(&c)).unwrap();
            for k in 0..=n {
                for s in SignedPermutation::all(k) {
                    for t in SignedPermutation::all(n - k) {
                        let conv = convolution(&basis(&s), &basis(&t)).unwrap();
                        assert_eq!(pairing(&conv, &basis(&c)), tensor_pairing(&s, &t, &delta), "{s} {t} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn phi_is_the_transposed_adjacency() {
    for n in 1..=3 {
        let b = TypeB::new(n);
        let elements = b.elements();
        let adj = FullAdjacency::from_elements(&b, &elements);
        for (i, s) in elements.iter().enumerate() {
            let image = phi(&basis(s)).unwrap();
            for (j, t) in elements.iter().enumerate() {
                let a = &adj.matrix()[(i, j)];
                let expected = if a.is_zero() { Rational::zero() } else { Rational::one() };
                assert_eq!(image.coeff(t), expected, "{s} -> {t}");
            }
        }
    }
}
