//! Signed permutations against the root-system engine for B1..B4.

use garside::coxeter::{CoxeterModel, CoxeterType, RootGroup};
use garside::garside::reduced_word;
use garside::spectra::DescentClassMatrix;
use garside::typeb::{SignedPermutation, TypeB};

#[test]
fn windows_agree_with_roots() {
    for n in 1..=4 {
        let b = TypeB::new(n);
        let roots = RootGroup::from_type(CoxeterType::B(n)).unwrap();
        let elements = b.elements();
        assert_eq!(elements.len() as u64, roots.order().unwrap());
        for w in &elements {
            let word = reduced_word(&b, w).unwrap();
            assert_eq!(word.len(), w.length(), "{w}");
            let r = roots.from_word(&word).unwrap();
            assert_eq!(r.length(), w.length(), "{w}");
            assert_eq!(roots.right_descents(&r), w.descent_set(), "{w}");
            assert_eq!(roots.left_descents(&r), w.inverse().descent_set(), "{w}");
            assert_eq!(CoxeterModel::left_descents(&b, w), w.inverse().descent_set());
        }
    }
}

#[test]
fn longest_elements_agree() {
    for n in 1..=4 {
        let b = TypeB::new(n);
        let w0 = b.longest();
        assert_eq!(w0, SignedPermutation::new((1..=n as i32).map(|x| -x).collect()).unwrap());
        let roots = RootGroup::from_type(CoxeterType::B(n)).unwrap();
        assert_eq!(roots.longest().length(), w0.length());
        assert_eq!(w0.length(), n * n);
    }
}

#[test]
fn compressed_matrices_agree() {
    for n in 1..=4 {
        let windows = DescentClassMatrix::build(&TypeB::new(n)).unwrap();
        let roots = DescentClassMatrix::build(&RootGroup::from_type(CoxeterType::B(n)).unwrap()).unwrap();
        assert_eq!(windows, roots, "B{n}");
    }
}
