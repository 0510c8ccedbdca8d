//! Normal forms of random positive braid words in types A, B and D.

mod common;

use garside::coxeter::RootGroup;
use garside::garside::{left_normal_form, PositiveBraidWord};
use garside::typeb::TypeB;

#[test]
fn random_words_behave() {
    common::random_word_suite(10_000, 0xb4a1d).unwrap();
}

#[test]
fn empty_and_single_letters() {
    let b3 = TypeB::new(3);
    assert!(left_normal_form(&b3, &PositiveBraidWord::default()).unwrap().is_empty());
    let nf = left_normal_form(&b3, &"0".parse().unwrap()).unwrap();
    assert_eq!(nf.len(), 1);
    assert_eq!(nf[0].to_string(), "(-1,2,3)");
    assert!(left_normal_form(&b3, &"3".parse().unwrap()).is_err());
}

#[test]
fn powers_of_delta() {
    // the longest element is the Garside element; its powers are their own normal form
    for t in common::small_types() {
        let g = RootGroup::from_type(t).unwrap();
        let delta = g.reduced_word(&g.longest());
        let word: Vec<usize> = delta.iter().chain(&delta).chain(&delta).copied().collect();
        let nf = left_normal_form(&g, &PositiveBraidWord::new(word)).unwrap();
        assert_eq!(nf, vec![g.longest(); 3], "{t}");
    }
}
