use garside::coxeter::{CoxeterGroup, DihedralGroup};
use garside::exact::Polynomial;
use garside::reference::{dihedral_charpoly, dihedral_series};
use garside::spectra::{DescentClassMatrix, FullAdjacency, DEFAULT_FULL_CAP};
use garside::typeb::TypeB;
use garside::Integer;

fn tags() -> Vec<String> {
    let mut out: Vec<String> = ["A1", "A2", "A3", "B2", "B3", "D3"].map(String::from).to_vec();
    out.extend((5..=7).map(|m| format!("I{m}")));
    out
}

#[test]
fn compression_lemma() {
    for tag in tags() {
        let g = CoxeterGroup::from_tag(&tag).unwrap();
        let full = FullAdjacency::build(&g, DEFAULT_FULL_CAP).unwrap();
        let reduced = DescentClassMatrix::build(&g).unwrap();
        assert_eq!(full.charpoly().unwrap(), reduced.charpoly_full().unwrap(), "{tag}");
        assert_eq!(full.order() as u64, reduced.order());
    }
}

#[test]
fn full_counts_match_compressed_counts() {
    // summing A^(d-1) over pairs of non-identity endpoints counts braids of length d
    for tag in ["A2", "B2", "I5"] {
        let g = CoxeterGroup::from_tag(tag).unwrap();
        let full = FullAdjacency::build(&g, DEFAULT_FULL_CAP).unwrap();
        let reduced = DescentClassMatrix::build(&g).unwrap();
        let id = full.descent_pairs().iter().position(|(d, _)| d.is_empty()).unwrap();
        for d in 1..=4 {
            let mut total = Integer::from(0);
            for s in 0..full.order() {
                for t in 0..full.order() {
                    if s != id && t != id {
                        total += full.count_fixed_endpoints(s, t, d).unwrap();
                    }
                }
            }
            assert_eq!(total, reduced.count(d), "{tag} d={d}");
        }
    }
}

#[test]
fn b2_closed_form() {
    let m = DescentClassMatrix::build(&TypeB::new(2)).unwrap();
    let three = Integer::from(3);
    for (d, b) in m.counts(16).into_iter().enumerate() {
        assert_eq!(b, three.pow(d as u32 + 1) - 2, "d={d}");
    }
}

#[test]
fn dihedral_closed_forms() {
    for m in 2..=10u32 {
        let g = DihedralGroup::new(m).unwrap();
        let a = DescentClassMatrix::build(&g).unwrap();
        let row = |i: usize| a.matrix().row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>();
        // only the identity has no left descent, only w0 has both
        assert_eq!(row(0), ["1", "0", "0", "0"], "I{m}");
        assert_eq!(row(3), ["1", "1", "1", "1"], "I{m}");
        // left descent {s}: the m-1 elements s, st, sts, ...; odd lengths end in s
        let (odd, even) = ((m / 2).to_string(), ((m - 1) / 2).to_string());
        let mm = (m - 1).to_string();
        assert_eq!(row(1), [mm.as_str(), &odd, &even, "0"], "I{m}");
        assert_eq!(a.charpoly_full().unwrap(), dihedral_charpoly(m), "I{m}");
        assert!(a.generating_series().unwrap().equivalent(&dihedral_series(m)), "I{m}");
    }
}

#[test]
fn series_re_expands_to_counts() {
    for tag in ["A3", "B3", "D4", "H3", "I8"] {
        let m = DescentClassMatrix::build(&CoxeterGroup::from_tag(tag).unwrap()).unwrap();
        let f = m.generating_series().unwrap();
        assert_eq!(f.series(13).unwrap(), m.counts(13), "{tag}");
        // the denominator is the reversed compressed charpoly, up to common factors
        let den = f.den();
        let rev = m.charpoly().unwrap();
        let rev = rev.reversed(rev.degree().unwrap());
        assert!(Polynomial::divides(den, &rev).unwrap().is_some(), "{tag}");
    }
}
