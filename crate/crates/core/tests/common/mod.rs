//! Shared by the integration tests.

use garside::coxeter::{CoxeterModel, CoxeterType, RootGroup};
use garside::garside::{factors_to_word, is_normal_pair, left_normal_form, PositiveBraidWord};
use garside::typeb::TypeB;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn small_types() -> Vec<CoxeterType> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(CoxeterType::A(n));
        out.push(CoxeterType::B(n));
    }
    for n in 2..=4 {
        out.push(CoxeterType::D(n));
    }
    out
}

fn alternating(s: usize, t: usize, m: u32) -> Vec<usize> {
    (0..m as usize).map(|k| if k % 2 == 0 { s } else { t }).collect()
}

/// Normal forms of `count` random words: no identity factors, total
/// length equal to the word length, pairwise normal, idempotent, and
/// unchanged by inserting either side of a braid relation.
fn check<M: CoxeterModel>(
    model: &M,
    order: impl Fn(usize, usize) -> u32,
    rng: &mut ChaCha8Rng,
    count: usize,
) -> Result<(), String> {
    let r = model.rank();
    let fail = |what: &str, w: &PositiveBraidWord| Err(format!("{what} on [{w}]"));
    for _ in 0..count {
        let len = rng.gen_range(0..=14);
        let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(0..r)).collect();
        let word = PositiveBraidWord::new(letters.clone());
        let nf = left_normal_form(model, &word).map_err(|e| e.to_string())?;

        let total: usize = nf.iter().map(|f| model.length(f)).sum();
        if total != len || nf.iter().any(|f| *f == model.identity()) {
            return fail("length", &word);
        }
        if nf.windows(2).any(|p| !is_normal_pair(model, &p[0], &p[1])) {
            return fail("normality", &word);
        }
        let again = left_normal_form(model, &factors_to_word(model, &nf).unwrap()).unwrap();
        if again != nf {
            return fail("idempotence", &word);
        }
        if r >= 2 {
            let s = rng.gen_range(0..r);
            let t = (s + rng.gen_range(1..r)) % r;
            let m = order(s, t);
            let at = rng.gen_range(0..=len);
            let spliced = |rel: Vec<usize>| {
                let mut w = letters[..at].to_vec();
                w.extend(rel);
                w.extend(&letters[at..]);
                PositiveBraidWord::new(w)
            };
            let left = left_normal_form(model, &spliced(alternating(s, t, m))).unwrap();
            let right = left_normal_form(model, &spliced(alternating(t, s, m))).unwrap();
            if left != right {
                return fail("relation invariance", &word);
            }
        }
    }
    Ok(())
}

/// `words` random words spread over A1..A4, B1..B4 and D2..D4, with B
/// run through both the root engine and signed permutations.
pub fn random_word_suite(words: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let types = small_types();
    let per = words.div_ceil(types.len() + 4);
    for t in &types {
        let g = RootGroup::from_type(*t).map_err(|e| e.to_string())?;
        let graph = g.graph().clone();
        check(&g, |s, u| graph.order(s, u), &mut rng, per).map_err(|e| format!("{t}: {e}"))?;
    }
    for n in 1..=4 {
        let graph = CoxeterType::B(n).graph();
        check(&TypeB::new(n), |s, u| graph.order(s, u), &mut rng, per).map_err(|e| format!("B{n} windows: {e}"))?;
    }
    Ok(())
}
