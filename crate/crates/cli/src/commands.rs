//! One function per subcommand, each producing an [`Output`].

use std::fmt::Write as _;

use anyhow::Result;
use garside::bfqsym::verify::{verify_all, Report, VerifyOptions};
use garside::coxeter::{CoxeterModel, CoxeterType, DihedralGroup, RootGroup};
use garside::descent::DescentSet;
use garside::garside::{left_normal_form, reduced_word, PositiveBraidWord};
use garside::spectra::{divisibility_verdict, DescentClassMatrix, FullAdjacency};
use garside::typeb::TypeB;
use garside::{Error, IntMatrix, IntPolynomial, Integer};
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::groups::{Group, Spec};
use crate::output::{strings, Output};

pub struct Ctx {
    pub cache: Option<Cache>,
    pub allow_huge: bool,
    pub full_cap: usize,
}

impl Ctx {
    /// The descent-class matrix, through the cache when there is one.
    pub fn dcm(&self, spec: &Spec) -> Result<DescentClassMatrix> {
        let compute = || -> Result<DescentClassMatrix> {
            Ok(DescentClassMatrix::build(&spec.build(self.allow_huge)?)?)
        };
        match &self.cache {
            Some(c) => c.get_or_compute(&spec.tag, compute),
            None => compute(),
        }
    }
}

/// `{"shift": k, "coeffs": [...]}`: the polynomial is `x^k` times the
/// ascending coefficient list. Keeps huge powers of `x` out of the output.
pub fn poly_json(p: &IntPolynomial) -> Value {
    let k = p.x_valuation();
    json!({ "shift": k.to_string(), "coeffs": strings(p.unshift(k).coeffs()) })
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    m.to_rows().into_iter().map(strings).collect()
}

fn subset_labels(rank: usize) -> Vec<String> {
    (0..1usize << rank).map(|i| DescentSet::from_bits(i as u32).to_string()).collect()
}

fn plain_matrix(labels: &[String], m: &IntMatrix) -> String {
    let rows = matrix_rows(m);
    let lw = labels.iter().map(String::len).max().unwrap_or(0);
    let cw = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    for (label, row) in labels.iter().zip(&rows) {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>cw$}")).collect();
        let _ = writeln!(s, "{label:<lw$}  {}", cells.join(" "));
    }
    s
}

fn csv_matrix(labels: &[String], m: &IntMatrix) -> Vec<Vec<String>> {
    let mut out = vec![std::iter::once(String::new()).chain(labels.iter().cloned()).collect()];
    for (label, row) in labels.iter().zip(matrix_rows(m)) {
        out.push(std::iter::once(label.clone()).chain(row).collect());
    }
    out
}

pub fn adj(ctx: &Ctx, spec: &Spec, full: bool) -> Result<Output> {
    let (kind, labels, matrix, order) = if full {
        let group = spec.build(ctx.allow_huge)?;
        let adj = FullAdjacency::build(&group, ctx.full_cap)?;
        let labels = match &group {
            Group::B(b) => b.elements().iter().map(ToString::to_string).collect(),
            Group::Other(_) => adj
                .descent_pairs()
                .iter()
                .enumerate()
                .map(|(i, (d, di))| format!("w{i}:{d}/{di}"))
                .collect(),
        };
        ("full", labels, adj.matrix().clone(), adj.order() as u64)
    } else {
        let m = ctx.dcm(spec)?;
        ("reduced", subset_labels(m.rank()), m.matrix().clone(), m.order())
    };
    let payload = json!({
        "type": spec.tag,
        "rank": spec.ty.rank().to_string(),
        "kind": kind,
        "order": order.to_string(),
        "labels": labels,
        "matrix": matrix_rows(&matrix),
    });
    let plain = plain_matrix(&labels, &matrix);
    let csv = csv_matrix(&labels, &matrix);
    Ok(Output::new("adj", payload, plain, csv).group(&spec.tag, spec.ty.rank()))
}

fn poly_csv(p: &IntPolynomial) -> Vec<Vec<String>> {
    let mut out = vec![vec!["power".to_string(), "coeff".to_string()]];
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if *c != Integer::default() {
            out.push(vec![k.to_string(), c.to_string()]);
        }
    }
    out
}

pub fn charpoly(ctx: &Ctx, spec: &Spec) -> Result<Output> {
    let m = ctx.dcm(spec)?;
    let full = m.charpoly_full()?;
    let reduced = m.charpoly()?;
    let payload = json!({
        "type": spec.tag,
        "rank": spec.ty.rank().to_string(),
        "order": m.order().to_string(),
        "charpoly": poly_json(&full),
        "reduced_charpoly": poly_json(&reduced),
    });
    let plain = format!("{}\n", full.render("x"));
    Ok(Output::new("charpoly", payload, plain, poly_csv(&full)).group(&spec.tag, spec.ty.rank()))
}

pub fn series(ctx: &Ctx, spec: &Spec, terms: usize) -> Result<Output> {
    let m = ctx.dcm(spec)?;
    let f = m.generating_series()?;
    let coeffs = f.series(terms)?;
    let payload = json!({
        "type": spec.tag,
        "rank": spec.ty.rank().to_string(),
        "series": { "num": poly_json(f.num()), "den": poly_json(f.den()) },
        "terms": strings(&coeffs),
    });
    let mut plain = format!("F(t) = {}\n", f.render("t"));
    let _ = writeln!(plain, "{}", strings(&coeffs).join(", "));
    let mut csv = vec![vec!["d".to_string(), "count".to_string()]];
    csv.extend(coeffs.iter().enumerate().map(|(d, c)| vec![d.to_string(), c.to_string()]));
    Ok(Output::new("series", payload, plain, csv).group(&spec.tag, spec.ty.rank()))
}

pub fn count(ctx: &Ctx, spec: &Spec, d: usize) -> Result<Output> {
    let m = ctx.dcm(spec)?;
    let b = m.count(d);
    let payload = json!({
        "type": spec.tag,
        "rank": spec.ty.rank().to_string(),
        "d": d.to_string(),
        "count": b.to_string(),
    });
    let csv = vec![vec!["d".into(), "count".into()], vec![d.to_string(), b.to_string()]];
    Ok(Output::new("count", payload, format!("{b}\n"), csv).group(&spec.tag, spec.ty.rank()))
}

/// The same family one rank up, for the default divisibility target.
pub fn next_rank(spec: &Spec) -> Result<Spec> {
    let rank = match spec.ty {
        CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n + 1,
        t => {
            return Err(Error::Parse(format!("{t} has no next rank; pass --target")).into());
        }
    };
    Spec::parse(&spec.family(), Some(rank as u32))
}

pub struct DivisibilityResult {
    pub divisor: String,
    pub target: String,
    pub divides: bool,
    pub x_powers: [usize; 2],
    pub quotient: Option<IntPolynomial>,
    pub remainder: Option<IntPolynomial>,
}

pub fn divisibility(ctx: &Ctx, divisor: &Spec, target: &Spec) -> Result<DivisibilityResult> {
    let p = ctx.dcm(divisor)?.charpoly_full()?;
    let q = ctx.dcm(target)?.charpoly_full()?;
    let v = divisibility_verdict(&p, &q)?;
    Ok(DivisibilityResult {
        divisor: divisor.tag.clone(),
        target: target.tag.clone(),
        divides: v.divides,
        x_powers: v.x_powers,
        quotient: v.quotient,
        remainder: v.remainder,
    })
}

pub fn divides(ctx: &Ctx, spec: &Spec, target: Option<Spec>) -> Result<Output> {
    let target = match target {
        Some(t) => t,
        None => next_rank(spec)?,
    };
    let r = divisibility(ctx, spec, &target)?;
    let mut payload = json!({
        "divisor": r.divisor,
        "target": r.target,
        "divides": r.divides,
        "x_powers": strings(r.x_powers),
    });
    if let Some(q) = &r.quotient {
        payload["quotient"] = poly_json(q);
    }
    // of the parts free of x
    if let Some(rem) = &r.remainder {
        payload["remainder"] = poly_json(rem);
    }
    let plain = format!(
        "chi({}) {} chi({})\n",
        r.divisor,
        if r.divides { "divides" } else { "does not divide" },
        r.target
    );
    let csv = vec![
        vec!["divisor".into(), "target".into(), "divides".into()],
        vec![r.divisor.clone(), r.target.clone(), r.divides.to_string()],
    ];
    Ok(Output::new("divides", payload, plain, csv).group(&spec.tag, spec.ty.rank()))
}

fn normal_form<M: CoxeterModel>(
    model: &M,
    word: &PositiveBraidWord,
    show: impl Fn(&M::Element) -> String,
) -> Result<Vec<(String, Vec<usize>)>> {
    left_normal_form(model, word)?
        .iter()
        .map(|f| Ok((show(f), reduced_word(model, f)?)))
        .collect()
}

fn word_string(w: &[usize]) -> String {
    w.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn normalize(spec: &Spec, word: &str) -> Result<Output> {
    let word: PositiveBraidWord = word.parse()?;
    let factors = match spec.ty {
        CoxeterType::B(n) => normal_form(&TypeB::new(n), &word, ToString::to_string)?,
        CoxeterType::I(m) => {
            let g = DihedralGroup::new(m)?;
            normal_form(&g, &word, |f| format!("[{}]", word_string(&g.reduced_word(f))))?
        }
        t => {
            let g = RootGroup::from_type(t)?;
            normal_form(&g, &word, |f| format!("[{}]", word_string(&g.reduced_word(f))))?
        }
    };
    let payload = json!({
        "type": spec.tag,
        "rank": spec.ty.rank().to_string(),
        "word": strings(word.letters()),
        "factors": factors.iter().map(|(f, _)| f.clone()).collect::<Vec<_>>(),
        "factor_words": factors.iter().map(|(_, w)| strings(w)).collect::<Vec<_>>(),
        "length": factors.len().to_string(),
    });
    let mut plain = format!("length {}\n", factors.len());
    for (f, w) in &factors {
        let _ = writeln!(plain, "{f}  {}", word_string(w));
    }
    let mut csv = vec![vec!["index".into(), "factor".into(), "word".into()]];
    for (i, (f, w)) in factors.iter().enumerate() {
        csv.push(vec![i.to_string(), f.clone(), word_string(w)]);
    }
    Ok(Output::new("normalize", payload, plain, csv).group(&spec.tag, spec.ty.rank()))
}

pub fn hopf_verify(opts: &VerifyOptions) -> Result<Output> {
    let reports: Vec<Report> = verify_all(opts)?;
    let ok = reports.iter().all(Report::passed);
    let payload = json!({
        "max_rank": opts.max_rank.to_string(),
        "seed": opts.seed.to_string(),
        "trials": opts.trials.to_string(),
        "passed": ok,
        "reports": reports,
    });
    let mut plain = String::new();
    for r in &reports {
        let _ = writeln!(plain, "{r}");
    }
    let mut csv = vec![vec!["check".into(), "rank".into(), "status".into(), "counterexample".into()]];
    for r in &reports {
        csv.push(vec![
            r.check.clone(),
            r.rank.to_string(),
            if r.passed() { "pass" } else { "fail" }.into(),
            r.counterexample.as_ref().map(|c| c.join(" ")).unwrap_or_default(),
        ]);
    }
    Ok(Output::new("hopf-verify", payload, plain, csv).ok(ok))
}

pub fn cache_list(cache: &Cache) -> Result<Output> {
    let entries = cache.list()?;
    let payload = json!({
        "dir": cache.dir().display().to_string(),
        "entries": entries.iter().map(|(t, b)| json!({"type": t, "bytes": b.to_string()})).collect::<Vec<_>>(),
    });
    let mut plain = format!("{}\n", cache.dir().display());
    for (t, b) in &entries {
        let _ = writeln!(plain, "{t}\t{b}");
    }
    let mut csv = vec![vec!["type".into(), "bytes".into()]];
    csv.extend(entries.iter().map(|(t, b)| vec![t.clone(), b.to_string()]));
    Ok(Output::new("cache-list", payload, plain, csv))
}

pub fn cache_clear(cache: &Cache) -> Result<Output> {
    let removed = cache.clear()?;
    let payload = json!({ "dir": cache.dir().display().to_string(), "removed": removed });
    let plain = format!("removed {} entries from {}\n", removed.len(), cache.dir().display());
    let mut csv = vec![vec!["removed".into()]];
    csv.extend(removed.iter().map(|t| vec![t.clone()]));
    Ok(Output::new("cache-clear", payload, plain, csv))
}
