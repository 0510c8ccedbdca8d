//! `paper-tables`: recomputes every bundled reference table and reports
//! each item as pass or fail.

use std::fmt::Write as _;

use anyhow::Result;
use garside::reference::{b2_adjacency, dihedral_charpoly, dihedral_series, Convention, Reading, Reference};
use garside::spectra::FullAdjacency;
use garside::typeb::TypeB;
use garside::Error;
use serde::Serialize;
use serde_json::json;

use crate::commands::{divisibility, Ctx};
use crate::groups::Spec;
use crate::output::Output;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not attempted: the group is above the enumeration limit.
    Refused,
    /// Computed with nothing to compare against.
    Computed,
}

#[derive(Clone, Debug, Serialize)]
pub struct Item {
    pub section: &'static str,
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

fn item(section: &'static str, name: impl Into<String>, ok: bool, detail: String) -> Item {
    let status = if ok { Status::Pass } else { Status::Fail };
    Item { section, name: name.into(), status, detail }
}

fn spec(tag: &str) -> Result<Spec> {
    Spec::parse(tag, None)
}

fn adjacency() -> Result<Item> {
    let (order, expected) = b2_adjacency()?;
    let b2 = TypeB::new(2);
    let computed = FullAdjacency::from_elements(&b2, &order);
    let same_order = b2.elements() == order;
    let ok = *computed.matrix() == expected;
    let detail = if same_order { String::new() } else { "canonical element order differs".into() };
    Ok(item("adjacency", "B2", ok, detail))
}

fn counts(ctx: &Ctx, r: &Reference) -> Result<Vec<Item>> {
    let mut out = Vec::new();
    for g in r.count_groups() {
        let (first, expected) = r.counts(g)?;
        let computed = ctx.dcm(&spec(g)?)?.counts(first + expected.len());
        let bad = (0..expected.len()).find(|&k| computed[first + k] != expected[k]);
        let detail = match bad {
            Some(k) => format!("b({}) = {}, table has {}", first + k, computed[first + k], expected[k]),
            None => String::new(),
        };
        out.push(item("counts", g, bad.is_none(), detail));
    }
    Ok(out)
}

fn charpolys(ctx: &Ctx, r: &Reference) -> Result<Vec<Item>> {
    let mut out = Vec::new();
    for g in r.charpoly_groups() {
        let computed = ctx.dcm(&spec(g)?)?.charpoly_full()?;
        let ok = computed == r.charpoly(g, Reading::Printed)?;
        let detail = if ok {
            String::new()
        } else {
            let fixed = computed == r.charpoly(g, Reading::Corrected)?;
            format!(
                "differs from the printed form ({}); {} the corrected reading",
                r.charpoly_misprint(g).unwrap_or("no known misprint"),
                if fixed { "matches" } else { "does not match" }
            )
        };
        out.push(item("charpoly", g.clone(), ok, detail));
    }
    for m in 2..=10u32 {
        let tag = format!("I{m}");
        let computed = ctx.dcm(&spec(&tag)?)?.charpoly_full()?;
        out.push(item("charpoly", tag, computed == dihedral_charpoly(m), String::new()));
    }
    Ok(out)
}

fn series(ctx: &Ctx, r: &Reference) -> Result<Vec<Item>> {
    let mut out = Vec::new();
    let groups: Vec<String> = r.series_groups().map(String::from).collect();
    for g in &groups {
        let f = ctx.dcm(&spec(g)?)?.generating_series()?;
        let (printed, convention) = r.series(g, Reading::Printed)?;
        let computed = match convention {
            Convention::Plain => f,
            Convention::Shifted => f.tail()?,
        };
        let ok = computed.equivalent(&printed);
        let detail = if ok {
            String::new()
        } else {
            let (fixed, _) = r.series(g, Reading::Corrected)?;
            format!(
                "computed {}; printed {} ({}); {} the corrected reading",
                computed,
                printed,
                r.series_misprint(g).unwrap_or("no known misprint"),
                if computed.equivalent(&fixed) { "matches" } else { "does not match" }
            )
        };
        out.push(item("series", g.clone(), ok, detail));
    }
    for m in 2..=10u32 {
        let tag = format!("I{m}");
        let f = ctx.dcm(&spec(&tag)?)?.generating_series()?;
        out.push(item("series", tag, f.equivalent(&dihedral_series(m)), String::new()));
    }
    Ok(out)
}

fn divisibilities(ctx: &Ctx) -> Result<Vec<Item>> {
    let mut cases: Vec<(String, String, bool)> =
        (1..=4).map(|n| (format!("B{n}"), format!("B{}", n + 1), true)).collect();
    cases.push(("D4".into(), "D5".into(), false));
    cases.push(("D4".into(), "D6".into(), false));
    let mut out = Vec::new();
    for (p, q, expected) in cases {
        let r = divisibility(ctx, &spec(&p)?, &spec(&q)?)?;
        let verdict = if r.divides { "divides" } else { "does not divide" };
        out.push(item("divisibility", format!("{p} | {q}"), r.divides == expected, verdict.into()));
    }
    Ok(out)
}

/// E7 is only enumerated with `--allow-huge`; otherwise the refusal and
/// its memory estimate are the result.
fn huge(ctx: &Ctx) -> Result<Item> {
    match ctx.dcm(&spec("E7")?) {
        Ok(m) => {
            let chi = m.charpoly()?;
            Ok(Item {
                section: "huge",
                name: "E7".into(),
                status: Status::Computed,
                detail: format!("|W| = {}, compressed charpoly {}", m.order(), chi),
            })
        }
        Err(e) => match e.downcast_ref::<Error>() {
            Some(Error::ResourceLimit { .. }) => Ok(Item {
                section: "huge",
                name: "E7".into(),
                status: Status::Refused,
                detail: e.to_string(),
            }),
            _ => Err(e),
        },
    }
}

pub fn paper_tables(ctx: &Ctx) -> Result<Output> {
    let r = Reference::load()?;
    let mut items = vec![adjacency()?];
    items.extend(counts(ctx, &r)?);
    items.extend(charpolys(ctx, &r)?);
    items.extend(series(ctx, &r)?);
    items.extend(divisibilities(ctx)?);
    items.push(huge(ctx)?);

    let failed = items.iter().filter(|i| i.status == Status::Fail).count();
    let payload = json!({
        "items": items,
        "total": items.len().to_string(),
        "failed": failed.to_string(),
    });
    let mut plain = String::new();
    for i in &items {
        let status = match i.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Refused => "refused",
            Status::Computed => "computed",
        };
        let _ = write!(plain, "{:<12} {:<10} {status}", i.section, i.name);
        if !i.detail.is_empty() {
            let _ = write!(plain, "  {}", i.detail);
        }
        plain.push('\n');
    }
    let _ = writeln!(plain, "{} items, {failed} failed", items.len());
    let mut csv = vec![vec!["section".into(), "name".into(), "status".into(), "detail".into()]];
    for i in &items {
        let status = serde_json::to_value(i.status)?.as_str().unwrap_or_default().to_string();
        csv.push(vec![i.section.into(), i.name.clone(), status, i.detail.clone()]);
    }
    Ok(Output::new("paper-tables", payload, plain, csv).ok(failed == 0))
}
