//! The output document and its three renderings.

use std::time::SystemTime;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;
use time::format_description::well_known::Rfc3339;
use time::OffsetDateTime;

pub const SCHEMA_VERSION: &str = "1";
pub const BUILD_ID: &str = env!("GARSIDE_BUILD_ID");

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Plain,
    Csv,
}

#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub ty: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<String>,
    pub build: String,
    pub timestamp: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub schema_version: String,
    pub command: String,
    pub payload: Value,
    pub provenance: Provenance,
}

/// What a command produced: the JSON payload plus its text renderings.
pub struct Output {
    pub command: String,
    pub ty: Option<String>,
    pub rank: Option<String>,
    pub payload: Value,
    pub plain: String,
    pub csv: Vec<Vec<String>>,
    /// `false` when a verification inside the command failed.
    pub ok: bool,
}

impl Output {
    pub fn new(command: &str, payload: Value, plain: String, csv: Vec<Vec<String>>) -> Self {
        Self { command: command.into(), ty: None, rank: None, payload, plain, csv, ok: true }
    }

    pub fn group(mut self, ty: impl Into<String>, rank: impl ToString) -> Self {
        self.ty = Some(ty.into());
        self.rank = Some(rank.to_string());
        self
    }

    pub fn ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => {
                let doc = Document {
                    schema_version: SCHEMA_VERSION.into(),
                    command: self.command.clone(),
                    payload: self.payload.clone(),
                    provenance: Provenance {
                        ty: self.ty.clone(),
                        rank: self.rank.clone(),
                        build: BUILD_ID.into(),
                        timestamp: timestamp()?,
                    },
                };
                let mut s = serde_json::to_string_pretty(&doc)?;
                s.push('\n');
                s
            }
            Format::Plain => {
                let mut s = self.plain.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row)?;
                }
                String::from_utf8(w.into_inner()?)?
            }
        })
    }
}

/// RFC 3339, taken from `SOURCE_DATE_EPOCH` when set so that output can be
/// made fully reproducible.
fn timestamp() -> Result<String> {
    let t = match std::env::var("SOURCE_DATE_EPOCH") {
        Ok(s) => OffsetDateTime::from_unix_timestamp(s.trim().parse()?)?,
        Err(_) => OffsetDateTime::from(SystemTime::now()),
    };
    Ok(t.replace_nanosecond(0)?.format(&Rfc3339)?)
}

/// Decimal strings, the JSON convention for every number.
pub fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}
