//! Report types and their JSON, CSV and text renderings.

use serde::{Serialize, Serializer};

use crate::error::{CliError, CliResult};

/// JSON has no infinities; non-finite values are written as strings.
pub fn float<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else {
        s.serialize_str(&fmt_float(*x))
    }
}

fn opt_float<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => float(v, s),
        None => s.serialize_none(),
    }
}

pub fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else if x != 0.0 && !(1e-5..1e16).contains(&x.abs()) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_float).unwrap_or_default()
}

/// Flat rows for CSV and text output.
pub trait Tabular: Serialize {
    fn header(&self) -> Vec<&'static str>;
    fn rows(&self) -> Vec<Vec<String>>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

pub fn render<T: Tabular>(report: &T, format: OutputFormat) -> CliResult<String> {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| CliError::Numeric(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| CliError::Numeric(e.to_string());
            w.write_record(report.header()).map_err(io)?;
            for row in report.rows() {
                w.write_record(&row).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Numeric(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        OutputFormat::Text => {
            let header = report.header();
            let width = header.iter().map(|h| h.len()).max().unwrap_or(0);
            let blocks: Vec<String> = report
                .rows()
                .iter()
                .map(|row| {
                    header
                        .iter()
                        .zip(row)
                        .filter(|(_, v)| !v.is_empty())
                        .map(|(h, v)| format!("{h:<width$}  {v}\n"))
                        .collect()
                })
                .collect();
            Ok(blocks.join("\n"))
        }
    }
}

/// One resistance query.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub method: String,
    #[serde(serialize_with = "float")]
    pub value_float: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_exact: Option<String>,
    pub pair: (Vec<i64>, Vec<i64>),
    pub spec: String,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_float")]
    pub discrepancy: Option<f64>,
}

fn join(c: &[i64]) -> String {
    c.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

impl Tabular for Report {
    fn header(&self) -> Vec<&'static str> {
        vec!["method", "value_float", "value_exact", "pair", "spec", "discrepancy"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.method.clone(),
            fmt_float(self.value_float),
            self.value_exact.clone().unwrap_or_default(),
            format!("{}->{}", join(&self.pair.0), join(&self.pair.1)),
            self.spec.clone(),
            fmt_opt(self.discrepancy),
        ]]
    }
}

/// Both sides of one identity.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub which: String,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<i64>,
    #[serde(serialize_with = "float")]
    pub lambda: f64,
    #[serde(serialize_with = "float")]
    pub lhs: f64,
    #[serde(serialize_with = "float")]
    pub rhs: f64,
    #[serde(serialize_with = "float")]
    pub difference: f64,
}

impl Tabular for IdentityReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["which", "N", "ell", "lambda", "lhs", "rhs", "difference"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.which.clone(),
            self.n.to_string(),
            self.ell.map(|l| l.to_string()).unwrap_or_default(),
            fmt_float(self.lambda),
            fmt_float(self.lhs),
            fmt_float(self.rhs),
            fmt_float(self.difference),
        ]]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceEntry {
    pub size: usize,
    #[serde(serialize_with = "float")]
    pub value: f64,
    #[serde(serialize_with = "float")]
    pub difference: f64,
    #[serde(serialize_with = "opt_float")]
    pub observed_order: Option<f64>,
}

/// Finite lattices against the infinite-lattice value.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub bc: String,
    pub delta: (i64, i64),
    #[serde(serialize_with = "float")]
    pub limit: f64,
    pub rows: Vec<ConvergenceEntry>,
}

impl Tabular for ConvergenceReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["bc", "size", "value", "limit", "difference", "observed_order"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                vec![
                    self.bc.clone(),
                    r.size.to_string(),
                    fmt_float(r.value),
                    fmt_float(self.limit),
                    fmt_float(r.difference),
                    fmt_opt(r.observed_order),
                ]
            })
            .collect()
    }
}
