use std::collections::HashMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use felderhof::bench::BenchResult;
use felderhof::gtpattern::StrictGTPattern;
use felderhof::poly::{LaurentPoly, VarId};
use felderhof::verify::VerifyReport;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// A computed polynomial, or its value when `--eval` was given.
pub enum Scalar {
    Poly(LaurentPoly),
    Value(BigRational),
}

impl Scalar {
    pub fn new(
        p: LaurentPoly,
        point: Option<&HashMap<VarId, BigRational>>,
    ) -> Result<Self, CliError> {
        Ok(match point {
            Some(pt) => Scalar::Value(p.eval_rational(pt)?),
            None => Scalar::Poly(p),
        })
    }

    fn json(&self) -> Value {
        match self {
            Scalar::Poly(p) => serde_json::to_value(p).expect("polynomials serialize"),
            Scalar::Value(v) => Value::String(v.to_string()),
        }
    }

    fn text(&self) -> String {
        match self {
            Scalar::Poly(p) => p.to_string(),
            Scalar::Value(v) => v.to_string(),
        }
    }
}

pub fn scalar(s: &Scalar, format: Format) -> String {
    match (format, s) {
        (Format::Json, Scalar::Poly(_)) => format!("{}\n", s.json()),
        (Format::Json, Scalar::Value(_)) => format!("{}\n", json!({ "value": s.json() })),
        (Format::Pretty, _) => format!("{}\n", s.text()),
        (Format::Csv, Scalar::Poly(p)) => {
            let mut out = String::from("coeff,monomial\n");
            for (m, c) in p.terms().rev() {
                writeln!(out, "{c},{}", LaurentPoly::monomial(m.clone())).expect("string write");
            }
            out
        }
        (Format::Csv, Scalar::Value(v)) => format!("value\n{v}\n"),
    }
}

fn rows_text(p: &StrictGTPattern) -> String {
    p.rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(";")
}

pub fn patterns(items: &[(StrictGTPattern, Scalar)], sum: &Scalar, format: Format) -> String {
    match format {
        Format::Json => {
            let list: Vec<Value> = items
                .iter()
                .map(|(p, w)| json!({ "pattern": p, "weight": w.json() }))
                .collect();
            format!("{}\n", json!({ "patterns": list, "sum": sum.json() }))
        }
        Format::Pretty => {
            let mut out = String::new();
            for (p, w) in items {
                writeln!(out, "{:<20} {}", rows_text(p), w.text()).expect("string write");
            }
            writeln!(out, "sum: {}", sum.text()).expect("string write");
            out
        }
        Format::Csv => {
            let mut out = String::from("rows,weight\n");
            for (p, w) in items {
                writeln!(out, "{},{}", rows_text(p), w.text()).expect("string write");
            }
            out
        }
    }
}

pub fn verify(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(report).expect("reports serialize")
        ),
        Format::Pretty => {
            let mut out = String::new();
            for s in &report.suites {
                let tag = if s.passed { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "[{tag}] {:>2} {:<18} {} cases  {}",
                    s.id, s.name, s.cases, s.description
                )
                .expect("string write");
                for f in &s.failures {
                    writeln!(out, "       {f}").expect("string write");
                }
            }
            writeln!(
                out,
                "ran {} of {} suites, seed {}",
                report.ran, report.manifest, report.seed
            )
            .expect("string write");
            out
        }
        Format::Csv => {
            let mut out = String::from("id,name,cases,failed,passed\n");
            for s in &report.suites {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    s.id, s.name, s.cases, s.failed, s.passed
                )
                .expect("string write");
            }
            out
        }
    }
}

pub fn bench(rows: &[BenchResult], format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(rows).expect("rows serialize")),
        Format::Csv | Format::Pretty => {
            let mut out = String::from("strategy,M,N,micros,terms,agree\n");
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.strategy, r.m, r.n, r.micros, r.terms, r.agree
                )
                .expect("string write");
            }
            if format == Format::Pretty {
                out = out.replace(',', "\t");
            }
            out
        }
    }
}
