//! Trace presentation: tabular layouts (rows `i, s, r, gamma, c, beta,
//! f`, step indices as columns) and a JSON document that round-trips
//! back into a [`DayanTrace`].

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dayan::{
    ext_inverse_sum_f, DayanStep, DayanTrace, SignStrategy, Termination,
};
use crate::modmath::Sign;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RenderError {
    #[error("bad trace document: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceFormat {
    Tsv,
    Markdown,
    Json,
}

impl std::str::FromStr for TraceFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(TraceFormat::Tsv),
            "markdown" | "md" => Ok(TraceFormat::Markdown),
            "json" => Ok(TraceFormat::Json),
            other => Err(format!("unknown format {other:?} (tsv|markdown|json)")),
        }
    }
}

pub fn render_trace(trace: &DayanTrace, format: TraceFormat) -> String {
    match format {
        TraceFormat::Tsv => render_table(trace, "\t", "", "", "i"),
        TraceFormat::Markdown => render_markdown(trace),
        TraceFormat::Json => {
            let mut text =
                serde_json::to_string_pretty(&TraceDocument::from_trace(trace)).expect("serialize");
            text.push('\n');
            text
        }
    }
}

fn cell(v: &Option<BigInt>) -> String {
    v.as_ref().map(BigInt::to_string).unwrap_or_default()
}

fn rows(trace: &DayanTrace, index_label: &str) -> Vec<(String, Vec<String>)> {
    let get = |f: fn(&DayanStep) -> String| trace.steps.iter().map(f).collect::<Vec<_>>();
    vec![
        (
            index_label.to_string(),
            get(|s| s.index.to_string()),
        ),
        (
            "s".into(),
            get(|s| s.s.map(|v| v.as_i8().to_string()).unwrap_or_default()),
        ),
        ("r".into(), get(|s| s.r.to_string())),
        ("gamma".into(), get(|s| cell(&s.gamma))),
        ("c".into(), get(|s| cell(&s.c))),
        ("beta".into(), get(|s| cell(&s.beta))),
        ("f".into(), get(|s| cell(&s.f))),
    ]
}

fn render_table(
    trace: &DayanTrace,
    sep: &str,
    prefix: &str,
    suffix: &str,
    index_label: &str,
) -> String {
    let mut out = String::new();
    for (label, cells) in rows(trace, index_label) {
        out.push_str(prefix);
        out.push_str(&label);
        for c in cells {
            out.push_str(sep);
            out.push_str(&c);
        }
        out.push_str(suffix);
        out.push('\n');
    }
    out
}

fn render_markdown(trace: &DayanTrace) -> String {
    let mut out = String::new();
    let all = rows(trace, "step i");
    let width = trace.steps.len() + 1;
    for (idx, (label, cells)) in all.into_iter().enumerate() {
        out.push_str("| ");
        out.push_str(&label);
        for c in cells {
            out.push_str(" | ");
            out.push_str(&c);
        }
        out.push_str(" |\n");
        if idx == 0 {
            out.push_str(&"| --- ".repeat(width));
            out.push_str("|\n");
        }
    }
    out
}

/// Serialized trace: every bigint travels as a decimal string so the
/// document stays faithful at any magnitude.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub p: String,
    pub q: String,
    pub a: String,
    pub strategy: String,
    pub steps: Vec<StepDocument>,
    pub termination: String,
    pub gcd: String,
    /// The extended inverse, absent when no solution exists.
    pub value: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDocument {
    pub i: i64,
    pub s: Option<i8>,
    pub r: String,
    pub gamma: Option<String>,
    pub c: Option<String>,
    pub beta: Option<String>,
    pub f: Option<String>,
}

impl TraceDocument {
    pub fn from_trace(trace: &DayanTrace) -> Self {
        let opt = |v: &Option<BigInt>| v.as_ref().map(BigInt::to_string);
        TraceDocument {
            p: trace.p.to_string(),
            q: trace.q.to_string(),
            a: trace.a.to_string(),
            strategy: trace.strategy.to_string(),
            steps: trace
                .steps
                .iter()
                .map(|s| StepDocument {
                    i: s.index,
                    s: s.s.map(Sign::as_i8),
                    r: s.r.to_string(),
                    gamma: opt(&s.gamma),
                    c: opt(&s.c),
                    beta: opt(&s.beta),
                    f: opt(&s.f),
                })
                .collect(),
            termination: match trace.termination {
                Termination::RemainderOne => "remainder-one",
                Termination::GammaZero => "gamma-zero",
                Termination::RemainderZero => "remainder-zero",
            }
            .into(),
            gcd: trace.gcd.to_string(),
            value: ext_inverse_sum_f(trace).ok().map(|v| v.to_string()),
        }
    }

    /// Reconstructs the trace. The sum boundary is recovered from the
    /// termination kind and the gamma column.
    pub fn to_trace(&self) -> Result<DayanTrace, RenderError> {
        let bad = |what: &str| RenderError::Invalid(what.to_string());
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|e| RenderError::Invalid(format!("bad integer {s:?}: {e}")))
        };
        let parse_opt = |v: &Option<String>| -> Result<Option<BigInt>, RenderError> {
            v.as_ref().map(|s| parse(s)).transpose()
        };
        let termination = match self.termination.as_str() {
            "remainder-one" => Termination::RemainderOne,
            "gamma-zero" => Termination::GammaZero,
            "remainder-zero" => Termination::RemainderZero,
            _ => return Err(bad("unknown termination")),
        };
        let strategy: SignStrategy = self.strategy.parse().map_err(RenderError::Invalid)?;
        let mut steps = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            steps.push(DayanStep {
                index: s.i,
                r: parse(&s.r)?,
                s: s.s
                    .map(|v| Sign::from_i8(v).ok_or_else(|| bad("sign must be +-1")))
                    .transpose()?,
                c: parse_opt(&s.c)?,
                gamma: parse_opt(&s.gamma)?,
                beta: parse_opt(&s.beta)?,
                f: parse_opt(&s.f)?,
            });
        }
        let sum_index = match termination {
            Termination::RemainderZero => None,
            Termination::GammaZero => {
                let zero_at = steps
                    .iter()
                    .find(|s| s.gamma.as_ref().is_some_and(BigInt::is_zero))
                    .ok_or_else(|| bad("gamma-zero trace lacks a zero gamma"))?;
                Some(zero_at.index - 1)
            }
            Termination::RemainderOne => Some(
                steps
                    .iter()
                    .rev()
                    .find(|s| s.f.is_some())
                    .ok_or_else(|| bad("trace lacks f column"))?
                    .index,
            ),
        };
        Ok(DayanTrace {
            p: parse(&self.p)?,
            q: parse(&self.q)?,
            a: parse(&self.a)?,
            strategy,
            steps,
            termination,
            gcd: parse(&self.gcd)?,
            sum_index,
        })
    }
}
