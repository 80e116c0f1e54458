//! Text, CSV and JSON renderings of extremal reports.

use std::fmt::Write;

use serde::Serialize;

use crate::extremal::{ExtremalReport, Pair, Scope};
use crate::metrics::MetricKind;

pub const CSV_HEADER: &str = "n,peak_set,metric,class_size,obs_min,obs_max,pred_min,pred_max,agrees,min_witness,max_witness";

/// Flat row with the same field names as the CSV header.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub n: usize,
    pub peak_set: String,
    pub metric: MetricKind,
    pub class_size: u64,
    pub obs_min: u32,
    pub obs_max: u32,
    pub pred_min: u32,
    pub pred_max: u32,
    pub agrees: bool,
    pub min_witness: String,
    pub max_witness: String,
}

pub fn witness_text(p: &Pair) -> String {
    format!("{} | {}", p.0, p.1)
}

impl From<&ExtremalReport> for ReportRow {
    fn from(r: &ExtremalReport) -> Self {
        ReportRow {
            n: r.n,
            peak_set: r.scope.to_string(),
            metric: r.metric,
            class_size: r.class_size,
            obs_min: r.observed_min,
            obs_max: r.observed_max,
            pred_min: r.predicted_min,
            pred_max: r.predicted_max,
            agrees: r.agrees,
            min_witness: witness_text(&r.min_witness),
            max_witness: witness_text(&r.max_witness),
        }
    }
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

pub fn to_csv(reports: &[ExtremalReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let row = ReportRow::from(r);
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            row.n,
            quoted(&row.peak_set),
            row.metric,
            row.class_size,
            row.obs_min,
            row.obs_max,
            row.pred_min,
            row.pred_max,
            row.agrees,
            quoted(&row.min_witness),
            quoted(&row.max_witness),
        )
        .unwrap();
    }
    out
}

#[derive(Serialize)]
struct Document {
    n: usize,
    reports: Vec<ReportRow>,
}

pub fn to_json(n: usize, reports: &[ExtremalReport]) -> String {
    let doc = Document { n, reports: reports.iter().map(ReportRow::from).collect() };
    let mut s = serde_json::to_string_pretty(&doc).expect("rows serialize");
    s.push('\n');
    s
}

/// The data-table layout: one line per peak set, min/max per metric.
pub fn to_text(n: usize, reports: &[ExtremalReport]) -> String {
    let mut scopes: Vec<Scope> = Vec::new();
    for r in reports {
        if !scopes.contains(&r.scope) {
            scopes.push(r.scope);
        }
    }
    let label = format!("Peak Set, n={n}");
    let mut out = format!(
        "{label:<16} {:>8} {:>8} {:>8} {:>8} {:>9} {:>9}\n",
        "Word min", "Word max", "Ham min", "Ham max", "l-inf min", "l-inf max"
    );
    for scope in scopes {
        let cell = |kind: MetricKind| reports.iter().find(|r| r.scope == scope && r.metric == kind);
        let mut line = format!("{:<16}", scope.to_string());
        for (kind, width) in [(MetricKind::Word, 8), (MetricKind::Hamming, 8), (MetricKind::LInf, 9)] {
            match cell(kind) {
                Some(r) => write!(line, " {:>width$} {:>width$}", r.observed_min, r.observed_max).unwrap(),
                None => write!(line, " {:>width$} {:>width$}", "-", "-").unwrap(),
            }
        }
        if reports.iter().any(|r| r.scope == scope && !r.agrees) {
            line.push_str("  MISMATCH");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
