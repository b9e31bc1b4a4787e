//! Text and JSON renderings of verification reports and census summaries.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use linepat_core::Subdivision;
use serde::Serialize;

use crate::verify::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn histogram_line(h: &BTreeMap<usize, usize>) -> String {
    if h.is_empty() {
        return "(none)".into();
    }
    h.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

pub fn verification_text(seed: u64, reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    writeln!(out, "seed {seed}").unwrap();
    for r in reports {
        writeln!(out, "[{}] {}", if r.passed { "PASS" } else { "FAIL" }, r.claim).unwrap();
        writeln!(out, "  histogram: {}", histogram_line(&r.stats.histogram)).unwrap();
        if !r.stats.counts.is_empty() {
            let counts: Vec<String> = r.stats.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(out, "  counts: {}", counts.join(" ")).unwrap();
        }
        if let Some(w) = &r.witness {
            writeln!(out, "  witness: {}", w.note).unwrap();
            for (title, items) in [("sides", &w.sides), ("vertices", &w.vertices), ("points", &w.points)] {
                if !items.is_empty() {
                    writeln!(out, "    {title}: {}", items.join(" ")).unwrap();
                }
            }
        }
        if let Some(ms) = r.stats.millis {
            writeln!(out, "  time: {ms} ms").unwrap();
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    writeln!(out, "{} passed, {failed} failed", reports.len() - failed).unwrap();
    out
}

#[derive(Serialize)]
struct VerificationDocument<'a> {
    seed: u64,
    passed: usize,
    failed: usize,
    reports: &'a [VerificationReport],
}

pub fn verification_json(seed: u64, reports: &[VerificationReport]) -> String {
    let failed = reports.iter().filter(|r| !r.passed).count();
    let doc = VerificationDocument { seed, passed: reports.len() - failed, failed, reports };
    serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub label: String,
    pub lines: usize,
    pub vertices: usize,
    pub bounded_faces: usize,
    pub unbounded_faces: usize,
    pub two_sided_unbounded: usize,
    /// Always lists side counts 3 and 4, even when zero.
    pub histogram: BTreeMap<usize, usize>,
}

impl CensusSummary {
    pub fn new(label: &str, sub: &Subdivision) -> Self {
        let mut histogram = BTreeMap::from([(3, 0), (4, 0)]);
        histogram.extend(sub.census());
        CensusSummary {
            label: label.to_string(),
            lines: sub.lines().len(),
            vertices: sub.vertices().len(),
            bounded_faces: sub.bounded_faces().len(),
            unbounded_faces: sub.unbounded_faces().len(),
            two_sided_unbounded: sub.two_sided_unbounded_count(),
            histogram,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "input: {}", self.label).unwrap();
        writeln!(out, "lines: {}", self.lines).unwrap();
        writeln!(out, "vertices: {}", self.vertices).unwrap();
        writeln!(out, "bounded faces: {}", self.bounded_faces).unwrap();
        writeln!(out, "unbounded faces: {}", self.unbounded_faces).unwrap();
        writeln!(out, "two-sided unbounded faces: {}", self.two_sided_unbounded).unwrap();
        writeln!(out, "sides  faces").unwrap();
        for (k, v) in &self.histogram {
            writeln!(out, "{k:>5}  {v}").unwrap();
        }
        out
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes") + "\n"
    }
}
