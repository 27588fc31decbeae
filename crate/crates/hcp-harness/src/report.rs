//! Report records and the JSON-lines writer. Timing fields are optional
//! and off by default so that identical inputs produce byte-identical
//! reports.

use std::io::{self, Write};

use hcp_core::Verdict;
use serde::Serialize;

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum VerdictLabel {
    Hamiltonian,
    NonHamiltonian,
}

impl From<Verdict> for VerdictLabel {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Hamiltonian => VerdictLabel::Hamiltonian,
            Verdict::NonHamiltonian => VerdictLabel::NonHamiltonian,
        }
    }
}

/// One sweep line: the decider judged against the exhaustive oracle on a
/// single graph. The certificate is the decider's verified cycle on a
/// positive, or the oracle's cycle on a disagreement.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct GraphVerdictRecord {
    pub graph: String,
    pub oracle_verdict: VerdictLabel,
    pub decider_verdict: VerdictLabel,
    pub agreement: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<u32>>,
    pub cm_singleton_iterations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime: Option<f64>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SweepReport {
    pub n_from: u32,
    pub n_to: u32,
    pub graph_count: u64,
    pub agree_yes: u64,
    pub agree_no: u64,
    pub false_negatives: u64,
    pub invalid_cycles: u64,
    pub max_singleton_iterations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_seconds: Option<f64>,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a SweepReport,
}

/// One JSON object per record, then the summary object on the last line.
pub fn write_jsonl<W: Write>(
    mut w: W,
    records: &[GraphVerdictRecord],
    report: &SweepReport,
) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n")?;
    }
    serde_json::to_writer(&mut w, &SummaryLine { summary: report })?;
    w.write_all(b"\n")?;
    Ok(())
}

pub fn jsonl_string(records: &[GraphVerdictRecord], report: &SweepReport) -> String {
    let mut buf = Vec::new();
    write_jsonl(&mut buf, records, report).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}
