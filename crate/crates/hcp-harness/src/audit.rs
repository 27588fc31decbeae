//! Declarative path-set audit: compare the table the solver builds with
//! the exhaustive per-vertex reference (per-level unions over all the
//! longest basic paths). Disagreements are findings to report, not
//! implementation failures; the audit only promises to compute and
//! serialize the comparison.

use hcp_core::graph::enumerate_connected_labeled;
use hcp_core::oracle::basic_path_sets;
use hcp_core::solver::propagate;
use hcp_core::{Hologram, VertexId};
use serde::Serialize;

/// Largest order the exhaustive reference is run at.
pub const AUDIT_GUARD: u32 = 5;

#[derive(Clone, Debug, Serialize)]
pub struct AuditMismatch {
    pub graph: String,
    pub vertex: String,
    pub table: String,
    pub reference: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub n_max: u32,
    pub graphs: u64,
    pub vertices_compared: u64,
    pub matches: u64,
    pub mismatches: u64,
    /// First few mismatches, enough to locate the divergence family.
    pub examples: Vec<AuditMismatch>,
}

pub fn declarative_audit(n_max: u32) -> AuditReport {
    let n_max = n_max.min(AUDIT_GUARD);
    let mut report = AuditReport {
        n_max,
        graphs: 0,
        vertices_compared: 0,
        matches: 0,
        mismatches: 0,
        examples: Vec::new(),
    };
    for n in 1..=n_max {
        for g in enumerate_connected_labeled(n, false).expect("audit range is guarded") {
            report.graphs += 1;
            let h = Hologram::build(&g, VertexId::new(1)).expect("enumerated graphs are connected");
            let (table, _) = propagate(&h, &g, None);
            for (hv, ps) in table.iter() {
                let reference = basic_path_sets(&h, hv).expect("audit range is guarded");
                report.vertices_compared += 1;
                if *ps == reference {
                    report.matches += 1;
                } else {
                    report.mismatches += 1;
                    if report.examples.len() < 16 {
                        report.examples.push(AuditMismatch {
                            graph: g.to_graph6().expect("undirected"),
                            vertex: hv.to_string(),
                            table: ps.render(),
                            reference: reference.render(),
                        });
                    }
                }
            }
        }
    }
    report
}
