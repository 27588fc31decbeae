//! Exhaustive decider-vs-oracle sweeps over all connected labeled graphs
//! of a given order, with a verified certificate attached to every
//! positive and every disagreement. Work is chunked over the edge-mask
//! space so worker scheduling cannot affect the output order.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use hcp_core::graph::{edge_mask_bits, edge_mask_is_connected, graph_from_edge_mask, GraphError};
use hcp_core::oracle;
use hcp_core::solver::{solve_cycle, verify_cycle, SolveOptions};
use hcp_core::{Graph, Verdict, VertexId};

use crate::report::{GraphVerdictRecord, SweepReport};

/// Default cap on the sweep range; order 7 (1.8M connected graphs) is
/// allowed only behind the explicit override.
pub const SWEEP_GUARD: u32 = 6;

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub jobs: usize,
    pub timings: bool,
    pub allow_large: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            jobs: 1,
            timings: false,
            allow_large: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub records: Vec<GraphVerdictRecord>,
    pub report: SweepReport,
}

/// Judge a single graph: decider from start 1 against the exhaustive
/// oracle. The certificate is the decider's cycle on a positive, or the
/// oracle's cycle on a disagreement; its validity is re-checked against
/// the decoded record during aggregation, not trusted here.
pub fn judge(g: &Graph, timings: bool) -> GraphVerdictRecord {
    let start = VertexId::new(1);
    let t0 = Instant::now();
    let out = solve_cycle(g, start, SolveOptions::default())
        .expect("sweep graphs are connected with start 1");
    let elapsed = t0.elapsed();
    let oracle_cycle = oracle::hamiltonian_cycle(g, start);

    let decider: Verdict = out.verdict;
    let oracle_verdict = if oracle_cycle.is_some() {
        Verdict::Hamiltonian
    } else {
        Verdict::NonHamiltonian
    };

    let certificate = match (decider, oracle_verdict) {
        (Verdict::Hamiltonian, _) => out.cycle.clone(),
        (Verdict::NonHamiltonian, Verdict::Hamiltonian) => oracle_cycle,
        (Verdict::NonHamiltonian, Verdict::NonHamiltonian) => None,
    };

    GraphVerdictRecord {
        graph: g.to_graph6().expect("sweep graphs are undirected"),
        oracle_verdict: oracle_verdict.into(),
        decider_verdict: decider.into(),
        agreement: decider == oracle_verdict,
        certificate: certificate.map(|c| c.iter().map(|v| v.get()).collect()),
        cm_singleton_iterations: out.stats.singleton_passes_max,
        runtime: timings.then_some(elapsed.as_secs_f64()),
    }
}

/// Re-verify a record's certificate against its decoded graph.
pub fn certificate_verifies(r: &GraphVerdictRecord) -> bool {
    let Some(cert) = &r.certificate else {
        return false;
    };
    let g = Graph::from_graph6(&r.graph).expect("records hold valid graph6");
    let seq: Vec<VertexId> = cert.iter().map(|&x| VertexId::new(x)).collect();
    verify_cycle(&g, &seq)
}

pub fn sweep(n_from: u32, n_to: u32, opts: &SweepOptions) -> Result<SweepOutcome, GraphError> {
    if n_from < 1 || n_from > n_to {
        return Err(GraphError::Invalid {
            msg: format!("bad sweep range {n_from}..{n_to}"),
        });
    }
    if n_to > SWEEP_GUARD && !opts.allow_large {
        return Err(GraphError::EnumerationGuard {
            n: n_to,
            max: SWEEP_GUARD,
        });
    }
    if n_to > 11 {
        return Err(GraphError::EnumerationGuard { n: n_to, max: 11 });
    }

    let started = Instant::now();
    let jobs = opts.jobs.max(1);
    let mut records = Vec::new();
    for n in n_from..=n_to {
        let bits = edge_mask_bits(n);
        let total: u64 = 1u64 << bits;
        let chunk: u64 = (total / (jobs as u64 * 8)).max(1024);
        let chunk_count = total.div_ceil(chunk);
        let next = AtomicU64::new(0);

        let mut chunks: Vec<(u64, Vec<GraphVerdictRecord>)> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs)
                .map(|_| {
                    s.spawn(|| {
                        let mut mine = Vec::new();
                        loop {
                            let c = next.fetch_add(1, Ordering::Relaxed);
                            if c >= chunk_count {
                                break;
                            }
                            let lo = c * chunk;
                            let hi = (lo + chunk).min(total);
                            let mut recs = Vec::new();
                            for mask in lo..hi {
                                if !edge_mask_is_connected(n, mask) {
                                    continue;
                                }
                                let g = graph_from_edge_mask(n, mask);
                                recs.push(judge(&g, opts.timings));
                            }
                            mine.push((c, recs));
                        }
                        mine
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        });
        chunks.sort_by_key(|(c, _)| *c);
        for (_, recs) in chunks {
            records.extend(recs);
        }
    }

    let mut report = SweepReport {
        n_from,
        n_to,
        graph_count: records.len() as u64,
        agree_yes: 0,
        agree_no: 0,
        false_negatives: 0,
        invalid_cycles: 0,
        max_singleton_iterations: 0,
        wall_time_seconds: opts.timings.then(|| started.elapsed().as_secs_f64()),
    };
    for r in &records {
        use crate::report::VerdictLabel::*;
        match (r.decider_verdict, r.oracle_verdict) {
            (Hamiltonian, Hamiltonian) => report.agree_yes += 1,
            (NonHamiltonian, NonHamiltonian) => report.agree_no += 1,
            (NonHamiltonian, Hamiltonian) => report.false_negatives += 1,
            (Hamiltonian, NonHamiltonian) => {
                unreachable!("verified cycle on a graph the exhaustive oracle rejects")
            }
        }
        if r.decider_verdict == Hamiltonian && !certificate_verifies(r) {
            report.invalid_cycles += 1;
        }
        report.max_singleton_iterations = report
            .max_singleton_iterations
            .max(r.cm_singleton_iterations);
    }
    Ok(SweepOutcome { records, report })
}
