//! Scaling probe on complete graphs: wall time and sweep-pass counts per
//! order, plus the log-log slope of the runtime curve.

use std::time::{Duration, Instant};

use hcp_core::solver::{solve_cycle, SolveOptions};
use hcp_core::{Graph, Verdict, VertexId};

#[derive(Clone, Copy, Debug)]
pub struct ProbePoint {
    pub n: u32,
    pub seconds: f64,
    pub max_singleton_passes: u64,
    pub verdict: Verdict,
}

/// Solve K_n for each order, best of `rounds` timings.
pub fn scaling_probe(orders: &[u32], rounds: u32) -> Vec<ProbePoint> {
    let rounds = rounds.max(1);
    let mut points = Vec::with_capacity(orders.len());
    for &n in orders {
        assert!(n >= 3, "probe orders start at 3");
        let g = Graph::complete(n);
        let mut best = Duration::MAX;
        let mut max_passes = 0;
        let mut verdict = Verdict::NonHamiltonian;
        for _ in 0..rounds {
            let t0 = Instant::now();
            let out = solve_cycle(&g, VertexId::new(1), SolveOptions::default())
                .expect("complete graphs are connected");
            best = best.min(t0.elapsed());
            max_passes = out.stats.singleton_passes_max;
            verdict = out.verdict;
        }
        points.push(ProbePoint {
            n,
            seconds: best.as_secs_f64(),
            max_singleton_passes: max_passes,
            verdict,
        });
    }
    points
}

/// Least-squares slope of ln(seconds) against ln(n). Degenerate inputs
/// (fewer than two points) return 0.
pub fn loglog_slope(points: &[ProbePoint]) -> f64 {
    if points.len() < 2 {
        return 0.0;
    }
    let xs: Vec<f64> = points.iter().map(|p| (p.n as f64).ln()).collect();
    // clamp to the timer's resolution so an unmeasurably fast solve
    // cannot produce ln(0)
    let ys: Vec<f64> = points.iter().map(|p| p.seconds.max(1e-9).ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}
