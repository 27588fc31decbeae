//! The decider pipeline: fill the path-set table level by level with
//! consistency-maintained joins and longest merges, gate on the final
//! vertex's path-set length, then reconstruct a cycle (or path) by
//! backward search. A reconstruction is only ever reported after an
//! independent walk check of the emitted sequence against the original
//! graph, so a `Hamiltonian` verdict is sound by construction.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::consistency::{consistent_join, PathSetTable};
use crate::graph::{Graph, VertexId};
use crate::hologram::{Hologram, HologramVertex};
use crate::pathset::{meet_prefix, PathSet, SegmentSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Prefer the smallest legal parent id at each backward step.
    #[default]
    Ascending,
    /// Prefer the largest legal parent id.
    Descending,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct SolveOptions {
    pub tie_break: TieBreak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Hamiltonian,
    NonHamiltonian,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Hamiltonian => f.write_str("hamiltonian"),
            Verdict::NonHamiltonian => f.write_str("non_hamiltonian"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub cm_calls: u64,
    pub singleton_passes_total: u64,
    pub singleton_passes_max: u64,
    /// Length of the final vertex's path set after propagation.
    pub final_length: usize,
    /// Whether that length reached n + 1.
    pub length_gate_passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub verdict: Verdict,
    /// Verified cycle, start..start, present iff verdict is Hamiltonian.
    pub cycle: Option<Vec<VertexId>>,
    pub table: PathSetTable,
    pub stats: SolveStats,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathOutcome {
    /// Verified Hamiltonian path, if one was reconstructed.
    pub path: Option<Vec<VertexId>>,
    pub starts_tried: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    Disconnected,
    StartOutOfRange { start: u32, n: u32 },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Disconnected => f.write_str("graph is not connected"),
            SolveError::StartOutOfRange { start, n } => {
                write!(f, "start vertex {start} out of range 1..={n}")
            }
        }
    }
}

impl core::error::Error for SolveError {}

/// One record of the deterministic solve transcript.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    /// A per-parent join candidate (before the longest merge).
    Candidate {
        target: HologramVertex,
        parent: HologramVertex,
        result: PathSet,
    },
    /// The table value after merging a candidate.
    Update { target: HologramVertex, ps: PathSet },
    /// Delete/retain log of a join that had to maintain consistency.
    JoinLog {
        target: HologramVertex,
        parent: HologramVertex,
        log: String,
    },
    /// One backward-search step: the chosen parent and the shrunk prefix.
    BackwardStep {
        level: usize,
        chosen: VertexId,
        prefix: Vec<SegmentSet>,
    },
}

impl TraceEvent {
    pub fn render(&self) -> String {
        use alloc::format;
        match self {
            TraceEvent::Candidate {
                target,
                parent,
                result,
            } => format!("PStemp[{target}] = {result}  (parent {parent})"),
            TraceEvent::Update { target, ps } => format!("PS[{target}] = {ps}"),
            TraceEvent::JoinLog {
                target,
                parent,
                log,
            } => {
                let mut out = format!("join {target} from {parent}:");
                for line in log.lines() {
                    out.push_str("\n  ");
                    out.push_str(line);
                }
                out
            }
            TraceEvent::BackwardStep {
                level,
                chosen,
                prefix,
            } => {
                let ps =
                    PathSet::Valid(crate::pathset::ValidPathSet::from_parts(0, prefix.clone()));
                format!("backward @{level}: chose {chosen}, PStemp = {ps}")
            }
        }
    }
}

pub type Transcript = Vec<TraceEvent>;

/// Fill the table bottom-up: levels 1..L-1 join through consistency
/// maintenance, the final level joins unconditionally. Vertices and
/// parents are processed in ascending id order.
pub fn propagate(
    h: &Hologram,
    g: &Graph,
    mut transcript: Option<&mut Transcript>,
) -> (PathSetTable, SolveStats) {
    let mut table = PathSetTable::new(h);
    let mut stats = SolveStats::default();
    let last = h.level_count();

    for k in 1..last {
        let targets: Vec<VertexId> = h.vertices_at(k).collect();
        for u in targets {
            let target = HologramVertex::new(u, k);
            let parent_ids: Vec<VertexId> = h.parents(target).iter().copied().collect();
            for p in parent_ids {
                let parent = HologramVertex::new(p, k - 1);
                let parent_ps = table.get(parent).clone();
                let (candidate, join_trace) = consistent_join(&parent_ps, u, k, g, &table);
                stats.cm_calls += 1;
                stats.singleton_passes_total += join_trace.singleton_passes;
                stats.singleton_passes_max =
                    stats.singleton_passes_max.max(join_trace.singleton_passes);
                if let Some(t) = transcript.as_deref_mut() {
                    if !join_trace.events.is_empty() {
                        t.push(TraceEvent::JoinLog {
                            target,
                            parent,
                            log: join_trace.log(),
                        });
                    }
                    t.push(TraceEvent::Candidate {
                        target,
                        parent,
                        result: candidate.clone(),
                    });
                }
                let merged = table.get(target).clone().merge_longest(candidate);
                table.set(target, merged);
                if let Some(t) = transcript.as_deref_mut() {
                    t.push(TraceEvent::Update {
                        target,
                        ps: table.get(target).clone(),
                    });
                }
            }
        }
    }

    let d = h.final_vertex();
    let parent_ids: Vec<VertexId> = h.parents(d).iter().copied().collect();
    for p in parent_ids {
        let parent = HologramVertex::new(p, last - 1);
        let candidate = table.get(parent).join(h.start());
        if let Some(t) = transcript.as_deref_mut() {
            t.push(TraceEvent::Candidate {
                target: d,
                parent,
                result: candidate.clone(),
            });
        }
        let merged = table.get(d).clone().merge_longest(candidate);
        table.set(d, merged);
        if let Some(t) = transcript.as_deref_mut() {
            t.push(TraceEvent::Update {
                target: d,
                ps: table.get(d).clone(),
            });
        }
    }

    stats.final_length = table.get(d).len();
    stats.length_gate_passed = stats.final_length == last + 1;
    (table, stats)
}

/// Reconstruct a basic path ending at `target` by walking parents from
/// the end level down to 1, keeping only candidates whose own path set
/// prefix-intersects the running constraint without an empty level, and
/// closing with the start vertex. Returns the sequence start..target, or
/// empty when some step has no legal candidate.
pub fn backward_search(
    table: &PathSetTable,
    target: HologramVertex,
    h: &Hologram,
    tie: TieBreak,
    mut transcript: Option<&mut Transcript>,
) -> Vec<VertexId> {
    let Some(tps) = table.get(target).as_valid() else {
        return Vec::new();
    };
    if tps.base_level() != 0 || tps.end_level() != target.level || target.level == 0 {
        return Vec::new();
    }
    let mut prefix: Vec<SegmentSet> = tps.levels().map(|(_, s)| s.clone()).collect();
    let mut seq = alloc::vec![target.vertex];
    let mut used: BTreeSet<VertexId> = BTreeSet::new();
    used.insert(target.vertex);
    let mut cur = target;

    for i in (1..target.level).rev() {
        let parents = h.parents(cur);
        let mut candidates: Vec<VertexId> = prefix[i]
            .iter()
            .copied()
            .filter(|c| parents.contains(c))
            .collect();
        if tie == TieBreak::Descending {
            candidates.reverse();
        }
        let mut chosen = None;
        for c in candidates {
            if used.contains(&c) {
                continue; // non-redundancy: already on the partial path
            }
            let Some(cps) = table.get(HologramVertex::new(c, i)).as_valid() else {
                continue;
            };
            if cps.base_level() != 0 {
                continue; // does not span 0..i, meets to empty below base
            }
            let meet = meet_prefix(&prefix[..=i], 0, cps, i);
            if meet.has_empty {
                continue;
            }
            chosen = Some((c, meet.sets));
            break;
        }
        let Some((c, shrunk)) = chosen else {
            return Vec::new();
        };
        prefix = shrunk;
        seq.push(c);
        used.insert(c);
        cur = HologramVertex::new(c, i);
        if let Some(t) = transcript.as_deref_mut() {
            t.push(TraceEvent::BackwardStep {
                level: i,
                chosen: c,
                prefix: prefix.clone(),
            });
        }
    }
    seq.push(h.start());
    seq.reverse();
    seq
}

/// True iff `seq` is a closed walk visiting every vertex exactly once:
/// n+1 entries, first = last, the first n entries a permutation of V,
/// and every consecutive pair an edge (direction respected).
pub fn verify_cycle(g: &Graph, seq: &[VertexId]) -> bool {
    let n = g.n() as usize;
    if seq.len() != n + 1 || seq.first() != seq.last() {
        return false;
    }
    permutation_of_vertices(g, &seq[..n]) && edges_ok(g, seq)
}

/// True iff `seq` visits every vertex exactly once along edges.
pub fn verify_path(g: &Graph, seq: &[VertexId]) -> bool {
    let n = g.n() as usize;
    if seq.len() != n {
        return false;
    }
    permutation_of_vertices(g, seq) && edges_ok(g, seq)
}

fn permutation_of_vertices(g: &Graph, seq: &[VertexId]) -> bool {
    let mut seen = BTreeSet::new();
    for &v in seq {
        if !g.contains_vertex(v) || !seen.insert(v) {
            return false;
        }
    }
    seen.len() == g.n() as usize
}

fn edges_ok(g: &Graph, seq: &[VertexId]) -> bool {
    seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Cycle decision through `start`. Orders below 3 are declared
/// non-Hamiltonian without running the pipeline (simple graphs have no
/// 1- or 2-cycles).
pub fn solve_cycle(
    g: &Graph,
    start: VertexId,
    opts: SolveOptions,
) -> Result<SolveOutcome, SolveError> {
    solve_cycle_with(g, start, opts, None)
}

pub fn solve_cycle_with(
    g: &Graph,
    start: VertexId,
    opts: SolveOptions,
    mut transcript: Option<&mut Transcript>,
) -> Result<SolveOutcome, SolveError> {
    if !g.contains_vertex(start) {
        return Err(SolveError::StartOutOfRange {
            start: start.get(),
            n: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let h = Hologram::build_unchecked(g, start);
    if g.n() < 3 {
        let table = PathSetTable::new(&h);
        let stats = SolveStats {
            final_length: table.get(h.final_vertex()).len(),
            ..SolveStats::default()
        };
        return Ok(SolveOutcome {
            verdict: Verdict::NonHamiltonian,
            cycle: None,
            table,
            stats,
        });
    }
    let (table, stats) = propagate(&h, g, transcript.as_deref_mut());
    let mut cycle = None;
    if stats.length_gate_passed {
        let seq = backward_search(&table, h.final_vertex(), &h, opts.tie_break, transcript);
        if !seq.is_empty() && verify_cycle(g, &seq) {
            cycle = Some(seq);
        }
    }
    Ok(SolveOutcome {
        verdict: if cycle.is_some() {
            Verdict::Hamiltonian
        } else {
            Verdict::NonHamiltonian
        },
        cycle,
        table,
        stats,
    })
}

/// Hamiltonian-path decision: run the pipeline from every start vertex
/// ascending; any level n-1 path set spanning 0..n-1 is a reconstruction
/// target. The first verified path wins.
pub fn solve_path(g: &Graph, opts: SolveOptions) -> Result<PathOutcome, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(PathOutcome {
            path: Some(alloc::vec![VertexId::new(1)]),
            starts_tried: 0,
        });
    }
    let mut starts_tried = 0;
    for s in 1..=n {
        let start = VertexId::new(s);
        let h = Hologram::build_unchecked(g, start);
        let (table, _) = propagate(&h, g, None);
        starts_tried += 1;
        let top = h.level_count() - 1;
        let targets: Vec<VertexId> = h.vertices_at(top).collect();
        for w in targets {
            let target = HologramVertex::new(w, top);
            let ps = table.get(target);
            if ps.len() != n as usize {
                continue;
            }
            let seq = backward_search(&table, target, &h, opts.tie_break, None);
            if !seq.is_empty() && verify_path(g, &seq) {
                return Ok(PathOutcome {
                    path: Some(seq),
                    starts_tried,
                });
            }
        }
    }
    Ok(PathOutcome {
        path: None,
        starts_tried,
    })
}
