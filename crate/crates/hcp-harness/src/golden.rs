//! Golden trace regression: replay the five worked examples and compare
//! every pinned intermediate value against the run, reporting the first
//! divergent line. The pins cover per-parent join candidates, table
//! updates, backward-search prefixes, final verdicts, and cycle counts.
//!
//! Four examples run the whole pipeline on a fixed graph. The fifth
//! (ex3-cm) replays two consistency joins directly against hand-built
//! path sets on an order-8 graph whose neighborhoods (1~{2,3,6,8}, 3~7,
//! 6~{5,7}, 8~{5,7}, 2~4) drive every deletion, retention, and sweep
//! decision those joins make.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use hcp_core::consistency::{consistent_join, PathSetTable};
use hcp_core::hologram::HologramVertex;
use hcp_core::oracle;
use hcp_core::pathset::{PathSet, SegmentSet, ValidPathSet};
use hcp_core::solver::{
    solve_cycle_with, solve_path, SolveOptions, TraceEvent, Transcript, Verdict,
};
use hcp_core::{Graph, Hologram, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldenExample {
    Ex1,
    Ex2,
    Ex3Cm,
    Ex4,
    Ex5e,
}

pub const ALL_EXAMPLES: [GoldenExample; 5] = [
    GoldenExample::Ex1,
    GoldenExample::Ex2,
    GoldenExample::Ex3Cm,
    GoldenExample::Ex4,
    GoldenExample::Ex5e,
];

impl GoldenExample {
    pub fn id(self) -> &'static str {
        match self {
            GoldenExample::Ex1 => "ex1",
            GoldenExample::Ex2 => "ex2",
            GoldenExample::Ex3Cm => "ex3-cm",
            GoldenExample::Ex4 => "ex4",
            GoldenExample::Ex5e => "ex5e",
        }
    }
}

impl FromStr for GoldenExample {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ex1" => Ok(GoldenExample::Ex1),
            "ex2" => Ok(GoldenExample::Ex2),
            "ex3-cm" => Ok(GoldenExample::Ex3Cm),
            "ex4" => Ok(GoldenExample::Ex4),
            "ex5e" => Ok(GoldenExample::Ex5e),
            other => Err(format!(
                "unknown example '{other}' (expected ex1, ex2, ex3-cm, ex4, ex5e)"
            )),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GoldenReport {
    pub example: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl GoldenReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_divergence(&self) -> Option<&str> {
        self.failures.first().map(String::as_str)
    }
}

/// The replayed run, flattened to ordered (key, value) pairs.
struct Stream {
    entries: Vec<(String, String)>,
}

impl Stream {
    fn from_parts(
        transcript: &Transcript,
        table: Option<&PathSetTable>,
        extras: &[(String, String)],
    ) -> Stream {
        let mut entries = Vec::new();
        for ev in transcript {
            match ev {
                TraceEvent::Candidate {
                    target,
                    parent,
                    result,
                } => entries.push((format!("PStemp[{target}] via {parent}"), result.render())),
                TraceEvent::Update { target, ps } => {
                    entries.push((format!("PS[{target}]"), ps.render()))
                }
                TraceEvent::JoinLog {
                    target,
                    parent,
                    log,
                } => entries.push((format!("join[{target}] via {parent}"), log.clone())),
                TraceEvent::BackwardStep {
                    level,
                    chosen,
                    prefix,
                } => {
                    let ps = PathSet::Valid(ValidPathSet::from_parts(0, prefix.clone()));
                    entries.push((
                        format!("backward@{level}"),
                        format!("{chosen} -> {}", ps.render()),
                    ));
                }
            }
        }
        if let Some(t) = table {
            for (hv, ps) in t.iter() {
                entries.push((format!("PS-final[{hv}]"), ps.render()));
            }
        }
        entries.extend(extras.iter().cloned());
        Stream { entries }
    }

    /// Check pins in order: each pinned key must next occur (at or after
    /// the cursor) with exactly the pinned value.
    fn check(&self, pins: &[(&str, &str)], failures: &mut Vec<String>) {
        let mut cursor = 0usize;
        for (key, want) in pins {
            let found = self.entries[cursor..]
                .iter()
                .position(|(k, _)| k == key)
                .map(|off| cursor + off);
            match found {
                None => failures.push(format!("{key} = {want}  -- never occurred after #{cursor}")),
                Some(pos) => {
                    let got = &self.entries[pos].1;
                    if got != want {
                        failures.push(format!("{key}: expected {want}, got {got}"));
                    }
                    cursor = pos + 1;
                }
            }
        }
    }
}

fn render_seq(seq: &[VertexId]) -> String {
    let mut out = String::new();
    for (i, v) in seq.iter().enumerate() {
        if i > 0 {
            out.push('-');
        }
        let _ = write!(out, "{v}");
    }
    out
}

pub fn example_graph(example: GoldenExample) -> Graph {
    let text = match example {
        GoldenExample::Ex1 => "U 4 5\n1 3\n1 4\n2 3\n2 4\n3 4",
        GoldenExample::Ex2 => "U 4 4\n1 4\n2 4\n3 4\n2 3",
        GoldenExample::Ex3Cm => "U 8 10\n1 3\n1 6\n1 8\n3 7\n6 7\n7 8\n5 6\n5 8\n1 2\n2 4",
        GoldenExample::Ex4 => "U 5 10\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5",
        GoldenExample::Ex5e => "U 5 8\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4",
    };
    Graph::parse_edge_list(text).expect("fixture graphs parse")
}

pub fn run(example: GoldenExample) -> GoldenReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    let checks = match example {
        GoldenExample::Ex1 => run_ex1(&mut failures),
        GoldenExample::Ex2 => run_ex2(&mut failures),
        GoldenExample::Ex3Cm => run_ex3(&mut failures),
        GoldenExample::Ex4 => run_ex4(&mut failures),
        GoldenExample::Ex5e => run_ex5e(&mut failures),
    };
    GoldenReport {
        example: example.id(),
        checks,
        failures,
        elapsed: started.elapsed(),
    }
}

fn solve_stream(g: &Graph, also_path: bool) -> Stream {
    let mut transcript = Transcript::new();
    let out = solve_cycle_with(
        g,
        VertexId::new(1),
        SolveOptions::default(),
        Some(&mut transcript),
    )
    .expect("fixture graphs are connected");
    let mut extras = vec![
        ("verdict".to_string(), out.verdict.to_string()),
        (
            "max-singleton-passes".to_string(),
            out.stats.singleton_passes_max.to_string(),
        ),
    ];
    if let Some(c) = &out.cycle {
        extras.push(("cycle".to_string(), render_seq(c)));
    }
    if out.verdict == Verdict::Hamiltonian || also_path {
        let p = solve_path(g, SolveOptions::default()).expect("fixture graphs are connected");
        if let Some(path) = &p.path {
            extras.push(("path".to_string(), render_seq(path)));
        }
    }
    extras.push((
        "cycle-count-from-1".to_string(),
        oracle::count_cycles(g, VertexId::new(1)).to_string(),
    ));
    Stream::from_parts(&transcript, Some(&out.table), &extras)
}

fn run_ex1(failures: &mut Vec<String>) -> usize {
    let g = example_graph(GoldenExample::Ex1);
    let stream = solve_stream(&g, false);
    let pins: &[(&str, &str)] = &[
        ("PStemp[<3,1>] via <1,0>", "{{1},{3}}"),
        ("PS[<3,1>]", "{{1},{3}}"),
        ("PS[<4,1>]", "{{1},{4}}"),
        ("PStemp[<2,2>] via <3,1>", "{{1},{3},{2}}"),
        ("PS[<2,2>]", "{{1},{3},{2}}"),
        ("PStemp[<2,2>] via <4,1>", "{{1},{4},{2}}"),
        ("PS[<2,2>]", "{{1},{3,4},{2}}"),
        ("PStemp[<3,2>] via <2,1>", "{{2},{3}}"),
        ("PS[<3,2>]", "{{2},{3}}"),
        ("PStemp[<3,2>] via <4,1>", "{{1},{4},{3}}"),
        ("PS[<3,2>]", "{{1},{4},{3}}"),
        ("PStemp[<2,3>] via <3,2>", "{{1},{4},{3},{2}}"),
        ("PS[<2,3>]", "{{1},{4},{3},{2}}"),
        ("PStemp[<2,3>] via <4,2>", "{{1},{3},{4},{2}}"),
        ("PS[<2,3>]", "{{1},{3,4},{3,4},{2}}"),
        ("PStemp[<3,3>] via <2,2>", "{{1},{4},{2},{3}}"),
        ("PStemp[<3,3>] via <4,2>", "{{}}"),
        ("PS[<3,3>]", "{{1},{4},{2},{3}}"),
        ("PStemp[<1,4>] via <3,3>", "{{1},{4},{2},{3},{1}}"),
        ("PStemp[<1,4>] via <4,3>", "{{1},{3},{2},{4},{1}}"),
        ("PS[<1,4>]", "{{1},{3,4},{2},{3,4},{1}}"),
        ("backward@3", "3 -> {{1},{4},{2},{3}}"),
        ("backward@2", "2 -> {{1},{4},{2}}"),
        ("backward@1", "4 -> {{1},{4}}"),
        ("PS-final[<4,2>]", "{{1},{3},{4}}"),
        ("PS-final[<4,3>]", "{{1},{3},{2},{4}}"),
        ("PS-final[<1,4>]", "{{1},{3,4},{2},{3,4},{1}}"),
        ("verdict", "hamiltonian"),
        ("cycle", "1-4-2-3-1"),
    ];
    stream.check(pins, failures);
    pins.len()
}

fn run_ex2(failures: &mut Vec<String>) -> usize {
    let g = example_graph(GoldenExample::Ex2);
    let stream = solve_stream(&g, true);
    let pins: &[(&str, &str)] = &[
        ("PS-final[<2,3>]", "{{1},{4},{3},{2}}"),
        ("PS-final[<3,3>]", "{{1},{4},{2},{3}}"),
        ("PS-final[<4,3>]", "{{4}}"),
        ("PS-final[<1,4>]", "{{4},{1}}"),
        ("verdict", "non_hamiltonian"),
        ("path", "1-4-3-2"),
        ("cycle-count-from-1", "0"),
    ];
    stream.check(pins, failures);
    pins.len()
}

fn run_ex3(failures: &mut Vec<String>) -> usize {
    let g = example_graph(GoldenExample::Ex3Cm);
    let h = Hologram::build(&g, VertexId::new(1)).expect("fixture is connected");
    let mut table = PathSetTable::new(&h);
    let set = |t: &mut PathSetTable, u: u32, k: usize, base: usize, levels: &[&[u32]]| {
        let sets: Vec<SegmentSet> = levels
            .iter()
            .map(|l| l.iter().copied().map(VertexId::new).collect())
            .collect();
        t.set(
            HologramVertex::new(VertexId::new(u), k),
            PathSet::Valid(ValidPathSet::from_parts(base, sets)),
        );
    };
    set(&mut table, 3, 1, 0, &[&[1], &[3]]);
    set(&mut table, 6, 1, 0, &[&[1], &[6]]);
    set(&mut table, 8, 1, 0, &[&[1], &[8]]);

    let ps54 = PathSet::Valid(ValidPathSet::from_parts(
        1,
        vec![
            [3, 6, 8].iter().map(|&x| VertexId::new(x)).collect(),
            [7].iter().map(|&x| VertexId::new(x)).collect(),
            [6, 8].iter().map(|&x| VertexId::new(x)).collect(),
            [5].iter().map(|&x| VertexId::new(x)).collect(),
        ],
    ));
    let ps74 = PathSet::Valid(ValidPathSet::from_parts(
        1,
        vec![
            [6, 8].iter().map(|&x| VertexId::new(x)).collect(),
            [5].iter().map(|&x| VertexId::new(x)).collect(),
            [6, 8].iter().map(|&x| VertexId::new(x)).collect(),
            [7].iter().map(|&x| VertexId::new(x)).collect(),
        ],
    ));

    let six = VertexId::new(6);
    let (out1, trace1) = consistent_join(&ps54, six, 5, &g, &table);
    let (out2, trace2) = consistent_join(&ps74, six, 5, &g, &table);

    let fmt_deletions = |trace: &hcp_core::consistency::JoinTrace| {
        trace
            .deletions()
            .iter()
            .map(|(v, l)| format!("{v}@{l}"))
            .collect::<Vec<_>>()
            .join(",")
    };
    let entries = vec![
        ("join1 result".to_string(), out1.render()),
        ("join1 deletions".to_string(), fmt_deletions(&trace1)),
        (
            "join1 sweep-passes".to_string(),
            trace1.singleton_passes.to_string(),
        ),
        ("join2 result".to_string(), out2.render()),
        ("join2 deletions".to_string(), fmt_deletions(&trace2)),
        (
            "join2 sweep-passes".to_string(),
            trace2.singleton_passes.to_string(),
        ),
    ];
    let stream = Stream { entries };
    let pins: &[(&str, &str)] = &[
        ("join1 result", "{{3},{7},{8},{5},{6}}"),
        ("join1 deletions", "6@3,6@1,8@1"),
        ("join1 sweep-passes", "1"),
        ("join2 result", "{{}}"),
        ("join2 deletions", "6@3,6@1,8@1"),
        ("join2 sweep-passes", "1"),
    ];
    stream.check(pins, failures);
    pins.len()
}

fn run_ex4(failures: &mut Vec<String>) -> usize {
    let g = example_graph(GoldenExample::Ex4);
    let stream = solve_stream(&g, false);
    let pins: &[(&str, &str)] = &[
        ("PStemp[<2,1>] via <1,0>", "{{1},{2}}"),
        ("PS[<2,1>]", "{{1},{2}}"),
        ("PStemp[<2,2>] via <3,1>", "{{1},{3},{2}}"),
        ("PS[<2,2>]", "{{1},{3},{2}}"),
        ("PS[<2,2>]", "{{1},{3,4},{2}}"),
        ("PS[<2,2>]", "{{1},{3,4,5},{2}}"),
        ("PStemp[<2,3>] via <3,2>", "{{1},{4,5},{3},{2}}"),
        ("PS[<2,3>]", "{{1},{4,5},{3},{2}}"),
        ("PS[<2,3>]", "{{1},{3,4,5},{3,4},{2}}"),
        ("PS[<2,3>]", "{{1},{3,4,5},{3,4,5},{2}}"),
        ("PStemp[<2,4>] via <3,3>", "{{1},{4,5},{4,5},{3},{2}}"),
        ("PS[<2,4>]", "{{1},{4,5},{4,5},{3},{2}}"),
        ("PS[<2,4>]", "{{1},{3,4,5},{3,4,5},{3,4},{2}}"),
        ("PS[<2,4>]", "{{1},{3,4,5},{3,4,5},{3,4,5},{2}}"),
        ("backward@4", "2 -> {{1},{3,4,5},{3,4,5},{3,4,5},{2}}"),
        ("backward@3", "3 -> {{1},{4,5},{4,5},{3}}"),
        ("backward@2", "4 -> {{1},{5},{4}}"),
        ("backward@1", "5 -> {{1},{5}}"),
        ("PS-final[<3,1>]", "{{1},{3}}"),
        ("PS-final[<4,1>]", "{{1},{4}}"),
        ("PS-final[<5,1>]", "{{1},{5}}"),
        ("PS-final[<3,2>]", "{{1},{2,4,5},{3}}"),
        ("PS-final[<4,2>]", "{{1},{2,3,5},{4}}"),
        ("PS-final[<5,2>]", "{{1},{2,3,4},{5}}"),
        ("PS-final[<3,3>]", "{{1},{2,4,5},{2,4,5},{3}}"),
        ("PS-final[<4,3>]", "{{1},{2,3,5},{2,3,5},{4}}"),
        ("PS-final[<5,3>]", "{{1},{2,3,4},{2,3,4},{5}}"),
        ("PS-final[<3,4>]", "{{1},{2,4,5},{2,4,5},{2,4,5},{3}}"),
        ("PS-final[<4,4>]", "{{1},{2,3,5},{2,3,5},{2,3,5},{4}}"),
        ("PS-final[<5,4>]", "{{1},{2,3,4},{2,3,4},{2,3,4},{5}}"),
        (
            "PS-final[<1,5>]",
            "{{1},{2,3,4,5},{2,3,4,5},{2,3,4,5},{2,3,4,5},{1}}",
        ),
        ("verdict", "hamiltonian"),
        ("max-singleton-passes", "0"),
        ("cycle", "1-5-4-3-2-1"),
        ("cycle-count-from-1", "24"),
    ];
    stream.check(pins, failures);
    pins.len()
}

fn run_ex5e(failures: &mut Vec<String>) -> usize {
    let g = example_graph(GoldenExample::Ex5e);
    let stream = solve_stream(&g, false);
    let pins: &[(&str, &str)] = &[
        ("PS-final[<2,1>]", "{{1},{2}}"),
        ("PS-final[<3,1>]", "{{1},{3}}"),
        ("PS-final[<4,1>]", "{{1},{4}}"),
        ("PS-final[<5,1>]", "{{1},{5}}"),
        ("PS-final[<2,2>]", "{{1},{3,4,5},{2}}"),
        ("PS-final[<3,2>]", "{{1},{2,4},{3}}"),
        ("PS-final[<4,2>]", "{{1},{2,3},{4}}"),
        ("PS-final[<5,2>]", "{{1},{2},{5}}"),
        ("PS-final[<2,3>]", "{{1},{3,4},{3,4},{2}}"),
        ("PS-final[<3,3>]", "{{1},{2,4,5},{2,4},{3}}"),
        ("PS-final[<4,3>]", "{{1},{2,3,5},{2,3},{4}}"),
        ("PS-final[<5,3>]", "{{1},{3,4},{2},{5}}"),
        ("PS-final[<2,4>]", "{{2}}"),
        ("PS-final[<3,4>]", "{{1},{5},{2},{4},{3}}"),
        ("PS-final[<4,4>]", "{{1},{5},{2},{3},{4}}"),
        ("PS-final[<5,4>]", "{{1},{3,4},{3,4},{2},{5}}"),
        (
            "PS-final[<1,5>]",
            "{{1},{3,4,5},{2,3,4},{2,3,4},{3,4,5},{1}}",
        ),
        ("verdict", "hamiltonian"),
        ("cycle", "1-5-2-4-3-1"),
        ("cycle-count-from-1", "4"),
    ];
    stream.check(pins, failures);
    pins.len()
}
