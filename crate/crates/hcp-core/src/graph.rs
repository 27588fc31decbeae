//! Finite simple graphs (undirected, directed, or mixed) with 1-indexed
//! vertices, plus the edge-list and graph6 formats and the exhaustive
//! enumerator of small connected labeled graphs.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// 1-indexed vertex label of an original graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(id: u32) -> Self {
        debug_assert!(id >= 1, "vertex ids are 1-indexed");
        VertexId(id)
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeKind {
    Undirected,
    Directed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub kind: EdgeKind,
}

impl Edge {
    /// Key used for duplicate detection and graph equality: undirected
    /// edges are normalized to (min, max).
    fn key(&self) -> (u32, u32, EdgeKind) {
        match self.kind {
            EdgeKind::Undirected => {
                let (a, b) = if self.u.get() <= self.v.get() {
                    (self.u.get(), self.v.get())
                } else {
                    (self.v.get(), self.u.get())
                };
                (a, b, EdgeKind::Undirected)
            }
            EdgeKind::Directed => (self.u.get(), self.v.get(), EdgeKind::Directed),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    In,
    Out,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Malformed edge-list text; `line` is 1-based over the raw input.
    Parse { line: usize, msg: String },
    /// Invalid graph6 text.
    Graph6 { msg: String },
    /// Construction-level violation (range, self-loop, duplicate).
    Invalid { msg: String },
    /// Enumeration requested outside the guarded size range.
    EnumerationGuard { n: u32, max: u32 },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            GraphError::Graph6 { msg } => write!(f, "graph6 error: {msg}"),
            GraphError::Invalid { msg } => write!(f, "invalid graph: {msg}"),
            GraphError::EnumerationGuard { n, max } => write!(
                f,
                "enumeration of n={n} exceeds the guard (n <= {max}); pass the override to allow it"
            ),
        }
    }
}

impl core::error::Error for GraphError {}

/// A finite simple graph. Undirected edges populate both adjacency
/// directions, so `N⁻(v) = N⁺(v) = N(v)` holds for undirected graphs.
#[derive(Clone, Debug)]
pub struct Graph {
    n: u32,
    edges: Vec<Edge>,
    out_adj: Vec<BTreeSet<VertexId>>,
    in_adj: Vec<BTreeSet<VertexId>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edge_keys() == other.edge_keys()
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(n: u32, edges: Vec<Edge>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Invalid {
                msg: "graph must have at least one vertex".to_string(),
            });
        }
        let mut g = Graph {
            n,
            edges: Vec::new(),
            out_adj: alloc::vec![BTreeSet::new(); n as usize],
            in_adj: alloc::vec![BTreeSet::new(); n as usize],
        };
        let mut seen: BTreeSet<(u32, u32, EdgeKind)> = BTreeSet::new();
        for e in edges {
            g.check_edge(&e, &seen)
                .map_err(|msg| GraphError::Invalid { msg })?;
            seen.insert(e.key());
            g.push_edge(e);
        }
        Ok(g)
    }

    pub fn undirected(n: u32, pairs: &[(u32, u32)]) -> Result<Self, GraphError> {
        let edges = pairs
            .iter()
            .map(|&(u, v)| Edge {
                u: VertexId::new(u),
                v: VertexId::new(v),
                kind: EdgeKind::Undirected,
            })
            .collect();
        Graph::new(n, edges)
    }

    /// Complete undirected graph K_n.
    pub fn complete(n: u32) -> Self {
        let mut pairs = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                pairs.push((u, v));
            }
        }
        Graph::undirected(n, &pairs).expect("complete graph is always valid")
    }

    fn check_edge(&self, e: &Edge, seen: &BTreeSet<(u32, u32, EdgeKind)>) -> Result<(), String> {
        for w in [e.u, e.v] {
            if w.get() < 1 || w.get() > self.n {
                return Err(format!("vertex {} out of range 1..={}", w, self.n));
            }
        }
        if e.u == e.v {
            return Err(format!("self-loop at vertex {}", e.u));
        }
        if seen.contains(&e.key()) {
            return Err(format!("duplicate edge {} {}", e.u, e.v));
        }
        // A directed edge sharing its unordered pair with an undirected
        // edge (or vice versa) would duplicate hologram edges.
        let (a, b, _) = e.key();
        let clash = match e.kind {
            EdgeKind::Undirected => {
                seen.contains(&(a, b, EdgeKind::Directed))
                    || seen.contains(&(b, a, EdgeKind::Directed))
            }
            EdgeKind::Directed => seen.contains(&(a.min(b), a.max(b), EdgeKind::Undirected)),
        };
        if clash {
            return Err(format!("duplicate edge {} {} (mixed kinds)", e.u, e.v));
        }
        Ok(())
    }

    fn push_edge(&mut self, e: Edge) {
        let ui = (e.u.get() - 1) as usize;
        let vi = (e.v.get() - 1) as usize;
        self.out_adj[ui].insert(e.v);
        self.in_adj[vi].insert(e.u);
        if e.kind == EdgeKind::Undirected {
            self.out_adj[vi].insert(e.u);
            self.in_adj[ui].insert(e.v);
        }
        self.edges.push(e);
    }

    fn edge_keys(&self) -> BTreeSet<(u32, u32, EdgeKind)> {
        self.edges.iter().map(Edge::key).collect()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.n).map(VertexId::new)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_undirected(&self) -> bool {
        self.edges.iter().all(|e| e.kind == EdgeKind::Undirected)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.get() >= 1 && v.get() <= self.n
    }

    /// N⁻(v) or N⁺(v); undirected edges contribute to both.
    pub fn neighbors(&self, v: VertexId, dir: Direction) -> &BTreeSet<VertexId> {
        let i = (v.get() - 1) as usize;
        match dir {
            Direction::In => &self.in_adj[i],
            Direction::Out => &self.out_adj[i],
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        let i = (v.get() - 1) as usize;
        self.out_adj[i].len().max(self.in_adj[i].len())
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Directed membership test: true iff u -> v is traversable.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.out_adj[(u.get() - 1) as usize].contains(&v)
    }

    /// True iff every vertex is reachable from vertex 1 when all edges
    /// are treated as undirected.
    pub fn is_connected(&self) -> bool {
        let n = self.n as usize;
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for &w in self.out_adj[i].iter().chain(self.in_adj[i].iter()) {
                let wi = (w.get() - 1) as usize;
                if !seen[wi] {
                    seen[wi] = true;
                    count += 1;
                    stack.push(wi);
                }
            }
        }
        count == n
    }

    // ---- edge-list format -------------------------------------------------

    /// Parse the edge-list format: header `<K> <n> <m>` with K in
    /// {U, D, M}, then m edge lines (`u v` for U/D, `u v U|D` for M).
    /// Lines starting with '#' and blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            msg: "missing header line".to_string(),
        })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(GraphError::Parse {
                line: hline,
                msg: format!("header must be '<K> <n> <m>', got '{header}'"),
            });
        }
        let kind = match parts[0] {
            "U" => EdgeKind::Undirected,
            "D" => EdgeKind::Directed,
            "M" => EdgeKind::Undirected, // per-edge tags override below
            other => {
                return Err(GraphError::Parse {
                    line: hline,
                    msg: format!("unknown graph kind '{other}' (expected U, D, or M)"),
                })
            }
        };
        let mixed = parts[0] == "M";
        let n: u32 = parts[1].parse().map_err(|_| GraphError::Parse {
            line: hline,
            msg: format!("bad vertex count '{}'", parts[1]),
        })?;
        let m: usize = parts[2].parse().map_err(|_| GraphError::Parse {
            line: hline,
            msg: format!("bad edge count '{}'", parts[2]),
        })?;
        if n == 0 {
            return Err(GraphError::Parse {
                line: hline,
                msg: "graph must have at least one vertex".to_string(),
            });
        }

        let mut g = Graph {
            n,
            edges: Vec::new(),
            out_adj: alloc::vec![BTreeSet::new(); n as usize],
            in_adj: alloc::vec![BTreeSet::new(); n as usize],
        };
        let mut seen = BTreeSet::new();
        let mut parsed = 0usize;
        for (lno, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let expected = if mixed { 3 } else { 2 };
            if fields.len() != expected {
                return Err(GraphError::Parse {
                    line: lno,
                    msg: format!("expected {expected} fields, got '{line}'"),
                });
            }
            let parse_v = |s: &str| -> Result<VertexId, GraphError> {
                let id: u32 = s.parse().map_err(|_| GraphError::Parse {
                    line: lno,
                    msg: format!("bad vertex id '{s}'"),
                })?;
                Ok(VertexId(id))
            };
            let u = parse_v(fields[0])?;
            let v = parse_v(fields[1])?;
            let ekind = if mixed {
                match fields[2] {
                    "U" => EdgeKind::Undirected,
                    "D" => EdgeKind::Directed,
                    other => {
                        return Err(GraphError::Parse {
                            line: lno,
                            msg: format!("bad edge kind '{other}' (expected U or D)"),
                        })
                    }
                }
            } else {
                kind
            };
            let e = Edge { u, v, kind: ekind };
            g.check_edge(&e, &seen)
                .map_err(|msg| GraphError::Parse { line: lno, msg })?;
            seen.insert(e.key());
            g.push_edge(e);
            parsed += 1;
        }
        if parsed != m {
            return Err(GraphError::Parse {
                line: text.lines().count().max(1),
                msg: format!("header declares {m} edges but {parsed} were given"),
            });
        }
        Ok(g)
    }

    /// Canonical edge-list text; `parse_edge_list` round-trips it.
    pub fn serialize_edge_list(&self) -> String {
        let mixed =
            !self.is_undirected() && self.edges.iter().any(|e| e.kind == EdgeKind::Undirected);
        let kind = if mixed {
            "M"
        } else if self.is_undirected() {
            "U"
        } else {
            "D"
        };
        let mut keys: Vec<(u32, u32, EdgeKind)> = self.edges.iter().map(Edge::key).collect();
        keys.sort_unstable();
        let mut out = format!("{kind} {} {}", self.n, self.edges.len());
        for (u, v, k) in keys {
            out.push('\n');
            match (mixed, k) {
                (true, EdgeKind::Undirected) => out.push_str(&format!("{u} {v} U")),
                (true, EdgeKind::Directed) => out.push_str(&format!("{u} {v} D")),
                (false, _) => out.push_str(&format!("{u} {v}")),
            }
        }
        out
    }

    // ---- graph6 format ----------------------------------------------------

    /// Decode a standard graph6 string (undirected simple graphs).
    pub fn from_graph6(text: &str) -> Result<Self, GraphError> {
        let s = text.trim();
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(GraphError::Graph6 {
                msg: "empty input".to_string(),
            });
        }
        for &b in bytes {
            if !(63..=126).contains(&b) {
                return Err(GraphError::Graph6 {
                    msg: format!("invalid byte {b} (chars must be in 63..=126)"),
                });
            }
        }
        let (n, mut pos) = if bytes[0] == 126 {
            if bytes.len() >= 2 && bytes[1] == 126 {
                return Err(GraphError::Graph6 {
                    msg: "graphs beyond 258047 vertices are not supported".to_string(),
                });
            }
            if bytes.len() < 4 {
                return Err(GraphError::Graph6 {
                    msg: "truncated long-form vertex count".to_string(),
                });
            }
            let n = ((bytes[1] as u32 - 63) << 12)
                | ((bytes[2] as u32 - 63) << 6)
                | (bytes[3] as u32 - 63);
            (n, 4usize)
        } else {
            ((bytes[0] - 63) as u32, 1usize)
        };
        if n == 0 {
            return Err(GraphError::Graph6 {
                msg: "graph must have at least one vertex".to_string(),
            });
        }
        let nbits = (n as usize) * (n as usize - 1) / 2;
        let need = nbits.div_ceil(6);
        if bytes.len() - pos != need {
            return Err(GraphError::Graph6 {
                msg: format!(
                    "payload length {} does not match n={n} (expected {need} chars)",
                    bytes.len() - pos
                ),
            });
        }
        let mut pairs = Vec::new();
        let mut bit = 0usize;
        let mut cur = 0u8;
        for j in 2..=n {
            for i in 1..j {
                if bit.is_multiple_of(6) {
                    cur = bytes[pos] - 63;
                    pos += 1;
                }
                let set = (cur >> (5 - bit % 6)) & 1 == 1;
                bit += 1;
                if set {
                    pairs.push((i, j));
                }
            }
        }
        Graph::undirected(n, &pairs)
    }

    /// Encode as graph6. Only undirected graphs are representable.
    pub fn to_graph6(&self) -> Result<String, GraphError> {
        if !self.is_undirected() {
            return Err(GraphError::Graph6 {
                msg: "only undirected graphs have a graph6 encoding".to_string(),
            });
        }
        let n = self.n;
        let mut out = String::new();
        if n <= 62 {
            out.push((n as u8 + 63) as char);
        } else if n <= 258047 {
            out.push('~');
            out.push((((n >> 12) & 0x3f) as u8 + 63) as char);
            out.push((((n >> 6) & 0x3f) as u8 + 63) as char);
            out.push(((n & 0x3f) as u8 + 63) as char);
        } else {
            return Err(GraphError::Graph6 {
                msg: "graphs beyond 258047 vertices are not supported".to_string(),
            });
        }
        let mut cur = 0u8;
        let mut used = 0u8;
        for j in 2..=n {
            for i in 1..j {
                let set = self.has_edge(VertexId::new(i), VertexId::new(j));
                cur = (cur << 1) | set as u8;
                used += 1;
                if used == 6 {
                    out.push((cur + 63) as char);
                    cur = 0;
                    used = 0;
                }
            }
        }
        if used > 0 {
            cur <<= 6 - used;
            out.push((cur + 63) as char);
        }
        Ok(out)
    }
}

/// Guarded size limit for exhaustive enumeration.
pub const ENUMERATION_GUARD: u32 = 7;

/// Number of vertex pairs (= edge-bitmask width) for order `n`.
pub fn edge_mask_bits(n: u32) -> u32 {
    n * (n - 1) / 2
}

/// Graph for an edge bitmask: bit b selects the b-th pair in
/// lexicographic order (1,2),(1,3),..,(1,n),(2,3),..
pub fn graph_from_edge_mask(n: u32, mask: u64) -> Graph {
    let selected: Vec<(u32, u32)> = pair_list(n)
        .into_iter()
        .enumerate()
        .filter(|(b, _)| mask >> b & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::undirected(n, &selected).expect("mask edges are valid")
}

/// Connectivity test on the raw bitmask, cheaper than building a Graph.
/// Only valid for n <= 11 (the enumerable range).
pub fn edge_mask_is_connected(n: u32, mask: u64) -> bool {
    mask_connected(n, &pair_list(n), mask)
}

/// Enumerate every connected labeled simple undirected graph on `n`
/// vertices, each exactly once, ascending by edge bitmask.
pub fn enumerate_connected_labeled(
    n: u32,
    allow_unguarded: bool,
) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if n < 1 || (n > ENUMERATION_GUARD && !allow_unguarded) {
        return Err(GraphError::EnumerationGuard {
            n,
            max: ENUMERATION_GUARD,
        });
    }
    if n > 11 {
        // 2^66 masks will not finish regardless of the guard flag.
        return Err(GraphError::EnumerationGuard { n, max: 11 });
    }
    let pairs = pair_list(n);
    let end: u64 = 1u64 << pairs.len();
    Ok((0..end).filter_map(move |mask| {
        if !mask_connected(n, &pairs, mask) {
            return None;
        }
        Some(graph_from_edge_mask(n, mask))
    }))
}

fn pair_list(n: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn mask_connected(n: u32, pairs: &[(u32, u32)], mask: u64) -> bool {
    let mut adj = [0u16; 12];
    for (b, &(u, v)) in pairs.iter().enumerate() {
        if mask >> b & 1 == 1 {
            adj[(u - 1) as usize] |= 1 << (v - 1);
            adj[(v - 1) as usize] |= 1 << (u - 1);
        }
    }
    let all: u16 = (1u16 << n) - 1;
    let mut reach: u16 = 1;
    loop {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[i];
        }
        if next == reach {
            return reach == all;
        }
        reach = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn g1() -> Graph {
        Graph::undirected(4, &[(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn parse_g1_edge_list() {
        let g = Graph::parse_edge_list("U 4 5\n1 3\n1 4\n2 3\n2 4\n3 4").unwrap();
        assert_eq!(g, g1());
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn parse_trivial_and_comments() {
        let g = Graph::parse_edge_list("# one lonely vertex\nU 1 0").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_rejects_duplicates_with_line_number() {
        let err = Graph::parse_edge_list("U 3 3\n1 2\n1 2\n2 3").unwrap_err();
        match err {
            GraphError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        // reversed orientation is still the same undirected edge
        assert!(Graph::parse_edge_list("U 3 3\n1 2\n2 1\n2 3").is_err());
    }

    #[test]
    fn parse_rejects_self_loop_and_range() {
        assert!(Graph::parse_edge_list("U 3 1\n2 2").is_err());
        assert!(Graph::parse_edge_list("U 3 1\n1 4").is_err());
        assert!(Graph::parse_edge_list("U 3 1\n0 2").is_err());
    }

    #[test]
    fn parse_mixed_kinds() {
        let g = Graph::parse_edge_list("M 3 2\n1 2 U\n2 3 D").unwrap();
        assert_eq!(g.edges()[0].kind, EdgeKind::Undirected);
        assert_eq!(g.edges()[1].kind, EdgeKind::Directed);
        // directed duplicate of an undirected pair is rejected
        assert!(Graph::parse_edge_list("M 3 2\n1 2 U\n2 1 D").is_err());
        // opposite directed arcs are two distinct edges
        assert!(Graph::parse_edge_list("M 3 2\n1 2 D\n2 1 D").is_ok());
    }

    #[test]
    fn neighbors_match_g1() {
        let g = g1();
        let out: Vec<u32> = g
            .neighbors(VertexId::new(1), Direction::Out)
            .iter()
            .map(|v| v.get())
            .collect();
        assert_eq!(out, [3, 4]);
        let inn: Vec<u32> = g
            .neighbors(VertexId::new(3), Direction::In)
            .iter()
            .map(|v| v.get())
            .collect();
        assert_eq!(inn, [1, 2, 4]);
    }

    #[test]
    fn directed_sink_has_no_out_neighbors() {
        let g = Graph::new(
            2,
            alloc::vec![Edge {
                u: VertexId::new(1),
                v: VertexId::new(2),
                kind: EdgeKind::Directed,
            }],
        )
        .unwrap();
        assert!(g.neighbors(VertexId::new(2), Direction::Out).is_empty());
        assert_eq!(g.neighbors(VertexId::new(2), Direction::In).len(), 1);
    }

    #[test]
    fn undirected_in_equals_out() {
        let g = g1();
        for v in g.vertices() {
            assert_eq!(
                g.neighbors(v, Direction::In),
                g.neighbors(v, Direction::Out)
            );
        }
    }

    #[test]
    fn connectivity() {
        assert!(g1().is_connected());
        assert!(!Graph::undirected(2, &[]).unwrap().is_connected());
        assert!(Graph::undirected(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn edge_list_round_trip() {
        for g in [g1(), Graph::complete(5), Graph::undirected(1, &[]).unwrap()] {
            let text = g.serialize_edge_list();
            assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        }
    }

    #[test]
    fn graph6_known_codes() {
        let k3 = Graph::from_graph6("Bw").unwrap();
        assert_eq!(k3, Graph::complete(3));
        let single = Graph::from_graph6("@").unwrap();
        assert_eq!(single.n(), 1);
        assert_eq!(single.edge_count(), 0);
        assert_eq!(Graph::complete(3).to_graph6().unwrap(), "Bw");
    }

    #[test]
    fn graph6_round_trip_g1() {
        let g = g1();
        let code = g.to_graph6().unwrap();
        assert_eq!(Graph::from_graph6(&code).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("B").is_err()); // truncated payload
        assert!(Graph::from_graph6("B\u{1}").is_err()); // bad byte
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_connected_labeled(1, false).unwrap().count(), 1);
        assert_eq!(enumerate_connected_labeled(3, false).unwrap().count(), 4);
        assert_eq!(enumerate_connected_labeled(4, false).unwrap().count(), 38);
        assert!(enumerate_connected_labeled(8, false).is_err());
        assert!(enumerate_connected_labeled(0, false).is_err());
    }

    #[test]
    fn enumeration_agrees_with_independent_filter() {
        // Independent oracle: filter the full 2^C(n,2) space with a
        // Graph-level connectivity check.
        for n in 1..=5u32 {
            let pairs = pair_list(n);
            let mut expect = 0u64;
            for mask in 0u64..(1 << pairs.len()) {
                let selected: Vec<(u32, u32)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                if Graph::undirected(n, &selected).unwrap().is_connected() {
                    expect += 1;
                }
            }
            let got = enumerate_connected_labeled(n, false).unwrap().count() as u64;
            assert_eq!(got, expect, "n={n}");
        }
    }

    #[test]
    fn enumerated_graphs_are_connected_with_enough_edges() {
        for g in enumerate_connected_labeled(4, false).unwrap() {
            assert!(g.is_connected());
            assert!(g.edge_count() >= 3);
        }
    }
}
