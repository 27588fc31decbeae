//! The layered expansion of an original graph: every non-start vertex is
//! replicated once per segment level, the start vertex appears only as the
//! initial vertex (level 0) and the final vertex (level L), and every
//! original edge becomes level-advancing directed edges.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::graph::{EdgeKind, Graph, GraphError, VertexId};

/// A replicated vertex `<u, k>`: original vertex `u` at segment level `k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HologramVertex {
    pub vertex: VertexId,
    pub level: usize,
}

impl HologramVertex {
    pub fn new(vertex: VertexId, level: usize) -> Self {
        HologramVertex { vertex, level }
    }
}

impl fmt::Display for HologramVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.vertex, self.level)
    }
}

impl fmt::Debug for HologramVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.vertex, self.level)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HologramError {
    StartOutOfRange { start: u32, n: u32 },
    Disconnected,
}

impl fmt::Display for HologramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HologramError::StartOutOfRange { start, n } => {
                write!(f, "start vertex {start} out of range 1..={n}")
            }
            HologramError::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl core::error::Error for HologramError {}

impl From<HologramError> for GraphError {
    fn from(e: HologramError) -> Self {
        GraphError::Invalid { msg: e.to_string() }
    }
}

/// Layered DAG with `level_count + 1` layers. Vertices for u != start are
/// materialized at every level 1..level_count-1 even when unreachable.
#[derive(Clone, Debug)]
pub struct Hologram {
    n: u32,
    start: VertexId,
    level_count: usize,
    /// parents[k][u] = original ids w with an edge <w,k-1> -> <u,k>.
    parents: Vec<BTreeMap<VertexId, BTreeSet<VertexId>>>,
    /// children[k][u] = original ids w with an edge <u,k> -> <w,k+1>.
    children: Vec<BTreeMap<VertexId, BTreeSet<VertexId>>>,
}

impl Hologram {
    /// Build the hologram for a connected graph.
    pub fn build(g: &Graph, start: VertexId) -> Result<Self, HologramError> {
        if !g.contains_vertex(start) {
            return Err(HologramError::StartOutOfRange {
                start: start.get(),
                n: g.n(),
            });
        }
        if !g.is_connected() {
            return Err(HologramError::Disconnected);
        }
        Ok(Self::build_unchecked(g, start))
    }

    /// Build without the connectivity check (the layer structure does not
    /// require it; the solver contract does).
    pub fn build_unchecked(g: &Graph, start: VertexId) -> Self {
        assert!(g.contains_vertex(start), "start vertex out of range");
        let n = g.n();
        let level_count = n as usize;
        let mut h = Hologram {
            n,
            start,
            level_count,
            parents: Vec::with_capacity(level_count + 1),
            children: Vec::with_capacity(level_count + 1),
        };
        for k in 0..=level_count {
            let mut pmap = BTreeMap::new();
            let mut cmap = BTreeMap::new();
            if k == 0 || k == level_count {
                pmap.insert(start, BTreeSet::new());
                cmap.insert(start, BTreeSet::new());
            } else {
                for u in g.vertices().filter(|&u| u != start) {
                    pmap.insert(u, BTreeSet::new());
                    cmap.insert(u, BTreeSet::new());
                }
            }
            h.parents.push(pmap);
            h.children.push(cmap);
        }

        let last = level_count; // L
        for e in g.edges() {
            let both = e.kind == EdgeKind::Undirected;
            for (a, b) in core::iter::once((e.u, e.v)).chain(both.then_some((e.v, e.u))) {
                if a == start {
                    h.add_edge(0, start, b);
                } else if b == start {
                    h.add_edge(last - 1, a, start);
                } else if last >= 3 {
                    // replicate at k -> k+1 for 1 <= k <= L-2
                    for k in 1..=last - 2 {
                        h.add_edge(k, a, b);
                    }
                }
            }
        }
        h
    }

    fn add_edge(&mut self, k: usize, from: VertexId, to: VertexId) {
        self.children[k]
            .get_mut(&from)
            .expect("from vertex exists at level k")
            .insert(to);
        self.parents[k + 1]
            .get_mut(&to)
            .expect("to vertex exists at level k+1")
            .insert(from);
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    /// L: the number of segment levels (= |V| of the original graph).
    pub fn level_count(&self) -> usize {
        self.level_count
    }

    /// S = <start, 0>.
    pub fn initial_vertex(&self) -> HologramVertex {
        HologramVertex::new(self.start, 0)
    }

    /// D = <start, L>.
    pub fn final_vertex(&self) -> HologramVertex {
        HologramVertex::new(self.start, self.level_count)
    }

    pub fn contains(&self, hv: HologramVertex) -> bool {
        hv.level <= self.level_count && self.parents[hv.level].contains_key(&hv.vertex)
    }

    /// Original ids present at a level, ascending.
    pub fn vertices_at(&self, level: usize) -> impl Iterator<Item = VertexId> + '_ {
        self.parents[level].keys().copied()
    }

    /// Parent original ids (at level k-1) of `<u, k>`, ascending.
    pub fn parents(&self, hv: HologramVertex) -> &BTreeSet<VertexId> {
        self.parents[hv.level]
            .get(&hv.vertex)
            .expect("hologram vertex exists")
    }

    /// Child original ids (at level k+1) of `<u, k>`, ascending.
    pub fn children(&self, hv: HologramVertex) -> &BTreeSet<VertexId> {
        self.children[hv.level]
            .get(&hv.vertex)
            .expect("hologram vertex exists")
    }

    pub fn vertex_count(&self) -> usize {
        self.parents.iter().map(BTreeMap::len).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.children
            .iter()
            .flat_map(|m| m.values())
            .map(BTreeSet::len)
            .sum()
    }

    /// Deterministic DOT rendering: one rank per level, vertices ascending.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hologram {\n  rankdir=LR;\n  node [shape=circle];\n");
        for k in 0..=self.level_count {
            let _ = write!(out, "  {{ rank=same;");
            for u in self.vertices_at(k) {
                let _ = write!(out, " n{k}_{u};");
            }
            out.push_str(" }\n");
        }
        for k in 0..=self.level_count {
            for u in self.vertices_at(k) {
                let _ = writeln!(out, "  n{k}_{u} [label=\"<{u},{k}>\"];");
            }
        }
        for k in 0..self.level_count {
            for u in self.vertices_at(k) {
                for w in self.children(HologramVertex::new(u, k)) {
                    let _ = writeln!(out, "  n{k}_{u} -> n{}_{w};", k + 1);
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use alloc::vec;

    fn g1() -> Graph {
        Graph::undirected(4, &[(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn hv(u: u32, k: usize) -> HologramVertex {
        HologramVertex::new(VertexId::new(u), k)
    }

    #[test]
    fn g1_size_formulas() {
        let h = Hologram::build(&g1(), VertexId::new(1)).unwrap();
        // (n-1)^2 + 2 and 2 deg(s) + 2 (n-2)(e - deg(s))
        assert_eq!(h.vertex_count(), 11);
        assert_eq!(h.edge_count(), 16);
    }

    #[test]
    fn k5_size_formulas() {
        let h = Hologram::build(&Graph::complete(5), VertexId::new(1)).unwrap();
        assert_eq!(h.vertex_count(), 18);
        assert_eq!(h.edge_count(), 44);
    }

    #[test]
    fn g1_parent_sets() {
        let h = Hologram::build(&g1(), VertexId::new(1)).unwrap();
        let ps: Vec<u32> = h.parents(hv(2, 2)).iter().map(|v| v.get()).collect();
        assert_eq!(ps, [3, 4]);
        assert!(h.parents(hv(2, 1)).is_empty());
        assert!(h.parents(h.initial_vertex()).is_empty());
    }

    #[test]
    fn g1_child_sets() {
        let h = Hologram::build(&g1(), VertexId::new(1)).unwrap();
        let cs: Vec<u32> = h
            .children(h.initial_vertex())
            .iter()
            .map(|v| v.get())
            .collect();
        assert_eq!(cs, [3, 4]);
        assert!(h.children(h.final_vertex()).is_empty());
        assert!(h.children(hv(3, 1)).contains(&VertexId::new(2)));
    }

    #[test]
    fn layering_is_strict() {
        let h = Hologram::build(&g1(), VertexId::new(1)).unwrap();
        for k in 0..h.level_count() {
            for u in h.vertices_at(k) {
                for &w in h.children(hv(u.get(), k)) {
                    assert!(h.contains(HologramVertex::new(w, k + 1)));
                    assert!(h.parents(HologramVertex::new(w, k + 1)).contains(&u));
                }
            }
        }
    }

    #[test]
    fn directed_edge_replication() {
        // a single directed edge (2,3) away from the start in an order-5
        // digraph yields exactly n-2 = 3 hologram edges, none reversed
        let g = Graph::new(
            5,
            vec![
                Edge {
                    u: VertexId::new(1),
                    v: VertexId::new(2),
                    kind: EdgeKind::Directed,
                },
                Edge {
                    u: VertexId::new(2),
                    v: VertexId::new(3),
                    kind: EdgeKind::Directed,
                },
                Edge {
                    u: VertexId::new(3),
                    v: VertexId::new(4),
                    kind: EdgeKind::Directed,
                },
                Edge {
                    u: VertexId::new(4),
                    v: VertexId::new(5),
                    kind: EdgeKind::Directed,
                },
                Edge {
                    u: VertexId::new(5),
                    v: VertexId::new(1),
                    kind: EdgeKind::Directed,
                },
            ],
        )
        .unwrap();
        let h = Hologram::build(&g, VertexId::new(1)).unwrap();
        let mut fwd = 0;
        let mut rev = 0;
        for k in 1..=3 {
            if h.children(hv(2, k)).contains(&VertexId::new(3)) {
                fwd += 1;
            }
            if h.children(hv(3, k)).contains(&VertexId::new(2)) {
                rev += 1;
            }
        }
        assert_eq!((fwd, rev), (3, 0));
        // start-incident arcs appear only at their own boundary
        assert_eq!(h.children(h.initial_vertex()).len(), 1);
        assert_eq!(h.parents(h.final_vertex()).len(), 1);
    }

    #[test]
    fn dot_is_deterministic_with_expected_counts() {
        let h = Hologram::build(&Graph::complete(3), VertexId::new(1)).unwrap();
        let dot = h.to_dot();
        assert_eq!(dot, h.to_dot());
        assert_eq!(dot.matches("[label=").count(), 6);

        let hg1 = Hologram::build(&g1(), VertexId::new(1)).unwrap();
        assert_eq!(hg1.to_dot().matches(" -> ").count(), 16);
    }

    #[test]
    fn rejects_bad_start_and_disconnected() {
        assert!(Hologram::build(&g1(), VertexId::new(9)).is_err());
        let g = Graph::undirected(2, &[]).unwrap();
        assert!(Hologram::build(&g, VertexId::new(1)).is_err());
        // unchecked build still works on disconnected inputs
        let h = Hologram::build_unchecked(&g, VertexId::new(1));
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn tiny_orders() {
        let h = Hologram::build(&Graph::undirected(1, &[]).unwrap(), VertexId::new(1)).unwrap();
        assert_eq!(h.vertex_count(), 2); // S and D only
        let g2 = Graph::undirected(2, &[(1, 2)]).unwrap();
        let h2 = Hologram::build(&g2, VertexId::new(1)).unwrap();
        assert_eq!(h2.vertex_count(), 3);
        assert_eq!(h2.edge_count(), 2);
    }
}
