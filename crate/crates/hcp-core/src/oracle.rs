//! Ground truth by exhaustive search: backtracking cycle/path finders,
//! directed cycle counting from a fixed start, and the declarative
//! reading of path sets (per-level unions over all longest basic paths),
//! all independent of the table-filling pipeline they are used to check.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Direction, Graph, VertexId};
use crate::hologram::{Hologram, HologramVertex};
use crate::pathset::{PathSet, SegmentSet, ValidPathSet};
use crate::solver::verify_cycle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The exhaustive reference is limited to small holograms.
    GuardExceeded { n: u32, max: u32 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::GuardExceeded { n, max } => {
                write!(
                    f,
                    "exhaustive path-set reference guarded to n <= {max}, got n = {n}"
                )
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// First Hamiltonian cycle through `start` in ascending DFS order, or
/// None after exhausting the search space. Orders below 3 have none.
pub fn hamiltonian_cycle(g: &Graph, start: VertexId) -> Option<Vec<VertexId>> {
    let n = g.n();
    if n < 3 || !g.contains_vertex(start) {
        return None;
    }
    // cheap prune: an undirected Hamiltonian graph has min degree >= 2
    if g.is_undirected() && g.vertices().any(|v| g.degree(v) < 2) {
        return None;
    }
    let mut path = alloc::vec![start];
    let mut visited = BTreeSet::new();
    visited.insert(start);
    if extend_cycle(g, start, &mut path, &mut visited) {
        debug_assert!(verify_cycle(g, &path));
        return Some(path);
    }
    None
}

fn extend_cycle(
    g: &Graph,
    start: VertexId,
    path: &mut Vec<VertexId>,
    visited: &mut BTreeSet<VertexId>,
) -> bool {
    let cur = *path.last().expect("path never empty");
    if path.len() == g.n() as usize {
        if g.has_edge(cur, start) {
            path.push(start);
            return true;
        }
        return false;
    }
    for &next in g.neighbors(cur, Direction::Out) {
        if visited.insert(next) {
            path.push(next);
            if extend_cycle(g, start, path, visited) {
                return true;
            }
            path.pop();
            visited.remove(&next);
        }
    }
    false
}

/// Number of distinct directed Hamiltonian circuits beginning and ending
/// at `start`; both orientations of an undirected cycle count.
pub fn count_cycles(g: &Graph, start: VertexId) -> u64 {
    if g.n() < 3 || !g.contains_vertex(start) {
        return 0;
    }
    let mut visited = BTreeSet::new();
    visited.insert(start);
    count_from(g, start, start, &mut visited, 1)
}

fn count_from(
    g: &Graph,
    start: VertexId,
    cur: VertexId,
    visited: &mut BTreeSet<VertexId>,
    depth: usize,
) -> u64 {
    if depth == g.n() as usize {
        return u64::from(g.has_edge(cur, start));
    }
    let mut total = 0;
    for &next in g.neighbors(cur, Direction::Out) {
        if visited.insert(next) {
            total += count_from(g, start, next, visited, depth + 1);
            visited.remove(&next);
        }
    }
    total
}

/// First Hamiltonian path over any start vertex, ascending.
pub fn hamiltonian_path(g: &Graph) -> Option<Vec<VertexId>> {
    let n = g.n();
    if n == 1 {
        return Some(alloc::vec![VertexId::new(1)]);
    }
    for s in g.vertices() {
        let mut path = alloc::vec![s];
        let mut visited = BTreeSet::new();
        visited.insert(s);
        if extend_path(g, &mut path, &mut visited) {
            return Some(path);
        }
    }
    None
}

fn extend_path(g: &Graph, path: &mut Vec<VertexId>, visited: &mut BTreeSet<VertexId>) -> bool {
    if path.len() == g.n() as usize {
        return true;
    }
    let cur = *path.last().expect("path never empty");
    for &next in g.neighbors(cur, Direction::Out) {
        if visited.insert(next) {
            path.push(next);
            if extend_path(g, path, visited) {
                return true;
            }
            path.pop();
            visited.remove(&next);
        }
    }
    false
}

/// Does the hologram hold a basic path from its initial vertex to its
/// final vertex (all original labels distinct)?
pub fn has_basic_path(h: &Hologram) -> bool {
    let s = h.initial_vertex();
    let mut visited = BTreeSet::new();
    visited.insert(s.vertex);
    basic_dfs(h, s, &mut visited)
}

fn basic_dfs(h: &Hologram, cur: HologramVertex, visited: &mut BTreeSet<VertexId>) -> bool {
    if cur == h.final_vertex() {
        return true;
    }
    for &next in h.children(cur) {
        let hv = HologramVertex::new(next, cur.level + 1);
        if hv == h.final_vertex() {
            return true;
        }
        if visited.insert(next) {
            if basic_dfs(h, hv, visited) {
                return true;
            }
            visited.remove(&next);
        }
    }
    false
}

/// Guard for the exhaustive path-set reference.
pub const BASIC_PATH_SET_GUARD: u32 = 6;

/// The declarative path-set value at `target`: enumerate every basic
/// path ending there that starts at the initial vertex or at any vertex
/// on levels 1..k-1, keep the longest, and union per level. Falls back
/// to `{{u}}` when no such path exists.
pub fn basic_path_sets(h: &Hologram, target: HologramVertex) -> Result<PathSet, OracleError> {
    if h.n() > BASIC_PATH_SET_GUARD {
        return Err(OracleError::GuardExceeded {
            n: h.n(),
            max: BASIC_PATH_SET_GUARD,
        });
    }
    let mut best_len = 1usize;
    let mut best_sets: Vec<SegmentSet> = Vec::new();
    let mut stack = alloc::vec![target.vertex];
    let mut visited = BTreeSet::new();
    // The final vertex closes on the start label: a full path carries it
    // at level 0 and level L. The start never appears at middle levels,
    // so leaving it unmarked only ever re-admits it at the base.
    if target != h.final_vertex() {
        visited.insert(target.vertex);
    }
    collect_backward(
        h,
        target,
        &mut stack,
        &mut visited,
        &mut best_len,
        &mut best_sets,
    );
    if best_len < 2 {
        return Ok(PathSet::init(target.vertex, target.level));
    }
    let base = target.level + 1 - best_len;
    Ok(PathSet::Valid(ValidPathSet::from_parts(base, best_sets)))
}

fn collect_backward(
    h: &Hologram,
    cur: HologramVertex,
    stack: &mut Vec<VertexId>,
    visited: &mut BTreeSet<VertexId>,
    best_len: &mut usize,
    best_sets: &mut Vec<SegmentSet>,
) {
    // `stack` holds labels target-downward; starts are legal at every
    // level >= 1 and at level 0 (the initial vertex), so every prefix of
    // length >= 2 counts as a path.
    if stack.len() >= 2 {
        let len = stack.len();
        if len > *best_len {
            *best_len = len;
            *best_sets = stack
                .iter()
                .rev()
                .map(|&v| [v].into_iter().collect())
                .collect();
        } else if len == *best_len {
            for (i, &v) in stack.iter().rev().enumerate() {
                best_sets[i].insert(v);
            }
        }
    }
    if cur.level == 0 {
        return;
    }
    for &p in h.parents(cur) {
        if visited.insert(p) {
            stack.push(p);
            collect_backward(
                h,
                HologramVertex::new(p, cur.level - 1),
                stack,
                visited,
                best_len,
                best_sets,
            );
            stack.pop();
            visited.remove(&p);
        }
    }
}
