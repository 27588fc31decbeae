//! Consistency maintenance for the joining step: when vertex `u` joins a
//! parent's path set, every duplicate occurrence of `u` is deleted,
//! deletions cascade through the action fields of unsupported neighbors
//! (deleting-replenishing), and single-member levels then hunt their own
//! duplicates until a sweep pass deletes nothing. Any emptied level or an
//! all-blocked branching level invalidates the join.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::graph::{Direction, Graph, VertexId};
use crate::hologram::{Hologram, HologramVertex};
use crate::pathset::{meet_has_empty, PathSet, SegmentSet, ValidPathSet};

/// Per-hologram-vertex path sets: the DP state. Entries exist for every
/// hologram vertex from construction on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSetTable {
    start: VertexId,
    levels: Vec<BTreeMap<VertexId, PathSet>>,
}

impl PathSetTable {
    /// Fresh table with every vertex at its trivial `{{u}}` value.
    pub fn new(h: &Hologram) -> Self {
        let mut levels = Vec::with_capacity(h.level_count() + 1);
        for k in 0..=h.level_count() {
            let mut m = BTreeMap::new();
            for u in h.vertices_at(k) {
                m.insert(u, PathSet::init(u, k));
            }
            levels.push(m);
        }
        PathSetTable {
            start: h.start(),
            levels,
        }
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn level_count(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn get(&self, hv: HologramVertex) -> &PathSet {
        self.levels[hv.level]
            .get(&hv.vertex)
            .expect("path set table holds every hologram vertex")
    }

    pub fn set(&mut self, hv: HologramVertex, ps: PathSet) {
        let slot = self.levels[hv.level]
            .get_mut(&hv.vertex)
            .expect("path set table holds every hologram vertex");
        *slot = ps;
    }

    /// All entries, level ascending then vertex ascending.
    pub fn iter(&self) -> impl Iterator<Item = (HologramVertex, &PathSet)> {
        self.levels.iter().enumerate().flat_map(|(k, m)| {
            m.iter()
                .map(move |(&u, ps)| (HologramVertex::new(u, k), ps))
        })
    }

    /// Deterministic text rendering, one `PS[<u,k>] = ...` line per entry.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (hv, ps) in self.iter() {
            let _ = writeln!(out, "PS[{hv}] = {ps}");
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinEvent {
    Delete { vertex: VertexId, level: usize },
    Replenish { vertex: VertexId, level: usize },
}

/// What a consistency run did, in order: every deletion and every
/// replenished (retained) cascade candidate, the per-burst deleted
/// fragments, and how many sweep passes actually deleted something.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JoinTrace {
    pub events: Vec<JoinEvent>,
    pub deleted_fragments: Vec<Vec<(VertexId, usize)>>,
    pub singleton_passes: u64,
    pub invalidated: bool,
}

impl JoinTrace {
    pub fn deletions(&self) -> Vec<(VertexId, usize)> {
        self.events
            .iter()
            .filter_map(|e| match e {
                JoinEvent::Delete { vertex, level } => Some((*vertex, *level)),
                _ => None,
            })
            .collect()
    }

    pub fn replenished(&self) -> Vec<(VertexId, usize)> {
        self.events
            .iter()
            .filter_map(|e| match e {
                JoinEvent::Replenish { vertex, level } => Some((*vertex, *level)),
                _ => None,
            })
            .collect()
    }

    /// Line-oriented log, one event per line.
    pub fn log(&self) -> String {
        let mut out = String::new();
        for e in &self.events {
            match e {
                JoinEvent::Delete { vertex, level } => {
                    let _ = writeln!(out, "delete {vertex} @{level}");
                }
                JoinEvent::Replenish { vertex, level } => {
                    let _ = writeln!(out, "retain {vertex} @{level}");
                }
            }
        }
        let _ = writeln!(out, "singleton-passes {}", self.singleton_passes);
        let _ = writeln!(
            out,
            "result {}",
            if self.invalidated { "invalid" } else { "valid" }
        );
        out
    }
}

/// A path set under modification. Unlike [`ValidPathSet`] its levels may
/// be empty; callers test for that and bail out to the Invalid sentinel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkingSet {
    base: usize,
    sets: Vec<SegmentSet>,
}

impl WorkingSet {
    pub fn from_valid(ps: &ValidPathSet) -> Self {
        WorkingSet {
            base: ps.base_level(),
            sets: ps.levels().map(|(_, s)| s.clone()).collect(),
        }
    }

    /// Assemble directly; empties are allowed here.
    pub fn from_levels(base: usize, sets: Vec<SegmentSet>) -> Self {
        assert!(!sets.is_empty());
        WorkingSet { base, sets }
    }

    pub fn base_level(&self) -> usize {
        self.base
    }

    pub fn end_level(&self) -> usize {
        self.base + self.sets.len() - 1
    }

    pub fn get(&self, level: usize) -> &SegmentSet {
        &self.sets[level - self.base]
    }

    fn get_mut(&mut self, level: usize) -> &mut SegmentSet {
        &mut self.sets[level - self.base]
    }

    pub fn segment_sets(&self) -> &[SegmentSet] {
        &self.sets
    }

    pub fn has_empty(&self) -> bool {
        self.sets.iter().any(SegmentSet::is_empty)
    }

    fn into_valid(self) -> ValidPathSet {
        ValidPathSet::from_parts(self.base, self.sets)
    }
}

/// Walk leftward from `level` after `deleted` was removed there: level
/// `level-1` members supported only by the deleted vertex are deleted in
/// turn, members supported by a survivor are retained ("replenished"),
/// and the walk recurses until nothing is deleted or the base is hit.
pub fn cascade_left(
    w: &mut WorkingSet,
    deleted: VertexId,
    level: usize,
    g: &Graph,
    trace: &mut JoinTrace,
) {
    cascade(w, deleted, level, g, trace, Direction::In)
}

/// Mirror of [`cascade_left`] walking rightward to the end level.
pub fn cascade_right(
    w: &mut WorkingSet,
    deleted: VertexId,
    level: usize,
    g: &Graph,
    trace: &mut JoinTrace,
) {
    cascade(w, deleted, level, g, trace, Direction::Out)
}

fn cascade(
    w: &mut WorkingSet,
    deleted: VertexId,
    level: usize,
    g: &Graph,
    trace: &mut JoinTrace,
    dir: Direction,
) {
    debug_assert!(
        !w.get(level).contains(&deleted),
        "vertex must be deleted first"
    );
    let boundary = match dir {
        Direction::In => w.base_level(),
        Direction::Out => w.end_level(),
    };
    if level == boundary {
        return;
    }
    let step = |i: usize| match dir {
        Direction::In => i - 1,
        Direction::Out => i + 1,
    };
    let mut i = level;
    let adjacent = w.get(step(i));
    let mut candidates: SegmentSet = g.neighbors(deleted, dir) & adjacent;
    let mut supported = SegmentSet::new();
    for &y in w.get(i) {
        supported.extend(g.neighbors(y, dir) & adjacent);
    }
    while i != boundary {
        let doomed: Vec<VertexId> = candidates.difference(&supported).copied().collect();
        for &kept in candidates.intersection(&supported) {
            trace.events.push(JoinEvent::Replenish {
                vertex: kept,
                level: step(i),
            });
        }
        if doomed.is_empty() {
            return;
        }
        i = step(i);
        candidates.clear();
        supported.clear();
        for q in doomed {
            w.get_mut(i).remove(&q);
            trace.events.push(JoinEvent::Delete {
                vertex: q,
                level: i,
            });
            if i != boundary {
                candidates.extend(g.neighbors(q, dir) & w.get(step(i)));
            }
        }
        if i != boundary {
            let adjacent = w.get(step(i));
            for &y in w.get(i) {
                supported.extend(g.neighbors(y, dir) & adjacent);
            }
        }
    }
}

/// No-legal-path test: at the highest level holding more than one
/// member, every member's own path set must prefix-intersect the working
/// set without an empty level somewhere, or the join is dead.
pub fn dead_end(w: &WorkingSet, table: &PathSetTable) -> bool {
    for i in (w.base_level()..w.end_level()).rev() {
        let set = w.get(i);
        if set.len() > 1 {
            for &member in set {
                let ps = table
                    .get(HologramVertex::new(member, i))
                    .as_valid()
                    .expect("table path sets are valid");
                if !meet_has_empty(w.segment_sets(), w.base_level(), ps, i) {
                    return false;
                }
            }
            return true;
        }
    }
    false
}

/// Delete one occurrence, cascade both ways, and test viability.
/// Returns false when the working set is no longer usable.
fn deletion_burst(
    w: &mut WorkingSet,
    vertex: VertexId,
    level: usize,
    g: &Graph,
    table: &PathSetTable,
    trace: &mut JoinTrace,
) -> bool {
    let burst_start = trace.events.len();
    w.get_mut(level).remove(&vertex);
    trace.events.push(JoinEvent::Delete { vertex, level });
    let viable = if w.get(level).is_empty() {
        false
    } else {
        cascade_left(w, vertex, level, g, trace);
        cascade_right(w, vertex, level, g, trace);
        !w.has_empty() && !dead_end(w, table)
    };
    let fragment = trace.events[burst_start..]
        .iter()
        .filter_map(|e| match e {
            JoinEvent::Delete { vertex, level } => Some((*vertex, *level)),
            _ => None,
        })
        .collect();
    trace.deleted_fragments.push(fragment);
    viable
}

fn highest_occurrence(w: &WorkingSet, vertex: VertexId) -> Option<usize> {
    (w.base_level()..w.end_level())
        .rev()
        .find(|&i| w.get(i).contains(&vertex))
}

/// Attempt to extend `parent` by `joining` at `target_level` while
/// keeping all stored paths basic.
///
/// Stage 1 deletes every duplicate occurrence of the joining vertex,
/// highest level first, cascading after each. If anything was deleted,
/// stage 2 sweeps: each single-member level deletes its vertex's other
/// occurrences; a pass that deleted restarts the scan, and the sweep
/// stops once a pass deletes nothing. Emptied levels and dead ends
/// invalidate immediately. The final vertex bypass (an unconditional
/// join at the last level) is the driver's job, not handled here.
pub fn consistent_join(
    parent: &PathSet,
    joining: VertexId,
    target_level: usize,
    g: &Graph,
    table: &PathSetTable,
) -> (PathSet, JoinTrace) {
    let mut trace = JoinTrace::default();
    let vp = parent.as_valid().expect("parent path set must be valid");
    assert_eq!(
        vp.end_level() + 1,
        target_level,
        "join must extend the parent by exactly one level"
    );
    assert_ne!(
        vp.end_vertex(),
        joining,
        "joining vertex equals the parent's end vertex"
    );

    let mut w = WorkingSet::from_valid(vp);

    let mut conflicted = false;
    while let Some(level) = highest_occurrence(&w, joining) {
        conflicted = true;
        if !deletion_burst(&mut w, joining, level, g, table, &mut trace) {
            trace.invalidated = true;
            return (PathSet::Invalid, trace);
        }
    }

    if !conflicted {
        // no conflict: the join is immediate and the sweep never runs
        return (PathSet::Valid(vp.join(joining)), trace);
    }

    loop {
        let mut deleted = false;
        'scan: for j in (w.base_level()..w.end_level()).rev() {
            if w.get(j).len() != 1 {
                continue;
            }
            let z = *w.get(j).iter().next().expect("singleton");
            let duplicate_levels: Vec<usize> = (w.base_level()..=w.end_level())
                .rev()
                .filter(|&i| i != j && w.get(i).contains(&z))
                .collect();
            for i in duplicate_levels {
                if !w.get(i).contains(&z) {
                    continue; // an earlier cascade already removed it
                }
                if !deletion_burst(&mut w, z, i, g, table, &mut trace) {
                    trace.singleton_passes += 1;
                    trace.invalidated = true;
                    return (PathSet::Invalid, trace);
                }
                deleted = true;
            }
            if deleted {
                break 'scan;
            }
        }
        if deleted {
            trace.singleton_passes += 1;
        } else {
            break;
        }
    }

    if w.has_empty() || dead_end(&w, table) {
        trace.invalidated = true;
        return (PathSet::Invalid, trace);
    }
    (PathSet::Valid(w.into_valid().join(joining)), trace)
}
