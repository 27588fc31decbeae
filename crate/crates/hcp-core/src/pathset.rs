//! Path sets: per-level vertex unions over the longest basic paths ending
//! at a hologram vertex. Segment sets are indexed by absolute level; a
//! path set stores its base level explicitly so unions and intersections
//! align even when paths start mid-hologram.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::graph::{Direction, Graph, VertexId};

/// One level's vertex set within a path set.
pub type SegmentSet = BTreeSet<VertexId>;

/// Either the `{∅}` sentinel (no basic path through this parent) or a
/// contiguous run of nonempty segment sets.
#[derive(Clone, PartialEq, Eq)]
pub enum PathSet {
    Invalid,
    Valid(ValidPathSet),
}

/// Nonempty segment sets over absolute levels `base..=end`; the end set
/// is always the singleton of the owning vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct ValidPathSet {
    base: usize,
    sets: Vec<SegmentSet>,
}

impl PathSet {
    /// The trivial path set `{{u}}` at level `k`.
    pub fn init(u: VertexId, level: usize) -> PathSet {
        let mut s = SegmentSet::new();
        s.insert(u);
        PathSet::Valid(ValidPathSet {
            base: level,
            sets: alloc::vec![s],
        })
    }

    pub fn is_valid(&self) -> bool {
        matches!(self, PathSet::Valid(_))
    }

    pub fn as_valid(&self) -> Option<&ValidPathSet> {
        match self {
            PathSet::Invalid => None,
            PathSet::Valid(v) => Some(v),
        }
    }

    /// Number of segment sets (0 for Invalid).
    pub fn len(&self) -> usize {
        match self {
            PathSet::Invalid => 0,
            PathSet::Valid(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Append `{u}` one level past the end. Invalid absorbs.
    pub fn join(&self, u: VertexId) -> PathSet {
        match self {
            PathSet::Invalid => PathSet::Invalid,
            PathSet::Valid(v) => PathSet::Valid(v.join(u)),
        }
    }

    /// Longest-path merge: keep the longer input; union level-wise on
    /// equal length. An Invalid incoming set leaves `self` unchanged.
    ///
    /// Panics if two valid inputs of equal length disagree on the end
    /// vertex or end level; that is a driver bug, not a data condition.
    pub fn merge_longest(self, incoming: PathSet) -> PathSet {
        let PathSet::Valid(inc) = incoming else {
            return self;
        };
        let PathSet::Valid(cur) = self else {
            return PathSet::Valid(inc);
        };
        if inc.len() < cur.len() {
            return PathSet::Valid(cur);
        }
        if inc.len() > cur.len() {
            return PathSet::Valid(inc);
        }
        assert_eq!(
            (cur.end_level(), cur.end_vertex()),
            (inc.end_level(), inc.end_vertex()),
            "merge of equal-length path sets with different ends"
        );
        // equal length + equal end level => equal base
        let mut sets = cur.sets;
        for (mine, theirs) in sets.iter_mut().zip(inc.sets.iter()) {
            mine.extend(theirs.iter().copied());
        }
        PathSet::Valid(ValidPathSet {
            base: cur.base,
            sets,
        })
    }

    /// Canonical text form: levels ascending, members ascending,
    /// e.g. `{{1},{3,4},{2}}`. Invalid renders as `{{}}`.
    pub fn render(&self) -> String {
        let mut out = String::from("{");
        match self {
            PathSet::Invalid => out.push_str("{}"),
            PathSet::Valid(v) => {
                for (i, set) in v.sets.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('{');
                    for (j, m) in set.iter().enumerate() {
                        if j > 0 {
                            out.push(',');
                        }
                        let _ = write!(out, "{m}");
                    }
                    out.push('}');
                }
            }
        }
        out.push('}');
        out
    }
}

impl fmt::Display for PathSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for PathSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathSet::Invalid => f.write_str("{{}}"),
            PathSet::Valid(v) => write!(f, "{}@{}", self.render(), v.base),
        }
    }
}

impl ValidPathSet {
    /// Assemble from parts. Panics on empty levels or a non-singleton
    /// end set; construction sites must uphold the type invariants.
    pub fn from_parts(base: usize, sets: Vec<SegmentSet>) -> ValidPathSet {
        assert!(!sets.is_empty(), "path set needs at least one level");
        assert!(
            sets.iter().all(|s| !s.is_empty()),
            "valid path sets have no empty segment sets"
        );
        assert_eq!(sets.last().unwrap().len(), 1, "end set must be a singleton");
        ValidPathSet { base, sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn base_level(&self) -> usize {
        self.base
    }

    pub fn end_level(&self) -> usize {
        self.base + self.sets.len() - 1
    }

    pub fn end_vertex(&self) -> VertexId {
        *self
            .sets
            .last()
            .expect("nonempty")
            .iter()
            .next()
            .expect("end set is a singleton")
    }

    /// Segment set at an absolute level, if covered.
    pub fn get(&self, level: usize) -> Option<&SegmentSet> {
        if level < self.base {
            return None;
        }
        self.sets.get(level - self.base)
    }

    /// (absolute level, segment set) pairs, ascending.
    pub fn levels(&self) -> impl Iterator<Item = (usize, &SegmentSet)> {
        self.sets
            .iter()
            .enumerate()
            .map(|(i, s)| (self.base + i, s))
    }

    pub fn join(&self, u: VertexId) -> ValidPathSet {
        let mut sets = self.sets.clone();
        let mut tail = SegmentSet::new();
        tail.insert(u);
        sets.push(tail);
        ValidPathSet {
            base: self.base,
            sets,
        }
    }

    /// N⁻(v) ∩ sets[level-1]; empty at the base level.
    pub fn left_action_field(&self, g: &Graph, v: VertexId, level: usize) -> SegmentSet {
        debug_assert!(self.get(level).is_some_and(|s| s.contains(&v)));
        if level <= self.base {
            return SegmentSet::new();
        }
        match self.get(level - 1) {
            Some(below) => g.neighbors(v, Direction::In) & below,
            None => SegmentSet::new(),
        }
    }

    /// N⁺(v) ∩ sets[level+1]; empty at the end level.
    pub fn right_action_field(&self, g: &Graph, v: VertexId, level: usize) -> SegmentSet {
        debug_assert!(self.get(level).is_some_and(|s| s.contains(&v)));
        if level >= self.end_level() {
            return SegmentSet::new();
        }
        match self.get(level + 1) {
            Some(above) => g.neighbors(v, Direction::Out) & above,
            None => SegmentSet::new(),
        }
    }
}

impl fmt::Debug for ValidPathSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", PathSet::Valid(self.clone()))
    }
}

/// Level-wise intersection of a prefix with a path set; levels the path
/// set does not cover intersect to empty. Empty levels are data here,
/// consumed by the backward search's legality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixMeet {
    pub base: usize,
    pub sets: Vec<SegmentSet>,
    pub has_empty: bool,
}

/// Intersect `prefix` (absolute levels `prefix_base..`) with `ps` over
/// levels `prefix_base..=top`.
pub fn meet_prefix(
    prefix: &[SegmentSet],
    prefix_base: usize,
    ps: &ValidPathSet,
    top: usize,
) -> PrefixMeet {
    debug_assert!(top >= prefix_base && top - prefix_base < prefix.len());
    let mut sets = Vec::with_capacity(top - prefix_base + 1);
    let mut has_empty = false;
    for level in prefix_base..=top {
        let meet = match ps.get(level) {
            Some(theirs) => &prefix[level - prefix_base] & theirs,
            None => SegmentSet::new(),
        };
        has_empty |= meet.is_empty();
        sets.push(meet);
    }
    PrefixMeet {
        base: prefix_base,
        sets,
        has_empty,
    }
}

/// The backward-search form: intersect the running prefix `pstemp` with
/// `ps_v` over levels `pstemp.base..=top`.
pub fn prefix_intersect(pstemp: &ValidPathSet, ps_v: &ValidPathSet, top: usize) -> PrefixMeet {
    meet_prefix(&pstemp.sets, pstemp.base, ps_v, top)
}

/// Short-circuiting variant: does the intersection contain an empty
/// level anywhere in `lo..=top`?
pub fn meet_has_empty(
    prefix: &[SegmentSet],
    prefix_base: usize,
    ps: &ValidPathSet,
    top: usize,
) -> bool {
    for level in (prefix_base..=top).rev() {
        match ps.get(level) {
            None => return true,
            Some(theirs) => {
                if prefix[level - prefix_base]
                    .intersection(theirs)
                    .next()
                    .is_none()
                {
                    return true;
                }
            }
        }
    }
    false
}
