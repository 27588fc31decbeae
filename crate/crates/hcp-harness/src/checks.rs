//! Reusable invariant checkers shared by the acceptance suite.

use hcp_core::consistency::consistent_join;
use hcp_core::hologram::HologramVertex;
use hcp_core::pathset::PathSet;
use hcp_core::solver::propagate;
use hcp_core::{Graph, Hologram, VertexId};

/// Hologram size laws for undirected graphs:
/// |V_H| = (n-1)^2 + 2 and |E_H| = 2 deg(s) + 2 (n-2)(e - deg(s)).
pub fn check_hologram_size(g: &Graph, h: &Hologram) -> Result<(), String> {
    assert!(g.is_undirected());
    let n = g.n() as usize;
    let e = g.edge_count();
    let ds = g.degree(h.start());
    let want_v = (n - 1) * (n - 1) + 2;
    let want_e = if n >= 2 {
        2 * ds + 2 * n.saturating_sub(2) * (e - ds)
    } else {
        0
    };
    if h.vertex_count() != want_v {
        return Err(format!(
            "vertex count {} != {} for {}",
            h.vertex_count(),
            want_v,
            g.serialize_edge_list()
        ));
    }
    if h.edge_count() != want_e {
        return Err(format!(
            "edge count {} != {} for {}",
            h.edge_count(),
            want_e,
            g.serialize_edge_list()
        ));
    }
    Ok(())
}

/// Replay every join that arises when solving `g` and check the
/// consistency-engine guarantees: determinism, the sweep-pass bound,
/// shrink-only levels, and no surviving duplicate of the joined vertex.
pub fn check_join_invariants(g: &Graph) -> Result<(), String> {
    let h = Hologram::build(g, VertexId::new(1)).map_err(|e| e.to_string())?;
    let (table, _) = propagate(&h, g, None);
    let n = g.n() as usize;
    for k in 1..h.level_count() {
        for u in h.vertices_at(k).collect::<Vec<_>>() {
            let target = HologramVertex::new(u, k);
            for &p in h.parents(target) {
                let parent_ps = table.get(HologramVertex::new(p, k - 1));
                let (out, trace) = consistent_join(parent_ps, u, k, g, &table);
                if (out.clone(), trace.clone()) != consistent_join(parent_ps, u, k, g, &table) {
                    return Err(format!("nondeterministic join at {target} via {p}"));
                }
                if trace.singleton_passes > ((n - 1) * (n - 1)) as u64 {
                    return Err(format!("sweep bound exceeded at {target} via {p}"));
                }
                if let PathSet::Valid(vps) = &out {
                    let pv = parent_ps.as_valid().expect("table entries are valid");
                    for (level, set) in vps.levels() {
                        if level == k {
                            continue;
                        }
                        let parent_level = pv
                            .get(level)
                            .ok_or_else(|| format!("result outgrew parent at {target}"))?;
                        if !set.is_subset(parent_level) {
                            return Err(format!("shrink-only violated at {target} level {level}"));
                        }
                        if set.contains(&u) {
                            return Err(format!("duplicate of {u} survived at {target}"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The hologram holds a basic path from its initial to its final vertex
/// iff the graph has a Hamiltonian cycle (both sides by brute force).
pub fn check_basic_path_equivalence(g: &Graph) -> Result<(), String> {
    let h = Hologram::build(g, VertexId::new(1)).map_err(|e| e.to_string())?;
    let via_hologram = hcp_core::oracle::has_basic_path(&h);
    let via_graph = hcp_core::oracle::hamiltonian_cycle(g, VertexId::new(1)).is_some();
    if via_hologram != via_graph {
        return Err(format!(
            "basic-path existence {} but oracle hamiltonicity {} for {}",
            via_hologram,
            via_graph,
            g.serialize_edge_list()
        ));
    }
    Ok(())
}
