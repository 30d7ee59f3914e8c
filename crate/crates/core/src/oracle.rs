//! Brute-force ground truth.
//!
//! Dimension 1 goes through the simplicial-quotient construction: a formal
//! apex vertex is adjoined just before the first contraction, every
//! contracted vertex gains an edge to the apex and every contracted edge a
//! triangle over the apex, and the resulting filtration of a 2-complex is
//! reduced by the textbook left-to-right column algorithm. Dimension 0 is
//! tracked directly on the quotient graphs, recomputing components by
//! breadth-first search after every single simplex event. Neither path
//! shares state with the streaming engines.

use crate::diagram::{Mode, PersistenceDiagram};
use crate::events::{EventKind, EventSequence};
use crate::forward::RawPair;
use crate::graph::Graph;
use crate::modes::assemble;
use crate::sparse::SparseVec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeCell {
    Vertex(usize),
    Apex,
    Edge(usize),
    /// Edge from the apex to a contracted vertex.
    ApexEdge(usize),
    /// Triangle over a contracted edge.
    Triangle(usize),
}

#[derive(Debug, Clone)]
pub struct ConeSimplex {
    pub cell: ConeCell,
    pub dim: u8,
    /// Row indices of the boundary in the cone's own ordering, mod 2.
    pub faces: Vec<u32>,
    pub step: usize,
}

/// A filtration of the coned 2-complex, in insertion order.
#[derive(Debug, Clone, Default)]
pub struct ConedComplex {
    pub simplices: Vec<ConeSimplex>,
}

/// Resolves an event sequence into the coned filtration. The apex appears
/// immediately before the first contraction event and is omitted entirely
/// for inclusion-only sequences.
pub fn build_cone(graph: &Graph, seq: &EventSequence) -> ConedComplex {
    let mut cone = ConedComplex::default();
    let mut vertex_row = vec![u32::MAX; graph.n_vertices()];
    let mut edge_row = vec![u32::MAX; graph.n_edges()];
    let mut apex_row = u32::MAX;
    let mut apex_edge_row = vec![u32::MAX; graph.n_vertices()];

    for (step, event) in seq.events.iter().enumerate() {
        match event.kind {
            EventKind::Include => {
                for &v in &event.vertices {
                    vertex_row[v] = cone.simplices.len() as u32;
                    cone.simplices.push(ConeSimplex {
                        cell: ConeCell::Vertex(v),
                        dim: 0,
                        faces: Vec::new(),
                        step,
                    });
                }
                for &e in &event.edges {
                    let edge = graph.edge(e);
                    let faces = if edge.u == edge.v {
                        Vec::new()
                    } else {
                        vec![vertex_row[edge.u], vertex_row[edge.v]]
                    };
                    edge_row[e] = cone.simplices.len() as u32;
                    cone.simplices.push(ConeSimplex {
                        cell: ConeCell::Edge(e),
                        dim: 1,
                        faces,
                        step,
                    });
                }
            }
            EventKind::Contract => {
                if apex_row == u32::MAX {
                    apex_row = cone.simplices.len() as u32;
                    cone.simplices.push(ConeSimplex {
                        cell: ConeCell::Apex,
                        dim: 0,
                        faces: Vec::new(),
                        step,
                    });
                }
                for &v in &event.vertices {
                    if apex_edge_row[v] != u32::MAX {
                        continue;
                    }
                    apex_edge_row[v] = cone.simplices.len() as u32;
                    cone.simplices.push(ConeSimplex {
                        cell: ConeCell::ApexEdge(v),
                        dim: 1,
                        faces: vec![apex_row, vertex_row[v]],
                        step,
                    });
                }
                for &e in &event.edges {
                    let edge = graph.edge(e);
                    // Over F2 the two apex edges of a self-loop cancel.
                    let faces = if edge.u == edge.v {
                        vec![edge_row[e]]
                    } else {
                        vec![edge_row[e], apex_edge_row[edge.u], apex_edge_row[edge.v]]
                    };
                    cone.simplices.push(ConeSimplex {
                        cell: ConeCell::Triangle(e),
                        dim: 2,
                        faces,
                        step,
                    });
                }
            }
        }
    }
    cone
}

/// Standard persistence reduction of the coned filtration: left-to-right
/// column additions over F2, pairing each destroying simplex with the
/// feature-creating simplex at its final low entry. Returns pairs in all
/// dimensions, in the cone's step indexing.
pub fn reduce_persistence(cone: &ConedComplex) -> Vec<RawPair> {
    let n = cone.simplices.len();
    let mut reduced: Vec<SparseVec> = Vec::with_capacity(n);
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; n];
    let mut death_of: Vec<Option<usize>> = vec![None; n];

    for (j, simplex) in cone.simplices.iter().enumerate() {
        let mut column = SparseVec::from_unsorted(simplex.faces.clone());
        while let Some(low) = column.max_index() {
            match pivot_of_row[low as usize] {
                Some(k) => {
                    let other = reduced[k].clone();
                    column.xor_assign(&other);
                }
                None => break,
            }
        }
        if let Some(low) = column.max_index() {
            pivot_of_row[low as usize] = Some(j);
            death_of[low as usize] = Some(j);
        }
        reduced.push(column);
    }

    let mut pairs = Vec::new();
    for (i, simplex) in cone.simplices.iter().enumerate() {
        if !reduced[i].is_empty() {
            continue; // destroyer, not a creator
        }
        pairs.push(RawPair {
            dim: simplex.dim,
            birth_step: simplex.step,
            death_step: death_of[i].map(|j| cone.simplices[j].step),
        });
    }
    pairs
}

/// Component tracking on the quotient graphs. Components are recomputed by
/// graph search after every single simplex event; interval bookkeeping
/// follows the elder rule with the supernode surviving ties.
pub fn track_components(graph: &Graph, seq: &EventSequence) -> Vec<RawPair> {
    const SUPER: usize = usize::MAX;

    #[derive(Clone)]
    struct Interval {
        birth_step: usize,
        rep: usize,
        pair_index: usize,
    }

    let mut pairs: Vec<RawPair> = Vec::new();
    let mut intervals: Vec<Interval> = Vec::new();
    let mut included: Vec<bool> = vec![false; graph.n_vertices()];
    let mut contracted: Vec<bool> = vec![false; graph.n_vertices()];
    let mut live_edges: Vec<usize> = Vec::new();
    let mut supernode = false;

    // Quotient components as sorted node lists; contracted vertices all map
    // to the SUPER node.
    let components = |included: &[bool],
                      contracted: &[bool],
                      live_edges: &[usize],
                      supernode: bool|
     -> Vec<Vec<usize>> {
        let node_of = |v: usize| if contracted[v] { SUPER } else { v };
        let mut nodes: Vec<usize> = (0..graph.n_vertices())
            .filter(|&v| included[v] && !contracted[v])
            .collect();
        if supernode {
            nodes.push(SUPER);
        }
        let mut comp_of: std::collections::HashMap<usize, usize> = Default::default();
        let mut adjacency: std::collections::HashMap<usize, Vec<usize>> = Default::default();
        for &e in live_edges {
            let edge = graph.edge(e);
            let (a, b) = (node_of(edge.u), node_of(edge.v));
            adjacency.entry(a).or_default().push(b);
            adjacency.entry(b).or_default().push(a);
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        for &start in &nodes {
            if comp_of.contains_key(&start) {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp_of.insert(start, id);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                if let Some(neighbors) = adjacency.get(&x) {
                    for &y in neighbors {
                        if let std::collections::hash_map::Entry::Vacant(slot) =
                            comp_of.entry(y)
                        {
                            slot.insert(id);
                            members.push(y);
                            stack.push(y);
                        }
                    }
                }
            }
            out.push(members);
        }
        out
    };

    let settle = |step: usize,
                      intervals: &mut Vec<Interval>,
                      pairs: &mut Vec<RawPair>,
                      included: &[bool],
                      contracted: &[bool],
                      live_edges: &[usize],
                      supernode: bool| {
        let comps = components(included, contracted, live_edges, supernode);
        let find_comp = |node: usize| comps.iter().position(|c| c.contains(&node));
        let mut owners: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
        for (idx, interval) in intervals.iter_mut().enumerate() {
            if contracted.get(interval.rep).copied().unwrap_or(false) {
                interval.rep = SUPER;
            }
            let comp = find_comp(interval.rep).expect("live interval has a component");
            owners[comp].push(idx);
        }
        let mut dead: Vec<usize> = Vec::new();
        for (comp, owner_list) in owners.iter().enumerate() {
            if owner_list.is_empty() {
                // Fresh component.
                let rep = *comps[comp].iter().min().expect("nonempty component");
                pairs.push(RawPair {
                    dim: 0,
                    birth_step: step,
                    death_step: None,
                });
                intervals.push(Interval {
                    birth_step: step,
                    rep,
                    pair_index: pairs.len() - 1,
                });
                continue;
            }
            // Eldest survives; the supernode wins ties, then the smaller rep.
            let survivor = *owner_list
                .iter()
                .min_by_key(|&&i| {
                    let interval = &intervals[i];
                    (
                        interval.birth_step,
                        interval.rep != SUPER,
                        interval.rep,
                    )
                })
                .expect("nonempty owner list");
            for &i in owner_list {
                if i != survivor {
                    pairs[intervals[i].pair_index].death_step = Some(step);
                    dead.push(i);
                }
            }
        }
        dead.sort_unstable_by(|a, b| b.cmp(a));
        for i in dead {
            intervals.remove(i);
        }
    };

    for (step, event) in seq.events.iter().enumerate() {
        match event.kind {
            EventKind::Include => {
                for &v in &event.vertices {
                    included[v] = true;
                    settle(
                        step,
                        &mut intervals,
                        &mut pairs,
                        &included,
                        &contracted,
                        &live_edges,
                        supernode,
                    );
                }
                for &e in &event.edges {
                    live_edges.push(e);
                    settle(
                        step,
                        &mut intervals,
                        &mut pairs,
                        &included,
                        &contracted,
                        &live_edges,
                        supernode,
                    );
                }
            }
            EventKind::Contract => {
                for &v in &event.vertices {
                    if contracted[v] {
                        continue;
                    }
                    contracted[v] = true;
                    supernode = true;
                    settle(
                        step,
                        &mut intervals,
                        &mut pairs,
                        &included,
                        &contracted,
                        &live_edges,
                        supernode,
                    );
                }
                for &e in &event.edges {
                    live_edges.retain(|&x| x != e);
                    settle(
                        step,
                        &mut intervals,
                        &mut pairs,
                        &included,
                        &contracted,
                        &live_edges,
                        supernode,
                    );
                }
            }
        }
    }
    pairs
}

/// Raw step-time pairs: dimension 0 from the component tracker, dimension 1
/// from the coned reduction.
pub fn oracle_raw(graph: &Graph, seq: &EventSequence) -> Vec<RawPair> {
    let mut pairs = track_components(graph, seq);
    let cone = build_cone(graph, seq);
    pairs.extend(
        reduce_persistence(&cone)
            .into_iter()
            .filter(|p| p.dim == 1),
    );
    pairs
}

/// Full oracle diagram with the sequence's time axis applied.
pub fn oracle_diagram(graph: &Graph, seq: &EventSequence, mode: Mode) -> PersistenceDiagram {
    assemble(mode, oracle_raw(graph, seq), seq)
}

/// Sanity proxy for a complete contraction: the final coned complex is
/// contractible, so exactly one essential class survives overall and it
/// lives in dimension 0.
pub fn cone_is_contractible(graph: &Graph, seq: &EventSequence) -> bool {
    let cone = build_cone(graph, seq);
    let pairs = reduce_persistence(&cone);
    let essentials: Vec<&RawPair> = pairs.iter().filter(|p| p.death_step.is_none()).collect();
    essentials.len() == 1 && essentials[0].dim == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::events::{fb_events, forward_events};
    use crate::filtration::Filtration;

    #[test]
    fn empty_complex_reduces_to_nothing() {
        let pairs = reduce_persistence(&ConedComplex::default());
        assert!(pairs.is_empty());
    }

    #[test]
    fn filled_triangle_textbook_pair() {
        // Triangle boundary at step 0, filled at step 1.
        let cone = ConedComplex {
            simplices: vec![
                ConeSimplex { cell: ConeCell::Vertex(0), dim: 0, faces: vec![], step: 0 },
                ConeSimplex { cell: ConeCell::Vertex(1), dim: 0, faces: vec![], step: 0 },
                ConeSimplex { cell: ConeCell::Vertex(2), dim: 0, faces: vec![], step: 0 },
                ConeSimplex { cell: ConeCell::Edge(0), dim: 1, faces: vec![0, 1], step: 0 },
                ConeSimplex { cell: ConeCell::Edge(1), dim: 1, faces: vec![1, 2], step: 0 },
                ConeSimplex { cell: ConeCell::Edge(2), dim: 1, faces: vec![0, 2], step: 0 },
                ConeSimplex { cell: ConeCell::Triangle(0), dim: 2, faces: vec![3, 4, 5], step: 1 },
            ],
        };
        let pairs = reduce_persistence(&cone);
        assert!(pairs.contains(&RawPair {
            dim: 1,
            birth_step: 0,
            death_step: Some(1)
        }));
    }

    #[test]
    fn forward_only_cone_has_no_apex() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0, 1.0]).unwrap();
        let seq = forward_events(&g, &f);
        let cone = build_cone(&g, &seq);
        assert!(cone
            .simplices
            .iter()
            .all(|s| !matches!(s.cell, ConeCell::Apex | ConeCell::ApexEdge(_))));
    }

    #[test]
    fn fb_triangle_cone_counts() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0; 3]).unwrap();
        let seq = fb_events(&g, &f).unwrap();
        let cone = build_cone(&g, &seq);
        let count = |pred: fn(&ConeCell) -> bool| {
            cone.simplices.iter().filter(|s| pred(&s.cell)).count()
        };
        assert_eq!(count(|c| matches!(c, ConeCell::Vertex(_) | ConeCell::Apex)), 4);
        assert_eq!(
            count(|c| matches!(c, ConeCell::Edge(_) | ConeCell::ApexEdge(_))),
            6
        );
        assert_eq!(count(|c| matches!(c, ConeCell::Triangle(_))), 3);
        assert!(cone_is_contractible(&g, &seq));
    }

    #[test]
    fn tracker_single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![2.0]).unwrap();
        let seq = forward_events(&g, &f);
        assert_eq!(
            track_components(&g, &seq),
            vec![RawPair {
                dim: 0,
                birth_step: 0,
                death_step: None
            }]
        );
    }

    #[test]
    fn tracker_elder_rule_on_late_merge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let f = Filtration::new(&g, vec![1.0, 2.0], vec![3.0]).unwrap();
        let seq = forward_events(&g, &f);
        let pairs = track_components(&g, &seq);
        assert!(pairs.contains(&RawPair {
            dim: 0,
            birth_step: 1,
            death_step: Some(2)
        }));
        assert!(pairs.contains(&RawPair {
            dim: 0,
            birth_step: 0,
            death_step: None
        }));
    }

    #[test]
    fn oracle_matches_engine_on_constant_triangle_fb() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0; 3]).unwrap();
        let seq = fb_events(&g, &f).unwrap();
        let mut oracle = oracle_raw(&g, &seq);
        let mut engine = crate::backward::run_engine(&g, &seq).unwrap();
        oracle.sort_by_key(|p| (p.dim, p.birth_step, p.death_step));
        engine.sort_by_key(|p| (p.dim, p.birth_step, p.death_step));
        assert_eq!(oracle, engine);
    }

    #[test]
    fn bigon_cone_cells_stay_distinct() {
        // Two parallel edges contract into two distinct triangles.
        let g = Graph::new(2, &[(0, 1), (0, 1)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0, 1.0]).unwrap();
        let seq = fb_events(&g, &f).unwrap();
        let cone = build_cone(&g, &seq);
        let triangles: Vec<_> = cone
            .simplices
            .iter()
            .filter(|s| matches!(s.cell, ConeCell::Triangle(_)))
            .collect();
        assert_eq!(triangles.len(), 2);
        assert_ne!(triangles[0].faces[0], triangles[1].faces[0]);
        assert!(cone_is_contractible(&g, &seq));
    }

    #[test]
    fn self_loop_triangle_boundary_is_the_loop() {
        let g = Graph::new(1, &[(0, 0)]).unwrap();
        let f = Filtration::new(&g, vec![1.0], vec![1.0]).unwrap();
        let seq = fb_events(&g, &f).unwrap();
        let cone = build_cone(&g, &seq);
        let triangle = cone
            .simplices
            .iter()
            .find(|s| matches!(s.cell, ConeCell::Triangle(_)))
            .unwrap();
        assert_eq!(triangle.faces.len(), 1);
        assert!(cone_is_contractible(&g, &seq));
    }
}
