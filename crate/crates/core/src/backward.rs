//! Contraction pass over a forward state.
//!
//! Vertices enter the supernode in schedule order. A vertex from a
//! different quotient component closes the younger component's interval by
//! the elder rule (the supernode wins ties); a vertex already connected to
//! the supernode opens a new dimension-1 interval whose indicator is a live
//! path from the vertex to the point where its original component first
//! touched the supernode. An edge contracts once both endpoints are in the
//! supernode and always closes exactly one dimension-1 interval: its
//! coordinate is deleted from every indicator and the basis is re-reduced;
//! the column that becomes dependent on older ones is the victim.
//!
//! All columns, cycle-edge indicators and supernode-path indicators alike,
//! are kept with distinct pivot edges, and re-reduction only ever adds
//! older columns into younger ones, so the column that reduces to zero is
//! the youngest member of the unique dependency.

use crate::error::{Error, Result};
use crate::events::{Event, EventKind, EventSequence};
use crate::forward::{run_forward, ForwardState, RawPair};
use crate::graph::Graph;
use crate::sparse::SparseVec;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColumnKind {
    ForwardCycle,
    SupernodeCycle,
}

#[derive(Debug, Clone)]
struct Column {
    birth_step: usize,
    kind: ColumnKind,
    vec: SparseVec,
}

/// Counters reported by the benchmark command.
#[derive(Debug, Clone, Copy, Default)]
pub struct ContractionStats {
    pub peak_columns: usize,
    pub supernode_cycles: usize,
    pub forward_cycles_closed: usize,
}

pub struct BackwardState<'g> {
    graph: &'g Graph,
    forward: ForwardState,
    orig_comp: Vec<usize>,
    /// First vertex of each original component absorbed into the supernode.
    anchor: Vec<Option<usize>>,
    /// Spanning-forest parent pointers toward the component anchor,
    /// `(parent vertex, edge id)`, built once when the anchor is set.
    toward_anchor: Vec<Option<(usize, usize)>>,
    in_supernode: Vec<bool>,
    contracted_edge: Vec<bool>,
    seed: Option<usize>,
    /// Column slots in creation (age) order; freed on death.
    columns: Vec<Option<Column>>,
    alive_columns: usize,
    /// Pivot edge -> column slot. Every live column except the one being
    /// re-reduced holds exactly one registered pivot.
    pivot_of: HashMap<u32, usize>,
    /// Lazy edge -> column slots index; entries are verified on read.
    edge_index: Vec<Vec<usize>>,
    pairs: Vec<RawPair>,
    pub stats: ContractionStats,
}

impl<'g> BackwardState<'g> {
    pub fn new(graph: &'g Graph, forward: ForwardState) -> Self {
        let (orig_comp, n_comps) = graph.component_ids();
        let mut state = BackwardState {
            graph,
            forward,
            orig_comp,
            anchor: vec![None; n_comps],
            toward_anchor: vec![None; graph.n_vertices()],
            in_supernode: vec![false; graph.n_vertices()],
            contracted_edge: vec![false; graph.n_edges()],
            seed: None,
            columns: Vec::new(),
            alive_columns: 0,
            pivot_of: HashMap::new(),
            edge_index: vec![Vec::new(); graph.n_edges()],
            pairs: Vec::new(),
            stats: ContractionStats::default(),
        };
        let basis = state.forward.basis.columns.clone();
        for cycle in basis {
            state.insert_column(Column {
                birth_step: cycle.birth_step,
                kind: ColumnKind::ForwardCycle,
                vec: cycle.indicator,
            });
        }
        state
    }

    fn insert_column(&mut self, mut column: Column) {
        let slot = self.columns.len();
        // Reduce against existing pivots; existing columns are all older.
        while let Some(p) = column.vec.max_index() {
            match self.pivot_of.get(&p) {
                Some(&holder) => {
                    let other = self.columns[holder]
                        .as_ref()
                        .expect("registered pivot holder is alive")
                        .vec
                        .clone();
                    // Index entries for the final support are pushed below.
                    let _ = column.vec.xor_assign(&other);
                }
                None => {
                    self.pivot_of.insert(p, slot);
                    break;
                }
            }
        }
        debug_assert!(!column.vec.is_empty(), "inserted column reduced to zero");
        for e in column.vec.iter() {
            self.edge_index[e as usize].push(slot);
        }
        self.columns.push(Some(column));
        self.alive_columns += 1;
        self.stats.peak_columns = self.stats.peak_columns.max(self.alive_columns);
    }

    fn contract_vertex(&mut self, v: usize, step: usize) {
        if self.in_supernode[v] {
            return;
        }
        self.in_supernode[v] = true;
        let seed = match self.seed {
            None => {
                // First contracted element: becomes the supernode, no event.
                self.seed = Some(v);
                self.set_anchor(v);
                return;
            }
            Some(seed) => seed,
        };
        let rs = self.forward.uf.find(seed);
        let rv = self.forward.uf.find(v);
        if rv == rs {
            // Already connected to the supernode through the graph:
            // identifying the points pinches a new cycle.
            let indicator = self.supernode_path(v);
            self.stats.supernode_cycles += 1;
            self.insert_column(Column {
                birth_step: step,
                kind: ColumnKind::SupernodeCycle,
                vec: indicator,
            });
        } else {
            let b_super = self.forward.uf.birth_of(seed);
            let b_new = self.forward.uf.birth_of(v);
            // Elder rule; the supernode survives ties.
            let (survivor, victim) = if b_new.0 < b_super.0 {
                (b_new, b_super)
            } else {
                (b_super, b_new)
            };
            self.pairs.push(RawPair {
                dim: 0,
                birth_step: victim.0,
                death_step: Some(step),
            });
            self.forward.live_components -= 1;
            self.union_into_supernode(v, survivor);
            if self.anchor[self.orig_comp[v]].is_none() {
                self.set_anchor(v);
            }
        }
    }

    /// Marks `v` as its original component's first supernode contact and
    /// roots the component's spanning tree at it, so later entries from the
    /// same component find the supernode by walking parent pointers.
    fn set_anchor(&mut self, v: usize) {
        self.anchor[self.orig_comp[v]] = Some(v);
        let adjacency = &self.forward.uf.forest_adjacency;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(v);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &adjacency[x] {
                if y != v && self.toward_anchor[y].is_none() {
                    self.toward_anchor[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
    }

    fn union_into_supernode(&mut self, v: usize, record: (usize, usize)) {
        let seed = self.seed.expect("supernode exists");
        let rs = self.forward.uf.find(seed);
        let rv = self.forward.uf.find(v);
        // Keep the seed's root as the supernode class representative.
        self.forward.uf.absorb(rv, rs, record);
    }

    /// Live-edge path from `v` to the supernode: parent hops toward the
    /// anchor of `v`'s original component, stopping at the first vertex
    /// already absorbed. Every edge on the walk is live, since a contracted
    /// edge would have both endpoints absorbed and the walk stops earlier.
    fn supernode_path(&mut self, v: usize) -> SparseVec {
        let mut edges = Vec::new();
        let mut cur = v;
        loop {
            let (parent, e) = self.toward_anchor[cur].expect("component is anchored");
            debug_assert!(!self.contracted_edge[e]);
            edges.push(e as u32);
            cur = parent;
            if self.in_supernode[cur] {
                break;
            }
        }
        SparseVec::from_unsorted(edges)
    }

    fn contract_edge(&mut self, e: usize, step: usize) -> Result<()> {
        let edge = self.graph.edge(e);
        if !self.in_supernode[edge.u] || !self.in_supernode[edge.v] {
            return Err(Error::EdgeBeforeEndpoint(e));
        }
        debug_assert!(!self.contracted_edge[e]);
        self.contracted_edge[e] = true;

        // Columns currently containing e; the lazy index may hold stale or
        // duplicate entries, so verify against the column itself.
        let mut holders: Vec<usize> = std::mem::take(&mut self.edge_index[e]);
        holders.sort_unstable();
        holders.dedup();
        holders.retain(|&slot| {
            self.columns[slot]
                .as_ref()
                .is_some_and(|c| c.vec.contains(e as u32))
        });
        let pivot_holder = self.pivot_of.remove(&(e as u32));
        if holders.is_empty() || pivot_holder.is_none() {
            // Every edge is a live cycle at contraction time, so some column
            // must both contain it and pivot on it.
            return Err(Error::StackUnderflow);
        }
        for &slot in &holders {
            self.columns[slot]
                .as_mut()
                .expect("verified alive")
                .vec
                .remove(e as u32);
        }

        // Re-reduce starting from the column that lost its pivot. Exactly
        // one column reduces to zero; adding only older columns into younger
        // ones makes it the youngest member of the dependency.
        let mut cur = pivot_holder.expect("checked above");
        loop {
            let Some(p) = self.columns[cur].as_ref().expect("floating column").vec.max_index()
            else {
                self.close_column(cur, step);
                return Ok(());
            };
            match self.pivot_of.get(&p).copied() {
                None => {
                    self.pivot_of.insert(p, cur);
                    // All pivots distinct again without a death: impossible
                    // after deleting a live cycle's coordinate.
                    return Err(Error::StackUnderflow);
                }
                Some(k) if k < cur => {
                    let other = self.columns[k].as_ref().expect("alive").vec.clone();
                    let col = self.columns[cur].as_mut().expect("alive");
                    for toggled in col.vec.xor_assign(&other) {
                        self.edge_index[toggled as usize].push(cur);
                    }
                }
                Some(k) => {
                    // `cur` is older: it keeps the pivot, the younger column
                    // absorbs it and floats instead.
                    self.pivot_of.insert(p, cur);
                    let mine = self.columns[cur].as_ref().expect("alive").vec.clone();
                    let col = self.columns[k].as_mut().expect("alive");
                    for toggled in col.vec.xor_assign(&mine) {
                        self.edge_index[toggled as usize].push(k);
                    }
                    cur = k;
                }
            }
        }
    }

    fn close_column(&mut self, slot: usize, step: usize) {
        let column = self.columns[slot].take().expect("closing a live column");
        self.alive_columns -= 1;
        if column.kind == ColumnKind::ForwardCycle {
            self.stats.forward_cycles_closed += 1;
        }
        self.pairs.push(RawPair {
            dim: 1,
            birth_step: column.birth_step,
            death_step: Some(step),
        });
    }

    /// Processes one contraction event: vertices ascending, then edges
    /// ascending.
    pub fn apply(&mut self, event: &Event, step: usize) -> Result<()> {
        debug_assert_eq!(event.kind, EventKind::Contract);
        for &v in &event.vertices {
            self.contract_vertex(v, step);
        }
        for &e in &event.edges {
            self.contract_edge(e, step)?;
        }
        Ok(())
    }

    /// Closes the run: open intervals die at infinity.
    pub fn finish(mut self) -> (Vec<RawPair>, ContractionStats) {
        let mut pairs = self.forward.closed_dim0.clone();
        pairs.append(&mut self.pairs);
        for (_, (birth, _)) in self.forward.open_components() {
            pairs.push(RawPair {
                dim: 0,
                birth_step: birth,
                death_step: None,
            });
        }
        for column in self.columns.iter().flatten() {
            pairs.push(RawPair {
                dim: 1,
                birth_step: column.birth_step,
                death_step: None,
            });
        }
        (pairs, self.stats)
    }
}

/// Runs a phase-separated event sequence (all includes, then all contracts)
/// through the streaming engines and returns raw step-time pairs.
pub fn run_engine(graph: &Graph, seq: &EventSequence) -> Result<Vec<RawPair>> {
    let (pairs, _) = run_engine_with_stats(graph, seq)?;
    Ok(pairs)
}

pub fn run_engine_with_stats(
    graph: &Graph,
    seq: &EventSequence,
) -> Result<(Vec<RawPair>, ContractionStats)> {
    let n_forward = seq
        .forward_steps
        .expect("streaming engine requires a phase-separated sequence");
    debug_assert!(seq.events[..n_forward]
        .iter()
        .all(|e| e.kind == EventKind::Include));
    let forward = run_forward(graph, &seq.events[..n_forward], 0);
    let mut state = BackwardState::new(graph, forward);
    for (offset, event) in seq.events[n_forward..].iter().enumerate() {
        state.apply(event, n_forward + offset)?;
    }
    Ok(state.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::events::fb_events;
    use crate::filtration::Filtration;

    fn fb_raw(graph: &Graph, f: &Filtration) -> Vec<RawPair> {
        let seq = fb_events(graph, f).unwrap();
        run_engine(graph, &seq).unwrap()
    }

    #[test]
    fn single_vertex_keeps_essential_pair() {
        let g = Graph::new(1, &[]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0]).unwrap();
        let pairs = fb_raw(&g, &f);
        assert_eq!(
            pairs,
            vec![RawPair {
                dim: 0,
                birth_step: 0,
                death_step: None
            }]
        );
    }

    #[test]
    fn triangle_constant_cycle_dies_at_first_contraction() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0; 3]).unwrap();
        let pairs = fb_raw(&g, &f);
        // Forward cycle born at step 0 dies at the single contraction step 1.
        assert!(pairs.contains(&RawPair {
            dim: 1,
            birth_step: 0,
            death_step: Some(1)
        }));
        // Complete contraction: exactly one essential pair, in dimension 0.
        let essentials: Vec<_> = pairs.iter().filter(|p| p.death_step.is_none()).collect();
        assert_eq!(essentials.len(), 1);
        assert_eq!(essentials[0].dim, 0);
    }

    #[test]
    fn every_edge_contraction_closes_one_cycle() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0, 2.0, 1.0, 2.0]).unwrap();
        let pairs = fb_raw(&g, &f);
        let dim1_closed = pairs
            .iter()
            .filter(|p| p.dim == 1 && p.death_step.is_some())
            .count();
        assert_eq!(dim1_closed, g.n_edges());
    }

    #[test]
    fn waiting_supernode_cycles_pair_by_dependency_not_stack_order() {
        // Two pendant-decorated edges whose loops appear early and die in
        // the opposite order from their creation: the victim must be the
        // member of the dependency, not the last loop opened.
        let g = Graph::new(
            8,
            &[(0, 1), (2, 3), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        let f = Filtration::from_vertex_values(
            &g,
            vec![3.0, 1.0, 2.0, 1.0, 9.0, 8.0, 7.0, 6.0],
        )
        .unwrap();
        let seq = fb_events(&g, &f).unwrap();
        let pairs = run_engine(&g, &seq).unwrap();
        // Levels 1,2,3,6,7,8,9 -> steps 0..6 forward, 7..13 backward.
        // Loop over edge (0,1) opens at step 8 (vertex 1 follows vertex 0),
        // loop over edge (2,3) at step 10; edge (0,1) contracts at its own
        // level 3 = step 11, edge (2,3) at level 2 = step 12.
        let dim1: Vec<_> = pairs.iter().filter(|p| p.dim == 1).collect();
        assert!(dim1.contains(&&RawPair {
            dim: 1,
            birth_step: 8,
            death_step: Some(11)
        }));
        assert!(dim1.contains(&&RawPair {
            dim: 1,
            birth_step: 10,
            death_step: Some(12)
        }));
    }

    #[test]
    fn edge_before_endpoint_rejected() {
        use crate::events::{Event, EventKind};
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0, 1.0]).unwrap();
        let seq = crate::events::forward_events(&g, &f);
        let forward = run_forward(&g, &seq.events, 0);
        let mut state = BackwardState::new(&g, forward);
        let bad = Event {
            kind: EventKind::Contract,
            vertices: vec![0],
            edges: vec![0],
        };
        assert_eq!(state.apply(&bad, 1), Err(Error::EdgeBeforeEndpoint(0)));
    }
}
