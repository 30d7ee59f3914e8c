//! Streaming forward pass: union-find with component birth records, a
//! spanning-forest adjacency for cycle extraction, and a fundamental cycle
//! basis over F2.
//!
//! Each include step materializes its vertices (ascending id) and then its
//! edges (ascending id). A merge edge closes the younger component's
//! interval by the elder rule; a cycle edge opens a dimension-1 interval
//! whose indicator is the edge plus the forest path between its endpoints.

use crate::events::{Event, EventKind, EventSequence};
use crate::graph::Graph;
use crate::sparse::SparseVec;

/// Open or closed interval in combinatorial steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RawPair {
    pub dim: u8,
    pub birth_step: usize,
    pub death_step: Option<usize>,
}

/// Union-find over vertices with per-root component birth records and the
/// spanning-forest adjacency built from merge edges.
#[derive(Debug, Clone)]
pub struct UnionFindState {
    parent: Vec<usize>,
    /// Root-indexed: (birth step, representative vertex for tie-breaking).
    birth: Vec<(usize, usize)>,
    pub forest_adjacency: Vec<Vec<(usize, usize)>>,
}

impl UnionFindState {
    pub fn new(n: usize) -> Self {
        UnionFindState {
            parent: (0..n).collect(),
            birth: (0..n).map(|v| (usize::MAX, v)).collect(),
            forest_adjacency: vec![Vec::new(); n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn birth_of(&mut self, x: usize) -> (usize, usize) {
        let r = self.find(x);
        self.birth[r]
    }

    fn set_birth(&mut self, root: usize, record: (usize, usize)) {
        self.birth[root] = record;
    }

    /// Merges the components of `a` and `b`; the union keeps `record` as its
    /// birth. Returns the new root.
    fn union_with_record(&mut self, a: usize, b: usize, record: (usize, usize)) -> usize {
        let (ra, rb) = (self.find(a), self.find(b));
        debug_assert_ne!(ra, rb);
        self.parent[ra] = rb;
        self.birth[rb] = record;
        rb
    }

    /// Attaches the class rooted at `child` under the root `keep` and sets
    /// the merged birth record. Both arguments must be roots.
    pub(crate) fn absorb(&mut self, child: usize, keep: usize, record: (usize, usize)) {
        debug_assert_ne!(child, keep);
        self.parent[child] = keep;
        self.birth[keep] = record;
    }
}

/// One fundamental cycle: birth step plus its F2 edge indicator.
#[derive(Debug, Clone)]
pub struct CycleColumn {
    pub birth_step: usize,
    pub indicator: SparseVec,
}

/// Cycle basis in birth order. The creating edge of each column appears in
/// no earlier column, so the columns are independent.
#[derive(Debug, Clone, Default)]
pub struct CycleBasis {
    pub columns: Vec<CycleColumn>,
}

impl CycleBasis {
    /// Echelon check used by tests: every column contains an edge absent
    /// from all earlier columns.
    pub fn has_echelon_property(&self) -> bool {
        let mut seen: Vec<SparseVec> = Vec::new();
        for col in &self.columns {
            let fresh = col
                .indicator
                .iter()
                .any(|e| seen.iter().all(|s| !s.contains(e)));
            if !fresh {
                return false;
            }
            seen.push(col.indicator.clone());
        }
        true
    }
}

/// Everything the contraction pass continues from.
#[derive(Debug, Clone)]
pub struct ForwardState {
    pub uf: UnionFindState,
    pub basis: CycleBasis,
    /// Dimension-0 pairs closed during the forward phase.
    pub closed_dim0: Vec<RawPair>,
    /// Step after the last forward event.
    pub steps_consumed: usize,
    /// Component count at the end of the forward phase.
    pub live_components: usize,
}

impl ForwardState {
    /// Open dimension-0 intervals, one per live component root.
    pub fn open_components(&mut self) -> Vec<(usize, (usize, usize))> {
        let n = self.uf.parent.len();
        let mut out = Vec::new();
        for v in 0..n {
            if self.uf.birth[v].0 != usize::MAX && self.uf.find(v) == v {
                out.push((v, self.uf.birth[v]));
            }
        }
        out
    }
}

/// Runs the forward phase over the include prefix of `events` (or all
/// include events when the sequence is phase-separated). Contraction events
/// must not appear before the last include consumed here.
pub fn run_forward(graph: &Graph, events: &[Event], first_step: usize) -> ForwardState {
    let n = graph.n_vertices();
    let mut uf = UnionFindState::new(n);
    let mut basis = CycleBasis::default();
    let mut closed_dim0 = Vec::new();
    let mut live_components = 0usize;
    let mut present = vec![false; n];

    for (offset, event) in events.iter().enumerate() {
        debug_assert_eq!(event.kind, EventKind::Include);
        let step = first_step + offset;
        for &v in &event.vertices {
            debug_assert!(!present[v]);
            present[v] = true;
            uf.set_birth(v, (step, v));
            live_components += 1;
        }
        for &e in &event.edges {
            let edge = graph.edge(e);
            debug_assert!(present[edge.u] && present[edge.v]);
            let (ru, rv) = (uf.find(edge.u), uf.find(edge.v));
            if ru == rv {
                // Cycle-creating edge: indicator is the edge itself plus the
                // forest path between its endpoints.
                let mut indicator: Vec<u32> =
                    forest_path(&uf.forest_adjacency, edge.u, edge.v)
                        .into_iter()
                        .map(|id| id as u32)
                        .collect();
                indicator.push(e as u32);
                basis.columns.push(CycleColumn {
                    birth_step: step,
                    indicator: SparseVec::from_unsorted(indicator),
                });
            } else {
                let bu = uf.birth[ru];
                let bv = uf.birth[rv];
                // Elder rule: the younger root dies; ties fall to the larger
                // representative so runs are deterministic.
                let (survivor, victim) = if bu < bv { (bu, bv) } else { (bv, bu) };
                closed_dim0.push(RawPair {
                    dim: 0,
                    birth_step: victim.0,
                    death_step: Some(step),
                });
                live_components -= 1;
                uf.union_with_record(edge.u, edge.v, survivor);
                uf.forest_adjacency[edge.u].push((edge.v, e));
                uf.forest_adjacency[edge.v].push((edge.u, e));
            }
        }
    }

    ForwardState {
        uf,
        basis,
        closed_dim0,
        steps_consumed: first_step + events.len(),
        live_components,
    }
}

/// BFS over the spanning forest; returns the edge ids on the unique path.
/// Empty for `u == v`.
pub fn forest_path(adjacency: &[Vec<(usize, usize)>], u: usize, v: usize) -> Vec<usize> {
    if u == v {
        return Vec::new();
    }
    let n = adjacency.len();
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    visited[u] = true;
    queue.push_back(u);
    'search: while let Some(x) = queue.pop_front() {
        for &(y, e) in &adjacency[x] {
            if !visited[y] {
                visited[y] = true;
                pred[y] = Some((x, e));
                if y == v {
                    break 'search;
                }
                queue.push_back(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = v;
    while let Some((prev, e)) = pred[cur] {
        path.push(e);
        cur = prev;
    }
    debug_assert_eq!(cur, u, "endpoints lie in different forest trees");
    path
}

/// Forward persistence of a phase-separated or pure-forward sequence:
/// closed dimension-0 pairs, open intervals for surviving components, and
/// open dimension-1 intervals for the basis columns.
pub fn forward_pairs(graph: &Graph, seq: &EventSequence) -> (Vec<RawPair>, ForwardState) {
    let n_forward = seq.forward_steps.unwrap_or(seq.events.len());
    let mut state = run_forward(graph, &seq.events[..n_forward], 0);
    let mut pairs = state.closed_dim0.clone();
    for (_, (birth, _)) in state.open_components() {
        pairs.push(RawPair {
            dim: 0,
            birth_step: birth,
            death_step: None,
        });
    }
    for col in &state.basis.columns {
        pairs.push(RawPair {
            dim: 1,
            birth_step: col.birth_step,
            death_step: None,
        });
    }
    (pairs, state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::events::forward_events;
    use crate::filtration::Filtration;

    fn pairs_of(graph: &Graph, f: &Filtration) -> Vec<RawPair> {
        let seq = forward_events(graph, f);
        forward_pairs(graph, &seq).0
    }

    #[test]
    fn single_vertex_one_essential() {
        let g = Graph::new(1, &[]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![3.0]).unwrap();
        let pairs = pairs_of(&g, &f);
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
    fn constant_triangle_counts() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0; 3]).unwrap();
        let pairs = pairs_of(&g, &f);
        let dim0_closed = pairs
            .iter()
            .filter(|p| p.dim == 0 && p.death_step.is_some())
            .count();
        let dim0_open = pairs
            .iter()
            .filter(|p| p.dim == 0 && p.death_step.is_none())
            .count();
        let dim1 = pairs.iter().filter(|p| p.dim == 1).count();
        assert_eq!((dim0_closed, dim0_open, dim1), (2, 1, 1));
    }

    #[test]
    fn self_loop_creates_cycle_with_singleton_indicator() {
        let g = Graph::new(1, &[(0, 0)]).unwrap();
        let f = Filtration::new(&g, vec![1.0], vec![2.0]).unwrap();
        let seq = forward_events(&g, &f);
        let (pairs, state) = forward_pairs(&g, &seq);
        assert!(pairs.contains(&RawPair {
            dim: 1,
            birth_step: 1,
            death_step: None
        }));
        assert_eq!(state.basis.columns[0].indicator.len(), 1);
    }

    #[test]
    fn cycle_space_dimension_matches() {
        // m - n + c independent cycles at completion.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (0, 2), (3, 4), (4, 5)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0; 6]).unwrap();
        let seq = forward_events(&g, &f);
        let (pairs, state) = forward_pairs(&g, &seq);
        let c = g.component_count();
        let expected_cycles = g.n_edges() - g.n_vertices() + c;
        assert_eq!(state.basis.columns.len(), expected_cycles);
        assert_eq!(
            pairs
                .iter()
                .filter(|p| p.dim == 0 && p.death_step.is_none())
                .count(),
            c
        );
        assert!(state.basis.has_echelon_property());
    }

    #[test]
    fn deterministic_output() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![2.0, 1.0, 2.0, 1.0, 3.0]).unwrap();
        assert_eq!(pairs_of(&g, &f), pairs_of(&g, &f));
    }
}
