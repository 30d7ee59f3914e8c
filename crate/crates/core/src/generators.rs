//! Random and synthetic instances for tests, fuzzing, and the benchmark
//! command. All generators are deterministic given the caller's RNG.

use crate::complexes::intermediate_complexes;
use crate::filtration::Filtration;
use crate::graph::Graph;
use crate::permutation::Permutation;
use crate::schedule::{HourglassSchedule, ScheduleOp};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random multigraph with up to `max_vertices` vertices and `max_edges`
/// edges; self-loops and parallel edges occur naturally.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Graph {
    let n = rng.random_range(1..=max_vertices);
    let m = rng.random_range(0..=max_edges);
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
        .collect();
    Graph::new(n, &edges).expect("generated endpoints are in range")
}

/// Vertex-based filtration with integer vertex values in `lo..=hi`.
pub fn random_vertex_filtration<R: Rng>(
    rng: &mut R,
    graph: &Graph,
    lo: i64,
    hi: i64,
) -> Filtration {
    let values = (0..graph.n_vertices())
        .map(|_| rng.random_range(lo..=hi) as f64)
        .collect();
    Filtration::from_vertex_values(graph, values).expect("vertex-based values are monotone")
}

/// General filtration: integer vertex values plus a nonnegative integer
/// slack on every edge above its endpoint maximum.
pub fn random_filtration<R: Rng>(rng: &mut R, graph: &Graph, lo: i64, hi: i64) -> Filtration {
    let vertex_values: Vec<f64> = (0..graph.n_vertices())
        .map(|_| rng.random_range(lo..=hi) as f64)
        .collect();
    let edge_values = graph
        .edges()
        .iter()
        .map(|e| {
            vertex_values[e.u].max(vertex_values[e.v]) + rng.random_range(0..=3) as f64
        })
        .collect();
    Filtration::new(graph, vertex_values, edge_values).expect("slack keeps monotonicity")
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut mapping: Vec<usize> = (0..n).collect();
    mapping.shuffle(rng);
    Permutation::new(mapping).expect("shuffle preserves bijectivity")
}

/// Random valid schedule over `n_complexes` intermediate complexes: every
/// index included once, and (when `complete`) contracted once after its
/// include.
pub fn random_schedule<R: Rng>(rng: &mut R, n_complexes: usize, complete: bool) -> HourglassSchedule {
    let mut pending_include: Vec<usize> = (0..n_complexes).collect();
    pending_include.shuffle(rng);
    let mut live: Vec<usize> = Vec::new();
    let mut ops = Vec::new();
    while !pending_include.is_empty() || !live.is_empty() {
        let can_contract = !live.is_empty();
        let can_include = !pending_include.is_empty();
        let contract = match (can_include, can_contract) {
            (true, true) => rng.random_bool(0.5),
            (false, true) => true,
            (true, false) => false,
            (false, false) => unreachable!(),
        };
        if contract {
            let pos = rng.random_range(0..live.len());
            let ic = live.swap_remove(pos);
            ops.push(ScheduleOp::Contract(ic));
        } else {
            let ic = pending_include.pop().expect("checked nonempty");
            ops.push(ScheduleOp::Include(ic));
            live.push(ic);
        }
    }
    if !complete {
        // Drop a random suffix of contractions.
        let keep = rng.random_range(0..=ops.len());
        let mut trimmed = Vec::with_capacity(ops.len());
        let mut dropped = 0;
        for (i, op) in ops.iter().enumerate() {
            if i >= keep && matches!(op, ScheduleOp::Contract(_)) && dropped < n_complexes {
                dropped += 1;
                continue;
            }
            trimmed.push(*op);
        }
        return HourglassSchedule::new(trimmed);
    }
    HourglassSchedule::new(ops)
}

/// Connected random graph with `n_edges` edges and exactly `n_cycles`
/// independent cycles: a random attachment tree plus that many chords.
pub fn sparse_graph<R: Rng>(rng: &mut R, n_edges: usize, n_cycles: usize) -> Graph {
    assert!(n_edges >= n_cycles);
    let n = n_edges - n_cycles + 1;
    let mut edges = Vec::with_capacity(n_edges);
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for _ in 0..n_cycles {
        edges.push((rng.random_range(0..n), rng.random_range(0..n)));
    }
    Graph::new(n, &edges).expect("endpoints in range")
}

/// Four-neighbour grid.
pub fn grid_graph(rows: usize, cols: usize) -> Graph {
    let idx = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, &edges).expect("endpoints in range")
}

/// Random tree with `n_edges` edges plus `chords` extra edges.
pub fn tree_with_chords<R: Rng>(rng: &mut R, n_edges: usize, chords: usize) -> Graph {
    sparse_graph(rng, n_edges + chords, chords)
}

/// Size-bounded schedule: include intermediate complexes in ascending
/// order, and whenever the live simplex count exceeds `threshold`, contract
/// every complex included so far. Returns the schedule and the peak live
/// simplex count observed.
pub fn threshold_schedule(
    graph: &Graph,
    f: &Filtration,
    threshold: usize,
) -> (HourglassSchedule, usize) {
    let ics = intermediate_complexes(graph, f);
    let mut seen_vertex = vec![false; graph.n_vertices()];
    let mut ops = Vec::new();
    let mut live: Vec<usize> = Vec::new();
    let mut live_size = 0usize;
    let mut peak = 0usize;
    for (i, ic) in ics.iter().enumerate() {
        let mut new_simplices = ic.edges.len();
        for &v in &ic.vertices {
            if !seen_vertex[v] {
                seen_vertex[v] = true;
                new_simplices += 1;
            }
        }
        ops.push(ScheduleOp::Include(i));
        live.push(i);
        live_size += new_simplices;
        peak = peak.max(live_size);
        if live_size > threshold {
            for ic in live.drain(..) {
                ops.push(ScheduleOp::Contract(ic));
            }
            // Everything so far is one point now.
            live_size = 1;
        }
    }
    for ic in live.drain(..) {
        ops.push(ScheduleOp::Contract(ic));
    }
    (HourglassSchedule::new(ops), peak)
}
