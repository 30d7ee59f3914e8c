//! Stability fuzzing for the two-function pipeline.
//!
//! For filtration pairs `(f, g)` and `(f', g')` on the same graph, the
//! bottleneck distance between the two-function diagrams is bounded by
//! `2 * ||f - f'||_inf + ||g - g'||_inf + |max(f) - max(f')|`, using the
//! variant excluding the essential pair in dimension 0. The harness draws
//! dyadic-rational filtrations so every quantity on both sides of the
//! inequality is exact in floating point.

use crate::error::Result;
use crate::filtration::Filtration;
use crate::generators::random_graph;
use crate::graph::Graph;
use crate::metrics::{bottleneck_distance, bottleneck_excluding_essential};
use crate::modes::fg_persistence;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub trials: usize,
    pub violations: Vec<StabilityViolation>,
    /// Largest observed distance / bound ratio (bound > 0 trials only).
    pub max_ratio: f64,
}

#[derive(Debug, Clone)]
pub struct StabilityViolation {
    pub trial: usize,
    pub dim: u8,
    pub distance: f64,
    pub bound: f64,
}

impl StabilityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Denominator for dyadic perturbations; sums and differences of values on
/// this lattice are exact in f64.
const GRID: f64 = 64.0;

fn dyadic<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    let steps = ((hi - lo) * GRID) as i64;
    lo + rng.random_range(0..=steps) as f64 / GRID
}

/// Positive filtration with dyadic values: vertex draws in `[1, 8]`, edge
/// slack in `[0, 2]`.
fn random_positive_filtration<R: Rng>(rng: &mut R, graph: &Graph) -> Filtration {
    let vertex_values: Vec<f64> = (0..graph.n_vertices())
        .map(|_| dyadic(rng, 1.0, 8.0))
        .collect();
    let edge_values = graph
        .edges()
        .iter()
        .map(|e| vertex_values[e.u].max(vertex_values[e.v]) + dyadic(rng, 0.0, 2.0))
        .collect();
    Filtration::new(graph, vertex_values, edge_values).expect("slack keeps monotonicity")
}

/// Perturbs vertex values by at most `epsilon` (keeping them positive) and
/// rebuilds edges with the same slack, so edge values move by at most the
/// largest vertex move.
fn perturb<R: Rng>(rng: &mut R, graph: &Graph, f: &Filtration, epsilon: f64) -> Filtration {
    let eps = (epsilon * GRID).floor() / GRID;
    let vertex_values: Vec<f64> = f
        .vertex_values()
        .iter()
        .map(|&v| (v + dyadic(rng, -eps, eps)).max(1.0 / GRID))
        .collect();
    let edge_values = graph
        .edges()
        .iter()
        .map(|e| {
            let old_slack =
                f.edge_value(e.id) - f.vertex_value(e.u).max(f.vertex_value(e.v));
            vertex_values[e.u].max(vertex_values[e.v]) + old_slack
        })
        .collect();
    Filtration::new(graph, vertex_values, edge_values).expect("slack keeps monotonicity")
}

fn sup_distance(a: &Filtration, b: &Filtration) -> f64 {
    a.vertex_values()
        .iter()
        .zip(b.vertex_values())
        .chain(a.edge_values().iter().zip(b.edge_values()))
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Runs `trials` random `(f, g)` vs perturbed `(f', g')` comparisons on
/// graphs with at most `max_vertices` vertices and asserts the bound in
/// both dimensions.
pub fn stability_fuzz(
    seed: u64,
    trials: usize,
    max_vertices: usize,
    epsilon: f64,
) -> Result<StabilityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    let mut max_ratio = 0.0f64;
    for trial in 0..trials {
        let graph = random_graph(&mut rng, max_vertices, 2 * max_vertices);
        let f = random_positive_filtration(&mut rng, &graph);
        let g = random_positive_filtration(&mut rng, &graph);
        let f2 = perturb(&mut rng, &graph, &f, epsilon);
        let g2 = perturb(&mut rng, &graph, &g, epsilon);

        let d_a = fg_persistence(&graph, &f, &g)?;
        let d_b = fg_persistence(&graph, &f2, &g2)?;
        let bound = 2.0 * sup_distance(&f, &f2)
            + sup_distance(&g, &g2)
            + (f.max_value() - f2.max_value()).abs();

        let dist0 = bottleneck_excluding_essential(&d_a, &d_b)?;
        let dist1 = bottleneck_distance(&d_a, &d_b, 1)?;
        for (dim, distance) in [(0, dist0), (1, dist1)] {
            if distance > bound {
                violations.push(StabilityViolation {
                    trial,
                    dim,
                    distance,
                    bound,
                });
            }
            if bound > 0.0 {
                max_ratio = max_ratio.max(distance / bound);
            }
        }
    }
    Ok(StabilityReport {
        trials,
        violations,
        max_ratio,
    })
}
