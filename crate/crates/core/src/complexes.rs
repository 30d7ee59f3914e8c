//! Sublevel steps, intermediate complexes, and schedule-realizing
//! filtration transforms.
//!
//! The intermediate complex at level `i` is the closure of what is new at
//! that level: the edges valued exactly `a_i`, their endpoints, and the
//! vertices valued exactly `a_i`. Over all levels the edge sets partition
//! the edge set of the graph, and two intermediate complexes can only share
//! vertices.

use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::graph::Graph;
use crate::permutation::Permutation;

/// The nested sublevel subgraphs `G_0 ⊂ ... ⊂ G_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiltrationSteps {
    pub subgraphs: Vec<SubgraphAt>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubgraphAt {
    pub level: f64,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Closure of the simplices new at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntermediateComplex {
    pub index: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Sublevel sets per level: `subgraphs[i]` holds everything valued `<= a_i`.
pub fn sublevel_steps(graph: &Graph, f: &Filtration) -> FiltrationSteps {
    let mut subgraphs = Vec::with_capacity(f.n_levels());
    for (i, &level) in f.levels().iter().enumerate() {
        let vertices = (0..graph.n_vertices())
            .filter(|&v| f.vertex_value(v) <= level)
            .collect();
        let edges = (0..graph.n_edges())
            .filter(|&e| f.edge_value(e) <= level)
            .collect();
        let _ = i;
        subgraphs.push(SubgraphAt {
            level,
            vertices,
            edges,
        });
    }
    FiltrationSteps { subgraphs }
}

/// The intermediate complexes of `f`, one per level, in ascending order.
pub fn intermediate_complexes(graph: &Graph, f: &Filtration) -> Vec<IntermediateComplex> {
    let mut complexes: Vec<IntermediateComplex> = f
        .levels()
        .iter()
        .enumerate()
        .map(|(index, _)| IntermediateComplex {
            index,
            vertices: Vec::new(),
            edges: Vec::new(),
        })
        .collect();
    for v in 0..graph.n_vertices() {
        complexes[f.step_of(f.vertex_value(v))].vertices.push(v);
    }
    for e in graph.edges() {
        let ic = &mut complexes[f.step_of(f.edge_value(e.id))];
        ic.edges.push(e.id);
        ic.vertices.push(e.u);
        ic.vertices.push(e.v);
    }
    for ic in &mut complexes {
        ic.vertices.sort_unstable();
        ic.vertices.dedup();
    }
    complexes
}

/// Backward filtration function: negates values after lifting each vertex to
/// the maximum over its incident edges (isolated vertices keep their own
/// value). Running the contraction schedule of the result in ascending order
/// contracts the intermediate complexes of `f` from last to first; levels
/// whose vertices are all swallowed by later closures collapse into their
/// neighbours, so the quotient sequence agrees up to repeated steps.
/// Validation and transform share one pass over the edges.
pub fn backward_filtration(graph: &Graph, f: &Filtration) -> Result<Filtration> {
    let mut vertex_values = vec![f64::NEG_INFINITY; graph.n_vertices()];
    let mut edge_values = Vec::with_capacity(graph.n_edges());
    for e in graph.edges() {
        let val = f.edge_value(e.id);
        let endpoint_max = f.vertex_value(e.u).max(f.vertex_value(e.v));
        if val != endpoint_max {
            return Err(Error::NotVertexBased(e.id));
        }
        vertex_values[e.u] = vertex_values[e.u].max(val);
        vertex_values[e.v] = vertex_values[e.v].max(val);
        edge_values.push(-val);
    }
    for (v, val) in vertex_values.iter_mut().enumerate() {
        if *val == f64::NEG_INFINITY {
            *val = f.vertex_value(v);
        }
        *val = -*val;
    }
    Ok(Filtration::new_unchecked(vertex_values, edge_values))
}

/// Backward filtration realizing the contraction order `tau`: step `j` of
/// the result contracts the intermediate complex `IC_{tau(j)}` of `f`.
/// Takes the inverse permutation, matching how contraction targets are
/// looked up.
pub fn tau_backward_filtration(
    graph: &Graph,
    f: &Filtration,
    tau_inv: &Permutation,
) -> Result<Filtration> {
    f.require_vertex_based(graph)?;
    if tau_inv.len() != f.n_levels() {
        return Err(Error::NotAPermutation {
            expected: f.n_levels(),
            reason: format!("length {} does not match level count", tau_inv.len()),
        });
    }
    // Relabel level a_i to a_{re(tau_inv(i))}, then lift and negate exactly
    // as in the plain backward construction. Sorting the levels for the
    // relabeling is what makes this O(N log N) rather than linear.
    let re = Permutation::reverse(f.n_levels());
    let g = permute_filtration(f, &re.compose(tau_inv)).expect("length checked");
    let mut vertex_values = vec![f64::NEG_INFINITY; graph.n_vertices()];
    let mut edge_values = Vec::with_capacity(graph.n_edges());
    for e in graph.edges() {
        let val = g.edge_value(e.id);
        // Both endpoints take the maximum over incident edges; updating one
        // endpoint only leaves the other stranded at an earlier level.
        vertex_values[e.u] = vertex_values[e.u].max(val);
        vertex_values[e.v] = vertex_values[e.v].max(val);
        edge_values.push(-val);
    }
    for (v, val) in vertex_values.iter_mut().enumerate() {
        if *val == f64::NEG_INFINITY {
            *val = g.vertex_value(v);
        }
        *val = -*val;
    }
    Ok(Filtration::new_unchecked(vertex_values, edge_values))
}

/// Relabels every value `a_i` to `a_{sigma(i)}`. The result may violate
/// monotonicity; it is an ordering device for scheduling inclusions of
/// intermediate complexes, not a filtration to filter by directly.
pub fn permute_filtration(f: &Filtration, sigma: &Permutation) -> Result<Filtration> {
    if sigma.len() != f.n_levels() {
        return Err(Error::NotAPermutation {
            expected: f.n_levels(),
            reason: format!("length {} does not match level count", sigma.len()),
        });
    }
    let relabel = |v: f64| f.levels()[sigma.apply(f.step_of(v))];
    let vertex_values = f.vertex_values().iter().map(|&v| relabel(v)).collect();
    let edge_values = f.edge_values().iter().map(|&v| relabel(v)).collect();
    Ok(Filtration::new_unchecked(vertex_values, edge_values))
}

/// Contraction groups realizing the descent by `-f`: the intermediate
/// complexes of the vertex-based completion of the negated vertex values,
/// in ascending order of that completion. An edge joins the group of its
/// lower endpoint, so a group is exactly what the superlevel set of the
/// vertex function gains at that height.
pub fn descending_schedule(graph: &Graph, f: &Filtration) -> Result<Vec<IntermediateComplex>> {
    f.require_vertex_based(graph)?;
    let negated: Vec<f64> = f.vertex_values().iter().map(|&v| -v).collect();
    let neg = Filtration::from_vertex_values(graph, negated)?;
    Ok(intermediate_complexes(graph, &neg))
}
