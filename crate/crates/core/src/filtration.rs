//! Filtration functions on graphs.
//!
//! A filtration assigns a real value to every vertex and edge so that each
//! edge is valued at or above both endpoints. Sorting the distinct values
//! gives the levels `a_0 < ... < a_n`; the sublevel sets form the nested
//! subgraph sequence the forward engines consume.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

#[derive(Debug, Clone)]
pub struct Filtration {
    vertex_values: Vec<f64>,
    edge_values: Vec<f64>,
    /// Computed on first use; construction stays linear in the value count.
    levels: OnceLock<Vec<f64>>,
}

impl PartialEq for Filtration {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_values == other.vertex_values && self.edge_values == other.edge_values
    }
}

impl Filtration {
    /// Validates raw values against a graph: one finite value per vertex and
    /// edge, with `f(e) >= max(f(u), f(v))` for every edge `e = (u, v)`.
    pub fn new(graph: &Graph, vertex_values: Vec<f64>, edge_values: Vec<f64>) -> Result<Self> {
        if vertex_values.len() != graph.n_vertices() {
            return Err(Error::MissingValue(format!(
                "vertices (got {}, need {})",
                vertex_values.len(),
                graph.n_vertices()
            )));
        }
        if edge_values.len() != graph.n_edges() {
            return Err(Error::MissingValue(format!(
                "edges (got {}, need {})",
                edge_values.len(),
                graph.n_edges()
            )));
        }
        for (i, v) in vertex_values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteValue(format!("vertex {i}")));
            }
        }
        for (i, v) in edge_values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteValue(format!("edge {i}")));
            }
        }
        for e in graph.edges() {
            if edge_values[e.id] < vertex_values[e.u].max(vertex_values[e.v]) {
                return Err(Error::MonotonicityViolation(e.id));
            }
        }
        Ok(Self::new_unchecked(vertex_values, edge_values))
    }

    /// Builds a filtration without checking monotonicity. Used for
    /// ordering-only assignments produced by level permutations.
    pub(crate) fn new_unchecked(vertex_values: Vec<f64>, edge_values: Vec<f64>) -> Self {
        Filtration {
            vertex_values,
            edge_values,
            levels: OnceLock::new(),
        }
    }

    /// Completes vertex values to a vertex-based filtration:
    /// `f(e) = max(f(u), f(v))`.
    pub fn from_vertex_values(graph: &Graph, vertex_values: Vec<f64>) -> Result<Self> {
        if vertex_values.len() != graph.n_vertices() {
            return Err(Error::MissingValue(format!(
                "vertices (got {}, need {})",
                vertex_values.len(),
                graph.n_vertices()
            )));
        }
        let edge_values = graph
            .edges()
            .iter()
            .map(|e| vertex_values[e.u].max(vertex_values[e.v]))
            .collect();
        Filtration::new(graph, vertex_values, edge_values)
    }

    pub fn vertex_values(&self) -> &[f64] {
        &self.vertex_values
    }

    pub fn edge_values(&self) -> &[f64] {
        &self.edge_values
    }

    pub fn vertex_value(&self, v: usize) -> f64 {
        self.vertex_values[v]
    }

    pub fn edge_value(&self, e: usize) -> f64 {
        self.edge_values[e]
    }

    /// Sorted distinct values `a_0 < ... < a_n`.
    pub fn levels(&self) -> &[f64] {
        self.levels.get_or_init(|| {
            let mut levels: Vec<f64> = self
                .vertex_values
                .iter()
                .chain(self.edge_values.iter())
                .copied()
                .collect();
            levels.sort_by(|a, b| a.partial_cmp(b).unwrap());
            levels.dedup();
            levels
        })
    }

    pub fn n_levels(&self) -> usize {
        self.levels().len()
    }

    /// Index of a value in `levels`. Panics if the value is not a level.
    pub fn step_of(&self, value: f64) -> usize {
        self.levels()
            .binary_search_by(|probe| probe.partial_cmp(&value).unwrap())
            .expect("value is not a filtration level")
    }

    pub fn min_value(&self) -> f64 {
        *self.levels().first().expect("empty filtration")
    }

    pub fn max_value(&self) -> f64 {
        *self.levels().last().expect("empty filtration")
    }

    /// True when every edge value equals the maximum of its endpoints.
    pub fn is_vertex_based(&self, graph: &Graph) -> bool {
        graph
            .edges()
            .iter()
            .all(|e| self.edge_values[e.id] == self.vertex_values[e.u].max(self.vertex_values[e.v]))
    }

    /// Returns the id of the first edge violating the vertex-based property.
    pub fn require_vertex_based(&self, graph: &Graph) -> Result<()> {
        for e in graph.edges() {
            if self.edge_values[e.id] != self.vertex_values[e.u].max(self.vertex_values[e.v]) {
                return Err(Error::NotVertexBased(e.id));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let file = FiltrationFile {
            vertex_values: self.vertex_values.clone(),
            edge_values: Some(self.edge_values.clone()),
        };
        serde_json::to_string(&file).expect("filtration serialization cannot fail")
    }

    /// Parses a filtration file against a graph. When `edge_values` is
    /// absent the vertex values are completed by endpoint maximum.
    pub fn from_json(graph: &Graph, text: &str) -> Result<Self> {
        let file: FiltrationFile = serde_json::from_str(text)?;
        match file.edge_values {
            Some(edge_values) => Filtration::new(graph, file.vertex_values, edge_values),
            None => Filtration::from_vertex_values(graph, file.vertex_values),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct FiltrationFile {
    vertex_values: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_values: Option<Vec<f64>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path2() -> Graph {
        Graph::new(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn constant_filtration_single_level() {
        let f = Filtration::new(&path2(), vec![1.0, 1.0], vec![1.0]).unwrap();
        assert_eq!(f.levels(), &[1.0]);
        assert_eq!(f.step_of(1.0), 0);
    }

    #[test]
    fn monotonicity_violation_detected() {
        let err = Filtration::new(&path2(), vec![1.0, 2.0], vec![1.0]).unwrap_err();
        assert_eq!(err, Error::MonotonicityViolation(0));
    }

    #[test]
    fn degree_values_give_four_levels() {
        // 8-vertex witness graph used throughout the tests: vertex values
        // [1,3,2,3,4,1,2,2] with edges completed by endpoint maximum.
        let g = Graph::new(
            8,
            &[
                (0, 1),
                (1, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (4, 5),
                (4, 6),
                (4, 7),
                (6, 7),
            ],
        )
        .unwrap();
        let f =
            Filtration::from_vertex_values(&g, vec![1.0, 3.0, 2.0, 3.0, 4.0, 1.0, 2.0, 2.0])
                .unwrap();
        assert_eq!(f.levels(), &[1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn vertex_to_full_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(f.edge_values(), &[2.0, 3.0, 3.0]);
        assert!(f.is_vertex_based(&g));
    }

    #[test]
    fn isolated_vertex_only_levels() {
        let g = Graph::new(1, &[]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![5.0]).unwrap();
        assert!(f.edge_values().is_empty());
        assert_eq!(f.levels(), &[5.0]);
    }

    #[test]
    fn missing_value_rejected() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            Filtration::from_vertex_values(&g, vec![1.0]),
            Err(Error::MissingValue(_))
        ));
    }

    #[test]
    fn json_without_edges_completes_by_max() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let f = Filtration::from_json(&g, r#"{"vertex_values": [1.0, 2.0]}"#).unwrap();
        assert_eq!(f.edge_values(), &[2.0]);
    }
}
