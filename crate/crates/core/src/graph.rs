//! Finite multigraphs with self-loops.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// An edge with its id and endpoints. Ids are dense, `0..m`, in input order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
}

/// A finite undirected multigraph. Self-loops (`u == v`) and parallel edges
/// are allowed; edges are identified by id rather than endpoint pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Validates a raw vertex count and edge list.
    pub fn new(n_vertices: usize, raw_edges: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (id, &(u, v)) in raw_edges.iter().enumerate() {
            for endpoint in [u, v] {
                if endpoint >= n_vertices {
                    return Err(Error::EndpointOutOfRange {
                        edge: id,
                        endpoint,
                        n: n_vertices,
                    });
                }
            }
            edges.push(Edge { id, u, v });
        }
        Ok(Graph { n_vertices, edges })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// Adjacency lists as `(neighbor, edge_id)` pairs. Self-loops appear once.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n_vertices];
        for e in &self.edges {
            adj[e.u].push((e.v, e.id));
            if e.u != e.v {
                adj[e.v].push((e.u, e.id));
            }
        }
        adj
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        self.component_ids().1
    }

    /// Per-vertex component id plus the number of components.
    pub fn component_ids(&self) -> (Vec<usize>, usize) {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n_vertices];
        let mut count = 0;
        for start in 0..self.n_vertices {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(x) = stack.pop() {
                for &(y, _) in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn to_json(&self) -> String {
        let file = GraphFile {
            n: self.n_vertices as i64,
            edges: self.edges.iter().map(|e| [e.u as i64, e.v as i64]).collect(),
        };
        serde_json::to_string(&file).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)?;
        if file.n < 0 {
            return Err(Error::NegativeCount);
        }
        let mut raw = Vec::with_capacity(file.edges.len());
        for (id, pair) in file.edges.iter().enumerate() {
            if pair[0] < 0 || pair[1] < 0 {
                return Err(Error::EndpointOutOfRange {
                    edge: id,
                    endpoint: 0,
                    n: file.n.max(0) as usize,
                });
            }
            raw.push((pair[0] as usize, pair[1] as usize));
        }
        Graph::new(file.n as usize, &raw)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: i64,
    edges: Vec<[i64; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_path() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.n_edges(), 1);
        assert_eq!(g.component_count(), 1);
    }

    #[test]
    fn self_loop_allowed() {
        let g = Graph::new(1, &[(0, 0)]).unwrap();
        assert_eq!(g.n_edges(), 1);
        assert_eq!(g.component_count(), 1);
    }

    #[test]
    fn endpoint_out_of_range() {
        let err = Graph::new(2, &[(0, 3)]).unwrap_err();
        assert_eq!(
            err,
            Error::EndpointOutOfRange {
                edge: 0,
                endpoint: 3,
                n: 2
            }
        );
    }

    #[test]
    fn multi_edges_kept_distinct() {
        let g = Graph::new(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.n_edges(), 2);
        assert_ne!(g.edge(0).id, g.edge(1).id);
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 2)]).unwrap();
        let back = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn negative_count_rejected() {
        assert_eq!(
            Graph::from_json(r#"{"n": -1, "edges": []}"#).unwrap_err(),
            Error::NegativeCount
        );
    }
}
