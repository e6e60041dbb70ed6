//! Weighted digraphs and the shortest-path front-end to the Bellman solver.

use thiserror::Error;

use crate::matrix::{LinalgError, SemiringMatrix};
use crate::semiring::{ExtendedScalar, SemiringSpec};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("NodeOutOfRange: node {node} not in [0, {count})")]
    NodeOutOfRange { node: usize, count: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Directed graph with real edge weights; parallel edges are allowed and are
/// ⊕-combined when the adjacency matrix is built.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDigraph {
    node_count: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl WeightedDigraph {
    pub fn new(node_count: usize) -> Self {
        WeightedDigraph { node_count, edges: Vec::new() }
    }

    pub fn from_edges(node_count: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self, GraphError> {
        let mut g = Self::new(node_count);
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, from: usize, to: usize, weight: f64) -> Result<(), GraphError> {
        for node in [from, to] {
            if node >= self.node_count {
                return Err(GraphError::NodeOutOfRange { node, count: self.node_count });
            }
        }
        self.edges.push((from, to, weight));
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    /// Dense adjacency matrix: `H[u][v] = ⊕` of the weights of all `u → v`
    /// edges, `0̄` where there is no edge.
    pub fn adjacency_matrix(&self, spec: SemiringSpec) -> SemiringMatrix {
        let mut h = SemiringMatrix::zero(self.node_count, self.node_count, spec);
        for &(u, v, w) in &self.edges {
            h.set(u, v, spec.add(h.get(u, v), ExtendedScalar::finite(w)));
        }
        h
    }
}

/// Distance vector from `source` to every node: row `source` of `H*`.
///
/// With the min-plus spec this is single-source shortest paths; unreachable
/// nodes come back as `0̄` (+∞). With max-plus the same computation yields
/// longest paths and diverges on graphs with positive cycles.
pub fn shortest_paths(
    g: &WeightedDigraph,
    source: usize,
    spec: SemiringSpec,
) -> Result<Vec<ExtendedScalar>, GraphError> {
    if source >= g.node_count() {
        return Err(GraphError::NodeOutOfRange { node: source, count: g.node_count() });
    }
    let star = g.adjacency_matrix(spec).kleene_closure()?;
    Ok((0..g.node_count()).map(|j| star.get(source, j)).collect())
}
