//! Maximum cut: the weight of edges crossing the selected vertex set.
//! Non-monotone, submodular, symmetric and non-negative; `f(∅) = f(V) = 0`.

use alloc::vec::Vec;
use core::fmt;

use crate::oracle::SetFunction;
use crate::solution::{GroundSet, SubsetSolution};

#[derive(Clone, Debug)]
pub struct WeightedGraph {
    ground: GroundSet,
    edges: Vec<(u32, u32, f64)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphError {
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    SelfLoop { edge: usize, vertex: usize },
    DuplicateEdge { edge: usize, u: usize, v: usize },
    NegativeWeight { edge: usize, weight: f64 },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { edge, vertex, n } => {
                write!(f, "edge {edge}: vertex {vertex} out of range (n = {n})")
            }
            GraphError::SelfLoop { edge, vertex } => {
                write!(f, "edge {edge}: self loop at vertex {vertex}")
            }
            GraphError::DuplicateEdge { edge, u, v } => {
                write!(f, "edge {edge}: duplicate undirected edge ({u}, {v})")
            }
            GraphError::NegativeWeight { edge, weight } => {
                write!(f, "edge {edge}: negative weight {weight}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

impl WeightedGraph {
    pub fn new(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self, GraphError> {
        let ground = GroundSet::new(n);
        let mut seen = alloc::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for (idx, &(u, v, w)) in edges.iter().enumerate() {
            for &x in [u, v].iter() {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        edge: idx,
                        vertex: x,
                        n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge: idx, vertex: u });
            }
            if !(w >= 0.0) {
                return Err(GraphError::NegativeWeight { edge: idx, weight: w });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge { edge: idx, u, v });
            }
            out.push((u as u32, v as u32, w));
        }
        Ok(WeightedGraph { ground, edges: out })
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn edges(&self) -> &[(u32, u32, f64)] {
        &self.edges
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.2).sum()
    }
}

/// The cut value oracle over a weighted graph.
#[derive(Clone, Debug)]
pub struct CutFunction {
    graph: WeightedGraph,
}

impl CutFunction {
    pub fn new(graph: WeightedGraph) -> Self {
        CutFunction { graph }
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }
}

impl SetFunction for CutFunction {
    fn ground_set(&self) -> &GroundSet {
        &self.graph.ground
    }

    fn evaluate(&self, x: &SubsetSolution) -> f64 {
        let mut total = 0.0;
        for &(u, v, w) in self.graph.edges.iter() {
            if x.contains(u as usize) != x.contains(v as usize) {
                total += w;
            }
        }
        total
    }

    fn is_monotone(&self) -> bool {
        false
    }

    fn is_non_negative(&self) -> bool {
        true
    }
}
