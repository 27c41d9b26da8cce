//! Simple undirected graphs with dense vertex ids, plus the structural
//! machinery the invariants are built on: all-pairs distances, block
//! decomposition, cactus predicates, canonical forms and text formats.

mod blocks;
mod canon;
mod distance;
mod io;
mod structure;

pub use blocks::{block_decomposition, BlockDecomposition};
pub use canon::{canonical_form, canonical_form_with_limit, CanonicalForm, DEFAULT_CANON_LIMIT};
pub use distance::{all_pairs_distances, bfs_distances, DistanceMatrix};
pub use io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph, parse_graph6};
pub use structure::{
    cactus_cycle_count, cycle_blocks, internal_paths, is_chain_cactus, pendant_paths,
};

use std::collections::VecDeque;

use thiserror::Error;

/// Vertex identifier: dense and zero-based.
pub type VertexId = usize;

/// Position of an edge in a graph's sorted edge sequence.
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    InvalidEdge(VertexId),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    InvalidVertex { vertex: VertexId, order: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(VertexId, VertexId),
    #[error("edge index {index} out of range ({size} edges)")]
    InvalidEdgeIndex { index: EdgeId, size: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("not a cactus: block {block} is neither an edge nor a cycle")]
    NotCactus { block: usize },
    #[error("graph on {order} vertices exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// A finite simple undirected graph on vertices `0..vertex_count`.
///
/// Edges are stored normalized (`u < v`) and sorted, so every graph has a
/// deterministic edge indexing that the distance tables and rewrites share.
/// Graphs are immutable once built; edits produce new graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, out-of-range ids and
    /// repeated pairs (in either orientation).
    pub fn from_edges<I>(order: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::InvalidVertex { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::InvalidEdge(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            order,
            edges,
            adjacency,
        })
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); order],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in index order, each as `(smaller, larger)`.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, index: EdgeId) -> Result<(VertexId, VertexId), GraphError> {
        self.edges
            .get(index)
            .copied()
            .ok_or(GraphError::InvalidEdgeIndex {
                index,
                size: self.edges.len(),
            })
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order && v < self.order && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Index of edge `uv` in the sorted edge sequence.
    pub fn edge_index(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.order {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.order
    }

    pub(crate) fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// Returns `self - removed + added`. Removing a missing edge is an error,
    /// as is adding one that is already present.
    pub fn with_edits(
        &self,
        removed: &[(VertexId, VertexId)],
        added: &[(VertexId, VertexId)],
    ) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        for &(u, v) in removed {
            let key = (u.min(v), u.max(v));
            match edges.binary_search(&key) {
                Ok(pos) => {
                    edges.remove(pos);
                }
                Err(_) => return Err(GraphError::MissingEdge(key.0, key.1)),
            }
        }
        edges.extend_from_slice(added);
        Graph::from_edges(self.order, edges)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of
    /// `0..vertex_count`.
    pub fn relabel(&self, perm: &[VertexId]) -> Graph {
        assert_eq!(perm.len(), self.order, "permutation length mismatch");
        Graph::from_edges(
            self.order,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("relabeling by a permutation preserves simplicity")
    }
}
