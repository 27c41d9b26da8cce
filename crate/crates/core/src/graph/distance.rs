use std::collections::VecDeque;

use super::{Graph, GraphError, VertexId};

/// Hop-count distances between every ordered pair of vertices.
///
/// Entries are 16-bit; a connected graph on `n` vertices has diameter below
/// `n`, so any graph that fits is safe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u16>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> u64 {
        u64::from(self.dist[u * self.order + v])
    }

    /// Distances from `u` to every vertex, by vertex id.
    pub fn row(&self, u: VertexId) -> &[u16] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }
}

/// Single-source BFS. Unreached vertices are `None`.
pub fn bfs_distances(g: &Graph, source: VertexId) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].map(|d| d + 1);
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Exact all-pairs hop counts by one BFS per vertex.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.vertex_count();
    if n > usize::from(u16::MAX) {
        return Err(GraphError::TooLarge {
            order: n,
            limit: usize::from(u16::MAX),
        });
    }
    let mut dist = vec![u16::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            let d = row[u] + 1;
            for &w in g.neighbors(u) {
                if row[w] == u16::MAX {
                    row[w] = d;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != n {
            return Err(GraphError::Disconnected);
        }
    }
    Ok(DistanceMatrix { order: n, dist })
}
