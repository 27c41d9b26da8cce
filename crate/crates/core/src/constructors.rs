//! Builders for the named graph families, each with a fixed labeling.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

fn invalid(msg: impl Into<String>) -> ConstructError {
    ConstructError::InvalidParams(msg.into())
}

/// A class of cacti with `n` vertices and `t` cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CactusClassParams {
    pub n: usize,
    pub t: usize,
}

impl CactusClassParams {
    /// Requires `n >= 1` and `n >= 2t + 1`.
    pub fn new(n: usize, t: usize) -> Result<Self, ConstructError> {
        if n == 0 {
            return Err(invalid("n must be at least 1"));
        }
        if n < 2 * t + 1 {
            return Err(invalid(format!("n = {n} is below 2t + 1 = {}", 2 * t + 1)));
        }
        Ok(CactusClassParams { n, t })
    }

    /// Every member has `n + t - 1` edges.
    pub fn edge_count(&self) -> usize {
        self.n + self.t - 1
    }

    /// `k` with `t = 2k` or `t = 2k + 1`.
    pub fn k(&self) -> usize {
        self.t / 2
    }

    /// All classes with `min_n <= n <= max_n`, ordered by `(n, t)`.
    pub fn sweep(min_n: usize, max_n: usize) -> Vec<CactusClassParams> {
        (min_n.max(1)..=max_n)
            .flat_map(|n| (0..=(n - 1) / 2).map(move |t| CactusClassParams { n, t }))
            .collect()
    }
}

/// `P_n` on `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, ConstructError> {
    if n == 0 {
        return Err(invalid("path needs at least one vertex"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path"))
}

/// `C_n` with edges `v (v+1 mod n)`.
pub fn cycle(n: usize) -> Result<Graph, ConstructError> {
    if n < 3 {
        return Err(invalid("cycle needs at least three vertices"));
    }
    Ok(Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle"))
}

/// `S_n` with center 0.
pub fn star(n: usize) -> Result<Graph, ConstructError> {
    if n == 0 {
        return Err(invalid("star needs at least one vertex"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("valid star"))
}

/// `C_0(n, t)`: hub 0 carries triangle `0 (2i+1) (2i+2)` for each `i < t`,
/// and pendant vertices `2t+1 .. n-1`.
pub fn bundle(params: CactusClassParams) -> Result<Graph, ConstructError> {
    let CactusClassParams { n, t } = CactusClassParams::new(params.n, params.t)?;
    let mut edges = Vec::with_capacity(n + t - 1);
    for i in 0..t {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    edges.extend((2 * t + 1..n).map(|v| (0, v)));
    Ok(Graph::from_edges(n, edges).expect("valid bundle"))
}

fn chain_edges(i: usize, offset: VertexId, edges: &mut Vec<(VertexId, VertexId)>) {
    for k in 0..i {
        let a = offset + 2 * k;
        edges.extend([(a, a + 1), (a + 1, a + 2), (a, a + 2)]);
    }
}

/// Triangle chain of length `i` on `0..=2i`: triangle `k` is
/// `(2k, 2k+1, 2k+2)`. Returns the graph and its ends `0` and `2i`.
pub fn triangle_chain(i: usize) -> (Graph, VertexId, VertexId) {
    let mut edges = Vec::new();
    chain_edges(i, 0, &mut edges);
    (
        Graph::from_edges(2 * i + 1, edges).expect("valid chain"),
        0,
        2 * i,
    )
}

/// The saw graph `Sw(i, j; n - 2i - 2j - 1)`: a triangle chain of length `i`
/// on `0..=2i`, a path on `p = n - 2i - 2j` vertices from `u = 2i` to
/// `v = 2i + p - 1`, and a triangle chain of length `j` starting at `v`.
pub fn saw(i: usize, j: usize, n: usize) -> Result<Graph, ConstructError> {
    if n < 2 * i + 2 * j + 1 {
        return Err(invalid(format!(
            "saw({i}, {j}) needs at least {} vertices, got {n}",
            2 * i + 2 * j + 1
        )));
    }
    let p = n - 2 * i - 2 * j;
    let u = 2 * i;
    let v = u + p - 1;
    let mut edges = Vec::with_capacity(n - 1 + i + j);
    chain_edges(i, 0, &mut edges);
    edges.extend((u + 1..=v).map(|x| (x - 1, x)));
    chain_edges(j, v, &mut edges);
    Ok(Graph::from_edges(n, edges).expect("valid saw"))
}

/// `D_l = C_l - v_1 v_l + v_{l-2} v_l`, with `v_k` labeled `k - 1`: the path
/// `0 .. l-1` plus the chord `(l-3, l-1)`.
pub fn clipped_cycle(l: usize) -> Result<Graph, ConstructError> {
    if l < 4 {
        return Err(invalid("clipped cycle needs l >= 4"));
    }
    let edges = (1..l).map(|v| (v - 1, v)).chain([(l - 3, l - 1)]);
    Ok(Graph::from_edges(l, edges).expect("valid clipped cycle"))
}

/// Chain of blocks with the given sizes: `2` is an edge, `g >= 3` a cycle of
/// length `g`. Block `b` occupies `a, a+1, .., a+g-1` in cycle order, where
/// `a` is the attachment vertex it shares with the previous block; the next
/// block attaches at `a + g/2` (rounded down), or at `a + 1` for an edge.
pub fn chain_cactus(blocks: &[usize]) -> Result<Graph, ConstructError> {
    if let Some(&g) = blocks.iter().find(|&&g| g < 2) {
        return Err(invalid(format!("block size {g} is below 2")));
    }
    let mut edges = Vec::new();
    let mut attach = 0;
    let mut next = 1;
    for &g in blocks {
        let ring: Vec<VertexId> = std::iter::once(attach).chain(next..next + g - 1).collect();
        next += g - 1;
        if g == 2 {
            edges.push((ring[0], ring[1]));
        } else {
            edges.extend((0..g).map(|k| (ring[k], ring[(k + 1) % g])));
        }
        attach = ring[if g == 2 { 1 } else { g / 2 }];
    }
    Ok(Graph::from_edges(next, edges).expect("valid chain cactus"))
}

/// Result of [`coalesce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalesced {
    pub graph: Graph,
    /// The identified vertex; it keeps its id `u1` from the first operand.
    pub shared: VertexId,
    /// New id of each vertex of the second operand.
    pub second: Vec<VertexId>,
}

/// Identifies `u1` of `g1` with `u2` of `g2`. The first operand keeps its
/// labels; the remaining vertices of `g2` follow in their original order.
pub fn coalesce(
    g1: &Graph,
    u1: VertexId,
    g2: &Graph,
    u2: VertexId,
) -> Result<Coalesced, ConstructError> {
    let n1 = g1.vertex_count();
    if u1 >= n1 || u2 >= g2.vertex_count() {
        return Err(invalid("coalescence vertex out of range"));
    }
    let second: Vec<VertexId> = (0..g2.vertex_count())
        .map(|v| match v.cmp(&u2) {
            std::cmp::Ordering::Equal => u1,
            std::cmp::Ordering::Less => n1 + v,
            std::cmp::Ordering::Greater => n1 + v - 1,
        })
        .collect();
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(a, b)| (second[a], second[b])));
    let graph =
        Graph::from_edges(n1 + g2.vertex_count() - 1, edges).expect("disjoint union is simple");
    Ok(Coalesced {
        graph,
        shared: u1,
        second,
    })
}
