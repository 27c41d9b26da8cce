use super::{EdgeId, Graph, GraphError, VertexId};

/// Biconnected components of a connected graph.
///
/// Blocks are edge-index sets (sorted), ordered by their smallest edge index.
/// Cut vertices are exactly the vertices lying in two or more blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Vec<EdgeId>>,
    block_vertices: Vec<Vec<VertexId>>,
    cut_vertices: Vec<VertexId>,
    blocks_at: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> &[Vec<EdgeId>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Sorted vertex set of block `b`.
    pub fn vertices(&self, b: usize) -> &[VertexId] {
        &self.block_vertices[b]
    }

    /// Sorted cut vertices.
    pub fn cut_vertices(&self) -> &[VertexId] {
        &self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: VertexId) -> bool {
        self.blocks_at[v].len() > 1
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_at(&self, v: VertexId) -> &[usize] {
        &self.blocks_at[v]
    }

    /// Cut vertices lying in block `b`.
    pub fn cut_vertices_of(&self, b: usize) -> impl Iterator<Item = VertexId> + '_ {
        self.block_vertices[b]
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
    }
}

struct Frame {
    vertex: VertexId,
    parent_edge: Option<EdgeId>,
    next: usize,
}

/// Lowpoint depth-first search rooted at vertex 0.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, GraphError> {
    g.require_connected()?;
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks: Vec<Vec<EdgeId>> = Vec::new();
    let mut clock = 0;

    if n > 0 {
        disc[0] = 0;
        low[0] = 0;
        clock = 1;
    }
    let mut stack = if n > 0 {
        vec![Frame {
            vertex: 0,
            parent_edge: None,
            next: 0,
        }]
    } else {
        Vec::new()
    };

    while let Some(top) = stack.last_mut() {
        let v = top.vertex;
        if let Some(&w) = g.neighbors(v).get(top.next) {
            top.next += 1;
            let e = g.edge_index(v, w).expect("adjacency and edge list agree");
            if Some(e) == top.parent_edge {
                continue;
            }
            if disc[w] == usize::MAX {
                edge_stack.push(e);
                disc[w] = clock;
                low[w] = clock;
                clock += 1;
                stack.push(Frame {
                    vertex: w,
                    parent_edge: Some(e),
                    next: 0,
                });
            } else if disc[w] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
        } else {
            let finished = stack.pop().expect("non-empty");
            if let (Some(parent), Some(tree_edge)) = (stack.last(), finished.parent_edge) {
                let p = parent.vertex;
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == tree_edge {
                            break;
                        }
                    }
                    block.sort_unstable();
                    blocks.push(block);
                }
            }
        }
    }

    blocks.sort_unstable_by_key(|b| b[0]);
    let mut blocks_at = vec![Vec::new(); n];
    let block_vertices: Vec<Vec<VertexId>> = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let mut vs: Vec<VertexId> = b
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.edges()[e];
                    [u, v]
                })
                .collect();
            vs.sort_unstable();
            vs.dedup();
            for &v in &vs {
                blocks_at[v].push(i);
            }
            vs
        })
        .collect();
    let cut_vertices = (0..n).filter(|&v| blocks_at[v].len() > 1).collect();
    Ok(BlockDecomposition {
        blocks,
        block_vertices,
        cut_vertices,
        blocks_at,
    })
}
