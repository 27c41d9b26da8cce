use super::{block_decomposition, BlockDecomposition, Graph, GraphError, VertexId};

fn is_cycle_block(g: &Graph, blocks: &BlockDecomposition, b: usize) -> bool {
    let vertices = blocks.vertices(b);
    let edges = &blocks.blocks()[b];
    if edges.len() != vertices.len() {
        return false;
    }
    // A biconnected block with |E| = |V| is a cycle; the degree check makes
    // the test independent of how the block was found.
    let mut deg = vec![0usize; g.vertex_count()];
    for &e in edges {
        let (u, v) = g.edges()[e];
        deg[u] += 1;
        deg[v] += 1;
    }
    vertices.iter().all(|&v| deg[v] == 2)
}

fn checked_blocks(g: &Graph) -> Result<BlockDecomposition, GraphError> {
    let blocks = block_decomposition(g)?;
    for (b, edges) in blocks.blocks().iter().enumerate() {
        if edges.len() > 1 && !is_cycle_block(g, &blocks, b) {
            return Err(GraphError::NotCactus { block: b });
        }
    }
    Ok(blocks)
}

/// Number of cycles of a cactus, i.e. of blocks that are cycles.
///
/// Fails with [`GraphError::NotCactus`] when some block is neither a single
/// edge nor a chordless cycle.
pub fn cactus_cycle_count(g: &Graph) -> Result<usize, GraphError> {
    let blocks = checked_blocks(g)?;
    Ok(blocks.blocks().iter().filter(|b| b.len() > 1).count())
}

/// The cycles of a cactus, each as its vertices in cyclic order. Each cycle
/// starts at its smallest vertex and continues towards the smaller of that
/// vertex's two cycle neighbors.
pub fn cycle_blocks(g: &Graph) -> Result<Vec<Vec<VertexId>>, GraphError> {
    let blocks = checked_blocks(g)?;
    let mut cycles = Vec::new();
    for (b, edges) in blocks.blocks().iter().enumerate() {
        if edges.len() < 2 {
            continue;
        }
        let members = blocks.vertices(b);
        let in_block = |u: VertexId, v: VertexId| {
            g.edge_index(u, v)
                .is_some_and(|e| edges.binary_search(&e).is_ok())
        };
        let start = members[0];
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = *g
            .neighbors(start)
            .iter()
            .find(|&&w| in_block(start, w))
            .expect("cycle vertex has block neighbors");
        while cur != start {
            order.push(cur);
            let next = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| w != prev && in_block(cur, w))
                .expect("cycle continues");
            prev = cur;
            cur = next;
        }
        cycles.push(order);
    }
    Ok(cycles)
}

/// True when every block has at most two cut vertices and every cut vertex
/// lies in exactly two blocks.
pub fn is_chain_cactus(g: &Graph) -> Result<bool, GraphError> {
    let blocks = checked_blocks(g)?;
    let narrow_blocks = (0..blocks.len()).all(|b| blocks.cut_vertices_of(b).count() <= 2);
    let shared_by_two = blocks
        .cut_vertices()
        .iter()
        .all(|&v| blocks.blocks_at(v).len() == 2);
    Ok(narrow_blocks && shared_by_two)
}

/// Walks from `start` through `first` and onwards across degree-2 vertices,
/// returning the walk up to and including the first vertex whose degree is
/// not 2 (or `start` again, if the walk closes up).
fn walk_degree_two(g: &Graph, start: VertexId, first: VertexId) -> Vec<VertexId> {
    let mut walk = vec![start, first];
    let (mut prev, mut cur) = (start, first);
    while g.degree(cur) == 2 && cur != start {
        let next = g.neighbors(cur)[usize::from(g.neighbors(cur)[0] == prev)];
        walk.push(next);
        prev = cur;
        cur = next;
    }
    walk
}

/// Internal paths in the sense of Hoffman and Smith: walks `v0 v1 ... vs`
/// (`s >= 1`) on distinct vertices with `deg(v0) > 2`, `deg(vs) > 2` and every
/// interior vertex of degree 2. Each path is reported once, in the orientation
/// that is lexicographically smaller; the list is sorted.
pub fn internal_paths(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut paths = Vec::new();
    for v0 in 0..g.vertex_count() {
        if g.degree(v0) <= 2 {
            continue;
        }
        for &w in g.neighbors(v0) {
            let walk = walk_degree_two(g, v0, w);
            let end = *walk.last().expect("non-empty walk");
            if end == v0 || g.degree(end) <= 2 {
                continue;
            }
            let reversed: Vec<VertexId> = walk.iter().rev().copied().collect();
            if walk < reversed {
                paths.push(walk);
            }
        }
    }
    paths.sort();
    paths
}

/// Pendant paths: maximal walks that start at a degree-1 vertex and pass
/// through degree-2 vertices until they reach the vertex attaching them to
/// the rest of the graph. On a path graph the whole graph is the single
/// pendant path.
pub fn pendant_paths(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut paths = Vec::new();
    for leaf in 0..g.vertex_count() {
        if g.degree(leaf) != 1 {
            continue;
        }
        let walk = walk_degree_two(g, leaf, g.neighbors(leaf)[0]);
        let end = *walk.last().expect("non-empty walk");
        if g.degree(end) == 1 && end < leaf {
            continue;
        }
        paths.push(walk);
    }
    paths.sort();
    paths
}
