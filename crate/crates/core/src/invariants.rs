//! Distance sums: the Wiener index, the edge-Wiener index and the
//! vertex-to-edge sums `D_v`.
//!
//! The distance between edges `f = ab` and `h = cd` is
//! `min(d(a,c), d(a,d), d(b,c), d(b,d)) + 1`, and `0` when `f = h`. The
//! distance from a vertex `v` to an edge `f = ab` is `min(d(v,a), d(v,b))`.

use thiserror::Error;

use crate::graph::{all_pairs_distances, DistanceMatrix, EdgeId, Graph, GraphError, VertexId};

/// Largest edge count for which [`EdgeDistanceTable`] is materialized.
pub const EDGE_TABLE_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("coalescence operand has no edges")]
    DegenerateOperand,
}

pub fn wiener(g: &Graph) -> Result<u64, GraphError> {
    let d = all_pairs_distances(g)?;
    Ok(wiener_from(&d))
}

pub fn wiener_from(d: &DistanceMatrix) -> u64 {
    let n = d.order();
    (0..n)
        .map(|u| d.row(u)[u + 1..].iter().map(|&x| u64::from(x)).sum::<u64>())
        .sum()
}

#[inline]
fn pair_distance(d: &DistanceMatrix, f: (VertexId, VertexId), h: (VertexId, VertexId)) -> u64 {
    let (a, b) = f;
    let (c, e) = h;
    d.get(a, c)
        .min(d.get(a, e))
        .min(d.get(b, c))
        .min(d.get(b, e))
        + 1
}

/// Distance between edges `f` and `h`, given by index.
pub fn edge_distance(g: &Graph, f: EdgeId, h: EdgeId) -> Result<u64, GraphError> {
    let ef = g.edge(f)?;
    let eh = g.edge(h)?;
    if f == h {
        return Ok(0);
    }
    let d = all_pairs_distances(g)?;
    Ok(pair_distance(&d, ef, eh))
}

pub fn edge_wiener(g: &Graph) -> Result<u64, GraphError> {
    let d = all_pairs_distances(g)?;
    Ok(edge_wiener_from(g, &d))
}

/// Edge-Wiener index from a precomputed distance matrix of `g`.
pub fn edge_wiener_from(g: &Graph, d: &DistanceMatrix) -> u64 {
    let edges = g.edges();
    let mut total = 0;
    for (i, &f) in edges.iter().enumerate() {
        for &h in &edges[i + 1..] {
            total += pair_distance(d, f, h);
        }
    }
    total
}

/// `D_v(G)`: the sum over all edges of their distance to `v`.
pub fn vertex_edge_sum(g: &Graph, v: VertexId) -> Result<u64, GraphError> {
    g.check_vertex(v)?;
    let d = all_pairs_distances(g)?;
    Ok(vertex_edge_sum_from(g, &d, v))
}

pub fn vertex_edge_sum_from(g: &Graph, d: &DistanceMatrix, v: VertexId) -> u64 {
    g.edges()
        .iter()
        .map(|&(a, b)| d.get(v, a).min(d.get(v, b)))
        .sum()
}

/// Edge-Wiener index of the graph obtained by identifying `u1` in `g1` with
/// `u2` in `g2`, computed from the two parts alone:
///
/// `W_e(G1) + W_e(G2) + m1 D_{u2}(G2) + m2 D_{u1}(G1) + m1 m2`.
pub fn coalescence_edge_wiener(
    g1: &Graph,
    u1: VertexId,
    g2: &Graph,
    u2: VertexId,
) -> Result<u64, InvariantError> {
    g1.check_vertex(u1)?;
    g2.check_vertex(u2)?;
    let (m1, m2) = (g1.edge_count() as u64, g2.edge_count() as u64);
    if m1 == 0 || m2 == 0 {
        return Err(InvariantError::DegenerateOperand);
    }
    let d1 = all_pairs_distances(g1)?;
    let d2 = all_pairs_distances(g2)?;
    Ok(edge_wiener_from(g1, &d1)
        + edge_wiener_from(g2, &d2)
        + m1 * vertex_edge_sum_from(g2, &d2, u2)
        + m2 * vertex_edge_sum_from(g1, &d1, u1)
        + m1 * m2)
}

/// All pairwise edge distances, indexed by the graph's edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDistanceTable {
    m: usize,
    dist: Vec<u32>,
}

impl EdgeDistanceTable {
    pub fn new(g: &Graph) -> Result<Self, GraphError> {
        let m = g.edge_count();
        if m > EDGE_TABLE_LIMIT {
            return Err(GraphError::TooLarge {
                order: m,
                limit: EDGE_TABLE_LIMIT,
            });
        }
        let d = all_pairs_distances(g)?;
        let edges = g.edges();
        let mut dist = vec![0; m * m];
        for i in 0..m {
            for j in i + 1..m {
                let x = pair_distance(&d, edges[i], edges[j]) as u32;
                dist[i * m + j] = x;
                dist[j * m + i] = x;
            }
        }
        Ok(EdgeDistanceTable { m, dist })
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn get(&self, f: EdgeId, h: EdgeId) -> u64 {
        u64::from(self.dist[f * self.m + h])
    }

    pub fn total(&self) -> u64 {
        (0..self.m)
            .flat_map(|i| (i + 1..self.m).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use std::collections::VecDeque;

    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (0, v))).unwrap()
    }

    /// Floyd-Warshall, independent of the BFS kernel.
    #[allow(clippy::needless_range_loop)]
    fn floyd(g: &Graph) -> Vec<Vec<u64>> {
        let n = g.vertex_count();
        let inf = u64::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for v in 0..n {
            d[v][v] = 0;
        }
        for &(u, v) in g.edges() {
            d[u][v] = 1;
            d[v][u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        d
    }

    fn brute_edge_wiener(g: &Graph) -> u64 {
        let d = floyd(g);
        let e = g.edges();
        let mut total = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                let (a, b) = e[i];
                let (c, x) = e[j];
                total += [d[a][c], d[a][x], d[b][c], d[b][x]]
                    .into_iter()
                    .min()
                    .unwrap()
                    + 1;
            }
        }
        total
    }

    /// Builds the line graph explicitly, then sums BFS distances in it.
    fn line_graph_wiener(g: &Graph) -> u64 {
        let e = g.edges();
        let m = e.len();
        let adj: Vec<Vec<usize>> = (0..m)
            .map(|i| {
                (0..m)
                    .filter(|&j| {
                        j != i
                            && (e[i].0 == e[j].0
                                || e[i].0 == e[j].1
                                || e[i].1 == e[j].0
                                || e[i].1 == e[j].1)
                    })
                    .collect()
            })
            .collect();
        let mut total = 0;
        for s in 0..m {
            let mut dist = vec![usize::MAX; m];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            total += dist[s + 1..].iter().map(|&x| x as u64).sum::<u64>();
        }
        total
    }

    fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (rng.random_range(0..v), v))).unwrap()
    }

    /// Random connected graph: a random tree plus a few extra edges.
    fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
        for _ in 0..rng.random_range(0..=n) {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a != b
                && !edges.contains(&(a.min(b), a.max(b)))
                && !edges.contains(&(a.max(b), a.min(b)))
            {
                edges.push((a.min(b), a.max(b)));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn small_wiener_values() {
        assert_eq!(wiener(&path(4)), Ok(10));
        assert_eq!(wiener(&cycle(5)), Ok(15));
        assert_eq!(wiener(&cycle(4)), Ok(8));
        assert_eq!(wiener(&star(5)), Ok(16));
    }

    #[test]
    fn edge_distance_cases() {
        let p4 = path(4);
        assert_eq!(edge_distance(&p4, 0, 1), Ok(1));
        assert_eq!(edge_distance(&p4, 1, 1), Ok(0));
        assert_eq!(edge_distance(&p4, 0, 2), Ok(2));
        assert!(matches!(
            edge_distance(&p4, 0, 3),
            Err(GraphError::InvalidEdgeIndex { index: 3, size: 3 })
        ));
    }

    #[test]
    fn small_edge_wiener_values() {
        assert_eq!(edge_wiener(&cycle(3)), Ok(3));
        assert_eq!(edge_wiener(&star(5)), Ok(6));
        assert_eq!(edge_wiener(&cycle(5)), Ok(15));
        assert_eq!(edge_wiener(&Graph::empty(1)), Ok(0));
        let disconnected = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(edge_wiener(&disconnected), Err(GraphError::Disconnected));
    }

    #[test]
    fn vertex_edge_sums() {
        assert_eq!(vertex_edge_sum(&star(5), 0), Ok(0));
        assert_eq!(vertex_edge_sum(&path(3), 0), Ok(1));
        // bundle(5,1): hub 0, triangle 0-1-2, pendants 3 and 4
        let b = g(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]);
        let d = floyd(&b);
        let brute: u64 = b.edges().iter().map(|&(x, y)| d[1][x].min(d[1][y])).sum();
        assert_eq!(vertex_edge_sum(&b, 1), Ok(brute));
        assert_eq!(brute, 3);
    }

    #[test]
    fn coalescence_examples() {
        let k2 = path(2);
        assert_eq!(coalescence_edge_wiener(&k2, 0, &k2, 0), Ok(1));
        let k3 = cycle(3);
        assert_eq!(coalescence_edge_wiener(&k3, 0, &k2, 0), Ok(7));
        // two pendant edges (P_3 at its middle) glued to a triangle
        assert_eq!(coalescence_edge_wiener(&path(3), 1, &k3, 0), Ok(12));
        assert_eq!(
            coalescence_edge_wiener(&Graph::empty(1), 0, &k3, 0),
            Err(InvariantError::DegenerateOperand)
        );
    }

    #[test]
    fn cycles_and_paths_match_wiener_identities() {
        for n in 3..=60 {
            assert_eq!(edge_wiener(&cycle(n)), wiener(&cycle(n)), "C_{n}");
        }
        for n in 2..=60 {
            assert_eq!(edge_wiener(&path(n)), wiener(&path(n - 1)), "P_{n}");
        }
    }

    #[test]
    fn stars() {
        for n in 3..=60u64 {
            assert_eq!(edge_wiener(&star(n as usize)), Ok((n - 1) * (n - 2) / 2));
        }
    }

    #[test]
    fn trees_match_line_graph_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.random_range(2..=10);
            let t = random_tree(&mut rng, n);
            assert_eq!(edge_wiener(&t).unwrap(), line_graph_wiener(&t));
        }
    }

    #[test]
    fn table_agrees_with_streaming_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let n = rng.random_range(1..=12);
            let h = random_connected(&mut rng, n);
            let table = EdgeDistanceTable::new(&h).unwrap();
            assert_eq!(table.total(), edge_wiener(&h).unwrap());
            for f in 0..table.edge_count() {
                assert_eq!(table.get(f, f), 0);
                for e in 0..table.edge_count() {
                    assert_eq!(table.get(f, e), table.get(e, f));
                    assert_eq!(table.get(f, e), edge_distance(&h, f, e).unwrap());
                }
            }
        }
    }

    fn glue(g1: &Graph, u1: usize, g2: &Graph, u2: usize) -> Graph {
        // g2's vertices go after g1's, with u2 mapped onto u1
        let n1 = g1.vertex_count();
        let map = |v: usize| match v.cmp(&u2) {
            std::cmp::Ordering::Equal => u1,
            std::cmp::Ordering::Less => n1 + v,
            std::cmp::Ordering::Greater => n1 + v - 1,
        };
        let edges = g1
            .edges()
            .iter()
            .copied()
            .chain(g2.edges().iter().map(|&(a, b)| (map(a), map(b))));
        Graph::from_edges(n1 + g2.vertex_count() - 1, edges).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn coalescence_matches_merged_graph(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n1 = rng.random_range(2..=8);
            let n2 = rng.random_range(2..=8);
            let g1 = random_connected(&mut rng, n1);
            let g2 = random_connected(&mut rng, n2);
            let u1 = rng.random_range(0..n1);
            let u2 = rng.random_range(0..n2);
            let merged = glue(&g1, u1, &g2, u2);
            prop_assert_eq!(coalescence_edge_wiener(&g1, u1, &g2, u2).unwrap(), brute_edge_wiener(&merged));
        }

        #[test]
        fn edge_wiener_matches_floyd(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.random_range(1..=12);
            let h = random_connected(&mut rng, n);
            prop_assert_eq!(edge_wiener(&h).unwrap(), brute_edge_wiener(&h));
            let d = floyd(&h);
            let w: u64 = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).map(|(u, v)| d[u][v]).sum();
            prop_assert_eq!(wiener(&h).unwrap(), w);
        }
    }
}
