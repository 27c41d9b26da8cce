use crate::constructors::{coalesce, cycle as cycle_graph, path};
use crate::graph::{bfs_distances, Graph, VertexId};
use crate::invariants::vertex_edge_sum;

use super::{
    check_cycle_block, cycle_components, LemmaId, Relation, TransformError, TransformInstance,
    TransformOutcome,
};

/// Edge counts of the two sides of the cut edge `v1 v2`, or `None` when the
/// edge is not a cut edge.
fn cut_sides(g: &Graph, v1: VertexId, v2: VertexId) -> Option<(usize, usize)> {
    let mut side = vec![false; g.vertex_count()];
    side[v1] = true;
    let mut stack = vec![v1];
    while let Some(x) = stack.pop() {
        for &w in g.neighbors(x) {
            if (x, w) == (v1, v2) || side[w] {
                continue;
            }
            side[w] = true;
            stack.push(w);
        }
    }
    if side[v2] {
        return None;
    }
    let bridge = (v1.min(v2), v1.max(v2));
    let m1 = g
        .edges()
        .iter()
        .filter(|&&e| side[e.0] && e != bridge)
        .count();
    Some((m1, g.edge_count() - m1 - 1))
}

/// Contracts the cut edge `v1 v2` into `v1` and hangs `v2` on `v1` as a new
/// pendant vertex. The edge-Wiener index drops by `m1 m2`, the edge counts of
/// the two sides.
pub fn contract_cut_edge(
    g: &Graph,
    v1: VertexId,
    v2: VertexId,
) -> Result<TransformOutcome, TransformError> {
    g.check_vertex(v1)?;
    g.check_vertex(v2)?;
    g.require_connected()?;
    if !g.has_edge(v1, v2) {
        return Err(TransformError::NotCutEdge(v1, v2));
    }
    let (m1, m2) = cut_sides(g, v1, v2).ok_or(TransformError::NotCutEdge(v1, v2))?;
    if g.degree(v1) < 2 || g.degree(v2) < 2 {
        return Err(TransformError::PendantEndpoint(v1, v2));
    }
    let moved: Vec<(VertexId, VertexId)> = g
        .neighbors(v2)
        .iter()
        .filter(|&&w| w != v1)
        .map(|&w| (v2, w))
        .collect();
    let added: Vec<(VertexId, VertexId)> = moved.iter().map(|&(_, w)| (v1, w)).collect();
    let after = g.with_edits(&moved, &added)?;
    let instance = TransformInstance {
        lemma: LemmaId::L3,
        site: vec![v1, v2],
        component_sizes: vec![m1, m2],
    };
    TransformOutcome::new(
        instance,
        g.clone(),
        after,
        Some(Relation::Less),
        None,
        Some(-((m1 * m2) as i64)),
    )
}

/// Moves every attachment of the cycle vertices `v_2 .. v_l` onto `v_1`.
/// Non-increasing, with equality exactly when the cycle is an end-block
/// (at most one of its vertices carries anything).
pub fn consolidate_cycle_attachments(
    g: &Graph,
    cycle: &[VertexId],
) -> Result<TransformOutcome, TransformError> {
    check_cycle_block(g, cycle)?;
    let l = cycle.len();
    let v1 = cycle[0];
    let mut removed = Vec::new();
    let mut added = Vec::new();
    for i in 1..l {
        let vi = cycle[i];
        let (prev, next) = (cycle[i - 1], cycle[(i + 1) % l]);
        for &w in g.neighbors(vi) {
            if w != prev && w != next {
                removed.push((vi, w));
                added.push((v1, w));
            }
        }
    }
    let after = g.with_edits(&removed, &added)?;
    let sizes: Vec<usize> = cycle_components(g, cycle).iter().map(|&(m, _)| m).collect();
    let end_block = sizes.iter().filter(|&&m| m > 0).count() <= 1;
    let instance = TransformInstance {
        lemma: LemmaId::L4_5,
        site: cycle.to_vec(),
        component_sizes: sizes,
    };
    TransformOutcome::new(
        instance,
        g.clone(),
        after,
        Some(Relation::LessOrEqual),
        Some(end_block),
        None,
    )
}

/// Shortens an end cycle attached at `v_1`.
///
/// For `r >= 5`: `G - v_{r-1}v_r - v_2v_3 + v_{r-1}v_1 + v_3v_1`, leaving a
/// cycle of length `r - 2` and two new pendant vertices at `v_1`.
/// For `r = 4`: `G - v_2v_3 + v_1v_3`, leaving the triangle `v_1v_3v_4` and a
/// pendant `v_2` at `v_1`; the index drops by exactly `1 + m`.
pub fn shrink_end_cycle(g: &Graph, cycle: &[VertexId]) -> Result<TransformOutcome, TransformError> {
    check_cycle_block(g, cycle)?;
    let r = cycle.len();
    if r < 4 {
        return Err(TransformError::CycleTooSmall(r));
    }
    let components = cycle_components(g, cycle);
    if components[1..].iter().any(|&(m, _)| m > 0) {
        return Err(TransformError::NotEndBlock);
    }
    let m = components[0].0;
    let v = |k: usize| cycle[k - 1];
    let (lemma, after, closed_form) = if r == 4 {
        let after = g.with_edits(&[(v(2), v(3))], &[(v(1), v(3))])?;
        (LemmaId::L7, after, Some(-(1 + m as i64)))
    } else {
        let after = g.with_edits(
            &[(v(r - 1), v(r)), (v(2), v(3))],
            &[(v(r - 1), v(1)), (v(3), v(1))],
        )?;
        (LemmaId::L6, after, None)
    };
    let instance = TransformInstance {
        lemma,
        site: cycle.to_vec(),
        component_sizes: vec![m],
    };
    TransformOutcome::new(
        instance,
        g.clone(),
        after,
        Some(Relation::Less),
        None,
        closed_form,
    )
}

/// `G - v_1v_l + v_{l-2}v_l` on a cycle whose largest attached component
/// (by edges and by vertices) sits at `v_1`.
///
/// For `l = 4` the claimed delta is `(m_1 - m_2) m_4 + 2 m_1 - m_2 - 1`, and
/// equality is claimed exactly when every `m_i = 1`; that equality claim is
/// only attached when every `m_i >= 1`.
pub fn clip_cycle(g: &Graph, cycle: &[VertexId]) -> Result<TransformOutcome, TransformError> {
    check_cycle_block(g, cycle)?;
    let l = cycle.len();
    if l < 4 {
        return Err(TransformError::CycleTooSmall(l));
    }
    let components = cycle_components(g, cycle);
    let (m1, n1) = components[0];
    if components.iter().any(|&(m, n)| m > m1 || n > n1) {
        return Err(TransformError::MaxNotAtV1);
    }
    let after = g.with_edits(&[(cycle[0], cycle[l - 1])], &[(cycle[l - 3], cycle[l - 1])])?;
    let sizes: Vec<usize> = components.iter().map(|&(m, _)| m).collect();
    let (relation, equality, closed_form) = if l == 4 {
        let m = |i: usize| sizes[i - 1] as i64;
        let delta = (m(1) - m(2)) * m(4) + 2 * m(1) - m(2) - 1;
        let equality = sizes
            .iter()
            .all(|&x| x >= 1)
            .then(|| sizes.iter().all(|&x| x == 1));
        (Relation::GreaterOrEqual, equality, Some(delta))
    } else {
        (Relation::Greater, None, None)
    };
    let instance = TransformInstance {
        lemma: LemmaId::L8,
        site: cycle.to_vec(),
        component_sizes: sizes,
    };
    TransformOutcome::new(
        instance,
        g.clone(),
        after,
        Some(relation),
        equality,
        closed_form,
    )
}

/// A vertex of `g` farthest from `x`; ties go to the smallest id.
pub fn farthest_vertex(g: &Graph, x: VertexId) -> Result<VertexId, TransformError> {
    g.check_vertex(x)?;
    g.require_connected()?;
    let dist = bfs_distances(g, x);
    let best = (0..g.vertex_count())
        .max_by_key(|&v| (dist[v], std::cmp::Reverse(v)))
        .expect("non-empty graph");
    Ok(best)
}

fn require_operand(g: &Graph, root: VertexId) -> Result<(), TransformError> {
    if root >= g.vertex_count() {
        return Err(TransformError::InvalidSite(root));
    }
    g.require_connected()?;
    if g.vertex_count() < 2 {
        return Err(TransformError::DegenerateOperand);
    }
    Ok(())
}

/// `G_0` glues `g1` and `g2` at `u1 = u2 =: u`; `G` hangs `g3` (at `u3`) on
/// `u`, `G'` hangs it on a vertex `v` of `g1` farthest from `u1`. Claimed
/// `W_e(G) <= W_e(G')` when `m_2 >= m_1`.
pub fn relocate_branch_to_farthest(
    g1: &Graph,
    u1: VertexId,
    g2: &Graph,
    u2: VertexId,
    g3: &Graph,
    u3: VertexId,
) -> Result<TransformOutcome, TransformError> {
    require_operand(g1, u1)?;
    require_operand(g2, u2)?;
    require_operand(g3, u3)?;
    let g0 = coalesce(g1, u1, g2, u2).expect("roots checked").graph;
    let v = farthest_vertex(g1, u1)?;
    let before = coalesce(&g0, u1, g3, u3).expect("roots checked").graph;
    let after = coalesce(&g0, v, g3, u3).expect("roots checked").graph;
    let (m1, m2, m3) = (g1.edge_count(), g2.edge_count(), g3.edge_count());
    let instance = TransformInstance {
        lemma: LemmaId::L9,
        site: vec![u1, v],
        component_sizes: vec![m1, m2, m3],
    };
    let relation = (m2 >= m1).then_some(Relation::GreaterOrEqual);
    TransformOutcome::new(instance, before, after, relation, None, None)
}

/// `G_0` is the triangle `v_1 v_2 v_3` (labels 0, 1, 2) with `g2` glued at
/// `v_2` by `x2` and `g3` at `v_3` by `x3`. `G` hangs `g1` (at `x1`) on
/// `v_1`; `G'` hangs it on the vertex `u_2` of `g2` farthest from `x2`.
/// Claimed strict increase when `m_3 >= m_2`.
pub fn detach_from_triangle(
    g1: &Graph,
    x1: VertexId,
    g2: &Graph,
    x2: VertexId,
    g3: &Graph,
    x3: VertexId,
) -> Result<TransformOutcome, TransformError> {
    require_operand(g1, x1)?;
    require_operand(g2, x2)?;
    require_operand(g3, x3)?;
    let triangle = cycle_graph(3).expect("triangle");
    let with_g2 = coalesce(&triangle, 1, g2, x2).expect("roots checked");
    let u2 = with_g2.second[farthest_vertex(g2, x2)?];
    let g0 = coalesce(&with_g2.graph, 2, g3, x3)
        .expect("roots checked")
        .graph;
    let before = coalesce(&g0, 0, g1, x1).expect("roots checked").graph;
    let after = coalesce(&g0, u2, g1, x1).expect("roots checked").graph;
    let (m1, m2, m3) = (g1.edge_count(), g2.edge_count(), g3.edge_count());
    let instance = TransformInstance {
        lemma: LemmaId::L10,
        site: vec![0, 1, 2, u2],
        component_sizes: vec![m1, m2, m3],
    };
    let relation = (m3 >= m2).then_some(Relation::Greater);
    TransformOutcome::new(instance, before, after, relation, None, None)
}

/// Ends `(u, v)` of a longest path of `g`, by exhaustive search. Among
/// longest paths the lexicographically smallest pair of ends is chosen.
pub fn longest_path_ends(g: &Graph) -> Result<(VertexId, VertexId), TransformError> {
    g.require_connected()?;
    if g.vertex_count() == 0 {
        return Err(TransformError::DegenerateOperand);
    }
    fn extend(g: &Graph, x: VertexId, depth: usize, on_path: &mut [bool], best: &mut [usize]) {
        best[x] = best[x].max(depth);
        for &w in g.neighbors(x) {
            if !on_path[w] {
                on_path[w] = true;
                extend(g, w, depth + 1, on_path, best);
                on_path[w] = false;
            }
        }
    }
    let n = g.vertex_count();
    let mut result = (0, 0, 0);
    for start in 0..n {
        let mut on_path = vec![false; n];
        on_path[start] = true;
        let mut reach = vec![0; n];
        extend(g, start, 0, &mut on_path, &mut reach);
        for (end, &len) in reach.iter().enumerate().skip(start + 1) {
            if len > result.0 {
                result = (len, start, end);
            }
        }
    }
    Ok((result.1, result.2))
}

fn is_path_graph(g: &Graph) -> bool {
    g.edge_count() + 1 == g.vertex_count() && g.degrees().iter().all(|&d| d <= 2)
}

/// `u`, `v` are the ends of a longest path of `g2`, named so that
/// `D_v(g2) >= D_u(g2)`. `G` glues `g1` (at `u1`) to `u` and hangs a path on
/// `s` vertices from `v`; `G'` moves `g1` to the far end of that path.
/// Claimed strict increase.
pub fn relocate_pendant_path(
    g1: &Graph,
    u1: VertexId,
    g2: &Graph,
    s: usize,
) -> Result<TransformOutcome, TransformError> {
    require_operand(g1, u1)?;
    g2.require_connected()?;
    if g2.vertex_count() < 3 || is_path_graph(g2) {
        return Err(TransformError::G2IsAPath);
    }
    if s < 2 {
        return Err(TransformError::PathTooShort(s));
    }
    let (a, b) = longest_path_ends(g2)?;
    let (u, v) = if vertex_edge_sum(g2, b)? >= vertex_edge_sum(g2, a)? {
        (a, b)
    } else {
        (b, a)
    };
    let tail = path(s).expect("s >= 2");
    let with_tail = coalesce(g2, v, &tail, 0).expect("roots checked");
    let far_end = with_tail.second[s - 1];
    let before = coalesce(&with_tail.graph, u, g1, u1)
        .expect("roots checked")
        .graph;
    let after = coalesce(&with_tail.graph, far_end, g1, u1)
        .expect("roots checked")
        .graph;
    let instance = TransformInstance {
        lemma: LemmaId::L11,
        site: vec![u, v, far_end],
        component_sizes: vec![g1.edge_count(), g2.edge_count(), s - 1],
    };
    TransformOutcome::new(instance, before, after, Some(Relation::Greater), None, None)
}

/// `H` is the path `p_1 .. p_s` plus the chord `p_{s-2} p_s`;
/// `H' = H - p_{s-2}p_s - p_{s-1}p_s + p_1p_s + p_2p_s`. `G` and `G'` glue
/// `g1` (at `u`) to `p_1` and `g2` (at `v`) to `p_{s-1}` on `H` and `H'`.
/// When `m_2 >= m_1 >= 1` the claimed delta is `(m_2 - m_1)(2s - 6)`.
pub fn slide_saw_tail(
    g1: &Graph,
    u: VertexId,
    g2: &Graph,
    v: VertexId,
    s: usize,
) -> Result<TransformOutcome, TransformError> {
    require_operand(g1, u)?;
    require_operand(g2, v)?;
    if s < 4 {
        return Err(TransformError::PathTooShort(s));
    }
    let p = |k: usize| k - 1;
    let h = path(s)
        .expect("s >= 4")
        .with_edits(&[], &[(p(s - 2), p(s))])?;
    let h_prime = h.with_edits(
        &[(p(s - 2), p(s)), (p(s - 1), p(s))],
        &[(p(1), p(s)), (p(2), p(s))],
    )?;
    let assemble = |host: &Graph| {
        let first = coalesce(host, p(1), g1, u).expect("roots checked").graph;
        coalesce(&first, p(s - 1), g2, v)
            .expect("roots checked")
            .graph
    };
    let (m1, m2) = (g1.edge_count(), g2.edge_count());
    let in_hypothesis = m2 >= m1 && m1 >= 1;
    let instance = TransformInstance {
        lemma: LemmaId::L12,
        site: vec![p(1), p(s - 1), p(s)],
        component_sizes: vec![m1, m2],
    };
    TransformOutcome::new(
        instance,
        assemble(&h),
        assemble(&h_prime),
        in_hypothesis.then_some(Relation::GreaterOrEqual),
        in_hypothesis.then_some(m1 == m2),
        in_hypothesis.then(|| (m2 as i64 - m1 as i64) * (2 * s as i64 - 6)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{bundle, cycle, saw, star, CactusClassParams};
    use crate::graph::canonical_form;
    use crate::invariants::edge_wiener;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn same(a: &Graph, b: &Graph) -> bool {
        canonical_form(a).unwrap() == canonical_form(b).unwrap()
    }

    #[test]
    fn contracting_the_bridge_between_two_triangles() {
        let s = saw(1, 1, 6).unwrap();
        let out = contract_cut_edge(&s, 2, 3).unwrap();
        assert_eq!((out.we_before, out.we_after), (38, 29));
        assert_eq!(out.holds, Some(true));
        assert!(out.preserves_shape());
        assert!(same(
            &out.after,
            &bundle(CactusClassParams::new(6, 2).unwrap()).unwrap()
        ));
    }

    #[test]
    fn contracting_the_middle_of_p4() {
        let p4 = path(4).unwrap();
        let out = contract_cut_edge(&p4, 1, 2).unwrap();
        assert_eq!((out.we_before, out.we_after), (4, 3));
        assert!(same(&out.after, &star(4).unwrap()));
        assert_eq!(
            contract_cut_edge(&p4, 0, 1),
            Err(TransformError::PendantEndpoint(0, 1))
        );
        let c4 = cycle(4).unwrap();
        assert_eq!(
            contract_cut_edge(&c4, 0, 1),
            Err(TransformError::NotCutEdge(0, 1))
        );
        assert_eq!(
            contract_cut_edge(&p4, 0, 2),
            Err(TransformError::NotCutEdge(0, 2))
        );
    }

    #[test]
    fn consolidating_a_square() {
        // C4 on 0..3 with pendants 4 at v1 = 0 and 5 at v3 = 2
        let host = g(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 5)]);
        let out = consolidate_cycle_attachments(&host, &[0, 1, 2, 3]).unwrap();
        assert!(out.we_after < out.we_before);
        assert_eq!(out.holds, Some(true));
        assert_eq!(out.after.degree(0), 4);
        // triangle 1-2-3 with pendant 0 at vertex 1
        let tadpole = saw(0, 1, 4).unwrap();
        let err = consolidate_cycle_attachments(&tadpole, &[0, 1, 2]).unwrap_err();
        assert_eq!(err, TransformError::NotACycleBlock);
        let out = consolidate_cycle_attachments(&tadpole, &[1, 2, 3]).unwrap();
        assert_eq!(out.after, tadpole);
        assert_eq!(out.holds, Some(true));
    }

    #[test]
    fn consolidating_a_pentagon() {
        let host = g(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 5), (3, 6)]);
        let out = consolidate_cycle_attachments(&host, &[0, 1, 2, 3, 4]).unwrap();
        assert!(out.we_after < out.we_before);
        assert_eq!(out.holds, Some(true));
    }

    #[test]
    fn square_with_pendant_loses_one_plus_m() {
        let host = g(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]);
        let out = shrink_end_cycle(&host, &[0, 1, 2, 3]).unwrap();
        assert_eq!(out.instance.lemma, LemmaId::L7);
        assert_eq!((out.we_before, out.we_after), (14, 12));
        assert_eq!(out.holds, Some(true));
        assert!(same(
            &out.after,
            &bundle(CactusClassParams::new(5, 1).unwrap()).unwrap()
        ));
    }

    #[test]
    fn longer_end_cycles_shrink() {
        let c5_pendant = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)]);
        let out = shrink_end_cycle(&c5_pendant, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(out.instance.lemma, LemmaId::L6);
        assert!(out.we_after < out.we_before);
        let c6_tail = g(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (0, 5),
                (0, 6),
                (6, 7),
            ],
        );
        let out = shrink_end_cycle(&c6_tail, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(out.we_after < out.we_before);
        assert!(out.preserves_shape());
        assert_eq!(
            shrink_end_cycle(&c6_tail, &[1, 2, 3, 4, 5, 0]),
            Err(TransformError::NotEndBlock)
        );
        assert_eq!(
            shrink_end_cycle(&cycle(3).unwrap(), &[0, 1, 2]),
            Err(TransformError::CycleTooSmall(3))
        );
    }

    #[test]
    fn clipping_a_square_with_unit_attachments_is_neutral() {
        let host = g(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        );
        let out = clip_cycle(&host, &[0, 1, 2, 3]).unwrap();
        assert_eq!(out.delta(), 0);
        assert_eq!(out.closed_form_delta, Some(0));
        assert_eq!(out.claimed_equality, Some(true));
        assert_eq!(out.holds, Some(true));
    }

    #[test]
    fn clipping_a_square_with_a_heavier_first_attachment() {
        // m1 = 2 (path 0-4-8), m2 = m3 = m4 = 1
        let host = g(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (0, 4),
                (4, 8),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        );
        let out = clip_cycle(&host, &[0, 1, 2, 3]).unwrap();
        assert_eq!(out.closed_form_delta, Some(3));
        assert_eq!(out.delta(), 3);
        assert_eq!(out.holds, Some(true));
        assert_eq!(
            clip_cycle(&host, &[1, 2, 3, 0]),
            Err(TransformError::MaxNotAtV1)
        );
    }

    #[test]
    fn clipping_a_pentagon_with_a_pendant() {
        let host = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)]);
        let out = clip_cycle(&host, &[0, 1, 2, 3, 4]).unwrap();
        assert!(out.we_after > out.we_before);
        assert_eq!(out.holds, Some(true));
    }

    #[test]
    fn bare_cycles_fall_outside_the_clipping_inequality() {
        let out = clip_cycle(&cycle(4).unwrap(), &[0, 1, 2, 3]).unwrap();
        assert_eq!((out.we_before, out.we_after), (8, 7));
        assert_eq!(out.closed_form_delta, Some(-1));
        assert_eq!(out.holds, Some(false));
        let out = clip_cycle(&cycle(5).unwrap(), &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!((out.we_before, out.we_after), (15, 15));
        assert_eq!(out.holds, Some(false));
    }

    #[test]
    fn branch_relocation_examples() {
        let k2 = path(2).unwrap();
        let p3 = path(3).unwrap();
        let out = relocate_branch_to_farthest(&k2, 0, &k2, 0, &k2, 0).unwrap();
        assert!(out.we_after >= out.we_before);
        assert_eq!(out.holds, Some(true));
        let out = relocate_branch_to_farthest(&k2, 0, &p3, 0, &k2, 0).unwrap();
        assert!(out.we_after > out.we_before);
        let out = relocate_branch_to_farthest(&p3, 0, &k2, 0, &k2, 0).unwrap();
        assert_eq!(out.claimed_relation, None);
        assert_eq!(out.holds, None);
        assert_eq!(
            relocate_branch_to_farthest(&Graph::empty(1), 0, &k2, 0, &k2, 0),
            Err(TransformError::DegenerateOperand)
        );
    }

    #[test]
    fn triangle_detachment_examples() {
        let k2 = path(2).unwrap();
        let p3 = path(3).unwrap();
        let out = detach_from_triangle(&k2, 0, &k2, 0, &k2, 0).unwrap();
        assert!(out.we_after > out.we_before);
        let out = detach_from_triangle(&k2, 0, &k2, 0, &p3, 0).unwrap();
        assert!(out.we_after > out.we_before);
        assert_eq!(out.holds, Some(true));
        let out = detach_from_triangle(&k2, 0, &p3, 0, &k2, 0).unwrap();
        assert_eq!(out.holds, None);
    }

    #[test]
    fn pendant_path_relocation_examples() {
        let k2 = path(2).unwrap();
        let out = relocate_pendant_path(&k2, 0, &star(4).unwrap(), 3).unwrap();
        assert!(out.we_after > out.we_before);
        let out = relocate_pendant_path(&k2, 0, &saw(0, 1, 4).unwrap(), 2).unwrap();
        assert!(out.we_after > out.we_before);
        assert_eq!(out.holds, Some(true));
        assert_eq!(
            relocate_pendant_path(&k2, 0, &path(4).unwrap(), 3),
            Err(TransformError::G2IsAPath)
        );
        assert_eq!(
            relocate_pendant_path(&k2, 0, &star(4).unwrap(), 1),
            Err(TransformError::PathTooShort(1))
        );
    }

    #[test]
    fn saw_tail_deltas() {
        let k2 = path(2).unwrap();
        let p3 = path(3).unwrap();
        let p4 = path(4).unwrap();
        let out = slide_saw_tail(&k2, 0, &k2, 0, 5).unwrap();
        assert_eq!(out.delta(), 0);
        assert_eq!(out.holds, Some(true));
        let out = slide_saw_tail(&k2, 0, &p4, 0, 5).unwrap();
        assert_eq!(out.delta(), 8);
        assert_eq!(out.holds, Some(true));
        let out = slide_saw_tail(&k2, 0, &p3, 0, 4).unwrap();
        assert_eq!(out.delta(), 2);
        assert_eq!(
            slide_saw_tail(&k2, 0, &k2, 0, 3),
            Err(TransformError::PathTooShort(3))
        );
        assert_eq!(out.before.vertex_count(), out.after.vertex_count());
    }

    #[test]
    fn farthest_and_longest() {
        let t = g(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        assert_eq!(farthest_vertex(&t, 0), Ok(4));
        assert_eq!(farthest_vertex(&t, 4), Ok(0));
        assert_eq!(farthest_vertex(&t, 1), Ok(4));
        assert_eq!(longest_path_ends(&t), Ok((0, 4)));
        assert_eq!(longest_path_ends(&cycle(5).unwrap()), Ok((0, 1)));
        assert_eq!(longest_path_ends(&Graph::empty(1)), Ok((0, 0)));
        let bowtie = bundle(CactusClassParams::new(5, 2).unwrap()).unwrap();
        let (u, v) = longest_path_ends(&bowtie).unwrap();
        assert_eq!(edge_wiener(&bowtie), Ok(21));
        assert!(u != 0 && v != 0);
    }
}
