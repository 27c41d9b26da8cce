//! Canonical forms for small graphs.
//!
//! The form is the lexicographically largest graph6 string over a set of
//! vertex labelings that is closed under isomorphism: every labeling that is
//! consistent with an isomorphism-invariant ordered partition of the
//! vertices. The partition comes from colour refinement, and the search
//! individualizes one vertex of the first non-singleton cell at a time, then
//! refines again. Two vertices with the same neighbourhood (apart from each
//! other) are interchangeable by an automorphism, so only one of them is
//! tried per cell.

use std::fmt;

use super::io::graph6_bytes;
use super::{Graph, GraphError, VertexId};

/// Largest order accepted by [`canonical_form`].
pub const DEFAULT_CANON_LIMIT: usize = 12;

/// Isomorphism-invariant byte string: the graph6 encoding of the canonical
/// relabeling. Equal forms mean isomorphic graphs and vice versa; forms of
/// smaller graphs sort first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The form as a graph6 string.
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        super::parse_graph6(self.as_str()).expect("canonical forms are valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm, GraphError> {
    if g.vertex_count() > limit {
        return Err(GraphError::TooLarge {
            order: g.vertex_count(),
            limit,
        });
    }
    let mut colors = vec![0u32; g.vertex_count()];
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    Ok(CanonicalForm(
        best.unwrap_or_else(|| graph6_bytes(0, |_, _| false)),
    ))
}

/// Colour refinement to the coarsest equitable partition finer than
/// `colors`. Colours stay dense ranks and the refinement keeps the relative
/// order of existing cells, so the ordered partition remains invariant.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.vertex_count();
    let mut cells = count_cells(colors);
    loop {
        let mut signatures: Vec<(u32, Vec<u32>, VertexId)> = (0..n)
            .map(|v| {
                let mut around: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around, v)
            })
            .collect();
        signatures.sort_unstable();
        let mut rank = 0;
        for i in 0..n {
            if i > 0
                && (signatures[i].0, &signatures[i].1)
                    != (signatures[i - 1].0, &signatures[i - 1].1)
            {
                rank += 1;
            }
            colors[signatures[i].2] = rank;
        }
        let refined = if n == 0 { 0 } else { rank as usize + 1 };
        if refined == cells {
            return;
        }
        cells = refined;
    }
}

fn count_cells(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn are_twins(g: &Graph, u: VertexId, v: VertexId) -> bool {
    let strip =
        |x: VertexId, other: VertexId| g.neighbors(x).iter().copied().filter(move |&w| w != other);
    strip(u, v).eq(strip(v, u))
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<Vec<u8>>) {
    let n = g.vertex_count();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let Some(target) = sizes.iter().position(|&s| s > 1) else {
        // Discrete partition: colour is the new label.
        let mut inverse = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            inverse[c as usize] = v;
        }
        let candidate = graph6_bytes(n, |i, j| g.has_edge(inverse[i], inverse[j]));
        if best.as_ref().is_none_or(|b| candidate > *b) {
            *best = Some(candidate);
        }
        return;
    };
    let target = target as u32;
    let cell: Vec<VertexId> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<VertexId> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        // Split v off in front of the rest of its cell.
        let mut next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + u32::from(c == target && w != v))
            .collect();
        rerank(&mut next);
        refine(g, &mut next);
        search(g, next, best);
    }
}

fn rerank(colors: &mut [u32]) {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).expect("present") as u32;
    }
}
