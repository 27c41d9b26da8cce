//! The edge-Wiener transformations as checked rewrites.
//!
//! Every rewrite validates its site, builds the graph before and after, and
//! recomputes both indices directly. The inequality claimed for the site is
//! attached to the outcome and checked against those recomputed values;
//! closed-form deltas are compared too, where one is claimed.

mod rewrites;
mod suite;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};
use crate::invariants::edge_wiener;

pub use rewrites::{
    clip_cycle, consolidate_cycle_attachments, contract_cut_edge, detach_from_triangle,
    farthest_vertex, longest_path_ends, relocate_branch_to_farthest, relocate_pendant_path,
    shrink_end_cycle, slide_saw_tail,
};
pub use suite::{run_all_suites, run_suite, SuiteFailure, SuiteReport, SUITE_TARGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LemmaId {
    L3,
    L4_5,
    L6,
    L7,
    L8,
    L9,
    L10,
    L11,
    L12,
}

impl LemmaId {
    pub const ALL: [LemmaId; 9] = [
        LemmaId::L3,
        LemmaId::L4_5,
        LemmaId::L6,
        LemmaId::L7,
        LemmaId::L8,
        LemmaId::L9,
        LemmaId::L10,
        LemmaId::L11,
        LemmaId::L12,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::L3 => "L3",
            LemmaId::L4_5 => "L4_5",
            LemmaId::L6 => "L6",
            LemmaId::L7 => "L7",
            LemmaId::L8 => "L8",
            LemmaId::L9 => "L9",
            LemmaId::L10 => "L10",
            LemmaId::L11 => "L11",
            LemmaId::L12 => "L12",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How `W_e(G')` compares with `W_e(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    Less,
    LessOrEqual,
    Greater,
    GreaterOrEqual,
}

impl Relation {
    pub fn holds(self, after: u64, before: u64) -> bool {
        match self {
            Relation::Less => after < before,
            Relation::LessOrEqual => after <= before,
            Relation::Greater => after > before,
            Relation::GreaterOrEqual => after >= before,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::LessOrEqual => "<=",
            Relation::Greater => ">",
            Relation::GreaterOrEqual => ">=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge {0}-{1} is not a cut edge")]
    NotCutEdge(VertexId, VertexId),
    #[error("cut edge {0}-{1} has a pendant endpoint")]
    PendantEndpoint(VertexId, VertexId),
    #[error("the given vertices do not form a cycle block in order")]
    NotACycleBlock,
    #[error("the cycle has attachments away from its first vertex")]
    NotEndBlock,
    #[error("cycle of length {0} is too short for this rewrite")]
    CycleTooSmall(usize),
    #[error("the component at the first cycle vertex is not a largest one")]
    MaxNotAtV1,
    #[error("operand needs at least two vertices")]
    DegenerateOperand,
    #[error("operand is a path")]
    G2IsAPath,
    #[error("path of {0} vertices is too short")]
    PathTooShort(usize),
    #[error("vertex {0} is not in the operand")]
    InvalidSite(VertexId),
}

/// A rewrite bound to a concrete site.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformInstance {
    pub lemma: LemmaId,
    /// Site vertices in the host (or in the assembled `G`), lemma-specific.
    pub site: Vec<VertexId>,
    /// Edge counts of the attached components, in the lemma's own order.
    pub component_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformOutcome {
    pub instance: TransformInstance,
    pub before: Graph,
    pub after: Graph,
    pub we_before: u64,
    pub we_after: u64,
    /// `None` when the site lies outside the lemma's hypotheses.
    pub claimed_relation: Option<Relation>,
    /// Whether equality is claimed for this site, when the lemma says.
    pub claimed_equality: Option<bool>,
    /// Claimed value of `W_e(G') - W_e(G)`, when the lemma gives one.
    pub closed_form_delta: Option<i64>,
    /// Relation, equality claim and closed form all agree with the
    /// recomputed values; `None` when nothing is claimed.
    pub holds: Option<bool>,
}

impl TransformOutcome {
    fn new(
        instance: TransformInstance,
        before: Graph,
        after: Graph,
        claimed_relation: Option<Relation>,
        claimed_equality: Option<bool>,
        closed_form_delta: Option<i64>,
    ) -> Result<Self, TransformError> {
        let we_before = edge_wiener(&before)?;
        let we_after = edge_wiener(&after)?;
        let delta = we_after as i64 - we_before as i64;
        let holds = claimed_relation.map(|rel| {
            rel.holds(we_after, we_before)
                && claimed_equality.is_none_or(|eq| eq == (delta == 0))
                && closed_form_delta.is_none_or(|d| d == delta)
        });
        Ok(TransformOutcome {
            instance,
            before,
            after,
            we_before,
            we_after,
            claimed_relation,
            claimed_equality,
            closed_form_delta,
            holds,
        })
    }

    /// `W_e(G') - W_e(G)`.
    pub fn delta(&self) -> i64 {
        self.we_after as i64 - self.we_before as i64
    }

    /// Same order, size, connectivity and number of cycles before and after.
    pub fn preserves_shape(&self) -> bool {
        let cycles = |g: &Graph| g.edge_count() as i64 - g.vertex_count() as i64 + 1;
        self.before.vertex_count() == self.after.vertex_count()
            && self.before.edge_count() == self.after.edge_count()
            && self.after.is_connected()
            && cycles(&self.before) == cycles(&self.after)
            && crate::graph::cactus_cycle_count(&self.before).ok()
                == crate::graph::cactus_cycle_count(&self.after).ok()
    }
}

/// Components of `g - E(C)` at each cycle vertex, as `(edges, vertices)`.
fn cycle_components(g: &Graph, cycle: &[VertexId]) -> Vec<(usize, usize)> {
    let l = cycle.len();
    let on_cycle = |a: VertexId, b: VertexId| {
        (0..l).any(|i| {
            let (x, y) = (cycle[i], cycle[(i + 1) % l]);
            (a, b) == (x, y) || (a, b) == (y, x)
        })
    };
    cycle
        .iter()
        .map(|&root| {
            let mut seen = vec![false; g.vertex_count()];
            seen[root] = true;
            let mut stack = vec![root];
            let (mut vertices, mut degree_sum) = (0, 0);
            while let Some(x) = stack.pop() {
                vertices += 1;
                for &w in g.neighbors(x) {
                    if on_cycle(x, w) {
                        continue;
                    }
                    degree_sum += 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            (degree_sum / 2, vertices)
        })
        .collect()
}

/// Checks that `cycle` lists, in cyclic order, the vertices of a block of
/// `g` that is a cycle.
fn check_cycle_block(g: &Graph, cycle: &[VertexId]) -> Result<(), TransformError> {
    let l = cycle.len();
    for &v in cycle {
        g.check_vertex(v)?;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if l < 3 || sorted.len() != l || (0..l).any(|i| !g.has_edge(cycle[i], cycle[(i + 1) % l])) {
        return Err(TransformError::NotACycleBlock);
    }
    let blocks = crate::graph::block_decomposition(g)?;
    let is_block = (0..blocks.len())
        .any(|b| blocks.vertices(b) == sorted.as_slice() && blocks.blocks()[b].len() == l);
    if is_block {
        Ok(())
    } else {
        Err(TransformError::NotACycleBlock)
    }
}
