//! Seeded random instance suites, one per lemma.
//!
//! Attached components are random small cacti with at most four edges, grown
//! from a single vertex by pendant edges, triangles and squares. Host graphs
//! are relabeled by a random permutation before the rewrite is applied.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructors::{coalesce, cycle};
use crate::graph::{emit_graph6, Graph, VertexId};

use super::{
    clip_cycle, consolidate_cycle_attachments, contract_cut_edge, detach_from_triangle,
    relocate_branch_to_farthest, relocate_pendant_path, shrink_end_cycle, slide_saw_tail, LemmaId,
    TransformOutcome,
};

/// Valid instances required per lemma (per case for the lemmas with cases).
pub const SUITE_TARGET: usize = 100;

const MAX_ATTEMPTS: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    pub before: String,
    pub after: String,
    pub we_before: u64,
    pub we_after: u64,
    pub component_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub lemma: LemmaId,
    pub seed: u64,
    /// Instances inside the hypotheses, i.e. with a claimed relation.
    pub valid: usize,
    /// Instances generated but outside the hypotheses; recorded only.
    pub outside_hypothesis: usize,
    pub held: usize,
    /// Valid instances with `W_e(G') = W_e(G)`.
    pub equal: usize,
    /// Valid instances whose claimed closed-form delta was compared.
    pub closed_form_checked: usize,
    /// Every instance kept order, size, connectivity and cycle count.
    pub shape_preserved: bool,
    /// Valid instance counts per case, e.g. `odd`/`even` or `l=4`/`l>=5`.
    pub cases: Vec<(String, usize)>,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.held == self.valid
            && self.shape_preserved
            && self.cases.iter().all(|(_, count)| *count >= SUITE_TARGET)
    }
}

fn random_small_cactus(
    rng: &mut ChaCha8Rng,
    min_edges: usize,
    max_edges: usize,
) -> (Graph, VertexId) {
    let budget = rng.random_range(min_edges..=max_edges);
    let mut n = 1;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    while edges.len() < budget {
        let remaining = budget - edges.len();
        let at = rng.random_range(0..n);
        let fitting: Vec<usize> = [1, 3, 4].into_iter().filter(|&s| s <= remaining).collect();
        let size = *fitting.choose(rng).expect("pendant always fits");
        if size == 1 {
            edges.push((at, n));
            n += 1;
        } else {
            let ring: Vec<VertexId> = std::iter::once(at).chain(n..n + size - 1).collect();
            edges.extend((0..size).map(|k| (ring[k], ring[(k + 1) % size])));
            n += size - 1;
        }
    }
    let g = Graph::from_edges(n, edges).expect("grown cactus is simple");
    let root = rng.random_range(0..n);
    (g, root)
}

/// Random cactus on `n` vertices grown from pendant edges and cycles of
/// length 3 to 5.
fn random_cactus(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut order = 1;
    let mut edges = Vec::new();
    while order < n {
        let room = n - order;
        let size = if room >= 2 && rng.random_bool(0.5) {
            rng.random_range(3..=(room + 1).min(5))
        } else {
            1
        };
        let at = rng.random_range(0..order);
        if size == 1 {
            edges.push((at, order));
            order += 1;
        } else {
            let ring: Vec<VertexId> = std::iter::once(at).chain(order..order + size - 1).collect();
            edges.extend((0..size).map(|k| (ring[k], ring[(k + 1) % size])));
            order += size - 1;
        }
    }
    Graph::from_edges(n, edges).expect("grown cactus is simple")
}

fn shuffle(rng: &mut ChaCha8Rng, g: &Graph) -> (Graph, Vec<VertexId>) {
    let mut perm: Vec<VertexId> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    (g.relabel(&perm), perm)
}

/// A cycle of length `l` on `0..l` with a component glued at each vertex;
/// `weights[i]` bounds the edges at `v_{i+1}` (`(lo, hi)`). Returns the
/// relabeled host and its cycle in order.
fn decorated_cycle(
    rng: &mut ChaCha8Rng,
    l: usize,
    weights: &[(usize, usize)],
) -> (Graph, Vec<VertexId>) {
    let mut host = cycle(l).expect("l >= 3");
    for (i, &(lo, hi)) in weights.iter().enumerate() {
        let (part, root) = random_small_cactus(rng, lo, hi);
        if part.edge_count() > 0 {
            host = coalesce(&host, i, &part, root).expect("valid roots").graph;
        }
    }
    let (host, perm) = shuffle(rng, &host);
    (host, (0..l).map(|v| perm[v]).collect())
}

/// One attempt: `Some((case, outcome))` when the draw yields a usable site.
fn draw(lemma: LemmaId, rng: &mut ChaCha8Rng) -> Option<(String, TransformOutcome)> {
    match lemma {
        LemmaId::L3 => {
            let n = rng.random_range(4..=9);
            let host = random_cactus(rng, n);
            let sites: Vec<(VertexId, VertexId)> = host
                .edges()
                .iter()
                .copied()
                .filter(|&(a, b)| host.degree(a) >= 2 && host.degree(b) >= 2)
                .filter(|&(a, b)| contract_cut_edge(&host, a, b).is_ok())
                .collect();
            let &(a, b) = sites.choose(rng)?;
            let (a, b) = if rng.random_bool(0.5) { (a, b) } else { (b, a) };
            Some(("all".into(), contract_cut_edge(&host, a, b).ok()?))
        }
        LemmaId::L4_5 => {
            let l = *[3usize, 4, 5, 6].choose(rng)?;
            let weights: Vec<(usize, usize)> = (0..l)
                .map(|_| if rng.random_bool(0.3) { (0, 0) } else { (1, 4) })
                .collect();
            let (host, c) = decorated_cycle(rng, l, &weights);
            let case = if l % 2 == 0 { "even" } else { "odd" };
            Some((case.into(), consolidate_cycle_attachments(&host, &c).ok()?))
        }
        LemmaId::L6 | LemmaId::L7 => {
            let r = if lemma == LemmaId::L7 {
                4
            } else {
                rng.random_range(5..=7)
            };
            let mut weights = vec![(0, 0); r];
            weights[0] = (1, 4);
            let (host, c) = decorated_cycle(rng, r, &weights);
            Some(("all".into(), shrink_end_cycle(&host, &c).ok()?))
        }
        LemmaId::L8 => {
            let l = if rng.random_bool(0.5) {
                4
            } else {
                rng.random_range(5..=7)
            };
            let mut host = cycle(l).expect("l >= 4");
            let mut sizes = Vec::with_capacity(l);
            for i in 0..l {
                let (part, root) = random_small_cactus(rng, 0, 4);
                sizes.push((part.edge_count(), part.vertex_count()));
                if part.edge_count() > 0 {
                    host = coalesce(&host, i, &part, root).expect("valid roots").graph;
                }
            }
            let top = (0..l).max_by_key(|&i| sizes[i]).expect("non-empty");
            if sizes[top].0 == 0 || sizes.iter().any(|s| s.1 > sizes[top].1) {
                return None;
            }
            let forward = rng.random_bool(0.5);
            let order: Vec<VertexId> = (0..l)
                .map(|k| {
                    if forward {
                        (top + k) % l
                    } else {
                        (top + l - k) % l
                    }
                })
                .collect();
            let (host, perm) = shuffle(rng, &host);
            let c: Vec<VertexId> = order.iter().map(|&v| perm[v]).collect();
            let case = if l == 4 { "l=4" } else { "l>=5" };
            Some((case.into(), clip_cycle(&host, &c).ok()?))
        }
        LemmaId::L9 => {
            let (g1, u1) = random_small_cactus(rng, 1, 4);
            let (g2, u2) = random_small_cactus(rng, 1, 4);
            let (g3, u3) = random_small_cactus(rng, 1, 4);
            Some((
                "all".into(),
                relocate_branch_to_farthest(&g1, u1, &g2, u2, &g3, u3).ok()?,
            ))
        }
        LemmaId::L10 => {
            let (g1, x1) = random_small_cactus(rng, 1, 4);
            let (g2, x2) = random_small_cactus(rng, 1, 4);
            let (g3, x3) = random_small_cactus(rng, 1, 4);
            Some((
                "all".into(),
                detach_from_triangle(&g1, x1, &g2, x2, &g3, x3).ok()?,
            ))
        }
        LemmaId::L11 => {
            let (g1, u1) = random_small_cactus(rng, 1, 4);
            let (g2, _) = random_small_cactus(rng, 2, 4);
            let s = rng.random_range(2..=5);
            Some(("all".into(), relocate_pendant_path(&g1, u1, &g2, s).ok()?))
        }
        LemmaId::L12 => {
            let (g1, u) = random_small_cactus(rng, 1, 4);
            let (g2, v) = random_small_cactus(rng, 1, 4);
            let s = rng.random_range(4..=7);
            Some(("all".into(), slide_saw_tail(&g1, u, &g2, v, s).ok()?))
        }
    }
}

fn case_names(lemma: LemmaId) -> &'static [&'static str] {
    match lemma {
        LemmaId::L4_5 => &["even", "odd"],
        LemmaId::L8 => &["l=4", "l>=5"],
        _ => &["all"],
    }
}

/// Draws instances until every case of `lemma` has [`SUITE_TARGET`] valid
/// ones (or the attempt budget runs out) and checks each.
pub fn run_suite(lemma: LemmaId, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(lemma as u64 + 1);
    let names = case_names(lemma);
    let mut counts = vec![0usize; names.len()];
    let mut report = SuiteReport {
        lemma,
        seed,
        valid: 0,
        outside_hypothesis: 0,
        held: 0,
        equal: 0,
        closed_form_checked: 0,
        shape_preserved: true,
        cases: Vec::new(),
        failures: Vec::new(),
    };
    for _ in 0..MAX_ATTEMPTS {
        if counts.iter().all(|&c| c >= SUITE_TARGET) {
            break;
        }
        let Some((case, out)) = draw(lemma, &mut rng) else {
            continue;
        };
        let slot = names.iter().position(|&n| n == case).expect("known case");
        if counts[slot] >= SUITE_TARGET {
            continue;
        }
        report.shape_preserved &= out.preserves_shape();
        let Some(holds) = out.holds else {
            report.outside_hypothesis += 1;
            continue;
        };
        counts[slot] += 1;
        report.valid += 1;
        if out.delta() == 0 {
            report.equal += 1;
        }
        if out.closed_form_delta.is_some() {
            report.closed_form_checked += 1;
        }
        if holds {
            report.held += 1;
        } else {
            report.failures.push(SuiteFailure {
                before: emit_graph6(&out.before),
                after: emit_graph6(&out.after),
                we_before: out.we_before,
                we_after: out.we_after,
                component_sizes: out.instance.component_sizes.clone(),
            });
        }
    }
    report.cases = names.iter().map(|s| s.to_string()).zip(counts).collect();
    report
}

/// All suites, in lemma order.
pub fn run_all_suites(seed: u64) -> Vec<SuiteReport> {
    LemmaId::ALL
        .par_iter()
        .map(|&lemma| run_suite(lemma, seed))
        .collect()
}
