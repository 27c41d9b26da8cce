//! Every cactus with `n` vertices and `t` cycles, up to isomorphism.
//!
//! Cacti are grown one block at a time: each cactus on fewer vertices gets a
//! pendant edge, or a cycle of length `c` through `c - 1` new vertices, at
//! each of its vertices. Every cactus with two or more blocks has an end
//! block whose removal leaves a smaller cactus, so growth from the single
//! vertex reaches all of them. Duplicates are merged by canonical form.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constructors::{CactusClassParams, ConstructError};
use crate::graph::{canonical_form_with_limit, CanonicalForm, Graph, DEFAULT_CANON_LIMIT};
use crate::invariants::edge_wiener;

/// Default cap on the order of enumerated cells.
pub const DEFAULT_MAX_N: usize = 11;

/// Largest order the filter oracle accepts.
pub const FILTER_ORACLE_MAX_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Params(#[from] ConstructError),
}

/// The members of one class, sorted by canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationCell {
    pub params: CactusClassParams,
    pub forms: Vec<CanonicalForm>,
    /// Canonically labeled members, in the order of `forms`.
    pub graphs: Vec<Graph>,
}

impl EnumerationCell {
    fn from_forms(params: CactusClassParams, forms: BTreeSet<CanonicalForm>) -> Self {
        let graphs = forms.iter().map(CanonicalForm::to_graph).collect();
        EnumerationCell {
            params,
            forms: forms.into_iter().collect(),
            graphs,
        }
    }

    pub fn count(&self) -> usize {
        self.forms.len()
    }
}

fn canon(g: &Graph) -> CanonicalForm {
    canonical_form_with_limit(g, g.vertex_count().max(DEFAULT_CANON_LIMIT)).expect("within limit")
}

/// Cacti obtained from `g` by a new end block with `fresh` new vertices at
/// some vertex: a pendant edge for `fresh == 1`, a cycle otherwise.
fn children(g: &Graph, fresh: usize) -> Vec<CanonicalForm> {
    let n = g.vertex_count();
    (0..n)
        .map(|at| {
            let mut edges = g.edges().to_vec();
            if fresh == 1 {
                edges.push((at, n));
            } else {
                let ring: Vec<usize> = std::iter::once(at).chain(n..n + fresh).collect();
                edges.extend((0..ring.len()).map(|k| (ring[k], ring[(k + 1) % ring.len()])));
            }
            canon(&Graph::from_edges(n + fresh, edges).expect("new block is simple"))
        })
        .collect()
}

/// Incremental enumerator. Levels are grown on demand and kept, so a sweep
/// over many cells pays for each order once.
#[derive(Debug, Clone)]
pub struct Enumerator {
    cap: usize,
    /// `levels[n][t]`: canonical forms of the cacti with `n` vertices and `t` cycles.
    levels: Vec<BTreeMap<usize, BTreeSet<CanonicalForm>>>,
}

impl Enumerator {
    pub fn new(cap: usize) -> Self {
        let mut first = BTreeMap::new();
        first.insert(0, BTreeSet::from([canon(&Graph::empty(1))]));
        Enumerator {
            cap,
            levels: vec![BTreeMap::new(), first],
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn grow_to(&mut self, n: usize) {
        while self.levels.len() <= n {
            let target = self.levels.len();
            let mut next: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
            // Every cactus on `target` vertices extends one on `target - f`
            // vertices by a block with `f` new vertices.
            for source in 1..target {
                let parents: Vec<(usize, &CanonicalForm)> = self.levels[source]
                    .iter()
                    .flat_map(|(&t, forms)| forms.iter().map(move |f| (t, f)))
                    .collect();
                let fresh = target - source;
                let extra = usize::from(fresh >= 2);
                let found: Vec<(usize, CanonicalForm)> = parents
                    .par_iter()
                    .flat_map_iter(|&(t, form)| {
                        children(&form.to_graph(), fresh)
                            .into_iter()
                            .map(move |child| (t + extra, child))
                    })
                    .collect();
                for (t, form) in found {
                    next.entry(t).or_default().insert(form);
                }
            }
            self.levels.push(next);
        }
    }

    pub fn cell(&mut self, params: CactusClassParams) -> Result<EnumerationCell, EnumerationError> {
        let params = CactusClassParams::new(params.n, params.t)?;
        if params.n > self.cap {
            return Err(EnumerationError::TooLarge {
                n: params.n,
                cap: self.cap,
            });
        }
        self.grow_to(params.n);
        let forms = self.levels[params.n]
            .get(&params.t)
            .cloned()
            .unwrap_or_default();
        Ok(EnumerationCell::from_forms(params, forms))
    }
}

pub fn enumerate_cacti(params: CactusClassParams) -> Result<EnumerationCell, EnumerationError> {
    Enumerator::new(DEFAULT_MAX_N).cell(params)
}

/// Number of simple cycles of `g`, counting no further than `limit + 1`.
fn simple_cycles_up_to(g: &Graph, limit: usize) -> usize {
    fn walk(
        g: &Graph,
        start: usize,
        x: usize,
        on_path: &mut [bool],
        count: &mut usize,
        limit: usize,
    ) {
        for &w in g.neighbors(x) {
            if *count > limit {
                return;
            }
            if w == start && on_path.iter().filter(|&&b| b).count() >= 3 {
                *count += 1;
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                walk(g, start, w, on_path, count, limit);
                on_path[w] = false;
            }
        }
    }
    // Each cycle is found twice, once per direction, from its smallest vertex.
    let mut count = 0;
    for start in 0..g.vertex_count() {
        let mut on_path = vec![false; g.vertex_count()];
        on_path[start] = true;
        walk(g, start, start, &mut on_path, &mut count, 2 * limit + 1);
    }
    count / 2
}

/// A connected graph is a cactus exactly when it has no more simple cycles
/// than its cycle rank `m - n + 1`.
fn is_cactus_by_cycle_count(g: &Graph) -> bool {
    let rank = g.edge_count() + 1 - g.vertex_count();
    simple_cycles_up_to(g, rank) == rank
}

fn invariant_key(g: &Graph) -> Vec<usize> {
    let mut profile: Vec<(usize, Vec<usize>)> = (0..g.vertex_count())
        .map(|v| {
            let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            around.sort_unstable();
            (g.degree(v), around)
        })
        .collect();
    profile.sort();
    profile
        .into_iter()
        .flat_map(|(d, around)| std::iter::once(d).chain(around))
        .collect()
}

/// Backtracking isomorphism test, independent of the canonical form code.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = map.len();
        if k == a.vertex_count() {
            return true;
        }
        for cand in 0..b.vertex_count() {
            if used[cand] || a.degree(k) != b.degree(cand) {
                continue;
            }
            if (0..k).all(|i| a.has_edge(i, k) == b.has_edge(map[i], cand)) {
                used[cand] = true;
                map.push(cand);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[cand] = false;
            }
        }
        false
    }
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && extend(a, b, &mut Vec::new(), &mut vec![false; b.vertex_count()])
}

/// Brute-force cell: every `m`-subset of vertex pairs with `m = n + t - 1`,
/// kept when connected and a cactus by cycle counting, deduplicated by a
/// backtracking isomorphism test. Only the surviving representatives are
/// canonicalized, for comparison with [`enumerate_cacti`].
pub fn filter_oracle(params: CactusClassParams) -> Result<EnumerationCell, EnumerationError> {
    let CactusClassParams { n, t } = CactusClassParams::new(params.n, params.t)?;
    if n > FILTER_ORACLE_MAX_N {
        return Err(EnumerationError::TooLarge {
            n,
            cap: FILTER_ORACLE_MAX_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let m = n + t - 1;
    let mut buckets: HashMap<Vec<usize>, Vec<Graph>> = HashMap::new();
    let mut chosen: Vec<usize> = (0..m).collect();
    if m <= pairs.len() {
        loop {
            let g = Graph::from_edges(n, chosen.iter().map(|&i| pairs[i])).expect("distinct pairs");
            if g.is_connected() && is_cactus_by_cycle_count(&g) {
                let reps = buckets.entry(invariant_key(&g)).or_default();
                if !reps.iter().any(|r| isomorphic(r, &g)) {
                    reps.push(g);
                }
            }
            // next m-subset in lexicographic order
            let Some(i) = (0..m).rev().find(|&i| chosen[i] < pairs.len() - m + i) else {
                break;
            };
            chosen[i] += 1;
            for j in i + 1..m {
                chosen[j] = chosen[j - 1] + 1;
            }
        }
    }
    let forms: BTreeSet<CanonicalForm> = buckets.values().flatten().map(canon).collect();
    Ok(EnumerationCell::from_forms(
        CactusClassParams { n, t },
        forms,
    ))
}

/// Extreme edge-Wiener values over a cell, with every graph attaining them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalScan {
    pub min_value: u64,
    pub max_value: u64,
    pub min_forms: Vec<String>,
    pub max_forms: Vec<String>,
}

impl ExtremalScan {
    pub fn min_count(&self) -> usize {
        self.min_forms.len()
    }

    pub fn max_count(&self) -> usize {
        self.max_forms.len()
    }
}

/// `None` for an empty cell.
pub fn extremal_scan(cell: &EnumerationCell) -> Option<ExtremalScan> {
    let values: Vec<u64> = cell
        .graphs
        .iter()
        .map(|g| edge_wiener(g).expect("cacti are connected"))
        .collect();
    let min_value = *values.iter().min()?;
    let max_value = *values.iter().max()?;
    let pick = |target: u64| -> Vec<String> {
        cell.forms
            .iter()
            .zip(&values)
            .filter(|&(_, &v)| v == target)
            .map(|(f, _)| f.as_str().to_owned())
            .collect()
    };
    Some(ExtremalScan {
        min_value,
        max_value,
        min_forms: pick(min_value),
        max_forms: pick(max_value),
    })
}
