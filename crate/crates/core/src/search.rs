//! Exact backtracking search at small parameters: maximum partial spreads and
//! maximum t-intersecting cliques in a Grassmannian.
//!
//! Both searches enumerate candidates in canonical subspace order and fix the
//! first codeword to the least subspace. The general linear group acts
//! transitively on each Grassmannian and preserves intersection dimensions, so
//! this loses no optimum. A result is certified only when the tree was
//! exhausted under a node budget.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;

use crate::codes::SubspaceCode;
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::subspace::{enumerate_grassmannian, Subspace};

/// Limits on a search run. At least one limit is always set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// False whenever a time limit is set.
    pub deterministic: bool,
}

impl SearchBudget {
    pub fn new(node_limit: Option<u64>, time_limit: Option<Duration>) -> Result<Self> {
        if node_limit.is_none() && time_limit.is_none() {
            return Err(Error::InvalidParameters("a search budget needs a node limit or a time limit".into()));
        }
        Ok(SearchBudget { node_limit, time_limit, deterministic: time_limit.is_none() })
    }

    pub fn nodes(limit: u64) -> Self {
        SearchBudget { node_limit: Some(limit), time_limit: None, deterministic: true }
    }

    pub fn time(limit: Duration) -> Self {
        SearchBudget { node_limit: None, time_limit: Some(limit), deterministic: false }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::nodes(10_000_000)
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub best_code: SubspaceCode,
    /// The whole tree was explored, so `best_code` is optimal.
    pub certified_optimal: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

struct Meter {
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
    exhausted: bool,
}

impl Meter {
    fn new(budget: SearchBudget) -> Self {
        Meter { budget, start: Instant::now(), nodes: 0, exhausted: false }
    }

    /// Counts one node; returns false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.budget.node_limit.is_some_and(|l| self.nodes > l) {
            self.exhausted = true;
        }
        if self.nodes.is_multiple_of(1024) && self.budget.time_limit.is_some_and(|t| self.start.elapsed() > t) {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn finish(self, field: &FieldCtx, n: usize, words: Vec<Subspace>) -> Result<SearchResult> {
        Ok(SearchResult {
            best_code: SubspaceCode::new(field, n, words)?,
            certified_optimal: !self.exhausted,
            nodes_explored: self.nodes,
            elapsed: self.start.elapsed(),
        })
    }
}

fn encode(q: u64, v: &[FieldElement]) -> u64 {
    v.iter().rev().fold(0, |acc, e| acc * q + e.value() as u64)
}

struct SpreadSearch {
    /// Candidate point sets, one per k-subspace.
    cands: Vec<FixedBitSet>,
    /// Candidates through each point.
    through: Vec<Vec<usize>>,
    points: usize,
    per_word: usize,
    best: Vec<usize>,
}

impl SpreadSearch {
    fn dfs(
        &mut self,
        meter: &mut Meter,
        covered: &mut FixedBitSet,
        holes: usize,
        next: usize,
        chosen: &mut Vec<usize>,
    ) {
        if !meter.tick() {
            return;
        }
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        let free = self.points - covered.count_ones(..) - holes;
        if chosen.len() + free / self.per_word <= self.best.len() {
            return;
        }
        let Some(p) = (next..self.points).find(|&p| !covered.contains(p)) else {
            return;
        };
        for i in 0..self.through[p].len() {
            let c = self.through[p][i];
            if !self.cands[c].is_disjoint(covered) {
                continue;
            }
            covered.union_with(&self.cands[c]);
            chosen.push(c);
            self.dfs(meter, covered, holes, p + 1, chosen);
            chosen.pop();
            covered.difference_with(&self.cands[c]);
            if meter.exhausted {
                return;
            }
        }
        // leave p uncovered for good
        self.dfs(meter, covered, holes + 1, p + 1, chosen);
    }
}

/// Largest family of pairwise disjoint k-subspaces of F_q^n.
pub fn max_partial_spread(field: &FieldCtx, n: usize, k: usize, budget: SearchBudget) -> Result<SearchResult> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!("need 0 < k <= n, got k = {k}, n = {n}")));
    }
    let q = field.order() as u64;
    let points: Vec<Subspace> = enumerate_grassmannian(field, n, 1)?.collect();
    let index: HashMap<u64, usize> = points.iter().enumerate().map(|(i, p)| (encode(q, p.basis().row(0)), i)).collect();
    let words: Vec<Subspace> = enumerate_grassmannian(field, n, k)?.collect();
    let mut through = vec![Vec::new(); points.len()];
    let cands: Vec<FixedBitSet> = words
        .iter()
        .enumerate()
        .map(|(c, w)| {
            let mut bits = FixedBitSet::with_capacity(points.len());
            for v in w.projective_points() {
                let p = index[&encode(q, &v)];
                bits.insert(p);
                through[p].push(c);
            }
            bits
        })
        .collect();
    let per_word = cands[0].count_ones(..);
    let mut search = SpreadSearch { cands, through, points: points.len(), per_word, best: vec![0] };
    let mut meter = Meter::new(budget);
    let mut covered = search.cands[0].clone();
    search.dfs(&mut meter, &mut covered, 0, 0, &mut vec![0]);
    let best = search.best.iter().map(|&c| words[c].clone()).collect();
    meter.finish(field, n, best)
}

struct CliqueSearch {
    words: Vec<Subspace>,
    adj: Vec<FixedBitSet>,
    forbid_sunflower: bool,
    best: Vec<usize>,
}

/// Sunflower state of the current clique in forbid mode: the candidate
/// center and the vertices containing it.
struct Center {
    holders: FixedBitSet,
    /// Every clique member contains the center.
    all_hold: bool,
}

impl CliqueSearch {
    /// Greedy sequential coloring; returns vertices with their color numbers,
    /// in ascending color order.
    fn color(&self, cand: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(cand.count_ones(..));
        let mut uncolored = cand.clone();
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.ones().next() {
                out.push((v, color));
                uncolored.set(v, false);
                avail.set(v, false);
                avail.difference_with(&self.adj[v]);
            }
        }
        out
    }

    fn record(&mut self, clique: &[usize], center: &Option<Center>) {
        let sunflower = center.as_ref().is_some_and(|c| c.all_hold);
        let eligible = !self.forbid_sunflower || (clique.len() >= 3 && !sunflower);
        if eligible && clique.len() > self.best.len() {
            self.best = clique.to_vec();
        }
    }

    fn expand(&mut self, meter: &mut Meter, clique: &mut Vec<usize>, mut cand: FixedBitSet, center: Option<Center>) {
        if !meter.tick() {
            return;
        }
        self.record(clique, &center);
        if let Some(c) = &center {
            if c.all_hold && cand.is_subset(&c.holders) {
                // every extension is still a sunflower
                return;
            }
        }
        let order = self.color(&cand);
        for &(v, color) in order.iter().rev() {
            if clique.len() + color <= self.best.len() {
                return;
            }
            let mut next = cand.clone();
            next.intersect_with(&self.adj[v]);
            let next_center = self.center_after(clique, &center, v);
            clique.push(v);
            self.expand(meter, clique, next, next_center);
            clique.pop();
            cand.set(v, false);
            if meter.exhausted {
                return;
            }
        }
    }

    fn center_after(&self, clique: &[usize], center: &Option<Center>, v: usize) -> Option<Center> {
        if !self.forbid_sunflower {
            return None;
        }
        match (clique.len(), center) {
            (1, _) => {
                let z = self.words[clique[0]].intersect(&self.words[v]).expect("same ambient space");
                let mut holders = FixedBitSet::with_capacity(self.words.len());
                for (i, w) in self.words.iter().enumerate() {
                    if w.contains(&z) {
                        holders.insert(i);
                    }
                }
                Some(Center { holders, all_hold: true })
            }
            (_, Some(c)) => Some(Center { holders: c.holders.clone(), all_hold: c.all_hold && c.holders.contains(v) }),
            _ => None,
        }
    }
}

/// Largest family of k-subspaces of F_q^n meeting pairwise in dimension
/// exactly `t`. With `forbid_sunflower`, only codes of at least three words
/// without a common center count.
pub fn max_t_intersecting_clique(
    field: &FieldCtx,
    n: usize,
    k: usize,
    t: usize,
    budget: SearchBudget,
    forbid_sunflower: bool,
) -> Result<SearchResult> {
    if t >= k || k > n {
        return Err(Error::InvalidParameters(format!("need t < k <= n, got t = {t}, k = {k}, n = {n}")));
    }
    let words: Vec<Subspace> = enumerate_grassmannian(field, n, k)?.collect();
    let m = words.len();
    let mut adj = vec![FixedBitSet::with_capacity(m); m];
    for i in 0..m {
        for j in i + 1..m {
            if words[i].intersection_dim(&words[j])? == t {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    let first = adj[0].clone();
    let mut search =
        CliqueSearch { words, adj, forbid_sunflower, best: if forbid_sunflower { Vec::new() } else { vec![0] } };
    let mut meter = Meter::new(budget);
    search.expand(&mut meter, &mut vec![0], first, None);
    let best = search.best.iter().map(|&c| search.words[c].clone()).collect();
    meter.finish(field, n, best)
}
