//! Branch-and-bound searches over bitset candidate sets.

use crate::bitset::{Adjacency, Bits};

use super::OracleError;

pub(super) struct Counter {
    pub nodes: u64,
    pub budget: u64,
}

impl Counter {
    pub fn new(budget: u64) -> Counter {
        Counter { nodes: 0, budget }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(OracleError::BudgetExhausted { budget: self.budget })
        } else {
            Ok(())
        }
    }
}

/// Maximum independent set inside `cand`.
pub(super) fn max_independent(adj: &Adjacency, cand: Bits, counter: &mut Counter) -> Result<Vec<usize>, OracleError> {
    let mut search = MisSearch { adj, counter, best: greedy_independent(adj, &cand), chosen: Vec::new() };
    search.expand(cand)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

/// Min-degree greedy independent set, the initial incumbent.
fn greedy_independent(adj: &Adjacency, cand: &Bits) -> Vec<usize> {
    let mut cand = cand.clone();
    let mut out = Vec::new();
    while !cand.is_empty() {
        let v = cand.iter().min_by_key(|&v| adj.open[v].intersect_count(&cand)).unwrap();
        out.push(v);
        cand = cand.and_not(&adj.closed[v]);
    }
    out
}

struct MisSearch<'a> {
    adj: &'a Adjacency,
    counter: &'a mut Counter,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl MisSearch<'_> {
    fn expand(&mut self, mut cand: Bits) -> Result<(), OracleError> {
        self.counter.tick()?;
        let mark = self.chosen.len();
        // vertices of degree <= 1 in the candidate graph lie in some maximum
        // independent set of it
        loop {
            let low = cand.iter().find(|&v| self.adj.open[v].intersect_count(&cand) <= 1);
            let Some(v) = low else { break };
            self.chosen.push(v);
            cand = cand.and_not(&self.adj.closed[v]);
        }
        if cand.is_empty() {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
        } else if self.chosen.len() + clique_cover_bound(self.adj, &cand) > self.best.len() {
            let v = max_degree_vertex(self.adj, &cand);
            self.chosen.push(v);
            self.expand(cand.and_not(&self.adj.closed[v]))?;
            self.chosen.pop();
            cand.remove(v);
            self.expand(cand)?;
        }
        self.chosen.truncate(mark);
        Ok(())
    }
}

/// Highest degree within `cand`, lowest id on ties.
fn max_degree_vertex(adj: &Adjacency, cand: &Bits) -> usize {
    let mut best = (0, usize::MAX);
    for v in cand.iter() {
        let d = adj.open[v].intersect_count(cand);
        if best.1 == usize::MAX || d > best.0 {
            best = (d, v);
        }
    }
    best.1
}

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// the independence number of the candidate graph.
fn clique_cover_bound(adj: &Adjacency, cand: &Bits) -> usize {
    // for each clique, the candidates adjacent to all of its members
    let mut commons: Vec<Bits> = Vec::new();
    for v in cand.iter() {
        match commons.iter_mut().find(|c| c.contains(v)) {
            Some(common) => common.and_assign(&adj.open[v]),
            None => commons.push(adj.open[v].and(cand)),
        }
    }
    commons.len()
}

/// Minimum independent dominating set of the whole vertex set.
pub(super) fn min_independent_dominating(adj: &Adjacency, counter: &mut Counter) -> Result<Vec<usize>, OracleError> {
    let all = Bits::full(adj.n);
    let mut search = IdsSearch { adj, counter, best: greedy_independent(adj, &all), chosen: Vec::new() };
    search.expand(all)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

struct IdsSearch<'a> {
    adj: &'a Adjacency,
    counter: &'a mut Counter,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl IdsSearch<'_> {
    /// `free` holds the vertices neither chosen nor adjacent to a chosen one:
    /// exactly the undominated vertices, and exactly the ones still eligible.
    fn expand(&mut self, free: Bits) -> Result<(), OracleError> {
        self.counter.tick()?;
        if free.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        let mut reach_max = 0;
        let mut pivot = (usize::MAX, usize::MAX);
        for v in free.iter() {
            let reach = self.adj.closed[v].intersect_count(&free);
            reach_max = reach_max.max(reach);
            if reach < pivot.0 {
                pivot = (reach, v);
            }
        }
        let needed = free.count().div_ceil(reach_max);
        if self.chosen.len() + needed >= self.best.len() {
            return Ok(());
        }
        // the pivot must end up dominated by itself or a free neighbor
        for w in self.adj.closed[pivot.1].and(&free).iter().collect::<Vec<_>>() {
            self.chosen.push(w);
            self.expand(free.and_not(&self.adj.closed[w]))?;
            self.chosen.pop();
        }
        Ok(())
    }
}
