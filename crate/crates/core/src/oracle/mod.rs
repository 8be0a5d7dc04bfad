//! Exact (exponential-time) independence parameters.
//!
//! Everything here is computed by definition: `α` by branch and bound with a
//! greedy clique-cover bound, the per-vertex maxima as `1 + α(G − N[v])`,
//! and `i` by branching on how an undominated vertex gets dominated. Each
//! search is capped by a node budget and reports exhaustion instead of
//! guessing.

pub mod exhaustive;
mod search;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{Adjacency, Bits};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::matching::{bipartite_max_matching, Matching};

use search::Counter;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("set is not independent")]
    NotIndependent,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An independent set together with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentSet {
    pub size: usize,
    pub set: VertexSet,
}

impl IndependentSet {
    fn from_vec(v: Vec<usize>) -> IndependentSet {
        IndependentSet { size: v.len(), set: v.into_iter().collect() }
    }
}

/// Per-vertex data that decides α-excellence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Excellence {
    pub alpha: usize,
    pub alpha_set: VertexSet,
    /// Largest independent set containing each vertex.
    pub per_vertex_max: Vec<usize>,
    /// One maximum independent set containing the vertex, when one exists.
    pub witness: Vec<Option<VertexSet>>,
}

impl Excellence {
    pub fn alpha_c(&self) -> usize {
        self.per_vertex_max.iter().copied().min().unwrap_or(0)
    }

    pub fn excellent(&self) -> bool {
        self.alpha_c() == self.alpha
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub alpha: usize,
    pub alpha_c: usize,
    pub ind_dom: usize,
    pub per_vertex_max: Vec<usize>,
    pub excellent: bool,
    pub well_covered: bool,
    pub critical: VertexSet,
    pub witness: Vec<Option<VertexSet>>,
    /// A maximum independent set.
    pub alpha_set: VertexSet,
    /// A minimum independent dominating set.
    pub ind_dom_set: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    /// Node cap for each individual search.
    pub budget: u64,
    /// Evaluate the per-vertex searches on the rayon pool.
    pub parallel: bool,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { budget: DEFAULT_BUDGET, parallel: false }
    }
}

impl Oracle {
    pub fn with_budget(budget: u64) -> Oracle {
        Oracle { budget, ..Oracle::default() }
    }

    fn mis_within(&self, adj: &Adjacency, cand: Bits) -> Result<Vec<usize>, OracleError> {
        search::max_independent(adj, cand, &mut Counter::new(self.budget))
    }

    pub fn max_independent_set(&self, g: &Graph) -> Result<IndependentSet, OracleError> {
        let adj = Adjacency::of(g);
        Ok(IndependentSet::from_vec(self.mis_within(&adj, Bits::full(g.order()))?))
    }

    pub fn independence_number(&self, g: &Graph) -> Result<usize, OracleError> {
        Ok(self.max_independent_set(g)?.size)
    }

    /// Largest independent set containing `v`: `1 + α(G − N[v])`.
    pub fn max_independent_including(&self, g: &Graph, v: usize) -> Result<IndependentSet, OracleError> {
        g.check_vertex(v)?;
        let adj = Adjacency::of(g);
        self.including(&adj, v)
    }

    fn including(&self, adj: &Adjacency, v: usize) -> Result<IndependentSet, OracleError> {
        let cand = Bits::full(adj.n).and_not(&adj.closed[v]);
        let mut set = self.mis_within(adj, cand)?;
        set.push(v);
        set.sort_unstable();
        Ok(IndependentSet::from_vec(set))
    }

    pub fn excellence(&self, g: &Graph) -> Result<Excellence, OracleError> {
        let adj = Adjacency::of(g);
        let alpha_set = self.mis_within(&adj, Bits::full(g.order()))?;
        let alpha = alpha_set.len();
        let per_vertex: Vec<IndependentSet> = if self.parallel {
            g.vertices().into_par_iter().map(|v| self.including(&adj, v)).collect::<Result<_, _>>()?
        } else {
            g.vertices().map(|v| self.including(&adj, v)).collect::<Result<_, _>>()?
        };
        Ok(Excellence {
            alpha,
            alpha_set: alpha_set.into_iter().collect(),
            per_vertex_max: per_vertex.iter().map(|s| s.size).collect(),
            witness: per_vertex.into_iter().map(|s| (s.size == alpha).then_some(s.set)).collect(),
        })
    }

    pub fn independent_domination(&self, g: &Graph) -> Result<IndependentSet, OracleError> {
        let adj = Adjacency::of(g);
        let set = search::min_independent_dominating(&adj, &mut Counter::new(self.budget))?;
        Ok(IndependentSet::from_vec(set))
    }

    /// Vertices lying in every maximum independent set, i.e. those with
    /// `α(G − v) = α(G) − 1`.
    pub fn critical_vertices(&self, g: &Graph) -> Result<VertexSet, OracleError> {
        let ex = self.excellence(g)?;
        self.critical_from(g, &ex)
    }

    fn critical_from(&self, g: &Graph, ex: &Excellence) -> Result<VertexSet, OracleError> {
        let adj = Adjacency::of(g);
        // any known maximum set avoiding v shows that v is not critical
        let known: Vec<&VertexSet> = std::iter::once(&ex.alpha_set).chain(ex.witness.iter().flatten()).collect();
        let mut critical = VertexSet::new();
        for v in g.vertices() {
            if ex.per_vertex_max[v] < ex.alpha || known.iter().any(|s| !s.contains(&v)) {
                continue;
            }
            let mut cand = Bits::full(g.order());
            cand.remove(v);
            if self.mis_within(&adj, cand)?.len() + 1 == ex.alpha {
                critical.insert(v);
            }
        }
        Ok(critical)
    }

    pub fn is_well_covered(&self, g: &Graph) -> Result<bool, OracleError> {
        Ok(self.independent_domination(g)?.size == self.independence_number(g)?)
    }

    pub fn analyze(&self, g: &Graph) -> Result<AnalysisReport, OracleError> {
        let ex = self.excellence(g)?;
        let ids = self.independent_domination(g)?;
        let critical = self.critical_from(g, &ex)?;
        let alpha_c = ex.alpha_c();
        Ok(AnalysisReport {
            alpha: ex.alpha,
            alpha_c,
            ind_dom: ids.size,
            excellent: ex.excellent(),
            well_covered: ids.size == ex.alpha,
            critical,
            per_vertex_max: ex.per_vertex_max,
            witness: ex.witness,
            alpha_set: ex.alpha_set,
            ind_dom_set: ids.set,
        })
    }
}

/// A matching saturating the independent set `i_set` using only edges from
/// `i_set` to the rest of the graph, or `None` when Hall's condition fails.
pub fn match_into_complement(g: &Graph, i_set: &VertexSet) -> Result<Option<Matching>, OracleError> {
    for &v in i_set {
        g.check_vertex(v)?;
    }
    if !g.is_independent(i_set) {
        return Err(OracleError::NotIndependent);
    }
    let rest: VertexSet = g.complement_of(i_set).into_iter().collect();
    let m = bipartite_max_matching(g, i_set, &rest);
    Ok((m.len() == i_set.len()).then_some(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, generalized_petersen, path, star};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn independence_numbers() {
        let o = Oracle::default();
        assert_eq!(o.independence_number(&complete(6)).unwrap(), 1);
        assert_eq!(o.independence_number(&cycle(5).unwrap()).unwrap(), 2);
        // α(Petersen) = 4, by exhaustive enumeration
        let p = generalized_petersen(5, 2).unwrap();
        let mis = o.max_independent_set(&p).unwrap();
        assert_eq!(mis.size, 4);
        assert!(p.is_independent(&mis.set));
        assert_eq!(o.independence_number(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn including_a_vertex() {
        let o = Oracle::default();
        let k12 = star(2);
        assert_eq!(o.max_independent_including(&k12, 0).unwrap().size, 1);
        assert_eq!(o.max_independent_including(&k12, 1).unwrap().set, set(&[1, 2]));
        let c4 = cycle(4).unwrap();
        for v in 0..4 {
            let s = o.max_independent_including(&c4, v).unwrap();
            assert_eq!(s.size, 2);
            assert!(s.set.contains(&v));
        }
        assert!(o.max_independent_including(&c4, 4).is_err());
    }

    #[test]
    fn analysis_reports() {
        let o = Oracle::default();
        // values computed by exhaustive enumeration over all subsets
        let r = o.analyze(&path(6)).unwrap();
        assert_eq!((r.ind_dom, r.alpha_c, r.alpha), (2, 3, 3));
        assert!(r.excellent && !r.well_covered);

        let r = o.analyze(&star(2)).unwrap();
        assert_eq!((r.ind_dom, r.alpha_c, r.alpha), (1, 1, 2));
        assert!(!r.excellent);
        assert_eq!(r.critical, set(&[1, 2]));
        assert_eq!(r.witness[0], None);

        let r = o.analyze(&generalized_petersen(5, 1).unwrap()).unwrap();
        assert_eq!((r.ind_dom, r.alpha), (4, 4));
        assert!(r.well_covered && r.excellent);

        let r = o.analyze(&complete(1)).unwrap();
        assert_eq!((r.ind_dom, r.alpha_c, r.alpha), (1, 1, 1));
        assert_eq!(r.critical, set(&[0]));
    }

    #[test]
    fn critical_vertex_sets() {
        let o = Oracle::default();
        assert_eq!(o.critical_vertices(&star(2)).unwrap(), set(&[1, 2]));
        assert!(o.critical_vertices(&cycle(5).unwrap()).unwrap().is_empty());
        assert!(o.critical_vertices(&path(4)).unwrap().is_empty());
    }

    #[test]
    fn well_covered_checks() {
        let o = Oracle::default();
        assert!(o.is_well_covered(&cycle(7).unwrap()).unwrap());
        assert!(!o.is_well_covered(&path(6)).unwrap());
        assert!(o.is_well_covered(&complete(5)).unwrap());
    }

    #[test]
    fn matching_into_complement() {
        let c4 = cycle(4).unwrap();
        let m = match_into_complement(&c4, &set(&[0, 2])).unwrap().unwrap();
        assert_eq!(m.len(), 2);
        m.validate(&c4).unwrap();
        assert_eq!(match_into_complement(&star(2), &set(&[1, 2])).unwrap(), None);
        assert_eq!(match_into_complement(&c4, &VertexSet::new()).unwrap(), Some(Matching::default()));
        assert_eq!(match_into_complement(&c4, &set(&[0, 1])), Err(OracleError::NotIndependent));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let o = Oracle::with_budget(3);
        let p = generalized_petersen(9, 2).unwrap();
        assert_eq!(o.analyze(&p), Err(OracleError::BudgetExhausted { budget: 3 }));
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = generalized_petersen(8, 3).unwrap();
        let seq = Oracle::default().excellence(&g).unwrap();
        let par = Oracle { parallel: true, ..Oracle::default() }.excellence(&g).unwrap();
        assert_eq!(seq, par);
    }
}
