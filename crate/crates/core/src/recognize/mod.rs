//! Structural α-excellence deciders.
//!
//! Each recognizer applies one characterization and returns a [`Verdict`]
//! whose [`Certificate`] can be re-checked against the graph by
//! [`verify_certificate`] without trusting the code that produced it.
//! [`recognize`] picks the most specific applicable characterization per
//! component and falls back to the exact oracle when none applies.

mod bipartite;
mod block;
mod chordal;
mod families;
mod unicyclic;
mod verify;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::FamilyError;
use crate::graph::{Graph, VertexSet};
use crate::matching::Matching;
use crate::oracle::{Oracle, OracleError};

pub use bipartite::{bipartite_excellent, forced_leaf_matching, tree_excellent};
pub use block::{block_excellent, enumerate_perfect_block_covers, find_perfect_block_covers};
pub use chordal::{build_scc, check_scc, chordal_excellent, simplicial_excellent, verify_scc, SccBuild, SccCheck};
pub use families::{corona_excellent, petersen_excellent};
pub use unicyclic::{
    caterpillar_wheel_excellent, caterpillar_wheel_structure, leg_gaps, pluck, pluck_with, unicyclic_excellent,
    CaterpillarWheel, PluckTrace,
};
pub use verify::{verify_certificate, CertificateError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not bipartite or the bipartition is invalid")]
    NotBipartite,
    #[error("graph is not a tree")]
    NotTree,
    #[error("graph is not a connected unicyclic graph")]
    NotUnicyclic,
    #[error("graph is not a caterpillar-wheel")]
    NotCaterpillarWheel,
    #[error("graph is not simplicial")]
    NotSimplicial,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not a block graph")]
    NotBlockGraph,
    #[error("graph needs at least {min} vertices")]
    TooSmall { min: usize },
    #[error("parts do not partition the vertex set")]
    NotAPartition,
    #[error("rotation certificate failed: {0}")]
    RotationFailed(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Which characterization decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    BaseCase,
    QuickReject,
    Tree,
    Bipartite,
    CaterpillarWheel,
    Unicyclic,
    Simplicial,
    Chordal,
    Block,
    Corona,
    Petersen,
    OracleFallback,
    Components,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::BaseCase => "base-case",
            Method::QuickReject => "quick-reject",
            Method::Tree => "tree/perfect-matching",
            Method::Bipartite => "bipartite/perfect-matching",
            Method::CaterpillarWheel => "caterpillar-wheel/legs",
            Method::Unicyclic => "unicyclic/pluck",
            Method::Simplicial => "simplicial/simplex-partition",
            Method::Chordal => "chordal/successive-clique-cover",
            Method::Block => "block/perfect-block-cover",
            Method::Corona => "corona/complete-attachments",
            Method::Petersen => "petersen/rotation",
            Method::OracleFallback => "oracle-fallback",
            Method::Components => "components",
        }
    }

    pub const ALL: [Method; 13] = [
        Method::BaseCase,
        Method::QuickReject,
        Method::Tree,
        Method::Bipartite,
        Method::CaterpillarWheel,
        Method::Unicyclic,
        Method::Simplicial,
        Method::Chordal,
        Method::Block,
        Method::Corona,
        Method::Petersen,
        Method::OracleFallback,
        Method::Components,
    ];

    pub fn from_name(name: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub excellent: bool,
    pub method: Method,
    pub certificate: Certificate,
    pub fallback_used: bool,
    /// Independence number, when the characterization determines it.
    pub alpha: Option<usize>,
}

impl Verdict {
    fn new(excellent: bool, method: Method, certificate: Certificate, alpha: Option<usize>) -> Verdict {
        Verdict { excellent, method, certificate, fallback_used: false, alpha }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `K_1` or `K_2`.
    BaseCase,
    Rejected(RejectReason),
    Matching(MatchingCertificate),
    CaterpillarWheel(CaterpillarWheel),
    Pluck {
        trace: PluckTrace,
        /// Verdict on the plucked graph, in its own ids; `None` when the
        /// plucked graph is not a caterpillar-wheel.
        residual: Option<Box<Verdict>>,
    },
    SimplexPartition(SimplexCertificate),
    SuccessiveCliqueCover(SccCertificate),
    BlockCover(BlockCoverCertificate),
    /// A clique partition with one independent transversal per vertex.
    CliquePartition(CliquePartition),
    /// Two non-adjacent vertices whose neighborhoods lie inside `N[vertex]`,
    /// so swapping `vertex` for them grows any independent set holding it.
    Swap { vertex: usize, pair: (usize, usize) },
    Rotation(RotationCertificate),
    Oracle(OracleCertificate),
    Components(Vec<ComponentVerdict>),
}

/// A failed necessary condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RejectReason {
    /// A vertex with two leaf neighbors.
    StrongSupport { vertex: usize, leaves: (usize, usize) },
    /// `vertex` lies in the distinct simplexes `N[first]` and `N[second]` of
    /// the simplicial vertices `first` and `second`.
    OverlappingSimplexes { vertex: usize, first: usize, second: usize },
}

/// A maximum matching; when it is not perfect, a vertex cover of the same
/// size proves that no larger matching exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCertificate {
    pub matching: Matching,
    pub cover: Option<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexCertificate {
    pub simplexes: Vec<VertexSet>,
    /// A vertex and the indices of two simplexes containing it.
    pub overlap: Option<(usize, usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SccCertificate {
    pub parts: Vec<VertexSet>,
    pub check: SccCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCoverCertificate {
    pub cover: Option<Vec<VertexSet>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePartition {
    pub cliques: Vec<VertexSet>,
    /// `witnesses[v]` is an independent set of size `cliques.len()` holding `v`.
    pub witnesses: Vec<VertexSet>,
}

/// Maximum independent sets of `P_{n,k}` and the rotations applied to them.
/// The rotation by `l` maps `v_i -> v_{i+l}` and `u_i -> u_{i+l}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationCertificate {
    pub n: usize,
    pub k: usize,
    pub alpha: usize,
    /// `(generator, shifts)`: the generator is rotated by `0..shifts`.
    pub orbits: Vec<(VertexSet, usize)>,
    /// Whether the first generator rotated by `0..k` alone covers the graph.
    pub first_k_shifts_cover: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCertificate {
    pub alpha: usize,
    pub alpha_set: VertexSet,
    pub per_vertex_max: Vec<usize>,
    pub witness: Vec<Option<VertexSet>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentVerdict {
    /// Original ids; component vertex `i` is `vertices[i]`.
    pub vertices: Vec<usize>,
    pub verdict: Verdict,
}

/// A reason `g` cannot be α-excellent, when one of the cheap necessary
/// conditions fails. `None` does not imply excellence.
pub fn quick_reject(g: &Graph) -> Option<RejectReason> {
    for v in g.vertices() {
        let mut leaves = g.leaf_neighbors(v);
        if let (Some(a), Some(b)) = (leaves.next(), leaves.next()) {
            return Some(RejectReason::StrongSupport { vertex: v, leaves: (a, b) });
        }
    }
    let simplexes = g.simplexes();
    let mut owner: Vec<Option<(usize, VertexSet)>> = vec![None; g.order()];
    for &s in &simplexes.simplicial_vertices {
        let closed = g.closed_neighborhood(s).expect("valid id");
        for &v in &closed {
            match &owner[v] {
                Some((first, set)) if *set != closed => {
                    return Some(RejectReason::OverlappingSimplexes { vertex: v, first: *first, second: s });
                }
                Some(_) => {}
                None => owner[v] = Some((s, closed.clone())),
            }
        }
    }
    None
}

/// Decides α-excellence component by component with the most specific
/// characterization available, using `oracle` only when none applies.
pub fn recognize(g: &Graph, oracle: &Oracle) -> Result<Verdict, OracleError> {
    let components = g.components();
    if components.len() <= 1 {
        return recognize_connected(g, oracle);
    }
    let mut parts = Vec::with_capacity(components.len());
    for vertices in components {
        let verdict = recognize_connected(&g.induced(&vertices), oracle)?;
        parts.push(ComponentVerdict { vertices, verdict });
    }
    let excellent = parts.iter().all(|c| c.verdict.excellent);
    let fallback_used = parts.iter().any(|c| c.verdict.fallback_used);
    let alpha = parts.iter().map(|c| c.verdict.alpha).sum::<Option<usize>>();
    Ok(Verdict { excellent, method: Method::Components, certificate: Certificate::Components(parts), fallback_used, alpha })
}

fn recognize_connected(g: &Graph, oracle: &Oracle) -> Result<Verdict, OracleError> {
    let n = g.order();
    if n <= 2 {
        return Ok(Verdict::new(true, Method::BaseCase, Certificate::BaseCase, Some(n.min(1))));
    }
    if let Some(reason) = quick_reject(g) {
        return Ok(Verdict::new(false, Method::QuickReject, Certificate::Rejected(reason), None));
    }
    let decided = if g.size() + 1 == n {
        tree_excellent(g)
    } else if g.size() == n {
        unicyclic_excellent(g)
    } else if let Some(bip) = g.bipartition() {
        bipartite_excellent(g, &bip)
    } else if g.is_block_graph() {
        block_excellent(g)
    } else if g.is_simplicial_graph() {
        simplicial_excellent(g)
    } else if g.is_chordal() {
        chordal_excellent(g)
    } else {
        return oracle_verdict(g, oracle);
    };
    Ok(decided.expect("structural preconditions were checked by the dispatcher"))
}

/// Decides excellence by exact search.
pub fn oracle_verdict(g: &Graph, oracle: &Oracle) -> Result<Verdict, OracleError> {
    let ex = oracle.excellence(g)?;
    let certificate = OracleCertificate {
        alpha: ex.alpha,
        alpha_set: ex.alpha_set.clone(),
        per_vertex_max: ex.per_vertex_max.clone(),
        witness: ex.witness.clone(),
    };
    Ok(Verdict {
        excellent: ex.excellent(),
        method: Method::OracleFallback,
        certificate: Certificate::Oracle(certificate),
        fallback_used: true,
        alpha: Some(ex.alpha),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, double_star, generalized_petersen, path, star};

    #[test]
    fn quick_rejections() {
        assert!(quick_reject(&star(2)).is_some());
        assert!(matches!(quick_reject(&double_star(2, 2)), Some(RejectReason::StrongSupport { .. })));
        assert_eq!(quick_reject(&cycle(5).unwrap()), None);
        // K_{1,2} plus an edge between the leaves' far side: bowtie-free
        // paw: triangle 0,1,2 with pendant 3 at 0
        let paw = Graph::build(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert_eq!(
            quick_reject(&paw),
            Some(RejectReason::OverlappingSimplexes { vertex: 0, first: 1, second: 3 })
        );
    }

    #[test]
    fn dispatch_methods() {
        let o = Oracle::default();
        assert_eq!(recognize(&path(4), &o).unwrap().method, Method::Tree);
        assert_eq!(recognize(&cycle(5).unwrap(), &o).unwrap().method, Method::Unicyclic);
        let p = recognize(&generalized_petersen(5, 2).unwrap(), &o).unwrap();
        assert_eq!(p.method, Method::OracleFallback);
        assert!(p.excellent && p.fallback_used);
        assert_eq!(recognize(&complete(1), &o).unwrap().method, Method::BaseCase);
        assert_eq!(recognize(&complete(5), &o).unwrap().method, Method::Block);
    }

    #[test]
    fn disconnected_graphs() {
        let o = Oracle::default();
        let g = path(6).disjoint_union(&cycle(5).unwrap());
        let v = recognize(&g, &o).unwrap();
        assert!(v.excellent);
        assert_eq!(v.method, Method::Components);
        assert_eq!(v.alpha, Some(5));
        let g = star(2).disjoint_union(&complete(2));
        assert!(!recognize(&g, &o).unwrap().excellent);
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(Method::from_name(m.name()), Some(m));
        }
    }
}
