//! Simplicial and chordal graphs.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

use super::{Certificate, Method, RecognizeError, SccCertificate, SimplexCertificate, Verdict};

/// Simplicial `g`: excellent exactly when every vertex lies in one simplex.
pub fn simplicial_excellent(g: &Graph) -> Result<Verdict, RecognizeError> {
    if !g.is_simplicial_graph() {
        return Err(RecognizeError::NotSimplicial);
    }
    let simplexes = g.simplexes().simplexes;
    let mut first_home: Vec<Option<usize>> = vec![None; g.order()];
    let mut overlap = None;
    'scan: for (i, s) in simplexes.iter().enumerate() {
        for &v in s {
            match first_home[v] {
                Some(j) => {
                    overlap = Some((v, j, i));
                    break 'scan;
                }
                None => first_home[v] = Some(i),
            }
        }
    }
    let excellent = overlap.is_none();
    let alpha = excellent.then_some(simplexes.len());
    let certificate = Certificate::SimplexPartition(SimplexCertificate { simplexes, overlap });
    Ok(Verdict::new(excellent, Method::Simplicial, certificate, alpha))
}

/// Greedy successive clique cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SccBuild {
    pub parts: Vec<VertexSet>,
    /// Set when the remaining graph had no simplicial vertex; the leftover
    /// vertices then form the last part.
    pub leftover: bool,
}

/// Repeatedly removes `N[v]` for the lowest-id simplicial vertex `v` of what
/// remains. On chordal graphs this never stalls.
pub fn build_scc(g: &Graph) -> SccBuild {
    let mut alive: Vec<usize> = g.vertices().collect();
    let mut parts = Vec::new();
    while !alive.is_empty() {
        let h = g.induced(&alive);
        let Some(s) = h.vertices().find(|&v| h.is_simplicial_vertex(v)) else {
            parts.push(alive.iter().copied().collect());
            return SccBuild { parts, leftover: true };
        };
        let part: VertexSet = h.closed_neighborhood(s).expect("valid id").iter().map(|&x| alive[x]).collect();
        alive.retain(|v| !part.contains(v));
        parts.push(part);
    }
    SccBuild { parts, leftover: false }
}

/// Outcome of checking properties (b) and (c) of a successive clique cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SccCheck {
    Valid,
    /// `parts[part]` is not a simplex of the graph left after removing the
    /// earlier parts.
    NotSimplex { part: usize },
    /// `vertex` of `parts[part]` has no independent transversal of the later
    /// parts.
    NoTransversal { part: usize, vertex: usize },
}

pub fn verify_scc(g: &Graph, parts: &[VertexSet]) -> Result<bool, RecognizeError> {
    Ok(check_scc(g, parts)? == SccCheck::Valid)
}

pub fn check_scc(g: &Graph, parts: &[VertexSet]) -> Result<SccCheck, RecognizeError> {
    let mut seen = VertexSet::new();
    for part in parts {
        if part.is_empty() || part.iter().any(|&v| v >= g.order() || !seen.insert(v)) {
            return Err(RecognizeError::NotAPartition);
        }
    }
    if seen.len() != g.order() {
        return Err(RecognizeError::NotAPartition);
    }
    let mut alive: Vec<usize> = g.vertices().collect();
    for (i, part) in parts.iter().enumerate() {
        let h = g.induced(&alive);
        let local: VertexSet = alive.iter().enumerate().filter(|(_, v)| part.contains(v)).map(|(x, _)| x).collect();
        let is_simplex = g.is_clique(part) && local.iter().any(|&x| h.closed_neighborhood(x).expect("valid id") == local);
        if !is_simplex {
            return Ok(SccCheck::NotSimplex { part: i });
        }
        alive.retain(|v| !part.contains(v));
    }
    for (i, part) in parts.iter().enumerate() {
        for &u in part {
            let mut chosen = vec![u];
            if !transversal(g, &parts[i + 1..], &mut chosen) {
                return Ok(SccCheck::NoTransversal { part: i, vertex: u });
            }
        }
    }
    Ok(SccCheck::Valid)
}

/// Depth-first search for one vertex per part, independent together with
/// `chosen`.
fn transversal(g: &Graph, rest: &[VertexSet], chosen: &mut Vec<usize>) -> bool {
    let Some((part, later)) = rest.split_first() else { return true };
    for &w in part {
        if chosen.iter().any(|&c| g.has_edge(c, w)) {
            continue;
        }
        chosen.push(w);
        if transversal(g, later, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Chordal `g`: excellent exactly when the greedy cover is a successive
/// clique cover, and then `α(g)` is its number of parts.
pub fn chordal_excellent(g: &Graph) -> Result<Verdict, RecognizeError> {
    if !g.is_chordal() {
        return Err(RecognizeError::NotChordal);
    }
    let SccBuild { parts, .. } = build_scc(g);
    let check = check_scc(g, &parts)?;
    let excellent = check == SccCheck::Valid;
    let alpha = excellent.then_some(parts.len());
    let certificate = Certificate::SuccessiveCliqueCover(SccCertificate { parts, check });
    Ok(Verdict::new(excellent, Method::Chordal, certificate, alpha))
}
