//! Matchings and augmenting-path search on bipartite edge sets.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Pairwise vertex-disjoint edges, stored as `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingDefect {
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is matched twice")]
    SharedVertex(usize),
}

impl Matching {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Matching {
        let mut edges: Vec<(usize, usize)> = pairs.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        2 * self.len() == g.order() && self.covered().len() == g.order()
    }

    /// Checks that every pair is an edge of `g` and no vertex repeats.
    pub fn validate(&self, g: &Graph) -> Result<(), MatchingDefect> {
        let mut seen = VertexSet::new();
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(MatchingDefect::NotAnEdge(u, v));
            }
            for w in [u, v] {
                if !seen.insert(w) {
                    return Err(MatchingDefect::SharedVertex(w));
                }
            }
        }
        Ok(())
    }
}

/// Maximum matching using only edges of `g` between `left` and `right`
/// (Kuhn's augmenting paths). Left vertices are tried in increasing order.
pub fn bipartite_max_matching(g: &Graph, left: &VertexSet, right: &VertexSet) -> Matching {
    let mut mate: Vec<Option<usize>> = vec![None; g.order()];
    for &u in left {
        let mut visited = vec![false; g.order()];
        augment(g, u, right, &mut mate, &mut visited);
    }
    Matching::from_pairs(left.iter().filter_map(|&u| mate[u].map(|v| (u, v))))
}

/// Iterative augmenting-path search from a free left vertex `root`.
fn augment(g: &Graph, root: usize, right: &VertexSet, mate: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    // stack of (left vertex, next neighbor index) and the right vertex used to reach it
    let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
    let mut via: Vec<usize> = Vec::new();
    while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
        if *idx == g.degree(u) {
            stack.pop();
            via.pop();
            continue;
        }
        let w = g.neighbors(u)[*idx];
        *idx += 1;
        if !right.contains(&w) || visited[w] {
            continue;
        }
        visited[w] = true;
        match mate[w] {
            None => {
                // flip the path root .. u - w
                via.push(w);
                for (&(l, _), &r) in stack.iter().zip(&via) {
                    mate[l] = Some(r);
                    mate[r] = Some(l);
                }
                return true;
            }
            Some(next) => {
                via.push(w);
                stack.push((next, 0));
            }
        }
    }
    false
}

/// König vertex cover built from a maximum matching; its size equals the
/// matching size, certifying maximality.
pub fn konig_cover(g: &Graph, left: &VertexSet, right: &VertexSet, matching: &Matching) -> VertexSet {
    let mut mate: Vec<Option<usize>> = vec![None; g.order()];
    for &(u, v) in &matching.edges {
        mate[u] = Some(v);
        mate[v] = Some(u);
    }
    let mut reached = vec![false; g.order()];
    let mut stack: Vec<usize> = left.iter().copied().filter(|&u| mate[u].is_none()).collect();
    for &u in &stack {
        reached[u] = true;
    }
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if right.contains(&w) && !reached[w] && mate[u] != Some(w) {
                reached[w] = true;
                if let Some(x) = mate[w] {
                    if !reached[x] {
                        reached[x] = true;
                        stack.push(x);
                    }
                }
            }
        }
    }
    left.iter().copied().filter(|&u| !reached[u]).chain(right.iter().copied().filter(|&w| reached[w])).collect()
}

/// Whether `cover` touches every edge of `g` between `left` and `right`.
pub fn is_vertex_cover_between(g: &Graph, left: &VertexSet, right: &VertexSet, cover: &VertexSet) -> bool {
    left.iter().all(|&u| {
        cover.contains(&u) || g.neighbors(u).iter().all(|w| !right.contains(w) || cover.contains(w))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn perfect_matching_on_even_cycle() {
        let c6 = Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let (a, b) = c6.bipartition().unwrap();
        let m = bipartite_max_matching(&c6, &a, &b);
        assert_eq!(m.len(), 3);
        assert!(m.is_perfect_for(&c6));
        m.validate(&c6).unwrap();
    }

    #[test]
    fn augmenting_paths_are_found() {
        // left 0,1,2; right 3,4,5; greedy 0-3 must be rerouted
        let g = Graph::build(6, &[(0, 3), (0, 4), (1, 3), (2, 4), (2, 5)]).unwrap();
        let m = bipartite_max_matching(&g, &set(&[0, 1, 2]), &set(&[3, 4, 5]));
        assert_eq!(m.len(), 3);
        m.validate(&g).unwrap();
    }

    #[test]
    fn konig_cover_matches_matching_size() {
        let k12 = Graph::build(3, &[(0, 1), (0, 2)]).unwrap();
        let (a, b) = k12.bipartition().unwrap();
        let m = bipartite_max_matching(&k12, &a, &b);
        assert_eq!(m.len(), 1);
        let cover = konig_cover(&k12, &a, &b, &m);
        assert_eq!(cover, set(&[0]));
        assert!(is_vertex_cover_between(&k12, &a, &b, &cover));
    }

    #[test]
    fn validation_catches_defects() {
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(Matching::from_pairs([(0, 2)]).validate(&p3), Err(MatchingDefect::NotAnEdge(0, 2)));
        assert_eq!(Matching::from_pairs([(0, 1), (1, 2)]).validate(&p3), Err(MatchingDefect::SharedVertex(1)));
    }
}
