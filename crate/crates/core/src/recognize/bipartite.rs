//! Bipartite graphs and trees: excellent exactly when a perfect matching exists.

use crate::graph::{Graph, VertexSet};
use crate::matching::{bipartite_max_matching, konig_cover, Matching};

use super::{Certificate, MatchingCertificate, Method, RecognizeError, Verdict};

/// Connected bipartite `g` of order at least 2 with the given bipartition.
pub fn bipartite_excellent(g: &Graph, bipartition: &(VertexSet, VertexSet)) -> Result<Verdict, RecognizeError> {
    check_connected(g)?;
    let (left, right) = bipartition;
    let valid = left.is_disjoint(right)
        && left.len() + right.len() == g.order()
        && left.iter().chain(right).all(|&v| v < g.order())
        && g.edges().all(|(u, v)| left.contains(&u) != left.contains(&v));
    if !valid {
        return Err(RecognizeError::NotBipartite);
    }
    let matching = bipartite_max_matching(g, left, right);
    let cover = konig_cover(g, left, right, &matching);
    Ok(matching_verdict(g, Method::Bipartite, matching, cover))
}

/// Trees of order at least 2, via the forced leaf matching.
pub fn tree_excellent(g: &Graph) -> Result<Verdict, RecognizeError> {
    check_connected(g)?;
    if g.size() + 1 != g.order() {
        return Err(RecognizeError::NotTree);
    }
    let matching = forced_leaf_matching(g);
    let (left, right) = g.bipartition().expect("trees are bipartite");
    let cover = konig_cover(g, &left, &right, &matching);
    Ok(matching_verdict(g, Method::Tree, matching, cover))
}

fn check_connected(g: &Graph) -> Result<(), RecognizeError> {
    if g.order() < 2 {
        return Err(RecognizeError::TooSmall { min: 2 });
    }
    if !g.is_connected() {
        return Err(RecognizeError::NotConnected);
    }
    Ok(())
}

fn matching_verdict(g: &Graph, method: Method, matching: Matching, cover: VertexSet) -> Verdict {
    let perfect = matching.is_perfect_for(g);
    let alpha = g.order() - matching.len();
    let certificate = MatchingCertificate { matching, cover: (!perfect).then_some(cover) };
    Verdict::new(perfect, method, Certificate::Matching(certificate), Some(alpha))
}

/// Maximum matching of a graph whose components have at most one cycle:
/// repeatedly match a leaf to its neighbor, then match the remaining cycles
/// alternately.
pub fn forced_leaf_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut pairs = Vec::new();
    let mut leaves: Vec<usize> = g.vertices().filter(|&v| degree[v] <= 1).rev().collect();
    let remove = |v: usize, alive: &mut Vec<bool>, degree: &mut Vec<usize>, leaves: &mut Vec<usize>| {
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] <= 1 {
                    leaves.push(w);
                }
            }
        }
    };
    while let Some(leaf) = leaves.pop() {
        if !alive[leaf] {
            continue;
        }
        // degree 0 vertices stay unmatched
        match g.neighbors(leaf).iter().copied().find(|&w| alive[w]) {
            Some(partner) => {
                pairs.push((leaf, partner));
                remove(leaf, &mut alive, &mut degree, &mut leaves);
                remove(partner, &mut alive, &mut degree, &mut leaves);
            }
            None => alive[leaf] = false,
        }
    }
    // what is left is a disjoint union of cycles
    for start in g.vertices() {
        if !alive[start] {
            continue;
        }
        let mut cycle = vec![start];
        alive[start] = false;
        let mut cur = start;
        while let Some(next) = g.neighbors(cur).iter().copied().find(|&w| alive[w]) {
            alive[next] = false;
            cycle.push(next);
            cur = next;
        }
        pairs.extend(cycle.chunks_exact(2).map(|p| (p[0], p[1])));
    }
    Matching::from_pairs(pairs)
}
