//! Recognizers that take a family description instead of a bare graph.

use crate::families::{generalized_petersen, CoronaSpec};
use crate::graph::VertexSet;
use crate::oracle::Oracle;

use super::{Certificate, CliquePartition, Method, RecognizeError, RotationCertificate, Verdict};

/// Coronas: excellent exactly when every attachment is complete. Vertex ids
/// refer to [`crate::families::corona`] of `spec`.
pub fn corona_excellent(spec: &CoronaSpec) -> Verdict {
    let base = spec.base().order();
    let mut offset = base;
    let mut cliques = Vec::with_capacity(base);
    for (v, h) in spec.attachments().iter().enumerate() {
        let pair = h.vertices().find_map(|a| (a + 1..h.order()).find(|&b| !h.has_edge(a, b)).map(|b| (a, b)));
        if let Some((a, b)) = pair {
            let certificate = Certificate::Swap { vertex: v, pair: (a + offset, b + offset) };
            return Verdict::new(false, Method::Corona, certificate, None);
        }
        cliques.push(std::iter::once(v).chain(offset..offset + h.order()).collect::<VertexSet>());
        offset += h.order();
    }
    // one attachment vertex per clique, swapped for the vertex of interest
    let representatives: Vec<usize> = cliques.iter().map(|c| *c.iter().nth(1).expect("attachments are non-empty")).collect();
    let mut witnesses = vec![VertexSet::new(); offset];
    for (i, clique) in cliques.iter().enumerate() {
        for &x in clique {
            let mut w: VertexSet = representatives.iter().copied().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r).collect();
            w.insert(x);
            witnesses[x] = w;
        }
    }
    let certificate = Certificate::CliquePartition(CliquePartition { cliques, witnesses });
    Verdict::new(true, Method::Corona, certificate, Some(base))
}

/// `P_{n,k}` with rotation certificate: one maximum independent set and its
/// rotations, plus further generators if those leave a vertex uncovered.
pub fn petersen_excellent(n: usize, k: usize, oracle: &Oracle) -> Result<Verdict, RecognizeError> {
    let g = generalized_petersen(n, k)?;
    let first = oracle.max_independent_set(&g)?;
    let alpha = first.size;
    let mut covered = vec![false; 2 * n];
    let mark = |set: &VertexSet, shifts: usize, covered: &mut Vec<bool>| {
        for l in 0..shifts {
            for x in rotate(set, l, n) {
                covered[x] = true;
            }
        }
    };
    mark(&first.set, k, &mut covered);
    let first_k_shifts_cover = covered.iter().all(|&c| c);
    let mut orbits = Vec::new();
    if first_k_shifts_cover {
        orbits.push((first.set, k));
    } else {
        mark(&first.set, n, &mut covered);
        orbits.push((first.set, n));
        while let Some(w) = covered.iter().position(|&c| !c) {
            let extra = oracle.max_independent_including(&g, w)?;
            if extra.size != alpha {
                return Err(RecognizeError::RotationFailed(format!(
                    "vertex {} lies in no independent set of size {alpha}",
                    g.label(w)
                )));
            }
            mark(&extra.set, n, &mut covered);
            orbits.push((extra.set, n));
        }
    }
    let certificate = RotationCertificate { n, k, alpha, orbits, first_k_shifts_cover };
    Ok(Verdict::new(true, Method::Petersen, Certificate::Rotation(certificate), Some(alpha)))
}

/// Image of `set` under `v_i -> v_{i+l}`, `u_i -> u_{i+l}`.
pub(super) fn rotate(set: &VertexSet, l: usize, n: usize) -> VertexSet {
    set.iter().map(|&x| if x < n { (x + l) % n } else { n + (x - n + l) % n }).collect()
}
