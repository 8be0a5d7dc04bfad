//! Re-checks a verdict's certificate against the graph.

use thiserror::Error;

use crate::families::generalized_petersen;
use crate::graph::{Graph, VertexSet};

use super::families::rotate;
use super::{
    build_scc, caterpillar_wheel_structure, check_scc, find_perfect_block_covers, leg_gaps, Certificate, Method,
    RejectReason, SccCheck, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid certificate: {0}")]
pub struct CertificateError(pub String);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(CertificateError(format!($($fmt)+)));
        }
    };
}

fn vertex_ok(g: &Graph, v: usize) -> Result<(), CertificateError> {
    ensure!(v < g.order(), "vertex {v} out of range");
    Ok(())
}

fn set_ok(g: &Graph, s: &VertexSet) -> Result<(), CertificateError> {
    s.iter().try_for_each(|&v| vertex_ok(g, v))
}

fn is_partition(g: &Graph, parts: &[VertexSet]) -> bool {
    let total: usize = parts.iter().map(VertexSet::len).sum();
    let union: VertexSet = parts.iter().flatten().copied().collect();
    total == g.order() && union.len() == g.order() && union.iter().all(|&v| v < g.order())
}

/// Checks that `verdict.certificate` supports `verdict.excellent` on `g`.
pub fn verify_certificate(g: &Graph, verdict: &Verdict) -> Result<(), CertificateError> {
    let excellent = verdict.excellent;
    match &verdict.certificate {
        Certificate::BaseCase => {
            ensure!(g.order() <= 2 && g.is_connected(), "base case needs K_1 or K_2");
            ensure!(excellent, "K_1 and K_2 are excellent");
        }
        Certificate::Rejected(reason) => {
            ensure!(!excellent, "a rejection cannot support excellence");
            check_rejection(g, reason)?;
        }
        Certificate::Matching(cert) => {
            ensure!(g.is_connected() && g.is_bipartite(), "matching certificates need a connected bipartite graph");
            if verdict.method == Method::Tree {
                ensure!(g.size() + 1 == g.order(), "graph is not a tree");
            }
            let m = &cert.matching;
            m.validate(g).map_err(|e| CertificateError(e.to_string()))?;
            ensure!(excellent == m.is_perfect_for(g), "verdict disagrees with matching perfection");
            if !excellent {
                let cover = cert.cover.as_ref().ok_or_else(|| CertificateError("missing vertex cover".into()))?;
                set_ok(g, cover)?;
                ensure!(cover.len() == m.len(), "cover and matching sizes differ");
                ensure!(
                    g.edges().all(|(u, v)| cover.contains(&u) || cover.contains(&v)),
                    "cover misses an edge"
                );
            }
            if let Some(a) = verdict.alpha {
                ensure!(a == g.order() - m.len(), "alpha disagrees with the matching number");
            }
        }
        Certificate::CaterpillarWheel(w) => {
            let (cycle, legs) = caterpillar_wheel_structure(g)
                .ok_or_else(|| CertificateError("graph is not a caterpillar-wheel".into()))?;
            ensure!(cycle == w.cycle && legs == w.legs, "cycle or legs do not match the graph");
            let gaps = leg_gaps(&cycle, &legs);
            ensure!(gaps == w.gaps, "leg gaps do not match");
            if excellent {
                if !legs.is_empty() {
                    ensure!(legs.len() >= 2, "one leg is never excellent");
                    let m = w.matching.as_ref().ok_or_else(|| CertificateError("missing perfect matching".into()))?;
                    m.validate(g).map_err(|e| CertificateError(e.to_string()))?;
                    ensure!(m.is_perfect_for(g), "matching is not perfect");
                }
            } else {
                ensure!(
                    legs.len() == 1 || gaps.iter().any(|d| d % 2 == 0),
                    "with two or more legs and odd gaps the wheel is excellent"
                );
            }
        }
        Certificate::Pluck { trace, residual } => {
            ensure!(g.is_connected() && g.size() == g.order() && g.order() >= 3, "graph is not unicyclic");
            let mut alive = vec![true; g.order()];
            let live_nbrs = |v: usize, alive: &[bool]| -> Vec<usize> {
                g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect()
            };
            let pluckable = |v: usize, alive: &[bool]| -> Option<usize> {
                let nbrs = live_nbrs(v, alive);
                let leaves: Vec<usize> = nbrs.iter().copied().filter(|&w| live_nbrs(w, alive).len() == 1).collect();
                (alive[v] && nbrs.len() == 2 && leaves.len() == 1).then(|| leaves[0])
            };
            let mut remaining = g.order();
            for &(v, leaf) in &trace.steps {
                vertex_ok(g, v)?;
                vertex_ok(g, leaf)?;
                ensure!(remaining >= 4, "plucked below four vertices");
                ensure!(pluckable(v, &alive) == Some(leaf), "step ({v}, {leaf}) is not a valid pluck");
                alive[v] = false;
                alive[leaf] = false;
                remaining -= 2;
            }
            let kept: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
            ensure!(kept == trace.kept, "kept vertices do not match the replay");
            ensure!(
                remaining < 4 || g.vertices().all(|v| pluckable(v, &alive).is_none()),
                "the residual graph can still be plucked"
            );
            let expected = g.induced(&kept);
            ensure!(expected.edges().eq(trace.residual.edges()), "residual graph does not match");
            match residual {
                Some(r) => {
                    ensure!(r.method == Method::CaterpillarWheel, "residual verdict must use the wheel test");
                    ensure!(r.excellent == excellent, "verdict disagrees with the residual verdict");
                    verify_certificate(&trace.residual, r)?;
                }
                None => {
                    ensure!(!excellent, "a residual that is not a caterpillar-wheel is never excellent");
                    ensure!(caterpillar_wheel_structure(&trace.residual).is_none(), "residual is a caterpillar-wheel");
                }
            }
        }
        Certificate::SimplexPartition(cert) => {
            ensure!(g.is_simplicial_graph(), "graph is not simplicial");
            let actual = g.simplexes().simplexes;
            ensure!(actual == cert.simplexes, "simplexes do not match the graph");
            if excellent {
                ensure!(is_partition(g, &actual), "simplexes do not partition the vertices");
            } else {
                let (v, i, j) = cert.overlap.ok_or_else(|| CertificateError("missing overlap".into()))?;
                ensure!(i != j && i.max(j) < actual.len(), "bad simplex indices");
                ensure!(actual[i].contains(&v) && actual[j].contains(&v), "vertex {v} is not in both simplexes");
            }
        }
        Certificate::SuccessiveCliqueCover(cert) => {
            let check = check_scc(g, &cert.parts).map_err(|e| CertificateError(e.to_string()))?;
            ensure!(check == cert.check, "recorded check does not match");
            if excellent {
                ensure!(check == SccCheck::Valid, "cover is not a successive clique cover");
                if let Some(a) = verdict.alpha {
                    ensure!(a == cert.parts.len(), "alpha differs from the number of parts");
                }
            } else {
                ensure!(g.is_chordal(), "a failed greedy cover only refutes chordal graphs");
                ensure!(build_scc(g).parts == cert.parts, "parts are not the greedy cover");
                ensure!(check != SccCheck::Valid, "a valid cover proves excellence");
            }
        }
        Certificate::BlockCover(cert) => {
            ensure!(g.is_connected() && g.is_block_graph(), "graph is not a connected block graph");
            match &cert.cover {
                Some(cover) => {
                    ensure!(excellent, "a perfect block cover proves excellence");
                    let blocks = g.blocks().blocks;
                    ensure!(cover.iter().all(|b| blocks.contains(b)), "cover uses a non-block");
                    ensure!(is_partition(g, cover), "blocks do not partition the vertices");
                }
                None => {
                    ensure!(!excellent, "excellence needs a cover");
                    ensure!(find_perfect_block_covers(g, 1).is_empty(), "a perfect block cover exists");
                }
            }
        }
        Certificate::CliquePartition(cert) => {
            ensure!(excellent, "a clique partition with transversals proves excellence");
            ensure!(is_partition(g, &cert.cliques), "cliques do not partition the vertices");
            ensure!(cert.cliques.iter().all(|c| g.is_clique(c)), "a part is not a clique");
            ensure!(cert.witnesses.len() == g.order(), "one witness per vertex is needed");
            for (v, w) in cert.witnesses.iter().enumerate() {
                set_ok(g, w)?;
                ensure!(w.contains(&v) && g.is_independent(w), "witness of {v} is not an independent set holding it");
                ensure!(w.len() == cert.cliques.len(), "witness of {v} is too small");
            }
            if let Some(a) = verdict.alpha {
                ensure!(a == cert.cliques.len(), "alpha differs from the number of cliques");
            }
        }
        Certificate::Swap { vertex, pair: (x, y) } => {
            ensure!(!excellent, "a swap refutes excellence");
            for v in [*vertex, *x, *y] {
                vertex_ok(g, v)?;
            }
            ensure!(x != y && g.has_edge(*vertex, *x) && g.has_edge(*vertex, *y), "pair is not in N({vertex})");
            ensure!(!g.has_edge(*x, *y), "pair is adjacent");
            let closed = g.closed_neighborhood(*vertex).expect("checked");
            ensure!(
                g.neighbors(*x).iter().chain(g.neighbors(*y)).all(|w| closed.contains(w)),
                "pair has neighbors outside N[{vertex}]"
            );
        }
        Certificate::Rotation(cert) => {
            ensure!(excellent, "rotation certificates prove excellence");
            let p = generalized_petersen(cert.n, cert.k).map_err(|e| CertificateError(e.to_string()))?;
            ensure!(p.order() == g.order() && p.edges().eq(g.edges()), "graph is not P({}, {})", cert.n, cert.k);
            let mut covered = VertexSet::new();
            for (generator, shifts) in &cert.orbits {
                set_ok(g, generator)?;
                ensure!(generator.len() == cert.alpha, "generator has the wrong size");
                for l in 0..*shifts {
                    let image = rotate(generator, l, cert.n);
                    ensure!(g.is_independent(&image), "rotation by {l} is not independent");
                    covered.extend(image);
                }
            }
            ensure!(covered.len() == g.order(), "rotations leave a vertex uncovered");
        }
        Certificate::Oracle(cert) => {
            set_ok(g, &cert.alpha_set)?;
            ensure!(cert.alpha_set.len() == cert.alpha && g.is_independent(&cert.alpha_set), "bad maximum set");
            ensure!(cert.per_vertex_max.len() == g.order() && cert.witness.len() == g.order(), "wrong lengths");
            for (v, w) in cert.witness.iter().enumerate() {
                if let Some(w) = w {
                    set_ok(g, w)?;
                    ensure!(w.contains(&v) && g.is_independent(w), "witness of {v} is not an independent set holding it");
                    ensure!(w.len() == cert.per_vertex_max[v], "witness of {v} has the wrong size");
                }
            }
            let all_max = cert.per_vertex_max.iter().all(|&m| m == cert.alpha);
            ensure!(excellent == all_max, "verdict disagrees with the per-vertex maxima");
            if excellent {
                ensure!(cert.witness.iter().all(Option::is_some), "missing witness");
            }
        }
        Certificate::Components(parts) => {
            let components = g.components();
            ensure!(components.len() == parts.len(), "component count differs");
            for (vertices, part) in components.iter().zip(parts) {
                ensure!(*vertices == part.vertices, "component vertices differ");
                verify_certificate(&g.induced(vertices), &part.verdict)?;
            }
            ensure!(excellent == parts.iter().all(|p| p.verdict.excellent), "verdict disagrees with components");
        }
    }
    Ok(())
}

fn check_rejection(g: &Graph, reason: &RejectReason) -> Result<(), CertificateError> {
    match *reason {
        RejectReason::StrongSupport { vertex, leaves: (a, b) } => {
            for v in [vertex, a, b] {
                vertex_ok(g, v)?;
            }
            ensure!(a != b, "leaves must differ");
            ensure!(
                [a, b].iter().all(|&l| g.degree(l) == 1 && g.has_edge(vertex, l)),
                "{vertex} is not adjacent to two leaves"
            );
        }
        RejectReason::OverlappingSimplexes { vertex, first, second } => {
            for v in [vertex, first, second] {
                vertex_ok(g, v)?;
            }
            ensure!(g.is_simplicial_vertex(first) && g.is_simplicial_vertex(second), "not simplicial");
            let a = g.closed_neighborhood(first).expect("checked");
            let b = g.closed_neighborhood(second).expect("checked");
            ensure!(a != b, "the simplexes coincide");
            ensure!(a.contains(&vertex) && b.contains(&vertex), "{vertex} is not in both simplexes");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, generalized_petersen, path, star};
    use crate::oracle::Oracle;
    use crate::recognize::{petersen_excellent, recognize};

    #[test]
    fn genuine_certificates_verify() {
        let o = Oracle::default();
        for g in [path(5), path(6), star(3), cycle(7).unwrap(), generalized_petersen(6, 2).unwrap()] {
            let v = recognize(&g, &o).unwrap();
            verify_certificate(&g, &v).unwrap();
        }
        let v = petersen_excellent(5, 2, &o).unwrap();
        verify_certificate(&generalized_petersen(5, 2).unwrap(), &v).unwrap();
    }

    #[test]
    fn flipped_verdicts_fail() {
        let o = Oracle::default();
        for g in [path(5), path(6), star(3), cycle(7).unwrap()] {
            let mut v = recognize(&g, &o).unwrap();
            v.excellent = !v.excellent;
            assert!(verify_certificate(&g, &v).is_err());
        }
    }
}
