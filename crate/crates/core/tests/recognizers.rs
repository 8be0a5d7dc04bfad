use excellence::families::{
    attach_k2, caterpillar_wheel, cartesian_product, complete, corona, cycle, double_star, generalized_petersen, path,
    random_family, star, subdivision, CaterpillarWheelSpec, CoronaSpec, RandomKind,
};
use excellence::oracle::exhaustive;
use excellence::recognize::*;
use excellence::{Graph, Oracle, VertexSet};

fn truth(g: &Graph) -> bool {
    exhaustive::enumerate(g).unwrap().excellent()
}

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

fn checked(g: &Graph, v: Verdict) -> Verdict {
    assert_eq!(verify_certificate(g, &v), Ok(()), "{v:?}");
    assert_eq!(v.excellent, truth(g), "{v:?}");
    v
}

fn triangle_with_pendant_path(len: usize) -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 0)];
    for i in 0..len {
        edges.push((if i == 0 { 2 } else { 2 + i }, 3 + i));
    }
    Graph::build(3 + len, &edges).unwrap()
}

fn bridged_triangles() -> Graph {
    Graph::build(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap()
}

#[test]
fn quick_reject_examples() {
    assert!(quick_reject(&star(2)).is_some());
    assert!(matches!(quick_reject(&double_star(2, 2)), Some(RejectReason::StrongSupport { .. })));
    assert_eq!(quick_reject(&cycle(5).unwrap()), None);
}

#[test]
fn bipartite_examples() {
    let c6 = cycle(6).unwrap();
    let v = checked(&c6, bipartite_excellent(&c6, &c6.bipartition().unwrap()).unwrap());
    assert!(v.excellent);
    match &v.certificate {
        Certificate::Matching(m) => assert_eq!(m.matching.len(), 3),
        other => panic!("{other:?}"),
    }
    let k12 = star(2);
    assert!(!checked(&k12, bipartite_excellent(&k12, &k12.bipartition().unwrap()).unwrap()).excellent);
    let product = cartesian_product(&double_star(2, 2), &star(2));
    let v = checked(&product, bipartite_excellent(&product, &product.bipartition().unwrap()).unwrap());
    assert!(v.excellent);
    assert!(!truth(&double_star(2, 2)) && !truth(&star(2)));
}

#[test]
fn tree_examples() {
    for (g, expected) in [(path(2), true), (path(4), true), (double_star(2, 2), false)] {
        assert_eq!(checked(&g, tree_excellent(&g).unwrap()).excellent, expected);
    }
    assert_eq!(forced_leaf_matching(&path(4)).edges, vec![(0, 1), (2, 3)]);
    assert!(matches!(tree_excellent(&cycle(4).unwrap()), Err(RecognizeError::NotTree)));
}

#[test]
fn pluck_examples() {
    let t = pluck(&path(4));
    assert_eq!(t.steps.len(), 1);
    assert_eq!((t.residual.order(), t.residual.size()), (2, 1));
    let t = pluck(&cycle(7).unwrap());
    assert!(t.steps.is_empty());
    assert_eq!(t.residual.order(), 7);
    let t = pluck(&triangle_with_pendant_path(2));
    assert_eq!(t.kept, vec![0, 1, 2]);
    assert_eq!(t.residual.size(), 3);
}

#[test]
fn caterpillar_wheel_examples() {
    let wheel = |n, legs: &[usize]| caterpillar_wheel(&CaterpillarWheelSpec::new(n, legs.iter().copied()).unwrap());
    let c7 = cycle(7).unwrap();
    assert!(checked(&c7, caterpillar_wheel_excellent(&c7).unwrap()).excellent);
    let g = wheel(4, &[0, 1]);
    let v = checked(&g, caterpillar_wheel_excellent(&g).unwrap());
    assert!(v.excellent);
    assert_eq!(v.alpha, Some(3));
    match &v.certificate {
        Certificate::CaterpillarWheel(w) => {
            let mut gaps = w.gaps.clone();
            gaps.sort();
            assert_eq!(gaps, vec![1, 3]);
        }
        other => panic!("{other:?}"),
    }
    let g = wheel(4, &[0, 2]);
    assert!(!checked(&g, caterpillar_wheel_excellent(&g).unwrap()).excellent);
    let g = wheel(3, &[0]);
    assert!(!checked(&g, caterpillar_wheel_excellent(&g).unwrap()).excellent);
}

#[test]
fn unicyclic_examples() {
    let c3k1 = corona(&CoronaSpec::uniform(complete(3), &Graph::empty(1)).unwrap());
    assert!(checked(&c3k1, unicyclic_excellent(&c3k1).unwrap()).excellent);
    for seed in 0..20 {
        let g = random_family(RandomKind::Unicyclic, 3 + seed as usize % 8, seed).unwrap();
        let s = subdivision(&g);
        assert!(checked(&s, unicyclic_excellent(&s).unwrap()).excellent);
    }
    let g = triangle_with_pendant_path(1);
    let v = checked(&g, unicyclic_excellent(&g).unwrap());
    assert!(!v.excellent);
    let p6c3 = attach_k2(&cycle(3).unwrap(), 0).unwrap();
    let v = checked(&p6c3, unicyclic_excellent(&p6c3).unwrap());
    assert_eq!(v.method, Method::Unicyclic);
}

#[test]
fn simplicial_examples() {
    let k3k1 = corona(&CoronaSpec::uniform(complete(3), &Graph::empty(1)).unwrap());
    let v = checked(&k3k1, simplicial_excellent(&k3k1).unwrap());
    assert!(v.excellent);
    match &v.certificate {
        Certificate::SimplexPartition(s) => assert_eq!(s.simplexes.len(), 3),
        other => panic!("{other:?}"),
    }
    assert!(!checked(&star(2), simplicial_excellent(&star(2)).unwrap()).excellent);
    assert!(checked(&complete(4), simplicial_excellent(&complete(4)).unwrap()).excellent);
    assert!(matches!(simplicial_excellent(&cycle(5).unwrap()), Err(RecognizeError::NotSimplicial)));
}

#[test]
fn successive_clique_cover_examples() {
    assert_eq!(build_scc(&path(4)).parts, vec![set(&[0, 1]), set(&[2, 3])]);
    let k12 = star(2);
    let center = k12.vertices().find(|&v| k12.degree(v) == 2).unwrap();
    let b = build_scc(&k12);
    assert_eq!(b.parts.len(), 2);
    assert!(b.parts[0].contains(&center) && b.parts[0].len() == 2);
    assert_eq!(build_scc(&complete(5)).parts, vec![set(&[0, 1, 2, 3, 4])]);
    assert!(!build_scc(&complete(5)).leftover);

    assert!(verify_scc(&path(4), &[set(&[0, 1]), set(&[2, 3])]).unwrap());
    assert!(!verify_scc(&k12, &b.parts).unwrap());
    assert!(verify_scc(&complete(5), &[set(&[0, 1, 2, 3, 4])]).unwrap());
}

#[test]
fn chordal_examples() {
    let p6 = path(6);
    let v = checked(&p6, chordal_excellent(&p6).unwrap());
    assert_eq!(v.alpha, Some(3));
    match &v.certificate {
        Certificate::SuccessiveCliqueCover(c) => assert_eq!(c.parts.len(), 3),
        other => panic!("{other:?}"),
    }
    assert!(!checked(&star(2), chordal_excellent(&star(2)).unwrap()).excellent);
    let g = bridged_triangles();
    let v = checked(&g, chordal_excellent(&g).unwrap());
    assert!(v.excellent);
    assert_eq!(v.alpha, Some(2));
    match &v.certificate {
        Certificate::SuccessiveCliqueCover(c) => {
            let mut parts = c.parts.clone();
            parts.sort();
            assert_eq!(parts, vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(chordal_excellent(&cycle(4).unwrap()), Err(RecognizeError::NotChordal)));
}

#[test]
fn block_examples() {
    for n in 2..6 {
        let v = checked(&complete(n), block_excellent(&complete(n)).unwrap());
        match &v.certificate {
            Certificate::BlockCover(b) => assert_eq!(b.cover, Some(vec![complete(n).vertices().collect()])),
            other => panic!("{other:?}"),
        }
    }
    let v = checked(&path(4), block_excellent(&path(4)).unwrap());
    match &v.certificate {
        Certificate::BlockCover(b) => {
            let mut cover = b.cover.clone().unwrap();
            cover.sort();
            assert_eq!(cover, vec![set(&[0, 1]), set(&[2, 3])]);
        }
        other => panic!("{other:?}"),
    }
    assert!(!checked(&star(2), block_excellent(&star(2)).unwrap()).excellent);
    assert!(matches!(block_excellent(&cycle(4).unwrap()), Err(RecognizeError::NotBlockGraph)));
}

#[test]
fn perfect_block_covers_are_unique() {
    for seed in 0..60 {
        let g = random_family(RandomKind::Block, 2 + seed as usize % 9, seed).unwrap();
        let covers = enumerate_perfect_block_covers(&g);
        assert!(covers.len() <= 1);
        assert_eq!(covers.len() == 1, truth(&g));
        assert_eq!(find_perfect_block_covers(&g, 2).len(), covers.len());
    }
}

#[test]
fn corona_examples() {
    for seed in 0..10 {
        let base = random_family(RandomKind::Chordal, 2 + seed as usize % 6, seed).unwrap();
        let spec = CoronaSpec::uniform(base, &Graph::empty(1)).unwrap();
        let g = corona(&spec);
        assert!(checked(&g, corona_excellent(&spec)).excellent);
    }
    let spec = CoronaSpec::uniform(path(3), &Graph::empty(2)).unwrap();
    let g = corona(&spec);
    let v = checked(&g, corona_excellent(&spec));
    assert!(matches!(v.certificate, Certificate::Swap { .. }));
    let spec = CoronaSpec::uniform(cycle(4).unwrap(), &complete(3)).unwrap();
    let g = corona(&spec);
    let v = checked(&g, corona_excellent(&spec));
    assert!(v.excellent);
    assert_eq!(v.alpha, Some(4));
}

#[test]
fn petersen_examples() {
    let o = Oracle::default();
    let v = petersen_excellent(5, 2, &o).unwrap();
    let g = generalized_petersen(5, 2).unwrap();
    assert_eq!(checked(&g, v).alpha, Some(4));
    let g = generalized_petersen(3, 1).unwrap();
    checked(&g, petersen_excellent(3, 1, &o).unwrap());
    assert!(o.is_well_covered(&g).unwrap());
    let g = generalized_petersen(8, 3).unwrap();
    assert!(checked(&g, petersen_excellent(8, 3, &o).unwrap()).excellent);
    assert!(petersen_excellent(4, 3, &o).is_err());
}

#[test]
fn dispatch_examples() {
    let o = Oracle::default();
    let g = path(6).disjoint_union(&cycle(5).unwrap());
    let v = checked(&g, recognize(&g, &o).unwrap());
    assert!(v.excellent);
    assert_eq!(v.method, Method::Components);
    let g = star(2).disjoint_union(&path(2));
    assert!(!checked(&g, recognize(&g, &o).unwrap()).excellent);
    let g = generalized_petersen(5, 2).unwrap();
    let v = checked(&g, recognize(&g, &o).unwrap());
    assert_eq!(v.method, Method::OracleFallback);
    assert!(v.fallback_used && v.excellent);
    assert_eq!(recognize(&path(6), &o).unwrap().method, Method::Tree);
    assert_eq!(recognize(&Graph::empty(1), &o).unwrap().method, Method::BaseCase);
}

#[test]
fn oracle_fallback_respects_the_budget() {
    let g = generalized_petersen(7, 2).unwrap();
    assert!(recognize(&g, &Oracle::with_budget(1)).is_err());
}
