//! Case bodies of the verification suites.

use rand::Rng;

use crate::families::{
    attach_k2, c_n_tree, cartesian_product, complete, corona, double_star, general_corona, generalized_petersen,
    random_connected_gnp, random_family, random_gnp, star, subdivision, CoronaSpec, RandomKind,
};
use crate::graph::Graph;
use crate::iso::are_isomorphic;
use crate::matching::bipartite_max_matching;
use crate::oracle::exhaustive;
use crate::oracle::OracleError;
use crate::recognize::{
    bipartite_excellent, block_excellent, caterpillar_wheel_excellent, chordal_excellent, corona_excellent,
    enumerate_perfect_block_covers, find_perfect_block_covers, petersen_excellent, pluck, pluck_with, recognize,
    simplicial_excellent, tree_excellent, unicyclic_excellent, verify_certificate, Certificate, RecognizeError,
    Verdict,
};

use super::{Case, Fail, Suite};

pub(crate) const SUITES: &[Suite] = &[
    Suite {
        id: 1,
        name: "well-covered generalized Petersen graphs",
        required: PETERSEN_PAIRS,
        default_cases: PETERSEN_PAIRS,
        fixed: true,
        run: petersen_well_covered,
    },
    Suite {
        id: 2,
        name: "generalized Petersen excellence",
        required: PETERSEN_PAIRS,
        default_cases: PETERSEN_PAIRS,
        fixed: true,
        run: petersen_excellence,
    },
    Suite { id: 3, name: "bipartite equivalence", required: 500, default_cases: 500, fixed: false, run: bipartite },
    Suite { id: 4, name: "trees", required: 500, default_cases: 500, fixed: false, run: trees },
    Suite { id: 5, name: "unicyclic graphs", required: 500, default_cases: 500, fixed: false, run: unicyclic },
    Suite { id: 6, name: "chordal graphs", required: 500, default_cases: 500, fixed: false, run: chordal },
    Suite { id: 7, name: "block graphs", required: 500, default_cases: 500, fixed: false, run: block },
    Suite { id: 8, name: "simplicial graphs", required: 100, default_cases: 500, fixed: false, run: simplicial },
    Suite { id: 9, name: "corona law", required: 200, default_cases: 200, fixed: false, run: corona_law },
    Suite { id: 12, name: "spot checks", required: 151, default_cases: 151, fixed: false, run: spot_checks },
    Suite { id: 13, name: "pendant K2 law", required: 200, default_cases: 200, fixed: false, run: pendant_k2 },
    Suite {
        id: 14,
        name: "oracle self-consistency",
        required: 1000,
        default_cases: 1000,
        fixed: false,
        run: oracle_consistency,
    },
];

/// Number of pairs `(n, k)` with `3 <= n <= 12`, `1 <= k <= n / 2`.
const PETERSEN_PAIRS: usize = 35;

const WELL_COVERED_PETERSEN: [(usize, usize); 5] = [(3, 1), (4, 2), (5, 1), (6, 2), (7, 2)];

fn petersen_pair(case: usize) -> (usize, usize) {
    (3..=12).flat_map(|n| (1..=n / 2).map(move |k| (n, k))).nth(case).expect("case within the enumeration")
}

fn disagree(what: impl std::fmt::Display) -> Fail {
    Fail::Disagree(what.to_string())
}

fn from_recognizer(e: RecognizeError) -> Fail {
    match e {
        RecognizeError::Oracle(OracleError::BudgetExhausted { .. }) => Fail::Budget,
        other => disagree(format!("recognizer error: {other}")),
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), Fail> {
    if cond {
        Ok(())
    } else {
        Err(disagree(what()))
    }
}

fn family(kind: RandomKind, n: usize, case: &mut Case<'_>) -> Graph {
    random_family(kind, n, case.seed()).expect("order within family range")
}

/// Compares a recognizer verdict (after bug injection) with the oracle and
/// checks its certificate and any reported α.
fn check_verdict(case: &Case<'_>, g: &Graph, name: &str, verdict: &Verdict, excellent: bool, alpha: usize) -> Result<(), Fail> {
    let said = case.recognizer(g, verdict.excellent);
    ensure(said == excellent, || format!("{name} says excellent = {said}, oracle says {excellent}"))?;
    if let Some(a) = verdict.alpha {
        ensure(a == alpha, || format!("{name} reports alpha = {a}, oracle says {alpha}"))?;
    }
    verify_certificate(g, verdict).map_err(|e| Fail::Certificate(format!("{name}: {e}")))
}

/// The dispatcher must agree with the oracle too.
fn check_dispatch(case: &Case<'_>, g: &Graph, excellent: bool, alpha: usize) -> Result<(), Fail> {
    let verdict = recognize(g, &case.ctx.oracle)?;
    check_verdict(case, g, "recognize", &verdict, excellent, alpha)
}

fn petersen_well_covered(case: &mut Case<'_>, i: usize) -> Result<(), Fail> {
    let (n, k) = petersen_pair(i);
    let g = generalized_petersen(n, k).expect("valid parameters");
    case.subject(&g);
    let report = case.analyze(&g)?;
    // the listed graphs are representatives up to isomorphism
    let expected = WELL_COVERED_PETERSEN
        .iter()
        .any(|&(a, b)| a == n && are_isomorphic(&g, &generalized_petersen(a, b).expect("valid parameters")));
    ensure(report.well_covered == expected, || {
        format!("P({n},{k}): i = {}, alpha = {}, expected well-covered = {expected}", report.ind_dom, report.alpha)
    })
}

fn petersen_excellence(case: &mut Case<'_>, i: usize) -> Result<(), Fail> {
    let (n, k) = petersen_pair(i);
    let g = generalized_petersen(n, k).expect("valid parameters");
    case.subject(&g);
    let report = case.analyze(&g)?;
    ensure(report.excellent, || format!("P({n},{k}) is not excellent: alpha_c = {}", report.alpha_c))?;
    let verdict = petersen_excellent(n, k, &case.ctx.oracle).map_err(from_recognizer)?;
    check_verdict(case, &g, "petersen", &verdict, report.excellent, report.alpha)?;
    check_dispatch(case, &g, report.excellent, report.alpha)
}

fn bipartite(case: &mut Case<'_>, _: usize) -> Result<(), Fail> {
    let n = case.rng.gen_range(2..=14);
    let g = family(RandomKind::Bipartite, n, case);
    case.subject(&g);
    let (left, right) = g.bipartition().expect("bipartite family");
    let perfect = bipartite_max_matching(&g, &left, &right).is_perfect_for(&g);
    let report = case.analyze(&g)?;
    let half = 2 * report.alpha == n;
    ensure(perfect == half && half == report.excellent, || {
        format!("perfect matching = {perfect}, alpha = n/2: {half}, excellent = {}", report.excellent)
    })?;
    let verdict = bipartite_excellent(&g, &(left, right)).map_err(from_recognizer)?;
    check_verdict(case, &g, "bipartite", &verdict, report.excellent, report.alpha)?;
    check_dispatch(case, &g, report.excellent, report.alpha)
}

fn trees(case: &mut Case<'_>, _: usize) -> Result<(), Fail> {
    let n = case.rng.gen_range(2..=14);
    let g = family(RandomKind::Tree, n, case);
    case.subject(&g);
    let report = case.analyze(&g)?;
    let verdict = tree_excellent(&g).map_err(from_recognizer)?;
    check_verdict(case, &g, "tree", &verdict, report.excellent, report.alpha)?;
    check_dispatch(case, &g, report.excellent, report.alpha)
}

fn unicyclic(case: &mut Case<'_>, _: usize) -> Result<(), Fail> {
    let n = case.rng.gen_range(3..=12);
    let g = family(RandomKind::Unicyclic, n, case);
    case.subject(&g);
    let report = case.analyze(&g)?;
    let verdict = unicyclic_excellent(&g).map_err(from_recognizer)?;
    check_verdict(case, &g, "unicyclic", &verdict, report.excellent, report.alpha)?;

    // plucking drops α by one per step and keeps the excellence verdict
    let trace = pluck(&g);
    let residual = case.ctx.oracle.excellence(&trace.residual)?;
    ensure(residual.alpha + trace.steps.len() == report.alpha, || {
        format!("alpha of plucked graph {} + {} steps != {}", residual.alpha, trace.steps.len(), report.alpha)
    })?;
    ensure(residual.excellent() == report.excellent, || "plucking changed the excellence verdict".to_string())?;

    for order in 0..10 {
        let rng = &mut case.rng;
        let other = pluck_with(&g, |eligible| rng.gen_range(0..eligible.len()));
        let decided = caterpillar_wheel_excellent(&other.residual).is_ok_and(|v| v.excellent);
        ensure(decided == verdict.excellent, || format!("random pluck order {order} gives excellent = {decided}"))?;
    }
    check_dispatch(case, &g, report.excellent, report.alpha)
}

fn chordal(case: &mut Case<'_>, _: usize) -> Result<(), Fail> {
    let n = case.rng.gen_range(1..=12);
    let g = family(RandomKind::Chordal, n, case);
    case.subject(&g);
    let report = case.analyze(&g)?;
    let verdict = chordal_excellent(&g).map_err(from_recognizer)?;
    if let Certificate::SuccessiveCliqueCover(scc) = &verdict.certificate {
        ensure(!verdict.excellent || scc.parts.len() == report.alpha, || {
            format!("{} parts but alpha = {}", scc.parts.len(), report.alpha)
        })?;
    }
    check_verdict(case, &g, "chordal", &verdict, report.excellent, report.alpha)?;
    check_dispatch(case, &g, report.excellent, report.alpha)
}

fn block(case: &mut Case<'_>, _: usize) -> Result<(), Fail> {
    let n = case.rng.gen_range(2..=12);
    let g = family(RandomKind::Block, n, case);
    case.subject(&g);
    let report = case.analyze(&g)?;
    let verdict = block_excellent(&g).map_err(from_recognizer)?;
    check_verdict(case, &g, "block", &verdict, report.excellent, report.alpha)?;
    if n <= 10 {
        let all = enumerate_perfect_block_covers(&g);
        ensure(all.len() <= 1, || format!("{} perfect block covers", all.len()))?;
        ensure(all == find_perfect_block_covers(&g, 2), || "cover search and enumeration differ".to_string())?;
    }
    check_dispatch(case, &g, report.excellent, report.alpha)
}

fn simplicial(case: &mut Case<'_>, i: usize) -> Result<(), Fail> {
    let g = match i % 3 {
        0 => {
            let nb = case.rng.gen_range(1..=4);
            let base = random_gnp(nb, 0.5, case.seed());
            let attachments = (0..nb)
                .map(|_| {
                    let a = case.rng.gen_range(1..=3);
                    if case.rng.gen_bool(0.25) {
                        random_gnp(a, 0.3, case.seed())
                    } else {
                        complete(a)
                    }
                })
                .collect();
            corona(&CoronaSpec::new(base, attachments).expect("one attachment per base vertex"))
        }
        1 => {
            let q = case.rng.gen_range(1..=4);
            let sizes: Vec<usize> = (0..q).map(|_| case.rng.gen_range(1..=3)).collect();
            general_corona(q, &sizes).expect("valid sizes")
        }
        _ => {
            let n = case.rng.gen_range(2..=12);
            family(RandomKind::Block, n, case)
        }
    };
    if !g.is_simplicial_graph() {
        case.skip();
        return Ok(());
    }
    case.subject(&g);
    let report = case.analyze(&g)?;
    ensure(report.well_covered == report.excellent, || {
        format!("well-covered = {}, excellent = {}", report.well_covered, report.excellent)
    })?;
    let verdict = simplicial_excellent(&g).map_err(from_recognizer)?;
    check_verdict(case, &g, "simplicial", &verdict, report.excellent, report.alpha)?;
    check_dispatch(case, &g, report.excellent, report.alpha)
}

fn corona_law(case: &mut Case<'_>, _: usize) -> Result<(), Fail> {
    const MAX_ORDER: usize = 16;
    let nb = case.rng.gen_range(1..=5);
    let base = random_gnp(nb, 0.4, case.seed());
    let mut room = MAX_ORDER - nb;
    let mut attachments = Vec::with_capacity(nb);
    for v in 0..nb {
        // leave one vertex for every later attachment
        let most = (room - (nb - v - 1)).min(4);
        let a = case.rng.gen_range(1..=most);
        room -= a;
        let h = if case.rng.gen_bool(0.7) { complete(a) } else { random_gnp(a, 0.5, case.seed()) };
        attachments.push(h);
    }
    let spec = CoronaSpec::new(base, attachments).expect("one attachment per base vertex");
    let g = corona(&spec);
    case.subject(&g);
    let report = case.analyze(&g)?;
    let verdict = corona_excellent(&spec);
    check_verdict(case, &g, "corona", &verdict, report.excellent, report.alpha)?;
    check_dispatch(case, &g, report.excellent, report.alpha)
}

fn spot_checks(case: &mut Case<'_>, i: usize) -> Result<(), Fail> {
    if i == 0 {
        let s22 = double_star(2, 2);
        let k12 = star(2);
        let product = cartesian_product(&s22, &k12);
        for (g, name, expected) in [(&product, "S22 x K12", true), (&s22, "S22", false), (&k12, "K12", false)] {
            case.subject(g);
            let report = case.analyze(g)?;
            ensure(report.excellent == expected, || format!("{name}: excellent = {}", report.excellent))?;
            check_dispatch(case, g, report.excellent, report.alpha)?;
        }
        return Ok(());
    }
    let g = if i.is_multiple_of(3) {
        let n = if case.rng.gen_bool(0.5) { 4 } else { 6 };
        let gluings = case.rng.gen_range(0..=6);
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        for _ in 0..gluings {
            let current = c_n_tree(n, &chosen).expect("gluing along existing edges");
            let edges: Vec<(usize, usize)> = current.edges().collect();
            chosen.push(edges[case.rng.gen_range(0..edges.len())]);
        }
        let g = c_n_tree(n, &chosen).expect("gluing along existing edges");
        case.subject(&g);
        let Some((left, right)) = g.bipartition() else {
            return Err(disagree("even C_(n)-tree is not bipartite"));
        };
        let perfect = bipartite_max_matching(&g, &left, &right).is_perfect_for(&g);
        ensure(perfect, || "even C_(n)-tree has no perfect matching".to_string())?;
        g
    } else {
        let n = case.rng.gen_range(3..=8);
        subdivision(&family(RandomKind::Unicyclic, n, case))
    };
    case.subject(&g);
    let report = case.analyze(&g)?;
    ensure(report.excellent, || format!("not excellent: alpha_c = {}, alpha = {}", report.alpha_c, report.alpha))?;
    check_dispatch(case, &g, report.excellent, report.alpha)
}

fn pendant_k2(case: &mut Case<'_>, _: usize) -> Result<(), Fail> {
    let n = case.rng.gen_range(2..=12);
    let g = match case.rng.gen_range(0..4) {
        0 => family(RandomKind::Tree, n, case),
        1 if n >= 3 => family(RandomKind::Unicyclic, n, case),
        2 => family(RandomKind::Chordal, n, case),
        _ => {
            let p = case.rng.gen_range(0.2..0.7);
            random_connected_gnp(n, p, case.seed())
        }
    };
    // the law needs a connected graph on at least two vertices
    let g = if g.is_connected() { g } else { random_connected_gnp(n, 0.4, case.seed()) };
    let v = case.rng.gen_range(0..n);
    let h = attach_k2(&g, v).expect("valid vertex");
    case.subject(&g);
    let before = case.analyze(&g)?;
    case.subject(&h);
    let after = case.analyze(&h)?;
    ensure(after.alpha == before.alpha + 1, || format!("alpha went from {} to {}", before.alpha, after.alpha))?;
    ensure(after.excellent == before.excellent, || {
        format!("excellent went from {} to {} attaching at {v}", before.excellent, after.excellent)
    })
}

fn oracle_consistency(case: &mut Case<'_>, _: usize) -> Result<(), Fail> {
    let n = case.rng.gen_range(0..=16);
    let p = case.rng.gen_range(0.05..0.95);
    let g = random_gnp(n, p, case.seed());
    case.subject(&g);
    let truth = exhaustive::enumerate(&g).expect("at most 16 vertices");
    let alpha = case.ctx.oracle.independence_number(&g)?;
    ensure(alpha == truth.alpha, || format!("branch and bound alpha = {alpha}, enumeration = {}", truth.alpha))?;
    let report = case.analyze(&g)?;
    ensure(report.ind_dom == truth.ind_dom, || format!("i = {}, enumeration = {}", report.ind_dom, truth.ind_dom))?;
    ensure(report.per_vertex_max == truth.per_vertex_max, || "per-vertex maxima differ from enumeration".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_enumeration_size() {
        assert_eq!(petersen_pair(0), (3, 1));
        assert_eq!(petersen_pair(PETERSEN_PAIRS - 1), (12, 6));
    }

    #[test]
    fn petersen_isomorphic_parameters() {
        let p72 = generalized_petersen(7, 2).unwrap();
        assert!(are_isomorphic(&generalized_petersen(7, 3).unwrap(), &p72));
        assert!(!are_isomorphic(&generalized_petersen(7, 1).unwrap(), &p72));
    }
}
