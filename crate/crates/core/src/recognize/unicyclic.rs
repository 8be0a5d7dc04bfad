//! Connected unicyclic graphs: pluck pendant `K_2`s until a caterpillar-wheel
//! (a cycle whose extra vertices are leaves on the cycle) remains.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::matching::Matching;

use super::{Certificate, Method, RecognizeError, Verdict};

/// A cycle in traversal order with leaves ("legs") hanging off it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaterpillarWheel {
    /// Starts at the smallest cycle vertex, continues to its smaller neighbor.
    pub cycle: Vec<usize>,
    /// `(support, leaf)` ordered by the support's position on `cycle`.
    pub legs: Vec<(usize, usize)>,
    /// Cyclic distances between consecutive supports; empty without legs.
    pub gaps: Vec<usize>,
    pub matching: Option<Matching>,
}

/// `(support, leaf)` pairs hanging off the cycle.
pub type Legs = Vec<(usize, usize)>;

/// The cycle and legs of `g`, if it is a caterpillar-wheel.
pub fn caterpillar_wheel_structure(g: &Graph) -> Option<(Vec<usize>, Legs)> {
    let n = g.order();
    if n < 3 || g.size() != n || !g.is_connected() {
        return None;
    }
    let on_cycle: Vec<bool> = g.vertices().map(|v| g.degree(v) >= 2).collect();
    for v in g.vertices() {
        let inner = g.neighbors(v).iter().filter(|&&w| on_cycle[w]).count();
        if (on_cycle[v] && inner != 2) || (!on_cycle[v] && inner != 1) {
            return None;
        }
    }
    let start = g.vertices().find(|&v| on_cycle[v])?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).iter().copied().find(|&w| on_cycle[w])?;
    while cur != start {
        cycle.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| on_cycle[w] && w != prev)?;
        prev = cur;
        cur = next;
    }
    let legs = cycle
        .iter()
        .flat_map(|&s| g.neighbors(s).iter().filter(|&&w| !on_cycle[w]).map(move |&w| (s, w)))
        .collect();
    Some((cycle, legs))
}

/// Cyclic distances between consecutive leg supports along `cycle`.
pub fn leg_gaps(cycle: &[usize], legs: &[(usize, usize)]) -> Vec<usize> {
    let position = |v: usize| cycle.iter().position(|&c| c == v).expect("support on cycle");
    let mut at: Vec<usize> = legs.iter().map(|&(s, _)| position(s)).collect();
    at.sort_unstable();
    (0..at.len())
        .map(|i| if i + 1 < at.len() { at[i + 1] - at[i] } else { at[0] + cycle.len() - at[i] })
        .collect()
}

/// Excellent exactly when there are no legs, or at least two legs and a
/// perfect matching.
pub fn caterpillar_wheel_excellent(g: &Graph) -> Result<Verdict, RecognizeError> {
    let (cycle, legs) = caterpillar_wheel_structure(g).ok_or(RecognizeError::NotCaterpillarWheel)?;
    let gaps = leg_gaps(&cycle, &legs);
    let matching = perfect_matching(&cycle, &legs);
    let alpha = if legs.is_empty() {
        cycle.len() / 2
    } else {
        // every leg contributes its leaf; the arcs between supports are paths
        legs.len() + gaps.iter().map(|&d| d / 2).sum::<usize>()
    };
    let excellent = legs.is_empty() || legs.len() >= 2 && matching.is_some();
    let wheel = CaterpillarWheel { cycle, legs, gaps, matching };
    Ok(Verdict::new(excellent, Method::CaterpillarWheel, Certificate::CaterpillarWheel(wheel), Some(alpha)))
}

/// Legs matched to their supports, each arc between supports matched along
/// the cycle; `None` when some arc has odd length.
fn perfect_matching(cycle: &[usize], legs: &[(usize, usize)]) -> Option<Matching> {
    let len = cycle.len();
    let mut pairs: Vec<(usize, usize)> = legs.to_vec();
    if legs.is_empty() {
        if len % 2 == 1 {
            return None;
        }
        pairs.extend(cycle.chunks_exact(2).map(|p| (p[0], p[1])));
        return Some(Matching::from_pairs(pairs));
    }
    let support: Vec<bool> = cycle.iter().map(|v| legs.iter().any(|&(s, _)| s == *v)).collect();
    if support.iter().filter(|&&s| s).count() < legs.len() {
        // two legs share a support
        return None;
    }
    let first = support.iter().position(|&s| s).expect("at least one leg");
    let mut arc = Vec::new();
    for step in 1..=len {
        let i = (first + step) % len;
        if support[i] {
            if arc.len() % 2 == 1 {
                return None;
            }
            pairs.extend(arc.chunks_exact(2).map(|p: &[usize]| (p[0], p[1])));
            arc.clear();
        } else {
            arc.push(cycle[i]);
        }
    }
    Some(Matching::from_pairs(pairs))
}

/// Result of plucking pendant `K_2`s to a fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckTrace {
    /// `(vertex, leaf)` removed at each step, in original ids.
    pub steps: Vec<(usize, usize)>,
    /// Residual vertex `i` is original vertex `kept[i]`.
    pub kept: Vec<usize>,
    pub residual: Graph,
}

/// Plucks the lowest eligible vertex first.
pub fn pluck(g: &Graph) -> PluckTrace {
    pluck_with(g, |_| 0)
}

/// Repeatedly removes a degree-2 vertex having exactly one leaf neighbor,
/// together with that leaf, while at least four vertices remain. `choose`
/// receives the eligible vertices in increasing order and returns an index.
pub fn pluck_with(g: &Graph, mut choose: impl FnMut(&[usize]) -> usize) -> PluckTrace {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut steps = Vec::new();
    loop {
        if remaining < 4 {
            break;
        }
        let leaf_of = |v: usize, alive: &[bool], degree: &[usize]| -> Option<usize> {
            let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
            let leaves: Vec<usize> = nbrs.iter().copied().filter(|&w| degree[w] == 1).collect();
            (nbrs.len() == 2 && leaves.len() == 1).then(|| leaves[0])
        };
        let eligible: Vec<usize> =
            g.vertices().filter(|&v| alive[v] && leaf_of(v, &alive, &degree).is_some()).collect();
        if eligible.is_empty() {
            break;
        }
        let v = eligible[choose(&eligible).min(eligible.len() - 1)];
        let leaf = leaf_of(v, &alive, &degree).expect("eligible");
        for x in [v, leaf] {
            alive[x] = false;
            for &w in g.neighbors(x) {
                if alive[w] {
                    degree[w] -= 1;
                }
            }
        }
        remaining -= 2;
        steps.push((v, leaf));
    }
    let kept: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
    let residual = g.induced(&kept);
    PluckTrace { steps, kept, residual }
}

/// Connected unicyclic graphs: excellent exactly when the plucked graph is
/// an excellent caterpillar-wheel.
pub fn unicyclic_excellent(g: &Graph) -> Result<Verdict, RecognizeError> {
    if g.order() < 3 || g.size() != g.order() || !g.is_connected() {
        return Err(RecognizeError::NotUnicyclic);
    }
    let trace = pluck(g);
    let residual = caterpillar_wheel_excellent(&trace.residual).ok();
    let excellent = residual.as_ref().is_some_and(|v| v.excellent);
    let alpha = residual.as_ref().and_then(|v| v.alpha).map(|a| a + trace.steps.len());
    let certificate = Certificate::Pluck { trace, residual: residual.map(Box::new) };
    Ok(Verdict::new(excellent, Method::Unicyclic, certificate, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{attach_k2, caterpillar_wheel, cycle, CaterpillarWheelSpec};

    fn wheel(len: usize, positions: &[usize]) -> Graph {
        caterpillar_wheel(&CaterpillarWheelSpec::new(len, positions.iter().copied()).unwrap())
    }

    fn wheel_with_double_leg() -> Graph {
        Graph::build(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)]).unwrap()
    }

    #[test]
    fn cycles_are_excellent() {
        for n in 3..10 {
            let v = caterpillar_wheel_excellent(&cycle(n).unwrap()).unwrap();
            assert!(v.excellent);
            assert_eq!(v.alpha, Some(n / 2));
        }
    }

    #[test]
    fn legs_and_gaps() {
        // C6 with legs at 0 and 3: gaps 3,3, perfect matching
        let v = caterpillar_wheel_excellent(&wheel(6, &[0, 3])).unwrap();
        assert!(v.excellent);
        assert_eq!(v.alpha, Some(4));
        let Certificate::CaterpillarWheel(w) = &v.certificate else { panic!() };
        assert_eq!(w.gaps, vec![3, 3]);
        // C6 with legs at 0 and 2: even gaps
        let v = caterpillar_wheel_excellent(&wheel(6, &[0, 2])).unwrap();
        assert!(!v.excellent);
        // two legs on one support: gap 0
        let v = caterpillar_wheel_excellent(&wheel_with_double_leg()).unwrap();
        assert!(!v.excellent);
        let Certificate::CaterpillarWheel(w) = &v.certificate else { panic!() };
        assert_eq!(w.gaps, vec![0, 3]);
        // one leg never suffices
        assert!(!caterpillar_wheel_excellent(&wheel(5, &[0])).unwrap().excellent);
    }

    #[test]
    fn structure_rejects_deep_trees() {
        let g = attach_k2(&cycle(4).unwrap(), 0).unwrap();
        assert_eq!(caterpillar_wheel_structure(&g), None);
    }

    #[test]
    fn plucking_restores_base() {
        let c5 = cycle(5).unwrap();
        let g = attach_k2(&attach_k2(&c5, 1).unwrap(), 5).unwrap();
        let trace = pluck(&g);
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(trace.kept, vec![0, 1, 2, 3, 4]);
        let v = unicyclic_excellent(&g).unwrap();
        assert!(v.excellent);
        assert_eq!(v.alpha, Some(4));
    }
}
