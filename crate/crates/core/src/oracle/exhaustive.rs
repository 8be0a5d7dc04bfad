//! Enumeration of every vertex subset. Independent of the branch-and-bound
//! code and used to cross-check it on small graphs.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("exhaustive enumeration supports at most {MAX_ORDER} vertices, got {0}")]
pub struct TooLarge(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exhaustive {
    pub alpha: usize,
    pub ind_dom: usize,
    pub per_vertex_max: Vec<usize>,
}

impl Exhaustive {
    pub fn alpha_c(&self) -> usize {
        self.per_vertex_max.iter().copied().min().unwrap_or(0)
    }

    pub fn excellent(&self) -> bool {
        self.alpha_c() == self.alpha
    }
}

pub fn enumerate(g: &Graph) -> Result<Exhaustive, TooLarge> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(TooLarge(n));
    }
    let closed: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |acc, &w| acc | 1 << w))
        .collect();
    let full: u32 = (1u32 << n) - 1;
    let subsets = 1usize << n;

    // independent[s] and dominated[s] built from s without its lowest bit
    let mut independent = vec![false; subsets];
    let mut dominated = vec![0u32; subsets];
    independent[0] = true;
    let mut alpha = 0;
    let mut ind_dom = if n == 0 { 0 } else { usize::MAX };
    let mut per_vertex_max = vec![0usize; n];
    for s in 1..subsets {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        dominated[s] = dominated[rest] | closed[low];
        independent[s] = independent[rest] && (closed[low] & !(1 << low) & rest as u32) == 0;
        if !independent[s] {
            continue;
        }
        let size = s.count_ones() as usize;
        alpha = alpha.max(size);
        if dominated[s] == full {
            ind_dom = ind_dom.min(size);
        }
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            per_vertex_max[v] = per_vertex_max[v].max(size);
            bits &= bits - 1;
        }
    }
    Ok(Exhaustive { alpha, ind_dom, per_vertex_max })
}
