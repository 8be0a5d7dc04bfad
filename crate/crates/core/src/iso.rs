//! Isomorphism testing by backtracking over degree-compatible assignments.
//! Intended for the small graphs the families are checked on.

use crate::graph::Graph;

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    // map g's vertices in BFS order so each one (after the first of its
    // component) already has a mapped neighbor
    let order = bfs_order(g);
    let mut image = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    extend(g, h, &order, 0, &mut image, &mut used)
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut order = Vec::with_capacity(g.order());
    for root in g.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

fn extend(g: &Graph, h: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    let Some(&v) = order.get(depth) else { return true };
    let anchor = g.neighbors(v).iter().copied().find(|&w| image[w] != usize::MAX);
    let candidates: Vec<usize> = match anchor {
        Some(w) => h.neighbors(image[w]).to_vec(),
        None => h.vertices().collect(),
    };
    for x in candidates {
        if used[x] || h.degree(x) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| g.has_edge(u, v) == h.has_edge(image[u], x));
        if !consistent {
            continue;
        }
        image[v] = x;
        used[x] = true;
        if extend(g, h, order, depth + 1, image, used) {
            return true;
        }
        image[v] = usize::MAX;
        used[x] = false;
    }
    false
}
