use super::Graph;

/// Repeatedly removes the lowest-id simplicial vertex of the remaining graph.
/// The removal sequence is a perfect elimination order; the process stalls
/// exactly when some induced subgraph has no simplicial vertex.
pub(super) fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).find(|&v| alive[v] && simplicial_among(g, v, &alive))?;
        alive[v] = false;
        order.push(v);
    }
    Some(order)
}

fn simplicial_among(g: &Graph, v: usize, alive: &[bool]) -> bool {
    let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
    nbrs.iter().enumerate().all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}
