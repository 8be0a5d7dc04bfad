use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FamilyError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RandomKind {
    Tree,
    Unicyclic,
    Chordal,
    Block,
    Bipartite,
}

impl RandomKind {
    pub const ALL: [RandomKind; 5] =
        [RandomKind::Tree, RandomKind::Unicyclic, RandomKind::Chordal, RandomKind::Block, RandomKind::Bipartite];

    pub fn name(self) -> &'static str {
        match self {
            RandomKind::Tree => "tree",
            RandomKind::Unicyclic => "unicyclic",
            RandomKind::Chordal => "chordal",
            RandomKind::Block => "block",
            RandomKind::Bipartite => "bipartite",
        }
    }

    fn min_order(self) -> usize {
        match self {
            RandomKind::Unicyclic => 3,
            _ => 1,
        }
    }
}

impl std::str::FromStr for RandomKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RandomKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown random family `{s}` (tree, unicyclic, chordal, block, bipartite)"))
    }
}

/// A random member of `kind` on `n` vertices. Same arguments, same graph.
pub fn random_family(kind: RandomKind, n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < kind.min_order() {
        return Err(FamilyError::TooSmall { kind: kind.name(), min: kind.min_order(), n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = match kind {
        RandomKind::Tree => random_tree_edges(n, &mut rng),
        RandomKind::Unicyclic => random_unicyclic_edges(n, &mut rng),
        RandomKind::Chordal => random_chordal_edges(n, &mut rng),
        RandomKind::Block => random_block_edges(n, &mut rng),
        RandomKind::Bipartite => random_bipartite_edges(n, &mut rng),
    };
    Ok(Graph::build(n, &edges)?)
}

/// `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::build(n, &gnp_edges(n, p, &mut rng)).expect("gnp edges are valid")
}

/// `G(n, p)` conditioned on connectivity by rejection; falls back to adding
/// a random spanning tree after a bounded number of attempts.
pub fn random_connected_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let g = Graph::build(n, &gnp_edges(n, p, &mut rng)).expect("gnp edges are valid");
        if g.is_connected() {
            return g;
        }
    }
    let mut edges = gnp_edges(n, p, &mut rng);
    edges.extend(random_tree_edges(n, &mut rng));
    Graph::build(n, &edges).expect("gnp edges are valid")
}

fn gnp_edges(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Decodes a uniformly random Prüfer sequence.
fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    match n {
        0 | 1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn random_unicyclic_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut edges = random_tree_edges(n, rng);
    let mut adjacent = vec![vec![false; n]; n];
    for &(u, v) in &edges {
        adjacent[u][v] = true;
        adjacent[v][u] = true;
    }
    let non_edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !adjacent[u][v]).collect();
    edges.push(*non_edges.choose(rng).expect("a tree on >= 3 vertices has a non-edge"));
    edges
}

/// Inserts vertices one at a time, each joined to a random clique inside the
/// closed neighborhood of a random earlier vertex. Every vertex is
/// simplicial at insertion, so the reverse insertion order is a perfect
/// elimination order. Occasionally a vertex starts a new component.
fn random_chordal_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    let order = shuffled(n, rng);
    for (i, &v) in order.iter().enumerate() {
        if i == 0 || rng.gen_ratio(1, 10) {
            continue;
        }
        let anchor = order[rng.gen_range(0..i)];
        let mut clique = vec![anchor];
        let mut candidates = adj[anchor].clone();
        candidates.shuffle(rng);
        let keep = rng.gen_range(0..=candidates.len());
        for w in candidates.into_iter().take(keep) {
            if clique.iter().all(|c| adj[w].contains(c)) {
                clique.push(w);
            }
        }
        for c in clique {
            adj[v].push(c);
            adj[c].push(v);
            edges.push((v, c));
        }
    }
    edges
}

/// A random tree of cliques: every new block is a clique of 1 to 3 fresh
/// vertices joined completely to one existing vertex.
fn random_block_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let labels = shuffled(n, rng);
    let mut edges = Vec::new();
    let first = rng.gen_range(1..=n.min(4));
    add_clique(&labels[..first], &mut edges);
    let mut placed = first;
    while placed < n {
        let anchor = labels[rng.gen_range(0..placed)];
        let fresh = rng.gen_range(1..=3).min(n - placed);
        let mut block = vec![anchor];
        block.extend_from_slice(&labels[placed..placed + fresh]);
        add_clique(&block, &mut edges);
        placed += fresh;
    }
    edges
}

fn add_clique(vertices: &[usize], edges: &mut Vec<(usize, usize)>) {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            edges.push((u, v));
        }
    }
}

/// Random bipartition with a random edge density, resampled until connected.
/// Sparse draws that keep failing get a random spanning tree of the
/// complete bipartite graph added instead.
fn random_bipartite_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n == 1 {
        return Vec::new();
    }
    let order = shuffled(n, rng);
    let left = rng.gen_range(1..n);
    let (a, b) = order.split_at(left);
    let p = rng.gen_range(0.15..0.6);
    let draw = |rng: &mut ChaCha8Rng| {
        let mut edges = Vec::new();
        for &u in a {
            for &v in b {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        edges
    };
    for _ in 0..100 {
        let edges = draw(rng);
        if Graph::build(n, &edges).expect("bipartite edges are valid").is_connected() {
            return edges;
        }
    }
    let mut edges = draw(rng);
    // spanning tree: the rest of A hangs off b[0], each of B off a random A
    edges.push((a[0], b[0]));
    for &u in &a[1..] {
        edges.push((u, b[0]));
    }
    for &v in &b[1..] {
        edges.push((v, *a.choose(rng).unwrap()));
    }
    edges
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}
