//! Constructors for the named graph families, plus seeded random generators.

mod random;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use random::{random_connected_gnp, random_family, random_gnp, RandomKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("generalized Petersen graph needs n >= 3 and 1 <= k <= n/2, got n={n}, k={k}")]
    PetersenParameters { n: usize, k: usize },
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("leg position {position} is outside a cycle of length {len}")]
    LegOutOfRange { position: usize, len: usize },
    #[error("corona needs one attachment per base vertex: {base} vertices, {attachments} attachments")]
    AttachmentCount { base: usize, attachments: usize },
    #[error("attachment for base vertex {0} is empty")]
    EmptyAttachment(usize),
    #[error("clique order must be at least 1")]
    EmptyClique,
    #[error("edge {0}-{1} does not exist")]
    MissingEdge(usize, usize),
    #[error("{kind} graphs need at least {min} vertices, got {n}")]
    TooSmall { kind: &'static str, min: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges).expect("path edges are valid")
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::CycleTooShort(n));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::build(n, &edges)?)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).expect("complete graph edges are valid")
}

/// `K_{1,r}` with the center as vertex 0.
pub fn star(r: usize) -> Graph {
    let edges: Vec<_> = (1..=r).map(|leaf| (0, leaf)).collect();
    Graph::build(r + 1, &edges).expect("star edges are valid")
}

/// `S_{a,b}`: adjacent centers 0 and 1 carrying `a` and `b` leaves.
pub fn double_star(a: usize, b: usize) -> Graph {
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::build(2 + a + b, &edges).expect("double star edges are valid")
}

/// A base graph with one attachment graph per base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaSpec {
    base: Graph,
    attachments: Vec<Graph>,
}

impl CoronaSpec {
    pub fn new(base: Graph, attachments: Vec<Graph>) -> Result<CoronaSpec, FamilyError> {
        if attachments.len() != base.order() {
            return Err(FamilyError::AttachmentCount { base: base.order(), attachments: attachments.len() });
        }
        if let Some(v) = attachments.iter().position(Graph::is_empty) {
            return Err(FamilyError::EmptyAttachment(v));
        }
        Ok(CoronaSpec { base, attachments })
    }

    /// The same attachment at every base vertex (`G ∘ H`).
    pub fn uniform(base: Graph, attachment: &Graph) -> Result<CoronaSpec, FamilyError> {
        let attachments = vec![attachment.clone(); base.order()];
        CoronaSpec::new(base, attachments)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn attachments(&self) -> &[Graph] {
        &self.attachments
    }
}

/// `G ∘ H`: base vertices keep ids `0..n(G)`, then the attachments follow in
/// base-vertex order. Attachment vertices are labelled `<base>.<label>`.
pub fn corona(spec: &CoronaSpec) -> Graph {
    let base = &spec.base;
    let mut labels: Vec<String> = base.labels().to_vec();
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    for (v, h) in spec.attachments.iter().enumerate() {
        let shift = labels.len();
        labels.extend(h.labels().iter().map(|l| format!("{}.{}", base.label(v), l)));
        edges.extend(h.edges().map(|(a, b)| (a + shift, b + shift)));
        edges.extend((0..h.order()).map(|x| (v, x + shift)));
    }
    Graph::with_labels(labels, &edges).expect("corona edges are valid")
}

/// `K_n ∘ {K_{a_1}, ..., K_{a_n}}`. Body vertices are labelled `b<i>` and
/// come first; attachment vertices are `h<i>.<j>`.
pub fn general_corona(clique_order: usize, attachments: &[usize]) -> Result<Graph, FamilyError> {
    if clique_order == 0 {
        return Err(FamilyError::EmptyClique);
    }
    if attachments.len() != clique_order {
        return Err(FamilyError::AttachmentCount { base: clique_order, attachments: attachments.len() });
    }
    if let Some(i) = attachments.iter().position(|&a| a == 0) {
        return Err(FamilyError::EmptyAttachment(i));
    }
    let hs = attachments.iter().map(|&a| complete(a)).collect();
    let g = corona(&CoronaSpec::new(complete(clique_order), hs)?);
    let mut labels: Vec<String> = (0..clique_order).map(|i| format!("b{i}")).collect();
    for (i, &a) in attachments.iter().enumerate() {
        labels.extend((0..a).map(|j| format!("h{i}.{j}")));
    }
    Ok(g.relabeled(labels)?)
}

/// `P_{n,k}` with outer vertices `v_i = i` and inner vertices `u_i = n + i`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if n < 3 || k == 0 || k > n / 2 {
        return Err(FamilyError::PetersenParameters { n, k });
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    let labels = (0..n).map(|i| format!("v{i}")).chain((0..n).map(|i| format!("u{i}"))).collect();
    Ok(Graph::with_labels(labels, &edges)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarWheelSpec {
    cycle_length: usize,
    leg_positions: BTreeSet<usize>,
}

impl CaterpillarWheelSpec {
    pub fn new(cycle_length: usize, leg_positions: impl IntoIterator<Item = usize>) -> Result<Self, FamilyError> {
        if cycle_length < 3 {
            return Err(FamilyError::CycleTooShort(cycle_length));
        }
        let leg_positions: BTreeSet<usize> = leg_positions.into_iter().collect();
        if let Some(&position) = leg_positions.iter().find(|&&p| p >= cycle_length) {
            return Err(FamilyError::LegOutOfRange { position, len: cycle_length });
        }
        Ok(CaterpillarWheelSpec { cycle_length, leg_positions })
    }

    pub fn cycle_length(&self) -> usize {
        self.cycle_length
    }

    pub fn leg_positions(&self) -> &BTreeSet<usize> {
        &self.leg_positions
    }
}

/// Cycle `0..len` plus one pendant leaf per leg position, leaves numbered
/// after the cycle in increasing position order.
pub fn caterpillar_wheel(spec: &CaterpillarWheelSpec) -> Graph {
    let len = spec.cycle_length;
    let mut edges: Vec<_> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    edges.extend(spec.leg_positions.iter().enumerate().map(|(j, &p)| (p, len + j)));
    Graph::build(len + spec.leg_positions.len(), &edges).expect("caterpillar-wheel edges are valid")
}

/// Adds a path `v - x - y` on two new vertices.
pub fn attach_k2(g: &Graph, v: usize) -> Result<Graph, FamilyError> {
    g.check_vertex(v)?;
    let n = g.order();
    let mut labels = g.labels().to_vec();
    labels.push(fresh_label(g, "x"));
    labels.push(fresh_label(g, "y"));
    let mut edges: Vec<_> = g.edges().collect();
    edges.push((v, n));
    edges.push((n, n + 1));
    Ok(Graph::with_labels(labels, &edges)?)
}

fn fresh_label(g: &Graph, stem: &str) -> String {
    let mut i = g.order();
    loop {
        let candidate = format!("{stem}{i}");
        if !g.labels().contains(&candidate) {
            return candidate;
        }
        i += 1;
    }
}

/// Subdivides every edge once. Edge `j` (in `Graph::edges` order) becomes
/// vertex `n + j`, labelled `<u>-<v>`.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.order();
    let mut labels = g.labels().to_vec();
    let mut edges = Vec::with_capacity(2 * g.size());
    for (j, (u, v)) in g.edges().enumerate() {
        labels.push(format!("{}-{}", g.label(u), g.label(v)));
        edges.push((u, n + j));
        edges.push((n + j, v));
    }
    Graph::with_labels(labels, &edges).expect("subdivision edges are valid")
}

/// Glues a fresh `n`-cycle along each named edge in turn, starting from
/// `C_n`. For a gluing `(a, b)`, the new cycle is `a, b, w_1, ..., w_{n-2}`
/// where the `w_i` are new vertices.
pub fn c_n_tree(n: usize, gluings: &[(usize, usize)]) -> Result<Graph, FamilyError> {
    let base = cycle(n)?;
    let mut order = base.order();
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    let mut present: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    for &(a, b) in gluings {
        let key = (a.min(b), a.max(b));
        if !present.contains(&key) {
            return Err(FamilyError::MissingEdge(a, b));
        }
        let mut prev = b;
        for _ in 0..n - 2 {
            let w = order;
            order += 1;
            edges.push((prev, w));
            present.insert((prev.min(w), prev.max(w)));
            prev = w;
        }
        edges.push((prev, a));
        present.insert((prev.min(a), prev.max(a)));
    }
    Ok(Graph::build(order, &edges)?)
}

/// `G □ H`: vertex `(a, x)` has id `a * n(H) + x` and label `(<a>,<x>)`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let id = |a: usize, x: usize| a * nh + x;
    let mut labels = Vec::with_capacity(g.order() * nh);
    for a in g.vertices() {
        for x in h.vertices() {
            labels.push(format!("({},{})", g.label(a), h.label(x)));
        }
    }
    let mut edges = Vec::new();
    for a in g.vertices() {
        for (x, y) in h.edges() {
            edges.push((id(a, x), id(a, y)));
        }
    }
    for (a, b) in g.edges() {
        for x in h.vertices() {
            edges.push((id(a, x), id(b, x)));
        }
    }
    Graph::with_labels(labels, &edges).expect("product edges are valid")
}
