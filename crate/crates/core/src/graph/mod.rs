//! Immutable simple undirected graphs and the structural queries the
//! recognizers are built on.
//!
//! Vertices are the contiguous ids `0..n`. Every graph carries a label per
//! vertex so that reports can show the names a user supplied; derived graphs
//! (induced subgraphs, products, ...) keep or compose those labels.

mod blocks;
mod chordal;
pub mod io;

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

pub use blocks::BlockDecomposition;

/// A set of vertex ids.
pub type VertexSet = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} is not in a graph of order {n}")]
    InvalidVertex { v: usize, n: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Vec<String>,
    size: usize,
}

impl Graph {
    /// Builds a graph on `0..n`. Duplicate edges are collapsed; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let labels = (0..n).map(|v| v.to_string()).collect();
        Graph::with_labels(labels, edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut size = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            size += list.len();
        }
        Ok(Graph { adj, labels, size: size / 2 })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::build(n, &[]).expect("edgeless graph is valid")
    }

    /// Replaces the label map. The label count must equal the order.
    pub fn relabeled(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::LabelCount { expected: self.order(), got: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Sorted neighbor list of `v`. Panics on an invalid id.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex { v, n: self.order() })
        }
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        let mut set: VertexSet = self.adj[v].iter().copied().collect();
        set.insert(v);
        Ok(set)
    }

    /// Closed neighborhood of a set: `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood_of(&self, s: &VertexSet) -> Result<VertexSet, GraphError> {
        let mut out = VertexSet::new();
        for &v in s {
            out.extend(self.closed_neighborhood(v)?);
        }
        Ok(out)
    }

    /// Subgraph induced by `keep`, in the order given. New vertex `i` is
    /// `keep[i]`; labels follow their vertices.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = Vec::with_capacity(keep.len());
        let mut size = 0;
        for &v in keep {
            let mut list: Vec<usize> =
                self.adj[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect();
            list.sort_unstable();
            size += list.len();
            adj.push(list);
        }
        Graph {
            adj,
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
            size: size / 2,
        }
    }

    /// `G − S`, with the surviving vertices re-numbered in increasing order.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        for &v in s {
            self.check_vertex(v)?;
        }
        Ok(self.induced(&self.complement_of(s)))
    }

    /// Vertices of the graph not in `s`, ascending.
    pub fn complement_of(&self, s: &VertexSet) -> Vec<usize> {
        self.vertices().filter(|v| !s.contains(v)).collect()
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|&u| self.adj[u].iter().all(|w| !s.contains(w)))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let members: Vec<usize> = s.iter().copied().collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size * 2 == n * n.saturating_sub(1)
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for root in self.vertices() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A two-colouring `(A, B)` if the graph has no odd cycle. The smallest
    /// vertex of each component is placed in `A`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color: Vec<Option<bool>> = vec![None; self.order()];
        for root in self.vertices() {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut a = VertexSet::new();
        let mut b = VertexSet::new();
        for (v, c) in color.into_iter().enumerate() {
            if c == Some(false) {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in self.vertices() {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn blocks(&self) -> BlockDecomposition {
        BlockDecomposition::of(self)
    }

    /// Every block induces a complete subgraph.
    pub fn is_block_graph(&self) -> bool {
        self.blocks().blocks.iter().all(|b| self.is_clique(b))
    }

    pub fn is_simplicial_vertex(&self, v: usize) -> bool {
        let nbrs = &self.adj[v];
        nbrs.iter().enumerate().all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn simplexes(&self) -> SimplexSet {
        let simplicial_vertices: VertexSet =
            self.vertices().filter(|&v| self.is_simplicial_vertex(v)).collect();
        let mut simplexes: Vec<VertexSet> = Vec::new();
        for &v in &simplicial_vertices {
            let s = self.closed_neighborhood(v).expect("valid id");
            if !simplexes.contains(&s) {
                simplexes.push(s);
            }
        }
        SimplexSet { simplicial_vertices, simplexes }
    }

    /// Every vertex lies in at least one simplex.
    pub fn is_simplicial_graph(&self) -> bool {
        let covered: VertexSet = self.simplexes().simplexes.into_iter().flatten().collect();
        covered.len() == self.order()
    }

    /// A perfect elimination order, or `None` when the graph is not chordal.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        chordal::perfect_elimination_order(self)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// Leaves (degree-1 vertices) adjacent to `v`.
    pub fn leaf_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied().filter(|&w| self.degree(w) == 1)
    }

    /// Vertices with at least two neighbors of degree 1.
    pub fn strong_support_vertices(&self) -> VertexSet {
        self.vertices().filter(|&v| self.leaf_neighbors(v).nth(1).is_some()).collect()
    }

    pub fn classify(&self) -> Structure {
        let components = self.components();
        let connected = components.len() <= 1;
        let n = self.order();
        Structure {
            connected,
            tree: connected && n >= 1 && self.size + 1 == n,
            unicyclic: connected && n >= 3 && self.size == n,
            bipartite: self.is_bipartite(),
            chordal: self.is_chordal(),
            block_graph: self.is_block_graph(),
            simplicial: self.is_simplicial_graph(),
            complete: self.is_complete(),
            components,
        }
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let edges: Vec<(usize, usize)> =
            self.edges().chain(other.edges().map(|(u, v)| (u + shift, v + shift))).collect();
        Graph::with_labels(labels, &edges).expect("union of valid graphs")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexSet {
    pub simplicial_vertices: VertexSet,
    /// Closed neighborhoods of the simplicial vertices, deduplicated, in
    /// order of their smallest simplicial vertex.
    pub simplexes: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    pub connected: bool,
    pub tree: bool,
    pub unicyclic: bool,
    pub bipartite: bool,
    pub chordal: bool,
    pub block_graph: bool,
    pub simplicial: bool,
    pub complete: bool,
    pub components: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn build_basic() {
        let k3 = Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3.size(), 3);
        assert!(k3.is_complete());
        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let dup = Graph::build(4, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(dup.size(), 2);
        assert_eq!(dup.neighbors(1), &[0, 2]);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::build(3, &[(0, 3)]), Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 }));
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(complete(3).closed_neighborhood(0).unwrap(), set(&[0, 1, 2]));
        assert_eq!(Graph::empty(1).closed_neighborhood(0).unwrap(), set(&[0]));
        assert_eq!(cycle(4).closed_neighborhood(0).unwrap(), set(&[0, 1, 3]));
        assert!(cycle(4).closed_neighborhood(4).is_err());
    }

    #[test]
    fn deleting_vertices() {
        let c5 = cycle(5);
        let p2 = c5.delete_vertices(&c5.closed_neighborhood(0).unwrap()).unwrap();
        assert_eq!((p2.order(), p2.size()), (2, 1));
        assert_eq!(p2.labels(), &["2".to_string(), "3".to_string()]);

        let same = c5.delete_vertices(&VertexSet::new()).unwrap();
        assert_eq!(same, c5);

        let p4 = path(4);
        let rest = p4.delete_vertices(&set(&[1])).unwrap();
        assert_eq!(rest.order(), 3);
        assert_eq!(rest.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(rest.components().len(), 2);
        assert!(p4.delete_vertices(&set(&[9])).is_err());
    }

    #[test]
    fn bipartitions() {
        assert_eq!(cycle(6).bipartition(), Some((set(&[0, 2, 4]), set(&[1, 3, 5]))));
        assert_eq!(cycle(5).bipartition(), None);
        assert_eq!(complete(2).bipartition(), Some((set(&[0]), set(&[1]))));
    }

    #[test]
    fn girths() {
        assert_eq!(cycle(7).girth(), Some(7));
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(path(6).girth(), None);
        // two squares sharing an edge
        let g = Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)]).unwrap();
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn block_graph_checks() {
        assert!(path(5).is_block_graph());
        assert!(!cycle(4).is_block_graph());
        let bowtie = Graph::build(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(bowtie.is_block_graph());
    }

    #[test]
    fn simplex_sets() {
        let k12 = Graph::build(3, &[(0, 1), (0, 2)]).unwrap();
        let s = k12.simplexes();
        assert_eq!(s.simplicial_vertices, set(&[1, 2]));
        assert_eq!(s.simplexes, vec![set(&[0, 1]), set(&[0, 2])]);
        assert!(k12.is_simplicial_graph());

        let c5 = cycle(5).simplexes();
        assert!(c5.simplicial_vertices.is_empty() && c5.simplexes.is_empty());
        assert!(!cycle(4).is_simplicial_graph());

        let k4 = complete(4).simplexes();
        assert_eq!(k4.simplicial_vertices.len(), 4);
        assert_eq!(k4.simplexes, vec![set(&[0, 1, 2, 3])]);

        // K_3 with a pendant at every vertex
        let corona = Graph::build(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(corona.is_simplicial_graph());
    }

    #[test]
    fn chordality() {
        assert!(!cycle(4).is_chordal());
        assert!(path(7).is_chordal());
        let order = complete(4).perfect_elimination_order().unwrap();
        assert_eq!(order.len(), 4);
    }

    #[test]
    fn strong_supports() {
        let k12 = Graph::build(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(k12.strong_support_vertices(), set(&[0]));
        let s22 = Graph::build(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(s22.strong_support_vertices(), set(&[0, 1]));
        assert!(path(4).strong_support_vertices().is_empty());
    }

    #[test]
    fn classification() {
        let c7 = cycle(7).classify();
        assert!(c7.unicyclic && !c7.bipartite && !c7.chordal && !c7.tree);
        let p6 = path(6).classify();
        assert!(p6.tree && p6.bipartite && p6.chordal && p6.block_graph && !p6.unicyclic);
        let k5 = complete(5).classify();
        assert!(k5.complete && k5.chordal && k5.block_graph && k5.simplicial);
        assert_eq!(k5.components, vec![vec![0, 1, 2, 3, 4]]);
    }
}
