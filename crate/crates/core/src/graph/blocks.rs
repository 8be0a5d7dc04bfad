use super::{Graph, VertexSet};

/// Biconnected decomposition. Bridges are two-vertex blocks and isolated
/// vertices are one-vertex blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// Per vertex, indices of the blocks containing it.
    pub membership: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn of(g: &Graph) -> BlockDecomposition {
        let n = g.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut blocks: Vec<VertexSet> = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();

        for root in g.vertices() {
            if disc[root] != usize::MAX {
                continue;
            }
            if g.degree(root) == 0 {
                disc[root] = time;
                time += 1;
                blocks.push(VertexSet::from([root]));
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            // (vertex, parent, next neighbor index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(frame) = stack.last_mut() {
                let (v, parent, idx) = *frame;
                if idx < g.degree(v) {
                    frame.2 += 1;
                    let w = g.neighbors(v)[idx];
                    if disc[w] == usize::MAX {
                        edge_stack.push((v, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, v, 0));
                    } else if w != parent && disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(u, _, _)) = stack.last() {
                        low[u] = low[u].min(low[v]);
                        if low[v] >= disc[u] {
                            let mut block = VertexSet::new();
                            while let Some((a, b)) = edge_stack.pop() {
                                block.insert(a);
                                block.insert(b);
                                if (a, b) == (u, v) {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
        }

        blocks.sort();
        let mut membership = vec![Vec::new(); n];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                membership[v].push(i);
            }
        }
        let cut_vertices = (0..n).filter(|&v| membership[v].len() >= 2).collect();
        BlockDecomposition { blocks, cut_vertices, membership }
    }

    /// Blocks containing exactly one cut vertex.
    pub fn end_blocks(&self) -> Vec<usize> {
        self.blocks_with_cut_count(|c| c == 1)
    }

    /// Blocks containing at least two cut vertices.
    pub fn inner_blocks(&self) -> Vec<usize> {
        self.blocks_with_cut_count(|c| c >= 2)
    }

    fn blocks_with_cut_count(&self, pred: impl Fn(usize) -> bool) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| pred(b.iter().filter(|v| self.cut_vertices.contains(v)).count()))
            .map(|(i, _)| i)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn path_has_edge_blocks() {
        let p4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = p4.blocks();
        assert_eq!(d.blocks, vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 3])]);
        assert_eq!(d.cut_vertices, set(&[1, 2]));
        assert_eq!(d.end_blocks(), vec![0, 2]);
        assert_eq!(d.inner_blocks(), vec![1]);
    }

    #[test]
    fn complete_graph_is_one_block() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        let d = Graph::build(4, &edges).unwrap().blocks();
        assert_eq!(d.blocks, vec![set(&[0, 1, 2, 3])]);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn triangles_sharing_a_vertex() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let d = g.blocks();
        assert_eq!(d.blocks, vec![set(&[0, 1, 2]), set(&[2, 3, 4])]);
        assert_eq!(d.cut_vertices, set(&[2]));
        assert_eq!(d.membership[2], vec![0, 1]);
    }

    #[test]
    fn isolated_vertices_and_cycles() {
        // C_4 plus a pendant and an isolated vertex
        let g = Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        let d = g.blocks();
        assert_eq!(d.blocks, vec![set(&[0, 1, 2, 3]), set(&[3, 4]), set(&[5])]);
        assert_eq!(d.cut_vertices, set(&[3]));
    }
}
