//! Block graphs: excellent exactly when some set of blocks partitions the
//! vertex set (a perfect block cover).

use crate::graph::{Graph, VertexSet};

use super::{BlockCoverCertificate, Certificate, Method, RecognizeError, Verdict};

/// Connected block graphs of order at least 2.
pub fn block_excellent(g: &Graph) -> Result<Verdict, RecognizeError> {
    if g.order() < 2 {
        return Err(RecognizeError::TooSmall { min: 2 });
    }
    if !g.is_connected() {
        return Err(RecognizeError::NotConnected);
    }
    if !g.is_block_graph() {
        return Err(RecognizeError::NotBlockGraph);
    }
    let cover = find_perfect_block_covers(g, 1).pop();
    let excellent = cover.is_some();
    Ok(Verdict::new(excellent, Method::Block, Certificate::BlockCover(BlockCoverCertificate { cover }), None))
}

/// Up to `limit` perfect block covers, each sorted. Repeatedly covers the
/// uncovered vertex lying in the fewest still-usable blocks, so a block
/// holding a simplicial vertex is taken as soon as that vertex is reached.
pub fn find_perfect_block_covers(g: &Graph, limit: usize) -> Vec<Vec<VertexSet>> {
    let blocks = g.blocks().blocks;
    let mut found = Vec::new();
    let mut covered = vec![false; g.order()];
    let mut chosen = Vec::new();
    cover_search(&blocks, &mut covered, &mut chosen, limit, &mut found);
    found
}

fn cover_search(
    blocks: &[VertexSet],
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
    limit: usize,
    found: &mut Vec<Vec<VertexSet>>,
) {
    if found.len() >= limit {
        return;
    }
    let usable = |b: &VertexSet, covered: &[bool]| b.iter().all(|&v| !covered[v]);
    let mut pivot: Option<(usize, Vec<usize>)> = None;
    for v in (0..covered.len()).filter(|&v| !covered[v]) {
        let options: Vec<usize> =
            (0..blocks.len()).filter(|&b| blocks[b].contains(&v) && usable(&blocks[b], covered)).collect();
        if pivot.as_ref().is_none_or(|(_, best)| options.len() < best.len()) {
            let stop = options.len() <= 1;
            pivot = Some((v, options));
            if stop {
                break;
            }
        }
    }
    let Some((_, options)) = pivot else {
        let mut cover: Vec<VertexSet> = chosen.iter().map(|&b| blocks[b].clone()).collect();
        cover.sort();
        found.push(cover);
        return;
    };
    for b in options {
        for &v in &blocks[b] {
            covered[v] = true;
        }
        chosen.push(b);
        cover_search(blocks, covered, chosen, limit, found);
        chosen.pop();
        for &v in &blocks[b] {
            covered[v] = false;
        }
    }
}

/// Every perfect block cover, by trying all subsets of blocks. Only for
/// graphs with few blocks; independent of [`find_perfect_block_covers`].
pub fn enumerate_perfect_block_covers(g: &Graph) -> Vec<Vec<VertexSet>> {
    let blocks = g.blocks().blocks;
    assert!(blocks.len() <= 20, "too many blocks to enumerate");
    let mut out = Vec::new();
    for mask in 0u32..1 << blocks.len() {
        let picked: Vec<&VertexSet> = (0..blocks.len()).filter(|&b| mask >> b & 1 == 1).map(|b| &blocks[b]).collect();
        let total: usize = picked.iter().map(|b| b.len()).sum();
        let union: VertexSet = picked.iter().flat_map(|b| b.iter().copied()).collect();
        if total == g.order() && union.len() == g.order() {
            out.push(picked.into_iter().cloned().collect());
        }
    }
    out
}
