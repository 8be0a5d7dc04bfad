//! Fixed-capacity vertex bitsets for the exact searches.

use crate::graph::Graph;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn empty(n: usize) -> Bits {
        Bits { words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Bits {
        let mut b = Bits::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_count(&self, other: &Bits) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn and(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn and_not(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect() }
    }

    pub fn and_assign(&mut self, other: &Bits) {
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a &= b);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }
}

/// Open and closed neighborhoods of every vertex as bitsets.
pub(crate) struct Adjacency {
    pub n: usize,
    pub open: Vec<Bits>,
    pub closed: Vec<Bits>,
}

impl Adjacency {
    pub fn of(g: &Graph) -> Adjacency {
        let n = g.order();
        let open: Vec<Bits> = g
            .vertices()
            .map(|v| {
                let mut b = Bits::empty(n);
                g.neighbors(v).iter().for_each(|&w| b.insert(w));
                b
            })
            .collect();
        let closed = open
            .iter()
            .enumerate()
            .map(|(v, b)| {
                let mut c = b.clone();
                c.insert(v);
                c
            })
            .collect();
        Adjacency { n, open, closed }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations_across_words() {
        let mut a = Bits::empty(130);
        for v in [0, 63, 64, 129] {
            a.insert(v);
        }
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(a.count(), 4);
        let mut b = Bits::empty(130);
        b.insert(64);
        b.insert(100);
        assert_eq!(a.and(&b).iter().collect::<Vec<_>>(), vec![64]);
        assert_eq!(a.and_not(&b).count(), 3);
        a.remove(0);
        assert!(!a.contains(0));
        assert_eq!(Bits::full(70).count(), 70);
    }
}
