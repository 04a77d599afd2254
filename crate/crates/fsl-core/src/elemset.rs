//! Bitsets over element indices of a fixed group enumeration.

/// Set of element indices, packed into 64-bit words. All sets attached to one
/// group share the same word count, so word-wise operations are well-defined.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = ElemSet::empty(universe);
        for i in 0..universe {
            s.insert(i as u32);
        }
        s
    }

    pub fn singleton(universe: usize, idx: u32) -> Self {
        let mut s = ElemSet::empty(universe);
        s.insert(idx);
        s
    }

    #[inline]
    pub fn insert(&mut self, idx: u32) {
        self.words[(idx / 64) as usize] |= 1u64 << (idx % 64);
    }

    #[inline]
    pub fn remove(&mut self, idx: u32) {
        self.words[(idx / 64) as usize] &= !(1u64 << (idx % 64));
    }

    #[inline]
    pub fn contains(&self, idx: u32) -> bool {
        self.words[(idx / 64) as usize] & (1u64 << (idx % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    /// Ascending iterator over member indices.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros();
                    w &= w - 1;
                    Some(wi as u32 * 64 + b)
                }
            })
        })
    }

    pub fn min(&self) -> Option<u32> {
        self.iter().next()
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_ops() {
        let mut a = ElemSet::empty(100);
        a.insert(3);
        a.insert(64);
        a.insert(99);
        let mut b = ElemSet::empty(100);
        b.insert(64);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.len(), 3);
        assert_eq!(a.intersect(&b).len(), 1);
        assert_eq!(a.union(&b).len(), 3);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![3, 99]);
        assert_eq!(a.min(), Some(3));
    }
}
