//! Fixed-size bitsets for set-cover universes.

/// A bitset over a universe of fixed size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0u64; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn intersect_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Count of bits set in `self` but not in `other`.
    pub fn difference_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count_ones() == self.len
    }

    /// Lowest set bit in `self & !other`, if any.
    pub fn first_uncovered(&self, covered: &BitSet) -> Option<usize> {
        for (i, (a, b)) in self.words.iter().zip(&covered.words).enumerate() {
            let w = a & !b;
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn full(len: usize) -> Self {
        let mut b = BitSet::new(len);
        for w in b.words.iter_mut() {
            *w = u64::MAX;
        }
        let extra = b.words.len() * 64 - len;
        if extra > 0 {
            let last = b.words.len() - 1;
            b.words[last] >>= extra;
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut b = BitSet::new(130);
        b.set(0);
        b.set(64);
        b.set(129);
        assert!(b.get(0) && b.get(64) && b.get(129));
        assert!(!b.get(1));
        assert_eq!(b.count_ones(), 3);
        assert_eq!(b.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
    }

    #[test]
    fn subset_and_difference() {
        let mut a = BitSet::new(70);
        let mut b = BitSet::new(70);
        a.set(3);
        a.set(65);
        b.set(3);
        b.set(65);
        b.set(9);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert_eq!(b.difference_count(&a), 1);
        assert_eq!(a.intersect_count(&b), 2);
    }

    #[test]
    fn full_and_uncovered() {
        let f = BitSet::full(100);
        assert!(f.is_full());
        assert_eq!(f.count_ones(), 100);
        let mut covered = BitSet::new(100);
        for i in 0..70 {
            covered.set(i);
        }
        assert_eq!(f.first_uncovered(&covered), Some(70));
        assert_eq!(f.first_uncovered(&f), None);
    }
}
