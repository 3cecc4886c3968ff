//! Fixed-width bit rows used for adjacency and candidate sets.

/// Number of `u64` words needed to hold `len` bits.
#[inline]
pub const fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

/// A set of vertices in `[0, len)` stored as packed bits.
///
/// Bits at positions `>= len` are always zero, so word-wise equality is set
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; words_for(len)], len }
    }

    /// The set `{0, ..., len-1}`.
    pub fn full(len: usize) -> Self {
        let mut s = BitSet { words: vec![u64::MAX; words_for(len)], len };
        s.clear_tail();
        s
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitSet::new(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub(crate) fn from_words(words: Vec<u64>, len: usize) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        let mut s = BitSet { words, len };
        s.clear_tail();
        s
    }

    fn clear_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Universe size (not the cardinality).
    #[inline]
    pub fn capacity(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / 64] &= !(1u64 << (i % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// `self ∩ row`, where `row` has the same word width.
    pub fn intersect_row(&mut self, row: &[u64]) {
        debug_assert_eq!(row.len(), self.words.len());
        for (a, b) in self.words.iter_mut().zip(row) {
            *a &= b;
        }
    }

    /// `self ∖ row`.
    pub fn subtract_row(&mut self, row: &[u64]) {
        debug_assert_eq!(row.len(), self.words.len());
        for (a, b) in self.words.iter_mut().zip(row) {
            *a &= !b;
        }
    }

    /// `|self ∩ row|` without allocating.
    pub fn count_and(&self, row: &[u64]) -> usize {
        self.words
            .iter()
            .zip(row)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `|self ∖ row|` without allocating.
    pub fn count_and_not(&self, row: &[u64]) -> usize {
        self.words
            .iter()
            .zip(row)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> Ones<'_> {
        Ones { words: &self.words, idx: 0, cur: self.words.first().copied().unwrap_or(0) }
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Iterate the set bits of a raw word row.
pub(crate) fn row_ones(row: &[u64]) -> Ones<'_> {
    Ones { words: row, idx: 0, cur: row.first().copied().unwrap_or(0) }
}
