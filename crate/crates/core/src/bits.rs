//! Fixed-width bit sets over `usize` indices.
//!
//! Internal helper used by the path-statistic oracle and the graph
//! routines, where sets of states (or of product vertices) are unioned,
//! compared, and hashed in tight loops. Width is fixed at construction;
//! all operands of a binary operation must share it.

use std::collections::BTreeSet;

/// A fixed-width set of small indices backed by `u64` words.
///
/// Trailing bits beyond the width are always zero, so derived equality,
/// ordering, and hashing agree with set equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) struct Bits {
    words: Box<[u64]>,
}

impl Bits {
    /// The empty set over a universe of `width` indices.
    pub fn empty(width: usize) -> Self {
        Bits {
            words: vec![0u64; width.div_ceil(64)].into_boxed_slice(),
        }
    }

    /// Builds a set over `width` indices from an index iterator.
    pub fn from_indices(width: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Bits::empty(width);
        for i in indices {
            b.insert(i);
        }
        b
    }

    /// Inserts index `i`.
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    /// In-place union with `other`.
    pub fn union_with(&mut self, other: &Bits) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    /// The union of `self` and `other` as a new set.
    pub fn union(&self, other: &Bits) -> Bits {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    /// Iterates the member indices in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rem = w;
            std::iter::from_fn(move || {
                if rem == 0 {
                    None
                } else {
                    let bit = rem.trailing_zeros() as usize;
                    rem &= rem - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }

    /// Collects the members into an ordered set.
    pub fn to_btree(&self) -> BTreeSet<usize> {
        self.iter_ones().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_operations() {
        let mut a = Bits::empty(130);
        a.insert(0);
        a.insert(64);
        a.insert(129);
        assert_eq!(a.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);

        let mut u = Bits::from_indices(130, [64]);
        u.union_with(&Bits::from_indices(130, [1]));
        assert_eq!(u.to_btree(), BTreeSet::from([1, 64]));
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let a = Bits::from_indices(70, [3, 69]);
        let b = Bits::from_indices(70, [69, 3]);
        assert_eq!(a, b);
        assert_ne!(a, Bits::empty(70));
    }
}
