//! A minimal fixed-length bitset over `u64` words.
//!
//! The resolving-set engine spends almost all of its time OR-ing and
//! popcounting masks over vertex-pair indices, so the representation is a
//! plain word vector with no growth logic.

/// Fixed-length bitset. Length is set at construction and never changes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
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

    pub fn or_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// self &= !other
    pub fn clear_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Number of bits set in `self & other`.
    pub fn count_and(&self, other: &Bits) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// True when every bit in 0..len is set.
    pub fn all_ones(&self) -> bool {
        for (k, &w) in self.words.iter().enumerate() {
            let bits_here = (self.len - k * 64).min(64);
            let full = if bits_here == 64 {
                u64::MAX
            } else {
                (1u64 << bits_here) - 1
            };
            if w & full != full {
                return false;
            }
        }
        true
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            std::iter::successors(if w == 0 { None } else { Some(w) }, |w| {
                let w = w & (w - 1);
                if w == 0 {
                    None
                } else {
                    Some(w)
                }
            })
            .map(move |w| k * 64 + w.trailing_zeros() as usize)
        })
    }

    /// Indices of unset bits in 0..len, ascending.
    pub fn iter_zeros(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| !self.get(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_count() {
        let mut b = Bits::new(130);
        b.set(0);
        b.set(64);
        b.set(129);
        assert!(b.get(0) && b.get(64) && b.get(129));
        assert!(!b.get(1));
        assert_eq!(b.count_ones(), 3);
        assert_eq!(b.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
    }

    #[test]
    fn all_ones_respects_length() {
        let mut b = Bits::new(65);
        for i in 0..65 {
            b.set(i);
        }
        assert!(b.all_ones());
        let mut c = Bits::new(65);
        for i in 0..64 {
            c.set(i);
        }
        assert!(!c.all_ones());
    }

    #[test]
    fn or_and_clear() {
        let mut a = Bits::new(100);
        let mut b = Bits::new(100);
        a.set(3);
        b.set(3);
        b.set(99);
        a.or_assign(&b);
        assert_eq!(a.count_ones(), 2);
        assert_eq!(a.count_and(&b), 2);
        a.clear_assign(&b);
        assert!(a.is_empty());
    }
}
