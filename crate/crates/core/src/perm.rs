//! Permutations of at most 16 points packed four bits per entry, with
//! lexicographic ranking.

use std::fmt;

pub const MAX_POINTS: usize = 16;

/// `n!` for `n <= 20`.
pub const fn factorial(n: usize) -> u64 {
    let mut acc = 1u64;
    let mut i = 2;
    while i <= n {
        acc *= i as u64;
        i += 1;
    }
    acc
}

const FACT: [u64; MAX_POINTS + 1] = {
    let mut t = [0u64; MAX_POINTS + 1];
    let mut i = 0;
    while i <= MAX_POINTS {
        t[i] = factorial(i);
        i += 1;
    }
    t
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedPerm {
    bits: u64,
    len: u8,
}

impl PackedPerm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        let mut bits = 0;
        for i in 0..n {
            bits |= (i as u64) << (4 * i);
        }
        Self { bits, len: n as u8 }
    }

    /// Packs `images`, which must be a permutation of `0..images.len()`.
    pub fn from_slice(images: &[usize]) -> Self {
        assert!(images.len() <= MAX_POINTS);
        let mut bits = 0;
        for (i, &v) in images.iter().enumerate() {
            debug_assert!(v < images.len());
            bits |= (v as u64) << (4 * i);
        }
        Self {
            bits,
            len: images.len() as u8,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> usize {
        ((self.bits >> (4 * i)) & 0xf) as usize
    }

    #[inline]
    pub fn swap(&mut self, i: usize, j: usize) {
        let (a, b) = (self.get(i) as u64, self.get(j) as u64);
        let d = a ^ b;
        self.bits ^= (d << (4 * i)) | (d << (4 * j));
    }

    pub fn to_vec(&self) -> Vec<usize> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    /// Position in the lexicographic order of all permutations of `0..n`.
    #[inline]
    pub fn rank(&self) -> u64 {
        let n = self.len();
        let mut unused: u32 = (1u32 << n) - 1;
        let mut r = 0;
        for i in 0..n {
            let v = self.get(i);
            let smaller = (unused & ((1u32 << v) - 1)).count_ones() as u64;
            r += smaller * FACT[n - 1 - i];
            unused &= !(1u32 << v);
        }
        r
    }

    pub fn unrank(n: usize, mut rank: u64) -> Self {
        assert!(n <= MAX_POINTS && rank < FACT[n]);
        let mut pool: Vec<usize> = (0..n).collect();
        let mut bits = 0;
        for i in 0..n {
            let f = FACT[n - 1 - i];
            let q = (rank / f) as usize;
            rank %= f;
            bits |= (pool.remove(q) as u64) << (4 * i);
        }
        Self { bits, len: n as u8 }
    }

    /// Advances to the lexicographic successor; false at the last one.
    pub fn advance(&mut self) -> bool {
        let n = self.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && self.get(i - 1) > self.get(i) {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while self.get(j) < self.get(i - 1) {
            j -= 1;
        }
        self.swap(i - 1, j);
        let (mut a, mut b) = (i, n - 1);
        while a < b {
            self.swap(a, b);
            a += 1;
            b -= 1;
        }
        true
    }
}

impl fmt::Debug for PackedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn enumeration_matches_rank_order() {
        for n in 0..=6 {
            let mut p = PackedPerm::identity(n);
            let mut count = 0u64;
            loop {
                assert_eq!(p.rank(), count);
                assert_eq!(PackedPerm::unrank(n, count), p);
                count += 1;
                if !p.advance() {
                    break;
                }
            }
            assert_eq!(count, factorial(n));
        }
    }

    #[test]
    fn sixteen_points_fit() {
        let v: Vec<usize> = (0..16).rev().collect();
        let p = PackedPerm::from_slice(&v);
        assert_eq!(p.to_vec(), v);
        assert_eq!(p.rank(), factorial(16) - 1);
    }

    proptest! {
        #[test]
        fn swap_matches_vec_swap(n in 2usize..=12, r in any::<u64>(), i in 0usize..12, j in 0usize..12) {
            let (i, j) = (i % n, j % n);
            let mut p = PackedPerm::unrank(n, r % factorial(n));
            let mut v = p.to_vec();
            p.swap(i, j);
            v.swap(i, j);
            prop_assert_eq!(p.to_vec(), v.clone());
            prop_assert_eq!(PackedPerm::from_slice(&v).rank(), p.rank());
        }
    }
}
