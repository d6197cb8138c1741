//! Word-packed bitset helpers shared by the graph representation and the
//! subset-scan kernel. Deliberately minimal: fixed width decided at
//! construction, no growth, no iterator adaptors beyond what the solvers need.

/// Number of 64-bit words needed to hold `bits` bits.
#[inline]
pub fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
pub fn get(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub fn set(words: &mut [u64], i: usize) {
    words[i / 64] |= 1u64 << (i % 64);
}

#[inline]
pub fn clear(words: &mut [u64], i: usize) {
    words[i / 64] &= !(1u64 << (i % 64));
}

/// `a |= b` over equal-length slices.
#[inline]
pub fn or_assign(a: &mut [u64], b: &[u64]) {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        *x |= *y;
    }
}

/// Does `a | b` cover `full`? (i.e. would adding `b` complete the cover)
#[inline]
pub fn or_covers(a: &[u64], b: &[u64], full: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .zip(full)
        .all(|((x, y), f)| (x | y) & f == *f)
}

#[inline]
pub fn covers(a: &[u64], full: &[u64]) -> bool {
    a.iter().zip(full).all(|(x, f)| x & f == *f)
}

#[inline]
pub fn count_ones(words: &[u64]) -> u32 {
    words.iter().map(|w| w.count_ones()).sum()
}

/// Indices of set bits, ascending.
pub fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rem = w;
        std::iter::from_fn(move || {
            if rem == 0 {
                None
            } else {
                let b = rem.trailing_zeros() as usize;
                rem &= rem - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip() {
        let mut w = vec![0u64; words_for(130)];
        for i in [0, 63, 64, 100, 129] {
            assert!(!get(&w, i));
            set(&mut w, i);
            assert!(get(&w, i));
        }
        assert_eq!(count_ones(&w), 5);
        assert_eq!(ones(&w).collect::<Vec<_>>(), vec![0, 63, 64, 100, 129]);
        clear(&mut w, 64);
        assert!(!get(&w, 64));
    }

    #[test]
    fn cover_checks() {
        let full = vec![0b1111u64];
        let a = vec![0b0101u64];
        let b = vec![0b1010u64];
        assert!(!covers(&a, &full));
        assert!(or_covers(&a, &b, &full));
        let mut c = a.clone();
        or_assign(&mut c, &b);
        assert!(covers(&c, &full));
    }
}
