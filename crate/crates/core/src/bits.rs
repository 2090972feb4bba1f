//! Vertex sets packed into a single `u128` word.

/// A set of vertex indices below [`crate::graph::MAX_VERTICES`].
pub type VSet = u128;

#[inline]
pub fn bit(v: usize) -> VSet {
    1u128 << v
}

#[inline]
pub fn full(n: usize) -> VSet {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

#[inline]
pub fn contains(s: VSet, v: usize) -> bool {
    s >> v & 1 == 1
}

#[inline]
pub fn len(s: VSet) -> usize {
    s.count_ones() as usize
}

/// Iterates the members of `s` in increasing order.
pub fn iter(mut s: VSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(v)
        }
    })
}

pub fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> VSet {
    it.into_iter().fold(0, |acc, v| acc | bit(v))
}

pub fn to_vec(s: VSet) -> Vec<usize> {
    iter(s).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_in_order() {
        let s = from_iter([5, 0, 127, 64]);
        assert_eq!(to_vec(s), vec![0, 5, 64, 127]);
        assert_eq!(len(s), 4);
        assert!(contains(s, 127));
        assert_eq!(full(128), u128::MAX);
        assert_eq!(full(3), 0b111);
    }
}
