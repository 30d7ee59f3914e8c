//! Sparse vectors over F2, stored as sorted index lists.

/// Sorted set of indices; XOR is symmetric difference.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseVec {
    indices: Vec<u32>,
}

impl SparseVec {
    pub fn from_sorted(indices: Vec<u32>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        SparseVec { indices }
    }

    pub fn from_unsorted(mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        SparseVec { indices }
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.indices.last().copied()
    }

    pub fn remove(&mut self, i: u32) -> bool {
        match self.indices.binary_search(&i) {
            Ok(pos) => {
                self.indices.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.indices.iter().copied()
    }

    /// `self ^= other`, returning the indices that were toggled on.
    pub fn xor_assign(&mut self, other: &SparseVec) -> Vec<u32> {
        let mut merged = Vec::with_capacity(self.indices.len() + other.indices.len());
        let mut toggled_on = Vec::new();
        let (mut a, mut b) = (0, 0);
        while a < self.indices.len() && b < other.indices.len() {
            match self.indices[a].cmp(&other.indices[b]) {
                std::cmp::Ordering::Less => {
                    merged.push(self.indices[a]);
                    a += 1;
                }
                std::cmp::Ordering::Greater => {
                    merged.push(other.indices[b]);
                    toggled_on.push(other.indices[b]);
                    b += 1;
                }
                std::cmp::Ordering::Equal => {
                    a += 1;
                    b += 1;
                }
            }
        }
        merged.extend_from_slice(&self.indices[a..]);
        for &i in &other.indices[b..] {
            merged.push(i);
            toggled_on.push(i);
        }
        self.indices = merged;
        toggled_on
    }
}

impl FromIterator<u32> for SparseVec {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        SparseVec::from_unsorted(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xor_is_symmetric_difference() {
        let mut a = SparseVec::from_sorted(vec![1, 3, 5]);
        let b = SparseVec::from_sorted(vec![3, 4, 5, 6]);
        let on = a.xor_assign(&b);
        assert_eq!(a, SparseVec::from_sorted(vec![1, 4, 6]));
        assert_eq!(on, vec![4, 6]);
    }

    #[test]
    fn xor_with_self_is_zero() {
        let mut a = SparseVec::from_sorted(vec![2, 7]);
        let b = a.clone();
        a.xor_assign(&b);
        assert!(a.is_empty());
    }
}
