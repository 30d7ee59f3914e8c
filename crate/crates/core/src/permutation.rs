//! Permutations of level indices `{0, ..., n}`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Checks bijectivity of a mapping given as `[p(0), ..., p(n)]`.
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &image in &mapping {
            if image >= n {
                return Err(Error::NotAPermutation {
                    expected: n,
                    reason: format!("image {image} out of range"),
                });
            }
            if seen[image] {
                return Err(Error::NotAPermutation {
                    expected: n,
                    reason: format!("image {image} repeated"),
                });
            }
            seen[image] = true;
        }
        Ok(Permutation(mapping))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The reverse-list bijection `i -> n - 1 - i`.
    pub fn reverse(n: usize) -> Self {
        Permutation((0..n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &image) in self.0.iter().enumerate() {
            inv[image] = i;
        }
        Permutation(inv)
    }

    /// `self` after `other`: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let mapping: Vec<usize> = serde_json::from_str(text)?;
        Permutation::new(mapping)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("permutation serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_composes_to_identity() {
        let p = Permutation::new(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(4));
        assert_eq!(p.inverse().compose(&p), Permutation::identity(4));
    }

    #[test]
    fn rejects_repeats_and_out_of_range() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
    }

    #[test]
    fn reverse_is_self_inverse() {
        let r = Permutation::reverse(5);
        assert_eq!(r.inverse(), r);
    }
}
