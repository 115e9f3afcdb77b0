//! Sparse GF(2) column arithmetic shared by the reductions.

use std::collections::HashMap;

/// A GF(2) vector stored as its sorted support.
pub(crate) type Column = Vec<usize>;

/// `col += other` over GF(2) (symmetric difference of sorted supports).
pub(crate) fn add_assign(col: &mut Column, other: &[usize]) {
    let mut out = Vec::with_capacity(col.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < col.len() && j < other.len() {
        match col[i].cmp(&other[j]) {
            std::cmp::Ordering::Less => {
                out.push(col[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(other[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&col[i..]);
    out.extend_from_slice(&other[j..]);
    *col = out;
}

/// Incrementally maintained echelon basis, keyed by the largest support index.
#[derive(Debug, Default)]
pub(crate) struct EchelonBasis {
    by_pivot: HashMap<usize, Column>,
}

impl EchelonBasis {
    /// Adds `col` to the span; returns `true` if it raised the rank.
    pub(crate) fn insert(&mut self, mut col: Column) -> bool {
        while let Some(&pivot) = col.last() {
            match self.by_pivot.get(&pivot) {
                Some(existing) => add_assign(&mut col, existing),
                None => {
                    self.by_pivot.insert(pivot, col);
                    return true;
                }
            }
        }
        false
    }

    pub(crate) fn rank(&self) -> usize {
        self.by_pivot.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_difference() {
        let mut a = vec![0, 2, 5];
        add_assign(&mut a, &[2, 3, 5, 7]);
        assert_eq!(a, vec![0, 3, 7]);
    }

    #[test]
    fn echelon_rank() {
        let mut basis = EchelonBasis::default();
        assert!(basis.insert(vec![0, 1]));
        assert!(basis.insert(vec![1, 2]));
        assert!(!basis.insert(vec![0, 2]));
        assert!(!basis.insert(vec![]));
        assert!(basis.insert(vec![3]));
        assert_eq!(basis.rank(), 3);
    }
}
