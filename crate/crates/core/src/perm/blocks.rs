use serde::Serialize;

use super::Permutation;
use crate::error::{Error, Result};

/// A partition of `0..n` into blocks, kept in canonical form: each block
/// sorted, blocks ordered by their smallest point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlockSystem {
    blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    block_of: Vec<usize>,
}

impl BlockSystem {
    pub fn from_blocks(blocks: Vec<Vec<usize>>, degree: usize) -> Result<Self> {
        let mut seen = vec![false; degree];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::Precondition("empty block".into()));
            }
            for &x in b {
                if x >= degree || seen[x] {
                    return Err(Error::Precondition(format!("point {x} repeated or out of range")));
                }
                seen[x] = true;
            }
        }
        if let Some(x) = seen.iter().position(|s| !s) {
            return Err(Error::Precondition(format!("point {x} not covered")));
        }
        Ok(Self::from_blocks_unchecked(blocks, degree))
    }

    pub(crate) fn from_blocks_unchecked(mut blocks: Vec<Vec<usize>>, degree: usize) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let mut block_of = vec![0; degree];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = i;
            }
        }
        BlockSystem { blocks, block_of }
    }

    /// Partition from a labelling `point ↦ label`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::BTreeMap::<usize, Vec<usize>>::new();
        for (x, &l) in labels.iter().enumerate() {
            map.entry(l).or_default().push(x);
        }
        Self::from_blocks_unchecked(map.into_values().collect(), labels.len())
    }

    pub fn singletons(degree: usize) -> Self {
        Self::from_blocks_unchecked((0..degree).map(|x| vec![x]).collect(), degree)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn has_equal_sizes(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Whether `g` maps every block onto a block.
    pub fn is_preserved_by(&self, g: &Permutation) -> bool {
        self.blocks.iter().all(|b| {
            let target = self.block_of[g.apply(b[0])];
            b.len() == self.blocks[target].len()
                && b.iter().all(|&x| self.block_of[g.apply(x)] == target)
        })
    }

    /// Whether `g` maps every block onto itself.
    pub fn is_fixed_by(&self, g: &Permutation) -> bool {
        (0..self.degree()).all(|x| self.block_of[g.apply(x)] == self.block_of[x])
    }

    /// Merges blocks of `self` according to a partition of its block indices.
    pub fn coarsen(&self, of_blocks: &BlockSystem) -> BlockSystem {
        let merged = of_blocks
            .blocks()
            .iter()
            .map(|group| group.iter().flat_map(|&b| self.blocks[b].iter().copied()).collect())
            .collect();
        Self::from_blocks_unchecked(merged, self.degree())
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &BlockSystem) -> bool {
        self.blocks.iter().all(|b| b.iter().all(|&x| coarser.block_of(x) == coarser.block_of(b[0])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_validation() {
        let b = BlockSystem::from_blocks(vec![vec![3, 1], vec![2, 0]], 4).unwrap();
        assert_eq!(b.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(b.block_of(3), 1);
        assert!(BlockSystem::from_blocks(vec![vec![0, 1]], 3).is_err());
        assert!(BlockSystem::from_blocks(vec![vec![0, 1], vec![1, 2]], 3).is_err());
        assert_eq!(BlockSystem::from_labels(&[5, 2, 5, 2]), b);
    }

    #[test]
    fn preservation() {
        let b = BlockSystem::from_blocks(vec![vec![0, 2], vec![1, 3]], 4).unwrap();
        let swap_blocks = Permutation::cycle(4);
        assert!(b.is_preserved_by(&swap_blocks));
        assert!(!b.is_fixed_by(&swap_blocks));
        let inside = Permutation::from_cycles(4, &[&[0, 2]]).unwrap();
        assert!(b.is_fixed_by(&inside));
        let breaks = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        assert!(!b.is_preserved_by(&breaks));
    }

    #[test]
    fn coarsening() {
        let fine = BlockSystem::from_blocks(vec![vec![0, 3], vec![1, 4], vec![2, 5]], 6).unwrap();
        let of_blocks = BlockSystem::from_blocks(vec![vec![0, 2], vec![1]], 3).unwrap();
        let coarse = fine.coarsen(&of_blocks);
        assert_eq!(coarse.blocks(), &[vec![0, 2, 3, 5], vec![1, 4]]);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
    }
}
