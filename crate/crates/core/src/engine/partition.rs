use std::collections::HashMap;
use std::hash::Hash;

/// A partition of `0..n` with canonical block numbering: blocks are
/// numbered in order of their smallest member.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Groups indices with equal keys.
    pub fn from_keys<K: Eq + Hash>(keys: &[K]) -> Self {
        let mut ids: HashMap<&K, usize> = HashMap::new();
        let mut block_of = Vec::with_capacity(keys.len());
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, k) in keys.iter().enumerate() {
            let next = ids.len();
            let b = *ids.entry(k).or_insert(next);
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(i);
            block_of.push(b);
        }
        Partition { block_of, blocks }
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_keys(&(0..n).collect::<Vec<_>>())
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn same(&self, i: usize, j: usize) -> bool {
        self.block_of[i] == self.block_of[j]
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&i| coarser.same(i, b[0])))
    }

    /// The induced partition on the listed elements, as groups of positions
    /// into `elems`.
    pub fn restrict(&self, elems: &[usize]) -> Vec<Vec<usize>> {
        let keys: Vec<usize> = elems.iter().map(|&i| self.block_of[i]).collect();
        Partition::from_keys(&keys).blocks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_numbering() {
        let p = Partition::from_keys(&["x", "y", "x", "z", "y"]);
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1, 4], vec![3]]);
        assert_eq!(p, Partition::from_keys(&[7, 3, 7, 1, 3]));
        assert!(Partition::discrete(5).refines(&p));
        assert!(!p.refines(&Partition::discrete(5)));
        assert_eq!(p.restrict(&[4, 1, 3]), vec![vec![0, 1], vec![2]]);
    }
}
