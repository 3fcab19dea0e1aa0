//! Plain partition refinement on labelled transition systems.

use std::collections::HashMap;
use std::hash::Hash;

use super::partition::Partition;

/// An LTS with opaque labels over states `0..n`.
#[derive(Clone, Debug)]
pub struct PlainLts<L> {
    /// Initial classes; states in different classes are never related.
    pub classes: Vec<usize>,
    pub succ: Vec<Vec<(L, usize)>>,
    /// When set, refinement stops after this many rounds.  Used for
    /// explorations cut at a depth, where the result is exact only for
    /// the roots.
    pub max_rounds: Option<usize>,
}

impl<L> PlainLts<L> {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Outcome of [`ks_refine`]: the partition and the number of rounds run.
#[derive(Clone, Debug)]
pub struct KsResult {
    pub partition: Partition,
    pub rounds: usize,
}

/// Coarsest stable refinement of the initial classes.
pub fn ks_refine<L: Ord + Clone + Hash>(lts: &PlainLts<L>) -> KsResult {
    let mut ids: HashMap<&L, usize> = HashMap::new();
    let succ: Vec<Vec<(usize, usize)>> = lts
        .succ
        .iter()
        .map(|es| {
            es.iter()
                .map(|(l, j)| {
                    let next = ids.len();
                    (*ids.entry(l).or_insert(next), *j)
                })
                .collect()
        })
        .collect();
    let mut part = Partition::from_keys(&lts.classes);
    let mut rounds = 0;
    loop {
        if lts.max_rounds.is_some_and(|r| rounds >= r) {
            break;
        }
        let keys: Vec<(usize, Vec<(usize, usize)>)> = succ
            .iter()
            .enumerate()
            .map(|(i, es)| {
                let mut sig: Vec<_> = es.iter().map(|&(l, j)| (l, part.block_of(j))).collect();
                sig.sort_unstable();
                sig.dedup();
                (part.block_of(i), sig)
            })
            .collect();
        let next = Partition::from_keys(&keys);
        rounds += 1;
        if next.num_blocks() == part.num_blocks() {
            break;
        }
        part = next;
    }
    KsResult {
        partition: part,
        rounds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lts(edges: &[(usize, char, usize)], n: usize) -> PlainLts<char> {
        let mut succ = vec![Vec::new(); n];
        for &(s, l, t) in edges {
            succ[s].push((l, t));
        }
        PlainLts {
            classes: vec![0; n],
            succ,
            max_rounds: None,
        }
    }

    #[test]
    fn classic_non_bisimilar_pair() {
        // a.(b + c) versus a.b + a.c
        let l = lts(
            &[
                (0, 'a', 1),
                (1, 'b', 2),
                (1, 'c', 2),
                (3, 'a', 4),
                (3, 'a', 5),
                (4, 'b', 2),
                (5, 'c', 2),
            ],
            6,
        );
        let r = ks_refine(&l);
        assert!(!r.partition.same(0, 3));
    }

    #[test]
    fn cycles_collapse() {
        let l = lts(&[(0, 'a', 0), (1, 'a', 2), (2, 'a', 1)], 3);
        let r = ks_refine(&l);
        assert_eq!(r.partition.num_blocks(), 1);
    }

    #[test]
    fn rounds_are_bounded() {
        // a chain a^3 versus a^2: separated only at round 3
        let mut l = lts(
            &[
                (0, 'a', 1),
                (1, 'a', 2),
                (2, 'a', 3),
                (4, 'a', 5),
                (5, 'a', 6),
            ],
            7,
        );
        assert!(!ks_refine(&l).partition.same(0, 4));
        l.max_rounds = Some(2);
        assert!(ks_refine(&l).partition.same(0, 4));
        l.max_rounds = Some(3);
        assert!(!ks_refine(&l).partition.same(0, 4));
    }
}
