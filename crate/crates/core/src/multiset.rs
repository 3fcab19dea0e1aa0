//! Finite multisets with canonical ordering.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Multiset<T: Ord> {
    counts: BTreeMap<T, u32>,
}

impl<T: Ord> Default for Multiset<T> {
    fn default() -> Self {
        Multiset {
            counts: BTreeMap::new(),
        }
    }
}

impl<T: Ord + Clone> Multiset<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(x: T) -> Self {
        let mut m = Self::new();
        m.insert(x, 1);
        m
    }

    pub fn insert(&mut self, x: T, n: u32) {
        if n > 0 {
            *self.counts.entry(x).or_insert(0) += n;
        }
    }

    /// Removes one occurrence; returns false if `x` was absent.
    pub fn remove_one(&mut self, x: &T) -> bool {
        match self.counts.get_mut(x) {
            Some(n) if *n > 1 => {
                *n -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(x);
                true
            }
            None => false,
        }
    }

    pub fn count(&self, x: &T) -> u32 {
        self.counts.get(x).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of elements, counted with multiplicity.
    pub fn size(&self) -> usize {
        self.counts.values().map(|&n| n as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, u32)> {
        self.counts.iter().map(|(k, &v)| (k, v))
    }

    /// Elements with multiplicity, in order.
    pub fn elements(&self) -> impl Iterator<Item = &T> {
        self.counts
            .iter()
            .flat_map(|(k, &v)| std::iter::repeat_n(k, v as usize))
    }

    pub fn support(&self) -> impl Iterator<Item = &T> {
        self.counts.keys()
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, n) in other.iter() {
            out.insert(k.clone(), n);
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (k, n) in self.iter() {
            out.insert(k.clone(), n.min(other.count(k)));
        }
        out
    }

    /// Truncated difference.
    pub fn minus(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (k, n) in self.iter() {
            out.insert(k.clone(), n.saturating_sub(other.count(k)));
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.iter().all(|(k, n)| n <= other.count(k))
    }

    /// Exact difference, defined only when `other` is contained in `self`.
    pub fn checked_minus(&self, other: &Self) -> Option<Self> {
        other.is_subset(self).then(|| self.minus(other))
    }

    pub fn map<U: Ord + Clone>(&self, f: impl Fn(&T) -> U) -> Multiset<U> {
        let mut out = Multiset::new();
        for (k, n) in self.iter() {
            out.insert(f(k), n);
        }
        out
    }
}

impl<T: Ord + Clone> FromIterator<T> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for x in iter {
            m.insert(x, 1);
        }
        m
    }
}

impl<T: Ord + fmt::Display> fmt::Display for Multiset<T> {
    /// Juxtaposed elements with `^n` exponents; `∅` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "∅");
        }
        for (k, &n) in &self.counts {
            if n == 1 {
                write!(f, "{k}")?;
            } else {
                write!(f, "{k}^{n}")?;
            }
        }
        Ok(())
    }
}

/// All multisets over `items` with at most `k` elements.
pub fn multisets_up_to<T: Ord + Clone>(items: &[T], k: usize) -> Vec<Multiset<T>> {
    let mut out = vec![Multiset::new()];
    fn go<T: Ord + Clone>(
        items: &[T],
        start: usize,
        left: usize,
        cur: &mut Multiset<T>,
        out: &mut Vec<Multiset<T>>,
    ) {
        if left == 0 {
            return;
        }
        for i in start..items.len() {
            cur.insert(items[i].clone(), 1);
            out.push(cur.clone());
            go(items, i, left - 1, cur, out);
            cur.remove_one(&items[i]);
        }
    }
    let mut cur = Multiset::new();
    go(items, 0, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a: Multiset<char> = "aab".chars().collect();
        let b: Multiset<char> = "abc".chars().collect();
        assert_eq!(a.intersection(&b), "ab".chars().collect());
        assert_eq!(a.minus(&b), "a".chars().collect());
        assert_eq!(a.sum(&b).size(), 6);
        assert!(a.checked_minus(&b).is_none());
        assert_eq!(a.to_string(), "a^2b");
        assert_eq!(Multiset::<char>::new().to_string(), "∅");
    }

    #[test]
    fn enumeration_counts() {
        // multisets of size <= 3 over 2 items: 1 + 2 + 3 + 4
        assert_eq!(multisets_up_to(&['x', 'y'], 3).len(), 10);
        assert_eq!(multisets_up_to::<char>(&[], 3).len(), 1);
        let all = multisets_up_to(&['x', 'y', 'z'], 2);
        let uniq: std::collections::BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), uniq.len());
        assert_eq!(all.len(), 10);
    }
}
