use std::collections::btree_map;
use std::collections::BTreeMap;

/// A finite multiset with exact multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset<T: Ord>(BTreeMap<T, u64>);

impl<T: Ord> Default for Multiset<T> {
    fn default() -> Self {
        Multiset(BTreeMap::new())
    }
}

impl<T: Ord> Multiset<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, item: T) {
        self.insert_n(item, 1);
    }

    pub fn insert_n(&mut self, item: T, n: u64) {
        if n > 0 {
            *self.0.entry(item).or_insert(0) += n;
        }
    }

    pub fn extend_from(&mut self, other: Multiset<T>) {
        for (item, n) in other.0 {
            self.insert_n(item, n);
        }
    }

    pub fn multiplicity(&self, item: &T) -> u64 {
        self.0.get(item).copied().unwrap_or(0)
    }

    /// Total number of elements, counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct elements with their multiplicities, in ascending order.
    pub fn iter(&self) -> btree_map::Iter<'_, T, u64> {
        self.0.iter()
    }
}

impl<T: Ord> FromIterator<T> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for x in iter {
            m.insert(x);
        }
        m
    }
}

impl<T: Ord> IntoIterator for Multiset<T> {
    type Item = (T, u64);
    type IntoIter = btree_map::IntoIter<T, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, T: Ord> IntoIterator for &'a Multiset<T> {
    type Item = (&'a T, &'a u64);
    type IntoIter = btree_map::Iter<'a, T, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_with_multiplicity() {
        let mut m: Multiset<&str> = ["a", "b", "a"].into_iter().collect();
        assert_eq!(m.len(), 3);
        assert_eq!(m.distinct(), 2);
        assert_eq!(m.multiplicity(&"a"), 2);
        m.insert_n("c", 0);
        assert_eq!(m.distinct(), 2);
        let other: Multiset<&str> = ["a", "a", "b"].into_iter().collect();
        assert_eq!(m, other);
    }
}
