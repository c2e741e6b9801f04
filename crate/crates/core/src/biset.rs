//! Words over `{L, R}` and the standard order on their positions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The face a position belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn as_char(self) -> char {
        match self {
            Side::L => 'L',
            Side::R => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<Side> {
        match c {
            'L' => Some(Side::L),
            'R' => Some(Side::R),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word over `{L, R}`, read as an ordered biset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LrWord(Vec<Side>);

impl LrWord {
    pub fn new(letters: Vec<Side>) -> Self {
        LrWord(letters)
    }

    pub fn empty() -> Self {
        LrWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Side] {
        &self.0
    }

    /// Letter at a 1-based position. Panics when out of range.
    pub fn at(&self, pos: usize) -> Side {
        self.0[pos - 1]
    }

    pub fn standard_order(&self) -> StdOrder {
        StdOrder::of(self.letters())
    }

    /// Subword at the positions of `positions`, read in increasing natural order.
    pub fn restrict(&self, positions: &[usize]) -> Result<LrWord> {
        let set = normalize_positions(positions, self.len())?;
        Ok(LrWord(set.into_iter().map(|p| self.at(p)).collect()))
    }

    /// All words of length `n`, in lexicographic order with `L < R`.
    pub fn all_of_length(n: usize) -> Vec<LrWord> {
        (0..1u64 << n)
            .map(|bits| {
                LrWord(
                    (0..n)
                        .map(|k| if bits >> (n - 1 - k) & 1 == 1 { Side::R } else { Side::L })
                        .collect(),
                )
            })
            .collect()
    }
}

impl FromStr for LrWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| Side::from_char(c).ok_or_else(|| Error::Parse(format!("`{c}` is not L or R in `{s}`"))))
            .collect::<Result<Vec<_>>>()
            .map(LrWord)
    }
}

impl fmt::Display for LrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Sorts and deduplicates a position list, checking it lies in `1..=len`.
pub(crate) fn normalize_positions(positions: &[usize], len: usize) -> Result<Vec<usize>> {
    let mut v = positions.to_vec();
    v.sort_unstable();
    v.dedup();
    if let Some(&p) = v.iter().find(|&&p| p == 0 || p > len) {
        return Err(Error::PositionOutOfRange { position: p, len });
    }
    Ok(v)
}

/// The standard order: left positions ascending, then right positions descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StdOrder {
    perm: Vec<usize>,
    // rank[p - 1] is the slot of position p in `perm`.
    rank: Vec<usize>,
}

impl StdOrder {
    pub fn of(letters: &[Side]) -> Self {
        let n = letters.len();
        let mut perm: Vec<usize> = (1..=n).filter(|&p| letters[p - 1] == Side::L).collect();
        perm.extend((1..=n).rev().filter(|&p| letters[p - 1] == Side::R));
        let mut rank = vec![0; n];
        for (slot, &p) in perm.iter().enumerate() {
            rank[p - 1] = slot;
        }
        StdOrder { perm, rank }
    }

    /// Positions listed in increasing order.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Zero-based slot of a position.
    pub fn rank(&self, pos: usize) -> usize {
        self.rank[pos - 1]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.rank(i) < self.rank(j)
    }

    pub fn min_of<I: IntoIterator<Item = usize>>(&self, set: I) -> Option<usize> {
        set.into_iter().min_by_key(|&p| self.rank(p))
    }

    pub fn max_of<I: IntoIterator<Item = usize>>(&self, set: I) -> Option<usize> {
        set.into_iter().max_by_key(|&p| self.rank(p))
    }

    /// Sorts positions in place by the standard order.
    pub fn sort(&self, positions: &mut [usize]) {
        positions.sort_by_key(|&p| self.rank(p));
    }

    /// True when the positions occupy consecutive slots. The empty set is an interval.
    pub fn is_interval(&self, set: &[usize]) -> bool {
        let mut ranks: Vec<usize> = set.iter().map(|&p| self.rank(p)).collect();
        ranks.sort_unstable();
        ranks.dedup();
        match (ranks.first(), ranks.last()) {
            (Some(&lo), Some(&hi)) => hi - lo + 1 == ranks.len(),
            _ => true,
        }
    }

    /// Positions strictly between two bounds, listed in increasing order.
    /// `None` stands for the virtual minimum (lower) or maximum (upper).
    pub fn between(&self, lower: Option<usize>, upper: Option<usize>) -> Vec<usize> {
        let start = lower.map_or(0, |p| self.rank(p) + 1);
        let end = upper.map_or(self.perm.len(), |p| self.rank(p));
        if start >= end {
            return Vec::new();
        }
        self.perm[start..end].to_vec()
    }

    pub fn before(&self, i: usize) -> Vec<usize> {
        self.between(None, Some(i))
    }

    pub fn after(&self, i: usize) -> Vec<usize> {
        self.between(Some(i), None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> LrWord {
        s.parse().unwrap()
    }

    #[test]
    fn standard_order_examples() {
        assert_eq!(w("RLRRL").standard_order().perm(), &[2, 5, 4, 3, 1]);
        assert_eq!(w("LL").standard_order().perm(), &[1, 2]);
        assert_eq!(w("RRR").standard_order().perm(), &[3, 2, 1]);
        assert!(w("").standard_order().is_empty());
    }

    #[test]
    fn restrict_examples() {
        let a = w("LRLL");
        assert_eq!(a.restrict(&[1, 3, 4]).unwrap(), w("LLL"));
        assert_eq!(a.restrict(&[]).unwrap(), w(""));
        assert_eq!(a.restrict(&[2]).unwrap(), w("R"));
        assert_eq!(
            a.restrict(&[5]),
            Err(Error::PositionOutOfRange { position: 5, len: 4 })
        );
    }

    #[test]
    fn order_queries() {
        let o = w("RLRRL").standard_order();
        assert!(o.lt(2, 5) && o.lt(4, 1));
        assert_eq!(o.min_of([1, 3, 4]), Some(4));
        assert_eq!(o.max_of([1, 3, 4]), Some(1));
        assert!(o.is_interval(&[5, 3, 4]));
        assert!(!o.is_interval(&[2, 4]));
        assert_eq!(o.between(Some(5), Some(1)), vec![4, 3]);
        assert_eq!(o.before(4), vec![2, 5]);
        assert_eq!(o.after(2), vec![5, 4, 3, 1]);
        assert!(o.between(Some(1), None).is_empty());
    }

    #[test]
    fn parse_rejects_other_letters() {
        assert!("LXR".parse::<LrWord>().is_err());
        assert_eq!(w("LRR").to_string(), "LRR");
    }
}
