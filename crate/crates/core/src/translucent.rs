//! Translucent words: `{L, R}`-words with a mask marking each position
//! translucent (`0`) or opaque (`1`). They compose like morphisms: the source
//! of `t` is its whole word, the target is the subword at translucent positions.

use std::fmt;
use std::str::FromStr;

use crate::biset::{normalize_positions, LrWord, Side, StdOrder};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TranslucentWord {
    alpha: LrWord,
    mask: Vec<bool>,
}

/// Result of the exchange construction, see [`exchange`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exchange {
    pub r: TranslucentWord,
    pub s: TranslucentWord,
    /// Index of the exchange point inside `r`.
    pub index: usize,
}

impl TranslucentWord {
    pub fn new(alpha: LrWord, mask: Vec<bool>) -> Result<Self> {
        if alpha.len() != mask.len() {
            return Err(Error::LengthMismatch { letters: alpha.len(), mask: mask.len() });
        }
        Ok(TranslucentWord { alpha, mask })
    }

    /// The fully translucent word on `alpha`: the identity at `alpha`.
    pub fn identity(alpha: LrWord) -> Self {
        let mask = vec![false; alpha.len()];
        TranslucentWord { alpha, mask }
    }

    /// The fully opaque word on `alpha`.
    pub fn opaque(alpha: LrWord) -> Self {
        let mask = vec![true; alpha.len()];
        TranslucentWord { alpha, mask }
    }

    pub fn empty() -> Self {
        Self::identity(LrWord::empty())
    }

    pub fn alpha(&self) -> &LrWord {
        &self.alpha
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }

    pub fn side(&self, pos: usize) -> Side {
        self.alpha.at(pos)
    }

    pub fn is_opaque(&self, pos: usize) -> bool {
        self.mask[pos - 1]
    }

    pub fn standard_order(&self) -> StdOrder {
        self.alpha.standard_order()
    }

    /// `[t]_0`, in increasing natural order. This is also the increasing
    /// embedding of the target into the source.
    pub fn translucent_positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&p| !self.is_opaque(p)).collect()
    }

    /// `[t]_1`, in increasing natural order.
    pub fn opaque_positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&p| self.is_opaque(p)).collect()
    }

    pub fn opaque_count(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn source(&self) -> LrWord {
        self.alpha.clone()
    }

    pub fn target(&self) -> LrWord {
        LrWord::new(self.translucent_positions().into_iter().map(|p| self.side(p)).collect())
    }

    /// `self ∘ t`: the mask of `self` overwrites the translucent positions of `t`.
    pub fn compose(&self, t: &TranslucentWord) -> Result<TranslucentWord> {
        compose(self, t)
    }

    pub fn restrict(&self, positions: &[usize]) -> Result<TranslucentWord> {
        let set = normalize_positions(positions, self.len())?;
        Ok(TranslucentWord {
            alpha: LrWord::new(set.iter().map(|&p| self.side(p)).collect()),
            mask: set.iter().map(|&p| self.is_opaque(p)).collect(),
        })
    }

    /// Zeroes the mask on `positions`.
    pub fn translucidate(&self, positions: &[usize]) -> Result<TranslucentWord> {
        let set = normalize_positions(positions, self.len())?;
        let mut out = self.clone();
        for p in set {
            out.mask[p - 1] = false;
        }
        Ok(out)
    }

    /// All pairs `(r, s)` with `r ∘ s = self`, one per set `J ⊇ [t]_0`, via
    /// `r = restrict(t, J)` and `s = translucidate(t, J)`. Sorted by `J`
    /// compared as increasing sequences.
    pub fn factorizations(&self) -> Vec<(TranslucentWord, TranslucentWord)> {
        let mut cuts: Vec<Vec<usize>> = subsets_containing(self);
        cuts.sort();
        cuts.iter()
            .map(|j| (self.restrict(j).expect("in range"), self.translucidate(j).expect("in range")))
            .collect()
    }

    /// Restrictions to the positions strictly `⋖`-before and `⋖`-after a
    /// translucent position.
    pub fn split(&self, i: usize) -> Result<(TranslucentWord, TranslucentWord)> {
        self.check_translucent(i)?;
        let order = self.standard_order();
        Ok((self.restrict(&order.before(i))?, self.restrict(&order.after(i))?))
    }

    /// Maximal `⋖`-contiguous runs of opaque positions, listed in `⋖` order.
    /// Each run is given in increasing natural order.
    pub fn opaque_intervals(&self) -> Vec<Vec<usize>> {
        let mut runs: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        for &p in self.standard_order().perm() {
            if self.is_opaque(p) {
                current.push(p);
            } else if !current.is_empty() {
                runs.push(std::mem::take(&mut current));
            }
        }
        if !current.is_empty() {
            runs.push(current);
        }
        for run in &mut runs {
            run.sort_unstable();
        }
        runs
    }

    fn check_translucent(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(Error::PositionOutOfRange { position: i, len: self.len() });
        }
        if self.is_opaque(i) {
            return Err(Error::NotTranslucent(i));
        }
        Ok(())
    }
}

/// All `J` with `[t]_0 ⊆ J ⊆ 1..=|t|`, unsorted.
fn subsets_containing(t: &TranslucentWord) -> Vec<Vec<usize>> {
    let opaque = t.opaque_positions();
    let base = t.translucent_positions();
    (0..1u64 << opaque.len())
        .map(|bits| {
            let mut j = base.clone();
            j.extend(opaque.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &p)| p));
            j.sort_unstable();
            j
        })
        .collect()
}

/// `s ∘ t`, defined when the source of `s` is the target of `t`.
pub fn compose(s: &TranslucentWord, t: &TranslucentWord) -> Result<TranslucentWord> {
    let target = t.target();
    if s.alpha != target {
        return Err(Error::NotComposable {
            source_word: s.alpha.to_string(),
            target_word: target.to_string(),
        });
    }
    let mut mask = t.mask.clone();
    for (k, p) in t.translucent_positions().into_iter().enumerate() {
        mask[p - 1] = s.mask[k];
    }
    Ok(TranslucentWord { alpha: t.alpha.clone(), mask })
}

/// Checks that `s` is a right factor of `whole`, i.e. `r ∘ s = whole` for some `r`.
fn check_right_factor(s: &TranslucentWord, whole: &TranslucentWord) -> Result<()> {
    let ok = s.alpha == whole.alpha
        && whole
            .translucent_positions()
            .into_iter()
            .all(|p| !s.is_opaque(p))
        && whole
            .restrict(&s.translucent_positions())
            .and_then(|r| compose(&r, s))
            .is_ok_and(|back| &back == whole);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidRightFactor(s.to_string(), whole.to_string()))
    }
}

/// The exchange construction at a translucent position `i` of `t`.
///
/// Given right factors `s_minus` of `t^{⋖i}` and `s_plus` of `t^{⋗i}`, returns
/// the unique `s` of length `|t|` agreeing with `s_minus` before `i`, with
/// `s_plus` after `i` and translucent at `i`, together with
/// `r = restrict(t, [s]_0)` and the index of `i` inside `r`.
pub fn exchange(
    s_minus: &TranslucentWord,
    s_plus: &TranslucentWord,
    t: &TranslucentWord,
    i: usize,
) -> Result<Exchange> {
    let (t_minus, t_plus) = t.split(i)?;
    check_right_factor(s_minus, &t_minus)?;
    check_right_factor(s_plus, &t_plus)?;
    let order = t.standard_order();
    let mut mask = vec![false; t.len()];
    for (side, part) in [(s_minus, order.before(i)), (s_plus, order.after(i))] {
        let mut part = part;
        part.sort_unstable();
        for (k, p) in part.into_iter().enumerate() {
            mask[p - 1] = side.mask[k];
        }
    }
    let s = TranslucentWord { alpha: t.alpha.clone(), mask };
    let kept = s.translucent_positions();
    let index = kept.iter().filter(|&&p| p <= i).count();
    let r = t.restrict(&kept)?;
    debug_assert_eq!(compose(&r, &s).as_ref(), Ok(t));
    Ok(Exchange { r, s, index })
}

impl FromStr for TranslucentWord {
    type Err = Error;

    /// Parses `"ALPHA,MASK"`, e.g. `"LLRLRLRR,01100101"`; `","` is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let (a, m) = s
            .trim()
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("`{s}` is not of the form ALPHA,MASK")))?;
        let alpha: LrWord = a.trim().parse()?;
        let mask = m
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("`{c}` is not a mask digit in `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        TranslucentWord::new(alpha, mask)
    }
}

impl fmt::Display for TranslucentWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},", self.alpha)?;
        for &b in &self.mask {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tw(s: &str) -> TranslucentWord {
        s.parse().unwrap()
    }

    #[test]
    fn source_and_target() {
        let t = tw("LLRLRLRR,01100101");
        assert_eq!(t.source().to_string(), "LLRLRLRR");
        assert_eq!(t.target().to_string(), "LLRR");
        assert_eq!(tw("LRL,000").target().to_string(), "LRL");
        assert!(tw("LRL,111").target().is_empty());
    }

    #[test]
    fn composition_example() {
        let s = tw("LLRR,1011");
        let t = tw("LLRLRLRR,01100101");
        assert_eq!(s.compose(&t).unwrap(), tw("LLRLRLRR,11101111"));
        assert!(t.compose(&s).is_err());
    }

    #[test]
    fn identities() {
        let t = tw("LLRLRLRR,01100101");
        assert_eq!(TranslucentWord::identity(t.target()).compose(&t).unwrap(), t);
        assert_eq!(t.compose(&TranslucentWord::identity(t.source())).unwrap(), t);
    }

    #[test]
    fn restrict_and_translucidate() {
        assert_eq!(tw("LRLL,1111").translucidate(&[2, 3]).unwrap(), tw("LRLL,1001"));
        assert_eq!(tw("LLRLRLRR,01100101").restrict(&[1, 4, 5, 8]).unwrap(), tw("LLRR,0001"));
        let t = tw("LRL,101");
        assert_eq!(t.translucidate(&[]).unwrap(), t);
        assert!(t.restrict(&[4]).is_err());
    }

    #[test]
    fn factorization_counts() {
        let fs = tw("L,1").factorizations();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0], (tw(","), tw("L,1")));
        assert_eq!(fs[1], (tw("L,1"), tw("L,0")));
        assert_eq!(tw("LRL,000").factorizations().len(), 1);
        assert_eq!(tw("LL,11").factorizations().len(), 4);
    }

    #[test]
    fn split_examples() {
        let t = tw("LRLL,0101");
        let (a, b) = t.split(1).unwrap();
        assert!(a.is_empty());
        assert_eq!(b, tw("RLL,101").restrict(&[1, 2, 3]).unwrap());
        assert_eq!(b.alpha().to_string(), "RLL");
        let (a, b) = t.split(3).unwrap();
        assert_eq!(a.alpha().to_string(), "L");
        assert_eq!(b.alpha().to_string(), "RL");
        assert_eq!(t.split(2), Err(Error::NotTranslucent(2)));
    }

    #[test]
    fn opaque_interval_examples() {
        assert_eq!(tw("LRLLLR,011101").opaque_intervals(), vec![vec![3, 4], vec![2, 6]]);
        assert_eq!(tw("LRR,111").opaque_intervals(), vec![vec![1, 2, 3]]);
        assert!(tw("LR,00").opaque_intervals().is_empty());
    }

    #[test]
    fn exchange_with_identities() {
        let t = tw("LRLLLR,011001");
        let (tm, tp) = t.split(4).unwrap();
        let ex = exchange(
            &TranslucentWord::identity(tm.source()),
            &TranslucentWord::identity(tp.source()),
            &t,
            4,
        )
        .unwrap();
        assert_eq!(ex.s, TranslucentWord::identity(t.source()));
        assert_eq!(ex.r, t);
        assert_eq!(ex.index, 4);
    }

    #[test]
    fn exchange_rejects_bad_factor() {
        let t = tw("LLL,101");
        // t^{⋖2} = (L,1); a fully opaque right factor is fine, a wrong alphabet is not.
        let ok = exchange(&tw("L,1"), &tw("L,0"), &t, 2).unwrap();
        assert_eq!(ok.s, tw("LLL,100"));
        assert_eq!(ok.r, tw("LL,01"));
        assert_eq!(ok.index, 1);
        assert!(exchange(&tw("R,0"), &tw("L,0"), &t, 2).is_err());
    }
}
