//! Incomplete words: sequences of two-faced variables (opaque letters) and
//! placeholders `L`, `R` (translucent letters).

use std::collections::HashMap;
use std::fmt;

use crate::biset::{normalize_positions, LrWord, Side};
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::translucent::TranslucentWord;

pub type VarId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Hole(Side),
    Var(VarId, Side),
}

impl Letter {
    pub fn side(self) -> Side {
        match self {
            Letter::Hole(s) | Letter::Var(_, s) => s,
        }
    }

    pub fn is_opaque(self) -> bool {
        matches!(self, Letter::Var(..))
    }

    /// The placeholder on the same side.
    pub fn hole(self) -> Letter {
        Letter::Hole(self.side())
    }
}

/// Named variables, each tagged left or right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    sides: Vec<Side>,
    index: HashMap<String, VarId>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an alphabet with the given left and right variable names, in that order.
    pub fn with_vars(left: &[&str], right: &[&str]) -> Result<Self> {
        let mut a = Alphabet::new();
        for &n in left {
            a.add(n, Side::L)?;
        }
        for &n in right {
            a.add(n, Side::R)?;
        }
        Ok(a)
    }

    pub fn add(&mut self, name: &str, side: Side) -> Result<VarId> {
        let valid = !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid || name == "L" || name == "R" || self.index.contains_key(name) {
            return Err(Error::InvalidVariable(name.to_string()));
        }
        let id = self.names.len() as VarId;
        self.names.push(name.to_string());
        self.sides.push(side);
        self.index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: VarId) -> &str {
        &self.names[id as usize]
    }

    pub fn side(&self, id: VarId) -> Side {
        self.sides[id as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.index.get(name).copied()
    }

    pub fn var(&self, name: &str) -> Result<Letter> {
        let id = self.lookup(name).ok_or_else(|| Error::UnknownLetter(name.to_string()))?;
        Ok(Letter::Var(id, self.side(id)))
    }

    /// All variables as letters, in declaration order.
    pub fn letters(&self) -> Vec<Letter> {
        (0..self.len() as VarId).map(|id| Letter::Var(id, self.side(id))).collect()
    }

    /// Parses space-separated letters; `L` and `R` are placeholders.
    pub fn parse(&self, s: &str) -> Result<IncompleteWord> {
        s.split_whitespace()
            .map(|tok| match tok {
                "L" => Ok(Letter::Hole(Side::L)),
                "R" => Ok(Letter::Hole(Side::R)),
                name => self.var(name),
            })
            .collect::<Result<Vec<_>>>()
            .map(IncompleteWord)
    }

    pub fn format(&self, w: &IncompleteWord) -> String {
        let parts: Vec<&str> = w
            .0
            .iter()
            .map(|l| match *l {
                Letter::Hole(Side::L) => "L",
                Letter::Hole(Side::R) => "R",
                Letter::Var(id, _) => self.name(id),
            })
            .collect();
        parts.join(" ")
    }

    /// Complete words of length `1..=max_len` in shortlex order.
    pub fn complete_words(&self, max_len: usize) -> Vec<IncompleteWord> {
        words_over(&self.letters(), max_len)
    }

    /// Words of length `0..=max_len` over the variables and both placeholders.
    pub fn incomplete_words(&self, max_len: usize) -> Vec<IncompleteWord> {
        let mut letters = vec![Letter::Hole(Side::L), Letter::Hole(Side::R)];
        letters.extend(self.letters());
        let mut out = vec![IncompleteWord::default()];
        out.extend(words_over(&letters, max_len));
        out
    }

    /// Words whose type is `t`.
    pub fn words_of_type(&self, t: &TranslucentWord) -> Vec<IncompleteWord> {
        let mut out = vec![Vec::new()];
        for p in 1..=t.len() {
            let side = t.side(p);
            let choices: Vec<Letter> = if t.is_opaque(p) {
                self.letters().into_iter().filter(|l| l.side() == side).collect()
            } else {
                vec![Letter::Hole(side)]
            };
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Letter>| {
                    choices.iter().map(move |&l| {
                        let mut v = prefix.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(IncompleteWord).collect()
    }
}

fn words_over(letters: &[Letter], max_len: usize) -> Vec<IncompleteWord> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(IncompleteWord));
    }
    out
}

/// Sums of pairs of words, e.g. coproducts.
pub type WordSum = Multiset<(IncompleteWord, IncompleteWord)>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncompleteWord(Vec<Letter>);

impl IncompleteWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        IncompleteWord(letters)
    }

    /// The placeholder-only word on `alpha`.
    pub fn placeholders(alpha: &LrWord) -> Self {
        IncompleteWord(alpha.letters().iter().map(|&s| Letter::Hole(s)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn at(&self, pos: usize) -> Letter {
        self.0[pos - 1]
    }

    pub fn alpha(&self) -> LrWord {
        LrWord::new(self.0.iter().map(|l| l.side()).collect())
    }

    pub fn type_of(&self) -> TranslucentWord {
        TranslucentWord::new(self.alpha(), self.0.iter().map(|l| l.is_opaque()).collect())
            .expect("equal lengths")
    }

    pub fn opaque_count(&self) -> usize {
        self.0.iter().filter(|l| l.is_opaque()).count()
    }

    /// No placeholder letters.
    pub fn is_complete(&self) -> bool {
        self.0.iter().all(|l| l.is_opaque())
    }

    /// No variable letters. The empty word is placeholder-only.
    pub fn is_placeholder_only(&self) -> bool {
        self.0.iter().all(|l| !l.is_opaque())
    }

    pub fn restrict(&self, positions: &[usize]) -> Result<IncompleteWord> {
        let set = normalize_positions(positions, self.len())?;
        Ok(IncompleteWord(set.into_iter().map(|p| self.at(p)).collect()))
    }

    /// Replaces the letters at `positions` by their placeholders.
    pub fn translucidate(&self, positions: &[usize]) -> Result<IncompleteWord> {
        let set = normalize_positions(positions, self.len())?;
        let mut out = self.clone();
        for p in set {
            out.0[p - 1] = out.0[p - 1].hole();
        }
        Ok(out)
    }

    /// Restriction to a bit set (bit `p - 1` for position `p`).
    pub(crate) fn restrict_bits(&self, bits: u64) -> IncompleteWord {
        IncompleteWord(
            self.0.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &l)| l).collect(),
        )
    }

    pub(crate) fn translucidate_bits(&self, bits: u64) -> IncompleteWord {
        IncompleteWord(
            self.0
                .iter()
                .enumerate()
                .map(|(k, &l)| if bits >> k & 1 == 1 { l.hole() } else { l })
                .collect(),
        )
    }

    pub(crate) fn translucent_bits(&self) -> u64 {
        self.0.iter().enumerate().filter(|(_, l)| !l.is_opaque()).fold(0, |acc, (k, _)| acc | 1 << k)
    }

    pub(crate) fn opaque_bit_list(&self) -> Vec<u64> {
        self.0.iter().enumerate().filter(|(_, l)| l.is_opaque()).map(|(k, _)| 1u64 << k).collect()
    }

    /// Bit of the `⋖`-first opaque position, if any.
    pub(crate) fn first_opaque_bit(&self) -> Option<u64> {
        let n = self.len();
        let lefts = (1..=n).filter(|&p| self.at(p).side() == Side::L);
        let rights = (1..=n).rev().filter(|&p| self.at(p).side() == Side::R);
        lefts.chain(rights).find(|&p| self.at(p).is_opaque()).map(|p| 1u64 << (p - 1))
    }

    /// Every admissible cut `I ⊇ [w]_0` as a bit set, in increasing order of
    /// the selected opaque subset.
    pub(crate) fn cuts(&self) -> impl Iterator<Item = u64> {
        let base = self.translucent_bits();
        let opaque = self.opaque_bit_list();
        (0..1u64 << opaque.len()).map(move |sel| {
            opaque.iter().enumerate().filter(|(k, _)| sel >> k & 1 == 1).fold(base, |acc, (_, b)| acc | b)
        })
    }

    fn cut_term(&self, bits: u64) -> (IncompleteWord, IncompleteWord) {
        (self.restrict_bits(bits), self.translucidate_bits(bits))
    }

    /// The positions strictly `⋖`-before and `⋖`-after a position.
    pub fn split(&self, i: usize) -> Result<(IncompleteWord, IncompleteWord)> {
        let t = self.type_of();
        let (a, b) = t.split(i)?;
        let order = t.standard_order();
        debug_assert_eq!(a.len() + b.len() + 1, self.len());
        Ok((self.restrict(&order.before(i))?, self.restrict(&order.after(i))?))
    }
}

/// `w ∘ w2`: the letters of `w` fill the placeholders of `w2`.
pub fn compose_words(w: &IncompleteWord, w2: &IncompleteWord) -> Result<IncompleteWord> {
    let target = w2.type_of().target();
    if w.alpha() != target {
        return Err(Error::NotComposable {
            source_word: w.alpha().to_string(),
            target_word: target.to_string(),
        });
    }
    let mut fill = w.0.iter();
    Ok(IncompleteWord(
        w2.0.iter().map(|&l| if l.is_opaque() { l } else { *fill.next().expect("lengths agree") }).collect(),
    ))
}

/// `Σ_I w|_I ⊗ tr(w, I)` over all `I ⊇ [w]_0`.
pub fn coproduct(w: &IncompleteWord) -> WordSum {
    w.cuts().map(|b| w.cut_term(b)).collect()
}

/// The coproduct without the two terms having a placeholder-only factor.
pub fn reduced_coproduct(w: &IncompleteWord) -> WordSum {
    w.cuts()
        .map(|b| w.cut_term(b))
        .filter(|(x, y)| !x.is_placeholder_only() && !y.is_placeholder_only())
        .collect()
}

/// Cuts keeping the `⋖`-first opaque letter on the left, both factors opaque somewhere.
pub fn coproduct_left(w: &IncompleteWord) -> Result<WordSum> {
    half_coproduct(w, true)
}

/// Cuts sending the `⋖`-first opaque letter to the right, both factors opaque somewhere.
pub fn coproduct_right(w: &IncompleteWord) -> Result<WordSum> {
    half_coproduct(w, false)
}

fn half_coproduct(w: &IncompleteWord, left: bool) -> Result<WordSum> {
    let first = w.first_opaque_bit().ok_or_else(|| Error::NoOpaqueLetter(format!("{w:?}")))?;
    Ok(w.cuts()
        .filter(|&b| (b & first != 0) == left)
        .map(|b| w.cut_term(b))
        .filter(|(x, y)| !x.is_placeholder_only() && !y.is_placeholder_only())
        .collect())
}

/// The unique word of type `t` reading `w_minus` before `i`, the placeholder
/// of `t` at `i` and `w_plus` after `i`, all in `⋖` order.
pub fn horizontal_product(
    w_minus: &IncompleteWord,
    w_plus: &IncompleteWord,
    t: &TranslucentWord,
    i: usize,
) -> Result<IncompleteWord> {
    let (t_minus, t_plus) = t.split(i)?;
    for (w, expected) in [(w_minus, &t_minus), (w_plus, &t_plus)] {
        let found = w.type_of();
        if &found != expected {
            return Err(Error::TypeMismatch { expected: expected.to_string(), found: found.to_string() });
        }
    }
    let order = t.standard_order();
    let mut letters = vec![Letter::Hole(t.side(i)); t.len()];
    for (w, part) in [(w_minus, order.before(i)), (w_plus, order.after(i))] {
        let mut part = part;
        part.sort_unstable();
        for (k, p) in part.into_iter().enumerate() {
            letters[p - 1] = w.0[k];
        }
    }
    Ok(IncompleteWord(letters))
}

/// The cut of a word at its translucent positions `i_1 ⋖ … ⋖ i_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpaqueFactorization {
    /// The `p + 1` factors between consecutive cut points, possibly empty.
    pub factors: Vec<IncompleteWord>,
    /// For each cut point: the type of the prefix ending with the next factor,
    /// and the index of the cut point inside it.
    pub ambients: Vec<(TranslucentWord, usize)>,
}

impl OpaqueFactorization {
    /// Left-associated horizontal products of the factors.
    pub fn reassemble(&self) -> Result<IncompleteWord> {
        let mut acc = self.factors[0].clone();
        for (k, (t, i)) in self.ambients.iter().enumerate() {
            acc = horizontal_product(&acc, &self.factors[k + 1], t, *i)?;
        }
        Ok(acc)
    }
}

pub fn opaque_factorize(w: &IncompleteWord) -> OpaqueFactorization {
    let t = w.type_of();
    let order = t.standard_order();
    let cuts: Vec<usize> = order.perm().iter().copied().filter(|&p| !t.is_opaque(p)).collect();
    let mut factors = Vec::with_capacity(cuts.len() + 1);
    let mut ambients = Vec::with_capacity(cuts.len());
    for k in 0..=cuts.len() {
        let lower = k.checked_sub(1).map(|j| cuts[j]);
        let upper = cuts.get(k).copied();
        factors.push(w.restrict(&order.between(lower, upper)).expect("in range"));
        if let Some(i) = lower {
            let mut prefix = order.between(None, upper);
            prefix.sort_unstable();
            let index = prefix.iter().filter(|&&p| p <= i).count();
            ambients.push((t.restrict(&prefix).expect("in range"), index));
        }
    }
    OpaqueFactorization { factors, ambients }
}

impl fmt::Display for IncompleteWord {
    /// Alphabet-free rendering: variables as `#id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            match *l {
                Letter::Hole(s) => write!(f, "{s}")?,
                Letter::Var(id, s) => write!(f, "#{id}{s}")?,
            }
        }
        Ok(())
    }
}
