//! Exact rational functionals on incomplete words, their products, and the
//! exponentials solving the half-dendriform fixed point equations.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::bipartition::{enumerate, BipartitionClass, Enumeration};
use crate::biset::Side;
use crate::error::{Error, Result};
use crate::rational::{inverse_factorial, Rational};
use crate::translucent::TranslucentWord;
use crate::words::{Alphabet, IncompleteWord};

/// How a finite table on complete words extends to all incomplete words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionalKind {
    /// Supported on words whose opaque letters form one `⋖`-interval.
    LieInterval,
    /// Product over the opaque `⋖`-intervals.
    GroupMultiplicative,
    /// Depends only on the opaque letters; zero on placeholder-only words.
    LieFull,
    /// Depends only on the opaque letters; one on placeholder-only words.
    GroupFull,
    /// Direct lookup on incomplete words.
    Generic,
}

impl FunctionalKind {
    pub fn name(self) -> &'static str {
        match self {
            FunctionalKind::LieInterval => "lie_interval",
            FunctionalKind::GroupMultiplicative => "group_multiplicative",
            FunctionalKind::LieFull => "lie_full",
            FunctionalKind::GroupFull => "group_full",
            FunctionalKind::Generic => "generic",
        }
    }

    fn is_group(self) -> bool {
        matches!(self, FunctionalKind::GroupMultiplicative | FunctionalKind::GroupFull)
    }
}

impl fmt::Display for FunctionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Anything that can be evaluated on incomplete words.
pub trait LinearForm {
    fn eval(&self, w: &IncompleteWord) -> Result<Rational>;
    /// Value on placeholder-only words.
    fn unit_value(&self) -> Rational;
}

impl<T: LinearForm + ?Sized> LinearForm for &T {
    fn eval(&self, w: &IncompleteWord) -> Result<Rational> {
        (**self).eval(w)
    }

    fn unit_value(&self) -> Rational {
        (**self).unit_value()
    }
}

impl<T: LinearForm + ?Sized> LinearForm for Box<T> {
    fn eval(&self, w: &IncompleteWord) -> Result<Rational> {
        (**self).eval(w)
    }

    fn unit_value(&self) -> Rational {
        (**self).unit_value()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    kind: FunctionalKind,
    table: HashMap<IncompleteWord, Rational>,
    unit: Rational,
}

impl Functional {
    fn tabulated(kind: FunctionalKind, table: HashMap<IncompleteWord, Rational>) -> Result<Self> {
        if let Some(w) = table.keys().find(|w| w.is_empty() || !w.is_complete()) {
            return Err(Error::Precondition(format!(
                "table keys of a {kind} functional must be nonempty complete words, got `{w}`"
            )));
        }
        let unit = if kind.is_group() { Rational::one() } else { Rational::zero() };
        Ok(Functional { kind, table, unit })
    }

    pub fn lie_interval(table: HashMap<IncompleteWord, Rational>) -> Result<Self> {
        Self::tabulated(FunctionalKind::LieInterval, table)
    }

    pub fn lie_full(table: HashMap<IncompleteWord, Rational>) -> Result<Self> {
        Self::tabulated(FunctionalKind::LieFull, table)
    }

    /// Requires an entry for every complete word of length `1..=max_len`.
    pub fn group_multiplicative(
        table: HashMap<IncompleteWord, Rational>,
        alphabet: &Alphabet,
        max_len: usize,
    ) -> Result<Self> {
        check_complete(&table, alphabet, max_len)?;
        Self::tabulated(FunctionalKind::GroupMultiplicative, table)
    }

    /// Requires an entry for every complete word of length `1..=max_len`.
    pub fn group_full(
        table: HashMap<IncompleteWord, Rational>,
        alphabet: &Alphabet,
        max_len: usize,
    ) -> Result<Self> {
        check_complete(&table, alphabet, max_len)?;
        Self::tabulated(FunctionalKind::GroupFull, table)
    }

    /// A table on arbitrary incomplete words; `unit` on placeholder-only words.
    pub fn generic(table: HashMap<IncompleteWord, Rational>, unit: Rational) -> Self {
        Functional { kind: FunctionalKind::Generic, table, unit }
    }

    /// The counit: one on placeholder-only words, zero elsewhere.
    pub fn counit() -> Self {
        Self::generic(HashMap::new(), Rational::one())
    }

    pub fn kind(&self) -> FunctionalKind {
        self.kind
    }

    pub fn table(&self) -> &HashMap<IncompleteWord, Rational> {
        &self.table
    }

    fn expect_kind(&self, kind: FunctionalKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch { expected: kind.name().into(), found: self.kind.name().into() })
        }
    }

    fn lookup_or_zero(&self, w: &IncompleteWord) -> Rational {
        self.table.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    fn lookup_required(&self, w: &IncompleteWord) -> Result<Rational> {
        self.table.get(w).cloned().ok_or_else(|| Error::MissingEntry(w.to_string()))
    }
}

fn check_complete(table: &HashMap<IncompleteWord, Rational>, alphabet: &Alphabet, max_len: usize) -> Result<()> {
    match alphabet.complete_words(max_len).into_iter().find(|w| !table.contains_key(w)) {
        Some(w) => Err(Error::MissingEntry(alphabet.format(&w))),
        None => Ok(()),
    }
}

/// Opaque letters of `w` grouped into maximal `⋖`-runs, each run read in natural order.
pub(crate) fn opaque_interval_words(w: &IncompleteWord) -> Vec<IncompleteWord> {
    let n = w.len();
    let lefts = (1..=n).filter(|&p| w.at(p).side() == Side::L);
    let rights = (1..=n).rev().filter(|&p| w.at(p).side() == Side::R);
    let mut runs = Vec::new();
    let mut bits = 0u64;
    for p in lefts.chain(rights) {
        if w.at(p).is_opaque() {
            bits |= 1 << (p - 1);
        } else if bits != 0 {
            runs.push(w.restrict_bits(std::mem::take(&mut bits)));
        }
    }
    if bits != 0 {
        runs.push(w.restrict_bits(bits));
    }
    runs
}

fn opaque_part(w: &IncompleteWord) -> IncompleteWord {
    IncompleteWord::new(w.letters().iter().copied().filter(|l| l.is_opaque()).collect())
}

impl LinearForm for Functional {
    fn eval(&self, w: &IncompleteWord) -> Result<Rational> {
        if w.is_placeholder_only() {
            return Ok(self.unit.clone());
        }
        match self.kind {
            FunctionalKind::Generic => Ok(self.lookup_or_zero(w)),
            FunctionalKind::LieFull => Ok(self.lookup_or_zero(&opaque_part(w))),
            FunctionalKind::GroupFull => self.lookup_required(&opaque_part(w)),
            FunctionalKind::LieInterval => {
                let runs = opaque_interval_words(w);
                Ok(if runs.len() == 1 { self.lookup_or_zero(&runs[0]) } else { Rational::zero() })
            }
            FunctionalKind::GroupMultiplicative => opaque_interval_words(w)
                .iter()
                .try_fold(Rational::one(), |acc, run| Ok(acc * self.lookup_required(run)?)),
        }
    }

    fn unit_value(&self) -> Rational {
        self.unit.clone()
    }
}

/// Which cuts a product sums over.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Cuts {
    All,
    FirstLeft,
    FirstRight,
}

fn cut_sum<F: LinearForm + ?Sized, G: LinearForm + ?Sized>(
    f: &F,
    g: &G,
    w: &IncompleteWord,
    which: Cuts,
) -> Result<Rational> {
    let first = w.first_opaque_bit().unwrap_or(0);
    let mut acc = Rational::zero();
    for bits in w.cuts() {
        let keep = match which {
            Cuts::All => true,
            Cuts::FirstLeft => bits & first != 0,
            Cuts::FirstRight => bits & first == 0,
        };
        if !keep {
            continue;
        }
        let left = f.eval(&w.restrict_bits(bits))?;
        if left.is_zero() {
            continue;
        }
        acc += left * g.eval(&w.translucidate_bits(bits))?;
    }
    Ok(acc)
}

/// Convolution: the sum over the full coproduct.
pub fn star_eval<F: LinearForm + ?Sized, G: LinearForm + ?Sized>(f: &F, g: &G, w: &IncompleteWord) -> Result<Rational> {
    cut_sum(f, g, w, Cuts::All)
}

fn check_half_product<F: LinearForm + ?Sized, G: LinearForm + ?Sized>(f: &F, g: &G) -> Result<()> {
    if !f.unit_value().is_zero() && !g.unit_value().is_zero() {
        Err(Error::UndefinedHalfProduct)
    } else {
        Ok(())
    }
}

/// `f ≺ g`. Zero on placeholder-only words. With a unit value on one side
/// only, this is the extension `ℓ ≺ ε = ℓ`, `ε ≺ ℓ = 0`.
pub fn prec_eval<F: LinearForm + ?Sized, G: LinearForm + ?Sized>(f: &F, g: &G, w: &IncompleteWord) -> Result<Rational> {
    check_half_product(f, g)?;
    if w.is_placeholder_only() {
        return Ok(Rational::zero());
    }
    cut_sum(f, g, w, Cuts::FirstLeft)
}

/// `f ≻ g`. Zero on placeholder-only words. With a unit value on one side
/// only, this is the extension `ε ≻ ℓ = ℓ`, `ℓ ≻ ε = 0`.
pub fn succ_eval<F: LinearForm + ?Sized, G: LinearForm + ?Sized>(f: &F, g: &G, w: &IncompleteWord) -> Result<Rational> {
    check_half_product(f, g)?;
    if w.is_placeholder_only() {
        return Ok(Rational::zero());
    }
    cut_sum(f, g, w, Cuts::FirstRight)
}

/// `f ◁ g = f ≺ g − g ≻ f`, for `f` and `g` vanishing on placeholder-only words.
pub fn prelie_eval<F: LinearForm + ?Sized, G: LinearForm + ?Sized>(f: &F, g: &G, w: &IncompleteWord) -> Result<Rational> {
    if !f.unit_value().is_zero() || !g.unit_value().is_zero() {
        return Err(Error::NotInLieAlgebra);
    }
    Ok(prec_eval(f, g, w)? - succ_eval(g, f, w)?)
}

/// Closed form of `f ◁ g` for interval-supported `f`, `g`: with `[w]_1` a single
/// `⋖`-interval split as `I₁ ⋖ J ⋖ I₂` (`I₁`, `I₂` nonempty), the sum of
/// `f(w|I₁∪I₂)·g(w|J)`; zero unless `[w]_1` is one interval.
pub fn prelie_interval_closed_form(f: &Functional, g: &Functional, w: &IncompleteWord) -> Result<Rational> {
    f.expect_kind(FunctionalKind::LieInterval)?;
    g.expect_kind(FunctionalKind::LieInterval)?;
    let t = w.type_of();
    let intervals = t.opaque_intervals();
    if intervals.len() != 1 {
        return Ok(Rational::zero());
    }
    let mut seq = intervals[0].clone();
    t.standard_order().sort(&mut seq);
    let n = seq.len();
    let mut acc = Rational::zero();
    for a in 1..n {
        for b in a + 1..n {
            let mut outer: Vec<usize> = seq[..a].to_vec();
            outer.extend_from_slice(&seq[b..]);
            acc += f.eval(&w.restrict(&outer)?)? * g.eval(&w.restrict(&seq[a..b])?)?;
        }
    }
    Ok(acc)
}

macro_rules! binary_form {
    ($(#[$doc:meta])* $name:ident, $eval:ident, |$f:ident, $g:ident| $unit:expr) => {
        $(#[$doc])*
        pub struct $name<F, G>(pub F, pub G);

        impl<F: LinearForm, G: LinearForm> LinearForm for $name<F, G> {
            fn eval(&self, w: &IncompleteWord) -> Result<Rational> {
                $eval(&self.0, &self.1, w)
            }

            fn unit_value(&self) -> Rational {
                let ($f, $g) = (&self.0, &self.1);
                $unit
            }
        }
    };
}

binary_form!(
    /// `f ⋆ g` as a form.
    Star, star_eval, |f, g| f.unit_value() * g.unit_value()
);
binary_form!(
    /// `f ≺ g` as a form.
    Prec, prec_eval, |f, g| { let _ = (f, g); Rational::zero() }
);
binary_form!(
    /// `f ≻ g` as a form.
    Succ, succ_eval, |f, g| { let _ = (f, g); Rational::zero() }
);
binary_form!(
    /// `f ◁ g` as a form.
    PreLie, prelie_eval, |f, g| { let _ = (f, g); Rational::zero() }
);

/// `f − ε`.
pub struct MinusCounit<F>(pub F);

impl<F: LinearForm> LinearForm for MinusCounit<F> {
    fn eval(&self, w: &IncompleteWord) -> Result<Rational> {
        let v = self.0.eval(w)?;
        Ok(if w.is_placeholder_only() { v - Rational::one() } else { v })
    }

    fn unit_value(&self) -> Rational {
        self.0.unit_value() - Rational::one()
    }
}

/// Caches evaluations of a form. Reads run concurrently; each value is
/// computed outside the lock and inserted once.
pub struct Memoized<F> {
    inner: F,
    cache: RwLock<HashMap<IncompleteWord, Rational>>,
}

impl<F: LinearForm> Memoized<F> {
    pub fn new(inner: F) -> Self {
        Memoized { inner, cache: RwLock::new(HashMap::new()) }
    }
}

impl<F: LinearForm> LinearForm for Memoized<F> {
    fn eval(&self, w: &IncompleteWord) -> Result<Rational> {
        memo(&self.cache, w, || self.inner.eval(w))
    }

    fn unit_value(&self) -> Rational {
        self.inner.unit_value()
    }
}

fn memo<K: std::hash::Hash + Eq + Clone>(
    cache: &RwLock<HashMap<K, Rational>>,
    key: &K,
    compute: impl FnOnce() -> Result<Rational>,
) -> Result<Rational> {
    if let Some(v) = cache.read().expect("cache lock").get(key) {
        return Ok(v.clone());
    }
    let v = compute()?;
    cache.write().expect("cache lock").entry(key.clone()).or_insert_with(|| v.clone());
    Ok(v)
}

/// The solution of `M = ε + k ≺ M`, evaluated lazily on incomplete words.
///
/// `M(w) = Σ_{I ∋ ⋀[w]_1} k(w|_I)·M(tr(w, I))` over cuts `I ⊇ [w]_0`, with
/// `M = 1` on placeholder-only words.
pub struct LeftExponential<K> {
    k: K,
    cache: RwLock<HashMap<IncompleteWord, Rational>>,
}

impl<K: LinearForm> LeftExponential<K> {
    pub fn new(k: K) -> Self {
        LeftExponential { k, cache: RwLock::new(HashMap::new()) }
    }
}

impl<K: LinearForm> LinearForm for LeftExponential<K> {
    fn eval(&self, w: &IncompleteWord) -> Result<Rational> {
        if w.is_placeholder_only() {
            return Ok(Rational::one());
        }
        memo(&self.cache, w, || prec_eval(&self.k, self, w))
    }

    fn unit_value(&self) -> Rational {
        Rational::one()
    }
}

/// The solution of `M = ε + M ≻ b`, evaluated lazily on incomplete words.
pub struct RightExponential<B> {
    b: B,
    cache: RwLock<HashMap<IncompleteWord, Rational>>,
}

impl<B: LinearForm> RightExponential<B> {
    pub fn new(b: B) -> Self {
        RightExponential { b, cache: RwLock::new(HashMap::new()) }
    }
}

impl<B: LinearForm> LinearForm for RightExponential<B> {
    fn eval(&self, w: &IncompleteWord) -> Result<Rational> {
        if w.is_placeholder_only() {
            return Ok(Rational::one());
        }
        // The cut I = [w]_0 contributes M(placeholders)·b(w) = b(w).
        memo(&self.cache, w, || cut_sum(self, &self.b, w, Cuts::FirstRight))
    }

    fn unit_value(&self) -> Rational {
        Rational::one()
    }
}

/// Convolution powers `m^{⋆n}` of a form vanishing on placeholder-only words.
pub struct ConvolutionPowers<M> {
    m: M,
    cache: RwLock<HashMap<(usize, IncompleteWord), Rational>>,
}

impl<M: LinearForm> ConvolutionPowers<M> {
    pub fn new(m: M) -> Result<Self> {
        if !m.unit_value().is_zero() {
            return Err(Error::NotInLieAlgebra);
        }
        Ok(ConvolutionPowers { m, cache: RwLock::new(HashMap::new()) })
    }

    /// `m^{⋆n}(w)`, with `m^{⋆0} = ε`.
    pub fn power(&self, n: usize, w: &IncompleteWord) -> Result<Rational> {
        if n == 0 {
            return Ok(if w.is_placeholder_only() { Rational::one() } else { Rational::zero() });
        }
        if n > w.opaque_count() {
            return Ok(Rational::zero());
        }
        if n == 1 {
            return self.m.eval(w);
        }
        memo(&self.cache, &(n, w.clone()), || {
            let mut acc = Rational::zero();
            for bits in w.cuts() {
                let right = self.m.eval(&w.translucidate_bits(bits))?;
                if right.is_zero() {
                    continue;
                }
                acc += self.power(n - 1, &w.restrict_bits(bits))? * right;
            }
            Ok(acc)
        })
    }

    /// `Σ_{n ≥ 0} m^{⋆n}(w) / n!`.
    pub fn exp(&self, w: &IncompleteWord) -> Result<Rational> {
        (0..=w.opaque_count()).try_fold(Rational::zero(), |acc, n| Ok(acc + self.power(n, w)? * inverse_factorial(n)))
    }

    /// `Σ_{n ≥ 1} (−1)^{n−1} m^{⋆n}(w) / n`.
    pub fn log(&self, w: &IncompleteWord) -> Result<Rational> {
        (1..=w.opaque_count()).try_fold(Rational::zero(), |acc, n| {
            let term = self.power(n, w)? / Rational::from_integer(n.into());
            Ok(if n % 2 == 1 { acc + term } else { acc - term })
        })
    }
}

fn tabulate(
    alphabet: &Alphabet,
    max_len: usize,
    mut value: impl FnMut(&IncompleteWord) -> Result<Rational>,
) -> Result<HashMap<IncompleteWord, Rational>> {
    alphabet.complete_words(max_len).into_iter().map(|w| Ok((w.clone(), value(&w)?))).collect()
}

/// `exp≺(k)`: the group-like solution of `M = ε + k ≺ M`, tabulated up to `max_len`.
pub fn exp_prec(k: &Functional, alphabet: &Alphabet, max_len: usize) -> Result<Functional> {
    k.expect_kind(FunctionalKind::LieInterval)?;
    let m = LeftExponential::new(k);
    let table = tabulate(alphabet, max_len, |w| m.eval(w))?;
    Functional::group_multiplicative(table, alphabet, max_len)
}

/// `exp≻(b)`: the group-like solution of `M = ε + M ≻ b`, tabulated up to `max_len`.
pub fn exp_succ(b: &Functional, alphabet: &Alphabet, max_len: usize) -> Result<Functional> {
    b.expect_kind(FunctionalKind::LieInterval)?;
    let m = RightExponential::new(b);
    let table = tabulate(alphabet, max_len, |w| m.eval(w))?;
    Functional::group_multiplicative(table, alphabet, max_len)
}

/// `exp⋆(m) = ε + Σ_{n ≥ 1} m^{⋆n} / n!`, tabulated up to `max_len`.
pub fn exp_star(m: &Functional, alphabet: &Alphabet, max_len: usize) -> Result<Functional> {
    m.expect_kind(FunctionalKind::LieInterval)?;
    let powers = ConvolutionPowers::new(m)?;
    let table = tabulate(alphabet, max_len, |w| powers.exp(w))?;
    Functional::group_multiplicative(table, alphabet, max_len)
}

/// `log⋆(M) = Σ_{n ≥ 1} (−1)^{n−1} (M − ε)^{⋆n} / n`, tabulated up to `max_len`.
pub fn log_star(big_m: &Functional, alphabet: &Alphabet, max_len: usize) -> Result<Functional> {
    big_m.expect_kind(FunctionalKind::GroupMultiplicative)?;
    let powers = ConvolutionPowers::new(MinusCounit(big_m))?;
    let table = tabulate(alphabet, max_len, |w| powers.log(w))?;
    Functional::lie_interval(table)
}

/// The exponential of a functional depending only on opaque letters, where
/// the three exponentials coincide: a sum over all bipartitions.
pub fn exp_full(k: &Functional, alphabet: &Alphabet, max_len: usize) -> Result<Functional> {
    k.expect_kind(FunctionalKind::LieFull)?;
    let m = LeftExponential::new(k);
    let table = tabulate(alphabet, max_len, |w| m.eval(w))?;
    Functional::group_full(table, alphabet, max_len)
}

/// Brute-force sum over the bipartitions of `type(w)` in a class of the
/// products of `k` on the blocks; monotone labelings carry weight `1/|π|!`.
pub fn oracle_sum<K: LinearForm + ?Sized>(k: &K, w: &IncompleteWord, class: BipartitionClass) -> Result<Rational> {
    OracleSum::new(class).eval(k, w)
}

/// [`oracle_sum`] with the weighted bipartition list cached per type.
pub struct OracleSum {
    class: BipartitionClass,
    cache: HashMap<TranslucentWord, WeightedBipartitions>,
}

impl OracleSum {
    pub fn new(class: BipartitionClass) -> Self {
        OracleSum { class, cache: HashMap::new() }
    }

    pub fn eval<K: LinearForm + ?Sized>(&mut self, k: &K, w: &IncompleteWord) -> Result<Rational> {
        let t = w.type_of();
        if !self.cache.contains_key(&t) {
            let weighted = weighted_bipartitions(&t, self.class)?;
            self.cache.insert(t.clone(), weighted);
        }
        let mut acc = Rational::zero();
        for (blocks, weight) in &self.cache[&t] {
            let mut term = weight.clone();
            for b in blocks {
                term *= k.eval(&w.restrict(b)?)?;
            }
            acc += term;
        }
        Ok(acc)
    }
}

/// Block lists paired with weights.
pub(crate) type WeightedBipartitions = Vec<(Vec<Vec<usize>>, Rational)>;

/// Each bipartition of the class once, with weight 1, or for monotone the
/// number of its admissible labelings over `|π|!`. Enumeration order is kept.
pub(crate) fn weighted_bipartitions(t: &TranslucentWord, class: BipartitionClass) -> Result<WeightedBipartitions> {
    Ok(match enumerate(t, class)? {
        Enumeration::Plain(list) => list.into_iter().map(|pi| (pi.blocks().to_vec(), Rational::one())).collect(),
        Enumeration::Labeled(list) => {
            let mut out: Vec<(Vec<Vec<usize>>, Rational)> = Vec::new();
            for pi in list {
                let blocks = pi.base().blocks();
                let weight = inverse_factorial(blocks.len());
                match out.iter_mut().find(|(b, _)| b.as_slice() == blocks) {
                    Some((_, w)) => *w += weight,
                    None => out.push((blocks.to_vec(), weight)),
                }
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    /// Left `a`, right `aR`; values chosen as distinct primes so products are
    /// recognisable.
    fn setup() -> (Alphabet, Functional) {
        let al = Alphabet::with_vars(&["a"], &["aR"]).unwrap();
        let mut table = HashMap::new();
        let vals = [("a", 2), ("aR", 3), ("aR a", 5), ("a aR", 7), ("a a", 11), ("aR aR", 13)];
        for (w, v) in vals {
            table.insert(al.parse(w).unwrap(), int(v));
        }
        (al, Functional::lie_interval(table).unwrap())
    }

    #[test]
    fn eval_rules() {
        let (al, k) = setup();
        let w = |s: &str| al.parse(s).unwrap();
        assert_eq!(k.eval(&w("L R L")).unwrap(), int(0));
        assert_eq!(k.eval(&w("aR L a")).unwrap(), int(5));
        // Two intervals: a | L | a.
        assert_eq!(k.eval(&w("a L a")).unwrap(), int(0));
        let full = Functional::lie_full(k.table().clone()).unwrap();
        assert_eq!(full.eval(&w("a L a")).unwrap(), int(11));
        assert_eq!(full.eval(&w("L")).unwrap(), int(0));
        let g = Functional::group_multiplicative(
            al.complete_words(2).into_iter().map(|x| (x, int(1))).collect(),
            &al,
            2,
        )
        .unwrap();
        assert_eq!(g.eval(&w("L R")).unwrap(), int(1));
        assert!(g.eval(&w("a a a")).is_err());
        assert!(Functional::group_multiplicative(HashMap::new(), &al, 1).is_err());
        assert!(Functional::lie_interval([(w("a L"), int(1))].into_iter().collect()).is_err());
    }

    #[test]
    fn half_products_on_letters_vanish() {
        let (al, k) = setup();
        let a = al.parse("a").unwrap();
        assert_eq!(prec_eval(&k, &k, &a).unwrap(), int(0));
        assert_eq!(succ_eval(&k, &k, &a).unwrap(), int(0));
        assert_eq!(prelie_eval(&k, &k, &a).unwrap(), int(0));
        let eps = Functional::counit();
        assert_eq!(prec_eval(&eps, &eps, &a), Err(Error::UndefinedHalfProduct));
        assert_eq!(succ_eval(&eps, &eps, &a), Err(Error::UndefinedHalfProduct));
        assert_eq!(prelie_eval(&eps, &k, &a), Err(Error::NotInLieAlgebra));
        // Partial extensions.
        let w = al.parse("aR a").unwrap();
        assert_eq!(prec_eval(&k, &eps, &w).unwrap(), int(5));
        assert_eq!(succ_eval(&eps, &k, &w).unwrap(), int(5));
        assert_eq!(star_eval(&eps, &k, &w).unwrap(), int(5));
        assert_eq!(star_eval(&k, &eps, &w).unwrap(), int(5));
    }

    #[test]
    fn left_exponential_small_words() {
        let (al, k) = setup();
        let m = LeftExponential::new(&k);
        // M(aR a) = k(a)k(aR) + k(aR a)
        assert_eq!(m.eval(&al.parse("aR a").unwrap()).unwrap(), int(2 * 3 + 5));
        // k ≺ M on the same word.
        let big = exp_prec(&k, &al, 2).unwrap();
        assert_eq!(prec_eval(&k, &big, &al.parse("aR a").unwrap()).unwrap(), int(11));
        // a L a: two separate intervals, each must be its own block.
        assert_eq!(m.eval(&al.parse("a L a").unwrap()).unwrap(), int(4));
    }

    #[test]
    fn right_exponential_small_words() {
        let (al, b) = setup();
        let m = RightExponential::new(&b);
        assert_eq!(m.eval(&al.parse("a a").unwrap()).unwrap(), int(11 + 4));
        assert_eq!(m.eval(&al.parse("aR a").unwrap()).unwrap(), int(5 + 6));
    }

    #[test]
    fn star_exponential_and_log() {
        let (al, m) = setup();
        let e = exp_star(&m, &al, 3).unwrap();
        assert_eq!(e.eval(&al.parse("a").unwrap()).unwrap(), int(2));
        assert_eq!(e.eval(&al.parse("a a").unwrap()).unwrap(), int(11 + 4));
        let back = log_star(&e, &al, 3).unwrap();
        for w in al.complete_words(3) {
            assert_eq!(back.eval(&w).unwrap(), m.eval(&w).unwrap(), "{}", al.format(&w));
        }
    }

    #[test]
    fn kind_checks() {
        let (al, k) = setup();
        let full = Functional::lie_full(k.table().clone()).unwrap();
        assert!(matches!(exp_prec(&full, &al, 2), Err(Error::KindMismatch { .. })));
        assert!(matches!(exp_full(&k, &al, 2), Err(Error::KindMismatch { .. })));
        assert!(matches!(log_star(&k, &al, 2), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn full_exponential_is_sum_over_all_partitions() {
        let (al, k) = setup();
        let full = Functional::lie_full(k.table().clone()).unwrap();
        let e = exp_full(&full, &al, 2).unwrap();
        assert_eq!(e.eval(&al.parse("a a").unwrap()).unwrap(), int(11 + 4));
        assert_eq!(e.eval(&al.parse("a L a").unwrap()).unwrap(), int(11 + 4));
        assert_eq!(e.eval(&al.parse("R").unwrap()).unwrap(), int(1));
    }

    #[test]
    fn closed_form_matches_example_shape() {
        // f, g with distinct values per word so each product is identifiable.
        let al = Alphabet::with_vars(&["a", "b", "c"], &["aR"]).unwrap();
        let words = al.complete_words(4);
        let f = Functional::lie_interval(words.iter().enumerate().map(|(i, w)| (w.clone(), int(i as i64 + 1))).collect()).unwrap();
        let g = Functional::lie_interval(words.iter().enumerate().map(|(i, w)| (w.clone(), int(1000 * (i as i64 + 1)))).collect()).unwrap();
        let w = al.parse("a R aR b c").unwrap();
        let p = |s: &str| al.parse(s).unwrap();
        let expected = f.eval(&p("a aR")).unwrap() * g.eval(&p("b c")).unwrap()
            + f.eval(&p("a aR c")).unwrap() * g.eval(&p("b")).unwrap()
            + f.eval(&p("a aR b")).unwrap() * g.eval(&p("c")).unwrap();
        assert_eq!(prelie_interval_closed_form(&f, &g, &w).unwrap(), expected);
        assert_eq!(prelie_eval(&f, &g, &w).unwrap(), expected);
    }
}
