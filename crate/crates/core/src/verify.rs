//! Self-contained invariant suites. Each suite enumerates a finite range
//! exhaustively (random rational tables come from a seeded generator) and
//! reports the first counterexample.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bipartition::BipartitionClass;
use crate::biset::LrWord;
use crate::cumulants::{check_against_exponentials, cumulants_to_moments, moments_to_cumulants, CumulantFamily, MomentData};
use crate::error::{Error, Result};
use crate::functional::{
    exp_full, exp_prec, opaque_interval_words, exp_star, exp_succ, log_star, oracle_sum, prec_eval, OracleSum, prelie_eval, prelie_interval_closed_form,
    star_eval, succ_eval, ConvolutionPowers, Functional, LeftExponential, LinearForm, Memoized, PreLie, Prec, RightExponential,
    Star, Succ,
};
use crate::multiset::Multiset;
use crate::rational::Rational;
use crate::translucent::{exchange, TranslucentWord};
use crate::words::{
    coproduct, coproduct_left, coproduct_right, horizontal_product, opaque_factorize, reduced_coproduct, Alphabet,
    IncompleteWord, WordSum,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Codendriform,
    Dendriform,
    Exchange,
    Exponentials,
    Prelie,
    Roundtrip,
    SingleFaced,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Codendriform,
        Suite::Dendriform,
        Suite::Exchange,
        Suite::Exponentials,
        Suite::Prelie,
        Suite::Roundtrip,
        Suite::SingleFaced,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Codendriform => "codendriform",
            Suite::Dendriform => "dendriform",
            Suite::Exchange => "exchange",
            Suite::Exponentials => "exponentials",
            Suite::Prelie => "prelie",
            Suite::Roundtrip => "roundtrip",
            Suite::SingleFaced => "single_faced",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} checks, {} failures", self.suite, self.checks, self.failures)?;
        if let Some(first) = &self.first_failure {
            write!(f, "\nfirst counterexample: {first}")?;
        }
        Ok(())
    }
}

/// Collects check outcomes.
struct Tally {
    suite: Suite,
    checks: u64,
    failures: u64,
    first: Option<String>,
}

impl Tally {
    fn new(suite: Suite) -> Self {
        Tally { suite, checks: 0, failures: 0, first: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport { suite: self.suite, checks: self.checks, failures: self.failures, first_failure: self.first }
    }
}

/// Runs one suite over words up to `max_len`, with random tables drawn from `seed`.
pub fn run(suite: Suite, max_len: usize, seed: u64) -> Result<SuiteReport> {
    let mut tally = Tally::new(suite);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Codendriform => codendriform(&mut tally, max_len)?,
        Suite::Dendriform => dendriform(&mut tally, max_len, &mut rng)?,
        Suite::Exchange => exchange_suite(&mut tally, max_len)?,
        Suite::Exponentials => exponentials(&mut tally, max_len, &mut rng)?,
        Suite::Prelie => prelie(&mut tally, max_len, &mut rng)?,
        Suite::Roundtrip => roundtrip(&mut tally, max_len, &mut rng)?,
        Suite::SingleFaced => single_faced(&mut tally, max_len, &mut rng)?,
    }
    Ok(tally.finish())
}

/// One left variable `a` and one right variable `b`.
pub fn one_one() -> Alphabet {
    Alphabet::with_vars(&["a"], &["b"]).expect("valid names")
}

/// Left variables `a`, `b` and right variables `c`, `d`.
pub fn two_two() -> Alphabet {
    Alphabet::with_vars(&["a", "b"], &["c", "d"]).expect("valid names")
}

/// A small random rational: numerator in `-9..=9`, denominator in `1..=4`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=4)))
}

pub fn random_table(words: &[IncompleteWord], rng: &mut impl Rng) -> HashMap<IncompleteWord, Rational> {
    words.iter().map(|w| (w.clone(), random_rational(rng))).collect()
}

/// Random moments on every complete word up to `max_len`.
pub fn random_moments(alphabet: &Alphabet, max_len: usize, rng: &mut impl Rng) -> MomentData {
    let moments = alphabet.complete_words(max_len).into_iter().map(|w| (w, random_rational(rng))).collect();
    MomentData::new(alphabet.clone(), moments).expect("complete keys")
}

/// A random generic functional vanishing on placeholder-only words.
fn random_generic(alphabet: &Alphabet, max_len: usize, rng: &mut impl Rng) -> Functional {
    let words: Vec<IncompleteWord> =
        alphabet.incomplete_words(max_len).into_iter().filter(|w| !w.is_placeholder_only()).collect();
    Functional::generic(random_table(&words, rng), Rational::zero())
}

type Triple = (IncompleteWord, IncompleteWord, IncompleteWord);

fn left_then(sum: &WordSum, split: impl Fn(&IncompleteWord) -> Result<WordSum>) -> Result<Multiset<Triple>> {
    let mut out = Multiset::new();
    for ((x, y), n) in sum {
        for ((x1, x2), m) in &split(x)? {
            out.insert_n((x1.clone(), x2.clone(), y.clone()), n * m);
        }
    }
    Ok(out)
}

fn right_then(sum: &WordSum, split: impl Fn(&IncompleteWord) -> Result<WordSum>) -> Result<Multiset<Triple>> {
    let mut out = Multiset::new();
    for ((x, y), n) in sum {
        for ((y1, y2), m) in &split(y)? {
            out.insert_n((x.clone(), y1.clone(), y2.clone()), n * m);
        }
    }
    Ok(out)
}

fn full(w: &IncompleteWord) -> Result<WordSum> {
    Ok(coproduct(w))
}

fn reduced(w: &IncompleteWord) -> Result<WordSum> {
    Ok(reduced_coproduct(w))
}

fn codendriform(tally: &mut Tally, max_len: usize) -> Result<()> {
    let alphabet = one_one();
    for w in alphabet.incomplete_words(max_len) {
        let show = || alphabet.format(&w);
        let d = coproduct(&w);
        tally.check(left_then(&d, full)? == right_then(&d, full)?, || format!("coassociativity fails on `{}`", show()));
        let unit_left: Vec<_> = d.iter().filter(|((x, _), _)| x.is_placeholder_only()).collect();
        let unit_right: Vec<_> = d.iter().filter(|((_, y), _)| y.is_placeholder_only()).collect();
        tally.check(
            unit_left.len() == 1 && unit_left[0].0 .1 == w && unit_right.len() == 1 && unit_right[0].0 .0 == w,
            || format!("counit fails on `{}`", show()),
        );
        if w.is_placeholder_only() {
            continue;
        }
        let left = coproduct_left(&w)?;
        let right = coproduct_right(&w)?;
        let mut split = left.clone();
        split.extend_from(right.clone());
        tally.check(split == reduced_coproduct(&w), || format!("Δ̄ ≠ Δ≺ + Δ≻ on `{}`", show()));
        tally.check(
            left_then(&left, coproduct_left)? == right_then(&left, reduced)?,
            || format!("(Δ≺⊗id)Δ≺ ≠ (id⊗Δ̄)Δ≺ on `{}`", show()),
        );
        tally.check(
            right_then(&right, coproduct_right)? == left_then(&right, reduced)?,
            || format!("(id⊗Δ≻)Δ≻ ≠ (Δ̄⊗id)Δ≻ on `{}`", show()),
        );
        tally.check(
            left_then(&left, coproduct_right)? == right_then(&right, coproduct_left)?,
            || format!("(Δ≻⊗id)Δ≺ ≠ (id⊗Δ≺)Δ≻ on `{}`", show()),
        );
        // Conilpotency: |[w]_1| iterations of the reduced coproduct annihilate w.
        let mut level: Vec<Vec<IncompleteWord>> = vec![vec![w.clone()]];
        for _ in 0..w.opaque_count() {
            level = level
                .into_iter()
                .flat_map(|mut seq| {
                    let last = seq.pop().expect("nonempty");
                    reduced_coproduct(&last)
                        .into_iter()
                        .flat_map(move |((x, y), n)| {
                            let mut s = seq.clone();
                            s.push(x);
                            s.push(y);
                            std::iter::repeat_n(s, n as usize)
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        tally.check(level.is_empty(), || format!("reduced coproduct not nilpotent on `{}`", show()));
        let f = opaque_factorize(&w);
        tally.check(f.reassemble().as_ref() == Ok(&w), || format!("opaque factorization does not reassemble `{}`", show()));
    }
    Ok(())
}

fn dendriform(tally: &mut Tally, max_len: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let alphabet = one_one();
    let l1 = random_generic(&alphabet, max_len, rng);
    let l2 = random_generic(&alphabet, max_len, rng);
    let l3 = random_generic(&alphabet, max_len, rng);
    let l1_prec_l2 = Memoized::new(Prec(&l1, &l2));
    let l1_succ_l2 = Memoized::new(Succ(&l1, &l2));
    let l1_star_l2 = Memoized::new(Star(&l1, &l2));
    let l2_star_l3 = Memoized::new(Star(&l2, &l3));
    let l2_succ_l3 = Memoized::new(Succ(&l2, &l3));
    let l2_prec_l3 = Memoized::new(Prec(&l2, &l3));
    let eps = Functional::counit();
    // A group-like element: ε + ℓ₁.
    let g = Functional::generic(l1.table().clone(), Rational::from_integer(1.into()));
    let g_star_l2 = Memoized::new(Star(&g, &l2));
    let l2_star_l3_g = Memoized::new(Star(&l3, &g));
    for w in alphabet.incomplete_words(max_len) {
        let show = || alphabet.format(&w);
        let pairs: [(&str, Rational, Rational); 8] = [
            ("(ℓ₁≺ℓ₂)≺ℓ₃ = ℓ₁≺(ℓ₂⋆ℓ₃)", prec_eval(&l1_prec_l2, &l3, &w)?, prec_eval(&l1, &l2_star_l3, &w)?),
            ("ℓ₁≻(ℓ₂≻ℓ₃) = (ℓ₁⋆ℓ₂)≻ℓ₃", succ_eval(&l1, &l2_succ_l3, &w)?, succ_eval(&l1_star_l2, &l3, &w)?),
            ("ℓ₁≻(ℓ₂≺ℓ₃) = (ℓ₁≻ℓ₂)≺ℓ₃", succ_eval(&l1, &l2_prec_l3, &w)?, prec_eval(&l1_succ_l2, &l3, &w)?),
            (
                "ℓ₁⋆ℓ₂ = ℓ₁≺ℓ₂ + ℓ₁≻ℓ₂",
                l1_star_l2.eval(&w)?,
                l1_prec_l2.eval(&w)? + l1_succ_l2.eval(&w)?,
            ),
            ("(ℓ₁⋆ℓ₂)⋆ℓ₃ = ℓ₁⋆(ℓ₂⋆ℓ₃)", star_eval(&l1_star_l2, &l3, &w)?, star_eval(&l1, &l2_star_l3, &w)?),
            ("(g⋆ℓ₂)⋆(ℓ₃⋆g) = g⋆(ℓ₂⋆(ℓ₃⋆g))", star_eval(&g_star_l2, &l2_star_l3_g, &w)?, {
                let inner = Memoized::new(Star(&l2, &l2_star_l3_g));
                star_eval(&g, &inner, &w)?
            }),
            ("ε⋆ℓ₁ = ℓ₁", star_eval(&eps, &l1, &w)?, l1.eval(&w)?),
            ("ℓ₁⋆ε = ℓ₁", star_eval(&l1, &eps, &w)?, l1.eval(&w)?),
        ];
        for (name, a, b) in pairs {
            tally.check(a == b, || format!("{name} fails on `{}`: {a} ≠ {b}", show()));
        }
    }
    // Group closure under the horizontal product.
    let f = Functional::group_multiplicative(random_table(&alphabet.complete_words(max_len), rng), &alphabet, max_len)?;
    let h = Functional::group_multiplicative(random_table(&alphabet.complete_words(max_len), rng), &alphabet, max_len)?;
    let fh = Memoized::new(Star(&f, &h));
    for_each_split(max_len, |t, i, t_minus, t_plus| {
        for w_minus in alphabet.words_of_type(t_minus) {
            for w_plus in alphabet.words_of_type(t_plus) {
                let v = horizontal_product(&w_minus, &w_plus, t, i)?;
                let lhs = fh.eval(&v)?;
                let rhs = fh.eval(&w_minus)? * fh.eval(&w_plus)?;
                tally.check(lhs == rhs, || format!("f⋆g not multiplicative on `{}` split at {i} of {t}", alphabet.format(&v)));
            }
        }
        Ok(())
    })
}

/// Calls `visit(t, i, t^{⋖i}, t^{⋗i})` for every type `t` with `|t| ≤ max_len`
/// and every translucent `i`.
fn for_each_split(
    max_len: usize,
    mut visit: impl FnMut(&TranslucentWord, usize, &TranslucentWord, &TranslucentWord) -> Result<()>,
) -> Result<()> {
    for t in all_types(max_len) {
        for i in t.translucent_positions() {
            let (a, b) = t.split(i)?;
            visit(&t, i, &a, &b)?;
        }
    }
    Ok(())
}

/// Every translucent word of length `1..=max_len`.
pub fn all_types(max_len: usize) -> Vec<TranslucentWord> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        for alpha in LrWord::all_of_length(n) {
            for bits in 0..1u64 << n {
                let mask = (0..n).map(|k| bits >> (n - 1 - k) & 1 == 1).collect();
                out.push(TranslucentWord::new(alpha.clone(), mask).expect("lengths agree"));
            }
        }
    }
    out
}

/// The right factors `s` of `t` (those with `r ∘ s = t` for some `r`).
pub fn right_factors(t: &TranslucentWord) -> Vec<TranslucentWord> {
    t.factorizations().into_iter().map(|(_, s)| s).collect()
}

fn exchange_suite(tally: &mut Tally, max_len: usize) -> Result<()> {
    for_each_split(max_len, |t, i, t_minus, t_plus| {
        let show = |what: &str| format!("{what} at {t}, i = {i}");
        for s_minus in right_factors(t_minus) {
            for s_plus in right_factors(t_plus) {
                let ex = exchange(&s_minus, &s_plus, t, i)?;
                let (a, b) = ex.s.split(i)?;
                let recomposes = ex.r.compose(&ex.s).as_ref() == Ok(t);
                tally.check(recomposes && a == s_minus && b == s_plus, || {
                    show(&format!("exchange({s_minus}, {s_plus}) gives r = {}, s = {}", ex.r, ex.s))
                });
            }
        }
        exchange_pairs(tally, t, i)?;
        exchange_triples(tally, t, i, t_minus, t_plus)?;
        compatibility(tally, t, i, t_minus, t_plus)
    })
}

/// Combining three right factors around `i ⋖ j` in either order.
fn exchange_pairs(tally: &mut Tally, t: &TranslucentWord, i: usize) -> Result<()> {
    let order = t.standard_order();
    for j in t.translucent_positions() {
        if !order.lt(i, j) {
            continue;
        }
        let (before_j, after_j) = t.split(j)?;
        let (before_i, after_i) = t.split(i)?;
        // Natural indices of i inside t^{⋖j} and of j inside t^{⋗i}.
        let i_in = order.before(j).into_iter().filter(|&p| p <= i).count();
        let j_in = order.after(i).into_iter().filter(|&p| p <= j).count();
        let (a, mid) = before_j.split(i_in)?;
        debug_assert_eq!(a, before_i);
        for s_a in right_factors(&a) {
            for s_b in right_factors(&mid) {
                for s_c in right_factors(&after_j) {
                    let ab = exchange(&s_a, &s_b, &before_j, i_in)?;
                    let first = exchange(&ab.s, &s_c, t, j)?;
                    let bc = exchange(&s_b, &s_c, &after_i, j_in)?;
                    let second = exchange(&s_a, &bc.s, t, i)?;
                    tally.check(first.r == second.r && first.s == second.s, || {
                        format!("exchange associativity fails at {t}, i = {i}, j = {j}, factors {s_a} | {s_b} | {s_c}")
                    });
                }
            }
        }
    }
    Ok(())
}

/// The three constraints relating exchanges of composite right factors
/// `r_± ∘ s_±` to exchanges of their parts.
fn exchange_triples(
    tally: &mut Tally,
    t: &TranslucentWord,
    i: usize,
    t_minus: &TranslucentWord,
    t_plus: &TranslucentWord,
) -> Result<()> {
    // All chains (r, s) with s a right factor of the side and r a right factor of what remains.
    let chains = |side: &TranslucentWord| -> Vec<(TranslucentWord, TranslucentWord)> {
        right_factors(side)
            .into_iter()
            .flat_map(|s| {
                let rest = side.restrict(&s.translucent_positions()).expect("in range");
                right_factors(&rest).into_iter().map(move |r| (r, s.clone()))
            })
            .collect()
    };
    let minus = chains(t_minus);
    let plus = chains(t_plus);
    for (r_minus, s_minus) in &minus {
        for (r_plus, s_plus) in &plus {
            let rs_minus = r_minus.compose(s_minus)?;
            let rs_plus = r_plus.compose(s_plus)?;
            let outer = exchange(s_minus, s_plus, t, i)?;
            let whole = exchange(&rs_minus, &rs_plus, t, i)?;
            let nested = exchange(s_minus, s_plus, &whole.s, i)?;
            let inner = exchange(r_minus, r_plus, &outer.r, outer.index)?;
            let describe = |which: &str| {
                format!("constraint ({which}) fails at {t}, i = {i}, r± = {r_minus} | {r_plus}, s± = {s_minus} | {s_plus}")
            };
            tally.check(outer.s == nested.s, || describe("a"));
            tally.check(inner.r == whole.r, || describe("b"));
            tally.check(inner.s == nested.r, || describe("c"));
        }
    }
    Ok(())
}

/// `Δ(w⁻ ⊖ w⁺)` against the exchange-assembled products of the factors'
/// coproducts, plus the left/right halves.
fn compatibility(
    tally: &mut Tally,
    t: &TranslucentWord,
    i: usize,
    t_minus: &TranslucentWord,
    t_plus: &TranslucentWord,
) -> Result<()> {
    let alphabet = one_one();
    for w_minus in alphabet.words_of_type(t_minus) {
        for w_plus in alphabet.words_of_type(t_plus) {
            let v = horizontal_product(&w_minus, &w_plus, t, i)?;
            // The ⋖-first opaque letter of v lies in w⁻ when w⁻ has one.
            let first_in_minus = !w_minus.is_placeholder_only();
            let first_minus = w_minus.first_opaque_bit().unwrap_or(0);
            let first_plus = w_plus.first_opaque_bit().unwrap_or(0);
            let mut all = WordSum::new();
            let mut left = WordSum::new();
            let mut right = WordSum::new();
            for cut_minus in w_minus.cuts() {
                for cut_plus in w_plus.cuts() {
                    let (x_minus, y_minus) = (w_minus.restrict_bits(cut_minus), w_minus.translucidate_bits(cut_minus));
                    let (x_plus, y_plus) = (w_plus.restrict_bits(cut_plus), w_plus.translucidate_bits(cut_plus));
                    let ex = exchange(&y_minus.type_of(), &y_plus.type_of(), t, i)?;
                    let u = horizontal_product(&y_minus, &y_plus, &ex.s, i)?;
                    let l = horizontal_product(&x_minus, &x_plus, &ex.r, ex.index)?;
                    let first_left = if first_in_minus { cut_minus & first_minus != 0 } else { cut_plus & first_plus != 0 };
                    let reduced = !l.is_placeholder_only() && !u.is_placeholder_only();
                    if reduced && !v.is_placeholder_only() {
                        if first_left {
                            left.insert((l.clone(), u.clone()));
                        } else {
                            right.insert((l.clone(), u.clone()));
                        }
                    }
                    all.insert((l, u));
                }
            }
            let show = || format!("`{}` = `{}` ⊖ `{}` at {t}, i = {i}", alphabet.format(&v), alphabet.format(&w_minus), alphabet.format(&w_plus));
            tally.check(coproduct(&v) == all, || format!("Δ∘m⊖ ≠ m⊖⊖∘(Δ⊖Δ) on {}", show()));
            if !v.is_placeholder_only() {
                tally.check(coproduct_left(&v)? == left, || format!("Δ≺ compatibility fails on {}", show()));
                tally.check(coproduct_right(&v)? == right, || format!("Δ≻ compatibility fails on {}", show()));
            }
        }
    }
    Ok(())
}

fn exponentials(tally: &mut Tally, max_len: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let alphabet = two_two();
    let words = alphabet.complete_words(max_len);
    let k = Functional::lie_interval(random_table(&words, rng))?;
    let b = Functional::lie_interval(random_table(&words, rng))?;
    let m = Functional::lie_interval(random_table(&words, rng))?;
    let kf = Functional::lie_full(random_table(&words, rng))?;
    let e_prec = exp_prec(&k, &alphabet, max_len)?;
    let e_succ = exp_succ(&b, &alphabet, max_len)?;
    let e_star = exp_star(&m, &alphabet, max_len)?;
    let e_full = exp_full(&kf, &alphabet, max_len)?;
    let back = log_star(&e_star, &alphabet, max_len)?;
    let mut shaded = OracleSum::new(BipartitionClass::ShadedNoncrossing);
    let mut interval = OracleSum::new(BipartitionClass::Interval);
    let mut monotone = OracleSum::new(BipartitionClass::Monotone);
    let mut all = OracleSum::new(BipartitionClass::All);
    for w in &words {
        let show = || alphabet.format(w);
        let cases: [(&str, Rational, Rational); 5] = [
            ("exp≺ = shaded noncrossing sum", e_prec.eval(w)?, shaded.eval(&k, w)?),
            ("exp≻ = interval sum", e_succ.eval(w)?, interval.eval(&b, w)?),
            ("exp⋆ = monotone sum", e_star.eval(w)?, monotone.eval(&m, w)?),
            ("exp = sum over all bipartitions", e_full.eval(w)?, all.eval(&kf, w)?),
            ("log⋆ ∘ exp⋆ = id", back.eval(w)?, m.eval(w)?),
        ];
        for (name, a, c) in cases {
            tally.check(a == c, || format!("{name} fails on `{}`: {a} ≠ {c}", show()));
        }
    }
    // On incomplete words, over a smaller alphabet.
    let small = one_one();
    let len = max_len.min(5);
    let small_words = small.complete_words(len);
    let k = Functional::lie_interval(random_table(&small_words, rng))?;
    let left = LeftExponential::new(&k);
    let right = RightExponential::new(&k);
    let powers = ConvolutionPowers::new(&k)?;
    // Group elements factor over the opaque runs, so the class sums are
    // taken run by run.
    let per_run = |w: &IncompleteWord, class| -> Result<Rational> {
        opaque_interval_words(w).iter().try_fold(Rational::one(), |acc, run| Ok(acc * oracle_sum(&k, run, class)?))
    };
    for w in small.incomplete_words(len) {
        let show = || small.format(&w);
        let cases: [(&str, Rational, Rational); 3] = [
            ("k≺-fixed point = shaded sum", left.eval(&w)?, oracle_sum(&k, &w, BipartitionClass::ShadedNoncrossing)?),
            ("≻k-fixed point = product of interval sums", right.eval(&w)?, per_run(&w, BipartitionClass::Interval)?),
            ("exp⋆ = product of monotone sums", powers.exp(&w)?, per_run(&w, BipartitionClass::Monotone)?),
        ];
        for (name, a, c) in cases {
            tally.check(a == c, || format!("{name} fails on `{}`: {a} ≠ {c}", show()));
        }
        if !w.is_placeholder_only() {
            tally.check(left.eval(&w)? == prec_eval(&k, &left, &w)?, || format!("M ≠ k≺M on `{}`", show()));
            tally.check(right.eval(&w)? == succ_eval(&right, &k, &w)?, || format!("M ≠ M≻k on `{}`", show()));
        }
    }
    let moments = random_moments(&two_two(), max_len.min(5), rng);
    let report = check_against_exponentials(&moments, max_len.min(5))?;
    for row in &report.rows {
        tally.check(row.passed(), || {
            format!(
                "moments ≠ exponentials on `{}`: φ = {}, exp≺ = {}, exp≻ = {}, exp⋆ = {}",
                row.word, row.moment, row.exp_prec, row.exp_succ, row.exp_star
            )
        });
    }
    Ok(())
}

fn prelie(tally: &mut Tally, max_len: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let alphabet = one_one();
    let complete = alphabet.complete_words(max_len);
    let ff = Functional::lie_full(random_table(&complete, rng))?;
    let gf = Functional::lie_full(random_table(&complete, rng))?;
    let fi = Functional::lie_interval(random_table(&complete, rng))?;
    let gi = Functional::lie_interval(random_table(&complete, rng))?;
    let a = random_generic(&alphabet, max_len, rng);
    let b = random_generic(&alphabet, max_len, rng);
    let c = random_generic(&alphabet, max_len, rng);
    let ab = Memoized::new(PreLie(&a, &b));
    let ac = Memoized::new(PreLie(&a, &c));
    let bc = Memoized::new(PreLie(&b, &c));
    let cb = Memoized::new(PreLie(&c, &b));
    for w in alphabet.incomplete_words(max_len) {
        let show = || alphabet.format(&w);
        let full = prelie_eval(&ff, &gf, &w)?;
        tally.check(full.is_zero(), || format!("f◁g = {full} ≠ 0 on `{}` for opaque-only f, g", show()));
        let direct = prelie_eval(&fi, &gi, &w)?;
        let closed = prelie_interval_closed_form(&fi, &gi, &w)?;
        tally.check(direct == closed, || format!("f◁g = {direct} but the interval formula gives {closed} on `{}`", show()));
        // Associator (a◁b)◁c − a◁(b◁c) is symmetric in b, c.
        let assoc_bc = prelie_eval(&ab, &c, &w)? - prelie_eval(&a, &bc, &w)?;
        let assoc_cb = prelie_eval(&ac, &b, &w)? - prelie_eval(&a, &cb, &w)?;
        tally.check(assoc_bc == assoc_cb, || format!("preLie identity fails on `{}`", show()));
    }
    Ok(())
}

fn roundtrip(tally: &mut Tally, max_len: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let alphabet = two_two();
    let moments = random_moments(&alphabet, max_len, rng);
    for family in CumulantFamily::ALL {
        let c = moments_to_cumulants(&moments, family, max_len)?;
        let back = cumulants_to_moments(&c, max_len)?;
        for (w, v) in &moments.moments {
            let got = back.get(w)?;
            tally.check(got == v, || format!("{family} round trip changes `{}`: {v} → {got}", alphabet.format(w)));
        }
    }
    Ok(())
}

fn single_faced(tally: &mut Tally, max_len: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let alphabet = Alphabet::with_vars(&["a", "b"], &[]).expect("valid names");
    let moments = random_moments(&alphabet, max_len, rng);
    let lookup = |w: &[u32]| -> Rational {
        let word = IncompleteWord::new(w.iter().map(|&id| crate::words::Letter::Var(id, alphabet.side(id))).collect());
        moments.get(&word).cloned().expect("tabulated")
    };
    for family in CumulantFamily::ALL {
        let c = moments_to_cumulants(&moments, family, max_len)?;
        let oracle = single::cumulants(family, &lookup, alphabet.len() as u32, max_len);
        for (w, v) in &c.values {
            let ids: Vec<u32> = w
                .letters()
                .iter()
                .map(|l| match *l {
                    crate::words::Letter::Var(id, _) => id,
                    crate::words::Letter::Hole(_) => unreachable!("complete words"),
                })
                .collect();
            let expected = &oracle[&ids];
            tally.check(v == expected, || {
                format!("{family} cumulant of `{}` is {v}, one-faced oracle gives {expected}", alphabet.format(w))
            });
        }
    }
    Ok(())
}

/// One-faced moment-cumulant relations over `{1, …, n}` with the natural order,
/// written directly from their recursive decompositions.
pub mod single {
    use std::collections::HashMap;

    use num_traits::{One, Zero};

    use crate::cumulants::CumulantFamily;
    use crate::rational::{inverse_factorial, Rational};

    type Table = HashMap<Vec<u32>, Rational>;

    fn all_words(letters: u32, max_len: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|w: &Vec<u32>| {
                    (0..letters).map(move |l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    /// Solves `φ = F(c)` for `c` one word at a time, shortest first. `expand`
    /// returns `φ(w)` computed from the current cumulants, where `c(w)` itself
    /// enters with coefficient one.
    pub fn cumulants(
        family: CumulantFamily,
        moment: &dyn Fn(&[u32]) -> Rational,
        letters: u32,
        max_len: usize,
    ) -> Table {
        let mut c: Table = HashMap::new();
        for w in all_words(letters, max_len) {
            c.insert(w.clone(), Rational::zero());
            let without = match family {
                CumulantFamily::Bifree => free_moment(&w, &c),
                CumulantFamily::Biboolean => boolean_moment(&w, &c),
                CumulantFamily::Bimonotone => monotone_moment(&w, &c),
            };
            c.insert(w.clone(), moment(&w) - without);
        }
        c
    }

    /// Free: decompose by the block `V` containing the first letter; the gaps
    /// between consecutive elements of `V` and after its last element carry
    /// independent noncrossing partitions.
    pub fn free_moment(w: &[u32], c: &Table) -> Rational {
        let n = w.len();
        if n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        // Subsets V of {1..n-1} joined with 0.
        for bits in 0..1u32 << (n - 1) {
            let v: Vec<usize> = std::iter::once(0).chain((1..n).filter(|k| bits >> (k - 1) & 1 == 1)).collect();
            let word: Vec<u32> = v.iter().map(|&k| w[k]).collect();
            let mut term = c[&word].clone();
            let mut bounds = v.clone();
            bounds.push(n);
            for pair in bounds.windows(2) {
                term *= free_moment(&w[pair[0] + 1..pair[1]], c);
            }
            acc += term;
        }
        acc
    }

    /// Boolean: decompose by the first interval.
    pub fn boolean_moment(w: &[u32], c: &Table) -> Rational {
        if w.is_empty() {
            return Rational::one();
        }
        (1..=w.len()).map(|k| c[&w[..k]].clone() * boolean_moment(&w[k..], c)).sum()
    }

    /// Monotone: brute force over all set partitions and all block orders,
    /// keeping the noncrossing ones whose nested blocks carry larger labels.
    pub fn monotone_moment(w: &[u32], c: &Table) -> Rational {
        let n = w.len();
        let mut acc = Rational::zero();
        for rgs in set_partitions(n) {
            let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
            let crossing = (0..n).any(|a| {
                (a + 1..n).any(|b| {
                    (b + 1..n).any(|cc| (cc + 1..n).any(|d| rgs[a] == rgs[cc] && rgs[b] == rgs[d] && rgs[a] != rgs[b]))
                })
            });
            if crossing {
                continue;
            }
            let good = permutations(k)
                .into_iter()
                .filter(|label| {
                    (0..n).all(|a| {
                        (a + 1..n).all(|b| {
                            (b + 1..n).all(|cc| rgs[a] != rgs[cc] || rgs[b] == rgs[a] || label[rgs[a]] < label[rgs[b]])
                        })
                    })
                })
                .count();
            if good == 0 {
                continue;
            }
            let mut term = Rational::from_integer(good.into()) * inverse_factorial(k);
            for block in 0..k {
                let word: Vec<u32> = (0..n).filter(|&p| rgs[p] == block).map(|p| w[p]).collect();
                term *= c[&word].clone();
            }
            acc += term;
        }
        acc
    }

    fn set_partitions(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn go(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            let limit = if cur.is_empty() { 0 } else { max + 1 };
            for b in 0..=limit {
                cur.push(b);
                go(n, cur, max.max(b), out);
                cur.pop();
            }
        }
        if n == 0 {
            out.push(Vec::new());
        } else {
            go(n, &mut cur, 0, &mut out);
        }
        out
    }

    fn permutations(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }
}
