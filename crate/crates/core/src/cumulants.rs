//! Moment-cumulant conversion for the bifree, biBoolean and bimonotone
//! families, and the JSON tables used to exchange moments and cumulants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::bipartition::BipartitionClass;
use crate::biset::{LrWord, Side};
use crate::error::{Error, Result};
use crate::functional::{exp_prec, exp_star, exp_succ, weighted_bipartitions, Functional, LinearForm, WeightedBipartitions};
use crate::rational::{self, Rational};
use crate::translucent::TranslucentWord;
use crate::words::{Alphabet, IncompleteWord, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CumulantFamily {
    /// Sums over noncrossing bipartitions.
    Bifree,
    /// Sums over interval bipartitions.
    Biboolean,
    /// Sums over monotone labeled bipartitions, weighted by `1/|π|!`.
    Bimonotone,
}

impl CumulantFamily {
    pub const ALL: [CumulantFamily; 3] = [CumulantFamily::Bifree, CumulantFamily::Biboolean, CumulantFamily::Bimonotone];

    pub fn name(self) -> &'static str {
        match self {
            CumulantFamily::Bifree => "bifree",
            CumulantFamily::Biboolean => "biboolean",
            CumulantFamily::Bimonotone => "bimonotone",
        }
    }

    pub fn class(self) -> BipartitionClass {
        match self {
            CumulantFamily::Bifree => BipartitionClass::Noncrossing,
            CumulantFamily::Biboolean => BipartitionClass::Interval,
            CumulantFamily::Bimonotone => BipartitionClass::Monotone,
        }
    }
}

impl FromStr for CumulantFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CumulantFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown cumulant family `{s}`")))
    }
}

impl fmt::Display for CumulantFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Moments `φ(w)` on complete words; the empty word has moment 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentData {
    pub alphabet: Alphabet,
    pub moments: BTreeMap<IncompleteWord, Rational>,
}

/// Cumulants of one family on nonempty complete words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CumulantData {
    pub alphabet: Alphabet,
    pub family: CumulantFamily,
    pub values: BTreeMap<IncompleteWord, Rational>,
}

fn check_keys<'a>(keys: impl Iterator<Item = &'a IncompleteWord>, allow_empty: bool) -> Result<()> {
    for w in keys {
        if !w.is_complete() {
            return Err(Error::Schema(format!("`{w}` contains a placeholder")));
        }
        if w.is_empty() && !allow_empty {
            return Err(Error::Schema("cumulants are not defined on the empty word".into()));
        }
    }
    Ok(())
}

impl MomentData {
    /// Validates keys; inserts `φ(∅) = 1` when absent and rejects any other value.
    pub fn new(alphabet: Alphabet, mut moments: BTreeMap<IncompleteWord, Rational>) -> Result<Self> {
        check_keys(moments.keys(), true)?;
        let unit = moments.entry(IncompleteWord::default()).or_insert_with(Rational::one);
        if !unit.is_one() {
            return Err(Error::Schema(format!("the empty word must have moment 1, got {}", rational::format(unit))));
        }
        Ok(MomentData { alphabet, moments })
    }

    pub fn get(&self, w: &IncompleteWord) -> Result<&Rational> {
        self.moments.get(w).ok_or_else(|| Error::MissingEntry(self.alphabet.format(w)))
    }

    /// The moment functional as a multiplicative functional on incomplete words.
    pub fn functional(&self, max_len: usize) -> Result<Functional> {
        let table = self
            .alphabet
            .complete_words(max_len)
            .into_iter()
            .map(|w| Ok((w.clone(), self.get(&w)?.clone())))
            .collect::<Result<HashMap<_, _>>>()?;
        Functional::group_multiplicative(table, &self.alphabet, max_len)
    }
}

impl CumulantData {
    pub fn new(alphabet: Alphabet, family: CumulantFamily, values: BTreeMap<IncompleteWord, Rational>) -> Result<Self> {
        check_keys(values.keys(), false)?;
        Ok(CumulantData { alphabet, family, values })
    }

    pub fn get(&self, w: &IncompleteWord) -> Result<&Rational> {
        self.values.get(w).ok_or_else(|| Error::MissingEntry(self.alphabet.format(w)))
    }

    /// The cumulants as an interval-supported functional.
    pub fn functional(&self) -> Result<Functional> {
        Functional::lie_interval(self.values.iter().map(|(w, v)| (w.clone(), v.clone())).collect())
    }
}

/// Weighted partitions of fully opaque types, cached per `{L, R}`-word.
struct PartitionWeights {
    family: CumulantFamily,
    cache: HashMap<LrWord, WeightedBipartitions>,
}

impl PartitionWeights {
    fn new(family: CumulantFamily) -> Self {
        PartitionWeights { family, cache: HashMap::new() }
    }

    /// Partitions of `1..=|α|` in the family's class, one-block partition first.
    fn get(&mut self, alpha: &LrWord) -> Result<&WeightedBipartitions> {
        if !self.cache.contains_key(alpha) {
            let list = weighted_bipartitions(&TranslucentWord::opaque(alpha.clone()), self.family.class())?;
            debug_assert!(alpha.is_empty() || list.first().is_some_and(|(b, w)| b.len() == 1 && w.is_one()));
            self.cache.insert(alpha.clone(), list);
        }
        Ok(&self.cache[alpha])
    }
}

/// Values on complete words stored densely by letter ids: a word of length
/// `n` over `A` letters sits at `(A^n - 1)/(A - 1) + Σ id_k A^{n-1-k}`.
struct DenseTable {
    letters: usize,
    values: Vec<Option<Rational>>,
}

impl DenseTable {
    fn new(alphabet: &Alphabet, max_len: usize) -> Self {
        let letters = alphabet.len();
        let size = (0..=max_len).map(|n| letters.pow(n as u32)).sum();
        DenseTable { letters, values: vec![None; size] }
    }

    fn index(&self, ids: impl Iterator<Item = u32>) -> usize {
        let mut offset = 0;
        let mut width = 1;
        let mut code = 0;
        for id in ids {
            offset += width;
            width *= self.letters;
            code = code * self.letters + id as usize;
        }
        offset + code
    }

    fn insert(&mut self, w: &IncompleteWord, v: Rational) {
        let k = self.index(letter_ids(w).into_iter());
        self.values[k] = Some(v);
    }

    /// `Π_{V ∈ blocks} value(w|_V)`.
    fn block_product(&self, ids: &[u32], blocks: &[Vec<usize>], alphabet: &Alphabet, w: &IncompleteWord) -> Result<Rational> {
        let mut acc: Option<Rational> = None;
        for b in blocks {
            let v = match &self.values[self.index(b.iter().map(|&p| ids[p - 1]))] {
                Some(v) => v,
                None => return Err(Error::MissingEntry(alphabet.format(&w.restrict(b)?))),
            };
            acc = Some(match acc {
                Some(a) => a * v,
                None => v.clone(),
            });
        }
        Ok(acc.unwrap_or_else(Rational::one))
    }
}

fn weighted(x: Rational, weight: &Rational) -> Rational {
    if weight.is_one() {
        x
    } else {
        x * weight
    }
}

fn letter_ids(w: &IncompleteWord) -> Vec<u32> {
    w.letters()
        .iter()
        .map(|l| match *l {
            Letter::Var(id, _) => id,
            Letter::Hole(_) => unreachable!("complete words only"),
        })
        .collect()
}

fn dense_from(alphabet: &Alphabet, max_len: usize, table: &BTreeMap<IncompleteWord, Rational>) -> DenseTable {
    let mut dense = DenseTable::new(alphabet, max_len);
    for (w, v) in table.iter().filter(|(w, _)| w.len() <= max_len) {
        dense.insert(w, v.clone());
    }
    dense
}

/// `φ(w) = Σ_π weight(π) Π_{V ∈ π} c(w|_V)` on all complete words up to `max_len`.
pub fn cumulants_to_moments(c: &CumulantData, max_len: usize) -> Result<MomentData> {
    let mut weights = PartitionWeights::new(c.family);
    let dense = dense_from(&c.alphabet, max_len, &c.values);
    let mut moments = BTreeMap::new();
    for w in c.alphabet.complete_words(max_len) {
        let ids = letter_ids(&w);
        let mut acc = Rational::zero();
        for (blocks, weight) in weights.get(&w.alpha())? {
            acc += weighted(dense.block_product(&ids, blocks, &c.alphabet, &w)?, weight);
        }
        moments.insert(w, acc);
    }
    MomentData::new(c.alphabet.clone(), moments)
}

/// Inverts [`cumulants_to_moments`] by recursion on word length.
pub fn moments_to_cumulants(m: &MomentData, family: CumulantFamily, max_len: usize) -> Result<CumulantData> {
    let mut weights = PartitionWeights::new(family);
    let mut dense = DenseTable::new(&m.alphabet, max_len);
    let mut values = BTreeMap::new();
    // complete_words lists shorter words first, so every proper block is known.
    for w in m.alphabet.complete_words(max_len) {
        let ids = letter_ids(&w);
        let mut acc = m.get(&w)?.clone();
        for (blocks, weight) in weights.get(&w.alpha())?.iter().skip(1) {
            acc -= weighted(dense.block_product(&ids, blocks, &m.alphabet, &w)?, weight);
        }
        dense.insert(&w, acc.clone());
        values.insert(w, acc);
    }
    CumulantData::new(m.alphabet.clone(), family, values)
}

/// One word's comparison in [`check_against_exponentials`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialRow {
    pub word: String,
    pub moment: Rational,
    pub exp_prec: Rational,
    pub exp_succ: Rational,
    pub exp_star: Rational,
}

impl ExponentialRow {
    pub fn passed(&self) -> bool {
        self.moment == self.exp_prec && self.moment == self.exp_succ && self.moment == self.exp_star
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialReport {
    pub rows: Vec<ExponentialRow>,
}

impl ExponentialReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(ExponentialRow::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ExponentialRow> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

/// Checks that the moments equal `exp≺(κ)`, `exp≻(B)` and `exp⋆(K)` for the
/// bifree, biBoolean and bimonotone cumulants on every complete word up to `max_len`.
pub fn check_against_exponentials(m: &MomentData, max_len: usize) -> Result<ExponentialReport> {
    let kappa = moments_to_cumulants(m, CumulantFamily::Bifree, max_len)?.functional()?;
    let boolean = moments_to_cumulants(m, CumulantFamily::Biboolean, max_len)?.functional()?;
    let mono = moments_to_cumulants(m, CumulantFamily::Bimonotone, max_len)?.functional()?;
    let prec = exp_prec(&kappa, &m.alphabet, max_len)?;
    let succ = exp_succ(&boolean, &m.alphabet, max_len)?;
    let star = exp_star(&mono, &m.alphabet, max_len)?;
    let rows = m
        .alphabet
        .complete_words(max_len)
        .into_iter()
        .map(|w| {
            Ok(ExponentialRow {
                word: m.alphabet.format(&w),
                moment: m.get(&w)?.clone(),
                exp_prec: prec.eval(&w)?,
                exp_succ: succ.eval(&w)?,
                exp_star: star.eval(&w)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExponentialReport { rows })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedCumulantReport {
    /// Number of mixed words examined.
    pub checked: usize,
    /// Mixed words with a nonzero cumulant, in shortlex order.
    pub nonvanishing: Vec<(String, Rational)>,
    /// The nonvanishing mixed cumulant of largest absolute value (first in
    /// shortlex order among ties).
    pub maximal: Option<(String, Rational)>,
}

impl MixedCumulantReport {
    pub fn independent(&self) -> bool {
        self.nonvanishing.is_empty()
    }
}

/// Tests whether two families of variables are bifree (or biBoolean) under
/// the given moments: all mixed cumulants up to `max_len` must vanish.
pub fn mixed_cumulant_diagnostic(
    m: &MomentData,
    family: CumulantFamily,
    first: &[&str],
    second: &[&str],
    max_len: usize,
) -> Result<MixedCumulantReport> {
    if family == CumulantFamily::Bimonotone {
        return Err(Error::Precondition("mixed-cumulant vanishing applies to bifree and biboolean only".into()));
    }
    let mut group = vec![None; m.alphabet.len()];
    for (tag, names) in [(0u8, first), (1u8, second)] {
        for name in names {
            let id = m.alphabet.lookup(name).ok_or_else(|| Error::UnknownLetter(name.to_string()))?;
            if group[id as usize].replace(tag).is_some() {
                return Err(Error::Precondition(format!("`{name}` is in both families")));
            }
        }
    }
    let c = moments_to_cumulants(m, family, max_len)?;
    let mut checked = 0;
    let mut nonvanishing = Vec::new();
    for w in m.alphabet.complete_words(max_len) {
        let tags: Vec<Option<u8>> = w
            .letters()
            .iter()
            .map(|l| match *l {
                crate::words::Letter::Var(id, _) => group[id as usize],
                crate::words::Letter::Hole(_) => None,
            })
            .collect();
        if tags.iter().any(Option::is_none) {
            continue;
        }
        if !(tags.contains(&Some(0)) && tags.contains(&Some(1))) {
            continue;
        }
        checked += 1;
        let v = c.get(&w)?;
        if !v.is_zero() {
            nonvanishing.push((m.alphabet.format(&w), v.clone()));
        }
    }
    let maximal = nonvanishing
        .iter()
        .fold(None::<&(String, Rational)>, |best, cur| match best {
            Some(b) if b.1.abs() >= cur.1.abs() => Some(b),
            _ => Some(cur),
        })
        .cloned();
    Ok(MixedCumulantReport { checked, nonvanishing, maximal })
}

/// Words in shortlex order with respect to the alphabet's declaration order.
fn shortlex<V>(table: &BTreeMap<IncompleteWord, V>) -> Vec<(&IncompleteWord, &V)> {
    let mut entries: Vec<_> = table.iter().collect();
    entries.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
    entries
}

fn variables_json(alphabet: &Alphabet) -> Value {
    let mut vars = Map::new();
    for id in 0..alphabet.len() as u32 {
        vars.insert(alphabet.name(id).to_string(), Value::String(alphabet.side(id).to_string()));
    }
    Value::Object(vars)
}

fn table_json(alphabet: &Alphabet, table: &BTreeMap<IncompleteWord, Rational>) -> Value {
    let mut out = Map::new();
    for (w, v) in shortlex(table) {
        out.insert(alphabet.format(w), Value::String(rational::format(v)));
    }
    Value::Object(out)
}

fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn parse_object(text: &str) -> Result<Map<String, Value>> {
    match serde_json::from_str::<Value>(text) {
        Ok(Value::Object(map)) => Ok(map),
        Ok(_) => Err(Error::Schema("top level must be an object".into())),
        Err(e) => Err(Error::Parse(format!("invalid JSON: {e}"))),
    }
}

fn check_fields(map: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    match map.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::Schema(format!("unexpected field `{k}`"))),
        None => Ok(()),
    }
}

fn parse_alphabet(map: &Map<String, Value>) -> Result<Alphabet> {
    let vars = match map.get("variables") {
        Some(Value::Object(v)) => v,
        _ => return Err(Error::Schema("`variables` must be an object of name → \"L\" | \"R\"".into())),
    };
    let mut alphabet = Alphabet::new();
    for (name, side) in vars {
        let side = match side.as_str() {
            Some("L") => Side::L,
            Some("R") => Side::R,
            _ => return Err(Error::Schema(format!("variable `{name}` must be tagged \"L\" or \"R\""))),
        };
        alphabet.add(name, side)?;
    }
    Ok(alphabet)
}

fn parse_rational_value(word: &str, v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => rational::parse(&n.to_string()),
        _ => Err(Error::Schema(format!("value for `{word}` must be a rational string such as \"3/4\""))),
    }
}

fn parse_table(alphabet: &Alphabet, map: &Map<String, Value>, field: &str) -> Result<BTreeMap<IncompleteWord, Rational>> {
    let entries = match map.get(field) {
        Some(Value::Object(v)) => v,
        _ => return Err(Error::Schema(format!("`{field}` must be an object of word → rational"))),
    };
    let mut table = BTreeMap::new();
    for (word, v) in entries {
        let w = alphabet.parse(word)?;
        if table.insert(w, parse_rational_value(word, v)?).is_some() {
            return Err(Error::Schema(format!("word `{word}` appears twice")));
        }
    }
    Ok(table)
}

impl MomentData {
    /// Reads `{"variables": {...}, "moments": {"": "1", "a b": "3", ...}}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let map = parse_object(text)?;
        check_fields(&map, &["variables", "moments"])?;
        let alphabet = parse_alphabet(&map)?;
        let moments = parse_table(&alphabet, &map, "moments")?;
        MomentData::new(alphabet, moments)
    }

    /// Canonical JSON: variables in declaration order, words in shortlex order.
    pub fn to_json(&self) -> String {
        let mut root = Map::new();
        root.insert("variables".into(), variables_json(&self.alphabet));
        root.insert("moments".into(), table_json(&self.alphabet, &self.moments));
        to_pretty(&Value::Object(root))
    }
}

impl CumulantData {
    /// Reads `{"variables": {...}, "family": "bifree", "cumulants": {...}}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let map = parse_object(text)?;
        check_fields(&map, &["variables", "family", "cumulants"])?;
        let alphabet = parse_alphabet(&map)?;
        let family = match map.get("family").and_then(Value::as_str) {
            Some(f) => f.parse().map_err(|_| Error::Schema(format!("unknown family `{f}`")))?,
            None => return Err(Error::Schema("`family` must be a string".into())),
        };
        let values = parse_table(&alphabet, &map, "cumulants")?;
        CumulantData::new(alphabet, family, values)
    }

    pub fn to_json(&self) -> String {
        let mut root = Map::new();
        root.insert("variables".into(), variables_json(&self.alphabet));
        root.insert("family".into(), Value::String(self.family.name().into()));
        root.insert("cumulants".into(), table_json(&self.alphabet, &self.values));
        to_pretty(&Value::Object(root))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn two_letter(phi_a: Rational, phi_b: Rational, phi_ab: Rational) -> MomentData {
        let al = Alphabet::with_vars(&["a"], &["b"]).unwrap();
        let mut m = BTreeMap::new();
        for w in al.complete_words(2) {
            m.insert(w, int(0));
        }
        m.insert(al.parse("a").unwrap(), phi_a);
        m.insert(al.parse("b").unwrap(), phi_b);
        m.insert(al.parse("a b").unwrap(), phi_ab);
        MomentData::new(al, m).unwrap()
    }

    #[test]
    fn two_letter_cumulants() {
        let m = two_letter(int(2), int(3), int(10));
        let ab = m.alphabet.parse("a b").unwrap();
        for fam in CumulantFamily::ALL {
            let c = moments_to_cumulants(&m, fam, 2).unwrap();
            assert_eq!(c.get(&m.alphabet.parse("a").unwrap()).unwrap(), &int(2));
            // NC(LR), I(LR) and the labeled monotone set all give φ(ab) = c(ab) + c(a)c(b).
            assert_eq!(c.get(&ab).unwrap(), &int(4), "{fam}");
            assert_eq!(cumulants_to_moments(&c, 2).unwrap(), m);
        }
    }

    #[test]
    fn boolean_and_free_differ_on_three_letters() {
        let al = Alphabet::with_vars(&["a"], &[]).unwrap();
        let m = MomentData::new(al.clone(), al.complete_words(3).into_iter().map(|w| (w, int(1))).collect()).unwrap();
        let aaa = al.parse("a a a").unwrap();
        let free = moments_to_cumulants(&m, CumulantFamily::Bifree, 3).unwrap();
        let boolean = moments_to_cumulants(&m, CumulantFamily::Biboolean, 3).unwrap();
        let mono = moments_to_cumulants(&m, CumulantFamily::Bimonotone, 3).unwrap();
        // A point mass at 1: every cumulant beyond the first vanishes.
        assert_eq!(free.get(&aaa).unwrap(), &int(0));
        assert_eq!(boolean.get(&aaa).unwrap(), &int(0));
        assert_eq!(mono.get(&aaa).unwrap(), &int(0));
        let m2 = MomentData::new(
            al.clone(),
            [("a", 0), ("a a", 1), ("a a a", 0)].iter().map(|(w, v)| (al.parse(w).unwrap(), int(*v))).collect(),
        )
        .unwrap();
        // Centred with unit variance: the second cumulant is the variance.
        assert_eq!(moments_to_cumulants(&m2, CumulantFamily::Bifree, 3).unwrap().get(&al.parse("a a").unwrap()).unwrap(), &int(1));
    }

    #[test]
    fn exponential_check_passes() {
        let m = two_letter(ratio(1, 2), int(3), ratio(-7, 3));
        let report = check_against_exponentials(&m, 2).unwrap();
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.rows.len(), 6);
    }

    #[test]
    fn mixed_diagnostic() {
        // φ(a b) = φ(a)φ(b) kills the cumulant of `a b`, but `b a` has moment 0.
        let m = two_letter(int(2), int(3), int(6));
        let r = mixed_cumulant_diagnostic(&m, CumulantFamily::Bifree, &["a"], &["b"], 2).unwrap();
        assert_eq!(r.checked, 2);
        assert_eq!(r.nonvanishing, vec![("b a".to_string(), int(-6))]);
        assert_eq!(r.maximal, Some(("b a".to_string(), int(-6))));
        assert!(mixed_cumulant_diagnostic(&m, CumulantFamily::Bimonotone, &["a"], &["b"], 2).is_err());
        assert!(mixed_cumulant_diagnostic(&m, CumulantFamily::Bifree, &["a"], &["a"], 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"variables":{"a":"L","b":"R"},"moments":{"":"1","a":"1/2","b":2,"a b":"6/4","b a":"0","a a":"1","b b":"1"}}"#;
        let m = MomentData::from_json(text).unwrap();
        let out = m.to_json();
        assert_eq!(MomentData::from_json(&out).unwrap(), m);
        assert!(out.contains("\"a b\": \"3/2\""));
        let c = moments_to_cumulants(&m, CumulantFamily::Biboolean, 2).unwrap();
        let back = CumulantData::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert_eq!(cumulants_to_moments(&back, 2).unwrap().to_json(), out);
    }

    #[test]
    fn json_schema_errors() {
        assert!(MomentData::from_json("[]").is_err());
        assert!(MomentData::from_json(r#"{"variables":{"a":"X"},"moments":{}}"#).is_err());
        assert!(MomentData::from_json(r#"{"variables":{"a":"L"},"moments":{"a":1.5}}"#).is_err());
        assert!(MomentData::from_json(r#"{"variables":{"a":"L"},"moments":{"a L":"1"}}"#).is_err());
        assert!(MomentData::from_json(r#"{"variables":{"a":"L"},"moments":{"":"2"}}"#).is_err());
        assert!(MomentData::from_json(r#"{"variables":{"a":"L"},"moments":{"c":"1"}}"#).is_err());
        assert!(MomentData::from_json(r#"{"variables":{"a":"L"},"moments":{"a":"1","a ":"1"}}"#).is_err());
        assert!(MomentData::from_json(r#"{"variables":{"a":"L"},"moments":{},"extra":1}"#).is_err());
        assert!(CumulantData::from_json(r#"{"variables":{"a":"L"},"family":"free","cumulants":{}}"#).is_err());
        assert!(CumulantData::from_json(r#"{"variables":{"a":"L"},"family":"bifree","cumulants":{"":"1"}}"#).is_err());
    }

    #[test]
    fn missing_entries_are_reported() {
        let al = Alphabet::with_vars(&["a"], &[]).unwrap();
        let m = MomentData::new(al.clone(), [(al.parse("a").unwrap(), int(1))].into_iter().collect()).unwrap();
        assert_eq!(
            moments_to_cumulants(&m, CumulantFamily::Bifree, 2),
            Err(Error::MissingEntry("a a".into()))
        );
    }
}
