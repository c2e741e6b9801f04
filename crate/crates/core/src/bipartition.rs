//! Incomplete bipartitions: partitions of the opaque positions of a
//! translucent word. The translucent positions form an implicit extra block.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::biset::{normalize_positions, StdOrder};
use crate::error::{Error, Result};
use crate::translucent::{compose, TranslucentWord};

/// Default bound on the number of opaque positions an enumeration may cover.
pub const DEFAULT_ENUM_CAP: usize = 14;
/// Hard bound; no override may exceed it.
pub const MAX_ENUM_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    ty: TranslucentWord,
    // Each block sorted naturally; blocks sorted by their ⋖-minimum.
    blocks: Vec<Vec<usize>>,
}

/// A bipartition with a total order on its blocks. `order[k]` is the index
/// (into [`Bipartition::blocks`]) of the block carrying label `k + 1`; the
/// translucent block has the implicit label 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledBipartition {
    base: Bipartition,
    order: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BipartitionClass {
    All,
    Noncrossing,
    Interval,
    Monotone,
    ShadedNoncrossing,
}

impl BipartitionClass {
    pub const ALL: [BipartitionClass; 5] = [
        BipartitionClass::All,
        BipartitionClass::Noncrossing,
        BipartitionClass::Interval,
        BipartitionClass::Monotone,
        BipartitionClass::ShadedNoncrossing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BipartitionClass::All => "all",
            BipartitionClass::Noncrossing => "nc",
            BipartitionClass::Interval => "interval",
            BipartitionClass::Monotone => "monotone",
            BipartitionClass::ShadedNoncrossing => "shaded_nc",
        }
    }
}

impl std::str::FromStr for BipartitionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BipartitionClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown bipartition class `{s}`")))
    }
}

impl fmt::Display for BipartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Output of [`enumerate`]: labeled objects for the monotone class only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Enumeration {
    Plain(Vec<Bipartition>),
    Labeled(Vec<LabeledBipartition>),
}

impl Enumeration {
    pub fn len(&self) -> usize {
        match self {
            Enumeration::Plain(v) => v.len(),
            Enumeration::Labeled(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Bipartition {
    /// Validates and canonicalizes: blocks nonempty, disjoint, covering `[t]_1`.
    pub fn new(ty: TranslucentWord, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; ty.len()];
        let mut canon = Vec::with_capacity(blocks.len());
        for b in blocks {
            if b.is_empty() {
                return Err(Error::InvalidBipartition("empty block".into()));
            }
            let b = normalize_positions(&b, ty.len())?;
            for &p in &b {
                if !ty.is_opaque(p) {
                    return Err(Error::InvalidBipartition(format!("position {p} is translucent")));
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::InvalidBipartition(format!("position {p} in two blocks")));
                }
            }
            canon.push(b);
        }
        if let Some(p) = ty.opaque_positions().into_iter().find(|&p| !seen[p - 1]) {
            return Err(Error::InvalidBipartition(format!("opaque position {p} not covered")));
        }
        Ok(Self::from_canonical_parts(ty, canon))
    }

    /// Builds from valid blocks, sorting them by `⋖`-minimum.
    fn from_canonical_parts(ty: TranslucentWord, mut blocks: Vec<Vec<usize>>) -> Self {
        let order = ty.standard_order();
        blocks.sort_by_key(|b| order.rank(order.min_of(b.iter().copied()).expect("nonempty")));
        Bipartition { ty, blocks }
    }

    /// The bipartition with no blocks on a fully translucent type.
    pub fn empty(ty: TranslucentWord) -> Result<Self> {
        Bipartition::new(ty, Vec::new())
    }

    pub fn ty(&self) -> &TranslucentWord {
        &self.ty
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block id per position: `None` for translucent positions.
    fn block_ids(&self) -> Vec<Option<usize>> {
        let mut ids = vec![None; self.ty.len()];
        for (k, b) in self.blocks.iter().enumerate() {
            for &p in b {
                ids[p - 1] = Some(k);
            }
        }
        ids
    }

    /// Noncrossing with respect to `⋖`, the translucent positions counting as one block.
    pub fn is_noncrossing(&self) -> bool {
        let ids = self.block_ids();
        let order = self.ty.standard_order();
        let seq: Vec<usize> = order
            .perm()
            .iter()
            .map(|&p| ids[p - 1].map_or(0, |k| k + 1))
            .collect();
        sequence_noncrossing(&seq, self.blocks.len() + 1)
    }

    /// Every block is `⋖`-contiguous inside `[t]_1`.
    pub fn is_interval(&self) -> bool {
        let order = self.ty.standard_order();
        let mut slot = vec![usize::MAX; self.ty.len()];
        let mut k = 0;
        for &p in order.perm() {
            if self.ty.is_opaque(p) {
                slot[p - 1] = k;
                k += 1;
            }
        }
        self.blocks.iter().all(|b| {
            let (lo, hi) = b.iter().fold((usize::MAX, 0), |(lo, hi), &p| {
                (lo.min(slot[p - 1]), hi.max(slot[p - 1]))
            });
            hi - lo + 1 == b.len()
        })
    }

    /// Shaded condition for noncrossing bipartitions: every opaque `k` left of
    /// `m = min [t]_0` on the same side as `m` only shares its block with
    /// positions left of `m` on that side. Vacuous when `[t]_0` is empty.
    pub fn is_shaded(&self) -> Result<bool> {
        if !self.is_noncrossing() {
            return Err(Error::Precondition(format!("{self} is not noncrossing")));
        }
        let Some(m) = (1..=self.ty.len()).find(|&p| !self.ty.is_opaque(p)) else {
            return Ok(true);
        };
        let side = self.ty.side(m);
        let ok = self.blocks.iter().all(|b| {
            let touches = b.iter().any(|&k| k < m && self.ty.side(k) == side);
            !touches || b.iter().all(|&j| j < m && self.ty.side(j) == side)
        });
        Ok(ok)
    }

    pub fn restrict(&self, positions: &[usize]) -> Result<Bipartition> {
        let set = normalize_positions(positions, self.ty.len())?;
        let mut new_index = vec![0; self.ty.len()];
        for (k, &p) in set.iter().enumerate() {
            new_index[p - 1] = k + 1;
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().filter(|&&p| new_index[p - 1] > 0).map(|&p| new_index[p - 1]).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        Ok(Self::from_canonical_parts(self.ty.restrict(&set)?, blocks))
    }

    /// Keeps the blocks with the given indices; the others become translucent.
    pub fn translucidate_blocks(&self, keep: &[usize]) -> Result<Bipartition> {
        if let Some(&k) = keep.iter().find(|&&k| k >= self.blocks.len()) {
            return Err(Error::InvalidBipartition(format!("no block with index {k}")));
        }
        let dropped: Vec<usize> = (0..self.blocks.len())
            .filter(|k| !keep.contains(k))
            .flat_map(|k| self.blocks[k].iter().copied())
            .collect();
        let blocks = self
            .blocks
            .iter()
            .enumerate()
            .filter(|(k, _)| keep.contains(k))
            .map(|(_, b)| b.clone())
            .collect();
        Ok(Self::from_canonical_parts(self.ty.translucidate(&dropped)?, blocks))
    }
}

/// `ρ ∘ σ`: `ρ` fills the translucent block of `σ`.
pub fn compose_bipartitions(rho: &Bipartition, sigma: &Bipartition) -> Result<Bipartition> {
    let ty = compose(&rho.ty, &sigma.ty)?;
    let iota = sigma.ty.translucent_positions();
    let mut blocks = sigma.blocks.clone();
    blocks.extend(rho.blocks.iter().map(|b| b.iter().map(|&p| iota[p - 1]).collect()));
    Ok(Bipartition::from_canonical_parts(ty, blocks))
}

impl LabeledBipartition {
    pub fn new(base: Bipartition, order: Vec<usize>) -> Result<Self> {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..base.blocks.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidBipartition(format!(
                "order {order:?} is not a permutation of the {} blocks",
                base.blocks.len()
            )));
        }
        Ok(LabeledBipartition { base, order })
    }

    pub fn base(&self) -> &Bipartition {
        &self.base
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Label of a block index (1-based labels).
    pub fn label(&self, block: usize) -> usize {
        self.order.iter().position(|&b| b == block).expect("block index") + 1
    }

    /// Noncrossing, and whenever `a ⋖ b ⋖ c` with `a, c` in a block `V` and `b`
    /// in a different block `W`, `label(V) ≤ label(W)`; translucent label 0.
    pub fn is_monotone(&self) -> bool {
        if !self.base.is_noncrossing() {
            return false;
        }
        let mut labels = vec![0; self.base.ty.len()];
        for (k, b) in self.base.blocks.iter().enumerate() {
            let l = self.label(k);
            for &p in b {
                labels[p - 1] = l;
            }
        }
        let order = self.base.ty.standard_order();
        let seq: Vec<usize> = order.perm().iter().map(|&p| labels[p - 1]).collect();
        nesting_respects_labels(&seq)
    }
}

/// Sequence of block labels in `⋖` order; labels double as block identities.
fn nesting_respects_labels(seq: &[usize]) -> bool {
    let n = seq.len();
    for a in 0..n {
        for c in a + 2..n {
            if seq[a] != seq[c] {
                continue;
            }
            if seq[a + 1..c].iter().any(|&w| w != seq[a] && seq[a] > w) {
                return false;
            }
        }
    }
    true
}

/// Stack test for noncrossing on a sequence of block ids in `0..num_ids`.
fn sequence_noncrossing(seq: &[usize], num_ids: usize) -> bool {
    let mut last = vec![usize::MAX; num_ids];
    for (k, &b) in seq.iter().enumerate() {
        last[b] = k;
    }
    let mut started = vec![false; num_ids];
    let mut stack: Vec<usize> = Vec::new();
    for (k, &b) in seq.iter().enumerate() {
        if started[b] {
            if stack.last() != Some(&b) {
                return false;
            }
        } else {
            started[b] = true;
            stack.push(b);
        }
        if last[b] == k {
            stack.pop();
        }
    }
    true
}

/// Lists every bipartition of `t` in a class, see [`enumerate_with_cap`].
pub fn enumerate(t: &TranslucentWord, class: BipartitionClass) -> Result<Enumeration> {
    enumerate_with_cap(t, class, DEFAULT_ENUM_CAP)
}

pub fn count(t: &TranslucentWord, class: BipartitionClass) -> Result<usize> {
    enumerate(t, class).map(|e| e.len())
}

/// Enumerates in lexicographic order of restricted-growth strings over `[t]_1`
/// read in `⋖` order. Fails when `|[t]_1|` exceeds `cap` (itself at most 16).
pub fn enumerate_with_cap(t: &TranslucentWord, class: BipartitionClass, cap: usize) -> Result<Enumeration> {
    let cap = cap.min(MAX_ENUM_CAP);
    let opaque = t.opaque_count();
    if opaque > cap {
        return Err(Error::GuardrailExceeded { opaque, cap });
    }
    let order = t.standard_order();
    let mut search = Search::new(t, &order, class);
    search.run(0, 0);
    let plain = search.out;
    Ok(match class {
        BipartitionClass::Monotone => Enumeration::Labeled(
            plain.into_iter().flat_map(|p| monotone_labelings(&p)).collect(),
        ),
        _ => Enumeration::Plain(plain),
    })
}

struct Search<'a> {
    t: &'a TranslucentWord,
    order: &'a StdOrder,
    class: BipartitionClass,
    // Opaque positions in ⋖ order.
    opaque: Vec<usize>,
    // Block id (1-based) of each position, 0 for translucent and unassigned.
    ids: Vec<usize>,
    assigned: Vec<bool>,
    out: Vec<Bipartition>,
}

impl<'a> Search<'a> {
    fn new(t: &'a TranslucentWord, order: &'a StdOrder, class: BipartitionClass) -> Self {
        let opaque = order.perm().iter().copied().filter(|&p| t.is_opaque(p)).collect();
        let assigned = (1..=t.len()).map(|p| !t.is_opaque(p)).collect();
        Search { t, order, class, opaque, ids: vec![0; t.len()], assigned, out: Vec::new() }
    }

    fn needs_noncrossing(&self) -> bool {
        !matches!(self.class, BipartitionClass::All | BipartitionClass::Interval)
    }

    fn run(&mut self, k: usize, num_blocks: usize) {
        if k == self.opaque.len() {
            self.emit(num_blocks);
            return;
        }
        let p = self.opaque[k];
        for b in 1..=num_blocks + 1 {
            if self.class == BipartitionClass::Interval && b <= num_blocks {
                // Within [t]_1 a block may only continue the previous element's block.
                if self.ids[self.opaque[k - 1] - 1] != b {
                    continue;
                }
            }
            self.ids[p - 1] = b;
            self.assigned[p - 1] = true;
            if !self.needs_noncrossing() || self.partial_noncrossing(num_blocks.max(b)) {
                self.run(k + 1, num_blocks.max(b));
            }
            self.assigned[p - 1] = false;
            self.ids[p - 1] = 0;
        }
    }

    /// Noncrossing test on the assigned positions only; a crossing there persists.
    fn partial_noncrossing(&self, num_blocks: usize) -> bool {
        let seq: Vec<usize> = self
            .order
            .perm()
            .iter()
            .filter(|&&p| self.assigned[p - 1])
            .map(|&p| self.ids[p - 1])
            .collect();
        sequence_noncrossing(&seq, num_blocks + 1)
    }

    fn emit(&mut self, num_blocks: usize) {
        let mut blocks = vec![Vec::new(); num_blocks];
        for p in 1..=self.t.len() {
            if self.ids[p - 1] > 0 {
                blocks[self.ids[p - 1] - 1].push(p);
            }
        }
        // Restricted-growth ids already list blocks by ⋖-minimum.
        let pi = Bipartition { ty: self.t.clone(), blocks };
        if self.class == BipartitionClass::ShadedNoncrossing && !pi.is_shaded().unwrap_or(false) {
            return;
        }
        self.out.push(pi);
    }
}

/// All monotone labelings of a noncrossing bipartition, orders listed lexicographically.
fn monotone_labelings(pi: &Bipartition) -> Vec<LabeledBipartition> {
    let n = pi.blocks.len();
    let ids = pi.block_ids();
    let seq: Vec<Option<usize>> = pi.ty.standard_order().perm().iter().map(|&p| ids[p - 1]).collect();
    // must_precede[v] holds the blocks that need a smaller label than v.
    let mut must_precede = vec![Vec::new(); n];
    let mut nests_translucent = vec![false; n];
    let len = seq.len();
    for a in 0..len {
        for c in a + 2..len {
            let (Some(v), Some(vc)) = (seq[a], seq[c]) else { continue };
            if v != vc {
                continue;
            }
            for b in seq[a + 1..c].iter() {
                match *b {
                    None => nests_translucent[v] = true,
                    Some(w) if w != v && !must_precede[w].contains(&v) => must_precede[w].push(v),
                    _ => {}
                }
            }
        }
    }
    if nests_translucent.iter().any(|&x| x) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    linear_extensions(&must_precede, &mut used, &mut order, &mut |o| {
        out.push(LabeledBipartition { base: pi.clone(), order: o.to_vec() });
    });
    out
}

fn linear_extensions(
    must_precede: &[Vec<usize>],
    used: &mut [bool],
    order: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if order.len() == used.len() {
        visit(order);
        return;
    }
    for v in 0..used.len() {
        if !used[v] && must_precede[v].iter().all(|&u| used[u]) {
            used[v] = true;
            order.push(v);
            linear_extensions(must_precede, used, order, visit);
            order.pop();
            used[v] = false;
        }
    }
}

/// JSON form `{"type": "ALPHA,MASK", "blocks": [[...]], "order": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartitionJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub blocks: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
}

impl From<&Bipartition> for BipartitionJson {
    fn from(pi: &Bipartition) -> Self {
        BipartitionJson { ty: pi.ty.to_string(), blocks: pi.blocks.clone(), order: None }
    }
}

impl From<&LabeledBipartition> for BipartitionJson {
    fn from(pi: &LabeledBipartition) -> Self {
        BipartitionJson { order: Some(pi.order.clone()), ..BipartitionJson::from(&pi.base) }
    }
}

impl BipartitionJson {
    /// Parses back; the result is labeled iff `order` is present.
    pub fn to_bipartition(&self) -> Result<(Bipartition, Option<LabeledBipartition>)> {
        let ty: TranslucentWord = self.ty.parse()?;
        let pi = Bipartition::new(ty, self.blocks.clone())?;
        if pi.blocks != self.blocks {
            return Err(Error::Schema("blocks must be sorted, each by position and all by ⋖-minimum".into()));
        }
        let labeled = match &self.order {
            Some(o) => Some(LabeledBipartition::new(pi.clone(), o.clone())?),
            None => None,
        };
        Ok((pi, labeled))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.ty)?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, p) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}
