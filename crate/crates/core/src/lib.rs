//! Exact combinatorics of two-faced moment-cumulant relations.
//!
//! The crate is organised bottom-up:
//!
//! * [`biset`]: words over `{L, R}` and their standard order.
//! * [`translucent`]: translucent words, their composition, factorizations and
//!   the exchange construction.
//! * [`bipartition`]: incomplete bipartitions, class predicates and enumeration.
//! * [`words`]: incomplete words over a two-faced alphabet, the coproduct and
//!   its left/right halves, the horizontal product.
//! * [`functional`]: exact rational functionals, convolution, half products,
//!   the preLie product and the three exponentials.
//! * [`cumulants`]: bifree, biBoolean and bimonotone moment-cumulant conversion.
//! * [`verify`]: self-contained invariant suites, also driven by the CLI.
//! * [`svg`]: deterministic arc diagrams of bipartitions.
//!
//! Positions are 1-based throughout.

pub mod bipartition;
pub mod biset;
pub mod cumulants;
pub mod error;
pub mod functional;
pub mod multiset;
pub mod rational;
pub mod svg;
pub mod translucent;
pub mod verify;
pub mod words;

pub use bipartition::{Bipartition, BipartitionClass, Enumeration, LabeledBipartition};
pub use biset::{LrWord, Side, StdOrder};
pub use cumulants::{CumulantData, CumulantFamily, MomentData};
pub use error::{Error, Result};
pub use functional::{Functional, FunctionalKind, LinearForm};
pub use multiset::Multiset;
pub use rational::Rational;
pub use translucent::TranslucentWord;
pub use words::{Alphabet, IncompleteWord, Letter, VarId, WordSum};
