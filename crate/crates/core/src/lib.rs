//! Finite permutation groups and subgroup embedding properties.
//!
//! The entry point is [`Subgroup::whole`]: build a [`PermGroup`] (directly or
//! from a [`GroupExpr`]), wrap it, and query subgroups of it. Every subgroup
//! algorithm takes the group it works in as `self`.

pub mod arith;
pub mod catalog;
pub mod classes;
pub mod embeddings;
pub mod error;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod subgroup;

pub use catalog::{default_corpus, Corpus, CorpusEntry, GroupExpr};
pub use classes::{FormationSelector, GroupClass};
pub use embeddings::{EmbeddingKind, GeneratedPartKind, PropertyVector, Witness};
pub use error::{Error, Result};
pub use group::{Caps, Elem, PermGroup, IDENTITY};
pub use lattice::{Characteristic, ChiefFactor, ChiefSeries, FactorKind, OSelector, QuotientMap};
pub use perm::{parse_cycles, parse_generators, Perm};
pub use subgroup::Subgroup;
