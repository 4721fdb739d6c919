//! Example fixtures, lemma suites, theorem checkers and corpus scans.

pub mod examples;
pub mod implications;
pub mod lemmas;
pub mod suite;
pub mod theorems;
pub mod tri;

pub use tri::Tri;
