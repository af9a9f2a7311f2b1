//! Exact computation with finite nilpotent groups and their
//! near-identity automorphisms.
//!
//! The crate builds small finite groups from power-commutator
//! presentations, recognizes their abelian sections symbolically, and
//! computes the automorphism families that act trivially on the
//! abelianization (`IA`), additionally fix the center pointwise (`IA*`),
//! or preserve conjugacy classes. On top of that sit executable
//! classification predicates — when does `IA(G)` collapse to the inner
//! automorphisms — and Schur-type order bounds relating `|G/Z(G)|` to
//! powers of `|G'|`, all checked two ways: a symbolic prediction against a
//! direct enumeration.

pub mod abelian;
pub mod autos;
pub mod invariants;
pub mod pcgroup;
pub mod theorems;

pub use abelian::FgAbelian;
pub use pcgroup::{BuildOptions, FiniteGroup, GroupRef, PcPresentation};
