//! Finite groups from power-commutator presentations.

mod families;
mod group;
mod parse;
mod presentation;

pub use families::{
    abelian, cyclic, dihedral, extraspecial, heisenberg, quaternion, schur_sharp_32,
    ExtraspecialKind,
};
pub use group::{
    closure_elements, closure_size, BuildOptions, FiniteGroup, GroupRef, Verification,
    DEFAULT_ASSOC_CAP, DEFAULT_BUILD_CAP,
};
pub use parse::parse_pc;
pub use presentation::{NormalForm, PcError, PcPresentation, Word, COLLECT_BUDGET};
