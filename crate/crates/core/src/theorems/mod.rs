//! Executable statements about near-identity automorphisms and center
//! index bounds: classification of when IA(G) collapses to Inn(G),
//! counting bounds of Schur type, and a verification suite that runs the
//! whole battery over a corpus of concrete groups.
//!
//! Everything here comes in two flavours where that makes sense: a
//! *symbolic* route working on structure triples (`G/Z`, `G/G'`, `G'` as
//! finitely generated abelian groups) and a *concrete* route that actually
//! enumerates automorphisms of a multiplication table. The suite's whole
//! point is to confront the two.

mod classify;
mod corpus;
mod schur;
mod sharp32;
mod suite;

use serde::Serialize;

use crate::autos::AutoError;
use crate::invariants::StructureError;

pub use classify::{
    admissibility_violations, check_class_preserving_inner, check_exponent_match,
    check_ia_star_inner, check_ia_star_inner_symbolic, check_p_group_form,
    check_two_generated_ia, classify_ia_inner_finite, classify_ia_inner_symbolic,
};
pub use corpus::default_corpus;
pub use schur::{check_coclass_orders, check_homocyclic_power, schur_report, SchurReport, TupleBound};
pub use sharp32::{verify_sharp32, FactCheck};
pub use suite::{run_suite, RunConfig, Selector, Status, SuiteRecord, SuiteReport, CHECK_NAMES};

#[derive(Debug, thiserror::Error)]
pub enum TheoremError {
    /// The given triple violates a constraint that every actual group
    /// satisfies, so classifying it would be meaningless.
    #[error("inadmissible structure triple: {0}")]
    Inadmissible(String),
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("nilpotency class is {class}, this check needs class at most {max}")]
    ClassTooLarge { class: usize, max: usize },
    #[error("check applies to {required}-generated groups, this one needs {actual}")]
    WrongGeneratorCount { required: usize, actual: usize },
    #[error("derived subgroup {0} is not cyclic")]
    DerivedNotCyclic(String),
    #[error("group is not a p-group")]
    NotPGroup,
    #[error(transparent)]
    Auto(#[from] AutoError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Shape of a structure triple. The classification splits on which of the
/// three groups are finite, torsion-free or mixed; the tags name those
/// shapes. `CenterFixing` is not a shape: it marks the variant question
/// about automorphisms fixing the center elementwise rather than acting
/// trivially on the central quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    /// Trivial derived group, i.e. the group is abelian. The
    /// classification below is about class exactly two, so this is a
    /// degenerate case answered directly.
    Abelian,
    /// All three groups finite.
    Finite,
    /// Infinite torsion-free derived group.
    FreeDerived,
    /// Nontrivial torsion derived group, torsion-free abelianization.
    TorsionDerived,
    /// Torsion derived group but mixed abelianization.
    MixedAbelianization,
    /// Mixed derived group.
    MixedDerived,
    /// Comparison of center-fixing automorphisms against inner ones.
    CenterFixing,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CaseTag::Abelian => "abelian",
            CaseTag::Finite => "finite",
            CaseTag::FreeDerived => "free-derived",
            CaseTag::TorsionDerived => "torsion-derived",
            CaseTag::MixedAbelianization => "mixed-abelianization",
            CaseTag::MixedDerived => "mixed-derived",
            CaseTag::CenterFixing => "center-fixing",
        };
        f.write_str(s)
    }
}

/// Result of one classification question.
///
/// `predicate_holds` is the verdict of the structural criterion (cyclic
/// derived group, matching factor counts, ...); `direct_check_holds` is
/// the verdict of an independent computation — a Hom-group comparison for
/// symbolic input, an automorphism-set comparison for a concrete group.
/// The two are supposed to agree; `consistent` records whether they did,
/// and a `false` here means a bug or a genuine counterexample, so the
/// suite treats it as fatal.
///
/// `witness` explains the first failed clause when the predicate is
/// false. For concrete groups `isomorphic` separately records whether the
/// two automorphism sets are isomorphic as abstract groups, which can
/// hold even when they differ as subgroups of Aut(G).
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationVerdict {
    pub case: CaseTag,
    pub predicate_holds: bool,
    pub direct_check_holds: bool,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphic: Option<bool>,
}

impl ClassificationVerdict {
    fn new(
        case: CaseTag,
        predicate_holds: bool,
        direct_check_holds: bool,
        witness: Option<String>,
    ) -> Self {
        ClassificationVerdict {
            case,
            predicate_holds,
            direct_check_holds,
            consistent: predicate_holds == direct_check_holds,
            witness,
            isomorphic: None,
        }
    }
}

/// Outcome of a check whose hypotheses a given group may simply not meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum CheckOutcome {
    Pass,
    Fail(String),
    NotApplicable(String),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        !matches!(self, CheckOutcome::Fail(_))
    }
}
