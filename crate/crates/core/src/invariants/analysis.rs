//! Whole-group summaries: the abelian triple attached to a group of class
//! at most two, and a general-purpose analysis record.

use serde::Serialize;

use crate::abelian::FgAbelian;
use crate::pcgroup::GroupRef;

use super::quotient::quotient;
use super::recognize::{abelian_structure, exponent, min_generators};
use super::series::{conjugacy_classes, frattini_subgroup, nilpotency_class};
use super::subgroup::{center, commutator_set, derived_subgroup, StructureError, Subgroup};

/// The three abelian groups controlling near-identity automorphisms of a
/// group of nilpotency class at most two: the central quotient `G/Z`, the
/// abelianization `G/G'`, and the derived subgroup `G'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureTriple {
    pub central_quotient: FgAbelian,
    pub abelianization: FgAbelian,
    pub derived: FgAbelian,
}

impl std::fmt::Display for StructureTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "G/Z = {}, G/G' = {}, G' = {}",
            self.central_quotient, self.abelianization, self.derived
        )
    }
}

/// Reads the triple off a concrete group. Requires nilpotency class at most
/// two, which makes all three quotients abelian.
pub fn structure_triple(group: &GroupRef) -> Result<StructureTriple, StructureError> {
    match nilpotency_class(group) {
        None => return Err(StructureError::NotNilpotent),
        Some(c) if c > 2 => return Err(StructureError::ClassTooLarge { class: c, max: 2 }),
        Some(_) => {}
    }
    let z = center(group);
    let d = derived_subgroup(group);
    let central_quotient = abelian_structure(&quotient(group, &z)?.group)?;
    let abelianization = abelian_structure(&quotient(group, &d)?.group)?;
    let (d_group, _) = d.as_group("derived");
    let derived = abelian_structure(&d_group)?;
    Ok(StructureTriple { central_quotient, abelianization, derived })
}

/// Everything the `analyze` command reports about a single group. Fields
/// that only make sense under structural hypotheses (class at most two,
/// abelian derived subgroup, feasible searches) are optional.
#[derive(Debug, Clone, Serialize)]
pub struct GroupAnalysis {
    pub name: String,
    pub order: usize,
    pub is_abelian: bool,
    pub nilpotency_class: Option<usize>,
    pub exponent: u64,
    pub center_order: usize,
    pub derived_order: usize,
    pub commutator_set_size: usize,
    pub commutator_set_is_closed: bool,
    pub frattini_order: Option<usize>,
    pub conjugacy_class_count: usize,
    pub min_generators: Option<usize>,
    pub center_structure: FgAbelian,
    pub abelianization: FgAbelian,
    pub derived_structure: Option<FgAbelian>,
    pub central_quotient_structure: Option<FgAbelian>,
    pub table_verification: String,
}

/// Computes the analysis record. Infeasible sub-computations (Frattini
/// subgroups of large non-p-groups, generator searches past the budget)
/// degrade to `None` instead of failing the whole report.
pub fn analyze(group: &GroupRef) -> GroupAnalysis {
    let z = center(group);
    let d = derived_subgroup(group);
    let k = commutator_set(group);
    let commutator_set_is_closed = k.len() == d.order();

    let (z_group, _) = z.as_group("center");
    let center_structure =
        abelian_structure(&z_group).expect("the center is abelian");
    let abelianization = quotient(group, &d)
        .and_then(|q| abelian_structure(&q.group))
        .expect("the quotient by the derived subgroup is abelian");

    let derived_structure = {
        let (d_group, _) = d.as_group("derived");
        abelian_structure(&d_group).ok()
    };
    let central_quotient_structure = quotient(group, &z)
        .ok()
        .and_then(|q| abelian_structure(&q.group).ok());

    GroupAnalysis {
        name: group.name().to_string(),
        order: group.order(),
        is_abelian: group.is_abelian(),
        nilpotency_class: nilpotency_class(group),
        exponent: exponent(group),
        center_order: z.order(),
        derived_order: d.order(),
        commutator_set_size: k.len(),
        commutator_set_is_closed,
        frattini_order: frattini_subgroup(group).ok().map(|s| s.order()),
        conjugacy_class_count: conjugacy_classes(group).len(),
        min_generators: min_generators(group).ok(),
        center_structure,
        abelianization,
        derived_structure,
        central_quotient_structure,
        table_verification: group.verification().to_string(),
    }
}

/// Convenience: the center as a subgroup plus its quotient order, used by
/// several theorem checks that compare `|G/Z|` with powers of `|G'|`.
pub fn central_quotient_order(group: &GroupRef) -> usize {
    group.order() / center(group).order()
}

/// The derived subgroup as a [`Subgroup`], re-exported here so callers can
/// get both the triple and the raw subgroup without recomputing.
pub fn derived(group: &GroupRef) -> Subgroup {
    derived_subgroup(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcgroup::{
        dihedral, heisenberg, quaternion, schur_sharp_32, BuildOptions, FiniteGroup,
    };

    fn build(p: &crate::pcgroup::PcPresentation) -> GroupRef {
        FiniteGroup::build(p, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn triple_of_q8() {
        let t = structure_triple(&build(&quaternion(8).unwrap())).unwrap();
        assert_eq!(t.central_quotient, FgAbelian::from_cyclic_factors(&[2, 2], 0).unwrap());
        assert_eq!(t.abelianization, FgAbelian::from_cyclic_factors(&[2, 2], 0).unwrap());
        assert_eq!(t.derived, FgAbelian::cyclic(2).unwrap());
    }

    #[test]
    fn triple_of_heisenberg_9() {
        let t = structure_triple(&build(&heisenberg(3, 1).unwrap())).unwrap();
        assert_eq!(t.central_quotient, FgAbelian::from_cyclic_factors(&[3, 3], 0).unwrap());
        assert_eq!(t.abelianization, FgAbelian::from_cyclic_factors(&[3, 3], 0).unwrap());
        assert_eq!(t.derived, FgAbelian::cyclic(3).unwrap());
    }

    #[test]
    fn class_three_groups_are_rejected() {
        let err = structure_triple(&build(&schur_sharp_32())).unwrap_err();
        assert_eq!(err, StructureError::ClassTooLarge { class: 3, max: 2 });
        let err = structure_triple(&build(&dihedral(16).unwrap())).unwrap_err();
        assert_eq!(err, StructureError::ClassTooLarge { class: 3, max: 2 });
    }

    #[test]
    fn analysis_of_the_order_32_example() {
        let g = build(&schur_sharp_32());
        let a = analyze(&g);
        assert_eq!(a.order, 32);
        assert_eq!(a.nilpotency_class, Some(3));
        assert_eq!(a.center_order, 2);
        assert_eq!(a.derived_order, 4);
        assert_eq!(a.frattini_order, Some(8));
        assert_eq!(a.min_generators, Some(2));
        assert_eq!(
            a.derived_structure,
            Some(FgAbelian::from_cyclic_factors(&[2, 2], 0).unwrap())
        );
        assert_eq!(central_quotient_order(&g), 16);
    }

    #[test]
    fn analysis_serializes_with_descriptor_strings() {
        let g = build(&quaternion(8).unwrap());
        let json = serde_json::to_value(analyze(&g)).unwrap();
        assert_eq!(json["abelianization"], "C_2 x C_2");
        assert_eq!(json["derived_structure"], "C_2");
        assert_eq!(json["order"], 8);
    }
}
