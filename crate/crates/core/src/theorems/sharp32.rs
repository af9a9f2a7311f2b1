//! Fact list for the order-32 group showing the derived-power bound can
//! be tight with a noncyclic derived subgroup. Each structural claim is
//! recomputed from the multiplication table and reported pass/fail so
//! the whole list doubles as a smoke test of the analysis stack.

use serde::Serialize;

use crate::autos;
use crate::invariants::{
    abelian_structure, center, commutator_set, derived_subgroup, frattini_subgroup,
    min_generators, nilpotency_class, quotient,
};
use crate::pcgroup::{closure_elements, schur_sharp_32, BuildOptions, FiniteGroup};

#[derive(Debug, Clone, Serialize)]
pub struct FactCheck {
    pub fact: String,
    pub passed: bool,
    pub detail: String,
}

fn fact(list: &mut Vec<FactCheck>, fact: &str, passed: bool, detail: String) {
    list.push(FactCheck {
        fact: fact.to_string(),
        passed,
        detail,
    });
}

/// Builds the group from its presentation and checks every claimed
/// property. All entries are expected to pass; a failure means the
/// presentation or one of the invariant computations regressed.
pub fn verify_sharp32() -> Vec<FactCheck> {
    let group = FiniteGroup::build(&schur_sharp_32(), &BuildOptions::default())
        .expect("builtin presentation must build");
    let mut facts = Vec::new();

    fact(
        &mut facts,
        "order is 32",
        group.order() == 32,
        format!("|G| = {}", group.order()),
    );

    let class = nilpotency_class(&group);
    fact(
        &mut facts,
        "nilpotency class is 3",
        class == Some(3),
        format!("class = {class:?}"),
    );

    let [x, y, u] = *group.generators() else {
        panic!("presentation has three generators");
    };
    let orders = [
        group.element_order(x),
        group.element_order(y),
        group.element_order(u),
    ];
    fact(
        &mut facts,
        "generator orders are 4, 8, 2",
        orders == [4, 8, 2],
        format!("|x|, |y|, |u| = {orders:?}"),
    );

    let z = center(&group);
    let y4 = group.mul(group.mul(y, y), group.mul(y, y));
    let mut expected_center = vec![group.identity(), y4];
    expected_center.sort_unstable();
    fact(
        &mut facts,
        "center is {1, y^4} of order 2",
        z.elements() == expected_center.as_slice(),
        format!("|Z| = {}", z.order()),
    );

    let frattini = frattini_subgroup(&group).expect("frattini of a finite group");
    let y2 = group.mul(y, y);
    let from_y2_u = closure_elements(&group, &[y2, u]);
    fact(
        &mut facts,
        "Frattini subgroup is <y^2, u> of order 8",
        frattini.order() == 8 && frattini.elements() == from_y2_u.as_slice(),
        format!("|Phi| = {}", frattini.order()),
    );

    let derived = derived_subgroup(&group);
    let (derived_group, _) = derived.as_group("derived");
    let derived_shape = abelian_structure(&derived_group).expect("derived subgroup is abelian");
    let elementary = crate::abelian::FgAbelian::from_cyclic_factors(&[2, 2], 0).unwrap();
    fact(
        &mut facts,
        "derived subgroup is C_2 x C_2",
        derived_shape.is_isomorphic(&elementary),
        format!("G' = {derived_shape}"),
    );
    fact(
        &mut facts,
        "derived subgroup is not cyclic",
        !derived_shape.is_cyclic(),
        format!("rank {}", derived_shape.rank()),
    );

    let central = quotient(&group, &z).expect("center is normal");
    let d = min_generators(&central.group).expect("quotient generator count");
    fact(
        &mut facts,
        "central quotient needs two generators",
        d == 2,
        format!("d(G/Z) = {d}"),
    );
    let tight = central.group.order() == derived.order().pow(d as u32);
    fact(
        &mut facts,
        "|G/Z| = |G'|^d with both sides 16",
        tight && central.group.order() == 16,
        format!(
            "|G/Z| = {}, |G'|^{} = {}",
            central.group.order(),
            d,
            derived.order().pow(d as u32)
        ),
    );

    let n = group.order().trailing_zeros() as usize;
    fact(
        &mut facts,
        "co-class is 2",
        class == Some(n - 2),
        format!("order 2^{n}, class {class:?}"),
    );

    let k_set = commutator_set(&group);
    fact(
        &mut facts,
        "commutator values fill the derived subgroup",
        k_set.len() == derived.order() && k_set == derived.elements(),
        format!("|K(G)| = {}", k_set.len()),
    );

    let inn = autos::inner(&group);
    match (autos::class_preserving(&group), autos::ia_star(&group)) {
        (Ok(class_preserving), Ok(star)) => {
            let collapse = inn.set_equal(&class_preserving) && class_preserving.set_equal(&star);
            fact(
                &mut facts,
                "Inn, Aut_c and IA* coincide",
                collapse,
                format!(
                    "|Inn| = {}, |Aut_c| = {}, |IA*| = {}",
                    inn.order(),
                    class_preserving.order(),
                    star.order()
                ),
            );
        }
        (cp, star) => {
            fact(
                &mut facts,
                "Inn, Aut_c and IA* coincide",
                false,
                format!(
                    "enumeration failed: Aut_c {:?}, IA* {:?}",
                    cp.err(),
                    star.err()
                ),
            );
        }
    }

    facts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fact_passes() {
        let facts = verify_sharp32();
        assert_eq!(facts.len(), 12);
        for f in &facts {
            assert!(f.passed, "{}: {}", f.fact, f.detail);
        }
    }
}
