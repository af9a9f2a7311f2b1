//! Quotients by normal subgroups, materialized as concrete groups.

use std::sync::Arc;

use crate::pcgroup::{FiniteGroup, GroupRef};

use super::subgroup::{StructureError, Subgroup};

/// A quotient `G/N` with the bookkeeping needed to move elements back and
/// forth: `projection[g]` is the coset index of `g`, and `reps[c]` is the
/// smallest element of coset `c`. Cosets are numbered so that the coset of
/// the identity comes first and representatives increase.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: GroupRef,
    pub projection: Vec<u32>,
    pub reps: Vec<u32>,
}

/// Forms `G/N`. Fails if `N` is not normal in `G`.
pub fn quotient(group: &GroupRef, n: &Subgroup) -> Result<Quotient, StructureError> {
    assert!(
        Arc::ptr_eq(group, n.group()),
        "subgroup belongs to a different ambient group"
    );
    if !n.is_normal() {
        let bad = n
            .elements()
            .iter()
            .find_map(|&x| {
                (0..group.order() as u32)
                    .find(|&g| !n.contains(group.conjugate(x, g)))
                    .map(|g| (x, g))
            })
            .expect("a witness exists when normality fails");
        return Err(StructureError::NotNormal(bad.0, bad.1));
    }

    let size = group.order();
    // Partition into left cosets g N, labelling each by its least member.
    let mut coset_min = vec![u32::MAX; size];
    for g in 0..size as u32 {
        if coset_min[g as usize] != u32::MAX {
            continue;
        }
        let members: Vec<u32> = n.elements().iter().map(|&x| group.mul(g, x)).collect();
        let min = *members.iter().min().unwrap();
        for m in members {
            coset_min[m as usize] = min;
        }
    }
    let mut reps: Vec<u32> = coset_min.iter().copied().collect();
    reps.sort_unstable();
    reps.dedup();
    debug_assert_eq!(reps.len(), size / n.order());
    debug_assert_eq!(reps[0], group.identity());

    let mut coset_of = vec![0u32; size];
    for g in 0..size {
        let c = reps.binary_search(&coset_min[g]).unwrap();
        coset_of[g] = c as u32;
    }

    let q = reps.len();
    let mut table = vec![0u32; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * q + j] = coset_of[group.mul(a, b) as usize];
        }
    }
    let labels: Vec<String> = reps
        .iter()
        .map(|&r| format!("[{}]", group.label(r)))
        .collect();
    let generators: Vec<u32> = {
        let mut gs: Vec<u32> = group
            .generators()
            .iter()
            .map(|&g| coset_of[g as usize])
            .filter(|&c| c != 0)
            .collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    };
    let name = format!("{}/{}", group.name(), subgroup_tag(n));
    let qgroup = FiniteGroup::derived_table(&name, table, labels, generators, group.verification());
    Ok(Quotient { group: qgroup, projection: coset_of, reps })
}

fn subgroup_tag(n: &Subgroup) -> String {
    if n.is_trivial() {
        "1".to_string()
    } else {
        format!("N{}", n.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::subgroup::{center, derived_subgroup};
    use crate::pcgroup::{dihedral, quaternion, BuildOptions, FiniteGroup};

    #[test]
    fn q8_central_quotient_is_klein() {
        let g = FiniteGroup::build(&quaternion(8).unwrap(), &BuildOptions::default()).unwrap();
        let q = quotient(&g, &center(&g)).unwrap();
        assert_eq!(q.group.order(), 4);
        assert!(q.group.is_abelian());
        // Klein four-group: every non-identity coset squares to the identity.
        for c in 1..4u32 {
            assert_eq!(q.group.mul(c, c), 0);
        }
        // Projection is a homomorphism.
        for a in 0..8u32 {
            for b in 0..8u32 {
                let lhs = q.projection[g.mul(a, b) as usize];
                let rhs = q.group.mul(q.projection[a as usize], q.projection[b as usize]);
                assert_eq!(lhs, rhs);
            }
        }
        // Representatives project onto their own cosets.
        for (c, &r) in q.reps.iter().enumerate() {
            assert_eq!(q.projection[r as usize], c as u32);
        }
    }

    #[test]
    fn non_normal_subgroup_is_rejected() {
        let g = FiniteGroup::build(&dihedral(8).unwrap(), &BuildOptions::default()).unwrap();
        let s = g.generators()[0];
        let sub = crate::invariants::subgroup::Subgroup::generated(&g, &[s]);
        assert!(matches!(
            quotient(&g, &sub),
            Err(StructureError::NotNormal(_, _))
        ));
    }

    #[test]
    fn abelianization_of_d8() {
        let g = FiniteGroup::build(&dihedral(8).unwrap(), &BuildOptions::default()).unwrap();
        let q = quotient(&g, &derived_subgroup(&g)).unwrap();
        assert_eq!(q.group.order(), 4);
        assert!(q.group.is_abelian());
    }
}
