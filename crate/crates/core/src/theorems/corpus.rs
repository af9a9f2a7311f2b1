//! The stock collection of groups the verification suite runs over:
//! abelian groups across several shapes, the small dihedral and
//! quaternion groups, extraspecial groups of both types, Heisenberg
//! groups, a few direct products chosen to hit specific branches of the
//! classification, and the order-32 group with the tight derived-power
//! bound.

use crate::abelian::FgAbelian;
use crate::pcgroup::{
    abelian, cyclic, dihedral, extraspecial, heisenberg, quaternion, schur_sharp_32,
    BuildOptions, ExtraspecialKind, FiniteGroup, GroupRef, PcPresentation,
};

fn build(pres: &PcPresentation) -> GroupRef {
    FiniteGroup::build(pres, &BuildOptions::default()).expect("stock presentation must build")
}

fn build_abelian(factors: &[u64]) -> GroupRef {
    let desc = FgAbelian::from_cyclic_factors(factors, 0).expect("valid cyclic factors");
    build(&abelian(&desc).expect("finite descriptor"))
}

/// Builds the default corpus. Groups are handed back in construction
/// order; callers that need a canonical order sort by name.
///
/// The direct products are the interesting part: `Q8 x C2`, `D8 x C2`
/// and `H(3,1) x C3` attain the tight derived-power bound at order `p^4`
/// (the smaller of the two orders allowed at co-class 2), `Q8 x C4`
/// breaks the factor-count condition of the collapse criterion, and
/// `D8 x D8` has a noncyclic derived subgroup, separating the
/// center-fixing count from the inner one.
pub fn default_corpus() -> Vec<GroupRef> {
    let mut groups: Vec<GroupRef> = Vec::new();

    for n in [1u64, 2, 3, 4, 8, 9, 12, 16, 24, 64] {
        groups.push(build(&cyclic(n).expect("positive order")));
    }
    for factors in [
        &[2u64, 2][..],
        &[2, 2, 2],
        &[2, 2, 2, 2, 2, 2],
        &[4, 2],
        &[4, 4],
        &[8, 8],
        &[3, 3],
        &[6, 6],
    ] {
        groups.push(build_abelian(factors));
    }

    for order in [8u64, 16] {
        groups.push(build(&dihedral(order).expect("even order")));
        groups.push(build(&quaternion(order).expect("2-power order")));
    }

    for (p, order) in [(2u64, 8u64), (2, 32), (3, 27), (3, 243), (5, 125)] {
        for kind in [ExtraspecialKind::Plus, ExtraspecialKind::Minus] {
            groups.push(build(&extraspecial(p, order, kind).expect("extraspecial order")));
        }
    }

    for (p, k) in [(2u64, 1u32), (3, 1), (5, 1), (2, 2), (3, 2)] {
        groups.push(build(&heisenberg(p, k).expect("prime and exponent")));
    }

    let q8 = build(&quaternion(8).unwrap());
    let d8 = build(&dihedral(8).unwrap());
    let h31 = build(&heisenberg(3, 1).unwrap());
    let c2 = build(&cyclic(2).unwrap());
    let c3 = build(&cyclic(3).unwrap());
    let c4 = build(&cyclic(4).unwrap());
    groups.push(FiniteGroup::direct_product(&q8, &c2, "Q8 x C2"));
    groups.push(FiniteGroup::direct_product(&q8, &c4, "Q8 x C4"));
    groups.push(FiniteGroup::direct_product(&d8, &c2, "D8 x C2"));
    groups.push(FiniteGroup::direct_product(&h31, &c3, "H(3,1) x C3"));
    groups.push(FiniteGroup::direct_product(&d8, &d8, "D8 x D8"));

    groups.push(build(&schur_sharp_32()));

    groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn corpus_builds_with_distinct_names() {
        let corpus = default_corpus();
        assert!(corpus.len() >= 40);
        let names: BTreeSet<&str> = corpus.iter().map(|g| g.name()).collect();
        assert_eq!(names.len(), corpus.len(), "names must be unique");
        for needed in ["Sharp32", "Q8 x C4", "D8 x D8", "H(3,1)", "E27+", "C1"] {
            assert!(names.contains(needed), "missing {needed}");
        }
        let largest = corpus.iter().map(|g| g.order()).max().unwrap();
        assert_eq!(largest, 729);
    }
}
