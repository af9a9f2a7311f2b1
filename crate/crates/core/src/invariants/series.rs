//! Central series, nilpotency class, Frattini subgroup, conjugacy classes.

use crate::abelian::factorize;
use crate::pcgroup::GroupRef;

use super::quotient::quotient;
use super::recognize::abelian_basis;
use super::subgroup::{commutator_set, commutator_subgroup_with, StructureError, Subgroup};

/// Lower central series `G = g1 >= g2 >= ...` down to (and including) the
/// first repeated term. `g2` is the derived subgroup.
pub fn lower_central_series(group: &GroupRef) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::whole(group)];
    loop {
        let next = commutator_subgroup_with(group, series.last().unwrap());
        if next.order() == series.last().unwrap().order() {
            series.push(next);
            return series;
        }
        series.push(next);
    }
}

/// Nilpotency class, or `None` when the lower central series stabilizes
/// above the trivial subgroup. The trivial group has class 0, nontrivial
/// abelian groups class 1.
pub fn nilpotency_class(group: &GroupRef) -> Option<usize> {
    let series = lower_central_series(group);
    if series.last().unwrap().is_trivial() {
        Some(series.len() - 2)
    } else {
        None
    }
}

/// The next term of the upper central series over `z`: all `g` whose
/// commutator with every element lands in `z`.
pub fn upper_central_next(group: &GroupRef, z: &Subgroup) -> Subgroup {
    let n = group.order() as u32;
    let elems: Vec<u32> = (0..n)
        .filter(|&g| (0..n).all(|x| z.contains(group.commutator(g, x))))
        .collect();
    Subgroup::from_elements(group, elems).expect("preimage of a center is a subgroup")
}

/// Upper central series `1 = Z0 <= Z1 <= ...` up to (and including) the
/// first repeated term.
pub fn upper_central_series(group: &GroupRef) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::trivial(group)];
    loop {
        let next = upper_central_next(group, series.last().unwrap());
        if next.order() == series.last().unwrap().order() {
            series.push(next);
            return series;
        }
        series.push(next);
    }
}

/// If `|G|` is a prime power, returns the prime.
pub fn p_group_prime(group: &GroupRef) -> Option<u64> {
    let fac = factorize(group.order() as u64);
    match fac.as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Conjugacy classes, each sorted, ordered by smallest member.
pub fn conjugacy_classes(group: &GroupRef) -> Vec<Vec<u32>> {
    let n = group.order() as u32;
    let mut seen = vec![false; group.order()];
    let mut classes = Vec::new();
    for x in 0..n {
        if seen[x as usize] {
            continue;
        }
        let mut class: Vec<u32> = (0..n).map(|g| group.conjugate(x, g)).collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            seen[y as usize] = true;
        }
        classes.push(class);
    }
    classes
}

/// Map from element to the index of its conjugacy class in
/// [`conjugacy_classes`] order.
pub fn conjugacy_class_index(group: &GroupRef) -> Vec<u32> {
    let classes = conjugacy_classes(group);
    let mut idx = vec![0u32; group.order()];
    for (c, class) in classes.iter().enumerate() {
        for &x in class {
            idx[x as usize] = c as u32;
        }
    }
    idx
}

const LATTICE_BUDGET: usize = 200_000;

/// All subgroups, by breadth-first closure of the cyclic subgroups under
/// adjoining one extra generator. Only intended for small groups; the
/// budget caps the number of subgroup-times-element probes.
pub fn all_subgroups(group: &GroupRef) -> Result<Vec<Subgroup>, StructureError> {
    let n = group.order() as u32;
    let mut found: Vec<Vec<u32>> = vec![vec![group.identity()]];
    let mut queue: Vec<Vec<u32>> = vec![vec![group.identity()]];
    let mut probes = 0usize;
    while let Some(current) = queue.pop() {
        for g in 0..n {
            probes += 1;
            if probes > LATTICE_BUDGET {
                return Err(StructureError::Budget(probes as u128, LATTICE_BUDGET as u128));
            }
            if current.binary_search(&g).is_ok() {
                continue;
            }
            let mut seeds = current.clone();
            seeds.push(g);
            let enlarged = crate::pcgroup::closure_elements(group, &seeds);
            if !found.contains(&enlarged) {
                found.push(enlarged.clone());
                queue.push(enlarged);
            }
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found
        .into_iter()
        .map(|elems| Subgroup::from_elements(group, elems).expect("closure output"))
        .collect())
}

/// Maximal proper subgroups via the full subgroup lattice. Small groups only.
pub fn maximal_subgroups(group: &GroupRef) -> Result<Vec<Subgroup>, StructureError> {
    let all = all_subgroups(group)?;
    let proper: Vec<&Subgroup> = all.iter().filter(|s| !s.is_whole_group()).collect();
    let mut maximal = Vec::new();
    for s in &proper {
        let below_another = proper
            .iter()
            .any(|t| t.order() > s.order() && s.is_subset_of(t));
        if !below_another {
            maximal.push((*s).clone());
        }
    }
    Ok(maximal)
}

/// Frattini subgroup. For `p`-groups this is `G' G^p`, computed directly;
/// otherwise the subgroup lattice is enumerated, so only small groups are
/// feasible.
pub fn frattini_subgroup(group: &GroupRef) -> Result<Subgroup, StructureError> {
    if group.order() == 1 {
        return Ok(Subgroup::trivial(group));
    }
    if let Some(p) = p_group_prime(group) {
        let mut gens = commutator_set(group);
        for g in 0..group.order() as u32 {
            gens.push(group.power(g, p as i64));
        }
        return Ok(Subgroup::generated(group, &gens));
    }
    let maximal = maximal_subgroups(group)?;
    let mut phi = Subgroup::whole(group);
    for m in &maximal {
        phi = phi.intersect(&m);
    }
    Subgroup::from_elements(group, phi.elements().to_vec())
}

/// Frattini subgroup of a `p`-group by the maximal-subgroup definition:
/// intersect the preimages of the index-`p` subgroups of the elementary
/// abelian quotient `G / (G' G^p)`. Used to cross-check
/// [`frattini_subgroup`].
pub fn frattini_by_hyperplanes(group: &GroupRef) -> Result<Subgroup, StructureError> {
    let p = p_group_prime(group)
        .ok_or_else(|| StructureError::Other("not a p-group".into()))?;
    if group.order() == 1 {
        return Ok(Subgroup::trivial(group));
    }
    let mut gens = commutator_set(group);
    for g in 0..group.order() as u32 {
        gens.push(group.power(g, p as i64));
    }
    let phi = Subgroup::generated(group, &gens);
    if phi.is_whole_group() {
        return Ok(phi);
    }
    let q = quotient(group, &phi)?;
    let basis = abelian_basis(&q.group)?;
    let r = basis.len();
    let coords = super::recognize::abelian_coordinates(&q.group, &basis)
        .ok_or_else(|| StructureError::Other("basis does not span the quotient".into()))?;
    // Index-p subgroups are kernels of nonzero functionals, up to scalar:
    // normalize the first nonzero coefficient to 1.
    let mut intersection: Vec<u32> = (0..group.order() as u32).collect();
    let mut functional = vec![0u64; r];
    loop {
        // Advance to the next coefficient vector in base p.
        let mut k = 0;
        loop {
            if k == r {
                let elems = intersection;
                let sub = Subgroup::from_elements(group, elems)?;
                return Ok(sub);
            }
            functional[k] += 1;
            if functional[k] < p {
                break;
            }
            functional[k] = 0;
            k += 1;
        }
        let first_nonzero = functional.iter().position(|&c| c != 0).unwrap();
        if functional[first_nonzero] != 1 {
            continue; // scalar multiple of a functional already processed
        }
        let kernel_cosets: Vec<bool> = (0..q.group.order())
            .map(|c| {
                let dot: u64 = coords[c]
                    .iter()
                    .zip(&functional)
                    .map(|(&x, &c)| x * c % p)
                    .sum();
                dot % p == 0
            })
            .collect();
        intersection.retain(|&g| kernel_cosets[q.projection[g as usize] as usize]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::subgroup::center;
    use crate::pcgroup::{
        cyclic, dihedral, heisenberg, quaternion, schur_sharp_32, BuildOptions, FiniteGroup,
    };

    fn build(p: &crate::pcgroup::PcPresentation) -> GroupRef {
        FiniteGroup::build(p, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn classes_of_small_groups() {
        assert_eq!(nilpotency_class(&build(&cyclic(1).unwrap())), Some(0));
        assert_eq!(nilpotency_class(&build(&cyclic(6).unwrap())), Some(1));
        assert_eq!(nilpotency_class(&build(&dihedral(8).unwrap())), Some(2));
        assert_eq!(nilpotency_class(&build(&dihedral(16).unwrap())), Some(3));
        assert_eq!(nilpotency_class(&build(&heisenberg(3, 1).unwrap())), Some(2));
        assert_eq!(nilpotency_class(&build(&schur_sharp_32())), Some(3));
        // S3 is not nilpotent: build it from a table via D6.
        assert_eq!(nilpotency_class(&build(&dihedral(6).unwrap())), None);
    }

    #[test]
    fn upper_series_matches_center() {
        let g = build(&schur_sharp_32());
        let up = upper_central_series(&g);
        assert_eq!(up[1], center(&g));
        assert_eq!(up[1].order(), 2);
        assert!(up[up.len() - 1].is_whole_group());
        // Class 3 group: 1 < Z1 < Z2 < Z3 = G.
        assert_eq!(up.len(), 5);
    }

    #[test]
    fn frattini_of_the_order_32_example() {
        let g = build(&schur_sharp_32());
        let phi = frattini_subgroup(&g).unwrap();
        assert_eq!(phi.order(), 8);
        assert_eq!(frattini_by_hyperplanes(&g).unwrap(), phi);
        assert_eq!(maximal_subgroups(&g).unwrap().iter().filter(|m| m.order() == 16).count(), 3);
    }

    #[test]
    fn frattini_routes_agree_on_p_groups() {
        for pres in [
            dihedral(8).unwrap(),
            quaternion(16).unwrap(),
            heisenberg(3, 1).unwrap(),
        ] {
            let g = build(&pres);
            let a = frattini_subgroup(&g).unwrap();
            let b = frattini_by_hyperplanes(&g).unwrap();
            let maximal = maximal_subgroups(&g).unwrap();
            let mut c = Subgroup::whole(&g);
            for m in &maximal {
                c = c.intersect(&m);
            }
            assert_eq!(a, b);
            assert_eq!(a.elements(), c.elements());
        }
    }

    #[test]
    fn frattini_of_c6_is_trivial() {
        let g = build(&cyclic(6).unwrap());
        assert!(frattini_subgroup(&g).unwrap().is_trivial());
        assert_eq!(all_subgroups(&g).unwrap().len(), 4);
    }

    #[test]
    fn conjugacy_classes_of_d8() {
        let g = build(&dihedral(8).unwrap());
        let classes = conjugacy_classes(&g);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        let idx = conjugacy_class_index(&g);
        for (c, class) in classes.iter().enumerate() {
            for &x in class {
                assert_eq!(idx[x as usize], c as u32);
            }
        }
    }
}
