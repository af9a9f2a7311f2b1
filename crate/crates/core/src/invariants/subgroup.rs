//! Subgroups of a concrete group, held as sorted element-index sets.

use std::sync::Arc;

use crate::pcgroup::{closure_elements, FiniteGroup, GroupRef};

/// Errors from structural computations.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("the set is not closed under multiplication (missing product of {0} and {1})")]
    NotClosed(u32, u32),
    #[error("subgroup does not contain the identity")]
    NoIdentity,
    #[error("element {0} is outside the ambient group")]
    OutOfRange(u32),
    #[error("the subgroup is not normal (conjugate of {0} by {1} escapes)")]
    NotNormal(u32, u32),
    #[error("the group is not abelian ({0} and {1} do not commute)")]
    NotAbelian(u32, u32),
    #[error("the group is not nilpotent (lower central series stabilizes above 1)")]
    NotNilpotent,
    #[error("nilpotency class is {class}, but this computation needs class at most {max}")]
    ClassTooLarge { class: usize, max: usize },
    #[error("search space of {0} exceeds the budget {1}")]
    Budget(u128, u128),
    #[error("{0}")]
    Other(String),
}

/// A subgroup of a shared ambient group: a sorted, closed set of element
/// indices containing the identity.
#[derive(Debug, Clone)]
pub struct Subgroup {
    group: GroupRef,
    elems: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.elems == other.elems
    }
}
impl Eq for Subgroup {}

impl Subgroup {
    /// Wraps a set of elements after checking it really is a subgroup.
    pub fn from_elements(group: &GroupRef, elems: Vec<u32>) -> Result<Self, StructureError> {
        let mut elems = elems;
        elems.sort_unstable();
        elems.dedup();
        if let Some(&bad) = elems.iter().find(|&&x| x as usize >= group.order()) {
            return Err(StructureError::OutOfRange(bad));
        }
        if elems.binary_search(&group.identity()).is_err() {
            return Err(StructureError::NoIdentity);
        }
        for &a in &elems {
            for &b in &elems {
                if elems.binary_search(&group.mul(a, b)).is_err() {
                    return Err(StructureError::NotClosed(a, b));
                }
            }
        }
        Ok(Subgroup { group: Arc::clone(group), elems })
    }

    /// Subgroup generated by `seeds`.
    pub fn generated(group: &GroupRef, seeds: &[u32]) -> Self {
        let elems = closure_elements(group, seeds);
        Subgroup { group: Arc::clone(group), elems }
    }

    pub fn trivial(group: &GroupRef) -> Self {
        Subgroup { group: Arc::clone(group), elems: vec![group.identity()] }
    }

    pub fn whole(group: &GroupRef) -> Self {
        let elems = (0..group.order() as u32).collect();
        Subgroup { group: Arc::clone(group), elems }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn index_in_group(&self) -> usize {
        self.group.order() / self.order()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn is_whole_group(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_normal(&self) -> bool {
        self.elems.iter().all(|&x| {
            (0..self.group.order() as u32)
                .all(|g| self.contains(self.group.conjugate(x, g)))
        })
    }

    pub fn is_central(&self) -> bool {
        self.elems.iter().all(|&x| {
            (0..self.group.order() as u32).all(|g| self.group.mul(x, g) == self.group.mul(g, x))
        })
    }

    pub fn is_abelian_subgroup(&self) -> bool {
        self.elems
            .iter()
            .all(|&a| self.elems.iter().all(|&b| self.group.mul(a, b) == self.group.mul(b, a)))
    }

    /// Set intersection of two subgroups of the same ambient group.
    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let elems: Vec<u32> =
            self.elems.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup { group: Arc::clone(&self.group), elems }
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elems.iter().all(|&x| other.contains(x))
    }

    /// Materializes the subgroup as a standalone group together with the
    /// embedding `new index -> ambient index`. The sub-table inherits
    /// associativity from the verified ambient table, so only the cheap
    /// checks are re-run.
    pub fn as_group(&self, name: &str) -> (GroupRef, Vec<u32>) {
        let h = self.order();
        let emb = self.elems.clone();
        let mut pos = vec![u32::MAX; self.group.order()];
        for (i, &x) in emb.iter().enumerate() {
            pos[x as usize] = i as u32;
        }
        let mut table = vec![0u32; h * h];
        for i in 0..h {
            for j in 0..h {
                let prod = self.group.mul(emb[i], emb[j]);
                table[i * h + j] = pos[prod as usize];
            }
        }
        let labels: Vec<String> =
            emb.iter().map(|&x| self.group.label(x).to_string()).collect();
        let group = FiniteGroup::derived_table(
            name,
            table,
            labels,
            Vec::new(),
            self.group.verification(),
        );
        (group, emb)
    }
}

/// Elements commuting with everything: the center `Z(G)`.
pub fn center(group: &GroupRef) -> Subgroup {
    let n = group.order() as u32;
    let elems: Vec<u32> = (0..n)
        .filter(|&z| (0..n).all(|g| group.mul(z, g) == group.mul(g, z)))
        .collect();
    Subgroup::from_elements(group, elems).expect("the center is a subgroup")
}

/// The set `K(G)` of commutators `[a, b]` (not necessarily closed).
pub fn commutator_set(group: &GroupRef) -> Vec<u32> {
    let n = group.order() as u32;
    let mut seen = vec![false; group.order()];
    for a in 0..n {
        for b in 0..n {
            seen[group.commutator(a, b) as usize] = true;
        }
    }
    (0..n).filter(|&x| seen[x as usize]).collect()
}

/// The set `[x, G] = { [x, g] : g in G }`.
pub fn commutator_with(group: &GroupRef, x: u32) -> Vec<u32> {
    let n = group.order() as u32;
    let mut seen = vec![false; group.order()];
    for g in 0..n {
        seen[group.commutator(x, g) as usize] = true;
    }
    (0..n).filter(|&y| seen[y as usize]).collect()
}

/// Derived subgroup `G' = <K(G)>`.
pub fn derived_subgroup(group: &GroupRef) -> Subgroup {
    Subgroup::generated(group, &commutator_set(group))
}

/// Commutator subgroup `[H, G]` for a subgroup `H`.
pub fn commutator_subgroup_with(group: &GroupRef, h: &Subgroup) -> Subgroup {
    let n = group.order() as u32;
    let mut gens = Vec::new();
    for &x in h.elements() {
        for g in 0..n {
            gens.push(group.commutator(x, g));
        }
    }
    Subgroup::generated(group, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcgroup::{dihedral, quaternion, BuildOptions, FiniteGroup};

    fn build(name: &str) -> GroupRef {
        let p = match name {
            "D8" => dihedral(8).unwrap(),
            "Q8" => quaternion(8).unwrap(),
            _ => unreachable!(),
        };
        FiniteGroup::build(&p, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn center_of_q8_is_the_involution() {
        let g = build("Q8");
        let z = center(&g);
        assert_eq!(z.order(), 2);
        assert!(z.is_central() && z.is_normal());
    }

    #[test]
    fn derived_subgroup_of_d8() {
        let g = build("D8");
        let d = derived_subgroup(&g);
        assert_eq!(d.order(), 2);
        // K(G) is already closed here.
        assert_eq!(commutator_set(&g), d.elements());
        let r = g.generators()[1];
        assert_eq!(commutator_with(&g, r).len(), 2);
    }

    #[test]
    fn from_elements_validates() {
        let g = build("Q8");
        let y = g.generators()[1];
        assert!(Subgroup::from_elements(&g, vec![0, y]).is_err());
        let sub = Subgroup::generated(&g, &[y]);
        assert_eq!(sub.order(), 4);
        assert!(Subgroup::from_elements(&g, sub.elements().to_vec()).is_ok());
        assert!(Subgroup::from_elements(&g, vec![y]).is_err(), "missing identity");
    }

    #[test]
    fn materialized_subgroup_multiplies_like_the_ambient_one() {
        let g = build("Q8");
        let sub = Subgroup::generated(&g, &[g.generators()[1]]);
        let (h, emb) = sub.as_group("C4");
        assert_eq!(h.order(), 4);
        for i in 0..4u32 {
            for j in 0..4u32 {
                let ambient = g.mul(emb[i as usize], emb[j as usize]);
                assert_eq!(emb[h.mul(i, j) as usize], ambient);
            }
        }
    }

    #[test]
    fn intersection_and_subset() {
        let g = build("Q8");
        let a = Subgroup::generated(&g, &[g.generators()[0]]);
        let b = Subgroup::generated(&g, &[g.generators()[1]]);
        let meet = a.intersect(&b);
        assert_eq!(meet.order(), 2);
        assert!(meet.is_subset_of(&a) && meet.is_subset_of(&b));
        assert!(center(&g).is_subset_of(&b));
    }
}
