//! Counting bounds around the center index: for finite `G` with `d` the
//! minimal generator count of `G/Z`, every generating tuple `x_1..x_d`
//! of `G/Z` pins an inner automorphism down by its commutators, giving
//!
//! ```text
//! |G/Z| <= prod |[x_i, G]| <= |K(G)|^d <= |G'|^d
//! ```
//!
//! with `K(G)` the set of commutator values. The center-fixing
//! automorphisms obey the same power bound, `|IA*| <= |G'|^d`. When the
//! outer bound is tight the squeeze forces `G' = K(G)` and
//! `Inn = Aut_c = IA*`; a report records the whole chain plus those two
//! consequences.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::autos;
use crate::invariants::{
    center, commutator_set, commutator_with, derived_subgroup, min_generators,
    minimal_generating_tuples, nilpotency_class, p_group_prime, quotient, structure_triple,
};
use crate::pcgroup::GroupRef;

use super::{CheckOutcome, TheoremError};

fn decimal<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// One sampled minimal generating tuple of `G/Z` and its commutator
/// bound. Representatives are element labels in `G`; the product is
/// `prod |[x_i, G]|` over them (independent of the representative choice,
/// since central shifts do not move commutators).
#[derive(Debug, Clone, Serialize)]
pub struct TupleBound {
    pub representatives: Vec<String>,
    #[serde(serialize_with = "decimal")]
    pub product: BigUint,
    /// `|G/Z| <= product`.
    pub meets_lower_bound: bool,
    /// `product <= |K(G)|^d`.
    pub within_commutator_bound: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SchurReport {
    pub group: String,
    pub order: usize,
    /// Minimal number of generators of `G/Z`.
    pub d: usize,
    pub central_quotient_order: usize,
    pub derived_order: usize,
    pub commutator_set_size: usize,
    /// `|G'|^d`.
    #[serde(serialize_with = "decimal")]
    pub derived_power_bound: BigUint,
    /// `|K(G)|^d`.
    #[serde(serialize_with = "decimal")]
    pub commutator_power_bound: BigUint,
    pub tuples: Vec<TupleBound>,
    pub tuples_exhaustive: bool,
    /// Every sampled tuple satisfied the full chain ordering.
    pub chain_holds: bool,
    /// `|G/Z| = |G'|^d`.
    pub equality_derived: bool,
    /// `|G/Z| = |K(G)|^d`.
    pub equality_commutator: bool,
    pub ia_star_order: Option<usize>,
    pub ia_star_within_bound: Option<bool>,
    pub derived_equals_commutator_set: bool,
    pub inner_class_preserving_ia_star_equal: Option<bool>,
    /// Set when the derived-power bound was tight but one of its two
    /// forced consequences failed to hold. Never expected to fire; a
    /// value here should fail any run that sees it.
    pub violation: Option<String>,
}

/// Assembles the chain report for a finite group of any nilpotency
/// class. Minimal generating tuples of `G/Z` are enumerated exhaustively
/// when that is cheap and sampled with the seeded generator otherwise;
/// `tuple_limit` caps how many are recorded either way.
pub fn schur_report(
    group: &GroupRef,
    tuple_limit: usize,
    seed: u64,
) -> Result<SchurReport, TheoremError> {
    let z = center(group);
    let central = quotient(group, &z)?;
    let d = min_generators(&central.group)?;
    let derived = derived_subgroup(group);
    let k_set = commutator_set(group);

    let central_quotient_order = central.group.order();
    let derived_order = derived.order();
    let derived_power_bound = BigUint::from(derived_order).pow(d as u32);
    let commutator_power_bound = BigUint::from(k_set.len()).pow(d as u32);

    let (raw_tuples, tuples_exhaustive) =
        minimal_generating_tuples(&central.group, tuple_limit, seed)?;
    let lower = BigUint::from(central_quotient_order);
    let mut tuples = Vec::with_capacity(raw_tuples.len());
    for tuple in &raw_tuples {
        let mut product = BigUint::from(1u32);
        let mut representatives = Vec::with_capacity(tuple.len());
        for &coset in tuple {
            let rep = central.reps[coset as usize];
            product *= BigUint::from(commutator_with(group, rep).len());
            representatives.push(group.label(rep).to_string());
        }
        tuples.push(TupleBound {
            representatives,
            meets_lower_bound: lower <= product,
            within_commutator_bound: product <= commutator_power_bound,
            product,
        });
    }
    let chain_holds = commutator_power_bound <= derived_power_bound
        && tuples
            .iter()
            .all(|t| t.meets_lower_bound && t.within_commutator_bound);

    let equality_derived = lower == derived_power_bound;
    let equality_commutator = lower == commutator_power_bound;

    // The derived subgroup always contains the commutator values, so set
    // equality is just a size comparison.
    let derived_equals_commutator_set = k_set.len() == derived_order;

    let (ia_star_order, ia_star_within_bound, inner_class_preserving_ia_star_equal) =
        match (autos::ia_star(group), autos::class_preserving(group)) {
            (Ok(star), Ok(class_preserving)) => {
                let inn = autos::inner(group);
                let within = BigUint::from(star.order()) <= derived_power_bound;
                let collapse =
                    inn.set_equal(&class_preserving) && class_preserving.set_equal(&star);
                (Some(star.order()), Some(within), Some(collapse))
            }
            // Automorphism search can blow its budget on large inputs;
            // the chain part of the report stands on its own then.
            _ => (None, None, None),
        };

    let violation = if equality_derived {
        if !derived_equals_commutator_set {
            Some(format!(
                "bound is tight but K(G) has {} of {} derived elements",
                k_set.len(),
                derived_order
            ))
        } else {
            match inner_class_preserving_ia_star_equal {
                Some(true) => None,
                Some(false) => {
                    Some("bound is tight but Inn, Aut_c, IA* do not coincide".to_string())
                }
                None => Some(
                    "bound is tight but the automorphism sets could not be enumerated".to_string(),
                ),
            }
        }
    } else {
        None
    };

    Ok(SchurReport {
        group: group.name().to_string(),
        order: group.order(),
        d,
        central_quotient_order,
        derived_order,
        commutator_set_size: k_set.len(),
        derived_power_bound,
        commutator_power_bound,
        tuples,
        tuples_exhaustive,
        chain_holds,
        equality_derived,
        equality_commutator,
        ia_star_order,
        ia_star_within_bound,
        derived_equals_commutator_set,
        inner_class_preserving_ia_star_equal,
        violation,
    })
}

/// For finite class-2 groups, `G/Z` is isomorphic to the `r`-th power of
/// `G'` (with `r` the rank of `G/Z`) exactly when `G'` is cyclic and
/// `G/Z` homocyclic. Returns whether the isomorphism test and the
/// predicate agree.
pub fn check_homocyclic_power(group: &GroupRef) -> Result<bool, TheoremError> {
    match nilpotency_class(group) {
        None => return Err(TheoremError::NotNilpotent),
        Some(c) if c > 2 => return Err(TheoremError::ClassTooLarge { class: c, max: 2 }),
        Some(_) => {}
    }
    let triple = structure_triple(group)?;
    let a = &triple.central_quotient;
    let c = &triple.derived;
    let r = a.rank();
    let isomorphic = a.is_isomorphic(&c.power(r));
    let predicate = c.is_cyclic() && a.is_homocyclic();
    Ok(isomorphic == predicate)
}

/// Nonabelian p-groups whose class falls exactly two short of the
/// maximum and whose derived-power bound is tight can only have order
/// p^4 or p^5. Groups outside those hypotheses report not-applicable
/// rather than silently passing.
pub fn check_coclass_orders(group: &GroupRef) -> CheckOutcome {
    let Some(p) = p_group_prime(group) else {
        return CheckOutcome::NotApplicable("not a p-group".to_string());
    };
    if group.is_abelian() {
        return CheckOutcome::NotApplicable("abelian".to_string());
    }
    let class = nilpotency_class(group).expect("p-groups are nilpotent");
    let mut n = 0u32;
    let mut rest = group.order() as u64;
    while rest > 1 {
        rest /= p;
        n += 1;
    }
    if class + 2 != n as usize {
        return CheckOutcome::NotApplicable(format!(
            "co-class is {}, not 2",
            n as usize - class
        ));
    }
    let z = center(group);
    let central = match quotient(group, &z) {
        Ok(q) => q,
        Err(e) => return CheckOutcome::NotApplicable(format!("central quotient failed: {e}")),
    };
    let d = match min_generators(&central.group) {
        Ok(d) => d,
        Err(e) => return CheckOutcome::NotApplicable(format!("generator count failed: {e}")),
    };
    let derived = derived_subgroup(group);
    let bound = BigUint::from(derived.order()).pow(d as u32);
    if BigUint::from(central.group.order()) != bound {
        return CheckOutcome::NotApplicable(
            "derived-power bound is not tight".to_string(),
        );
    }
    if n == 4 || n == 5 {
        CheckOutcome::Pass
    } else {
        CheckOutcome::Fail(format!(
            "tight bound with co-class 2 at order {p}^{n}, outside p^4 and p^5"
        ))
    }
}
