//! When do the near-identity automorphisms of a class-2 group all come
//! from conjugation?
//!
//! For nilpotency class at most two, the map sending an automorphism to
//! the displacement function `g -> g^{-1} sigma(g)` identifies IA(G) with
//! Hom(G/G', G') and its center-fixing subgroup IA*(G) with
//! Hom(G/Z, G'), while Inn(G) is G/Z itself. The classification below
//! answers "IA isomorphic to Inn?" from the structure triple alone, by a
//! case split on which parts are finite; every verdict also carries an
//! independent direct check (a Hom-group comparison symbolically, an
//! honest automorphism-set comparison for concrete groups).

use num_bigint::BigUint;
use num_integer::Integer;

use crate::abelian::FgAbelian;
use crate::autos;
use crate::invariants::{
    abelian_structure, center, derived_subgroup, exponent, min_generators, nilpotency_class,
    p_group_prime, quotient, structure_triple, StructureTriple,
};
use crate::pcgroup::GroupRef;

use super::{CaseTag, ClassificationVerdict, TheoremError};

fn ensure_class_at_most_2(group: &GroupRef) -> Result<usize, TheoremError> {
    match nilpotency_class(group) {
        None => Err(TheoremError::NotNilpotent),
        Some(c) if c > 2 => Err(TheoremError::ClassTooLarge { class: c, max: 2 }),
        Some(c) => Ok(c),
    }
}

/// Torsion invariant factors largest-first, with the free rank alongside.
/// Convenient orientation for quotient tests: the `s`-th largest factor
/// of a quotient must divide the `s`-th largest factor of the source,
/// where free factors sort in front of everything.
fn descending_factors(g: &FgAbelian) -> (usize, Vec<BigUint>) {
    let (mut torsion, free) = g.invariant_factors();
    torsion.reverse();
    (free, torsion)
}

/// Why `target` cannot be a quotient of `source`, if it cannot.
fn quotient_obstruction(source: &FgAbelian, target: &FgAbelian) -> Option<String> {
    let (b, u) = descending_factors(source);
    let (a, t) = descending_factors(target);
    if a > b {
        return Some(format!("free rank would have to drop from {b} to {a}"));
    }
    for (j, tj) in t.iter().enumerate() {
        // Target slot a + j (0-based) must be covered by the same slot of
        // the source; the first b source slots are free and cover anything.
        let s = a + j;
        if s < b {
            continue;
        }
        match u.get(s - b) {
            Some(us) if us.is_multiple_of(tj) => {}
            Some(us) => {
                return Some(format!(
                    "torsion factor C_{tj} would have to be covered by C_{us}"
                ));
            }
            None => {
                return Some(format!(
                    "needs {} cyclic factors but the source only has {}",
                    a + t.len(),
                    b + u.len()
                ));
            }
        }
    }
    None
}

/// Constraints every triple `(G/Z, G/G', G')` of an actual finitely
/// generated class-2 group satisfies. Necessary, not sufficient: a triple
/// passing all of them may still fail to be realized by any group.
///
/// - `G/Z` is a quotient of `G/G'` (the center contains the derived
///   group), tested by invariant-factor divisibility. In the finite case
///   this is the familiar coordinatewise domination of primary exponents;
///   in general the free rank of `G/G'` may drop and create torsion, so
///   the comparison shifts by the rank difference.
/// - The commutator pairing `G/Z x G/Z -> G'` is onto a generating set
///   and kills torsion from either side, forcing the torsion exponents of
///   `G/Z` and `G'` to agree.
/// - `G/Z` is finite exactly when `G'` is: one direction is the
///   finite-center-index theorem, the other the finite-derived-group
///   converse for finitely generated groups.
/// - A group with cyclic central quotient is abelian, so a nontrivial
///   derived group rules out cyclic `G/Z`.
pub fn admissibility_violations(triple: &StructureTriple) -> Vec<String> {
    let a = &triple.central_quotient;
    let b = &triple.abelianization;
    let c = &triple.derived;
    let mut out = Vec::new();
    if let Some(reason) = quotient_obstruction(b, a) {
        out.push(format!("G/Z is not a quotient of G/G': {reason}"));
    }
    if a.torsion_exponent() != c.torsion_exponent() {
        out.push(format!(
            "torsion exponents differ: exp T(G/Z) = {} but exp T(G') = {}",
            a.torsion_exponent(),
            c.torsion_exponent()
        ));
    }
    if (a.free_rank() == 0) != (c.free_rank() == 0) {
        out.push(format!(
            "G/Z and G' must be finite together: free ranks are {} and {}",
            a.free_rank(),
            c.free_rank()
        ));
    }
    if !c.is_trivial() && a.rank() <= 1 {
        out.push(format!(
            "cyclic central quotient {a} forces an abelian group, but G' = {c}"
        ));
    }
    out
}

/// The finite-case criterion: cyclic derived group, equal cyclic factor
/// counts prime by prime, and each primary part of `G/Z` either
/// homocyclic or matching `G/G'` beyond the threshold where the factors
/// of `G/G'` fall below the top exponent of `G/Z`.
fn finite_predicate(a: &FgAbelian, b: &FgAbelian, c: &FgAbelian) -> (bool, Option<String>) {
    if !c.is_cyclic() {
        return (false, Some(format!("derived group {c} is not cyclic")));
    }
    for p in a.primes() {
        let alphas = a.primary_part(p);
        let betas = b.primary_part(p);
        if alphas.len() != betas.len() {
            return (
                false,
                Some(format!(
                    "the {p}-parts of G/Z and G/G' have {} and {} cyclic factors",
                    alphas.len(),
                    betas.len()
                )),
            );
        }
        let top = alphas[0];
        // Position of the first factor of G/G' lying below the top
        // exponent of G/Z. Everything in front of it must be at the top
        // exponent (homocyclic start), everything from it on must agree
        // between the two groups. No such position means G/Z itself must
        // be homocyclic.
        match betas.iter().position(|&beta| beta < top) {
            None => {
                if let Some(j) = alphas.iter().position(|&alpha| alpha != top) {
                    return (
                        false,
                        Some(format!(
                            "the {p}-part of G/Z is not homocyclic: exponent {} at position {j} under top exponent {top}",
                            alphas[j]
                        )),
                    );
                }
            }
            Some(r) => {
                for j in 0..r {
                    if alphas[j] != top {
                        return (
                            false,
                            Some(format!(
                                "{p}-part of G/Z drops to exponent {} at position {j}, before G/G' first drops below {top} at position {r}",
                                alphas[j]
                            )),
                        );
                    }
                }
                for j in r..betas.len() {
                    if alphas[j] != betas[j] {
                        return (
                            false,
                            Some(format!(
                                "{p}-parts of G/Z and G/G' disagree at position {j} ({} vs {}) past the threshold {r}",
                                alphas[j], betas[j]
                            )),
                        );
                    }
                }
            }
        }
    }
    (true, None)
}

/// Classifies a structure triple: does a class-2 group with these
/// invariants have IA isomorphic to Inn? The structural predicate is
/// evaluated per shape case; independently, `Hom(G/G', G')` is computed
/// and compared with `G/Z`, which is what IA against Inn abstractly
/// amounts to. The two verdicts agree on every shape except
/// mixed-abelianization (see the note on that branch).
pub fn classify_ia_inner_symbolic(
    triple: &StructureTriple,
) -> Result<ClassificationVerdict, TheoremError> {
    let violations = admissibility_violations(triple);
    if !violations.is_empty() {
        return Err(TheoremError::Inadmissible(violations.join("; ")));
    }
    let a = &triple.central_quotient;
    let b = &triple.abelianization;
    let c = &triple.derived;
    let direct = b.hom_structure(c).is_isomorphic(a);

    let (case, predicate, witness) = if c.is_trivial() {
        // Admissibility already forces G/Z trivial here: the group is
        // abelian and the only near-identity map is the identity.
        (
            CaseTag::Abelian,
            true,
            Some("trivial derived group: IA and Inn are both trivial".to_string()),
        )
    } else if b.free_rank() == 0 {
        let (ok, w) = finite_predicate(a, b, c);
        (CaseTag::Finite, ok, w)
    } else if c.torsion().is_trivial() {
        // Derived group free of positive rank; the only sources of
        // homomorphisms into it are the free generators of G/G'.
        let mut w = None;
        let ok = if c.free_rank() != 1 {
            w = Some(format!(
                "derived group is free of rank {}, needs rank one",
                c.free_rank()
            ));
            false
        } else if a.free_rank() != b.free_rank() {
            w = Some(format!(
                "torsion-free ranks differ: G/Z has {}, G/G' has {}",
                a.free_rank(),
                b.free_rank()
            ));
            false
        } else {
            true
        };
        (CaseTag::FreeDerived, ok, w)
    } else if c.free_rank() == 0 {
        if b.torsion().is_trivial() {
            let target = c.power(b.free_rank());
            let ok = a.is_isomorphic(&target);
            let w = (!ok).then(|| {
                format!("G/Z is {a}, not G' raised to the free rank of G/G' ({target})")
            });
            (CaseTag::TorsionDerived, ok, w)
        } else {
            // The criterion implemented here declares that a torsion
            // derived group with mixed abelianization never collapses IA
            // to Inn. Careful: the direct Hom comparison does not always
            // back that up. The group <x, y | x^2 = 1, [x,y]^2 = 1,
            // [x,y] central> has G' = C_2, G/G' = C_2 x Z and
            // G/Z = C_2 x C_2, and its four near-identity maps are
            // exactly its four inner automorphisms, yet this branch
            // reports false. Verdicts in this shape can therefore come
            // out inconsistent; when they do, trust `direct_check_holds`.
            (
                CaseTag::MixedAbelianization,
                false,
                Some(
                    "criterion: torsion derived group with mixed abelianization never collapses \
                     (the direct Hom comparison can disagree on this shape)"
                        .to_string(),
                ),
            )
        }
    } else {
        // Mixed derived group: torsion and free part both nontrivial.
        let mut w = None;
        let ok = if !b.torsion().is_trivial() {
            w = Some("mixed derived group needs a torsion-free abelianization".to_string());
            false
        } else if c.free_rank() != 1 {
            w = Some(format!(
                "derived group has free rank {}, needs exactly one",
                c.free_rank()
            ));
            false
        } else if a.free_rank() != b.free_rank() {
            w = Some(format!(
                "torsion-free ranks differ: G/Z has {}, G/G' has {}",
                a.free_rank(),
                b.free_rank()
            ));
            false
        } else {
            let target = c.torsion().power(b.free_rank());
            if a.torsion().is_isomorphic(&target) {
                true
            } else {
                w = Some(format!(
                    "torsion of G/Z is {}, not T(G') raised to the free rank of G/G' ({})",
                    a.torsion(),
                    target
                ));
                false
            }
        };
        (CaseTag::MixedDerived, ok, w)
    };

    Ok(ClassificationVerdict::new(case, predicate, direct, witness))
}

/// Symbolic form of the center-fixing comparison: IA* is isomorphic to
/// Inn exactly when the derived group is cyclic. The direct check
/// computes `Hom(G/Z, G')` and compares it with `G/Z`.
pub fn check_ia_star_inner_symbolic(
    triple: &StructureTriple,
) -> Result<ClassificationVerdict, TheoremError> {
    let violations = admissibility_violations(triple);
    if !violations.is_empty() {
        return Err(TheoremError::Inadmissible(violations.join("; ")));
    }
    let a = &triple.central_quotient;
    let c = &triple.derived;
    let predicate = c.is_cyclic();
    let witness = (!predicate).then(|| format!("derived group {c} is not cyclic"));
    let direct = a.hom_structure(c).is_isomorphic(a);
    Ok(ClassificationVerdict::new(
        CaseTag::CenterFixing,
        predicate,
        direct,
        witness,
    ))
}

fn record_isomorphism(
    verdict: &mut ClassificationVerdict,
    lhs: &autos::AutSet,
    rhs: &autos::AutSet,
) {
    verdict.isomorphic = match (lhs.structure(), rhs.structure()) {
        (Some(u), Some(v)) => Some(u.is_isomorphic(&v)),
        _ => None,
    };
}

/// Concrete classification of a finite group of class at most two: runs
/// the symbolic predicate on the recognized structure triple and compares
/// IA(G) with Inn(G) as honest permutation sets. Because `Inn <= IA`
/// always holds, set equality, equal cardinality and abstract isomorphism
/// all coincide here; the abstract comparison is still recorded
/// separately in `isomorphic` as a cross-check through a different route
/// (structure recognition instead of permutation comparison).
pub fn classify_ia_inner_finite(group: &GroupRef) -> Result<ClassificationVerdict, TheoremError> {
    ensure_class_at_most_2(group)?;
    let inn = autos::inner(group);
    let ia = autos::ia_class2(group)?;
    let set_equal = ia.set_equal(&inn);
    if group.is_abelian() {
        let mut verdict = ClassificationVerdict::new(
            CaseTag::Abelian,
            true,
            set_equal,
            Some("abelian group: IA and Inn are both trivial".to_string()),
        );
        record_isomorphism(&mut verdict, &ia, &inn);
        return Ok(verdict);
    }
    let triple = structure_triple(group)?;
    let symbolic = classify_ia_inner_symbolic(&triple)?;
    let mut verdict = ClassificationVerdict::new(
        symbolic.case,
        symbolic.predicate_holds,
        set_equal,
        symbolic.witness,
    );
    record_isomorphism(&mut verdict, &ia, &inn);
    Ok(verdict)
}

/// Concrete center-fixing comparison: is every automorphism that fixes
/// the center elementwise and acts trivially on G/G' inner? Predicate:
/// cyclic derived group. Direct check: IA*(G) against Inn(G) as sets.
pub fn check_ia_star_inner(group: &GroupRef) -> Result<ClassificationVerdict, TheoremError> {
    ensure_class_at_most_2(group)?;
    let inn = autos::inner(group);
    let star = autos::ia_star(group)?;
    let set_equal = star.set_equal(&inn);
    let (derived_group, _) = derived_subgroup(group).as_group("derived");
    let derived = abelian_structure(&derived_group)?;
    let predicate = derived.is_cyclic();
    let witness = (!predicate).then(|| format!("derived subgroup {derived} is not cyclic"));
    let mut verdict =
        ClassificationVerdict::new(CaseTag::CenterFixing, predicate, set_equal, witness);
    record_isomorphism(&mut verdict, &star, &inn);
    Ok(verdict)
}

/// For class at most two with cyclic derived group and finite central
/// quotient, the class-preserving automorphisms are exactly the inner
/// ones (they sit between Inn and IA*, and those two coincide here).
/// Returns whether that equality actually holds as sets.
pub fn check_class_preserving_inner(group: &GroupRef) -> Result<bool, TheoremError> {
    ensure_class_at_most_2(group)?;
    let (derived_group, _) = derived_subgroup(group).as_group("derived");
    let derived = abelian_structure(&derived_group)?;
    if !derived.is_cyclic() {
        return Err(TheoremError::DerivedNotCyclic(derived.to_string()));
    }
    let class_preserving = autos::class_preserving(group)?;
    Ok(class_preserving.set_equal(&autos::inner(group)))
}

/// Two-generated groups of class at most two have every near-identity
/// automorphism inner. Returns whether IA(G) = Inn(G) as sets.
pub fn check_two_generated_ia(group: &GroupRef) -> Result<bool, TheoremError> {
    ensure_class_at_most_2(group)?;
    let d = min_generators(group)?;
    if d != 2 {
        return Err(TheoremError::WrongGeneratorCount {
            required: 2,
            actual: d,
        });
    }
    Ok(autos::ia(group)?.set_equal(&autos::inner(group)))
}

/// The single-prime restatement of the finite criterion, evaluated
/// directly on a p-group: IA = Inn exactly when the derived group is
/// cyclic, G/Z and G/G' need the same number of generators, and G/Z is
/// homocyclic or agrees with G/G' past the threshold. Structurally the
/// same test as the general finite predicate, but phrased and computed
/// independently; a unit test pins the agreement.
pub fn check_p_group_form(group: &GroupRef) -> Result<ClassificationVerdict, TheoremError> {
    if p_group_prime(group).is_none() {
        return Err(TheoremError::NotPGroup);
    }
    ensure_class_at_most_2(group)?;
    let inn = autos::inner(group);
    let ia = autos::ia_class2(group)?;
    let set_equal = ia.set_equal(&inn);
    if group.is_abelian() {
        let mut verdict = ClassificationVerdict::new(
            CaseTag::Abelian,
            true,
            set_equal,
            Some("abelian group: IA and Inn are both trivial".to_string()),
        );
        record_isomorphism(&mut verdict, &ia, &inn);
        return Ok(verdict);
    }
    let triple = structure_triple(group)?;
    let (predicate, witness) = p_group_predicate(&triple);
    let mut verdict = ClassificationVerdict::new(CaseTag::Finite, predicate, set_equal, witness);
    record_isomorphism(&mut verdict, &ia, &inn);
    Ok(verdict)
}

fn p_group_predicate(triple: &StructureTriple) -> (bool, Option<String>) {
    let a = &triple.central_quotient;
    let b = &triple.abelianization;
    let c = &triple.derived;
    if !c.is_cyclic() {
        return (false, Some(format!("derived group {c} is not cyclic")));
    }
    let p = a
        .primes()
        .next()
        .expect("nonabelian p-group has a nontrivial central quotient");
    let alphas = a.primary_part(p);
    let deltas = b.primary_part(p);
    if alphas.len() != deltas.len() {
        return (
            false,
            Some(format!(
                "G/Z needs {} generators but G/G' needs {}",
                alphas.len(),
                deltas.len()
            )),
        );
    }
    let top = alphas[0];
    if alphas.iter().all(|&alpha| alpha == top) {
        return (true, None);
    }
    let Some(r) = deltas.iter().position(|&delta| delta < top) else {
        return (
            false,
            Some(format!(
                "G/Z is not homocyclic although no factor of G/G' drops below its top exponent {top}"
            )),
        );
    };
    for j in 0..r {
        if alphas[j] != top {
            return (
                false,
                Some(format!(
                    "G/Z drops to exponent {} at position {j}, before the threshold {r}",
                    alphas[j]
                )),
            );
        }
    }
    for j in r..deltas.len() {
        if alphas[j] != deltas[j] {
            return (
                false,
                Some(format!(
                    "exponents {} and {} disagree at position {j} past the threshold {r}",
                    alphas[j], deltas[j]
                )),
            );
        }
    }
    (true, None)
}

/// The commutator pairing forces the torsion parts of `G/Z` and `G'` to
/// have the same exponent. Computed concretely from element orders in the
/// central quotient and the derived subgroup, not from recognized
/// descriptors.
pub fn check_exponent_match(group: &GroupRef) -> Result<bool, TheoremError> {
    ensure_class_at_most_2(group)?;
    let z = center(group);
    let central_quotient = quotient(group, &z)?;
    let (derived_group, _) = derived_subgroup(group).as_group("derived");
    Ok(exponent(&central_quotient.group) == exponent(&derived_group))
}
