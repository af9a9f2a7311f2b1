//! The acceptance gate: every promise the crate makes, checked end to end
//! on the built-in corpus and against independent recomputation. Each test
//! covers one numbered criterion and prints a single summary line, so a
//! `--nocapture` run reads as a checklist.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use nilaut_core::abelian::factorize;
use nilaut_core::autos;
use nilaut_core::invariants::{
    center, derived_subgroup, exponent, min_generators, nilpotency_class, quotient,
    structure_triple,
};
use nilaut_core::pcgroup::abelian as abelian_presentation;
use nilaut_core::theorems::{
    check_coclass_orders, check_exponent_match, check_homocyclic_power, classify_ia_inner_finite,
    default_corpus, schur_report, verify_sharp32, CheckOutcome,
};
use nilaut_core::{BuildOptions, FgAbelian, FiniteGroup, GroupRef};

fn by_name<'a>(corpus: &'a [GroupRef], name: &str) -> &'a GroupRef {
    corpus
        .iter()
        .find(|g| g.name() == name)
        .unwrap_or_else(|| panic!("corpus lost {name}"))
}

fn class_at_most_two(g: &GroupRef) -> bool {
    nilpotency_class(g).is_some_and(|c| c <= 2)
}

#[test]
fn criterion_01_order32_example_facts() {
    let start = Instant::now();
    let facts = verify_sharp32();
    let elapsed = start.elapsed();
    assert_eq!(facts.len(), 12, "the fact list is fixed");
    for f in &facts {
        assert!(f.passed, "{}: {}", f.fact, f.detail);
    }
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget is 5s");
    println!(
        "criterion 1: PASS - all {} facts about the order-32 witness hold in {elapsed:?}",
        facts.len()
    );
}

#[test]
fn criterion_02_near_identity_counts_match_hom_orders() {
    let start = Instant::now();
    let mut checked = 0usize;
    for g in &default_corpus() {
        if !class_at_most_two(g) {
            continue;
        }
        let triple = structure_triple(g).expect(g.name());
        let ia = autos::ia(g).expect(g.name());
        let ia_star = autos::ia_star(g).expect(g.name());
        let hom_b = triple.abelianization.hom_structure(&triple.derived);
        let hom_a = triple.central_quotient.hom_structure(&triple.derived);
        assert_eq!(
            Some(BigUint::from(ia.order())),
            hom_b.order(),
            "|IA| vs |Hom(G/G', G')| on {}",
            g.name()
        );
        assert_eq!(
            Some(BigUint::from(ia_star.order())),
            hom_a.order(),
            "|IA*| vs |Hom(G/Z, G')| on {}",
            g.name()
        );
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(checked >= 35, "only {checked} corpus groups of class <= 2");
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}, budget is 2min");
    println!(
        "criterion 2: PASS - automorphism counts match hom orders on {checked} groups in {elapsed:?}"
    );
}

#[test]
fn criterion_03_twist_and_search_enumerations_agree() {
    let mut checked = 0usize;
    for g in &default_corpus() {
        if g.order() > 128 || !class_at_most_two(g) {
            continue;
        }
        let twists = autos::ia_class2(g).expect(g.name());
        let searched = autos::ia_bruteforce(g).expect(g.name());
        assert!(
            twists.set_equal(&searched),
            "IA enumerations disagree on {}",
            g.name()
        );
        checked += 1;
    }
    assert!(checked >= 30, "only {checked} corpus groups in range");
    println!("criterion 3: PASS - twist and search enumerations agree on {checked} groups");
}

#[test]
fn criterion_04_collapse_criterion_matches_enumeration() {
    let corpus = default_corpus();
    let mut checked = 0usize;
    for g in &corpus {
        if !class_at_most_two(g) {
            continue;
        }
        let verdict = classify_ia_inner_finite(g).expect(g.name());
        // Recompute the enumeration side here rather than trusting the
        // verdict's own record of it.
        let collapsed = autos::ia(g).expect(g.name()).set_equal(&autos::inner(g));
        assert_eq!(
            verdict.direct_check_holds,
            collapsed,
            "the verdict's enumeration drifted on {}",
            g.name()
        );
        assert_eq!(
            verdict.predicate_holds,
            collapsed,
            "criterion vs enumeration on {}",
            g.name()
        );
        assert!(verdict.consistent, "inconsistent verdict on {}", g.name());
        checked += 1;
    }

    let q8c4 = by_name(&corpus, "Q8 x C4");
    let verdict = classify_ia_inner_finite(q8c4).unwrap();
    assert!(!verdict.predicate_holds, "Q8 x C4 must fail the criterion");
    assert_eq!(autos::ia(q8c4).unwrap().order(), 8);
    assert_eq!(autos::inner(q8c4).order(), 4);

    for name in ["D8", "Q8", "H(2,1)", "H(3,1)", "H(5,1)"] {
        let g = by_name(&corpus, name);
        assert!(
            classify_ia_inner_finite(g).unwrap().predicate_holds,
            "{name} must satisfy the criterion"
        );
        assert!(
            autos::ia(g).unwrap().set_equal(&autos::inner(g)),
            "IA != Inn on {name}"
        );
    }
    println!(
        "criterion 4: PASS - zero inconsistencies on {checked} groups; \
         Q8 x C4 fails with |IA| = 8 > 4 = |Inn|, D8/Q8/Heisenberg collapse"
    );
}

#[test]
fn criterion_05_center_fixing_collapse_iff_cyclic_derived() {
    let corpus = default_corpus();
    let mut checked = 0usize;
    for g in &corpus {
        if !class_at_most_two(g) {
            continue;
        }
        let triple = structure_triple(g).expect(g.name());
        let star = autos::ia_star(g).expect(g.name());
        let inn = autos::inner(g);
        // Both groups are abelian at class <= 2, so invariant factors
        // decide the isomorphism.
        let star_type = star
            .structure()
            .unwrap_or_else(|| panic!("IA* of {} should be abelian", g.name()));
        let inn_type = inn
            .structure()
            .unwrap_or_else(|| panic!("Inn of {} should be abelian", g.name()));
        let same = star_type.invariant_factors() == inn_type.invariant_factors();
        assert_eq!(
            triple.derived.is_cyclic(),
            same,
            "{}: G' = {}, IA* = {star_type}, Inn = {inn_type}",
            g.name(),
            triple.derived
        );
        checked += 1;
    }

    let dd = by_name(&corpus, "D8 x D8");
    let triple = structure_triple(dd).unwrap();
    assert_eq!(
        triple.derived,
        FgAbelian::from_cyclic_factors(&[2, 2], 0).unwrap(),
        "D8 x D8 has derived group C_2 x C_2"
    );
    assert_eq!(autos::ia_star(dd).unwrap().order(), 256);
    assert_eq!(autos::inner(dd).order(), 16);
    println!(
        "criterion 5: PASS - IA* matches Inn exactly when G' is cyclic on {checked} groups; \
         D8 x D8 separates them (256 vs 16)"
    );
}

#[test]
fn criterion_06_two_generated_groups_collapse() {
    let mut checked = 0usize;
    for g in &default_corpus() {
        if !class_at_most_two(g) || min_generators(g).expect(g.name()) > 2 {
            continue;
        }
        assert!(
            autos::ia(g).expect(g.name()).set_equal(&autos::inner(g)),
            "IA != Inn on the two-generated group {}",
            g.name()
        );
        checked += 1;
    }
    assert!(checked >= 15, "only {checked} corpus groups in range");
    println!("criterion 6: PASS - IA = Inn as sets on {checked} groups needing at most two generators");
}

#[test]
fn criterion_07_center_index_chain_with_tight_cases() {
    let corpus = default_corpus();
    let mut tight = BTreeSet::new();
    for g in &corpus {
        let report = schur_report(g, 20, 0).expect(g.name());
        assert!(report.chain_holds, "chain broke on {}", g.name());
        assert!(
            report.tuples_exhaustive || report.tuples.len() >= 20,
            "undersampled tuples on {}",
            g.name()
        );
        assert!(!report.tuples.is_empty(), "no tuples on {}", g.name());
        for t in &report.tuples {
            assert!(
                t.meets_lower_bound && t.within_commutator_bound,
                "tuple {:?} breaks the chain on {}",
                t.representatives,
                g.name()
            );
        }
        assert!(
            report.violation.is_none(),
            "{}: {:?}",
            g.name(),
            report.violation
        );
        if report.equality_derived {
            // Tightness forces both collapse consequences; `violation`
            // above already guards them, but check explicitly.
            assert!(
                report.derived_equals_commutator_set,
                "tightness must force K(G) = G' on {}",
                g.name()
            );
            assert_eq!(
                report.inner_class_preserving_ia_star_equal,
                Some(true),
                "tightness must collapse Inn = Aut_c = IA* on {}",
                g.name()
            );
            if !g.is_abelian() {
                tight.insert(g.name().to_string());
            }
        }
    }

    let q8 = schur_report(by_name(&corpus, "Q8"), 20, 0).unwrap();
    assert_eq!(
        (q8.central_quotient_order, q8.derived_order, q8.d),
        (4, 2, 2)
    );
    assert!(q8.equality_derived);
    assert!(q8.tuples.iter().all(|t| t.product == BigUint::from(4u32)));

    let s32 = schur_report(by_name(&corpus, "Sharp32"), 20, 0).unwrap();
    assert_eq!(
        (s32.central_quotient_order, s32.derived_order, s32.d),
        (16, 4, 2)
    );
    assert!(s32.equality_derived, "16 = 4^2 is the tight case");

    assert!(tight.contains("Q8") && tight.contains("Sharp32"));
    let names: Vec<&str> = tight.iter().map(String::as_str).collect();
    println!(
        "criterion 7: PASS - chain holds on all {} groups; tight nonabelian cases: {}",
        corpus.len(),
        names.join(", ")
    );
}

#[test]
fn criterion_08_power_form_and_coclass_two_orders() {
    let corpus = default_corpus();
    let mut checked = 0usize;
    for g in &corpus {
        if !class_at_most_two(g) {
            continue;
        }
        assert!(
            check_homocyclic_power(g).expect(g.name()),
            "power-form routes disagree on {}",
            g.name()
        );
        checked += 1;
    }

    let mut passes = BTreeSet::new();
    for g in &corpus {
        match check_coclass_orders(g) {
            CheckOutcome::Pass => {
                passes.insert(g.name().to_string());
            }
            CheckOutcome::Fail(detail) => panic!("{}: {detail}", g.name()),
            CheckOutcome::NotApplicable(_) => {}
        }
    }
    let expected: BTreeSet<String> = ["D8 x C2", "H(3,1) x C3", "Q8 x C2", "Sharp32"]
        .into_iter()
        .map(String::from)
        .collect();
    assert_eq!(
        passes, expected,
        "the corpus members at co-class 2 with a tight chain"
    );
    println!(
        "criterion 8: PASS - power-form biconditional on {checked} groups; \
         tight co-class-2 members all land on order p^4 or p^5"
    );
}

// ---------------------------------------------------------------------------
// Criterion 9: the symbolic hom computation against brute force, exhaustively
// over all isomorphism types of abelian groups of order at most 64.

/// Descending partitions of `e`.
fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for next in (1..=rest.min(max)).rev() {
            prefix.push(next);
            go(rest - next, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(e, e, &mut Vec::new(), &mut out);
    out
}

/// Primary factor lists for every abelian group of order `1..=max`, one
/// per isomorphism type: a partition choice at each prime of the order.
fn all_types_up_to(max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for n in 1..=max {
        let mut combos: Vec<Vec<u64>> = vec![Vec::new()];
        for (p, e) in factorize(n) {
            let mut next = Vec::new();
            for combo in &combos {
                for parts in partitions(e) {
                    let mut c = combo.clone();
                    c.extend(parts.iter().map(|&j| p.pow(j)));
                    next.push(c);
                }
            }
            combos = next;
        }
        out.extend(combos);
    }
    out
}

/// One isomorphism type, materialized: the canonical descriptor, a concrete
/// multiplication table for it, and the order of every table element.
struct TypeData {
    factors: Vec<u64>,
    desc: FgAbelian,
    group: GroupRef,
    element_orders: Vec<u64>,
}

impl TypeData {
    fn build(factors: &[u64]) -> TypeData {
        let desc = FgAbelian::from_cyclic_factors(factors, 0).unwrap();
        // The presentation's generators come out in this exact order.
        let factors = desc.primary_factor_orders();
        let pres = abelian_presentation(&desc).unwrap();
        let group = FiniteGroup::build(&pres, &BuildOptions::default()).unwrap();
        let element_orders = group.elements().map(|x| group.element_order(x)).collect();
        TypeData { factors, desc, group, element_orders }
    }
}

/// Exact base-`p` logarithm; fails loudly if `n` is not a power of `p`.
fn log_exact(p: u64, n: &BigUint) -> u32 {
    let p = BigUint::from(p);
    let one = BigUint::from(1u32);
    let mut n = n.clone();
    let mut e = 0u32;
    while n > one {
        let (q, r) = n.div_rem(&p);
        assert!(r.is_zero(), "count {n} is not a power of {p}");
        n = q;
        e += 1;
    }
    e
}

/// `#{v in V : v^q = 1}` read off the concrete element orders of `V`.
fn kill_count(v_orders: &[u64], q: u64) -> u64 {
    v_orders.iter().filter(|&&o| q % o == 0).count() as u64
}

/// The counting oracle. A homomorphism out of a direct sum of cyclic
/// groups `C_{q_1} x ... x C_{q_k}` is exactly a choice of one image per
/// summand killed by its order, so the hom set is the product of the
/// sets `V[q_i] = {v : v^{q_i} = 1}` under componentwise multiplication.
/// For each probe `m`, the number of tuples killed by `m` is the product
/// of concrete counts `#{v : v^{gcd(m, q_i)} = 1}`; at prime-power probes
/// the successive logarithms give the conjugate partition of the type,
/// which pins it completely.
fn type_from_counts(u_factors: &[u64], v_orders: &[u64]) -> FgAbelian {
    let count = |m: u64| -> BigUint {
        u_factors
            .iter()
            .map(|&q| BigUint::from(kill_count(v_orders, m.gcd(&q))))
            .fold(BigUint::from(1u32), |acc, c| acc * c)
    };
    let total = u_factors
        .iter()
        .map(|&q| BigUint::from(kill_count(v_orders, q)))
        .fold(BigUint::from(1u32), |acc, c| acc * c);

    let mut primes = BTreeSet::new();
    for &q in u_factors {
        for (p, _) in factorize(kill_count(v_orders, q)) {
            primes.insert(p);
        }
    }

    let mut parts: Vec<u64> = Vec::new();
    for &p in &primes {
        // counts_ge[j - 1] = number of cyclic factors of order >= p^j
        let mut counts_ge: Vec<u32> = Vec::new();
        let mut prev = 0u32;
        for j in 1.. {
            let n = log_exact(p, &count(p.pow(j)));
            if n == prev {
                break;
            }
            counts_ge.push(n - prev);
            prev = n;
        }
        for j in 1..=counts_ge.len() {
            let here = counts_ge[j - 1];
            let next = if j < counts_ge.len() { counts_ge[j] } else { 0 };
            let exact = here
                .checked_sub(next)
                .expect("order-dividing counts of a group decrease in steps");
            parts.extend(std::iter::repeat(p.pow(j as u32)).take(exact as usize));
        }
    }
    let desc = FgAbelian::from_cyclic_factors(&parts, 0).unwrap();
    assert_eq!(
        desc.order(),
        Some(total),
        "reconstruction must account for the whole tuple set"
    );
    desc
}

/// All coordinate vectors with `0 <= a_i < radii[i]`.
fn odometer(radii: &[u64]) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new()];
    for &r in radii {
        let mut next = Vec::with_capacity(out.len() * r as usize);
        for prefix in &out {
            for a in 0..r {
                let mut c = prefix.clone();
                c.push(a);
                next.push(c);
            }
        }
        out = next;
    }
    out
}

/// The literal route: try *every* map determined by generator images,
/// keep the ones that respect every single product in `U`, and confirm
/// that the survivors are exactly the tuples killed by the factor orders
/// and that their number matches the claimed hom order.
fn literal_check(u: &TypeData, v: &TypeData, claimed: &FgAbelian) {
    let ug = &u.group;
    let vg = &v.group;
    let id = vg.identity();

    let gens = ug.generators().to_vec();
    assert_eq!(gens.len(), u.factors.len());
    for (i, &g) in gens.iter().enumerate() {
        assert_eq!(ug.element_order(g), u.factors[i]);
    }

    // Coordinates really enumerate U: each vector hits a fresh element.
    let coords = odometer(&u.factors);
    let mut elem_of = Vec::with_capacity(coords.len());
    let mut seen = vec![false; ug.order()];
    for a in &coords {
        let mut x = ug.identity();
        for (i, &ai) in a.iter().enumerate() {
            x = ug.mul(x, ug.power(gens[i], ai as i64));
        }
        assert!(!seen[x as usize], "coordinate collision in {}", u.desc);
        seen[x as usize] = true;
        elem_of.push(x);
    }
    assert_eq!(coords.len(), ug.order());

    let image_tuples = odometer(&vec![vg.order() as u64; u.factors.len()]);
    let mut survivors: BTreeSet<Vec<u64>> = BTreeSet::new();
    for w in &image_tuples {
        let mut table = vec![0u32; ug.order()];
        for (a, &x) in coords.iter().zip(&elem_of) {
            let mut y = id;
            for (i, &ai) in a.iter().enumerate() {
                y = vg.mul(y, vg.power(w[i] as u32, ai as i64));
            }
            table[x as usize] = y;
        }
        let respects = (0..ug.order() as u32).all(|x| {
            (0..ug.order() as u32).all(|y| {
                table[ug.mul(x, y) as usize] == vg.mul(table[x as usize], table[y as usize])
            })
        });
        if respects {
            survivors.insert(w.clone());
        }
    }

    let constrained: BTreeSet<Vec<u64>> = image_tuples
        .iter()
        .filter(|w| {
            w.iter()
                .zip(&u.factors)
                .all(|(&wi, &q)| vg.power(wi as u32, q as i64) == id)
        })
        .cloned()
        .collect();
    assert_eq!(
        survivors, constrained,
        "Hom({}, {}): surviving image tuples",
        u.desc, v.desc
    );
    assert_eq!(
        Some(BigUint::from(survivors.len())),
        claimed.order(),
        "Hom({}, {}) order",
        u.desc,
        v.desc
    );
}

#[test]
fn criterion_09_hom_structure_vs_bruteforce() {
    let start = Instant::now();
    let types = all_types_up_to(64);
    assert_eq!(
        types.len(),
        117,
        "isomorphism types of abelian groups of order <= 64"
    );
    let data: Vec<TypeData> = types.iter().map(|t| TypeData::build(t)).collect();
    let distinct: BTreeSet<String> = data.iter().map(|t| t.desc.to_string()).collect();
    assert_eq!(distinct.len(), data.len(), "types must be pairwise distinct");

    let mut literal_pairs = 0usize;
    for u in &data {
        for v in &data {
            let claimed = u.desc.hom_structure(&v.desc);
            let oracle = type_from_counts(&u.factors, &v.element_orders);
            assert!(
                claimed.is_isomorphic(&oracle),
                "Hom({}, {}): claimed {claimed}, oracle {oracle}",
                u.desc,
                v.desc
            );
            assert_eq!(
                claimed.invariant_factors(),
                oracle.invariant_factors(),
                "Hom({}, {}) invariant factors",
                u.desc,
                v.desc
            );

            let tuple_space = (v.group.order() as u128).pow(u.factors.len() as u32);
            let work = tuple_space.saturating_mul((u.group.order() as u128).pow(2));
            if tuple_space <= 4096 && work <= 1 << 22 {
                literal_check(u, v, &claimed);
                literal_pairs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(literal_pairs >= 1000, "only {literal_pairs} literal pairs");
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}, budget is 2min");
    println!(
        "criterion 9: PASS - {n} x {n} pairs against the counting oracle, \
         {literal_pairs} of them against literal enumeration, in {elapsed:?}",
        n = data.len()
    );
}

#[test]
fn criterion_10_exponents_of_central_quotient_and_derived_match() {
    let mut checked = 0usize;
    for g in &default_corpus() {
        if !class_at_most_two(g) {
            continue;
        }
        assert!(
            check_exponent_match(g).expect(g.name()),
            "symbolic exponent comparison failed on {}",
            g.name()
        );
        // Same fact read off the concrete tables.
        let z = center(g);
        let q = quotient(g, &z).expect(g.name());
        let (derived_group, _) = derived_subgroup(g).as_group("derived");
        assert_eq!(
            exponent(&q.group),
            exponent(&derived_group),
            "exp(G/Z) vs exp(G') on {}",
            g.name()
        );
        checked += 1;
    }
    println!(
        "criterion 10: PASS - exponents of G/Z and G' agree on {checked} groups, \
         symbolically and on the tables"
    );
}
