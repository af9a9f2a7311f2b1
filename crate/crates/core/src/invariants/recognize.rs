//! Recognition of abelian structure, minimal generator counts, and
//! sampling of minimal generating tuples.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{factorize, FgAbelian};
use crate::pcgroup::{closure_size, GroupRef};

use super::quotient::quotient;
use super::series::{frattini_subgroup, p_group_prime};
use super::subgroup::{StructureError, Subgroup};

/// Exponent of a finite group: the lcm of all element orders.
pub fn exponent(group: &GroupRef) -> u64 {
    let mut e = 1u64;
    for g in 0..group.order() as u32 {
        e = num_integer::lcm(e, group.element_order(g));
    }
    e
}

fn commuting_witness(group: &GroupRef) -> Option<(u32, u32)> {
    let n = group.order() as u32;
    for a in 0..n {
        for b in (a + 1)..n {
            if group.mul(a, b) != group.mul(b, a) {
                return Some((a, b));
            }
        }
    }
    None
}

/// An independent generating sequence for an abelian group: elements
/// `b_1, ..., b_k` with orders `m_1, ..., m_k` such that the group is the
/// internal direct product of the cyclic subgroups they generate. Primes
/// appear in ascending order; within a prime, orders do not increase.
pub fn abelian_basis(group: &GroupRef) -> Result<Vec<(u32, u64)>, StructureError> {
    if let Some((a, b)) = commuting_witness(group) {
        return Err(StructureError::NotAbelian(a, b));
    }
    if group.order() == 1 {
        return Ok(Vec::new());
    }
    let mut basis = Vec::new();
    for (p, _) in factorize(group.order() as u64) {
        let p_elems: Vec<u32> = (0..group.order() as u32)
            .filter(|&g| {
                let mut o = group.element_order(g);
                while o % p == 0 {
                    o /= p;
                }
                o == 1
            })
            .collect();
        let sylow = Subgroup::from_elements(group, p_elems)?;
        let (syl_group, emb) = sylow.as_group(&format!("{}-part", p));
        for (idx, ord) in p_primary_basis(&syl_group)? {
            basis.push((emb[idx as usize], ord));
        }
    }
    // Counting plus generation is enough for independence: the product of
    // the orders equals the group order, so the induced surjection from the
    // abstract direct product is a bijection.
    let product: u128 = basis.iter().map(|&(_, o)| o as u128).product();
    let seeds: Vec<u32> = basis.iter().map(|&(b, _)| b).collect();
    if product != group.order() as u128 || closure_size(group, &seeds) != group.order() {
        return Err(StructureError::Other(
            "basis extraction produced a dependent set".into(),
        ));
    }
    Ok(basis)
}

/// Basis of an abelian p-group: split off a cyclic subgroup of maximal
/// order, recurse on the quotient, and lift each quotient generator to a
/// representative of the same order.
fn p_primary_basis(group: &GroupRef) -> Result<Vec<(u32, u64)>, StructureError> {
    if group.order() == 1 {
        return Ok(Vec::new());
    }
    let a = (0..group.order() as u32)
        .max_by_key(|&g| (group.element_order(g), std::cmp::Reverse(g)))
        .unwrap();
    let q = group.element_order(a);
    if q as usize == group.order() {
        return Ok(vec![(a, q)]);
    }
    let n = Subgroup::generated(group, &[a]);
    let quo = quotient(group, &n)?;
    let mut powers_of_a = vec![0u32; q as usize];
    for s in 1..q as usize {
        powers_of_a[s] = group.mul(powers_of_a[s - 1], a);
    }
    let mut out = vec![(a, q)];
    for (b_bar, m) in p_primary_basis(&quo.group)? {
        let b = quo.reps[b_bar as usize];
        // b^m lies in <a>, say b^m = a^s; the exponent of the group is q,
        // so m divides s and b * a^(-s/m) has order exactly m.
        let t = group.power(b, m as i64);
        let s = powers_of_a
            .iter()
            .position(|&x| x == t)
            .expect("power of the lifted element lands in the split-off cyclic subgroup")
            as u64;
        debug_assert_eq!(s % m, 0);
        let adjusted = group.mul(b, group.power(a, -((s / m) as i64)));
        debug_assert_eq!(group.element_order(adjusted), m);
        out.push((adjusted, m));
    }
    Ok(out)
}

/// Coordinates of every element of an abelian group over a basis from
/// [`abelian_basis`]: `coords[g][i]` is the exponent of the i-th basis
/// element. Returns `None` if the basis does not span the group.
pub fn abelian_coordinates(group: &GroupRef, basis: &[(u32, u64)]) -> Option<Vec<Vec<u64>>> {
    let r = basis.len();
    let mut coords = vec![Vec::new(); group.order()];
    let mut filled = vec![false; group.order()];
    let mut stack = vec![(group.identity(), vec![0u64; r], 0usize)];
    while let Some((elem, coord, depth)) = stack.pop() {
        if depth == r {
            if filled[elem as usize] {
                return None; // dependent basis: two products collide
            }
            coords[elem as usize] = coord;
            filled[elem as usize] = true;
            continue;
        }
        let (b, ord) = basis[depth];
        let mut cur = elem;
        for e in 0..ord {
            let mut c = coord.clone();
            c[depth] = e;
            stack.push((cur, c, depth + 1));
            cur = group.mul(cur, b);
        }
    }
    filled.iter().all(|&f| f).then_some(coords)
}

/// Isomorphism type of a finite abelian group, via [`abelian_basis`].
pub fn abelian_structure(group: &GroupRef) -> Result<FgAbelian, StructureError> {
    let basis = abelian_basis(group)?;
    let orders: Vec<u64> = basis.iter().map(|&(_, o)| o).collect();
    FgAbelian::from_cyclic_factors(&orders, 0)
        .map_err(|e| StructureError::Other(e.to_string()))
}

const TUPLE_BUDGET: u128 = 1_000_000;

/// Smallest number of generators. Abelian groups and p-groups are handled
/// structurally (invariant-factor count, Burnside basis); anything else
/// falls back to exhaustive search over small tuples.
pub fn min_generators(group: &GroupRef) -> Result<usize, StructureError> {
    let n = group.order();
    if n == 1 {
        return Ok(0);
    }
    if group.is_abelian() {
        return Ok(abelian_structure(group)?.rank());
    }
    if p_group_prime(group).is_some() {
        let phi = frattini_subgroup(group)?;
        let quo = quotient(group, &phi)?;
        return Ok(abelian_structure(&quo.group)?.rank());
    }
    for d in 1..=n.ilog2() as usize + 1 {
        let space = binomial(n as u128 - 1, d as u128);
        if space > TUPLE_BUDGET {
            return Err(StructureError::Budget(space, TUPLE_BUDGET));
        }
        let mut found = false;
        let mut combo: Vec<u32> = (1..=d as u32).collect();
        loop {
            if closure_size(group, &combo) == n {
                found = true;
                break;
            }
            if !next_combination(&mut combo, n as u32) {
                break;
            }
        }
        if found {
            return Ok(d);
        }
    }
    unreachable!("every finite group is generated by fewer than log2(order) + 1 elements")
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Advances a strictly increasing index vector over `1..max` (identity
/// excluded) to the next combination; returns false after the last one.
fn next_combination(combo: &mut [u32], max: u32) -> bool {
    let d = combo.len();
    let mut i = d;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        let cap = max - (d - 1 - i) as u32;
        if combo[i] + 1 < cap {
            combo[i] += 1;
            for j in i + 1..d {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
}

/// Minimal generating tuples, in canonical (strictly increasing) form.
///
/// Returns the tuples plus a completeness flag. When the search space is
/// small the combinations are enumerated in lexicographic order and the
/// flag says whether the enumeration finished before `limit` tuples were
/// collected; otherwise tuples are sampled with a seeded generator and the
/// flag is always false.
pub fn minimal_generating_tuples(
    group: &GroupRef,
    limit: usize,
    seed: u64,
) -> Result<(Vec<Vec<u32>>, bool), StructureError> {
    let d = min_generators(group)?;
    let n = group.order();
    if d == 0 {
        return Ok((vec![Vec::new()], true));
    }
    let space = binomial(n as u128 - 1, d as u128);
    if space <= TUPLE_BUDGET {
        let mut tuples = Vec::new();
        let mut combo: Vec<u32> = (1..=d as u32).collect();
        let mut complete = true;
        loop {
            if closure_size(group, &combo) == n {
                if tuples.len() == limit {
                    complete = false;
                    break;
                }
                tuples.push(combo.clone());
            }
            if !next_combination(&mut combo, n as u32) {
                break;
            }
        }
        Ok((tuples, complete))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = BTreeSet::new();
        let attempts = limit.saturating_mul(400).max(4000);
        for _ in 0..attempts {
            if seen.len() >= limit {
                break;
            }
            let mut tuple = BTreeSet::new();
            while tuple.len() < d {
                tuple.insert(rng.gen_range(1..n as u32));
            }
            let tuple: Vec<u32> = tuple.into_iter().collect();
            if closure_size(group, &tuple) == n {
                seen.insert(tuple);
            }
        }
        Ok((seen.into_iter().collect(), false))
    }
}
