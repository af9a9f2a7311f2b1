//! Stock presentations: cyclic and abelian groups, dihedral and generalized
//! quaternion 2-groups, extraspecial groups, Heisenberg groups over
//! `Z/p^k`, and the order-32 group that attains the Schur-converse bound
//! with a non-cyclic derived subgroup.

use crate::abelian::{is_prime, FgAbelian};

use super::presentation::{PcError, PcPresentation};

/// Cyclic group of order `n >= 1` (a single generator, or none for `n = 1`).
pub fn cyclic(n: u64) -> Result<PcPresentation, PcError> {
    if n == 0 {
        return Err(PcError::BadRelativeOrder { gen: "a".into(), order: 0 });
    }
    if n == 1 {
        return PcPresentation::new("C1", &[], &[]);
    }
    PcPresentation::new(&format!("C{n}"), &["a"], &[n])
}

/// Finite abelian group from a descriptor: one generator per primary cyclic
/// factor, all commuting.
pub fn abelian(desc: &FgAbelian) -> Result<PcPresentation, PcError> {
    if !desc.is_finite() {
        return Err(PcError::BadGenerators(
            "only finite abelian groups can be materialized".into(),
        ));
    }
    let orders = desc.primary_factor_orders();
    if orders.is_empty() {
        return PcPresentation::new("C1", &[], &[]);
    }
    let names: Vec<String> = (1..=orders.len()).map(|i| format!("a{i}")).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    PcPresentation::new(&desc.to_string(), &name_refs, &orders)
}

/// Dihedral group of order `2m` (`order >= 4`, even): a reflection `s` and a
/// rotation `r` with `s^-1 r s = r^-1`.
pub fn dihedral(order: u64) -> Result<PcPresentation, PcError> {
    if order < 4 || order % 2 != 0 {
        return Err(PcError::BadGenerators(format!(
            "dihedral groups here have even order >= 4, got {order}"
        )));
    }
    let m = order / 2;
    let mut p = PcPresentation::new(&format!("D{order}"), &["s", "r"], &[2, m])?;
    p.set_conjugate(0, 1, vec![0, m - 1])?;
    Ok(p)
}

/// Generalized quaternion group of order `2^t`, `t >= 3`:
/// `x^2 = y^{2^{t-2}}`, `x^-1 y x = y^-1`.
pub fn quaternion(order: u64) -> Result<PcPresentation, PcError> {
    if order < 8 || !order.is_power_of_two() {
        return Err(PcError::BadGenerators(format!(
            "generalized quaternion groups have 2-power order >= 8, got {order}"
        )));
    }
    let half = order / 2;
    let mut p = PcPresentation::new(&format!("Q{order}"), &["x", "y"], &[2, half])?;
    p.set_power(0, vec![0, half / 2])?;
    p.set_conjugate(0, 1, vec![0, half - 1])?;
    Ok(p)
}

/// The two isomorphism types of extraspecial groups of a given order.
///
/// For odd `p`, `Plus` is the exponent-`p` type and `Minus` the
/// exponent-`p^2` type. For `p = 2`, `Plus` is the central product of
/// dihedral factors and `Minus` replaces one factor by a quaternion group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtraspecialKind {
    Plus,
    Minus,
}

/// Extraspecial group of order `p^{1+2m}`: pairs `x_t, y_t` with
/// `[y_t, x_t] = z` and `z` central of order `p`.
pub fn extraspecial(p: u64, order: u64, kind: ExtraspecialKind) -> Result<PcPresentation, PcError> {
    if !is_prime(p) {
        return Err(PcError::BadGenerators(format!("{p} is not prime")));
    }
    // order = p^(1+2m)
    let mut m = 0u32;
    let mut rest = order;
    while rest % (p * p) == 0 {
        rest /= p * p;
        m += 1;
    }
    if rest != p || m == 0 {
        return Err(PcError::BadGenerators(format!(
            "extraspecial order must be an odd power p^(1+2m) >= p^3, got {order}"
        )));
    }
    let m = m as usize;
    let mut names: Vec<String> = Vec::new();
    for t in 1..=m {
        names.push(format!("x{t}"));
        names.push(format!("y{t}"));
    }
    names.push("z".to_string());
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let orders = vec![p; 2 * m + 1];
    let sign = match kind {
        ExtraspecialKind::Plus => "+",
        ExtraspecialKind::Minus => "-",
    };
    let mut pres = PcPresentation::new(&format!("E{order}{sign}"), &name_refs, &orders)?;
    let k = 2 * m + 1;
    let z = k - 1;
    for t in 0..m {
        let (xi, yi) = (2 * t, 2 * t + 1);
        let mut tail = vec![0u64; k];
        tail[yi] = 1;
        tail[z] = 1;
        pres.set_conjugate(xi, yi, tail)?;
    }
    if kind == ExtraspecialKind::Minus {
        // Turn the first pair into the quaternion-like factor: for odd p
        // one generator of order p^2 suffices; for p = 2 both squares hit z.
        let mut tail = vec![0u64; k];
        tail[z] = 1;
        pres.set_power(0, tail.clone())?;
        if p == 2 {
            pres.set_power(1, tail)?;
        }
    }
    Ok(pres)
}

/// Heisenberg group over `Z/p^k`: upper unitriangular 3x3 matrices, with
/// `x = I+e12`, `y = I+e23`, `z = I+e13 = [x, y]` and `x^-1 y x = y z^-1`.
pub fn heisenberg(p: u64, k: u32) -> Result<PcPresentation, PcError> {
    if !is_prime(p) || k == 0 {
        return Err(PcError::BadGenerators(format!(
            "heisenberg needs a prime and a positive exponent, got ({p}, {k})"
        )));
    }
    let q = p.pow(k);
    let mut pres =
        PcPresentation::new(&format!("H({p},{k})"), &["x", "y", "z"], &[q, q, q])?;
    pres.set_conjugate(0, 1, vec![0, 1, q - 1])?;
    Ok(pres)
}

/// The order-32 group of class 3 with `|G/Z| = |G'|^2` and elementary
/// abelian derived subgroup: `x^2 = y^4`, `x^-1 y x = y*u`,
/// `y^-1 u y = y^4*u`, `u` of order 2 commuting with `x`.
pub fn schur_sharp_32() -> PcPresentation {
    let mut p = PcPresentation::new("Sharp32", &["x", "y", "u"], &[2, 8, 2])
        .expect("static presentation");
    p.set_power(0, vec![0, 4, 0]).expect("x^2 = y^4");
    p.set_conjugate(0, 1, vec![0, 1, 1]).expect("x^-1 y x = y*u");
    p.set_conjugate(1, 2, vec![0, 4, 1]).expect("y^-1 u y = y^4*u");
    p
}
