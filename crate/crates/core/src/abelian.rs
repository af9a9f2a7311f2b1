//! Symbolic finitely generated abelian groups.
//!
//! A group is stored in primary decomposition: a free rank together with a
//! map `prime -> exponent list`, so `{2: [2, 1], 3: [1]}` with free rank 0
//! is `C_4 x C_2 x C_3`. The primary form is canonical, which makes
//! isomorphism a structural equality and keeps Hom computations exact.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

/// Errors raised by descriptor construction and parsing.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("cyclic factor {0} is smaller than 2")]
    FactorTooSmall(u64),
    #[error("factors {0} and {1} do not form a divisor chain")]
    NotDivisorChain(u64, u64),
    #[error("invalid descriptor: {0}")]
    Parse(String),
}

/// A finitely generated abelian group `T x Z^free_rank` with torsion part `T`
/// held as a primary decomposition.
///
/// Invariants kept by every constructor: primes are actual primes in
/// increasing map order, exponent lists are non-empty and non-increasing,
/// and every exponent is at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgAbelian {
    free_rank: usize,
    primary: BTreeMap<u64, Vec<u32>>,
}

impl FgAbelian {
    /// The trivial group.
    pub fn trivial() -> Self {
        FgAbelian { free_rank: 0, primary: BTreeMap::new() }
    }

    /// Free abelian group `Z^rank`.
    pub fn free(rank: usize) -> Self {
        FgAbelian { free_rank: rank, primary: BTreeMap::new() }
    }

    /// Cyclic group of order `n` (`n = 1` gives the trivial group).
    pub fn cyclic(n: u64) -> Result<Self, AbelianError> {
        if n == 0 {
            return Err(AbelianError::FactorTooSmall(0));
        }
        Self::from_cyclic_factors(&[n], 0)
    }

    /// Cyclic group of prime-power order `p^e`.
    pub fn primary_cyclic(p: u64, e: u32) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        assert!(e >= 1);
        let mut primary = BTreeMap::new();
        primary.insert(p, vec![e]);
        FgAbelian { free_rank: 0, primary }
    }

    /// Builds a group from its primary data. Exponent lists are sorted into
    /// non-increasing order; zero exponents and non-prime keys are rejected.
    pub fn from_primary(
        primary: BTreeMap<u64, Vec<u32>>,
        free_rank: usize,
    ) -> Result<Self, AbelianError> {
        let mut clean = BTreeMap::new();
        for (p, exps) in primary {
            if !is_prime(p) {
                return Err(AbelianError::Parse(format!("{p} is not prime")));
            }
            if exps.iter().any(|&e| e == 0) {
                return Err(AbelianError::Parse(format!(
                    "zero exponent in primary part at {p}"
                )));
            }
            if exps.is_empty() {
                continue;
            }
            let mut exps = exps;
            exps.sort_unstable_by(|a, b| b.cmp(a));
            clean.insert(p, exps);
        }
        Ok(FgAbelian { free_rank, primary: clean })
    }

    /// Builds a group from an arbitrary list of cyclic factor orders
    /// (each at least 1; factors equal to 1 contribute nothing).
    pub fn from_cyclic_factors(factors: &[u64], free_rank: usize) -> Result<Self, AbelianError> {
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in factors {
            if n == 0 {
                return Err(AbelianError::FactorTooSmall(0));
            }
            for (p, e) in factorize(n) {
                primary.entry(p).or_default().push(e);
            }
        }
        for exps in primary.values_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(FgAbelian { free_rank, primary })
    }

    /// Builds a group from invariant factors, which must form a divisor
    /// chain `d_1 | d_2 | ...` with every `d_i >= 2`.
    pub fn from_invariant_factors(factors: &[u64], free_rank: usize) -> Result<Self, AbelianError> {
        for &d in factors {
            if d < 2 {
                return Err(AbelianError::FactorTooSmall(d));
            }
        }
        for w in factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(AbelianError::NotDivisorChain(w[0], w[1]));
            }
        }
        Self::from_cyclic_factors(factors, free_rank)
    }

    /// Invariant factors in ascending divisor-chain order, plus the free rank.
    pub fn invariant_factors(&self) -> (Vec<BigUint>, usize) {
        let depth = self.torsion_rank();
        let mut factors = vec![BigUint::one(); depth];
        // Slot 0 collects the largest prime power of every prime, so the
        // resulting chain is descending; reverse at the end.
        for (&p, exps) in &self.primary {
            for (j, &e) in exps.iter().enumerate() {
                factors[j] *= BigUint::from(p).pow(e);
            }
        }
        factors.reverse();
        (factors, self.free_rank)
    }

    /// `|G|` for finite groups, `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigUint> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion_order())
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigUint {
        let mut o = BigUint::one();
        for (&p, exps) in &self.primary {
            for &e in exps {
                o *= BigUint::from(p).pow(e);
            }
        }
        o
    }

    /// Exponent of the torsion subgroup (1 for torsion-free groups).
    pub fn torsion_exponent(&self) -> BigUint {
        let mut e = BigUint::one();
        for (&p, exps) in &self.primary {
            e *= BigUint::from(p).pow(exps[0]);
        }
        e
    }

    /// The torsion subgroup as its own descriptor.
    pub fn torsion(&self) -> FgAbelian {
        FgAbelian { free_rank: 0, primary: self.primary.clone() }
    }

    /// Minimal number of generators `d(T) + free_rank`.
    pub fn rank(&self) -> usize {
        self.torsion_rank() + self.free_rank
    }

    /// Minimal number of generators of the torsion subgroup: the length of
    /// the longest primary exponent list (= number of invariant factors).
    pub fn torsion_rank(&self) -> usize {
        self.primary.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.primary.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_torsion_free(&self) -> bool {
        self.primary.is_empty()
    }

    /// Cyclic means generated by one element: `Z`, a finite cyclic group,
    /// or the trivial group.
    pub fn is_cyclic(&self) -> bool {
        self.rank() <= 1
    }

    /// Primes dividing the torsion order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primary.keys().copied()
    }

    /// Exponents of the `p`-primary part, non-increasing (empty if `p` does
    /// not divide the torsion order).
    pub fn primary_part(&self, p: u64) -> &[u32] {
        self.primary.get(&p).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Whether the `p`-primary part is a power of one cyclic group
    /// (vacuously true when `p` does not occur).
    pub fn is_homocyclic_at(&self, p: u64) -> bool {
        self.primary_part(p).windows(2).all(|w| w[0] == w[1])
    }

    /// Whether the whole group is a power of a single cyclic group. Finite
    /// groups qualify iff all invariant factors coincide; free groups
    /// qualify as powers of `Z`; genuinely mixed groups never do.
    pub fn is_homocyclic(&self) -> bool {
        if self.is_trivial() || self.is_torsion_free() {
            return true;
        }
        if self.free_rank > 0 {
            return false;
        }
        let depth = self.torsion_rank();
        self.primary.values().all(|exps| {
            exps.len() == depth && exps.windows(2).all(|w| w[0] == w[1])
        })
    }

    /// Direct product of two groups.
    pub fn direct_product(&self, other: &FgAbelian) -> FgAbelian {
        let mut primary = self.primary.clone();
        for (&p, exps) in &other.primary {
            let entry = primary.entry(p).or_default();
            entry.extend_from_slice(exps);
            entry.sort_unstable_by(|a, b| b.cmp(a));
        }
        FgAbelian { free_rank: self.free_rank + other.free_rank, primary }
    }

    /// `k`-fold direct power.
    pub fn power(&self, k: usize) -> FgAbelian {
        if k == 0 {
            return FgAbelian::trivial();
        }
        let mut primary = BTreeMap::new();
        for (&p, exps) in &self.primary {
            let mut reps: Vec<u32> = Vec::with_capacity(exps.len() * k);
            for &e in exps {
                reps.extend(std::iter::repeat(e).take(k));
            }
            reps.sort_unstable_by(|a, b| b.cmp(a));
            primary.insert(p, reps);
        }
        FgAbelian { free_rank: self.free_rank * k, primary }
    }

    /// The group `Hom(self, other)` of homomorphisms under pointwise
    /// multiplication.
    ///
    /// Pieces: `Hom(C_{p^a}, C_{p^b}) = C_{p^min(a,b)}` pairwise on shared
    /// primes, `Hom(Z, V) = V`, and homs from torsion into a free group are
    /// trivial, so the result is
    /// `Hom(T(U), T(V)) x T(V)^rho(U) x Z^(rho(U) rho(V))`.
    pub fn hom_structure(&self, other: &FgAbelian) -> FgAbelian {
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for (&p, u_exps) in &self.primary {
            if let Some(v_exps) = other.primary.get(&p) {
                let entry = primary.entry(p).or_default();
                for &a in u_exps {
                    for &b in v_exps {
                        entry.push(a.min(b));
                    }
                }
            }
        }
        // Each free generator of `self` maps anywhere in `other`.
        if self.free_rank > 0 {
            for (&p, v_exps) in &other.primary {
                let entry = primary.entry(p).or_default();
                for &b in v_exps {
                    entry.extend(std::iter::repeat(b).take(self.free_rank));
                }
            }
        }
        for exps in primary.values_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
        }
        FgAbelian { free_rank: self.free_rank * other.free_rank, primary }
    }

    /// Isomorphism test; the primary form is canonical, so this is equality.
    pub fn is_isomorphic(&self, other: &FgAbelian) -> bool {
        self == other
    }

    /// Cyclic factor orders grouped by prime, largest first — handy for
    /// picking concrete generators: `C_4 x C_2 x C_3` gives `[4, 2, 3]`.
    pub fn primary_factor_orders(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (&p, exps) in &self.primary {
            for &e in exps {
                out.push(p.pow(e));
            }
        }
        out
    }
}

impl fmt::Display for FgAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        let (factors, _) = self.invariant_factors();
        for d in factors {
            parts.push(format!("C_{d}"));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

impl FromStr for FgAbelian {
    type Err = AbelianError;

    /// Parses descriptors like `Z^1 x C_4 x C_2`, `C_{12}`, or `1`.
    /// Whitespace is ignored and factors may appear in any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(AbelianError::Parse("empty descriptor".into()));
        }
        let mut free_rank = 0usize;
        let mut factors: Vec<u64> = Vec::new();
        for token in compact.split(['x', 'X']) {
            if token == "1" {
                continue;
            }
            if let Some(rest) = token.strip_prefix(['Z', 'z']) {
                if rest.is_empty() {
                    free_rank += 1;
                } else if let Some(exp) = rest.strip_prefix('^') {
                    let k: usize = exp.parse().map_err(|_| {
                        AbelianError::Parse(format!("bad free rank in `{token}`"))
                    })?;
                    free_rank += k;
                }  else {
                    return Err(AbelianError::Parse(format!("bad factor `{token}`")));
                }
            } else if let Some(rest) = token.strip_prefix(['C', 'c']) {
                let body = rest
                    .strip_prefix('_')
                    .unwrap_or(rest)
                    .trim_start_matches('{')
                    .trim_end_matches('}');
                let n: u64 = body.parse().map_err(|_| {
                    AbelianError::Parse(format!("bad cyclic order in `{token}`"))
                })?;
                if n == 0 {
                    return Err(AbelianError::FactorTooSmall(0));
                }
                factors.push(n);
            } else {
                return Err(AbelianError::Parse(format!("bad factor `{token}`")));
            }
        }
        FgAbelian::from_cyclic_factors(&factors, free_rank)
    }
}

impl serde::Serialize for FgAbelian {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for FgAbelian {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Deterministic trial-division primality check, good for desk-scale moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|sq| sq <= n).unwrap_or(false) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization `n = p1^e1 * p2^e2 * ...` with ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "cannot factorize 0");
    let mut out = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e2 = 0;
    while n % 2 == 0 {
        n /= 2;
        e2 += 1;
    }
    push(2, e2);
    let mut p = 3u64;
    while p.checked_mul(p).map(|sq| sq <= n).unwrap_or(false) {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        push(p, e);
        p += 2;
    }
    if n > 1 {
        push(n, 1);
    }
    out
}
