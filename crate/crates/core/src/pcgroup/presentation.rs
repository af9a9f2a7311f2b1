//! Power-commutator presentations and the collection rewriting engine.
//!
//! A presentation lists generators `g_0 < g_1 < ... < g_{k-1}` with relative
//! orders `e_i >= 2`, power relations `g_i^{e_i} = w_i`, and conjugation
//! relations `g_i^{-1} g_j g_i = c_{ij}` for `i < j`. Omitted powers default
//! to the identity and omitted conjugations to commuting. Every group
//! element has a unique normal form `g_0^{a_0} ... g_{k-1}^{a_{k-1}}` with
//! `0 <= a_i < e_i`; `collect` rewrites an arbitrary word into that shape by
//! collection from the left.

use std::collections::BTreeMap;
use std::fmt;

/// Hard ceiling on rewrite steps in a single `collect` call. Well-formed
/// presentations never get near it; malformed relation tails trip it
/// instead of looping forever.
pub const COLLECT_BUDGET: usize = 1_000_000;

/// Errors from presentation construction, collection, and group building.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PcError {
    #[error("generator list is invalid: {0}")]
    BadGenerators(String),
    #[error("relative order of generator {gen} is {order}, must be at least 2")]
    BadRelativeOrder { gen: String, order: u64 },
    #[error("invalid relation: {0}")]
    BadRelation(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("collection exceeded {COLLECT_BUDGET} rewrite steps; the presentation does not collect")]
    CollectionBudget,
    #[error("group order {order} exceeds the build cap {cap}")]
    CapExceeded { order: u128, cap: usize },
    #[error("inconsistent multiplication table: {0}")]
    Inconsistent(String),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("group file is invalid: {0}")]
    BadGroupFile(String),
}

/// A word in the generators with signed exponents.
pub type Word = Vec<(usize, i64)>;

/// Exponent vector `(a_0, ..., a_{k-1})` of a collected word.
pub type NormalForm = Vec<u64>;

/// Run-length encoded word with nonnegative exponents, the working shape of
/// the collector.
type Runs = Vec<(usize, u64)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    name: String,
    names: Vec<String>,
    orders: Vec<u64>,
    powers: Vec<Option<NormalForm>>,
    conjugates: BTreeMap<(usize, usize), NormalForm>,
}

impl PcPresentation {
    /// Starts a presentation with trivial power and conjugation relations.
    /// Generator names must be nonempty, distinct, and free of whitespace
    /// and the word syntax characters `* ^ = , #`.
    pub fn new(name: &str, gens: &[&str], orders: &[u64]) -> Result<Self, PcError> {
        if gens.len() != orders.len() {
            return Err(PcError::BadGenerators(format!(
                "{} generators but {} relative orders",
                gens.len(),
                orders.len()
            )));
        }
        for (g, &e) in gens.iter().zip(orders) {
            if g.is_empty()
                || g.chars().any(|c| c.is_whitespace() || "*^=,#:".contains(c))
            {
                return Err(PcError::BadGenerators(format!("bad generator name `{g}`")));
            }
            if e < 2 {
                return Err(PcError::BadRelativeOrder { gen: g.to_string(), order: e });
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for g in gens {
            if !seen.insert(*g) {
                return Err(PcError::BadGenerators(format!("duplicate generator `{g}`")));
            }
        }
        Ok(PcPresentation {
            name: name.to_string(),
            names: gens.iter().map(|s| s.to_string()).collect(),
            orders: orders.to_vec(),
            powers: vec![None; gens.len()],
            conjugates: BTreeMap::new(),
        })
    }

    /// Declares `g_i^{e_i} = rhs`. The right-hand side must be a normal form
    /// over strictly later generators.
    pub fn set_power(&mut self, i: usize, rhs: NormalForm) -> Result<(), PcError> {
        self.check_nf(&rhs)?;
        if rhs[..=i].iter().any(|&a| a != 0) {
            return Err(PcError::BadRelation(format!(
                "power relation for {} may only use later generators",
                self.names[i]
            )));
        }
        self.powers[i] = if rhs.iter().all(|&a| a == 0) { None } else { Some(rhs) };
        Ok(())
    }

    /// Declares `g_i^{-1} g_j g_i = rhs` for `i < j`. The right-hand side is
    /// a normal form that may involve `g_i` itself and later generators
    /// (tails like `y^4*u` for the pair `(y, u)` are legal), but nothing
    /// earlier, and may not be the identity.
    pub fn set_conjugate(&mut self, i: usize, j: usize, rhs: NormalForm) -> Result<(), PcError> {
        self.check_nf(&rhs)?;
        if i >= j {
            return Err(PcError::BadRelation(format!(
                "conjugation pair ({i}, {j}) is not ordered"
            )));
        }
        if rhs[..i].iter().any(|&a| a != 0) {
            return Err(PcError::BadRelation(format!(
                "conjugate of {} by {} may only use {} and later generators",
                self.names[j], self.names[i], self.names[i]
            )));
        }
        if rhs.iter().all(|&a| a == 0) {
            return Err(PcError::BadRelation(format!(
                "conjugate of {} by {} cannot be the identity",
                self.names[j], self.names[i]
            )));
        }
        // The default tail is `g_j` itself (commuting); keep the map sparse.
        let is_default = rhs[j] == 1 && rhs.iter().enumerate().all(|(t, &a)| t == j || a == 0);
        if is_default {
            self.conjugates.remove(&(i, j));
        } else {
            self.conjugates.insert((i, j), rhs);
        }
        Ok(())
    }

    fn check_nf(&self, nf: &NormalForm) -> Result<(), PcError> {
        if nf.len() != self.len() {
            return Err(PcError::BadRelation(format!(
                "exponent vector has length {}, expected {}",
                nf.len(),
                self.len()
            )));
        }
        for (t, (&a, &e)) in nf.iter().zip(&self.orders).enumerate() {
            if a >= e {
                return Err(PcError::BadRelation(format!(
                    "exponent {a} of {} exceeds its relative order {e}",
                    self.names[t]
                )));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn relative_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn power_relation(&self, i: usize) -> Option<&NormalForm> {
        self.powers[i].as_ref()
    }

    pub fn conjugate_relation(&self, i: usize, j: usize) -> Option<&NormalForm> {
        self.conjugates.get(&(i, j))
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Product of the relative orders = order of the presented group when
    /// the presentation is consistent.
    pub fn order_upper_bound(&self) -> u128 {
        self.orders.iter().fold(1u128, |acc, &e| acc.saturating_mul(e as u128))
    }

    /// Rewrites a signed word into its normal form by collection from the
    /// left, within [`COLLECT_BUDGET`] rewrite steps.
    pub fn collect(&self, word: &[(usize, i64)]) -> Result<NormalForm, PcError> {
        let mut runs: Runs = Vec::new();
        for &(g, e) in word {
            if g >= self.len() {
                return Err(PcError::UnknownGenerator(format!("#{g}")));
            }
            if e >= 0 {
                runs.push((g, e as u64));
            } else {
                let inv = self.generator_inverse(g);
                for _ in 0..e.unsigned_abs() {
                    runs.extend_from_slice(&inv);
                }
            }
        }
        self.collect_runs(runs)
    }

    /// Normal form of the product of two normal forms.
    pub fn collect_product(&self, a: &NormalForm, b: &NormalForm) -> Result<NormalForm, PcError> {
        let mut runs = nf_to_runs(a);
        runs.extend(nf_to_runs(b));
        self.collect_runs(runs)
    }

    /// Nonnegative word equal to `g_i^{-1}`: `g_i^{e_i - 1} * (g_i^{e_i})^{-1}`,
    /// expanding the power tail recursively (tails only use later
    /// generators, so this terminates).
    fn generator_inverse(&self, i: usize) -> Runs {
        let mut out = vec![(i, self.orders[i] - 1)];
        if let Some(tail) = &self.powers[i] {
            out.extend(self.inverse_of_runs(&nf_to_runs(tail)));
        }
        out
    }

    fn inverse_of_runs(&self, runs: &Runs) -> Runs {
        let mut out = Runs::new();
        for &(g, a) in runs.iter().rev() {
            let inv = self.generator_inverse(g);
            for _ in 0..a {
                out.extend_from_slice(&inv);
            }
        }
        out
    }

    fn collect_runs(&self, mut runs: Runs) -> Result<NormalForm, PcError> {
        let mut steps = 0usize;
        loop {
            // Merge adjacent runs of the same generator, dropping empties.
            let mut merged: Runs = Vec::with_capacity(runs.len());
            for (g, a) in runs {
                if a == 0 {
                    continue;
                }
                match merged.last_mut() {
                    Some((h, b)) if *h == g => *b += a,
                    _ => merged.push((g, a)),
                }
            }
            runs = merged;

            // Leftmost violation: an overfull exponent or an out-of-order
            // adjacent pair.
            enum Viol {
                Power(usize),
                Swap(usize),
            }
            let mut viol = None;
            for t in 0..runs.len() {
                if runs[t].1 >= self.orders[runs[t].0] {
                    viol = Some(Viol::Power(t));
                    break;
                }
                if t + 1 < runs.len() && runs[t + 1].0 < runs[t].0 {
                    viol = Some(Viol::Swap(t));
                    break;
                }
            }
            match viol {
                None => break,
                Some(Viol::Power(t)) => {
                    // g^a -> g^(a - e) * tail
                    let (g, a) = runs[t];
                    runs[t].1 = a - self.orders[g];
                    if let Some(tail) = &self.powers[g] {
                        runs.splice(t + 1..t + 1, nf_to_runs(tail));
                    }
                }
                Some(Viol::Swap(t)) => {
                    // g_j^a g_i^b -> g_j^(a-1) g_i c_{ij} g_i^(b-1)
                    let (j, a) = runs[t];
                    let (i, b) = runs[t + 1];
                    let conj = match self.conjugates.get(&(i, j)) {
                        Some(nf) => nf_to_runs(nf),
                        None => vec![(j, 1)],
                    };
                    let mut repl = vec![(j, a - 1), (i, 1)];
                    repl.extend(conj);
                    repl.push((i, b - 1));
                    runs.splice(t..t + 2, repl);
                }
            }
            steps += 1;
            if steps > COLLECT_BUDGET {
                return Err(PcError::CollectionBudget);
            }
        }
        let mut nf = vec![0u64; self.len()];
        for (g, a) in runs {
            nf[g] = a;
        }
        Ok(nf)
    }

    /// Display label for a normal form, e.g. `x*y^2*u` (identity is `1`).
    pub fn label(&self, nf: &NormalForm) -> String {
        let mut parts = Vec::new();
        for (g, &a) in nf.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(self.names[g].clone()),
                _ => parts.push(format!("{}^{}", self.names[g], a)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Direct product: disjoint union of generators and relations, with the
    /// factors commuting elementwise. Clashing generator names on the right
    /// get a `'` suffix.
    pub fn direct_product(&self, other: &PcPresentation, name: &str) -> PcPresentation {
        let k1 = self.len();
        let mut names = self.names.clone();
        for n in &other.names {
            let mut candidate = n.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);

        let pad = |nf: &NormalForm, left: bool| -> NormalForm {
            let mut v = vec![0u64; names.len()];
            let off = if left { 0 } else { k1 };
            for (t, &a) in nf.iter().enumerate() {
                v[off + t] = a;
            }
            v
        };

        let mut powers = Vec::with_capacity(names.len());
        for p in &self.powers {
            powers.push(p.as_ref().map(|nf| pad(nf, true)));
        }
        for p in &other.powers {
            powers.push(p.as_ref().map(|nf| pad(nf, false)));
        }
        let mut conjugates = BTreeMap::new();
        for (&(i, j), nf) in &self.conjugates {
            conjugates.insert((i, j), pad(nf, true));
        }
        for (&(i, j), nf) in &other.conjugates {
            conjugates.insert((i + k1, j + k1), pad(nf, false));
        }
        PcPresentation {
            name: name.to_string(),
            names,
            orders,
            powers,
            conjugates,
        }
    }
}

impl fmt::Display for PcPresentation {
    /// Renders the descriptor-file form of the presentation; `parse_pc`
    /// reads it back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name: {}", self.name)?;
        writeln!(f, "generators: {}", self.names.join(", "))?;
        let orders: Vec<String> = self.orders.iter().map(u64::to_string).collect();
        writeln!(f, "orders: {}", orders.join(", "))?;
        let powers: Vec<(usize, &NormalForm)> = self
            .powers
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.as_ref().map(|nf| (i, nf)))
            .collect();
        if !powers.is_empty() {
            writeln!(f, "powers:")?;
            for (i, nf) in powers {
                writeln!(
                    f,
                    "  {}^{} = {}",
                    self.names[i],
                    self.orders[i],
                    self.word_for_display(nf)
                )?;
            }
        }
        if !self.conjugates.is_empty() {
            writeln!(f, "conjugates:")?;
            for (&(i, j), nf) in &self.conjugates {
                writeln!(
                    f,
                    "  {}^{} = {}",
                    self.names[j],
                    self.names[i],
                    self.word_for_display(nf)
                )?;
            }
        }
        Ok(())
    }
}

impl PcPresentation {
    fn word_for_display(&self, nf: &NormalForm) -> String {
        self.label(nf)
    }
}

fn nf_to_runs(nf: &NormalForm) -> Runs {
    nf.iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(g, &a)| (g, a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Presentation of the order-32, class-3 group used throughout:
    /// x^2 = y^4, y^x = y*u, u^y = y^4*u, u central otherwise.
    fn order32() -> PcPresentation {
        let mut p = PcPresentation::new("G32", &["x", "y", "u"], &[2, 8, 2]).unwrap();
        p.set_power(0, vec![0, 4, 0]).unwrap();
        p.set_conjugate(0, 1, vec![0, 1, 1]).unwrap();
        p.set_conjugate(1, 2, vec![0, 4, 1]).unwrap();
        p
    }

    #[test]
    fn collect_moves_later_generators_right() {
        let p = order32();
        // u*y = y^5*u because moving u past y costs a y^4 tail.
        let nf = p.collect(&[(2, 1), (1, 1)]).unwrap();
        assert_eq!(nf, vec![0, 5, 1]);
        // y*x = x*y*u from the conjugation x^{-1} y x = y*u.
        let nf = p.collect(&[(1, 1), (0, 1)]).unwrap();
        assert_eq!(nf, vec![1, 1, 1]);
    }

    #[test]
    fn collect_reduces_powers_through_tails() {
        let p = order32();
        // x^2 = y^4.
        assert_eq!(p.collect(&[(0, 2)]).unwrap(), vec![0, 4, 0]);
        // x^4 = y^8 = 1.
        assert_eq!(p.collect(&[(0, 4)]).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn collect_handles_signed_words() {
        let p = order32();
        // x^{-1} y x = y*u, entered with explicit inverses.
        let nf = p.collect(&[(0, -1), (1, 1), (0, 1)]).unwrap();
        assert_eq!(nf, vec![0, 1, 1]);
        // Commutator [x, y] = x^{-1} y^{-1} x y = u * y^4 ... collected.
        let nf = p.collect(&[(0, -1), (1, -1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(p.label(&nf), "u");
    }

    #[test]
    fn unknown_generator_is_reported() {
        let p = order32();
        assert!(matches!(
            p.collect(&[(7, 1)]),
            Err(PcError::UnknownGenerator(_))
        ));
    }

    #[test]
    fn relation_validation_rejects_early_supports() {
        let mut p = PcPresentation::new("t", &["a", "b", "c"], &[2, 3, 5]).unwrap();
        // Power tail may not touch the generator itself or earlier ones.
        assert!(p.set_power(1, vec![1, 0, 0]).is_err());
        assert!(p.set_power(1, vec![0, 1, 0]).is_err());
        assert!(p.set_power(1, vec![0, 0, 3]).is_ok());
        // Conjugate tail may use the conjugating generator but nothing earlier.
        assert!(p.set_conjugate(1, 2, vec![1, 0, 0]).is_err());
        assert!(p.set_conjugate(1, 2, vec![0, 1, 1]).is_ok());
        // Tail exponents must respect relative orders.
        assert!(p.set_conjugate(0, 1, vec![0, 3, 0]).is_err());
        // Identity tails are nonsense.
        assert!(p.set_conjugate(0, 1, vec![0, 0, 0]).is_err());
    }

    #[test]
    fn default_conjugates_are_pruned() {
        let mut p = PcPresentation::new("t", &["a", "b"], &[2, 2]).unwrap();
        p.set_conjugate(0, 1, vec![0, 1]).unwrap();
        assert_eq!(p.conjugate_relation(0, 1), None);
    }

    #[test]
    fn huge_exponents_reduce_in_few_steps() {
        let p = PcPresentation::new("t", &["a"], &[1 << 40]).unwrap();
        let w: Word = vec![(0, (1i64 << 41) + 3)];
        assert_eq!(p.collect(&w).unwrap(), vec![3]);
    }

    #[test]
    fn budget_stops_words_that_collect_too_slowly() {
        // Moving u past y costs a y^4 tail; with a relative order of 2^40
        // the tail never wraps, so u * y^m needs about m swap steps.
        let mut p = PcPresentation::new("t", &["y", "u"], &[1 << 40, 2]).unwrap();
        p.set_conjugate(0, 1, vec![4, 1]).unwrap();
        let quick = p.collect(&[(1, 1), (0, 1000)]).unwrap();
        assert_eq!(quick, vec![5000, 1]);
        let w: Word = vec![(1, 1), (0, 1 << 21)];
        assert_eq!(p.collect(&w), Err(PcError::CollectionBudget));
    }

    #[test]
    fn empty_presentation_is_the_trivial_group() {
        let p = PcPresentation::new("1", &[], &[]).unwrap();
        assert_eq!(p.collect(&[]).unwrap(), Vec::<u64>::new());
        assert_eq!(p.order_upper_bound(), 1);
    }

    #[test]
    fn display_roundtrips_through_the_parser() {
        let p = order32();
        let text = p.to_string();
        let q = crate::pcgroup::parse_pc(&text).unwrap();
        assert_eq!(p, q);
    }
}
