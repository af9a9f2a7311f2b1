//! Concrete finite groups as verified multiplication tables.
//!
//! `build_group` materializes a power-commutator presentation: it enumerates
//! normal forms in lexicographic order, fills the Cayley table through the
//! collector, and then refuses to hand the table back unless it passes the
//! consistency checks (identity, Latin square, defining relations, and an
//! associativity scan).

use std::sync::Arc;

use super::presentation::{NormalForm, PcError, PcPresentation};

/// Default ceiling on the order of a materialized group.
pub const DEFAULT_BUILD_CAP: usize = 4096;

/// Default ceiling for the full `O(n^3)` associativity scan; larger tables
/// fall back to the generator-triple scan and are tagged accordingly.
pub const DEFAULT_ASSOC_CAP: usize = 512;

/// How thoroughly the table's associativity was checked.
///
/// `GeneratorScan` verifies `(a*b)*g = a*(b*g)` for every pair and every
/// distinguished generator `g`; together with the reachability of all
/// elements from the generators this implies full associativity, but the
/// tag keeps the distinction visible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verification {
    FullScan,
    GeneratorScan,
}

impl std::fmt::Display for Verification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verification::FullScan => write!(f, "full"),
            Verification::GeneratorScan => write!(f, "generator"),
        }
    }
}

/// Knobs for group construction.
#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Largest group order that will be materialized.
    pub cap: usize,
    /// Largest order that gets the full associativity scan.
    pub assoc_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { cap: DEFAULT_BUILD_CAP, assoc_cap: DEFAULT_ASSOC_CAP }
    }
}

/// Shared handle to an immutable finite group.
pub type GroupRef = Arc<FiniteGroup>;

/// A finite group given by its full multiplication table.
///
/// Elements are indices `0..order` with the identity at
/// index 0; `labels` carry a human-readable word for each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Vec<String>,
    generators: Vec<u32>,
    verification: Verification,
    /// Normal-form exponent vectors when built from a presentation,
    /// in element-index (= lexicographic) order.
    normal_forms: Option<Vec<NormalForm>>,
}

impl FiniteGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// `g^-1 * a * g`.
    pub fn conjugate(&self, a: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// Left-normed commutator `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `a^k` by repeated squaring on the table; negative exponents go
    /// through the inverse.
    pub fn power(&self, a: u32, k: i64) -> u32 {
        let (mut base, mut k) = if k < 0 {
            (self.inv(a), k.unsigned_abs())
        } else {
            (a, k as u64)
        };
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Order of the element `a`.
    pub fn element_order(&self, a: u32) -> u64 {
        let mut x = a;
        let mut k = 1u64;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order as u32)
            .all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: u32) -> &str {
        &self.labels[a as usize]
    }

    /// Indices of the distinguished generators (presentation order).
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn verification(&self) -> Verification {
        self.verification
    }

    /// Normal-form exponent vectors in element order, if the group was
    /// built from a presentation.
    pub fn normal_forms(&self) -> Option<&[NormalForm]> {
        self.normal_forms.as_deref()
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    /// Whether the distinguished generators generate the whole group.
    pub fn generators_generate(&self) -> bool {
        closure_size(self, &self.generators) == self.order
    }

    /// Builds a verified group from a presentation.
    pub fn build(pres: &PcPresentation, opts: &BuildOptions) -> Result<GroupRef, PcError> {
        let bound = pres.order_upper_bound();
        if bound > opts.cap as u128 {
            return Err(PcError::CapExceeded { order: bound, cap: opts.cap });
        }
        let n = bound as usize;
        let k = pres.len();
        let orders = pres.relative_orders();

        // Normal forms in lexicographic order; mixed-radix index with the
        // first generator most significant.
        let mut forms: Vec<NormalForm> = Vec::with_capacity(n);
        let mut nf = vec![0u64; k];
        loop {
            forms.push(nf.clone());
            let mut t = k;
            loop {
                if t == 0 {
                    break;
                }
                t -= 1;
                nf[t] += 1;
                if nf[t] < orders[t] {
                    break;
                }
                nf[t] = 0;
            }
            if nf.iter().all(|&a| a == 0) {
                break;
            }
        }
        debug_assert_eq!(forms.len(), n);
        let index_of = |nf: &NormalForm| -> u32 {
            let mut idx = 0usize;
            for (t, &a) in nf.iter().enumerate() {
                idx = idx * orders[t] as usize + a as usize;
            }
            idx as u32
        };

        // Right multiplication by a single generator letter, via collection.
        let mut letter = vec![vec![0u32; n]; k];
        for m in 0..k {
            for (x, form) in forms.iter().enumerate() {
                let mut word: Vec<(usize, i64)> = form
                    .iter()
                    .enumerate()
                    .map(|(g, &a)| (g, a as i64))
                    .collect();
                word.push((m, 1));
                let prod = pres.collect(&word)?;
                letter[m][x] = index_of(&prod);
            }
        }
        // Doubled letter tables make x * g^a cost O(log a) lookups.
        let mut doubled: Vec<Vec<Vec<u32>>> = Vec::with_capacity(k);
        for m in 0..k {
            let bits = 64 - orders[m].leading_zeros() as usize;
            let mut levels = vec![letter[m].clone()];
            for t in 1..bits {
                let prev = &levels[t - 1];
                levels.push((0..n).map(|x| prev[prev[x] as usize]).collect());
            }
            doubled.push(levels);
        }
        let apply_power = |mut x: u32, m: usize, a: u64| -> u32 {
            let mut a = a;
            let mut t = 0;
            while a > 0 {
                if a & 1 == 1 {
                    x = doubled[m][t][x as usize];
                }
                a >>= 1;
                t += 1;
            }
            x
        };

        let mut table = vec![0u32; n * n];
        for y in 0..n {
            let form = &forms[y];
            for x in 0..n as u32 {
                let mut z = x;
                for (m, &a) in form.iter().enumerate() {
                    if a > 0 {
                        z = apply_power(z, m, a);
                    }
                }
                table[x as usize * n + y] = z;
            }
        }

        let labels: Vec<String> = forms.iter().map(|f| pres.label(f)).collect();
        let generators: Vec<u32> = (0..k)
            .map(|m| {
                let mut nf = vec![0u64; k];
                nf[m] = 1;
                index_of(&nf)
            })
            .collect();

        let mut group = FiniteGroup {
            name: pres.name().to_string(),
            order: n,
            table,
            inverse: Vec::new(),
            labels,
            generators,
            verification: Verification::FullScan,
            normal_forms: Some(forms),
        };
        group.verify_structure(opts.assoc_cap).map_err(PcError::Inconsistent)?;
        group.check_presentation_relations(pres)?;
        // For small tables, cross-check the chained fill against direct
        // collection of concatenated normal forms.
        if n <= 128 {
            let forms = group.normal_forms.as_ref().unwrap();
            for x in 0..n {
                for y in 0..n {
                    let direct = pres.collect_product(&forms[x], &forms[y])?;
                    if index_of(&direct) != group.table[x * n + y] {
                        return Err(PcError::Inconsistent(format!(
                            "letter-chained product of {} and {} disagrees with direct collection",
                            group.labels[x], group.labels[y]
                        )));
                    }
                }
            }
        }
        Ok(Arc::new(group))
    }

    /// Re-runs the table checks: identity behaviour, Latin property,
    /// inverses, and associativity (full scan up to `assoc_cap`, generator
    /// triples beyond). Sets the verification tag.
    pub fn verify_structure(&mut self, assoc_cap: usize) -> Result<Verification, String> {
        self.check_identity_latin_inverses()?;
        let n = self.order;
        let tag = if n <= assoc_cap {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.table[a * n + b] as usize;
                    for c in 0..n {
                        let bc = self.table[b * n + c] as usize;
                        if self.table[ab * n + c] != self.table[a * n + bc] {
                            return Err(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            ));
                        }
                    }
                }
            }
            Verification::FullScan
        } else {
            if self.generators.is_empty() || !self.generators_generate() {
                return Err(
                    "cannot verify associativity: no generating set for the generator scan"
                        .into(),
                );
            }
            for &g in &self.generators {
                let g = g as usize;
                for a in 0..n {
                    for b in 0..n {
                        let ab = self.table[a * n + b] as usize;
                        let bg = self.table[b * n + g] as usize;
                        if self.table[ab * n + g] != self.table[a * n + bg] {
                            return Err(format!(
                                "associativity fails at ({a}, {b}, generator {g})"
                            ));
                        }
                    }
                }
            }
            Verification::GeneratorScan
        };
        self.verification = tag;
        Ok(tag)
    }

    /// The quadratic-time part of the table checks: sizes, identity at
    /// index 0, Latin rows and columns, two-sided inverses. Fills the
    /// inverse table.
    fn check_identity_latin_inverses(&mut self) -> Result<(), String> {
        let n = self.order;
        if n == 0 || self.table.len() != n * n || self.labels.len() != n {
            return Err("table and label sizes are inconsistent".into());
        }
        if self.table.iter().any(|&v| v as usize >= n) {
            return Err("table entry out of range".into());
        }
        for x in 0..n as u32 {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(format!("element 0 is not an identity at {x}"));
            }
        }
        // Latin square: every row and column is a permutation.
        let mut seen = vec![false; n];
        for x in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for y in 0..n {
                let v = self.table[x * n + y] as usize;
                if seen[v] {
                    return Err(format!("row {x} repeats entry {v}"));
                }
                seen[v] = true;
            }
        }
        for y in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for x in 0..n {
                let v = self.table[x * n + y] as usize;
                if seen[v] {
                    return Err(format!("column {y} repeats entry {v}"));
                }
                seen[v] = true;
            }
        }
        // Two-sided inverses exist since rows and columns are permutations.
        let mut inverse = vec![0u32; n];
        for x in 0..n as u32 {
            let mut found = None;
            for y in 0..n as u32 {
                if self.table[x as usize * n + y as usize] == 0 {
                    found = Some(y);
                    break;
                }
            }
            let y = found.ok_or_else(|| format!("no right inverse for {x}"))?;
            if self.table[y as usize * n + x as usize] != 0 {
                return Err(format!("inverse of {x} is one-sided"));
            }
            inverse[x as usize] = y;
        }
        self.inverse = inverse;
        Ok(())
    }

    /// Checks that the defining relations of `pres` hold in the table.
    fn check_presentation_relations(&self, pres: &PcPresentation) -> Result<(), PcError> {
        let index_of_nf = |nf: &NormalForm| -> u32 {
            let mut idx = 0usize;
            for (t, &a) in nf.iter().enumerate() {
                idx = idx * pres.relative_orders()[t] as usize + a as usize;
            }
            idx as u32
        };
        for i in 0..pres.len() {
            let gi = self.generators[i];
            let lhs = self.power(gi, pres.relative_orders()[i] as i64);
            let rhs = match pres.power_relation(i) {
                Some(nf) => index_of_nf(nf),
                None => self.identity(),
            };
            if lhs != rhs {
                return Err(PcError::Inconsistent(format!(
                    "power relation for {} does not hold in the table",
                    pres.generator_names()[i]
                )));
            }
        }
        for i in 0..pres.len() {
            for j in (i + 1)..pres.len() {
                let (gi, gj) = (self.generators[i], self.generators[j]);
                let lhs = self.conjugate(gj, gi);
                let rhs = match pres.conjugate_relation(i, j) {
                    Some(nf) => index_of_nf(nf),
                    None => gj,
                };
                if lhs != rhs {
                    return Err(PcError::Inconsistent(format!(
                        "conjugation relation for ({}, {}) does not hold in the table",
                        pres.generator_names()[i], pres.generator_names()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Direct product on tables, with pair labels.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, name: &str) -> GroupRef {
        let n = a.order * b.order;
        let idx = |xa: u32, xb: u32| -> u32 { xa * b.order as u32 + xb };
        let mut table = vec![0u32; n * n];
        for xa in 0..a.order as u32 {
            for xb in 0..b.order as u32 {
                let x = idx(xa, xb);
                for ya in 0..a.order as u32 {
                    for yb in 0..b.order as u32 {
                        let y = idx(ya, yb);
                        table[x as usize * n + y as usize] =
                            idx(a.mul(xa, ya), b.mul(xb, yb));
                    }
                }
            }
        }
        let mut inverse = vec![0u32; n];
        let mut labels = vec![String::new(); n];
        for xa in 0..a.order as u32 {
            for xb in 0..b.order as u32 {
                let x = idx(xa, xb) as usize;
                inverse[x] = idx(a.inv(xa), b.inv(xb));
                labels[x] = format!("({},{})", a.label(xa), b.label(xb));
            }
        }
        let mut generators: Vec<u32> = a.generators.iter().map(|&g| idx(g, 0)).collect();
        generators.extend(b.generators.iter().map(|&g| idx(0, g)));
        let verification = match (a.verification, b.verification) {
            (Verification::FullScan, Verification::FullScan) => Verification::FullScan,
            _ => Verification::GeneratorScan,
        };
        Arc::new(FiniteGroup {
            name: name.to_string(),
            order: n,
            table,
            inverse,
            labels,
            generators,
            verification,
            normal_forms: None,
        })
    }

    /// Builds a group directly from table data (used by quotients and
    /// tests). Element 0 must be the identity; the checks run before the
    /// group is returned.
    pub fn from_table(
        name: &str,
        table: Vec<u32>,
        labels: Vec<String>,
        generators: Vec<u32>,
        assoc_cap: usize,
    ) -> Result<GroupRef, PcError> {
        let order = labels.len();
        let mut group = FiniteGroup {
            name: name.to_string(),
            order,
            table,
            inverse: Vec::new(),
            labels,
            generators,
            verification: Verification::FullScan,
            normal_forms: None,
        };
        group.verify_structure(assoc_cap).map_err(PcError::Inconsistent)?;
        Ok(Arc::new(group))
    }

    /// Table constructor for groups carved out of an already-verified table
    /// (subgroups and quotients). Such tables are associative by
    /// construction, so only the quadratic checks run; the verification tag
    /// is inherited from the parent group.
    pub(crate) fn derived_table(
        name: &str,
        table: Vec<u32>,
        labels: Vec<String>,
        generators: Vec<u32>,
        verification: Verification,
    ) -> GroupRef {
        let order = labels.len();
        let mut group = FiniteGroup {
            name: name.to_string(),
            order,
            table,
            inverse: Vec::new(),
            labels,
            generators,
            verification,
            normal_forms: None,
        };
        group
            .check_identity_latin_inverses()
            .expect("derived table passes the structural checks");
        Arc::new(group)
    }

    /// Serializes the group in the portable text format:
    ///
    /// ```text
    /// nilaut-group v1
    /// name: Q8
    /// order: 8
    /// generators: 1 4
    /// verified: full
    /// labels: 1 y y^2 y^3 x x*y x*y^2 x*y^3
    /// table:
    /// 0 1 2 3 4 5 6 7
    /// ...
    /// ```
    ///
    /// The table is row-major: line `x`, entry `y` holds the index of
    /// `x * y`.
    pub fn to_group_file(&self) -> String {
        let mut out = String::new();
        out.push_str("nilaut-group v1\n");
        out.push_str(&format!("name: {}\n", self.name));
        out.push_str(&format!("order: {}\n", self.order));
        let gens: Vec<String> = self.generators.iter().map(u32::to_string).collect();
        out.push_str(&format!("generators: {}\n", gens.join(" ")));
        out.push_str(&format!("verified: {}\n", self.verification));
        out.push_str(&format!("labels: {}\n", self.labels.join(" ")));
        out.push_str("table:\n");
        for x in 0..self.order {
            let row: Vec<String> = self.table[x * self.order..(x + 1) * self.order]
                .iter()
                .map(u32::to_string)
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses [`FiniteGroup::to_group_file`] output and re-verifies the
    /// table before returning it.
    pub fn from_group_file(text: &str, assoc_cap: usize) -> Result<GroupRef, PcError> {
        let bad = |msg: &str| PcError::BadGroupFile(msg.to_string());
        let mut lines = text.lines();
        match lines.next() {
            Some("nilaut-group v1") => {}
            _ => return Err(bad("missing `nilaut-group v1` header")),
        }
        let mut name = String::new();
        let mut order = 0usize;
        let mut generators: Vec<u32> = Vec::new();
        let mut labels: Vec<String> = Vec::new();
        let mut saw_table = false;
        for line in lines.by_ref() {
            if line == "table:" {
                saw_table = true;
                break;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| bad(&format!("expected `key: value`, got `{line}`")))?;
            let value = value.trim();
            match key {
                "name" => name = value.to_string(),
                "order" => {
                    order = value.parse().map_err(|_| bad("bad order"))?;
                }
                "generators" => {
                    generators = value
                        .split_whitespace()
                        .map(|t| t.parse().map_err(|_| bad("bad generator index")))
                        .collect::<Result<_, _>>()?;
                }
                "verified" => {} // recomputed below
                "labels" => {
                    labels = value.split_whitespace().map(str::to_string).collect();
                }
                other => return Err(bad(&format!("unknown header `{other}`"))),
            }
        }
        if !saw_table {
            return Err(bad("missing `table:` section"));
        }
        if order == 0 {
            return Err(bad("order must be positive"));
        }
        if labels.is_empty() {
            labels = (0..order).map(|i| format!("e{i}")).collect();
        }
        if labels.len() != order {
            return Err(bad("label count does not match the order"));
        }
        if generators.iter().any(|&g| g as usize >= order) {
            return Err(bad("generator index out of range"));
        }
        let mut table = Vec::with_capacity(order * order);
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            for tok in line.split_whitespace() {
                table.push(tok.parse::<u32>().map_err(|_| bad("bad table entry"))?);
            }
        }
        if table.len() != order * order {
            return Err(bad(&format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        Self::from_table(&name, table, labels, generators, assoc_cap)
    }
}

/// Size of the subgroup generated by `seeds` (identity included).
pub fn closure_size(g: &FiniteGroup, seeds: &[u32]) -> usize {
    closure_elements(g, seeds).len()
}

/// Elements of the subgroup generated by `seeds`, ascending.
pub fn closure_elements(g: &FiniteGroup, seeds: &[u32]) -> Vec<u32> {
    let mut in_set = vec![false; g.order()];
    in_set[0] = true;
    let mut frontier: Vec<u32> = vec![0];
    while let Some(x) = frontier.pop() {
        for &s in seeds {
            let y = g.mul(x, s);
            if !in_set[y as usize] {
                in_set[y as usize] = true;
                frontier.push(y);
            }
        }
    }
    (0..g.order() as u32).filter(|&x| in_set[x as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q8() -> GroupRef {
        let mut p = PcPresentation::new("Q8", &["x", "y"], &[2, 4]).unwrap();
        p.set_power(0, vec![0, 2]).unwrap();
        p.set_conjugate(0, 1, vec![0, 3]).unwrap();
        FiniteGroup::build(&p, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn quaternion_table_has_the_right_shape() {
        let g = q8();
        assert_eq!(g.order(), 8);
        assert_eq!(g.verification(), Verification::FullScan);
        let x = g.generators()[0];
        let y = g.generators()[1];
        // x^2 = y^2 is the unique central involution.
        assert_eq!(g.power(x, 2), g.power(y, 2));
        assert_eq!(g.element_order(x), 4);
        assert_eq!(g.element_order(y), 4);
        assert_eq!(g.element_order(g.power(y, 2)), 2);
        // Exactly one element of order 2.
        let count = g.elements().filter(|&e| g.element_order(e) == 2).count();
        assert_eq!(count, 1);
        assert!(!g.is_abelian());
        assert!(g.generators_generate());
    }

    #[test]
    fn build_rejects_caps_and_bad_relations() {
        let p = PcPresentation::new("big", &["a"], &[1 << 20]).unwrap();
        let err = FiniteGroup::build(&p, &BuildOptions { cap: 4096, assoc_cap: 512 });
        assert!(matches!(err, Err(PcError::CapExceeded { .. })));

        // b^a = b^2 forces b = b^2 after squaring a, which cannot hold in a
        // group of the declared size: the table fails verification.
        let mut p = PcPresentation::new("bad", &["a", "b"], &[2, 5]).unwrap();
        p.set_conjugate(0, 1, vec![0, 2]).unwrap();
        let err = FiniteGroup::build(&p, &BuildOptions::default());
        assert!(err.is_err(), "inconsistent presentation must not build");
    }

    #[test]
    fn trivial_group_builds() {
        let p = PcPresentation::new("1", &[], &[]).unwrap();
        let g = FiniteGroup::build(&p, &BuildOptions::default()).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.label(0), "1");
    }

    #[test]
    fn group_file_roundtrip_is_exact() {
        let g = q8();
        let text = g.to_group_file();
        let h = FiniteGroup::from_group_file(&text, 512).unwrap();
        assert_eq!(g.order(), h.order());
        assert_eq!(g.labels(), h.labels());
        assert_eq!(g.generators(), h.generators());
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(g.mul(a, b), h.mul(a, b));
            }
        }
        assert_eq!(text, h.to_group_file());
    }

    #[test]
    fn group_file_rejects_corruption() {
        let g = q8();
        let text = g.to_group_file();
        // Break the Latin property.
        let broken = text.replace("table:\n0 1", "table:\n0 0");
        assert!(FiniteGroup::from_group_file(&broken, 512).is_err());
        assert!(FiniteGroup::from_group_file("junk", 512).is_err());
    }

    #[test]
    fn direct_product_multiplies_componentwise() {
        let g = q8();
        let c2 = {
            let p = PcPresentation::new("C2", &["t"], &[2]).unwrap();
            FiniteGroup::build(&p, &BuildOptions::default()).unwrap()
        };
        let prod = FiniteGroup::direct_product(&g, &c2, "Q8 x C2");
        assert_eq!(prod.order(), 16);
        assert!(prod.generators_generate());
        let t = prod.generators()[2];
        assert_eq!(prod.element_order(t), 2);
        for a in prod.elements() {
            assert_eq!(prod.mul(a, prod.inv(a)), prod.identity());
        }
    }

    #[test]
    fn closure_finds_subgroups() {
        let g = q8();
        let y = g.generators()[1];
        assert_eq!(closure_size(&g, &[y]), 4);
        assert_eq!(closure_size(&g, &[]), 1);
        assert_eq!(closure_elements(&g, &[y]).len(), 4);
    }
}
