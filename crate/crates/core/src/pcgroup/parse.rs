//! Parser for presentation descriptor files.
//!
//! ```text
//! # an order-32 group of class 3
//! name: Sharp32
//! generators: x, y, u
//! orders: 2, 8, 2
//! powers:
//!   x^2 = y^4
//! conjugates:
//!   y^x = y*u
//!   u^y = y^4*u
//! ```
//!
//! `u^y` denotes the conjugate `y^-1 u y`. Relation right-hand sides are
//! words `f1*f2*...` whose factors are `gen` or `gen^exp` with the
//! generators in presentation order (so the word is literally a normal
//! form), or the single factor `1` for the identity. `#` starts a comment.

use super::presentation::{PcError, PcPresentation};

/// Parses the descriptor format produced by `PcPresentation`'s `Display`.
pub fn parse_pc(text: &str) -> Result<PcPresentation, PcError> {
    enum Section {
        Header,
        Powers,
        Conjugates,
    }
    let mut name: Option<String> = None;
    let mut gens: Option<Vec<String>> = None;
    let mut orders: Option<Vec<u64>> = None;
    let mut pres: Option<PcPresentation> = None;
    let mut section = Section::Header;

    for (line_idx, raw) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let err = |col: usize, msg: String| PcError::Parse { line: line_no, col, msg };

        if let Some(rest) = strip_keyword(line, "generators:") {
            let list = split_csv(rest);
            if list.iter().any(String::is_empty) {
                return Err(err(1, "empty generator name".into()));
            }
            gens = Some(list);
            continue;
        }
        if let Some(rest) = strip_keyword(line, "orders:") {
            let mut parsed = Vec::new();
            for tok in split_csv(rest) {
                let v: u64 = tok
                    .parse()
                    .map_err(|_| err(1, format!("bad relative order `{tok}`")))?;
                parsed.push(v);
            }
            orders = Some(parsed);
            continue;
        }
        if let Some(rest) = strip_keyword(line, "name:") {
            name = Some(rest.trim().to_string());
            continue;
        }
        if line.trim() == "powers:" {
            section = Section::Powers;
            continue;
        }
        if line.trim() == "conjugates:" {
            section = Section::Conjugates;
            continue;
        }

        // Anything else must be a relation line inside a section.
        if pres.is_none() {
            let (g, o) = match (&gens, &orders) {
                (Some(g), Some(o)) => (g.clone(), o.clone()),
                _ => {
                    return Err(err(
                        1,
                        "generators and orders must be declared before relations".into(),
                    ))
                }
            };
            if g.len() != o.len() {
                return Err(err(
                    1,
                    format!("{} generators but {} orders", g.len(), o.len()),
                ));
            }
            let refs: Vec<&str> = g.iter().map(String::as_str).collect();
            let p = PcPresentation::new(name.as_deref().unwrap_or("G"), &refs, &o)
                .map_err(|e| err(1, e.to_string()))?;
            pres = Some(p);
        }
        let p = pres.as_mut().expect("constructed above");

        let eq_pos = line
            .find('=')
            .ok_or_else(|| err(1, "expected `lhs = rhs` relation".into()))?;
        let (lhs_raw, rhs_raw) = (&line[..eq_pos], &line[eq_pos + 1..]);
        let lhs = lhs_raw.trim();
        let lhs_col = 1 + lhs_raw.len() - lhs_raw.trim_start().len();
        let rhs_col = eq_pos + 2 + (rhs_raw.len() - rhs_raw.trim_start().len());
        let rhs = parse_word(p, rhs_raw.trim(), line_no, rhs_col)?;

        match section {
            Section::Header => {
                return Err(err(
                    1,
                    "relations must appear under `powers:` or `conjugates:`".into(),
                ))
            }
            Section::Powers => {
                // lhs is gen^int with int equal to the relative order.
                let (base, exp) = lhs.split_once('^').ok_or_else(|| {
                    err(lhs_col, format!("power relation `{lhs}` must look like g^e"))
                })?;
                let i = p
                    .generator_index(base.trim())
                    .ok_or_else(|| err(lhs_col, format!("unknown generator `{base}`")))?;
                let e: u64 = exp
                    .trim()
                    .parse()
                    .map_err(|_| err(lhs_col, format!("bad exponent `{exp}`")))?;
                if e != p.relative_orders()[i] {
                    return Err(err(
                        lhs_col,
                        format!(
                            "power relation for {} must use its relative order {}",
                            base.trim(),
                            p.relative_orders()[i]
                        ),
                    ));
                }
                p.set_power(i, rhs).map_err(|e| err(rhs_col, e.to_string()))?;
            }
            Section::Conjugates => {
                // lhs is gj^gi, meaning gi^-1 gj gi.
                let (target, by) = lhs.split_once('^').ok_or_else(|| {
                    err(lhs_col, format!("conjugation `{lhs}` must look like gj^gi"))
                })?;
                let j = p
                    .generator_index(target.trim())
                    .ok_or_else(|| err(lhs_col, format!("unknown generator `{target}`")))?;
                let i = p
                    .generator_index(by.trim())
                    .ok_or_else(|| err(lhs_col, format!("unknown generator `{by}`")))?;
                if i >= j {
                    return Err(err(
                        lhs_col,
                        format!(
                            "conjugating generator `{}` must precede `{}` in the presentation",
                            by.trim(),
                            target.trim()
                        ),
                    ));
                }
                p.set_conjugate(i, j, rhs).map_err(|e| err(rhs_col, e.to_string()))?;
            }
        }
    }

    if let Some(p) = pres {
        return Ok(p);
    }
    // No relations: construct from the headers alone.
    let gens = gens.ok_or(PcError::Parse {
        line: 1,
        col: 1,
        msg: "missing `generators:` line".into(),
    })?;
    let orders = orders.ok_or(PcError::Parse {
        line: 1,
        col: 1,
        msg: "missing `orders:` line".into(),
    })?;
    if gens.len() != orders.len() {
        return Err(PcError::Parse {
            line: 1,
            col: 1,
            msg: format!("{} generators but {} orders", gens.len(), orders.len()),
        });
    }
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    PcPresentation::new(name.as_deref().unwrap_or("G"), &refs, &orders).map_err(|e| {
        PcError::Parse { line: 1, col: 1, msg: e.to_string() }
    })
}

/// Word = `1` or `factor(*factor)*` with factors `gen` or `gen^exp`, the
/// generators strictly ascending in presentation order.
fn parse_word(
    p: &PcPresentation,
    word: &str,
    line: usize,
    start_col: usize,
) -> Result<Vec<u64>, PcError> {
    let err = |col: usize, msg: String| PcError::Parse { line, col, msg };
    let mut nf = vec![0u64; p.len()];
    if word == "1" {
        return Ok(nf);
    }
    if word.is_empty() {
        return Err(err(start_col, "empty word".into()));
    }
    let mut col = start_col;
    let mut last: Option<usize> = None;
    for factor in word.split('*') {
        let fcol = col + (factor.len() - factor.trim_start().len());
        let f = factor.trim();
        let (base, exp) = match f.split_once('^') {
            Some((b, e)) => {
                let exp: u64 = e
                    .trim()
                    .parse()
                    .map_err(|_| err(fcol, format!("bad exponent `{e}` in `{f}`")))?;
                (b.trim(), exp)
            }
            None => (f, 1),
        };
        let g = p
            .generator_index(base)
            .ok_or_else(|| err(fcol, format!("unknown generator `{base}`")))?;
        if let Some(prev) = last {
            if g <= prev {
                return Err(err(
                    fcol,
                    format!(
                        "factors must follow presentation order; `{base}` repeats or goes backwards"
                    ),
                ));
            }
        }
        last = Some(g);
        nf[g] = exp;
        col += factor.len() + 1;
    }
    Ok(nf)
}

fn strip_keyword<'a>(line: &'a str, kw: &str) -> Option<&'a str> {
    let trimmed = line.trim_start();
    trimmed.strip_prefix(kw)
}

fn split_csv(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}
