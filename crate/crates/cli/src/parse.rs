//! Point syntax: `e+h`, `2*e12 - 1/2*h1`, `s(c)`, coordinate tuples
//! `(1,0,-2)` and matrix literals `[[1,2],[3,-1]]`.

use anyhow::{anyhow, bail, Context, Result};
use slicelab::exactnum::parse_rational;
use slicelab::liecore::{Element, LieAlgebra};
use slicelab::slodowy::SlodowySlice;
use slicelab::{QMatrix, Rational};

fn rational(text: &str) -> Result<Rational> {
    parse_rational(text).ok_or_else(|| anyhow!("invalid rational `{}`", text.trim()))
}

fn rationals(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(rational).collect()
}

pub fn parse_matrix(text: &str, n: usize) -> Result<QMatrix> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("[[")
        .and_then(|s| s.strip_suffix("]]"))
        .ok_or_else(|| anyhow!("matrix literal must look like [[a,b],[c,d]]"))?;
    let rows: Vec<Vec<Rational>> = inner.split("],[").map(rationals).collect::<Result<_>>()?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        bail!("expected a {n}x{n} matrix");
    }
    Ok(QMatrix::from_rows(&rows, n))
}

/// Splits `a + b - c` into signed terms at parenthesis depth zero.
fn signed_terms(text: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut depth = 0i32;
    for c in text.chars().filter(|c| !c.is_whitespace()) {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (c == '+' || c == '-') && !current.is_empty() && !current.ends_with('*') {
            out.push((negative, std::mem::take(&mut current)));
            negative = c == '-';
            continue;
        }
        if depth == 0 && current.is_empty() && (c == '+' || c == '-') {
            negative ^= c == '-';
            continue;
        }
        current.push(c);
    }
    if !current.is_empty() {
        out.push((negative, current));
    }
    out
}

fn slice_point(alg: &LieAlgebra, args: &str) -> Result<Element> {
    let slice = SlodowySlice::principal(alg)?;
    let coords = rationals(args)?;
    if coords.len() != slice.dim() {
        bail!("s(...) takes {} coordinates on the principal slice of {}", slice.dim(), alg.name());
    }
    Ok(slice.point(&coords))
}

fn term(alg: &LieAlgebra, text: &str) -> Result<Element> {
    if let Some(args) = text.strip_prefix("s(").and_then(|s| s.strip_suffix(')')) {
        return slice_point(alg, args);
    }
    let (coeff, label) = match text.rsplit_once('*') {
        Some((c, l)) => (rational(c.trim_matches(|ch| ch == '(' || ch == ')'))?, l),
        None => (Rational::from_integer(1.into()), text),
    };
    let basis = alg
        .named(label)
        .with_context(|| format!("unknown basis element `{label}` (expected one of {})", alg.labels().join(", ")))?;
    Ok(basis.scale(&coeff))
}

pub fn parse_element(alg: &LieAlgebra, text: &str) -> Result<Element> {
    let text = text.trim();
    if text.starts_with("[[") {
        return Ok(alg.from_matrix(&parse_matrix(text, alg.n())?)?);
    }
    if let Some(inner) = text.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        if inner.contains(',') {
            return Ok(alg.element(rationals(inner)?)?);
        }
    }
    let terms = signed_terms(text);
    if terms.is_empty() {
        bail!("empty element");
    }
    let mut acc = alg.zero();
    for (negative, t) in terms {
        let x = term(alg, &t)?;
        acc = if negative { &acc - &x } else { &acc + &x };
    }
    Ok(acc)
}
