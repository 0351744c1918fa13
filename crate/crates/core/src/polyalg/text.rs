//! Plain-text and JSON forms of polynomials.
//!
//! Text grammar: terms such as `-3/2*x0^3*x3^2` joined by `+`/`-`, printed
//! in descending term order without spaces. The zero polynomial is `0`.

use serde_json::{json, Value};

use super::coeff::Coeff;
use super::poly::Polynomial;
use super::ring::{Monomial, Ring};
use super::PolyError;

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ring = p.ring();
    let mut out = String::new();
    for (i, t) in p.terms().enumerate() {
        let neg = t.coeff.is_negative();
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let abs = t.coeff.abs();
        if t.mono.is_one() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&ring.format_monomial(&t.mono));
        }
    }
    out
}

pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, PolyError> {
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: &str| PolyError::Parse(format!("{msg} in `{text}`"));
    if s.is_empty() {
        return Err(err("empty input"));
    }
    let mut pos = 0;
    let mut terms: Vec<(Coeff, Monomial)> = Vec::new();
    while pos < s.len() {
        let mut coeff = Coeff::one();
        match s[pos] {
            '+' => pos += 1,
            '-' => {
                coeff = Coeff::from_int(-1);
                pos += 1;
            }
            _ if pos > 0 => return Err(err("expected `+` or `-`")),
            _ => {}
        }
        let mut exps = vec![0u32; ring.nvars()];
        loop {
            if pos >= s.len() {
                return Err(err("dangling operator"));
            }
            if s[pos].is_ascii_digit() {
                let start = pos;
                while pos < s.len() && (s[pos].is_ascii_digit() || s[pos] == '/') {
                    pos += 1;
                }
                let lit: String = s[start..pos].iter().collect();
                let c: Coeff = lit.parse().map_err(|_| err("bad number"))?;
                coeff = &coeff * &c;
            } else if s[pos].is_ascii_alphabetic() {
                let start = pos;
                while pos < s.len() && (s[pos].is_ascii_alphanumeric() || s[pos] == '_') {
                    pos += 1;
                }
                let name: String = s[start..pos].iter().collect();
                let v = ring
                    .var_index(&name)
                    .ok_or_else(|| err(&format!("unknown variable `{name}`")))?;
                let mut e = 1u32;
                if pos < s.len() && s[pos] == '^' {
                    pos += 1;
                    let start = pos;
                    while pos < s.len() && s[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let lit: String = s[start..pos].iter().collect();
                    e = lit.parse().map_err(|_| err("bad exponent"))?;
                }
                exps[v] += e;
            } else {
                return Err(err(&format!("unexpected `{}`", s[pos])));
            }
            if pos < s.len() && s[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        terms.push((coeff, ring.monomial(&exps)?));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// JSON form: a list of `[coefficient-string, exponent-vector]` pairs in
/// descending term order.
pub fn polynomial_to_json(p: &Polynomial) -> Value {
    let n = p.ring().nvars();
    Value::Array(
        p.terms()
            .map(|t| json!([t.coeff.to_string(), t.mono.exponents(n)]))
            .collect(),
    )
}

pub fn polynomial_from_json(ring: &Ring, v: &Value) -> Result<Polynomial, PolyError> {
    let bad = || PolyError::Parse(format!("bad polynomial JSON {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
        let c: Coeff = pair[0]
            .as_str()
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        let exps = pair[1]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|e| {
                e.as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(bad)
            })
            .collect::<Result<Vec<u32>, _>>()?;
        terms.push((c, ring.monomial(&exps)?));
    }
    Ok(Polynomial::from_terms(ring, terms))
}
