//! Text form of univariate polynomials: `"3/7*q^2 - q + 1"`, `"q^-1 + 2"`.

use crate::error::{Error, Result};

/// Splits a polynomial expression into `(coefficient text, exponent)` pairs.
/// The indeterminate is any single ASCII letter.
pub fn parse_terms(s: &str) -> Result<Vec<(String, i64)>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let bytes = s.as_bytes();
    let mut terms = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        let c = bytes[i];
        let prev = bytes[i - 1];
        if (c == b'+' || c == b'-') && !matches!(prev, b'^' | b'*' | b'/' | b'e' | b'E') {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    terms.into_iter().map(parse_term).collect()
}

fn parse_term(t: &str) -> Result<(String, i64)> {
    let var_pos = t.find(|c: char| c.is_ascii_alphabetic());
    let Some(p) = var_pos else {
        let t = t.strip_prefix('+').unwrap_or(t);
        return Ok((t.to_string(), 0));
    };
    let mut coeff = t[..p].trim_end_matches('*').to_string();
    if let Some(c) = coeff.strip_prefix('+') {
        coeff = c.to_string();
    }
    if coeff.is_empty() {
        coeff = "1".into();
    } else if coeff == "-" {
        coeff = "-1".into();
    }
    let rest = &t[p + 1..];
    let exp = if rest.is_empty() {
        1
    } else if let Some(e) = rest.strip_prefix('^') {
        let e = e.trim_start_matches('(').trim_end_matches(')');
        e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))?
    } else {
        return Err(Error::Parse(format!("unexpected text after variable in {t:?}")));
    };
    Ok((coeff, exp))
}

/// Joins already formatted nonzero coefficients, highest exponent first.
pub fn format_terms(terms: &[(String, i64)], var: char) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, e)) in terms.iter().enumerate() {
        let mono = match *e {
            0 => c.clone(),
            _ => {
                let pow = if *e == 1 { var.to_string() } else { format!("{var}^{e}") };
                match c.as_str() {
                    "1" => pow,
                    "-1" => format!("-{pow}"),
                    _ if c.contains(['+', ' ']) || c[1..].contains('-') => format!("({c})*{pow}"),
                    _ => format!("{c}*{pow}"),
                }
            }
        };
        if k == 0 {
            out.push_str(&mono);
        } else if let Some(m) = mono.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(m);
        } else {
            out.push_str(" + ");
            out.push_str(&mono);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_signed_terms() {
        let t = parse_terms("q^-1 + 2 - 3/7*q^2").unwrap();
        assert_eq!(t, vec![("1".into(), -1), ("2".into(), 0), ("-3/7".into(), 2)]);
        assert_eq!(parse_terms("-q").unwrap(), vec![("-1".into(), 1)]);
    }

    #[test]
    fn formats_descending() {
        let s = format_terms(&[("1".into(), 2), ("-2".into(), 0)], 'q');
        assert_eq!(s, "q^2 - 2");
    }
}
