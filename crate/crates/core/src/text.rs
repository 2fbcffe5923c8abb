//! Human-readable monomial notation.
//!
//! Variables print as `a..z` when the ambient has at most 26 variables and as
//! `x1..xn` otherwise, matching the usual computer-algebra conventions. The
//! parser accepts both alphabets, with exponents written `a^2` or `a2`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub fn variable_name(i: usize, n: usize) -> String {
    if n <= 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{}", i + 1)
    }
}

pub fn monomial_string(m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let n = m.ambient();
    let mut out = String::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        out.push_str(&variable_name(i, n));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}

pub fn ideal_string(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "0".to_string();
    }
    ideal.gens().iter().map(monomial_string).collect::<Vec<_>>().join(", ")
}

/// Parses a single monomial against a fixed ambient variable count.
///
/// For `n <= 26` variables are the letters `a..` with exponents written `a^2`
/// or `a2`; for larger ambients the `x1..xn` form is required, with exponents
/// written `x1^2`.
pub fn parse_monomial(s: &str, n: usize) -> Result<Monomial> {
    let mut exps = vec![0u32; n];
    let src = s.trim();
    if src == "1" {
        return Ok(Monomial::from_exponents(exps));
    }
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() || c == '*' {
            i += 1;
            continue;
        }
        let var: usize = if n > 26 {
            if c != 'x' {
                return Err(Error::Parse(format!(
                    "expected x1..x{n} form, found {c:?} in {src:?}"
                )));
            }
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let idx: usize = bytes[start..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in {src:?}")))?;
            if idx == 0 {
                return Err(Error::Parse(format!("variables are x1..xn in {src:?}")));
            }
            idx - 1
        } else if c.is_ascii_lowercase() {
            i += 1;
            (c as u8 - b'a') as usize
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {src:?}")));
        };
        if var >= n {
            return Err(Error::ElementOutOfRange { element: var, n });
        }
        let mut exp = 1u32;
        if i < bytes.len() && (bytes[i] == '^' || bytes[i].is_ascii_digit()) {
            if bytes[i] == '^' {
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(Error::Parse(format!("dangling '^' in {src:?}")));
            }
            exp = bytes[start..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {src:?}")))?;
        }
        exps[var] += exp;
    }
    Ok(Monomial::from_exponents(exps))
}

/// Parses a comma-separated generator list like `"af, cd, bde, bce"`.
///
/// When `n` is `None` the ambient is inferred as the largest variable
/// mentioned plus one.
pub fn parse_ideal(s: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let parts: Vec<&str> = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .collect();
    let n = match n {
        Some(n) => n,
        None => {
            // infer the ambient from the letters actually used
            let mut max_var = 0usize;
            for p in &parts {
                let m = parse_monomial(p, 26)?;
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        max_var = max_var.max(i + 1);
                    }
                }
            }
            max_var
        }
    };
    let gens = parts.iter().map(|p| parse_monomial(p, n)).collect::<Result<Vec<_>>>()?;
    MonomialIdeal::from_generators(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let i = parse_ideal("af, cd, bde, bce", None).unwrap();
        assert_eq!(i.n(), 6);
        assert_eq!(i.mu(), 4);
        // canonical order: by degree, then alphabetical
        assert_eq!(ideal_string(&i), "af, cd, bce, bde");
        let m = parse_monomial("a^7b2c6d6e2f^7", 6).unwrap();
        assert_eq!(monomial_string(&m), "a^7b^2c^6d^6e^2f^7");
        assert_eq!(
            parse_monomial("x1^2x27", 30).unwrap().exponents()[26],
            1,
            "xN form for wide ambients"
        );
    }

    #[test]
    fn parse_errors() {
        assert!(parse_monomial("A", 3).is_err());
        assert!(parse_monomial("d", 3).is_err());
        assert!(parse_monomial("a^", 3).is_err());
        assert!(parse_monomial("x0", 30).is_err());
    }
}
