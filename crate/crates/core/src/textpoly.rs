//! Tokenizer and term parser shared by the multivariate text formats.
//!
//! Grammar: `term (('+' | '-') term)*` where a term is a product of factors
//! separated by `*`; a factor is an integer or `p/q` literal, or a variable
//! name optionally followed by `^exponent`.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// One parsed term: coefficient and `(variable, exponent)` factors.
pub(crate) type RawTerm = (BigRational, Vec<(String, u32)>);

fn parse_number(s: &str) -> Option<BigRational> {
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// A numeric coefficient or a variable power, whichever the factor is.
type Factor = (Option<BigRational>, Option<(String, u32)>);

fn parse_factor(f: &str) -> Result<Factor, String> {
    let f = f.trim();
    if f.is_empty() {
        return Err("empty factor".into());
    }
    if f.starts_with(|c: char| c.is_ascii_digit()) {
        return parse_number(f)
            .map(|n| (Some(n), None))
            .ok_or_else(|| alloc::format!("bad number {f:?}"));
    }
    let (name, exp) = match f.split_once('^') {
        Some((n, e)) => {
            let e: u32 = e
                .trim()
                .parse()
                .map_err(|_| alloc::format!("bad exponent in {f:?}"))?;
            (n.trim(), e)
        }
        None => (f, 1),
    };
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(alloc::format!("bad variable {name:?}"));
    }
    Ok((None, Some((name.into(), exp))))
}

/// Splits text into signed terms and parses each.
pub(crate) fn parse_terms(text: &str) -> Result<Vec<RawTerm>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut sign = 1i32;
    let mut prev: Option<char> = None;
    for c in compact.chars() {
        // a sign directly after `^`, `*` or `/` belongs to the factor
        let binary = matches!(c, '+' | '-') && !matches!(prev, Some('^') | Some('*') | Some('/'));
        if binary {
            if !current.is_empty() {
                terms.push((sign, core::mem::take(&mut current)));
                sign = 1;
            }
            if c == '-' {
                sign = -sign;
            }
            prev = Some(c);
            continue;
        }
        current.push(c);
        prev = Some(c);
    }
    if current.is_empty() {
        return Err("trailing operator".into());
    }
    terms.push((sign, current));

    let mut out = Vec::with_capacity(terms.len());
    for (sign, body) in terms {
        let mut coeff = BigRational::one();
        let mut vars = Vec::new();
        for f in body.split('*') {
            match parse_factor(f)? {
                (Some(n), _) => coeff *= n,
                (None, Some(v)) => vars.push(v),
                (None, None) => unreachable!(),
            }
        }
        if sign < 0 {
            coeff = -coeff;
        }
        out.push((coeff, vars));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_signed_terms() {
        let t = parse_terms("X*Z - Y").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].0, BigRational::one());
        assert_eq!(t[1].0, -BigRational::one());
        assert_eq!(t[1].1, alloc::vec![("Y".into(), 1)]);

        let t = parse_terms("-2*X^2 + 3/4*X1*X2 - 5").unwrap();
        assert_eq!(t[0].0, BigRational::from_integer((-2).into()));
        assert_eq!(t[1].0, BigRational::new(3.into(), 4.into()));
        assert_eq!(t[2].1.len(), 0);

        let t = parse_terms("X - -Y").unwrap();
        assert_eq!(t[1].0, BigRational::one());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_terms("").is_err());
        assert!(parse_terms("X +").is_err());
        assert!(parse_terms("X^*Y").is_err());
        assert!(parse_terms("X**Y").is_err());
        assert!(parse_terms("1/0").is_err());
        assert!(parse_terms("X$").is_err());
    }
}
