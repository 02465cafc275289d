//! Text inputs: polynomials, words, word tuples, points and minimal
//! polynomial assignments. Each accepts either a literal or a file path.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use fricke_core::fricke::{solve_paper_system, FrickePoint};
use fricke_core::interval::{parse_rational, pow2};
use fricke_core::poly::UniPoly;
use fricke_core::words::{parse_word, parse_word_list, parse_word_tuple, Word};

use crate::error::LabError;

fn read_file(path: &Path) -> Result<String, LabError> {
    fs::read_to_string(path).map_err(|source| LabError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head).trim()
}

/// A `poly: c0 c1 ... cn` literal, or a file whose first non-comment line
/// is one.
pub fn read_poly(arg: &str) -> Result<UniPoly, LabError> {
    let arg = arg.trim();
    if arg.starts_with("poly:") {
        return UniPoly::parse(arg).map_err(|e| LabError::Usage(format!("{arg:?}: {e}")));
    }
    let text = read_file(Path::new(arg))?;
    let line = text
        .lines()
        .map(strip_comment)
        .find(|l| !l.is_empty())
        .ok_or_else(|| LabError::Usage(format!("{arg}: no polynomial found")))?;
    UniPoly::parse(line).map_err(|e| LabError::Usage(format!("{arg}: {e}")))
}

/// Joins positional tokens so that `poly: -3 -1 1` works unquoted.
pub fn read_poly_tokens(tokens: &[String]) -> Result<UniPoly, LabError> {
    read_poly(&tokens.join(" "))
}

pub fn read_word(arg: &str) -> Result<Word, LabError> {
    parse_word(arg).map_err(|e| LabError::Usage(format!("word {arg:?}: {e}")))
}

/// Comma-separated words, or a word-list file (one word per line).
pub fn read_words(arg: &str) -> Result<Vec<Word>, LabError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = read_file(path)?;
        return parse_word_list(&text)
            .map_err(|(line, e)| LabError::Usage(format!("{arg}:{line}: {e}")));
    }
    parse_word_tuple(arg).map_err(|e| LabError::Usage(format!("words {arg:?}: {e}")))
}

fn rational(text: &str) -> Result<num_rational::BigRational, LabError> {
    parse_rational(text)
        .ok_or_else(|| LabError::Usage(format!("{text:?} is not a decimal or p/q rational")))
}

/// Point syntax: `paper`, `x,y,z`, or `markov:x,y` for the point over
/// `(x, y)` with the larger Markov root as `z`.
pub fn read_point(arg: &str) -> Result<FrickePoint, LabError> {
    let arg = arg.trim();
    if arg == "paper" {
        return Ok(solve_paper_system(&pow2(-64))?.point);
    }
    if let Some(rest) = arg.strip_prefix("markov:") {
        let parts: Vec<&str> = rest.split(',').collect();
        let [x, y] = parts.as_slice() else {
            return Err(LabError::Usage(format!(
                "markov point needs two coordinates: {arg:?}"
            )));
        };
        return Ok(FrickePoint::markov(&rational(x)?, &rational(y)?)?);
    }
    let parts: Vec<&str> = arg.split(',').collect();
    let [x, y, z] = parts.as_slice() else {
        return Err(LabError::Usage(format!(
            "point {arg:?}: expected x,y,z, markov:x,y or paper"
        )));
    };
    Ok(FrickePoint::from_rationals(
        rational(x)?,
        rational(y)?,
        rational(z)?,
    ))
}

/// `{1,2}:poly:...` or `{1,2}:path`, keyed by the sorted subset.
pub fn read_minpoly(arg: &str) -> Result<(Vec<usize>, UniPoly), LabError> {
    let bad = || {
        LabError::Usage(format!(
            "minimal polynomial {arg:?}: expected {{i,j,...}}:poly:... or {{i,j,...}}:file"
        ))
    };
    let rest = arg.trim().strip_prefix('{').ok_or_else(bad)?;
    let (subset, poly) = rest.split_once("}:").ok_or_else(bad)?;
    let mut indices = Vec::new();
    for part in subset.split(',') {
        let k: usize = part.trim().parse().map_err(|_| bad())?;
        indices.push(k);
    }
    indices.sort_unstable();
    Ok((indices, read_poly(poly)?))
}

pub fn read_minpolys(args: &[String]) -> Result<BTreeMap<Vec<usize>, UniPoly>, LabError> {
    let mut out = BTreeMap::new();
    for a in args {
        let (k, p) = read_minpoly(a)?;
        if out.insert(k.clone(), p).is_some() {
            return Err(LabError::Usage(format!("subset {k:?} given twice")));
        }
    }
    Ok(out)
}
