use std::fs;
use std::io::Read;

use demazure_core::{Partition, Permutation, Ssyt, WeakComposition};

use crate::CliError;

/// Comma- or space-separated non-negative integers.
pub fn numbers<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<T>().map_err(|_| CliError::usage(format!("not a number: {t:?}"))))
        .collect()
}

/// Resolves the variable count: `--vars` wins, but may not be smaller than
/// what the other arguments need.
pub fn resolve_n(vars: Option<usize>, needed: usize) -> Result<usize, CliError> {
    match vars {
        Some(n) if n < needed => {
            Err(CliError::usage(format!("--vars {n} is smaller than the {needed} variables the input uses")))
        }
        Some(n) => Ok(n),
        None => Ok(needed.max(1)),
    }
}

pub fn composition(s: &str, vars: Option<usize>) -> Result<WeakComposition, CliError> {
    let parts: Vec<u32> = numbers(s)?;
    let n = resolve_n(vars, parts.len())?;
    Ok(WeakComposition::new(parts).padded(n)?)
}

pub fn permutation(s: &str, vars: Option<usize>) -> Result<Permutation, CliError> {
    let w = Permutation::new(numbers(s)?)?;
    if let Some(n) = vars {
        if n != w.n() {
            return Err(CliError::usage(format!("permutation has {} letters but --vars is {n}", w.n())));
        }
    }
    Ok(w)
}

pub fn partition(s: &str, n: usize) -> Result<Partition, CliError> {
    Ok(Partition::new(numbers(s)?, n)?)
}

/// Number of nonzero parts in a shape argument.
pub fn parts_needed(s: &str) -> Result<usize, CliError> {
    Ok(numbers::<u32>(s)?.iter().filter(|&&p| p > 0).count())
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::usage(format!("reading {path}: {e}")))
    }
}

/// A tableau from `--rows` (rows bottom-up, separated by `/`) or from a file
/// holding JSON or the text picture.
pub fn tableau(rows: Option<&str>, input: Option<&str>) -> Result<Ssyt, CliError> {
    match (rows, input) {
        (Some(r), None) => {
            let rows = r.split('/').map(numbers).collect::<Result<Vec<Vec<u32>>, _>>()?;
            Ok(Ssyt::new(rows)?)
        }
        (None, Some(path)) => Ok(read_input(path)?.parse::<Ssyt>()?),
        _ => Err(CliError::usage("give exactly one of --rows or --input")),
    }
}

/// JSON from `--json` or from a file.
pub fn json(inline: Option<&str>, input: Option<&str>) -> Result<serde_json::Value, CliError> {
    let text = match (inline, input) {
        (Some(s), None) => s.to_string(),
        (None, Some(path)) => read_input(path)?,
        _ => return Err(CliError::usage("give exactly one of --json or --input")),
    };
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("malformed JSON: {e}")))
}
