//! The line-oriented instance format.
//!
//! ```text
//! # k[[t^3, t^4, t^5]], I = (t^3, t^4)
//! kind: semigroup
//! semigroup: 3 4 5
//! ideal: 3 4
//! module: 0          # optional, defaults to 0 (M = A)
//! ```
//!
//! ```text
//! kind: bivariate
//! ring_ideal: 1 2 ; 2 1
//! ideal: 1 0 ; 0 1
//! ```

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::semigroup::SemigroupInstance;
use crate::staircase::{StaircaseIdeal, StaircaseInstance};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Semigroup(SemigroupInstance),
    Bivariate(StaircaseInstance),
}

impl Instance {
    pub fn to_text(&self) -> String {
        match self {
            Instance::Semigroup(s) => s.to_text(),
            Instance::Bivariate(s) => s.to_text(),
        }
    }
}

struct Entry<'a> {
    line: usize,
    column: usize,
    value: &'a str,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut entries: BTreeMap<&str, Entry> = BTreeMap::new();
    let last_line = text.lines().count() + 1;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap();
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let column = content.len() - content.trim_start().len() + 1;
            return Err(parse_error(line, column, "expected `key: value`"));
        };
        let key = content[..colon].trim();
        let key_column = content.len() - content.trim_start().len() + 1;
        if !matches!(key, "kind" | "semigroup" | "ideal" | "module" | "ring_ideal") {
            return Err(parse_error(line, key_column, format!("unknown key `{key}`")));
        }
        if entries.contains_key(key) {
            return Err(parse_error(line, key_column, format!("duplicate key `{key}`")));
        }
        entries.insert(key, Entry { line, column: colon + 2, value: &content[colon + 1..] });
    }
    let kind = entries
        .get("kind")
        .ok_or_else(|| parse_error(last_line, 1, "missing key `kind`"))?;
    match kind.value.trim() {
        "semigroup" => {
            if let Some(e) = entries.get("ring_ideal") {
                return Err(parse_error(e.line, 1, "`ring_ideal` is not a semigroup key"));
            }
            let required = |key: &str| {
                entries.get(key).ok_or_else(|| parse_error(last_line, 1, format!("missing key `{key}`")))
            };
            let sgen = integers(required("semigroup")?)?;
            let igen = integers(required("ideal")?)?;
            let mgen = match entries.get("module") {
                Some(e) => integers(e)?,
                None => vec![0],
            };
            Ok(Instance::Semigroup(SemigroupInstance::new(sgen, igen, mgen)?))
        }
        "bivariate" => {
            for key in ["semigroup", "module"] {
                if let Some(e) = entries.get(key) {
                    return Err(parse_error(e.line, 1, format!("`{key}` is not a bivariate key")));
                }
            }
            let required = |key: &str| {
                entries.get(key).ok_or_else(|| parse_error(last_line, 1, format!("missing key `{key}`")))
            };
            let j = pairs(required("ring_ideal")?)?;
            let i = pairs(required("ideal")?)?;
            Ok(Instance::Bivariate(StaircaseInstance::new(j, i)?))
        }
        other => Err(parse_error(kind.line, kind.column, format!("unknown kind `{other}`"))),
    }
}

/// Whitespace-separated tokens of `value` with their 1-based columns.
fn tokens<'a>(entry: &'a Entry) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    let base = entry.column;
    entry.value.char_indices().filter_map(move |(i, c)| {
        let starts = !c.is_whitespace()
            && entry.value[..i].chars().next_back().is_none_or(char::is_whitespace);
        starts.then(|| {
            let rest = &entry.value[i..];
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            (base + i, &rest[..end])
        })
    })
}

fn integer(entry: &Entry, column: usize, token: &str) -> Result<u64> {
    token
        .parse::<u64>()
        .map_err(|_| parse_error(entry.line, column, format!("expected a nonnegative integer, found `{token}`")))
}

fn integers(entry: &Entry) -> Result<Vec<u64>> {
    let values: Vec<u64> = tokens(entry).map(|(c, t)| integer(entry, c, t)).collect::<Result<_>>()?;
    if values.is_empty() {
        return Err(parse_error(entry.line, entry.column, "expected at least one integer"));
    }
    Ok(values)
}

fn pairs(entry: &Entry) -> Result<StaircaseIdeal> {
    let mut gens = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    let mut start = entry.column;
    let mut flush = |current: &mut Vec<u32>, column: usize| -> Result<()> {
        if current.len() != 2 {
            return Err(parse_error(entry.line, column, "expected an exponent pair `a b`"));
        }
        gens.push((current[0], current[1]));
        current.clear();
        Ok(())
    };
    for (column, token) in tokens(entry) {
        for (k, piece) in token.split(';').enumerate() {
            if k > 0 {
                flush(&mut current, start)?;
                start = column + 1;
            }
            if piece.is_empty() {
                continue;
            }
            let value = integer(entry, column, piece)?;
            let value = u32::try_from(value)
                .map_err(|_| parse_error(entry.line, column, "exponent too large"))?;
            if current.is_empty() {
                start = column;
            }
            current.push(value);
        }
    }
    flush(&mut current, start)?;
    Ok(StaircaseIdeal::new(gens))
}
