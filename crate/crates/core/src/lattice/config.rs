//! Curve configurations: named curves with self-intersections and a sparse
//! table of pairwise intersection numbers.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::arith::Integer;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub name: String,
    pub self_intersection: Integer,
}

/// Curves in matrix order plus off-diagonal intersection numbers.
///
/// Pair keys are stored with the smaller name first, so the table is symmetric
/// by construction. Names in the table are not checked against the curve list
/// until [`super::gram`] runs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CurveConfig {
    curves: Vec<Curve>,
    pairings: BTreeMap<(String, String), Integer>,
}

fn key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_owned(), b.to_owned())
    } else {
        (b.to_owned(), a.to_owned())
    }
}

impl CurveConfig {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_curve(&mut self, name: &str, self_intersection: impl Into<Integer>) -> Result<()> {
        if self.index_of(name).is_some() {
            return Err(Error::DuplicateCurve(name.to_owned()));
        }
        self.curves.push(Curve { name: name.to_owned(), self_intersection: self_intersection.into() });
        Ok(())
    }

    /// Sets `a . b` for distinct curves; a zero value removes the entry.
    pub fn set_pairing(&mut self, a: &str, b: &str, value: impl Into<Integer>) -> Result<()> {
        if a == b {
            return Err(Error::Config {
                line: 0,
                message: format!("self-pairing of '{a}' belongs in the curve list"),
            });
        }
        let value = value.into();
        if value == Integer::from(0) {
            self.pairings.remove(&key(a, b));
        } else {
            self.pairings.insert(key(a, b), value);
        }
        Ok(())
    }

    pub fn pairing(&self, a: &str, b: &str) -> Integer {
        if a == b {
            return self
                .curves
                .iter()
                .find(|c| c.name == a)
                .map_or_else(|| Integer::from(0), |c| c.self_intersection.clone());
        }
        self.pairings.get(&key(a, b)).cloned().unwrap_or_default()
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.curves.iter().position(|c| c.name == name)
    }

    pub fn pairings(&self) -> impl Iterator<Item = (&str, &str, &Integer)> {
        self.pairings.iter().map(|((a, b), v)| (a.as_str(), b.as_str(), v))
    }

    /// Drops a curve together with every pairing that mentions it.
    pub fn without(&self, name: &str) -> Self {
        Self {
            curves: self.curves.iter().filter(|c| c.name != name).cloned().collect(),
            pairings: self
                .pairings
                .iter()
                .filter(|((a, b), _)| a != name && b != name)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Curves,
    Pairs,
}

fn parse_integer(tok: &str, line: usize) -> Result<Integer> {
    tok.parse::<Integer>()
        .map_err(|_| Error::Config { line, message: format!("expected an integer, found '{tok}'") })
}

/// Parses the `curves:` / `pairs:` text format. Line numbers in errors are 1-based.
pub fn parse_curve_config(text: &str) -> Result<CurveConfig> {
    let mut cfg = CurveConfig::new();
    let mut section = Section::None;
    let mut seen_pairs = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        match body {
            "curves:" => {
                section = Section::Curves;
                continue;
            }
            "pairs:" => {
                section = Section::Pairs;
                continue;
            }
            _ => {}
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let bad = |message: String| Error::Config { line, message };
        match section {
            Section::None => return Err(bad("entry before a 'curves:' or 'pairs:' header".into())),
            Section::Curves => {
                let [name, value] = toks[..] else {
                    return Err(bad(format!("expected 'name self_intersection', found '{body}'")));
                };
                cfg.add_curve(name, parse_integer(value, line)?)
                    .map_err(|_| bad(format!("curve '{name}' declared twice")))?;
            }
            Section::Pairs => {
                let [a, b, value] = toks[..] else {
                    return Err(bad(format!("expected 'name name value', found '{body}'")));
                };
                if !seen_pairs.insert(key(a, b)) {
                    return Err(bad(format!("pair ({a}, {b}) listed twice")));
                }
                cfg.set_pairing(a, b, parse_integer(value, line)?).map_err(|e| match e {
                    Error::Config { message, .. } => bad(message),
                    other => other,
                })?;
            }
        }
    }
    Ok(cfg)
}

impl FromStr for CurveConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_curve_config(s)
    }
}

impl fmt::Display for CurveConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "curves:")?;
        for c in &self.curves {
            writeln!(f, "{} {}", c.name, c.self_intersection)?;
        }
        writeln!(f, "pairs:")?;
        for (a, b, v) in self.pairings() {
            writeln!(f, "{a} {b} {v}")?;
        }
        Ok(())
    }
}
