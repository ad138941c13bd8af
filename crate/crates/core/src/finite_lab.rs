//! Finite versions of the "someone is wrong" paradoxes, decided by brute
//! force over all truth-value assignments to `n` speakers.
//!
//! Assignments are enumerated in lexicographic order with `F < T`, speaker 1
//! most significant.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub const MAX_SPEAKERS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ParadoxKind {
    /// Everyone says "someone is wrong".
    SomeoneWrong,
    /// Everyone says "someone else is wrong".
    SomeoneElseWrong,
    /// Speaker `k` says "at least `k` people are wrong".
    AtLeastK,
}

impl ParadoxKind {
    pub const ALL: [ParadoxKind; 3] = [
        ParadoxKind::SomeoneWrong,
        ParadoxKind::SomeoneElseWrong,
        ParadoxKind::AtLeastK,
    ];

    /// Whether speaker `i` (0-based) tells the truth when `wrong` speakers
    /// are assigned false.
    fn says_truly(self, v: &[bool], wrong: usize, i: usize) -> bool {
        match self {
            ParadoxKind::SomeoneWrong => wrong > 0,
            ParadoxKind::SomeoneElseWrong => wrong - usize::from(!v[i]) > 0,
            ParadoxKind::AtLeastK => wrong > i,
        }
    }

    /// Every speaker's claim is true exactly when that speaker is assigned true.
    pub fn is_consistent(self, v: &[bool]) -> bool {
        let wrong = v.iter().filter(|b| !**b).count();
        (0..v.len()).all(|i| v[i] == self.says_truly(v, wrong, i))
    }
}

impl fmt::Display for ParadoxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("number of speakers must be between 1 and {MAX_SPEAKERS}, got {0}")]
    Speakers(usize),
    #[error("unknown paradox kind {0:?} (expected 1, 2 or 3)")]
    Kind(String),
}

/// Accepts `1`, `2`, `3` or the variant name.
impl FromStr for ParadoxKind {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" | "SomeoneWrong" => Ok(ParadoxKind::SomeoneWrong),
            "2" | "SomeoneElseWrong" => Ok(ParadoxKind::SomeoneElseWrong),
            "3" | "AtLeastK" => Ok(ParadoxKind::AtLeastK),
            _ => Err(LabError::Kind(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelClass {
    Paradoxical,
    Determinate,
    Indeterminate,
}

impl ModelClass {
    pub fn from_count(models: usize) -> ModelClass {
        match models {
            0 => ModelClass::Paradoxical,
            1 => ModelClass::Determinate,
            _ => ModelClass::Indeterminate,
        }
    }
}

impl fmt::Display for ModelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelClass::Paradoxical => "paradoxical",
            ModelClass::Determinate => "determinate",
            ModelClass::Indeterminate => "indeterminate",
        })
    }
}

fn check_n(n: usize) -> Result<(), LabError> {
    if (1..=MAX_SPEAKERS).contains(&n) {
        Ok(())
    } else {
        Err(LabError::Speakers(n))
    }
}

pub fn consistent_assignments(kind: ParadoxKind, n: usize) -> Result<Vec<Vec<bool>>, LabError> {
    check_n(n)?;
    let mut v = vec![false; n];
    let mut models = Vec::new();
    for bits in 0u32..(1 << n) {
        for (i, b) in v.iter_mut().enumerate() {
            *b = bits >> (n - 1 - i) & 1 == 1;
        }
        if kind.is_consistent(&v) {
            models.push(v.clone());
        }
    }
    Ok(models)
}

pub fn classify_paradox(kind: ParadoxKind, n: usize) -> Result<ModelClass, LabError> {
    Ok(ModelClass::from_count(
        consistent_assignments(kind, n)?.len(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    pub kind: ParadoxKind,
    pub n: usize,
    pub models: Vec<Vec<bool>>,
    pub classification: ModelClass,
}

impl ModelReport {
    pub fn new(kind: ParadoxKind, n: usize) -> Result<ModelReport, LabError> {
        let models = consistent_assignments(kind, n)?;
        Ok(ModelReport {
            kind,
            n,
            classification: ModelClass::from_count(models.len()),
            models,
        })
    }

    /// Summary lines, plus one `T`/`F` row per model when `table` is set.
    pub fn render(&self, table: bool) -> String {
        let mut out = format!(
            "kind: {}\nn: {}\nmodels: {}\nclassification: {}\n",
            self.kind,
            self.n,
            self.models.len(),
            self.classification
        );
        if table {
            for m in &self.models {
                let row: Vec<&str> = m.iter().map(|b| if *b { "T" } else { "F" }).collect();
                out += &row.join(" ");
                out.push('\n');
            }
        }
        out
    }
}
