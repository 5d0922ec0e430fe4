//! Cases, outcomes and validated casebases.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::Characterisation;

/// Outcome role. The concrete label strings live in [`Labels`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Default,
    NonDefault,
}

impl Outcome {
    pub fn flip(self) -> Self {
        match self {
            Outcome::Default => Outcome::NonDefault,
            Outcome::NonDefault => Outcome::Default,
        }
    }

    pub const BOTH: [Outcome; 2] = [Outcome::Default, Outcome::NonDefault];
}

/// The two outcome strings of a casebase, e.g. `-`/`+` or `not-guilty`/`guilty`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labels {
    default: String,
    non_default: String,
}

impl Labels {
    pub fn new(default: impl Into<String>, non_default: impl Into<String>) -> Result<Self> {
        let default = default.into();
        let non_default = non_default.into();
        if default == non_default {
            return Err(Error::SameLabels(default));
        }
        Ok(Self {
            default,
            non_default,
        })
    }

    pub fn default_label(&self) -> &str {
        &self.default
    }

    pub fn non_default_label(&self) -> &str {
        &self.non_default
    }

    pub fn label(&self, outcome: Outcome) -> &str {
        match outcome {
            Outcome::Default => &self.default,
            Outcome::NonDefault => &self.non_default,
        }
    }

    pub fn parse(&self, label: &str) -> Option<Outcome> {
        if label == self.default {
            Some(Outcome::Default)
        } else if label == self.non_default {
            Some(Outcome::NonDefault)
        } else {
            None
        }
    }
}

impl Default for Labels {
    /// `-` as the default outcome, `+` as the other.
    fn default() -> Self {
        Self {
            default: "-".into(),
            non_default: "+".into(),
        }
    }
}

/// A labelled past case.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Case {
    pub id: String,
    pub characterisation: Characterisation,
    pub outcome: Outcome,
}

impl Case {
    pub fn new(
        id: impl Into<String>,
        characterisation: Characterisation,
        outcome: Outcome,
    ) -> Self {
        Self {
            id: id.into(),
            characterisation,
            outcome,
        }
    }

    /// Same characterisation and outcome, ignoring the id.
    pub fn same_content(&self, other: &Case) -> bool {
        self.outcome == other.outcome && self.characterisation == other.characterisation
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.outcome {
            Outcome::Default => "δ",
            Outcome::NonDefault => "δ̄",
        };
        write!(f, "{}({}:{})", self.id, self.characterisation, o)
    }
}

/// An unlabelled query.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NewCase {
    pub id: String,
    pub characterisation: Characterisation,
}

impl NewCase {
    pub fn new(id: impl Into<String>, characterisation: Characterisation) -> Self {
        Self {
            id: id.into(),
            characterisation,
        }
    }
}

/// Validated set of past cases plus the default argument.
///
/// Cases are kept sorted by id. Exact duplicates are merged; contradictory
/// duplicates are kept and only clear the coherence flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Casebase {
    labels: Labels,
    cases: Vec<Case>,
    default_case: Case,
    coherent: bool,
}

pub const DEFAULT_ID: &str = "default";

impl Casebase {
    /// Validates `cases` against a default argument with `default_characterisation`.
    pub fn new(
        labels: Labels,
        cases: Vec<Case>,
        default_characterisation: Characterisation,
    ) -> Result<Self> {
        if !default_characterisation.is_empty() {
            return Err(Error::DefaultNotLeast(default_characterisation.to_string()));
        }
        let default_case = Case::new(DEFAULT_ID, default_characterisation, Outcome::Default);

        let mut seen: BTreeSet<(Characterisation, Outcome)> = BTreeSet::new();
        let mut by_id: BTreeMap<String, Case> = BTreeMap::new();
        for case in cases {
            if !seen.insert((case.characterisation.clone(), case.outcome)) {
                continue;
            }
            if case.id == DEFAULT_ID || by_id.contains_key(&case.id) {
                return Err(Error::DuplicateId(case.id));
            }
            by_id.insert(case.id.clone(), case);
        }
        let cases: Vec<Case> = by_id.into_values().collect();
        let coherent = coherence_conflicts(&cases, &default_case).is_empty();
        Ok(Self {
            labels,
            cases,
            default_case,
            coherent,
        })
    }

    pub fn empty(labels: Labels) -> Self {
        Self::new(labels, Vec::new(), Characterisation::empty()).expect("empty casebase is valid")
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn cases(&self) -> &[Case] {
        &self.cases
    }

    pub fn default_case(&self) -> &Case {
        &self.default_case
    }

    pub fn len(&self) -> usize {
        self.cases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cases.is_empty()
    }

    pub fn is_coherent(&self) -> bool {
        self.coherent
    }

    pub fn get(&self, id: &str) -> Option<&Case> {
        self.cases
            .binary_search_by(|c| c.id.as_str().cmp(id))
            .ok()
            .map(|i| &self.cases[i])
    }

    /// Pairs of arguments (default included) sharing a characterisation with
    /// different outcomes.
    pub fn conflicts(&self) -> Vec<(Case, Case)> {
        coherence_conflicts(&self.cases, &self.default_case)
    }

    pub fn has_characterisation(&self, c: &Characterisation) -> bool {
        self.cases.iter().any(|k| &k.characterisation == c)
    }

    /// A copy with `case` added (revalidated).
    pub fn with_case(&self, case: Case) -> Result<Self> {
        let mut cases = self.cases.clone();
        cases.push(case);
        Self::new(
            self.labels.clone(),
            cases,
            self.default_case.characterisation.clone(),
        )
    }

    /// A copy without any case equal in content to `case`.
    pub fn without(&self, case: &Case) -> Self {
        self.filter(|c| !c.same_content(case))
    }

    pub fn filter(&self, mut keep: impl FnMut(&Case) -> bool) -> Self {
        Self {
            labels: self.labels.clone(),
            cases: self.cases.iter().filter(|c| keep(c)).cloned().collect(),
            default_case: self.default_case.clone(),
            coherent: false,
        }
        .recompute_coherence()
    }

    /// Cases with characterisation `⪯ n`.
    pub fn restrict_below(&self, n: &Characterisation) -> Self {
        self.filter(|c| n.geq(&c.characterisation))
    }

    /// An id not used by any stored case, of the form `<prefix><k>`.
    pub fn fresh_id(&self, prefix: &str) -> String {
        (self.cases.len()..)
            .map(|k| format!("{prefix}{k}"))
            .find(|id| self.get(id).is_none() && id != DEFAULT_ID)
            .expect("unbounded search")
    }

    /// Maximally specific stored cases that are still `⪯ n`. The default
    /// argument is never returned.
    pub fn nearest_cases(&self, n: &Characterisation) -> Vec<&Case> {
        let below: Vec<&Case> = self
            .cases
            .iter()
            .filter(|c| n.geq(&c.characterisation))
            .collect();
        below
            .iter()
            .filter(|a| {
                !below
                    .iter()
                    .any(|b| b.characterisation.gt(&a.characterisation))
            })
            .copied()
            .collect()
    }

    fn recompute_coherence(mut self) -> Self {
        self.coherent = coherence_conflicts(&self.cases, &self.default_case).is_empty();
        self
    }
}

fn coherence_conflicts(cases: &[Case], default_case: &Case) -> Vec<(Case, Case)> {
    let mut by_char: BTreeMap<&Characterisation, Vec<&Case>> = BTreeMap::new();
    by_char
        .entry(&default_case.characterisation)
        .or_default()
        .push(default_case);
    for c in cases {
        by_char.entry(&c.characterisation).or_default().push(c);
    }
    let mut out = Vec::new();
    for group in by_char.values() {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                if a.outcome != b.outcome {
                    out.push(((*a).clone(), (*b).clone()));
                }
            }
        }
    }
    out
}
