//! JSON file formats: casebases, query lists, prediction records and the
//! concise-learning audit.
//!
//! Casebase file:
//!
//! ```json
//! {
//!   "default_outcome": "-",
//!   "nondefault_outcome": "+",
//!   "default_features": [],
//!   "cases": [
//!     { "id": "hm", "features": ["hm"], "outcome": "+" },
//!     { "features": ["hm", "sd"], "outcome": "-" }
//!   ]
//! }
//! ```
//!
//! Unknown keys are rejected. Cases without an id get `c<position>`; queries
//! without an id get `q<position>`.

use serde::{Deserialize, Serialize};

use crate::casebase::{Case, Casebase, Labels, NewCase};
use crate::cumulative::AuditEntry;
use crate::error::{Error, Result};
use crate::order::Characterisation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CasebaseFile {
    pub default_outcome: String,
    pub nondefault_outcome: String,
    #[serde(default)]
    pub default_features: Vec<String>,
    pub cases: Vec<CaseRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub features: Vec<String>,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub features: Vec<String>,
}

impl CasebaseFile {
    pub fn to_casebase(&self) -> Result<Casebase> {
        let labels = Labels::new(
            self.default_outcome.clone(),
            self.nondefault_outcome.clone(),
        )?;
        let cases = self
            .cases
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let outcome = labels.parse(&r.outcome).ok_or_else(|| {
                    Error::Parse(format!(
                        "case {i}: outcome `{}` is neither `{}` nor `{}`",
                        r.outcome, self.default_outcome, self.nondefault_outcome
                    ))
                })?;
                let id = r.id.clone().unwrap_or_else(|| format!("c{i}"));
                Ok(Case::new(
                    id,
                    Characterisation::new(r.features.iter().cloned()),
                    outcome,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Casebase::new(
            labels,
            cases,
            Characterisation::new(self.default_features.iter().cloned()),
        )
    }

    /// Cases are written sorted by id with features sorted.
    pub fn from_casebase(cb: &Casebase) -> Self {
        let labels = cb.labels();
        Self {
            default_outcome: labels.default_label().to_string(),
            nondefault_outcome: labels.non_default_label().to_string(),
            default_features: cb
                .default_case()
                .characterisation
                .features()
                .iter()
                .cloned()
                .collect(),
            cases: cb
                .cases()
                .iter()
                .map(|c| CaseRecord {
                    id: Some(c.id.clone()),
                    features: c.characterisation.features().iter().cloned().collect(),
                    outcome: labels.label(c.outcome).to_string(),
                })
                .collect(),
        }
    }
}

pub fn parse_casebase(text: &str) -> Result<Casebase> {
    let file: CasebaseFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("casebase: {e}")))?;
    file.to_casebase()
}

pub fn casebase_to_json(cb: &Casebase) -> String {
    let mut s = serde_json::to_string_pretty(&CasebaseFile::from_casebase(cb))
        .expect("casebase serializes");
    s.push('\n');
    s
}

pub fn parse_queries(text: &str) -> Result<Vec<NewCase>> {
    let records: Vec<QueryRecord> =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("queries: {e}")))?;
    Ok(records
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            let id = r.id.unwrap_or_else(|| format!("q{i}"));
            NewCase::new(id, Characterisation::new(r.features))
        })
        .collect())
}

/// Accepts `a,b,c` (whitespace around names ignored); the empty string is `{}`.
pub fn parse_feature_list(text: &str) -> Characterisation {
    text.split(',')
        .map(str::trim)
        .filter(|f| !f.is_empty())
        .collect()
}

/// One line of `predict` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionRecord {
    pub id: String,
    pub outcome: String,
    pub default_in_grounded: bool,
    pub engine: String,
}

/// One line of the concise-learning audit sidecar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub id: String,
    pub features: Vec<String>,
    pub outcome: String,
    pub predicted: String,
    pub kept: bool,
    pub stratum: usize,
}

impl AuditRecord {
    pub fn new(entry: &AuditEntry, labels: &Labels) -> Self {
        Self {
            id: entry.case.id.clone(),
            features: entry
                .case
                .characterisation
                .features()
                .iter()
                .cloned()
                .collect(),
            outcome: labels.label(entry.case.outcome).to_string(),
            predicted: labels.label(entry.predicted).to_string(),
            kept: entry.kept,
            stratum: entry.stratum,
        }
    }
}

/// Serializes each item as one JSON line.
pub fn to_json_lines<T: Serialize>(items: impl IntoIterator<Item = T>) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(&item).expect("record serializes"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::casebase::Outcome;

    const LEGAL: &str = r#"{
        "default_outcome": "not-guilty",
        "nondefault_outcome": "guilty",
        "default_features": [],
        "cases": [
            {"id": "hm", "features": ["hm"], "outcome": "guilty"},
            {"features": ["hm", "sd"], "outcome": "not-guilty"}
        ]
    }"#;

    #[test]
    fn parses_labels_and_auto_ids() {
        let cb = parse_casebase(LEGAL).unwrap();
        assert_eq!(cb.labels().label(Outcome::NonDefault), "guilty");
        assert_eq!(cb.get("hm").unwrap().outcome, Outcome::NonDefault);
        assert_eq!(cb.get("c1").unwrap().outcome, Outcome::Default);
    }

    #[test]
    fn round_trip_preserves_content() {
        let cb = parse_casebase(LEGAL).unwrap();
        let again = parse_casebase(&casebase_to_json(&cb)).unwrap();
        assert_eq!(cb, again);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = r#"{"default_outcome":"-","nondefault_outcome":"+","cases":[],"extra":1}"#;
        assert!(matches!(parse_casebase(text), Err(Error::Parse(_))));
        let text = r#"{"default_outcome":"-","nondefault_outcome":"+","cases":[{"features":[],"outcome":"+","weight":2}]}"#;
        assert!(matches!(parse_casebase(text), Err(Error::Parse(_))));
    }

    #[test]
    fn foreign_outcome_is_rejected() {
        let text = r#"{"default_outcome":"-","nondefault_outcome":"+","cases":[{"features":["a"],"outcome":"?"}]}"#;
        assert!(matches!(parse_casebase(text), Err(Error::Parse(_))));
    }

    #[test]
    fn non_empty_default_is_rejected() {
        let text = r#"{"default_outcome":"-","nondefault_outcome":"+","default_features":["a"],"cases":[]}"#;
        assert!(matches!(
            parse_casebase(text),
            Err(Error::DefaultNotLeast(_))
        ));
    }

    #[test]
    fn queries_get_positional_ids() {
        let qs = parse_queries(r#"[{"id":"x","features":["a"]},{"features":["b","c"]}]"#).unwrap();
        assert_eq!(qs[0].id, "x");
        assert_eq!(qs[1].id, "q1");
        assert_eq!(qs[1].characterisation.len(), 2);
    }

    #[test]
    fn feature_lists() {
        assert_eq!(parse_feature_list("a, b,c").len(), 3);
        assert!(parse_feature_list("").is_empty());
    }
}
