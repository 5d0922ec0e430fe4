//! Uniform access to the plain and cumulative classifiers.

use std::fmt;
use std::str::FromStr;

use crate::af::{mine_af, ArgGraph};
use crate::casebase::{Casebase, NewCase, Outcome};
use crate::classifier::{Prediction, QUERY_ID};
use crate::cumulative::{learn_concise, predict_cumulative, ConciseModel};
use crate::error::{Error, Result};
use crate::order::Characterisation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Plain,
    Cumulative,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Plain => "plain",
            Engine::Cumulative => "cumulative",
        }
    }

    /// Prepares a classifier for `cb`. The cumulative engine rejects
    /// incoherent casebases.
    pub fn fit(self, cb: &Casebase) -> Result<Model> {
        match self {
            Engine::Plain => Ok(Model::Plain {
                graph: mine_af(cb, None),
                incoherent: !cb.is_coherent(),
            }),
            Engine::Cumulative => learn_concise(cb).map(Model::Cumulative),
        }
    }

    /// One-shot classification; prefer [`Engine::fit`] for repeated queries.
    pub fn classify(self, cb: &Casebase, n: &Characterisation) -> Result<Outcome> {
        Ok(self.fit(cb)?.outcome(n))
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Engine::Plain),
            "cumulative" => Ok(Engine::Cumulative),
            other => Err(Error::Parse(format!("unknown engine `{other}`"))),
        }
    }
}

/// A fitted classifier. The plain variant caches the graph mined from the
/// casebase alone; queries only add the new case's attacks.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Model {
    Plain { graph: ArgGraph, incoherent: bool },
    Cumulative(ConciseModel),
}

impl Model {
    pub fn predict(&self, n: &Characterisation) -> Prediction {
        match self {
            Model::Plain { graph, incoherent } => Prediction::from_graph(
                graph.with_new_case(&NewCase::new(QUERY_ID, n.clone())),
                *incoherent,
            ),
            Model::Cumulative(m) => predict_cumulative(m, n),
        }
    }

    pub fn outcome(&self, n: &Characterisation) -> Outcome {
        self.predict(n).outcome
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::predict;
    use crate::fixtures::*;

    #[test]
    fn cached_plain_model_matches_direct_prediction() {
        let cb = monotonicity_extended();
        let model = Engine::Plain.fit(&cb).unwrap();
        for q in [
            ch(&[]),
            ch(&["a"]),
            ch(&["a", "b", "c"]),
            ch(&["a", "b", "c", "z"]),
        ] {
            let direct = predict(&cb, &q);
            let cached = model.predict(&q);
            assert_eq!(direct.outcome, cached.outcome);
            assert_eq!(direct.graph, cached.graph);
        }
    }

    #[test]
    fn engines_disagree_on_the_counterexample() {
        let cb = monotonicity_extended();
        let q = monotonicity_second_query();
        assert_eq!(
            Engine::Plain.classify(&cb, &q).unwrap(),
            Outcome::NonDefault
        );
        assert_eq!(
            Engine::Cumulative.classify(&cb, &q).unwrap(),
            Outcome::Default
        );
    }

    #[test]
    fn parse_names() {
        assert_eq!("plain".parse::<Engine>().unwrap(), Engine::Plain);
        assert_eq!("cumulative".parse::<Engine>().unwrap(), Engine::Cumulative);
        assert!("fancy".parse::<Engine>().is_err());
    }
}
