//! The plain classifier and its inference-relation view.

use crate::af::{grounded_extension, mine_af, ArgGraph, Extension};
use crate::casebase::{Casebase, NewCase, Outcome};
use crate::error::{Error, Result};
use crate::order::Characterisation;

pub const QUERY_ID: &str = "N";

#[derive(Clone, Debug)]
pub struct Prediction {
    pub outcome: Outcome,
    pub grounded: Extension,
    pub graph: ArgGraph,
    pub default_in_grounded: bool,
    /// Set when the casebase the prediction was made from is incoherent.
    pub incoherent: bool,
}

impl Prediction {
    /// Reads the outcome off a graph that already contains the new case.
    pub fn from_graph(graph: ArgGraph, incoherent: bool) -> Self {
        let grounded = grounded_extension(&graph);
        let default = graph
            .default_index()
            .expect("mined graphs carry the default argument");
        let default_in_grounded = grounded.contains(default);
        let outcome = if default_in_grounded {
            Outcome::Default
        } else {
            Outcome::NonDefault
        };
        Self {
            outcome,
            grounded,
            graph,
            default_in_grounded,
            incoherent,
        }
    }
}

/// Outcome for `n`: the default outcome iff the default argument is in the
/// grounded extension of the graph mined from `cb` and `n`.
pub fn predict(cb: &Casebase, n: &Characterisation) -> Prediction {
    let graph = mine_af(cb, Some(&NewCase::new(QUERY_ID, n.clone())));
    Prediction::from_graph(graph, !cb.is_coherent())
}

/// A sentence `(x, y)` or `¬(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Statement {
    pub characterisation: Characterisation,
    pub outcome: Outcome,
    pub negated: bool,
}

impl Statement {
    pub fn pos(characterisation: Characterisation, outcome: Outcome) -> Self {
        Self {
            characterisation,
            outcome,
            negated: false,
        }
    }

    pub fn neg(characterisation: Characterisation, outcome: Outcome) -> Self {
        Self {
            characterisation,
            outcome,
            negated: true,
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            negated: !self.negated,
            ..self.clone()
        }
    }

    /// Whether this sentence follows when `x` is classified as `predicted`.
    pub fn holds_for(&self, predicted: Outcome) -> bool {
        (predicted == self.outcome) != self.negated
    }

    /// The four sentences about `x`.
    pub fn all_about(x: &Characterisation) -> [Statement; 4] {
        [
            Statement::pos(x.clone(), Outcome::Default),
            Statement::pos(x.clone(), Outcome::NonDefault),
            Statement::neg(x.clone(), Outcome::Default),
            Statement::neg(x.clone(), Outcome::NonDefault),
        ]
    }
}

/// `cb ⊢ s` under the plain classifier.
pub fn infer(cb: &Casebase, s: &Statement) -> bool {
    s.holds_for(predict(cb, &s.characterisation).outcome)
}

/// If the nearest cases to `n` unanimously carry outcome `o`, returns `o`
/// after asserting that the plain classifier predicts `o` as well.
pub fn check_nearest_agreement(cb: &Casebase, n: &Characterisation) -> Result<Option<Outcome>> {
    if !cb.is_coherent() {
        return Err(Error::IncoherentCasebase(format!(
            "{} conflicting pair(s)",
            cb.conflicts().len()
        )));
    }
    let nearest = cb.nearest_cases(n);
    let Some(first) = nearest.first() else {
        return Ok(None);
    };
    let o = first.outcome;
    if nearest.iter().any(|c| c.outcome != o) {
        return Ok(None);
    }
    let predicted = predict(cb, n).outcome;
    assert_eq!(
        predicted, o,
        "nearest cases of {n} agree on {o:?} but the classifier predicts {predicted:?}"
    );
    Ok(Some(o))
}
