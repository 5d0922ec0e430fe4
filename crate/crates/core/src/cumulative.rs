//! Concise-subset learning and the cumulative classifier.
//!
//! A case is surprising w.r.t. a dataset when the plain classifier, trained on
//! the dataset without that case, gets its outcome wrong. A subset is concise
//! when it consists of exactly the cases of the full dataset that are
//! surprising w.r.t. it. For a coherent dataset that subset is unique, and it
//! is found by walking the dataset in strata of ⪯-minimal cases, keeping each
//! case only if the graph built so far mispredicts it.
//!
//! The cumulative classifier predicts with the plain one over the concise
//! subset. Because adding an inferred case never changes the concise subset,
//! it is cautiously monotonic.

use std::collections::BTreeSet;

use crate::af::{is_acyclic, mine_af, ArgGraph, Argument};
use crate::casebase::{Case, Casebase, NewCase, Outcome};
use crate::classifier::{predict, Prediction, QUERY_ID};
use crate::error::{Error, Result};
use crate::order::Characterisation;

/// One line of the learning audit: how a case was treated when its stratum
/// was processed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditEntry {
    pub case: Case,
    pub kept: bool,
    /// 1-based stratum number.
    pub stratum: usize,
    /// Outcome the concise-so-far graph predicted for the case.
    pub predicted: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConciseModel {
    source: Casebase,
    concise: Casebase,
    graph: ArgGraph,
    audit: Vec<AuditEntry>,
}

impl ConciseModel {
    pub fn source(&self) -> &Casebase {
        &self.source
    }

    pub fn concise(&self) -> &Casebase {
        &self.concise
    }

    /// Graph mined from the concise subset alone.
    pub fn graph(&self) -> &ArgGraph {
        &self.graph
    }

    pub fn audit(&self) -> &[AuditEntry] {
        &self.audit
    }

    pub fn stratum_count(&self) -> usize {
        self.audit.iter().map(|e| e.stratum).max().unwrap_or(0)
    }

    /// Case ids per stratum, in processing order.
    pub fn strata(&self) -> Vec<Vec<&Case>> {
        let mut out: Vec<Vec<&Case>> = vec![Vec::new(); self.stratum_count()];
        for e in &self.audit {
            out[e.stratum - 1].push(&e.case);
        }
        out
    }
}

/// `cb \ {c} ⊬ c` under the plain classifier.
pub fn is_surprising(cb: &Casebase, c: &Case) -> bool {
    predict(&cb.without(c), &c.characterisation).outcome != c.outcome
}

/// Extends `g` (mined from a coherent casebase) with the labelled case `n`.
///
/// `n` must not be strictly less specific than any argument already in `g`;
/// adding cases in non-decreasing specificity keeps every existing attack
/// valid, so only attacks from `n` need adding. Those go to the labelled
/// arguments that a probe `(n_C, ?)` defends and whose outcome differs from
/// `n`'s.
pub fn simple_add(g: &ArgGraph, n: &Case) -> Result<ArgGraph> {
    let base = g.labelled();
    if !is_acyclic(&base) {
        return Err(Error::IncoherentSource);
    }
    for a in base.arguments() {
        let existing = a.labelled().expect("labelled graph");
        if existing.characterisation == n.characterisation {
            if existing.outcome == n.outcome {
                return Ok(base);
            }
            return Err(Error::DuplicateCharacterisation(
                n.characterisation.to_string(),
            ));
        }
        if existing.characterisation.gt(&n.characterisation) {
            return Err(Error::OutOfOrder {
                added: n.to_string(),
                existing: existing.to_string(),
            });
        }
        if existing.id == n.id {
            return Err(Error::DuplicateId(n.id.clone()));
        }
    }

    let probe_graph = base.with_new_case(&NewCase::new(QUERY_ID, n.characterisation.clone()));
    let probe = probe_graph.new_case_index().expect("probe present");
    let defended: Vec<usize> = (0..base.len())
        .filter(|&a| {
            probe_graph
                .attacks_on(a)
                .iter()
                .all(|&b| probe_graph.attacks_pair(probe, b))
        })
        .collect();

    let added = base.len();
    let new_attacks: Vec<(usize, usize)> = defended
        .into_iter()
        .filter(|&a| base.argument(a).outcome() != Some(n.outcome))
        .map(|a| (added, a))
        .collect();
    let mut args = base.arguments().to_vec();
    args.push(Argument::Past(n.clone()));
    let attacks = base.attacks().iter().copied().chain(new_attacks);
    Ok(ArgGraph::from_parts(args, attacks))
}

/// Splits `cases` into successive layers of ⪯-minimal elements.
///
/// The order is held as a DAG with an edge from every case to each strictly
/// more specific one; each layer is the set of nodes whose predecessors have
/// all been emitted. Within a layer, cases are sorted by id.
pub fn strata(cases: &[Case]) -> Vec<Vec<Case>> {
    let n = cases.len();
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pending_below = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if cases[i].characterisation.lt(&cases[j].characterisation) {
                above[i].push(j);
                pending_below[j] += 1;
            }
        }
    }
    let mut layer: Vec<usize> = (0..n).filter(|&i| pending_below[i] == 0).collect();
    let mut out = Vec::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &i in &layer {
            for &j in &above[i] {
                pending_below[j] -= 1;
                if pending_below[j] == 0 {
                    next.push(j);
                }
            }
        }
        let mut stratum: Vec<Case> = layer.iter().map(|&i| cases[i].clone()).collect();
        stratum.sort_by(|a, b| a.id.cmp(&b.id));
        out.push(stratum);
        layer = next;
    }
    out
}

/// Learns the concise subset of a coherent casebase.
pub fn learn_concise(cb: &Casebase) -> Result<ConciseModel> {
    learn_concise_ordered(cb, |_| {})
}

/// [`learn_concise`] with a hook that may reorder each stratum before its
/// cases are tested and added. The result does not depend on the order.
pub fn learn_concise_ordered(
    cb: &Casebase,
    mut reorder: impl FnMut(&mut Vec<Case>),
) -> Result<ConciseModel> {
    if !cb.is_coherent() {
        return Err(Error::IncoherentCasebase(
            cb.conflicts()
                .iter()
                .map(|(a, b)| format!("{a} vs {b}"))
                .collect::<Vec<_>>()
                .join(", "),
        ));
    }
    let mut graph = mine_af(&Casebase::empty(cb.labels().clone()), None);
    let mut audit = Vec::with_capacity(cb.len());
    let mut kept: BTreeSet<String> = BTreeSet::new();

    for (k, mut stratum) in strata(cb.cases()).into_iter().enumerate() {
        reorder(&mut stratum);
        // Every member is tested against the same snapshot before any is added.
        let tested: Vec<(Case, Outcome)> = stratum
            .into_iter()
            .map(|c| {
                let predicted = outcome_on(&graph, &c.characterisation);
                (c, predicted)
            })
            .collect();
        for (case, predicted) in tested {
            let surprising = predicted != case.outcome;
            if surprising {
                graph = simple_add(&graph, &case)?;
                kept.insert(case.id.clone());
            }
            audit.push(AuditEntry {
                case,
                kept: surprising,
                stratum: k + 1,
                predicted,
            });
        }
    }

    let concise = cb.filter(|c| kept.contains(&c.id));
    debug_assert_eq!(graph, mine_af(&concise, None));
    Ok(ConciseModel {
        source: cb.clone(),
        concise,
        graph,
        audit,
    })
}

fn outcome_on(graph: &ArgGraph, n: &Characterisation) -> Outcome {
    Prediction::from_graph(
        graph.with_new_case(&NewCase::new(QUERY_ID, n.clone())),
        false,
    )
    .outcome
}

/// Plain prediction over the concise subset.
pub fn predict_cumulative(m: &ConciseModel, n: &Characterisation) -> Prediction {
    Prediction::from_graph(
        m.graph.with_new_case(&NewCase::new(QUERY_ID, n.clone())),
        false,
    )
}

pub const CONCISE_ENUMERATION_LIMIT: usize = 12;

/// Every subset `S` of `cb` such that the cases of `cb` surprising w.r.t. `S`
/// are exactly `S`, by enumerating all subsets. Intended as a test oracle.
pub fn concise_subsets_bruteforce(cb: &Casebase) -> Result<Vec<Vec<Case>>> {
    let cases = cb.cases();
    if cases.len() > CONCISE_ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            size: cases.len(),
            limit: CONCISE_ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << cases.len()) {
        let member = |i: usize| mask & (1 << i) != 0;
        let mut idx = 0;
        let subset = cb.filter(|_| {
            idx += 1;
            member(idx - 1)
        });
        let fixed = cases
            .iter()
            .enumerate()
            .all(|(i, c)| is_surprising(&subset, c) == member(i));
        if fixed {
            out.push(subset.cases().to_vec());
        }
    }
    Ok(out)
}
