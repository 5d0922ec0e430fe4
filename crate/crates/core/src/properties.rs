//! Seeded audit harness for the non-monotonicity properties of a classifier
//! read as an inference relation (`D ⊢ (x, y)` iff the classifier trained on
//! `D` predicts `y` for `x`).
//!
//! Every schema adds at most one case, always with a characterisation not
//! already stored in the casebase. Casebases come from [`gen_casebase`], which
//! draws from ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`), a portable
//! stream cipher PRNG; trial `t` of a run with seed `s` uses seed `s + t`
//! (wrapping), so any reported counterexample can be regenerated in isolation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::casebase::{Case, Casebase, Labels, Outcome};
use crate::classifier::Statement;
use crate::engine::{Engine, Model};
use crate::error::{Error, Result};
use crate::format::CasebaseFile;
use crate::order::{powerset, Characterisation};

pub const MAX_UNIVERSE: usize = 8;
pub const DEFAULT_SAMPLE: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub feature_universe: Vec<String>,
    pub case_count: usize,
    pub default_label: String,
    pub other_label: String,
    pub seed: u64,
}

impl GeneratorConfig {
    /// Universe `f0..f{features-1}`, labels `-` (default) and `+`.
    pub fn new(features: usize, case_count: usize, seed: u64) -> Self {
        Self {
            feature_universe: (0..features).map(|i| format!("f{i}")).collect(),
            case_count,
            default_label: "-".into(),
            other_label: "+".into(),
            seed,
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        Self {
            seed,
            ..self.clone()
        }
    }

    fn labels(&self) -> Result<Labels> {
        Labels::new(self.default_label.clone(), self.other_label.clone())
    }

    fn validate(&self) -> Result<()> {
        let n = self.feature_universe.len();
        if n == 0 || n > MAX_UNIVERSE {
            return Err(Error::InvalidConfig(format!(
                "feature universe must hold 1..={MAX_UNIVERSE} features, got {n}"
            )));
        }
        let mut sorted = self.feature_universe.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::InvalidConfig("duplicate feature names".into()));
        }
        if self.case_count > 1 << n {
            return Err(Error::UniverseTooSmall {
                universe: n,
                cases: self.case_count,
            });
        }
        Ok(())
    }
}

/// A coherent casebase of `case_count` distinct subsets of the universe.
///
/// Outcomes are uniform, except that the empty characterisation (if drawn)
/// always carries the default outcome so that it agrees with the default
/// argument.
pub fn gen_casebase(cfg: &GeneratorConfig) -> Result<Casebase> {
    cfg.validate()?;
    let labels = cfg.labels()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let all = powerset(&cfg.feature_universe);
    let mut picked = sample(&mut rng, all.len(), cfg.case_count).into_vec();
    picked.sort_unstable();
    let cases = picked
        .into_iter()
        .enumerate()
        .map(|(k, i)| {
            let characterisation = all[i].clone();
            let outcome = if characterisation.is_empty() || rng.gen_bool(0.5) {
                Outcome::Default
            } else {
                Outcome::NonDefault
            };
            Case::new(format!("c{k}"), characterisation, outcome)
        })
        .collect();
    Casebase::new(labels, cases, Characterisation::empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    CautiousMonotonicity,
    Cut,
    Cumulativity,
    RationalMonotonicity,
    Completeness,
    Consistency,
    /// Restricting the casebase to cases below the query, or adding a case
    /// not below it, leaves the prediction unchanged.
    Locality,
    /// When all nearest cases agree on an outcome, that outcome is predicted.
    NearestAgreement,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::CautiousMonotonicity,
        Property::Cut,
        Property::Cumulativity,
        Property::RationalMonotonicity,
        Property::Completeness,
        Property::Consistency,
        Property::Locality,
        Property::NearestAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::CautiousMonotonicity => "cautious-monotonicity",
            Property::Cut => "cut",
            Property::Cumulativity => "cumulativity",
            Property::RationalMonotonicity => "rational-monotonicity",
            Property::Completeness => "completeness",
            Property::Consistency => "consistency",
            Property::Locality => "locality",
            Property::NearestAgreement => "nearest-agreement",
        }
    }

    fn uses_pairs(self) -> bool {
        matches!(
            self,
            Property::CautiousMonotonicity
                | Property::Cut
                | Property::Cumulativity
                | Property::RationalMonotonicity
        )
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = match s.replace('_', "-").as_str() {
            "cm" => "cautious-monotonicity".to_string(),
            "rm" => "rational-monotonicity".to_string(),
            other => other.to_string(),
        };
        Property::ALL
            .into_iter()
            .find(|p| p.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown property `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryMode {
    /// Every characterisation over the universe.
    Exhaustive,
    /// `k` characterisations drawn without replacement from the fresh ones.
    Sampled(usize),
}

/// A replayable failure: on `casebase`, the query statement `query` (what
/// held before) went from `before` to `after` once `added` was included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub casebase: Casebase,
    pub added: Option<Statement>,
    pub query: Statement,
    pub before: Outcome,
    pub after: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub engine: Engine,
    pub trials: usize,
    /// Individual instances checked (query pairs, queries or statements).
    pub checks: usize,
    pub violations: Vec<Counterexample>,
    pub exhaustive: bool,
    /// Candidate additions skipped because their characterisation was stored.
    pub skipped_stored: usize,
    /// Pair instances where cautious monotonicity or cut failed.
    pub cm_cut_failures: usize,
    /// Of those, instances where exactly one of the two failed.
    pub cm_cut_disagreements: usize,
}

impl PropertyReport {
    fn empty(property: Property, engine: Engine, exhaustive: bool) -> Self {
        Self {
            property,
            engine,
            trials: 0,
            checks: 0,
            violations: Vec::new(),
            exhaustive,
            skipped_stored: 0,
            cm_cut_failures: 0,
            cm_cut_disagreements: 0,
        }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// Folds `other` (same property and engine) into `self`.
    pub fn merge(&mut self, other: PropertyReport) {
        debug_assert_eq!(self.property, other.property);
        self.trials += other.trials;
        self.checks += other.checks;
        self.violations.extend(other.violations);
        self.exhaustive &= other.exhaustive;
        self.skipped_stored += other.skipped_stored;
        self.cm_cut_failures += other.cm_cut_failures;
        self.cm_cut_disagreements += other.cm_cut_disagreements;
    }

    /// Summary line followed by one line per counterexample.
    pub fn to_json_lines(&self) -> String {
        let summary = ReportSummary {
            kind: "report",
            property: self.property.name(),
            engine: self.engine.name(),
            trials: self.trials,
            checks: self.checks,
            violations: self.violations.len(),
            exhaustive: self.exhaustive,
            skipped_stored: self.skipped_stored,
            cm_cut_failures: self.cm_cut_failures,
            cm_cut_disagreements: self.cm_cut_disagreements,
        };
        let mut out = serde_json::to_string(&summary).expect("summary serializes");
        out.push('\n');
        for cx in &self.violations {
            let labels = cx.casebase.labels();
            let line = CounterexampleLine {
                kind: "counterexample",
                casebase: CasebaseFile::from_casebase(&cx.casebase),
                added: cx.added.as_ref().map(|s| StatementLine::new(s, labels)),
                query: StatementLine::new(&cx.query, labels),
                before: labels.label(cx.before),
                after: labels.label(cx.after),
            };
            out.push_str(&serde_json::to_string(&line).expect("counterexample serializes"));
            out.push('\n');
        }
        out
    }
}

#[derive(Serialize)]
struct ReportSummary<'a> {
    kind: &'a str,
    property: &'a str,
    engine: &'a str,
    trials: usize,
    checks: usize,
    violations: usize,
    exhaustive: bool,
    skipped_stored: usize,
    cm_cut_failures: usize,
    cm_cut_disagreements: usize,
}

#[derive(Serialize)]
struct CounterexampleLine<'a> {
    kind: &'a str,
    casebase: CasebaseFile,
    added: Option<StatementLine<'a>>,
    query: StatementLine<'a>,
    before: &'a str,
    after: &'a str,
}

#[derive(Serialize)]
struct StatementLine<'a> {
    features: Vec<String>,
    outcome: &'a str,
    negated: bool,
}

impl<'a> StatementLine<'a> {
    fn new(s: &Statement, labels: &'a Labels) -> Self {
        Self {
            features: s.characterisation.features().iter().cloned().collect(),
            outcome: labels.label(s.outcome),
            negated: s.negated,
        }
    }
}

/// Which queries to check on a single casebase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuerySet {
    /// All ordered pairs of distinct members (pair properties) or each member.
    Queries(Vec<Characterisation>),
    /// Explicit `(n_1, n_2)` pairs.
    Pairs(Vec<(Characterisation, Characterisation)>),
}

/// Runs `trials` generated casebases (seeds `cfg.seed + t`) through the
/// property's schema.
pub fn check_property(
    engine: Engine,
    property: Property,
    cfg: &GeneratorConfig,
    trials: usize,
    mode: QueryMode,
) -> Result<PropertyReport> {
    cfg.validate()?;
    let universe = powerset(&cfg.feature_universe);
    let per_trial: Vec<PropertyReport> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let trial_cfg = cfg.with_seed(cfg.seed.wrapping_add(t as u64));
            let cb = gen_casebase(&trial_cfg)?;
            let stored = universe
                .iter()
                .filter(|n| cb.has_characterisation(n))
                .count();
            let queries = match property {
                // Pure read-only checks look at every characterisation.
                p if !p.uses_pairs() => match mode {
                    QueryMode::Exhaustive => universe.clone(),
                    QueryMode::Sampled(k) => sample_queries(&universe, k, trial_cfg.seed),
                },
                _ => {
                    let fresh: Vec<Characterisation> = universe
                        .iter()
                        .filter(|n| !cb.has_characterisation(n))
                        .cloned()
                        .collect();
                    match mode {
                        QueryMode::Exhaustive => fresh,
                        QueryMode::Sampled(k) => sample_queries(&fresh, k, trial_cfg.seed),
                    }
                }
            };
            let mut report = check_casebase(engine, property, &cb, &QuerySet::Queries(queries))?;
            report.exhaustive = mode == QueryMode::Exhaustive;
            if property.uses_pairs() {
                report.skipped_stored = stored;
            }
            Ok(report)
        })
        .collect::<Result<_>>()?;

    let mut total = PropertyReport::empty(property, engine, mode == QueryMode::Exhaustive);
    for r in per_trial {
        total.merge(r);
    }
    Ok(total)
}

fn sample_queries(pool: &[Characterisation], k: usize, seed: u64) -> Vec<Characterisation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    let mut idx = sample(&mut rng, pool.len(), k.min(pool.len())).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|i| pool[i].clone()).collect()
}

/// Checks one property on one casebase; counts as a single trial.
pub fn check_casebase(
    engine: Engine,
    property: Property,
    cb: &Casebase,
    queries: &QuerySet,
) -> Result<PropertyReport> {
    let mut report = PropertyReport::empty(property, engine, false);
    report.trials = 1;
    match property {
        p if p.uses_pairs() => check_pairs(engine, p, cb, queries, &mut report)?,
        Property::Completeness | Property::Consistency => {
            check_statements(engine, property, cb, &flatten(queries), &mut report)?
        }
        Property::Locality => check_locality(engine, cb, &flatten(queries), &mut report)?,
        Property::NearestAgreement => check_nearest(engine, cb, &flatten(queries), &mut report)?,
        _ => unreachable!("all properties handled"),
    }
    Ok(report)
}

fn flatten(queries: &QuerySet) -> Vec<Characterisation> {
    match queries {
        QuerySet::Queries(q) => q.clone(),
        QuerySet::Pairs(pairs) => {
            let mut all: Vec<Characterisation> = pairs
                .iter()
                .flat_map(|(a, b)| [a.clone(), b.clone()])
                .collect();
            all.sort();
            all.dedup();
            all
        }
    }
}

fn check_pairs(
    engine: Engine,
    property: Property,
    cb: &Casebase,
    queries: &QuerySet,
    report: &mut PropertyReport,
) -> Result<()> {
    let pairs: Vec<(Characterisation, Characterisation)> = match queries {
        QuerySet::Pairs(p) => p.clone(),
        QuerySet::Queries(q) => q
            .iter()
            .flat_map(|a| {
                q.iter()
                    .filter(move |b| *b != a)
                    .map(move |b| (a.clone(), b.clone()))
            })
            .collect(),
    };
    let model = engine.fit(cb)?;
    let mut base: BTreeMap<Characterisation, Outcome> = BTreeMap::new();
    let mut outcome_before =
        |n: &Characterisation| *base.entry(n.clone()).or_insert_with(|| model.outcome(n));
    let mut extended: BTreeMap<(Characterisation, Outcome), Model> = BTreeMap::new();

    for (n1, n2) in pairs {
        if cb.has_characterisation(&n1) {
            report.skipped_stored += 1;
            continue;
        }
        report.checks += 1;
        let o1 = outcome_before(&n1);
        let o2 = outcome_before(&n2);
        let mut fit_with = |y: Outcome| -> Result<Outcome> {
            let key = (n1.clone(), y);
            if !extended.contains_key(&key) {
                let added = Case::new(cb.fresh_id("n"), n1.clone(), y);
                extended.insert(key.clone(), engine.fit(&cb.with_case(added)?)?);
            }
            Ok(extended[&key].outcome(&n2))
        };

        // `D ⊢ (n1, o1)` holds by construction, so the premise-extended
        // casebase is the same for cautious monotonicity and cut.
        let after = fit_with(o1)?;
        let cm_fails = Statement::all_about(&n2)
            .iter()
            .any(|s| s.holds_for(o2) && !s.holds_for(after));
        let cut_fails = Statement::all_about(&n2)
            .iter()
            .any(|s| s.holds_for(after) && !s.holds_for(o2));
        if cm_fails || cut_fails {
            report.cm_cut_failures += 1;
            if cm_fails != cut_fails {
                report.cm_cut_disagreements += 1;
            }
        }

        let violated = match property {
            Property::CautiousMonotonicity => cm_fails,
            Property::Cut => cut_fails,
            Property::Cumulativity => cm_fails || cut_fails,
            Property::RationalMonotonicity => {
                // A ⊢ a and A ⊬ ¬b imply A ∪ {b} ⊢ a, for b about n1.
                let mut failed = false;
                for y in Outcome::BOTH {
                    if Statement::neg(n1.clone(), y).holds_for(o1) {
                        continue;
                    }
                    let after_y = fit_with(y)?;
                    failed |= Statement::all_about(&n2)
                        .iter()
                        .any(|s| s.holds_for(o2) && !s.holds_for(after_y));
                }
                failed
            }
            _ => unreachable!(),
        };
        if violated {
            report.violations.push(Counterexample {
                casebase: cb.clone(),
                added: Some(Statement::pos(n1.clone(), o1)),
                query: Statement::pos(n2.clone(), o2),
                before: o2,
                after,
            });
        }
    }
    Ok(())
}

/// Each statement is evaluated with its own prediction, so this exercises the
/// classifier as a relation rather than reusing one outcome per query.
fn check_statements(
    engine: Engine,
    property: Property,
    cb: &Casebase,
    queries: &[Characterisation],
    report: &mut PropertyReport,
) -> Result<()> {
    let model = engine.fit(cb)?;
    let entails = |s: &Statement| s.holds_for(model.outcome(&s.characterisation));
    for n in queries {
        for y in Outcome::BOTH {
            report.checks += 1;
            let s = Statement::pos(n.clone(), y);
            let (pos, neg) = (entails(&s), entails(&s.negate()));
            let violated = match property {
                Property::Completeness => !pos && !neg,
                Property::Consistency => pos && neg,
                _ => unreachable!(),
            };
            if violated {
                let o = model.outcome(n);
                report.violations.push(Counterexample {
                    casebase: cb.clone(),
                    added: None,
                    query: s,
                    before: o,
                    after: o,
                });
            }
        }
    }
    Ok(())
}

fn check_locality(
    engine: Engine,
    cb: &Casebase,
    queries: &[Characterisation],
    report: &mut PropertyReport,
) -> Result<()> {
    let model = engine.fit(cb)?;
    let all_features: Vec<String> = {
        let mut fs: Vec<String> = cb
            .cases()
            .iter()
            .flat_map(|c| c.characterisation.features().iter().cloned())
            .chain(queries.iter().flat_map(|q| q.features().iter().cloned()))
            .collect();
        fs.sort();
        fs.dedup();
        fs
    };
    for n in queries {
        report.checks += 1;
        let before = model.outcome(n);
        let after = engine.classify(&cb.restrict_below(n), n)?;
        if before != after {
            report.violations.push(Counterexample {
                casebase: cb.clone(),
                added: None,
                query: Statement::pos(n.clone(), before),
                before,
                after,
            });
        }

        // Perturbation: a fresh case not below n, with each outcome. The
        // first such characterisation in a deterministic order is used.
        if let Some(x) = pick_outside(cb, n, &all_features) {
            for y in Outcome::BOTH {
                report.checks += 1;
                let added = Case::new(cb.fresh_id("p"), x.clone(), y);
                let after = engine.classify(&cb.with_case(added)?, n)?;
                if before != after {
                    report.violations.push(Counterexample {
                        casebase: cb.clone(),
                        added: Some(Statement::pos(x.clone(), y)),
                        query: Statement::pos(n.clone(), before),
                        before,
                        after,
                    });
                }
            }
        }
    }
    Ok(())
}

/// A stored-free characterisation that is not `⪯ n`: `n` plus one feature it
/// lacks, or failing that, a fresh feature name.
fn pick_outside(
    cb: &Casebase,
    n: &Characterisation,
    features: &[String],
) -> Option<Characterisation> {
    features
        .iter()
        .filter(|f| !n.contains(f))
        .map(|f| n.with(f.clone()))
        .chain(std::iter::once(n.with("__outside")))
        .find(|x| !cb.has_characterisation(x))
}

fn check_nearest(
    engine: Engine,
    cb: &Casebase,
    queries: &[Characterisation],
    report: &mut PropertyReport,
) -> Result<()> {
    let model = engine.fit(cb)?;
    // For the cumulative engine, nearest cases are taken from the concise subset.
    let basis = match &model {
        Model::Plain { .. } => cb.clone(),
        Model::Cumulative(m) => m.concise().clone(),
    };
    for n in queries {
        let nearest = basis.nearest_cases(n);
        let Some(first) = nearest.first() else {
            continue;
        };
        let o = first.outcome;
        if nearest.iter().any(|c| c.outcome != o) {
            continue;
        }
        report.checks += 1;
        let predicted = model.outcome(n);
        if predicted != o {
            report.violations.push(Counterexample {
                casebase: cb.clone(),
                added: None,
                query: Statement::pos(n.clone(), o),
                before: o,
                after: predicted,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn saturated_universe() {
        let cb = gen_casebase(&GeneratorConfig::new(4, 16, 3)).unwrap();
        assert_eq!(cb.len(), 16);
        assert!(cb.is_coherent());
    }

    #[test]
    fn generation_is_deterministic() {
        let cfg = GeneratorConfig::new(5, 9, 42);
        assert_eq!(gen_casebase(&cfg).unwrap(), gen_casebase(&cfg).unwrap());
        assert_ne!(
            gen_casebase(&cfg).unwrap(),
            gen_casebase(&cfg.with_seed(43)).unwrap()
        );
    }

    #[test]
    fn too_many_cases() {
        assert_eq!(
            gen_casebase(&GeneratorConfig::new(3, 9, 0)).unwrap_err(),
            Error::UniverseTooSmall {
                universe: 3,
                cases: 9
            }
        );
    }

    #[test]
    fn invalid_universes() {
        assert!(matches!(
            gen_casebase(&GeneratorConfig::new(0, 0, 0)),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            gen_casebase(&GeneratorConfig::new(9, 1, 0)),
            Err(Error::InvalidConfig(_))
        ));
        let mut cfg = GeneratorConfig::new(3, 1, 0);
        cfg.feature_universe[1] = "f0".into();
        assert!(matches!(gen_casebase(&cfg), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn monotonicity_fixture_violates_cautious_monotonicity() {
        let pairs = QuerySet::Pairs(vec![(
            monotonicity_first_query(),
            monotonicity_second_query(),
        )]);
        let r = check_casebase(
            Engine::Plain,
            Property::CautiousMonotonicity,
            &monotonicity_casebase(),
            &pairs,
        )
        .unwrap();
        assert_eq!(r.violations.len(), 1);
        let cx = &r.violations[0];
        assert_eq!(cx.before, Outcome::Default);
        assert_eq!(cx.after, Outcome::NonDefault);
        assert_eq!(
            cx.added,
            Some(Statement::pos(
                monotonicity_first_query(),
                Outcome::NonDefault
            ))
        );
        assert_eq!(r.cm_cut_failures, 1);
        assert_eq!(r.cm_cut_disagreements, 0);

        let r = check_casebase(
            Engine::Cumulative,
            Property::CautiousMonotonicity,
            &monotonicity_casebase(),
            &pairs,
        )
        .unwrap();
        assert!(r.holds());
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert_eq!(
            "cautious_monotonicity".parse::<Property>().unwrap(),
            Property::CautiousMonotonicity
        );
    }

    #[test]
    fn consistency_holds_for_plain() {
        let r = check_property(
            Engine::Plain,
            Property::Consistency,
            &GeneratorConfig::new(4, 6, 1),
            10,
            QueryMode::Exhaustive,
        )
        .unwrap();
        assert!(r.holds());
        assert_eq!(r.checks, 10 * 16 * 2);
    }

    #[test]
    fn sampled_mode_bounds_queries() {
        let r = check_property(
            Engine::Cumulative,
            Property::CautiousMonotonicity,
            &GeneratorConfig::new(5, 8, 9),
            3,
            QueryMode::Sampled(4),
        )
        .unwrap();
        assert_eq!(r.checks, 3 * 4 * 3);
        assert!(!r.exhaustive);
        assert!(r.holds());
    }

    #[test]
    fn locality_on_monotonicity_fixture() {
        let r = check_casebase(
            Engine::Plain,
            Property::Locality,
            &monotonicity_casebase(),
            &QuerySet::Queries(vec![monotonicity_first_query()]),
        )
        .unwrap();
        assert!(r.holds());
        assert_eq!(r.checks, 3);
    }

    #[test]
    fn report_lines_replay() {
        let pairs = QuerySet::Pairs(vec![(
            monotonicity_first_query(),
            monotonicity_second_query(),
        )]);
        let r = check_casebase(
            Engine::Plain,
            Property::CautiousMonotonicity,
            &monotonicity_casebase(),
            &pairs,
        )
        .unwrap();
        let text = r.to_json_lines();
        let lines: Vec<serde_json::Value> = text
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0]["violations"], 1);
        let cb: CasebaseFile = serde_json::from_value(lines[1]["casebase"].clone()).unwrap();
        assert_eq!(cb.to_casebase().unwrap(), monotonicity_casebase());
        assert_eq!(lines[1]["before"], "-");
        assert_eq!(lines[1]["after"], "+");
    }
}
