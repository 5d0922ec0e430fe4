//! Small reference casebases used by tests, the CLI `--fixture` flag and the
//! documentation. All use `-` as the default outcome and `+` as the other.

use crate::casebase::{Case, Casebase, Labels, Outcome};
use crate::order::Characterisation;

pub fn ch(features: &[&str]) -> Characterisation {
    Characterisation::new(features.iter().copied())
}

pub fn case(id: &str, features: &[&str], outcome: Outcome) -> Case {
    Case::new(id, ch(features), outcome)
}

fn build(cases: Vec<Case>) -> Casebase {
    Casebase::new(Labels::default(), cases, Characterisation::empty()).expect("fixture is valid")
}

/// One homicide conviction: `({hm}, +)`.
pub fn legal_initial() -> Casebase {
    build(vec![case("hm", &["hm"], Outcome::NonDefault)])
}

/// [`legal_initial`] plus the self-defence acquittal `({hm,sd}, -)`.
pub fn legal_revised() -> Casebase {
    build(vec![
        case("hm", &["hm"], Outcome::NonDefault),
        case("hm_sd", &["hm", "sd"], Outcome::Default),
    ])
}

/// `{({a},+), ({c},+), ({a,b},-), ({c,z},-)}`: the plain engine is not
/// cautiously monotonic on this casebase with queries `{a,b,c}` then `{a,b,c,z}`.
pub fn monotonicity_casebase() -> Casebase {
    build(vec![
        case("a", &["a"], Outcome::NonDefault),
        case("c", &["c"], Outcome::NonDefault),
        case("ab", &["a", "b"], Outcome::Default),
        case("cz", &["c", "z"], Outcome::Default),
    ])
}

/// [`monotonicity_casebase`] plus the inferred `({a,b,c},+)`.
pub fn monotonicity_extended() -> Casebase {
    monotonicity_casebase()
        .with_case(case("abc", &["a", "b", "c"], Outcome::NonDefault))
        .expect("fixture is valid")
}

/// First query of the cautious-monotonicity counterexample.
pub fn monotonicity_first_query() -> Characterisation {
    ch(&["a", "b", "c"])
}

/// Second query of the cautious-monotonicity counterexample.
pub fn monotonicity_second_query() -> Characterisation {
    ch(&["a", "b", "c", "z"])
}
