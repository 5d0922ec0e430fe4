#![allow(dead_code)]

use aacbr::properties::{gen_casebase, GeneratorConfig};
use aacbr::Casebase;
use proptest::prelude::*;

/// Seeded coherent casebase over `features` features with up to `max_cases`
/// cases (clamped to the size of the powerset).
pub fn casebase(features: usize, cases: usize, seed: u64) -> Casebase {
    let cases = cases.min(1 << features);
    gen_casebase(&GeneratorConfig::new(features, cases, seed)).expect("valid config")
}

pub fn arb_casebase(max_features: usize, max_cases: usize) -> impl Strategy<Value = Casebase> {
    (1..=max_features, 0..=max_cases, any::<u64>()).prop_map(|(f, c, s)| casebase(f, c, s))
}

pub fn universe(cb: &Casebase) -> Vec<String> {
    let mut fs: Vec<String> = cb
        .cases()
        .iter()
        .flat_map(|c| c.characterisation.features().iter().cloned())
        .collect();
    fs.sort();
    fs.dedup();
    fs
}
