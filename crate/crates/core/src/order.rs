//! Characterisations and the specificity order.
//!
//! The concrete order is feature-set inclusion: `a` is at least as specific as
//! `b` when `a` contains every feature of `b`. The empty set is the least
//! element, which is what makes it usable as the default characterisation.

use std::collections::BTreeSet;
use std::fmt;

/// A finite set of opaque, case-sensitive feature identifiers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Characterisation {
    features: BTreeSet<String>,
}

impl Characterisation {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new<I, S>(features: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            features: features.into_iter().map(Into::into).collect(),
        }
    }

    pub fn features(&self) -> &BTreeSet<String> {
        &self.features
    }

    pub fn len(&self) -> usize {
        self.features.len()
    }

    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }

    pub fn contains(&self, feature: &str) -> bool {
        self.features.contains(feature)
    }

    /// `self ⪰ other`: superset inclusion.
    pub fn geq(&self, other: &Self) -> bool {
        self.features.len() >= other.features.len() && self.features.is_superset(&other.features)
    }

    /// `self ≻ other`: strict superset.
    pub fn gt(&self, other: &Self) -> bool {
        self.features.len() > other.features.len() && self.features.is_superset(&other.features)
    }

    pub fn leq(&self, other: &Self) -> bool {
        other.geq(self)
    }

    pub fn lt(&self, other: &Self) -> bool {
        other.gt(self)
    }

    /// Regular irrelevance: `other` is irrelevant to `self` iff `self ⋡ other`.
    pub fn irrelevant_to(&self, other: &Self) -> bool {
        !self.geq(other)
    }

    pub fn comparable(&self, other: &Self) -> bool {
        self.geq(other) || other.geq(self)
    }

    pub fn with(&self, feature: impl Into<String>) -> Self {
        let mut features = self.features.clone();
        features.insert(feature.into());
        Self { features }
    }
}

/// Renders as `{f1,f2}` with features in sorted order.
impl fmt::Display for Characterisation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, feat) in self.features.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(feat)?;
        }
        f.write_str("}")
    }
}

impl<S: Into<String>> FromIterator<S> for Characterisation {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Self::new(iter)
    }
}

/// All `2^n` subsets of `universe`, in bitmask order (bit `i` selects `universe[i]`).
pub fn powerset(universe: &[String]) -> Vec<Characterisation> {
    assert!(
        universe.len() < 32,
        "powerset of {} features",
        universe.len()
    );
    (0u32..(1 << universe.len()))
        .map(|mask| {
            universe
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, f)| f.clone())
                .collect()
        })
        .collect()
}
