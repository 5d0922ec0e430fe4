//! Abstract-argumentation case-based reasoning (AA-CBR).
//!
//! A casebase of labelled feature sets is read as an argumentation framework:
//! more specific cases attack less specific ones with the opposite outcome, a
//! new case attacks every past case it is not a superset of, and the outcome
//! is the default one exactly when the default argument survives in the
//! grounded extension.
//!
//! Two classifiers are provided:
//!
//! - the plain engine ([`classifier::predict`]), which mines the whole casebase;
//! - the cumulative engine ([`cumulative::learn_concise`] +
//!   [`cumulative::predict_cumulative`]), which first reduces the casebase to
//!   its unique concise subset (the cases that are surprising given the cases
//!   below them) and is cautiously monotonic as a result.
//!
//! [`properties`] holds a seeded audit harness that checks the
//! non-monotonicity properties of either engine by enumeration.

pub mod af;
pub mod casebase;
pub mod classifier;
pub mod cumulative;
pub mod dot;
pub mod engine;
mod error;
pub mod fixtures;
pub mod format;
pub mod order;
pub mod properties;

pub use af::{grounded_extension, is_acyclic, mine_af, ArgGraph, ArgKind, Argument, Extension};
pub use casebase::{Case, Casebase, Labels, NewCase, Outcome};
pub use classifier::{check_nearest_agreement, infer, predict, Prediction, Statement};
pub use cumulative::{
    is_surprising, learn_concise, predict_cumulative, simple_add, AuditEntry, ConciseModel,
};
pub use engine::{Engine, Model};
pub use error::{Error, Result};
pub use order::Characterisation;
