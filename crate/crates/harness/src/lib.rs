//! Corpus generation, a registry of statements about graded rings, and
//! their verification with witnesses, vacuity counts and replay bundles.

pub mod audit;
pub mod corpus;
mod error;
pub mod facts;
pub mod recipe;
pub mod report;
pub mod search;
pub mod theorems;
pub mod verify;

pub use audit::{
    audit_checkerboard, audit_trivial_extension_matrix, run_audits, AuditReport, AuditSuite,
};
pub use corpus::{build_corpus, corpus_entries, Corpus, CorpusEntry, CorpusSpec, Instance};
pub use error::HarnessError;
pub use recipe::{Built, Construction, Context, IdealRecipe, ModuleRecipe, Recipe, RingRef};
pub use report::to_canonical_json;
pub use search::{search_counterexample, Implication, SearchReport};
pub use theorems::{in_scope_ids, theorem, Scope, TheoremSpec, REGISTRY};
pub use verify::{
    radical_identities, replay, verify_suite, verify_theorem, CheckRef, Outcome, ReplayBundle,
    ReportHeader, SuiteReport, VerificationReport,
};
