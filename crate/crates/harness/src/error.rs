use gradering_core::laurent::SymbolicError;
use gradering_core::{ClassifyError, ConstructionError, GradingError, GroupError, RingError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error("unknown theorem id {0:?}")]
    UnknownTheoremId(String),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("unknown ring name {0:?}; expected Z<n>")]
    UnknownRingName(String),
    #[error("{0}")]
    BadRecipe(String),
    #[error("recipe builds a symbolic ring where a finite one is required")]
    SymbolicRecipe,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
