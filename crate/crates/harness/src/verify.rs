//! Evaluation of registered statements over a corpus, with vacuity accounting.

use std::time::{Duration, Instant};

use gradering_core::{GradedRingSpec, Limits, RingElement};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, CorpusSpec, Instance, Skipped};
use crate::error::HarnessError;
use crate::search::implication_outcome;
use crate::theorems::{self, Eval, Scope, TheoremSpec, Witness, FINITIZATIONS, REGISTRY};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    HypothesisFalse,
    Holds,
    Violated { witness: Witness },
    Error { message: String },
}

impl Outcome {
    fn from_eval(r: Result<Eval, HarnessError>) -> Self {
        match r {
            Ok(Eval::Vacuous) => Outcome::HypothesisFalse,
            Ok(Eval::Holds) => Outcome::Holds,
            Ok(Eval::Violated(witness)) => Outcome::Violated { witness },
            Err(e) => Outcome::Error {
                message: e.to_string(),
            },
        }
    }

    pub fn is_non_vacuous(&self) -> bool {
        matches!(self, Outcome::Holds | Outcome::Violated { .. })
    }
}

/// What a replay bundle re-checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CheckRef {
    Theorem {
        id: String,
    },
    Implication {
        hypothesis: Vec<String>,
        conclusion: Vec<String>,
    },
}

pub fn evaluate_check(check: &CheckRef, inst: &Instance) -> Outcome {
    match check {
        CheckRef::Theorem { id } => {
            Outcome::from_eval(theorems::theorem(id).and_then(|t| t.evaluate(inst)))
        }
        CheckRef::Implication {
            hypothesis,
            conclusion,
        } => implication_outcome(inst, hypothesis, conclusion).unwrap_or_else(|e| Outcome::Error {
            message: e.to_string(),
        }),
    }
}

/// Self-contained record of one verdict: the recipe rebuilds the ring, the
/// ring spec pins it, and the outcome is what replay must reproduce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReplayBundle {
    pub check: CheckRef,
    pub instance: String,
    pub recipe: crate::recipe::Recipe,
    pub ring: GradedRingSpec,
    pub outcome: Outcome,
}

impl ReplayBundle {
    pub fn new(check: CheckRef, inst: &Instance, outcome: Outcome) -> Self {
        Self {
            check,
            instance: inst.name.clone(),
            recipe: inst.recipe.clone(),
            ring: inst.graded().to_spec(),
            outcome,
        }
    }
}

/// Rebuilds the bundle's instance and re-evaluates its check.
pub fn replay(bundle: &ReplayBundle, limits: &Limits) -> Result<ReplayBundle, HarnessError> {
    let inst = Instance::new(bundle.instance.clone(), bundle.recipe.clone(), limits)?;
    if inst.graded().to_spec() != bundle.ring {
        return Err(HarnessError::BadRecipe(
            "recipe no longer builds the recorded ring".to_string(),
        ));
    }
    let outcome = evaluate_check(&bundle.check, &inst);
    Ok(ReplayBundle::new(bundle.check.clone(), &inst, outcome))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceOutcome {
    pub instance: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub anchor: String,
    pub hypothesis: String,
    pub conclusion: String,
    pub scope: Scope,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub scope_note: String,
    pub instances: usize,
    pub non_vacuous: usize,
    pub violations: usize,
    pub errors: usize,
    /// Set when the checked statement is contradicted on the corpus.
    pub discrepancy: bool,
    pub outcomes: Vec<InstanceOutcome>,
    /// One bundle per violated instance.
    pub bundles: Vec<ReplayBundle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl VerificationReport {
    /// In-scope statements pass when nothing is violated or errored and the
    /// hypothesis held at least once.
    pub fn passes(&self) -> bool {
        self.violations == 0 && self.errors == 0 && self.non_vacuous > 0
    }

    fn assemble(
        spec: &TheoremSpec,
        corpus: &Corpus,
        outcomes: Vec<Outcome>,
        runtime: Option<Duration>,
    ) -> Self {
        let check = CheckRef::Theorem {
            id: spec.id.to_string(),
        };
        let mut bundles = Vec::new();
        for (inst, o) in corpus.instances.iter().zip(&outcomes) {
            if matches!(o, Outcome::Violated { .. }) {
                bundles.push(ReplayBundle::new(check.clone(), inst, o.clone()));
            }
        }
        let count = |f: fn(&Outcome) -> bool| outcomes.iter().filter(|o| f(o)).count();
        let violations = count(|o| matches!(o, Outcome::Violated { .. }));
        Self {
            id: spec.id.to_string(),
            anchor: spec.anchor.to_string(),
            hypothesis: spec.hypothesis.to_string(),
            conclusion: spec.conclusion.to_string(),
            scope: spec.scope,
            scope_note: spec.scope_note.to_string(),
            instances: outcomes.len(),
            non_vacuous: count(Outcome::is_non_vacuous),
            violations,
            errors: count(|o| matches!(o, Outcome::Error { .. })),
            discrepancy: violations > 0,
            outcomes: corpus
                .instances
                .iter()
                .zip(outcomes)
                .map(|(i, outcome)| InstanceOutcome {
                    instance: i.name.clone(),
                    outcome,
                })
                .collect(),
            bundles,
            runtime_ms: runtime.map(|d| d.as_millis() as u64),
        }
    }
}

pub fn verify_theorem(
    id: &str,
    corpus: &Corpus,
    timings: bool,
) -> Result<VerificationReport, HarnessError> {
    let spec = theorems::theorem(id)?;
    let start = Instant::now();
    let outcomes: Vec<Outcome> = corpus
        .instances
        .par_iter()
        .map(|inst| Outcome::from_eval(spec.evaluate(inst)))
        .collect();
    Ok(VerificationReport::assemble(
        spec,
        corpus,
        outcomes,
        timings.then(|| start.elapsed()),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalViolation {
    pub instance: String,
    pub identity: String,
    pub element: Option<RingElement>,
}

/// `J^g(R) ∩ R_e = J(R_e)` and `J^g(R) ⊆ J(R)` over a corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalReport {
    pub instances: usize,
    pub violations: Vec<RadicalViolation>,
    pub errors: Vec<String>,
}

fn radical_identities_one(inst: &Instance) -> Result<Vec<RadicalViolation>, HarnessError> {
    let an = &inst.analysis;
    let gr = an.graded();
    let r = an.ring();
    let jg = an.graded_jacobson()?;
    let j = an.jacobson();
    let mut out = Vec::new();
    let violation = |identity: &str, x: usize| RadicalViolation {
        instance: inst.name.clone(),
        identity: identity.to_string(),
        element: Some(r.element(x)),
    };
    if let Some(&x) = jg.iter().find(|x| j.binary_search(x).is_err()) {
        out.push(violation("J^g(R) inside J(R)", x));
    }
    let embedding = inst.identity_embedding();
    let mut j_re: Vec<usize> = inst
        .identity_component()
        .jacobson()
        .iter()
        .map(|&i| embedding[i])
        .collect();
    j_re.sort_unstable();
    let mut meet: Vec<usize> = jg
        .iter()
        .copied()
        .filter(|&x| gr.contains(gr.identity(), x))
        .collect();
    meet.sort_unstable();
    if meet != j_re {
        let x = meet
            .iter()
            .find(|x| j_re.binary_search(x).is_err())
            .or_else(|| j_re.iter().find(|x| meet.binary_search(x).is_err()))
            .copied()
            .expect("unequal sorted sets differ somewhere");
        out.push(violation("J^g(R) meet R_e equals J(R_e)", x));
    }
    Ok(out)
}

pub fn radical_identities(corpus: &Corpus) -> RadicalReport {
    let per: Vec<Result<Vec<RadicalViolation>, String>> = corpus
        .instances
        .par_iter()
        .map(|i| radical_identities_one(i).map_err(|e| format!("{}: {e}", i.name)))
        .collect();
    let mut report = RadicalReport {
        instances: corpus.instances.len(),
        violations: Vec::new(),
        errors: Vec::new(),
    };
    for p in per {
        match p {
            Ok(v) => report.violations.extend(v),
            Err(e) => report.errors.push(e),
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub spec: CorpusSpec,
    pub instances: usize,
    pub skipped: Vec<Skipped>,
}

/// Every report starts with the limits and readings in force.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub tool: String,
    pub version: String,
    pub limits: Limits,
    pub finitizations: Vec<String>,
    pub corpus: CorpusSummary,
}

impl ReportHeader {
    pub fn new(corpus: &Corpus) -> Self {
        Self {
            tool: "gradering".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            limits: corpus.limits.clone(),
            finitizations: FINITIZATIONS.iter().map(|s| s.to_string()).collect(),
            corpus: CorpusSummary {
                spec: corpus.spec.clone(),
                instances: corpus.instances.len(),
                skipped: corpus.skipped.clone(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub in_scope: usize,
    pub in_scope_passing: usize,
    pub failing: Vec<String>,
    pub radical_violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub header: ReportHeader,
    pub theorems: Vec<VerificationReport>,
    pub radical_identities: RadicalReport,
    pub summary: SuiteSummary,
}

impl SuiteReport {
    pub fn passes(&self) -> bool {
        self.summary.failing.is_empty()
            && self.summary.radical_violations == 0
            && self.radical_identities.errors.is_empty()
    }
}

/// Evaluates the listed statements (all registered ones when empty) in one
/// pass over the corpus, sharing each instance's analysis between them.
pub fn verify_suite(
    ids: &[&str],
    corpus: &Corpus,
    timings: bool,
) -> Result<SuiteReport, HarnessError> {
    let specs: Vec<&TheoremSpec> = if ids.is_empty() {
        REGISTRY.iter().collect()
    } else {
        ids.iter()
            .map(|id| theorems::theorem(id))
            .collect::<Result<_, _>>()?
    };
    let per_instance: Vec<Vec<(Outcome, Duration)>> = corpus
        .instances
        .par_iter()
        .map(|inst| {
            specs
                .iter()
                .map(|s| {
                    let start = Instant::now();
                    let o = Outcome::from_eval(s.evaluate(inst));
                    (o, start.elapsed())
                })
                .collect()
        })
        .collect();
    let theorems: Vec<VerificationReport> = specs
        .iter()
        .enumerate()
        .map(|(t, spec)| {
            let outcomes: Vec<Outcome> = per_instance.iter().map(|row| row[t].0.clone()).collect();
            let total: Duration = per_instance.iter().map(|row| row[t].1).sum();
            VerificationReport::assemble(spec, corpus, outcomes, timings.then_some(total))
        })
        .collect();
    let radical = radical_identities(corpus);
    let in_scope: Vec<&VerificationReport> = theorems
        .iter()
        .filter(|t| t.scope == Scope::InScope)
        .collect();
    let failing: Vec<String> = in_scope
        .iter()
        .filter(|t| !t.passes())
        .map(|t| t.id.clone())
        .collect();
    let summary = SuiteSummary {
        in_scope: in_scope.len(),
        in_scope_passing: in_scope.len() - failing.len(),
        failing,
        radical_violations: radical.violations.len(),
    };
    Ok(SuiteReport {
        header: ReportHeader::new(corpus),
        theorems,
        radical_identities: radical,
        summary,
    })
}
