//! Named predicates and counterexample search for implications between them.

use gradering_core::laurent::{
    symbolic_is_graded_nil_good, symbolic_laurent_nil_good_counterwitness, SymbolicGradedRing,
    SymbolicKind,
};
use gradering_core::{is_nil_good_ring, Limits, RingElement};
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, Instance};
use crate::error::HarnessError;
use crate::facts::*;
use crate::recipe::{Recipe, RingRef};
use crate::theorems::Witness;
use crate::verify::{evaluate_check, CheckRef, Outcome, ReplayBundle};

/// Predicate names accepted by implication specs, with one-line meanings.
pub const PREDICATES: &[(&str, &str)] = &[
    (
        "nil_good",
        "every element is nilpotent or a unit plus a nilpotent",
    ),
    (
        "graded_nil_good",
        "every homogeneous element is nilpotent or a homogeneous unit plus a homogeneous nilpotent",
    ),
    (
        "graded_fine",
        "every nonzero homogeneous element is a homogeneous unit plus a homogeneous nilpotent",
    ),
    ("graded_local", "exactly one graded-maximal right ideal"),
    ("graded_nil", "every homogeneous element is nilpotent"),
    ("commutative", "the ring is commutative"),
    (
        "nil_clean",
        "every element is an idempotent plus a nilpotent",
    ),
    ("identity_component_nil_good", "R_e is nil-good"),
    ("identity_component_nil_clean", "R_e is nil-clean"),
    ("graded_radical_graded_nil", "J^g(R) is graded-nil"),
    ("quotient_graded_nil_good", "R/J^g(R) is graded nil-good"),
    (
        "units_and_nilpotents_homogeneous",
        "every unit and every nilpotent is homogeneous",
    ),
    ("units_in_identity_component", "every unit lies in R_e"),
    ("nonzero", "the ring is not the zero ring"),
];

fn check_name(name: &str) -> Result<(), HarnessError> {
    if PREDICATES.iter().any(|(n, _)| *n == name) {
        Ok(())
    } else {
        Err(HarnessError::UnknownPredicate(name.to_string()))
    }
}

/// Value of a named predicate on a corpus instance.
pub fn predicate(inst: &Instance, name: &str) -> Result<bool, HarnessError> {
    let an = &inst.analysis;
    Ok(match name {
        "nil_good" => nil_good(an),
        "graded_nil_good" => graded_nil_good(an),
        "graded_fine" => an.graded_fine().holds,
        "graded_local" => an.is_graded_local()?,
        "graded_nil" => an.is_graded_nil(),
        "commutative" => an.ring().is_commutative(),
        "nil_clean" => nil_clean(an),
        "identity_component_nil_good" => nil_good(inst.identity_component()),
        "identity_component_nil_clean" => nil_clean(inst.identity_component()),
        "graded_radical_graded_nil" => radical_is_graded_nil(an)?,
        "quotient_graded_nil_good" => graded_nil_good(inst.modulo_graded_radical()?),
        "units_and_nilpotents_homogeneous" => inhomogeneous_unit_or_nilpotent(an).is_none(),
        "units_in_identity_component" => unit_outside_identity_component(an).is_none(),
        "nonzero" => !an.ring().is_zero_ring(),
        other => return Err(HarnessError::UnknownPredicate(other.to_string())),
    })
}

/// Failing element for a predicate that is false, where one is meaningful.
pub fn predicate_witness(inst: &Instance, name: &str) -> Option<RingElement> {
    let an = &inst.analysis;
    let r = an.ring();
    let x = match name {
        "nil_good" => an.nil_good().counterexample,
        "graded_nil_good" => an.graded_nil_good().counterexample,
        "graded_fine" => an.graded_fine().counterexample,
        "graded_nil" => an
            .graded()
            .homogeneous_indices()
            .into_iter()
            .find(|&(_, x)| !an.classes().is_nilpotent(x))
            .map(|(_, x)| x),
        "units_and_nilpotents_homogeneous" => inhomogeneous_unit_or_nilpotent(an),
        "units_in_identity_component" => unit_outside_identity_component(an),
        _ => None,
    };
    x.map(|x| r.element(x))
}

/// Value on a symbolic Laurent or polynomial ring, when the engine can decide it.
fn symbolic_predicate(s: &SymbolicGradedRing, name: &str) -> Option<bool> {
    let base = &s.base;
    let field = !base.is_zero_ring()
        && base.is_commutative()
        && (1..base.order()).all(|x| s.base_classes().is_unit(x));
    match name {
        "graded_nil_good" => Some(symbolic_is_graded_nil_good(s).holds),
        "identity_component_nil_good" => Some(is_nil_good_ring(base, s.base_classes()).holds),
        "commutative" => Some(base.is_commutative()),
        "nonzero" => Some(!base.is_zero_ring()),
        // over a field both rings are domains whose units are the nonzero
        // constants (times powers of X in the Laurent case)
        "nil_good" if field => Some(false),
        "nil_good" if base.is_zero_ring() => Some(true),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Predicates {
    One(String),
    All(Vec<String>),
}

impl Predicates {
    pub fn names(&self) -> Vec<String> {
        match self {
            Predicates::One(s) => vec![s.clone()],
            Predicates::All(v) => v.clone(),
        }
    }
}

/// `hypothesis => conclusion`, each a conjunction of named predicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Implication {
    pub hypothesis: Predicates,
    pub conclusion: Predicates,
}

impl Implication {
    pub fn new(hypothesis: &[&str], conclusion: &[&str]) -> Self {
        let all = |v: &[&str]| Predicates::All(v.iter().map(|s| s.to_string()).collect());
        Self {
            hypothesis: all(hypothesis),
            conclusion: all(conclusion),
        }
    }

    pub fn check(&self) -> CheckRef {
        CheckRef::Implication {
            hypothesis: self.hypothesis.names(),
            conclusion: self.conclusion.names(),
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        for n in self
            .hypothesis
            .names()
            .iter()
            .chain(&self.conclusion.names())
        {
            check_name(n)?;
        }
        Ok(())
    }
}

/// Evaluates `hypothesis => conclusion` on one instance.
pub fn implication_outcome(
    inst: &Instance,
    hypothesis: &[String],
    conclusion: &[String],
) -> Result<Outcome, HarnessError> {
    for h in hypothesis {
        if !predicate(inst, h)? {
            return Ok(Outcome::HypothesisFalse);
        }
    }
    for c in conclusion {
        if !predicate(inst, c)? {
            return Ok(Outcome::Violated {
                witness: Witness {
                    message: format!("hypothesis holds but {c} fails"),
                    element: predicate_witness(inst, c),
                },
            });
        }
    }
    Ok(Outcome::Holds)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicWitness {
    pub name: String,
    pub recipe: Recipe,
    pub failing: String,
    pub trace: Vec<String>,
    /// Terms `(a, n)` of the failing element `sum a X^n`.
    pub element: Vec<(RingElement, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub implication: Implication,
    pub instances_checked: usize,
    pub hypothesis_satisfied: usize,
    /// First finite instance (canonical order) that refutes the implication.
    pub corpus_witness: Option<ReplayBundle>,
    pub symbolic_witness: Option<SymbolicWitness>,
    pub errors: Vec<String>,
}

/// Laurent and polynomial rings consulted after the finite corpus.
pub fn symbolic_catalog() -> Vec<(String, Recipe)> {
    let mut out = Vec::new();
    for p in [2u32, 3] {
        out.push((
            format!("Z{p}[X, X^-1]"),
            Recipe::Laurent {
                base: RingRef::cyclic(p),
            },
        ));
        out.push((
            format!("Z{p}[X]"),
            Recipe::Polynomial {
                base: RingRef::cyclic(p),
            },
        ));
    }
    out
}

fn symbolic_search(
    imp: &Implication,
    limits: &Limits,
) -> Result<Option<SymbolicWitness>, HarnessError> {
    for (name, recipe) in symbolic_catalog() {
        let s = match recipe.build(limits)? {
            crate::recipe::Built::Symbolic(s) => s,
            crate::recipe::Built::Finite(_) => continue,
        };
        let hyp: Option<Vec<bool>> = imp
            .hypothesis
            .names()
            .iter()
            .map(|h| symbolic_predicate(&s, h))
            .collect();
        if hyp.is_none_or(|v| !v.iter().all(|&b| b)) {
            continue;
        }
        for c in imp.conclusion.names() {
            if symbolic_predicate(&s, &c) != Some(false) {
                continue;
            }
            let (trace, element) = symbolic_failure(&s, &c)?;
            return Ok(Some(SymbolicWitness {
                name,
                recipe,
                failing: c,
                trace,
                element,
            }));
        }
    }
    Ok(None)
}

type Terms = Vec<(RingElement, i64)>;

fn symbolic_failure(
    s: &SymbolicGradedRing,
    name: &str,
) -> Result<(Vec<String>, Terms), HarnessError> {
    match (name, s.kind) {
        ("graded_nil_good", _) => {
            let v = symbolic_is_graded_nil_good(s);
            Ok((v.trace, v.witness.into_iter().collect()))
        }
        ("nil_good", SymbolicKind::Laurent) => {
            let w = symbolic_laurent_nil_good_counterwitness(s)?;
            Ok((w.justification, w.terms))
        }
        ("nil_good", SymbolicKind::Polynomial) => Ok((
            vec![
                "A[X] over a field is a domain, so its only nilpotent is 0".to_string(),
                "its units are the nonzero constants, and X is not one".to_string(),
            ],
            vec![(s.base.one(), 1)],
        )),
        _ => Ok((vec![format!("{name} fails")], Vec::new())),
    }
}

/// First corpus instance refuting the implication, then the symbolic catalog.
pub fn search_counterexample(
    imp: &Implication,
    corpus: &Corpus,
) -> Result<SearchReport, HarnessError> {
    imp.validate()?;
    let check = imp.check();
    let outcomes: Vec<Outcome> = {
        use rayon::prelude::*;
        corpus
            .instances
            .par_iter()
            .map(|inst| evaluate_check(&check, inst))
            .collect()
    };
    let mut report = SearchReport {
        implication: imp.clone(),
        instances_checked: outcomes.len(),
        hypothesis_satisfied: 0,
        corpus_witness: None,
        symbolic_witness: None,
        errors: Vec::new(),
    };
    for (inst, outcome) in corpus.instances.iter().zip(outcomes) {
        match &outcome {
            Outcome::HypothesisFalse => {}
            Outcome::Holds => report.hypothesis_satisfied += 1,
            Outcome::Violated { .. } => {
                report.hypothesis_satisfied += 1;
                if report.corpus_witness.is_none() {
                    report.corpus_witness =
                        Some(ReplayBundle::new(check.clone(), inst, outcome.clone()));
                }
            }
            Outcome::Error { message } => report.errors.push(format!("{}: {message}", inst.name)),
        }
    }
    report.symbolic_witness = symbolic_search(imp, &corpus.limits)?;
    Ok(report)
}
