//! Audits of specific worked examples: the engine decides, the claim is recorded as text.

use gradering_core::classify::graded_nil_good_witness;
use gradering_core::{GradedAnalysis, Limits, RingElement, WitnessEntry};
use serde::{Deserialize, Serialize};

use crate::error::HarnessError;
use crate::recipe::{ModuleRecipe, Recipe, RingRef};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub name: String,
    pub recipe: Recipe,
    pub element: RingElement,
    /// Entries of `element` in the base ring, row-major.
    pub entries: Vec<RingElement>,
    pub claim: String,
    /// Whether the recorded claim says the element decomposes.
    pub claim_decomposable: bool,
    pub engine_decomposable: bool,
    pub witness: Option<WitnessEntry>,
    pub witness_unit_entries: Option<Vec<RingElement>>,
    pub witness_nilpotent_entries: Option<Vec<RingElement>>,
    pub ring_graded_nil_good: bool,
    pub ring_counterexample: Option<RingElement>,
    /// Side facts the audit also checks, by description.
    pub checks: Vec<(String, bool)>,
    pub agrees_with_claim: bool,
    pub discrepancy: bool,
}

fn matrix_entries(x: &RingElement, n: usize, k: usize) -> Vec<RingElement> {
    (0..n * n)
        .map(|t| RingElement::new(x.coeffs[t * k..(t + 1) * k].to_vec()))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn audit_matrix_element(
    name: &str,
    recipe: Recipe,
    n: usize,
    k: usize,
    element: Vec<u32>,
    claim: &str,
    claim_decomposable: bool,
    limits: &Limits,
) -> Result<(AuditReport, GradedAnalysis), HarnessError> {
    let built = recipe.build_finite(limits)?;
    let an = GradedAnalysis::new(built.graded, limits.clone());
    let r = an.ring();
    let m = RingElement::new(element);
    r.check(&m)?;
    let x = r.index(&m);
    let gr = an.graded();
    let found = gr
        .is_homogeneous(x)
        .then(|| graded_nil_good_witness(gr, an.classes(), an.homogeneous_nilpotents(), x))
        .flatten();
    let witness = found.map(|w| {
        debug_assert!(w.verify(r));
        w.entry(Some(gr), r)
    });
    let engine_decomposable = witness.is_some();
    let verdict = an.graded_nil_good();
    let report = AuditReport {
        name: name.to_string(),
        recipe,
        entries: matrix_entries(&m, n, k),
        element: m,
        claim: claim.to_string(),
        claim_decomposable,
        engine_decomposable,
        witness_unit_entries: witness
            .as_ref()
            .and_then(|w| w.unit.as_ref())
            .map(|u| matrix_entries(u, n, k)),
        witness_nilpotent_entries: witness.as_ref().map(|w| matrix_entries(&w.nilpotent, n, k)),
        witness,
        ring_graded_nil_good: verdict.holds,
        ring_counterexample: verdict.counterexample.map(|c| r.element(c)),
        checks: Vec::new(),
        agrees_with_claim: engine_decomposable == claim_decomposable,
        discrepancy: engine_decomposable != claim_decomposable,
    };
    Ok((report, an))
}

/// `M = [[(1,0),0],[0,0]]` in `M_2(Z_2 ∝ Z_2)(e,e)`, with `E` in degree `g` of `C_2`.
pub fn audit_trivial_extension_matrix(limits: &Limits) -> Result<AuditReport, HarnessError> {
    let base = Recipe::TrivialExtension {
        base: Box::new(Recipe::trivial(RingRef::cyclic(2), "C2")),
        module: ModuleRecipe::ShiftedRegular { shift: 1 },
    };
    let recipe = Recipe::Matrix {
        base: Box::new(base),
        n: 2,
        sigma: vec![0, 0],
    };
    let (mut report, an) = audit_matrix_element(
        "M2(Z2~Z2) sigma (e,e)",
        recipe,
        2,
        2,
        vec![1, 0, 0, 0, 0, 0, 0, 0],
        "M = [[(1,0),0],[0,0]] is not a sum of a homogeneous unit and a homogeneous nilpotent, \
         so the ring is not graded nil-good",
        false,
        limits,
    )?;
    let gr = an.graded();
    let r = an.ring();
    let g = 1;
    let component = gr.component_indices(g);
    let squares_zero = component
        .iter()
        .all(|&a| component.iter().all(|&b| r.mul_idx(a, b) == 0));
    report
        .checks
        .push(("R_g R_g = 0 in degree g".to_string(), squares_zero));
    Ok(report)
}

/// `diag(1,0)` in the checkerboard grading of `M_2(Z_2)`.
pub fn audit_checkerboard(limits: &Limits) -> Result<AuditReport, HarnessError> {
    let recipe = Recipe::Matrix {
        base: Box::new(Recipe::trivial(RingRef::cyclic(2), "C2")),
        n: 2,
        sigma: vec![0, 1],
    };
    let (report, _) = audit_matrix_element(
        "M2(Z2) checkerboard",
        recipe,
        2,
        1,
        vec![1, 0, 0, 0],
        "diag(1,0) is not a sum of a homogeneous unit and a homogeneous nilpotent of the same degree",
        false,
        limits,
    )?;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSuite {
    pub audits: Vec<AuditReport>,
}

pub fn run_audits(limits: &Limits) -> Result<AuditSuite, HarnessError> {
    Ok(AuditSuite {
        audits: vec![
            audit_checkerboard(limits)?,
            audit_trivial_extension_matrix(limits)?,
        ],
    })
}
