//! Registry of statements as hypothesis/conclusion pairs over corpus instances.
//!
//! Each entry evaluates to `Vacuous` when its hypothesis fails (or the instance
//! lacks the construction the statement is about), otherwise `Holds` or
//! `Violated` with a witness. Biconditionals are split into `.fwd`/`.bwd`.

use gradering_core::laurent::{symbolic_is_graded_nil_good, SymbolicGradedRing};
use gradering_core::{FiniteRing, GradedAnalysis, GradedRing, RingElement};
use serde::{Deserialize, Serialize};

use crate::corpus::Instance;
use crate::error::HarnessError;
use crate::facts::*;
use crate::recipe::Context;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    InScope,
    /// Only a degenerate reading is evaluated.
    Partial,
    OutOfScope,
    /// A literal reading of a statement that is known to fail; kept to surface the witness.
    KnownDiscrepancy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<RingElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eval {
    Vacuous,
    Holds,
    Violated(Witness),
}

type EvalFn = fn(&Instance) -> Result<Eval, HarnessError>;

pub struct TheoremSpec {
    pub id: &'static str,
    /// Restatement of the claim being checked.
    pub anchor: &'static str,
    pub hypothesis: &'static str,
    pub conclusion: &'static str,
    pub scope: Scope,
    pub scope_note: &'static str,
    eval: Option<EvalFn>,
}

impl TheoremSpec {
    pub fn evaluate(&self, inst: &Instance) -> Result<Eval, HarnessError> {
        match self.eval {
            Some(f) => f(inst),
            None => Ok(Eval::Vacuous),
        }
    }

    pub fn is_evaluated(&self) -> bool {
        self.eval.is_some()
    }
}

/// How hypotheses about infinite objects are read at desk scale.
pub const FINITIZATIONS: &[&str] = &[
    "locally finite p-group: finite p-group (the trivial group counts for every prime)",
    "p nilpotent in R: p * 1 has a zero power; for trivial G the primes dividing char R are tried",
    "PI-ring: automatic for finite rings, not checked",
    "semiprimary: automatic for finite rings, not checked",
    "finite support: automatic for finite groups, not checked",
    "torsion-free group: only the trivial group is finite and torsion-free",
];

fn ok(holds: bool, witness: impl FnOnce() -> Witness) -> Result<Eval, HarnessError> {
    Ok(if holds {
        Eval::Holds
    } else {
        Eval::Violated(witness())
    })
}

fn element_witness(r: &FiniteRing, x: Option<usize>, message: &str) -> Witness {
    Witness {
        message: message.to_string(),
        element: x.map(|x| r.element(x)),
    }
}

fn gng_witness(an: &GradedAnalysis, what: &str) -> Witness {
    element_witness(
        an.ring(),
        an.graded_nil_good().counterexample,
        &format!("{what} is not graded nil-good at this homogeneous element"),
    )
}

fn ng_witness(an: &GradedAnalysis, what: &str) -> Witness {
    element_witness(
        an.ring(),
        an.nil_good().counterexample,
        &format!("{what} is not nil-good at this element"),
    )
}

fn radical_witness(an: &GradedAnalysis) -> Result<Witness, HarnessError> {
    let jg = an.graded_jacobson()?;
    let x = jg
        .iter()
        .copied()
        .find(|&x| an.graded().is_homogeneous(x) && !an.classes().is_nilpotent(x));
    Ok(element_witness(
        an.ring(),
        x,
        "homogeneous element of J^g(R) that is not nilpotent",
    ))
}

fn input(inst: &Instance, i: usize) -> &GradedAnalysis {
    &inst.inputs[i]
}

// Statements about a single graded ring.

fn laurent_equivalence(inst: &Instance) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    let symbolic = symbolic_is_graded_nil_good(&SymbolicGradedRing::laurent(an.ring().clone()));
    ok(symbolic.holds == nil_good(an), || Witness {
        message: format!(
            "Laurent ring graded nil-good = {}, base nil-good = {}",
            symbolic.holds,
            nil_good(an)
        ),
        element: None,
    })
}

fn gng_implies_identity_ng(inst: &Instance) -> Result<Eval, HarnessError> {
    if !graded_nil_good(&inst.analysis) {
        return Ok(Eval::Vacuous);
    }
    let re = inst.identity_component();
    ok(nil_good(re), || ng_witness(re, "R_e"))
}

fn commutative_gng_homogeneous_unit_or_nil(inst: &Instance) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    if !an.ring().is_commutative() || !graded_nil_good(an) {
        return Ok(Eval::Vacuous);
    }
    let c = an.classes();
    let bad = an
        .graded()
        .homogeneous_indices()
        .into_iter()
        .map(|(_, x)| x)
        .find(|&x| !c.is_unit(x) && !c.is_nilpotent(x));
    ok(bad.is_none(), || {
        element_witness(
            an.ring(),
            bad,
            "homogeneous element that is neither unit nor nilpotent",
        )
    })
}

fn units_in_identity_nontrivial_nil(inst: &Instance) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    if !graded_nil_good(an) || unit_outside_identity_component(an).is_some() {
        return Ok(Eval::Vacuous);
    }
    let gr = an.graded();
    let bad = gr
        .homogeneous_indices()
        .into_iter()
        .find(|&(g, x)| g != gr.identity() && !an.classes().is_nilpotent(x))
        .map(|(_, x)| x);
    ok(bad.is_none(), || {
        element_witness(
            an.ring(),
            bad,
            "element of a non-identity component that is not nilpotent",
        )
    })
}

fn trivial_units_means_z2(inst: &Instance) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    let r = an.ring();
    if r.is_zero_ring() || !graded_nil_good(an) || an.classes().units().len() != 1 {
        return Ok(Eval::Vacuous);
    }
    let gr = an.graded();
    let concentrated = gr.support() == vec![gr.identity()];
    ok(concentrated && r.order() == 2, || Witness {
        message: format!("order {} with support {:?}", r.order(), gr.support()),
        element: None,
    })
}

fn ideal_transfer(inst: &Instance, forward: bool) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    let ideals = inst.graded_nil_ideals()?;
    let whole = graded_nil_good(an);
    if forward && !whole {
        return Ok(Eval::Vacuous);
    }
    let mut used = false;
    for ideal in ideals {
        let q = gradering_core::quotient_graded(an.graded(), &ideal)?;
        let qa = GradedAnalysis::new(q.graded, an.limits().clone());
        let quotient = graded_nil_good(&qa);
        if !forward && !quotient {
            continue;
        }
        used = true;
        if quotient != whole {
            let generators = ideal_generators(an.ring(), &ideal);
            return Ok(Eval::Violated(Witness {
                message: format!(
                    "graded-nil ideal generated by {} : R graded nil-good = {whole}, R/I graded nil-good = {quotient}",
                    generators.join(", ")
                ),
                element: None,
            }));
        }
    }
    Ok(if used { Eval::Holds } else { Eval::Vacuous })
}

fn ideal_generators(r: &FiniteRing, ideal: &[usize]) -> Vec<String> {
    let mut gens = Vec::new();
    let mut span = vec![0];
    for &x in ideal {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = r.additive_span(&gens);
        }
    }
    gens.into_iter().map(|x| r.element(x).to_string()).collect()
}

fn gng_implies_radical_nil(inst: &Instance) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    if !graded_nil_good(an) {
        return Ok(Eval::Vacuous);
    }
    if radical_is_graded_nil(an)? {
        Ok(Eval::Holds)
    } else {
        Ok(Eval::Violated(radical_witness(an)?))
    }
}

/// `J^g` graded-nil and `R/J^g` graded nil-good.
fn radical_split(inst: &Instance) -> Result<Result<(), Witness>, HarnessError> {
    let an = &inst.analysis;
    if !radical_is_graded_nil(an)? {
        return Ok(Err(radical_witness(an)?));
    }
    let q = inst.modulo_graded_radical()?;
    if !graded_nil_good(q) {
        return Ok(Err(gng_witness(q, "R/J^g(R)")));
    }
    Ok(Ok(()))
}

fn split_forward(inst: &Instance, commutative: bool) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    if (commutative && !an.ring().is_commutative()) || !graded_nil_good(an) {
        return Ok(Eval::Vacuous);
    }
    Ok(match radical_split(inst)? {
        Ok(()) => Eval::Holds,
        Err(w) => Eval::Violated(w),
    })
}

fn split_backward(inst: &Instance, commutative: bool) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    if (commutative && !an.ring().is_commutative()) || radical_split(inst)?.is_err() {
        return Ok(Eval::Vacuous);
    }
    ok(graded_nil_good(an), || gng_witness(an, "R"))
}

fn literal_quotient_graded_nil(inst: &Instance) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    if !graded_nil_good(an) {
        return Ok(Eval::Vacuous);
    }
    if !radical_is_graded_nil(an)? {
        return Ok(Eval::Violated(radical_witness(an)?));
    }
    let q = inst.modulo_graded_radical()?;
    let bad = q
        .graded()
        .homogeneous_indices()
        .into_iter()
        .map(|(_, x)| x)
        .find(|&x| !q.classes().is_nilpotent(x));
    ok(bad.is_none(), || {
        element_witness(
            q.ring(),
            bad,
            "homogeneous element of R/J^g(R) that is not nilpotent",
        )
    })
}

fn commutative_radical_nil(inst: &Instance) -> Result<Eval, HarnessError> {
    if !inst.analysis.ring().is_commutative() {
        return Ok(Eval::Vacuous);
    }
    gng_implies_radical_nil(inst)
}

fn local_forward(inst: &Instance) -> Result<Eval, HarnessError> {
    if !inst.analysis.is_graded_local()? {
        return Ok(Eval::Vacuous);
    }
    gng_implies_radical_nil(inst)
}

fn local_backward(inst: &Instance) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    if !an.is_graded_local()? || !radical_is_graded_nil(an)? {
        return Ok(Eval::Vacuous);
    }
    ok(graded_nil_good(an), || gng_witness(an, "R"))
}

fn local_semisimple_identity(inst: &Instance) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    let hypothesis = group_order_is_unit(an)
        && an.is_graded_local()?
        && opposite_components_annihilate(an.graded())
        && nil_good(inst.identity_component());
    if !hypothesis {
        return Ok(Eval::Vacuous);
    }
    ok(graded_nil_good(an), || gng_witness(an, "R"))
}

fn torsion_free_local(inst: &Instance) -> Result<Eval, HarnessError> {
    let an = &inst.analysis;
    let re = inst.identity_component();
    if an.graded().group().order() != 1 || !re.is_graded_local()? || !nil_good(re) {
        return Ok(Eval::Vacuous);
    }
    ok(graded_nil_good(an), || gng_witness(an, "R"))
}

// Statements about constructions.

fn trivial_extension(inst: &Instance, graded: bool, forward: bool) -> Result<Eval, HarnessError> {
    let Context::TrivialExtension { .. } = inst.context else {
        return Ok(Eval::Vacuous);
    };
    let (a, r) = (input(inst, 0), &inst.analysis);
    let test = |x: &GradedAnalysis| {
        if graded {
            graded_nil_good(x)
        } else {
            nil_good(x)
        }
    };
    let (from, to, name) = if forward {
        (a, r, "A x E")
    } else {
        (r, a, "A")
    };
    if !test(from) {
        return Ok(Eval::Vacuous);
    }
    ok(test(to), || {
        if graded {
            gng_witness(to, name)
        } else {
            ng_witness(to, name)
        }
    })
}

fn coarse_group_ring(inst: &Instance, two_group_nil_clean: bool) -> Result<Eval, HarnessError> {
    let Context::CoarseGroupRing { .. } = inst.context else {
        return Ok(Eval::Vacuous);
    };
    let (base, coarse) = (input(inst, 0), input(inst, 1));
    let group_side = if two_group_nil_clean {
        is_two_group(base.graded()) && nil_clean(&identity_analysis(base))
    } else {
        nilpotent_prime(base).is_some()
    };
    if !group_side || !graded_nil_good(coarse) {
        return Ok(Eval::Vacuous);
    }
    ok(graded_nil_good(&inst.analysis), || {
        gng_witness(&inst.analysis, "R[H]")
    })
}

fn group_ring_lifts(inst: &Instance) -> Result<Eval, HarnessError> {
    let Context::GroupRing { .. } = inst.context else {
        return Ok(Eval::Vacuous);
    };
    let base = input(inst, 0);
    if nilpotent_prime(base).is_none() || !graded_nil_good(base) {
        return Ok(Eval::Vacuous);
    }
    ok(graded_nil_good(&inst.analysis), || {
        gng_witness(&inst.analysis, "R[G]")
    })
}

fn group_ring_descends(inst: &Instance) -> Result<Eval, HarnessError> {
    let Context::GroupRing { .. } = inst.context else {
        return Ok(Eval::Vacuous);
    };
    let base = input(inst, 0);
    if inhomogeneous_unit_or_nilpotent(base).is_some() || !graded_nil_good(&inst.analysis) {
        return Ok(Eval::Vacuous);
    }
    ok(graded_nil_good(base), || gng_witness(base, "R"))
}

fn group_ring_from_identity(inst: &Instance) -> Result<Eval, HarnessError> {
    let Context::GroupRing { .. } = inst.context else {
        return Ok(Eval::Vacuous);
    };
    let base = input(inst, 0);
    let hypothesis = nilpotent_prime(base).is_some()
        && inhomogeneous_unit_or_nilpotent(base).is_none()
        && nil_good(inst.identity_component());
    if !hypothesis {
        return Ok(Eval::Vacuous);
    }
    ok(graded_nil_good(&inst.analysis), || {
        gng_witness(&inst.analysis, "R[G]")
    })
}

fn product_radical(inst: &Instance) -> Result<Eval, HarnessError> {
    let Context::Product { factors } = &inst.context else {
        return Ok(Eval::Vacuous);
    };
    let an = &inst.analysis;
    let r = an.ring();
    let ranks: Vec<usize> = factors.iter().map(|f| f.ring().rank()).collect();
    let radicals = inst
        .inputs
        .iter()
        .map(|f| f.graded_jacobson())
        .collect::<Result<Vec<_>, _>>()?;
    let jg = an.graded_jacobson()?;
    let bad = (0..r.order()).find(|&x| {
        let e = r.element(x);
        let entrywise = factors.iter().enumerate().all(|(i, f)| {
            let p = f.ring().index(&FiniteRing::project_factor(&e, &ranks, i));
            radicals[i].binary_search(&p).is_ok()
        });
        entrywise != jg.binary_search(&x).is_ok()
    });
    ok(bad.is_none(), || {
        element_witness(
            r,
            bad,
            "element in exactly one of J^g(R_1 x ... x R_n) and the product of the J^g(R_i)",
        )
    })
}

fn identity_sigma(inst: &Instance) -> Option<(&GradedRing, usize)> {
    match &inst.context {
        Context::Matrix { base, n, sigma } if sigma.iter().all(|&g| g == base.identity()) => {
            Some((base, *n))
        }
        _ => None,
    }
}

fn matrix_radical(inst: &Instance) -> Result<Eval, HarnessError> {
    let Some((base, n)) = identity_sigma(inst) else {
        return Ok(Eval::Vacuous);
    };
    let an = &inst.analysis;
    let r = an.ring();
    let k = base.ring().rank();
    let base_radical = input(inst, 0).graded_jacobson()?;
    let jg = an.graded_jacobson()?;
    let bad = (0..r.order()).find(|&x| {
        let c = r.element(x).coeffs;
        let entrywise = (0..n * n).all(|t| {
            let entry = base
                .ring()
                .index(&RingElement::new(c[t * k..(t + 1) * k].to_vec()));
            base_radical.binary_search(&entry).is_ok()
        });
        entrywise != jg.binary_search(&x).is_ok()
    });
    ok(bad.is_none(), || {
        element_witness(
            r,
            bad,
            "matrix in exactly one of J^g(M_n(R)) and M_n(J^g(R))",
        )
    })
}

fn matrix_lifts(inst: &Instance, max_n: usize) -> Result<Eval, HarnessError> {
    let Some((base, n)) = identity_sigma(inst) else {
        return Ok(Eval::Vacuous);
    };
    let b = input(inst, 0);
    let hypothesis = n <= max_n
        && base.ring().is_commutative()
        && unity_split_in_identity_units(b).is_some()
        && graded_nil_good(b);
    if !hypothesis {
        return Ok(Eval::Vacuous);
    }
    ok(graded_nil_good(&inst.analysis), || {
        gng_witness(&inst.analysis, "M_n(R)")
    })
}

macro_rules! entry {
    ($id:expr, $scope:ident, $anchor:expr, $hyp:expr, $concl:expr, $eval:expr) => {
        TheoremSpec {
            id: $id,
            anchor: $anchor,
            hypothesis: $hyp,
            conclusion: $concl,
            scope: Scope::$scope,
            scope_note: "",
            eval: Some($eval),
        }
    };
}

pub static REGISTRY: &[TheoremSpec] = &[
    entry!("P3.1", InScope,
        "the Laurent ring A[X, X^-1] is Z-graded nil-good exactly when A is nil-good",
        "A is a finite ring (each corpus ring, grading ignored)",
        "symbolic verdict on A[X, X^-1] equals the nil-good verdict on A",
        laurent_equivalence),
    entry!("P3.2.1", InScope,
        "a graded nil-good ring has nil-good identity component",
        "R graded nil-good", "R_e nil-good", gng_implies_identity_ng),
    entry!("P3.2.2", InScope,
        "in a commutative graded nil-good ring every homogeneous element is a unit or nilpotent",
        "R commutative and graded nil-good", "every homogeneous element is a unit or nilpotent",
        commutative_gng_homogeneous_unit_or_nil),
    entry!("P3.2.3", InScope,
        "if R is graded nil-good and all units lie in R_e, the other components are nil",
        "R graded nil-good and U(R) inside R_e", "every element of R_g, g != e, is nilpotent",
        units_in_identity_nontrivial_nil),
    entry!("P3.3", InScope,
        "a nonzero graded nil-good ring whose only unit is 1 is Z2 concentrated in degree e",
        "R nonzero, graded nil-good, U(R) = {1}", "R = R_e and |R| = 2",
        trivial_units_means_z2),
    entry!("T3.1.fwd", InScope,
        "for a graded-nil ideal I, R graded nil-good implies R/I graded nil-good",
        "I nonzero homogeneous two-sided graded-nil ideal, R graded nil-good", "R/I graded nil-good",
        |i| ideal_transfer(i, true)),
    entry!("T3.1.bwd", InScope,
        "for a graded-nil ideal I, R/I graded nil-good implies R graded nil-good",
        "I nonzero homogeneous two-sided graded-nil ideal, R/I graded nil-good", "R graded nil-good",
        |i| ideal_transfer(i, false)),
    entry!("P3.4", InScope,
        "the graded Jacobson radical of a graded nil-good ring is graded-nil",
        "R graded nil-good", "J^g(R) graded-nil", gng_implies_radical_nil),
    entry!("C3.1.fwd", InScope,
        "graded nil-good implies J^g graded-nil and R/J^g graded nil-good",
        "R graded nil-good", "J^g(R) graded-nil and R/J^g(R) graded nil-good",
        |i| split_forward(i, false)),
    entry!("C3.1.bwd", InScope,
        "J^g graded-nil and R/J^g graded nil-good imply graded nil-good",
        "J^g(R) graded-nil and R/J^g(R) graded nil-good", "R graded nil-good",
        |i| split_backward(i, false)),
    TheoremSpec {
        id: "C3.1.literal",
        anchor: "graded nil-good implies J^g graded-nil and R/J^g graded-nil",
        hypothesis: "R graded nil-good",
        conclusion: "J^g(R) graded-nil and every homogeneous element of R/J^g(R) nilpotent",
        scope: Scope::KnownDiscrepancy,
        scope_note: "literal reading of the quotient clause; fails already for Z2 trivially graded, so the graded nil-good reading is the one checked in C3.1.fwd",
        eval: Some(literal_quotient_graded_nil),
    },
    entry!("L3.1", InScope,
        "a commutative graded nil-good ring has graded-nil J^g",
        "R commutative and graded nil-good", "J^g(R) graded-nil", commutative_radical_nil),
    entry!("C3.2.fwd", InScope,
        "commutative: graded nil-good implies J^g graded-nil and R/J^g graded nil-good",
        "R commutative and graded nil-good", "J^g(R) graded-nil and R/J^g(R) graded nil-good",
        |i| split_forward(i, true)),
    entry!("C3.2.bwd", InScope,
        "commutative: J^g graded-nil and R/J^g graded nil-good imply graded nil-good",
        "R commutative, J^g(R) graded-nil, R/J^g(R) graded nil-good", "R graded nil-good",
        |i| split_backward(i, true)),
    entry!("P3.5.fwd", InScope,
        "graded-local of finite support: graded nil-good implies J^g graded-nil",
        "R graded-local and graded nil-good", "J^g(R) graded-nil", local_forward),
    entry!("P3.5.bwd", InScope,
        "graded-local of finite support: J^g graded-nil implies graded nil-good",
        "R graded-local and J^g(R) graded-nil", "R graded nil-good", local_backward),
    entry!("T4.1.fwd", InScope,
        "A graded nil-good implies the graded trivial extension A x E graded nil-good",
        "instance is A x E and A graded nil-good", "A x E graded nil-good",
        |i| trivial_extension(i, true, true)),
    entry!("T4.1.bwd", InScope,
        "the graded trivial extension A x E graded nil-good implies A graded nil-good",
        "instance is A x E and A x E graded nil-good", "A graded nil-good",
        |i| trivial_extension(i, true, false)),
    entry!("T4.2.fwd", InScope,
        "A nil-good implies the trivial extension A x E nil-good",
        "instance is A x E and A nil-good", "A x E nil-good",
        |i| trivial_extension(i, false, true)),
    entry!("T4.2.bwd", InScope,
        "the trivial extension A x E nil-good implies A nil-good",
        "instance is A x E and A x E nil-good", "A nil-good",
        |i| trivial_extension(i, false, false)),
    entry!("T4.3", InScope,
        "G a p-group with p nilpotent in R, R graded nil-good over G/H, then R[H] graded nil-good over G/H",
        "instance is R[H]; G a p-group; p nilpotent in R; R graded nil-good over G/H",
        "R[H] graded nil-good over G/H",
        |i| coarse_group_ring(i, false)),
    entry!("C4.1", InScope,
        "G a 2-group, R_e nil-clean, R graded nil-good over G/H, then R[H] graded nil-good over G/H",
        "instance is R[H]; G a 2-group; R_e nil-clean; R graded nil-good over G/H",
        "R[H] graded nil-good over G/H",
        |i| coarse_group_ring(i, true)),
    entry!("Pc4.2", InScope,
        "G a p-group with p nilpotent in R and R graded nil-good, then R[G] graded nil-good",
        "instance is R[G]; G a p-group; p nilpotent in R; R graded nil-good", "R[G] graded nil-good",
        group_ring_lifts),
    entry!("T4.4", InScope,
        "if units and nilpotents of R are homogeneous and R[G] is graded nil-good, so is R",
        "instance is R[G]; units and nilpotents of R homogeneous; R[G] graded nil-good", "R graded nil-good",
        group_ring_descends),
    entry!("Cex3.2", InScope,
        "G a p-group, p nilpotent, units and nilpotents homogeneous, (R[G])_e nil-good, then R[G] graded nil-good",
        "instance is R[G]; G a p-group; p nilpotent in R; units and nilpotents of R homogeneous; (R[G])_e nil-good",
        "R[G] graded nil-good",
        group_ring_from_identity),
    TheoremSpec {
        id: "T4.5",
        anchor: "a Jacobson-radical PI ring without unity with nil-good R_e is graded nil-good",
        hypothesis: "not evaluated",
        conclusion: "not evaluated",
        scope: Scope::OutOfScope,
        scope_note: "concerns rings without unity, which the engine does not model",
        eval: None,
    },
    entry!("T4.6", InScope,
        "graded-local, |G| a unit, R_g R_g^-1 = 0 for g != e, R_e nil-good, then graded nil-good",
        "|G| a unit in R; R graded-local; R_g R_{g^-1} = 0 for g != e; R_e nil-good",
        "R graded nil-good", local_semisimple_identity),
    TheoremSpec {
        id: "T4.7",
        anchor: "torsion-free G, R semiprimary with R_e local nil-good, then graded nil-good",
        hypothesis: "G trivial (the only finite torsion-free group); R_e local and nil-good",
        conclusion: "R graded nil-good",
        scope: Scope::Partial,
        scope_note: "only the trivial-group reading has finite instances",
        eval: Some(torsion_free_local),
    },
    entry!("L4.1", InScope,
        "J^g of a finite product is the product of the J^g of the factors",
        "instance is R_1 x ... x R_n", "J^g(R_1 x ... x R_n) = J^g(R_1) x ... x J^g(R_n)",
        product_radical),
    entry!("L4.2", InScope,
        "J^g(M_n(R)) = M_n(J^g(R)) for the grading sigma = (e, ..., e)",
        "instance is M_n(R)(e, ..., e)", "J^g(M_n(R)) = M_n(J^g(R))", matrix_radical),
    entry!("T4.8", InScope,
        "R commutative graded nil-good with 1 = u + v, u, v in U(R_e), then M_2(R)(e,e) graded nil-good",
        "instance is M_2(R)(e,e); R commutative and graded nil-good; 1 = u + v with u, v in U(R_e)",
        "M_2(R)(e,e) graded nil-good",
        |i| matrix_lifts(i, 2)),
    entry!("C4.3", InScope,
        "same hypotheses on R, then M_n(R)(e, ..., e) graded nil-good (checked for n <= 3)",
        "instance is M_n(R)(e, ..., e) with n <= 3; R commutative and graded nil-good; 1 = u + v with u, v in U(R_e)",
        "M_n(R)(e, ..., e) graded nil-good",
        |i| matrix_lifts(i, 3)),
];

pub fn theorem(id: &str) -> Result<&'static TheoremSpec, HarnessError> {
    REGISTRY
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| HarnessError::UnknownTheoremId(id.to_string()))
}

pub fn in_scope_ids() -> Vec<&'static str> {
    REGISTRY
        .iter()
        .filter(|t| t.scope == Scope::InScope)
        .map(|t| t.id)
        .collect()
}
