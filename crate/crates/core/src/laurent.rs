//! Symbolic `Z`-graded rings `A[X, X^-1]` and `A[X]` over a finite base,
//! and the finite truncations `A[X]/(X^m)`.
//!
//! Homogeneous elements are pairs `(a, n)` standing for `a X^n`; the only
//! non-homogeneous fact used is the `1 + X` witness over finite fields.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{element_classes, is_nil_good_ring, ElementClasses};
use crate::graded::{GradedRing, Grading};
use crate::group::FiniteGroup;
use crate::ring::{make_ring, FiniteRing, RingElement, RingError, RingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolicKind {
    Laurent,
    Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("negative degree {0} in a polynomial ring")]
    NegativeDegreeInPolynomial(i64),
    #[error("base ring is not a field; the 1+X argument does not apply")]
    BaseNotField,
    #[error("the 1+X witness only concerns Laurent rings")]
    NotLaurent,
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomogeneousClass {
    Unit,
    Nilpotent,
    Neither,
}

#[derive(Clone, Debug)]
pub struct SymbolicGradedRing {
    pub base: FiniteRing,
    pub kind: SymbolicKind,
    classes: ElementClasses,
}

impl SymbolicGradedRing {
    pub fn new(base: FiniteRing, kind: SymbolicKind) -> Self {
        let classes = element_classes(&base);
        Self {
            base,
            kind,
            classes,
        }
    }

    pub fn laurent(base: FiniteRing) -> Self {
        Self::new(base, SymbolicKind::Laurent)
    }

    pub fn polynomial(base: FiniteRing) -> Self {
        Self::new(base, SymbolicKind::Polynomial)
    }

    pub fn base_classes(&self) -> &ElementClasses {
        &self.classes
    }
}

/// `a X^n` is a unit iff `a` is (and `n = 0` for polynomials); nilpotent iff `a` is.
pub fn symbolic_classify_homogeneous(
    s: &SymbolicGradedRing,
    a: &RingElement,
    n: i64,
) -> Result<HomogeneousClass, SymbolicError> {
    s.base.check(a)?;
    if s.kind == SymbolicKind::Polynomial && n < 0 {
        return Err(SymbolicError::NegativeDegreeInPolynomial(n));
    }
    let x = s.base.index(a);
    let unit = s.classes.is_unit(x) && (s.kind == SymbolicKind::Laurent || n == 0);
    Ok(if unit {
        HomogeneousClass::Unit
    } else if s.classes.is_nilpotent(x) {
        HomogeneousClass::Nilpotent
    } else {
        HomogeneousClass::Neither
    })
}

/// Verdict with the reasoning steps that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicVerdict {
    pub holds: bool,
    pub trace: Vec<String>,
    /// A homogeneous failure `(a, n)` meaning `a X^n`.
    pub witness: Option<(RingElement, i64)>,
}

/// Laurent: reduces to nil-goodness of the base. Polynomial: holds only
/// over the zero ring, otherwise `X` is neither nilpotent nor unit + nilpotent.
pub fn symbolic_is_graded_nil_good(s: &SymbolicGradedRing) -> SymbolicVerdict {
    match s.kind {
        SymbolicKind::Laurent => {
            let base = is_nil_good_ring(&s.base, &s.classes);
            let mut trace = vec![
                "a X^n is a unit iff a is a unit of A, nilpotent iff a is nilpotent in A"
                    .to_string(),
                format!("A checked exhaustively on {} elements", base.checked),
            ];
            let witness = base.counterexample.map(|x| {
                let a = s.base.element(x);
                trace.push(format!("{a} is not nil-good in A, so {a} X^0 fails"));
                (a, 0)
            });
            if witness.is_none() {
                trace.push("A is nil-good, so every a X^n decomposes as u X^n + b X^n".to_string());
            }
            SymbolicVerdict {
                holds: witness.is_none(),
                trace,
                witness,
            }
        }
        SymbolicKind::Polynomial => {
            if s.base.is_zero_ring() {
                return SymbolicVerdict {
                    holds: true,
                    trace: vec!["A is the zero ring, so A[X] = 0".to_string()],
                    witness: None,
                };
            }
            let one = s.base.one();
            SymbolicVerdict {
                holds: false,
                trace: vec![
                    "homogeneous units of A[X] lie in degree 0".to_string(),
                    "1 X^1 is not nilpotent since A is nonzero".to_string(),
                    "X - b X is never a unit for nilpotent b, as it has degree 1".to_string(),
                ],
                witness: Some((one, 1)),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentCounterwitness {
    /// `(a, n)` terms of the witness, here `1 X^0 + 1 X^1`.
    pub terms: Vec<(RingElement, i64)>,
    pub nil_good: bool,
    pub justification: Vec<String>,
}

/// `1 + X` is not nil-good in `F[X, X^-1]` for a finite field `F`.
pub fn symbolic_laurent_nil_good_counterwitness(
    s: &SymbolicGradedRing,
) -> Result<LaurentCounterwitness, SymbolicError> {
    if s.kind != SymbolicKind::Laurent {
        return Err(SymbolicError::NotLaurent);
    }
    let r = &s.base;
    let is_field =
        !r.is_zero_ring() && r.is_commutative() && (1..r.order()).all(|x| s.classes.is_unit(x));
    if !is_field {
        return Err(SymbolicError::BaseNotField);
    }
    let one = r.one();
    Ok(LaurentCounterwitness {
        terms: vec![(one.clone(), 0), (one, 1)],
        nil_good: false,
        justification: vec![
            "F[X, X^-1] is a domain, so its only nilpotent is 0".to_string(),
            "units of a Laurent ring over a field are the monomials c X^n with c nonzero"
                .to_string(),
            "1 + X is not a monomial, hence not a unit".to_string(),
            "1 + X is nonzero, hence not nilpotent, and u + 0 = 1 + X forces u = 1 + X".to_string(),
        ],
    })
}

/// `A[X]/(X^m)` graded by `C_m` with component `g^i = A x^i`.
/// Additive generator `i * k + l` is `c_l x^i`.
pub fn truncated_polynomial(
    a: &FiniteRing,
    m: usize,
    max_order: usize,
) -> Result<GradedRing, RingError> {
    assert!(m >= 2, "truncation degree must be at least 2");
    let k = a.rank();
    let total = k * m;
    let mut size: usize = 1;
    for _ in 0..m {
        size = size.saturating_mul(a.order());
    }
    if size > max_order {
        return Err(RingError::OrderCapExceeded {
            order: size,
            cap: max_order,
        });
    }
    let mut mul = vec![vec![vec![0u32; total]; total]; total];
    for i in 0..m {
        for j in 0..m - i {
            for l in 0..k {
                for l2 in 0..k {
                    let p = a.structure_constant(l, l2);
                    let d = i + j;
                    mul[i * k + l][j * k + l2][d * k..(d + 1) * k].copy_from_slice(&p.coeffs);
                }
            }
        }
    }
    let mut unity = vec![0; total];
    unity[..k].copy_from_slice(&a.one().coeffs);
    let orders: Vec<u32> = (0..m)
        .flat_map(|_| a.additive_orders().iter().copied())
        .collect();
    let ring = make_ring(
        &RingSpec {
            additive_orders: orders,
            unity,
            mul,
        },
        max_order,
    )?;
    let generators = (0..m)
        .map(|i| {
            (0..k)
                .map(|l| {
                    let mut c = vec![0; total];
                    // 1 % order keeps the zero ring's generator in range
                    c[i * k + l] = 1 % a.additive_orders()[l];
                    RingElement::new(c)
                })
                .collect()
        })
        .collect();
    Ok(GradedRing::new(
        ring,
        Grading {
            group: FiniteGroup::cyclic(m),
            generators,
        },
    )
    .expect("truncated polynomial grading is valid"))
}
