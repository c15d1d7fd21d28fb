//! JSON construction recipes.
//!
//! A recipe is a tree of constructions tagged by `"construct"`. Building it
//! yields the graded ring together with the inputs that hypotheses about the
//! construction need (the base ring of a group ring, the factors of a product).
//! Recipes are also the replay format: rebuilding one reproduces the ring exactly.

use std::sync::Arc;

use gradering_core::laurent::SymbolicGradedRing;
use gradering_core::{
    coarsen, graded_direct_product, group_ring_coarse, group_ring_graded, make_group,
    matrix_graded, quotient_graded, trivial_extension, trivial_grading, truncated_polynomial,
    BimoduleSpec, FiniteRing, GradedBimodule, GradedRing, GradedRingSpec, GroupSpec, Limits,
    MatrixGradingSpec, RingElement, RingSpec, Subgroup,
};
use serde::{Deserialize, Serialize};

use crate::error::HarnessError;

/// A ring given inline or by the shorthand `{"name":"Z4"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingRef {
    Named { name: String },
    Spec(RingSpec),
}

impl RingRef {
    pub fn cyclic(n: u32) -> Self {
        RingRef::Named {
            name: format!("Z{n}"),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<FiniteRing, HarnessError> {
        match self {
            RingRef::Named { name } => {
                let n: u32 = name
                    .strip_prefix('Z')
                    .and_then(|d| d.parse().ok())
                    .filter(|&n| (1..=gradering_core::ring::MAX_MODULUS).contains(&n))
                    .ok_or_else(|| HarnessError::UnknownRingName(name.clone()))?;
                if n as usize > limits.max_ring_order {
                    return Err(gradering_core::RingError::OrderCapExceeded {
                        order: n as usize,
                        cap: limits.max_ring_order,
                    }
                    .into());
                }
                Ok(FiniteRing::cyclic(n))
            }
            RingRef::Spec(spec) => Ok(FiniteRing::from_spec(spec, limits.max_ring_order)?),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleRecipe {
    Zero,
    /// `A` acting on itself, placed so that `E_k = A_{k s^-1}`.
    ShiftedRegular {
        shift: usize,
    },
    Explicit {
        module: BimoduleSpec,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum IdealRecipe {
    GradedJacobson,
    Whole,
    /// Two-sided ideal generated by the listed elements.
    Generated {
        generators: Vec<Vec<u32>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construct", rename_all = "snake_case", deny_unknown_fields)]
pub enum Recipe {
    Graded {
        ring: RingSpec,
        grading: gradering_core::GradingSpec,
    },
    TrivialGrading {
        ring: RingRef,
        group: GroupSpec,
    },
    TruncatedPoly {
        base: RingRef,
        m: usize,
    },
    TrivialExtension {
        base: Box<Recipe>,
        module: ModuleRecipe,
    },
    GroupRing {
        base: Box<Recipe>,
    },
    GroupRingCoarse {
        base: Box<Recipe>,
        subgroup: Vec<usize>,
    },
    Matrix {
        base: Box<Recipe>,
        n: usize,
        sigma: Vec<usize>,
    },
    Product {
        factors: Vec<Recipe>,
    },
    Quotient {
        base: Box<Recipe>,
        ideal: IdealRecipe,
    },
    Coarsen {
        base: Box<Recipe>,
        subgroup: Vec<usize>,
    },
    Laurent {
        base: RingRef,
    },
    Polynomial {
        base: RingRef,
    },
}

/// Construction inputs retained for hypotheses that refer to them.
#[derive(Clone, Debug)]
pub enum Context {
    Plain,
    TrivialExtension {
        base: Arc<GradedRing>,
        base_rank: usize,
    },
    GroupRing {
        base: Arc<GradedRing>,
    },
    CoarseGroupRing {
        base: Arc<GradedRing>,
        subgroup: Subgroup,
        /// The base with its `G/H`-grading.
        coarse_base: Arc<GradedRing>,
        delta: Vec<usize>,
    },
    Matrix {
        base: Arc<GradedRing>,
        n: usize,
        sigma: Vec<usize>,
    },
    Product {
        factors: Vec<Arc<GradedRing>>,
    },
    Quotient {
        base: Arc<GradedRing>,
        ideal: Vec<usize>,
    },
}

impl Context {
    pub fn kind(&self) -> &'static str {
        match self {
            Context::Plain => "plain",
            Context::TrivialExtension { .. } => "trivial_extension",
            Context::GroupRing { .. } => "group_ring",
            Context::CoarseGroupRing { .. } => "group_ring_coarse",
            Context::Matrix { .. } => "matrix",
            Context::Product { .. } => "product",
            Context::Quotient { .. } => "quotient",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub graded: Arc<GradedRing>,
    pub context: Context,
}

#[derive(Clone, Debug)]
pub enum Built {
    Finite(Construction),
    Symbolic(SymbolicGradedRing),
}

impl Recipe {
    pub fn trivial(ring: RingRef, group: &str) -> Self {
        Recipe::TrivialGrading {
            ring,
            group: GroupSpec::Named {
                name: group.to_string(),
            },
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<Built, HarnessError> {
        match self {
            Recipe::Laurent { base } => Ok(Built::Symbolic(SymbolicGradedRing::laurent(
                base.build(limits)?,
            ))),
            Recipe::Polynomial { base } => Ok(Built::Symbolic(SymbolicGradedRing::polynomial(
                base.build(limits)?,
            ))),
            _ => self.build_finite(limits).map(Built::Finite),
        }
    }

    pub fn build_finite(&self, limits: &Limits) -> Result<Construction, HarnessError> {
        let cap = limits.max_ring_order;
        let plain = |gr: GradedRing| Construction {
            graded: Arc::new(gr),
            context: Context::Plain,
        };
        let sub = |base: &Recipe| -> Result<Arc<GradedRing>, HarnessError> {
            Ok(base.build_finite(limits)?.graded)
        };
        Ok(match self {
            Recipe::Laurent { .. } | Recipe::Polynomial { .. } => {
                return Err(HarnessError::SymbolicRecipe)
            }
            Recipe::Graded { ring, grading } => plain(GradedRing::from_spec(
                &GradedRingSpec {
                    ring: ring.clone(),
                    grading: grading.clone(),
                },
                limits,
            )?),
            Recipe::TrivialGrading { ring, group } => {
                let group = make_group(group, limits.max_group_order)?;
                plain(trivial_grading(ring.build(limits)?, group))
            }
            Recipe::TruncatedPoly { base, m } => {
                if *m < 2 {
                    return Err(HarnessError::BadRecipe(format!(
                        "truncation degree m = {m} must be at least 2"
                    )));
                }
                plain(truncated_polynomial(&base.build(limits)?, *m, cap)?)
            }
            Recipe::TrivialExtension { base, module } => {
                let a = sub(base)?;
                let e = match module {
                    ModuleRecipe::Zero => GradedBimodule::zero(&a),
                    ModuleRecipe::ShiftedRegular { shift } => {
                        a.group().check_element(*shift)?;
                        GradedBimodule::shifted_regular(&a, *shift)
                    }
                    ModuleRecipe::Explicit { module } => GradedBimodule::from_spec(&a, module)?,
                };
                let te = trivial_extension(&a, &e, cap)?;
                Construction {
                    graded: Arc::new(te.graded),
                    context: Context::TrivialExtension {
                        base: a,
                        base_rank: te.base_rank,
                    },
                }
            }
            Recipe::GroupRing { base } => {
                let a = sub(base)?;
                let gr = group_ring_graded(&a, cap)?;
                Construction {
                    graded: Arc::new(gr.graded),
                    context: Context::GroupRing { base: a },
                }
            }
            Recipe::GroupRingCoarse { base, subgroup } => {
                let a = sub(base)?;
                let h = a.group().subgroup_from_elements(subgroup)?;
                let cg = group_ring_coarse(&a, &h, cap)?;
                Construction {
                    graded: Arc::new(cg.graded),
                    context: Context::CoarseGroupRing {
                        base: a,
                        subgroup: h,
                        coarse_base: Arc::new(cg.coarse_base),
                        delta: cg.delta,
                    },
                }
            }
            Recipe::Matrix { base, n, sigma } => {
                let a = sub(base)?;
                let spec = MatrixGradingSpec {
                    n: *n,
                    sigma: sigma.clone(),
                };
                let m = matrix_graded(&a, &spec, cap)?;
                Construction {
                    graded: Arc::new(m.graded),
                    context: Context::Matrix {
                        base: a,
                        n: *n,
                        sigma: sigma.clone(),
                    },
                }
            }
            Recipe::Product { factors } => {
                let parts = factors
                    .iter()
                    .map(|f| Ok(f.build_finite(limits)?.graded))
                    .collect::<Result<Vec<_>, HarnessError>>()?;
                let refs: Vec<&GradedRing> = parts.iter().map(|p| p.as_ref()).collect();
                let gr = graded_direct_product(&refs, cap)?;
                Construction {
                    graded: Arc::new(gr),
                    context: Context::Product { factors: parts },
                }
            }
            Recipe::Quotient { base, ideal } => {
                let a = sub(base)?;
                let members = resolve_ideal(&a, ideal, limits)?;
                let q = quotient_graded(&a, &members)?;
                Construction {
                    graded: Arc::new(q.graded),
                    context: Context::Quotient {
                        base: a,
                        ideal: members,
                    },
                }
            }
            Recipe::Coarsen { base, subgroup } => {
                let a = sub(base)?;
                let h = a.group().subgroup_from_elements(subgroup)?;
                plain(coarsen(&a, &h)?.0)
            }
        })
    }
}

fn resolve_ideal(
    gr: &GradedRing,
    ideal: &IdealRecipe,
    limits: &Limits,
) -> Result<Vec<usize>, HarnessError> {
    let r = gr.ring();
    Ok(match ideal {
        IdealRecipe::Whole => (0..r.order()).collect(),
        IdealRecipe::GradedJacobson => {
            gradering_core::graded_jacobson_radical(gr, limits.ideal_lattice_cap)?
        }
        IdealRecipe::Generated { generators } => {
            let mut gens = Vec::with_capacity(generators.len());
            for c in generators {
                let x = RingElement::new(c.clone());
                r.check(&x)?;
                gens.push(r.index(&x));
            }
            two_sided_closure(r, &gens)
        }
    })
}

/// Smallest two-sided ideal containing `gens`, as sorted indices.
pub fn two_sided_closure(r: &FiniteRing, gens: &[usize]) -> Vec<usize> {
    let ring_gens: Vec<usize> = (0..r.rank()).map(|i| r.generator_index(i)).collect();
    let mut seen = vec![false; r.order()];
    let mut members = vec![0];
    seen[0] = true;
    let mut queue: Vec<usize> = gens.to_vec();
    while let Some(x) = queue.pop() {
        if seen[x] {
            continue;
        }
        let before = members.len();
        r.extend_span(&mut seen, &mut members, x);
        for &y in &members[before..] {
            for &g in &ring_gens {
                for z in [r.mul_idx(g, y), r.mul_idx(y, g)] {
                    if !seen[z] {
                        queue.push(z);
                    }
                }
            }
        }
    }
    members.sort_unstable();
    members
}
