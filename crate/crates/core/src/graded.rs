//! Group gradings of finite rings.
//!
//! A grading assigns to each group element `g` an additive subgroup `R_g`,
//! given by generators. Validation checks that the components form a direct
//! sum equal to `R` and that `R_g R_h` lies in `R_{gh}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{make_group, FiniteGroup, GroupError, GroupSpec, QuotientGroup, Subgroup};
use crate::limits::Limits;
use crate::ring::{direct_product, FiniteRing, RingElement, RingError, RingSpec};

/// `{"group":{...},"components":{"0":[[1,0]],"1":[[0,1]]}}`; omitted keys are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingSpec {
    pub group: GroupSpec,
    #[serde(default)]
    pub components: BTreeMap<String, Vec<Vec<u32>>>,
}

/// Self-contained graded ring file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedRingSpec {
    pub ring: RingSpec,
    pub grading: GradingSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("component key {0:?} is not a group element index")]
    UnknownGroupElement(String),
    #[error("component generator for degree {degree}: {source}")]
    BadGenerator { degree: usize, source: RingError },
    #[error("components do not form a direct sum: {0}")]
    NotDirectSum(DirectSumFailure),
    #[error("not multiplicative: {x} in R_{g} times {y} in R_{h} gives {product}, outside R_{{{g}*{h}}}")]
    NotMultiplicative {
        g: usize,
        h: usize,
        x: RingElement,
        y: RingElement,
        product: RingElement,
    },
    #[error("unity is not in the identity component")]
    UnityNotInIdentityComponent,
    #[error("{value} is not in component {degree}")]
    NotHomogeneous { degree: usize, value: RingElement },
    #[error("graded rings are over different groups")]
    GroupMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectSumFailure {
    /// Two components share a nonzero element.
    Overlap {
        g: usize,
        h: usize,
        element: RingElement,
    },
    /// A component meets the sum of the earlier ones.
    Dependent { degree: usize, element: RingElement },
    /// First element (canonical order) not reached by the sum.
    Missing { element: RingElement },
}

impl fmt::Display for DirectSumFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DirectSumFailure::Overlap { g, h, element } => {
                write!(f, "components {g} and {h} both contain {element}")
            }
            DirectSumFailure::Dependent { degree, element } => {
                write!(
                    f,
                    "component {degree} meets the sum of earlier components in {element}"
                )
            }
            DirectSumFailure::Missing { element } => {
                write!(f, "{element} is not a sum of homogeneous elements")
            }
        }
    }
}

/// Component generators indexed by group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub group: FiniteGroup,
    pub generators: Vec<Vec<RingElement>>,
}

impl Grading {
    pub fn from_spec(spec: &GradingSpec, limits: &Limits) -> Result<Self, GradingError> {
        let group = make_group(&spec.group, limits.max_group_order)?;
        let mut generators = vec![Vec::new(); group.order()];
        for (key, gens) in &spec.components {
            let g: usize = key
                .trim()
                .parse()
                .ok()
                .filter(|&g| g < group.order())
                .ok_or_else(|| GradingError::UnknownGroupElement(key.clone()))?;
            generators[g].extend(gens.iter().cloned().map(RingElement::new));
        }
        Ok(Self { group, generators })
    }
}

const NOT_HOMOGENEOUS: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct GradedRing {
    ring: FiniteRing,
    group: FiniteGroup,
    generators: Vec<Vec<RingElement>>,
    components: Vec<Vec<usize>>,
    // degree of each nonzero homogeneous element; zero is tagged with e
    degree: Vec<u32>,
    // x = prev + part with part the homogeneous component of x of that degree
    origin: Vec<(u32, u32, u32)>,
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.group == other.group && self.components == other.components
    }
}

impl Eq for GradedRing {}

/// A nonzero homogeneous element has exactly one degree; zero is listed with `e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousElement {
    pub degree: usize,
    pub value: RingElement,
}

impl HomogeneousElement {
    pub fn new(gr: &GradedRing, degree: usize, value: RingElement) -> Result<Self, GradingError> {
        gr.group.check_element(degree)?;
        gr.ring.check(&value)?;
        if !gr.contains(degree, gr.ring.index(&value)) {
            return Err(GradingError::NotHomogeneous { degree, value });
        }
        Ok(Self { degree, value })
    }
}

/// Validates `grading` as a grading of `ring`.
pub fn validate_grading(ring: FiniteRing, grading: Grading) -> Result<GradedRing, GradingError> {
    GradedRing::new(ring, grading)
}

impl GradedRing {
    pub fn new(ring: FiniteRing, grading: Grading) -> Result<Self, GradingError> {
        let Grading { group, generators } = grading;
        let n = group.order();
        assert_eq!(generators.len(), n, "one generator list per group element");
        let mut components = Vec::with_capacity(n);
        for (degree, gens) in generators.iter().enumerate() {
            let mut idx = Vec::with_capacity(gens.len());
            for x in gens {
                ring.check(x)
                    .map_err(|source| GradingError::BadGenerator { degree, source })?;
                idx.push(ring.index(x));
            }
            components.push(ring.additive_span(&idx));
        }

        let size = ring.order();
        let mut degree = vec![NOT_HOMOGENEOUS; size];
        for (g, comp) in components.iter().enumerate() {
            for &x in comp.iter().skip(1) {
                if degree[x] != NOT_HOMOGENEOUS {
                    let h = degree[x] as usize;
                    return Err(GradingError::NotDirectSum(DirectSumFailure::Overlap {
                        g: h,
                        h: g,
                        element: ring.element(x),
                    }));
                }
                degree[x] = g as u32;
            }
        }
        degree[0] = group.identity() as u32;

        // incremental sums R_{g_1} + ... + R_{g_t}, each step must be direct
        let mut origin = vec![(0u32, 0u32, 0u32); size];
        let mut reached = vec![false; size];
        reached[0] = true;
        let mut sums = vec![0usize];
        for (g, comp) in components.iter().enumerate() {
            if comp.len() == 1 {
                continue;
            }
            let base = sums.len();
            for t in 0..base {
                let s = sums[t];
                for &c in comp.iter().skip(1) {
                    let x = ring.add_idx(s, c);
                    if reached[x] {
                        let element = ring.element(ring.sub_idx(x, s));
                        return Err(GradingError::NotDirectSum(DirectSumFailure::Dependent {
                            degree: g,
                            element,
                        }));
                    }
                    reached[x] = true;
                    origin[x] = (g as u32, s as u32, c as u32);
                    sums.push(x);
                }
            }
        }
        if sums.len() != size {
            let first = reached.iter().position(|&r| !r).unwrap();
            return Err(GradingError::NotDirectSum(DirectSumFailure::Missing {
                element: ring.element(first),
            }));
        }

        let graded = Self {
            ring,
            group,
            generators,
            components,
            degree,
            origin,
        };
        graded.check_multiplicative()?;
        if !graded.contains(graded.group.identity(), graded.ring.one_idx()) {
            return Err(GradingError::UnityNotInIdentityComponent);
        }
        Ok(graded)
    }

    // bilinearity: generator pairs suffice
    fn check_multiplicative(&self) -> Result<(), GradingError> {
        let n = self.group.order();
        for g in 0..n {
            for h in 0..n {
                let gh = self.group.op(g, h);
                for x in &self.generators[g] {
                    let xi = self.ring.index(x);
                    for y in &self.generators[h] {
                        let p = self.ring.mul_idx(xi, self.ring.index(y));
                        if !self.contains(gh, p) {
                            return Err(GradingError::NotMultiplicative {
                                g,
                                h,
                                x: x.clone(),
                                y: y.clone(),
                                product: self.ring.element(p),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_spec(spec: &GradedRingSpec, limits: &Limits) -> Result<Self, GradingError> {
        let ring = FiniteRing::from_spec(&spec.ring, limits.max_ring_order)?;
        let grading = Grading::from_spec(&spec.grading, limits)?;
        Self::new(ring, grading)
    }

    pub fn to_spec(&self) -> GradedRingSpec {
        let components = self
            .generators
            .iter()
            .enumerate()
            .filter(|(_, gens)| !gens.is_empty())
            .map(|(g, gens)| {
                (
                    g.to_string(),
                    gens.iter().map(|x| x.coeffs.clone()).collect(),
                )
            })
            .collect();
        GradedRingSpec {
            ring: self.ring.to_spec(),
            grading: GradingSpec {
                group: self.group.to_spec(),
                components,
            },
        }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn identity(&self) -> usize {
        self.group.identity()
    }

    pub fn component_generators(&self, g: usize) -> &[RingElement] {
        &self.generators[g]
    }

    /// Element indices of `R_g` in canonical order.
    pub fn component_indices(&self, g: usize) -> &[usize] {
        &self.components[g]
    }

    pub fn component(&self, g: usize) -> Result<Vec<RingElement>, GradingError> {
        self.group.check_element(g)?;
        Ok(self.components[g]
            .iter()
            .map(|&x| self.ring.element(x))
            .collect())
    }

    pub fn contains(&self, g: usize, x: usize) -> bool {
        x == 0 || self.degree[x] == g as u32
    }

    /// Degree of a homogeneous element (`e` for zero), `None` otherwise.
    pub fn degree(&self, x: usize) -> Option<usize> {
        match self.degree[x] {
            NOT_HOMOGENEOUS => None,
            d => Some(d as usize),
        }
    }

    pub fn is_homogeneous(&self, x: usize) -> bool {
        self.degree[x] != NOT_HOMOGENEOUS
    }

    /// `(degree, index)` of every homogeneous element in canonical order;
    /// zero appears once, with degree `e`.
    pub fn homogeneous_indices(&self) -> Vec<(usize, usize)> {
        (0..self.ring.order())
            .filter_map(|x| self.degree(x).map(|d| (d, x)))
            .collect()
    }

    pub fn homogeneous_elements(&self) -> Vec<HomogeneousElement> {
        self.homogeneous_indices()
            .into_iter()
            .map(|(degree, x)| HomogeneousElement {
                degree,
                value: self.ring.element(x),
            })
            .collect()
    }

    /// Nonzero homogeneous components of `x` as `(degree, index)`, by degree.
    pub fn decompose(&self, x: usize) -> Vec<(usize, usize)> {
        let mut parts = Vec::new();
        let mut cur = x;
        while cur != 0 {
            let (g, prev, part) = self.origin[cur];
            parts.push((g as usize, part as usize));
            cur = prev as usize;
        }
        parts.sort_unstable();
        parts
    }

    /// Group elements with nonzero component.
    pub fn support(&self) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&g| self.components[g].len() > 1)
            .collect()
    }
}

/// `R_e = R`, all other components zero.
pub fn trivial_grading(ring: FiniteRing, group: FiniteGroup) -> GradedRing {
    let mut generators = vec![Vec::new(); group.order()];
    generators[group.identity()] = (0..ring.rank()).map(|i| ring.generator(i)).collect();
    GradedRing::new(ring, Grading { group, generators }).expect("trivial grading is always valid")
}

/// The `G/H`-grading with `R_C` the sum of `R_x` over the coset `C`.
pub fn coarsen(gr: &GradedRing, h: &Subgroup) -> Result<(GradedRing, QuotientGroup), GradingError> {
    let quotient = gr.group.quotient(h)?;
    let mut generators = vec![Vec::new(); quotient.group.order()];
    for g in 0..gr.group.order() {
        generators[quotient.projection[g]].extend(gr.generators[g].iter().cloned());
    }
    let coarse = GradedRing::new(
        gr.ring.clone(),
        Grading {
            group: quotient.group.clone(),
            generators,
        },
    )?;
    Ok((coarse, quotient))
}

/// `R_1 x ... x R_n` graded componentwise over a common group.
pub fn graded_direct_product(
    parts: &[&GradedRing],
    max_order: usize,
) -> Result<GradedRing, GradingError> {
    let first = parts
        .first()
        .ok_or(GradingError::Ring(RingError::EmptyList))?;
    if parts.iter().any(|p| p.group != first.group) {
        return Err(GradingError::GroupMismatch);
    }
    let rings: Vec<&FiniteRing> = parts.iter().map(|p| &p.ring).collect();
    let ring = direct_product(&rings, max_order)?;
    let total = ring.rank();
    let mut generators = vec![Vec::new(); first.group.order()];
    let mut offset = 0;
    for p in parts {
        for (g, gens) in p.generators.iter().enumerate() {
            for x in gens {
                let mut c = vec![0; total];
                c[offset..offset + x.coeffs.len()].copy_from_slice(&x.coeffs);
                generators[g].push(RingElement::new(c));
            }
        }
        offset += p.ring.rank();
    }
    GradedRing::new(
        ring,
        Grading {
            group: first.group.clone(),
            generators,
        },
    )
}
