//! Trivial extensions, graded group rings and graded matrix rings.
//!
//! Every construction materializes a [`FiniteRing`] through [`make_ring`],
//! so ring axioms (and hence module axioms for trivial extensions) are
//! verified rather than assumed, and the grading goes through
//! [`GradedRing::new`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{element_classes, ElementClasses};
use crate::graded::{GradedRing, Grading, GradingError};
use crate::group::{QuotientGroup, Subgroup};
use crate::ring::{make_ring, FiniteRing, RingElement, RingError, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("bimodule action axioms fail: {0}")]
    ActionAxiomViolation(RingError),
    #[error("bimodule table: {0}")]
    BadBimodule(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error("identity U(A x E) = U(A) x E or Nil(A x E) = Nil(A) x E fails at {element}")]
    TransferIdentityFailed { element: RingElement },
    #[error("matrix size {0} is not supported here (expected 2 or 3)")]
    UnsupportedSize(usize),
    #[error("similarity search exceeded its budget of {budget} candidates")]
    SearchBudgetExceeded { budget: usize },
    #[error("sigma has {found} entries, expected {expected}")]
    SigmaLength { expected: usize, found: usize },
}

/// A graded bimodule over a graded ring `A`, given on additive generators.
///
/// `left[i][j]` is `a_i . m_j` and `right[j][i]` is `m_j . a_i`, for ring
/// generators `a_i` and module generators `m_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleSpec {
    pub additive_orders: Vec<u32>,
    pub left: Vec<Vec<Vec<u32>>>,
    pub right: Vec<Vec<Vec<u32>>>,
    #[serde(default)]
    pub components: BTreeMap<String, Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBimodule {
    pub additive_orders: Vec<u32>,
    pub left: Vec<Vec<Vec<u32>>>,
    pub right: Vec<Vec<Vec<u32>>>,
    /// Generators of `E_g` per group element.
    pub components: Vec<Vec<Vec<u32>>>,
}

impl GradedBimodule {
    /// The zero module (no generators).
    pub fn zero(a: &GradedRing) -> Self {
        Self {
            additive_orders: Vec::new(),
            left: vec![Vec::new(); a.ring().rank()],
            right: Vec::new(),
            components: vec![Vec::new(); a.group().order()],
        }
    }

    /// `A` acting on itself by multiplication, with `E_k = A_{k s^{-1}}`.
    /// Gradings are compatible when `s` is central.
    pub fn shifted_regular(a: &GradedRing, shift: usize) -> Self {
        let r = a.ring();
        let k = r.rank();
        let prod = |i: usize, j: usize| r.structure_constant(i, j).coeffs.clone();
        let left = (0..k)
            .map(|i| (0..k).map(|j| prod(i, j)).collect())
            .collect();
        let right = (0..k)
            .map(|j| (0..k).map(|i| prod(j, i)).collect())
            .collect();
        let group = a.group();
        let shift_inv = group.inverse(shift);
        let components = (0..group.order())
            .map(|g| {
                a.component_generators(group.op(g, shift_inv))
                    .iter()
                    .map(|x| x.coeffs.clone())
                    .collect()
            })
            .collect();
        Self {
            additive_orders: r.additive_orders().to_vec(),
            left,
            right,
            components,
        }
    }

    pub fn from_spec(a: &GradedRing, spec: &BimoduleSpec) -> Result<Self, ConstructionError> {
        let n = a.group().order();
        let mut components = vec![Vec::new(); n];
        for (key, gens) in &spec.components {
            let g: usize = key
                .trim()
                .parse()
                .ok()
                .filter(|&g| g < n)
                .ok_or_else(|| GradingError::UnknownGroupElement(key.clone()))?;
            components[g].extend(gens.iter().cloned());
        }
        Ok(Self {
            additive_orders: spec.additive_orders.clone(),
            left: spec.left.clone(),
            right: spec.right.clone(),
            components,
        })
    }

    pub fn rank(&self) -> usize {
        self.additive_orders.len()
    }
}

/// `A x E` with `(a,e)(b,f) = (ab, af + eb)`; `base_rank` splits the coefficients.
#[derive(Clone, Debug)]
pub struct TrivialExtension {
    pub graded: GradedRing,
    pub base: GradedRing,
    pub base_rank: usize,
}

impl TrivialExtension {
    /// The `A` coordinate of an element, as an index of `A`.
    pub fn project(&self, x: usize) -> usize {
        let e = self.graded.ring().element(x);
        self.base
            .ring()
            .index(&RingElement::new(e.coeffs[..self.base_rank].to_vec()))
    }
}

pub fn trivial_extension(
    a: &GradedRing,
    e: &GradedBimodule,
    max_order: usize,
) -> Result<TrivialExtension, ConstructionError> {
    let ar = a.ring();
    let ka = ar.rank();
    let ke = e.rank();
    let shape = |what: &str, ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(ConstructionError::BadBimodule(what.to_string()))
        }
    };
    shape(
        "left action must be rank(A) x rank(E)",
        e.left.len() == ka && e.left.iter().all(|row| row.len() == ke),
    )?;
    shape(
        "right action must be rank(E) x rank(A)",
        e.right.len() == ke && e.right.iter().all(|row| row.len() == ka),
    )?;
    shape(
        "one component list per group element",
        e.components.len() == a.group().order(),
    )?;

    let total = ka + ke;
    let pad_a = |v: &[u32]| {
        let mut out = v.to_vec();
        out.resize(total, 0);
        out
    };
    let pad_e = |v: &[u32]| -> Result<Vec<u32>, ConstructionError> {
        if v.len() != ke {
            return Err(ConstructionError::BadBimodule(format!(
                "module vector {v:?} has wrong length"
            )));
        }
        let mut out = vec![0; ka];
        out.extend_from_slice(v);
        Ok(out)
    };
    let mut mul = vec![vec![vec![0u32; total]; total]; total];
    for i in 0..ka {
        for j in 0..ka {
            mul[i][j] = pad_a(&ar.structure_constant(i, j).coeffs);
        }
        for j in 0..ke {
            mul[i][ka + j] = pad_e(&e.left[i][j])?;
            mul[ka + j][i] = pad_e(&e.right[j][i])?;
        }
    }
    let mut orders = ar.additive_orders().to_vec();
    orders.extend(&e.additive_orders);
    let spec = RingSpec {
        additive_orders: orders,
        unity: pad_a(&ar.one().coeffs),
        mul,
    };
    let ring = make_ring(&spec, max_order).map_err(|err| match err {
        RingError::NonAssociative { .. }
        | RingError::BadUnity { .. }
        | RingError::IllDefinedBilinearMap { .. } => ConstructionError::ActionAxiomViolation(err),
        other => ConstructionError::Ring(other),
    })?;
    let mut generators = Vec::with_capacity(a.group().order());
    for g in 0..a.group().order() {
        let mut gens: Vec<RingElement> = a
            .component_generators(g)
            .iter()
            .map(|x| RingElement::new(pad_a(&x.coeffs)))
            .collect();
        for m in &e.components[g] {
            gens.push(RingElement::new(pad_e(m)?));
        }
        generators.push(gens);
    }
    let graded = GradedRing::new(
        ring,
        Grading {
            group: a.group().clone(),
            generators,
        },
    )?;
    Ok(TrivialExtension {
        graded,
        base: a.clone(),
        base_rank: ka,
    })
}

/// Verified unit and nilpotent sets of a trivial extension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferReport {
    pub units: Vec<RingElement>,
    pub nilpotents: Vec<RingElement>,
}

/// Checks `U(A x E) = U(A) x E` and `Nil(A x E) = Nil(A) x E` element by element.
pub fn te_unit_nilpotent_transfer(
    te: &TrivialExtension,
) -> Result<TransferReport, ConstructionError> {
    let r = te.graded.ring();
    let classes = element_classes(r);
    let base = element_classes(te.base.ring());
    let mut units = Vec::new();
    let mut nilpotents = Vec::new();
    for x in 0..r.order() {
        let a = te.project(x);
        if classes.is_unit(x) != base.is_unit(a) || classes.is_nilpotent(x) != base.is_nilpotent(a)
        {
            return Err(ConstructionError::TransferIdentityFailed {
                element: r.element(x),
            });
        }
        if classes.is_unit(x) {
            units.push(r.element(x));
        }
        if classes.is_nilpotent(x) {
            nilpotents.push(r.element(x));
        }
    }
    Ok(TransferReport { units, nilpotents })
}

/// `R[G]` with the twisted product, graded by `deg(r_a h) = a h`.
///
/// Additive generator `h * k + i` is `c_i h` for ring generator `c_i`.
#[derive(Clone, Debug)]
pub struct GroupRing {
    pub graded: GradedRing,
    pub base: GradedRing,
}

impl GroupRing {
    fn rank(&self) -> usize {
        self.base.ring().rank()
    }

    /// `r h` as an index of `R[G]`.
    pub fn embed(&self, r: usize, h: usize) -> usize {
        let k = self.rank();
        let mut coeffs = vec![0; self.graded.ring().rank()];
        let e = self.base.ring().element(r);
        coeffs[h * k..(h + 1) * k].copy_from_slice(&e.coeffs);
        self.graded.ring().index(&RingElement::new(coeffs))
    }

    /// Coefficient of `h` in `x`, as an index of `R`.
    pub fn coefficient(&self, x: usize, h: usize) -> usize {
        let k = self.rank();
        let e = self.graded.ring().element(x);
        self.base
            .ring()
            .index(&RingElement::new(e.coeffs[h * k..(h + 1) * k].to_vec()))
    }

    /// `f(sum r_g) = sum r_g g^{-1}`, as a map from indices of `R` into `R[G]`.
    pub fn identity_component_map(&self) -> Vec<usize> {
        let base = &self.base;
        let group = base.group();
        let big = self.graded.ring();
        (0..base.ring().order())
            .map(|x| {
                base.decompose(x).into_iter().fold(0, |acc, (g, part)| {
                    big.add_idx(acc, self.embed(part, group.inverse(g)))
                })
            })
            .collect()
    }
}

fn zero_table(k: usize) -> Vec<Vec<Vec<u32>>> {
    vec![vec![vec![0u32; k]; k]; k]
}

fn add_into(r: &FiniteRing, acc: &mut [u32], block: usize, x: usize) {
    let k = r.rank();
    let cur = RingElement::new(acc[block * k..(block + 1) * k].to_vec());
    let sum = r.element(r.add_idx(r.index(&cur), x));
    acc[block * k..(block + 1) * k].copy_from_slice(&sum.coeffs);
}

pub fn group_ring_graded(
    base: &GradedRing,
    max_order: usize,
) -> Result<GroupRing, ConstructionError> {
    let r = base.ring();
    let group = base.group();
    let k = r.rank();
    let n = group.order();
    check_power_order(r.order(), n, max_order)?;
    let total = k * n;
    let parts: Vec<Vec<(usize, usize)>> = (0..k)
        .map(|i| base.decompose(r.generator_index(i)))
        .collect();
    let mut mul = zero_table(total);
    for h1 in 0..n {
        for i in 0..k {
            for h2 in 0..n {
                for j in 0..k {
                    let out = &mut mul[h1 * k + i][h2 * k + j];
                    // (r_a h1)(s_b h2) = r_a s_b (b^{-1} h1 b h2)
                    for &(_, p) in &parts[i] {
                        for &(b, q) in &parts[j] {
                            let place = group.op(group.op(group.inverse(b), h1), group.op(b, h2));
                            add_into(r, out, place, r.mul_idx(p, q));
                        }
                    }
                }
            }
        }
    }
    let mut unity = vec![0; total];
    unity[group.identity() * k..(group.identity() + 1) * k].copy_from_slice(&r.one().coeffs);
    let orders: Vec<u32> = (0..n)
        .flat_map(|_| r.additive_orders().iter().copied())
        .collect();
    let ring = make_ring(
        &RingSpec {
            additive_orders: orders,
            unity,
            mul,
        },
        max_order,
    )?;
    let mut generators = vec![Vec::new(); n];
    for (a, gens_a) in generators_by_degree(base).into_iter().enumerate() {
        for h in 0..n {
            for c in &gens_a {
                let mut coeffs = vec![0; total];
                coeffs[h * k..(h + 1) * k].copy_from_slice(&c.coeffs);
                generators[group.op(a, h)].push(RingElement::new(coeffs));
            }
        }
    }
    let graded = GradedRing::new(
        ring,
        Grading {
            group: group.clone(),
            generators,
        },
    )?;
    Ok(GroupRing {
        graded,
        base: base.clone(),
    })
}

fn generators_by_degree(gr: &GradedRing) -> Vec<Vec<RingElement>> {
    (0..gr.group().order())
        .map(|g| gr.component_generators(g).to_vec())
        .collect()
}

fn check_power_order(order: usize, exp: usize, cap: usize) -> Result<(), RingError> {
    let mut total: usize = 1;
    for _ in 0..exp {
        total = total.saturating_mul(order);
        if total > cap {
            return Err(RingError::OrderCapExceeded { order: total, cap });
        }
    }
    Ok(())
}

/// `R[H]` for normal `H`, graded by `G/H`, with its augmentation map onto
/// the coarsened `R`.
#[derive(Clone, Debug)]
pub struct CoarseGroupRing {
    pub graded: GradedRing,
    pub quotient: QuotientGroup,
    /// `R` regraded by `G/H`.
    pub coarse_base: GradedRing,
    /// Elements of `H`, in ascending order; block `t` carries `subgroup[t]`.
    pub subgroup: Vec<usize>,
    /// `augmentation[x]` is the index in `R` of `sum r_h`.
    pub augmentation: Vec<usize>,
    /// Kernel of the augmentation map, in canonical order.
    pub delta: Vec<usize>,
    /// `c_i (h - 1)` over ring generators `c_i` and `h` in `H`.
    pub delta_generators: Vec<usize>,
}

pub fn group_ring_coarse(
    base: &GradedRing,
    h: &Subgroup,
    max_order: usize,
) -> Result<CoarseGroupRing, ConstructionError> {
    let r = base.ring();
    let group = base.group();
    let (coarse_base, quotient) = crate::graded::coarsen(base, h)?;
    let members = h.elements();
    let m = members.len();
    let k = r.rank();
    check_power_order(r.order(), m, max_order)?;
    let position = |g: usize| members.iter().position(|&x| x == g).expect("H is closed");
    let total = k * m;
    let mut mul = zero_table(total);
    for (t1, &h1) in members.iter().enumerate() {
        for i in 0..k {
            for (t2, &h2) in members.iter().enumerate() {
                for j in 0..k {
                    let p = r.mul_idx(r.generator_index(i), r.generator_index(j));
                    add_into(
                        r,
                        &mut mul[t1 * k + i][t2 * k + j],
                        position(group.op(h1, h2)),
                        p,
                    );
                }
            }
        }
    }
    let e_pos = position(group.identity());
    let mut unity = vec![0; total];
    unity[e_pos * k..(e_pos + 1) * k].copy_from_slice(&r.one().coeffs);
    let orders: Vec<u32> = (0..m)
        .flat_map(|_| r.additive_orders().iter().copied())
        .collect();
    let ring = make_ring(
        &RingSpec {
            additive_orders: orders,
            unity,
            mul,
        },
        max_order,
    )?;

    let mut generators = vec![Vec::new(); quotient.group.order()];
    for (g, gens) in generators_by_degree(base).into_iter().enumerate() {
        for (t, &hh) in members.iter().enumerate() {
            for c in &gens {
                let mut coeffs = vec![0; total];
                coeffs[t * k..(t + 1) * k].copy_from_slice(&c.coeffs);
                generators[quotient.projection[group.op(g, hh)]].push(RingElement::new(coeffs));
            }
        }
    }
    let graded = GradedRing::new(
        ring,
        Grading {
            group: quotient.group.clone(),
            generators,
        },
    )?;

    let big = graded.ring();
    let augmentation: Vec<usize> = (0..big.order())
        .map(|x| {
            let e = big.element(x);
            (0..m).fold(0, |acc, t| {
                r.add_idx(
                    acc,
                    r.index(&RingElement::new(e.coeffs[t * k..(t + 1) * k].to_vec())),
                )
            })
        })
        .collect();
    let delta: Vec<usize> = (0..big.order()).filter(|&x| augmentation[x] == 0).collect();
    let mut delta_generators = Vec::new();
    for i in 0..k {
        for t in 0..m {
            if t == e_pos {
                continue;
            }
            let mut coeffs = vec![0; total];
            let c = r.generator(i);
            coeffs[t * k..(t + 1) * k].copy_from_slice(&c.coeffs);
            coeffs[e_pos * k..(e_pos + 1) * k].copy_from_slice(&r.neg(&c).coeffs);
            delta_generators.push(big.index(&RingElement::new(coeffs)));
        }
    }
    Ok(CoarseGroupRing {
        graded,
        quotient,
        coarse_base,
        subgroup: members,
        augmentation,
        delta,
        delta_generators,
    })
}

/// `n` and `sigma = (g_1..g_n)` for `M_n(R)(sigma)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixGradingSpec {
    pub n: usize,
    pub sigma: Vec<usize>,
}

/// `M_n(R)` with `(M_n(R))_l` the matrices whose `(i,j)` entry lies in
/// `R_{g_i l g_j^{-1}}`. Additive generator `(i*n + j)*k + l` is `c_l E_ij`.
#[derive(Clone, Debug)]
pub struct MatrixRing {
    pub graded: GradedRing,
    pub base: GradedRing,
    pub n: usize,
    pub sigma: Vec<usize>,
}

impl MatrixRing {
    /// Entries (row-major) as indices of `R`.
    pub fn entries(&self, x: usize) -> Vec<usize> {
        let k = self.base.ring().rank();
        let e = self.graded.ring().element(x);
        (0..self.n * self.n)
            .map(|p| {
                self.base
                    .ring()
                    .index(&RingElement::new(e.coeffs[p * k..(p + 1) * k].to_vec()))
            })
            .collect()
    }

    pub fn from_entries(&self, entries: &[usize]) -> usize {
        let k = self.base.ring().rank();
        let mut coeffs = vec![0; self.graded.ring().rank()];
        for (p, &a) in entries.iter().enumerate() {
            coeffs[p * k..(p + 1) * k].copy_from_slice(&self.base.ring().element(a).coeffs);
        }
        self.graded.ring().index(&RingElement::new(coeffs))
    }

    /// Entrywise lift of a set of base elements: all matrices with entries in `set`.
    pub fn lift(&self, set: &[usize]) -> Vec<usize> {
        let cells = self.n * self.n;
        let mut out = Vec::with_capacity(set.len().pow(cells as u32));
        let mut digits = vec![0usize; cells];
        loop {
            let entries: Vec<usize> = digits.iter().map(|&d| set[d]).collect();
            out.push(self.from_entries(&entries));
            let mut p = 0;
            loop {
                if p == cells {
                    out.sort_unstable();
                    return out;
                }
                digits[p] += 1;
                if digits[p] < set.len() {
                    break;
                }
                digits[p] = 0;
                p += 1;
            }
        }
    }
}

pub fn matrix_graded(
    base: &GradedRing,
    spec: &MatrixGradingSpec,
    max_order: usize,
) -> Result<MatrixRing, ConstructionError> {
    let r = base.ring();
    let group = base.group();
    let n = spec.n;
    if spec.sigma.len() != n || n == 0 {
        return Err(ConstructionError::SigmaLength {
            expected: n,
            found: spec.sigma.len(),
        });
    }
    for &g in &spec.sigma {
        group.check_element(g).map_err(GradingError::from)?;
    }
    check_power_order(r.order(), n * n, max_order)?;
    let k = r.rank();
    let total = n * n * k;
    let gen = |i: usize, j: usize, l: usize| (i * n + j) * k + l;
    let mut mul = zero_table(total);
    for i in 0..n {
        for j in 0..n {
            for jj in 0..n {
                for l in 0..k {
                    for l2 in 0..k {
                        let p = r.structure_constant(l, l2);
                        mul[gen(i, j, l)][gen(j, jj, l2)][(i * n + jj) * k..(i * n + jj + 1) * k]
                            .copy_from_slice(&p.coeffs);
                    }
                }
            }
        }
    }
    let mut unity = vec![0; total];
    for i in 0..n {
        unity[(i * n + i) * k..(i * n + i + 1) * k].copy_from_slice(&r.one().coeffs);
    }
    let orders: Vec<u32> = (0..n * n)
        .flat_map(|_| r.additive_orders().iter().copied())
        .collect();
    let ring = make_ring(
        &RingSpec {
            additive_orders: orders,
            unity,
            mul,
        },
        max_order,
    )?;
    let by_degree = generators_by_degree(base);
    let generators = (0..group.order())
        .map(|lambda| {
            let mut gens = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let d = group.op(
                        group.op(spec.sigma[i], lambda),
                        group.inverse(spec.sigma[j]),
                    );
                    for c in &by_degree[d] {
                        let mut coeffs = vec![0; total];
                        coeffs[(i * n + j) * k..(i * n + j + 1) * k].copy_from_slice(&c.coeffs);
                        gens.push(RingElement::new(coeffs));
                    }
                }
            }
            gens
        })
        .collect();
    let graded = GradedRing::new(
        ring,
        Grading {
            group: group.clone(),
            generators,
        },
    )?;
    Ok(MatrixRing {
        graded,
        base: base.clone(),
        n,
        sigma: spec.sigma.clone(),
    })
}

/// `[[A, beta], [gamma, d]]` split at the last row and column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodFormView {
    pub a: Vec<Vec<RingElement>>,
    pub beta: Vec<RingElement>,
    pub gamma: Vec<RingElement>,
    pub d: RingElement,
}

impl GoodFormView {
    pub fn of(m: &MatrixRing, x: usize) -> Self {
        let r = m.base.ring();
        let n = m.n;
        let e = m.entries(x);
        let at = |i: usize, j: usize| r.element(e[i * n + j]);
        Self {
            a: (0..n - 1)
                .map(|i| (0..n - 1).map(|j| at(i, j)).collect())
                .collect(),
            beta: (0..n - 1).map(|i| at(i, n - 1)).collect(),
            gamma: (0..n - 1).map(|j| at(n - 1, j)).collect(),
            d: at(n - 1, n - 1),
        }
    }

    pub fn reassemble(&self) -> Vec<Vec<RingElement>> {
        let mut rows: Vec<Vec<RingElement>> = self
            .a
            .iter()
            .zip(&self.beta)
            .map(|(row, b)| {
                let mut row = row.clone();
                row.push(b.clone());
                row
            })
            .collect();
        let mut last = self.gamma.clone();
        last.push(self.d.clone());
        rows.push(last);
        rows
    }
}

/// Good form: the leading block and the corner are both nonzero.
pub fn is_good_form(m: &MatrixRing, x: usize) -> bool {
    let n = m.n;
    let e = m.entries(x);
    let block_nonzero = (0..n - 1).any(|i| (0..n - 1).any(|j| e[i * n + j] != 0));
    block_nonzero && e[n * n - 1] != 0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Similarity {
    pub v: usize,
    pub v_inverse: usize,
    /// `V M V^{-1}`.
    pub conjugate: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilaritySearch {
    /// First `V` (identity first, then canonical order) giving good form.
    pub good_form: Option<Similarity>,
    /// First `V` giving good form with a unit corner.
    pub unit_corner: Option<Similarity>,
    pub candidates: usize,
}

fn matrix_inverse(r: &FiniteRing, x: usize) -> Option<usize> {
    let one = r.one_idx();
    let (mut prev, mut y) = (one, x);
    let mut seen = std::collections::HashSet::new();
    loop {
        if y == one {
            return Some(prev);
        }
        if y == 0 || !seen.insert(y) {
            return None;
        }
        prev = y;
        y = r.mul_idx(y, x);
    }
}

/// Searches invertible `V` with entries in `R_e` such that `V M V^{-1}` is
/// in good form. Only `n` in `{2, 3}` is supported.
pub fn similarity_to_good_form(
    m: &MatrixRing,
    x: usize,
    budget: usize,
) -> Result<SimilaritySearch, ConstructionError> {
    if !(2..=3).contains(&m.n) {
        return Err(ConstructionError::UnsupportedSize(m.n));
    }
    let big = m.graded.ring();
    let base_classes: ElementClasses = element_classes(m.base.ring());
    let re = m.base.component_indices(m.base.identity()).to_vec();
    let cells = m.n * m.n;
    let mut out = SimilaritySearch {
        good_form: None,
        unit_corner: None,
        candidates: 0,
    };
    let consider = |v: usize, out: &mut SimilaritySearch| -> Result<bool, ConstructionError> {
        out.candidates += 1;
        if out.candidates > budget {
            return Err(ConstructionError::SearchBudgetExceeded { budget });
        }
        let Some(v_inverse) = matrix_inverse(big, v) else {
            return Ok(false);
        };
        let conjugate = big.mul_idx(big.mul_idx(v, x), v_inverse);
        if !is_good_form(m, conjugate) {
            return Ok(false);
        }
        let found = Similarity {
            v,
            v_inverse,
            conjugate,
        };
        if out.good_form.is_none() {
            out.good_form = Some(found.clone());
        }
        let corner = m.entries(conjugate)[cells - 1];
        if out.unit_corner.is_none() && base_classes.is_unit(corner) {
            out.unit_corner = Some(found);
        }
        Ok(out.unit_corner.is_some())
    };
    let identity = big.one_idx();
    if consider(identity, &mut out)? {
        return Ok(out);
    }
    for v in m.lift(&re) {
        if v != identity && consider(v, &mut out)? {
            break;
        }
    }
    Ok(out)
}
