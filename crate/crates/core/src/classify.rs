//! Units, nilpotents, radicals, ideal lattices and the nil-good family of
//! predicates, all by exhaustive enumeration.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{cyclic_decomposition, AdditiveOps};
use crate::graded::{GradedRing, Grading, GradingError, HomogeneousElement};
use crate::limits::Limits;
use crate::ring::{build_on_basis, FiniteRing, RingElement, RingError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("homogeneous right ideal lattice exceeds the cap of {cap} ideals")]
    IdealLatticeCap { cap: usize },
    #[error("element set is not a homogeneous ideal")]
    NotHomogeneousIdeal,
    #[error("element set is not a two-sided ideal")]
    NotTwoSided,
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

const NONE: u32 = u32::MAX;

/// Units (with inverses), nilpotents (with index) and idempotents of a ring.
#[derive(Clone, Debug)]
pub struct ElementClasses {
    inverse: Vec<u32>,
    nil_index: Vec<u32>,
    idempotent: FixedBitSet,
}

impl ElementClasses {
    pub fn is_unit(&self, x: usize) -> bool {
        self.inverse[x] != NONE
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        (self.inverse[x] != NONE).then_some(self.inverse[x] as usize)
    }

    pub fn is_nilpotent(&self, x: usize) -> bool {
        self.nil_index[x] != 0
    }

    /// Least `k >= 1` with `x^k = 0`.
    pub fn nilpotency_index(&self, x: usize) -> Option<u32> {
        (self.nil_index[x] != 0).then_some(self.nil_index[x])
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.idempotent.contains(x)
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.inverse.len())
            .filter(|&x| self.is_unit(x))
            .collect()
    }

    pub fn nilpotents(&self) -> Vec<usize> {
        (0..self.nil_index.len())
            .filter(|&x| self.is_nilpotent(x))
            .collect()
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.idempotent.ones().collect()
    }
}

/// Classifies every element by its power orbit: `x` is nilpotent iff some
/// power is 0, and a unit iff some power `x^k` is 1 (inverse `x^{k-1}`).
pub fn element_classes(r: &FiniteRing) -> ElementClasses {
    let n = r.order();
    if r.is_zero_ring() {
        let mut idempotent = FixedBitSet::with_capacity(1);
        idempotent.insert(0);
        return ElementClasses {
            inverse: vec![0],
            nil_index: vec![1],
            idempotent,
        };
    }
    let one = r.one_idx();
    let rows: Vec<(u32, u32, bool)> = (0..n)
        .into_par_iter()
        .map_init(
            || vec![NONE; n],
            |stamp, x| {
                let idem = r.mul_idx(x, x) == x;
                let (mut prev, mut y, mut k) = (one, x, 1u32);
                loop {
                    if y == 0 {
                        return (NONE, k, idem);
                    }
                    if y == one {
                        return (prev as u32, 0, idem);
                    }
                    if stamp[y] == x as u32 {
                        return (NONE, 0, idem);
                    }
                    stamp[y] = x as u32;
                    prev = y;
                    y = r.mul_idx(y, x);
                    k += 1;
                }
            },
        )
        .collect();
    let mut idempotent = FixedBitSet::with_capacity(n);
    let mut inverse = Vec::with_capacity(n);
    let mut nil_index = Vec::with_capacity(n);
    for (x, (inv, nil, idem)) in rows.into_iter().enumerate() {
        inverse.push(inv);
        nil_index.push(nil);
        idempotent.set(x, idem);
    }
    ElementClasses {
        inverse,
        nil_index,
        idempotent,
    }
}

/// `J(R) = {x : 1 - a x is a unit for all a}` in canonical order.
pub fn jacobson_radical(r: &FiniteRing, classes: &ElementClasses) -> Vec<usize> {
    let one = r.one_idx();
    (0..r.order())
        .into_par_iter()
        .filter(|&x| (0..r.order()).all(|a| classes.is_unit(r.sub_idx(one, r.mul_idx(a, x)))))
        .collect()
}

pub fn is_additive_subgroup(r: &FiniteRing, set: &[usize]) -> bool {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == set.len() && r.additive_span(&sorted) == sorted
}

/// Additive subgroup closed under multiplication by ring generators on the
/// requested sides.
pub fn is_ideal(r: &FiniteRing, set: &[usize], left: bool, right: bool) -> bool {
    if !is_additive_subgroup(r, set) {
        return false;
    }
    let mut inside = FixedBitSet::with_capacity(r.order());
    for &x in set {
        inside.insert(x);
    }
    set.iter().all(|&x| {
        (0..r.rank()).all(|i| {
            let g = r.generator_index(i);
            (!right || inside.contains(r.mul_idx(x, g)))
                && (!left || inside.contains(r.mul_idx(g, x)))
        })
    })
}

/// True iff `set` is the additive span of its homogeneous elements.
pub fn is_homogeneous_set(gr: &GradedRing, set: &[usize]) -> bool {
    let homogeneous: Vec<usize> = set
        .iter()
        .copied()
        .filter(|&x| gr.is_homogeneous(x))
        .collect();
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    gr.ring().additive_span(&homogeneous) == sorted
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousRightIdeal {
    /// Element indices in canonical order.
    pub elements: Vec<usize>,
    /// Homogeneous generators.
    pub generators: Vec<usize>,
    bits: FixedBitSet,
}

impl HomogeneousRightIdeal {
    fn new(r: &FiniteRing, generators: Vec<usize>) -> Self {
        let elements = r.additive_span(&generators);
        let mut bits = FixedBitSet::with_capacity(r.order());
        for &x in &elements {
            bits.insert(x);
        }
        Self {
            elements,
            generators,
            bits,
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

/// `xR`, spanned by `x c` over the homogeneous component generators `c`.
fn cyclic_right_ideal(gr: &GradedRing, x: usize) -> HomogeneousRightIdeal {
    let r = gr.ring();
    let group = gr.group();
    let mut gens = Vec::new();
    for g in 0..group.order() {
        for c in gr.component_generators(g) {
            let p = r.mul_idx(x, r.index(c));
            if p != 0 {
                gens.push(p);
            }
        }
    }
    gens.sort_unstable();
    gens.dedup();
    HomogeneousRightIdeal::new(r, gens)
}

/// Every homogeneous right ideal, as the join-closure of the cyclic ideals
/// `xR` for homogeneous `x`. Ordered by size, then by element list.
pub fn homogeneous_right_ideals(
    gr: &GradedRing,
    cap: usize,
) -> Result<Vec<HomogeneousRightIdeal>, ClassifyError> {
    lattice_skipping(gr, cap, |_| false)
}

/// As [`homogeneous_right_ideals`], skipping the cyclic ideals of units other
/// than `1`: a unit `u` has `uR = R = 1R`.
pub fn homogeneous_right_ideals_with_units(
    gr: &GradedRing,
    classes: &ElementClasses,
    cap: usize,
) -> Result<Vec<HomogeneousRightIdeal>, ClassifyError> {
    let one = gr.ring().one_idx();
    lattice_skipping(gr, cap, |x| x != one && classes.is_unit(x))
}

fn lattice_skipping(
    gr: &GradedRing,
    cap: usize,
    skip: impl Fn(usize) -> bool,
) -> Result<Vec<HomogeneousRightIdeal>, ClassifyError> {
    let r = gr.ring();
    let homogeneous: Vec<usize> = gr
        .homogeneous_indices()
        .into_iter()
        .map(|(_, x)| x)
        .filter(|&x| !skip(x))
        .collect();
    let cyclic: Vec<HomogeneousRightIdeal> = homogeneous
        .par_iter()
        .map(|&x| cyclic_right_ideal(gr, x))
        .collect();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut distinct = Vec::new();
    for c in cyclic {
        if seen.insert(c.bits.clone()) {
            distinct.push(c);
        }
    }

    let zero = HomogeneousRightIdeal::new(r, Vec::new());
    let mut lattice = vec![zero];
    let mut known: HashSet<FixedBitSet> = HashSet::from([lattice[0].bits.clone()]);
    for c in &distinct {
        let current = lattice.len();
        for t in 0..current {
            if c.is_subset(&lattice[t]) {
                continue;
            }
            let join = if lattice[t].is_subset(c) {
                c.clone()
            } else {
                let mut gens = lattice[t].generators.clone();
                gens.extend(&c.generators);
                gens.sort_unstable();
                gens.dedup();
                HomogeneousRightIdeal::new(r, gens)
            };
            if known.insert(join.bits.clone()) {
                lattice.push(join);
                if lattice.len() > cap {
                    return Err(ClassifyError::IdealLatticeCap { cap });
                }
            }
        }
    }
    lattice.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(lattice)
}

/// Maximal proper members of the lattice.
pub fn maximal_proper(
    lattice: &[HomogeneousRightIdeal],
    ring_order: usize,
) -> Vec<HomogeneousRightIdeal> {
    let mut maximal: Vec<HomogeneousRightIdeal> = Vec::new();
    // descending size: a proper ideal is non-maximal iff it lies in a larger maximal one
    for ideal in lattice.iter().rev() {
        if ideal.len() == ring_order {
            continue;
        }
        if !maximal.iter().any(|m| ideal.is_subset(m)) {
            maximal.push(ideal.clone());
        }
    }
    maximal.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    maximal
}

pub fn graded_maximal_right_ideals(
    gr: &GradedRing,
    cap: usize,
) -> Result<Vec<HomogeneousRightIdeal>, ClassifyError> {
    Ok(maximal_proper(
        &homogeneous_right_ideals(gr, cap)?,
        gr.ring().order(),
    ))
}

/// Intersection of the graded-maximal right ideals; all of `R` if there are none.
pub fn intersect_ideals(maximal: &[HomogeneousRightIdeal], ring_order: usize) -> Vec<usize> {
    let mut bits = FixedBitSet::with_capacity(ring_order);
    bits.insert_range(..);
    for m in maximal {
        bits.intersect_with(&m.bits);
    }
    bits.ones().collect()
}

pub fn graded_jacobson_radical(gr: &GradedRing, cap: usize) -> Result<Vec<usize>, ClassifyError> {
    Ok(intersect_ideals(
        &graded_maximal_right_ideals(gr, cap)?,
        gr.ring().order(),
    ))
}

/// True iff every homogeneous element of the homogeneous right ideal `ideal` is nilpotent.
pub fn is_graded_nil_ideal(
    gr: &GradedRing,
    classes: &ElementClasses,
    ideal: &[usize],
) -> Result<bool, ClassifyError> {
    if !is_ideal(gr.ring(), ideal, false, true) || !is_homogeneous_set(gr, ideal) {
        return Err(ClassifyError::NotHomogeneousIdeal);
    }
    Ok(ideal
        .iter()
        .all(|&x| !gr.is_homogeneous(x) || classes.is_nilpotent(x)))
}

pub fn is_graded_local(gr: &GradedRing, cap: usize) -> Result<bool, ClassifyError> {
    Ok(graded_maximal_right_ideals(gr, cap)?.len() == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Nilpotent,
    UnitPlusNilpotent,
}

/// `x = n` (nilpotent) or `x = u + n`; indices into the ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NilGoodWitness {
    pub kind: WitnessKind,
    pub element: usize,
    pub unit_part: Option<usize>,
    pub unit_inverse: Option<usize>,
    pub nilpotent_part: usize,
    pub nilpotency_index: u32,
}

impl NilGoodWitness {
    fn nilpotent(classes: &ElementClasses, x: usize) -> Self {
        Self {
            kind: WitnessKind::Nilpotent,
            element: x,
            unit_part: None,
            unit_inverse: None,
            nilpotent_part: x,
            nilpotency_index: classes.nil_index[x],
        }
    }

    fn split(classes: &ElementClasses, x: usize, u: usize, n: usize) -> Self {
        Self {
            kind: WitnessKind::UnitPlusNilpotent,
            element: x,
            unit_part: Some(u),
            unit_inverse: classes.inverse(u),
            nilpotent_part: n,
            nilpotency_index: classes.nil_index[n],
        }
    }

    /// Recomputes every claimed fact from scratch.
    pub fn verify(&self, r: &FiniteRing) -> bool {
        let n = self.nilpotent_part;
        if self.nilpotency_index == 0 || r.pow_idx(n, self.nilpotency_index as u64) != 0 {
            return false;
        }
        match (self.kind, self.unit_part, self.unit_inverse) {
            (WitnessKind::Nilpotent, None, None) => n == self.element,
            (WitnessKind::UnitPlusNilpotent, Some(u), Some(v)) => {
                r.add_idx(u, n) == self.element
                    && r.mul_idx(u, v) == r.one_idx()
                    && r.mul_idx(v, u) == r.one_idx()
            }
            _ => false,
        }
    }

    pub fn entry(&self, gr: Option<&GradedRing>, r: &FiniteRing) -> WitnessEntry {
        WitnessEntry {
            element: r.element(self.element),
            degree: gr.and_then(|g| g.degree(self.element)),
            kind: self.kind,
            unit: self.unit_part.map(|u| r.element(u)),
            nilpotent: r.element(self.nilpotent_part),
            index: self.nilpotency_index,
        }
    }
}

/// Serialized witness: `{element, degree, kind, unit, nilpotent, index}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub element: RingElement,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<usize>,
    pub kind: WitnessKind,
    pub unit: Option<RingElement>,
    pub nilpotent: RingElement,
    pub index: u32,
}

/// First witness: `x` itself if nilpotent, else the least nilpotent `n`
/// with `x - n` a unit.
pub fn nil_good_witness(
    r: &FiniteRing,
    classes: &ElementClasses,
    nilpotents: &[usize],
    x: usize,
) -> Option<NilGoodWitness> {
    if classes.is_nilpotent(x) {
        return Some(NilGoodWitness::nilpotent(classes, x));
    }
    nilpotents.iter().find_map(|&n| {
        let u = r.sub_idx(x, n);
        classes
            .is_unit(u)
            .then(|| NilGoodWitness::split(classes, x, u, n))
    })
}

pub fn nil_good_decomposition(
    r: &FiniteRing,
    classes: &ElementClasses,
    x: &RingElement,
) -> Result<Option<NilGoodWitness>, RingError> {
    r.check(x)?;
    Ok(nil_good_witness(
        r,
        classes,
        &classes.nilpotents(),
        r.index(x),
    ))
}

/// Nilpotent homogeneous elements per degree, in canonical order (0 in every degree).
pub fn homogeneous_nilpotents(gr: &GradedRing, classes: &ElementClasses) -> Vec<Vec<usize>> {
    (0..gr.group().order())
        .map(|g| {
            gr.component_indices(g)
                .iter()
                .copied()
                .filter(|&x| classes.is_nilpotent(x))
                .collect()
        })
        .collect()
}

/// Same-degree search: nilpotency first, then homogeneous nilpotents of the
/// element's degree. `x` must be homogeneous.
pub fn graded_nil_good_witness(
    gr: &GradedRing,
    classes: &ElementClasses,
    nil_by_degree: &[Vec<usize>],
    x: usize,
) -> Option<NilGoodWitness> {
    let g = gr
        .degree(x)
        .expect("graded witness requested for a non-homogeneous element");
    if classes.is_nilpotent(x) {
        return Some(NilGoodWitness::nilpotent(classes, x));
    }
    unit_plus_nilpotent_of_degree(gr.ring(), classes, &nil_by_degree[g], x)
}

fn unit_plus_nilpotent_of_degree(
    r: &FiniteRing,
    classes: &ElementClasses,
    nils: &[usize],
    x: usize,
) -> Option<NilGoodWitness> {
    nils.iter().find_map(|&n| {
        let u = r.sub_idx(x, n);
        classes
            .is_unit(u)
            .then(|| NilGoodWitness::split(classes, x, u, n))
    })
}

pub fn graded_nil_good_decomposition(
    gr: &GradedRing,
    classes: &ElementClasses,
    hx: &HomogeneousElement,
) -> Option<NilGoodWitness> {
    let x = gr.ring().index(&hx.value);
    graded_nil_good_witness(gr, classes, &homogeneous_nilpotents(gr, classes), x)
}

/// Outcome of a ring-level predicate quantified over a set of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub checked: usize,
    /// First failing element (canonical order).
    pub counterexample: Option<usize>,
    pub witnesses: Vec<NilGoodWitness>,
}

impl Verdict {
    fn collect(results: Vec<(usize, Option<NilGoodWitness>)>) -> Self {
        let checked = results.len();
        let counterexample = results.iter().find(|(_, w)| w.is_none()).map(|(x, _)| *x);
        Self {
            holds: counterexample.is_none(),
            checked,
            counterexample,
            witnesses: results.into_iter().filter_map(|(_, w)| w).collect(),
        }
    }
}

pub fn is_nil_good_ring(r: &FiniteRing, classes: &ElementClasses) -> Verdict {
    let nils = classes.nilpotents();
    Verdict::collect(
        (0..r.order())
            .into_par_iter()
            .map(|x| (x, nil_good_witness(r, classes, &nils, x)))
            .collect(),
    )
}

pub fn is_graded_nil_good(gr: &GradedRing, classes: &ElementClasses) -> Verdict {
    let nils = homogeneous_nilpotents(gr, classes);
    let homogeneous = gr.homogeneous_indices();
    Verdict::collect(
        homogeneous
            .par_iter()
            .map(|&(_, x)| (x, graded_nil_good_witness(gr, classes, &nils, x)))
            .collect(),
    )
}

/// Every nonzero homogeneous element is a homogeneous unit plus a
/// homogeneous nilpotent of the same degree.
pub fn is_graded_fine(gr: &GradedRing, classes: &ElementClasses) -> Verdict {
    let nils = homogeneous_nilpotents(gr, classes);
    let homogeneous = gr.homogeneous_indices();
    Verdict::collect(
        homogeneous
            .par_iter()
            .filter(|&&(_, x)| x != 0)
            .map(|&(g, x)| {
                (
                    x,
                    unit_plus_nilpotent_of_degree(gr.ring(), classes, &nils[g], x),
                )
            })
            .collect(),
    )
}

/// Every element is an idempotent plus a nilpotent; returns the first
/// failure otherwise.
pub fn is_nil_clean_ring(r: &FiniteRing, classes: &ElementClasses) -> Result<(), usize> {
    let idempotents = classes.idempotents();
    let failure = (0..r.order()).into_par_iter().find_first(|&x| {
        !idempotents
            .iter()
            .any(|&e| classes.is_nilpotent(r.sub_idx(x, e)))
    });
    failure.map_or(Ok(()), Err)
}

/// `R/I` on minimal coset representatives, with the induced grading.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    pub graded: GradedRing,
    /// `projection[x]` is the quotient index of the coset of `x`.
    pub projection: Vec<usize>,
    /// `representative[q]` is the minimal element of coset `q`.
    pub representative: Vec<usize>,
}

struct CosetOps<'a> {
    ring: &'a FiniteRing,
    rep: &'a [usize],
}

impl AdditiveOps for CosetOps<'_> {
    fn add(&self, a: usize, b: usize) -> usize {
        self.rep[self.ring.add_idx(a, b)]
    }
    fn neg(&self, a: usize) -> usize {
        self.rep[self.ring.neg_idx(a)]
    }
}

pub fn quotient_graded(gr: &GradedRing, ideal: &[usize]) -> Result<GradedQuotient, ClassifyError> {
    let r = gr.ring();
    if !is_additive_subgroup(r, ideal) || !is_homogeneous_set(gr, ideal) {
        return Err(ClassifyError::NotHomogeneousIdeal);
    }
    if !is_ideal(r, ideal, true, true) {
        return Err(ClassifyError::NotTwoSided);
    }
    let n = r.order();
    let mut rep = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if rep[x] == usize::MAX {
            for &i in ideal {
                rep[r.add_idx(x, i)] = x;
            }
            reps.push(x);
        }
    }
    let ops = CosetOps { ring: r, rep: &rep };
    let basis = cyclic_decomposition(&ops, &reps, n);
    let (ring, embedding) = build_on_basis(
        &basis,
        n,
        |a, b| rep[r.add_idx(a, b)],
        |a, b| rep[r.mul_idx(a, b)],
        rep[r.one_idx()],
    );
    let mut position = vec![usize::MAX; n];
    for (q, &a) in embedding.iter().enumerate() {
        position[a] = q;
    }
    let projection: Vec<usize> = (0..n).map(|x| position[rep[x]]).collect();
    let group = gr.group().clone();
    let generators = (0..group.order())
        .map(|g| {
            gr.component_generators(g)
                .iter()
                .map(|c| projection[r.index(c)])
                .filter(|&q| q != 0)
                .map(|q| ring.element(q))
                .collect()
        })
        .collect();
    let graded = GradedRing::new(ring, Grading { group, generators })?;
    Ok(GradedQuotient {
        graded,
        projection,
        representative: embedding,
    })
}

/// Lazily computed facts about one graded ring, shared across predicates.
#[derive(Debug)]
pub struct GradedAnalysis {
    graded: Arc<GradedRing>,
    limits: Limits,
    classes: OnceLock<ElementClasses>,
    nil_by_degree: OnceLock<Vec<Vec<usize>>>,
    jacobson: OnceLock<Vec<usize>>,
    lattice: OnceLock<Result<Vec<HomogeneousRightIdeal>, ClassifyError>>,
    maximal: OnceLock<Result<Vec<HomogeneousRightIdeal>, ClassifyError>>,
    graded_jacobson: OnceLock<Result<Vec<usize>, ClassifyError>>,
    nil_good: OnceLock<Verdict>,
    graded_nil_good: OnceLock<Verdict>,
    graded_fine: OnceLock<Verdict>,
    identity_component: OnceLock<(FiniteRing, Vec<usize>)>,
}

impl GradedAnalysis {
    pub fn new(graded: impl Into<Arc<GradedRing>>, limits: Limits) -> Self {
        Self {
            graded: graded.into(),
            limits,
            classes: OnceLock::new(),
            nil_by_degree: OnceLock::new(),
            jacobson: OnceLock::new(),
            lattice: OnceLock::new(),
            maximal: OnceLock::new(),
            graded_jacobson: OnceLock::new(),
            nil_good: OnceLock::new(),
            graded_nil_good: OnceLock::new(),
            graded_fine: OnceLock::new(),
            identity_component: OnceLock::new(),
        }
    }

    pub fn graded(&self) -> &GradedRing {
        &self.graded
    }

    pub fn shared(&self) -> Arc<GradedRing> {
        Arc::clone(&self.graded)
    }

    pub fn ring(&self) -> &FiniteRing {
        self.graded.ring()
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn classes(&self) -> &ElementClasses {
        self.classes.get_or_init(|| element_classes(self.ring()))
    }

    pub fn homogeneous_nilpotents(&self) -> &[Vec<usize>] {
        self.nil_by_degree
            .get_or_init(|| homogeneous_nilpotents(&self.graded, self.classes()))
    }

    pub fn jacobson(&self) -> &[usize] {
        self.jacobson
            .get_or_init(|| jacobson_radical(self.ring(), self.classes()))
    }

    pub fn lattice(&self) -> Result<&[HomogeneousRightIdeal], ClassifyError> {
        self.lattice
            .get_or_init(|| {
                homogeneous_right_ideals_with_units(
                    &self.graded,
                    self.classes(),
                    self.limits.ideal_lattice_cap,
                )
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn graded_maximal(&self) -> Result<&[HomogeneousRightIdeal], ClassifyError> {
        self.maximal
            .get_or_init(|| Ok(maximal_proper(self.lattice()?, self.ring().order())))
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn graded_jacobson(&self) -> Result<&[usize], ClassifyError> {
        self.graded_jacobson
            .get_or_init(|| {
                Ok(intersect_ideals(
                    self.graded_maximal()?,
                    self.ring().order(),
                ))
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn is_graded_local(&self) -> Result<bool, ClassifyError> {
        Ok(self.graded_maximal()?.len() == 1)
    }

    pub fn nil_good(&self) -> &Verdict {
        self.nil_good
            .get_or_init(|| is_nil_good_ring(self.ring(), self.classes()))
    }

    pub fn graded_nil_good(&self) -> &Verdict {
        self.graded_nil_good
            .get_or_init(|| is_graded_nil_good(&self.graded, self.classes()))
    }

    pub fn graded_fine(&self) -> &Verdict {
        self.graded_fine
            .get_or_init(|| is_graded_fine(&self.graded, self.classes()))
    }

    /// `R_e` as a ring, with its embedding into `R`.
    pub fn identity_component(&self) -> &(FiniteRing, Vec<usize>) {
        self.identity_component.get_or_init(|| {
            let members = self.graded.component_indices(self.graded.identity());
            self.ring()
                .subring(members)
                .expect("R_e is a unital subring")
        })
    }

    /// Whether every homogeneous element is nilpotent.
    pub fn is_graded_nil(&self) -> bool {
        self.graded
            .homogeneous_indices()
            .iter()
            .all(|&(_, x)| self.classes().is_nilpotent(x))
    }

    pub fn report(&self) -> Result<ClassificationReport, ClassifyError> {
        ClassificationReport::build(self)
    }
}

/// JSON-facing summary of every predicate on a graded ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub order: usize,
    pub group_order: usize,
    pub degenerate: bool,
    pub support: Vec<usize>,
    pub is_commutative: bool,
    pub is_nil_good: bool,
    pub is_graded_nil_good: bool,
    pub is_graded_fine: bool,
    pub is_graded_local: bool,
    pub is_graded_nil: bool,
    pub unit_count: usize,
    pub nilpotent_count: usize,
    pub idempotent_count: usize,
    pub jacobson_radical: Vec<RingElement>,
    pub graded_jacobson_radical: Vec<RingElement>,
    pub graded_maximal_right_ideals: Vec<Vec<RingElement>>,
    pub counterexamples: Counterexamples,
    /// One witness per homogeneous element for the graded nil-good check.
    pub graded_witnesses: Vec<WitnessEntry>,
    pub nil_good_elements_checked: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexamples {
    pub nil_good: Option<RingElement>,
    pub graded_nil_good: Option<RingElement>,
    pub graded_fine: Option<RingElement>,
    pub graded_nil: Option<RingElement>,
}

impl ClassificationReport {
    fn build(a: &GradedAnalysis) -> Result<Self, ClassifyError> {
        let r = a.ring();
        let gr = a.graded();
        let classes = a.classes();
        let elems = |xs: &[usize]| xs.iter().map(|&x| r.element(x)).collect::<Vec<_>>();
        let nil_good = a.nil_good();
        let graded_nil_good = a.graded_nil_good();
        let graded_fine = a.graded_fine();
        let maximal = a.graded_maximal()?;
        let graded_nil_counter = gr
            .homogeneous_indices()
            .into_iter()
            .find(|&(_, x)| !classes.is_nilpotent(x))
            .map(|(_, x)| r.element(x));
        Ok(Self {
            order: r.order(),
            group_order: gr.group().order(),
            degenerate: r.is_zero_ring(),
            support: gr.support(),
            is_commutative: r.is_commutative(),
            is_nil_good: nil_good.holds,
            is_graded_nil_good: graded_nil_good.holds,
            is_graded_fine: graded_fine.holds,
            is_graded_local: maximal.len() == 1,
            is_graded_nil: graded_nil_counter.is_none(),
            unit_count: classes.units().len(),
            nilpotent_count: classes.nilpotents().len(),
            idempotent_count: classes.idempotents().len(),
            jacobson_radical: elems(a.jacobson()),
            graded_jacobson_radical: elems(a.graded_jacobson()?),
            graded_maximal_right_ideals: maximal.iter().map(|m| elems(&m.generators)).collect(),
            counterexamples: Counterexamples {
                nil_good: nil_good.counterexample.map(|x| r.element(x)),
                graded_nil_good: graded_nil_good.counterexample.map(|x| r.element(x)),
                graded_fine: graded_fine.counterexample.map(|x| r.element(x)),
                graded_nil: graded_nil_counter,
            },
            graded_witnesses: graded_nil_good
                .witnesses
                .iter()
                .map(|w| w.entry(Some(gr), r))
                .collect(),
            nil_good_elements_checked: nil_good.checked,
        })
    }
}
