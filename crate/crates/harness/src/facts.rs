//! Derived facts about corpus instances, memoized on the instance.

use gradering_core::classify::{is_graded_nil_ideal, is_ideal};
use gradering_core::{
    is_nil_clean_ring, quotient_graded, trivial_grading, ClassifyError, FiniteGroup,
    GradedAnalysis, GradedRing,
};

use crate::corpus::Instance;

impl Instance {
    /// `R_e` as a trivially graded ring; the instance itself when `G` is trivial.
    pub fn identity_component(&self) -> &GradedAnalysis {
        if self.analysis.graded().group().order() == 1 {
            return &self.analysis;
        }
        self.identity
            .get_or_init(|| identity_analysis(&self.analysis))
    }

    /// Index in `R` of each element of [`Instance::identity_component`].
    pub fn identity_embedding(&self) -> Vec<usize> {
        if self.analysis.graded().group().order() == 1 {
            (0..self.analysis.ring().order()).collect()
        } else {
            self.analysis.identity_component().1.clone()
        }
    }

    /// `R / J^g(R)` with its induced grading.
    pub fn modulo_graded_radical(&self) -> Result<&GradedAnalysis, ClassifyError> {
        self.by_radical
            .get_or_init(|| {
                let jg = self.analysis.graded_jacobson()?;
                let q = quotient_graded(self.graded(), jg)?;
                Ok(GradedAnalysis::new(
                    q.graded,
                    self.analysis.limits().clone(),
                ))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Nonzero homogeneous two-sided ideals all of whose homogeneous elements
    /// are nilpotent, in lattice order.
    pub fn graded_nil_ideals(&self) -> Result<Vec<Vec<usize>>, ClassifyError> {
        let an = &self.analysis;
        let mut out = Vec::new();
        for ideal in an.lattice()? {
            if ideal.len() > 1
                && is_ideal(an.ring(), &ideal.elements, true, false)
                && is_graded_nil_ideal(an.graded(), an.classes(), &ideal.elements)?
            {
                out.push(ideal.elements.clone());
            }
        }
        Ok(out)
    }
}

/// `R_e` as a trivially graded ring, analysed afresh.
pub fn identity_analysis(an: &GradedAnalysis) -> GradedAnalysis {
    let (re, _) = an.identity_component();
    GradedAnalysis::new(
        trivial_grading(re.clone(), FiniteGroup::trivial()),
        an.limits().clone(),
    )
}

pub fn graded_nil_good(an: &GradedAnalysis) -> bool {
    an.graded_nil_good().holds
}

pub fn nil_good(an: &GradedAnalysis) -> bool {
    an.nil_good().holds
}

pub fn radical_is_graded_nil(an: &GradedAnalysis) -> Result<bool, ClassifyError> {
    is_graded_nil_ideal(an.graded(), an.classes(), an.graded_jacobson()?)
}

/// A prime `p` with `G` a finite `p`-group and `p * 1` nilpotent in `R`.
///
/// For trivial `G` every prime qualifies on the group side, so the primes
/// dividing the characteristic are tried (`2` for the zero ring).
pub fn nilpotent_prime(an: &GradedAnalysis) -> Option<u64> {
    let r = an.ring();
    let order = an.graded().group().order() as u64;
    let candidates: Vec<u64> = if order == 1 {
        let c = r.characteristic();
        if c == 1 {
            vec![2]
        } else {
            prime_factors(c)
        }
    } else {
        match prime_factors(order).as_slice() {
            [p] => vec![*p],
            _ => Vec::new(),
        }
    };
    candidates
        .into_iter()
        .find(|&p| an.classes().is_nilpotent(r.integer(p as i64)))
}

pub fn is_two_group(gr: &GradedRing) -> bool {
    matches!(
        prime_factors(gr.group().order() as u64).as_slice(),
        [] | [2]
    )
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// First unit or nilpotent that is not homogeneous.
pub fn inhomogeneous_unit_or_nilpotent(an: &GradedAnalysis) -> Option<usize> {
    let c = an.classes();
    (0..an.ring().order())
        .find(|&x| (c.is_unit(x) || c.is_nilpotent(x)) && !an.graded().is_homogeneous(x))
}

/// First unit outside `R_e`.
pub fn unit_outside_identity_component(an: &GradedAnalysis) -> Option<usize> {
    let gr = an.graded();
    an.classes()
        .units()
        .into_iter()
        .find(|&u| !gr.contains(gr.identity(), u))
}

/// Some `u` with `u` and `1 - u` both units of `R_e`.
pub fn unity_split_in_identity_units(an: &GradedAnalysis) -> Option<usize> {
    let gr = an.graded();
    let r = an.ring();
    let c = an.classes();
    gr.component_indices(gr.identity())
        .iter()
        .copied()
        .find(|&u| c.is_unit(u) && c.is_unit(r.sub_idx(r.one_idx(), u)))
}

/// Whether `R_g R_{g^-1} = 0` for every `g != e`, checked on component generators.
pub fn opposite_components_annihilate(gr: &GradedRing) -> bool {
    let r = gr.ring();
    let group = gr.group();
    (0..group.order()).filter(|&g| g != gr.identity()).all(|g| {
        let inv = group.inverse(g);
        gr.component_generators(g).iter().all(|x| {
            gr.component_generators(inv)
                .iter()
                .all(|y| r.index(&r.mul(x, y)) == 0)
        })
    })
}

pub fn group_order_is_unit(an: &GradedAnalysis) -> bool {
    let r = an.ring();
    an.classes()
        .is_unit(r.integer(an.graded().group().order() as i64))
}

pub fn nil_clean(an: &GradedAnalysis) -> bool {
    is_nil_clean_ring(an.ring(), an.classes()).is_ok()
}
