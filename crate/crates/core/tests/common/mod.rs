#![allow(dead_code)]

use gradering_core::{
    graded::trivial_grading, matrix_graded, trivial_extension, truncated_polynomial, FiniteGroup,
    FiniteRing, GradedBimodule, GradedRing, MatrixGradingSpec, RingElement, RingSpec,
};

pub const CAP: usize = 1 << 16;

pub fn el(c: &[u32]) -> RingElement {
    RingElement::new(c.to_vec())
}

pub fn z(n: u32) -> FiniteRing {
    FiniteRing::cyclic(n)
}

/// `Z_p[x]/(x^2)` written out by hand.
pub fn dual(p: u32) -> FiniteRing {
    FiniteRing::from_spec(
        &RingSpec {
            additive_orders: vec![p, p],
            unity: vec![1, 0],
            mul: vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]],
        },
        CAP,
    )
    .unwrap()
}

/// `Z_2[x]/(x^2)` graded by `C_2` with `x` in degree `g`.
pub fn ex_dual_z2() -> GradedRing {
    truncated_polynomial(&z(2), 2, CAP).unwrap()
}

/// `M_2(Z_2)` with diagonal in degree `e` and antidiagonal in degree `g`.
pub fn checkerboard() -> GradedRing {
    let base = trivial_grading(z(2), FiniteGroup::cyclic(2));
    matrix_graded(
        &base,
        &MatrixGradingSpec {
            n: 2,
            sigma: vec![0, 1],
        },
        CAP,
    )
    .unwrap()
    .graded
}

/// `Z_2 x Z_2` trivial extension with `A = Z_2` in degree `e`, `E = Z_2` in degree `g`.
pub fn te_z2() -> GradedRing {
    let a = trivial_grading(z(2), FiniteGroup::cyclic(2));
    trivial_extension(&a, &GradedBimodule::shifted_regular(&a, 1), CAP)
        .unwrap()
        .graded
}

/// Every subset of a ring of order at most 16 that is a right ideal
/// (bitmask over element indices), found by brute force.
pub fn all_right_ideals(r: &FiniteRing) -> Vec<u32> {
    let n = r.order();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let has = |x: usize| mask >> x & 1 == 1;
        let closed = (0..n)
            .filter(|&a| has(a))
            .all(|a| (0..n).all(|b| (!has(b) || has(r.add_idx(a, b))) && has(r.mul_idx(a, b))));
        if closed {
            out.push(mask);
        }
    }
    out
}

pub fn mask_elements(mask: u32) -> Vec<usize> {
    (0..32).filter(|&x| mask >> x & 1 == 1).collect()
}

pub fn maximal_proper(masks: &[u32], full: u32) -> Vec<u32> {
    masks
        .iter()
        .copied()
        .filter(|&m| m != full && !masks.iter().any(|&o| o != full && o != m && o & m == m))
        .collect()
}

pub fn intersect(masks: &[u32], full: u32) -> Vec<usize> {
    mask_elements(masks.iter().fold(full, |acc, &m| acc & m))
}

/// Units by exhaustive search for a two-sided inverse.
pub fn units_by_search(r: &FiniteRing) -> Vec<usize> {
    let one = r.one_idx();
    (0..r.order())
        .filter(|&x| (0..r.order()).any(|y| r.mul_idx(x, y) == one && r.mul_idx(y, x) == one))
        .collect()
}

/// Nilpotents by repeated multiplication for `|R|` steps.
pub fn nilpotents_by_powers(r: &FiniteRing) -> Vec<usize> {
    (0..r.order())
        .filter(|&x| {
            let mut y = x;
            for _ in 0..r.order() {
                if y == 0 {
                    return true;
                }
                y = r.mul_idx(y, x);
            }
            y == 0
        })
        .collect()
}
