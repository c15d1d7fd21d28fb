mod common;

use common::*;
use gradering_core::classify::{element_classes, jacobson_radical};
use gradering_core::{
    direct_product, graded_direct_product, graded_jacobson_radical, group_ring_coarse,
    group_ring_graded, is_good_form, is_graded_nil_good, matrix_graded, similarity_to_good_form,
    te_unit_nilpotent_transfer, trivial_extension, trivial_grading, truncated_polynomial,
    FiniteGroup, GoodFormView, GradedBimodule, GradedRing, GroupSpec, MatrixGradingSpec,
    RingElement,
};

const LATTICE_CAP: usize = 20_000;

fn components(gr: &GradedRing, g: usize) -> Vec<RingElement> {
    gr.component(g).unwrap()
}

#[test]
fn trivial_extension_of_z2_by_z2() {
    let a = trivial_grading(z(2), FiniteGroup::cyclic(2));
    let te = trivial_extension(&a, &GradedBimodule::shifted_regular(&a, 1), CAP).unwrap();
    let gr = &te.graded;
    assert_eq!(components(gr, 0), vec![el(&[0, 0]), el(&[1, 0])]);
    assert_eq!(components(gr, 1), vec![el(&[0, 0]), el(&[0, 1])]);
    // (a,e)(b,f) = (ab, af + eb)
    let r = gr.ring();
    for x in 0..4usize {
        for y in 0..4usize {
            let (a1, e1) = ((x & 1) as u32, (x >> 1) as u32);
            let (b1, f1) = ((y & 1) as u32, (y >> 1) as u32);
            let want = el(&[(a1 * b1) % 2, (a1 * f1 + e1 * b1) % 2]);
            assert_eq!(r.mul(&r.element(x), &r.element(y)), want);
        }
    }
    assert_eq!(r.mul(&el(&[1, 1]), &el(&[1, 1])), el(&[1, 0]));
}

#[test]
fn transfer_identities() {
    let a = trivial_grading(z(2), FiniteGroup::cyclic(2));
    let te = trivial_extension(&a, &GradedBimodule::shifted_regular(&a, 1), CAP).unwrap();
    let t = te_unit_nilpotent_transfer(&te).unwrap();
    assert_eq!(t.units, vec![el(&[1, 0]), el(&[1, 1])]);
    assert_eq!(t.nilpotents, vec![el(&[0, 0]), el(&[0, 1])]);

    let a4 = trivial_grading(z(4), FiniteGroup::trivial());
    let te4 = trivial_extension(&a4, &GradedBimodule::shifted_regular(&a4, 0), CAP).unwrap();
    let t4 = te_unit_nilpotent_transfer(&te4).unwrap();
    assert_eq!((t4.units.len(), t4.nilpotents.len()), (8, 8));

    let zero = trivial_extension(&a4, &GradedBimodule::zero(&a4), CAP).unwrap();
    let tz = te_unit_nilpotent_transfer(&zero).unwrap();
    assert_eq!(tz.units, vec![el(&[1]), el(&[3])]);
}

/// Ordinary group ring product: (sum a_g g)(sum b_h h) = sum a_g b_h gh.
fn convolution(gr: &gradering_core::GroupRing, x: usize, y: usize) -> usize {
    let base = gr.base.ring();
    let group = gr.base.group();
    let n = group.order();
    let mut coeffs = vec![0usize; n];
    for g in 0..n {
        for h in 0..n {
            let p = base.mul_idx(gr.coefficient(x, g), gr.coefficient(y, h));
            let gh = group.op(g, h);
            coeffs[gh] = base.add_idx(coeffs[gh], p);
        }
    }
    let big = gr.graded.ring();
    (0..n).fold(0, |acc, g| big.add_idx(acc, gr.embed(coeffs[g], g)))
}

#[test]
fn group_ring_over_abelian_group_is_ordinary() {
    for base in [ex_dual_z2(), trivial_grading(z(4), FiniteGroup::cyclic(2))] {
        let gr = group_ring_graded(&base, CAP).unwrap();
        let r = gr.graded.ring();
        assert_eq!(r.order(), 16);
        for x in 0..r.order() {
            for y in 0..r.order() {
                assert_eq!(r.mul_idx(x, y), convolution(&gr, x, y));
            }
        }
    }
}

#[test]
fn group_ring_components() {
    let base = ex_dual_z2();
    let gr = group_ring_graded(&base, CAP).unwrap();
    // (R[G])_e = R_e e + R_g g = {a e + b x g}
    let want: Vec<usize> = {
        let mut v = Vec::new();
        for a in [0, 1] {
            for b in [0, 2] {
                let big = gr.graded.ring();
                v.push(big.add_idx(gr.embed(a, 0), gr.embed(b, 1)));
            }
        }
        v.sort_unstable();
        v
    };
    assert_eq!(gr.graded.component_indices(0), want.as_slice());

    let triv = group_ring_graded(&trivial_grading(z(3), FiniteGroup::cyclic(2)), CAP).unwrap();
    let e: Vec<usize> = (0..3).map(|a| triv.embed(a, 0)).collect();
    let g: Vec<usize> = (0..3).map(|a| triv.embed(a, 1)).collect();
    assert_eq!(triv.graded.component_indices(0), e.as_slice());
    assert_eq!(triv.graded.component_indices(1), g.as_slice());
}

#[test]
fn twisted_group_ring_over_s3_validates() {
    let s3 = gradering_core::make_group(
        &GroupSpec::Table {
            cayley: s3_table(),
            identity: 0,
            labels: None,
        },
        64,
    )
    .unwrap();
    let base = trivial_grading(z(2), s3.clone());
    let gr = group_ring_graded(&base, CAP).unwrap();
    assert_eq!(gr.graded.ring().order(), 64);
    // over a trivially graded base the twist disappears
    for x in 0..64 {
        for y in 0..64 {
            assert_eq!(gr.graded.ring().mul_idx(x, y), convolution(&gr, x, y));
        }
    }
}

fn s3_table() -> Vec<Vec<usize>> {
    // permutations of {0,1,2} in a fixed order; composition (p*q)(i) = p(q(i))
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ];
    let find = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| find([p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect()
}

#[test]
fn identity_component_map_is_a_ring_isomorphism() {
    for base in [ex_dual_z2(), truncated_polynomial(&z(2), 3, CAP).unwrap()] {
        let gr = group_ring_graded(&base, CAP).unwrap();
        let f = gr.identity_component_map();
        let r = base.ring();
        let big = gr.graded.ring();
        let mut image = f.clone();
        image.sort_unstable();
        image.dedup();
        assert_eq!(image, gr.graded.component_indices(0));
        assert_eq!(f[r.one_idx()], big.one_idx());
        for a in 0..r.order() {
            for b in 0..r.order() {
                assert_eq!(f[r.add_idx(a, b)], big.add_idx(f[a], f[b]));
                assert_eq!(f[r.mul_idx(a, b)], big.mul_idx(f[a], f[b]));
            }
        }
    }
}

#[test]
fn coarse_group_ring_of_z4_over_c2() {
    let base = trivial_grading(z(4), FiniteGroup::cyclic(2));
    let cg = group_ring_coarse(&base, &base.group().whole(), CAP).unwrap();
    let r = cg.graded.ring();
    assert_eq!(r.order(), 16);
    assert_eq!(cg.quotient.group.order(), 1);
    // Delta is spanned by h - 1 and has 4 elements
    assert_eq!(cg.delta.len(), 4);
    assert_eq!(r.additive_span(&cg.delta_generators), cg.delta);
    let t = cg.delta_generators[0];
    // (h-1)^2 = -2(h-1)
    assert_eq!(r.mul_idx(t, t), r.scale_idx(t, -2));
    for &a in &cg.delta {
        for &b in &cg.delta {
            for &c in &cg.delta {
                assert_eq!(r.mul_idx(r.mul_idx(a, b), c), 0);
            }
        }
    }
    check_augmentation(&cg);
}

fn check_augmentation(cg: &gradering_core::CoarseGroupRing) {
    let big = cg.graded.ring();
    let base = cg.coarse_base.ring();
    let aug = &cg.augmentation;
    let mut image = aug.clone();
    image.sort_unstable();
    image.dedup();
    assert_eq!(image, (0..base.order()).collect::<Vec<_>>());
    assert_eq!(aug[big.one_idx()], base.one_idx());
    for x in 0..big.order() {
        for y in 0..big.order() {
            assert_eq!(aug[big.add_idx(x, y)], base.add_idx(aug[x], aug[y]));
            assert_eq!(aug[big.mul_idx(x, y)], base.mul_idx(aug[x], aug[y]));
        }
        if let Some(d) = cg.graded.degree(x) {
            assert!(cg.coarse_base.contains(d, aug[x]));
        }
    }
    assert!(gradering_core::classify::is_homogeneous_set(
        &cg.graded, &cg.delta
    ));
}

#[test]
fn coarse_group_ring_trivial_subgroup_and_graded_base() {
    let base = ex_dual_z2();
    let cg = group_ring_coarse(&base, &base.group().trivial_subgroup(), CAP).unwrap();
    assert_eq!(cg.graded.ring(), base.ring());
    assert_eq!(cg.delta, vec![0]);
    check_augmentation(&cg);

    let cg = group_ring_coarse(&base, &base.group().whole(), CAP).unwrap();
    let r = cg.graded.ring();
    assert_eq!(r.order(), 16);
    assert_eq!(cg.graded.support(), vec![0]);
    let c = element_classes(r);
    assert!(cg.delta.iter().all(|&x| c.is_nilpotent(x)));
    check_augmentation(&cg);
}

#[test]
fn matrix_grading_uniform_sigma() {
    let base = ex_dual_z2();
    let m = matrix_graded(
        &base,
        &MatrixGradingSpec {
            n: 2,
            sigma: vec![0, 0],
        },
        CAP,
    )
    .unwrap();
    for lambda in 0..2 {
        let want = m.lift(base.component_indices(lambda));
        assert_eq!(m.graded.component_indices(lambda), want.as_slice());
    }
}

#[test]
fn checkerboard_grading() {
    let cb = checkerboard();
    // entries row-major (a11, a12, a21, a22)
    let diag: Vec<RingElement> = components(&cb, 0);
    assert_eq!(diag.len(), 4);
    assert!(diag.iter().all(|x| x.coeffs[1] == 0 && x.coeffs[2] == 0));
    let anti = components(&cb, 1);
    assert!(anti.iter().all(|x| x.coeffs[0] == 0 && x.coeffs[3] == 0));
    assert!(!cb.ring().is_commutative());
}

#[test]
fn single_entry_matrix_conjugates_the_grading() {
    let s3 = gradering_core::make_group(
        &GroupSpec::Table {
            cayley: s3_table(),
            identity: 0,
            labels: None,
        },
        64,
    )
    .unwrap();
    let base = group_ring_graded(&trivial_grading(z(2), s3.clone()), CAP)
        .unwrap()
        .graded;
    let s = 3;
    let m = matrix_graded(
        &base,
        &MatrixGradingSpec {
            n: 1,
            sigma: vec![s],
        },
        CAP,
    )
    .unwrap();
    for lambda in 0..6 {
        let d = s3.op(s3.op(s, lambda), s3.inverse(s));
        assert_eq!(
            m.graded.component_indices(lambda),
            base.component_indices(d)
        );
    }
}

#[test]
fn matrix_multiplication_matches_naive_product() {
    let base = trivial_grading(z(3), FiniteGroup::trivial());
    let m = matrix_graded(
        &base,
        &MatrixGradingSpec {
            n: 2,
            sigma: vec![0, 0],
        },
        CAP,
    )
    .unwrap();
    let r = m.graded.ring();
    for x in (0..r.order()).step_by(7) {
        for y in (0..r.order()).step_by(5) {
            let (a, b) = (m.entries(x), m.entries(y));
            let want: Vec<usize> = (0..4)
                .map(|p| {
                    let (i, j) = (p / 2, p % 2);
                    (a[i * 2] * b[j] + a[i * 2 + 1] * b[2 + j]) % 3
                })
                .collect();
            assert_eq!(m.entries(r.mul_idx(x, y)), want);
        }
    }
}

#[test]
fn lemma_product_radical() {
    let parts = [ex_dual_z2(), trivial_grading(z(3), FiniteGroup::cyclic(2))];
    let prod = graded_direct_product(&[&parts[0], &parts[1]], CAP).unwrap();
    let jg = graded_jacobson_radical(&prod, LATTICE_CAP).unwrap();
    let j0 = graded_jacobson_radical(&parts[0], LATTICE_CAP).unwrap();
    let j1 = graded_jacobson_radical(&parts[1], LATTICE_CAP).unwrap();
    let r = prod.ring();
    let mut want = Vec::new();
    for &a in &j0 {
        for &b in &j1 {
            let mut c = parts[0].ring().element(a).coeffs;
            c.extend(parts[1].ring().element(b).coeffs);
            want.push(r.index(&RingElement::new(c)));
        }
    }
    want.sort_unstable();
    assert_eq!(jg, want);
}

#[test]
fn lemma_matrix_radical_small() {
    let base = ex_dual_z2();
    let m = matrix_graded(
        &base,
        &MatrixGradingSpec {
            n: 2,
            sigma: vec![0, 0],
        },
        CAP,
    )
    .unwrap();
    let jg = graded_jacobson_radical(&m.graded, LATTICE_CAP).unwrap();
    assert_eq!(
        jg,
        m.lift(&graded_jacobson_radical(&base, LATTICE_CAP).unwrap())
    );
    // ungraded radical of M_2 agrees as well
    let r = m.graded.ring();
    assert_eq!(jacobson_radical(r, &element_classes(r)), jg);
}

#[test]
fn good_form_predicate() {
    let base = trivial_grading(z(2), FiniteGroup::trivial());
    let m = matrix_graded(
        &base,
        &MatrixGradingSpec {
            n: 2,
            sigma: vec![0, 0],
        },
        CAP,
    )
    .unwrap();
    let mat = |e: [usize; 4]| m.from_entries(&e);
    assert!(is_good_form(&m, mat([1, 1, 1, 1])));
    assert!(!is_good_form(&m, mat([1, 0, 0, 0])));
    assert!(!is_good_form(&m, mat([0, 1, 1, 1])));
    let view = GoodFormView::of(&m, mat([1, 0, 1, 1]));
    assert_eq!(
        view.reassemble(),
        vec![vec![el(&[1]), el(&[0])], vec![el(&[1]), el(&[1])]]
    );
}

fn gl2(p: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if !(a * d + p * p - b * c).is_multiple_of(p) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn diag_one_zero_over_z2_has_no_good_form_conjugate() {
    let base = trivial_grading(z(2), FiniteGroup::trivial());
    let m = matrix_graded(
        &base,
        &MatrixGradingSpec {
            n: 2,
            sigma: vec![0, 0],
        },
        CAP,
    )
    .unwrap();
    let x = m.from_entries(&[1, 0, 0, 0]);
    let search = similarity_to_good_form(&m, x, 100_000).unwrap();
    assert!(search.good_form.is_none());
    // oracle: all six invertible V over Z2
    let r = m.graded.ring();
    for v in gl2(2) {
        let vi = m.from_entries(&v);
        let inv = (0..16).find(|&w| r.mul_idx(vi, w) == r.one_idx()).unwrap();
        assert!(!is_good_form(&m, r.mul_idx(r.mul_idx(vi, x), inv)));
    }
    // the pair from the worked example gives d = 0
    let v = m.from_entries(&[1, 1, 0, 1]);
    assert_eq!(m.entries(r.mul_idx(r.mul_idx(v, x), v)), vec![1, 1, 0, 0]);
}

#[test]
fn good_form_search_over_z3() {
    let base = trivial_grading(z(3), FiniteGroup::trivial());
    let m = matrix_graded(
        &base,
        &MatrixGradingSpec {
            n: 2,
            sigma: vec![0, 0],
        },
        CAP,
    )
    .unwrap();
    let r = m.graded.ring();
    let x = m.from_entries(&[1, 0, 0, 0]);
    let v = m.from_entries(&[1, 1, 1, 2]);
    let vinv = (0..r.order())
        .find(|&w| r.mul_idx(v, w) == r.one_idx())
        .unwrap();
    assert_eq!(
        m.entries(r.mul_idx(r.mul_idx(v, x), vinv)),
        vec![2, 2, 2, 2]
    );
    let found = similarity_to_good_form(&m, x, 100_000).unwrap();
    let s = found.good_form.unwrap();
    assert!(is_good_form(&m, s.conjugate));
    assert_eq!(r.mul_idx(s.v, s.v_inverse), r.one_idx());
    assert!(found.unit_corner.is_some());

    assert!(similarity_to_good_form(&m, 0, 100_000)
        .unwrap()
        .good_form
        .is_none());
    let good = m.from_entries(&[1, 0, 0, 1]);
    let id = similarity_to_good_form(&m, good, 100_000)
        .unwrap()
        .good_form
        .unwrap();
    assert_eq!(id.v, r.one_idx());
    assert!(matches!(
        similarity_to_good_form(&m, x, 1),
        Err(gradering_core::ConstructionError::SearchBudgetExceeded { budget: 1 })
    ));
}

#[test]
fn trivial_extension_graded_nil_good_transfer() {
    let a = ex_dual_z2();
    let te = trivial_extension(&a, &GradedBimodule::shifted_regular(&a, 0), CAP).unwrap();
    let ca = element_classes(a.ring());
    let ct = element_classes(te.graded.ring());
    assert_eq!(
        is_graded_nil_good(&a, &ca).holds,
        is_graded_nil_good(&te.graded, &ct).holds
    );
}

#[test]
fn products_and_caps() {
    assert!(direct_product(&[], CAP).is_err());
    let base = trivial_grading(z(4), FiniteGroup::trivial());
    assert!(matches!(
        matrix_graded(
            &base,
            &MatrixGradingSpec {
                n: 3,
                sigma: vec![0, 0, 0]
            },
            4096
        ),
        Err(gradering_core::ConstructionError::Ring(
            gradering_core::RingError::OrderCapExceeded { .. }
        ))
    ));
}
