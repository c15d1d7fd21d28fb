mod common;

use common::*;
use gradering_core::classify::{
    graded_nil_good_witness, homogeneous_nilpotents, is_graded_nil_ideal, nil_good_decomposition,
    nil_good_witness,
};
use gradering_core::{
    coarsen, direct_product, element_classes, graded_jacobson_radical, graded_maximal_right_ideals,
    homogeneous_right_ideals, homogeneous_right_ideals_with_units, is_graded_fine,
    is_graded_nil_good, is_nil_clean_ring, is_nil_good_ring, jacobson_radical, quotient_graded,
    trivial_grading, truncated_polynomial, FiniteGroup, FiniteRing, GradedAnalysis, GradedRing,
    Limits, WitnessKind,
};

const LATTICE_CAP: usize = 20_000;

fn small_rings() -> Vec<FiniteRing> {
    vec![
        z(2),
        z(4),
        z(6),
        z(9),
        dual(2),
        dual(3),
        checkerboard().ring().clone(),
        te_z2().ring().clone(),
        direct_product(&[&z(2), &z(2)], CAP).unwrap(),
        truncated_polynomial(&z(2), 3, CAP).unwrap().ring().clone(),
        FiniteRing::zero_ring(),
    ]
}

fn small_graded() -> Vec<GradedRing> {
    let c2 = FiniteGroup::cyclic(2);
    vec![
        ex_dual_z2(),
        checkerboard(),
        te_z2(),
        trivial_grading(z(2), c2.clone()),
        trivial_grading(z(4), c2.clone()),
        trivial_grading(direct_product(&[&z(2), &z(2)], CAP).unwrap(), c2.clone()),
        trivial_grading(checkerboard().ring().clone(), FiniteGroup::trivial()),
        truncated_polynomial(&z(2), 3, CAP).unwrap(),
        truncated_polynomial(&z(2), 4, CAP).unwrap(),
        truncated_polynomial(&z(3), 2, CAP).unwrap(),
        trivial_grading(FiniteRing::zero_ring(), c2),
    ]
}

#[test]
fn element_classes_of_small_rings() {
    let d = element_classes(&dual(2));
    assert_eq!(d.units(), vec![1, 3]);
    assert_eq!(d.nilpotents(), vec![0, 2]);
    assert_eq!(d.idempotents(), vec![0, 1]);
    let z4 = element_classes(&z(4));
    assert_eq!(z4.units(), vec![1, 3]);
    assert_eq!(z4.nilpotents(), vec![0, 2]);
    let z2 = element_classes(&z(2));
    assert_eq!(z2.units(), vec![1]);
    assert_eq!(z2.nilpotents(), vec![0]);
}

#[test]
fn power_orbits_agree_with_inverse_search() {
    for r in small_rings() {
        let c = element_classes(&r);
        assert_eq!(c.units(), units_by_search(&r));
        assert_eq!(c.nilpotents(), nilpotents_by_powers(&r));
        for x in c.units() {
            let y = c.inverse(x).unwrap();
            assert_eq!(r.mul_idx(x, y), r.one_idx());
            assert_eq!(r.mul_idx(y, x), r.one_idx());
        }
        for x in c.nilpotents() {
            let k = c.nilpotency_index(x).unwrap();
            assert_eq!(r.pow_idx(x, k as u64), 0);
            assert!(k == 1 || r.pow_idx(x, k as u64 - 1) != 0);
        }
    }
}

#[test]
fn one_sided_inverses_are_two_sided() {
    for r in small_rings() {
        let one = r.one_idx();
        for x in 0..r.order() {
            for y in 0..r.order() {
                if r.mul_idx(x, y) == one {
                    assert_eq!(r.mul_idx(y, x), one);
                }
            }
        }
    }
}

#[test]
fn one_plus_nilpotent_is_a_unit() {
    for r in small_rings() {
        let c = element_classes(&r);
        for n in c.nilpotents() {
            assert!(c.is_unit(r.add_idx(r.one_idx(), n)));
        }
    }
}

#[test]
fn jacobson_radical_examples_and_oracle() {
    let jr = |r: &FiniteRing| jacobson_radical(r, &element_classes(r));
    assert_eq!(jr(&dual(2)), vec![0, 2]);
    assert_eq!(jr(&z(2)), vec![0]);
    assert_eq!(jr(checkerboard().ring()), vec![0]);
    // oracle: intersection of maximal right ideals among all subsets
    for r in small_rings().into_iter().filter(|r| r.order() <= 16) {
        let ideals = all_right_ideals(&r);
        let full = if r.order() == 32 {
            u32::MAX
        } else {
            (1u32 << r.order()) - 1
        };
        let expected = intersect(&maximal_proper(&ideals, full), full);
        assert_eq!(jr(&r), expected);
    }
}

fn homogeneous_masks(gr: &GradedRing) -> Vec<u32> {
    let r = gr.ring();
    all_right_ideals(r)
        .into_iter()
        .filter(|&m| {
            let elems = mask_elements(m);
            let homog: Vec<usize> = elems
                .iter()
                .copied()
                .filter(|&x| gr.is_homogeneous(x))
                .collect();
            r.additive_span(&homog) == elems
        })
        .collect()
}

#[test]
fn lattice_matches_subset_enumeration() {
    for gr in small_graded()
        .into_iter()
        .filter(|g| g.ring().order() <= 16)
    {
        let expected = homogeneous_masks(&gr);
        let lattice = homogeneous_right_ideals(&gr, LATTICE_CAP).unwrap();
        let mut got: Vec<u32> = lattice
            .iter()
            .map(|i| i.elements.iter().fold(0u32, |m, &x| m | 1 << x))
            .collect();
        got.sort_unstable();
        let mut want = expected.clone();
        want.sort_unstable();
        assert_eq!(got, want);
        let full = (1u32 << gr.ring().order()) - 1;
        let jg = graded_jacobson_radical(&gr, LATTICE_CAP).unwrap();
        assert_eq!(jg, intersect(&maximal_proper(&expected, full), full));
    }
}

#[test]
fn unit_skipping_preserves_lattice() {
    for gr in small_graded() {
        let classes = element_classes(gr.ring());
        assert_eq!(
            homogeneous_right_ideals_with_units(&gr, &classes, LATTICE_CAP).unwrap(),
            homogeneous_right_ideals(&gr, LATTICE_CAP).unwrap()
        );
    }
}

#[test]
fn lattice_examples() {
    let ex = ex_dual_z2();
    let lattice = homogeneous_right_ideals(&ex, LATTICE_CAP).unwrap();
    let sets: Vec<Vec<usize>> = lattice.iter().map(|i| i.elements.clone()).collect();
    assert_eq!(sets, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    let max = graded_maximal_right_ideals(&ex, LATTICE_CAP).unwrap();
    assert_eq!(max.len(), 1);
    assert_eq!(max[0].elements, vec![0, 2]);
    assert_eq!(
        graded_jacobson_radical(&ex, LATTICE_CAP).unwrap(),
        vec![0, 2]
    );

    let z2 = trivial_grading(z(2), FiniteGroup::cyclic(2));
    assert_eq!(homogeneous_right_ideals(&z2, LATTICE_CAP).unwrap().len(), 2);
    assert_eq!(graded_jacobson_radical(&z2, LATTICE_CAP).unwrap(), vec![0]);
    assert_eq!(
        graded_jacobson_radical(&checkerboard(), LATTICE_CAP).unwrap(),
        vec![0]
    );

    let zero = trivial_grading(FiniteRing::zero_ring(), FiniteGroup::cyclic(2));
    assert!(graded_maximal_right_ideals(&zero, LATTICE_CAP)
        .unwrap()
        .is_empty());
    assert_eq!(
        graded_jacobson_radical(&zero, LATTICE_CAP).unwrap(),
        vec![0]
    );
}

#[test]
fn lattice_cap_is_an_error() {
    let err = homogeneous_right_ideals(&checkerboard(), 2).unwrap_err();
    assert!(matches!(
        err,
        gradering_core::ClassifyError::IdealLatticeCap { cap: 2 }
    ));
}

#[test]
fn graded_local_examples() {
    let local = |gr: GradedRing| {
        GradedAnalysis::new(gr, Limits::default())
            .is_graded_local()
            .unwrap()
    };
    assert!(local(ex_dual_z2()));
    assert!(!local(trivial_grading(
        direct_product(&[&z(2), &z(2)], CAP).unwrap(),
        FiniteGroup::cyclic(2)
    )));
    assert!(local(trivial_grading(z(3), FiniteGroup::cyclic(2))));
}

#[test]
fn graded_nil_ideal_examples() {
    let ex = ex_dual_z2();
    let c = element_classes(ex.ring());
    assert!(is_graded_nil_ideal(&ex, &c, &[0, 2]).unwrap());
    assert!(is_graded_nil_ideal(&ex, &c, &[0]).unwrap());
    let z2 = trivial_grading(z(2), FiniteGroup::cyclic(2));
    assert!(!is_graded_nil_ideal(&z2, &element_classes(z2.ring()), &[0, 1]).unwrap());
    // {0, 1+x} is not closed under right multiplication
    assert!(is_graded_nil_ideal(&ex, &c, &[0, 3]).is_err());
}

#[test]
fn nil_good_witness_search_order() {
    let r = z(4);
    let c = element_classes(&r);
    let w = nil_good_decomposition(&r, &c, &el(&[3])).unwrap().unwrap();
    assert_eq!(w.kind, WitnessKind::UnitPlusNilpotent);
    assert_eq!((w.unit_part, w.nilpotent_part), (Some(3), 0));
    assert!(w.verify(&r));
    // 3 = 1 + 2 is another valid decomposition
    assert!(c.is_unit(1) && c.is_nilpotent(2) && r.add_idx(1, 2) == 3);
    let w0 = nil_good_decomposition(&z(2), &element_classes(&z(2)), &el(&[0]))
        .unwrap()
        .unwrap();
    assert_eq!(w0.kind, WitnessKind::Nilpotent);
}

#[test]
fn nil_good_ring_examples() {
    let m2 = checkerboard();
    let v = is_nil_good_ring(m2.ring(), &element_classes(m2.ring()));
    assert!(v.holds);
    assert_eq!(v.checked, 16);
    assert!(v.witnesses.iter().all(|w| w.verify(m2.ring())));
    // Z2 x Z2: (1,0) is neither nilpotent nor unit + nilpotent
    let p = direct_product(&[&z(2), &z(2)], CAP).unwrap();
    let v = is_nil_good_ring(&p, &element_classes(&p));
    assert_eq!(v.counterexample, Some(1));
}

#[test]
fn graded_nil_good_examples() {
    let ex = ex_dual_z2();
    let v = is_graded_nil_good(&ex, &element_classes(ex.ring()));
    assert!(v.holds);
    let by_element: Vec<(usize, WitnessKind)> =
        v.witnesses.iter().map(|w| (w.element, w.kind)).collect();
    assert_eq!(
        by_element,
        vec![
            (0, WitnessKind::Nilpotent),
            (1, WitnessKind::UnitPlusNilpotent),
            (2, WitnessKind::Nilpotent)
        ]
    );
    assert_eq!(v.witnesses[1].nilpotent_part, 0);

    let cb = checkerboard();
    let v = is_graded_nil_good(&cb, &element_classes(cb.ring()));
    assert!(!v.holds);
    // diag(1,0): entry (0,0) is the least significant coefficient
    assert_eq!(v.counterexample, Some(1));
    assert_eq!(cb.ring().element(1), el(&[1, 0, 0, 0]));

    let te = te_z2();
    assert!(is_graded_nil_good(&te, &element_classes(te.ring())).holds);
}

#[test]
fn graded_fine_examples() {
    let fine = |gr: &GradedRing| is_graded_fine(gr, &element_classes(gr.ring()));
    assert!(fine(&trivial_grading(z(2), FiniteGroup::cyclic(2))).holds);
    let ex = fine(&ex_dual_z2());
    assert!(!ex.holds);
    assert_eq!(ex.counterexample, Some(2));
    assert!(!fine(&checkerboard()).holds);
}

#[test]
fn graded_fine_implies_graded_nil_good() {
    for gr in small_graded() {
        let c = element_classes(gr.ring());
        if is_graded_fine(&gr, &c).holds {
            assert!(is_graded_nil_good(&gr, &c).holds);
        }
    }
}

#[test]
fn nil_clean_examples() {
    let nc = |r: &FiniteRing| is_nil_clean_ring(r, &element_classes(r));
    assert_eq!(nc(&z(2)), Ok(()));
    assert_eq!(nc(&z(4)), Ok(()));
    assert_eq!(nc(&z(3)), Err(2));
}

/// All (u, n) homogeneous pairs with u a unit, n nilpotent and u + n = x.
fn all_homogeneous_decompositions(gr: &GradedRing, x: usize) -> Vec<(usize, usize)> {
    let r = gr.ring();
    let units = units_by_search(r);
    let nils = nilpotents_by_powers(r);
    let mut out = Vec::new();
    for &u in units.iter().filter(|&&u| gr.is_homogeneous(u)) {
        for &n in nils.iter().filter(|&&n| gr.is_homogeneous(n)) {
            if r.add_idx(u, n) == x {
                out.push((u, n));
            }
        }
    }
    out
}

#[test]
fn same_degree_search_agrees_with_unrestricted_search() {
    for gr in small_graded()
        .into_iter()
        .filter(|g| g.ring().order() <= 64)
    {
        let c = element_classes(gr.ring());
        let nils = homogeneous_nilpotents(&gr, &c);
        for (_, x) in gr.homogeneous_indices() {
            let restricted = graded_nil_good_witness(&gr, &c, &nils, x).is_some();
            let unrestricted =
                c.is_nilpotent(x) || !all_homogeneous_decompositions(&gr, x).is_empty();
            assert_eq!(restricted, unrestricted, "element {x}");
        }
    }
}

#[test]
fn decomposition_parts_share_the_degree() {
    for gr in small_graded()
        .into_iter()
        .filter(|g| g.ring().order() <= 64)
    {
        for (deg, x) in gr.homogeneous_indices() {
            if x == 0 {
                continue;
            }
            for (u, n) in all_homogeneous_decompositions(&gr, x) {
                assert_eq!(gr.degree(u), Some(deg));
                if n != 0 {
                    assert_eq!(gr.degree(n), Some(deg));
                }
            }
        }
    }
}

#[test]
fn radical_identities_on_small_instances() {
    for gr in small_graded() {
        let a = GradedAnalysis::new(gr, Limits::default());
        let jg = a.graded_jacobson().unwrap().to_vec();
        let j = a.jacobson();
        assert!(jg.iter().all(|x| j.binary_search(x).is_ok()));
        let (re, embed) = a.identity_component();
        let j_re: Vec<usize> = {
            let mut v: Vec<usize> = jacobson_radical(re, &element_classes(re))
                .iter()
                .map(|&x| embed[x])
                .collect();
            v.sort_unstable();
            v
        };
        let jg_e: Vec<usize> = jg
            .iter()
            .copied()
            .filter(|&x| a.graded().contains(a.graded().identity(), x))
            .collect();
        assert_eq!(jg_e, j_re);
    }
}

#[test]
fn graded_nil_good_gives_nil_good_identity_component() {
    for gr in small_graded() {
        let a = GradedAnalysis::new(gr, Limits::default());
        if a.graded_nil_good().holds {
            let (re, _) = a.identity_component();
            assert!(is_nil_good_ring(re, &element_classes(re)).holds);
        }
    }
}

#[test]
fn quotient_examples() {
    let ex = ex_dual_z2();
    let q = quotient_graded(&ex, &[0, 2]).unwrap();
    assert_eq!(q.graded.ring().order(), 2);
    assert_eq!(q.graded.support(), vec![0]);
    assert_eq!(q.projection, vec![0, 1, 0, 1]);

    let same = quotient_graded(&ex, &[0]).unwrap();
    assert_eq!(same.graded.ring().order(), 4);
    assert_eq!(same.projection, vec![0, 1, 2, 3]);
    assert_eq!(same.graded.component_indices(1).len(), 2);

    let t4 = truncated_polynomial(&z(2), 4, CAP).unwrap();
    let r = t4.ring();
    let x2 = r.index(&el(&[0, 0, 1, 0]));
    let x3 = r.index(&el(&[0, 0, 0, 1]));
    let ideal = r.additive_span(&[x2, x3]);
    let q = quotient_graded(&t4, &ideal).unwrap();
    assert_eq!(q.graded.ring().order(), 4);
    assert_eq!(q.graded.support(), vec![0, 1]);
    // the image of x squares to zero, as in Z2[X]/(X^2)
    let xi = q.projection[r.index(&el(&[0, 1, 0, 0]))];
    assert_eq!(q.graded.ring().mul_idx(xi, xi), 0);
    // projection is a degree-preserving ring map
    for a in 0..r.order() {
        for b in 0..r.order() {
            assert_eq!(
                q.projection[r.mul_idx(a, b)],
                q.graded.ring().mul_idx(q.projection[a], q.projection[b])
            );
        }
        if let Some(d) = t4.degree(a) {
            assert!(q.graded.contains(d, q.projection[a]));
        }
    }
}

#[test]
fn quotient_rejects_bad_ideals() {
    let ex = ex_dual_z2();
    assert!(quotient_graded(&ex, &[0, 3]).is_err());
    assert!(quotient_graded(&checkerboard(), &[0, 1]).is_err());
}

#[test]
fn coarsen_truncated_quartic() {
    let t4 = truncated_polynomial(&z(2), 4, CAP).unwrap();
    let h = t4.group().subgroup_from_elements(&[0, 2]).unwrap();
    let (coarse, _) = coarsen(&t4, &h).unwrap();
    let r = t4.ring();
    let span =
        |v: &[&[u32]]| r.additive_span(&v.iter().map(|c| r.index(&el(c))).collect::<Vec<_>>());
    assert_eq!(
        coarse.component_indices(0),
        span(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]).as_slice()
    );
    assert_eq!(
        coarse.component_indices(1),
        span(&[&[0, 1, 0, 0], &[0, 0, 0, 1]]).as_slice()
    );
    for (deg, x) in t4.homogeneous_indices() {
        let _ = deg;
        assert!(coarse.is_homogeneous(x));
    }
}

#[test]
fn zero_ring_is_degenerate_but_classified() {
    let zero = trivial_grading(FiniteRing::zero_ring(), FiniteGroup::cyclic(2));
    let a = GradedAnalysis::new(zero, Limits::default());
    let report = a.report().unwrap();
    assert!(report.degenerate);
    assert!(report.is_nil_good && report.is_graded_nil_good);
    assert!(!report.is_graded_local);
    assert!(report.support.is_empty());
}

#[test]
fn nil_good_witnesses_verify() {
    for r in small_rings() {
        let c = element_classes(&r);
        let nils = c.nilpotents();
        for x in 0..r.order() {
            if let Some(w) = nil_good_witness(&r, &c, &nils, x) {
                assert!(w.verify(&r));
            }
        }
    }
}
