//! Acceptance criteria, one PASS/FAIL line each. Reference values come from
//! the brute-force oracles below, which share no code with the engine.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gradering_core::classify::graded_nil_good_witness;
use gradering_core::laurent::{
    symbolic_is_graded_nil_good, symbolic_laurent_nil_good_counterwitness,
};
use gradering_core::{GradedAnalysis, Limits, RingElement, WitnessKind};
use gradering_harness::{
    audit_trivial_extension_matrix, build_corpus, radical_identities, to_canonical_json,
    verify_suite, Built, CorpusSpec, Recipe, RingRef, Scope,
};

// ---------------------------------------------------------------------------
// Oracle arithmetic. Every ring here is small enough to enumerate.

/// A finite ring given by its element list and operations, for brute force.
trait Oracle: Sized + Copy + PartialEq {
    fn all() -> Vec<Self>;
    fn add(self, o: Self) -> Self;
    fn mul(self, o: Self) -> Self;
    fn zero() -> Self;
    fn one() -> Self;

    fn neg(self) -> Self {
        Self::all()
            .into_iter()
            .find(|&y| self.add(y) == Self::zero())
            .unwrap()
    }

    fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }

    fn is_nilpotent(self) -> bool {
        let mut p = self;
        for _ in 0..Self::all().len() {
            if p == Self::zero() {
                return true;
            }
            p = p.mul(self);
        }
        p == Self::zero()
    }

    /// Two-sided inverse by exhaustive search.
    fn is_unit(self) -> bool {
        Self::all()
            .into_iter()
            .any(|y| self.mul(y) == Self::one() && y.mul(self) == Self::one())
    }

    /// Nilpotent, or a unit plus a nilpotent, both drawn from `pool`.
    fn decomposes_in(self, pool: &[Self]) -> bool {
        self.is_nilpotent()
            || pool
                .iter()
                .any(|&n| n.is_nilpotent() && self.sub(n).is_unit())
    }
}

/// `Z_P[X]/(X^2)` as pairs `(a, b) = a + bX`. For `P = 2` this is also
/// `Z_2 ∝ Z_2`, since `(a, b)(c, d) = (ac, ad + bc)` in both.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Dual<const P: u32>(u32, u32);

impl<const P: u32> Oracle for Dual<P> {
    fn all() -> Vec<Self> {
        (0..P)
            .flat_map(|a| (0..P).map(move |b| Dual(a, b)))
            .collect()
    }
    fn add(self, o: Self) -> Self {
        Dual((self.0 + o.0) % P, (self.1 + o.1) % P)
    }
    fn mul(self, o: Self) -> Self {
        Dual(self.0 * o.0 % P, (self.0 * o.1 + self.1 * o.0) % P)
    }
    fn zero() -> Self {
        Dual(0, 0)
    }
    fn one() -> Self {
        Dual(1, 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct Zn<const N: u32>(u32);

impl<const N: u32> Oracle for Zn<N> {
    fn all() -> Vec<Self> {
        (0..N).map(Zn).collect()
    }
    fn add(self, o: Self) -> Self {
        Zn((self.0 + o.0) % N)
    }
    fn mul(self, o: Self) -> Self {
        Zn(self.0 * o.0 % N)
    }
    fn zero() -> Self {
        Zn(0)
    }
    fn one() -> Self {
        Zn(1 % N)
    }
}

/// `Z_4[C_2]` as `a + b g` with `g^2 = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Z4C2(u32, u32);

impl Oracle for Z4C2 {
    fn all() -> Vec<Self> {
        (0..4)
            .flat_map(|a| (0..4).map(move |b| Z4C2(a, b)))
            .collect()
    }
    fn add(self, o: Self) -> Self {
        Z4C2((self.0 + o.0) % 4, (self.1 + o.1) % 4)
    }
    fn mul(self, o: Self) -> Self {
        Z4C2(
            (self.0 * o.0 + self.1 * o.1) % 4,
            (self.0 * o.1 + self.1 * o.0) % 4,
        )
    }
    fn zero() -> Self {
        Z4C2(0, 0)
    }
    fn one() -> Self {
        Z4C2(1, 0)
    }
}

/// 2x2 matrices, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
struct M2<T>([T; 4]);

impl<T: Oracle> Oracle for M2<T> {
    fn all() -> Vec<Self> {
        let base = T::all();
        let mut out = Vec::new();
        for &a in &base {
            for &b in &base {
                for &c in &base {
                    for &d in &base {
                        out.push(M2([a, b, c, d]));
                    }
                }
            }
        }
        out
    }
    fn add(self, o: Self) -> Self {
        M2(std::array::from_fn(|i| self.0[i].add(o.0[i])))
    }
    fn mul(self, o: Self) -> Self {
        let (a, b) = (self.0, o.0);
        M2([
            a[0].mul(b[0]).add(a[1].mul(b[2])),
            a[0].mul(b[1]).add(a[1].mul(b[3])),
            a[2].mul(b[0]).add(a[3].mul(b[2])),
            a[2].mul(b[1]).add(a[3].mul(b[3])),
        ])
    }
    fn zero() -> Self {
        M2([T::zero(); 4])
    }
    fn one() -> Self {
        M2([T::one(), T::zero(), T::zero(), T::one()])
    }
}

/// `M_2(A)` with `A = Z_P[X]/(X^2)` graded by `X` in degree `g`, and
/// sigma `(e, e)`: degree `e` is `M_2(Z_P)`, degree `g` is `M_2(Z_P) X`.
fn matrix_dual_component<const P: u32>(degree: usize) -> Vec<M2<Dual<P>>> {
    M2::<Dual<P>>::all()
        .into_iter()
        .filter(|m| {
            m.0.iter()
                .all(|d| if degree == 0 { d.1 == 0 } else { d.0 == 0 })
        })
        .collect()
}

/// Engine coefficients of a matrix over a rank-2 base, layout `(i*n + j)*k + l`.
fn dual_matrix_coeffs<const P: u32>(m: &M2<Dual<P>>) -> Vec<u32> {
    m.0.iter().flat_map(|d| [d.0, d.1]).collect()
}

// ---------------------------------------------------------------------------
// Criterion plumbing.

type Check = Result<String, String>;

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(
        elapsed < budget,
        format!("took {elapsed:?}, budget {budget:?}"),
    )
}

fn corpus_limits() -> Limits {
    CorpusSpec::default().limits(&Limits::default())
}

fn analysis(recipe: Recipe, limits: &Limits) -> Result<GradedAnalysis, String> {
    let built = recipe.build_finite(limits).map_err(|e| e.to_string())?;
    Ok(GradedAnalysis::new(built.graded, limits.clone()))
}

fn dual_over(p: u32) -> Recipe {
    Recipe::TruncatedPoly {
        base: RingRef::cyclic(p),
        m: 2,
    }
}

fn matrix(base: Recipe, sigma: Vec<usize>) -> Recipe {
    Recipe::Matrix {
        base: Box::new(base),
        n: 2,
        sigma,
    }
}

// ---------------------------------------------------------------------------
// Criteria.

fn c1_dual_numbers() -> Check {
    let start = Instant::now();
    let an = analysis(dual_over(2), &Limits::default())?;
    let r = an.ring();
    let verdict = an.graded_nil_good();
    ensure(verdict.holds, "engine: not graded nil-good")?;
    let wit = |coeffs: Vec<u32>| {
        let x = r.index(&RingElement::new(coeffs));
        graded_nil_good_witness(an.graded(), an.classes(), an.homogeneous_nilpotents(), x)
            .ok_or_else(|| "missing witness".to_string())
    };
    let one = wit(vec![1, 0])?;
    ensure(
        one.kind == WitnessKind::UnitPlusNilpotent
            && one.unit_part == Some(r.one_idx())
            && one.nilpotent_part == 0,
        format!("1 should split as 1 + 0, got {one:?}"),
    )?;
    let x = wit(vec![0, 1])?;
    ensure(
        x.kind == WitnessKind::Nilpotent,
        format!("x should be nilpotent, got {x:?}"),
    )?;

    // oracle: every element of each component splits within that component
    for degree in 0..2 {
        let comp: Vec<Dual<2>> = Dual::<2>::all()
            .into_iter()
            .filter(|d| if degree == 0 { d.1 == 0 } else { d.0 == 0 })
            .collect();
        ensure(
            comp.iter().all(|x| x.decomposes_in(&comp)),
            "oracle disagrees",
        )?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "1 = 1 + 0, x nilpotent, {} homogeneous checked",
        verdict.checked
    ))
}

fn c2_checkerboard() -> Check {
    let start = Instant::now();
    let an = analysis(
        matrix(Recipe::trivial(RingRef::cyclic(2), "C2"), vec![0, 1]),
        &Limits::default(),
    )?;
    let r = an.ring();
    let gng = an.graded_nil_good();
    ensure(!gng.holds, "engine: graded nil-good")?;
    let cex = gng.counterexample.map(|c| r.element(c).coeffs);
    ensure(
        cex == Some(vec![1, 0, 0, 0]),
        format!("counterexample {cex:?}, want diag(1,0)"),
    )?;
    let ng = an.nil_good();
    ensure(
        ng.holds && ng.checked == 16,
        format!("engine nil-good {} over {}", ng.holds, ng.checked),
    )?;

    // oracle: diagonal is degree e; diag(1,0) fails there, yet all 16 split ungraded
    let all = M2::<Zn<2>>::all();
    let diagonal: Vec<M2<Zn<2>>> = all
        .iter()
        .copied()
        .filter(|m| m.0[1].0 == 0 && m.0[2].0 == 0)
        .collect();
    let d10 = M2([Zn(1), Zn(0), Zn(0), Zn(0)]);
    ensure(
        !d10.decomposes_in(&diagonal),
        "oracle: diag(1,0) splits in degree e",
    )?;
    ensure(
        all.iter().all(|m| m.decomposes_in(&all)),
        "oracle: M2(Z2) not nil-good",
    )?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("counterexample diag(1,0); nil-good over 16 elements".to_string())
}

fn c3_laurent() -> Check {
    let recipe = Recipe::Laurent {
        base: RingRef::cyclic(2),
    };
    let Built::Symbolic(s) = recipe
        .build(&Limits::default())
        .map_err(|e| e.to_string())?
    else {
        return Err("Laurent recipe built a finite ring".to_string());
    };
    ensure(
        symbolic_is_graded_nil_good(&s).holds,
        "engine: not graded nil-good",
    )?;
    let w = symbolic_laurent_nil_good_counterwitness(&s).map_err(|e| e.to_string())?;
    ensure(!w.nil_good, "engine: nil-good")?;
    let terms: Vec<(Vec<u32>, i64)> = w
        .terms
        .iter()
        .map(|(a, n)| (a.coeffs.clone(), *n))
        .collect();
    ensure(
        terms == vec![(vec![1], 0), (vec![1], 1)],
        format!("witness {terms:?}, want 1 + X"),
    )?;

    // oracle: over Z2 a Laurent polynomial is a bit set of exponents. 1 + X
    // is not nilpotent ((1+X)^(2^k) = 1 + X^(2^k)), and no f supported in
    // [-6, 6] has (1+X) f = 1, so 1 + X is not a unit; its only nilpotent
    // summand candidate is 0 because Z2[X, X^-1] is reduced.
    let width = 13i64;
    let mul_one_plus_x = |f: u32| -> Vec<i64> {
        let mut out = std::collections::BTreeSet::new();
        for i in 0..width {
            if f >> i & 1 == 1 {
                for e in [i - 6, i - 5] {
                    if !out.remove(&e) {
                        out.insert(e);
                    }
                }
            }
        }
        out.into_iter().collect()
    };
    ensure(
        (0u32..1 << width).all(|f| mul_one_plus_x(f) != vec![0]),
        "oracle: 1 + X has a short inverse",
    )?;
    Ok("graded nil-good; 1 + X refutes nil-good".to_string())
}

fn c4_audit() -> Check {
    let start = Instant::now();
    let report = audit_trivial_extension_matrix(&corpus_limits()).map_err(|e| e.to_string())?;

    // oracle over the 4-element base: M = diag((1,0), 0) in degree e
    let e_comp = matrix_dual_component::<2>(0);
    let m = M2([Dual(1, 0), Dual(0, 0), Dual(0, 0), Dual(0, 0)]);
    let u = M2([Dual(0, 0), Dual(1, 0), Dual(1, 0), Dual(1, 0)]);
    let n = M2([Dual(1, 0); 4]);
    ensure(
        u.add(n) == m && u.is_unit() && n.is_nilpotent(),
        "oracle: M != U + N",
    )?;
    ensure(m.decomposes_in(&e_comp), "oracle: M does not split")?;

    ensure(report.engine_decomposable, "engine: M does not split")?;
    ensure(report.discrepancy, "discrepancy flag not raised")?;
    let w = report.witness.as_ref().ok_or("engine: no witness")?;
    let got_u = w.unit.as_ref().map(|x| x.coeffs.clone());
    ensure(
        got_u == Some(dual_matrix_coeffs(&u)),
        format!("unit {got_u:?}"),
    )?;
    ensure(
        w.nilpotent.coeffs == dual_matrix_coeffs(&n),
        format!("nilpotent {:?}", w.nilpotent.coeffs),
    )?;
    ensure(
        report.checks.iter().all(|(_, ok)| *ok),
        format!("side checks {:?}", report.checks),
    )?;
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok("M = [[0,1],[1,1]](1,0) + all-(1,0); discrepancy flagged".to_string())
}

fn c5_radicals() -> Check {
    let corpus = build_corpus(&CorpusSpec::default(), &Limits::default());
    ensure(
        corpus.instances.len() >= 30,
        format!("corpus has {} instances", corpus.instances.len()),
    )?;
    let rep = radical_identities(&corpus);
    ensure(rep.errors.is_empty(), format!("errors: {:?}", rep.errors))?;
    ensure(
        rep.violations.is_empty(),
        format!("violations: {:?}", rep.violations),
    )?;
    Ok(format!("0 violations over {} instances", rep.instances))
}

fn c6_suite() -> Check {
    let start = Instant::now();
    let corpus = build_corpus(&CorpusSpec::default(), &Limits::default());
    let suite = verify_suite(&[], &corpus, false).map_err(|e| e.to_string())?;
    let mut in_scope = 0;
    for t in suite.theorems.iter().filter(|t| t.scope == Scope::InScope) {
        in_scope += 1;
        ensure(
            t.violations == 0 && t.errors == 0 && t.non_vacuous >= 1,
            format!(
                "{}: {} violations, {} errors, {} non-vacuous",
                t.id, t.violations, t.errors, t.non_vacuous
            ),
        )?;
    }
    ensure(in_scope > 0, "no in-scope statements")?;
    within(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!(
        "{in_scope} in-scope ids pass on {} instances",
        corpus.instances.len()
    ))
}

fn c7_matrix_dual_z3() -> Check {
    let start = Instant::now();
    let an = analysis(matrix(dual_over(3), vec![0, 0]), &corpus_limits())?;
    let r = an.ring();
    let gr = an.graded();
    ensure(an.graded_nil_good().holds, "engine: not graded nil-good")?;
    let mut checked = 0;
    for degree in 0..2 {
        let comp = matrix_dual_component::<3>(degree);
        for x in &comp {
            let idx = r.index(&RingElement::new(dual_matrix_coeffs(x)));
            ensure(
                gr.contains(degree, idx),
                format!("{x:?} not in degree {degree}"),
            )?;
            ensure(
                x.decomposes_in(&comp),
                format!("oracle: {x:?} does not split"),
            )?;
            let w = graded_nil_good_witness(gr, an.classes(), an.homogeneous_nilpotents(), idx)
                .ok_or_else(|| format!("engine: no witness for {x:?}"))?;
            // the engine's parts must pass the oracle in the same degree
            let back = |i: usize| {
                let c = r.element(i).coeffs;
                M2(std::array::from_fn(|t| Dual::<3>(c[2 * t], c[2 * t + 1])))
            };
            let n = back(w.nilpotent_part);
            ensure(
                n.is_nilpotent() && comp.contains(&n),
                "engine nilpotent fails oracle",
            )?;
            if let Some(u) = w.unit_part.map(back) {
                ensure(
                    u.is_unit() && comp.contains(&u) && u.add(n) == *x,
                    "engine unit fails oracle",
                )?;
            }
            checked += 1;
        }
    }
    ensure(
        checked == 162,
        format!("checked {checked} homogeneous elements"),
    )?;
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok("162 homogeneous elements agree with the oracle".to_string())
}

fn c8_matrix_radical() -> Check {
    let limits = corpus_limits();
    let base = analysis(dual_over(2), &limits)?;
    let jr: Vec<Vec<u32>> = base
        .graded_jacobson()
        .map_err(|e| e.to_string())?
        .iter()
        .map(|&x| base.ring().element(x).coeffs)
        .collect();

    // oracle for J^g(R): homogeneous right ideals of the 4-element ring by subsets
    let elems = Dual::<2>::all();
    let homogeneous = |d: &Dual<2>| d.0 == 0 || d.1 == 0;
    let ideals: Vec<u32> = (1u32..16)
        .filter(|&mask| {
            let s: Vec<Dual<2>> = (0..4)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| elems[i])
                .collect();
            let has = |y: Dual<2>| s.contains(&y);
            has(Dual(0, 0))
                && s.iter().all(|&a| {
                    s.iter().all(|&b| has(a.add(b))) && elems.iter().all(|&c| has(a.mul(c)))
                })
                && {
                    // additively spanned by its homogeneous members
                    let h: Vec<Dual<2>> = s.iter().copied().filter(homogeneous).collect();
                    s.iter()
                        .all(|&a| h.iter().any(|&p| h.iter().any(|&q| p.add(q) == a)))
                }
        })
        .collect();
    let proper: Vec<u32> = ideals.iter().copied().filter(|&m| m != 15).collect();
    let maximal: Vec<u32> = proper
        .iter()
        .copied()
        .filter(|&m| !proper.iter().any(|&o| o != m && o & m == m))
        .collect();
    let jg_mask = maximal.iter().fold(15u32, |a, &m| a & m);
    let mut oracle_jr: Vec<Vec<u32>> = (0..4)
        .filter(|i| jg_mask >> i & 1 == 1)
        .map(|i| vec![elems[i].0, elems[i].1])
        .collect();
    oracle_jr.sort();
    let mut sorted_jr = jr.clone();
    sorted_jr.sort();
    ensure(
        sorted_jr == oracle_jr,
        format!("J^g(R) {sorted_jr:?}, oracle {oracle_jr:?}"),
    )?;

    for sigma in [vec![0, 0], vec![0, 1]] {
        let m = analysis(matrix(dual_over(2), sigma.clone()), &limits)?;
        let mr = m.ring();
        let mut lhs: Vec<usize> = m.graded_jacobson().map_err(|e| e.to_string())?.to_vec();
        lhs.sort_unstable();
        let mut rhs = Vec::new();
        for a in &jr {
            for b in &jr {
                for c in &jr {
                    for d in &jr {
                        let coeffs: Vec<u32> = [a, b, c, d]
                            .iter()
                            .flat_map(|v| v.iter().copied())
                            .collect();
                        rhs.push(mr.index(&RingElement::new(coeffs)));
                    }
                }
            }
        }
        rhs.sort_unstable();
        ensure(
            lhs == rhs,
            format!(
                "sigma {sigma:?}: |J^g(M2(R))| = {}, |M2(J^g(R))| = {}",
                lhs.len(),
                rhs.len()
            ),
        )?;
    }
    Ok(format!(
        "|J^g(R)| = {}; equality for sigma (e,e) and (e,g)",
        jr.len()
    ))
}

fn c9_group_ring() -> Check {
    let start = Instant::now();
    let z4 = Zn::<4>::all();
    ensure(
        z4.iter().all(|x| x.decomposes_in(&z4)),
        "oracle: Z4 not nil-good",
    )?;

    let ring = Z4C2::all();
    let delta: Vec<Z4C2> = ring
        .iter()
        .copied()
        .filter(|x| (x.0 + x.1) % 4 == 0)
        .collect();
    ensure(
        delta.iter().all(|&a| {
            delta
                .iter()
                .all(|&b| delta.iter().all(|&c| a.mul(b).mul(c) == Z4C2::zero()))
        }),
        "oracle: augmentation ideal cubed is nonzero",
    )?;
    ensure(
        ring.iter().all(|x| x.decomposes_in(&ring)),
        "oracle: Z4[C2] not nil-good",
    )?;

    let z4_an = analysis(
        Recipe::trivial(RingRef::cyclic(4), "C1"),
        &Limits::default(),
    )?;
    ensure(z4_an.nil_good().holds, "engine: Z4 not nil-good")?;
    let an = analysis(
        Recipe::GroupRing {
            base: Box::new(Recipe::trivial(RingRef::cyclic(4), "C2")),
        },
        &Limits::default(),
    )?;
    let r = an.ring();
    let ng = an.nil_good();
    ensure(
        ng.holds && ng.checked == 16,
        format!("engine nil-good {} over {}", ng.holds, ng.checked),
    )?;
    // engine layout h*k + i: coefficients [a, b] for a + b g
    let d: Vec<usize> = (0..r.order())
        .filter(|&x| r.element(x).coeffs.iter().sum::<u32>() % 4 == 0)
        .collect();
    ensure(
        d.iter().all(|&a| {
            d.iter()
                .all(|&b| d.iter().all(|&c| r.mul_idx(r.mul_idx(a, b), c) == 0))
        }),
        "engine: augmentation ideal cubed is nonzero",
    )?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("Z4 nil-good; augmentation ideal cubes to 0; Z4[C2] nil-good over 16".to_string())
}

fn suite_json(threads: usize) -> Result<String, String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())?;
    pool.install(|| {
        let corpus = build_corpus(&CorpusSpec::default(), &Limits::default());
        let suite = verify_suite(&[], &corpus, false).map_err(|e| e.to_string())?;
        to_canonical_json(&suite).map_err(|e| e.to_string())
    })
}

fn c10_determinism() -> Check {
    let n = std::thread::available_parallelism()
        .map_or(4, |n| n.get())
        .max(2);
    let one = suite_json(1)?;
    let many = suite_json(n)?;
    ensure(one == many, format!("1 and {n} workers differ"))?;
    Ok(format!(
        "{} bytes identical with 1 and {n} workers",
        one.len()
    ))
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 dual numbers over Z2 graded nil-good", c1_dual_numbers),
        ("2 checkerboard M2(Z2) not graded nil-good", c2_checkerboard),
        ("3 Laurent Z2 graded nil-good, not nil-good", c3_laurent),
        ("4 matrix over trivial extension audit", c4_audit),
        ("5 radical identities on default corpus", c5_radicals),
        ("6 statement suite on default corpus", c6_suite),
        ("7 M2(Z3[X]/(X^2)) graded nil-good", c7_matrix_dual_z3),
        ("8 graded radical of M2(R)", c8_matrix_radical),
        ("9 group ring chain over Z4", c9_group_ring),
        ("10 suite determinism across workers", c10_determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS {name}: {detail} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why} ({:.2?})", start.elapsed());
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
