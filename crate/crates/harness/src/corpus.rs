//! Deterministic corpus of small graded rings.

use std::collections::{BTreeMap, HashSet};
use std::sync::{Arc, OnceLock};

use gradering_core::{
    ClassifyError, FiniteRing, GradedAnalysis, GradedRing, GradingSpec, GroupSpec, Limits, RingSpec,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::HarnessError;
use crate::recipe::{Context, IdealRecipe, ModuleRecipe, Recipe, RingRef};

/// Largest ring the default corpus admits (`M_3(Z_3)`).
pub const DEFAULT_CORPUS_ORDER: usize = 19_683;

/// Generator toggles for [`build_corpus`]. Missing JSON fields take defaults.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSpec {
    /// Fixed catalog: the dual numbers over `Z_2`, the checkerboard `M_2(Z_2)`,
    /// trivial extensions of `Z_2` and `Z_3`, `Z_4[C_2]` and relatives.
    pub catalog: bool,
    /// `Z_n` for `2 <= n <= cyclic_max`, trivially graded over each group in `cyclic_groups`.
    pub cyclic_max: u32,
    pub cyclic_groups: Vec<String>,
    pub truncated: bool,
    pub trivial_extensions: bool,
    /// `M_2` over graded bases of order at most `matrix_base_max`, plus `M_3` over `Z_2`, `Z_3`.
    pub matrices: bool,
    pub matrix_base_max: usize,
    pub group_rings: bool,
    pub products: bool,
    pub quotients: bool,
    /// Nontrivial `C_2`-gradings drawn per sample ring.
    pub sampled_gradings: usize,
    pub max_order: usize,
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        Self {
            catalog: true,
            cyclic_max: 16,
            cyclic_groups: vec!["C1".into(), "C2".into()],
            truncated: true,
            trivial_extensions: true,
            matrices: true,
            matrix_base_max: 9,
            group_rings: true,
            products: true,
            quotients: true,
            sampled_gradings: 2,
            max_order: DEFAULT_CORPUS_ORDER,
            seed: 0x5eed,
        }
    }
}

impl CorpusSpec {
    /// Every generator off.
    pub fn empty() -> Self {
        Self {
            catalog: false,
            cyclic_max: 1,
            cyclic_groups: Vec::new(),
            truncated: false,
            trivial_extensions: false,
            matrices: false,
            matrix_base_max: 0,
            group_rings: false,
            products: false,
            quotients: false,
            sampled_gradings: 0,
            ..Self::default()
        }
    }

    pub fn limits(&self, base: &Limits) -> Limits {
        base.clone().with_max_ring_order(self.max_order)
    }
}

/// A named recipe; the corpus is a list of these before building.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub recipe: Recipe,
}

/// A built corpus member with shared analyses of the ring and its construction inputs.
#[derive(Debug)]
pub struct Instance {
    pub name: String,
    pub recipe: Recipe,
    pub context: Context,
    pub analysis: GradedAnalysis,
    /// Analyses of the rings named by `context`, in the order they appear there.
    pub inputs: Vec<GradedAnalysis>,
    pub(crate) identity: OnceLock<GradedAnalysis>,
    pub(crate) by_radical: OnceLock<Result<GradedAnalysis, ClassifyError>>,
}

impl Instance {
    pub fn new(name: String, recipe: Recipe, limits: &Limits) -> Result<Self, HarnessError> {
        let built = recipe.build_finite(limits)?;
        Ok(Self::from_parts(
            name,
            recipe,
            built.graded,
            built.context,
            limits,
        ))
    }

    pub fn from_parts(
        name: String,
        recipe: Recipe,
        graded: Arc<GradedRing>,
        context: Context,
        limits: &Limits,
    ) -> Self {
        let an = |g: &Arc<GradedRing>| GradedAnalysis::new(Arc::clone(g), limits.clone());
        let inputs = match &context {
            Context::Plain => Vec::new(),
            Context::TrivialExtension { base, .. }
            | Context::GroupRing { base }
            | Context::Matrix { base, .. }
            | Context::Quotient { base, .. } => vec![an(base)],
            Context::CoarseGroupRing {
                base, coarse_base, ..
            } => vec![an(base), an(coarse_base)],
            Context::Product { factors } => factors.iter().map(an).collect(),
        };
        Self {
            name,
            recipe,
            context,
            analysis: GradedAnalysis::new(graded, limits.clone()),
            inputs,
            identity: OnceLock::new(),
            by_radical: OnceLock::new(),
        }
    }

    pub fn graded(&self) -> &GradedRing {
        self.analysis.graded()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub name: String,
    pub reason: String,
}

#[derive(Debug)]
pub struct Corpus {
    pub spec: CorpusSpec,
    pub limits: Limits,
    pub instances: Vec<Instance>,
    pub skipped: Vec<Skipped>,
}

impl Corpus {
    pub fn get(&self, name: &str) -> Option<&Instance> {
        self.instances.iter().find(|i| i.name == name)
    }
}

/// Recipes of the corpus in canonical order, before any ring is built.
pub fn corpus_entries(spec: &CorpusSpec) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let mut push = |name: String, recipe: Recipe| out.push(CorpusEntry { name, recipe });

    let z = RingRef::cyclic;
    let triv = |n: u32, g: &str| Recipe::trivial(z(n), g);
    let dual2 = || Recipe::TruncatedPoly { base: z(2), m: 2 };
    let dual3 = || Recipe::TruncatedPoly { base: z(3), m: 2 };
    let te = |base: Recipe, shift: usize| Recipe::TrivialExtension {
        base: Box::new(base),
        module: ModuleRecipe::ShiftedRegular { shift },
    };
    let matrix = |base: Recipe, sigma: Vec<usize>| Recipe::Matrix {
        base: Box::new(base),
        n: sigma.len(),
        sigma,
    };
    let checkerboard = || matrix(triv(2, "C2"), vec![0, 1]);
    let coarse = |base: Recipe, subgroup: Vec<usize>| Recipe::GroupRingCoarse {
        base: Box::new(base),
        subgroup,
    };
    let group_ring = |base: Recipe| Recipe::GroupRing {
        base: Box::new(base),
    };

    if spec.catalog {
        push("Z2[x]/(x^2) over C2".into(), dual2());
        push("M2(Z2) checkerboard".into(), checkerboard());
        push("Z2~Z2 E in degree e".into(), te(triv(2, "C2"), 0));
        push("Z2~Z2 E in degree g".into(), te(triv(2, "C2"), 1));
        push(
            "Z4[C2] over C2/C2".into(),
            coarse(triv(4, "C2"), vec![0, 1]),
        );
        push("Z3~Z3 E in degree g".into(), te(triv(3, "C2"), 1));
        push("Z3[x]/(x^2) over C2".into(), dual3());
        push(
            "Z2[x]/(x^2) graded by 1, 1+x".into(),
            alternate_dual_grading(),
        );
        push(
            "M2(Z2~Z2) sigma (e,e)".into(),
            matrix(te(triv(2, "C2"), 1), vec![0, 0]),
        );
    }

    for n in 2..=spec.cyclic_max {
        for g in &spec.cyclic_groups {
            push(format!("Z{n} over {g}"), triv(n, g));
        }
    }

    if spec.truncated {
        for (base, m) in [(2, 3), (2, 4), (4, 2), (3, 3), (5, 2), (2, 5)] {
            push(
                format!("Z{base}[x]/(x^{m}) over C{m}"),
                Recipe::TruncatedPoly { base: z(base), m },
            );
        }
    }

    if spec.trivial_extensions {
        push("Z4~Z4 E in degree g".into(), te(triv(4, "C2"), 1));
        push("Z3~Z3 E in degree e".into(), te(triv(3, "C2"), 0));
        push("Z5~Z5 E in degree g".into(), te(triv(5, "C2"), 1));
        push("Z2~Z2 E in degree g over C3".into(), te(triv(2, "C3"), 1));
        push("Z2~Z2 over C1".into(), te(triv(2, "C1"), 0));
        push(
            "Z2~0".into(),
            Recipe::TrivialExtension {
                base: Box::new(triv(2, "C2")),
                module: ModuleRecipe::Zero,
            },
        );
        push("Z2[x]/(x^2) ~ itself, shift e".into(), te(dual2(), 0));
        push("Z2[x]/(x^2) ~ itself, shift g".into(), te(dual2(), 1));
        push("M2(Z2) checkerboard ~ itself".into(), te(checkerboard(), 0));
    }

    if spec.matrices {
        let mut bases: Vec<(String, Recipe)> = (2..=9u32)
            .map(|n| (format!("Z{n}"), triv(n, "C2")))
            .collect();
        bases.push(("Z2[x]/(x^2)".into(), dual2()));
        bases.push(("Z2~Z2 g".into(), te(triv(2, "C2"), 1)));
        bases.push(("Z3[x]/(x^2)".into(), dual3()));
        bases.push(("Z3~Z3 g".into(), te(triv(3, "C2"), 1)));
        bases.push((
            "Z2xZ2".into(),
            Recipe::Product {
                factors: vec![triv(2, "C2"), triv(2, "C2")],
            },
        ));
        for (label, base) in bases {
            if base_order(&base).is_some_and(|o| o > spec.matrix_base_max) {
                continue;
            }
            let is_audit_ring = label == "Z2~Z2 g";
            if !(spec.catalog && is_audit_ring) {
                push(
                    format!("M2({label}) sigma (e,e)"),
                    matrix(base.clone(), vec![0, 0]),
                );
            }
            if !(spec.catalog && label == "Z2") {
                push(format!("M2({label}) sigma (e,g)"), matrix(base, vec![0, 1]));
            }
        }
        push(
            "M3(Z2) sigma (e,e,g)".into(),
            matrix(triv(2, "C2"), vec![0, 0, 1]),
        );
        push(
            "M3(Z2) sigma (e,e,e)".into(),
            matrix(triv(2, "C2"), vec![0, 0, 0]),
        );
        push(
            "M3(Z3) over C1".into(),
            matrix(triv(3, "C1"), vec![0, 0, 0]),
        );
    }

    if spec.group_rings {
        for (label, base) in [
            ("Z2 over C2", triv(2, "C2")),
            ("Z3 over C2", triv(3, "C2")),
            ("Z4 over C2", triv(4, "C2")),
            ("Z2 over C4", triv(2, "C4")),
            ("Z2 over C2xC2", triv(2, "C2xC2")),
            ("Z3 over C3", triv(3, "C3")),
            ("Z2[x]/(x^2)", dual2()),
            ("Z2[x]/(x^2) graded by 1, 1+x", alternate_dual_grading()),
            ("Z2~Z2 g", te(triv(2, "C2"), 1)),
            ("Z3~Z3 g", te(triv(3, "C2"), 1)),
            ("Z4 over C4", triv(4, "C4")),
            ("Z3 over C2xC2", triv(3, "C2xC2")),
        ] {
            push(format!("{label} [G]"), group_ring(base));
        }
        for (label, base, h) in [
            ("Z2 over C2", triv(2, "C2"), vec![0, 1]),
            ("Z2[x]/(x^2)", dual2(), vec![0, 1]),
            ("Z2 over C4", triv(2, "C4"), vec![0, 2]),
            (
                "Z2[x]/(x^4) over C4",
                Recipe::TruncatedPoly { base: z(2), m: 4 },
                vec![0, 2],
            ),
            ("Z3 over C3", triv(3, "C3"), vec![0, 1, 2]),
            ("Z2~Z2 g", te(triv(2, "C2"), 1), vec![0, 1]),
            ("Z2 over C2xC2", triv(2, "C2xC2"), vec![0, 1]),
            ("Z2 over C2xC2", triv(2, "C2xC2"), vec![0, 1, 2, 3]),
            ("Z3[x]/(x^2)", dual3(), vec![0, 1]),
            ("M2(Z2) checkerboard", checkerboard(), vec![0, 1]),
        ] {
            let hs: Vec<String> = h.iter().map(|g| g.to_string()).collect();
            push(
                format!("{label} [H = {{{}}}]", hs.join(",")),
                coarse(base, h),
            );
        }
    }

    if spec.products {
        let pairs: Vec<(&str, Vec<Recipe>)> = vec![
            ("Z2 x Z2", vec![triv(2, "C2"), triv(2, "C2")]),
            ("Z2 x Z3", vec![triv(2, "C2"), triv(3, "C2")]),
            (
                "Z2 x Z2 x Z2",
                vec![triv(2, "C2"), triv(2, "C2"), triv(2, "C2")],
            ),
            ("Z2[x]/(x^2) x Z3", vec![dual2(), triv(3, "C2")]),
            ("Z2[x]/(x^2) x Z2[x]/(x^2)", vec![dual2(), dual2()]),
            ("Z2~Z2 g x Z2[x]/(x^2)", vec![te(triv(2, "C2"), 1), dual2()]),
            (
                "M2(Z2) checkerboard x Z2",
                vec![checkerboard(), triv(2, "C2")],
            ),
            ("Z4 x Z2~Z2 g", vec![triv(4, "C2"), te(triv(2, "C2"), 1)]),
        ];
        for (label, factors) in pairs {
            push(label.into(), Recipe::Product { factors });
        }
    }

    if spec.quotients {
        let quotient = |base: Recipe, ideal: IdealRecipe| Recipe::Quotient {
            base: Box::new(base),
            ideal,
        };
        let gen = |g: Vec<Vec<u32>>| IdealRecipe::Generated { generators: g };
        push(
            "Z2[x]/(x^2) / J^g".into(),
            quotient(dual2(), IdealRecipe::GradedJacobson),
        );
        push(
            "Z2~Z2 g / J^g".into(),
            quotient(te(triv(2, "C2"), 1), IdealRecipe::GradedJacobson),
        );
        push(
            "Z2[x]/(x^3) / (x^2)".into(),
            quotient(
                Recipe::TruncatedPoly { base: z(2), m: 3 },
                gen(vec![vec![0, 0, 1]]),
            ),
        );
        push(
            "Z3[x]/(x^2) / (x)".into(),
            quotient(dual3(), gen(vec![vec![0, 1]])),
        );
        push(
            "Z6 over C2 / (3)".into(),
            quotient(triv(6, "C2"), gen(vec![vec![3]])),
        );
        push(
            "Z4[C2] / (h - 1)".into(),
            quotient(coarse(triv(4, "C2"), vec![0, 1]), gen(vec![vec![3, 1]])),
        );
        push(
            "Z2 over C2 / Z2".into(),
            quotient(triv(2, "C2"), IdealRecipe::Whole),
        );
        push(
            "M2(Z2) checkerboard / M2(Z2)".into(),
            quotient(checkerboard(), IdealRecipe::Whole),
        );
        push(
            "M2(Z4) sigma (e,g) / 2 M2(Z4)".into(),
            quotient(
                matrix(triv(4, "C2"), vec![0, 1]),
                gen(vec![vec![2, 0, 0, 0]]),
            ),
        );
    }

    if spec.sampled_gradings > 0 {
        for (k, (label, ring)) in sample_rings().into_iter().enumerate() {
            let gradings = enumerate_c2_gradings(&ring);
            let mut rng = ChaCha8Rng::seed_from_u64(
                spec.seed ^ (k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
            );
            let take = spec.sampled_gradings.min(gradings.len());
            let mut chosen = rand::seq::index::sample(&mut rng, gradings.len(), take).into_vec();
            chosen.sort_unstable();
            for i in chosen {
                let (re, rg) = &gradings[i];
                push(
                    format!("{label} C2-grading #{i}"),
                    graded_recipe(&ring, "C2", &[re.as_slice(), rg.as_slice()]),
                );
            }
        }
    }

    out
}

/// Builds every entry; entries over the cap or otherwise invalid are skipped and logged.
pub fn build_corpus(spec: &CorpusSpec, base: &Limits) -> Corpus {
    let limits = spec.limits(base);
    let entries = corpus_entries(spec);
    let mut seen = HashSet::new();
    let entries: Vec<CorpusEntry> = entries
        .into_iter()
        .filter(|e| seen.insert(e.name.clone()))
        .collect();
    let built: Vec<Result<Instance, Skipped>> = entries
        .into_par_iter()
        .map(|e| {
            Instance::new(e.name.clone(), e.recipe, &limits).map_err(|err| Skipped {
                name: e.name,
                reason: err.to_string(),
            })
        })
        .collect();
    let mut instances = Vec::new();
    let mut skipped = Vec::new();
    for b in built {
        match b {
            Ok(i) => instances.push(i),
            Err(s) => skipped.push(s),
        }
    }
    Corpus {
        spec: spec.clone(),
        limits,
        instances,
        skipped,
    }
}

/// Order of a recipe's ring without building it, where cheap to tell.
fn base_order(recipe: &Recipe) -> Option<usize> {
    match recipe {
        Recipe::TrivialGrading {
            ring: RingRef::Named { name },
            ..
        } => name[1..].parse().ok(),
        Recipe::TruncatedPoly {
            base: RingRef::Named { name },
            m,
        } => name[1..].parse::<usize>().ok().map(|n| n.pow(*m as u32)),
        Recipe::TrivialExtension { base, .. } => base_order(base).map(|n| n * n),
        Recipe::Product { factors } => factors.iter().map(base_order).product(),
        _ => None,
    }
}

/// `Z_2[x]/(x^2)` with `R_e = span{1}` and `R_g = span{1 + x}`.
fn alternate_dual_grading() -> Recipe {
    let ring = dual_numbers(2);
    graded_recipe(&ring, "C2", &[&[1], &[3]])
}

fn dual_numbers(p: u32) -> FiniteRing {
    gradering_core::truncated_polynomial(&FiniteRing::cyclic(p), 2, usize::MAX)
        .expect("dual numbers are small")
        .ring()
        .clone()
}

/// A literal graded-ring recipe whose component `g` is spanned by `components[g]` (indices).
pub fn graded_recipe(ring: &FiniteRing, group: &str, components: &[&[usize]]) -> Recipe {
    let mut map = BTreeMap::new();
    for (g, gens) in components.iter().enumerate() {
        if !gens.is_empty() {
            map.insert(
                g.to_string(),
                gens.iter().map(|&x| ring.element(x).coeffs).collect(),
            );
        }
    }
    Recipe::Graded {
        ring: ring.to_spec(),
        grading: GradingSpec {
            group: GroupSpec::Named { name: group.into() },
            components: map,
        },
    }
}

/// Rings whose `C_2`-gradings are sampled into the corpus.
fn sample_rings() -> Vec<(String, FiniteRing)> {
    let cap = usize::MAX;
    let trunc = |n: u32, m: usize| {
        gradering_core::truncated_polynomial(&FiniteRing::cyclic(n), m, cap)
            .unwrap()
            .ring()
            .clone()
    };
    let spec = |orders: Vec<u32>, unity: Vec<u32>, mul: Vec<Vec<Vec<u32>>>| {
        FiniteRing::from_spec(
            &RingSpec {
                additive_orders: orders,
                unity,
                mul,
            },
            cap,
        )
        .unwrap()
    };
    // basis 1, x, y with x^2 = y^2 = xy = 0
    let square_zero = spec(
        vec![2, 2, 2],
        vec![1, 0, 0],
        vec![
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]],
            vec![vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 0]],
        ],
    );
    // basis e11, e12, e22 of upper triangular 2x2 matrices
    let upper = spec(
        vec![2, 2, 2],
        vec![1, 0, 1],
        vec![
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]],
            vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 1, 0]],
            vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 1]],
        ],
    );
    let m2 = gradering_core::matrix_graded(
        &gradering_core::trivial_grading(
            FiniteRing::cyclic(2),
            gradering_core::FiniteGroup::trivial(),
        ),
        &gradering_core::MatrixGradingSpec {
            n: 2,
            sigma: vec![0, 0],
        },
        cap,
    )
    .unwrap()
    .graded
    .ring()
    .clone();
    let prod =
        gradering_core::direct_product(&[&FiniteRing::cyclic(2), &trunc(2, 2)], cap).unwrap();
    vec![
        ("Z2[x]/(x^2)".into(), trunc(2, 2)),
        ("Z2[x]/(x^3)".into(), trunc(2, 3)),
        ("Z2[x,y]/(x,y)^2".into(), square_zero),
        ("T2(Z2)".into(), upper),
        ("Z2 x Z2[x]/(x^2)".into(), prod),
        ("Z4[x]/(x^2)".into(), trunc(4, 2)),
        ("Z2[x]/(x^4)".into(), trunc(2, 4)),
        ("M2(Z2)".into(), m2),
    ]
}

/// Every `C_2`-grading `R = R_e + R_g` with `R_g != 0`, as pairs of
/// generator lists, in canonical order of `(R_e, R_g)` element sets.
pub fn enumerate_c2_gradings(r: &FiniteRing) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = r.order();
    let subgroups = additive_subgroups(r);
    let inside = |set: &[usize]| {
        let mut m = vec![false; n];
        for &x in set {
            m[x] = true;
        }
        m
    };
    let closed = |a: &[usize], b: &[usize], target: &[bool]| {
        a.iter()
            .all(|&x| b.iter().all(|&y| target[r.mul_idx(x, y)]))
    };
    let mut out = Vec::new();
    for re in &subgroups {
        if re.binary_search(&r.one_idx()).is_err() {
            continue;
        }
        let in_e = inside(re);
        if !closed(re, re, &in_e) {
            continue;
        }
        for rg in &subgroups {
            if rg.len() < 2 || re.len() * rg.len() != n || rg[1..].iter().any(|&x| in_e[x]) {
                continue;
            }
            let in_g = inside(rg);
            if closed(re, rg, &in_g) && closed(rg, re, &in_g) && closed(rg, rg, &in_e) {
                out.push((minimal_generators(r, re), minimal_generators(r, rg)));
            }
        }
    }
    out
}

/// All additive subgroups as sorted index lists, sorted by `(size, elements)`.
fn additive_subgroups(r: &FiniteRing) -> Vec<Vec<usize>> {
    let mut found: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier = vec![vec![0usize]];
    found.insert(vec![0]);
    while let Some(s) = frontier.pop() {
        for x in 0..r.order() {
            if s.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = s.clone();
            gens.push(x);
            let t = r.additive_span(&gens);
            if found.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut all: Vec<Vec<usize>> = found.into_iter().collect();
    all.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    all
}

fn minimal_generators(r: &FiniteRing, set: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![0];
    for &x in set {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = r.additive_span(&gens);
        }
    }
    gens
}
