//! `gradering`: classify finite graded rings, build constructions, and check
//! statements about them over a generated corpus.
//!
//! Exit status: 0 on success, 2 when a counterexample or violation was found
//! (the report is still written), 1 on usage or validation errors.

mod input;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gradering_core::laurent::{
    symbolic_is_graded_nil_good, symbolic_laurent_nil_good_counterwitness,
};
use gradering_core::{
    trivial_grading, ClassificationReport, FiniteGroup, FiniteRing, GradedAnalysis, GradedRingSpec,
    Limits,
};
use gradering_harness::report::{
    audit_markdown, search_markdown, suite_markdown, theorem_markdown,
};
use gradering_harness::{
    build_corpus, corpus_entries, replay, run_audits, search_counterexample, to_canonical_json,
    verify_suite, verify_theorem, Built, CorpusSpec, HarnessError, Implication, Outcome, Recipe,
    ReplayBundle, ReportHeader, Scope,
};
use serde::Serialize;
use serde_json::{json, Value};

use input::{
    decode, graded_input, grading_field, read_json, recipe_field, ring_field, GradedInput,
    InputError,
};

#[derive(Parser, Debug)]
#[command(
    name = "gradering",
    version,
    about = "Exact engine for finite group-graded rings"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest ring order accepted.
    #[arg(long, global = true, env = "GRADERING_MAX_ORDER")]
    max_order: Option<usize>,
    /// Largest homogeneous right ideal lattice enumerated.
    #[arg(long, global = true)]
    ideal_cap: Option<usize>,
    /// Candidate budget for similarity searches.
    #[arg(long, global = true)]
    search_budget: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output file, written atomically (default: stdout).
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    /// Seed for sampled corpus gradings.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Include runtimes in reports (JSON output is then not reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a ring, graded ring or recipe file is well formed.
    Validate { file: PathBuf },
    /// Decide every predicate on a graded ring.
    Classify { file: PathBuf },
    /// Build a construction recipe into an explicit graded ring.
    Construct { file: PathBuf },
    /// Check registered statements over a corpus, or replay a bundle.
    Verify(VerifyArgs),
    /// Look for a counterexample to an implication between predicates.
    Search {
        #[arg(long)]
        implication: PathBuf,
        /// `default` or a corpus spec file.
        #[arg(long, default_value = "default")]
        corpus: String,
    },
    /// Build a corpus and write one file per instance.
    Corpus {
        #[arg(long)]
        emit: PathBuf,
        #[arg(long, default_value = "default")]
        corpus: String,
    },
    /// Decide the recorded worked examples and compare with their claims.
    Audit,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Statement id; repeat for several.
    #[arg(long = "theorem", conflicts_with_all = ["all", "replay"])]
    theorems: Vec<String>,
    /// Every registered statement plus the radical identities.
    #[arg(long, conflicts_with = "replay")]
    all: bool,
    /// `default` or a corpus spec file.
    #[arg(long, default_value = "default")]
    corpus: String,
    /// Re-run a bundle written by an earlier verify.
    #[arg(long)]
    replay: Option<PathBuf>,
    /// Directory receiving one bundle per violated instance.
    #[arg(long)]
    bundles: Option<PathBuf>,
}

/// How a command ended, before it is mapped to an exit status.
enum Done {
    Ok,
    Found,
}

enum Failure {
    Input(InputError),
    Io(std::io::Error),
    /// The report was written but carries engine errors.
    Partial(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn harness(e: HarnessError) -> Failure {
    Failure::Input(InputError::new(recipe_field(&e), e))
}

fn json_text<T: Serialize>(value: &T) -> String {
    to_canonical_json(value).expect("reports serialize")
}

struct Env {
    limits: Limits,
    /// Set when the ring cap came from the flag or environment.
    max_order: Option<usize>,
    seed: Option<u64>,
    format: Format,
    output: Option<PathBuf>,
    timings: bool,
}

impl Env {
    fn new(g: &Global) -> Self {
        let mut limits = Limits::default();
        if let Some(m) = g.max_order {
            limits.max_ring_order = m;
        }
        if let Some(c) = g.ideal_cap {
            limits.ideal_lattice_cap = c;
        }
        if let Some(b) = g.search_budget {
            limits.similarity_budget = b;
        }
        Self {
            limits,
            max_order: g.max_order,
            seed: g.seed,
            format: g.format,
            output: g.output.clone(),
            timings: g.timings,
        }
    }

    fn header(&self, command: &str) -> Value {
        json!({
            "tool": "gradering",
            "version": env!("CARGO_PKG_VERSION"),
            "command": command,
            "limits": self.limits,
        })
    }

    fn emit(&self, json: String, markdown: impl FnOnce() -> String) -> Result<(), Failure> {
        let text = match self.format {
            Format::Json => json,
            Format::Markdown => markdown(),
        };
        output::emit(self.output.as_deref(), &text)?;
        Ok(())
    }

    fn corpus_spec(&self, arg: &str) -> Result<CorpusSpec, Failure> {
        let mut spec = if arg == "default" {
            CorpusSpec::default()
        } else {
            decode(read_json(Path::new(arg))?, "")?
        };
        if let Some(m) = self.max_order {
            spec.max_order = m;
        }
        if let Some(s) = self.seed {
            spec.seed = s;
        }
        Ok(spec)
    }
}

fn build(recipe: &Recipe, limits: &Limits) -> Result<Built, Failure> {
    recipe.build(limits).map_err(harness)
}

fn load_graded(path: &Path, limits: &Limits) -> Result<(Recipe, Built), Failure> {
    match graded_input(read_json(path)?)? {
        GradedInput::Recipe(r) => {
            let built = build(&r, limits)?;
            Ok((r, built))
        }
        GradedInput::Ring(spec) => {
            let ring = FiniteRing::from_spec(&spec, limits.max_ring_order)
                .map_err(|e| InputError::new(ring_field(&e), e))?;
            let gr = trivial_grading(ring, FiniteGroup::trivial());
            let recipe = Recipe::Graded {
                ring: spec,
                grading: gr.to_spec().grading,
            };
            let built = build(&recipe, limits)?;
            Ok((recipe, built))
        }
    }
}

fn validate(env: &Env, file: &Path) -> Result<Done, Failure> {
    let value = read_json(file)?;
    if let Some(done) = validate_other(env, &value)? {
        return Ok(done);
    }
    let kind = match &value {
        Value::Object(m) if m.contains_key("construct") => "recipe",
        Value::Object(m) if m.contains_key("grading") || m.contains_key("graded_ring") => {
            "graded_ring"
        }
        _ => "ring",
    };
    // graded specs are checked directly so errors point into the spec
    if kind == "graded_ring" {
        let spec_value = match &value {
            Value::Object(m) if m.contains_key("graded_ring") => m["graded_ring"].clone(),
            v => v.clone(),
        };
        let prefix = if matches!(&value, Value::Object(m) if m.contains_key("graded_ring")) {
            "graded_ring"
        } else {
            ""
        };
        let spec: GradedRingSpec = decode(spec_value, prefix)?;
        gradering_core::GradedRing::from_spec(&spec, &env.limits).map_err(|e| {
            let f = grading_field(&e);
            InputError::new(
                if prefix.is_empty() {
                    f
                } else {
                    format!("{prefix}.{f}")
                },
                e,
            )
        })?;
    }
    let (_, built) = load_graded(file, &env.limits)?;
    let summary = match &built {
        Built::Finite(c) => json!({
            "order": c.graded.ring().order(),
            "group_order": c.graded.group().order(),
            "rank": c.graded.ring().rank(),
        }),
        Built::Symbolic(s) => json!({ "symbolic": s.kind, "base_order": s.base.order() }),
    };
    let report = json!({
        "header": env.header("validate"),
        "kind": kind,
        "valid": true,
        "summary": summary,
    });
    env.emit(json_text(&report), || {
        format!("# Validation\n\nValid {kind}: {summary}\n")
    })?;
    Ok(Done::Ok)
}

const CORPUS_KEYS: &[&str] = &[
    "catalog",
    "cyclic_max",
    "cyclic_groups",
    "truncated",
    "trivial_extensions",
    "matrices",
    "matrix_base_max",
    "group_rings",
    "products",
    "quotients",
    "sampled_gradings",
    "max_order",
    "seed",
];

/// Implication specs, replay bundles and corpus specs; `None` for ring files.
fn validate_other(env: &Env, value: &Value) -> Result<Option<Done>, Failure> {
    let Value::Object(m) = value else {
        return Ok(None);
    };
    let kind = if m.contains_key("check") {
        let b: ReplayBundle = decode(value.clone(), "")?;
        b.recipe
            .build(&env.limits)
            .map_err(|e| InputError::new(join_field("recipe", &recipe_field(&e)), e))?;
        "replay_bundle"
    } else if m.contains_key("hypothesis") || m.contains_key("conclusion") {
        let imp: Implication = decode(value.clone(), "")?;
        imp.validate().map_err(harness)?;
        "implication"
    } else if m.keys().any(|k| CORPUS_KEYS.contains(&k.as_str())) {
        let spec: CorpusSpec = decode(value.clone(), "")?;
        for g in &spec.cyclic_groups {
            gradering_core::make_group(
                &gradering_core::GroupSpec::Named { name: g.clone() },
                env.limits.max_group_order,
            )
            .map_err(|e| InputError::new("cyclic_groups", e))?;
        }
        "corpus_spec"
    } else {
        return Ok(None);
    };
    let report = json!({ "header": env.header("validate"), "kind": kind, "valid": true });
    env.emit(json_text(&report), || {
        format!("# Validation\n\nValid {kind}.\n")
    })?;
    Ok(Some(Done::Ok))
}

fn join_field(prefix: &str, field: &str) -> String {
    if field.is_empty() {
        prefix.to_string()
    } else {
        format!("{prefix}.{field}")
    }
}

#[derive(Serialize)]
struct ClassifyOutput {
    header: Value,
    recipe: Recipe,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<ClassificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    symbolic: Option<Value>,
}

fn classify(env: &Env, file: &Path) -> Result<Done, Failure> {
    let start = Instant::now();
    let (recipe, built) = load_graded(file, &env.limits)?;
    let mut out = ClassifyOutput {
        header: env.header("classify"),
        recipe,
        report: None,
        symbolic: None,
    };
    match built {
        Built::Finite(c) => {
            let an = GradedAnalysis::new(c.graded, env.limits.clone());
            let report = an
                .report()
                .map_err(|e| InputError::new("", format!("classification failed: {e}")))?;
            out.report = Some(report);
        }
        Built::Symbolic(s) => {
            let verdict = symbolic_is_graded_nil_good(&s);
            let nil_good = symbolic_laurent_nil_good_counterwitness(&s).ok();
            out.symbolic = Some(json!({
                "kind": s.kind,
                "graded_nil_good": verdict,
                "nil_good_counterwitness": nil_good,
            }));
        }
    }
    if env.timings {
        out.header["runtime_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    env.emit(json_text(&out), || classify_markdown(&out))?;
    Ok(Done::Ok)
}

fn classify_markdown(out: &ClassifyOutput) -> String {
    use std::fmt::Write as _;
    let mut s = String::from("# Classification\n\n");
    let limits = &out.header["limits"];
    let _ = writeln!(s, "Limits: {limits}\n");
    if let Some(r) = &out.report {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(
            s,
            "Order {}, group order {}, support {:?}.\n",
            r.order, r.group_order, r.support
        );
        let _ = writeln!(s, "| property | holds | counterexample |\n|---|---|---|");
        let c = &r.counterexamples;
        let show = |e: &Option<gradering_core::RingElement>| {
            e.as_ref().map(|x| x.to_string()).unwrap_or_default()
        };
        let _ = writeln!(
            s,
            "| nil-good | {} | {} |",
            yes(r.is_nil_good),
            show(&c.nil_good)
        );
        let _ = writeln!(
            s,
            "| graded nil-good | {} | {} |",
            yes(r.is_graded_nil_good),
            show(&c.graded_nil_good)
        );
        let _ = writeln!(
            s,
            "| graded fine | {} | {} |",
            yes(r.is_graded_fine),
            show(&c.graded_fine)
        );
        let _ = writeln!(
            s,
            "| graded-nil | {} | {} |",
            yes(r.is_graded_nil),
            show(&c.graded_nil)
        );
        let _ = writeln!(s, "| graded-local | {} | |", yes(r.is_graded_local));
        let _ = writeln!(s, "| commutative | {} | |", yes(r.is_commutative));
        let jg: Vec<String> = r
            .graded_jacobson_radical
            .iter()
            .map(|x| x.to_string())
            .collect();
        let _ = writeln!(s, "\nJ^g = {{{}}}", jg.join(", "));
        let _ = writeln!(
            s,
            "Units {}, nilpotents {}, idempotents {}.",
            r.unit_count, r.nilpotent_count, r.idempotent_count
        );
    }
    if let Some(v) = &out.symbolic {
        let _ = writeln!(
            s,
            "```json\n{}\n```",
            serde_json::to_string_pretty(v).unwrap_or_default()
        );
    }
    s
}

fn construct(env: &Env, file: &Path) -> Result<Done, Failure> {
    if env.format == Format::Markdown {
        return Err(InputError::new("format", "construct writes JSON only").into());
    }
    let value = read_json(file)?;
    let recipe: Recipe = decode(value, "")?;
    let out = match build(&recipe, &env.limits)? {
        Built::Finite(c) => json!({
            "header": env.header("construct"),
            "recipe": recipe,
            "context": c.context.kind(),
            "graded_ring": c.graded.to_spec(),
        }),
        Built::Symbolic(s) => json!({
            "header": env.header("construct"),
            "recipe": recipe,
            "symbolic": { "kind": s.kind, "base": s.base.to_spec() },
        }),
    };
    env.emit(json_text(&out), String::new)?;
    Ok(Done::Ok)
}

fn verify(env: &Env, args: &VerifyArgs) -> Result<Done, Failure> {
    if let Some(path) = &args.replay {
        let bundle: ReplayBundle = decode(read_json(path)?, "")?;
        let again = replay(&bundle, &env.limits).map_err(harness)?;
        let found = matches!(again.outcome, Outcome::Violated { .. });
        let changed = again.outcome != bundle.outcome;
        env.emit(json_text(&again), || {
            format!(
                "# Replay\n\n{} on {}: {:?}\n",
                check_name(&again),
                again.instance,
                again.outcome
            )
        })?;
        if changed {
            return Err(Failure::Partial(
                "replayed outcome differs from the recorded one".into(),
            ));
        }
        return Ok(if found { Done::Found } else { Done::Ok });
    }
    let spec = env.corpus_spec(&args.corpus)?;
    let corpus = build_corpus(&spec, &env.limits);
    let header = ReportHeader::new(&corpus);
    let (done, errors, bundles) = if args.all || args.theorems.is_empty() {
        let suite = verify_suite(&[], &corpus, env.timings).map_err(harness)?;
        let violated = suite
            .theorems
            .iter()
            .any(|t| t.violations > 0 && t.scope == Scope::InScope)
            || !suite.radical_identities.violations.is_empty();
        let errors: usize = suite.theorems.iter().map(|t| t.errors).sum::<usize>()
            + suite.radical_identities.errors.len();
        let bundles: Vec<ReplayBundle> = suite
            .theorems
            .iter()
            .flat_map(|t| t.bundles.clone())
            .collect();
        env.emit(json_text(&suite), || suite_markdown(&suite))?;
        (
            if violated { Done::Found } else { Done::Ok },
            errors,
            bundles,
        )
    } else {
        let mut reports = Vec::new();
        for id in &args.theorems {
            reports.push(verify_theorem(id, &corpus, env.timings).map_err(harness)?);
        }
        let violated = reports.iter().any(|r| r.violations > 0);
        let errors = reports.iter().map(|r| r.errors).sum();
        let bundles = reports.iter().flat_map(|r| r.bundles.clone()).collect();
        let out = json!({ "header": header, "reports": reports });
        env.emit(json_text(&out), || {
            reports
                .iter()
                .map(|r| theorem_markdown(&header, r))
                .collect::<Vec<_>>()
                .join("\n")
        })?;
        (
            if violated { Done::Found } else { Done::Ok },
            errors,
            bundles,
        )
    };
    if let Some(dir) = &args.bundles {
        std::fs::create_dir_all(dir)?;
        for (i, b) in bundles.iter().enumerate() {
            output::write_atomic(&dir.join(format!("{i:04}.json")), &json_text(b))?;
        }
    }
    if errors > 0 {
        return Err(Failure::Partial(format!(
            "{errors} instance evaluations failed; see the report"
        )));
    }
    Ok(done)
}

fn check_name(b: &ReplayBundle) -> String {
    match &b.check {
        gradering_harness::CheckRef::Theorem { id } => id.clone(),
        gradering_harness::CheckRef::Implication {
            hypothesis,
            conclusion,
        } => {
            format!(
                "{} => {}",
                hypothesis.join(" and "),
                conclusion.join(" and ")
            )
        }
    }
}

fn search(env: &Env, implication: &Path, corpus_arg: &str) -> Result<Done, Failure> {
    let imp: Implication = decode(read_json(implication)?, "")?;
    imp.validate().map_err(harness)?;
    let spec = env.corpus_spec(corpus_arg)?;
    let corpus = build_corpus(&spec, &env.limits);
    let report = search_counterexample(&imp, &corpus).map_err(harness)?;
    let out = json!({ "header": ReportHeader::new(&corpus), "report": report });
    env.emit(json_text(&out), || search_markdown(&report))?;
    if !report.errors.is_empty() {
        return Err(Failure::Partial(format!(
            "{} instance evaluations failed",
            report.errors.len()
        )));
    }
    Ok(
        if report.corpus_witness.is_some() || report.symbolic_witness.is_some() {
            Done::Found
        } else {
            Done::Ok
        },
    )
}

fn emit_corpus(env: &Env, dir: &Path, corpus_arg: &str) -> Result<Done, Failure> {
    let spec = env.corpus_spec(corpus_arg)?;
    let entries = corpus_entries(&spec);
    let corpus = build_corpus(&spec, &env.limits);
    std::fs::create_dir_all(dir)?;
    let mut files = Vec::new();
    for (i, inst) in corpus.instances.iter().enumerate() {
        let file = format!("{i:04}.json");
        let body = json!({
            "name": inst.name,
            "recipe": inst.recipe,
            "context": inst.context.kind(),
            "graded_ring": inst.graded().to_spec(),
        });
        output::write_atomic(&dir.join(&file), &json_text(&body))?;
        files.push(json!({ "file": file, "name": inst.name }));
    }
    let manifest = json!({
        "header": ReportHeader::new(&corpus),
        "entries": entries.len(),
        "files": files,
    });
    output::write_atomic(&dir.join("manifest.json"), &json_text(&manifest))?;
    if let Some(p) = &env.output {
        output::write_atomic(p, &json_text(&manifest))?;
    }
    Ok(Done::Ok)
}

fn audit(env: &Env) -> Result<Done, Failure> {
    let suite = run_audits(
        &env.limits
            .clone()
            .with_max_ring_order(env.limits.max_ring_order.max(256)),
    )
    .map_err(harness)?;
    let out = json!({ "header": env.header("audit"), "audits": suite.audits });
    env.emit(json_text(&out), || audit_markdown(&suite))?;
    Ok(if suite.audits.iter().any(|a| a.discrepancy) {
        Done::Found
    } else {
        Done::Ok
    })
}

fn run(cli: Cli) -> Result<Done, Failure> {
    let env = Env::new(&cli.global);
    match &cli.command {
        Command::Validate { file } => validate(&env, file),
        Command::Classify { file } => classify(&env, file),
        Command::Construct { file } => construct(&env, file),
        Command::Verify(args) => verify(&env, args),
        Command::Search {
            implication,
            corpus,
        } => search(&env, implication, corpus),
        Command::Corpus { emit, corpus } => emit_corpus(&env, emit, corpus),
        Command::Audit => audit(&env),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: threads: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(Done::Ok) => ExitCode::SUCCESS,
        Ok(Done::Found) => ExitCode::from(2),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Partial(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
