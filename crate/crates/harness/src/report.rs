//! Canonical JSON and Markdown renderings.
//!
//! JSON goes through `serde_json::Value`, whose maps are sorted, so equal
//! reports serialize to identical bytes. Markdown is derived from the same
//! structures and is never parsed back.

use std::fmt::Write as _;

use serde::Serialize;

use crate::audit::AuditSuite;
use crate::search::SearchReport;
use crate::verify::{Outcome, ReportHeader, SuiteReport, VerificationReport};

pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String, serde_json::Error> {
    let v = serde_json::to_value(value)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn suite_markdown(report: &SuiteReport) -> String {
    let mut out = String::new();
    let h = &report.header;
    let _ = writeln!(out, "# Verification report\n");
    let _ = writeln!(
        out,
        "Limits: ring order {}, group order {}, ideal lattice {}, similarity budget {}.\n",
        h.limits.max_ring_order,
        h.limits.max_group_order,
        h.limits.ideal_lattice_cap,
        h.limits.similarity_budget
    );
    let _ = writeln!(
        out,
        "Corpus: {} instances, {} skipped, seed {}.\n",
        h.corpus.instances,
        h.corpus.skipped.len(),
        h.corpus.spec.seed
    );
    let _ = writeln!(out, "Readings of infinite hypotheses:\n");
    for f in &h.finitizations {
        let _ = writeln!(out, "- {f}");
    }
    let timed = report.theorems.iter().any(|t| t.runtime_ms.is_some());
    let _ = writeln!(out);
    let _ = write!(
        out,
        "| id | scope | statement | instances | non-vacuous | violations | errors |"
    );
    let _ = writeln!(out, "{}", if timed { " runtime-ms |" } else { "" });
    let _ = write!(out, "|---|---|---|---|---|---|---|");
    let _ = writeln!(out, "{}", if timed { "---|" } else { "" });
    for t in &report.theorems {
        let scope = serde_json::to_value(t.scope)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default();
        let _ = write!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            t.id, scope, t.anchor, t.instances, t.non_vacuous, t.violations, t.errors
        );
        match t.runtime_ms {
            Some(ms) => {
                let _ = writeln!(out, " {ms} |");
            }
            None => {
                let _ = writeln!(out);
            }
        }
    }
    let violated: Vec<_> = report
        .theorems
        .iter()
        .filter(|t| t.violations > 0)
        .collect();
    if !violated.is_empty() {
        let _ = writeln!(out, "\n## Violations\n");
        for t in violated {
            for b in &t.bundles {
                if let Outcome::Violated { witness } = &b.outcome {
                    let el = witness
                        .element
                        .as_ref()
                        .map(|e| format!(" at {e}"))
                        .unwrap_or_default();
                    let _ = writeln!(
                        out,
                        "- {} on {}: {}{}",
                        t.id, b.instance, witness.message, el
                    );
                }
            }
        }
    }
    let r = &report.radical_identities;
    let _ = writeln!(
        out,
        "\n## Radical identities\n\n{} instances, {} violations, {} errors.",
        r.instances,
        r.violations.len(),
        r.errors.len()
    );
    let s = &report.summary;
    let _ = writeln!(
        out,
        "\n## Summary\n\n{} of {} in-scope statements pass.",
        s.in_scope_passing, s.in_scope
    );
    if !s.failing.is_empty() {
        let _ = writeln!(out, "Failing: {}.", s.failing.join(", "));
    }
    out
}

pub fn search_markdown(report: &SearchReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# Counterexample search\n\n{} => {}\n",
        report.implication.hypothesis.names().join(" and "),
        report.implication.conclusion.names().join(" and ")
    );
    let _ = writeln!(
        out,
        "Checked {} instances; hypothesis held on {}.\n",
        report.instances_checked, report.hypothesis_satisfied
    );
    match &report.corpus_witness {
        Some(b) => {
            let _ = writeln!(out, "Finite witness: {}", b.instance);
            if let Outcome::Violated { witness } = &b.outcome {
                let el = witness
                    .element
                    .as_ref()
                    .map(|e| format!(" at {e}"))
                    .unwrap_or_default();
                let _ = writeln!(out, "  {}{}", witness.message, el);
            }
        }
        None => {
            let _ = writeln!(out, "Finite witness: none in the corpus");
        }
    }
    match &report.symbolic_witness {
        Some(w) => {
            let _ = writeln!(out, "\nSymbolic witness: {} ({} fails)", w.name, w.failing);
            for line in &w.trace {
                let _ = writeln!(out, "- {line}");
            }
        }
        None => {
            let _ = writeln!(out, "\nSymbolic witness: none");
        }
    }
    out
}

pub fn audit_markdown(suite: &AuditSuite) -> String {
    let mut out = String::from("# Example audits\n");
    for a in &suite.audits {
        let _ = writeln!(out, "\n## {}\n", a.name);
        let entries: Vec<String> = a.entries.iter().map(|e| e.to_string()).collect();
        let _ = writeln!(out, "Element entries: {}", entries.join(" "));
        let _ = writeln!(out, "Recorded claim: {}", a.claim);
        let _ = writeln!(
            out,
            "Engine finds a decomposition: {}",
            yes(a.engine_decomposable)
        );
        if let (Some(u), Some(n)) = (&a.witness_unit_entries, &a.witness_nilpotent_entries) {
            let u: Vec<String> = u.iter().map(|e| e.to_string()).collect();
            let n: Vec<String> = n.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(
                out,
                "Unit entries: {}; nilpotent entries: {}",
                u.join(" "),
                n.join(" ")
            );
        }
        let _ = writeln!(
            out,
            "Whole ring graded nil-good: {}",
            yes(a.ring_graded_nil_good)
        );
        for (what, ok) in &a.checks {
            let _ = writeln!(out, "Check {what}: {}", yes(*ok));
        }
        let _ = writeln!(
            out,
            "Verdict: {}",
            if a.discrepancy {
                "DISCREPANCY with the recorded claim"
            } else {
                "agrees with the recorded claim"
            }
        );
    }
    out
}

pub fn theorem_markdown(header: &ReportHeader, t: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}\n\n{}\n", t.id, t.anchor);
    let _ = writeln!(
        out,
        "Limits: ring order {}, group order {}, ideal lattice {}.\n",
        header.limits.max_ring_order,
        header.limits.max_group_order,
        header.limits.ideal_lattice_cap
    );
    let _ = writeln!(out, "- hypothesis: {}", t.hypothesis);
    let _ = writeln!(out, "- conclusion: {}", t.conclusion);
    let scope = serde_json::to_value(t.scope)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default();
    let _ = writeln!(out, "- scope: {scope}");
    if !t.scope_note.is_empty() {
        let _ = writeln!(out, "- note: {}", t.scope_note);
    }
    let _ = writeln!(
        out,
        "- instances {}, non-vacuous {}, violations {}, errors {}",
        t.instances, t.non_vacuous, t.violations, t.errors
    );
    if let Some(ms) = t.runtime_ms {
        let _ = writeln!(out, "- runtime {ms} ms");
    }
    for b in &t.bundles {
        if let Outcome::Violated { witness } = &b.outcome {
            let el = witness
                .element
                .as_ref()
                .map(|e| format!(" at {e}"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "- violated on {}: {}{}",
                b.instance, witness.message, el
            );
        }
    }
    out
}
