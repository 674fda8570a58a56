//! Human-readable text and JSON for reports, results and ledger runs.

use std::fmt::Write;

use octic_core::{
    ArrangementDescriptor, EulerResult, IncidenceReport, LedgerCounts, LedgerRun, RationalPlane,
    ValidationReport,
};
use serde_json::{json, Value};

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn index_list(set: impl IntoIterator<Item = usize>) -> String {
    set.into_iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

pub fn report_json(planes: &[RationalPlane], report: &IncidenceReport) -> Value {
    json!({
        "plane_count": report.plane_count,
        "planes": planes.iter().map(|p| strings(p.coefficients())).collect::<Vec<_>>(),
        "lines": report.lines.iter().map(|l| json!({
            "plucker": strings(l.line.coordinates()),
            "planes": l.planes_through,
            "multiplicity": l.multiplicity(),
            "t": l.t_count,
        })).collect::<Vec<_>>(),
        "points": report.points.iter().map(|p| json!({
            "coordinates": strings(p.point.coordinates()),
            "planes": p.planes,
            "multiplicity": p.multiplicity(),
            "triple_lines": p.triple_lines,
        })).collect::<Vec<_>>(),
        "summary": report.summary(),
        "violations": report.violations,
    })
}

pub fn report_human(planes: &[RationalPlane], report: &IncidenceReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "planes ({})", planes.len());
    for (i, p) in planes.iter().enumerate() {
        let _ = writeln!(out, "  {i:>2}  {p}");
    }
    let _ = writeln!(out, "lines ({})", report.lines.len());
    for l in &report.lines {
        let _ = writeln!(
            out,
            "  q={} t={}  planes {:<12} {}",
            l.multiplicity(),
            l.t_count,
            index_list(l.planes_through.iter().copied()),
            l.line
        );
    }
    let _ = writeln!(out, "points ({})", report.points.len());
    for p in &report.points {
        let _ = writeln!(
            out,
            "  p={} k={}  planes {:<12} {}",
            p.multiplicity(),
            p.triple_lines,
            index_list(p.planes.iter().copied()),
            p.point
        );
    }
    if report.violations.is_empty() {
        let _ = writeln!(out, "violations: none");
    } else {
        let _ = writeln!(out, "violations ({})", report.violations.len());
        for v in &report.violations {
            let _ = writeln!(out, "  {}", serde_json::to_string(v).unwrap_or_default());
        }
    }
    out
}

pub fn validation_json(report: &ValidationReport) -> Value {
    json!({
        "valid": report.is_valid(),
        "violations": report.violations,
        "messages": strings(&report.violations),
    })
}

pub fn validation_human(report: &ValidationReport) -> String {
    if report.is_valid() {
        return "validation  ok\n".into();
    }
    let mut out = String::from("validation  FAILED\n");
    for v in &report.violations {
        let _ = writeln!(out, "  {v}");
    }
    out
}

pub fn result_human(result: &EulerResult) -> String {
    let mut out = String::new();
    for term in &result.trace {
        let _ = writeln!(out, "  {:<36}{:>8}", term.label, term.value);
    }
    let _ = writeln!(out, "e(Y) = {}", result.value);
    out
}

pub fn descriptor_human(desc: &ArrangementDescriptor) -> String {
    format!("descriptor  {desc}\n")
}

fn counts_line(c: &LedgerCounts) -> String {
    format!(
        "e(V)={} e*={} E2={} E3={} p3={} p5=({},{},{})",
        c.e_ambient, c.e_star, c.e2, c.e3, c.p3, c.p5_0, c.p5_1, c.p5_2
    )
}

pub fn run_human(run: &LedgerRun) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "initial  {} inv={}",
        counts_line(&run.initial),
        octic_core::invariant_value(&run.initial)
    );
    for (i, entry) in run.trace.iter().enumerate() {
        let _ = writeln!(out, "{:>5}  {entry}", i + 1);
    }
    let _ = writeln!(out, "terminal {}", counts_line(&run.terminal()));
    out
}

pub fn run_json(run: &LedgerRun) -> Value {
    json!({
        "initial": run.initial,
        "initial_invariant": octic_core::invariant_value(&run.initial),
        "steps": run.trace,
        "result": run.result,
    })
}
