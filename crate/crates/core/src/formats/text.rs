use std::fmt::Write;

use crate::algebra::format_rational;
use crate::darboux::{AuditReport, CurveFactor, DarbouxSystemSet, HypFactor, SpecialCurve, Status};
use crate::numeric::{AmbiguityReport, DriftReport};

fn verdict(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    }
}

pub fn render_audit(reports: &[AuditReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let n = r.family.family.degree().map(|n| n.to_string()).unwrap_or_else(|| "-".into());
        let _ = write!(
            out,
            "{} n={} beta={} gamma={}: literal invariance {}",
            r.family.family.name(),
            n,
            format_rational(&r.family.beta),
            format_rational(&r.family.gamma),
            verdict(r.literal_invariance)
        );
        if r.coefficient_diffs.is_empty() {
            out.push_str(", coefficients agree\n");
            continue;
        }
        out.push('\n');
        for (name, d) in &r.coefficient_diffs {
            let _ = writeln!(
                out,
                "  {name}: derived {} literal {}",
                format_rational(&d.canonical),
                format_rational(&d.literal)
            );
        }
        if !r.literal_residual.is_zero() {
            let _ = writeln!(out, "  residual: {}", r.literal_residual);
        }
    }
    out
}

fn render_special(s: &SpecialCurve) -> String {
    let parts: Vec<String> = s
        .terms
        .iter()
        .map(|t| match &t.factor {
            HypFactor::One => format!("({})", t.coeff),
            HypFactor::Value(h) => format!("({}) F({}, {}; {}; x)", t.coeff, h.a, h.b, h.c),
            HypFactor::Derivative(h) => format!("({}) F'({}, {}; {}; x)", t.coeff, h.a, h.b, h.c),
        })
        .collect();
    parts.join(" + ")
}

pub fn render_darboux_set(set: &DarbouxSystemSet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "x' = {}", set.field.p);
    let _ = writeln!(out, "y' = {}", set.field.q);
    for ((label, curve), k) in set.labels.iter().zip(&set.curves).zip(&set.cofactors) {
        let g = match curve {
            CurveFactor::Polynomial(g) => g.to_string(),
            CurveFactor::Special(s) => render_special(s),
        };
        let _ = writeln!(out, "{label} = {g}");
        let _ = writeln!(out, "  K = {k}");
    }
    let exps: Vec<String> = set.exponents.iter().map(format_rational).collect();
    let _ = writeln!(out, "exponents ({:?}): [{}]", set.mode, exps.join(", "));
    let _ = writeln!(out, "relation holds: {}", set.relation_holds());
    out
}

pub fn render_drift(r: &DriftReport) -> String {
    let mut out = String::new();
    let window = r.window.map(|w| format!("|y| <= {w}")).unwrap_or_else(|| "full run".into());
    let _ = writeln!(
        out,
        "{}: h={} T={} window {} tol={:e}: {} ({} seeds measured)",
        r.label,
        r.h,
        r.horizon,
        window,
        r.tolerance,
        verdict(r.verdict),
        r.evaluated
    );
    for s in &r.seeds {
        let detail = match (&s.drift, &s.skipped) {
            (Some(d), _) => format!("drift {d:.3e} to t={:.3}", s.t_measured),
            (None, Some(reason)) => format!("skipped: {reason}"),
            (None, None) => "skipped".into(),
        };
        let _ = writeln!(out, "  ({}, {}) {:?}: {}", s.x0, s.y0, s.termination, detail);
    }
    out
}

pub fn render_ambiguity(r: &AmbiguityReport) -> String {
    let mut out = format!(
        "a={} b={} c={} beta={} gamma={}\n",
        format_rational(&r.a),
        format_rational(&r.b),
        format_rational(&r.c),
        format_rational(&r.beta),
        format_rational(&r.gamma)
    );
    out.push_str(&render_drift(&r.control));
    for o in &r.readings {
        out.push_str(&render_drift(&o.report));
    }
    let _ = writeln!(out, "result: {}", r.summary());
    out
}
