//! Deterministic JSON and text renderings of check reports.
//!
//! Elapsed time is never part of [`check_json`] or [`diagram_json`];
//! callers attach it separately so that repeated runs compare equal.

use serde_json::{json, Value};

use crate::exact::rational::to_canonical;
use crate::functors::DiagramReport;
use crate::structures::{CheckReport, Violation};

/// Violations printed per report in text mode.
pub const TEXT_LIMIT: usize = 20;

fn violation_json(v: &Violation) -> Value {
    json!({
        "identity": v.identity,
        "tuple": v.tuple,
        "residual": v.residual.iter().map(to_canonical).collect::<Vec<_>>(),
    })
}

/// Deterministic section of a check report.
pub fn check_json(r: &CheckReport) -> Value {
    json!({
        "subject": r.subject,
        "class": r.class.name(),
        "pass": r.pass,
        "identities": r.identities,
        "tuples_checked": r.tuples_checked,
        "violation_count": r.violations.len(),
        "violations": r.violations.iter().map(violation_json).collect::<Vec<_>>(),
    })
}

/// Deterministic section of a diagram report.
pub fn diagram_json(d: &DiagramReport) -> Value {
    json!({
        "pass": d.pass(),
        "paths_equal": d.paths_equal,
        "nodes": d.nodes.iter().map(|(k, v)| (k.clone(), check_json(v))).collect::<serde_json::Map<_, _>>(),
        "edges": d.edges.iter().map(|(l, p)| json!({"label": l, "pass": p})).collect::<Vec<_>>(),
    })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Human-readable report; at most [`TEXT_LIMIT`] violations are listed.
pub fn check_text(r: &CheckReport) -> String {
    let mut out = format!(
        "{} {} as {}: {} tuples, {} violations\n",
        verdict(r.pass),
        r.subject,
        r.class,
        r.tuples_checked,
        r.violations.len()
    );
    for id in &r.identities {
        let n = r.violations_of(id).count();
        out.push_str(&format!("  {id:<14} {}\n", if n == 0 { "ok".to_string() } else { format!("{n} violations") }));
    }
    for v in r.violations.iter().take(TEXT_LIMIT) {
        let res: Vec<String> = v.residual.iter().map(to_canonical).collect();
        out.push_str(&format!("  {} at {:?}: [{}]\n", v.identity, v.tuple, res.join(", ")));
    }
    if r.violations.len() > TEXT_LIMIT {
        out.push_str(&format!("  ... {} more\n", r.violations.len() - TEXT_LIMIT));
    }
    out
}

pub fn diagram_text(d: &DiagramReport) -> String {
    let mut out = format!("{} diagram, paths equal: {}\n", verdict(d.pass()), d.paths_equal);
    for (label, r) in &d.nodes {
        out.push_str(&format!(
            "  node {label:<16} {} ({} tuples, {} violations)\n",
            verdict(r.pass),
            r.tuples_checked,
            r.violations.len()
        ));
    }
    for (label, pass) in &d.edges {
        out.push_str(&format!("  edge {label}: {}\n", verdict(*pass)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{check, CheckOptions, StructureClass};

    #[test]
    fn json_has_no_timing_and_is_stable() {
        let o = crate::fixtures::octonions();
        let a = check(&o, StructureClass::HomAssociative, CheckOptions::default()).unwrap();
        let b = check(&o, StructureClass::HomAssociative, CheckOptions::default()).unwrap();
        let (ja, jb) = (check_json(&a).to_string(), check_json(&b).to_string());
        assert_eq!(ja, jb);
        assert!(!ja.contains("elapsed"));
        assert!(check_text(&a).contains("more"));
    }
}
