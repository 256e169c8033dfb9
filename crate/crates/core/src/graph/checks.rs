use serde::Serialize;

use super::{b_from_d, DecoGraph};
use crate::monomial::{a_monomial, lowest_term, ExponentVec};
use crate::rootsystem::CartanData;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn record(&mut self, name: &'static str, problems: Vec<String>) {
        let passed = problems.is_empty();
        let detail = if passed {
            "ok".to_string()
        } else {
            let shown: Vec<_> = problems.iter().take(5).cloned().collect();
            format!("{} violation(s): {}", problems.len(), shown.join("; "))
        };
        self.checks.push(CheckOutcome {
            name,
            passed,
            detail,
        });
    }
}

/// Structural invariants every decoration graph on a supported input
/// satisfies.
pub fn check_graph(cd: &CartanData, g: &DecoGraph) -> CheckReport {
    let w = &g.word;
    let n = w.len();
    let mut report = CheckReport::default();

    let source = ExponentVec::unit(n, g.source_index);
    let nonneg: Vec<&ExponentVec> = g.monomials().filter(|d| d.is_nonnegative()).collect();
    let mut problems = Vec::new();
    if nonneg != [&source] {
        problems.push(format!(
            "non-negative vertices {:?}, expected only {source}",
            nonneg.iter().map(|d| d.to_string()).collect::<Vec<_>>()
        ));
    }
    if g.index_of(&source) != Some(0) {
        problems.push(format!("{source} is not the first vertex"));
    }
    if g.edges.iter().any(|e| e.dst == 0) {
        problems.push("source has an incoming edge".to_string());
    }
    report.record("unique_source", problems);

    let low = lowest_term(cd, w, g.i);
    let problems = match g.index_of(&low) {
        None => vec![format!("{low} is not a vertex")],
        Some(idx) if !g.sinks().contains(&idx) => vec![format!("{low} is not a sink")],
        Some(_) => vec![],
    };
    report.record("lowest_term_sink", problems);

    let mut division = Vec::new();
    let mut update = Vec::new();
    let mut level = Vec::new();
    let mut gate = Vec::new();
    for e in &g.edges {
        let src = g.vertex(e.src);
        let dst = g.vertex(e.dst);
        let jp = w.j_plus(e.label);
        let tag = || format!("{} -{}-> {}", src.d, e.label, dst.d);
        match a_monomial(cd, w, e.label).and_then(|a| src.d.div(&a)) {
            Ok(expected) if expected == dst.d => {}
            _ => division.push(tag()),
        }
        let mut b = src.b.clone();
        b.0[e.label - 1] += 1;
        b.0[jp - 1] -= 1;
        if b != dst.b {
            update.push(tag());
        }
        let expected_level = src.b.level() + e.label as i64 - jp as i64;
        if dst.b.level() != expected_level || dst.b.level() >= src.b.level() {
            level.push(tag());
        }
        if src.b.get(jp) <= 0 {
            gate.push(tag());
        }
    }
    report.record("edge_division", division);
    report.record("b_update", update);
    report.record("level_decreasing", level);
    report.record("gate_soundness", gate);

    let mut consistency = Vec::new();
    let mut negative = Vec::new();
    for (d, b) in &g.vertices {
        if b_from_d(cd, w, g.i, d) != *b {
            consistency.push(d.to_string());
        }
        if b.0.iter().any(|&x| x < 0) {
            negative.push(format!("{d}: {:?}", b.0));
        }
    }
    report.record("b_consistency", consistency);
    report.record("b_nonnegative", negative);

    report
}
