//! Independent computations of the same half-potential terms, used to
//! validate the graph construction.

pub mod laurent;
pub mod minor;
pub mod trails;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Result;
use crate::graph::{b_from_d, build_graph, BuildOptions, CheckReport, DecoGraph};
use crate::monomial::ExponentVec;
use crate::rootsystem::CartanData;
use crate::wordtools::ReducedWord;

pub use laurent::LaurentPoly;
pub use minor::type_a_minor_poly;
pub use trails::{minuscule_trail_monomials, minuscule_trails, MinusculeWeightDiagram, Trail};

/// Trails whose `c`-sequence differs from `b(d)`, as human-readable lines.
pub fn crosscheck_b_equals_c(cd: &CartanData, w: &ReducedWord, i: usize) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for trail in minuscule_trails(cd, w, i)? {
        let b = b_from_d(cd, w, i, &trail.d);
        if b.0 != trail.c {
            bad.push(format!("{}: b = {:?}, c = {:?}", trail.d, b.0, trail.c));
        }
    }
    Ok(bad)
}

/// For a minuscule index: the fast-path rule builds the same graph, and the
/// vertex set equals the trail set with `b = c` on every trail.
pub fn minuscule_checks(cd: &CartanData, g: &DecoGraph) -> Result<CheckReport> {
    let (w, i) = (&g.word, g.i);
    let mut report = CheckReport::default();

    let fast = build_graph(
        cd,
        w,
        i,
        BuildOptions {
            minuscule_fast_path: true,
            ..BuildOptions::default()
        },
    )?;
    let mut problems = Vec::new();
    if fast.vertices != g.vertices {
        problems.push(format!(
            "vertex sets differ ({} vs {})",
            fast.len(),
            g.len()
        ));
    }
    let edges = |h: &DecoGraph| -> BTreeSet<(ExponentVec, usize, ExponentVec)> {
        h.labeled_edges()
            .map(|(s, j, d)| (s.clone(), j, d.clone()))
            .collect()
    };
    if edges(&fast) != edges(g) {
        problems.push("edge sets differ".to_string());
    }
    report.record("fast_path_equivalence", problems);

    let trail_set = minuscule_trail_monomials(cd, w, i)?;
    let graph_set: BTreeSet<ExponentVec> = g.monomials().cloned().collect();
    let problems = trail_set
        .symmetric_difference(&graph_set)
        .map(|d| {
            let side = if graph_set.contains(d) {
                "graph"
            } else {
                "trails"
            };
            format!("{d} only in {side}")
        })
        .collect();
    report.record("trail_equivalence", problems);
    report.record("b_equals_c", crosscheck_b_equals_c(cd, w, i)?);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientRow {
    pub monomial: String,
    pub d: ExponentVec,
    pub in_graph: bool,
    pub trails: usize,
    /// Decimal string; the minor may have coefficients beyond `i64`.
    pub minor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleInput {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub word: Vec<usize>,
    pub i: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub input: OracleInput,
    pub status: Status,
    /// Present in an oracle, absent from the graph.
    pub missing_in_graph: Vec<String>,
    /// Present in the graph, absent from an oracle.
    pub extra_in_graph: Vec<String>,
    /// `b(d) != c` for some trail.
    pub b_c_mismatches: Vec<String>,
    pub coefficient_table: Vec<CoefficientRow>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Compares graph vertices, minuscule trails and the type-A minor support.
/// Requires type A (every index is minuscule there).
pub fn three_way(cd: &CartanData, w: &ReducedWord, i: usize) -> Result<OracleReport> {
    let graph = build_graph(cd, w, i, BuildOptions::default())?;
    let graph_set: BTreeSet<ExponentVec> = graph.monomials().cloned().collect();
    let trails = minuscule_trails(cd, w, i)?;
    let mut trail_count: BTreeMap<ExponentVec, usize> = BTreeMap::new();
    for t in &trails {
        *trail_count.entry(t.d.clone()).or_default() += 1;
    }
    let poly = type_a_minor_poly(cd, w, i)?;
    let minor_set: BTreeSet<ExponentVec> = poly.support().cloned().collect();
    let trail_set: BTreeSet<ExponentVec> = trail_count.keys().cloned().collect();

    let oracle_union: BTreeSet<_> = trail_set.union(&minor_set).cloned().collect();
    let oracle_common: BTreeSet<_> = trail_set.intersection(&minor_set).cloned().collect();
    let missing: Vec<String> = oracle_union
        .difference(&graph_set)
        .map(ToString::to_string)
        .collect();
    let extra: Vec<String> = graph_set
        .difference(&oracle_common)
        .map(ToString::to_string)
        .collect();
    let b_c = crosscheck_b_equals_c(cd, w, i)?;

    let all: BTreeSet<_> = graph_set.union(&oracle_union).cloned().collect();
    let coefficient_table = all
        .into_iter()
        .map(|d| CoefficientRow {
            monomial: d.to_string(),
            in_graph: graph_set.contains(&d),
            trails: trail_count.get(&d).copied().unwrap_or(0),
            minor: poly.coeff(&d).to_string(),
            d,
        })
        .collect();

    let ok = missing.is_empty() && extra.is_empty() && b_c.is_empty();
    Ok(OracleReport {
        input: OracleInput {
            cartan_type: cd.cartan_type().to_string(),
            word: w.letters().to_vec(),
            i,
        },
        status: if ok { Status::Pass } else { Status::Fail },
        missing_in_graph: missing,
        extra_in_graph: extra,
        b_c_mismatches: b_c,
        coefficient_table,
    })
}
