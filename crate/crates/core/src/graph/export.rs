use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{BVector, DecoGraph, SupportStatus};
use crate::monomial::ExponentVec;
use crate::rootsystem::CartanType;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphMeta {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub rank: usize,
    pub word: Vec<usize>,
    pub i: usize,
    pub source_index: usize,
    pub support: SupportStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexJson {
    pub d: ExponentVec,
    pub b: BVector,
    pub monomial: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub src: ExponentVec,
    pub j: usize,
    pub dst: ExponentVec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub meta: GraphMeta,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
    pub source: ExponentVec,
    pub sinks: Vec<ExponentVec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
}

pub fn to_json(g: &DecoGraph) -> GraphJson {
    GraphJson {
        meta: GraphMeta {
            cartan_type: g.cartan_type,
            rank: g.cartan_type.rank(),
            word: g.word.letters().to_vec(),
            i: g.i,
            source_index: g.source_index,
            support: g.support,
        },
        vertices: g
            .vertices
            .iter()
            .map(|(d, b)| VertexJson {
                d: d.clone(),
                b: b.clone(),
                monomial: d.to_string(),
            })
            .collect(),
        edges: g
            .labeled_edges()
            .map(|(s, j, t)| EdgeJson {
                src: s.clone(),
                j,
                dst: t.clone(),
            })
            .collect(),
        source: g.source().clone(),
        sinks: g
            .sinks()
            .into_iter()
            .map(|v| g.monomial(v).clone())
            .collect(),
        violations: g.violations.clone(),
    }
}

pub fn to_dot(g: &DecoGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "digraph \"{} ({}) i={}\" {{",
        g.cartan_type, g.word, g.i
    );
    for (idx, d) in g.monomials().enumerate() {
        let _ = writeln!(out, "    v{idx} [label=\"{d}\"];");
    }
    for e in &g.edges {
        let _ = writeln!(out, "    v{} -> v{} [label=\"{}\"];", e.src, e.dst, e.label);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, BuildOptions};
    use crate::rootsystem::CartanData;
    use crate::wordtools::validate_word;

    fn g2_chain() -> DecoGraph {
        let c = CartanData::new("G2".parse().unwrap());
        let w = validate_word(&c, &[2, 1, 2, 1, 2, 1]).unwrap();
        build_graph(&c, &w, 2, BuildOptions::default()).unwrap()
    }

    #[test]
    fn dot_output() {
        let dot = to_dot(&g2_chain());
        assert!(dot.starts_with("digraph \"G2 (2,1,2,1,2,1) i=2\" {\n"));
        assert!(dot.contains("    v0 [label=\"t_1\"];\n"));
        assert!(dot.contains("    v0 -> v1 [label=\"1\"];\n"));
        assert_eq!(dot.matches("->").count(), 5);
    }

    #[test]
    fn json_shape() {
        let g = g2_chain();
        let json = serde_json::to_value(to_json(&g)).unwrap();
        assert_eq!(json["meta"]["type"], "G2");
        assert_eq!(json["meta"]["support"], "g2-proven");
        assert_eq!(json["vertices"][0]["monomial"], "t_1");
        assert_eq!(
            json["vertices"][0]["d"],
            serde_json::json!([1, 0, 0, 0, 0, 0])
        );
        assert_eq!(json["edges"][0]["j"], 1);
        assert_eq!(json["sinks"].as_array().unwrap().len(), 1);
        assert!(json.get("violations").is_none());
        let back: GraphJson = serde_json::from_value(json).unwrap();
        assert_eq!(back, to_json(&g));
    }
}
