#![allow(dead_code)]

use std::collections::BTreeSet;

use decograph::{build_graph, validate_word, BuildOptions, CartanData, DecoGraph, ExponentVec};

/// `"t3 t5^2 / t6"` as an exponent vector of length `n`.
pub fn mono(n: usize, s: &str) -> ExponentVec {
    let mut d = vec![0i64; n];
    let (num, den) = s.split_once('/').unwrap_or((s, ""));
    for (part, sign) in [(num, 1), (den, -1)] {
        for factor in part.split_whitespace() {
            let factor = factor.trim_start_matches('t');
            let (l, e) = factor.split_once('^').unwrap_or((factor, "1"));
            let l: usize = l.parse().expect("variable index");
            let e: i64 = e.parse().expect("exponent");
            d[l - 1] += sign * e;
        }
    }
    ExponentVec(d)
}

pub fn monos(n: usize, list: &[&str]) -> BTreeSet<ExponentVec> {
    list.iter().map(|s| mono(n, s)).collect()
}

pub fn graph(ty: &str, word: &[usize], i: usize) -> (CartanData, DecoGraph) {
    let cd = CartanData::new(ty.parse().unwrap());
    let w = validate_word(&cd, word).unwrap();
    let g = build_graph(&cd, &w, i, BuildOptions::default()).unwrap();
    (cd, g)
}

pub fn vertex_set(g: &DecoGraph) -> BTreeSet<ExponentVec> {
    g.monomials().cloned().collect()
}

pub fn edge_set(g: &DecoGraph) -> BTreeSet<(ExponentVec, usize, ExponentVec)> {
    g.labeled_edges()
        .map(|(s, j, d)| (s.clone(), j, d.clone()))
        .collect()
}

pub fn labeled(
    n: usize,
    list: &[(&str, usize, &str)],
) -> BTreeSet<(ExponentVec, usize, ExponentVec)> {
    list.iter()
        .map(|&(s, j, d)| (mono(n, s), j, mono(n, d)))
        .collect()
}

pub const C3_WORD: [usize; 9] = [2, 3, 2, 1, 2, 3, 2, 3, 1];
pub const D4_WORD: [usize; 12] = [2, 1, 3, 2, 4, 2, 3, 2, 1, 2, 3, 4];
pub const G2_WORD_1: [usize; 6] = [1, 2, 1, 2, 1, 2];
pub const G2_WORD_2: [usize; 6] = [2, 1, 2, 1, 2, 1];

pub const C3_VERTICES: [(&str, [i64; 9]); 12] = [
    ("t1", [0, 0, 1, 1, 0, 1, 2, 1, 1]),
    ("t2 / t3", [1, 0, 0, 1, 0, 1, 2, 1, 1]),
    ("t3 t5^2 / t6", [1, 1, 0, 1, 0, 0, 2, 1, 1]),
    ("t3 t5 / t7", [1, 1, 0, 1, 1, 0, 1, 1, 1]),
    ("t4 / t7", [1, 1, 1, 1, 0, 0, 1, 1, 1]),
    ("t3 t6 / t7^2", [1, 1, 0, 1, 2, 0, 0, 1, 1]),
    ("t5 / t9", [1, 1, 1, 2, 0, 0, 1, 1, 0]),
    ("t6 / t7 t9", [1, 1, 1, 2, 1, 0, 0, 1, 0]),
    ("t7 / t8 t9", [1, 1, 1, 2, 1, 1, 0, 0, 0]),
    ("t3 / t8", [1, 1, 0, 1, 2, 1, 0, 0, 1]),
    ("t4 t6 / t5 t7^2", [1, 1, 1, 1, 1, 0, 0, 1, 1]),
    ("t4 / t5 t8", [1, 1, 1, 1, 1, 1, 0, 0, 1]),
];

pub const C3_EDGES: [(&str, usize, &str); 14] = [
    ("t1", 1, "t2 / t3"),
    ("t2 / t3", 2, "t3 t5^2 / t6"),
    ("t3 t5^2 / t6", 5, "t3 t5 / t7"),
    ("t3 t5 / t7", 3, "t4 / t7"),
    ("t3 t5 / t7", 5, "t3 t6 / t7^2"),
    ("t4 / t7", 4, "t5 / t9"),
    ("t3 t6 / t7^2", 3, "t4 t6 / t5 t7^2"),
    ("t3 t6 / t7^2", 6, "t3 / t8"),
    ("t4 t6 / t5 t7^2", 6, "t4 / t5 t8"),
    ("t4 t6 / t5 t7^2", 4, "t6 / t7 t9"),
    ("t4 / t5 t8", 4, "t7 / t8 t9"),
    ("t3 / t8", 3, "t4 / t5 t8"),
    ("t5 / t9", 5, "t6 / t7 t9"),
    ("t6 / t7 t9", 6, "t7 / t8 t9"),
];

pub const D4_VERTICES: [&str; 21] = [
    "t1",
    "t2 t3 / t4",
    "t2 t6 / t7",
    "t3 t6 t8 / t9",
    "t2 / t8",
    "t4 t6^2 t8 / t7 t9",
    "t3 t6 / t10",
    "t4 t6 / t9",
    "t4 t6^2 / t7 t10",
    "t3 t7 / t8 t10",
    "t4 t6 / t8 t10",
    "t3 / t11",
    "t5 / t8 t10",
    "t4 t7 / t8^2 t10",
    "t4 t6 / t7 t11",
    "t6 / t12",
    "t5 t7 / t6 t8^2 t10",
    "t4 / t8 t11",
    "t10 / t11 t12",
    "t7 / t8 t12",
    "t5 / t6 t8 t11",
];

pub const D4_EDGES: [(&str, usize, &str); 27] = [
    ("t1", 1, "t2 t3 / t4"),
    ("t2 t3 / t4", 3, "t2 t6 / t7"),
    ("t2 t3 / t4", 2, "t3 t6 t8 / t9"),
    ("t2 t6 / t7", 6, "t2 / t8"),
    ("t2 t6 / t7", 2, "t4 t6^2 t8 / t7 t9"),
    ("t3 t6 t8 / t9", 3, "t4 t6^2 t8 / t7 t9"),
    ("t3 t6 t8 / t9", 8, "t3 t6 / t10"),
    ("t2 / t8", 2, "t4 t6 / t9"),
    ("t4 t6^2 t8 / t7 t9", 6, "t4 t6 / t9"),
    ("t4 t6^2 t8 / t7 t9", 8, "t4 t6^2 / t7 t10"),
    ("t3 t6 / t10", 3, "t4 t6^2 / t7 t10"),
    ("t3 t6 / t10", 6, "t3 t7 / t8 t10"),
    ("t4 t6^2 / t7 t10", 6, "t4 t6 / t8 t10"),
    ("t3 t7 / t8 t10", 7, "t3 / t11"),
    ("t4 t6 / t8 t10", 4, "t5 / t8 t10"),
    ("t4 t6 / t8 t10", 6, "t4 t7 / t8^2 t10"),
    ("t3 / t11", 3, "t4 t6 / t7 t11"),
    ("t5 / t8 t10", 5, "t6 / t12"),
    ("t4 t7 / t8^2 t10", 4, "t5 t7 / t6 t8^2 t10"),
    ("t4 t7 / t8^2 t10", 7, "t4 / t8 t11"),
    ("t4 t6 / t7 t11", 6, "t4 / t8 t11"),
    ("t6 / t12", 6, "t7 / t8 t12"),
    ("t5 t7 / t6 t8^2 t10", 5, "t7 / t8 t12"),
    ("t5 t7 / t6 t8^2 t10", 7, "t5 / t6 t8 t11"),
    ("t4 / t8 t11", 4, "t5 / t6 t8 t11"),
    ("t7 / t8 t12", 7, "t10 / t11 t12"),
    ("t5 / t6 t8 t11", 5, "t10 / t11 t12"),
];

/// `(d, b)` for word `(1,2,1,2,1,2)`, `i = 1`.
pub const G2_VERTICES: [([i64; 6], [i64; 6]); 13] = [
    ([1, 0, 0, 0, 0, 0], [0, 0, 1, 3, 2, 3]),
    ([0, 3, -1, 0, 0, 0], [1, 0, 0, 3, 2, 3]),
    ([0, 2, 0, -1, 0, 0], [1, 1, 0, 2, 2, 3]),
    ([0, 1, 1, -2, 0, 0], [1, 2, 0, 1, 2, 3]),
    ([0, 0, 2, -3, 0, 0], [1, 3, 0, 0, 2, 3]),
    ([0, 1, 0, 1, -1, 0], [1, 2, 1, 1, 1, 3]),
    ([0, 0, 1, 0, -1, 0], [1, 3, 1, 0, 1, 3]),
    ([0, 1, 0, 0, 0, -1], [1, 2, 1, 2, 1, 2]),
    ([0, 0, 0, 3, -2, 0], [1, 3, 2, 0, 0, 3]),
    ([0, 0, 1, -1, 0, -1], [1, 3, 1, 1, 1, 2]),
    ([0, 0, 0, 2, -1, -1], [1, 3, 2, 1, 0, 2]),
    ([0, 0, 0, 1, 0, -2], [1, 3, 2, 2, 0, 1]),
    ([0, 0, 0, 0, 1, -3], [1, 3, 2, 2, 1, 0]),
];

/// Unlabeled edges of the same graph.
pub const G2_EDGES: [(&str, &str); 13] = [
    ("t1", "t2^3 / t3"),
    ("t2^3 / t3", "t2^2 / t4"),
    ("t2^2 / t4", "t2 t3 / t4^2"),
    ("t2 t3 / t4^2", "t3^2 / t4^3"),
    ("t2 t3 / t4^2", "t2 t4 / t5"),
    ("t3^2 / t4^3", "t3 / t5"),
    ("t2 t4 / t5", "t2 / t6"),
    ("t3 / t5", "t4^3 / t5^2"),
    ("t2 / t6", "t3 / t4 t6"),
    ("t4^3 / t5^2", "t4^2 / t5 t6"),
    ("t3 / t4 t6", "t4^2 / t5 t6"),
    ("t4^2 / t5 t6", "t4 / t6^2"),
    ("t4 / t6^2", "t5 / t6^3"),
];

pub const G2_CHAIN: [&str; 6] = [
    "t1",
    "t2 / t3",
    "t3^2 / t4",
    "t3 / t5",
    "t4 / t5^2",
    "t5 / t6",
];
