//! Tropicalization of the half-potential into a polyhedral cone.
//!
//! Every summand `Delta_{w0 Lambda_i, s_i Lambda_i}` is a positive Laurent
//! polynomial, so its tropicalization is `min` over the linear forms of its
//! monomials and `min >= 0` unfolds into one inequality per monomial. The
//! integer points of the cone form a crystal isomorphic to `B(infinity)` of
//! the Langlands dual algebra, which gives the census its oracle.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_graph, BuildOptions};
use crate::monomial::ExponentVec;
use crate::rootsystem::{CartanData, CartanType};
use crate::wordtools::ReducedWord;

/// `sum_l coeffs_l z_l >= 0`, contributed by index `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeRow {
    pub i: usize,
    pub coeffs: ExponentVec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSystem {
    pub cartan_type: CartanType,
    pub word: ReducedWord,
    pub rows: Vec<ConeRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeJson {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub rank: usize,
    pub word: Vec<usize>,
    pub rows: Vec<ConeRow>,
}

/// Monomials of each summand, in graph construction order.
pub fn half_potential_monomials(
    cd: &CartanData,
    w: &ReducedWord,
    opts: BuildOptions,
) -> Result<BTreeMap<usize, Vec<ExponentVec>>> {
    (1..=cd.rank())
        .map(|i| {
            let g = build_graph(cd, w, i, opts)?;
            Ok((i, g.monomials().cloned().collect()))
        })
        .collect()
}

pub fn string_cone(cd: &CartanData, w: &ReducedWord, opts: BuildOptions) -> Result<ConeSystem> {
    let mut seen = HashSet::new();
    let mut rows = Vec::new();
    for (i, monomials) in half_potential_monomials(cd, w, opts)? {
        for d in monomials {
            if seen.insert(d.clone()) {
                rows.push(ConeRow { i, coeffs: d });
            }
        }
    }
    Ok(ConeSystem {
        cartan_type: cd.cartan_type(),
        word: w.clone(),
        rows,
    })
}

impl ConeSystem {
    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn dim(&self) -> usize {
        self.word.len()
    }

    pub fn contains(&self, z: &[i64]) -> bool {
        self.rows.iter().all(|r| r.coeffs.eval_linear(z) >= 0)
    }

    pub fn to_json(&self) -> ConeJson {
        ConeJson {
            cartan_type: self.cartan_type,
            rank: self.rank(),
            word: self.word.letters().to_vec(),
            rows: self.rows.clone(),
        }
    }
}

/// Lattice points `z` of the cone whose letter sums
/// `sum_{l : i_l = t} z_l` equal `mvec[t-1]` for every `t`.
///
/// Coordinates range over `[-S, S]` with `S = sum(mvec)`; the last position
/// of each letter is solved from its letter sum, and each row is tested as
/// soon as its support is assigned.
pub fn weight_census(c: &ConeSystem, mvec: &[u64]) -> u64 {
    let w = &c.word;
    let n_pos = w.len();
    assert_eq!(mvec.len(), c.rank(), "weight has the wrong rank");
    let bound: i64 = mvec.iter().sum::<u64>() as i64;

    // rows grouped by the last position they involve
    let mut rows_at: Vec<Vec<&ExponentVec>> = vec![Vec::new(); n_pos];
    for r in &c.rows {
        if let Some(last) = r.coeffs.0.iter().rposition(|&x| x != 0) {
            rows_at[last].push(&r.coeffs);
        }
    }
    // positions of each letter still unassigned after position p (exclusive)
    let mut remaining_after = vec![vec![0i64; c.rank() + 1]; n_pos];
    let mut count = vec![0i64; c.rank() + 1];
    for p in (0..n_pos).rev() {
        remaining_after[p] = count.clone();
        count[w.letters()[p]] += 1;
    }

    struct Search<'a> {
        letters: &'a [usize],
        rows_at: Vec<Vec<&'a ExponentVec>>,
        remaining_after: Vec<Vec<i64>>,
        target: Vec<i64>,
        bound: i64,
        z: Vec<i64>,
        partial: Vec<i64>,
        found: u64,
    }

    impl Search<'_> {
        fn go(&mut self, p: usize) {
            if p == self.letters.len() {
                self.found += 1;
                return;
            }
            let t = self.letters[p];
            let rest = self.remaining_after[p][t];
            let (lo, hi) = if rest == 0 {
                let v = self.target[t] - self.partial[t];
                (v, v)
            } else {
                (-self.bound, self.bound)
            };
            for v in lo.max(-self.bound)..=hi.min(self.bound) {
                let left = self.target[t] - self.partial[t] - v;
                if left.abs() > rest * self.bound {
                    continue;
                }
                self.z[p] = v;
                if self.rows_at[p].iter().all(|r| r.eval_linear(&self.z) >= 0) {
                    self.partial[t] += v;
                    self.go(p + 1);
                    self.partial[t] -= v;
                }
            }
            self.z[p] = 0;
        }
    }

    let mut target = vec![0i64];
    target.extend(mvec.iter().map(|&m| m as i64));
    let mut search = Search {
        letters: w.letters(),
        rows_at,
        remaining_after,
        target,
        bound,
        z: vec![0; n_pos],
        partial: vec![0; c.rank() + 1],
        found: 0,
    };
    search.go(0);
    search.found
}

/// Number of ways to write `sum_t mvec[t-1] alpha_t` as a multiset of
/// positive roots of `cd`.
pub fn kostant_partition_count(cd: &CartanData, mvec: &[u64]) -> u64 {
    let dims: Vec<usize> = mvec.iter().map(|&m| m as usize + 1).collect();
    let size: usize = dims.iter().product();
    let index = |v: &[i64]| -> Option<usize> {
        let mut idx = 0;
        for (t, &x) in v.iter().enumerate().rev() {
            if x < 0 || x as usize >= dims[t] {
                return None;
            }
            idx = idx * dims[t] + x as usize;
        }
        Some(idx)
    };
    let unindex = |mut idx: usize| -> Vec<i64> {
        dims.iter()
            .map(|&d| {
                let x = idx % d;
                idx /= d;
                x as i64
            })
            .collect()
    };
    let mut ways = vec![0u64; size];
    ways[0] = 1;
    for root in cd.positive_roots() {
        for idx in 0..size {
            let v = unindex(idx);
            let prev: Vec<i64> = v.iter().zip(&root.0).map(|(a, b)| a - b).collect();
            if let Some(p) = index(&prev) {
                ways[idx] += ways[p];
            }
        }
    }
    ways[size - 1]
}

/// Weight multiplicity of `B(infinity)` for the Langlands dual algebra.
pub fn dual_kostant_count(cd: &CartanData, mvec: &[u64]) -> u64 {
    kostant_partition_count(&cd.transposed(), mvec)
}

/// All `mvec` with non-negative entries summing to at most `bound`.
pub fn weights_up_to(rank: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; rank];
    fn rec(t: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if t == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[t] = v;
            rec(t + 1, left - v, cur, out);
        }
        cur[t] = 0;
    }
    rec(0, bound, &mut cur, &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeFormat {
    Text,
    Json,
    Latex,
}

impl FromStr for ConeFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(ConeFormat::Text),
            "json" => Ok(ConeFormat::Json),
            "latex" => Ok(ConeFormat::Latex),
            _ => Err(Error::ParseFormat(s.to_string())),
        }
    }
}

fn linear_form(coeffs: &ExponentVec, latex: bool) -> String {
    let mut out = String::new();
    for (l, &c) in coeffs.0.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let var = if latex {
            format!("z_{{{}}}", l + 1)
        } else {
            format!("z_{}", l + 1)
        };
        let mag = c.unsigned_abs();
        let term = match (mag, latex) {
            (1, _) => var,
            (m, true) => format!("{m}{var}"),
            (m, false) => format!("{m}*{var}"),
        };
        let sep = if latex { "" } else { " " };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(sep);
            out.push(if c < 0 { '-' } else { '+' });
            out.push_str(sep);
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render(c: &ConeSystem, format: ConeFormat) -> String {
    match format {
        ConeFormat::Text => {
            let mut out = String::new();
            for r in &c.rows {
                let _ = writeln!(out, "{} >= 0", linear_form(&r.coeffs, false));
            }
            out
        }
        ConeFormat::Json => {
            serde_json::to_string_pretty(&c.to_json()).expect("cone json serializes") + "\n"
        }
        ConeFormat::Latex => {
            let lines: Vec<String> = c
                .rows
                .iter()
                .map(|r| format!("{} \\geq 0", linear_form(&r.coeffs, true)))
                .collect();
            format!(
                "\\begin{{array}}{{l}}\n{}\n\\end{{array}}\n",
                lines.join(",\\\\\n")
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordtools::validate_word;

    fn cone(ty: &str, word: &[usize]) -> ConeSystem {
        let c = CartanData::new(ty.parse().unwrap());
        let w = validate_word(&c, word).unwrap();
        string_cone(&c, &w, BuildOptions::default()).unwrap()
    }

    fn c3() -> ConeSystem {
        cone("C3", &[2, 3, 2, 1, 2, 3, 2, 3, 1])
    }

    #[test]
    fn membership() {
        let c = c3();
        assert!(c.contains(&[0; 9]));
        let mut e1 = [0; 9];
        e1[0] = 1;
        assert!(c.contains(&e1));
        let mut neg9 = [0; 9];
        neg9[8] = -1;
        assert!(!c.contains(&neg9));
    }

    #[test]
    fn singleton_summands_give_coordinate_rows() {
        let c = c3();
        let from_1: Vec<_> = c.rows.iter().filter(|r| r.i == 1).collect();
        assert_eq!(from_1.len(), 1);
        assert_eq!(from_1[0].coeffs, ExponentVec::unit(9, 9));
        let a1 = cone("A1", &[1]);
        assert_eq!(render(&a1, ConeFormat::Text), "z_1 >= 0\n");
    }

    #[test]
    fn renderers() {
        let c = c3();
        let text = render(&c, ConeFormat::Text);
        assert!(text.starts_with("z_9 >= 0\nz_1 >= 0\nz_2 - z_3 >= 0\nz_3 + 2*z_5 - z_6 >= 0\n"));
        assert_eq!(text.lines().count(), 14);
        let latex = render(&c, ConeFormat::Latex);
        assert!(latex.contains("z_{3}+2z_{5}-z_{6} \\geq 0"));
        let json: serde_json::Value = serde_json::from_str(&render(&c, ConeFormat::Json)).unwrap();
        assert_eq!(json["type"], "C3");
        assert_eq!(json["rank"], 3);
        assert_eq!(json["rows"].as_array().unwrap().len(), 14);
        assert_eq!(
            json["rows"][2]["coeffs"],
            serde_json::json!([0, 1, -1, 0, 0, 0, 0, 0, 0])
        );
        assert_eq!(
            linear_form(&ExponentVec(vec![-2, 0, 1]), false),
            "-2*z_1 + z_3"
        );
    }

    #[test]
    fn census_of_zero_weight() {
        assert_eq!(weight_census(&c3(), &[0, 0, 0]), 1);
    }

    /// Brute force over the full box, no pruning.
    fn census_by_box(c: &ConeSystem, mvec: &[u64]) -> u64 {
        let s: i64 = mvec.iter().sum::<u64>() as i64;
        let n = c.dim();
        let side = (2 * s + 1) as usize;
        let mut found = 0;
        for mut code in 0..side.pow(n as u32) {
            let z: Vec<i64> = (0..n)
                .map(|_| {
                    let v = (code % side) as i64 - s;
                    code /= side;
                    v
                })
                .collect();
            let mut sums = vec![0i64; c.rank()];
            for (l, &letter) in c.word.letters().iter().enumerate() {
                sums[letter - 1] += z[l];
            }
            if sums.iter().zip(mvec).all(|(&a, &m)| a == m as i64) && c.contains(&z) {
                found += 1;
            }
        }
        found
    }

    #[test]
    fn pruned_census_matches_box_enumeration() {
        let c = cone("A2", &[1, 2, 1]);
        for m in weights_up_to(2, 3) {
            assert_eq!(weight_census(&c, &m), census_by_box(&c, &m), "{m:?}");
        }
        let c = cone("B2", &[2, 1, 2, 1]);
        for m in weights_up_to(2, 2) {
            assert_eq!(weight_census(&c, &m), census_by_box(&c, &m), "{m:?}");
        }
    }

    #[test]
    fn kostant_counts() {
        let a2 = CartanData::new("A2".parse().unwrap());
        assert_eq!(kostant_partition_count(&a2, &[0, 0]), 1);
        assert_eq!(kostant_partition_count(&a2, &[1, 1]), 2);
        assert_eq!(kostant_partition_count(&a2, &[2, 2]), 3);
        // B2 with alpha_2 short: positive roots a1, a2, a1+a2, a1+2a2
        let b2 = CartanData::new("B2".parse().unwrap());
        assert_eq!(kostant_partition_count(&b2, &[1, 2]), 3);
        // dual C2: a1, a2, a1+a2, 2a1+a2
        assert_eq!(dual_kostant_count(&b2, &[1, 2]), 2);
    }

    #[test]
    fn weight_grid() {
        assert_eq!(weights_up_to(3, 4).len(), 35);
        assert_eq!(weights_up_to(2, 0), vec![vec![0, 0]]);
    }
}
