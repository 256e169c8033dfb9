//! Decoration graphs.
//!
//! For a reduced word of `w0` and an index `i`, the vertices of the graph are
//! the Laurent monomials of the half-potential summand
//! `Delta_{w0 Lambda_i, s_i Lambda_i}` pulled back along the torus chart of
//! the word. Construction starts from the single monomial `t_k` and divides
//! by `A_j` along every label the arrow gate admits. Each vertex carries the
//! b-integers computed from its exponents; on supported inputs these are the
//! `c`-exponents of the corresponding trail, so they stay non-negative and
//! move by `+1` at `j`, `-1` at `j+` along an edge.

mod checks;
mod export;

pub use checks::{check_graph, CheckOutcome, CheckReport};
pub use export::{to_dot, to_json, GraphJson};

use std::collections::VecDeque;
use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{a_monomial, ExponentVec};
use crate::rootsystem::{CartanData, CartanType, Family, WeightVec};
use crate::wordtools::{Direction, ReducedWord};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BVector(pub Vec<i64>);

impl BVector {
    /// `b_t` for 1-based `t`.
    pub fn get(&self, t: usize) -> i64 {
        self.0[t - 1]
    }

    /// `L = sum_t t * b_t`; strictly decreases along every edge.
    pub fn level(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(t, &b)| (t as i64 + 1) * b)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub d: ExponentVec,
    pub b: BVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SupportStatus {
    /// `<h_t, mu>` lies in `[-2, 2]` on every weight of `V(-w0 Lambda_i)`.
    MinusculeLike,
    G2Proven,
    Unproven,
}

impl fmt::Display for SupportStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SupportStatus::MinusculeLike => "minuscule-like",
            SupportStatus::G2Proven => "g2-proven",
            SupportStatus::Unproven => "unproven",
        })
    }
}

/// Indices for which the construction is known to produce the full
/// monomial set.
pub fn supported(ty: CartanType, i: usize) -> SupportStatus {
    let listed: &[usize] = match (ty.family(), ty.rank()) {
        (Family::A | Family::B | Family::C | Family::D, n) => {
            return if (1..=n).contains(&i) {
                SupportStatus::MinusculeLike
            } else {
                SupportStatus::Unproven
            }
        }
        (Family::G, _) => {
            return if (1..=2).contains(&i) {
                SupportStatus::G2Proven
            } else {
                SupportStatus::Unproven
            }
        }
        (Family::E, 6) => &[1, 2, 4, 5, 6],
        (Family::E, 7) => &[1, 5, 6, 7],
        (Family::E, 8) => &[1, 7],
        (Family::F, 4) => &[1, 4],
        _ => &[],
    };
    if listed.contains(&i) {
        SupportStatus::MinusculeLike
    } else {
        SupportStatus::Unproven
    }
}

fn s_i_lambda_i(cd: &CartanData, i: usize) -> WeightVec {
    cd.fundamental_weight(i)
        .add_scaled(&cd.simple_root_weight(i), -1)
}

/// b-integers of `d`: `b_N = d_N + <h_{i_N}, s_i Lambda_i>` and downward
/// `b_t = d_t + <h_{i_t}, s_i Lambda_i> - sum_{l >= t} b_{l+1} a_{i_t, i_{l+1}}`.
pub fn b_from_d(cd: &CartanData, w: &ReducedWord, i: usize, d: &ExponentVec) -> BVector {
    let base = s_i_lambda_i(cd, i);
    // acc = sum_{l > t} b_l alpha_{i_l}, in weight coordinates
    let mut acc = WeightVec::zero(cd.rank());
    let mut b = vec![0; w.len()];
    for t in (1..=w.len()).rev() {
        let it = w.letter(t);
        let bt = d.get(t) + base.pairing(it) - acc.pairing(it);
        b[t - 1] = bt;
        acc = acc.add_scaled(&cd.simple_root_weight(it), bt);
    }
    BVector(b)
}

/// Closed form of the b-vector of `t_k`: pairings of `h_{i_t}` with
/// `s_{i_{t+1}} ... s_{i_N} s_i Lambda_i` after `k`, zero at `k`, and with
/// `s_{i_{t+1}} ... s_{i_N} Lambda_i` before `k`.
pub fn closed_form_initial_b(cd: &CartanData, w: &ReducedWord, i: usize) -> BVector {
    let k = w.source_index(i);
    let mut after = s_i_lambda_i(cd, i);
    let mut before = cd.fundamental_weight(i);
    let mut b = vec![0; w.len()];
    for t in (1..=w.len()).rev() {
        let it = w.letter(t);
        b[t - 1] = match t.cmp(&k) {
            std::cmp::Ordering::Greater => after.pairing(it),
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => before.pairing(it),
        };
        after = cd.reflect(it, &after);
        before = cd.reflect(it, &before);
    }
    BVector(b)
}

pub fn initial_vertex(cd: &CartanData, w: &ReducedWord, i: usize) -> Result<Vertex> {
    cd.check_index(i)?;
    let k = w.source_index(i);
    let d = ExponentVec::unit(w.len(), k);
    let b = b_from_d(cd, w, i, &d);
    let closed = closed_form_initial_b(cd, w, i);
    if b != closed {
        return Err(Error::ClosedFormMismatch {
            recursive: b.0,
            closed: closed.0,
        });
    }
    Ok(Vertex { d, b })
}

/// Labels `j` for which the arrow `M -> M * A_j^{-1}` exists.
///
/// Gate: `j+ <= N`, `d_j > 0`, `b_{j+} > 0`, and either (a) `d_{j+} < d_j`,
/// or (b) `d_{j+} = d_j` and the positions `j^{2+}, j^{3+}, ...` show a run of
/// `d = b = 0` terminated by `d = -1, b = 1`.
pub fn firing_labels(w: &ReducedWord, v: &Vertex) -> Vec<usize> {
    let n = w.len();
    let (d, b) = (&v.d, &v.b);
    (1..=n)
        .filter(|&j| {
            let jp = w.j_plus(j);
            if jp > n || d.get(j) <= 0 || b.get(jp) <= 0 {
                return false;
            }
            if d.get(jp) < d.get(j) {
                return true;
            }
            if d.get(jp) != d.get(j) {
                return false;
            }
            let mut pos = w.j_iter(j, 2, Direction::Forward);
            while pos <= n && d.get(pos) == 0 && b.get(pos) == 0 {
                pos = w.j_plus(pos);
            }
            pos <= n && d.get(pos) == -1 && b.get(pos) == 1
        })
        .collect()
}

/// Minuscule rule: `d_j = 1` and `d_{j+} != 1`.
pub fn firing_labels_minuscule(
    cd: &CartanData,
    w: &ReducedWord,
    i: usize,
    v: &Vertex,
) -> Result<Vec<usize>> {
    cd.check_index(i)?;
    if !cd.is_minuscule(i) {
        return Err(Error::NotMinuscule {
            ty: cd.cartan_type(),
            i,
        });
    }
    let n = w.len();
    Ok((1..=n)
        .filter(|&j| {
            let jp = w.j_plus(j);
            jp <= n && v.d.get(j) == 1 && v.d.get(jp) != 1
        })
        .collect())
}

/// Follows the edge labelled `j` without checking the result; returns the
/// updated vertex and the b-vector recomputed from its exponents.
fn step_raw(
    cd: &CartanData,
    w: &ReducedWord,
    i: usize,
    v: &Vertex,
    j: usize,
) -> Result<(Vertex, BVector)> {
    let a = a_monomial(cd, w, j)?;
    let d = v.d.div(&a)?;
    let mut b = v.b.clone();
    b.0[j - 1] += 1;
    b.0[w.j_plus(j) - 1] -= 1;
    let recomputed = b_from_d(cd, w, i, &d);
    Ok((Vertex { d, b }, recomputed))
}

pub fn step_vertex(
    cd: &CartanData,
    w: &ReducedWord,
    i: usize,
    v: &Vertex,
    j: usize,
) -> Result<Vertex> {
    let (next, recomputed) = step_raw(cd, w, i, v, j)?;
    if next.b != recomputed {
        return Err(Error::BUpdateMismatch {
            label: j,
            updated: next.b.0,
            recomputed: recomputed.0,
        });
    }
    Ok(next)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Build for unproven `(type, i)` and report assertion failures instead
    /// of aborting.
    pub force: bool,
    /// Use the minuscule arrow rule; fails with `NotMinuscule` elsewhere.
    pub minuscule_fast_path: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub label: usize,
    pub dst: usize,
}

#[derive(Debug, Clone)]
pub struct DecoGraph {
    pub cartan_type: CartanType,
    pub word: ReducedWord,
    pub i: usize,
    pub source_index: usize,
    pub support: SupportStatus,
    /// Insertion (FIFO) order; index 0 is the source.
    pub vertices: IndexMap<ExponentVec, BVector>,
    pub edges: Vec<Edge>,
    /// Assertion failures recorded in force mode.
    pub violations: Vec<String>,
}

impl DecoGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, idx: usize) -> Vertex {
        let (d, b) = self.vertices.get_index(idx).expect("vertex index in range");
        Vertex {
            d: d.clone(),
            b: b.clone(),
        }
    }

    pub fn monomial(&self, idx: usize) -> &ExponentVec {
        self.vertices
            .get_index(idx)
            .expect("vertex index in range")
            .0
    }

    pub fn index_of(&self, d: &ExponentVec) -> Option<usize> {
        self.vertices.get_index_of(d)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &ExponentVec> {
        self.vertices.keys()
    }

    pub fn source(&self) -> &ExponentVec {
        self.monomial(0)
    }

    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.len()];
        for e in &self.edges {
            has_out[e.src] = true;
        }
        (0..self.len()).filter(|&v| !has_out[v]).collect()
    }

    /// Edges as `(src monomial, label, dst monomial)`.
    pub fn labeled_edges(&self) -> impl Iterator<Item = (&ExponentVec, usize, &ExponentVec)> {
        self.edges
            .iter()
            .map(|e| (self.monomial(e.src), e.label, self.monomial(e.dst)))
    }
}

/// Worklist construction: FIFO from `t_k`, every vertex expanded once,
/// labels in ascending order, targets merged by exponent vector.
pub fn build_graph(
    cd: &CartanData,
    w: &ReducedWord,
    i: usize,
    opts: BuildOptions,
) -> Result<DecoGraph> {
    cd.check_index(i)?;
    let support = supported(cd.cartan_type(), i);
    if support == SupportStatus::Unproven && !opts.force {
        return Err(Error::UnsupportedIndex {
            ty: cd.cartan_type(),
            i,
        });
    }
    let mut violations = Vec::new();
    let start = match initial_vertex(cd, w, i) {
        Ok(v) => v,
        Err(e @ Error::ClosedFormMismatch { .. }) if opts.force => {
            violations.push(e.to_string());
            let d = ExponentVec::unit(w.len(), w.source_index(i));
            let b = b_from_d(cd, w, i, &d);
            Vertex { d, b }
        }
        Err(e) => return Err(e),
    };

    let mut vertices: IndexMap<ExponentVec, BVector> = IndexMap::new();
    vertices.insert(start.d, start.b);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);

    while let Some(src) = queue.pop_front() {
        let (d, b) = vertices.get_index(src).expect("queued vertex exists");
        let v = Vertex {
            d: d.clone(),
            b: b.clone(),
        };
        let labels = if opts.minuscule_fast_path {
            firing_labels_minuscule(cd, w, i, &v)?
        } else {
            firing_labels(w, &v)
        };
        for j in labels {
            let (next, recomputed) = step_raw(cd, w, i, &v, j)?;
            if next.b != recomputed {
                let err = Error::BUpdateMismatch {
                    label: j,
                    updated: next.b.0.clone(),
                    recomputed: recomputed.0,
                };
                if !opts.force {
                    return Err(err);
                }
                violations.push(format!("at {}: {err}", v.d));
            }
            let dst = match vertices.get_full(&next.d) {
                Some((idx, key, stored)) => {
                    if *stored != next.b {
                        let err = Error::MergeMismatch {
                            monomial: key.to_string(),
                            stored: stored.0.clone(),
                            incoming: next.b.0.clone(),
                        };
                        if !opts.force {
                            return Err(err);
                        }
                        violations.push(err.to_string());
                    }
                    idx
                }
                None => {
                    let (idx, _) = vertices.insert_full(next.d, next.b);
                    queue.push_back(idx);
                    idx
                }
            };
            edges.push(Edge { src, label: j, dst });
        }
    }

    let mut graph = DecoGraph {
        cartan_type: cd.cartan_type(),
        word: w.clone(),
        i,
        source_index: w.source_index(i),
        support,
        vertices,
        edges,
        violations,
    };
    if opts.force && support == SupportStatus::Unproven {
        let report = check_graph(cd, &graph);
        graph.violations.extend(
            report
                .failures()
                .map(|c| format!("{}: {}", c.name, c.detail)),
        );
    }
    Ok(graph)
}
