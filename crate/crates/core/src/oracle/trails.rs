//! Trails through minuscule weight diagrams.
//!
//! In a minuscule representation every weight space is a line and every
//! `alpha_j`-string has length at most one, so `e_j` moves a weight vector
//! to a non-zero multiple of the next one exactly when the target is a
//! weight. A trail is therefore just a walk in the weight diagram.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::monomial::ExponentVec;
use crate::rootsystem::{CartanData, WeightVec};
use crate::wordtools::ReducedWord;

#[derive(Debug, Clone)]
pub struct MinusculeWeightDiagram {
    pub weights: BTreeSet<WeightVec>,
    /// `raises[j-1]` lists the pairs `(mu, mu + alpha_j)` inside the diagram.
    pub raises: Vec<Vec<(WeightVec, WeightVec)>>,
}

impl MinusculeWeightDiagram {
    /// Saturates `{highest}` under the lowering reflections.
    pub fn new(cd: &CartanData, highest: &WeightVec) -> Self {
        let mut weights = BTreeSet::new();
        let mut queue = VecDeque::from([highest.clone()]);
        while let Some(mu) = queue.pop_front() {
            if !weights.insert(mu.clone()) {
                continue;
            }
            for t in 1..=cd.rank() {
                if mu.pairing(t) > 0 {
                    queue.push_back(cd.reflect(t, &mu));
                }
            }
        }
        let raises = (1..=cd.rank())
            .map(|j| {
                let alpha = cd.simple_root_weight(j);
                weights
                    .iter()
                    .filter_map(|mu| {
                        let up = mu.add_scaled(&alpha, 1);
                        weights.contains(&up).then(|| (mu.clone(), up))
                    })
                    .collect()
            })
            .collect();
        Self { weights, raises }
    }

    pub fn contains(&self, mu: &WeightVec) -> bool {
        self.weights.contains(mu)
    }

    pub fn is_minuscule(&self) -> bool {
        self.weights
            .iter()
            .all(|mu| mu.0.iter().all(|x| (-1..=1).contains(x)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    /// `gamma_0, ..., gamma_N`.
    pub weights: Vec<WeightVec>,
    /// `gamma_{k-1} - gamma_k = c_k alpha_{i_k}`.
    pub c: Vec<i64>,
    /// `d_k = c_k + <h_{i_k}, gamma_k>`.
    pub d: ExponentVec,
}

/// Trails from `-w0 Lambda_i` to `-s_i Lambda_i` in `V(-w0 Lambda_i)`.
pub fn minuscule_trails(cd: &CartanData, w: &ReducedWord, i: usize) -> Result<Vec<Trail>> {
    cd.check_index(i)?;
    if !cd.is_minuscule(i) {
        return Err(Error::NotMinuscule {
            ty: cd.cartan_type(),
            i,
        });
    }
    let lambda = cd.fundamental_weight(i);
    let start = cd.reflect_word(w.letters(), &lambda).neg();
    let end = cd.reflect(i, &lambda).neg();
    let diagram = MinusculeWeightDiagram::new(cd, &start);
    debug_assert!(diagram.is_minuscule());
    let n = w.len();

    // reach[k]: weights gamma_k reachable from gamma_0
    let mut reach: Vec<BTreeSet<WeightVec>> = vec![BTreeSet::from([start.clone()])];
    for k in 1..=n {
        let alpha = cd.simple_root_weight(w.letter(k));
        let mut next = BTreeSet::new();
        for mu in &reach[k - 1] {
            let mut cur = mu.clone();
            while diagram.contains(&cur) {
                next.insert(cur.clone());
                cur = cur.add_scaled(&alpha, -1);
            }
        }
        reach.push(next);
    }
    if !reach[n].contains(&end) {
        return Ok(Vec::new());
    }

    let mut out = Vec::new();
    let mut path = vec![WeightVec::zero(cd.rank()); n + 1];
    let mut c = vec![0i64; n];
    path[n] = end;
    backtrack(cd, w, &diagram, &reach, n, &mut path, &mut c, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    cd: &CartanData,
    w: &ReducedWord,
    diagram: &MinusculeWeightDiagram,
    reach: &[BTreeSet<WeightVec>],
    k: usize,
    path: &mut Vec<WeightVec>,
    c: &mut Vec<i64>,
    out: &mut Vec<Trail>,
) {
    if k == 0 {
        let d = (1..=w.len())
            .map(|l| c[l - 1] + path[l].pairing(w.letter(l)))
            .collect();
        out.push(Trail {
            weights: path.clone(),
            c: c.clone(),
            d: ExponentVec(d),
        });
        return;
    }
    let alpha = cd.simple_root_weight(w.letter(k));
    let mut prev = path[k].clone();
    let mut ck = 0;
    while diagram.contains(&prev) {
        if reach[k - 1].contains(&prev) {
            path[k - 1] = prev.clone();
            c[k - 1] = ck;
            backtrack(cd, w, diagram, reach, k - 1, path, c, out);
        }
        prev = prev.add_scaled(&alpha, 1);
        ck += 1;
    }
}

pub fn minuscule_trail_monomials(
    cd: &CartanData,
    w: &ReducedWord,
    i: usize,
) -> Result<BTreeSet<ExponentVec>> {
    Ok(minuscule_trails(cd, w, i)?
        .into_iter()
        .map(|t| t.d)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordtools::validate_word;

    #[test]
    fn diagram_sizes() {
        let cases = [
            ("A3", 2, 6),
            ("B3", 3, 8),
            ("C3", 1, 6),
            ("D4", 1, 8),
            ("E6", 1, 27),
            ("E7", 6, 56),
        ];
        for (ty, i, size) in cases {
            let c = CartanData::new(ty.parse().unwrap());
            let dia = MinusculeWeightDiagram::new(&c, &c.fundamental_weight(i));
            assert_eq!(dia.weights.len(), size, "{ty} {i}");
            assert!(dia.is_minuscule());
        }
        let c = CartanData::new("C3".parse().unwrap());
        let adj = MinusculeWeightDiagram::new(&c, &c.fundamental_weight(2));
        assert!(!adj.is_minuscule());
    }

    #[test]
    fn a2_trails() {
        let c = CartanData::new("A2".parse().unwrap());
        let w = validate_word(&c, &[1, 2, 1]).unwrap();
        let trails = minuscule_trails(&c, &w, 1).unwrap();
        let ds: BTreeSet<_> = trails.iter().map(|t| t.d.clone()).collect();
        assert_eq!(ds.len(), trails.len());
        // source t_k and lowest term
        assert!(ds.contains(&ExponentVec::unit(3, w.source_index(1))));
        assert!(ds.contains(&crate::monomial::lowest_term(&c, &w, 1)));
        for t in &trails {
            assert!(t.c.iter().all(|&x| x == 0 || x == 1));
        }
    }

    #[test]
    fn refuses_non_minuscule() {
        let c = CartanData::new("C3".parse().unwrap());
        let w = validate_word(&c, &[2, 3, 2, 1, 2, 3, 2, 3, 1]).unwrap();
        assert!(matches!(
            minuscule_trails(&c, &w, 2),
            Err(Error::NotMinuscule { i: 2, .. })
        ));
        let ts = minuscule_trail_monomials(&c, &w, 1).unwrap();
        assert_eq!(ts, BTreeSet::from([ExponentVec::unit(9, 9)]));
    }
}
