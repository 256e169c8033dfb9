//! Cartan data for the finite types, weights in fundamental-weight
//! coordinates and roots in simple-root coordinates.
//!
//! Nodes are numbered as in Kac's tables and all public indices are
//! 1-based. The matrix convention is `a[i][j] = <h_i, alpha_j>`, so column
//! `j` of the Cartan matrix is the simple root `alpha_j` written in
//! fundamental-weight coordinates.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A (family, rank) pair naming a finite-type simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let legal = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if legal {
            Ok(Self { family, rank })
        } else {
            Err(Error::IllegalType {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::ParseType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An integral weight; `coords[t-1] = <h_t, lambda>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(n: usize) -> Self {
        WeightVec(vec![0; n])
    }

    /// `<h_t, self>` for 1-based `t`.
    pub fn pairing(&self, t: usize) -> i64 {
        self.0[t - 1]
    }

    pub fn neg(&self) -> Self {
        WeightVec(self.0.iter().map(|x| -x).collect())
    }

    pub fn add_scaled(&self, other: &WeightVec, k: i64) -> Self {
        WeightVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }
}

/// A root as integer coefficients on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn simple(n: usize, j: usize) -> Self {
        let mut m = vec![0; n];
        m[j - 1] = 1;
        RootVec(m)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&m| m >= 0) && self.0.iter().any(|&m| m > 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    ty: CartanType,
    a: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn new(ty: CartanType) -> Self {
        cartan_matrix(ty)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// `a_{i,j} = <h_i, alpha_j>` with 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i - 1][j - 1]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Cartan data of the Langlands dual algebra (transposed matrix). The
    /// type label is kept; only the matrix changes.
    pub fn transposed(&self) -> Self {
        let n = self.rank();
        let a = (0..n)
            .map(|i| (0..n).map(|j| self.a[j][i]).collect())
            .collect();
        CartanData { ty: self.ty, a }
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                bound: self.rank(),
            })
        }
    }

    pub fn fundamental_weight(&self, i: usize) -> WeightVec {
        let mut w = WeightVec::zero(self.rank());
        w.0[i - 1] = 1;
        w
    }

    /// `alpha_j` in fundamental-weight coordinates (column `j`).
    pub fn simple_root_weight(&self, j: usize) -> WeightVec {
        WeightVec(self.a.iter().map(|row| row[j - 1]).collect())
    }

    pub fn root_to_weight(&self, beta: &RootVec) -> WeightVec {
        WeightVec(
            self.a
                .iter()
                .map(|row| row.iter().zip(&beta.0).map(|(a, m)| a * m).sum())
                .collect(),
        )
    }

    /// `s_j(lambda) = lambda - <h_j, lambda> alpha_j`.
    pub fn reflect(&self, j: usize, lambda: &WeightVec) -> WeightVec {
        let c = lambda.0[j - 1];
        WeightVec(
            lambda
                .0
                .iter()
                .zip(&self.a)
                .map(|(x, row)| x - c * row[j - 1])
                .collect(),
        )
    }

    /// Apply `s_{word[0]} s_{word[1]} ... s_{word[last]}` to `lambda`; the
    /// rightmost reflection acts first.
    pub fn reflect_word(&self, word: &[usize], lambda: &WeightVec) -> WeightVec {
        word.iter()
            .rev()
            .fold(lambda.clone(), |acc, &j| self.reflect(j, &acc))
    }

    pub fn reflect_root(&self, j: usize, beta: &RootVec) -> RootVec {
        let pairing: i64 = self.a[j - 1].iter().zip(&beta.0).map(|(a, m)| a * m).sum();
        let mut m = beta.0.clone();
        m[j - 1] -= pairing;
        RootVec(m)
    }

    /// All roots, obtained by closing the simple roots under reflections.
    pub fn roots(&self) -> BTreeSet<RootVec> {
        let n = self.rank();
        let mut seen: BTreeSet<RootVec> = BTreeSet::new();
        let mut queue: VecDeque<RootVec> = (1..=n).map(|j| RootVec::simple(n, j)).collect();
        while let Some(beta) = queue.pop_front() {
            if !seen.insert(beta.clone()) {
                continue;
            }
            for j in 1..=n {
                let r = self.reflect_root(j, &beta);
                if !seen.contains(&r) {
                    queue.push_back(r);
                }
            }
        }
        seen
    }

    /// The positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> Vec<RootVec> {
        let mut pos: Vec<RootVec> = self
            .roots()
            .into_iter()
            .filter(|r| r.is_positive())
            .collect();
        pos.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| x.cmp(y)));
        pos
    }

    pub fn highest_root(&self) -> RootVec {
        self.positive_roots()
            .pop()
            .expect("a root system has at least one positive root")
    }

    /// Largest value of `<h_t, mu>` over all simple coroots `h_t` and all
    /// weights `mu` of `V(Lambda_i)`. Equals the coefficient of `alpha_i^vee`
    /// in the highest root of the dual root system.
    pub fn max_pairing(&self, i: usize) -> i64 {
        self.transposed().highest_root().0[i - 1]
    }

    /// Whether `V(Lambda_i)` (equivalently `V(-w0 Lambda_i)`) is minuscule.
    pub fn is_minuscule(&self, i: usize) -> bool {
        self.max_pairing(i) == 1
    }
}

pub fn cartan_matrix(ty: CartanType) -> CartanData {
    let n = ty.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match ty.family() {
        Family::A => (1..n).for_each(|i| bond(i, i + 1)),
        Family::B | Family::C => (1..n).for_each(|i| bond(i, i + 1)),
        Family::D => {
            (1..n - 1).for_each(|i| bond(i, i + 1));
            bond(n - 2, n);
        }
        Family::E => {
            (1..n - 1).for_each(|i| bond(i, i + 1));
            bond(if n == 8 { 5 } else { 3 }, n);
        }
        Family::F => (1..4).for_each(|i| bond(i, i + 1)),
        Family::G => bond(1, 2),
    }
    match ty.family() {
        // alpha_n short
        Family::B => a[n - 1][n - 2] = -2,
        // alpha_n long
        Family::C => a[n - 2][n - 1] = -2,
        // alpha_1, alpha_2 long
        Family::F => a[2][1] = -2,
        Family::G => a[1][0] = -3,
        _ => {}
    }
    CartanData { ty, a }
}
