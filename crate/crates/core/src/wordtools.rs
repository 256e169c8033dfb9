//! Reduced words of the longest Weyl group element.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootsystem::{CartanData, RootVec};

/// Default cap on [`enumerate_w0_words`].
pub const DEFAULT_WORD_LIMIT: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// A validated reduced word `(i_1, ..., i_N)` of `w0`.
///
/// Caches `beta_k = s_{i_N} ... s_{i_{k+1}} alpha_{i_k}`; these run over the
/// positive roots exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    letters: Vec<usize>,
    beta: Vec<RootVec>,
    next: Vec<usize>,
    prev: Vec<usize>,
}

/// Parses `"2,3,2,1"` into letters. Bounds are checked by [`validate_word`].
pub fn parse_letters(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Err(Error::ParseWord(s.to_string()));
    }
    s.split(',')
        .map(|tok| tok.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::ParseWord(s.to_string()))
}

pub fn validate_word(cd: &CartanData, letters: &[usize]) -> Result<ReducedWord> {
    let n = cd.rank();
    for &i in letters {
        cd.check_index(i)?;
    }
    let expected = cd.positive_roots().len();
    if letters.len() != expected {
        return Err(Error::WrongLength {
            expected,
            got: letters.len(),
        });
    }
    let big_n = letters.len();
    let mut beta = vec![RootVec(vec![0; n]); big_n];
    let mut seen = std::collections::HashSet::new();
    for k in (0..big_n).rev() {
        let root = letters[k + 1..]
            .iter()
            .fold(RootVec::simple(n, letters[k]), |acc, &j| {
                cd.reflect_root(j, &acc)
            });
        if !root.is_positive() || !seen.insert(root.clone()) {
            return Err(Error::NotReducedOrNotLongest { position: k + 1 });
        }
        beta[k] = root;
    }

    let mut next = vec![big_n + 1; big_n + 2];
    let mut prev = vec![0; big_n + 2];
    let mut last = vec![0usize; n + 1];
    for (pos, &i) in letters.iter().enumerate() {
        let j = pos + 1;
        if last[i] != 0 {
            next[last[i]] = j;
            prev[j] = last[i];
        }
        last[i] = j;
    }
    Ok(ReducedWord {
        letters: letters.to_vec(),
        beta,
        next,
        prev,
    })
}

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// `i_j` for 1-based position `j`.
    pub fn letter(&self, j: usize) -> usize {
        self.letters[j - 1]
    }

    /// `beta_k` for 1-based `k`.
    pub fn beta(&self, k: usize) -> &RootVec {
        &self.beta[k - 1]
    }

    pub fn betas(&self) -> &[RootVec] {
        &self.beta
    }

    /// The unique `k` with `beta_k = alpha_i`.
    pub fn source_index(&self, i: usize) -> usize {
        let n = self.beta[0].0.len();
        let target = RootVec::simple(n, i);
        self.beta
            .iter()
            .position(|b| *b == target)
            .map(|p| p + 1)
            .expect("the betas of a reduced word of w0 contain every simple root")
    }

    /// Next position carrying the same letter, or `N + 1`.
    pub fn j_plus(&self, j: usize) -> usize {
        self.next[j]
    }

    /// Previous position carrying the same letter, or `0`.
    pub fn j_minus(&self, j: usize) -> usize {
        self.prev[j]
    }

    /// `m`-fold iterate of `j_plus` / `j_minus`; the sentinels absorb.
    pub fn j_iter(&self, j: usize, m: usize, dir: Direction) -> usize {
        let mut pos = j;
        for _ in 0..m {
            pos = match dir {
                Direction::Forward if pos > self.len() => return pos,
                Direction::Forward => self.next[pos],
                Direction::Backward if pos == 0 => return 0,
                Direction::Backward => self.prev[pos],
            };
        }
        pos
    }

    /// Last position whose letter is `i`.
    pub fn last_occurrence(&self, i: usize) -> Option<usize> {
        self.letters.iter().rposition(|&l| l == i).map(|p| p + 1)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A word paired with the Cartan data it was validated against.
#[derive(Debug, Clone)]
pub struct TypedWord {
    pub cartan: CartanData,
    pub word: ReducedWord,
}

impl FromStr for TypedWord {
    type Err = Error;

    /// `"C3:2,3,2,1,2,3,2,3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let (ty, letters) = s
            .split_once(':')
            .ok_or_else(|| Error::ParseWord(s.to_string()))?;
        let cartan = CartanData::new(ty.parse()?);
        let word = validate_word(&cartan, &parse_letters(letters)?)?;
        Ok(TypedWord { cartan, word })
    }
}

/// Depth-first, lexicographic iterator over the reduced words of `w0`.
///
/// A prefix `w` extends by `s_j` iff `w(alpha_j)` is positive. The images of
/// the simple roots under the prefix are kept on the stack so each step is a
/// rank-sized update.
pub struct W0Words<'a> {
    cd: &'a CartanData,
    target: usize,
    letters: Vec<usize>,
    // images[d][t] = w_d(alpha_t) for the prefix of length d
    images: Vec<Vec<RootVec>>,
    // next letter to try at each depth
    cursor: Vec<usize>,
}

impl<'a> W0Words<'a> {
    pub fn new(cd: &'a CartanData) -> Self {
        let n = cd.rank();
        let identity = (1..=n).map(|t| RootVec::simple(n, t)).collect();
        Self {
            cd,
            target: cd.positive_roots().len(),
            letters: Vec::new(),
            images: vec![identity],
            cursor: vec![1],
        }
    }
}

impl Iterator for W0Words<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let n = self.cd.rank();
        loop {
            let depth = self.letters.len();
            if depth == self.target {
                let out = self.letters.clone();
                self.letters.pop();
                self.images.pop();
                self.cursor.pop();
                return Some(out);
            }
            let j = self.cursor[depth];
            if j > n {
                if depth == 0 {
                    return None;
                }
                self.letters.pop();
                self.images.pop();
                self.cursor.pop();
                continue;
            }
            self.cursor[depth] += 1;
            let img = &self.images[depth];
            if !img[j - 1].is_positive() {
                continue;
            }
            // (w s_j)(alpha_t) = w(alpha_t) - a_{j,t} w(alpha_j)
            let next: Vec<RootVec> = (1..=n)
                .map(|t| {
                    let c = self.cd.entry(j, t);
                    RootVec(
                        img[t - 1]
                            .0
                            .iter()
                            .zip(&img[j - 1].0)
                            .map(|(x, y)| x - c * y)
                            .collect(),
                    )
                })
                .collect();
            self.letters.push(j);
            self.images.push(next);
            self.cursor.push(1);
        }
    }
}

/// All reduced words of `w0` in lexicographic order, failing once more
/// than `limit` exist.
pub fn enumerate_w0_words(cd: &CartanData, limit: usize) -> Result<Vec<ReducedWord>> {
    let mut out = Vec::new();
    for letters in W0Words::new(cd) {
        if out.len() == limit {
            return Err(Error::LimitExceeded(limit));
        }
        out.push(validate_word(cd, &letters)?);
    }
    Ok(out)
}
