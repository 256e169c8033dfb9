//! Laurent monomials `t_1^{d_1} ... t_N^{d_N}` as exponent vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsystem::CartanData;
use crate::wordtools::ReducedWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVec(pub Vec<i64>);

impl ExponentVec {
    pub fn zero(len: usize) -> Self {
        ExponentVec(vec![0; len])
    }

    /// The monomial `t_k` (1-based).
    pub fn unit(len: usize, k: usize) -> Self {
        let mut d = Self::zero(len);
        d.0[k - 1] = 1;
        d
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent of `t_l` (1-based).
    pub fn get(&self, l: usize) -> i64 {
        self.0[l - 1]
    }

    pub fn mul(&self, other: &ExponentVec) -> Result<ExponentVec> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn div(&self, other: &ExponentVec) -> Result<ExponentVec> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &ExponentVec, f: impl Fn(i64, i64) -> i64) -> Result<ExponentVec> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(ExponentVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        ))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Tropical evaluation: the linear form `sum_l d_l z_l`.
    pub fn eval_linear(&self, z: &[i64]) -> i64 {
        self.0.iter().zip(z).map(|(a, b)| a * b).sum()
    }
}

fn render_factors(factors: &[(usize, i64)]) -> String {
    factors
        .iter()
        .map(|&(l, e)| {
            if e == 1 {
                format!("t_{l}")
            } else {
                format!("t_{l}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for ExponentVec {
    /// `t_3*t_5^2/t_6`, `t_7/(t_8*t_9)`, `t_3/t_7^2`, `1/t_2`, `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: Vec<(usize, i64)> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(l, &e)| (l + 1, e))
            .collect();
        let den: Vec<(usize, i64)> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e < 0)
            .map(|(l, &e)| (l + 1, -e))
            .collect();
        let top = if num.is_empty() {
            "1".to_string()
        } else {
            render_factors(&num)
        };
        match den.len() {
            0 => write!(f, "{top}"),
            1 => write!(f, "{top}/{}", render_factors(&den)),
            _ => write!(f, "{top}/({})", render_factors(&den)),
        }
    }
}

/// `A_j = t_j t_{j+} prod_{j<l<j+} t_l^{a_{i_l, i_j}}`.
pub fn a_monomial(cd: &CartanData, w: &ReducedWord, j: usize) -> Result<ExponentVec> {
    let jp = w.j_plus(j);
    if jp > w.len() {
        return Err(Error::NoNextOccurrence(j));
    }
    let ij = w.letter(j);
    let mut d = ExponentVec::zero(w.len());
    d.0[j - 1] = 1;
    d.0[jp - 1] = 1;
    for l in j + 1..jp {
        d.0[l - 1] = cd.entry(w.letter(l), ij);
    }
    Ok(d)
}

/// `t_J t_{J+1}^{a_{i_{J+1}, i}} ... t_N^{a_{i_N, i}}` with `J` the last
/// position carrying the letter `i`.
pub fn lowest_term(cd: &CartanData, w: &ReducedWord, i: usize) -> ExponentVec {
    let big_j = w
        .last_occurrence(i)
        .expect("every letter occurs in a reduced word of w0");
    let mut d = ExponentVec::zero(w.len());
    d.0[big_j - 1] = 1;
    for l in big_j + 1..=w.len() {
        d.0[l - 1] = cd.entry(w.letter(l), i);
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordtools::validate_word;

    fn m(v: &[i64]) -> ExponentVec {
        ExponentVec(v.to_vec())
    }

    fn c3() -> (CartanData, ReducedWord) {
        let c = CartanData::new("C3".parse().unwrap());
        let w = validate_word(&c, &[2, 3, 2, 1, 2, 3, 2, 3, 1]).unwrap();
        (c, w)
    }

    fn d4() -> (CartanData, ReducedWord) {
        let c = CartanData::new("D4".parse().unwrap());
        let w = validate_word(&c, &[2, 1, 3, 2, 4, 2, 3, 2, 1, 2, 3, 4]).unwrap();
        (c, w)
    }

    #[test]
    fn arithmetic() {
        let x = m(&[1, -2, 3]);
        assert_eq!(x.mul(&ExponentVec::zero(3)).unwrap(), x);
        assert_eq!(x.div(&x).unwrap(), ExponentVec::zero(3));
        assert_eq!(x.mul(&m(&[1])), Err(Error::LengthMismatch(3, 1)));
    }

    #[test]
    fn rendering() {
        assert_eq!(m(&[0, 0, 1, 0, 2, -1]).to_string(), "t_3*t_5^2/t_6");
        assert_eq!(
            m(&[0, 0, 0, 0, 0, 0, 1, -1, -1]).to_string(),
            "t_7/(t_8*t_9)"
        );
        assert_eq!(m(&[0, 0, 1, 0, 0, 0, -2]).to_string(), "t_3/t_7^2");
        assert_eq!(m(&[0, -1]).to_string(), "1/t_2");
        assert_eq!(m(&[0, 0]).to_string(), "1");
        assert_eq!(m(&[1]).to_string(), "t_1");
    }

    #[test]
    fn a_monomials() {
        let (c, w) = c3();
        let a1 = a_monomial(&c, &w, 1).unwrap();
        assert_eq!(a1, m(&[1, -1, 1, 0, 0, 0, 0, 0, 0]));
        let t1 = ExponentVec::unit(9, 1);
        assert_eq!(t1.div(&a1).unwrap(), m(&[0, 1, -1, 0, 0, 0, 0, 0, 0]));
        assert_eq!(a_monomial(&c, &w, 9), Err(Error::NoNextOccurrence(9)));

        let (c, w) = d4();
        let a1 = a_monomial(&c, &w, 1).unwrap();
        let t1 = ExponentVec::unit(12, 1);
        // t_2 t_3 / t_4
        assert_eq!(
            t1.div(&a1).unwrap(),
            m(&[0, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0])
        );

        let b2 = CartanData::new("B2".parse().unwrap());
        let w = validate_word(&b2, &[1, 2, 1, 2]).unwrap();
        assert_eq!(a_monomial(&b2, &w, 2).unwrap(), m(&[0, 1, -1, 1]));
    }

    #[test]
    fn a_monomial_shape() {
        let (c, w) = d4();
        for j in 1..=w.len() {
            let Ok(a) = a_monomial(&c, &w, j) else {
                continue;
            };
            let jp = w.j_plus(j);
            assert_eq!(a.0.iter().filter(|&&x| x == 1).count(), 2);
            assert_eq!(a.get(j), 1);
            assert_eq!(a.get(jp), 1);
            for l in 1..=w.len() {
                if l < j || l > jp {
                    assert_eq!(a.get(l), 0);
                } else if l != j && l != jp {
                    assert!(a.get(l) <= 0);
                }
            }
        }
    }

    #[test]
    fn lowest_terms() {
        let (c, w) = c3();
        assert_eq!(lowest_term(&c, &w, 2), m(&[0, 0, 0, 0, 0, 0, 1, -1, -1]));
        assert_eq!(lowest_term(&c, &w, 1), ExponentVec::unit(9, 9));
        let (c, w) = d4();
        assert_eq!(
            lowest_term(&c, &w, 2),
            m(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1])
        );
        for i in 1..=4 {
            let lt = lowest_term(&c, &w, i);
            assert_eq!(
                lt.0.iter().filter(|&&x| x > 0).collect::<Vec<_>>(),
                vec![&1]
            );
        }
    }
}
