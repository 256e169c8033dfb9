use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::monomial::ExponentVec;

/// Laurent polynomial in `nvars` variables with exact integer coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(ExponentVec::zero(nvars), BigInt::one())
    }

    pub fn monomial(d: ExponentVec, coeff: BigInt) -> Self {
        let nvars = d.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(d, coeff);
        }
        Self { nvars, terms }
    }

    /// `t_l^e` (1-based `l`).
    pub fn var_power(nvars: usize, l: usize, e: i64) -> Self {
        let mut d = ExponentVec::zero(nvars);
        d.0[l - 1] = e;
        Self::monomial(d, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVec, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &ExponentVec) -> BigInt {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVec> {
        self.terms.keys()
    }

    pub fn all_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub fn all_negative(&self) -> bool {
        self.terms.values().all(|c| c.is_negative())
    }

    fn add_term(&mut self, d: ExponentVec, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                let d = d1.mul(d2).expect("factors share the variable count");
                out.add_term(d, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let t1 = LaurentPoly::var_power(2, 1, 1);
        let t2inv = LaurentPoly::var_power(2, 2, -1);
        let s = &t1 + &t2inv;
        let sq = &s * &s;
        assert_eq!(sq.terms().count(), 3);
        assert_eq!(sq.coeff(&ExponentVec(vec![1, -1])), BigInt::from(2));
        let cancel = &s + &(-s.clone());
        assert!(cancel.is_zero());
        assert_eq!(&LaurentPoly::one(2) * &t1, t1);
        assert!(sq.all_positive());
        assert!((-sq).all_negative());
    }
}
