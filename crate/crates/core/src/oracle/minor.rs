//! Exact expansion of `Delta_{w0 Lambda_i, s_i Lambda_i}` in type A.
//!
//! For `SL_{n+1}` the generalized minor is the ordinary minor on rows
//! `w0([1, i])` and columns `s_i([1, i])`. The torus chart of a word is the
//! product of the matrices `x_{-j}(t) = y_j(t) t^{-h_j}`, which are the
//! identity except for the block `[[t^-1, 0], [1, t]]` on rows and columns
//! `j, j+1`.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::rootsystem::{CartanData, Family};
use crate::wordtools::ReducedWord;

use super::laurent::LaurentPoly;

type PolyMatrix = Vec<Vec<LaurentPoly>>;

/// `x_{-i_1}(t_1) ... x_{-i_N}(t_N)` as an `(n+1) x (n+1)` matrix.
pub fn chart_matrix(n: usize, w: &ReducedWord) -> PolyMatrix {
    let size = n + 1;
    let nvars = w.len();
    let mut m: PolyMatrix = (0..size)
        .map(|r| {
            (0..size)
                .map(|c| {
                    if r == c {
                        LaurentPoly::one(nvars)
                    } else {
                        LaurentPoly::zero(nvars)
                    }
                })
                .collect()
        })
        .collect();
    for (pos, &j) in w.letters().iter().enumerate() {
        let l = pos + 1;
        let inv = LaurentPoly::var_power(nvars, l, -1);
        let t = LaurentPoly::var_power(nvars, l, 1);
        let (a, b) = (j - 1, j);
        // right multiplication only touches columns a and b
        for row in m.iter_mut() {
            let new_a = &(&row[a] * &inv) + &row[b];
            let new_b = &row[b] * &t;
            row[a] = new_a;
            row[b] = new_b;
        }
    }
    m
}

fn determinant(m: &PolyMatrix, rows: &[usize], cols: &[usize], nvars: usize) -> LaurentPoly {
    let k = rows.len();
    let mut det = LaurentPoly::zero(nvars);
    for perm in (0..k).permutations(k) {
        let inversions = (0..k)
            .array_combinations()
            .filter(|&[x, y]| perm[x] > perm[y])
            .count();
        let mut term = LaurentPoly::one(nvars);
        for (r, &p) in rows.iter().zip(&perm) {
            term = &term * &m[*r][cols[p]];
            if term.is_zero() {
                break;
            }
        }
        det = if inversions % 2 == 0 {
            &det + &term
        } else {
            &det + &(-term)
        };
    }
    det
}

/// The minor, normalized to positive coefficients.
pub fn type_a_minor_poly(cd: &CartanData, w: &ReducedWord, i: usize) -> Result<LaurentPoly> {
    let ty = cd.cartan_type();
    if ty.family() != Family::A {
        return Err(Error::NotTypeA(ty));
    }
    cd.check_index(i)?;
    let n = cd.rank();
    let m = chart_matrix(n, w);
    // 0-based: rows {n+1-i, ..., n}, columns {0, ..., i-2} and {i}
    let rows: Vec<usize> = (n + 1 - i..=n).collect();
    let cols: Vec<usize> = (0..i - 1).chain(std::iter::once(i)).collect();
    let det = determinant(&m, &rows, &cols, w.len());
    if det.all_positive() {
        Ok(det)
    } else if det.all_negative() {
        Ok(-det)
    } else {
        Err(Error::MixedSigns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ExponentVec;
    use crate::wordtools::validate_word;
    use num_bigint::BigInt;

    #[test]
    fn a1() {
        let c = CartanData::new("A1".parse().unwrap());
        let w = validate_word(&c, &[1]).unwrap();
        let p = type_a_minor_poly(&c, &w, 1).unwrap();
        assert_eq!(
            p,
            LaurentPoly::monomial(ExponentVec(vec![1]), BigInt::from(1))
        );
    }

    #[test]
    fn chart_of_a1_is_the_block() {
        let c = CartanData::new("A1".parse().unwrap());
        let w = validate_word(&c, &[1]).unwrap();
        let m = chart_matrix(1, &w);
        assert_eq!(m[0][0], LaurentPoly::var_power(1, 1, -1));
        assert!(m[0][1].is_zero());
        assert_eq!(m[1][0], LaurentPoly::one(1));
        assert_eq!(m[1][1], LaurentPoly::var_power(1, 1, 1));
    }

    #[test]
    fn a2_support() {
        let c = CartanData::new("A2".parse().unwrap());
        let w = validate_word(&c, &[1, 2, 1]).unwrap();
        for i in 1..=2 {
            let p = type_a_minor_poly(&c, &w, i).unwrap();
            assert!(p.all_positive());
            let k = w.source_index(i);
            assert_eq!(p.coeff(&ExponentVec::unit(3, k)), BigInt::from(1));
        }
    }

    #[test]
    fn rejects_other_types() {
        let c = CartanData::new("B2".parse().unwrap());
        let w = validate_word(&c, &[1, 2, 1, 2]).unwrap();
        assert!(matches!(
            type_a_minor_poly(&c, &w, 1),
            Err(Error::NotTypeA(_))
        ));
    }
}
