//! Fraction-free exact linear algebra over the rationals: rank and
//! determinant via Bareiss elimination on denominator-cleared integer rows,
//! with deterministic pivoting (first nonzero in column order).

use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Multiply each row by the LCM of its denominators. Row scaling does not
/// change the rank, and for determinants the scale factors are returned.
pub(crate) fn clear_denominators(rows: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut cleared = Vec::with_capacity(rows.len());
    let mut scales = Vec::with_capacity(rows.len());
    for row in rows {
        let mut lcm = BigInt::one();
        for x in row {
            lcm = lcm.lcm(x.denom());
        }
        cleared.push(
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect(),
        );
        scales.push(lcm);
    }
    (cleared, scales)
}

/// Rank of an integer matrix by fraction-free Bareiss elimination.
pub(crate) fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        for i in row + 1..rows {
            for j in col + 1..cols {
                let t = &m[i][j] * &m[row][col] - &m[i][col] * &m[row][j];
                m[i][j] = t / &prev; // exact by Sylvester's identity
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Determinant of a square rational matrix by Bareiss elimination after
/// clearing denominators row by row.
pub(crate) fn det_rational(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let (mut m, scales) = clear_denominators(rows);
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(col, pivot);
            sign = -sign;
        }
        for i in col + 1..n {
            for j in col + 1..n {
                let t = &m[i][j] * &m[col][col] - &m[i][col] * &m[col][j];
                m[i][j] = t / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[col][col].clone();
    }
    let det_int = sign * prev;
    let mut scale = BigInt::one();
    for s in scales {
        scale *= s;
    }
    Rational::new(det_int, scale)
}

/// Absolute value helper for reporting.
pub(crate) fn abs(x: &Rational) -> Rational {
    if x.is_negative() {
        -x.clone()
    } else {
        x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(bareiss_rank(int_matrix(&[&[1, 0], &[1, 1]])), 2);
        assert_eq!(bareiss_rank(int_matrix(&[&[1, 4], &[1, 6]])), 2);
        let zeros: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); 5]; 3];
        assert_eq!(bareiss_rank(zeros), 0);
        assert_eq!(bareiss_rank(int_matrix(&[&[1, 2], &[2, 4], &[3, 6]])), 1);
        assert_eq!(
            bareiss_rank(int_matrix(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])),
            2
        );
        assert_eq!(bareiss_rank(Vec::new()), 0);
    }

    #[test]
    fn determinant_cases() {
        let m = vec![vec![rat(1), rat(4)], vec![rat(1), rat(6)]];
        assert_eq!(det_rational(&m), rat(2));
        let m = vec![
            vec![ratio(1, 2), rat(0)],
            vec![rat(7), ratio(2, 3)],
        ];
        assert_eq!(det_rational(&m), ratio(1, 3));
        let singular = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(det_rational(&singular), rat(0));
        // swap-sensitive pivoting keeps the sign
        let m = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
        assert_eq!(det_rational(&m), rat(-1));
    }
}
