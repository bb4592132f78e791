use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{lagrange_interpolate, poly::rat, Poly, PolyMatrix};
use crate::error::Result;
use crate::exec::Strategy;

/// Evaluation points 0, 1, −1, 2, −2, …
pub fn evaluation_point(k: usize) -> BigRational {
    let h = k.div_ceil(2) as i64;
    if k % 2 == 1 {
        rat(h)
    } else {
        rat(-h)
    }
}

/// Exact determinant of a square polynomial matrix by evaluation at
/// `D + 1` points followed by interpolation, where `D` is the sum over rows
/// of the largest entry degree.
pub fn polymatrix_det(m: &PolyMatrix) -> Result<Poly> {
    polymatrix_det_with(m, Strategy::default())
}

pub fn polymatrix_det_with(m: &PolyMatrix, strategy: Strategy) -> Result<Poly> {
    let n = m.ensure_square()?;
    if n == 0 {
        return Ok(Poly::one());
    }
    let Some(bound) = m.row_degree_bound() else {
        return Ok(Poly::zero());
    };
    let points: Vec<BigRational> = (0..=bound).map(evaluation_point).collect();
    let values = strategy.map(&points, |x| {
        let rows: Vec<Vec<BigRational>> = (0..n)
            .map(|i| m.row(i).iter().map(|p| p.eval(x)).collect())
            .collect();
        rational_det(rows)
    });
    let samples: Vec<(BigRational, BigRational)> = points.into_iter().zip(values).collect();
    lagrange_interpolate(&samples, bound)
}

/// Determinant of a rational matrix: rows are scaled to integers, then
/// eliminated fraction-free.
pub fn rational_det(rows: Vec<Vec<BigRational>>) -> BigRational {
    let mut scale = BigInt::one();
    let ints: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            scale *= &l;
            row.into_iter()
                .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    BigRational::new(bareiss_det(ints), scale)
}

/// Bareiss fraction-free elimination with row swaps on zero pivots.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn point_sequence() {
        let pts: Vec<BigRational> = (0..5).map(evaluation_point).collect();
        assert_eq!(pts, vec![rat(0), rat(1), rat(-1), rat(2), rat(-2)]);
    }

    #[test]
    fn two_by_two() {
        let m = PolyMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[1]), p(&[0, 1])]]).unwrap();
        assert_eq!(polymatrix_det(&m).unwrap(), p(&[-1, 0, 1]));
    }

    #[test]
    fn one_by_one() {
        let q = p(&[3, -1, 0, 5]);
        let m = PolyMatrix::from_rows(vec![vec![q.clone()]]).unwrap();
        assert_eq!(polymatrix_det(&m).unwrap(), q);
    }

    #[test]
    fn degree_drop() {
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[0, 1]), p(&[1, 1])],
            vec![p(&[-1, 1]), p(&[0, 1])],
        ])
        .unwrap();
        assert_eq!(polymatrix_det(&m).unwrap(), Poly::one());
    }

    #[test]
    fn zero_row() {
        let m = PolyMatrix::from_rows(vec![vec![Poly::zero(), Poly::zero()], vec![p(&[1]), p(&[2])]]).unwrap();
        assert_eq!(polymatrix_det(&m).unwrap(), Poly::zero());
    }

    #[test]
    fn bareiss_with_swap() {
        let a = vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(bareiss_det(a), BigInt::from(-1));
        let half = BigRational::new(1.into(), 2.into());
        let d = rational_det(vec![vec![half.clone(), rat(1)], vec![rat(1), half]]);
        assert_eq!(d, BigRational::new((-3).into(), 4.into()));
    }
}
