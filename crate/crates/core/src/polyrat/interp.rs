use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::Zero;

use super::Poly;
use crate::error::{Error, Result};

/// Interpolating polynomial of degree at most `degree_bound` through
/// `points`. Uses Newton divided differences over all supplied points; if
/// the unique interpolant of the full point set exceeds the bound, the
/// points are inconsistent with it and an error is returned.
pub fn lagrange_interpolate(points: &[(BigRational, BigRational)], degree_bound: usize) -> Result<Poly> {
    if points.len() < degree_bound + 1 {
        return Err(Error::TooFewPoints {
            needed: degree_bound + 1,
            got: points.len(),
        });
    }
    let mut seen = HashSet::new();
    for (x, _) in points {
        if !seen.insert(x) {
            return Err(Error::DuplicateAbscissa(x.to_string()));
        }
    }

    let n = points.len();
    let xs: Vec<&BigRational> = points.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            dd[i] = if num.is_zero() {
                BigRational::zero()
            } else {
                num / (xs[i] - xs[i - level])
            };
        }
    }

    // Horner on the Newton form: p = dd0 + (x−x0)(dd1 + (x−x1)(dd2 + …))
    let mut p = Poly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = &(&p * &Poly::linear_root(xs[i])) + &Poly::constant(dd[i].clone());
    }
    if p.degree().is_some_and(|d| d > degree_bound) {
        return Err(Error::DegreeBoundExceeded(degree_bound));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrat::poly::rat;

    fn pts(v: &[(i64, i64)]) -> Vec<(BigRational, BigRational)> {
        v.iter().map(|&(x, y)| (rat(x), rat(y))).collect()
    }

    #[test]
    fn constant() {
        assert_eq!(lagrange_interpolate(&pts(&[(0, 1), (1, 1)]), 1).unwrap(), Poly::one());
    }

    #[test]
    fn square() {
        assert_eq!(
            lagrange_interpolate(&pts(&[(0, 0), (1, 1), (2, 4)]), 2).unwrap(),
            Poly::from_i64s(&[0, 0, 1])
        );
    }

    #[test]
    fn overdetermined_quadratic() {
        assert_eq!(
            lagrange_interpolate(&pts(&[(0, -1), (1, 0), (-1, 0), (2, 3)]), 3).unwrap(),
            Poly::from_i64s(&[-1, 0, 1])
        );
    }

    #[test]
    fn duplicate_abscissa() {
        assert!(matches!(
            lagrange_interpolate(&pts(&[(0, 1), (0, 2)]), 1),
            Err(Error::DuplicateAbscissa(_))
        ));
    }

    #[test]
    fn bound_violation_detected() {
        assert_eq!(
            lagrange_interpolate(&pts(&[(0, 0), (1, 1), (2, 4)]), 1),
            Err(Error::DegreeBoundExceeded(1))
        );
        assert!(matches!(
            lagrange_interpolate(&pts(&[(0, 0)]), 1),
            Err(Error::TooFewPoints { .. })
        ));
    }
}
