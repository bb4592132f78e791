use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::polyrat::Poly;

/// An approximate root for display. `exact` is set when a rational
/// candidate was confirmed by exact evaluation; its multiplicity then comes
/// from repeated exact division.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub value: f64,
    pub imag: f64,
    pub multiplicity: usize,
    pub exact: Option<BigRational>,
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let fields = if self.imag == 0.0 { 2 } else { 3 };
        let mut st = s.serialize_struct("Root", fields)?;
        st.serialize_field("value", &self.value)?;
        if self.imag != 0.0 {
            st.serialize_field("imag", &self.imag)?;
        }
        st.serialize_field("mult", &self.multiplicity)?;
        st.end()
    }
}

/// Roots of a nonzero polynomial, sorted by real then imaginary part.
/// Roots with |imag| below `tol` are reported as real.
pub fn numeric_roots(p: &Poly, tol: f64) -> Vec<Root> {
    let mut out = Vec::new();
    let Some(deg) = p.degree() else { return out };
    if deg == 0 {
        return out;
    }
    for (k, factor) in square_free(p).into_iter().enumerate() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        for z in aberth(&factor, tol) {
            let imag = if z.im.abs() < tol.max(1e-9) { 0.0 } else { z.im };
            let exact = if imag == 0.0 { rational_guess(&factor, z.re) } else { None };
            let (value, multiplicity) = match &exact {
                Some(r) => (r.to_f64().unwrap_or(z.re), p.root_multiplicity(r)),
                None => (z.re, k + 1),
            };
            out.push(Root { value, imag, multiplicity, exact });
        }
    }
    out.sort_by(|a, b| a.value.total_cmp(&b.value).then(a.imag.total_cmp(&b.imag)));
    out
}

/// Yun's decomposition: entry `k` is the product of the irreducible factors
/// of multiplicity `k + 1`.
fn square_free(p: &Poly) -> Vec<Poly> {
    let p = p.monic();
    let d = p.derivative();
    let a = p.gcd(&d).monic();
    let mut b = p.div_exact(&a).expect("gcd divides");
    let mut c = d.div_exact(&a).expect("gcd divides");
    let mut out = Vec::new();
    loop {
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        let diff = &c - &b.derivative();
        let g = b.gcd(&diff).monic();
        out.push(g.clone());
        b = b.div_exact(&g).expect("gcd divides");
        c = diff.div_exact(&g).expect("gcd divides");
    }
    out
}

fn aberth(p: &Poly, tol: f64) -> Vec<Complex64> {
    let coeffs: Vec<Complex64> = p.monic().to_f64_coeffs().into_iter().map(|c| Complex64::new(c, 0.0)).collect();
    let n = coeffs.len() - 1;
    if n == 1 {
        return vec![-coeffs[0]];
    }
    let deriv: Vec<Complex64> = (1..=n).map(|i| coeffs[i] * i as f64).collect();
    let eval = |cs: &[Complex64], z: Complex64| cs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c);
    // Cauchy bound for the starting circle
    let radius = 1.0 + coeffs[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let ratio = eval(&coeffs, z[i]) / eval(&deriv, z[i]);
            if !ratio.is_finite() {
                continue;
            }
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < tol * 1e-3 {
            break;
        }
    }
    z
}

/// Continued-fraction convergents of `x` with small denominators, accepted
/// only if they are exact roots.
fn rational_guess(p: &Poly, x: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (BigInt::from(0), BigInt::from(1));
    let (mut k0, mut k1) = (BigInt::from(1), BigInt::from(0));
    let mut r = x;
    for _ in 0..12 {
        let a = r.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        let cand = BigRational::new(h2.clone(), k2.clone());
        if p.eval(&cand).is_zero() {
            return Some(cand);
        }
        if k2 > BigInt::from(1_000_000) {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = r - a;
        if frac.abs() < 1e-12 {
            break;
        }
        r = 1.0 / frac;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrat::rational;

    fn values(rs: &[Root]) -> Vec<(f64, usize)> {
        rs.iter().map(|r| (r.value, r.multiplicity)).collect()
    }

    #[test]
    fn simple_and_repeated() {
        assert_eq!(values(&numeric_roots(&Poly::from_i64s(&[-1, 0, 1]), 1e-9)), vec![(-1.0, 1), (1.0, 1)]);
        let cube = Poly::from_i64s(&[1, 1]).pow(3);
        let rs = numeric_roots(&cube, 1e-9);
        assert_eq!(values(&rs), vec![(-1.0, 3)]);
        assert_eq!(rs[0].exact, Some(rational(-1)));
    }

    #[test]
    fn mixed_multiplicities() {
        // (x − 2)²(x + 1/2)(x² − 2)
        let p = &(&Poly::from_i64s(&[-2, 1]).pow(2) * &Poly::new(vec![BigRational::new(1.into(), 2.into()), rational(1)]))
            * &Poly::from_i64s(&[-2, 0, 1]);
        let rs = numeric_roots(&p, 1e-9);
        assert_eq!(rs.len(), 4);
        assert!((rs[0].value + 2f64.sqrt()).abs() < 1e-9 && rs[0].exact.is_none());
        assert_eq!((rs[1].value, rs[1].multiplicity), (-0.5, 1));
        assert_eq!((rs[3].value, rs[3].multiplicity), (2.0, 2));
    }

    #[test]
    fn complex_roots_kept() {
        let rs = numeric_roots(&Poly::from_i64s(&[1, 0, 1]), 1e-9);
        assert_eq!(rs.len(), 2);
        assert!(rs.iter().all(|r| r.value.abs() < 1e-9 && (r.imag.abs() - 1.0).abs() < 1e-9));
    }

    #[test]
    fn json_shape() {
        let rs = numeric_roots(&Poly::from_i64s(&[-1, 1]), 1e-9);
        assert_eq!(serde_json::to_string(&rs).unwrap(), r#"[{"value":1.0,"mult":1}]"#);
    }
}
