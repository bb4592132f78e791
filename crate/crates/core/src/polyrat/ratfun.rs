use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::Poly;
use crate::error::{Error, Result};

/// Reduced quotient of two polynomials.
///
/// Invariants: the denominator is nonzero and monic, numerator and
/// denominator are coprime, and zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Normalizes `num/den`: cancels the gcd and makes the denominator monic.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lc_inv = den.leading().expect("nonzero").recip();
        Ok(Self {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Value at a point that is not a pole.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(x) / d)
    }

    /// True when `deg num < deg den`.
    pub fn is_proper(&self) -> bool {
        self.num.degree() < self.den.degree()
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero den")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero den")
    }
}

impl Div for &RatFun {
    type Output = Result<RatFun>;
    fn div(self, rhs: &RatFun) -> Result<RatFun> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrat::poly::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn cancels_common_factor() {
        let r = RatFun::new(p(&[2, 2]), p(&[-1, 0, 1])).unwrap();
        assert_eq!(r.num(), &p(&[2]));
        assert_eq!(r.den(), &p(&[-1, 1]));
    }

    #[test]
    fn zero_is_canonical() {
        let r = RatFun::new(Poly::zero(), p(&[5, 0, 0, 1])).unwrap();
        assert_eq!(r, RatFun::zero());
        assert_eq!(r.den(), &Poly::one());
    }

    #[test]
    fn monic_scaling() {
        let r = RatFun::new(p(&[0, 3]), p(&[-3, 0, 3])).unwrap();
        assert_eq!(r.num(), &p(&[0, 1]));
        assert_eq!(r.den(), &p(&[-1, 0, 1]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFun::new(p(&[1]), Poly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn normalization_is_idempotent() {
        let r = RatFun::new(p(&[6, 4, -2]), p(&[-6, 0, 4, 2])).unwrap();
        let again = RatFun::new(r.num().clone(), r.den().clone()).unwrap();
        assert_eq!(r, again);
        assert!(r.den().is_monic());
        assert_eq!(r.num().gcd(r.den()), Poly::one());
    }

    #[test]
    fn field_operations() {
        let a = RatFun::new(p(&[1]), p(&[0, 1])).unwrap(); // 1/x
        let b = RatFun::new(p(&[1]), p(&[1, 1])).unwrap(); // 1/(x+1)
        let s = &a + &b;
        assert_eq!(s, RatFun::new(p(&[1, 2]), p(&[0, 1, 1])).unwrap());
        assert_eq!(&s - &b, a);
        assert_eq!((&(&a * &b) / &b).unwrap(), a);
        assert_eq!(a.eval(&rat(2)).unwrap(), BigRational::new(1.into(), 2.into()));
    }
}
