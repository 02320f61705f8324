use std::fmt;

use super::{ExactError, Poly, QuadExt};

/// Rational function in one variable over a quadratic extension field,
/// kept in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.divrem(&g)?.0, den.divrem(&g)?.0)
        };
        let lead_inv = den.leading().unwrap().try_inv()?;
        Ok(RatFun {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn constant(c: QuadExt) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        RatFun::from_poly(Poly::var())
    }

    pub fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == Poly::one()
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        RatFun::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        RatFun::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        RatFun::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        RatFun::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        RatFun::one().div(self)
    }

    pub fn evaluate(&self, x: &QuadExt) -> Result<QuadExt, ExactError> {
        let d = self.den.evaluate(x);
        if d.is_zero() {
            return Err(ExactError::PoleAtEvaluationPoint);
        }
        self.num.evaluate(x).try_div(&d)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?}) / ({:?})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        // (t^2 - 1)/(t - 1) = t + 1
        let f = RatFun::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-1, 1])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.numerator(), &Poly::from_ints(&[1, 1]));
    }

    #[test]
    fn monic_denominator() {
        // 1/(2t) normalizes to (1/2)/t
        let f = RatFun::new(Poly::one(), Poly::from_ints(&[0, 2])).unwrap();
        assert_eq!(f.denominator(), &Poly::var());
        assert_eq!(
            f.numerator().coeff(0),
            QuadExt::from_ratio(1, 2)
        );
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let t = RatFun::var();
        // f = t/(t+1)
        let f = t.div(&t.add(&RatFun::one()).unwrap()).unwrap();
        let g = f.add(&f).unwrap();
        let x = QuadExt::from_int(1);
        assert_eq!(g.evaluate(&x).unwrap(), QuadExt::one());
        // pole at t = -1
        assert!(matches!(
            f.evaluate(&QuadExt::from_int(-1)),
            Err(ExactError::PoleAtEvaluationPoint)
        ));
    }

    #[test]
    fn division_by_zero_rejected() {
        assert!(matches!(
            RatFun::new(Poly::one(), Poly::zero()),
            Err(ExactError::DivisionByZero)
        ));
        assert!(matches!(
            RatFun::one().div(&RatFun::zero()),
            Err(ExactError::DivisionByZero)
        ));
    }
}
