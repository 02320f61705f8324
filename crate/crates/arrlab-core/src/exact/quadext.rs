use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::{is_valid_field_d, join_field, ExactError};

/// Arbitrary-precision rational; always stored reduced with a positive
/// denominator (the backing type guarantees both).
pub type Rational = BigRational;

/// Element `a + b*sqrt(d)` of a quadratic extension of the rationals.
///
/// `d` is a squarefree integer fixed per arithmetic context; `d = 1`
/// denotes the rational field itself. Canonical form sets `d = 1`
/// whenever the radical part vanishes, so rational values compare equal
/// across contexts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: i64,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<Self, ExactError> {
        if !is_valid_field_d(d) {
            return Err(ExactError::NotSquarefree(d));
        }
        if d == 1 && !b.is_zero() {
            return Err(ExactError::RadicalInRationalField);
        }
        Ok(Self::make(a, b, d))
    }

    /// Internal constructor; canonicalizes `b = 0` to `d = 1`.
    fn make(a: Rational, b: Rational, d: i64) -> Self {
        if b.is_zero() {
            QuadExt { a, b, d: 1 }
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self::make(a, Rational::zero(), 1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_d(d: i64) -> Result<Self, ExactError> {
        QuadExt::new(Rational::zero(), Rational::one(), d)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn field_d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        let d = join_field(self.d, other.d)?;
        Ok(Self::make(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        let d = join_field(self.d, other.d)?;
        Ok(Self::make(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let d = join_field(self.d, other.d)?;
        let rad = Rational::from(BigInt::from(d));
        let a = &self.a * &other.a + &(&self.b * &other.b) * &rad;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::make(a, b, d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ExactError> {
        let inv = other.try_inv()?;
        self.try_mul(&inv)
    }

    /// Multiplicative inverse via the conjugate and the field norm
    /// `a^2 - d b^2`.
    pub fn try_inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let rad = Rational::from(BigInt::from(self.d));
        let norm = &self.a * &self.a - &(&self.b * &self.b) * &rad;
        // norm = 0 with nonzero element would mean d is a square
        debug_assert!(!norm.is_zero());
        Ok(Self::make(&self.a / &norm, -&self.b / &norm, self.d))
    }

    /// Galois conjugation `sqrt(d) -> -sqrt(d)`; fixes rationals.
    pub fn conjugate(&self) -> Self {
        Self::make(self.a.clone(), -&self.b, self.d)
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.try_add(rhs).expect("mixed quadratic fields")
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.try_sub(rhs).expect("mixed quadratic fields")
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.try_mul(rhs).expect("mixed quadratic fields")
    }
}

impl Div for &QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &QuadExt) -> QuadExt {
        self.try_div(rhs).expect("mixed quadratic fields or zero divisor")
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::make(-&self.a, -&self.b, self.d)
    }
}

pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt, ExactError> {
        t.parse::<BigInt>().map_err(|_| ExactError::Parse(t.to_string()))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
        None => Ok(Rational::from(parse_int(s)?)),
    }
}

/// Rendering: `a+b*sqrt(d)` with rationals written `p/q`; rational values
/// render as a bare rational. Parse with [`QuadExt::parse`].
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", render_rational(&self.a));
        }
        let radical = format!("{}*sqrt({})", render_rational(&self.b.abs()), self.d);
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{radical}")
            } else {
                write!(f, "{radical}")
            }
        } else {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{}{sign}{radical}", render_rational(&self.a))
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl QuadExt {
    /// Parses the textual rendering back, bit-exactly.
    pub fn parse(s: &str) -> Result<Self, ExactError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ExactError::Parse(s));
        }
        match s.find("sqrt(") {
            None => Ok(Self::from_rational(parse_rational(&s)?)),
            Some(_) => {
                // split off the radical term: [a {+|-}] [b*] sqrt(d)
                let (head, tail) = s.split_at(s.find("sqrt(").unwrap());
                let d_str = tail
                    .strip_prefix("sqrt(")
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| ExactError::Parse(s.clone()))?;
                let d: i64 = d_str.parse().map_err(|_| ExactError::Parse(s.clone()))?;
                // head is like "", "-", "b*", "-b*", "a+b*", "a-b*", "a+", "a-"
                let (a_str, b_str) = match head.rfind(['+', '-']) {
                    Some(pos) if pos > 0 => (&head[..pos], &head[pos..]),
                    _ => ("", head),
                };
                let a = if a_str.is_empty() {
                    Rational::zero()
                } else {
                    parse_rational(a_str)?
                };
                let b_core = b_str.strip_suffix('*').unwrap_or(b_str);
                let b = match b_core {
                    "" | "+" => Rational::one(),
                    "-" => -Rational::one(),
                    t => {
                        let t = t.strip_prefix('+').unwrap_or(t);
                        parse_rational(t)?
                    }
                };
                QuadExt::new(a, b, d)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma_plus() -> QuadExt {
        QuadExt::new(Rational::new(1.into(), 2.into()), Rational::new(1.into(), 2.into()), 5)
            .unwrap()
    }

    fn gamma_minus() -> QuadExt {
        QuadExt::new(Rational::new(1.into(), 2.into()), Rational::new((-1).into(), 2.into()), 5)
            .unwrap()
    }

    #[test]
    fn golden_ratio_product() {
        // ((1+sqrt5)/2)((1-sqrt5)/2) = -1
        let p = &gamma_plus() * &gamma_minus();
        assert_eq!(p, QuadExt::from_int(-1));
    }

    #[test]
    fn additive_identity() {
        let x = gamma_plus();
        assert_eq!(&x + &QuadExt::zero(), x);
    }

    #[test]
    fn maclane_parameter_satisfies_quadratic() {
        // w = (1+sqrt(-3))/2 satisfies w^2 - w + 1 = 0
        let w = QuadExt::new(
            Rational::new(1.into(), 2.into()),
            Rational::new(1.into(), 2.into()),
            -3,
        )
        .unwrap();
        let v = &(&(&w * &w) - &w) + &QuadExt::one();
        assert!(v.is_zero());
    }

    #[test]
    fn conjugation_involution_and_paper_pair() {
        let w = QuadExt::new(
            Rational::new(1.into(), 2.into()),
            Rational::new(1.into(), 2.into()),
            -3,
        )
        .unwrap();
        let wc = w.conjugate();
        assert_eq!(wc.radical_part(), &Rational::new((-1).into(), 2.into()));
        assert_eq!(wc.conjugate(), w);
        let five = QuadExt::from_int(5);
        assert_eq!(five.conjugate(), five);
    }

    #[test]
    fn mixed_field_rejected() {
        let x = QuadExt::sqrt_d(5).unwrap();
        let y = QuadExt::sqrt_d(-3).unwrap();
        assert!(matches!(x.try_add(&y), Err(ExactError::MixedField(5, -3))));
    }

    #[test]
    fn division_by_zero() {
        let x = gamma_plus();
        assert!(matches!(x.try_div(&QuadExt::zero()), Err(ExactError::DivisionByZero)));
    }

    #[test]
    fn rational_coerces_into_any_field() {
        let x = gamma_plus();
        let two = QuadExt::from_int(2);
        let y = &x * &two;
        assert_eq!(y, QuadExt::new(Rational::one(), Rational::one(), 5).unwrap());
    }

    #[test]
    fn render_parse_round_trip() {
        for s in [
            "1/2+1/2*sqrt(5)",
            "1/2-1/2*sqrt(-3)",
            "-3",
            "0",
            "7/3",
            "-1*sqrt(-1)",
            "2*sqrt(5)",
        ] {
            let v = QuadExt::parse(s).unwrap();
            assert_eq!(QuadExt::parse(&v.to_string()).unwrap(), v, "round trip of {s}");
        }
        assert_eq!(QuadExt::parse("1/2+1/2*sqrt(5)").unwrap(), gamma_plus());
    }

    #[test]
    fn radical_canonicalizes_to_rational_field() {
        let x = QuadExt::new(Rational::from(BigInt::from(3)), Rational::zero(), 5).unwrap();
        assert_eq!(x.field_d(), 1);
        assert_eq!(x, QuadExt::from_int(3));
    }
}
