use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use super::{squarefree_decompose, ExactError, QuadExt, Rational};

/// Univariate polynomial over a quadratic extension field, coefficients
/// stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<QuadExt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<QuadExt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(QuadExt::one())
    }

    pub fn constant(c: QuadExt) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `t`.
    pub fn var() -> Self {
        Poly::new(vec![QuadExt::zero(), QuadExt::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| QuadExt::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[QuadExt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QuadExt {
        self.coeffs.get(k).cloned().unwrap_or_else(QuadExt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&QuadExt> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn has_rational_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![QuadExt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn evaluate(&self, x: &QuadExt) -> QuadExt {
        let mut acc = QuadExt::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), ExactError> {
        if divisor.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().try_inv()?;
        let mut rem = self.clone();
        let mut quo = vec![QuadExt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap().try_mul(&lead_inv)?;
            let shift = rd - dd;
            quo[shift] = factor.clone();
            let mut sub = vec![QuadExt::zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c.try_mul(&factor)).collect::<Result<Vec<_>, _>>()?);
            rem = rem.sub(&Poly::new(sub));
        }
        Ok((Poly::new(quo), rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.try_inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &QuadExt::from_int(k as i64))
                .collect(),
        )
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.divrem(&g).unwrap();
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// For rational-coefficient polynomials: scales to integer coefficients
    /// with content 1 and positive leading coefficient.
    pub fn primitive_integer(&self) -> Self {
        if self.is_zero() || !self.has_rational_coeffs() {
            return self.clone();
        }
        let rats: Vec<&Rational> = self.coeffs.iter().map(|c| c.as_rational().unwrap()).collect();
        let mut den = BigInt::one();
        for r in &rats {
            den = num::integer::lcm(den, r.denom().clone());
        }
        let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&den / r.denom())).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = num::integer::gcd(g, v.clone());
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        Poly::new(
            ints.iter()
                .map(|v| QuadExt::from_rational(Rational::from(v / &g)))
                .collect(),
        )
    }

    /// All rational roots (each with multiplicity 1 in the returned list;
    /// intended for squarefree input), together with the deflated quotient.
    pub fn strip_rational_roots(&self) -> (Vec<Rational>, Poly) {
        let mut roots = vec![];
        let mut p = self.clone();
        if !p.has_rational_coeffs() {
            return (roots, p);
        }
        // root 0
        while !p.is_zero() && p.coeff(0).is_zero() && !p.is_constant() {
            roots.push(Rational::zero());
            p = Poly::new(p.coeffs[1..].to_vec());
        }
        loop {
            if p.degree().unwrap_or(0) == 0 {
                break;
            }
            let prim = p.primitive_integer();
            let a0 = prim.coeff(0).as_rational().unwrap().numer().clone();
            let an = prim.leading().unwrap().as_rational().unwrap().numer().clone();
            let mut found = None;
            'outer: for q in divisors(&a0) {
                for r in divisors(&an) {
                    for sign in [1i64, -1] {
                        let cand = Rational::new(&q * BigInt::from(sign), r.clone());
                        if p.evaluate(&QuadExt::from_rational(cand.clone())).is_zero() {
                            found = Some(cand);
                            break 'outer;
                        }
                    }
                }
            }
            match found {
                None => break,
                Some(root) => {
                    let lin = Poly::new(vec![
                        QuadExt::from_rational(-&root),
                        QuadExt::one(),
                    ]);
                    let (q, r) = p.divrem(&lin).unwrap();
                    debug_assert!(r.is_zero());
                    roots.push(root);
                    p = q;
                }
            }
        }
        (roots, p)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut out = vec![];
    let mut k = BigInt::one();
    while &k * &k <= n {
        if (&n % &k).is_zero() {
            out.push(k.clone());
            out.push(&n / &k);
        }
        k += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Roots of a degree-1 or degree-2 polynomial with rational coefficients,
/// expressed in `Q(sqrt(D))` with `D` the squarefree part of the
/// discriminant. Returns the root list (with multiplicities) and `D`.
pub fn poly_roots_quadratic(p: &Poly) -> Result<(Vec<(QuadExt, usize)>, i64), ExactError> {
    if !p.has_rational_coeffs() {
        return Err(ExactError::Parse("irrational coefficients".into()));
    }
    match p.degree() {
        Some(1) => {
            let root = -p.coeff(0).as_rational().unwrap() / p.coeff(1).as_rational().unwrap();
            Ok((vec![(QuadExt::from_rational(root), 1)], 1))
        }
        Some(2) => {
            let a = p.coeff(2).as_rational().unwrap().clone();
            let b = p.coeff(1).as_rational().unwrap().clone();
            let c = p.coeff(0).as_rational().unwrap().clone();
            let disc: BigRational = &b * &b - BigRational::from(BigInt::from(4)) * &a * &c;
            let center = -&b / (BigRational::from(BigInt::from(2)) * &a);
            if disc.is_zero() {
                return Ok((vec![(QuadExt::from_rational(center), 2)], 1));
            }
            // sqrt(n/m) = sqrt(n*m)/m
            let nm = disc.numer() * disc.denom();
            let (s, d0) = squarefree_decompose(&nm)?;
            let d_signed = if nm.is_negative() { -&d0 } else { d0.clone() };
            let d: i64 = (&d_signed)
                .try_into()
                .map_err(|_| ExactError::DiscriminantTooLarge)?;
            let half_width =
                Rational::new(s, disc.denom().clone()) / (BigRational::from(BigInt::from(2)) * &a);
            if d == 1 {
                let sq = QuadExt::from_rational(half_width);
                let center = QuadExt::from_rational(center);
                return Ok((
                    vec![(&center + &sq, 1), (&center - &sq, 1)],
                    1,
                ));
            }
            let r1 = QuadExt::new(center.clone(), half_width.clone(), d)?;
            let r2 = QuadExt::new(center, -half_width, d)?;
            Ok((vec![(r1, 1), (r2, 1)], d))
        }
        Some(n) => Err(ExactError::UnsupportedDegree(n)),
        None => Err(ExactError::UnsupportedDegree(0)),
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}
