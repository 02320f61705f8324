//! Sparse multivariate polynomials with rational coefficients, used for
//! parameterized line coordinates during moduli reconstruction.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::exact::{ExactError, Poly, QuadExt, Rational};

/// A polynomial in `nvars` formal parameters over the rationals, stored
/// as exponent-vector -> coefficient with no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MvPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Rational>,
}

impl MvPoly {
    pub fn zero(nvars: usize) -> Self {
        MvPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        MvPoly { nvars, terms }
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        MvPoly::constant(nvars, Rational::from(BigInt::from(c)))
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        assert!(j < nvars);
        let mut exp = vec![0; nvars];
        exp[j] = 1;
        MvPoly { nvars, terms: BTreeMap::from([(exp, Rational::one())]) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    fn insert(&mut self, exp: Vec<u16>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MvPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MvPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(exp, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MvPoly::zero(self.nvars);
        }
        MvPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Variables that actually occur.
    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&j| self.terms.keys().any(|e| e[j] > 0))
            .collect()
    }

    pub fn degree_in(&self, j: usize) -> usize {
        self.terms.keys().map(|e| e[j] as usize).max().unwrap_or(0)
    }

    /// Exact evaluation at a point with coordinates in one quadratic field.
    pub fn eval_quad(&self, point: &[QuadExt]) -> Result<QuadExt, ExactError> {
        assert_eq!(point.len(), self.nvars);
        let mut acc = QuadExt::zero();
        for (e, c) in &self.terms {
            let mut term = QuadExt::from_rational(c.clone());
            for (j, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = term.try_mul(&point[j])?;
                }
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    pub fn eval_rational(&self, point: &[Rational]) -> Rational {
        let quads: Vec<QuadExt> = point.iter().cloned().map(QuadExt::from_rational).collect();
        self.eval_quad(&quads)
            .expect("rational evaluation cannot mix fields")
            .as_rational()
            .expect("rational evaluation stays rational")
            .clone()
    }

    /// Views the polynomial as univariate in variable `j`; requires that
    /// no other variable occurs. Coefficients lowest degree first.
    pub fn to_univariate(&self, j: usize) -> Option<Poly> {
        if self.vars_used().iter().any(|&v| v != j) {
            return None;
        }
        let deg = self.degree_in(j);
        let mut coeffs = vec![QuadExt::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[j] as usize] = QuadExt::from_rational(c.clone());
        }
        Some(Poly::new(coeffs))
    }

    /// Coefficients of the polynomial viewed as univariate in `j`, each a
    /// polynomial in the remaining variables; lowest degree first.
    pub fn coeffs_in_var(&self, j: usize) -> Vec<MvPoly> {
        let deg = self.degree_in(j);
        let mut out = vec![MvPoly::zero(self.nvars); deg + 1];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[j] as usize;
            rest[j] = 0;
            out[k].insert(rest, c.clone());
        }
        out
    }

    /// Substitutes variable `j` by a rational constant.
    pub fn substitute(&self, j: usize, value: &Rational) -> MvPoly {
        let mut out = MvPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[j] as usize;
            rest[j] = 0;
            let mut factor = c.clone();
            for _ in 0..k {
                factor *= value;
            }
            out.insert(rest, factor);
        }
        out
    }

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient (in the term order), for canonical comparison.
    pub fn primitive(&self) -> MvPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = num::integer::lcm(den, c.denom().clone());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num::integer::gcd(g, c.numer() * (&den / c.denom()));
        }
        let last_sign_neg = self
            .terms
            .iter()
            .next_back()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if last_sign_neg {
            g = -g;
        }
        let factor = Rational::new(den, g);
        self.scale(&factor)
    }
}

impl fmt::Debug for MvPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (j, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*t{j}")?,
                    _ => write!(f, "*t{j}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Cross product of two coordinate triples.
pub fn cross3(a: &[MvPoly; 3], b: &[MvPoly; 3]) -> [MvPoly; 3] {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

/// Determinant of three coordinate triples.
pub fn det3(a: &[MvPoly; 3], b: &[MvPoly; 3], c: &[MvPoly; 3]) -> MvPoly {
    let cr = cross3(b, c);
    a[0].mul(&cr[0]).add(&a[1].mul(&cr[1])).add(&a[2].mul(&cr[2]))
}

/// True iff the two triples are proportional as polynomials (represent
/// the same projective point identically in the parameters).
pub fn proportional(a: &[MvPoly; 3], b: &[MvPoly; 3]) -> bool {
    cross3(a, b).iter().all(MvPoly::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn r(n: i64) -> Rational {
        Rational::from(BigInt::from(n))
    }

    #[test]
    fn arithmetic_and_eval() {
        let t0 = MvPoly::var(2, 0);
        let t1 = MvPoly::var(2, 1);
        // p = t0*t1 + 2*t0 - 3
        let p = t0.mul(&t1).add(&t0.scale(&r(2))).sub(&MvPoly::from_int(2, 3));
        assert_eq!(p.eval_rational(&[r(5), r(1)]), r(12));
        assert_eq!(p.vars_used(), vec![0, 1]);
        assert_eq!(p.degree_in(0), 1);
    }

    #[test]
    fn univariate_view() {
        let t0 = MvPoly::var(2, 0);
        let p = t0.mul(&t0).sub(&MvPoly::from_int(2, 1));
        let u = p.to_univariate(0).unwrap();
        assert_eq!(u.degree(), Some(2));
        let t1 = MvPoly::var(2, 1);
        assert!(p.mul(&t1).to_univariate(0).is_none());
    }

    #[test]
    fn coeffs_and_substitute() {
        let t0 = MvPoly::var(2, 0);
        let t1 = MvPoly::var(2, 1);
        // p = t0*t1^2 + (t0^2 + 2 t0) t1
        let p = t0
            .mul(&t1.mul(&t1))
            .add(&t0.mul(&t0).add(&t0.scale(&r(2))).mul(&t1));
        let coeffs = p.coeffs_in_var(1);
        assert_eq!(coeffs.len(), 3);
        assert!(coeffs[0].is_zero());
        assert_eq!(coeffs[2], t0);
        let q = p.substitute(0, &r(1));
        // q = t1^2 + 3 t1
        assert_eq!(q.eval_rational(&[r(0), r(2)]), r(10));
    }

    #[test]
    fn cross_and_det() {
        let c = |n: i64| MvPoly::from_int(1, n);
        let a = [c(1), c(0), c(0)];
        let b = [c(0), c(1), c(0)];
        let d = [c(0), c(0), c(1)];
        assert_eq!(det3(&a, &b, &d), MvPoly::from_int(1, 1));
        assert!(proportional(&a, &[c(2), c(0), c(0)]));
        assert!(!proportional(&a, &b));
    }
}
