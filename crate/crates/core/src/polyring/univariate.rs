//! Dense exact univariate polynomials: the representation the Sturm and
//! Routh machinery works on.

use super::{Monomial, Poly, VarId};
use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Zero};
use std::fmt;

/// Univariate polynomial with exact rational coefficients, constant term
/// first; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UnivariatePoly {
    coeffs: Vec<BigRational>,
}

impl UnivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::ops::rational_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Euclidean remainder of `self` by `rhs` (rhs nonzero).
    pub fn rem(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero());
        let mut r = self.clone();
        let dlead = rhs.leading().unwrap().clone();
        while !r.is_zero() && r.coeffs.len() >= rhs.coeffs.len() {
            let shift = r.coeffs.len() - rhs.coeffs.len();
            let f = r.leading().unwrap() / &dlead;
            for i in 0..rhs.coeffs.len() {
                let delta = &rhs.coeffs[i] * &f;
                r.coeffs[shift + i] -= delta;
            }
            r.trim();
        }
        r
    }

    /// Monic gcd (1 for coprime inputs; zero only if both are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
            // normalize to keep coefficient growth down
            if let Some(lc) = b.leading().cloned() {
                for c in b.coeffs.iter_mut() {
                    *c /= &lc;
                }
            }
        }
        if let Some(lc) = a.leading().cloned() {
            for c in a.coeffs.iter_mut() {
                *c /= &lc;
            }
        }
        a
    }

    /// Exact quotient when the division is known exact.
    pub fn div_exact(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero());
        if self.is_zero() {
            return Self::zero();
        }
        let mut r = self.clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len() - rhs.coeffs.len() + 1];
        let dlead = rhs.leading().unwrap().clone();
        while !r.is_zero() && r.coeffs.len() >= rhs.coeffs.len() {
            let shift = r.coeffs.len() - rhs.coeffs.len();
            let f = r.leading().unwrap() / &dlead;
            q[shift] = f.clone();
            for i in 0..rhs.coeffs.len() {
                let delta = &rhs.coeffs[i] * &f;
                r.coeffs[shift + i] -= delta;
            }
            r.trim();
        }
        assert!(r.is_zero(), "inexact division");
        Self::from_coeffs(q)
    }

    /// The square-free part `p / gcd(p, p')`.
    pub fn square_free(&self) -> Self {
        assert!(!self.is_zero());
        if self.coeffs.len() <= 2 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.clone()
        } else {
            self.div_exact(&g)
        }
    }

    /// Converts from a sparse polynomial supported on at most one variable.
    pub fn from_poly(p: &Poly) -> Result<Self> {
        let vars = p.support();
        if vars.len() > 1 {
            return Err(Error::InvalidParameter(format!(
                "polynomial is not univariate: variables {:?}",
                vars
            )));
        }
        let mut coeffs = vec![BigRational::zero(); p.degree().map_or(0, |d| d + 1)];
        for (m, c) in p.iter() {
            coeffs[m.degree()] = c.clone();
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Converts to a sparse polynomial in the given variable.
    pub fn to_poly(&self, var: VarId) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            out.add_term(Monomial::from_pairs([(var, k as u32)]), c.clone());
        }
        out
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(VarId::X))
    }
}

/// Coefficientwise (Hadamard) product of two univariate polynomials.
pub fn malo_star(f: &UnivariatePoly, g: &UnivariatePoly) -> UnivariatePoly {
    let n = f.coeffs.len().min(g.coeffs.len());
    UnivariatePoly::from_coeffs((0..n).map(|k| f.coeff(k) * g.coeff(k)).collect())
}

/// `Σ_{k=0}^{n} C(n,k) C(m,k+1) x^k` for n ≥ 1, m ≥ 2, exact binomials.
pub fn malo_binom_poly(n: u32, m: u32) -> Result<UnivariatePoly> {
    if n < 1 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 1 and m >= 2, got ({n}, {m})"
        )));
    }
    let coeffs = (0..=n)
        .map(|k| BigRational::from_integer(binomial(n, k) * binomial(m, k + 1)))
        .collect();
    Ok(UnivariatePoly::from_coeffs(coeffs))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic() {
        let p = UnivariatePoly::from_i64(&[2, 3, 1]); // 2 + 3x + x^2
        assert_eq!(p.degree(), Some(2));
        assert_eq!(
            p.eval(&BigRational::from_integer(BigInt::from(-1))),
            BigRational::zero()
        );
        let d = p.derivative();
        assert_eq!(d, UnivariatePoly::from_i64(&[3, 2]));
        let prod = p.mul(&UnivariatePoly::from_i64(&[1, 1]));
        assert_eq!(prod, UnivariatePoly::from_i64(&[2, 5, 4, 1]));
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x+1)^2 (x+2) gcd with derivative = (x+1)
        let p = UnivariatePoly::from_i64(&[2, 5, 4, 1]);
        let g = p.gcd(&p.derivative());
        assert_eq!(g, UnivariatePoly::from_i64(&[1, 1]));
        assert_eq!(p.square_free(), UnivariatePoly::from_i64(&[2, 3, 1]));
        // coprime
        let a = UnivariatePoly::from_i64(&[1, 1]);
        let b = UnivariatePoly::from_i64(&[2, 1]);
        assert_eq!(a.gcd(&b).degree(), Some(0));
    }

    #[test]
    fn malo_examples() {
        let f = UnivariatePoly::from_i64(&[1, 1]);
        assert_eq!(malo_star(&f, &f), UnivariatePoly::from_i64(&[1, 1]));
        assert!(malo_star(&f, &UnivariatePoly::zero()).is_zero());
        assert_eq!(
            malo_binom_poly(1, 2).unwrap(),
            UnivariatePoly::from_i64(&[2, 1])
        );
        assert_eq!(
            malo_binom_poly(2, 2).unwrap(),
            UnivariatePoly::from_i64(&[2, 2])
        );
        assert!(malo_binom_poly(0, 2).is_err());
        assert!(malo_binom_poly(1, 1).is_err());
    }

    #[test]
    fn malo_poly_is_star_product_shifted() {
        // x^{-1}( x(x+1)^n  ⋆  (x+1)^m )
        for n in 1..=4u32 {
            for m in 2..=4u32 {
                let xp1 = UnivariatePoly::from_i64(&[1, 1]);
                let mut a = UnivariatePoly::from_i64(&[0, 1]);
                for _ in 0..n {
                    a = a.mul(&xp1);
                }
                let mut b = UnivariatePoly::from_i64(&[1]);
                for _ in 0..m {
                    b = b.mul(&xp1);
                }
                let star = malo_star(&a, &b);
                // divide by x
                let shifted =
                    UnivariatePoly::from_coeffs(star.coeffs()[1..].to_vec());
                assert_eq!(shifted, malo_binom_poly(n, m).unwrap());
            }
        }
    }

    #[test]
    fn poly_conversions() {
        let p = UnivariatePoly::from_i64(&[0, 1, 4, 1]);
        assert_eq!(p.to_string(), "x + 4*x^2 + x^3");
        let sp = p.to_poly(VarId::X);
        assert_eq!(UnivariatePoly::from_poly(&sp).unwrap(), p);
        let two_vars = &Poly::var(VarId::X) + &Poly::var(VarId::Y);
        assert!(UnivariatePoly::from_poly(&two_vars).is_err());
    }
}
