//! Exact Routh test: does a real polynomial have all roots in the open left
//! half-plane?

use crate::error::{Error, Result};
use crate::polyring::UnivariatePoly;
use num::{BigRational, Signed, Zero};

/// True iff no root of `p` has real part >= 0, via the exact Routh array.
///
/// After normalizing the leading coefficient positive, any missing or
/// non-positive coefficient already disqualifies; a vanishing pivot or row
/// during elimination corresponds to a root on or right of the imaginary
/// axis (the auxiliary factor is even, and a nonconstant even real
/// polynomial always has a root with nonnegative real part), so the test
/// returns false without epsilon perturbations.
pub fn is_hurwitz_univariate(p: &UnivariatePoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let deg = p.degree().unwrap();
    if deg == 0 {
        return Ok(true);
    }
    // normalize: leading coefficient positive
    let coeffs: Vec<BigRational> = if p.leading().unwrap().is_negative() {
        p.coeffs().iter().map(|c| -c.clone()).collect()
    } else {
        p.coeffs().to_vec()
    };
    if coeffs.iter().any(|c| !c.is_positive()) {
        return Ok(false);
    }
    // rows indexed from the top: r0 = a_n, a_{n-2}, ...; r1 = a_{n-1}, ...
    let mut r0: Vec<BigRational> = coeffs.iter().rev().step_by(2).cloned().collect();
    let mut r1: Vec<BigRational> = coeffs.iter().rev().skip(1).step_by(2).cloned().collect();
    for _ in 0..deg.saturating_sub(1) {
        if r1.is_empty() || r1[0].is_zero() {
            return Ok(false);
        }
        let width = r0.len().saturating_sub(1).max(r1.len().saturating_sub(1));
        let mut next = Vec::with_capacity(width);
        for i in 0..width {
            let a = r0.get(i + 1).cloned().unwrap_or_else(BigRational::zero);
            let b = r1.get(i + 1).cloned().unwrap_or_else(BigRational::zero);
            next.push(&a - &(&r0[0] * &b) / &r1[0]);
        }
        if next.first().map_or(true, |c| !c.is_positive()) {
            return Ok(false);
        }
        r0 = r1;
        r1 = next;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::UnivariatePoly as U;

    #[test]
    fn basic_examples() {
        assert!(is_hurwitz_univariate(&U::from_i64(&[1, 1])).unwrap());
        assert!(!is_hurwitz_univariate(&U::from_i64(&[-1, 1])).unwrap());
        assert!(is_hurwitz_univariate(&U::from_i64(&[1, 1, 1])).unwrap());
        assert!(matches!(
            is_hurwitz_univariate(&U::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn boundary_and_sign_cases() {
        // (x+1)(x^2+1): roots on the imaginary axis -> not Hurwitz
        let p = U::from_i64(&[1, 1]).mul(&U::from_i64(&[1, 0, 1]));
        assert!(!is_hurwitz_univariate(&p).unwrap());
        // root at zero
        assert!(!is_hurwitz_univariate(&U::from_i64(&[0, 1])).unwrap());
        // negative leading coefficient, still Hurwitz: -(x+1)(x+2)
        let p = U::from_i64(&[-2, -3, -1]);
        assert!(is_hurwitz_univariate(&p).unwrap());
        // constants are vacuously Hurwitz
        assert!(is_hurwitz_univariate(&U::from_i64(&[5])).unwrap());
    }

    #[test]
    fn products_of_certified_factors() {
        // products of (x + a), a > 0, and (x^2 + bx + c), b,c > 0 are Hurwitz
        let mut p = U::from_i64(&[1]);
        for f in [
            U::from_i64(&[3, 1]),
            U::from_i64(&[1, 1, 1]),
            U::from_i64(&[5, 2, 1]),
            U::from_i64(&[2, 1]),
        ] {
            p = p.mul(&f);
            assert!(is_hurwitz_univariate(&p).unwrap());
        }
        // one right-half-plane factor breaks it: (x^2 - x + 1)
        let q = p.mul(&U::from_i64(&[1, -1, 1]));
        assert!(!is_hurwitz_univariate(&q).unwrap());
    }
}
