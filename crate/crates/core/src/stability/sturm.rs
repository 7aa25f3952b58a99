//! Exact real-root counting by Sturm chains.

use crate::error::{Error, Result};
use crate::polyring::UnivariatePoly;
use num::{BigRational, Signed, Zero};

/// The Sturm chain of a square-free polynomial: p, p', then negated
/// remainders, each scaled by a positive constant to tame coefficient growth.
pub fn sturm_chain(p: &UnivariatePoly) -> Vec<UnivariatePoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let k = chain.len();
        let mut next = chain[k - 2].rem(&chain[k - 1]).neg();
        if let Some(lc) = next.leading().cloned() {
            let scale = lc.abs().recip();
            next = UnivariatePoly::from_coeffs(
                next.coeffs().iter().map(|c| c * &scale).collect(),
            );
        }
        chain.push(next);
    }
    chain.pop();
    chain
}

#[derive(Copy, Clone, PartialEq, Eq)]
pub enum Endpoint<'a> {
    NegInfinity,
    PosInfinity,
    At(&'a BigRational),
}

fn sign_variations(chain: &[UnivariatePoly], at: Endpoint) -> usize {
    let mut signs: Vec<i8> = Vec::with_capacity(chain.len());
    for p in chain {
        let s: i8 = match at {
            Endpoint::NegInfinity => match p.leading() {
                None => 0,
                Some(lc) => {
                    let base = if lc.is_positive() { 1 } else { -1 };
                    if p.degree().unwrap_or(0) % 2 == 1 {
                        -base
                    } else {
                        base
                    }
                }
            },
            Endpoint::PosInfinity => match p.leading() {
                None => 0,
                Some(lc) => {
                    if lc.is_positive() {
                        1
                    } else {
                        -1
                    }
                }
            },
            Endpoint::At(x) => {
                let v = p.eval(x);
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            }
        };
        if s != 0 {
            signs.push(s);
        }
    }
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of a square-free polynomial in the open
/// interval `(lo, hi)`; endpoints must not be roots when finite.
pub fn count_real_roots_between(
    q: &UnivariatePoly,
    lo: Endpoint,
    hi: Endpoint,
) -> usize {
    if q.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(q);
    sign_variations(&chain, lo) - sign_variations(&chain, hi)
}

/// Number of distinct real roots over all of R (q square-free).
pub fn count_distinct_real_roots(q: &UnivariatePoly) -> usize {
    count_real_roots_between(q, Endpoint::NegInfinity, Endpoint::PosInfinity)
}

/// True iff every complex root of `p` is real, decided exactly on the
/// square-free part. Errors on the zero polynomial.
pub fn is_real_rooted(p: &UnivariatePoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.square_free();
    Ok(count_distinct_real_roots(&q) == q.degree().unwrap())
}

/// True iff `p` is real-rooted with every root strictly negative.
/// A vanishing constant term means a root at zero, hence false.
pub fn is_real_rooted_negative(p: &UnivariatePoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.square_free();
    let deg = q.degree().unwrap();
    if deg == 0 {
        return Ok(true);
    }
    let zero = BigRational::zero();
    if q.eval(&zero).is_zero() {
        return Ok(false);
    }
    if count_distinct_real_roots(&q) != deg {
        return Ok(false);
    }
    Ok(count_real_roots_between(&q, Endpoint::NegInfinity, Endpoint::At(&zero)) == deg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_rooted_examples() {
        assert!(is_real_rooted(&UnivariatePoly::from_i64(&[2, 3, 1])).unwrap());
        assert!(!is_real_rooted(&UnivariatePoly::from_i64(&[1, 1, 1])).unwrap());
        // A_4(x) = x + 11x^2 + 11x^3 + x^4
        assert!(is_real_rooted(&UnivariatePoly::from_i64(&[0, 1, 11, 11, 1])).unwrap());
        assert!(matches!(
            is_real_rooted(&UnivariatePoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
        // repeated roots are fine: (x+1)^2
        assert!(is_real_rooted(&UnivariatePoly::from_i64(&[1, 2, 1])).unwrap());
    }

    #[test]
    fn negative_rooted_examples() {
        assert!(is_real_rooted_negative(&UnivariatePoly::from_i64(&[2, 1])).unwrap());
        assert!(is_real_rooted_negative(&UnivariatePoly::from_i64(&[2, 2])).unwrap());
        assert!(!is_real_rooted_negative(&UnivariatePoly::from_i64(&[-1, 1])).unwrap());
        // root at zero
        assert!(!is_real_rooted_negative(&UnivariatePoly::from_i64(&[0, 1])).unwrap());
        // complex pair
        assert!(!is_real_rooted_negative(&UnivariatePoly::from_i64(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn root_counts_with_constructed_roots() {
        // (x-1)(x-2)(x+3) has 3 distinct real roots; times (x^2+1) still 3
        let p = UnivariatePoly::from_i64(&[-1, 1])
            .mul(&UnivariatePoly::from_i64(&[-2, 1]))
            .mul(&UnivariatePoly::from_i64(&[3, 1]));
        assert_eq!(count_distinct_real_roots(&p), 3);
        let q = p.mul(&UnivariatePoly::from_i64(&[1, 0, 1]));
        assert_eq!(count_distinct_real_roots(&q.square_free()), 3);
        // interval count: roots in (-inf, 0): just -3
        let zero = BigRational::zero();
        assert_eq!(
            count_real_roots_between(&p, Endpoint::NegInfinity, Endpoint::At(&zero)),
            1
        );
    }
}
