//! Minimal outward-rounded interval arithmetic, enough to confirm that a
//! sampled near-zero of a polynomial is genuinely small: every operation
//! widens its result by one ulp on each side, so the computed box always
//! contains the true value.

use crate::polyring::{Poly, VarId};
use crate::Result;
use num::BigRational;
use std::collections::BTreeMap;

#[derive(Copy, Clone, Debug)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        let x = crate::polyring::rational_to_f64(q);
        Self {
            lo: x.next_down(),
            hi: x.next_up(),
        }
    }

    pub fn add(self, o: Self) -> Self {
        Self {
            lo: (self.lo + o.lo).next_down(),
            hi: (self.hi + o.hi).next_up(),
        }
    }

    pub fn sub(self, o: Self) -> Self {
        Self {
            lo: (self.lo - o.hi).next_down(),
            hi: (self.hi - o.lo).next_up(),
        }
    }

    pub fn mul(self, o: Self) -> Self {
        let c = [
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        ];
        Self {
            lo: c.iter().cloned().fold(f64::INFINITY, f64::min).next_down(),
            hi: c.iter().cloned().fold(f64::NEG_INFINITY, f64::max).next_up(),
        }
    }

    /// Largest absolute value in the interval.
    pub fn mag(self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }
}

#[derive(Copy, Clone, Debug)]
pub struct CInterval {
    pub re: Interval,
    pub im: Interval,
}

impl CInterval {
    pub fn point(re: f64, im: f64) -> Self {
        Self {
            re: Interval::point(re),
            im: Interval::point(im),
        }
    }

    pub fn add(self, o: Self) -> Self {
        Self {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    pub fn mul(self, o: Self) -> Self {
        Self {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    /// Upper bound on |value| over the box.
    pub fn mag_upper(self) -> f64 {
        self.re.mag().hypot(self.im.mag())
    }
}

/// Evaluates `f` over complex intervals; the result encloses the true value
/// of `f` at every point of the box.
pub fn eval_interval(f: &Poly, point: &BTreeMap<VarId, CInterval>) -> Result<CInterval> {
    let mut acc = CInterval::point(0.0, 0.0);
    for (m, c) in f.iter() {
        let mut t = CInterval {
            re: Interval::from_rational(c),
            im: Interval::point(0.0),
        };
        for &(v, e) in m.factors() {
            let x = *point.get(&v).ok_or(crate::Error::UnboundVariable(v))?;
            for _ in 0..e {
                t = t.mul(x);
            }
        }
        acc = acc.add(t);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    #[test]
    fn enclosures_contain_truth() {
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let iv = Interval::from_rational(&third);
        assert!(iv.lo < 1.0 / 3.0 + 1e-17 && iv.hi > 1.0 / 3.0 - 1e-17);
        let sq = iv.mul(iv);
        assert!(sq.lo <= 1.0 / 9.0 && sq.hi >= 1.0 / 9.0);
    }

    #[test]
    fn exact_zero_is_enclosed() {
        // f = z1 z2 + 1 at z1 = z2 = i: exactly zero
        let f = {
            let p = &Poly::var(VarId::z(1)) * &Poly::var(VarId::z(2));
            &p + &Poly::one()
        };
        let mut pt = BTreeMap::new();
        pt.insert(VarId::z(1), CInterval::point(0.0, 1.0));
        pt.insert(VarId::z(2), CInterval::point(0.0, 1.0));
        let enc = eval_interval(&f, &pt).unwrap();
        assert!(enc.mag_upper() < 1e-12);
        assert!(enc.re.lo <= 0.0 && enc.re.hi >= 0.0);
    }
}
