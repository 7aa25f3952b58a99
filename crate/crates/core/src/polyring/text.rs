//! Canonical text and JSON forms of polynomials.
//!
//! Text: terms sorted by monomial order, e.g. `z1*z1p*z2p + z1*z2*z1p`;
//! rational coefficients printed exactly (`3/2*x^2`). JSON: monomials as
//! sorted variable-name arrays (repeated per exponent) with coefficients as
//! exact strings.

use super::{Monomial, Poly, VarId};
use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

impl Monomial {
    /// Factors in display order: x, y, unprimed z-block, primed z-block.
    pub fn display_factors(&self) -> Vec<(VarId, u32)> {
        let mut fs = self.factors().to_vec();
        fs.sort_by_key(|&(v, _)| v.display_key());
        fs
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .display_factors()
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.name()
                } else {
                    format!("{}^{e}", v.name())
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.iter() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

pub(super) fn var_from_name(s: &str) -> Result<VarId> {
    match s {
        "x" => return Ok(VarId::X),
        "y" => return Ok(VarId::Y),
        _ => {}
    }
    let (kind, rest) = s
        .split_at_checked(1)
        .ok_or_else(|| Error::Parse(format!("empty variable name")))?;
    let primed = rest.ends_with('p');
    let digits = if primed { &rest[..rest.len() - 1] } else { rest };
    let index: u32 = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad variable name {s:?}")))?;
    if index == 0 {
        return Err(Error::Parse(format!("variable index must be >= 1: {s:?}")));
    }
    match kind {
        "z" => Ok(VarId::Z { index, primed }),
        "w" => Ok(VarId::Shadow { index, primed }),
        _ => Err(Error::Parse(format!("unknown variable {s:?}"))),
    }
}

/// Parses an exact rational like `3`, `-5/2`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}

/// Parses canonical polynomial text: signed terms of `*`-joined factors,
/// each factor a rational constant or `var[^exp]`.
pub fn parse_poly(input: &str) -> Result<Poly> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = Poly::zero();
    let mut term = String::new();
    let mut sign = 1i64;
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut pending_sign = 1i64;
    while i <= chars.len() {
        let c = chars.get(i).copied();
        match c {
            Some('+') | Some('-') | None => {
                // '^' exponents and '/' fractions never contain +-, and
                // leading sign means empty term so far
                if term.trim().is_empty() && c.is_some() {
                    if c == Some('-') {
                        pending_sign = -pending_sign;
                    }
                } else {
                    if !term.trim().is_empty() {
                        add_parsed_term(&mut out, term.trim(), sign * pending_sign)?;
                    }
                    pending_sign = if c == Some('-') { -1 } else { 1 };
                    sign = 1;
                    term.clear();
                }
            }
            Some(ch) => term.push(ch),
        }
        i += 1;
    }
    Ok(out)
}

fn add_parsed_term(out: &mut Poly, term: &str, sign: i64) -> Result<()> {
    let mut coeff = BigRational::from_integer(BigInt::from(sign));
    let mut pairs: Vec<(VarId, u32)> = Vec::new();
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {term:?}")));
        }
        if factor.chars().next().unwrap().is_ascii_digit() {
            coeff *= parse_rational(factor)?;
        } else {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            pairs.push((var_from_name(name)?, exp));
        }
    }
    out.add_term(Monomial::from_pairs(pairs), coeff);
    Ok(())
}

/// JSON form of a polynomial.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PolyJson {
    pub terms: Vec<PolyTermJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PolyTermJson {
    pub coeff: String,
    pub monomial: Vec<String>,
}

impl Poly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .iter()
                .map(|(m, c)| PolyTermJson {
                    coeff: c.to_string(),
                    monomial: m
                        .display_factors()
                        .iter()
                        .flat_map(|&(v, e)| std::iter::repeat(v.name()).take(e as usize))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let mut out = Poly::zero();
        for t in &j.terms {
            let mut pairs = Vec::new();
            for name in &t.monomial {
                pairs.push((var_from_name(name)?, 1));
            }
            out.add_term(Monomial::from_pairs(pairs), parse_rational(&t.coeff)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_canonical() {
        let mut p = Poly::zero();
        p.add_term(
            Monomial::from_pairs([(VarId::z(1), 1), (VarId::z(2), 1), (VarId::zp(1), 1)]),
            BigRational::one(),
        );
        p.add_term(
            Monomial::from_pairs([(VarId::z(1), 1), (VarId::zp(1), 1), (VarId::zp(2), 1)]),
            BigRational::one(),
        );
        assert_eq!(p.to_string(), "z1*z1p*z2p + z1*z2*z1p");
    }

    #[test]
    fn display_signs_and_constants() {
        let p = &Poly::constant_i64(-3) + &Poly::var(VarId::X).scale(
            &BigRational::new(BigInt::from(1), BigInt::from(2)),
        );
        assert_eq!(p.to_string(), "-3 + 1/2*x");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn parse_roundtrip() {
        for s in [
            "z1*z1p*z2p + z1*z2*z1p",
            "-3 + 1/2*x",
            "x + 4*x^2 + x^3",
            "0",
            "x*y^3 + 4*x^2*y^2 + x^3*y",
            "2*z1 - z2p",
        ] {
            let p = parse_poly(s).unwrap();
            assert_eq!(p.to_string(), s, "roundtrip of {s}");
        }
    }

    #[test]
    fn parse_cleans_whitespace_and_merges() {
        let p = parse_poly("z1 + z1").unwrap();
        assert_eq!(p.to_string(), "2*z1");
        let q = parse_poly("z1 - z1").unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let p = parse_poly("1/3*z1*z1p^2 + x").unwrap();
        let j = p.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let j2: PolyJson = serde_json::from_str(&s).unwrap();
        assert_eq!(Poly::from_json(&j2).unwrap(), p);
    }

    #[test]
    fn bad_inputs() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("q1").is_err());
        assert!(parse_poly("z0").is_err());
        assert!(parse_rational("1/0").is_err());
    }
}
