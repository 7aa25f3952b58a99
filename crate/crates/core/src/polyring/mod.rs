//! Exact sparse polynomial arithmetic over the doubled variable set
//! `{z_e : e ∈ [n] ∪ [n]'}` plus the distinguished variables `x`, `y` and a
//! disjoint shadow namespace `w_e` used by operator symbols.
//!
//! One polynomial type covers both the multiaffine polynomials (variable
//! sets) and general exponent vectors; multiaffinity is a checkable property
//! that the creation/annihilation operators require of their targets.
//! Coefficients are arbitrary-precision rationals throughout.

mod ops;
mod text;
mod univariate;

pub use ops::*;
pub use text::{parse_poly, parse_rational, PolyJson};
pub use univariate::{binomial, malo_binom_poly, malo_star, UnivariatePoly};

use num::{BigInt, BigRational, One, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Variable identifier with total order `x < y < z1 < z1' < z2 < … < w1 < …`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarId {
    X,
    Y,
    Z { index: u32, primed: bool },
    /// Shadow copy of `Z { index, primed }`; a disjoint namespace used for
    /// operator symbols, never colliding with z/x/y.
    Shadow { index: u32, primed: bool },
}

impl VarId {
    pub fn z(index: u32) -> Self {
        assert!(index >= 1);
        VarId::Z {
            index,
            primed: false,
        }
    }

    pub fn zp(index: u32) -> Self {
        assert!(index >= 1);
        VarId::Z {
            index,
            primed: true,
        }
    }

    /// The shadow partner of a z-variable.
    pub fn shadow_of(self) -> Option<Self> {
        match self {
            VarId::Z { index, primed } => Some(VarId::Shadow { index, primed }),
            _ => None,
        }
    }

    pub fn is_z(self) -> bool {
        matches!(self, VarId::Z { .. })
    }

    pub fn name(self) -> String {
        match self {
            VarId::X => "x".into(),
            VarId::Y => "y".into(),
            VarId::Z { index, primed } => format!("z{index}{}", if primed { "p" } else { "" }),
            VarId::Shadow { index, primed } => {
                format!("w{index}{}", if primed { "p" } else { "" })
            }
        }
    }

    pub fn from_name(s: &str) -> crate::Result<Self> {
        text::var_from_name(s)
    }

    /// Ordering used when printing a monomial's factors: x, y, then the
    /// unprimed z-block, the primed z-block, and likewise for shadows
    /// (matching how the weights are written).
    pub(crate) fn display_key(self) -> (u8, u32) {
        match self {
            VarId::X => (0, 0),
            VarId::Y => (1, 0),
            VarId::Z { index, primed } => (if primed { 3 } else { 2 }, index),
            VarId::Shadow { index, primed } => (if primed { 5 } else { 4 }, index),
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl serde::Serialize for VarId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> serde::Deserialize<'de> for VarId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        VarId::from_name(&s).map_err(serde::de::Error::custom)
    }
}

/// A monomial as a sorted exponent vector. The unit monomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    factors: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn var(v: VarId) -> Self {
        Self {
            factors: vec![(v, 1)],
        }
    }

    /// Normalizes arbitrary (var, exponent) pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Self {
            factors: map.into_iter().collect(),
        }
    }

    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn exponent_of(&self, v: VarId) -> u32 {
        self.factors
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn contains(&self, v: VarId) -> bool {
        self.exponent_of(v) > 0
    }

    pub fn is_multiaffine(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_pairs(
            self.factors
                .iter()
                .chain(other.factors.iter())
                .map(|&(v, e)| (v, e)),
        )
    }

    /// Divides exactly, or None if any exponent would go negative.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        let mut map: BTreeMap<VarId, i64> = BTreeMap::new();
        for &(v, e) in &self.factors {
            map.insert(v, e as i64);
        }
        for &(v, e) in &other.factors {
            let slot = map.entry(v).or_insert(0);
            *slot -= e as i64;
            if *slot < 0 {
                return None;
            }
        }
        Some(Self {
            factors: map
                .into_iter()
                .filter(|&(_, e)| e > 0)
                .map(|(v, e)| (v, e as u32))
                .collect(),
        })
    }

    /// Removes variable `v` entirely.
    pub fn without(&self, v: VarId) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .copied()
                .filter(|&(w, _)| w != v)
                .collect(),
        }
    }

    /// Renames variables; merges exponents if the map is not injective.
    pub fn map_vars(&self, f: impl Fn(VarId) -> VarId) -> Self {
        Self::from_pairs(self.factors.iter().map(|&(v, e)| (f(v), e)))
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }

    fn expanded(&self) -> impl Iterator<Item = VarId> + '_ {
        self.factors
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat(v).take(e as usize))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Lexicographic on the expanded variable sequence, shorter prefix first.
    /// This puts `1 < x < x² < x²y < x³ …` and sorts the doubled-variable
    /// monomials in the canonical output order.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.expanded();
        let mut b = other.expanded();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => {}
                    o => return o,
                },
            }
        }
    }
}

/// The multiaffine monomial over `[n] ∪ [n]'` packed as two bitmasks;
/// the hot-loop representation for weights, Φ expansion and Θ coding.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ZSet {
    pub unprimed: u64,
    pub primed: u64,
}

impl ZSet {
    pub fn degree(self) -> u32 {
        self.unprimed.count_ones() + self.primed.count_ones()
    }

    pub fn to_monomial(self) -> Monomial {
        let mut pairs = Vec::with_capacity(self.degree() as usize);
        let mut m = self.unprimed;
        while m != 0 {
            pairs.push((VarId::z(m.trailing_zeros() + 1), 1));
            m &= m - 1;
        }
        let mut m = self.primed;
        while m != 0 {
            pairs.push((VarId::zp(m.trailing_zeros() + 1), 1));
            m &= m - 1;
        }
        Monomial::from_pairs(pairs)
    }

    /// Reads the z-support of a multiaffine monomial; None if any non-z
    /// variable or exponent > 1 appears.
    pub fn from_monomial(m: &Monomial) -> Option<Self> {
        let mut out = ZSet::default();
        for &(v, e) in m.factors() {
            if e != 1 {
                return None;
            }
            match v {
                VarId::Z { index, primed } if index <= 64 => {
                    let bit = 1u64 << (index - 1);
                    if primed {
                        out.primed |= bit;
                    } else {
                        out.unprimed |= bit;
                    }
                }
                _ => return None,
            }
        }
        Some(out)
    }
}

/// Sparse polynomial with exact rational coefficients and canonical term
/// order. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant_i64(1)
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn constant_i64(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: VarId) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), BigRational::one());
        p
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn from_zset_counts<'a>(counts: impl IntoIterator<Item = (&'a ZSet, &'a u64)>) -> Self {
        let mut p = Self::zero();
        for (zs, &c) in counts {
            p.add_term(
                zs.to_monomial(),
                BigRational::from_integer(BigInt::from(c)),
            );
        }
        p
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Total degree of the highest term; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Some(d) iff nonzero and every monomial has total degree d.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_multiaffine(&self) -> bool {
        self.terms.keys().all(|m| m.is_multiaffine())
    }

    pub fn support(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    /// Applies a variable renaming to every term.
    pub fn map_vars(&self, f: impl Fn(VarId) -> VarId) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(&f), c.clone());
        }
        out
    }

    /// Divides every term by `m`; errors if some term is not divisible.
    pub fn div_exact_monomial(&self, m: &Monomial) -> crate::Result<Self> {
        let mut out = Self::zero();
        for (t, c) in &self.terms {
            match t.try_div(m) {
                Some(q) => out.add_term(q, c.clone()),
                None => {
                    return Err(crate::Error::InvalidParameter(format!(
                        "term {t:?} not divisible by {m:?}"
                    )))
                }
            }
        }
        Ok(out)
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn var_order() {
        assert!(VarId::X < VarId::Y);
        assert!(VarId::Y < VarId::z(1));
        assert!(VarId::z(1) < VarId::zp(1));
        assert!(VarId::zp(1) < VarId::z(2));
        assert!(VarId::zp(64) < VarId::Shadow { index: 1, primed: false });
    }

    #[test]
    fn monomial_order_expanded_lex() {
        let x = Monomial::var(VarId::X);
        let x2 = Monomial::from_pairs([(VarId::X, 2)]);
        let x2y = Monomial::from_pairs([(VarId::X, 2), (VarId::Y, 1)]);
        let z1z1p = Monomial::from_pairs([(VarId::z(1), 1), (VarId::zp(1), 1)]);
        let z1z2 = Monomial::from_pairs([(VarId::z(1), 1), (VarId::z(2), 1)]);
        assert!(Monomial::one() < x);
        assert!(x < x2);
        assert!(x2 < x2y);
        assert!(z1z1p < z1z2); // z1' < z2
    }

    #[test]
    fn ring_arithmetic() {
        let z1 = Poly::var(VarId::z(1));
        let z1p = Poly::var(VarId::zp(1));
        let prod = &z1 * &z1p;
        assert_eq!(prod.to_string(), "z1*z1p");
        let f = &z1 + &z1p;
        assert!((&f - &f).is_zero());
        let sq = &f * &f;
        // (z1+z1p)^2 = z1^2 + 2 z1 z1p + z1p^2
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(
            sq.coeff(&Monomial::from_pairs([(VarId::z(1), 1), (VarId::zp(1), 1)])),
            BigRational::from_integer(BigInt::from(2))
        );
        assert!(!sq.is_multiaffine());
        assert!(prod.is_multiaffine());
    }

    #[test]
    fn zset_roundtrip() {
        let m = Monomial::from_pairs([(VarId::z(1), 1), (VarId::z(3), 1), (VarId::zp(2), 1)]);
        let zs = ZSet::from_monomial(&m).unwrap();
        assert_eq!(zs.unprimed, 0b101);
        assert_eq!(zs.primed, 0b010);
        assert_eq!(zs.to_monomial(), m);
        assert!(ZSet::from_monomial(&Monomial::from_pairs([(VarId::X, 1)])).is_none());
        assert!(ZSet::from_monomial(&Monomial::from_pairs([(VarId::z(1), 2)])).is_none());
    }

    #[test]
    fn monomial_division() {
        let a = Monomial::from_pairs([(VarId::z(1), 2), (VarId::z(2), 1)]);
        let b = Monomial::from_pairs([(VarId::z(1), 1)]);
        assert_eq!(
            a.try_div(&b).unwrap(),
            Monomial::from_pairs([(VarId::z(1), 1), (VarId::z(2), 1)])
        );
        assert!(b.try_div(&a).is_none());
    }
}
