//! The shuffle algebra on permutations, its weight homomorphisms, and the
//! descent/ascent-bottom product realized through Φ.

use crate::error::{Error, Result};
use crate::eulerian::{weight, WeightKind};
use crate::permstat::Permutation;
use crate::polyring::{phi_zset, Poly, ZSet};
use num::{BigInt, BigRational};
use std::collections::BTreeMap;

/// Integer-linear combination of permutations; grades may be mixed, each
/// basis permutation carries its own size.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FQSymElement {
    terms: BTreeMap<Permutation, i64>,
}

impl FQSymElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(p: Permutation) -> Self {
        let mut e = Self::zero();
        e.add(p, 1);
        e
    }

    pub fn add(&mut self, p: Permutation, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &i64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

/// `π ⧢ σ`: the sum over all interleavings of π with σ shifted up by |π|.
/// `binom(n+m, n)` terms, each with coefficient 1.
pub fn shuffle(p: &Permutation, q: &Permutation) -> FQSymElement {
    let n = p.n();
    let m = q.n();
    let total = n + m;
    assert!(total <= 32, "shuffle masks use u32 positions");
    let shifted: Vec<u8> = q.word().iter().map(|&v| v + n as u8).collect();
    let mut out = FQSymElement::zero();
    for mask in 0u32..1 << total {
        if mask.count_ones() as usize != n {
            continue;
        }
        let mut word = Vec::with_capacity(total);
        let (mut pi, mut qi) = (0, 0);
        for i in 0..total {
            if mask >> i & 1 == 1 {
                word.push(p.word()[pi]);
                pi += 1;
            } else {
                word.push(shifted[qi]);
                qi += 1;
            }
        }
        out.add(Permutation::new(word).unwrap(), 1);
    }
    out
}

/// Bilinear extension of the shuffle to integer combinations.
pub fn product(f: &FQSymElement, g: &FQSymElement) -> FQSymElement {
    let mut out = FQSymElement::zero();
    for (p, cp) in f.iter() {
        for (q, cq) in g.iter() {
            let sh = shuffle(p, q);
            for (t, c) in sh.iter() {
                out.add(t.clone(), c * cp * cq);
            }
        }
    }
    out
}

/// `1 ⧢ 1 ⧢ … ⧢ 1` (n factors) = the sum of all of S_n.
pub fn one_shuffle_power(n: usize) -> FQSymElement {
    let mut acc = FQSymElement::basis(Permutation::identity(0));
    let one = FQSymElement::basis(Permutation::identity(1));
    for _ in 0..n {
        acc = product(&acc, &one);
    }
    acc
}

/// Linear extension of a weight to combinations.
pub fn weight_of_element(kind: WeightKind, f: &FQSymElement) -> Poly {
    let mut out = Poly::zero();
    for (p, &c) in f.iter() {
        out = &out + &weight(kind, p).scale(&BigRational::from_integer(BigInt::from(c)));
    }
    out
}

/// The product `a • b = Φ(a · Γ_n(b))` on the spans of w1-monomials, with
/// grades supplied explicitly (a grade-n monomial has degree n+1 but need not
/// mention index n). Every monomial is validated against the Dyck-code
/// criterion through Θ. Grade 0 elements are constants and act by scaling.
pub fn dab_product(a: &Poly, n: usize, b: &Poly, m: usize) -> Result<Poly> {
    let a_sets = validate_dab(a, n)?;
    let b_sets = validate_dab(b, m)?;
    if n == 0 {
        return Ok(b.scale(&constant_of(a)));
    }
    if m == 0 {
        return Ok(a.scale(&constant_of(b)));
    }
    let total = n + m;
    let mut counts: BTreeMap<ZSet, BigRational> = BTreeMap::new();
    for (za, ca) in &a_sets {
        for (zb, cb) in &b_sets {
            let merged = ZSet {
                unprimed: za.unprimed | zb.unprimed << n,
                primed: za.primed | zb.primed << n,
            };
            let c = ca * cb;
            for out in phi_zset(merged, n, total) {
                use std::collections::btree_map::Entry;
                match counts.entry(out) {
                    Entry::Vacant(e) => {
                        e.insert(c.clone());
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() += &c;
                    }
                }
            }
        }
    }
    let mut out = Poly::zero();
    for (zs, c) in counts {
        out.add_term(zs.to_monomial(), c);
    }
    Ok(out)
}

fn constant_of(p: &Poly) -> BigRational {
    p.coeff(&crate::polyring::Monomial::one())
}

/// Splits a polynomial into (ZSet, coeff) pairs, checking every monomial is a
/// valid grade-n basis monomial (degree n+1, indices within [n], valid code).
fn validate_dab(p: &Poly, n: usize) -> Result<Vec<(ZSet, BigRational)>> {
    let mut out = Vec::new();
    for (mono, c) in p.iter() {
        if n == 0 {
            if !mono.is_one() {
                return Err(Error::InvalidGrade(format!(
                    "grade 0 admits only constants, found {mono}"
                )));
            }
            continue;
        }
        let zs = ZSet::from_monomial(mono)
            .ok_or_else(|| Error::NotInDab(mono.to_string()))?;
        let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        if zs.unprimed & !limit != 0 || zs.primed & !limit != 0 {
            return Err(Error::InvalidGrade(format!(
                "monomial {mono} mentions indices beyond grade {n}"
            )));
        }
        if zs.degree() as usize != n + 1
            || !crate::dyck::theta_zset(zs, n).is_valid_code()
        {
            return Err(Error::NotInDab(mono.to_string()));
        }
        out.push((zs, c.clone()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn shuffle_paper_example() {
        let sh = shuffle(&perm("132"), &perm("21"));
        let got: Vec<String> = sh.iter().map(|(p, _)| p.to_string()).collect();
        let want = vec![
            "13254", "13524", "13542", "15324", "15342", "15432", "51324", "51342",
            "51432", "54132",
        ];
        assert_eq!(got, want);
        assert!(sh.iter().all(|(_, &c)| c == 1));
    }

    #[test]
    fn shuffle_small() {
        let sh = shuffle(&perm("1"), &perm("1"));
        let got: Vec<String> = sh.iter().map(|(p, _)| p.to_string()).collect();
        assert_eq!(got, vec!["12", "21"]);
        // empty permutation is the unit
        let e = Permutation::identity(0);
        let sh = shuffle(&perm("132"), &e);
        assert_eq!(sh, FQSymElement::basis(perm("132")));
    }

    #[test]
    fn product_bilinear() {
        let mut f = FQSymElement::zero();
        f.add(perm("12"), 1);
        f.add(perm("21"), 1);
        let g = FQSymElement::basis(perm("1"));
        let prod = product(&f, &g);
        assert_eq!(prod.num_terms(), 6);
        assert!(prod.iter().all(|(_, &c)| c == 1));
        assert!(product(&FQSymElement::zero(), &g).is_zero());
    }

    #[test]
    fn one_power_is_symmetric_group() {
        let s3 = one_shuffle_power(3);
        assert_eq!(s3.num_terms(), 6);
        assert!(s3.iter().all(|(_, &c)| c == 1));
    }

    #[test]
    fn weights_of_elements() {
        let mut f = FQSymElement::zero();
        f.add(perm("12"), 1);
        f.add(perm("21"), 1);
        assert_eq!(
            weight_of_element(WeightKind::W1, &f),
            parse_poly("z1*z1p*z2p + z1*z2*z1p").unwrap()
        );
        assert!(weight_of_element(WeightKind::W1, &FQSymElement::zero()).is_zero());
        assert_eq!(
            weight_of_element(WeightKind::W4, &one_shuffle_power(3)),
            parse_poly("x*y^3 + 4*x^2*y^2 + x^3*y").unwrap()
        );
    }

    #[test]
    fn dab_examples() {
        let w11 = weight(WeightKind::W1, &perm("1"));
        let got = dab_product(&w11, 1, &w11, 1).unwrap();
        assert_eq!(got, parse_poly("z1*z1p*z2p + z1*z2*z1p").unwrap());

        let w112 = weight(WeightKind::W1, &perm("12"));
        let got = dab_product(&w112, 2, &w11, 1).unwrap();
        let want = &weight_of_element(
            WeightKind::W1,
            &{
                let mut f = FQSymElement::zero();
                for s in ["123", "132", "312"] {
                    f.add(perm(s), 1);
                }
                f
            },
        );
        assert_eq!(&got, want);

        // unit law
        let unit = Poly::one();
        assert_eq!(dab_product(&w112, 2, &unit, 0).unwrap(), w112);
        assert_eq!(dab_product(&unit, 0, &w112, 2).unwrap(), w112);
    }

    #[test]
    fn dab_validation() {
        // z1*z3*z1p*z3p is not a w1 monomial (its Θ image is not a valid code)
        let bad = parse_poly("z1*z3*z1p*z3p").unwrap();
        assert!(matches!(
            dab_product(&bad, 3, &Poly::one(), 0),
            Err(Error::NotInDab(_))
        ));
        // grade mismatch: w1(1) against grade 2
        let w11 = weight(WeightKind::W1, &perm("1"));
        assert!(dab_product(&w11, 2, &Poly::one(), 0).is_err());
        // index out of grade range
        let shifted = crate::polyring::gamma_shift(2, &w11);
        assert!(matches!(
            dab_product(&shifted, 1, &Poly::one(), 0),
            Err(Error::InvalidGrade(_))
        ));
    }

    #[test]
    fn shudif_homomorphism_small() {
        // w1(π ⧢ σ) = w1(π) • w1(σ) for all pairs with n+m <= 5
        for n in 1..=4usize {
            for m in 1..=4usize {
                if n + m > 5 {
                    continue;
                }
                crate::permstat::for_each_permutation(n, |pw| {
                    let p = Permutation::new(pw.to_vec()).unwrap();
                    crate::permstat::for_each_permutation(m, |qw| {
                        let q = Permutation::new(qw.to_vec()).unwrap();
                        let lhs = weight_of_element(WeightKind::W1, &shuffle(&p, &q));
                        let rhs = dab_product(
                            &weight(WeightKind::W1, &p),
                            n,
                            &weight(WeightKind::W1, &q),
                            m,
                        )
                        .unwrap();
                        assert_eq!(lhs, rhs, "shudif failed for {p} ⧢ {q}");
                    });
                });
            }
        }
    }
}
