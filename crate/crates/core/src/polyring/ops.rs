//! The linear operators on the polynomial ring: creation η, annihilation ∂,
//! the index shift Γ, the paired creation/annihilation sum Φ, block
//! symmetrization, the exponent-parity operator Ψ, substitution, evaluation,
//! and operator symbols.

use super::{Monomial, Poly, VarId, ZSet};
use crate::error::{Error, Result};
use num::complex::Complex64;
use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Creation operator: set `z_v = 0`, then multiply by `z_v`. Kills every term
/// containing `v`, adjoins `v` to the rest. Nilpotent: η² = 0.
pub fn eta(v: VarId, f: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in f.iter() {
        if !m.contains(v) {
            out.add_term(m.mul(&Monomial::var(v)), c.clone());
        }
    }
    out
}

/// Formal partial derivative in `z_v`: on multiaffine input, terms containing
/// `v` lose it, others vanish.
pub fn partial(v: VarId, f: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in f.iter() {
        let e = m.exponent_of(v);
        if e > 0 {
            let mut pairs: Vec<(VarId, u32)> = m.factors().to_vec();
            for p in pairs.iter_mut() {
                if p.0 == v {
                    p.1 -= 1;
                }
            }
            out.add_term(
                Monomial::from_pairs(pairs),
                c * BigRational::from_integer(BigInt::from(e)),
            );
        }
    }
    out
}

/// η over a set; the factors act on distinct variables, so order is immaterial.
pub fn eta_set(vs: &[VarId], f: &Poly) -> Poly {
    let mut acc = f.clone();
    for &v in vs {
        acc = eta(v, &acc);
    }
    acc
}

/// ∂ over a set.
pub fn partial_set(vs: &[VarId], f: &Poly) -> Poly {
    let mut acc = f.clone();
    for &v in vs {
        acc = partial(v, &acc);
    }
    acc
}

/// Γ_k: renames every `z(i, ·)` to `z(i+k, ·)`; x, y and shadows are fixed.
pub fn gamma_shift(k: u32, f: &Poly) -> Poly {
    f.map_vars(|v| match v {
        VarId::Z { index, primed } => VarId::Z {
            index: index + k,
            primed,
        },
        other => other,
    })
}

/// Φ = Σ_{T ⊆ F, S ⊆ G, |S| = |T|+1} η^T ∂^S on a multiaffine polynomial in
/// the F ∪ G variables. Expansion iterates only over T avoiding the term's
/// support and S inside it; all other summands vanish.
pub fn phi(f: &Poly, fvars: &BTreeSet<VarId>, gvars: &BTreeSet<VarId>) -> Poly {
    assert!(
        fvars.is_disjoint(gvars),
        "creation and annihilation blocks must be disjoint"
    );
    for (m, _) in f.iter() {
        for &(v, e) in m.factors() {
            assert!(
                e == 1 || (!fvars.contains(&v) && !gvars.contains(&v)),
                "input must be multiaffine in the operator variables"
            );
        }
    }
    let mut out = Poly::zero();
    for (m, c) in f.iter() {
        let avail_t: Vec<VarId> = fvars.iter().copied().filter(|&v| !m.contains(v)).collect();
        let avail_s: Vec<VarId> = gvars.iter().copied().filter(|&v| m.contains(v)).collect();
        for tmask in 0u32..1 << avail_t.len() {
            let tk = tmask.count_ones();
            for smask in 0u32..1 << avail_s.len() {
                if smask.count_ones() != tk + 1 {
                    continue;
                }
                let mut pairs: Vec<(VarId, u32)> = m
                    .factors()
                    .iter()
                    .copied()
                    .filter(|&(v, _)| {
                        !avail_s
                            .iter()
                            .enumerate()
                            .any(|(i, &s)| s == v && smask >> i & 1 == 1)
                    })
                    .collect();
                for (i, &t) in avail_t.iter().enumerate() {
                    if tmask >> i & 1 == 1 {
                        pairs.push((t, 1));
                    }
                }
                out.add_term(Monomial::from_pairs(pairs), c.clone());
            }
        }
    }
    out
}

/// Packed-bitmask Φ for a single multiaffine monomial over `[total] ∪ [total]'`,
/// with F = `[n] ∪ [n]'` and G the complementary index range. Each (T, S)
/// choice contributes one distinct output monomial.
pub fn phi_zset(m: ZSet, n: usize, total: usize) -> Vec<ZSet> {
    let fmask: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let gmask: u64 = if total == 0 {
        0
    } else {
        ((1u64 << total) - 1) & !fmask
    };
    // candidate positions: (plane, bit)
    let mut avail_t: Vec<(bool, u32)> = Vec::new();
    let mut avail_s: Vec<(bool, u32)> = Vec::new();
    collect_bits(fmask & !m.unprimed, false, &mut avail_t);
    collect_bits(fmask & !m.primed, true, &mut avail_t);
    collect_bits(gmask & m.unprimed, false, &mut avail_s);
    collect_bits(gmask & m.primed, true, &mut avail_s);
    let mut out = Vec::new();
    for tmask in 0u32..1 << avail_t.len() {
        let tk = tmask.count_ones();
        for smask in 0u32..1 << avail_s.len() {
            if smask.count_ones() != tk + 1 {
                continue;
            }
            let mut zs = m;
            for (i, &(primed, bit)) in avail_s.iter().enumerate() {
                if smask >> i & 1 == 1 {
                    if primed {
                        zs.primed &= !(1 << bit);
                    } else {
                        zs.unprimed &= !(1 << bit);
                    }
                }
            }
            for (i, &(primed, bit)) in avail_t.iter().enumerate() {
                if tmask >> i & 1 == 1 {
                    if primed {
                        zs.primed |= 1 << bit;
                    } else {
                        zs.unprimed |= 1 << bit;
                    }
                }
            }
            out.push(zs);
        }
    }
    out
}

fn collect_bits(mut mask: u64, primed: bool, out: &mut Vec<(bool, u32)>) {
    while mask != 0 {
        out.push((primed, mask.trailing_zeros()));
        mask &= mask - 1;
    }
}

/// S_A: average of `f` over all permutations of the variables in `block`.
pub fn symmetrize(block: &[VarId], f: &Poly) -> Poly {
    let k = block.len();
    if k <= 1 {
        return f.clone();
    }
    let mut indices: Vec<usize> = (0..k).collect();
    let mut acc = Poly::zero();
    let mut count = 0u64;
    // Heap's algorithm over index assignments
    let mut c = vec![0usize; k];
    let apply = |idx: &[usize], acc: &mut Poly, count: &mut u64| {
        let map: BTreeMap<VarId, VarId> =
            block.iter().zip(idx.iter()).map(|(&v, &i)| (v, block[i])).collect();
        let image = f.map_vars(|v| *map.get(&v).unwrap_or(&v));
        *acc = &*acc + &image;
        *count += 1;
    };
    apply(&indices, &mut acc, &mut count);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                indices.swap(0, i);
            } else {
                indices.swap(c[i], i);
            }
            apply(&indices, &mut acc, &mut count);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    acc.scale(&BigRational::new(BigInt::one(), BigInt::from(count)))
}

/// Ψ: reduces every exponent mod 2, merging like images.
pub fn psi(f: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in f.iter() {
        out.add_term(
            Monomial::from_pairs(m.factors().iter().map(|&(v, e)| (v, e % 2))),
            c.clone(),
        );
    }
    out
}

/// Simultaneous exact substitution of polynomials for variables.
pub fn substitute(f: &Poly, map: &BTreeMap<VarId, Poly>) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in f.iter() {
        let mut term = Poly::constant(c.clone());
        for &(v, e) in m.factors() {
            let factor = match map.get(&v) {
                Some(g) => g.pow(e),
                None => Poly::monomial(Monomial::from_pairs([(v, e)]), BigRational::one()),
            };
            term = &term * &factor;
        }
        out = &out + &term;
    }
    out
}

/// Exact rational evaluation; every variable of `f` must be bound.
pub fn eval_rational(f: &Poly, point: &BTreeMap<VarId, BigRational>) -> Result<BigRational> {
    let mut acc = BigRational::zero();
    for (m, c) in f.iter() {
        let mut t = c.clone();
        for &(v, e) in m.factors() {
            let x = point.get(&v).ok_or(Error::UnboundVariable(v))?;
            for _ in 0..e {
                t *= x;
            }
        }
        acc += t;
    }
    Ok(acc)
}

/// Double-precision complex evaluation.
pub fn eval_complex(f: &Poly, point: &BTreeMap<VarId, Complex64>) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for (m, c) in f.iter() {
        let mut t = Complex64::new(rational_to_f64(c), 0.0);
        for &(v, e) in m.factors() {
            let x = *point.get(&v).ok_or(Error::UnboundVariable(v))?;
            for _ in 0..e {
                t *= x;
            }
        }
        acc += t;
    }
    Ok(acc)
}

pub fn rational_to_f64(c: &BigRational) -> f64 {
    c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN)
}

/// The symbol `G_T(z, w) = Σ_{S ⊆ V} T(z^S) · w^{V∖S}` of a linear operator
/// given by its images on the multiaffine monomials over `vars`; shadow
/// variables `w_v` form a disjoint namespace.
pub fn operator_symbol(vars: &[VarId], op: impl Fn(&Monomial) -> Poly) -> Poly {
    assert!(vars.len() <= 24, "symbol expansion is exponential in |V|");
    for v in vars {
        assert!(v.is_z(), "symbols are taken over z-variables");
    }
    let mut out = Poly::zero();
    for mask in 0u32..1 << vars.len() {
        let subset = Monomial::from_pairs(
            vars.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| (v, 1)),
        );
        let shadow = Monomial::from_pairs(
            vars.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 0)
                .map(|(_, &v)| (v.shadow_of().unwrap(), 1)),
        );
        let image = op(&subset);
        for (m, c) in image.iter() {
            out.add_term(m.mul(&shadow), c.clone());
        }
    }
    out
}
