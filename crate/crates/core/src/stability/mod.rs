//! Stability certification: exact univariate decisions (Sturm, Routh), the
//! symmetric-block collapse, and the semi-decision pipeline for multivariate
//! stability.
//!
//! Multivariate stability is not decided exactly; `StabilityVerdict` keeps
//! the epistemic status explicit. `Certified` and `Refuted` are backed by
//! exact arithmetic (a refuting zero is re-verified with outward-rounded
//! interval arithmetic, a refuting inequality is evaluated in exact
//! rationals); `Inconclusive` reports how hard the sampler looked.
//!
//! Two region conventions coexist deliberately: plain stability uses the
//! OPEN upper half-plane, Hurwitz stability the CLOSED right half-plane
//! (so boundary points, the origin included, are in scope for the latter).

mod aberth;
mod interval;
mod routh;
pub(crate) mod sturm;

pub use aberth::complex_roots;
pub use interval::{eval_interval, CInterval, Interval};
pub use routh::is_hurwitz_univariate;
pub use sturm::{count_distinct_real_roots, is_real_rooted, is_real_rooted_negative};

use crate::error::{Error, Result};
use crate::polyring::{
    self, eval_complex, operator_symbol, phi, substitute, Monomial, Poly, UnivariatePoly, VarId,
};
use num::complex::Complex64;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Relative tolerance for sampled near-zeros, confirmed by interval
/// arithmetic against the same scale.
pub const SAMPLING_REL_TOL: f64 = 1e-9;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Region {
    UpperHalfPlane,
    RightHalfPlane,
}

/// Exactly how a refutation was established.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A point of the region where |f| is confirmed below tolerance.
    Zero {
        point: BTreeMap<String, ComplexValue>,
        abs_value: f64,
    },
    /// A real rational point with an exactly negative inequality value
    /// `∂_i f · ∂_j f − f · ∂_i∂_j f`, impossible for real stable
    /// multiaffine polynomials.
    NegativeDelta {
        point: BTreeMap<String, String>,
        pair: (String, String),
        value: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum StabilityVerdict {
    /// Exact decision: stable on the region.
    Certified { method: String },
    /// Exact or confirmed counterexample.
    Refuted { witness: Witness },
    /// No counterexample found within budget.
    Inconclusive {
        samples: u64,
        min_abs: Option<f64>,
    },
}

impl StabilityVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, StabilityVerdict::Refuted { .. })
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, StabilityVerdict::Certified { .. })
    }
}

/// Verifies `f` is symmetric in `block` (exactly, via adjacent transpositions)
/// then substitutes one representative for the whole block.
pub fn gws_collapse(f: &Poly, block: &[VarId]) -> Result<Poly> {
    for w in block.windows(2) {
        let swapped = f.map_vars(|v| {
            if v == w[0] {
                w[1]
            } else if v == w[1] {
                w[0]
            } else {
                v
            }
        });
        if &swapped != f {
            return Err(Error::NotSymmetric(w[0], w[1]));
        }
    }
    let Some(&rep) = block.iter().min() else {
        return Ok(f.clone());
    };
    Ok(f.map_vars(|v| if block.contains(&v) { rep } else { v }))
}

/// Exact stability test for a homogeneous polynomial in at most two
/// variables: stable iff its dehomogenization is real-rooted, degree
/// deficiency counting as (real) roots at infinity.
pub fn homogeneous_bivariate_stable(h: &Poly) -> Result<bool> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if h.homogeneous_degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    let vars: Vec<VarId> = h.support().into_iter().collect();
    if vars.len() > 2 {
        return Err(Error::InvalidParameter(format!(
            "expected at most two variables, got {}",
            vars.len()
        )));
    }
    if vars.len() <= 1 {
        // c·v^k: vanishes only at 0, which no open half-plane contains
        return Ok(true);
    }
    let mut map = BTreeMap::new();
    map.insert(vars[0], Poly::var(VarId::X));
    map.insert(vars[1], Poly::one());
    let dehom = UnivariatePoly::from_poly(&substitute(h, &map).map_vars(|_| VarId::X))?;
    if dehom.is_zero() {
        // cannot happen for nonzero homogeneous h
        return Ok(false);
    }
    is_real_rooted(&dehom)
}

/// The printed closed form of the Φ symbol, expanded and compared exactly
/// against the subset-sum definition of the symbol.
pub fn phi_symbol_closed_form_check(n: usize, m: usize) -> bool {
    assert!(n >= 1 && m >= 1 && n <= 3 && m <= 3);
    let fvars: BTreeSet<VarId> = (1..=n as u32)
        .flat_map(|i| [VarId::z(i), VarId::zp(i)])
        .collect();
    let gvars: BTreeSet<VarId> = (n as u32 + 1..=(n + m) as u32)
        .flat_map(|i| [VarId::z(i), VarId::zp(i)])
        .collect();
    let all: Vec<VarId> = fvars.iter().chain(gvars.iter()).copied().collect();
    let lhs = operator_symbol(&all, |mono| {
        phi(
            &Poly::monomial(mono.clone(), BigRational::one()),
            &fvars,
            &gvars,
        )
    });

    let fl: Vec<VarId> = fvars.iter().copied().collect();
    let gl: Vec<VarId> = gvars.iter().copied().collect();
    let mut rhs = Poly::zero();
    for tmask in 0u32..1 << fl.len() {
        let tk = tmask.count_ones();
        for smask in 0u32..1 << gl.len() {
            if smask.count_ones() != tk + 1 {
                continue;
            }
            let mut term = Poly::one();
            for (idx, &e) in gl.iter().enumerate() {
                if smask >> idx & 1 == 0 {
                    term = &term * &(&Poly::var(e) + &Poly::var(e.shadow_of().unwrap()));
                }
            }
            for (idx, &f) in fl.iter().enumerate() {
                if tmask >> idx & 1 == 0 {
                    term = &term * &(&Poly::var(f) + &Poly::var(f.shadow_of().unwrap()));
                } else {
                    term = &term
                        * &Poly::monomial(
                            Monomial::from_pairs([(f, 1), (f.shadow_of().unwrap(), 1)]),
                            BigRational::one(),
                        );
                }
            }
            rhs = &rhs + &term;
        }
    }
    lhs == rhs
}

/// Convenience: exact real-rootedness of a univariate polynomial given as a
/// sparse polynomial.
pub fn check_realrooted(p: &Poly) -> Result<bool> {
    is_real_rooted(&UnivariatePoly::from_poly(p)?)
}

/// Semi-decision pipeline for stability of `f` on the region.
///
/// Exact reductions first (diagonal restrictions, primed/unprimed split,
/// symmetric-block collapse down to at most two variables), then falsification
/// by exact rational inequality sampling and by confirmed complex near-zeros.
/// `Certified` is only ever produced by the exact reductions.
pub fn check_stable(f: &Poly, region: Region, budget: u64, seed: u64) -> StabilityVerdict {
    let vars: Vec<VarId> = f.support().into_iter().collect();

    // zero polynomial vanishes everywhere, in particular inside the region
    if f.is_zero() {
        let point = interior_point(&vars, region);
        return refute_zero_exact(&point, 0.0);
    }
    if vars.is_empty() {
        return StabilityVerdict::Certified {
            method: "nonzero constant".into(),
        };
    }

    // closed right half-plane includes the origin
    if region == Region::RightHalfPlane && f.coeff(&Monomial::one()).is_zero() {
        let point: BTreeMap<String, ComplexValue> = vars
            .iter()
            .map(|v| (v.name(), ComplexValue { re: 0.0, im: 0.0 }))
            .collect();
        return StabilityVerdict::Refuted {
            witness: Witness::Zero {
                point,
                abs_value: 0.0,
            },
        };
    }

    // exact refutation from the full diagonal
    let diag = UnivariatePoly::from_poly(&f.map_vars(|_| VarId::X))
        .expect("diagonal is univariate");
    if diag.is_zero() {
        let point = interior_point(&vars, region);
        return refute_zero_exact(&point, 0.0);
    }
    if let Some(x0) = univariate_region_zero(&diag, region) {
        let point: BTreeMap<VarId, Complex64> = vars.iter().map(|&v| (v, x0)).collect();
        if let Some(w) = confirm_zero(f, &point) {
            return StabilityVerdict::Refuted { witness: w };
        }
    }

    // primed/unprimed split diagonal
    if let Some(split) = split_diagonal(f, &vars) {
        if region == Region::UpperHalfPlane {
            if let Some((a0, b0)) = bivariate_homogeneous_zero(&split) {
                let point: BTreeMap<VarId, Complex64> = vars
                    .iter()
                    .map(|&v| {
                        (
                            v,
                            match v {
                                VarId::Z { primed: false, .. } => a0,
                                _ => b0,
                            },
                        )
                    })
                    .collect();
                if let Some(w) = confirm_zero(f, &point) {
                    return StabilityVerdict::Refuted { witness: w };
                }
            }
        }
    }

    // exact decision for few variables, helped by symmetric collapse
    match exact_decision(f, &vars, region) {
        ExactOutcome::Certified(method) => {
            return StabilityVerdict::Certified { method };
        }
        ExactOutcome::RefutedAt(point) => {
            if let Some(w) = confirm_zero(f, &point) {
                return StabilityVerdict::Refuted { witness: w };
            }
        }
        ExactOutcome::Unknown => {}
    }

    // exact rational inequality sampling (real stability criterion for
    // multiaffine polynomials)
    if region == Region::UpperHalfPlane && f.is_multiaffine() && vars.len() >= 2 {
        if let Some(w) = branden_delta_sample(f, &vars, budget, seed) {
            return StabilityVerdict::Refuted { witness: w };
        }
    }

    // randomized search for confirmed zeros
    let (min_abs, refutation) = complex_sample(f, &vars, region, budget, seed);
    if let Some(w) = refutation {
        return StabilityVerdict::Refuted { witness: w };
    }
    StabilityVerdict::Inconclusive {
        samples: budget,
        min_abs,
    }
}

fn interior_point(vars: &[VarId], region: Region) -> BTreeMap<VarId, Complex64> {
    let x = match region {
        Region::UpperHalfPlane => Complex64::new(0.0, 1.0),
        Region::RightHalfPlane => Complex64::new(1.0, 0.0),
    };
    vars.iter().map(|&v| (v, x)).collect()
}

fn refute_zero_exact(point: &BTreeMap<VarId, Complex64>, abs: f64) -> StabilityVerdict {
    StabilityVerdict::Refuted {
        witness: Witness::Zero {
            point: point
                .iter()
                .map(|(v, z)| (v.name(), ComplexValue { re: z.re, im: z.im }))
                .collect(),
            abs_value: abs,
        },
    }
}

/// A zero of `g` lying in the region (strictly inside for the upper
/// half-plane, closed for the right), or None when g is region-stable.
fn univariate_region_zero(g: &UnivariatePoly, region: Region) -> Option<Complex64> {
    match region {
        Region::UpperHalfPlane => {
            if is_real_rooted(g).unwrap_or(true) {
                None
            } else {
                complex_roots(g)
                    .into_iter()
                    .filter(|z| z.im > 0.0)
                    .max_by(|a, b| a.im.partial_cmp(&b.im).unwrap())
            }
        }
        Region::RightHalfPlane => {
            if is_hurwitz_univariate(g).unwrap_or(true) {
                None
            } else {
                complex_roots(g)
                    .into_iter()
                    .filter(|z| z.re > -1e-12)
                    .max_by(|a, b| a.re.partial_cmp(&b.re).unwrap())
                    .map(|z| {
                        if z.re.abs() < 1e-12 {
                            Complex64::new(0.0, z.im)
                        } else {
                            z
                        }
                    })
            }
        }
    }
}

/// Restriction z_i -> a, z_{i'} -> b when every variable is a z-variable and
/// both planes occur; None otherwise.
fn split_diagonal(f: &Poly, vars: &[VarId]) -> Option<Poly> {
    let mut saw_plain = false;
    let mut saw_primed = false;
    for v in vars {
        match v {
            VarId::Z { primed: false, .. } => saw_plain = true,
            VarId::Z { primed: true, .. } => saw_primed = true,
            _ => return None,
        }
    }
    if !(saw_plain && saw_primed) {
        return None;
    }
    Some(f.map_vars(|v| match v {
        VarId::Z { primed: false, .. } => VarId::z(1),
        _ => VarId::zp(1),
    }))
}

/// For homogeneous bivariate g(a, b) that is not stable, produce a zero with
/// both coordinates in the open upper half-plane by rotating a root of
/// g(x, 1).
fn bivariate_homogeneous_zero(g: &Poly) -> Option<(Complex64, Complex64)> {
    g.homogeneous_degree()?;
    let vars: Vec<VarId> = g.support().into_iter().collect();
    if vars.len() != 2 {
        return None;
    }
    let mut map = BTreeMap::new();
    map.insert(vars[0], Poly::var(VarId::X));
    map.insert(vars[1], Poly::one());
    let dehom = UnivariatePoly::from_poly(&substitute(g, &map).map_vars(|_| VarId::X)).ok()?;
    if dehom.is_zero() || is_real_rooted(&dehom).unwrap_or(true) {
        return None;
    }
    let x0 = complex_roots(&dehom)
        .into_iter()
        .filter(|z| z.im > 1e-12)
        .max_by(|a, b| a.im.partial_cmp(&b.im).unwrap())?;
    let phi_angle = x0.arg();
    let theta = (std::f64::consts::PI - phi_angle) / 2.0;
    let rot = Complex64::from_polar(1.0, theta);
    // vars[0] carries x0, vars[1] carries 1, both rotated into the region
    let a0 = rot * x0;
    let b0 = rot;
    // map back: which original plane got which value is decided by the caller
    Some(if vars[0] < vars[1] { (a0, b0) } else { (b0, a0) })
}

enum ExactOutcome {
    Certified(String),
    RefutedAt(BTreeMap<VarId, Complex64>),
    Unknown,
}

/// Tries to decide exactly: collapse symmetric multiaffine blocks, then
/// univariate (Sturm/Routh) or homogeneous-bivariate decisions.
fn exact_decision(f: &Poly, vars: &[VarId], region: Region) -> ExactOutcome {
    let mut g = f.clone();
    // merge variables that f is symmetric in, when multiaffine in them
    let classes = symmetric_classes(&g, vars);
    let mut class_of: BTreeMap<VarId, VarId> = BTreeMap::new();
    for class in &classes {
        if class.len() < 2 {
            continue;
        }
        let multiaffine_in_class = g
            .iter()
            .all(|(m, _)| class.iter().all(|&v| m.exponent_of(v) <= 1));
        if multiaffine_in_class {
            let rep = *class.iter().min().unwrap();
            for &v in class {
                class_of.insert(v, rep);
            }
        }
    }
    if !class_of.is_empty() {
        g = g.map_vars(|v| *class_of.get(&v).unwrap_or(&v));
    }
    let gvars: Vec<VarId> = g.support().into_iter().collect();
    match gvars.len() {
        0 => ExactOutcome::Certified("collapsed to a nonzero constant".into()),
        1 => {
            let uni = UnivariatePoly::from_poly(&g.map_vars(|_| VarId::X)).unwrap();
            let stable = match region {
                Region::UpperHalfPlane => is_real_rooted(&uni).unwrap_or(false),
                Region::RightHalfPlane => is_hurwitz_univariate(&uni).unwrap_or(false),
            };
            if stable {
                ExactOutcome::Certified(match region {
                    Region::UpperHalfPlane => {
                        "symmetric collapse to one variable; Sturm real-rooted".into()
                    }
                    Region::RightHalfPlane => {
                        "symmetric collapse to one variable; Routh".into()
                    }
                })
            } else if let Some(x0) = univariate_region_zero(&uni, region) {
                // everything collapsed to one variable: the witness is a
                // diagonal point
                let back: BTreeMap<VarId, Complex64> =
                    vars.iter().map(|&v| (v, x0)).collect();
                ExactOutcome::RefutedAt(back)
            } else {
                ExactOutcome::Unknown
            }
        }
        2 if region == Region::UpperHalfPlane && g.homogeneous_degree().is_some() => {
            match homogeneous_bivariate_stable(&g) {
                Ok(true) => ExactOutcome::Certified(
                    "symmetric collapse to a homogeneous bivariate; dehomogenized Sturm"
                        .into(),
                ),
                Ok(false) => {
                    if let Some((a0, b0)) = bivariate_homogeneous_zero(&g) {
                        let ga = gvars[0];
                        let point: BTreeMap<VarId, Complex64> = vars
                            .iter()
                            .map(|&v| {
                                let rep = *class_of.get(&v).unwrap_or(&v);
                                (v, if rep == ga { a0 } else { b0 })
                            })
                            .collect();
                        ExactOutcome::RefutedAt(point)
                    } else {
                        ExactOutcome::Unknown
                    }
                }
                Err(_) => ExactOutcome::Unknown,
            }
        }
        _ => ExactOutcome::Unknown,
    }
}

/// Partition of `vars` into maximal blocks in which `f` is swap-invariant.
fn symmetric_classes(f: &Poly, vars: &[VarId]) -> Vec<Vec<VarId>> {
    let k = vars.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if find(&mut parent, i) == find(&mut parent, j) {
                continue;
            }
            let (a, b) = (vars[i], vars[j]);
            let swapped = f.map_vars(|v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            });
            if &swapped == f {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<VarId>> = BTreeMap::new();
    for i in 0..k {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(vars[i]);
    }
    classes.into_values().collect()
}

/// Confirms |f(point)| <= tol with outward-rounded interval arithmetic,
/// the tolerance being relative to Σ|c|·∏|coordinate| at the point.
fn confirm_zero(f: &Poly, point: &BTreeMap<VarId, Complex64>) -> Option<Witness> {
    let scale: f64 = f
        .iter()
        .map(|(m, c)| {
            let mut t = polyring::rational_to_f64(c).abs();
            for &(v, e) in m.factors() {
                let z = point.get(&v).copied().unwrap_or(Complex64::new(1.0, 0.0));
                t *= z.norm().powi(e as i32);
            }
            t
        })
        .sum();
    let boxes: BTreeMap<VarId, CInterval> = point
        .iter()
        .map(|(&v, z)| (v, CInterval::point(z.re, z.im)))
        .collect();
    let enclosure = eval_interval(f, &boxes).ok()?;
    let upper = enclosure.mag_upper();
    if upper <= SAMPLING_REL_TOL * scale.max(f64::MIN_POSITIVE) {
        Some(Witness::Zero {
            point: point
                .iter()
                .map(|(v, z)| (v.name(), ComplexValue { re: z.re, im: z.im }))
                .collect(),
            abs_value: upper,
        })
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Brändén inequality sampling
// ---------------------------------------------------------------------------

/// Exact sampling of Δ_{ij} f = ∂_i f ∂_j f − f ∂_i ∂_j f at random dyadic
/// rational points (numerators in [-32, 32]\{0} over denominator 2). For real
/// stable multiaffine f the value is nonnegative at every real point, so an
/// exactly negative sample refutes stability. Arithmetic runs in scaled i128
/// with a BigInt fallback; the reported value is exact.
fn branden_delta_sample(
    f: &Poly,
    vars: &[VarId],
    budget: u64,
    seed: u64,
) -> Option<Witness> {
    if vars.len() > 64 {
        return None;
    }
    // terms as variable masks; coefficients must be integers that fit i64
    // (true for all extension-census polynomials), otherwise fall back to
    // exact rationals per sample.
    let index: BTreeMap<VarId, usize> = vars.iter().copied().enumerate().map(|(i, v)| (v, i)).collect();
    let mut masks: Vec<(u64, i64)> = Vec::with_capacity(f.num_terms());
    let mut small = true;
    for (m, c) in f.iter() {
        if !c.denom().is_one() {
            small = false;
            break;
        }
        let Some(ci) = c.numer().to_i64() else {
            small = false;
            break;
        };
        let mut mask = 0u64;
        for &(v, _) in m.factors() {
            mask |= 1 << index[&v];
        }
        masks.push((mask, ci));
    }
    let degree = f.degree().unwrap_or(0) as u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_d317);
    let mut nums = vec![0i64; vars.len()];
    for _ in 0..budget {
        for slot in nums.iter_mut() {
            let mut v = 0;
            while v == 0 {
                v = rng.gen_range(-32i64..=32);
            }
            *slot = v;
        }
        let i = rng.gen_range(0..vars.len());
        let mut j = rng.gen_range(0..vars.len());
        while j == i {
            j = rng.gen_range(0..vars.len());
        }
        let delta_sign = if small {
            delta_sign_i128(&masks, degree, &nums, i, j)
                .unwrap_or_else(|| delta_sign_exact(f, vars, &nums, vars[i], vars[j]))
        } else {
            delta_sign_exact(f, vars, &nums, vars[i], vars[j])
        };
        if delta_sign < 0 {
            // recompute the exact value for the report
            let value = delta_value_exact(f, vars, &nums, vars[i], vars[j]);
            let point = vars
                .iter()
                .zip(&nums)
                .map(|(v, n)| (v.name(), format!("{n}/2")))
                .collect();
            return Some(Witness::NegativeDelta {
                point,
                pair: (vars[i].name(), vars[j].name()),
                value: value.to_string(),
            });
        }
    }
    None
}

/// Sign of Δ_{ij} at x = nums/2 via one pass over the mask terms; None on
/// i128 overflow.
fn delta_sign_i128(
    masks: &[(u64, i64)],
    degree: u32,
    nums: &[i64],
    i: usize,
    j: usize,
) -> Option<i32> {
    let (mut f_acc, mut fi_acc, mut fj_acc, mut fij_acc) = (0i128, 0i128, 0i128, 0i128);
    let bit_i = 1u64 << i;
    let bit_j = 1u64 << j;
    for &(mask, c) in masks {
        let mut prod: i128 = c as i128;
        let mut rest = mask & !(bit_i | bit_j);
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            prod = prod.checked_mul(nums[b] as i128)?;
        }
        let popcount = mask.count_ones();
        let scale = degree.checked_sub(popcount)?; // masks have degree <= total degree
        let base = prod.checked_mul(1i128.checked_shl(scale)?)?;
        let has_i = mask & bit_i != 0;
        let has_j = mask & bit_j != 0;
        let with_i = if has_i { nums[i] as i128 } else { 1 };
        let with_j = if has_j { nums[j] as i128 } else { 1 };
        f_acc = f_acc.checked_add(base.checked_mul(with_i)?.checked_mul(with_j)?)?;
        if has_i {
            fi_acc = fi_acc.checked_add(base.checked_mul(2)?.checked_mul(with_j)?)?;
        }
        if has_j {
            fj_acc = fj_acc.checked_add(base.checked_mul(2)?.checked_mul(with_i)?)?;
        }
        if has_i && has_j {
            fij_acc = fij_acc.checked_add(base.checked_mul(4)?)?;
        }
    }
    let lhs = BigInt::from(fi_acc) * BigInt::from(fj_acc);
    let rhs = BigInt::from(f_acc) * BigInt::from(fij_acc);
    let d = lhs - rhs;
    Some(if d.is_negative() {
        -1
    } else if d.is_zero() {
        0
    } else {
        1
    })
}

fn point_map(vars: &[VarId], nums: &[i64]) -> BTreeMap<VarId, BigRational> {
    vars.iter()
        .zip(nums)
        .map(|(&v, &n)| (v, BigRational::new(BigInt::from(n), BigInt::from(2))))
        .collect()
}

fn delta_value_exact(
    f: &Poly,
    vars: &[VarId],
    nums: &[i64],
    vi: VarId,
    vj: VarId,
) -> BigRational {
    let pt = point_map(vars, nums);
    let fi = polyring::partial(vi, f);
    let fj = polyring::partial(vj, f);
    let fij = polyring::partial(vj, &fi);
    let e = |p: &Poly| polyring::eval_rational(p, &pt).unwrap();
    e(&fi) * e(&fj) - e(f) * e(&fij)
}

fn delta_sign_exact(f: &Poly, vars: &[VarId], nums: &[i64], vi: VarId, vj: VarId) -> i32 {
    let d = delta_value_exact(f, vars, nums, vi, vj);
    if d.is_negative() {
        -1
    } else if d.is_zero() {
        0
    } else {
        1
    }
}

// ---------------------------------------------------------------------------
// Complex sampling
// ---------------------------------------------------------------------------

/// Seeded random sampling of the open region (boundary included for the
/// right half-plane): per-variable log-uniform modulus in [1e-2, 1e2] and
/// uniform argument. Chunked deterministically so results are independent of
/// thread count. Returns (min |f| seen, confirmed refutation if any).
fn complex_sample(
    f: &Poly,
    vars: &[VarId],
    region: Region,
    budget: u64,
    seed: u64,
) -> (Option<f64>, Option<Witness>) {
    if budget == 0 {
        return (None, None);
    }
    const CHUNK: u64 = 1024;
    let chunks: Vec<u64> = (0..budget.div_ceil(CHUNK)).collect();
    let result = crate::exec::map_merge(
        &chunks,
        |&chunk| {
            let lo = chunk * CHUNK;
            let hi = (lo + CHUNK).min(budget);
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(chunk.wrapping_mul(0x9e37_79b9_7f4a_7c15)));
            let mut min_abs = f64::INFINITY;
            let mut refutation: Option<(u64, Witness)> = None;
            let mut point: BTreeMap<VarId, Complex64> = BTreeMap::new();
            for idx in lo..hi {
                for &v in vars {
                    let modulus = 10f64.powf(rng.gen_range(-2.0..2.0));
                    let angle = match region {
                        Region::UpperHalfPlane => rng.gen_range(1e-6..std::f64::consts::PI - 1e-6),
                        Region::RightHalfPlane => {
                            if rng.gen_ratio(1, 16) {
                                // boundary point: purely imaginary
                                if rng.gen_bool(0.5) {
                                    std::f64::consts::FRAC_PI_2
                                } else {
                                    -std::f64::consts::FRAC_PI_2
                                }
                            } else {
                                rng.gen_range(
                                    -std::f64::consts::FRAC_PI_2..std::f64::consts::FRAC_PI_2,
                                )
                            }
                        }
                    };
                    point.insert(v, Complex64::from_polar(modulus, angle));
                }
                let value = eval_complex(f, &point).expect("all variables bound");
                let scale = magnitude_scale(f, &point);
                let abs = value.norm();
                min_abs = min_abs.min(abs);
                if refutation.is_none() && abs <= SAMPLING_REL_TOL * scale {
                    if let Some(w) = confirm_zero(f, &point) {
                        refutation = Some((idx, w));
                    }
                }
            }
            (min_abs, refutation)
        },
        (f64::INFINITY, None),
        |(ma, ra), (mb, rb)| {
            let r = match (ra, rb) {
                (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
                (a, b) => a.or(b),
            };
            (ma.min(mb), r)
        },
    );
    let (min_abs, refutation) = result;
    (
        if min_abs.is_finite() { Some(min_abs) } else { None },
        refutation.map(|(_, w)| w),
    )
}

fn magnitude_scale(f: &Poly, point: &BTreeMap<VarId, Complex64>) -> f64 {
    f.iter()
        .map(|(m, c)| {
            let mut t = polyring::rational_to_f64(c).abs();
            for &(v, e) in m.factors() {
                t *= point[&v].norm().powi(e as i32);
            }
            t
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    #[test]
    fn gws_collapse_examples() {
        let f = &Poly::var(VarId::z(1)) + &Poly::var(VarId::z(2));
        let c = gws_collapse(&f, &[VarId::z(1), VarId::z(2)]).unwrap();
        assert_eq!(c.to_string(), "2*z1");
        let g = &Poly::var(VarId::z(1)) * &Poly::var(VarId::z(2));
        assert_eq!(
            gws_collapse(&g, &[VarId::z(1), VarId::z(2)]).unwrap().to_string(),
            "z1^2"
        );
        let h = parse_poly("z1 + 2*z2").unwrap();
        assert!(matches!(
            gws_collapse(&h, &[VarId::z(1), VarId::z(2)]),
            Err(Error::NotSymmetric(..))
        ));
    }

    #[test]
    fn homogeneous_bivariate_examples() {
        let xy = parse_poly("x*y").unwrap();
        assert!(homogeneous_bivariate_stable(&xy).unwrap());
        let circle = parse_poly("x^2 + y^2").unwrap();
        assert!(!homogeneous_bivariate_stable(&circle).unwrap());
        let w4 = parse_poly("x*y^3 + 4*x^2*y^2 + x^3*y").unwrap();
        assert!(homogeneous_bivariate_stable(&w4).unwrap());
        let inhom = parse_poly("x + 1").unwrap();
        assert!(matches!(
            homogeneous_bivariate_stable(&inhom),
            Err(Error::NotHomogeneous)
        ));
        assert!(matches!(
            homogeneous_bivariate_stable(&Poly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn check_stable_monomial_certified() {
        let f = parse_poly("z1*z1p").unwrap();
        let v = check_stable(&f, Region::UpperHalfPlane, 100, 1);
        assert!(v.is_certified(), "{v:?}");
    }

    #[test]
    fn check_stable_refutes_simple_zero() {
        // z1 z2 + 1 vanishes at (i, i)
        let f = parse_poly("z1*z2 + 1").unwrap();
        let v = check_stable(&f, Region::UpperHalfPlane, 100, 1);
        match v {
            StabilityVerdict::Refuted {
                witness: Witness::Zero { point, abs_value },
            } => {
                assert!(abs_value < 1e-9);
                let z1 = &point["z1"];
                assert!(z1.im > 0.0);
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn check_stable_eulerian_inconclusive() {
        let p = crate::poset::LabeledPoset::from_covers(4, &[(1, 2), (3, 2), (3, 4)]).unwrap();
        let f = crate::eulerian::multivariate_eulerian(&p);
        let v = check_stable(&f, Region::UpperHalfPlane, 500, 7);
        match v {
            StabilityVerdict::Inconclusive { samples, min_abs } => {
                assert_eq!(samples, 500);
                assert!(min_abs.unwrap() > 0.0);
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn check_stable_branden_catches_real_instability() {
        // z1 z2 - z3 is unstable (zero at (1+i, 1+i, 2i)) but its diagonal
        // x^2 - x is real-rooted and the symmetric collapse z1^2 - z3 is
        // inhomogeneous, so only the inequality step can refute exactly:
        // Δ_{13} = -z2 goes negative at real points.
        let g = parse_poly("z1*z2 - z3").unwrap();
        let v = check_stable(&g, Region::UpperHalfPlane, 2000, 3);
        match v {
            StabilityVerdict::Refuted {
                witness: Witness::NegativeDelta { value, .. },
            } => {
                let val = crate::polyring::parse_rational(&value).unwrap();
                assert!(val.is_negative());
            }
            other => panic!("expected inequality refutation, got {other:?}"),
        }
        // GWS sanity: z1 z2 - 1 collapses to z^2 - 1, real-rooted, certified
        let f = parse_poly("z1*z2 - 1").unwrap();
        assert!(check_stable(&f, Region::UpperHalfPlane, 100, 3).is_certified());
    }

    #[test]
    fn check_stable_hurwitz_origin() {
        // closed right half-plane includes 0, where any constant-free
        // polynomial vanishes
        let f = parse_poly("z1*z2").unwrap();
        let v = check_stable(&f, Region::RightHalfPlane, 10, 1);
        assert!(v.is_refuted());
        let g = parse_poly("z1 + 1").unwrap();
        let v = check_stable(&g, Region::RightHalfPlane, 10, 1);
        assert!(v.is_certified(), "{v:?}");
    }

    #[test]
    fn symbol_closed_form_small() {
        assert!(phi_symbol_closed_form_check(1, 1));
        assert!(phi_symbol_closed_form_check(2, 1));
        assert!(phi_symbol_closed_form_check(1, 2));
    }

    #[test]
    fn sampling_deterministic() {
        let p = crate::poset::LabeledPoset::antichain(3);
        let f = crate::eulerian::multivariate_eulerian(&p);
        let a = complex_sample(&f, &f.support().into_iter().collect::<Vec<_>>(), Region::UpperHalfPlane, 2000, 42);
        let b = complex_sample(&f, &f.support().into_iter().collect::<Vec<_>>(), Region::UpperHalfPlane, 2000, 42);
        assert_eq!(a.0, b.0);
    }
}
