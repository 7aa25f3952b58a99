//! Brute-force oracle suites: each one checks a family of identities case by
//! case and reports every failure with both sides in canonical form.

use crate::dyck::{self, bullet, bullet_sum, catalan, enumerate_dyck, DyckSum, DyckWord};
use crate::error::{Error, Result};
use crate::eulerian::{self, weight, WeightKind};
use crate::exec;
use crate::fqsym::{self, FQSymElement};
use crate::permstat::{self, Permutation};
use crate::polyring::{self, Poly, VarId, ZSet};
use crate::poset::{self, LabeledPoset};
use crate::stability::{self, Region};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashSet;
use std::time::Instant;

/// One failed case: the inputs and both sides in canonical form.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one suite; `failures` empty means the suite passed.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub wall_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

struct Recorder {
    suite: &'static str,
    cases: u64,
    failures: Vec<Failure>,
    start: Instant,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            cases: 0,
            failures: Vec::new(),
            start: Instant::now(),
        }
    }

    fn case(&mut self, label: impl FnOnce() -> String, lhs: &dyn std::fmt::Display, rhs: &dyn std::fmt::Display, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                case: label(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn check(&mut self, label: impl FnOnce() -> String, ok: bool) {
        self.case(label, &"", &"", ok);
    }

    fn finish(mut self) -> VerificationReport {
        self.failures.truncate(50); // enough to diagnose, bounded output
        VerificationReport {
            suite: self.suite.to_string(),
            cases: self.cases,
            failures: self.failures,
            wall_ms: self.start.elapsed().as_millis(),
        }
    }
}

fn all_perms(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    permstat::for_each_permutation(n, |w| out.push(Permutation::new(w.to_vec()).unwrap()));
    out
}

/// `w1(π ⧢ σ) = Φ(w1(π)·Γ_n(w1(σ)))` for every pair with n+m ≤ max_total.
pub fn verify_shudif(max_total: usize) -> VerificationReport {
    let mut rec = Recorder::new("shudif");
    let mut pairs: Vec<(Permutation, Permutation)> = Vec::new();
    for n in 1..max_total {
        for m in 1..max_total {
            if n + m > max_total {
                continue;
            }
            for p in all_perms(n) {
                for q in all_perms(m) {
                    pairs.push((p.clone(), q.clone()));
                }
            }
        }
    }
    let failures = exec::map_merge(
        &pairs,
        |(p, q)| {
            let lhs = fqsym::weight_of_element(WeightKind::W1, &fqsym::shuffle(p, q));
            let rhs = fqsym::dab_product(
                &weight(WeightKind::W1, p),
                p.n(),
                &weight(WeightKind::W1, q),
                q.n(),
            )
            .unwrap();
            if lhs == rhs {
                Vec::new()
            } else {
                vec![Failure {
                    case: format!("{p} ⧢ {q}"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }]
            }
        },
        Vec::new(),
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    rec.cases = pairs.len() as u64;
    rec.failures = failures;
    rec.finish()
}

/// The weights w2, w3, w4 of a product depend only on the factors' weights.
pub fn verify_fori(max_total: usize, seed: u64, trials: usize) -> VerificationReport {
    let mut rec = Recorder::new("fori");
    let mut rng = seeded_rng(seed);
    let kinds = [WeightKind::W2, WeightKind::W3, WeightKind::W4];
    for trial in 0..trials {
        let n = rng.gen_range(1..max_total);
        let m = rng.gen_range(1..=max_total - n);
        for kind in kinds {
            let (f, f2) = same_weight_pair(kind, n, &mut rng);
            let (g, g2) = same_weight_pair(kind, m, &mut rng);
            debug_assert_eq!(
                fqsym::weight_of_element(kind, &f),
                fqsym::weight_of_element(kind, &f2)
            );
            let lhs = fqsym::weight_of_element(kind, &fqsym::product(&f, &g));
            let rhs = fqsym::weight_of_element(kind, &fqsym::product(&f2, &g2));
            rec.case(
                || format!("trial {trial}, {kind:?}, grades ({n},{m})"),
                &lhs,
                &rhs,
                lhs == rhs,
            );
        }
    }
    rec.finish()
}

/// Two random combinations with the same weight image: coefficients agree
/// within each fiber of the weight statistic.
fn same_weight_pair(
    kind: WeightKind,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> (FQSymElement, FQSymElement) {
    let mut groups: std::collections::BTreeMap<String, Vec<Permutation>> = Default::default();
    for p in all_perms(n) {
        groups
            .entry(weight(kind, &p).to_string())
            .or_default()
            .push(p);
    }
    let mut f = FQSymElement::zero();
    let mut g = FQSymElement::zero();
    for perms in groups.values() {
        let coefs: Vec<i64> = perms.iter().map(|_| rng.gen_range(-2..=2)).collect();
        let total: i64 = coefs.iter().sum();
        for (p, c) in perms.iter().zip(&coefs) {
            f.add(p.clone(), *c);
        }
        let mut coefs2: Vec<i64> = perms.iter().map(|_| rng.gen_range(-2..=2)).collect();
        let drift: i64 = total - coefs2.iter().sum::<i64>();
        coefs2[0] += drift;
        for (p, c) in perms.iter().zip(&coefs2) {
            g.add(p.clone(), *c);
        }
    }
    (f, g)
}

/// Θ is a product isomorphism: term-by-term match of the two products, plus
/// the support of `(uu)^{•n}` filling all of the degree-n component.
pub fn verify_dyck_iso(max_pair_grade: usize, max_support: usize) -> VerificationReport {
    let mut rec = Recorder::new("dyck-iso");
    for n in 1..max_pair_grade {
        for m in 1..max_pair_grade {
            if n + m > max_pair_grade {
                continue;
            }
            for a in dab_basis(n) {
                for b in dab_basis(m) {
                    let lhs_poly = fqsym::dab_product(
                        &Poly::monomial(a.to_monomial(), num::BigRational::from_integer(1.into())),
                        n,
                        &Poly::monomial(b.to_monomial(), num::BigRational::from_integer(1.into())),
                        m,
                    )
                    .unwrap();
                    let mut lhs = DyckSum::new();
                    for (mono, c) in lhs_poly.iter() {
                        let w = dyck::theta(mono, n + m).unwrap();
                        *lhs.entry(w).or_insert(0) +=
                            num::ToPrimitive::to_i64(c.numer()).unwrap();
                    }
                    let rhs = bullet(&dyck::theta_zset(a, n), &dyck::theta_zset(b, m));
                    rec.case(
                        || {
                            format!(
                                "Θ({}) • Θ({})",
                                a.to_monomial(),
                                b.to_monomial()
                            )
                        },
                        &format_dyck_sum(&lhs),
                        &format_dyck_sum(&rhs),
                        lhs == rhs,
                    );
                }
            }
        }
    }
    // support of (uu)^{•n}
    let uu = DyckWord::from_letters("uu").unwrap();
    let mut power = DyckSum::new();
    power.insert(uu, 1);
    for n in 2..=max_support {
        let mut single = DyckSum::new();
        single.insert(uu, 1);
        power = bullet_sum(&power, &single);
        let words: Vec<DyckWord> = power.keys().copied().collect();
        let expected = enumerate_dyck(n);
        let all_there = words == expected;
        let positive = power.values().all(|&c| c > 0);
        rec.case(
            || format!("support((uu)^{n})"),
            &format!("{} words", words.len()),
            &format!("C_{n} = {}", catalan(n)),
            all_there && positive && words.len() as u64 == catalan(n),
        );
    }
    rec.finish()
}

fn format_dyck_sum(s: &DyckSum) -> String {
    if s.is_empty() {
        return "0".into();
    }
    s.iter()
        .map(|(w, c)| {
            if *c == 1 {
                w.to_string()
            } else {
                format!("{c}*{w}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn dab_basis(n: usize) -> Vec<ZSet> {
    let mut out: HashSet<ZSet> = HashSet::new();
    permstat::for_each_permutation(n, |w| {
        out.insert(ZSet {
            unprimed: permstat::descent_bottom_mask(w),
            primed: permstat::ascent_bottom_mask(w),
        });
    });
    let mut v: Vec<ZSet> = out.into_iter().collect();
    v.sort();
    v
}

/// Number of distinct w1 monomials over S_n equals the Catalan number.
pub fn verify_catalan_dim(max_n: usize) -> VerificationReport {
    let mut rec = Recorder::new("catalan-dim");
    for n in 1..=max_n {
        let count = distinct_w1_count(n);
        rec.case(
            || format!("S_{n}"),
            &count,
            &catalan(n),
            count == catalan(n),
        );
    }
    rec.finish()
}

/// Distinct w1 masks over S_n, split across first letters when parallel.
pub fn distinct_w1_count(n: usize) -> u64 {
    let firsts: Vec<u8> = (1..=n as u8).collect();
    if n == 0 {
        return 1;
    }
    let sets = exec::map_merge(
        &firsts,
        |&first| {
            let mut set: HashSet<(u64, u64)> = HashSet::new();
            let rest: Vec<u8> = (1..=n as u8).filter(|&v| v != first).collect();
            let mut word = Vec::with_capacity(n);
            let mut suffix = rest.clone();
            loop {
                word.clear();
                word.push(first);
                word.extend_from_slice(&suffix);
                set.insert((
                    permstat::descent_bottom_mask(&word),
                    permstat::ascent_bottom_mask(&word),
                ));
                if !permstat::next_permutation(&mut suffix) {
                    break;
                }
            }
            set
        },
        HashSet::new(),
        |a, b| {
            if a.len() < b.len() {
                return merge_sets(b, a);
            }
            merge_sets(a, b)
        },
    );
    fn merge_sets(
        mut a: HashSet<(u64, u64)>,
        b: HashSet<(u64, u64)>,
    ) -> HashSet<(u64, u64)> {
        a.extend(b);
        a
    }
    sets.len() as u64
}

/// Sequential reference for the census (benchmarks).
pub fn distinct_w1_count_seq(n: usize) -> u64 {
    let mut set: HashSet<(u64, u64)> = HashSet::new();
    permstat::for_each_permutation(n, |w| {
        set.insert((
            permstat::descent_bottom_mask(w),
            permstat::ascent_bottom_mask(w),
        ));
    });
    set.len() as u64
}

/// Swapping primed and unprimed variables of `A_P(z)` gives `A_{P*}(z)`.
pub fn verify_dual(seed: u64, random_count: usize, random_max: usize) -> VerificationReport {
    let mut rec = Recorder::new("dual");
    for n in 1..=4usize {
        for p in poset::all_posets(n) {
            let lhs = eulerian::multivariate_eulerian(&p.dual());
            let rhs = eulerian::swap_primed(&eulerian::multivariate_eulerian(&p));
            rec.case(
                || format!("exhaustive n={n}, covers {:?}", p.covers()),
                &lhs,
                &rhs,
                lhs == rhs,
            );
        }
    }
    let mut rng = seeded_rng(seed);
    for i in 0..random_count {
        let n = rng.gen_range(1..=random_max);
        let p = poset::random_poset(n, &mut rng);
        let lhs = eulerian::multivariate_eulerian(&p.dual());
        let rhs = eulerian::swap_primed(&eulerian::multivariate_eulerian(&p));
        rec.case(
            || format!("random #{i}, n={n}, covers {:?}", p.covers()),
            &lhs,
            &rhs,
            lhs == rhs,
        );
    }
    rec.finish()
}

/// The literal claim that the swap-process permutation carries
/// `A_{P⊔_S Q}(z)` to `A_{P⊔Q}(z)`. This fails for most S (the one-step
/// transfer law only swaps the non-adjacent part); the suite reports those
/// failures faithfully.
pub fn verify_union_relabel(seed: u64) -> VerificationReport {
    let mut rec = Recorder::new("union-relabel");
    let mut rng = seeded_rng(seed);
    for trial in 0..12 {
        let n = rng.gen_range(1..=3usize);
        let m = rng.gen_range(1..=3usize);
        let p = poset::random_poset(n, &mut rng);
        let q = poset::random_poset(m, &mut rng);
        for s in subsets(n + m, n) {
            let u_s = p.disjoint_union_on(&q, &s).unwrap();
            let perm = poset::union_relabel_permutation(n, m, &s).unwrap();
            let lhs = eulerian::multivariate_eulerian(&u_s).map_vars(|v| match v {
                VarId::Z { index, primed } => VarId::Z {
                    index: perm[(index - 1) as usize] as u32,
                    primed,
                },
                other => other,
            });
            let rhs = eulerian::multivariate_eulerian(&p.disjoint_union(&q));
            rec.case(
                || {
                    format!(
                        "trial {trial}: P covers {:?}, Q covers {:?}, S = {s:?}",
                        p.covers(),
                        q.covers()
                    )
                },
                &lhs,
                &rhs,
                lhs == rhs,
            );
        }
    }
    rec.finish()
}

fn subsets(total: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << total {
        if mask.count_ones() as usize == k {
            out.push((1..=total).filter(|&v| mask >> (v - 1) & 1 == 1).collect());
        }
    }
    out
}

/// Ordinal-sum identity with the documented realignment, plus the pinned
/// failure of the raw printed form on two singletons.
pub fn verify_oplus(seed: u64, random_count: usize) -> VerificationReport {
    let mut rec = Recorder::new("oplus");
    let a1 = LabeledPoset::antichain(1);
    let raw = eulerian::oplus_rhs_raw(&a1, &a1).unwrap();
    let lhs = eulerian::multivariate_eulerian(&a1.ordinal_sum(&a1));
    rec.case(
        || "pinned: raw printed identity must FAIL on singleton ⊕ singleton".into(),
        &raw,
        &lhs,
        raw != lhs,
    );
    let mut rng = seeded_rng(seed);
    for i in 0..random_count {
        let n = rng.gen_range(1..=4usize);
        let m = rng.gen_range(1..=4usize);
        let p = poset::random_poset(n, &mut rng);
        let q = poset::random_poset(m, &mut rng);
        let lhs = eulerian::multivariate_eulerian(&p.ordinal_sum(&q));
        let rhs = eulerian::oplus_rhs_realigned(&p, &q);
        match rhs {
            Ok(rhs) => rec.case(
                || format!("random #{i}: covers {:?} ⊕ {:?}", p.covers(), q.covers()),
                &lhs,
                &rhs,
                lhs == rhs,
            ),
            Err(e) => rec.case(
                || format!("random #{i}: division failed: {e}"),
                &lhs,
                &"<error>",
                false,
            ),
        }
    }
    rec.finish()
}

/// Peak identities: the cardinality law, the diagonal specialization, the
/// corrected Ψ identity, and the pinned failure of the raw Ψ form.
pub fn verify_peak_psi(seed: u64, random_count: usize) -> VerificationReport {
    let mut rec = Recorder::new("peak-psi");
    for n in 1..=7usize {
        let mut ok = true;
        permstat::for_each_permutation(n, |w| {
            let p = Permutation::new(w.to_vec()).unwrap();
            if permstat::peak_valley_set(&p).len() != 2 * permstat::peak_set(&p).len() + 1 {
                ok = false;
            }
        });
        rec.check(|| format!("|N(π)| = 2|Λ(π)|+1 over S_{n}"), ok);
    }
    let a1 = LabeledPoset::antichain(1);
    rec.check(
        || "pinned: raw Ψ substitution form must FAIL on the singleton".into(),
        !eulerian::psi_peak_raw_form_holds(&a1),
    );
    for n in 1..=4usize {
        for p in poset::all_posets(n) {
            rec.check(
                || format!("Ψ identity, exhaustive n={n}, covers {:?}", p.covers()),
                eulerian::psi_peak_identity_check(&p),
            );
            rec.check(
                || format!("diagonal identity, exhaustive n={n}, covers {:?}", p.covers()),
                eulerian::peak_diagonal_identity_check(&p),
            );
        }
    }
    let mut rng = seeded_rng(seed);
    for i in 0..random_count {
        let n = rng.gen_range(1..=6usize);
        let p = poset::random_poset(n, &mut rng);
        rec.check(
            || format!("Ψ identity, random #{i}, covers {:?}", p.covers()),
            eulerian::psi_peak_identity_check(&p),
        );
        rec.check(
            || format!("diagonal identity, random #{i}, covers {:?}", p.covers()),
            eulerian::peak_diagonal_identity_check(&p),
        );
    }
    rec.finish()
}

/// Sturm certification of the binomial polynomials: real and negative roots.
pub fn verify_malo(n_max: u32, m_max: u32) -> VerificationReport {
    let mut rec = Recorder::new("malo");
    for n in 1..=n_max {
        for m in 2..=m_max {
            let p = polyring::malo_binom_poly(n, m).unwrap();
            let ok = stability::is_real_rooted_negative(&p).unwrap();
            rec.case(|| format!("(n,m) = ({n},{m})"), &p, &"real, negative", ok);
        }
    }
    rec.finish()
}

/// Exact expansion of the Φ symbol against its closed form.
pub fn verify_symbol(max_nm: usize) -> VerificationReport {
    let mut rec = Recorder::new("symbol");
    for n in 1..=max_nm {
        for m in 1..=max_nm {
            rec.check(
                || format!("(n,m) = ({n},{m})"),
                stability::phi_symbol_closed_form_check(n, m),
            );
        }
    }
    rec.finish()
}

/// Real-rootedness across the decreasing-forest pool, disjoint-union closure,
/// and the stability-evidence sweep (no refutations, no negative Δ values).
pub fn verify_forests(budget: u64, seed: u64) -> VerificationReport {
    let mut rec = Recorder::new("forests");

    // exhaustive forests on <= 7 elements: both univariate polynomials
    for n in 1..=7usize {
        let forests = poset::enumerate_decreasing_forests(n);
        let bad: Vec<Failure> = exec::map_merge(
            &forests,
            |f| {
                let mut out = Vec::new();
                let ax = eulerian::univariate_eulerian(f);
                if !stability::is_real_rooted(&ax).unwrap() {
                    out.push(Failure {
                        case: format!("A_F(x), covers {:?}", f.covers()),
                        lhs: ax.to_string(),
                        rhs: "real-rooted".into(),
                    });
                }
                let peak = eulerian::univariate_peak(f);
                if !stability::is_real_rooted(&peak).unwrap() {
                    out.push(Failure {
                        case: format!("peak(F), covers {:?}", f.covers()),
                        lhs: peak.to_string(),
                        rhs: "real-rooted".into(),
                    });
                }
                out
            },
            Vec::new(),
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        rec.cases += 2 * forests.len() as u64;
        rec.failures.extend(bad);
    }

    // disjoint unions over the pool, total size <= 8
    let pool: Vec<Vec<LabeledPoset>> = (0..=7usize)
        .map(|n| {
            if n == 0 {
                Vec::new()
            } else {
                poset::enumerate_decreasing_forests(n)
            }
        })
        .collect();
    let mut union_pairs: Vec<(LabeledPoset, LabeledPoset)> = Vec::new();
    for a in 1..=7usize {
        for b in 1..=(8 - a).min(7) {
            for p in &pool[a] {
                for q in &pool[b] {
                    union_pairs.push((p.clone(), q.clone()));
                }
            }
        }
    }
    let bad = exec::map_merge(
        &union_pairs,
        |(p, q)| {
            let ax = eulerian::univariate_eulerian(&p.disjoint_union(q));
            if stability::is_real_rooted(&ax).unwrap() {
                Vec::new()
            } else {
                vec![Failure {
                    case: format!(
                        "A_(P⊔Q)(x), covers {:?} ⊔ {:?}",
                        p.covers(),
                        q.covers()
                    ),
                    lhs: ax.to_string(),
                    rhs: "real-rooted".into(),
                }]
            }
        },
        Vec::new(),
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    rec.cases += union_pairs.len() as u64;
    rec.failures.extend(bad);

    // stability evidence sweep on forests of size <= 6
    let mut sweep: Vec<LabeledPoset> = Vec::new();
    for n in 1..=6usize {
        sweep.extend(poset::enumerate_decreasing_forests(n));
    }
    let bad = exec::map_merge(
        &sweep,
        |f| {
            let a = eulerian::multivariate_eulerian(f);
            let verdict = stability::check_stable(&a, Region::UpperHalfPlane, budget, seed);
            if verdict.is_refuted() {
                vec![Failure {
                    case: format!("check_stable A_F, covers {:?}", f.covers()),
                    lhs: serde_json::to_string(&verdict).unwrap_or_default(),
                    rhs: "not refuted".into(),
                }]
            } else {
                Vec::new()
            }
        },
        Vec::new(),
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    rec.cases += sweep.len() as u64;
    rec.failures.extend(bad);
    rec.finish()
}

/// Looks up a suite by its CLI name.
pub fn run_suite(name: &str, max: Option<usize>, seed: u64, budget: u64) -> Result<VerificationReport> {
    Ok(match name {
        "shudif" => verify_shudif(max.unwrap_or(7)),
        "fori" => verify_fori(max.unwrap_or(6), seed, 60),
        "dyck-iso" => verify_dyck_iso(max.unwrap_or(5), 6),
        "catalan-dim" => verify_catalan_dim(max.unwrap_or(10)),
        "dual" => verify_dual(seed, 100, max.unwrap_or(7)),
        "union-relabel" => verify_union_relabel(seed),
        "oplus" => verify_oplus(seed, 40),
        "peak-psi" => verify_peak_psi(seed, 50),
        "malo" => verify_malo(max.unwrap_or(8) as u32, max.unwrap_or(8) as u32),
        "symbol" => verify_symbol(max.unwrap_or(3)),
        "forests" => verify_forests(budget, seed),
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown suite {other:?}; expected one of shudif, fori, dyck-iso, \
                 catalan-dim, dual, union-relabel, oplus, peak-psi, malo, symbol, forests"
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shudif_small_clean() {
        let r = verify_shudif(5);
        assert!(r.passed(), "{:?}", r.failures.first());
        assert_eq!(r.cases, 1 + 4 + 16 + 72);
    }

    #[test]
    fn catalan_small() {
        let r = verify_catalan_dim(7);
        assert!(r.passed(), "{:?}", r.failures.first());
        assert_eq!(distinct_w1_count(6), distinct_w1_count_seq(6));
    }

    #[test]
    fn dyck_iso_small() {
        let r = verify_dyck_iso(4, 4);
        assert!(r.passed(), "{:?}", r.failures.first());
    }

    #[test]
    fn dual_small() {
        let r = verify_dual(11, 10, 5);
        assert!(r.passed(), "{:?}", r.failures.first());
    }

    #[test]
    fn oplus_small() {
        let r = verify_oplus(13, 8);
        assert!(r.passed(), "{:?}", r.failures.first());
    }

    #[test]
    fn peak_psi_small() {
        let r = verify_peak_psi(17, 8);
        assert!(r.passed(), "{:?}", r.failures.first());
    }

    #[test]
    fn fori_small() {
        let r = verify_fori(5, 23, 12);
        assert!(r.passed(), "{:?}", r.failures.first());
    }

    #[test]
    fn union_relabel_reports_the_defect() {
        // the printed corollary fails; the suite must surface that honestly
        let r = verify_union_relabel(2);
        assert!(!r.passed());
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nope", None, 0, 0).is_err());
    }
}
