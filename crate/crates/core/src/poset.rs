//! Labeled posets, linear-extension enumeration, and the poset constructions
//! (disjoint unions, relabeled unions, ordinal sums, duals, bottom adjunction,
//! decreasing forests).

mod forest;
pub use forest::{
    enumerate_decreasing_forests, is_decreasing_forest, random_decreasing_forest, ForestSpec,
    TreeSpec,
};

use crate::error::{Error, Result};
use crate::exec;
use crate::permstat::Permutation;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::hash::Hash;

/// A strict partial order on `{1..n}` carrying the natural labeling.
/// Relations are stored transitively closed so comparability checks are a
/// single bit lookup; covers are recomputed on demand.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabeledPoset {
    n: usize,
    /// below[i] = bitmask of 0-based elements strictly below element i.
    below: Vec<u64>,
}

/// Serialization format: ground-set size plus cover relations.
#[derive(Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
}

impl LabeledPoset {
    /// The poset with no relations.
    pub fn antichain(n: usize) -> Self {
        Self {
            n,
            below: vec![0; n],
        }
    }

    /// The chain `1 ≺ 2 ≺ … ≺ n`.
    pub fn chain(n: usize) -> Self {
        let below = (0..n).map(|i| (1u64 << i) - 1).collect();
        Self { n, below }
    }

    /// Builds the transitive closure of the given strict relations.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooLarge(n));
        }
        let mut below = vec![0u64; n];
        for &(a, b) in covers {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::InvalidLabel { label: v, n });
                }
            }
            if a == b {
                return Err(Error::CyclicRelation(a, b));
            }
            below[b - 1] |= 1 << (a - 1);
        }
        // Warshall over bitmasks.
        for k in 0..n {
            for i in 0..n {
                if below[i] >> k & 1 == 1 {
                    below[i] |= below[k];
                }
            }
        }
        for i in 0..n {
            if below[i] >> i & 1 == 1 {
                // some cycle passes through i; report one offending pair
                let j = (0..n)
                    .find(|&j| j != i && below[i] >> j & 1 == 1 && below[j] >> i & 1 == 1)
                    .unwrap_or(i);
                return Err(Error::CyclicRelation(i + 1, j + 1));
            }
        }
        Ok(Self { n, below })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff `a ≺ b`.
    pub fn less(&self, a: usize, b: usize) -> bool {
        a != b && a >= 1 && b >= 1 && a <= self.n && b <= self.n && self.below[b - 1] >> (a - 1) & 1 == 1
    }

    /// All strict relations `(a, b)` with `a ≺ b`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 1..=self.n {
            for a in 1..=self.n {
                if self.less(a, b) {
                    out.push((a, b));
                }
            }
        }
        out.sort();
        out
    }

    /// Cover relations (the Hasse diagram), sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.n {
            let mut m = self.below[b];
            while m != 0 {
                let a = m.trailing_zeros() as usize;
                m &= m - 1;
                // a ≺ b is a cover iff nothing sits strictly between them
                if self.below[b] & self.upset_mask(a) == 0 {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out.sort();
        out
    }

    fn upset_mask(&self, a: usize) -> u64 {
        let mut m = 0u64;
        for j in 0..self.n {
            if self.below[j] >> a & 1 == 1 {
                m |= 1 << j;
            }
        }
        m
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            n: self.n,
            covers: self.covers(),
        }
    }

    pub fn from_json(j: &PosetJson) -> Result<Self> {
        Self::from_covers(j.n, &j.covers)
    }

    /// `P ⊔ Q`: Q's labels shifted up by `|P|`, no cross relations.
    pub fn disjoint_union(&self, q: &Self) -> Self {
        let n = self.n;
        let mut below = self.below.clone();
        below.extend(q.below.iter().map(|&m| m << n));
        Self { n: n + q.n, below }
    }

    /// `P ⊔_S Q`: P embedded order-isomorphically on the sorted labels of `S`,
    /// Q on the sorted complement.
    pub fn disjoint_union_on(&self, q: &Self, s: &[usize]) -> Result<Self> {
        let total = self.n + q.n;
        if s.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: s.len(),
            });
        }
        let mut s = s.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: s.len(),
            });
        }
        for &v in &s {
            if v == 0 || v > total {
                return Err(Error::InvalidLabel { label: v, n: total });
            }
        }
        let in_s: Vec<bool> = {
            let mut f = vec![false; total + 1];
            for &v in &s {
                f[v] = true;
            }
            f
        };
        let t: Vec<usize> = (1..=total).filter(|&v| !in_s[v]).collect();
        let mut covers = Vec::new();
        for (a, b) in self.relations() {
            covers.push((s[a - 1], s[b - 1]));
        }
        for (a, b) in q.relations() {
            covers.push((t[a - 1], t[b - 1]));
        }
        Self::from_covers(total, &covers)
    }

    /// Multiway `P_1 ⊔_{S_1} … ⊔_{S_{m-1}} P_m` for an ordered partition of
    /// the combined ground set.
    pub fn disjoint_union_parts(posets: &[Self], parts: &[Vec<usize>]) -> Result<Self> {
        if posets.len() != parts.len() {
            return Err(Error::SizeMismatch {
                expected: posets.len(),
                got: parts.len(),
            });
        }
        let total: usize = posets.iter().map(|p| p.n).sum();
        let mut seen = vec![false; total + 1];
        for (p, part) in posets.iter().zip(parts) {
            if p.n != part.len() {
                return Err(Error::SizeMismatch {
                    expected: p.n,
                    got: part.len(),
                });
            }
            for &v in part {
                if v == 0 || v > total {
                    return Err(Error::InvalidLabel { label: v, n: total });
                }
                if seen[v] {
                    return Err(Error::InvalidSpec(format!("label {v} used twice")));
                }
                seen[v] = true;
            }
        }
        let mut covers = Vec::new();
        for (p, part) in posets.iter().zip(parts) {
            let mut sorted = part.clone();
            sorted.sort_unstable();
            for (a, b) in p.relations() {
                covers.push((sorted[a - 1], sorted[b - 1]));
            }
        }
        Self::from_covers(total, &covers)
    }

    /// `P ⊕ Q`: disjoint union plus every P-element below every Q-element.
    pub fn ordinal_sum(&self, q: &Self) -> Self {
        let n = self.n;
        let mut out = self.disjoint_union(q);
        let low = (1u64 << n) - 1;
        for j in 0..q.n {
            out.below[n + j] |= low;
        }
        out
    }

    /// The dual poset: all relations reversed.
    pub fn dual(&self) -> Self {
        let mut below = vec![0u64; self.n];
        for b in 0..self.n {
            let mut m = self.below[b];
            while m != 0 {
                let a = m.trailing_zeros() as usize;
                m &= m - 1;
                below[a] |= 1 << b;
            }
        }
        Self { n: self.n, below }
    }

    /// `P_0`: adjoins a new minimum labeled 1; old label i becomes i+1.
    pub fn add_bottom(&self) -> Self {
        let n = self.n + 1;
        let mut below = vec![0u64; n];
        for i in 0..self.n {
            below[i + 1] = (self.below[i] << 1) | 1;
        }
        Self { n, below }
    }

    /// Currently-minimal elements given a placed-set bitmask (0-based).
    fn minimal_after(&self, placed: u64) -> u64 {
        let mut out = 0u64;
        for i in 0..self.n {
            if placed >> i & 1 == 0 && self.below[i] & !placed == 0 {
                out |= 1 << i;
            }
        }
        out
    }

    /// Streams every linear extension in lexicographic order.
    pub fn for_each_extension(&self, mut f: impl FnMut(&[u8])) {
        let mut word = Vec::with_capacity(self.n);
        self.extend_rec(0, &mut word, &mut f);
    }

    fn extend_rec(&self, placed: u64, word: &mut Vec<u8>, f: &mut impl FnMut(&[u8])) {
        if word.len() == self.n {
            f(word);
            return;
        }
        let mut m = self.minimal_after(placed);
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            word.push(i as u8 + 1);
            self.extend_rec(placed | (1 << i), word, f);
            word.pop();
        }
    }

    /// All linear extensions, lexicographic.
    pub fn linear_extensions(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        self.for_each_extension(|w| out.push(Permutation::new(w.to_vec()).unwrap()));
        out
    }

    /// Number of linear extensions.
    pub fn extension_count(&self) -> u64 {
        self.fold_extensions(|_| ()).into_values().sum()
    }

    /// Prefixes of length `depth` of linear extensions, each with its
    /// placed-mask; used to split enumeration into independent subtrees.
    fn prefixes(&self, depth: usize) -> Vec<(Vec<u8>, u64)> {
        let mut out = vec![(Vec::new(), 0u64)];
        for _ in 0..depth.min(self.n) {
            let mut next = Vec::new();
            for (word, placed) in &out {
                let mut m = self.minimal_after(*placed);
                while m != 0 {
                    let i = m.trailing_zeros() as usize;
                    m &= m - 1;
                    let mut w = word.clone();
                    w.push(i as u8 + 1);
                    next.push((w, placed | (1 << i)));
                }
            }
            out = next;
        }
        out
    }

    /// Folds a per-extension key into a multiplicity map, streaming over the
    /// extensions without materializing them. Parallelized over length-2
    /// prefixes when the `parallel` feature is on.
    pub fn fold_extensions<K: Eq + Hash + Send>(
        &self,
        key: impl Fn(&[u8]) -> K + Sync,
    ) -> HashMap<K, u64> {
        let prefixes = self.prefixes(2);
        exec::map_merge(
            &prefixes,
            |(word, placed)| {
                let mut local: HashMap<K, u64> = HashMap::new();
                let mut w = word.clone();
                self.extend_rec(*placed, &mut w, &mut |full: &[u8]| {
                    *local.entry(key(full)).or_insert(0) += 1;
                });
                local
            },
            HashMap::new(),
            merge_counts,
        )
    }

    /// Sequential reference version of [`fold_extensions`] (benchmarking).
    pub fn fold_extensions_seq<K: Eq + Hash>(
        &self,
        key: impl Fn(&[u8]) -> K,
    ) -> HashMap<K, u64> {
        let mut local: HashMap<K, u64> = HashMap::new();
        self.for_each_extension(|w| *local.entry(key(w)).or_insert(0) += 1);
        local
    }
}

pub(crate) fn merge_counts<K: Eq + Hash>(
    mut a: HashMap<K, u64>,
    b: HashMap<K, u64>,
) -> HashMap<K, u64> {
    if a.len() < b.len() {
        return merge_counts(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// The index permutation from the iterated adjacent-swap process that walks
/// `S` down to `{1..n}`: each step picks the smallest `s ∈ S` with
/// `s−1 ∉ S`, swaps them, and composes the transposition `(s−1, s)` acting on
/// variable indices. Returns the composite map as a vector `σ` with
/// `σ[i−1]` = image of index `i`.
///
/// Note: the polynomial-transfer property claimed for this permutation does
/// not hold in general; see the `eulerian` tests for the one-step transfer
/// law that does.
pub fn union_relabel_permutation(n: usize, m: usize, s: &[usize]) -> Result<Vec<usize>> {
    let total = n + m;
    let mut in_s = vec![false; total + 2];
    if s.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: s.len(),
        });
    }
    for &v in s {
        if v == 0 || v > total {
            return Err(Error::InvalidLabel { label: v, n: total });
        }
        in_s[v] = true;
    }
    let mut perm: Vec<usize> = (1..=total).collect();
    let target: Vec<bool> = (0..=total + 1).map(|v| v >= 1 && v <= n).collect();
    while in_s != target {
        let s_pick = (2..=total)
            .find(|&v| in_s[v] && !in_s[v - 1])
            .expect("process terminates at S = [n]");
        let t = s_pick - 1;
        in_s[s_pick] = false;
        in_s[t] = true;
        for v in perm.iter_mut() {
            if *v == s_pick {
                *v = t;
            } else if *v == t {
                *v = s_pick;
            }
        }
    }
    Ok(perm)
}

/// Deterministic random poset: random topological order, each compatible
/// pair kept with probability ~0.4, then transitively closed.
pub fn random_poset(n: usize, rng: &mut impl rand::Rng) -> LabeledPoset {
    let mut order: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(0.4) {
                covers.push((order[i], order[j]));
            }
        }
    }
    LabeledPoset::from_covers(n, &covers).unwrap()
}

/// Every labeled poset on `{1..n}` (all strict order relations), for small n.
pub fn all_posets(n: usize) -> Vec<LabeledPoset> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    'mask: for mask in 0u32..1 << pairs.len() {
        let rel: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let has = |a: usize, b: usize| rel.contains(&(a, b));
        for &(a, b) in &rel {
            if has(b, a) {
                continue 'mask;
            }
            for &(c, d) in &rel {
                if b == c && !has(a, d) {
                    continue 'mask;
                }
            }
        }
        out.push(LabeledPoset::from_covers(n, &rel).unwrap());
    }
    out.sort_by_key(|p| p.relations());
    out.dedup();
    out
}
