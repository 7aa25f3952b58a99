//! Permutation statistics: descents, descent/ascent bottoms, peaks and
//! peak-valley sets.
//!
//! Descent bottoms, ascent bottoms and the peak-valley set use the sentinel
//! convention that positions 0 and n+1 hold a letter larger than everything
//! else; the internal peak set uses no sentinels.

use crate::error::{Error, Result};
use crate::polyring::VarId;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation, validating that `word` is a bijection on `1..=n`.
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        if n > 64 {
            return Err(Error::TooLarge(n));
        }
        let mut seen = 0u64;
        for &v in &word {
            if v == 0 || v as usize > n || seen >> (v - 1) & 1 == 1 {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen |= 1 << (v - 1);
        }
        Ok(Self { word })
    }

    /// The identity permutation of size `n`.
    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n as u8).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Parses either compact digits ("1324") or separated integers ("1,3,2,4" / "1 3 2 4").
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<u8> = if s.chars().all(|c| c.is_ascii_digit()) && !s.contains(' ') {
            s.bytes().map(|b| b - b'0').collect()
        } else {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u8>().map_err(|_| Error::Parse(t.into())))
                .collect::<Result<_>>()?
        };
        Self::new(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Number of indices `i < n` with `p_i > p_{i+1}` (no sentinels).
pub fn descent_count(p: &Permutation) -> usize {
    p.word().windows(2).filter(|w| w[0] > w[1]).count()
}

/// Values whose left neighbor exceeds them, the left end counting as a
/// descent. Returned sorted.
pub fn descent_bottoms(p: &Permutation) -> Vec<u8> {
    mask_to_labels(descent_bottom_mask(p.word()))
}

/// Values smaller than their right neighbor, the right end counting as an
/// ascent. Returned sorted.
pub fn ascent_bottoms(p: &Permutation) -> Vec<u8> {
    mask_to_labels(ascent_bottom_mask(p.word()))
}

/// Descent bottoms as a bitmask (bit `v-1` set for label `v`).
pub fn descent_bottom_mask(word: &[u8]) -> u64 {
    let mut m = 0u64;
    for (i, &v) in word.iter().enumerate() {
        if i == 0 || word[i - 1] > v {
            m |= 1 << (v - 1);
        }
    }
    m
}

/// Ascent bottoms as a bitmask.
pub fn ascent_bottom_mask(word: &[u8]) -> u64 {
    let n = word.len();
    let mut m = 0u64;
    for (i, &v) in word.iter().enumerate() {
        if i + 1 == n || v < word[i + 1] {
            m |= 1 << (v - 1);
        }
    }
    m
}

/// `DB(p) ∪ { e' : e ∈ AB(p) }` as sorted variable ids; always `n + 1` of them.
pub fn bottom_set(p: &Permutation) -> Vec<VarId> {
    let mut out: Vec<VarId> = mask_to_labels(descent_bottom_mask(p.word()))
        .into_iter()
        .map(|e| VarId::z(e as u32))
        .chain(
            mask_to_labels(ascent_bottom_mask(p.word()))
                .into_iter()
                .map(|e| VarId::zp(e as u32)),
        )
        .collect();
    out.sort();
    out
}

/// Indices `1 < i < n` (1-based) with `p_{i-1} < p_i > p_{i+1}`; no sentinels.
pub fn peak_set(p: &Permutation) -> Vec<usize> {
    let w = p.word();
    (1..w.len().saturating_sub(1))
        .filter(|&i| w[i - 1] < w[i] && w[i] > w[i + 1])
        .map(|i| i + 1)
        .collect()
}

/// Values that are peaks or valleys under the sentinel convention.
/// Always of odd cardinality `2·|peaks| + 1`. Returned sorted.
pub fn peak_valley_set(p: &Permutation) -> Vec<u8> {
    mask_to_labels(peak_valley_mask(p.word()))
}

/// Peak-valley set as a bitmask.
pub fn peak_valley_mask(word: &[u8]) -> u64 {
    let n = word.len();
    let mut m = 0u64;
    for (i, &v) in word.iter().enumerate() {
        let left_bigger = i == 0 || word[i - 1] > v;
        let right_bigger = i + 1 == n || word[i + 1] > v;
        // valley: both neighbors bigger; peak: both smaller (sentinels are big)
        let left_smaller = i > 0 && word[i - 1] < v;
        let right_smaller = i + 1 < n && word[i + 1] < v;
        if (left_bigger && right_bigger) || (left_smaller && right_smaller) {
            m |= 1 << (v - 1);
        }
    }
    m
}

fn mask_to_labels(mut m: u64) -> Vec<u8> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let b = m.trailing_zeros();
        out.push(b as u8 + 1);
        m &= m - 1;
    }
    out
}

/// Calls `f` on every permutation of `1..=n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[u8])) {
    let mut word: Vec<u8> = (1..=n as u8).collect();
    if n == 0 {
        f(&word);
        return;
    }
    loop {
        f(&word);
        if !next_permutation(&mut word) {
            break;
        }
    }
}

/// Advances `word` to its lexicographic successor; false at the last one.
pub fn next_permutation(word: &mut [u8]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn descent_counts() {
        assert_eq!(descent_count(&p("1324")), 1);
        assert_eq!(descent_count(&p("123")), 0);
        assert_eq!(descent_count(&p("321")), 2);
    }

    #[test]
    fn descent_bottom_examples() {
        assert_eq!(descent_bottoms(&p("1324")), vec![1, 2]);
        assert_eq!(descent_bottoms(&p("12")), vec![1]);
        assert_eq!(descent_bottoms(&p("21")), vec![1, 2]);
    }

    #[test]
    fn ascent_bottom_examples() {
        assert_eq!(ascent_bottoms(&p("1324")), vec![1, 2, 4]);
        assert_eq!(ascent_bottoms(&p("21")), vec![1]);
        assert_eq!(ascent_bottoms(&p("12")), vec![1, 2]);
    }

    #[test]
    fn bottom_set_examples() {
        let b = bottom_set(&p("1324"));
        let expect = vec![
            VarId::z(1),
            VarId::zp(1),
            VarId::z(2),
            VarId::zp(2),
            VarId::zp(4),
        ];
        let mut expect = expect;
        expect.sort();
        assert_eq!(b, expect);
        assert_eq!(bottom_set(&p("1")), vec![VarId::z(1), VarId::zp(1)]);
        let mut e312 = vec![VarId::z(1), VarId::z(3), VarId::zp(1), VarId::zp(2)];
        e312.sort();
        assert_eq!(bottom_set(&p("312")), e312);
    }

    #[test]
    fn peak_examples() {
        assert_eq!(peak_set(&p("132")), vec![2]);
        assert!(peak_set(&p("123")).is_empty());
        assert_eq!(peak_set(&p("14253")), vec![2, 4]);
    }

    #[test]
    fn peak_valley_examples() {
        assert_eq!(peak_valley_set(&p("132")), vec![1, 2, 3]);
        assert_eq!(peak_valley_set(&p("21")), vec![1]);
        assert_eq!(peak_valley_set(&p("12")), vec![1]);
    }

    #[test]
    fn sentinel_cardinalities_exhaustive() {
        for n in 1..=7usize {
            for_each_permutation(n, |w| {
                let perm = Permutation::new(w.to_vec()).unwrap();
                let des = descent_count(&perm);
                assert_eq!(descent_bottoms(&perm).len(), des + 1);
                assert_eq!(ascent_bottoms(&perm).len(), n - des);
                assert!(descent_bottoms(&perm).contains(&1));
                assert_eq!(bottom_set(&perm).len(), n + 1);
                assert_eq!(
                    peak_valley_set(&perm).len(),
                    2 * peak_set(&perm).len() + 1
                );
            });
        }
    }

    #[test]
    fn invalid_permutations_rejected() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!(Permutation::new(vec![1, 2, 3]).is_ok());
    }

    #[test]
    fn permutation_enumeration_is_lex() {
        let mut all = Vec::new();
        for_each_permutation(3, |w| all.push(w.to_vec()));
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
    }
}
