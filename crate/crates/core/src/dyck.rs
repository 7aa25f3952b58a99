//! The Dyck-path algebra: coded words, letter-flip operators, the bullet
//! product, and the coding bijection Θ with the descent/ascent-bottom basis.
//!
//! A path of semilength n is coded as the word `u·w_1…w_{2n-1}` where
//! `w_1…w_{2n}` is the underlying Dyck path (its final step is always down,
//! so nothing is lost). Coded words start `uu` and, after dropping the first
//! letter and appending a down step, decode to a path that never dips below
//! zero and returns to it.

use crate::error::{Error, Result};
use crate::polyring::{Monomial, ZSet};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A word over {u, d} packed as bits (u = 1), 1-based positions.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DyckWord {
    bits: u64,
    len: u8,
}

/// Formal integer sum of words.
pub type DyckSum = BTreeMap<DyckWord, i64>;

impl DyckWord {
    pub fn from_letters(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let mut len = 0u8;
        for ch in s.trim().chars() {
            if len == 64 {
                return Err(Error::TooLarge(s.len()));
            }
            match ch {
                'u' => bits |= 1 << len,
                'd' => {}
                _ => return Err(Error::Parse(format!("letter {ch:?} is not u/d"))),
            }
            len += 1;
        }
        Ok(Self { bits, len })
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Semilength (for even-length words).
    pub fn semilength(&self) -> usize {
        self.len() / 2
    }

    /// Letter at 1-based position: true = u.
    pub fn letter_is_up(&self, i: usize) -> bool {
        self.bits >> (i - 1) & 1 == 1
    }

    /// Validity of the shifted coding: even positive length, starts `uu`, and
    /// the decode (drop first letter, append d) is a nonnegative closed path.
    /// Equivalently the coded path runs from height 0 to 2 crossing height 1
    /// exactly once.
    pub fn is_valid_code(&self) -> bool {
        let n = self.len();
        if n < 2 || n % 2 != 0 || !self.letter_is_up(1) || !self.letter_is_up(2) {
            return false;
        }
        let mut h: i32 = 0;
        for i in 2..=n {
            h += if self.letter_is_up(i) { 1 } else { -1 };
            if h < 0 {
                return false;
            }
        }
        h == 1 // the appended final down step closes the path
    }

    /// ∂_i: flips an up step at 1-based position i to down, or vanishes.
    pub fn flip_down(&self, i: usize) -> Option<Self> {
        if i == 0 || i > self.len() || !self.letter_is_up(i) {
            return None;
        }
        Some(Self {
            bits: self.bits & !(1 << (i - 1)),
            len: self.len,
        })
    }

    /// η_i: flips a down step at position i to up, or vanishes.
    pub fn flip_up(&self, i: usize) -> Option<Self> {
        if i == 0 || i > self.len() || self.letter_is_up(i) {
            return None;
        }
        Some(Self {
            bits: self.bits | 1 << (i - 1),
            len: self.len,
        })
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self {
            bits: self.bits | other.bits << self.len,
            len: self.len + other.len,
        }
    }

    fn positions(&self, up: bool) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.letter_is_up(i) == up)
            .collect()
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            f.write_str(if self.letter_is_up(i) { "u" } else { "d" })?;
        }
        Ok(())
    }
}

impl PartialOrd for DyckWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyckWord {
    /// Lexicographic with u < d; shorter prefix first.
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len().min(other.len());
        for i in 1..=common {
            // u (true) sorts before d (false)
            match other.letter_is_up(i).cmp(&self.letter_is_up(i)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.len().cmp(&other.len())
    }
}

/// `w • v = Σ_{|S|=|T|+1} η^T(w) ∂^S(v)` (concatenated), with the unit rule
/// for empty factors. Multiplicities are retained.
pub fn bullet(w: &DyckWord, v: &DyckWord) -> DyckSum {
    let mut out = DyckSum::new();
    if w.is_empty() || v.is_empty() {
        out.insert(w.concat(v), 1);
        return out;
    }
    let down_w = w.positions(false);
    let up_v = v.positions(true);
    assert!(
        down_w.len() <= 24 && up_v.len() <= 24,
        "bullet expansion is exponential in the flip positions"
    );
    for tmask in 0u64..1 << down_w.len() {
        let tk = tmask.count_ones();
        for smask in 0u64..1 << up_v.len() {
            if smask.count_ones() != tk + 1 {
                continue;
            }
            let mut left = *w;
            for (idx, &pos) in down_w.iter().enumerate() {
                if tmask >> idx & 1 == 1 {
                    left = left.flip_up(pos).unwrap();
                }
            }
            let mut right = *v;
            for (idx, &pos) in up_v.iter().enumerate() {
                if smask >> idx & 1 == 1 {
                    right = right.flip_down(pos).unwrap();
                }
            }
            *out.entry(left.concat(&right)).or_insert(0) += 1;
        }
    }
    out
}

/// Bilinear extension of • to formal sums.
pub fn bullet_sum(a: &DyckSum, b: &DyckSum) -> DyckSum {
    let mut out = DyckSum::new();
    for (w, cw) in a {
        for (v, cv) in b {
            for (t, c) in bullet(w, v) {
                let slot = out.entry(t).or_insert(0);
                *slot += c * cw * cv;
                if *slot == 0 {
                    out.remove(&t);
                }
            }
        }
    }
    out
}

/// Θ on the packed monomial: position 2i−1 is up iff z_i appears, position 2i
/// iff z_{i'} does.
pub fn theta_zset(zs: ZSet, n: usize) -> DyckWord {
    let mut bits = 0u64;
    for i in 0..n {
        bits |= (zs.unprimed >> i & 1) << (2 * i);
        bits |= (zs.primed >> i & 1) << (2 * i + 1);
    }
    DyckWord {
        bits,
        len: (2 * n) as u8,
    }
}

/// Θ: codes a grade-n basis monomial as a Dyck word; the monomial must be
/// multiaffine over `[n] ∪ [n]'` of degree n+1 with a valid image.
pub fn theta(m: &Monomial, n: usize) -> Result<DyckWord> {
    let zs = ZSet::from_monomial(m).ok_or_else(|| Error::NotInDab(m.to_string()))?;
    let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    if zs.unprimed & !limit != 0 || zs.primed & !limit != 0 {
        return Err(Error::InvalidGrade(format!(
            "monomial {m} mentions indices beyond grade {n}"
        )));
    }
    let w = theta_zset(zs, n);
    if !w.is_valid_code() {
        return Err(Error::NotInDab(m.to_string()));
    }
    Ok(w)
}

/// Θ⁻¹: reads the monomial back off a valid code.
pub fn theta_inverse(w: &DyckWord) -> Result<Monomial> {
    if !w.is_valid_code() {
        return Err(Error::NotInDab(w.to_string()));
    }
    let mut zs = ZSet::default();
    for i in 0..w.semilength() {
        if w.letter_is_up(2 * i + 1) {
            zs.unprimed |= 1 << i;
        }
        if w.letter_is_up(2 * i + 2) {
            zs.primed |= 1 << i;
        }
    }
    Ok(zs.to_monomial())
}

/// The proof construction behind surjectivity: turn the first down step (at
/// position j) up and delete the first two letters, giving a predecessor w of
/// semilength n−1 with `v = uu · ∂_{j-2}(w)` in the support of `uu • w`.
pub fn predecessor(v: &DyckWord) -> Result<(DyckWord, usize)> {
    if v.semilength() < 2 || !v.is_valid_code() {
        return Err(Error::InvalidParameter(format!(
            "predecessor needs a valid code of semilength >= 2, got {v}"
        )));
    }
    let j = (1..=v.len())
        .find(|&i| !v.letter_is_up(i))
        .expect("valid codes of semilength >= 2 contain a down step");
    let flipped = v.flip_up(j).unwrap();
    let w = DyckWord {
        bits: flipped.bits >> 2,
        len: flipped.len - 2,
    };
    Ok((w, j))
}

/// All valid codes of semilength n, lexicographic (u < d).
pub fn enumerate_dyck(n: usize) -> Vec<DyckWord> {
    if n == 0 {
        return vec![DyckWord::default()];
    }
    let mut out = Vec::new();
    // positions 1,2 forced up; track decoded height (letters 2..)
    fn rec(word: DyckWord, pos: usize, h: i32, n: usize, out: &mut Vec<DyckWord>) {
        let total = 2 * n;
        if pos > total {
            if h == 1 {
                out.push(word);
            }
            return;
        }
        let remaining = (total - pos + 1) as i32;
        // u first for lexicographic order
        if h + 1 <= remaining + 1 {
            let mut w = word;
            w.bits |= 1 << (pos - 1);
            w.len = pos as u8;
            rec(w, pos + 1, h + 1, n, out);
        }
        if pos > 2 && h - 1 >= 0 && h - 1 <= remaining {
            let mut w = word;
            w.len = pos as u8;
            rec(w, pos + 1, h - 1, n, out);
        }
    }
    // start after the forced "uu": pos 3, decoded height = 1 (letter 2)
    let mut start = DyckWord::default();
    start.bits = 0b11;
    start.len = 2;
    if n == 1 {
        return vec![start];
    }
    rec(start, 3, 1, n, &mut out);
    out
}

/// `C_n = binom(2n, n) / (n+1)`.
pub fn catalan(n: usize) -> u64 {
    let mut acc: u128 = 1;
    for i in 0..n as u128 {
        acc = acc * (2 * n as u128 - i) / (i + 1);
    }
    (acc / (n as u128 + 1)) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DyckWord {
        DyckWord::from_letters(s).unwrap()
    }

    #[test]
    fn validity() {
        assert!(w("uu").is_valid_code());
        assert!(w("uudu").is_valid_code());
        assert!(w("uuud").is_valid_code());
        assert!(!w("ud").is_valid_code());
        assert!(!w("uudd").is_valid_code());
        assert!(!w("uuu").is_valid_code());
        assert!(!w("uudduu").is_valid_code());
    }

    #[test]
    fn flips() {
        assert_eq!(w("uuud").flip_down(3).unwrap(), w("uudd"));
        assert!(w("uuud").flip_down(4).is_none());
        assert_eq!(w("uuud").flip_up(4).unwrap(), w("uuuu"));
        assert!(w("uuud").flip_up(3).is_none());
        assert!(w("uu").flip_down(7).is_none());
    }

    #[test]
    fn bullet_paper_example() {
        let prod = bullet(&w("uudu"), &w("uuud"));
        let want = [
            "uuduuudd", "uuuududd", "uuuuuddd", "uududuud", "uuuuddud", "uuduudud",
        ];
        assert_eq!(prod.len(), 6);
        for s in want {
            assert_eq!(prod.get(&w(s)), Some(&1), "missing {s}");
        }
    }

    #[test]
    fn bullet_small() {
        let prod = bullet(&w("uu"), &w("uu"));
        assert_eq!(prod.len(), 2);
        assert_eq!(prod.get(&w("uuud")), Some(&1));
        assert_eq!(prod.get(&w("uudu")), Some(&1));
        // unit
        let empty = DyckWord::default();
        let prod = bullet(&w("uudu"), &empty);
        assert_eq!(prod.len(), 1);
        assert_eq!(prod.get(&w("uudu")), Some(&1));
    }

    #[test]
    fn bullet_words_always_valid() {
        for n in 1..=3usize {
            for m in 1..=3usize {
                for a in enumerate_dyck(n) {
                    for b in enumerate_dyck(m) {
                        for word in bullet(&a, &b).keys() {
                            assert!(word.is_valid_code(), "{a} . {b} gave {word}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn theta_examples() {
        let m = crate::polyring::parse_poly("z1*z1p").unwrap();
        let (mono, _) = m.iter().next().map(|(a, b)| (a.clone(), b.clone())).unwrap();
        assert_eq!(theta(&mono, 1).unwrap(), w("uu"));
        let m = crate::polyring::parse_poly("z1*z2*z1p*z2p*z4p").unwrap();
        let (mono, _) = m.iter().next().map(|(a, b)| (a.clone(), b.clone())).unwrap();
        assert_eq!(theta(&mono, 4).unwrap(), w("uuuudddu"));
        assert_eq!(theta_inverse(&w("uuuudddu")).unwrap(), mono);
    }

    #[test]
    fn theta_roundtrip_s5() {
        use crate::eulerian::{weight, WeightKind};
        crate::permstat::for_each_permutation(5, |word| {
            let perm = crate::permstat::Permutation::new(word.to_vec()).unwrap();
            let poly = weight(WeightKind::W1, &perm);
            let (mono, _) = poly.iter().next().unwrap();
            let code = theta(mono, 5).unwrap();
            assert!(code.is_valid_code());
            assert_eq!(&theta_inverse(&code).unwrap(), mono);
        });
    }

    #[test]
    fn predecessor_examples() {
        let (p, j) = predecessor(&w("uuud")).unwrap();
        assert_eq!((p, j), (w("uu"), 4));
        let (p, j) = predecessor(&w("uudu")).unwrap();
        assert_eq!((p, j), (w("uu"), 3));
        // reconstruction: v = uu · ∂_{j-2}(w), and v ∈ supp(uu • w)
        for n in 2..=6usize {
            for v in enumerate_dyck(n) {
                let (p, j) = predecessor(&v).unwrap();
                assert!(p.is_valid_code());
                let rebuilt = w("uu").concat(&p.flip_down(j - 2).unwrap());
                assert_eq!(rebuilt, v);
                assert!(bullet(&w("uu"), &p).contains_key(&v));
            }
        }
        assert!(predecessor(&w("uu")).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_dyck(1), vec![w("uu")]);
        assert_eq!(enumerate_dyck(2), vec![w("uuud"), w("uudu")]);
        for n in 0..=7usize {
            let words = enumerate_dyck(n);
            assert_eq!(words.len() as u64, catalan(n));
            assert!(words.windows(2).all(|p| p[0] < p[1]), "lex order broken");
            for word in &words {
                if n > 0 {
                    assert!(word.is_valid_code());
                }
            }
        }
        assert_eq!(catalan(5), 42);
        assert_eq!(catalan(10), 16796);
    }
}
