//! Brute-force reference answers, independent of suffix structures.
//!
//! Everything here works from direct byte comparisons and is meant for
//! testing and for producing expected values on small inputs (a few
//! hundred bytes). [`NaiveOracle`] precomputes, by comparing every pair of
//! start positions, the longest prefix at each start that also occurs
//! elsewhere; a substring `S[i..i+len)` is a repeat exactly when `len` is
//! at most that value, because a prefix of a repeat is a repeat.

use crate::error::{Error, Result};
use crate::lr_global::LrTable;
use crate::repeat::Repeat;

/// Whether `S[start..start+length)` (1-indexed `start`) occurs at two or
/// more distinct starts. The empty substring is never a repeat.
pub fn naive_is_repeat(text: &[u8], start: usize, length: usize) -> Result<bool> {
    let n = text.len();
    if start == 0 || start > n || start - 1 + length > n {
        return Err(Error::SubstringOutOfRange {
            start,
            length,
            len: n,
        });
    }
    if length == 0 {
        return Ok(false);
    }
    let needle = &text[start - 1..start - 1 + length];
    let occurrences = text.windows(length).filter(|w| *w == needle).count();
    Ok(occurrences >= 2)
}

/// All longest repeats covering 1-indexed `k`, ascending by start.
pub fn naive_lr_at(text: &[u8], k: usize) -> Result<Vec<Repeat>> {
    if k == 0 || k > text.len() {
        return Err(Error::PositionOutOfRange {
            pos: k,
            len: text.len(),
        });
    }
    Ok(NaiveOracle::new(text).lr_at(k))
}

/// Leftmost longest repeat for every position.
pub fn naive_all_lr(text: &[u8]) -> LrTable {
    NaiveOracle::new(text).all_lr()
}

pub struct NaiveOracle<'t> {
    text: &'t [u8],
    // longest_from[i - 1]: longest L with S[i..i+L) occurring at another start.
    longest_from: Vec<usize>,
}

impl<'t> NaiveOracle<'t> {
    pub fn new(text: &'t [u8]) -> Self {
        let n = text.len();
        let mut longest_from = vec![0usize; n];
        // Walk each diagonal (a, a + shift) right to left, tracking the run
        // of equal bytes: that run is the common extension of starts a and b.
        for shift in 1..n {
            let mut run = 0usize;
            for a in (0..n - shift).rev() {
                let b = a + shift;
                run = if text[a] == text[b] { run + 1 } else { 0 };
                longest_from[a] = longest_from[a].max(run);
                longest_from[b] = longest_from[b].max(run);
            }
        }
        NaiveOracle { text, longest_from }
    }

    pub fn text(&self) -> &[u8] {
        self.text
    }

    /// Longest repeat length starting at 1-indexed `i`.
    pub fn longest_repeat_from(&self, i: usize) -> usize {
        self.longest_from[i - 1]
    }

    pub fn is_repeat(&self, start: usize, length: usize) -> bool {
        length > 0 && length <= self.longest_from[start - 1]
    }

    /// Every window `[i, i + len)` covering `k` and fitting the text.
    fn windows_covering(&self, k: usize, len: usize) -> impl Iterator<Item = usize> {
        let lo = k.saturating_sub(len - 1).max(1);
        let hi = k.min((self.text.len() + 1).saturating_sub(len));
        lo..=hi
    }

    /// All longest repeats covering `k`, ascending by start; empty when
    /// `S[k]` is a singleton.
    pub fn lr_at(&self, k: usize) -> Vec<Repeat> {
        // A repeat of length L covering k contains one of length L - 1
        // covering k, so the feasible lengths form a prefix 1..=best.
        let mut best = Vec::new();
        for len in 1..=self.text.len() {
            let found: Vec<Repeat> = self
                .windows_covering(k, len)
                .filter(|&i| self.is_repeat(i, len))
                .map(|i| Repeat::new(i, len))
                .collect();
            if found.is_empty() {
                break;
            }
            best = found;
        }
        best
    }

    pub fn all_lr(&self) -> LrTable {
        LrTable::new(
            (1..=self.text.len())
                .map(|k| self.lr_at(k).first().copied().unwrap_or(Repeat::ABSENT))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn is_repeat_examples() {
        assert!(naive_is_repeat(b"mississippi", 2, 4).unwrap());
        assert!(!naive_is_repeat(b"mississippi", 1, 1).unwrap());
        assert!(!naive_is_repeat(b"mississippi", 3, 0).unwrap());
        assert!(naive_is_repeat(b"mississippi", 9, 4).is_err());
        assert!(naive_is_repeat(b"mississippi", 0, 1).is_err());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(
            naive_lr_at(b"abcabcddbca", 2).unwrap(),
            vec![Repeat::new(1, 3), Repeat::new(2, 3)]
        );
        assert_eq!(
            naive_lr_at(b"mississippi", 6).unwrap(),
            vec![Repeat::new(5, 4)]
        );
        assert!(naive_lr_at(b"a", 1).unwrap().is_empty());
        assert!(naive_lr_at(b"a", 2).is_err());
    }

    #[test]
    fn all_lr_examples() {
        let r = Repeat::new;
        assert_eq!(
            naive_all_lr(b"mississippi").entries(),
            &[
                Repeat::ABSENT,
                r(2, 4),
                r(2, 4),
                r(2, 4),
                r(2, 4),
                r(5, 4),
                r(5, 4),
                r(5, 4),
                r(9, 1),
                r(10, 1),
                r(11, 1)
            ]
        );
        assert_eq!(
            naive_all_lr(b"aaaa").entries(),
            &[r(1, 3), r(1, 3), r(1, 3), r(2, 3)]
        );
        assert!(naive_all_lr(b"abc").entries().iter().all(Repeat::is_absent));
        // "a" at 1 does not cover position 2; the copy at 2 does.
        assert_eq!(naive_all_lr(b"aa").entries(), &[r(1, 1), r(2, 1)]);
    }

    #[test]
    fn self_consistent_on_small_texts() {
        // Every answer is a repeat by literal scan, and no one-longer window
        // covering k is.
        for text in [
            &b"abcabcddbca"[..],
            b"mississippi",
            b"aabaabaa",
            b"abababba",
        ] {
            let o = NaiveOracle::new(text);
            for k in 1..=text.len() {
                let lrs = o.lr_at(k);
                for lr in &lrs {
                    assert!(naive_is_repeat(text, lr.start().unwrap(), lr.length()).unwrap());
                }
                let len = lrs.first().map_or(0, |r| r.length()) + 1;
                for i in o.windows_covering(k, len) {
                    assert!(!naive_is_repeat(text, i, len).unwrap());
                }
            }
        }
    }
}
