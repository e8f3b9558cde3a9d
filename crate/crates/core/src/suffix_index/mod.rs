//! Suffix, rank and LCP arrays over a byte string.
//!
//! Construction runs SA-IS (induced sorting, O(n)) for the suffix array,
//! inverts it for the rank array, and derives the LCP array from both by
//! the rank-walk method (O(n) amortized).
//!
//! Array slots are 0-based as Rust slices but every stored *value* is a
//! 1-indexed position or rank: `suffix_array()[j - 1]` is the start of the
//! `j`-th smallest suffix. The LCP array has `n + 1` entries with zero at
//! both ends; slot `j - 1` holds the LCP of the suffixes ranked `j - 1` and
//! `j`.

mod persist;
mod sais;

pub use persist::{load_index, save_index};

use crate::error::{Error, Result};

/// Immutable bundle of a text and its suffix, rank and LCP arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TextIndex {
    text: Vec<u8>,
    sa: Vec<usize>,
    rank: Vec<usize>,
    lcp: Vec<usize>,
}

/// Builds the index for `text`. Equivalent to [`TextIndex::build`].
pub fn build_index(text: &[u8]) -> TextIndex {
    TextIndex::build(text.to_vec())
}

impl TextIndex {
    pub fn build(text: Vec<u8>) -> Self {
        let n = text.len();
        let sa0 = sais::suffix_array(&text);
        let mut rank0 = vec![0usize; n];
        for (r, &p) in sa0.iter().enumerate() {
            rank0[p] = r;
        }
        let lcp = lcp_from_rank_walk(&text, &sa0, &rank0);
        TextIndex {
            sa: sa0.into_iter().map(|p| p + 1).collect(),
            rank: rank0.into_iter().map(|r| r + 1).collect(),
            lcp,
            text,
        }
    }

    /// Assembles an index from stored arrays after checking they are
    /// mutually consistent.
    pub(crate) fn from_parts(
        text: Vec<u8>,
        sa: Vec<usize>,
        rank: Vec<usize>,
        lcp: Vec<usize>,
    ) -> Result<Self> {
        let n = text.len();
        if sa.len() != n || rank.len() != n || lcp.len() != n + 1 {
            return Err(Error::Integrity("array lengths do not match text".into()));
        }
        let mut seen = vec![false; n];
        for &p in &sa {
            if p == 0 || p > n || std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::Integrity(
                    "suffix array is not a permutation of 1..=n".into(),
                ));
            }
        }
        for (j, &p) in sa.iter().enumerate() {
            if rank[p - 1] != j + 1 {
                return Err(Error::Integrity(
                    "rank array is not the inverse of the suffix array".into(),
                ));
            }
        }
        if lcp[0] != 0 || lcp[n] != 0 {
            return Err(Error::Integrity("lcp sentinels must be zero".into()));
        }
        for j in 1..n {
            let longest = n + 1 - sa[j - 1].max(sa[j]);
            if lcp[j] > longest {
                return Err(Error::Integrity(format!(
                    "lcp entry {} exceeds the shorter suffix length",
                    j + 1
                )));
            }
        }
        Ok(TextIndex {
            text,
            sa,
            rank,
            lcp,
        })
    }

    pub fn text(&self) -> &[u8] {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    pub fn suffix_array(&self) -> &[usize] {
        &self.sa
    }

    pub fn rank_array(&self) -> &[usize] {
        &self.rank
    }

    /// The `n + 1` entry LCP array.
    pub fn lcp_array(&self) -> &[usize] {
        &self.lcp
    }

    /// Rank of the suffix starting at 1-indexed `pos`.
    #[inline]
    pub fn rank_of(&self, pos: usize) -> usize {
        self.rank[pos - 1]
    }

    /// `lcp[j]` for `j` in `1..=n+1`.
    #[inline]
    pub fn lcp_at(&self, j: usize) -> usize {
        self.lcp[j - 1]
    }

    /// Length of the longest prefix of suffix `pos` shared with any other
    /// suffix: `max(lcp[rank[pos]], lcp[rank[pos] + 1])`.
    #[inline]
    pub(crate) fn llr_len(&self, pos: usize) -> usize {
        let r = self.rank[pos - 1];
        self.lcp[r - 1].max(self.lcp[r])
    }

    pub(crate) fn check_position(&self, pos: usize) -> Result<()> {
        if pos == 0 || pos > self.len() {
            Err(Error::PositionOutOfRange {
                pos,
                len: self.len(),
            })
        } else {
            Ok(())
        }
    }
}

/// LCP array (`n + 1` entries, zero sentinels) from 0-based `sa` and `rank`.
fn lcp_from_rank_walk(text: &[u8], sa: &[usize], rank: &[usize]) -> Vec<usize> {
    let n = text.len();
    let mut lcp = vec![0usize; n + 1];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i];
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1];
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h;
        h = h.saturating_sub(1);
    }
    lcp
}
