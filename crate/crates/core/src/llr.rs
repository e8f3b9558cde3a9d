//! Left-bounded longest repeats.
//!
//! The left-bounded longest repeat starting at `i` is the longest repeat
//! `S[i..=j]`; its length is the longest common prefix between suffix `i`
//! and any other suffix, `max(lcp[rank[i]], lcp[rank[i] + 1])`.

use crate::error::Result;
use crate::repeat::Repeat;
use crate::suffix_index::TextIndex;

/// Left-bounded longest repeat starting at 1-indexed `i`, or
/// [`Repeat::ABSENT`] when `S[i]` is a singleton.
pub fn llr_at(index: &TextIndex, i: usize) -> Result<Repeat> {
    index.check_position(i)?;
    Ok(Repeat::new(i, index.llr_len(i)))
}

/// One left-bounded longest repeat per text position.
///
/// Each slot remembers the position it was computed for, so stability of
/// [`sort_llr_desc`] stays observable for absent entries too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LlrTable {
    positions: Vec<usize>,
    lengths: Vec<usize>,
    sorted: bool,
}

/// The unsorted table: slot `i` holds the repeat starting at position `i`.
pub fn llr_table(index: &TextIndex) -> LlrTable {
    let n = index.len();
    LlrTable {
        positions: (1..=n).collect(),
        lengths: (1..=n).map(|i| index.llr_len(i)).collect(),
        sorted: false,
    }
}

/// Stable counting sort by length, longest first.
pub fn sort_llr_desc(table: LlrTable) -> LlrTable {
    let n = table.len();
    if n == 0 {
        return LlrTable {
            sorted: true,
            ..table
        };
    }
    let max = table.lengths.iter().copied().max().unwrap_or(0);
    // Bucket `max - len` so that iteration order over buckets is descending.
    let mut starts = vec![0usize; max + 2];
    for &len in &table.lengths {
        starts[max - len + 1] += 1;
    }
    for b in 1..starts.len() {
        starts[b] += starts[b - 1];
    }
    let mut positions = vec![0usize; n];
    let mut lengths = vec![0usize; n];
    for (&pos, &len) in table.positions.iter().zip(&table.lengths) {
        let slot = &mut starts[max - len];
        positions[*slot] = pos;
        lengths[*slot] = len;
        *slot += 1;
    }
    LlrTable {
        positions,
        lengths,
        sorted: true,
    }
}

impl LlrTable {
    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn is_sorted(&self) -> bool {
        self.sorted
    }

    /// Entry at 1-indexed slot `i`.
    pub fn get(&self, i: usize) -> Option<Repeat> {
        let slot = i.checked_sub(1)?;
        Some(Repeat::new(
            *self.positions.get(slot)?,
            *self.lengths.get(slot)?,
        ))
    }

    pub fn repeats(&self) -> impl Iterator<Item = Repeat> + '_ {
        self.positions
            .iter()
            .zip(&self.lengths)
            .map(|(&p, &l)| Repeat::new(p, l))
    }

    /// `(position, length)` per slot, with absent entries keeping their
    /// position and a zero length.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.positions
            .iter()
            .copied()
            .zip(self.lengths.iter().copied())
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn into_sorted(self) -> LlrTable {
        if self.sorted {
            self
        } else {
            sort_llr_desc(self)
        }
    }
}
