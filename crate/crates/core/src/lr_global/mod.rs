//! Leftmost longest repeat for every position.
//!
//! Both paths process the left-bounded longest repeats in stable
//! descending-length order and hand each one to the positions it covers
//! that no earlier (longer, or equally long and further left) repeat
//! covered. [`all_lr_reference`] finds those positions by scanning a flag
//! per position; [`all_lr_fast`] finds the first of them in O(1) through
//! the [`TwoTable`] and runs in O(n) overall.

mod audit;
mod fast;
mod reference;
mod two_table;

pub use audit::{all_lr_fast_audited, AuditReport};
pub use fast::all_lr_fast;
pub use reference::all_lr_reference;
pub use two_table::{TwoTable, TwoTableStats, UpdateCase};

use crate::repeat::Repeat;

/// Per-position leftmost longest repeats; slot `k - 1` belongs to
/// position `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LrTable {
    entries: Vec<Repeat>,
}

impl LrTable {
    pub fn new(entries: Vec<Repeat>) -> Self {
        LrTable { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry for 1-indexed position `k`.
    pub fn at(&self, k: usize) -> Option<Repeat> {
        self.entries.get(k.checked_sub(1)?).copied()
    }

    pub fn entries(&self) -> &[Repeat] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Repeat> {
        self.entries
    }
}
