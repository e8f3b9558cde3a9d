//! Longest repeat (LR) queries over byte strings.
//!
//! A repeat is a substring occurring at two or more distinct start
//! positions. For a position `k`, the longest repeat covering `k` is a
//! repeat `S[i..=j]` with `i <= k <= j` of maximal length; ties are broken
//! towards the leftmost start.
//!
//! All positions in this crate's public API are **1-indexed**: the first
//! byte of a text is position 1 and a text of length `n` has positions
//! `1..=n`. Absent repeats are reported as `<-1, 0>` (see [`Repeat`]).
//!
//! ```
//! use lrq::TextIndex;
//!
//! let index = TextIndex::build(b"abcabcddbca".to_vec());
//! let lr = lrq::leftmost_lr_at(&index, 2).unwrap();
//! assert_eq!((lr.signed_start(), lr.length()), (1, 3));
//!
//! let table = lrq::all_lr_fast(&index);
//! assert_eq!(table.at(2), Some(lr));
//! ```

mod error;
pub mod llr;
pub mod lr_global;
pub mod lr_point;
pub mod oracle;
mod repeat;
pub mod suffix_index;

pub use error::{Error, Result};
pub use llr::{llr_at, llr_table, sort_llr_desc, LlrTable};
pub use lr_global::{
    all_lr_fast, all_lr_fast_audited, all_lr_reference, AuditReport, LrTable, TwoTable, UpdateCase,
};
pub use lr_point::{all_lr_at, leftmost_lr_at};
pub use repeat::Repeat;
pub use suffix_index::{build_index, load_index, save_index, TextIndex};
