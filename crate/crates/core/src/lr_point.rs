//! Longest repeats covering a single position.
//!
//! Every longest repeat covering `k` is a left-bounded longest repeat
//! starting somewhere in `1..=k`, so both queries scan start positions from
//! `k` down to `1`. The scan stops at the first start whose left-bounded
//! repeat is absent or ends before `k`: no start further left can then
//! reach `k` either. Cost is O(k) after indexing.

use crate::error::Result;
use crate::repeat::Repeat;
use crate::suffix_index::TextIndex;

/// Outcome of one leftward scan, with the bookkeeping the early stop needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointScan {
    pub lr: Repeat,
    /// Number of start positions examined, in `1..=k`.
    pub visited: usize,
    /// Start position at which the early stop fired, if it did.
    pub stopped_at: Option<usize>,
}

/// Leftmost longest repeat covering 1-indexed `k`, or [`Repeat::ABSENT`]
/// when `S[k]` is a singleton.
pub fn leftmost_lr_at(index: &TextIndex, k: usize) -> Result<Repeat> {
    leftmost_lr_scan(index, k).map(|scan| scan.lr)
}

pub fn leftmost_lr_scan(index: &TextIndex, k: usize) -> Result<PointScan> {
    index.check_position(k)?;
    let mut best = Repeat::ABSENT;
    let mut visited = 0;
    let mut stopped_at = None;
    for i in (1..=k).rev() {
        visited += 1;
        let len = index.llr_len(i);
        if len == 0 || i + len - 1 < k {
            stopped_at = Some(i);
            break;
        }
        // `>=` lets an equal-length candidate further left win the tie.
        if len >= best.length() {
            best = Repeat::new(i, len);
        }
    }
    Ok(PointScan {
        lr: best,
        visited,
        stopped_at,
    })
}

/// Every longest repeat covering `k`, in descending start order (the order
/// the scan finds them). Empty when `S[k]` is a singleton.
pub fn all_lr_at(index: &TextIndex, k: usize) -> Result<Vec<Repeat>> {
    index.check_position(k)?;
    let mut length = 0;
    for_each_covering(index, k, |_, len| length = length.max(len));
    let mut out = Vec::new();
    if length > 0 {
        for_each_covering(index, k, |i, len| {
            if len == length {
                out.push(Repeat::new(i, len));
            }
        });
    }
    Ok(out)
}

/// Calls `f(i, len)` for each start `i` from `k` down whose left-bounded
/// repeat covers `k`, stopping early as in [`leftmost_lr_scan`].
fn for_each_covering(index: &TextIndex, k: usize, mut f: impl FnMut(usize, usize)) {
    for i in (1..=k).rev() {
        let len = index.llr_len(i);
        if len == 0 || i + len - 1 < k {
            break;
        }
        f(i, len);
    }
}
