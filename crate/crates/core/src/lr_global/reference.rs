use super::LrTable;
use crate::llr::{llr_table, sort_llr_desc};
use crate::repeat::Repeat;
use crate::suffix_index::TextIndex;

/// Straightforward global pass with one "assigned" flag per position.
///
/// Same output as [`all_lr_fast`](super::all_lr_fast), O(n^2) in the worst
/// case. Kept as a readable statement of the method and as a mid-size
/// differential oracle.
pub fn all_lr_reference(index: &TextIndex) -> LrTable {
    let n = index.len();
    let sorted = sort_llr_desc(llr_table(index));
    let mut lrs = vec![Repeat::ABSENT; n];
    let mut assigned = vec![false; n];
    let mut count = 0;
    for llr in sorted.repeats() {
        if count == n || llr.is_absent() {
            break;
        }
        let (left, right) = (llr.start().unwrap(), llr.end().unwrap());
        for k in left..=right {
            if !assigned[k - 1] {
                assigned[k - 1] = true;
                lrs[k - 1] = llr;
                count += 1;
            }
        }
    }
    LrTable::new(lrs)
}
