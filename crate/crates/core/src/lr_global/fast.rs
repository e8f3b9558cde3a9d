use super::two_table::{TwoTable, UpdateCase};
use super::LrTable;
use crate::llr::{llr_table, sort_llr_desc};
use crate::repeat::Repeat;
use crate::suffix_index::TextIndex;

/// Hooks into the main loop; the production path uses the no-op `()`.
pub(super) trait Observer {
    /// Before sorted slot `i` is examined (after the early-stop check).
    fn before_entry(&mut self, _i: usize, _llr: Repeat, _tables: &TwoTable, _lrs: &[Repeat]) {}
    /// Slot `i` answered positions `first..end`.
    fn walked(&mut self, _i: usize, _first: usize, _end: usize) {}
    fn skipped(&mut self, _i: usize) {}
    fn updated(&mut self, _i: usize, _case: UpdateCase) {}
    fn finished(&mut self, _tables: &TwoTable) {}
}

impl Observer for () {}

/// Leftmost longest repeat of every position in O(n) time and space.
pub fn all_lr_fast(index: &TextIndex) -> LrTable {
    run(index, &mut ())
}

pub(super) fn run<O: Observer>(index: &TextIndex, obs: &mut O) -> LrTable {
    let n = index.len();
    let sorted = sort_llr_desc(llr_table(index));
    let mut lrs = vec![Repeat::ABSENT; n];
    let mut tables = TwoTable::new(n);
    let mut count = 0;

    for (slot, (start, length)) in sorted.pairs().enumerate() {
        let i = slot + 1;
        if count == n || length == 0 {
            break;
        }
        let llr = Repeat::new(start, length);
        obs.before_entry(i, llr, &tables, &lrs);

        let (left, right) = (start, start + length - 1);
        let first = match tables.ptr(left) {
            None => left,
            Some(b) => tables.next(b).expect("every bucket has a next entry"),
        };
        if first > right {
            obs.skipped(i);
            continue;
        }

        let mut j = first;
        while j <= right && tables.ptr(j).is_none() {
            lrs[j - 1] = llr;
            count += 1;
            j += 1;
        }
        obs.walked(i, first, j);

        let case = tables
            .update(i, left, right)
            .expect("two-table state reached by the main loop is always valid");
        obs.updated(i, case);
    }
    obs.finished(&tables);
    LrTable::new(lrs)
}
