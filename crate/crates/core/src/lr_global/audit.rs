//! Checked run of the fast path.
//!
//! Keeps a per-position "answered" view derived from the output table and,
//! before every processed slot, compares the two tables against it
//! directly. O(n^2), for tests and diagnostics only.

use std::collections::BTreeMap;

use super::fast::{run, Observer};
use super::two_table::{TwoTable, TwoTableStats, UpdateCase};
use super::LrTable;
use crate::repeat::Repeat;
use crate::suffix_index::TextIndex;

const MAX_RECORDED: usize = 32;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub n: usize,
    /// Slots examined by the main loop.
    pub iterations: usize,
    /// Slots whose new-position set was found empty and skipped.
    pub skipped: usize,
    pub cases: BTreeMap<UpdateCase, usize>,
    /// Output entries written.
    pub lrs_writes: usize,
    pub tables: TwoTableStats,
    /// Total violations observed; only the first few are kept in
    /// `violations`.
    pub violation_count: usize,
    pub violations: Vec<String>,
}

impl AuditReport {
    /// No invariant violated and every write budget respected.
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
            && self.lrs_writes <= self.n
            && self.tables.ptr_writes <= self.n
            && self.tables.ptr_overwrites == 0
            && self.tables.next_regressions == 0
            && self.tables.next_writes <= self.tables.bucket_ops
    }
}

/// Runs [`all_lr_fast`](super::all_lr_fast) while checking, at the top of
/// every main-loop iteration:
///
/// * positions with an answer are exactly those with a `ptr` entry;
/// * the positions newly covered by the slot form one contiguous interval,
///   and the walk answers exactly that interval;
/// * if the slot's start is answered and it covers new positions,
///   `next[ptr[start]]` is the first of them;
/// * if it covers no new positions, `next[ptr[start]]` lies past its end.
///
/// Write-once `ptr`, strictly increasing `next` and the write budgets are
/// tracked by the tables themselves and folded into the report.
pub fn all_lr_fast_audited(index: &TextIndex) -> (LrTable, AuditReport) {
    let mut auditor = Auditor {
        report: AuditReport {
            n: index.len(),
            ..AuditReport::default()
        },
        expected: None,
    };
    let table = run(index, &mut auditor);
    (table, auditor.report)
}

struct Auditor {
    report: AuditReport,
    // Newly covered interval of the current slot, `first..end`.
    expected: Option<(usize, usize)>,
}

impl Auditor {
    fn violation(&mut self, msg: String) {
        self.report.violation_count += 1;
        if self.report.violations.len() < MAX_RECORDED {
            self.report.violations.push(msg);
        }
    }
}

impl Observer for Auditor {
    fn before_entry(&mut self, i: usize, llr: Repeat, tables: &TwoTable, lrs: &[Repeat]) {
        self.report.iterations += 1;
        let answered = |j: usize| !lrs[j - 1].is_absent();

        if let Some(j) = (1..=lrs.len()).find(|&j| answered(j) != tables.ptr(j).is_some()) {
            self.violation(format!(
                "slot {i}: position {j} answered={} but ptr={:?}",
                answered(j),
                tables.ptr(j)
            ));
        }

        let (left, right) = (llr.start().unwrap(), llr.end().unwrap());
        let fresh: Vec<usize> = (left..=right).filter(|&j| !answered(j)).collect();
        if fresh.windows(2).any(|w| w[1] != w[0] + 1) {
            self.violation(format!("slot {i}: new positions {fresh:?} not contiguous"));
        }
        self.expected = fresh.first().map(|&s| (s, fresh[fresh.len() - 1] + 1));

        let pointed = tables.ptr(left).and_then(|b| tables.next(b));
        match (answered(left), fresh.first()) {
            (true, Some(&s)) if pointed != Some(s) => self.violation(format!(
                "slot {i}: start {left} answered, first new position {s}, next[ptr] = {pointed:?}"
            )),
            (_, None) if !pointed.is_some_and(|v| v > right) => self.violation(format!(
                "slot {i}: nothing new in [{left}, {right}] but next[ptr] = {pointed:?}"
            )),
            _ => {}
        }
    }

    fn walked(&mut self, i: usize, first: usize, end: usize) {
        self.report.lrs_writes += end - first;
        if self.expected != Some((first, end)) {
            let expected = self.expected;
            self.violation(format!(
                "slot {i}: walk answered {first}..{end}, expected {expected:?}"
            ));
        }
    }

    fn skipped(&mut self, i: usize) {
        self.report.skipped += 1;
        if let Some(e) = self.expected {
            self.violation(format!("slot {i}: skipped but {e:?} were new"));
        }
    }

    fn updated(&mut self, _i: usize, case: UpdateCase) {
        *self.report.cases.entry(case).or_default() += 1;
    }

    fn finished(&mut self, tables: &TwoTable) {
        self.report.tables = tables.stats();
    }
}
