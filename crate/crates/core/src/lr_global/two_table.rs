//! The `ptr` / `next` tables.
//!
//! `ptr[j]` is the bucket id (a 1-indexed slot of the sorted left-bounded
//! repeat table) owning position `j`, or none while `j` has no answer yet. A
//! bucket is a maximal run of equal `ptr` entries. `next[b]` points at or
//! before the first unanswered position after bucket `b`; it is exact for
//! tail buckets and, for buckets merged into a larger area, far enough
//! right that no later (no longer) repeat starting inside the bucket can
//! reach past it unnoticed.
//!
//! The tables are maintained so that, when a repeat `[left, right]` is
//! processed, `next[ptr[left]]` is the first position it newly answers, or
//! exceeds `right` when it answers none.

use crate::error::{Error, Result};

const NIL: usize = 0;

/// How an update related the new coverage `[left, right]` to the positions
/// already answered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UpdateCase {
    /// Touches nothing answered: a new bucket `i` over `[left, right]`.
    Isolated,
    /// Left end unanswered but adjacent to a bucket, which grows rightwards.
    AdjacentLeft,
    /// Left end answered; its bucket grows rightwards to `right`.
    OverlapLeft,
    /// Right end unanswered but adjacent to a bucket, which grows leftwards.
    AdjacentRight,
    /// Right end answered; its bucket grows leftwards to `left`.
    OverlapRight,
    /// Everything already answered.
    Covered,
    /// Joins an answered area on the left with one on the right.
    Bridge,
}

/// Write counters, kept unconditionally (each is O(1) per write).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TwoTableStats {
    pub ptr_writes: usize,
    /// `ptr` writes that replaced a non-empty entry.
    pub ptr_overwrites: usize,
    pub next_writes: usize,
    /// `next` writes that did not strictly increase a set entry.
    pub next_regressions: usize,
    /// Updates that created or extended a bucket.
    pub bucket_ops: usize,
}

#[derive(Clone, Debug)]
pub struct TwoTable {
    n: usize,
    // Both 1-indexed; slot 0 unused.
    ptr: Vec<usize>,
    next: Vec<usize>,
    stats: TwoTableStats,
}

impl TwoTable {
    pub fn new(n: usize) -> Self {
        TwoTable {
            n,
            ptr: vec![NIL; n + 1],
            next: vec![NIL; n + 1],
            stats: TwoTableStats::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Bucket owning position `j`, if any.
    #[inline]
    pub fn ptr(&self, j: usize) -> Option<usize> {
        match self.ptr[j] {
            NIL => None,
            b => Some(b),
        }
    }

    #[inline]
    pub fn next(&self, bucket: usize) -> Option<usize> {
        match self.next[bucket] {
            NIL => None,
            v => Some(v),
        }
    }

    pub fn stats(&self) -> TwoTableStats {
        self.stats
    }

    #[inline]
    fn set_ptr(&mut self, j: usize, bucket: usize) {
        debug_assert!(bucket != NIL);
        if self.ptr[j] != NIL {
            self.stats.ptr_overwrites += 1;
        }
        self.ptr[j] = bucket;
        self.stats.ptr_writes += 1;
    }

    #[inline]
    fn set_next(&mut self, bucket: usize, value: usize) {
        let old = self.next[bucket];
        if old != NIL && value <= old {
            self.stats.next_regressions += 1;
        }
        self.next[bucket] = value;
        self.stats.next_writes += 1;
    }

    /// Records that sorted slot `i`, covering `[left, right]`, has answered
    /// its new positions. The case conditions are tried in a fixed order and
    /// the first match fires.
    ///
    /// Fails only when the tables are in a state no sequence of updates
    /// from the main loop can produce.
    pub fn update(&mut self, i: usize, left: usize, right: usize) -> Result<UpdateCase> {
        let n = self.n;
        if i == 0 || i > n || left == 0 || left > right || right > n {
            return Err(Error::Internal(format!(
                "update({i}, {left}, {right}) outside a table of length {n}"
            )));
        }
        let p = &self.ptr;
        let left_free = p[left] == NIL;
        let right_free = p[right] == NIL;
        let before_free = left == 1 || p[left - 1] == NIL;
        let after_free = right == n || p[right + 1] == NIL;

        let case = if left_free && right_free && before_free && after_free {
            for j in left..=right {
                self.set_ptr(j, i);
            }
            self.set_next(i, right + 1);
            UpdateCase::Isolated
        } else if left_free && !before_free && right_free && after_free {
            let b = p[left - 1];
            for j in left..=right {
                self.set_ptr(j, b);
            }
            self.set_next(b, right + 1);
            UpdateCase::AdjacentLeft
        } else if !left_free && right_free && after_free {
            let b = p[left];
            for j in self.next[b]..=right {
                self.set_ptr(j, b);
            }
            self.set_next(b, right + 1);
            UpdateCase::OverlapLeft
        } else if right_free && !after_free && left_free && before_free {
            let b = p[right + 1];
            for j in left..=right {
                self.set_ptr(j, b);
            }
            UpdateCase::AdjacentRight
        } else if !right_free && left_free && before_free {
            let b = p[right];
            let mut j = left;
            while self.ptr[j] == NIL {
                self.set_ptr(j, b);
                j += 1;
            }
            UpdateCase::OverlapRight
        } else if !left_free && self.next[p[left]] > right {
            UpdateCase::Covered
        } else {
            let (mut j, entry) = if left_free {
                // Failing the earlier conditions with a free left end
                // implies an answered neighbour at left - 1.
                (left, p[left - 1])
            } else {
                (self.next[p[left]], p[left])
            };
            while j <= n && self.ptr[j] == NIL {
                self.set_ptr(j, entry);
                j += 1;
            }
            if j > n {
                return Err(Error::Internal(format!(
                    "bridge from {left} found no answered area on the right"
                )));
            }
            let target = self.next[self.ptr[j]];
            self.set_next(entry, target);
            UpdateCase::Bridge
        };
        if case != UpdateCase::Covered {
            self.stats.bucket_ops += 1;
        }
        Ok(case)
    }
}
