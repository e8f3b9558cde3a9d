use std::fmt;

/// A substring occurrence `<start, length>` with a 1-indexed start.
///
/// The absent value is `<-1, 0>`: a repeat has `length == 0` exactly when it
/// is absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Repeat {
    // 0 encodes the -1 sentinel.
    start: usize,
    length: usize,
}

impl Repeat {
    pub const ABSENT: Repeat = Repeat {
        start: 0,
        length: 0,
    };

    /// A repeat starting at 1-indexed `start`. A zero `length` gives
    /// [`Repeat::ABSENT`] regardless of `start`.
    ///
    /// Panics if `length > 0` and `start == 0`.
    pub fn new(start: usize, length: usize) -> Self {
        if length == 0 {
            return Self::ABSENT;
        }
        assert!(start >= 1, "repeat start positions are 1-indexed");
        Repeat { start, length }
    }

    pub fn is_absent(&self) -> bool {
        self.length == 0
    }

    pub fn start(&self) -> Option<usize> {
        (!self.is_absent()).then_some(self.start)
    }

    /// Start position with `-1` for the absent value.
    pub fn signed_start(&self) -> i64 {
        match self.start() {
            Some(s) => s as i64,
            None => -1,
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Inclusive 1-indexed end position.
    pub fn end(&self) -> Option<usize> {
        self.start().map(|s| s + self.length - 1)
    }

    pub fn covers(&self, pos: usize) -> bool {
        match (self.start(), self.end()) {
            (Some(s), Some(e)) => s <= pos && pos <= e,
            _ => false,
        }
    }

    /// The bytes of this repeat within `text`, or `None` when absent or out
    /// of bounds.
    pub fn slice<'t>(&self, text: &'t [u8]) -> Option<&'t [u8]> {
        let s = self.start()?;
        text.get(s - 1..s - 1 + self.length)
    }
}

impl Default for Repeat {
    fn default() -> Self {
        Self::ABSENT
    }
}

impl fmt::Display for Repeat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.signed_start(), self.length)
    }
}
