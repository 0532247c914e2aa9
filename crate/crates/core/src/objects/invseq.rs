use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{join_ints, parse_int_list, Invariant, ObjectError, ParseError, ValidationError, Violation};

/// An integer sequence `(e_1, ..., e_n)` with `0 <= e_i < i`.
///
/// Entries are stored 0-indexed, so `entries()[i - 1]` is `e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionSequence {
    entries: Vec<u32>,
}

impl InversionSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self, ValidationError> {
        let e = InversionSequence { entries };
        e.validate()?;
        Ok(e)
    }

    /// Wraps `entries` without checking the positional bound.
    pub fn new_unchecked(entries: Vec<u32>) -> Self {
        InversionSequence { entries }
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        let mut violations = Vec::new();
        if self.entries.is_empty() {
            violations.push(Violation::new(Invariant::Empty, 0));
        }
        for (i, &e) in self.entries.iter().enumerate() {
            if e as usize > i {
                violations.push(Violation::new(Invariant::EntryBound, i + 1));
            }
        }
        ValidationError::check(violations)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest entry.
    pub fn max(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn last(&self) -> u32 {
        *self.entries.last().expect("inversion sequences are non-empty")
    }

    pub fn zeros(&self) -> usize {
        self.entries.iter().filter(|&&e| e == 0).count()
    }

    /// The sequence with `value` appended.
    pub fn pushed(&self, value: u32) -> InversionSequence {
        let mut entries = self.entries.clone();
        entries.push(value);
        InversionSequence { entries }
    }

    /// Parses the comma-separated format without checking the bound.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_int_list(text).map(InversionSequence::new_unchecked)
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_ints(&self.entries))
    }
}

impl FromStr for InversionSequence {
    type Err = ObjectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let e = InversionSequence::parse(s)?;
        e.validate()?;
        Ok(e)
    }
}
