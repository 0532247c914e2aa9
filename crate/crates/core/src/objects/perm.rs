use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{join_ints, parse_int_list, Invariant, ObjectError, ParseError, ValidationError, Violation};

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self, ValidationError> {
        let p = Permutation { values };
        p.validate()?;
        Ok(p)
    }

    pub fn new_unchecked(values: Vec<u32>) -> Self {
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        let n = self.values.len();
        let mut violations = Vec::new();
        if n == 0 {
            violations.push(Violation::new(Invariant::Empty, 0));
        }
        let mut seen = vec![false; n + 1];
        for (i, &v) in self.values.iter().enumerate() {
            if v == 0 || v as usize > n {
                violations.push(Violation::new(Invariant::ValueRange, i + 1));
            } else if seen[v as usize] {
                violations.push(Violation::new(Invariant::DuplicateValue, i + 1));
            } else {
                seen[v as usize] = true;
            }
        }
        ValidationError::check(violations)
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `pi . a`: appends the value `a` (in `1..=n+1`) and shifts up every
    /// entry that is at least `a`.
    pub fn append_site(&self, a: u32) -> Permutation {
        debug_assert!(a >= 1 && a as usize <= self.len() + 1);
        let mut values: Vec<u32> = self
            .values
            .iter()
            .map(|&v| if v >= a { v + 1 } else { v })
            .collect();
        values.push(a);
        Permutation { values }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_int_list(text).map(Permutation::new_unchecked)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_ints(&self.values))
    }
}

impl FromStr for Permutation {
    type Err = ObjectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let p = Permutation::parse(s)?;
        p.validate()?;
        Ok(p)
    }
}
