use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Names one invariant of one of the domain types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    /// The object has size zero.
    Empty,
    /// Inversion sequence entry with `e_i >= i`.
    EntryBound,
    /// Permutation value outside `1..=n`.
    ValueRange,
    /// Permutation value repeated.
    DuplicateValue,
    /// Path point below the x-axis.
    BelowAxis,
    /// Path point outside the cone `0 <= y <= x`.
    OutsideCone,
    /// Path does not end where its kind requires.
    WrongEnd,
    /// `W` step in a Dyck-kind path.
    WStep,
    /// `WD` or `DW` factor.
    ForbiddenFactor,
    /// Suffix after a `UU` factor crosses the line through the factor.
    S1,
    /// Suffix after a `WU` factor crosses the line through its up step.
    S2,
    /// Non-zero mark on an unmarked path kind.
    NonzeroMark,
    /// Number of marks differs from the number of valleys.
    MarkCount,
    /// Mark higher than its valley.
    M1,
    /// Non-trivially marked valley strictly above some `W` step.
    M2,
    /// Non-trivially marked valley level with a `W` step to its right.
    M3,
    /// Tree labels are not exactly `{0, ..., n}` with root `0`.
    TreeLabels,
    /// Child label not larger than its parent's.
    TreeNotIncreasing,
}

impl Invariant {
    pub fn description(self) -> &'static str {
        match self {
            Invariant::Empty => "object is empty",
            Invariant::EntryBound => "entry violates 0 <= e_i < i",
            Invariant::ValueRange => "value outside 1..n",
            Invariant::DuplicateValue => "repeated value",
            Invariant::BelowAxis => "point below the x-axis",
            Invariant::OutsideCone => "point outside the cone 0 <= y <= x",
            Invariant::WrongEnd => "path does not end at (2n, 0)",
            Invariant::WStep => "W step in a Dyck path",
            Invariant::ForbiddenFactor => "forbidden WD or DW factor",
            Invariant::S1 => "(S1) suffix after a UU factor crosses its diagonal line",
            Invariant::S2 => "(S2) suffix after a WU factor crosses its diagonal line",
            Invariant::NonzeroMark => "non-zero mark on an unmarked path",
            Invariant::MarkCount => "number of marks differs from number of valleys",
            Invariant::M1 => "(M1) mark above its valley",
            Invariant::M2 => "(M2) marked valley above a W step",
            Invariant::M3 => "(M3) marked valley level with a later W step",
            Invariant::TreeLabels => "labels are not {0..n} with root 0",
            Invariant::TreeNotIncreasing => "child label not larger than parent label",
        }
    }
}

/// One violated invariant and where it was found.
///
/// `index` is the 1-based entry position for sequences, the 0-based step
/// index for paths (the first step of the offending factor, or the index of
/// the valley's up step for mark conditions), and the vertex label for trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub invariant: Invariant,
    pub index: usize,
}

impl Violation {
    pub fn new(invariant: Invariant, index: usize) -> Self {
        Violation { invariant, index }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.invariant.description(), self.index)
    }
}

/// All violated invariants of an object, in scan order.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

impl ValidationError {
    pub fn contains(&self, invariant: Invariant) -> bool {
        self.violations.iter().any(|v| v.invariant == invariant)
    }

    pub(crate) fn check(violations: Vec<Violation>) -> Result<(), ValidationError> {
        if violations.is_empty() {
            Ok(())
        } else {
            Err(ValidationError { violations })
        }
    }
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// Syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ObjectError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid object: {0}")]
    Invalid(#[from] ValidationError),
}
