//! Core combinatorial value types.
//!
//! Every type can hold unchecked data (built with `new_unchecked` or produced
//! by the parsers) so that [`validate`](InversionSequence::validate) can report
//! every violated invariant with its position. The checked constructors call
//! the same validation.

mod error;
mod invseq;
mod path;
mod perm;
mod tree;

use alloc::string::String;
use core::fmt;

pub use error::{Invariant, ObjectError, ParseError, ValidationError, Violation};
pub use invseq::InversionSequence;
pub use path::{Path, PathKind, PathStatistics, Step, Valley};
pub use perm::Permutation;
pub use tree::{IncreasingOrderedTree, Node};

/// Which external text format a token stream should be read as.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    InversionSequence,
    Permutation,
    Path(PathKind),
    Tree,
}

/// A parsed object of any kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomainObject {
    InversionSequence(InversionSequence),
    Permutation(Permutation),
    Path(Path),
    Tree(IncreasingOrderedTree),
}

impl DomainObject {
    pub fn validate(&self) -> Result<(), ValidationError> {
        match self {
            DomainObject::InversionSequence(e) => e.validate(),
            DomainObject::Permutation(p) => p.validate(),
            DomainObject::Path(p) => p.validate(),
            DomainObject::Tree(t) => t.validate(),
        }
    }

    /// Size of the object: length, semi-length, or number of non-root vertices.
    pub fn size(&self) -> usize {
        match self {
            DomainObject::InversionSequence(e) => e.len(),
            DomainObject::Permutation(p) => p.len(),
            DomainObject::Path(p) => p.size(),
            DomainObject::Tree(t) => t.size(),
        }
    }
}

impl fmt::Display for DomainObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainObject::InversionSequence(e) => e.fmt(f),
            DomainObject::Permutation(p) => p.fmt(f),
            DomainObject::Path(p) => p.fmt(f),
            DomainObject::Tree(t) => t.fmt(f),
        }
    }
}

/// Parses `text` in the external format of `kind`. Only syntax is checked;
/// call [`DomainObject::validate`] for the kind invariants.
pub fn parse_object(text: &str, kind: ObjectKind) -> Result<DomainObject, ParseError> {
    Ok(match kind {
        ObjectKind::InversionSequence => {
            DomainObject::InversionSequence(InversionSequence::parse(text)?)
        }
        ObjectKind::Permutation => DomainObject::Permutation(Permutation::parse(text)?),
        ObjectKind::Path(k) => DomainObject::Path(Path::parse(text, k)?),
        ObjectKind::Tree => DomainObject::Tree(IncreasingOrderedTree::parse(text)?),
    })
}

/// Parses a comma-separated list of decimal integers, the shared format of
/// inversion sequences, permutations and inversion tables.
pub(crate) fn parse_int_list(text: &str) -> Result<alloc::vec::Vec<u32>, ParseError> {
    let mut out = alloc::vec::Vec::new();
    let mut offset = 0;
    for token in text.split(',') {
        let trimmed = token.trim();
        let lead = token.len() - token.trim_start().len();
        if trimmed.is_empty() {
            return Err(ParseError::new(offset + lead, "expected an integer"));
        }
        match trimmed.parse::<u32>() {
            Ok(v) => out.push(v),
            Err(_) => {
                return Err(ParseError::new(
                    offset + lead,
                    alloc::format!("invalid integer {:?}", trimmed),
                ))
            }
        }
        offset += token.len() + 1;
    }
    Ok(out)
}

pub(crate) fn join_ints(values: &[u32]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", v);
    }
    s
}
