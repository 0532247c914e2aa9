//! Executable combinatorics of pattern-avoiding inversion sequences and the
//! powered Catalan numbers.
//!
//! The crate is `no_std` (it needs `alloc`) and every operation is a pure
//! function over immutable values. It is organised as follows:
//!
//! * [`objects`]: inversion sequences, permutations, `U`/`D`/`W` lattice paths
//!   with valley marks, increasing ordered trees, their validation and their
//!   text formats.
//! * [`patterns`]: avoidance oracles for relation triples, word patterns and
//!   vincular permutation patterns, plus exhaustive class enumeration.
//! * [`gentree`]: a succession-rule engine with the built-in rule catalog.
//! * [`growth`]: object-level growths realizing each rule, and the
//!   consistency checker tying objects to rules.
//! * [`bijections`]: inversion tables, the Catalan and steady-path encodings,
//!   and the `phi`/`theta` transformations between steady paths and
//!   valley-marked Dyck paths.
//! * [`series`]: recurrences, reference sequences and exact formal-series
//!   arithmetic for the kernel-method formula.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bijections;
pub mod gentree;
pub mod growth;
pub mod objects;
pub mod patterns;
pub mod series;

pub use gentree::{BuiltinRule, Label, SuccessionRule};
pub use objects::{
    IncreasingOrderedTree, InversionSequence, Path, PathKind, PathStatistics, Permutation, Step,
};
