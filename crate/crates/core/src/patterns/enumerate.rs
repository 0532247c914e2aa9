//! Exhaustive class enumeration.
//!
//! Inversion sequences and permutations are generated by a depth-first
//! search over prefixes that abandons a prefix as soon as an occurrence ends
//! at its last entry; values are tried in increasing order, so the output is
//! lexicographic. Paths and trees are generated by independent brute force
//! (step-by-step search checked by [`Path::validate`], and labelings of plane
//! tree shapes) and sorted by their text form.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{
    list_to_string, triple_occurs_ending_at, vincular_occurs_ending_at, word_occurs_ending_at,
    RelationTriple, VincularPattern, WordPattern,
};
use crate::objects::{
    DomainObject, IncreasingOrderedTree, InversionSequence, Node, Path, PathKind, Permutation, Step,
};

/// A class of objects that can be listed exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSpec {
    InvSeqTriple(RelationTriple),
    InvSeqWords(Vec<WordPattern>),
    PermVincular(Vec<VincularPattern>),
    /// Classical patterns, stored as vincular patterns without adjacencies.
    PermClassical(Vec<VincularPattern>),
    Paths(PathKind),
    /// Increasing ordered trees with increasing leaves.
    Trees,
}

impl ClassSpec {
    fn family(&self) -> Family {
        match self {
            ClassSpec::InvSeqTriple(_) | ClassSpec::InvSeqWords(_) => Family::InversionSequences,
            ClassSpec::PermVincular(_) | ClassSpec::PermClassical(_) => Family::Permutations,
            ClassSpec::Paths(_) => Family::Paths,
            ClassSpec::Trees => Family::Trees,
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::InvSeqTriple(t) => write!(f, "I({})", t),
            ClassSpec::InvSeqWords(w) => write!(f, "I(avoid:{})", list_to_string(w)),
            ClassSpec::PermVincular(v) | ClassSpec::PermClassical(v) => {
                write!(f, "AV({})", list_to_string(v))
            }
            ClassSpec::Paths(k) => write!(f, "{:?} paths", k),
            ClassSpec::Trees => f.write_str("increasing ordered trees with increasing leaves"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    InversionSequences,
    Permutations,
    Paths,
    Trees,
}

/// Largest size enumerated per object family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub permutations: usize,
    pub inversion_sequences: usize,
    pub paths: usize,
    pub trees: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            permutations: 10,
            inversion_sequences: 10,
            paths: 8,
            trees: 8,
        }
    }
}

impl EnumerationLimits {
    fn of(&self, family: Family) -> usize {
        match family {
            Family::InversionSequences => self.inversion_sequences,
            Family::Permutations => self.permutations,
            Family::Paths => self.paths,
            Family::Trees => self.trees,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("size {n} exceeds the exhaustive limit {limit} for {class}")]
    LimitExceeded { class: String, n: usize, limit: usize },
    #[error("sizes start at 1")]
    ZeroSize,
}

fn check(spec: &ClassSpec, n: usize, limits: &EnumerationLimits) -> Result<(), EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::ZeroSize);
    }
    let limit = limits.of(spec.family());
    if n > limit {
        return Err(EnumerationError::LimitExceeded {
            class: spec.to_string(),
            n,
            limit,
        });
    }
    Ok(())
}

/// Every object of size `n` in the class, once each, ordered by text form.
pub fn enumerate_class(
    spec: &ClassSpec,
    n: usize,
    limits: &EnumerationLimits,
) -> Result<Vec<DomainObject>, EnumerationError> {
    check(spec, n, limits)?;
    let mut out = Vec::new();
    match spec {
        ClassSpec::InvSeqTriple(_) | ClassSpec::InvSeqWords(_) => {
            // entries stay below 10, so numeric and text order agree
            visit_invseqs(spec, n, &mut |e| {
                out.push(DomainObject::InversionSequence(InversionSequence::new_unchecked(e.to_vec())))
            });
        }
        ClassSpec::PermVincular(v) | ClassSpec::PermClassical(v) => {
            visit_perms(v, n, &mut |p| {
                out.push(DomainObject::Permutation(Permutation::new_unchecked(p.to_vec())))
            });
            if n >= 10 {
                out.sort_by_cached_key(|o| o.to_string());
            }
        }
        ClassSpec::Paths(kind) => {
            out = paths(*kind, n).into_iter().map(DomainObject::Path).collect();
            out.sort_by_cached_key(|o| o.to_string());
        }
        ClassSpec::Trees => {
            out = trees(n).into_iter().map(DomainObject::Tree).collect();
            out.sort_by_cached_key(|o| o.to_string());
        }
    }
    Ok(out)
}

/// Size of the class at `n`, without materializing sequences or permutations.
pub fn count_class(spec: &ClassSpec, n: usize, limits: &EnumerationLimits) -> Result<u64, EnumerationError> {
    check(spec, n, limits)?;
    let mut count = 0u64;
    match spec {
        ClassSpec::InvSeqTriple(_) | ClassSpec::InvSeqWords(_) => visit_invseqs(spec, n, &mut |_| count += 1),
        ClassSpec::PermVincular(v) | ClassSpec::PermClassical(v) => visit_perms(v, n, &mut |_| count += 1),
        ClassSpec::Paths(kind) => count = paths(*kind, n).len() as u64,
        ClassSpec::Trees => count = trees(n).len() as u64,
    }
    Ok(count)
}

fn invseq_occurs_at(spec: &ClassSpec, e: &[u32], k: usize) -> bool {
    match spec {
        ClassSpec::InvSeqTriple(t) => triple_occurs_ending_at(e, t, k),
        ClassSpec::InvSeqWords(ws) => ws.iter().any(|w| word_occurs_ending_at(e, w, k)),
        _ => unreachable!(),
    }
}

fn visit_invseqs(spec: &ClassSpec, n: usize, f: &mut dyn FnMut(&[u32])) {
    fn go(spec: &ClassSpec, n: usize, e: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        let k = e.len();
        if k == n {
            f(e);
            return;
        }
        for v in 0..=k as u32 {
            e.push(v);
            if !invseq_occurs_at(spec, e, k) {
                go(spec, n, e, f);
            }
            e.pop();
        }
    }
    go(spec, n, &mut Vec::with_capacity(n), f);
}

fn visit_perms(patterns: &[VincularPattern], n: usize, f: &mut dyn FnMut(&[u32])) {
    fn go(
        patterns: &[VincularPattern],
        n: usize,
        p: &mut Vec<u32>,
        used: &mut [bool],
        f: &mut dyn FnMut(&[u32]),
    ) {
        let k = p.len();
        if k == n {
            f(p);
            return;
        }
        for v in 1..=n as u32 {
            if used[v as usize] {
                continue;
            }
            p.push(v);
            if !patterns.iter().any(|pat| vincular_occurs_ending_at(p, pat, k)) {
                used[v as usize] = true;
                go(patterns, n, p, used, f);
                used[v as usize] = false;
            }
            p.pop();
        }
    }
    go(patterns, n, &mut Vec::with_capacity(n), &mut vec![false; n + 1], f);
}

fn dyck_words(n: usize) -> Vec<Vec<Step>> {
    fn go(n: usize, ups: usize, y: usize, w: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if w.len() == 2 * n {
            out.push(w.clone());
            return;
        }
        if y > 0 {
            w.push(Step::D);
            go(n, ups, y - 1, w, out);
            w.pop();
        }
        if ups < n {
            w.push(Step::U);
            go(n, ups + 1, y + 1, w, out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// Steady words found directly from the definition: a walk in the cone with
/// no `WD`/`DW`, where every `UU` or `WU` factor forbids later points strictly
/// above the diagonal line through its up step.
fn steady_words(n: usize) -> Vec<Vec<Step>> {
    struct Search {
        n: i64,
        out: Vec<Vec<Step>>,
        word: Vec<Step>,
    }
    impl Search {
        fn go(&mut self, x: i64, y: i64, ups: i64, bound: i64) {
            if ups == self.n && y == 0 {
                if x == 2 * self.n {
                    self.out.push(self.word.clone());
                }
                return;
            }
            let prev = self.word.last().copied();
            if y > 0 && prev != Some(Step::W) && x + 1 - (y - 1) >= bound {
                self.word.push(Step::D);
                self.go(x + 1, y - 1, ups, bound);
                self.word.pop();
            }
            if ups < self.n {
                let (nx, ny) = (x + 1, y + 1);
                // the new step is the up step of a UU or WU factor
                let nb = if matches!(prev, Some(Step::U | Step::W)) {
                    bound.max(x - y)
                } else {
                    bound
                };
                if nx - ny >= nb {
                    self.word.push(Step::U);
                    self.go(nx, ny, ups + 1, nb);
                    self.word.pop();
                }
                let (wx, wy) = (x - 1, y + 1);
                if prev != Some(Step::D) && wy <= wx && wx - wy >= bound {
                    self.word.push(Step::W);
                    self.go(wx, wy, ups, bound);
                    self.word.pop();
                }
            }
        }
    }
    let mut s = Search {
        n: n as i64,
        out: Vec::new(),
        word: Vec::new(),
    };
    s.go(0, 0, 0, 0);
    s.out
}

/// All mark vectors with `marks[i] <= heights[i]`.
fn mark_vectors(heights: &[i64]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &h in heights {
        out = out
            .into_iter()
            .flat_map(|m| {
                (0..=h as u32).map(move |j| {
                    let mut m = m.clone();
                    m.push(j);
                    m
                })
            })
            .collect();
    }
    out
}

fn paths(kind: PathKind, n: usize) -> Vec<Path> {
    let words = if kind.allows_w() { steady_words(n) } else { dyck_words(n) };
    let mut out = Vec::new();
    for w in words {
        let base = Path::unmarked(w, kind);
        if kind.is_marked() {
            let heights: Vec<i64> = base.valleys().iter().map(|v| v.height).collect();
            for marks in mark_vectors(&heights) {
                let p = base.with_marks(marks);
                if p.validate().is_ok() {
                    out.push(p);
                }
            }
        } else {
            debug_assert!(base.validate().is_ok(), "{}", base);
            out.push(base);
        }
    }
    out
}

/// Plane forests with `m` vertices in total.
fn forests(m: usize) -> Vec<Vec<Node>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // first tree has `s` vertices
    for s in 1..=m {
        for sub in forests(s - 1) {
            for rest in forests(m - s) {
                let mut f = Vec::with_capacity(rest.len() + 1);
                f.push(Node { label: 0, children: sub.clone() });
                f.extend(rest);
                out.push(f);
            }
        }
    }
    out
}

/// Increasing ordered trees with increasing leaves: every plane shape, with
/// labels assigned in pre-order under the two monotonicity constraints.
fn trees(n: usize) -> Vec<IncreasingOrderedTree> {
    struct Slot {
        parent: Option<usize>,
        leaf: bool,
    }
    fn flatten(node: &Node, parent: Option<usize>, slots: &mut Vec<Slot>) {
        let me = slots.len();
        slots.push(Slot {
            parent,
            leaf: node.children.is_empty(),
        });
        for c in &node.children {
            flatten(c, Some(me), slots);
        }
    }
    fn rebuild(node: &Node, labels: &[u32], next: &mut usize) -> Node {
        let label = labels[*next];
        *next += 1;
        Node {
            label,
            children: node.children.iter().map(|c| rebuild(c, labels, next)).collect(),
        }
    }
    fn assign(
        slots: &[Slot],
        i: usize,
        labels: &mut Vec<u32>,
        used: &mut [bool],
        last_leaf: u32,
        found: &mut Vec<Vec<u32>>,
    ) {
        if i == slots.len() {
            found.push(labels.clone());
            return;
        }
        let lo = labels[slots[i].parent.unwrap()];
        for v in lo + 1..used.len() as u32 {
            if used[v as usize] || (slots[i].leaf && v <= last_leaf) {
                continue;
            }
            used[v as usize] = true;
            labels.push(v);
            assign(slots, i + 1, labels, used, if slots[i].leaf { v } else { last_leaf }, found);
            labels.pop();
            used[v as usize] = false;
        }
    }
    let mut out = Vec::new();
    for children in forests(n) {
        let shape = Node { label: 0, children };
        let mut slots = Vec::new();
        flatten(&shape, None, &mut slots);
        let mut used = vec![false; n + 1];
        used[0] = true;
        let mut found = Vec::new();
        assign(&slots, 1, &mut vec![0], &mut used, 0, &mut found);
        for labels in found {
            out.push(IncreasingOrderedTree::new_unchecked(rebuild(&shape, &labels, &mut 0)));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquinumerosityRow {
    pub n: usize,
    pub left: u64,
    pub right: u64,
}

impl EquinumerosityRow {
    pub fn equal(&self) -> bool {
        self.left == self.right
    }
}

/// Class sizes side by side for `n = 1..=n_max`.
pub fn equinumerosity_check(
    a: &ClassSpec,
    b: &ClassSpec,
    n_max: usize,
    limits: &EnumerationLimits,
) -> Result<Vec<EquinumerosityRow>, EnumerationError> {
    (1..=n_max)
        .map(|n| {
            Ok(EquinumerosityRow {
                n,
                left: count_class(a, n, limits)?,
                right: count_class(b, n, limits)?,
            })
        })
        .collect()
}

/// A known equinumerous pair: an inversion-sequence class and one or more
/// classical permutation classes of the same size for every `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    pub inversion_sequences: ClassSpec,
    pub permutations: Vec<ClassSpec>,
}

/// Inversion-sequence classes known to match classical permutation classes.
pub fn classical_correspondences() -> Vec<Correspondence> {
    let table: [(&str, &[&str]); 8] = [
        ("eq,dash,dash", &["123,132,231"]),
        ("lt,neq,dash", &["213,321"]),
        ("eq,lt,dash", &["132,231"]),
        ("lt,geq,dash", &["213,312"]),
        ("dash,gt,dash", &["213"]),
        ("gt,lt,dash", &["2143,3142,4132", "2143,3142,3241"]),
        ("gt,dash,geq", &["2134,2143"]),
        ("geq,neq,geq", &["4321,4312"]),
    ];
    table
        .iter()
        .map(|(t, perms)| Correspondence {
            inversion_sequences: ClassSpec::InvSeqTriple(t.parse().unwrap()),
            permutations: perms
                .iter()
                .map(|p| ClassSpec::PermClassical(super::parse_classical_list(p).unwrap()))
                .collect(),
        })
        .collect()
}
