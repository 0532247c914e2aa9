//! Object-level growths: each family gets a root, a label function, a child
//! generator emitting `(child, label)` pairs and (where it exists) a parent
//! map. [`growth_consistency`] ties a family to its succession rule.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bijections::{path_from_encoding, steady_encoding};
use crate::gentree::{BuiltinRule, Label, SuccessionRule};
use crate::objects::{DomainObject, IncreasingOrderedTree, InversionSequence, Node, Path, PathKind, Permutation, Step};
use crate::patterns::{
    avoids_triple, enumerate_class, vincular_occurs_ending_at, ClassSpec, EnumerationError, EnumerationLimits,
    RelationTriple, VincularPattern,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrowthError {
    #[error("{object} is not in family {family}")]
    NotInFamily { family: &'static str, object: String },
    #[error("insertion position {position} outside 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },
    #[error("{0} has no parent")]
    NoParent(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

/// A family together with the growth realizing its rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `I(>=,-,>=)` grown by inserting `i - 1` at position `i`.
    Cat,
    /// `I(>=,-,>=)` grown by a new rightmost entry.
    Cat2,
    IGeq3,
    Bax,
    Semi,
    PCatInvSeq,
    PCatVmDyck,
    PCatTree,
    P1234,
    Steady,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Cat,
        Family::Cat2,
        Family::IGeq3,
        Family::Bax,
        Family::Semi,
        Family::PCatInvSeq,
        Family::PCatVmDyck,
        Family::PCatTree,
        Family::P1234,
        Family::Steady,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cat => "cat",
            Family::Cat2 => "cat2",
            Family::IGeq3 => "i-geq3",
            Family::Bax => "bax",
            Family::Semi => "semi",
            Family::PCatInvSeq => "pcat:invseq",
            Family::PCatVmDyck => "pcat:vmdyck",
            Family::PCatTree => "pcat:tree",
            Family::P1234 => "p1234",
            Family::Steady => "steady",
        }
    }

    pub fn rule(self) -> BuiltinRule {
        match self {
            Family::Cat => BuiltinRule::Cat,
            Family::Cat2 => BuiltinRule::Cat2,
            Family::IGeq3 => BuiltinRule::IGeq3,
            Family::Bax => BuiltinRule::Bax,
            Family::Semi => BuiltinRule::Semi,
            Family::PCatInvSeq | Family::PCatVmDyck | Family::PCatTree => BuiltinRule::PCat,
            Family::P1234 => BuiltinRule::P1234,
            Family::Steady => BuiltinRule::Steady,
        }
    }

    /// The class this growth generates, as an enumerable specification.
    pub fn class(self) -> ClassSpec {
        let t = |s: &str| ClassSpec::InvSeqTriple(s.parse().unwrap());
        match self {
            Family::Cat | Family::Cat2 => t("geq,dash,geq"),
            Family::IGeq3 => t("geq,geq,geq"),
            Family::Bax => t("geq,geq,gt"),
            Family::Semi => t("geq,gt,dash"),
            Family::PCatInvSeq => t("eq,gt,gt"),
            Family::PCatVmDyck => ClassSpec::Paths(PathKind::ValleyMarkedDyck),
            Family::PCatTree => ClassSpec::Trees,
            Family::P1234 => ClassSpec::PermVincular(vec![p1234_pattern()]),
            Family::Steady => ClassSpec::Paths(PathKind::Steady),
        }
    }

    /// The unique object of size 1.
    pub fn root(self) -> DomainObject {
        match self {
            Family::PCatVmDyck => DomainObject::Path(Path::unmarked(vec![Step::U, Step::D], PathKind::ValleyMarkedDyck)),
            Family::Steady => DomainObject::Path(Path::unmarked(vec![Step::U, Step::D], PathKind::Steady)),
            Family::PCatTree => DomainObject::Tree(IncreasingOrderedTree::single_edge()),
            Family::P1234 => DomainObject::Permutation(Permutation::identity(1)),
            _ => DomainObject::InversionSequence(InversionSequence::new_unchecked(vec![0])),
        }
    }

    /// Membership oracle, independent of the growth.
    pub fn contains(self, obj: &DomainObject) -> bool {
        if obj.validate().is_err() {
            return false;
        }
        match (self.class(), obj) {
            (ClassSpec::InvSeqTriple(t), DomainObject::InversionSequence(e)) => avoids_triple(e, &t),
            (ClassSpec::PermVincular(v), DomainObject::Permutation(p)) => {
                v.iter().all(|pat| crate::patterns::avoids_vincular(p, pat))
            }
            (ClassSpec::Paths(kind), DomainObject::Path(p)) => p.kind() == kind,
            (ClassSpec::Trees, DomainObject::Tree(t)) => t.has_increasing_leaves(),
            _ => false,
        }
    }

    fn require(self, obj: &DomainObject) -> Result<(), GrowthError> {
        if self.contains(obj) {
            Ok(())
        } else {
            Err(GrowthError::NotInFamily {
                family: self.name(),
                object: obj.to_string(),
            })
        }
    }

    /// The label of `obj`, computed from the object's own statistics.
    pub fn label(self, obj: &DomainObject) -> Result<Label, GrowthError> {
        self.require(obj)?;
        Ok(match (self, obj) {
            (Family::Cat, DomainObject::InversionSequence(e)) => {
                Label::One(active_positions_cat_unchecked(e).len() as u32 - 1)
            }
            (Family::Cat2 | Family::IGeq3 | Family::Bax | Family::Semi, DomainObject::InversionSequence(e)) => {
                let (h, k, _) = rightmost_stats(self, e);
                Label::Two(h, k)
            }
            (Family::PCatInvSeq, DomainObject::InversionSequence(e)) => Label::One(e.zeros() as u32),
            (Family::PCatVmDyck, DomainObject::Path(p)) => Label::One(p.last_descent_length() as u32),
            (Family::PCatTree, DomainObject::Tree(t)) => Label::One(t.root_degree() as u32),
            (Family::P1234, DomainObject::Permutation(p)) => p1234_label(p),
            (Family::Steady, DomainObject::Path(p)) => steady_label(p),
            _ => unreachable!("membership checked the object kind"),
        })
    }

    /// Children with the labels the growth assigns them, in generation order.
    pub fn children(self, obj: &DomainObject) -> Result<Vec<(DomainObject, Label)>, GrowthError> {
        self.require(obj)?;
        Ok(match (self, obj) {
            (Family::Cat, DomainObject::InversionSequence(e)) => cat_children(e)
                .into_iter()
                .map(|(c, l)| (DomainObject::InversionSequence(c), l))
                .collect(),
            (Family::Cat2 | Family::IGeq3 | Family::Bax | Family::Semi, DomainObject::InversionSequence(e)) => {
                rightmost_children(self, e)
                    .into_iter()
                    .map(|(c, l)| (DomainObject::InversionSequence(c), l))
                    .collect()
            }
            (Family::PCatInvSeq, DomainObject::InversionSequence(e)) => pcat_children_unchecked(e)
                .into_iter()
                .map(|(c, l)| (DomainObject::InversionSequence(c), l))
                .collect(),
            (Family::PCatVmDyck, DomainObject::Path(p)) => vmdyck_children_unchecked(p)
                .into_iter()
                .map(|(c, l)| (DomainObject::Path(c), l))
                .collect(),
            (Family::PCatTree, DomainObject::Tree(t)) => tree_children_unchecked(t)
                .into_iter()
                .map(|(c, l)| (DomainObject::Tree(c), l))
                .collect(),
            (Family::P1234, DomainObject::Permutation(p)) => perm1234_children_unchecked(p)
                .into_iter()
                .map(|(c, l)| (DomainObject::Permutation(c), l))
                .collect(),
            (Family::Steady, DomainObject::Path(p)) => steady_children_unchecked(p)
                .into_iter()
                .map(|(c, l)| (DomainObject::Path(c), l))
                .collect(),
            _ => unreachable!("membership checked the object kind"),
        })
    }

    /// The object `obj` was generated from; `None` for the root.
    pub fn parent(self, obj: &DomainObject) -> Result<Option<DomainObject>, GrowthError> {
        self.require(obj)?;
        if obj.size() == 1 {
            return Ok(None);
        }
        Ok(Some(match (self, obj) {
            (Family::Cat, DomainObject::InversionSequence(e)) => DomainObject::InversionSequence(cat_parent(e)),
            (Family::Cat2 | Family::IGeq3 | Family::Bax | Family::Semi, DomainObject::InversionSequence(e)) => {
                DomainObject::InversionSequence(InversionSequence::new_unchecked(
                    e.entries()[..e.len() - 1].to_vec(),
                ))
            }
            (Family::PCatInvSeq, DomainObject::InversionSequence(e)) => {
                DomainObject::InversionSequence(pcat_parent_unchecked(e))
            }
            (Family::PCatVmDyck, DomainObject::Path(p)) => DomainObject::Path(vmdyck_parent(p)),
            (Family::PCatTree, DomainObject::Tree(t)) => DomainObject::Tree(tree_parent(t)),
            (Family::P1234, DomainObject::Permutation(p)) => DomainObject::Permutation(standardized_prefix(p)),
            (Family::Steady, DomainObject::Path(p)) => {
                let d = steady_encoding(p);
                DomainObject::Path(path_from_encoding(&d[..d.len() - 1], PathKind::Steady))
            }
            _ => unreachable!("membership checked the object kind"),
        }))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GrowthError;

    /// Canonical names; `pcat` alone means the inversion-sequence growth.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "pcat" {
            return Ok(Family::PCatInvSeq);
        }
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| GrowthError::UnknownFamily(s.into()))
    }
}

fn p1234_pattern() -> VincularPattern {
    "1-23-4".parse().unwrap()
}

fn catalan_triple() -> RelationTriple {
    "geq,dash,geq".parse().unwrap()
}

fn require_triple(e: &InversionSequence, t: &str, family: &'static str) -> Result<(), GrowthError> {
    if e.validate().is_ok() && avoids_triple(e, &t.parse().unwrap()) {
        Ok(())
    } else {
        Err(GrowthError::NotInFamily {
            family,
            object: e.to_string(),
        })
    }
}

// ---------------------------------------------------------------------------
// Catalan inversion sequences, insertion growth

/// `e ⊙ i`: the entry `i - 1` inserted at position `i` (1-based).
pub fn cat_insert(e: &InversionSequence, i: usize) -> Result<InversionSequence, GrowthError> {
    let n = e.len();
    if i == 0 || i > n + 1 {
        return Err(GrowthError::PositionOutOfRange {
            position: i,
            max: n + 1,
        });
    }
    let mut v = e.entries().to_vec();
    v.insert(i - 1, i as u32 - 1);
    Ok(InversionSequence::new_unchecked(v))
}

/// Positions `i` for which `e ⊙ i` stays in `I(>=,-,>=)`: exactly those with
/// every `e_j > i - 1` for `j > i`.
pub fn active_positions_cat(e: &InversionSequence) -> Result<Vec<usize>, GrowthError> {
    require_triple(e, "geq,dash,geq", "cat")?;
    Ok(active_positions_cat_unchecked(e))
}

fn active_positions_cat_unchecked(e: &InversionSequence) -> Vec<usize> {
    let v = e.entries();
    let n = v.len();
    (1..=n + 1)
        .filter(|&i| v.iter().skip(i).all(|&x| x as usize > i - 1))
        .collect()
}

fn cat_children(e: &InversionSequence) -> Vec<(InversionSequence, Label)> {
    active_positions_cat_unchecked(e)
        .into_iter()
        .enumerate()
        .map(|(j, i)| (cat_insert(e, i).unwrap(), Label::One(j as u32 + 1)))
        .collect()
}

/// Removes the rightmost entry equal to its position minus one.
fn cat_parent(e: &InversionSequence) -> InversionSequence {
    let mut v = e.entries().to_vec();
    let j = (0..v.len()).rev().find(|&j| v[j] as usize == j).expect("e_1 = 0");
    v.remove(j);
    InversionSequence::new_unchecked(v)
}

// ---------------------------------------------------------------------------
// Rightmost-entry growths

/// Maximum value among weak-descent entries, `-1` when there is none.
pub fn mwd(e: &InversionSequence) -> i64 {
    e.entries()
        .windows(2)
        .filter(|w| w[0] >= w[1])
        .map(|w| w[0] as i64)
        .max()
        .unwrap_or(-1)
}

/// Value of the rightmost entry that is not a (strict) left-to-right maximum.
fn rightmost_non_ltr_max(v: &[u32]) -> Option<(usize, u32)> {
    let mut max: Option<u32> = None;
    let mut last = None;
    for (i, &x) in v.iter().enumerate() {
        if max.is_none_or(|m| x > m) {
            max = Some(x);
        } else {
            last = Some((i, x));
        }
    }
    last
}

/// `(h, k, lowest admissible new entry)` for the rightmost-entry families.
fn rightmost_stats(family: Family, e: &InversionSequence) -> (u32, u32, u32) {
    let v = e.entries();
    let n = v.len() as i64;
    let max = e.max() as i64;
    let k = (n - max) as u32;
    let (h, lo) = match family {
        Family::Cat2 => {
            let m = mwd(e);
            (max - m, m + 1)
        }
        Family::IGeq3 => {
            let last = rightmost_non_ltr_max(v).map_or(-1, |(_, x)| x as i64);
            (max - last, last + 1)
        }
        Family::Bax => match rightmost_non_ltr_max(v) {
            Some((i, x)) if v[..i].iter().any(|&y| y > x) => (max - x as i64, x as i64 + 1),
            other => {
                let last = other.map_or(0, |(_, x)| x as i64);
                (max - last + 1, last)
            }
        },
        Family::Semi => {
            let last = rightmost_non_ltr_max(v).map_or(0, |(_, x)| x as i64);
            (max - last + 1, last)
        }
        _ => unreachable!(),
    };
    (h as u32, k, lo as u32)
}

/// New rightmost entries for `cat2`, `i-geq3`, `bax` and `semi`, with the
/// labels given by each family's bookkeeping.
pub fn children_rightmost_entry(
    family: Family,
    e: &InversionSequence,
) -> Result<Vec<(InversionSequence, Label)>, GrowthError> {
    if !matches!(family, Family::Cat2 | Family::IGeq3 | Family::Bax | Family::Semi) {
        return Err(GrowthError::UnknownFamily(family.name().into()));
    }
    family.require(&DomainObject::InversionSequence(e.clone()))?;
    Ok(rightmost_children(family, e))
}

fn rightmost_children(family: Family, e: &InversionSequence) -> Vec<(InversionSequence, Label)> {
    let n = e.len() as u32;
    let max = e.max();
    let (h, k, lo) = rightmost_stats(family, e);
    (lo..=n)
        .map(|p| {
            let label = if p > max {
                Label::Two(h + p - max, n + 1 - p)
            } else {
                match family {
                    Family::Cat2 => Label::Two(0, k + 1),
                    Family::IGeq3 => Label::Two(max - p, k + 1),
                    Family::Bax if p == max => Label::Two(1, k + 1),
                    Family::Bax => Label::Two(max - p, k + 1),
                    Family::Semi => Label::Two(max - p + 1, k + 1),
                    _ => unreachable!(),
                }
            };
            (e.pushed(p), label)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Powered Catalan inversion sequences

/// Children of `e ∈ I(=,>,>)`: raise the positive entries, prepend a `0`,
/// then turn chosen zeros into ones. With the zeros of `e` at `i_1 < ... <
/// i_k`, child `(j, m)` turns into `1` the shifted zeros `i_l + 1` for
/// `l > j` and the one at `i_m + 1`, and has `j` zeros; the untouched
/// sequence has `k + 1`.
pub fn pcat_children_invseq(e: &InversionSequence) -> Result<Vec<(InversionSequence, Label)>, GrowthError> {
    require_triple(e, "eq,gt,gt", "pcat:invseq")?;
    Ok(pcat_children_unchecked(e))
}

fn pcat_children_unchecked(e: &InversionSequence) -> Vec<(InversionSequence, Label)> {
    let mut base = vec![0u32];
    base.extend(e.entries().iter().map(|&x| if x > 0 { x + 1 } else { 0 }));
    // positions of the shifted zeros, excluding the new leading zero
    let zeros: Vec<usize> = (1..base.len()).filter(|&i| base[i] == 0).collect();
    let k = zeros.len();
    let mut out = Vec::with_capacity(k * (k + 1) / 2 + 1);
    for j in 1..=k {
        for m in 1..=j {
            let mut f = base.clone();
            for &z in &zeros[j..] {
                f[z] = 1;
            }
            f[zeros[m - 1]] = 1;
            out.push((InversionSequence::new_unchecked(f), Label::One(j as u32)));
        }
    }
    out.push((InversionSequence::new_unchecked(base), Label::One(k as u32 + 1)));
    out
}

/// Inverse step: ones become zeros, the first entry is dropped, positive
/// entries are lowered by one.
pub fn pcat_parent_invseq(f: &InversionSequence) -> Result<InversionSequence, GrowthError> {
    require_triple(f, "eq,gt,gt", "pcat:invseq")?;
    if f.len() < 2 {
        return Err(GrowthError::NoParent(f.to_string()));
    }
    Ok(pcat_parent_unchecked(f))
}

fn pcat_parent_unchecked(f: &InversionSequence) -> InversionSequence {
    InversionSequence::new_unchecked(
        f.entries()[1..]
            .iter()
            .map(|&x| x.saturating_sub(1))
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Steady paths

/// Label `(h, k)` with `k = r + 1` for a last descent of length `r`, and
/// `h = n - t/2 - r` for the edge line `y = x - t`.
pub fn steady_label(p: &Path) -> Label {
    let n = p.size() as i64;
    let r = p.last_descent_length() as i64;
    let t = p.edge_line_offset();
    Label::Two((n - t / 2 - r) as u32, (r + 1) as u32)
}

/// A new rightmost up step at each point `(2n - i, i)`, `0 <= i <= n - t/2`.
pub fn steady_children(p: &Path) -> Result<Vec<(Path, Label)>, GrowthError> {
    Family::Steady.require(&DomainObject::Path(p.with_kind(PathKind::Steady)))?;
    Ok(steady_children_unchecked(&p.with_kind(PathKind::Steady)))
}

fn steady_children_unchecked(p: &Path) -> Vec<(Path, Label)> {
    let n = p.size() as u32;
    let Label::Two(h, k) = steady_label(p) else { unreachable!() };
    let r = k - 1;
    let s = n - (p.edge_line_offset() / 2) as u32;
    let mut d = steady_encoding(p);
    d.push(0);
    (0..=s)
        .map(|i| {
            *d.last_mut().unwrap() = n - i;
            let label = if i < r {
                Label::Two(h + k - 1 - i, i + 2)
            } else {
                Label::Two(0, i + 2)
            };
            (path_from_encoding(&d, PathKind::Steady), label)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Permutations avoiding 1-23-4

/// Values `a` for which `p · a` still avoids `1-23-4`, by direct testing.
pub fn perm1234_active_sites(p: &Permutation) -> Result<Vec<u32>, GrowthError> {
    Family::P1234.require(&DomainObject::Permutation(p.clone()))?;
    Ok(active_sites_unchecked(p))
}

fn active_sites_unchecked(p: &Permutation) -> Vec<u32> {
    let pat = p1234_pattern();
    let n = p.len();
    (1..=n as u32 + 1)
        .filter(|&a| !vincular_occurs_ending_at(p.append_site(a).values(), &pat, n))
        .collect()
}

fn p1234_label(p: &Permutation) -> Label {
    let last = *p.values().last().unwrap();
    let sites = active_sites_unchecked(p);
    let h = sites.iter().filter(|&&a| a <= last).count() as u32;
    Label::Two(h, sites.len() as u32 - h)
}

pub fn perm1234_children(p: &Permutation) -> Result<Vec<(Permutation, Label)>, GrowthError> {
    Family::P1234.require(&DomainObject::Permutation(p.clone()))?;
    Ok(perm1234_children_unchecked(p))
}

fn perm1234_children_unchecked(p: &Permutation) -> Vec<(Permutation, Label)> {
    let Label::Two(h, k) = p1234_label(p) else { unreachable!() };
    active_sites_unchecked(p)
        .into_iter()
        .map(|a| {
            let label = if h == 1 {
                Label::Two(a, k + 2 - a)
            } else if a <= h {
                Label::Two(a, h + k + 1 - a)
            } else {
                Label::Two(a, 0)
            };
            (p.append_site(a), label)
        })
        .collect()
}

fn standardized_prefix(p: &Permutation) -> Permutation {
    let v = p.values();
    let last = *v.last().unwrap();
    Permutation::new_unchecked(
        v[..v.len() - 1]
            .iter()
            .map(|&x| if x > last { x - 1 } else { x })
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Valley-marked Dyck paths

/// A `UD` peak inserted after `i` steps of the last descent; when this
/// creates a valley at height `j`, one child per mark `0..=j`.
pub fn vmdyck_children(p: &Path) -> Result<Vec<(Path, Label)>, GrowthError> {
    let p = p.with_kind(PathKind::ValleyMarkedDyck);
    Family::PCatVmDyck.require(&DomainObject::Path(p.clone()))?;
    Ok(vmdyck_children_unchecked(&p))
}

fn vmdyck_children_unchecked(p: &Path) -> Vec<(Path, Label)> {
    let k = p.last_descent_length();
    let steps = p.steps();
    let top = steps.len() - k;
    let mut out = Vec::new();
    for i in 0..=k {
        let mut w = steps[..top + i].to_vec();
        w.extend_from_slice(&[Step::U, Step::D]);
        w.extend(core::iter::repeat_n(Step::D, k - i));
        if i == 0 {
            out.push((
                Path::new_unchecked(w, p.marks().to_vec(), PathKind::ValleyMarkedDyck),
                Label::One(k as u32 + 1),
            ));
            continue;
        }
        let j = (k - i) as u32;
        for mark in 0..=j {
            let mut marks = p.marks().to_vec();
            marks.push(mark);
            out.push((
                Path::new_unchecked(w.clone(), marks, PathKind::ValleyMarkedDyck),
                Label::One(j + 1),
            ));
        }
    }
    out
}

/// Removes the last peak and, if it closed a valley, that valley's mark.
fn vmdyck_parent(p: &Path) -> Path {
    let steps = p.steps();
    let u = steps.iter().rposition(|&s| s == Step::U).unwrap();
    let mut marks = p.marks().to_vec();
    if u > 0 && steps[u - 1] == Step::D {
        marks.pop();
    }
    let mut w = steps.to_vec();
    w.remove(u);
    w.remove(u);
    Path::new_unchecked(w, marks, PathKind::ValleyMarkedDyck)
}

// ---------------------------------------------------------------------------
// Increasing ordered trees with increasing leaves

/// Labels `l > 0` raised by one, then a new vertex `1` under the root that
/// adopts a contiguous run of root edges. The empty run is used only in the
/// leftmost slot, where the new leaf keeps the leaves increasing.
pub fn tree_children(t: &IncreasingOrderedTree) -> Result<Vec<(IncreasingOrderedTree, Label)>, GrowthError> {
    Family::PCatTree.require(&DomainObject::Tree(t.clone()))?;
    Ok(tree_children_unchecked(t))
}

fn tree_children_unchecked(t: &IncreasingOrderedTree) -> Vec<(IncreasingOrderedTree, Label)> {
    let shifted = t.root().map_labels(&|l| if l > 0 { l + 1 } else { 0 });
    let kids = &shifted.children;
    let k = kids.len();
    let mut out = Vec::with_capacity(k * (k + 1) / 2 + 1);
    let mut build = |a: usize, b: usize| {
        let mut children = kids[..a].to_vec();
        children.push(Node {
            label: 1,
            children: kids[a..b].to_vec(),
        });
        children.extend_from_slice(&kids[b..]);
        let label = Label::One((k - (b - a) + 1) as u32);
        out.push((IncreasingOrderedTree::new_unchecked(Node { label: 0, children }), label));
    };
    build(0, 0);
    for a in 0..k {
        for b in a + 1..=k {
            build(a, b);
        }
    }
    out
}

fn tree_parent(t: &IncreasingOrderedTree) -> IncreasingOrderedTree {
    let root = t.root();
    let pos = root.children.iter().position(|c| c.label == 1).expect("vertex 1 is a root child");
    let mut children = root.children[..pos].to_vec();
    children.extend_from_slice(&root.children[pos].children);
    children.extend_from_slice(&root.children[pos + 1..]);
    let node = Node { label: 0, children }.map_labels(&|l| if l > 1 { l - 1 } else { l });
    IncreasingOrderedTree::new_unchecked(node)
}

// ---------------------------------------------------------------------------
// Consistency

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    /// The size-1 object is missing or its label is not the axiom.
    Axiom,
    /// A child fails the family's membership oracle.
    NotMember,
    /// Child labels differ, as a multiset, from the rule's production.
    Production,
    /// The emitted label differs from the label computed on the child.
    LabelMismatch,
    /// A member of the next size is never generated.
    NotGenerated,
    /// A member of the next size is generated more than once.
    GeneratedTwice,
    /// The parent map does not invert the child generator.
    Parent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthViolation {
    pub kind: ViolationKind,
    pub object: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub family: Family,
    pub n_max: usize,
    pub objects_checked: usize,
    pub violations: Vec<GrowthViolation>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every member of size `1..=n_max`: children are members, child
/// labels match the rule's production and the labels computed on the
/// children, the parent map inverts the generator, and every member of size
/// `s + 1` is generated exactly once from the members of size `s`.
pub fn growth_consistency(
    family: Family,
    n_max: usize,
    limits: &EnumerationLimits,
) -> Result<ConsistencyReport, EnumerationError> {
    let rule = family.rule();
    let class = family.class();
    let mut violations = Vec::new();
    let mut checked = 0;
    let mut push = |kind, object: &dyn fmt::Display, detail: String| {
        violations.push(GrowthViolation {
            kind,
            object: object.to_string(),
            detail,
        })
    };

    let mut level = enumerate_class(&class, 1, limits)?;
    let root = family.root();
    match family.label(&root) {
        Ok(l) if level == [root.clone()] && l == rule.axiom() => {}
        other => push(ViolationKind::Axiom, &root, format!("level 1 = {:?}, label {:?}", level, other)),
    }

    for s in 1..=n_max {
        let next = enumerate_class(&class, s + 1, limits)?;
        let mut generated: BTreeMap<DomainObject, usize> = BTreeMap::new();
        for obj in &level {
            checked += 1;
            let (label, children) = match (family.label(obj), family.children(obj)) {
                (Ok(l), Ok(c)) => (l, c),
                (l, c) => {
                    push(ViolationKind::NotMember, obj, format!("{:?} {:?}", l.err(), c.err()));
                    continue;
                }
            };
            let mut emitted: Vec<Label> = children.iter().map(|(_, l)| *l).collect();
            let mut expected = rule.produce(label).unwrap_or_default();
            emitted.sort();
            expected.sort();
            if emitted != expected {
                push(
                    ViolationKind::Production,
                    obj,
                    format!("label {} produced {:?}, rule gives {:?}", label, emitted, expected),
                );
            }
            for (child, l) in children {
                match family.label(&child) {
                    Err(e) => push(ViolationKind::NotMember, &child, e.to_string()),
                    Ok(actual) if actual != l => push(
                        ViolationKind::LabelMismatch,
                        &child,
                        format!("emitted {}, computed {}", l, actual),
                    ),
                    Ok(_) => {}
                }
                match family.parent(&child) {
                    Ok(Some(p)) if &p == obj => {}
                    other => push(ViolationKind::Parent, &child, format!("expected {}, got {:?}", obj, other)),
                }
                *generated.entry(child).or_insert(0) += 1;
            }
        }
        for member in &next {
            match generated.remove(member) {
                None => push(ViolationKind::NotGenerated, member, format!("size {}", s + 1)),
                Some(1) => {}
                Some(c) => push(ViolationKind::GeneratedTwice, member, format!("{} times", c)),
            }
        }
        // leftovers were generated but are not members; already reported as NotMember
        level = next;
    }
    Ok(ConsistencyReport {
        family,
        n_max,
        objects_checked: checked,
        violations,
    })
}

/// The catalan triple, exposed for callers that build the class by hand.
pub fn catalan_class() -> ClassSpec {
    ClassSpec::InvSeqTriple(catalan_triple())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> InversionSequence {
        s.parse().unwrap()
    }

    fn texts<T: ToString>(v: &[(T, Label)]) -> Vec<(String, Label)> {
        v.iter().map(|(c, l)| (c.to_string(), *l)).collect()
    }

    #[test]
    fn cat_insertion() {
        assert_eq!(cat_insert(&e("0,0,1,3,4,5"), 4).unwrap(), e("0,0,1,3,3,4,5"));
        assert_eq!(cat_insert(&e("0"), 2).unwrap(), e("0,1"));
        assert_eq!(cat_insert(&e("0"), 1).unwrap(), e("0,0"));
        assert!(cat_insert(&e("0"), 3).is_err());
        assert_eq!(active_positions_cat(&e("0")).unwrap(), vec![1, 2]);
        assert_eq!(active_positions_cat(&e("0,1")).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn rightmost_examples() {
        use Label::Two;
        let c = children_rightmost_entry(Family::Cat2, &e("0")).unwrap();
        assert_eq!(texts(&c), vec![("0,0".into(), Two(0, 2)), ("0,1".into(), Two(2, 1))]);
        let c = children_rightmost_entry(Family::Semi, &e("0")).unwrap();
        assert_eq!(texts(&c), vec![("0,0".into(), Two(1, 2)), ("0,1".into(), Two(2, 1))]);
    }

    #[test]
    fn pcat_examples() {
        let c = pcat_children_invseq(&e("0")).unwrap();
        assert_eq!(texts(&c), vec![("0,1".into(), Label::One(1)), ("0,0".into(), Label::One(2))]);
        let labels: Vec<Label> = pcat_children_invseq(&e("0,0")).unwrap().iter().map(|c| c.1).collect();
        assert_eq!(labels, vec![Label::One(1), Label::One(2), Label::One(2), Label::One(3)]);
        assert_eq!(pcat_parent_invseq(&e("0,1")).unwrap(), e("0"));
        assert_eq!(pcat_parent_invseq(&e("0,0")).unwrap(), e("0"));
        assert!(pcat_parent_invseq(&e("0")).is_err());
    }

    #[test]
    fn steady_examples() {
        let ud = Path::parse("UD", PathKind::Steady).unwrap();
        let c = steady_children(&ud).unwrap();
        assert_eq!(
            texts(&c),
            vec![("UDUD".into(), Label::Two(1, 2)), ("UUDD".into(), Label::Two(0, 3))]
        );
    }

    #[test]
    fn perm_examples() {
        let c = perm1234_children(&Permutation::identity(1)).unwrap();
        assert_eq!(
            texts(&c),
            vec![("2,1".into(), Label::Two(1, 2)), ("1,2".into(), Label::Two(2, 1))]
        );
    }

    #[test]
    fn vmdyck_examples() {
        let ud = Path::parse("UD", PathKind::ValleyMarkedDyck).unwrap();
        let c = vmdyck_children(&ud).unwrap();
        assert_eq!(
            texts(&c),
            vec![("UUDD".into(), Label::One(2)), ("UDUD".into(), Label::One(1))]
        );
        let uudd = Path::parse("UUDD", PathKind::ValleyMarkedDyck).unwrap();
        let mut labels: Vec<Label> = vmdyck_children(&uudd).unwrap().iter().map(|c| c.1).collect();
        labels.sort();
        assert_eq!(labels, vec![Label::One(1), Label::One(2), Label::One(2), Label::One(3)]);
    }

    #[test]
    fn tree_examples() {
        let c = tree_children(&IncreasingOrderedTree::single_edge()).unwrap();
        assert_eq!(
            texts(&c),
            vec![("0(1,2)".into(), Label::One(2)), ("0(1(2))".into(), Label::One(1))]
        );
    }

    #[test]
    fn small_consistency() {
        let l = EnumerationLimits::default();
        for f in Family::ALL {
            let r = growth_consistency(f, 4, &l).unwrap();
            assert!(r.passed(), "{}: {:?}", f, &r.violations[..r.violations.len().min(3)]);
        }
    }
}
