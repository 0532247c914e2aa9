//! Explicit bijections.
//!
//! * `T`: permutations to left inversion tables, `t_i = #{j > i : p_i > p_j}`.
//! * Catalan inversion sequences to `AV(1-23, 2-14-3)`: reverse, then `T^-1`.
//! * Steady paths to `AV(1-34-2)` through the diagonal distances of the up
//!   steps.
//! * `phi` / `theta`: one `W` step traded for one unit of mark, and back;
//!   iterating them gives `phi_star` / `theta_star` between steady paths and
//!   valley-marked Dyck paths.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::objects::{
    join_ints, parse_int_list, InversionSequence, ObjectError, ParseError, Path, PathKind, Permutation, Step,
    ValidationError,
};
use crate::patterns::{avoids_vincular, catalan_criterion, VincularPattern};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BijectionError {
    #[error("entry {index} of the inversion table exceeds n - i")]
    TableBound { index: usize },
    #[error("input is not in {0}")]
    NotInFamily(&'static str),
    #[error("invalid input: {0}")]
    Invalid(#[from] ValidationError),
    #[error("path has no W step")]
    NoWStep,
    #[error("path has total mark zero")]
    ZeroTotalMark,
}

/// `t_1 ... t_n` with `0 <= t_i <= n - i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeftInversionTable(Vec<u32>);

impl LeftInversionTable {
    pub fn new(entries: Vec<u32>) -> Result<Self, BijectionError> {
        let n = entries.len();
        if let Some(i) = entries.iter().enumerate().position(|(i, &t)| t as usize >= n - i) {
            return Err(BijectionError::TableBound { index: i + 1 });
        }
        Ok(LeftInversionTable(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for LeftInversionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_ints(&self.0))
    }
}

impl FromStr for LeftInversionTable {
    type Err = ObjectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = parse_int_list(s)?;
        LeftInversionTable::new(v).map_err(|e| ObjectError::Parse(ParseError::new(0, alloc::format!("{}", e))))
    }
}

pub fn left_inversion_table(p: &Permutation) -> LeftInversionTable {
    let v = p.values();
    LeftInversionTable(
        v.iter()
            .enumerate()
            .map(|(i, &x)| v[i + 1..].iter().filter(|&&y| y < x).count() as u32)
            .collect(),
    )
}

/// `T^-1`: position `i` takes the `(t_i + 1)`-th smallest unused value.
pub fn inverse_left_inversion_table(t: &LeftInversionTable) -> Permutation {
    let n = t.0.len();
    let mut free: Vec<u32> = (1..=n as u32).collect();
    Permutation::new_unchecked(t.0.iter().map(|&ti| free.remove(ti as usize)).collect())
}

fn catalan_patterns() -> [VincularPattern; 2] {
    ["1-23".parse().unwrap(), "2-14-3".parse().unwrap()]
}

fn in_catalan_perms(p: &Permutation) -> bool {
    catalan_patterns().iter().all(|v| avoids_vincular(p, v))
}

fn in_steady_perms(p: &Permutation) -> bool {
    avoids_vincular(p, &"1-34-2".parse().unwrap())
}

/// `I(>=,-,>=)` to `AV(1-23, 2-14-3)`.
pub fn catalan_invseq_to_perm(e: &InversionSequence) -> Result<Permutation, BijectionError> {
    e.validate()?;
    if !catalan_criterion(e) {
        return Err(BijectionError::NotInFamily("I(>=,-,>=)"));
    }
    let mut t = e.entries().to_vec();
    t.reverse();
    let p = inverse_left_inversion_table(&LeftInversionTable(t));
    assert!(in_catalan_perms(&p), "image of {} leaves AV(1-23, 2-14-3)", e);
    Ok(p)
}

pub fn perm_to_catalan_invseq(p: &Permutation) -> Result<InversionSequence, BijectionError> {
    p.validate()?;
    if !in_catalan_perms(p) {
        return Err(BijectionError::NotInFamily("AV(1-23, 2-14-3)"));
    }
    let mut e = left_inversion_table(p).0;
    e.reverse();
    Ok(InversionSequence::new_unchecked(e))
}

/// Distances `d_1 ... d_n` of the up steps, left to right: the `k`-th up
/// step starts at `(i_k, j_k)` with `i_k + j_k = 2(k - 1)` and
/// `d_k = (i_k - j_k) / 2`.
pub fn steady_encoding(p: &Path) -> Vec<u32> {
    let pts = p.points();
    p.steps()
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == Step::U)
        .map(|(i, _)| ((pts[i].0 - pts[i].1) / 2) as u32)
        .collect()
}

/// The unique `U/D/W` path whose up steps have distances `d`: consecutive
/// up steps are joined by `D` runs or `W` runs, and a final descent closes
/// the path. The result is not validated.
pub fn path_from_encoding(d: &[u32], kind: PathKind) -> Path {
    let mut steps = Vec::new();
    for (k, &dk) in d.iter().enumerate() {
        steps.push(Step::U);
        let next = d.get(k + 1).copied();
        let run = match next {
            Some(dn) if dn >= dk => core::iter::repeat(Step::D).take((dn - dk) as usize),
            Some(dn) => core::iter::repeat(Step::W).take((dk - dn) as usize),
            None => core::iter::repeat(Step::D).take(d.len() - dk as usize),
        };
        steps.extend(run);
    }
    Path::unmarked(steps, kind)
}

fn check_steady(p: &Path) -> Result<Path, BijectionError> {
    let p = p.with_kind(PathKind::Steady);
    p.validate()?;
    Ok(p)
}

/// Steady paths to `AV(1-34-2)`: reverse the distance sequence, read it as a
/// left inversion table, and invert `T`.
pub fn steady_to_perm(p: &Path) -> Result<Permutation, BijectionError> {
    let p = check_steady(p)?;
    let mut t = steady_encoding(&p);
    t.reverse();
    let perm = inverse_left_inversion_table(&LeftInversionTable(t));
    assert!(in_steady_perms(&perm), "image of {} contains 1-34-2", p);
    Ok(perm)
}

pub fn perm_to_steady(perm: &Permutation) -> Result<Path, BijectionError> {
    perm.validate()?;
    if !in_steady_perms(perm) {
        return Err(BijectionError::NotInFamily("AV(1-34-2)"));
    }
    let mut d = left_inversion_table(perm).0;
    d.reverse();
    let p = path_from_encoding(&d, PathKind::Steady);
    debug_assert!(p.validate().is_ok(), "{} does not encode a steady path", perm);
    Ok(p)
}

fn marked_steady(p: &Path) -> Result<Path, BijectionError> {
    let p = p.with_kind(PathKind::ValleyMarkedSteady);
    p.validate()?;
    Ok(p)
}

fn valley_index(p: &Path, up_index: usize) -> usize {
    p.valleys()
        .iter()
        .position(|v| v.up_index == up_index)
        .expect("step is the up step of a valley")
}

fn count_valleys_between(p: &Path, lo: usize, hi: usize) -> usize {
    p.valleys()
        .iter()
        .filter(|v| v.up_index > lo && v.up_index < hi)
        .count()
}

/// First index `i >= from` whose step goes from height `h` to `h - 1`.
fn first_descent_from(pts: &[(i64, i64)], from: usize, h: i64) -> usize {
    (from..pts.len() - 1)
        .find(|&i| pts[i].1 == h && pts[i + 1].1 == h - 1)
        .expect("path returns to the axis")
}

/// Removes one `W` step and raises one mark by one.
///
/// The rightmost bottommost `W` sits in a factor `DUW`; writing the path as
/// `Pr U A DUW B D C D S`, the image is `Pr U B UD C D S` when `A` is empty
/// and `Pr U A U B D C D S` otherwise. The valley of the `DUW` factor moves
/// to the new valley, one level higher, with its mark raised by one.
pub fn phi(p: &Path) -> Result<Path, BijectionError> {
    let p = marked_steady(p)?;
    let pts = p.points();
    let steps = p.steps();
    let w = (0..steps.len())
        .filter(|&i| steps[i] == Step::W)
        .min_by_key(|&i| (pts[i].1, core::cmp::Reverse(i)))
        .ok_or(BijectionError::NoWStep)?;
    let u = w - 1;
    let dd = w - 2;
    debug_assert!(steps[u] == Step::U && steps[dd] == Step::D);
    let k = pts[u].1;
    let vi = valley_index(&p, u);
    let h = p.marks()[vi];

    let a = (0..dd).rev().find(|&j| pts[j].1 <= k).expect("matching up step exists");
    let bd = first_descent_from(&pts, w + 1, k + 2);
    let cd = first_descent_from(&pts, bd + 1, k + 1);

    let pr = &steps[..a];
    let blk_a = &steps[a + 1..dd];
    let blk_b = &steps[w + 1..bd];
    let blk_c = &steps[bd + 1..cd];
    let s = &steps[cd + 1..];

    let mut out = Vec::with_capacity(steps.len() - 2);
    let mut marks = p.marks().to_vec();
    marks.remove(vi);
    out.extend_from_slice(pr);
    out.push(Step::U);
    if blk_a.is_empty() {
        out.extend_from_slice(blk_b);
        out.extend_from_slice(&[Step::U, Step::D]);
        let nb = count_valleys_between(&p, w, bd);
        marks.insert(vi + nb, h + 1);
    } else {
        out.extend_from_slice(blk_a);
        out.push(Step::U);
        out.extend_from_slice(blk_b);
        out.push(Step::D);
        marks.insert(vi, h + 1);
    }
    out.extend_from_slice(blk_c);
    out.push(Step::D);
    out.extend_from_slice(s);
    Ok(Path::new_unchecked(out, marks, PathKind::ValleyMarkedSteady))
}

/// Inverse of [`phi`]: lowers the leftmost topmost non-trivially marked
/// valley by one level, creating a `W` step.
///
/// Writing the path as `Pr A U B D C D S` around that valley, the image is
/// `Pr DUW A D C D S` when `B` is empty and `Pr A DUW B D C D S` otherwise.
pub fn theta(p: &Path) -> Result<Path, BijectionError> {
    let p = marked_steady(p)?;
    let pts = p.points();
    let steps = p.steps();
    let valleys = p.valleys();
    let (vi, valley) = valleys
        .iter()
        .enumerate()
        .filter(|(i, _)| p.marks()[*i] > 0)
        .min_by_key(|(_, v)| (core::cmp::Reverse(v.height), v.up_index))
        .ok_or(BijectionError::ZeroTotalMark)?;
    let h = p.marks()[vi];
    let k = valley.height;
    let vu = valley.up_index;
    let vd = vu - 1;

    let a0 = (0..vd).rev().find(|&j| pts[j].1 < k).map_or(0, |j| j + 1);
    let bd = first_descent_from(&pts, vu + 1, k + 1);
    let cd = first_descent_from(&pts, bd + 1, k);

    let pr = &steps[..a0];
    let blk_a = &steps[a0..=vd];
    let blk_b = &steps[vu + 1..bd];
    let blk_c = &steps[bd + 1..cd];
    let s = &steps[cd + 1..];

    let mut out = Vec::with_capacity(steps.len() + 2);
    let mut marks = p.marks().to_vec();
    marks.remove(vi);
    out.extend_from_slice(pr);
    if blk_b.is_empty() {
        out.extend_from_slice(&[Step::D, Step::U, Step::W]);
        out.extend_from_slice(blk_a);
        let na = count_valleys_between(&p, a0, vd + 1);
        marks.insert(vi - na, h - 1);
    } else {
        out.extend_from_slice(blk_a);
        out.extend_from_slice(&[Step::D, Step::U, Step::W]);
        out.extend_from_slice(blk_b);
        marks.insert(vi, h - 1);
    }
    out.push(Step::D);
    out.extend_from_slice(blk_c);
    out.push(Step::D);
    out.extend_from_slice(s);
    Ok(Path::new_unchecked(out, marks, PathKind::ValleyMarkedSteady))
}

/// Steady path to valley-marked Dyck path: apply [`phi`] until no `W` is left.
pub fn phi_star(p: &Path) -> Result<Path, BijectionError> {
    let mut cur = check_steady(p)?.with_kind(PathKind::ValleyMarkedSteady);
    while cur.w_count() > 0 {
        cur = phi(&cur)?;
    }
    Ok(cur.with_kind(PathKind::ValleyMarkedDyck))
}

/// Valley-marked Dyck path to steady path: apply [`theta`] until every mark
/// is trivial.
pub fn theta_star(p: &Path) -> Result<Path, BijectionError> {
    let p = p.with_kind(PathKind::ValleyMarkedDyck);
    p.validate()?;
    let mut cur = p.with_kind(PathKind::ValleyMarkedSteady);
    while cur.total_mark() > 0 {
        cur = theta(&cur)?;
    }
    Ok(cur.with_kind(PathKind::Steady))
}

/// Names accepted by the `map` front end, in a fixed order.
pub const MAP_NAMES: [&str; 10] = [
    "tinv",
    "tinv-inv",
    "cat-perm",
    "cat-perm-inv",
    "steady-perm",
    "steady-perm-inv",
    "phi",
    "theta",
    "phi-star",
    "theta-star",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("unknown map {0:?}")]
    UnknownMap(String),
    #[error(transparent)]
    Object(#[from] ObjectError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
}

impl From<ParseError> for MapError {
    fn from(e: ParseError) -> Self {
        MapError::Object(e.into())
    }
}

/// Applies the named map to `input` in its text format and returns the
/// image in text format.
pub fn apply_map(name: &str, input: &str) -> Result<String, MapError> {
    use alloc::string::ToString;
    let input = input.trim();
    Ok(match name {
        "tinv" => left_inversion_table(&input.parse()?).to_string(),
        "tinv-inv" => inverse_left_inversion_table(&input.parse()?).to_string(),
        "cat-perm" => catalan_invseq_to_perm(&input.parse()?)?.to_string(),
        "cat-perm-inv" => perm_to_catalan_invseq(&input.parse()?)?.to_string(),
        "steady-perm" => steady_to_perm(&Path::parse(input, PathKind::Steady)?)?.to_string(),
        "steady-perm-inv" => perm_to_steady(&input.parse()?)?.to_string(),
        "phi" => phi(&Path::parse(input, PathKind::ValleyMarkedSteady)?)?.to_string(),
        "theta" => theta(&Path::parse(input, PathKind::ValleyMarkedSteady)?)?.to_string(),
        "phi-star" => phi_star(&Path::parse(input, PathKind::Steady)?)?.to_string(),
        "theta-star" => theta_star(&Path::parse(input, PathKind::ValleyMarkedDyck)?)?.to_string(),
        other => return Err(MapError::UnknownMap(other.into())),
    })
}
