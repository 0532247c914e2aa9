//! Succession rules and generating-tree counting.
//!
//! A rule is an axiom label plus a production map. Counting never builds the
//! tree: each level is a map from distinct labels to their multiplicity, which
//! keeps the powered Catalan rules (about a million nodes at level 10, but a
//! few dozen distinct labels) cheap.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    One(u32),
    Two(u32, u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::One(k) => write!(f, "({})", k),
            Label::Two(h, k) => write!(f, "({},{})", h, k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RuleError {
    #[error("label {label} has the wrong arity for rule {rule}")]
    Malformed { rule: &'static str, label: Label },
    #[error("label {label} is not reachable in rule {rule}")]
    Unreachable { rule: &'static str, label: Label },
    #[error("unknown rule {0:?}")]
    UnknownRule(String),
}

pub trait SuccessionRule {
    fn name(&self) -> &str;
    fn axiom(&self) -> Label;
    /// Children of `label`, in production order.
    fn produce(&self, label: Label) -> Result<Vec<Label>, RuleError>;
}

/// The built-in catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuiltinRule {
    /// `(k) -> (1), ..., (k+1)`
    Cat,
    Cat2,
    /// The rule of inversion sequences avoiding `(>=,>=,>=)`.
    IGeq3,
    Bax,
    Semi,
    /// `(k) -> (1), (2)^2, ..., (k)^k, (k+1)`
    PCat,
    /// The rule of permutations avoiding `1-23-4`.
    P1234,
    Steady,
}

impl BuiltinRule {
    pub const ALL: [BuiltinRule; 8] = [
        BuiltinRule::Cat,
        BuiltinRule::Cat2,
        BuiltinRule::IGeq3,
        BuiltinRule::Bax,
        BuiltinRule::Semi,
        BuiltinRule::PCat,
        BuiltinRule::P1234,
        BuiltinRule::Steady,
    ];

    pub fn canonical_name(self) -> &'static str {
        match self {
            BuiltinRule::Cat => "cat",
            BuiltinRule::Cat2 => "cat2",
            BuiltinRule::IGeq3 => "i-geq3",
            BuiltinRule::Bax => "bax",
            BuiltinRule::Semi => "semi",
            BuiltinRule::PCat => "pcat",
            BuiltinRule::P1234 => "p1234",
            BuiltinRule::Steady => "steady",
        }
    }

    fn unary(self) -> bool {
        matches!(self, BuiltinRule::Cat | BuiltinRule::PCat)
    }
}

impl FromStr for BuiltinRule {
    type Err = RuleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BuiltinRule::ALL
            .iter()
            .copied()
            .find(|r| r.canonical_name() == s)
            .ok_or_else(|| RuleError::UnknownRule(s.into()))
    }
}

impl fmt::Display for BuiltinRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.canonical_name())
    }
}

impl SuccessionRule for BuiltinRule {
    fn name(&self) -> &str {
        self.canonical_name()
    }

    fn axiom(&self) -> Label {
        match self {
            BuiltinRule::Cat | BuiltinRule::PCat => Label::One(1),
            BuiltinRule::Steady => Label::Two(0, 2),
            _ => Label::Two(1, 1),
        }
    }

    fn produce(&self, label: Label) -> Result<Vec<Label>, RuleError> {
        let rule = self.canonical_name();
        let malformed = || RuleError::Malformed { rule, label };
        let unreachable = || RuleError::Unreachable { rule, label };
        let mut out = Vec::new();
        if self.unary() {
            let Label::One(k) = label else {
                return Err(malformed());
            };
            if k == 0 {
                return Err(unreachable());
            }
            match self {
                BuiltinRule::Cat => out.extend((1..=k + 1).map(Label::One)),
                _ => {
                    for j in 1..=k {
                        out.extend(core::iter::repeat_n(Label::One(j), j as usize));
                    }
                    out.push(Label::One(k + 1));
                }
            }
            return Ok(out);
        }
        let Label::Two(h, k) = label else {
            return Err(malformed());
        };
        // second line shared by the inversion-sequence rules
        let tail = |out: &mut Vec<Label>| out.extend((1..=k).map(|i| Label::Two(h + i, k + 1 - i)));
        match self {
            BuiltinRule::Cat2 => {
                if k == 0 {
                    return Err(unreachable());
                }
                out.extend((0..h).map(|_| Label::Two(0, k + 1)));
                tail(&mut out);
            }
            BuiltinRule::IGeq3 => {
                if k == 0 {
                    return Err(unreachable());
                }
                out.extend((0..h).rev().map(|i| Label::Two(i, k + 1)));
                tail(&mut out);
            }
            BuiltinRule::Bax => {
                if k == 0 || h == 0 {
                    return Err(unreachable());
                }
                out.extend((1..h).rev().map(|i| Label::Two(i, k + 1)));
                out.push(Label::Two(1, k + 1));
                tail(&mut out);
            }
            BuiltinRule::Semi => {
                if k == 0 || h == 0 {
                    return Err(unreachable());
                }
                out.extend((1..=h).rev().map(|i| Label::Two(i, k + 1)));
                tail(&mut out);
            }
            BuiltinRule::P1234 => {
                if h == 0 {
                    return Err(unreachable());
                }
                if h == 1 {
                    out.extend((0..=k).map(|i| Label::Two(1 + i, k + 1 - i)));
                } else {
                    out.extend((1..=h).map(|i| Label::Two(i, h + k + 1 - i)));
                    out.extend((1..=k).map(|i| Label::Two(h + i, 0)));
                }
            }
            BuiltinRule::Steady => {
                if k < 2 {
                    return Err(unreachable());
                }
                out.extend((2..=k).map(|j| Label::Two(h + k + 1 - j, j)));
                out.extend((k + 1..=h + k + 1).map(|j| Label::Two(0, j)));
            }
            BuiltinRule::Cat | BuiltinRule::PCat => unreachable!(),
        }
        Ok(out)
    }
}

pub fn expand_label<R: SuccessionRule + ?Sized>(rule: &R, label: Label) -> Result<Vec<Label>, RuleError> {
    rule.produce(label)
}

/// Level `n` (1-based) maps each label to its number of nodes.
pub type LevelDistribution = BTreeMap<Label, BigUint>;

/// Label distribution of levels `1..=depth`.
pub fn label_distribution<R: SuccessionRule + ?Sized>(
    rule: &R,
    depth: usize,
) -> Result<Vec<LevelDistribution>, RuleError> {
    let mut levels = Vec::with_capacity(depth);
    if depth == 0 {
        return Ok(levels);
    }
    let mut current = LevelDistribution::new();
    current.insert(rule.axiom(), BigUint::one());
    let mut cache: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
    for _ in 1..depth {
        let mut next = LevelDistribution::new();
        for (label, count) in &current {
            if !cache.contains_key(label) {
                cache.insert(*label, rule.produce(*label)?);
            }
            for child in &cache[label] {
                *next.entry(*child).or_insert_with(BigUint::zero) += count;
            }
        }
        levels.push(core::mem::replace(&mut current, next));
    }
    levels.push(current);
    Ok(levels)
}

/// Number of nodes at levels `1..=depth`.
pub fn level_counts<R: SuccessionRule + ?Sized>(rule: &R, depth: usize) -> Result<Vec<BigUint>, RuleError> {
    Ok(label_distribution(rule, depth)?
        .iter()
        .map(|level| level.values().sum())
        .collect())
}

/// First level at which two relabeled trees differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    pub level: usize,
    /// Smallest label whose multiplicities differ.
    pub label: Label,
    pub left_count: BigUint,
    pub right_count: BigUint,
    pub left_total: BigUint,
    pub right_total: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismReport {
    pub depth: usize,
    pub divergence: Option<Divergence>,
}

impl IsomorphismReport {
    pub fn isomorphic(&self) -> bool {
        self.divergence.is_none()
    }
}

/// Compares, level by level, the relabeled label multisets of `a` with those
/// of `b`. Equality of all levels means the relabeling maps one generating
/// tree onto the other, since productions depend on labels only.
pub fn rules_isomorphic_check<A, B, F>(a: &A, b: &B, relabel: F, depth: usize) -> Result<IsomorphismReport, RuleError>
where
    A: SuccessionRule + ?Sized,
    B: SuccessionRule + ?Sized,
    F: Fn(Label) -> Label,
{
    let left = label_distribution(a, depth)?;
    let right = label_distribution(b, depth)?;
    for (i, (l, r)) in left.iter().zip(&right).enumerate() {
        let mut mapped = LevelDistribution::new();
        for (label, count) in l {
            *mapped.entry(relabel(*label)).or_insert_with(BigUint::zero) += count;
        }
        if &mapped != r {
            let zero = BigUint::zero();
            let label = *mapped
                .keys()
                .chain(r.keys())
                .filter(|lab| mapped.get(lab).unwrap_or(&zero) != r.get(lab).unwrap_or(&zero))
                .min()
                .expect("distinct maps differ somewhere");
            return Ok(IsomorphismReport {
                depth,
                divergence: Some(Divergence {
                    level: i + 1,
                    label,
                    left_count: mapped.get(&label).cloned().unwrap_or_default(),
                    right_count: r.get(&label).cloned().unwrap_or_default(),
                    left_total: mapped.values().sum(),
                    right_total: r.values().sum(),
                }),
            });
        }
    }
    Ok(IsomorphismReport {
        depth,
        divergence: None,
    })
}

/// The relabeling turning the `p1234` tree into the `steady` tree: labels
/// `(1,k)` become `(k+1,0)`, then the two parameters are exchanged.
pub fn p1234_to_steady(label: Label) -> Label {
    match label {
        Label::Two(1, k) => Label::Two(0, k + 1),
        Label::Two(h, k) => Label::Two(k, h),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn counts(rule: BuiltinRule, depth: usize) -> Vec<u64> {
        level_counts(&rule, depth)
            .unwrap()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn productions() {
        use Label::*;
        assert_eq!(BuiltinRule::Cat.produce(One(3)).unwrap(), vec![One(1), One(2), One(3), One(4)]);
        assert_eq!(BuiltinRule::PCat.produce(One(2)).unwrap(), vec![One(1), One(2), One(2), One(3)]);
        assert_eq!(BuiltinRule::Steady.produce(Two(0, 2)).unwrap(), vec![Two(1, 2), Two(0, 3)]);
        assert_eq!(
            BuiltinRule::P1234.produce(Two(2, 1)).unwrap(),
            vec![Two(1, 3), Two(2, 2), Two(3, 0)]
        );
        assert_eq!(BuiltinRule::P1234.produce(Two(3, 0)).unwrap(), vec![Two(1, 3), Two(2, 2), Two(3, 1)]);
        assert!(matches!(BuiltinRule::Cat.produce(Two(1, 1)), Err(RuleError::Malformed { .. })));
        assert!(matches!(BuiltinRule::Steady.produce(Two(3, 1)), Err(RuleError::Unreachable { .. })));
    }

    #[test]
    fn known_prefixes() {
        assert_eq!(counts(BuiltinRule::Cat, 6), [1, 2, 5, 14, 42, 132]);
        assert_eq!(counts(BuiltinRule::Cat2, 6), [1, 2, 5, 14, 42, 132]);
        assert_eq!(counts(BuiltinRule::Semi, 6), [1, 2, 6, 23, 104, 530]);
        assert_eq!(counts(BuiltinRule::PCat, 6), [1, 2, 6, 23, 105, 549]);
        assert_eq!(counts(BuiltinRule::Bax, 6), [1, 2, 6, 22, 92, 422]);
        assert_eq!(counts(BuiltinRule::IGeq3, 6), [1, 2, 5, 15, 51, 191]);
        assert_eq!(counts(BuiltinRule::P1234, 6), [1, 2, 6, 23, 105, 549]);
        assert_eq!(counts(BuiltinRule::Steady, 6), [1, 2, 6, 23, 105, 549]);
    }

    #[test]
    fn pcat_small_levels() {
        let d = label_distribution(&BuiltinRule::PCat, 3).unwrap();
        let as_u64 = |m: &LevelDistribution| -> Vec<(Label, u64)> {
            m.iter().map(|(l, c)| (*l, u64::try_from(c).unwrap())).collect()
        };
        assert_eq!(as_u64(&d[1]), vec![(Label::One(1), 1), (Label::One(2), 1)]);
        assert_eq!(
            as_u64(&d[2]),
            vec![(Label::One(1), 2), (Label::One(2), 3), (Label::One(3), 1)]
        );
    }

    #[test]
    fn isomorphism_checks() {
        let r = rules_isomorphic_check(&BuiltinRule::Cat, &BuiltinRule::Cat, |l| l, 12).unwrap();
        assert!(r.isomorphic());
        let r = rules_isomorphic_check(&BuiltinRule::Cat, &BuiltinRule::PCat, |l| l, 4).unwrap();
        let d = r.divergence.unwrap();
        assert_eq!(d.level, 3);
        assert_eq!((d.left_total, d.right_total), (5u32.into(), 6u32.into()));
        let r = rules_isomorphic_check(&BuiltinRule::P1234, &BuiltinRule::Steady, p1234_to_steady, 10).unwrap();
        assert!(r.isomorphic(), "{:?}", r.divergence);
    }

    #[test]
    fn names_round_trip() {
        for r in BuiltinRule::ALL {
            assert_eq!(r.canonical_name().parse::<BuiltinRule>().unwrap(), r);
        }
        assert!("nope".parse::<BuiltinRule>().is_err());
    }
}
