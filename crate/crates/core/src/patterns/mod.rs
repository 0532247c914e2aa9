//! Avoidance oracles for inversion sequences and permutations.
//!
//! Three pattern notions are supported: relation triples `(r1, r2, r3)` on
//! inversion sequences, word patterns such as `110` (subsequence occurrences
//! matching the full equality/order type), and vincular permutation patterns
//! such as `1-23-4` (entries not separated by a dash must be adjacent).
//! Classical patterns are vincular patterns without adjacency.

mod criteria;
mod enumerate;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::objects::{InversionSequence, ParseError, Permutation};

pub use criteria::{
    av_1_23_4_criterion, baxter_criterion, catalan_criterion, ltr_bottom_criterion,
    semi_baxter_criterion,
};
pub use enumerate::{
    classical_correspondences, count_class, enumerate_class, equinumerosity_check, ClassSpec,
    Correspondence, EnumerationError,
    EnumerationLimits, EquinumerosityRow,
};

/// A binary relation on integers; `Any` is the always-true relation `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Lt,
    Gt,
    Leq,
    Geq,
    Eq,
    Neq,
    Any,
}

impl Relation {
    #[inline]
    pub fn holds(self, a: u32, b: u32) -> bool {
        match self {
            Relation::Lt => a < b,
            Relation::Gt => a > b,
            Relation::Leq => a <= b,
            Relation::Geq => a >= b,
            Relation::Eq => a == b,
            Relation::Neq => a != b,
            Relation::Any => true,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Relation::Lt => "lt",
            Relation::Gt => "gt",
            Relation::Leq => "leq",
            Relation::Geq => "geq",
            Relation::Eq => "eq",
            Relation::Neq => "neq",
            Relation::Any => "dash",
        }
    }
}

impl FromStr for Relation {
    type Err = ParseError;

    /// Accepts the ASCII tokens `lt gt leq geq eq neq dash` and the symbols
    /// `< > <= >= = != -`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim() {
            "lt" | "<" => Relation::Lt,
            "gt" | ">" => Relation::Gt,
            "leq" | "<=" | "≤" => Relation::Leq,
            "geq" | ">=" | "≥" => Relation::Geq,
            "eq" | "=" => Relation::Eq,
            "neq" | "!=" | "≠" => Relation::Neq,
            "dash" | "-" | "−" => Relation::Any,
            other => {
                return Err(ParseError::new(
                    0,
                    alloc::format!("unknown relation {:?}", other),
                ))
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RelationTriple(pub [Relation; 3]);

impl RelationTriple {
    pub fn new(r1: Relation, r2: Relation, r3: Relation) -> Self {
        RelationTriple([r1, r2, r3])
    }

    #[inline]
    fn matches(&self, a: u32, b: u32, c: u32) -> bool {
        self.0[0].holds(a, b) && self.0[1].holds(b, c) && self.0[2].holds(a, c)
    }
}

impl FromStr for RelationTriple {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim_matches(|c| c == '(' || c == ')').split(',').collect();
        if parts.len() != 3 {
            return Err(ParseError::new(0, "a relation triple has three components"));
        }
        let mut rel = [Relation::Any; 3];
        let mut offset = 0;
        for (i, p) in parts.iter().enumerate() {
            rel[i] = p
                .parse()
                .map_err(|e: ParseError| ParseError::new(offset, e.message))?;
            offset += p.len() + 1;
        }
        Ok(RelationTriple(rel))
    }
}

impl fmt::Display for RelationTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0].token(), self.0[1].token(), self.0[2].token())
    }
}

/// True iff no `i < j < k` has `e_i r1 e_j`, `e_j r2 e_k` and `e_i r3 e_k`.
pub fn avoids_triple(e: &InversionSequence, t: &RelationTriple) -> bool {
    !triple_occurs(e.entries(), t)
}

pub(crate) fn triple_occurs(e: &[u32], t: &RelationTriple) -> bool {
    let n = e.len();
    for k in 2..n {
        if triple_occurs_ending_at(e, t, k) {
            return true;
        }
    }
    false
}

#[inline]
pub(crate) fn triple_occurs_ending_at(e: &[u32], t: &RelationTriple, k: usize) -> bool {
    let c = e[k];
    for j in 1..k {
        let b = e[j];
        if !t.0[1].holds(b, c) {
            continue;
        }
        for &a in &e[..j] {
            if t.matches(a, b, c) {
                return true;
            }
        }
    }
    false
}

/// A word over non-negative integers, e.g. `110`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordPattern(Vec<u32>);

impl WordPattern {
    pub fn new(letters: Vec<u32>) -> Option<Self> {
        if letters.is_empty() {
            None
        } else {
            Some(WordPattern(letters))
        }
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }
}

impl FromStr for WordPattern {
    type Err = ParseError;

    /// One decimal digit per letter.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseError::new(0, "empty word pattern"));
        }
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(10)
                    .ok_or_else(|| ParseError::new(i, alloc::format!("not a digit: {:?}", c)))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(WordPattern)
    }
}

impl fmt::Display for WordPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

/// True iff no subsequence of `e` has the equality/order type of `w`.
pub fn avoids_word(e: &InversionSequence, w: &WordPattern) -> bool {
    let mut chosen = Vec::with_capacity(w.0.len());
    !order_type_occurs(e.entries(), &w.0, &mut chosen, 0, None)
}

pub(crate) fn word_occurs_ending_at(e: &[u32], w: &WordPattern, last: usize) -> bool {
    let mut chosen = Vec::with_capacity(w.0.len());
    order_type_occurs(e, &w.0, &mut chosen, 0, Some(last))
}

/// Backtracking search for positions `chosen` in `values` whose values have
/// the same pairwise comparisons as `pattern`. With `last` set, the final
/// pattern letter must sit at that position.
fn order_type_occurs(
    values: &[u32],
    pattern: &[u32],
    chosen: &mut Vec<usize>,
    from: usize,
    last: Option<usize>,
) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - depth;
    let (lo, hi) = match last {
        Some(l) if remaining == 1 => (l.max(from), l + 1),
        Some(l) => (from, l),
        None => (from, values.len()),
    };
    for pos in lo..hi {
        if pos + remaining > values.len() {
            break;
        }
        let v = values[pos];
        let consistent = chosen.iter().enumerate().all(|(a, &p)| {
            values[p].cmp(&v) == pattern[a].cmp(&pattern[depth])
        });
        if !consistent {
            continue;
        }
        chosen.push(pos);
        if order_type_occurs(values, pattern, chosen, pos + 1, last) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

/// A permutation pattern with adjacency requirements.
///
/// `adjacent[i]` is true when pattern entries `i` and `i + 1` (0-based) must
/// occupy consecutive positions, i.e. no dash separates them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VincularPattern {
    perm: Vec<u32>,
    adjacent: Vec<bool>,
}

impl VincularPattern {
    pub fn new(perm: Vec<u32>, adjacent: Vec<bool>) -> Option<Self> {
        if perm.is_empty() || adjacent.len() + 1 != perm.len() {
            return None;
        }
        Permutation::new(perm.clone()).ok()?;
        Some(VincularPattern { perm, adjacent })
    }

    pub fn classical(perm: Vec<u32>) -> Option<Self> {
        let adjacent = alloc::vec![false; perm.len().saturating_sub(1)];
        Self::new(perm, adjacent)
    }

    /// Parses a classical pattern written without dashes, e.g. `132`.
    pub fn parse_classical(s: &str) -> Result<Self, ParseError> {
        let digits = parse_digits(s.trim())?;
        Self::classical(digits).ok_or_else(|| ParseError::new(0, "not a permutation"))
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn adjacency(&self) -> &[bool] {
        &self.adjacent
    }
}

fn parse_digits(s: &str) -> Result<Vec<u32>, ParseError> {
    s.chars()
        .enumerate()
        .map(|(i, c)| {
            c.to_digit(10)
                .filter(|&d| d > 0)
                .ok_or_else(|| ParseError::new(i, alloc::format!("not a pattern letter: {:?}", c)))
        })
        .collect()
}

impl FromStr for VincularPattern {
    type Err = ParseError;

    /// `1-23-4` notation: digits, with `-` marking the gaps that need not be
    /// adjacent.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut perm = Vec::new();
        let mut adjacent = Vec::new();
        let mut dash_pending = false;
        for (i, c) in s.chars().enumerate() {
            if c == '-' {
                if perm.is_empty() || dash_pending {
                    return Err(ParseError::new(i, "misplaced dash"));
                }
                dash_pending = true;
                continue;
            }
            let d = c
                .to_digit(10)
                .filter(|&d| d > 0)
                .ok_or_else(|| ParseError::new(i, alloc::format!("not a pattern letter: {:?}", c)))?;
            if !perm.is_empty() {
                adjacent.push(!dash_pending);
            }
            dash_pending = false;
            perm.push(d);
        }
        if dash_pending || perm.is_empty() {
            return Err(ParseError::new(s.len(), "pattern must end with a letter"));
        }
        VincularPattern::new(perm, adjacent).ok_or_else(|| ParseError::new(0, "not a permutation"))
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.perm.iter().enumerate() {
            if i > 0 && !self.adjacent[i - 1] {
                f.write_str("-")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// True iff `p` has no occurrence of `v` with the required adjacencies.
pub fn avoids_vincular(p: &Permutation, v: &VincularPattern) -> bool {
    let mut chosen = Vec::with_capacity(v.len());
    !vincular_occurs(p.values(), v, &mut chosen, None)
}

pub(crate) fn vincular_occurs_ending_at(values: &[u32], v: &VincularPattern, last: usize) -> bool {
    let mut chosen = Vec::with_capacity(v.len());
    vincular_occurs(values, v, &mut chosen, Some(last))
}

fn vincular_occurs(
    values: &[u32],
    v: &VincularPattern,
    chosen: &mut Vec<usize>,
    last: Option<usize>,
) -> bool {
    let depth = chosen.len();
    let k = v.len();
    if depth == k {
        return true;
    }
    let remaining = k - depth;
    let from = chosen.last().map_or(0, |&p| p + 1);
    let (lo, hi) = if depth > 0 && v.adjacent[depth - 1] {
        (from, from + 1)
    } else {
        match last {
            Some(l) if remaining == 1 => (l.max(from), l + 1),
            Some(l) => (from, l),
            None => (from, values.len()),
        }
    };
    for pos in lo..hi.min(values.len()) {
        if pos + remaining > values.len() {
            break;
        }
        if let Some(l) = last {
            if remaining == 1 && pos != l {
                continue;
            }
            if remaining > 1 && pos >= l {
                break;
            }
        }
        let val = values[pos];
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(a, &p)| values[p].cmp(&val) == v.perm[a].cmp(&v.perm[depth]));
        if !consistent {
            continue;
        }
        chosen.push(pos);
        if vincular_occurs(values, v, chosen, last) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

/// Left-to-right and right-to-left extrema counts (strict comparisons).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PermStatistics {
    pub ltr_minima: usize,
    pub ltr_maxima: usize,
    pub rtl_minima: usize,
    pub rtl_maxima: usize,
}

pub fn perm_statistics(p: &Permutation) -> PermStatistics {
    let v = p.values();
    let mut s = PermStatistics::default();
    let (mut lo, mut hi) = (u32::MAX, 0u32);
    for &x in v {
        if x < lo {
            lo = x;
            s.ltr_minima += 1;
        }
        if x > hi {
            hi = x;
            s.ltr_maxima += 1;
        }
    }
    let (mut lo, mut hi) = (u32::MAX, 0u32);
    for &x in v.iter().rev() {
        if x < lo {
            lo = x;
            s.rtl_minima += 1;
        }
        if x > hi {
            hi = x;
            s.rtl_maxima += 1;
        }
    }
    s
}

/// Parses a comma-separated list of word patterns, e.g. `100,110,210`.
pub fn parse_word_list(s: &str) -> Result<Vec<WordPattern>, ParseError> {
    s.split(',').map(str::parse).collect()
}

/// Parses a comma-separated list of vincular patterns, e.g. `1-23,2-14-3`.
pub fn parse_vincular_list(s: &str) -> Result<Vec<VincularPattern>, ParseError> {
    s.split(',').map(str::parse).collect()
}

/// Parses a comma-separated list of classical patterns, e.g. `123,132`.
pub fn parse_classical_list(s: &str) -> Result<Vec<VincularPattern>, ParseError> {
    s.split(',').map(VincularPattern::parse_classical).collect()
}

pub(crate) fn list_to_string<T: fmt::Display>(items: &[T]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, it) in items.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", it);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::string::ToString;

    fn e(v: &[u32]) -> InversionSequence {
        InversionSequence::new(v.to_vec()).unwrap()
    }

    fn p(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn t(s: &str) -> RelationTriple {
        s.parse().unwrap()
    }

    #[test]
    fn triple_examples() {
        let geq_dash_geq = t("geq,dash,geq");
        let geq3 = t(">=,>=,>=");
        assert!(avoids_triple(&e(&[0, 0, 1, 1, 4, 2, 6, 5]), &geq_dash_geq));
        assert!(avoids_triple(&e(&[0, 0, 1, 1, 4, 2, 6, 5]), &geq3));
        assert!(!avoids_triple(&e(&[0, 1, 0, 1, 4, 2, 3, 5]), &geq_dash_geq));
        assert!(avoids_triple(&e(&[0, 1, 0, 1, 4, 2, 3, 5]), &geq3));
        assert!(avoids_triple(&e(&[0]), &t("dash,dash,dash")));
    }

    #[test]
    fn word_examples() {
        let w = |s: &str| -> WordPattern { s.parse().unwrap() };
        assert!(!avoids_word(&e(&[0, 1, 1, 0]), &w("110")));
        assert!(avoids_word(&e(&[0, 0, 1]), &w("000")));
        assert!(avoids_word(&e(&[0, 0, 1, 3, 3, 4, 5]), &w("100")));
        assert!(!avoids_word(&e(&[0, 1, 0, 2, 1]), &w("101")));
        assert!(!avoids_word(&e(&[0, 1, 2, 0]), &w("120")));
    }

    #[test]
    fn word_oracle_agrees_with_index_scan() {
        // brute force over index triples for every inversion sequence of length 5
        let words: Vec<WordPattern> = ["000", "100", "101", "110", "201", "210", "012"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let mut seq = vec![0u32; 5];
        loop {
            let es = e(&seq);
            for w in &words {
                let l = w.letters();
                let mut found = false;
                for i in 0..5 {
                    for j in i + 1..5 {
                        for k in j + 1..5 {
                            let vals = [seq[i], seq[j], seq[k]];
                            if (0..3).all(|a| (0..3).all(|b| vals[a].cmp(&vals[b]) == l[a].cmp(&l[b]))) {
                                found = true;
                            }
                        }
                    }
                }
                assert_eq!(avoids_word(&es, w), !found, "{:?} {}", seq, w);
            }
            // next inversion sequence
            let mut i = 4;
            loop {
                if seq[i] < i as u32 {
                    seq[i] += 1;
                    break;
                }
                seq[i] = 0;
                if i == 0 {
                    return;
                }
                i -= 1;
            }
        }
    }

    #[test]
    fn vincular_examples() {
        let v = |s: &str| -> VincularPattern { s.parse().unwrap() };
        assert!(!avoids_vincular(&p(&[1, 2, 3, 4]), &v("1-23-4")));
        assert!(avoids_vincular(&p(&[2, 4, 1, 3]), &v("1-23-4")));
        assert!(!avoids_vincular(&p(&[1, 3, 2, 4]), &v("1-23")));
        // 2413 contains 1-3-2 classically via 2,4,3
        assert!(!avoids_vincular(&p(&[2, 4, 1, 3]), &VincularPattern::parse_classical("132").unwrap()));
        assert!(avoids_vincular(&p(&[3, 2, 1]), &VincularPattern::parse_classical("12").unwrap()));
    }

    #[test]
    fn vincular_text() {
        let v: VincularPattern = "23-1-4".parse().unwrap();
        assert_eq!(v.perm(), &[2, 3, 1, 4]);
        assert_eq!(v.adjacency(), &[true, false, false]);
        assert_eq!(alloc::string::ToString::to_string(&v), "23-1-4");
        assert!("1--2".parse::<VincularPattern>().is_err());
        assert!("12-".parse::<VincularPattern>().is_err());
        assert!("13".parse::<VincularPattern>().is_err());
    }

    #[test]
    fn statistics() {
        assert_eq!(perm_statistics(&p(&[3, 2, 1])).rtl_minima, 1);
        assert_eq!(perm_statistics(&p(&[2, 4, 1, 3])).rtl_minima, 2);
        let id = perm_statistics(&Permutation::identity(6));
        assert_eq!(id.rtl_minima, 6);
        assert_eq!(id.ltr_maxima, 6);
        assert_eq!(id.ltr_minima, 1);
    }

    #[test]
    fn relation_tokens() {
        assert_eq!(t("geq,dash,geq").to_string(), "geq,dash,geq");
        assert!("geq,dash".parse::<RelationTriple>().is_err());
        assert!("geq,foo,geq".parse::<RelationTriple>().is_err());
    }
}
