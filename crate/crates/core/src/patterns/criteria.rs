//! Structural membership tests, each equivalent to one avoidance class.
//! They are cross-checked against the pattern oracles by exhaustive tests.

use crate::objects::{InversionSequence, Permutation};

/// Membership in `I(>=,-,>=)`: every weak descent `e_i >= e_{i+1}` has
/// `e_i < e_j` for all `j > i + 1`.
pub fn catalan_criterion(e: &InversionSequence) -> bool {
    let v = e.entries();
    (0..v.len().saturating_sub(1))
        .filter(|&i| v[i] >= v[i + 1])
        .all(|i| v[i + 2..].iter().all(|&x| v[i] < x))
}

/// Membership in `I(>=,>=,>=)`: the left-to-right maxima and the remaining
/// ("bottom") entries both form strictly increasing sequences.
pub fn ltr_bottom_criterion(e: &InversionSequence) -> bool {
    let mut max: Option<u32> = None;
    let mut last_bottom: Option<u32> = None;
    for &x in e.entries() {
        if max.is_none_or(|m| x > m) {
            max = Some(x);
        } else {
            if last_bottom.is_some_and(|b| x <= b) {
                return false;
            }
            last_bottom = Some(x);
        }
    }
    true
}

fn ltr_maxima(v: &[u32]) -> alloc::vec::Vec<bool> {
    let mut max: Option<u32> = None;
    v.iter()
        .map(|&x| {
            let is_max = max.is_none_or(|m| x > m);
            if is_max {
                max = Some(x);
            }
            is_max
        })
        .collect()
}

fn rtl_minima(v: &[u32]) -> alloc::vec::Vec<bool> {
    let mut out = alloc::vec![false; v.len()];
    let mut min: Option<u32> = None;
    for (i, &x) in v.iter().enumerate().rev() {
        if min.is_none_or(|m| x < m) {
            out[i] = true;
            min = Some(x);
        }
    }
    out
}

/// Membership in `I(>=,>=,>)`: in every inversion `e_i > e_j` (`i < j`),
/// `e_i` is a left-to-right maximum and `e_j` a right-to-left minimum.
pub fn baxter_criterion(e: &InversionSequence) -> bool {
    let v = e.entries();
    let ltr = ltr_maxima(v);
    let rtl = rtl_minima(v);
    for j in 0..v.len() {
        for i in 0..j {
            if v[i] > v[j] && !(ltr[i] && rtl[j]) {
                return false;
            }
        }
    }
    true
}

/// Membership in `I(>=,>,-)`: the larger entry of every inversion is a
/// left-to-right maximum.
pub fn semi_baxter_criterion(e: &InversionSequence) -> bool {
    let v = e.entries();
    let ltr = ltr_maxima(v);
    for j in 0..v.len() {
        for i in 0..j {
            if v[i] > v[j] && !ltr[i] {
                return false;
            }
        }
    }
    true
}

/// Membership in `AV(1-23-4)`: every ascent `p_i < p_{i+1}` has a
/// left-to-right minimum on its left end or a right-to-left maximum on its
/// right end.
pub fn av_1_23_4_criterion(p: &Permutation) -> bool {
    let v = p.values();
    let n = v.len();
    let mut ltr_min = alloc::vec![false; n];
    let mut lo = u32::MAX;
    for (i, &x) in v.iter().enumerate() {
        if x < lo {
            lo = x;
            ltr_min[i] = true;
        }
    }
    let mut rtl_max = alloc::vec![false; n];
    let mut hi = 0;
    for (i, &x) in v.iter().enumerate().rev() {
        if x > hi {
            hi = x;
            rtl_max[i] = true;
        }
    }
    (0..n.saturating_sub(1)).all(|i| v[i] > v[i + 1] || ltr_min[i] || rtl_max[i + 1])
}
