//! Recurrences, reference sequences and exact formal-series arithmetic.
//!
//! Everything here is integer arithmetic; divisions are checked to be exact.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::gentree::{label_distribution, BuiltinRule, Label};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("no sequence named {0:?}")]
    UnknownSequence(String),
    #[error("{name} is only bundled up to n = {available}")]
    BeyondPrefix { name: &'static str, available: usize },
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("division by {divisor} left a remainder at x^{x_degree}")]
    InexactDivision { divisor: &'static str, x_degree: u32 },
    #[error("nonzero residual {coefficient} at x^{x} y^{y} z^{z}")]
    NonzeroResidual { x: u32, y: u32, z: u32, coefficient: BigInt },
}

// ---------------------------------------------------------------------------
// Laurent polynomials in a

/// A Laurent polynomial in `a` with exact integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · a^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds `Σ c·a^e` from `(e, c)` pairs.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// `[a^0]` of `self / (1 + a)^p`, with `1/(1+a)^p` expanded in
    /// nonnegative powers of `a`: only the terms of negative (or zero)
    /// exponent contribute, so the expansion stops at `-min_exponent`.
    pub fn constant_term_over_one_plus_a_pow(&self, p: u32) -> BigInt {
        let mut total = BigInt::zero();
        for (e, c) in self.terms() {
            if e > 0 {
                continue;
            }
            let j = (-e) as u64;
            // [a^j] (1+a)^{-p} = (-1)^j C(j+p-1, p-1)
            let mut b = BigInt::one();
            for i in 1..p as u64 {
                b = b * BigInt::from(j + i) / BigInt::from(i);
            }
            if j % 2 == 1 {
                b = -b;
            }
            total += c * b;
        }
        total
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let (sign, abs) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            match e {
                0 => write!(f, "{}", abs)?,
                _ if abs.is_one() => write!(f, "a^{}", e)?,
                _ => write!(f, "{}*a^{}", abs, e)?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Truncated power series in x

/// A power series in `x` modulo `x^{N+1}` with Laurent-polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    /// The constant series `c`.
    pub fn constant(order: usize, c: LaurentPoly) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `[x^n]`; zero past the order.
    pub fn coeff(&self, n: usize) -> LaurentPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    /// Multiplication by `x`, dropping the term that falls off.
    pub fn times_x(&self) -> Self {
        let mut coeffs = vec![LaurentPoly::zero()];
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        Self { coeffs }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(self.order(), LaurentPoly::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order());
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order());
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order());
        let n = self.order();
        let mut out = TruncatedSeries::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                let t = &self.coeffs[i] * &rhs.coeffs[j];
                out.coeffs[i + j] = &out.coeffs[i + j] + &t;
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Recurrences

/// `E_3(0..=n_max)` from `E_3(0) = E_3(1) = 1` and
/// `8(n+3)(n+1)E(n) + (7n²+53n+88)E(n+1) = (n+8)(n+7)E(n+2)`.
pub fn e3_sequence(n_max: usize) -> Vec<BigUint> {
    let mut e = vec![BigUint::one(); 2];
    for n in 0..n_max.saturating_sub(1) as u64 {
        let num = BigUint::from(8 * (n + 3) * (n + 1)) * &e[n as usize]
            + BigUint::from(7 * n * n + 53 * n + 88) * &e[n as usize + 1];
        let den = BigUint::from((n + 8) * (n + 7));
        assert!((&num % &den).is_zero(), "recurrence division must be exact");
        e.push(num / den);
    }
    e.truncate(n_max + 1);
    e
}

/// Whether `a_0, a_1, ...` satisfies the three-term recurrence of
/// [`e3_sequence`] wherever three consecutive terms are available.
pub fn satisfies_a108307_recurrence(a: &[BigUint]) -> bool {
    a.windows(3).enumerate().all(|(n, w)| {
        let n = n as u64;
        BigUint::from(8 * (n + 3) * (n + 1)) * &w[0] + BigUint::from(7 * n * n + 53 * n + 88) * &w[1]
            == BigUint::from((n + 8) * (n + 7)) * &w[2]
    })
}

/// `c_{n,k}` for `0 <= k <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTriangle {
    rows: Vec<Vec<BigUint>>,
}

impl CountTriangle {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.rows.get(n).and_then(|r| r.get(k)).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    pub fn row_sums(&self) -> Vec<BigUint> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }
}

/// `c_{0,0} = 1`, `c_{n,0} = 0` and
/// `c_{n,k} = c_{n-1,k-1} + k·Σ_{j=k}^{n-1} c_{n-1,j}`.
pub fn callan_triangle(n_max: usize) -> CountTriangle {
    let mut rows = vec![vec![BigUint::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigUint::zero(); n + 1];
        // suffix sums of the previous row
        let mut tail = BigUint::zero();
        for k in (1..=n).rev() {
            if k < n {
                tail += &prev[k];
            }
            row[k] = &prev[k - 1] + BigUint::from(k) * &tail;
        }
        rows.push(row);
    }
    CountTriangle { rows }
}

pub const REFERENCE_NAMES: [&str; 5] = ["catalan", "a108307", "baxter", "semibaxter", "pcat"];

const BAXTER: [u64; 13] = [
    1, 2, 6, 22, 92, 422, 2074, 10754, 58202, 326240, 1882960, 11140560, 67329992,
];
const SEMIBAXTER: [u64; 13] = [
    1, 2, 6, 23, 104, 530, 2958, 17734, 112657, 750726, 5207910, 37387881, 276467208,
];

/// Terms for sizes `1..=n_max`.
pub fn reference_sequence(name: &str, n_max: usize) -> Result<Vec<BigUint>, SeriesError> {
    let bundled = |name: &'static str, terms: &[u64]| {
        if n_max > terms.len() {
            Err(SeriesError::BeyondPrefix {
                name,
                available: terms.len(),
            })
        } else {
            Ok(terms[..n_max].iter().map(|&t| BigUint::from(t)).collect())
        }
    };
    match name {
        "catalan" => Ok((1..=n_max as u64).map(catalan).collect()),
        "a108307" => Ok(e3_sequence(n_max).into_iter().skip(1).collect()),
        "pcat" => Ok(callan_triangle(n_max).row_sums().into_iter().skip(1).collect()),
        "baxter" => bundled("baxter", &BAXTER),
        "semibaxter" => bundled("semibaxter", &SEMIBAXTER),
        _ => Err(SeriesError::UnknownSequence(name.into())),
    }
}

fn catalan(n: u64) -> BigUint {
    // C_n = (2n)! / (n! (n+1)!), accumulated as a running product
    let mut c = BigUint::one();
    for i in 0..n {
        c = c * BigUint::from(2 * (2 * i + 1)) / BigUint::from(i + 2);
    }
    c
}

// ---------------------------------------------------------------------------
// Kernel-method series

fn w_rhs(w: &TruncatedSeries) -> TruncatedSeries {
    let n = w.order();
    let f1 = w + &TruncatedSeries::constant(n, LaurentPoly::from_terms(&[(0, 1), (1, 1)]));
    let f2 = w + &TruncatedSeries::constant(n, LaurentPoly::from_terms(&[(1, 1), (2, 1)]));
    (&f1 * &f2).scale(&LaurentPoly::monomial(1, -1)).times_x()
}

/// The series `W = x·ā·(W + 1 + a)(W + a + a²)` with `W(0) = 0`, modulo
/// `x^{N+1}`, by fixed-point iteration.
pub fn kernel_w(order: usize) -> Result<TruncatedSeries, SeriesError> {
    if order == 0 {
        return Err(SeriesError::ZeroOrder);
    }
    let mut w = TruncatedSeries::zero(order);
    for _ in 0..order {
        w = w_rhs(&w);
    }
    assert!(w_residual(&w).is_zero(), "fixed point not reached");
    Ok(w)
}

/// `W - x·ā·(W + 1 + a)(W + a + a²)` modulo `x^{N+1}`.
pub fn w_residual(w: &TruncatedSeries) -> TruncatedSeries {
    w - &w_rhs(w)
}

/// The coefficients of `Q(a, W)` as a polynomial in `W`, degrees 1 to 4.
pub fn q_coefficients() -> [LaurentPoly; 4] {
    [
        LaurentPoly::from_terms(&[(-6, -1), (-5, -3), (-4, -3), (-3, -1), (0, 1), (1, 3), (2, 3), (3, 1)]),
        LaurentPoly::from_terms(&[(-5, 1), (-4, 1), (-1, -1), (0, -1)]),
        LaurentPoly::from_terms(&[(-6, 1), (-4, -1), (-3, 1), (-1, -1)]),
        LaurentPoly::from_terms(&[(-5, -1), (-4, 1)]),
    ]
}

/// `Q(a, W)` modulo `x^{N+1}`.
pub fn kernel_q(order: usize) -> Result<TruncatedSeries, SeriesError> {
    let w = kernel_w(order)?;
    let mut q = TruncatedSeries::zero(order);
    let mut power = w.clone();
    for c in q_coefficients() {
        q = &q + &power.scale(&c);
        power = &power * &w;
    }
    Ok(q)
}

/// `[x^n] A(1, 1)` for `n = 1..=N`: the `a^0` terms of `Q(a, W)/(1 + a)^3`.
pub fn kernel_a11(order: usize) -> Result<Vec<BigInt>, SeriesError> {
    let q = kernel_q(order)?;
    Ok((1..=order)
        .map(|n| q.coeff(n).constant_term_over_one_plus_a_pow(3))
        .collect())
}

// ---------------------------------------------------------------------------
// Functional equation check

/// A polynomial in `x, y, z` with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrivariatePoly {
    terms: BTreeMap<(u32, u32, u32), BigInt>,
}

impl TrivariatePoly {
    fn add_term(&mut self, m: (u32, u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: u32, y: u32, z: u32) -> BigInt {
        self.terms.get(&(x, y, z)).cloned().unwrap_or_default()
    }

    /// `(x, y, z, coefficient)` in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(x, y, z), c)| (x, y, z, c))
    }

    fn map_monomials(&self, f: impl Fn(u32, u32, u32) -> (u32, u32, u32)) -> Self {
        let mut out = Self::default();
        for (x, y, z, c) in self.terms() {
            out.add_term(f(x, y, z), c.clone());
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, y, z, c) in other.terms() {
            out.add_term((x, y, z), -c.clone());
        }
        out
    }

    fn truncate_x(&self, n: u32) -> Self {
        Self {
            terms: self.terms.iter().filter(|(m, _)| m.0 <= n).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Exact quotient by `1 - y`.
    fn div_one_minus_y(&self) -> Result<Self, SeriesError> {
        // group by (x, z) into polynomials in y
        let mut groups: BTreeMap<(u32, u32), BTreeMap<u32, BigInt>> = BTreeMap::new();
        for (x, y, z, c) in self.terms() {
            groups.entry((x, z)).or_default().insert(y, c.clone());
        }
        let mut out = Self::default();
        for ((x, z), p) in groups {
            let d = *p.keys().next_back().unwrap();
            // p = (1 - y) q  =>  q_i = p_i + q_{i-1}
            let mut q = BigInt::zero();
            for i in 0..d {
                q += p.get(&i).cloned().unwrap_or_default();
                out.add_term((x, i, z), q.clone());
            }
            if p.get(&d).cloned().unwrap_or_default() + q != BigInt::zero() {
                return Err(SeriesError::InexactDivision {
                    divisor: "1 - y",
                    x_degree: x,
                });
            }
        }
        Ok(out)
    }

    /// Exact quotient by `z - y`, dividing as polynomials in `z` over `Z[y]`.
    fn div_z_minus_y(&self) -> Result<Self, SeriesError> {
        let mut by_x: BTreeMap<u32, BTreeMap<u32, BTreeMap<u32, BigInt>>> = BTreeMap::new();
        for (x, y, z, c) in self.terms() {
            by_x.entry(x).or_default().entry(z).or_default().insert(y, c.clone());
        }
        let mut out = Self::default();
        for (x, b) in by_x {
            let d = *b.keys().next_back().unwrap();
            // Horner: q_{i-1} = b_i + y·q_i, remainder b_0 + y·q_0
            let mut q: BTreeMap<u32, BigInt> = BTreeMap::new();
            for i in (0..=d).rev() {
                let mut next: BTreeMap<u32, BigInt> = b.get(&i).cloned().unwrap_or_default();
                for (e, c) in &q {
                    *next.entry(e + 1).or_insert_with(BigInt::zero) += c;
                }
                next.retain(|_, c| !c.is_zero());
                if i == 0 {
                    if !next.is_empty() {
                        return Err(SeriesError::InexactDivision {
                            divisor: "z - y",
                            x_degree: x,
                        });
                    }
                } else {
                    for (e, c) in &next {
                        out.add_term((x, *e, i - 1), c.clone());
                    }
                }
                q = next;
            }
        }
        Ok(out)
    }
}

/// `A(x; y, z) = Σ A_{h,k} y^h z^k` through `x^N`, read off the label
/// distribution of the `I(>=,>=,>=)` rule.
pub fn i_geq3_generating_polynomial(order: usize) -> TrivariatePoly {
    let mut a = TrivariatePoly::default();
    for (level, dist) in label_distribution(&BuiltinRule::IGeq3, order)
        .expect("built-in rules are total")
        .iter()
        .enumerate() {
        for (label, count) in dist {
            if let Label::Two(h, k) = *label {
                a.add_term((level as u32 + 1, h, k), BigInt::from(count.clone()));
            }
        }
    }
    a
}

/// `A - xyz - xz·(A(1,z) - A(y,z))/(1-y) - xyz·(A(y,z) - A(y,y))/(z-y)`
/// through `x^N`, with both quotients taken exactly.
pub fn functional_equation_residual(order: usize) -> Result<TrivariatePoly, SeriesError> {
    if order == 0 {
        return Err(SeriesError::ZeroOrder);
    }
    let n = order as u32;
    let a = i_geq3_generating_polynomial(order);
    let a_1z = a.map_monomials(|x, _, z| (x, 0, z));
    let a_yy = a.map_monomials(|x, y, z| (x, y + z, 0));
    // A(1,z) - A(y,z) and A(y,z) - A(y,y), in that orientation
    let q1 = a_1z.sub(&a).div_one_minus_y()?;
    let q2 = a.sub(&a_yy).div_z_minus_y()?;
    let mut rhs = TrivariatePoly::default();
    rhs.add_term((1, 1, 1), BigInt::one());
    for (x, y, z, c) in q1.terms() {
        rhs.add_term((x + 1, y, z + 1), c.clone());
    }
    for (x, y, z, c) in q2.terms() {
        rhs.add_term((x + 1, y + 1, z + 1), c.clone());
    }
    Ok(a.sub(&rhs).truncate_x(n))
}

/// [`functional_equation_residual`] turned into a pass/fail check.
pub fn check_functional_equation(order: usize) -> Result<(), SeriesError> {
    let r = functional_equation_residual(order)?;
    let first = r.terms().next().map(|(x, y, z, c)| (x, y, z, c.clone()));
    match first {
        None => Ok(()),
        Some((x, y, z, coefficient)) => Err(SeriesError::NonzeroResidual { x, y, z, coefficient }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn e3_terms() {
        assert_eq!(e3_sequence(7), u(&[1, 1, 2, 5, 15, 51, 191, 772]));
        assert_eq!(e3_sequence(0), u(&[1]));
        assert!(satisfies_a108307_recurrence(&e3_sequence(20)));
    }

    #[test]
    fn triangle_rows() {
        let t = callan_triangle(6);
        assert_eq!(t.get(0, 0), BigUint::one());
        assert_eq!(t.row(3), &u(&[0, 2, 3, 1])[..]);
        assert_eq!(t.row(4), &u(&[0, 6, 10, 6, 1])[..]);
        assert_eq!(t.row_sums(), u(&[1, 1, 2, 6, 23, 105, 549]));
    }

    #[test]
    fn references() {
        assert_eq!(reference_sequence("catalan", 5).unwrap(), u(&[1, 2, 5, 14, 42]));
        assert_eq!(reference_sequence("pcat", 7).unwrap(), u(&[1, 2, 6, 23, 105, 549, 3207]));
        assert_eq!(reference_sequence("a108307", 4).unwrap(), u(&[1, 2, 5, 15]));
        assert!(matches!(
            reference_sequence("baxter", 14),
            Err(SeriesError::BeyondPrefix { .. })
        ));
        assert!(reference_sequence("fibonacci", 3).is_err());
    }

    #[test]
    fn w_first_coefficient() {
        let w = kernel_w(4).unwrap();
        assert!(w.coeff(0).is_zero());
        assert_eq!(w.coeff(1), LaurentPoly::from_terms(&[(0, 1), (1, 2), (2, 1)]));
    }

    #[test]
    fn a11_terms() {
        let got = kernel_a11(6).unwrap();
        let want: Vec<BigInt> = [1, 2, 5, 15, 51, 191].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn functional_equation() {
        assert!(functional_equation_residual(1).unwrap().is_zero());
        check_functional_equation(6).unwrap();
    }

    #[test]
    fn laurent_display() {
        let p = LaurentPoly::from_terms(&[(-1, -1), (0, 2), (2, 1)]);
        assert_eq!(alloc::format!("{}", p), "-a^-1 + 2 + a^2");
    }
}
