//! Exact truncated formal power series in `q` with arbitrary-precision integer
//! coefficients, together with the q-products and theta series that the
//! partition generating functions are assembled from.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of `q^0..=q^N`.
//! Binary operations between series of different orders truncate to the
//! smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series `1` of the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from its coefficient vector; the order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty, since every series carries at least `q^0`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Sums `c * q^e` over the given terms, dropping exponents above `order`.
    pub fn from_terms<I, C>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (e, c) in terms {
            if e <= order {
                s.coeffs[e] += c.into();
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`, or `None` beyond the truncation order.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    /// Coefficient of `q^n`. Panics beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// Drops every coefficient above `order`. Never extends the series.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn nonzero_terms(&self) -> Vec<(usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn add_series(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a + b)
            .collect();
        Self { coeffs }
    }

    pub fn sub_series(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a - b)
            .collect();
        Self { coeffs }
    }

    /// Schoolbook Cauchy product, truncated to the smaller order.
    ///
    /// The sparser operand drives the outer loop so that products with the
    /// lacunary series used here (pentagonal, theta) cost `O(N * nnz)`.
    pub fn mul_series(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let (outer, inner) = if self.nonzero_count(order) <= other.nonzero_count(order) {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero(order);
        for (i, x) in outer.coeffs[..=order].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let dst = &mut out.coeffs[i..];
            let src = &inner.coeffs[..=order - i];
            accumulate_scaled(dst, src, x);
        }
        out
    }

    fn nonzero_count(&self, order: usize) -> usize {
        self.coeffs[..=order].iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplicative inverse, via `b[n] = -c0 * sum_{j=1..n} a[j] b[n-j]`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::NonUnitConstantTerm(c0.to_string()));
        }
        let negate = c0.is_one();
        let order = self.order();
        let terms: Vec<(usize, &BigInt)> = self
            .nonzero_terms()
            .into_iter()
            .filter(|&(j, _)| j > 0)
            .collect();
        let mut b: Vec<BigInt> = Vec::with_capacity(order + 1);
        b.push(c0.clone());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for &(j, aj) in &terms {
                if j > n {
                    break;
                }
                add_scaled(&mut acc, &b[n - j], aj);
            }
            b.push(if negate { -acc } else { acc });
        }
        Ok(Self { coeffs: b })
    }

    /// Replaces every coefficient by its least non-negative residue mod `m`.
    pub fn reduce_mod(&self, m: u64) -> Self {
        let m = BigInt::from(m);
        Self {
            coeffs: self.coeffs.iter().map(|c| c.mod_floor(&m)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exp {
            acc = acc.mul_series(self);
        }
        acc
    }

    /// Multiplies in place by `1 + sign * q^m`.
    fn mul_binomial(&mut self, m: usize, sign: i8) {
        if m == 0 || m > self.order() {
            return;
        }
        for j in (m..=self.order()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(j);
            if sign < 0 {
                hi[0] -= &lo[j - m];
            } else {
                hi[0] += &lo[j - m];
            }
        }
    }

    pub fn is_non_negative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

fn add_scaled(acc: &mut BigInt, value: &BigInt, scale: &BigInt) {
    if scale.is_one() {
        *acc += value;
    } else if (-scale).is_one() {
        *acc -= value;
    } else {
        *acc += value * scale;
    }
}

fn accumulate_scaled(dst: &mut [BigInt], src: &[BigInt], scale: &BigInt) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            add_scaled(d, s, scale);
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.add_series(rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.sub_series(rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.add_series(b)
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.mul_series(b)
}

pub fn series_invert(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.invert()
}

pub fn series_reduce_mod(a: &TruncatedSeries, m: u64) -> TruncatedSeries {
    a.reduce_mod(m)
}

/// `prod_{j>=0} (1 + sign * q^(start + j*step))` expanded factor by factor.
pub fn expand_product(start: usize, step: usize, order: usize, sign: i8) -> TruncatedSeries {
    assert!(start >= 1 && step >= 1, "product exponents must be positive");
    let mut s = TruncatedSeries::one(order);
    let mut m = start;
    while m <= order {
        s.mul_binomial(m, sign);
        m += step;
    }
    s
}

/// Euler's pentagonal series `sum_{k in Z} (-1)^k q^(step * k(3k-1)/2)`,
/// which equals `(q^step; q^step)_inf`.
pub fn pentagonal_series(step: usize, order: usize) -> TruncatedSeries {
    assert!(step >= 1);
    let mut terms = vec![(0usize, 1i64)];
    for k in 1usize.. {
        let lo = step * (k * (3 * k - 1) / 2);
        if lo > order {
            break;
        }
        let sign = if k % 2 == 1 { -1 } else { 1 };
        terms.push((lo, sign));
        terms.push((step * (k * (3 * k + 1) / 2), sign));
    }
    TruncatedSeries::from_terms(order, terms)
}

/// `(q^a; q^b)_inf` truncated at `order`.
pub fn pochhammer_inf(a: usize, b: usize, order: usize) -> TruncatedSeries {
    if a == b {
        pentagonal_series(b, order)
    } else {
        expand_product(a, b, order, -1)
    }
}

/// `(-q^a; q^b)_inf` truncated at `order`.
pub fn neg_pochhammer_inf(a: usize, b: usize, order: usize) -> TruncatedSeries {
    expand_product(a, b, order, 1)
}

/// `sum_{n>=0} (-1)^n q^(t n(n+1)/2)`.
pub fn alternating_triangular(t: usize, order: usize) -> TruncatedSeries {
    assert!(t >= 1);
    let terms = (0usize..)
        .map(|n| (t * (n * (n + 1) / 2), if n % 2 == 0 { 1i64 } else { -1 }))
        .take_while(|&(e, _)| e <= order);
    TruncatedSeries::from_terms(order, terms)
}

/// `sum_{n>=0} (-1)^n q^(t n^2)`.
pub fn alternating_squares(t: usize, order: usize) -> TruncatedSeries {
    assert!(t >= 1);
    let terms = (0usize..)
        .map(|n| (t * n * n, if n % 2 == 0 { 1i64 } else { -1 }))
        .take_while(|&(e, _)| e <= order);
    TruncatedSeries::from_terms(order, terms)
}

/// Ramanujan's `psi(q^t) = sum_{n>=0} q^(t n(n+1)/2)`.
pub fn psi(t: usize, order: usize) -> TruncatedSeries {
    assert!(t >= 1);
    let terms = (0usize..)
        .map(|n| (t * (n * (n + 1) / 2), 1i64))
        .take_while(|&(e, _)| e <= order);
    TruncatedSeries::from_terms(order, terms)
}

/// `(q^t; q^t)_inf^3 / (q; q)_inf`, the common mod-2 image of the
/// `p_{t,t}` and `C_{4t,t}` generating functions.
pub fn eta_cube_quotient(t: usize, order: usize) -> TruncatedSeries {
    let euler = pochhammer_inf(1, 1, order)
        .invert()
        .expect("(q;q)_inf has constant term 1");
    pochhammer_inf(t, t, order).pow(3).mul_series(&euler)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(series_add(&s(&[1, 1]), &s(&[1, -1])), s(&[2, 0]));
        let x = s(&[3, -4, 7]);
        assert_eq!(series_add(&TruncatedSeries::zero(2), &x), x);
        let a = s(&[1, -1, -1, 0, 0, 1]);
        let b = s(&[0, 1, 1, 0, 0, 0]);
        assert_eq!(series_add(&a, &b), s(&[1, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = s(&[1, 2, 3, 4]);
        let b = s(&[1, 1]);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!((&a * &b), s(&[1, 3]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(series_mul(&s(&[1, -1, 0, 0]), &s(&[1, 1, 1, 1])), s(&[1, 0, 0, 0]));
        let x = s(&[5, 0, -2]);
        assert_eq!(series_mul(&x, &TruncatedSeries::one(2)), x);
        assert_eq!(series_mul(&s(&[1, 1, 0]), &s(&[1, 1, 0])), s(&[1, 2, 1]));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(series_invert(&s(&[1, -1, 0, 0, 0])).unwrap(), s(&[1, 1, 1, 1, 1]));
        assert_eq!(
            series_invert(&pochhammer_inf(1, 1, 5)).unwrap(),
            s(&[1, 1, 2, 3, 5, 7])
        );
        assert_eq!(series_invert(&s(&[1, 1, 0, 0])).unwrap(), s(&[1, -1, 1, -1]));
        assert_eq!(series_invert(&s(&[-1, 1, 0])).unwrap(), s(&[-1, -1, -1]));
    }

    #[test]
    fn invert_rejects_non_unit() {
        assert_eq!(
            series_invert(&s(&[2, 1])),
            Err(Error::NonUnitConstantTerm("2".into()))
        );
        assert!(series_invert(&s(&[0, 1])).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer_inf(1, 1, 5), s(&[1, -1, -1, 0, 0, 1]));
        assert_eq!(pochhammer_inf(3, 3, 2), TruncatedSeries::one(2));
        assert_eq!(pochhammer_inf(2, 4, 6), s(&[1, 0, -1, 0, 0, 0, -1]));
    }

    #[test]
    fn neg_pochhammer_examples() {
        assert_eq!(neg_pochhammer_inf(1, 4, 5), s(&[1, 1, 0, 0, 0, 1]));
        assert_eq!(neg_pochhammer_inf(7, 7, 6), TruncatedSeries::one(6));
        assert_eq!(neg_pochhammer_inf(1, 1, 3), s(&[1, 1, 1, 2]));
    }

    #[test]
    fn pentagonal_route_matches_direct_expansion() {
        for step in 1..=7 {
            assert_eq!(pentagonal_series(step, 300), expand_product(step, step, 300, -1));
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(
            alternating_triangular(1, 10),
            TruncatedSeries::from_terms(10, [(0, 1), (1, -1), (3, 1), (6, -1), (10, 1)])
        );
        assert_eq!(alternating_triangular(3, 8), TruncatedSeries::from_terms(8, [(0, 1), (3, -1)]));
        assert_eq!(alternating_triangular(1, 0), TruncatedSeries::one(0));

        assert_eq!(
            alternating_squares(1, 9),
            TruncatedSeries::from_terms(9, [(0, 1), (1, -1), (4, 1), (9, -1)])
        );
        assert_eq!(alternating_squares(2, 7), TruncatedSeries::from_terms(7, [(0, 1), (2, -1)]));
        assert_eq!(alternating_squares(5, 4), TruncatedSeries::one(4));

        assert_eq!(psi(1, 6), s(&[1, 1, 0, 1, 0, 0, 1]));
        assert_eq!(psi(2, 6), s(&[1, 0, 1, 0, 0, 0, 1]));
    }

    #[test]
    fn psi_product_form() {
        for n in [50, 200] {
            let sq = pochhammer_inf(2, 2, n).pow(2);
            let rhs = sq.mul_series(&pochhammer_inf(1, 1, n).invert().unwrap());
            assert_eq!(psi(1, n), rhs);
        }
    }

    #[test]
    fn reduce_mod_examples() {
        assert_eq!(series_reduce_mod(&s(&[1, -1]), 2), s(&[1, 1]));
        assert_eq!(series_reduce_mod(&s(&[1, 1, 2, 3, 5, 7]), 5), s(&[1, 1, 2, 3, 0, 2]));
    }

    #[test]
    fn partition_numbers_monotone_at_200() {
        let p = pochhammer_inf(1, 1, 200).invert().unwrap();
        assert!(p.coeffs().iter().all(|c| *c >= BigInt::one()));
        assert!(p.coeffs()[1..].windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(p.coeff(200).to_string(), "3972999029388");
    }

    #[test]
    fn display_and_json() {
        assert_eq!(s(&[1, -1, 0, 2]).to_string(), "1 - q + 2*q^3 + O(q^4)");
        assert_eq!(s(&[0, 0]).to_string(), "0 + O(q^2)");
        assert_eq!(serde_json::to_string(&s(&[1, -3])).unwrap(), r#"["1","-3"]"#);
    }

    fn small_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(-20i64..20, order + 1).prop_map(|v| TruncatedSeries::from_i64s(&v))
    }

    fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        (prop_oneof![Just(1i64), Just(-1i64)], proptest::collection::vec(-20i64..20, order))
            .prop_map(|(c0, rest)| {
                let mut v = vec![c0];
                v.extend(rest);
                TruncatedSeries::from_i64s(&v)
            })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(a in unit_series(15)) {
            let b = a.invert().unwrap();
            prop_assert_eq!(&a * &b, TruncatedSeries::one(15));
            prop_assert_eq!(&b * &a, TruncatedSeries::one(15));
        }

        #[test]
        fn mul_commutes_and_associates(a in small_series(12), b in small_series(12), c in small_series(12)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn reduce_mod_is_idempotent(a in small_series(10), m in 2u64..40) {
            let once = a.reduce_mod(m);
            prop_assert_eq!(once.reduce_mod(m), once);
        }
    }
}
