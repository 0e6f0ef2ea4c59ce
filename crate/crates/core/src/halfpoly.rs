//! Exact Laurent polynomials in `u = t^{1/2}` and their Conway form in
//! `z = u - u^{-1}`.
//!
//! Exponents are stored as half-powers of `t`, so `u^k` means `t^{k/2}`.
//! Coefficients are arbitrary precision.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial {0} is not a polynomial in z = t^(1/2) - t^(-1/2)")]
    NotConway(String),
}

/// An element of `Z[u, u^{-1}]`, canonical: no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HalfLaurent {
    coeffs: BTreeMap<i64, BigInt>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * u^k`.
    pub fn monomial(k: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c.into());
        p
    }

    /// `u^k`.
    pub fn u_pow(k: i64) -> Self {
        Self::monomial(k, 1)
    }

    /// `z = u - u^{-1}`.
    pub fn z() -> Self {
        Self::from_terms([(1, 1), (-1, -1)])
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    pub fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Apply `u -> u^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, d)| (*e, d * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Sum of absolute values of the coefficients.
    pub fn abs_coeff_sum(&self) -> BigInt {
        self.coeffs.values().map(|c| c.abs()).sum()
    }

    /// Exact division in `Z[u, u^{-1}]`; `None` when `divisor` does not
    /// divide `self` or is zero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dmax, dlead) = divisor
            .coeffs
            .iter()
            .next_back()
            .map(|(k, c)| (*k, c.clone()))?;
        let dmin = divisor.min_exp()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rmax) = rem.max_exp() {
            // Once the remainder's span is narrower than the divisor's span no
            // further exact step can exist.
            let rmin = rem.min_exp().unwrap_or(rmax);
            if rmax - rmin < dmax - dmin {
                return None;
            }
            let rlead = rem.coeff(rmax);
            if !(&rlead % &dlead).is_zero() {
                return None;
            }
            let c = &rlead / &dlead;
            let k = rmax - dmax;
            let term = Self::monomial(k, c.clone());
            rem = &rem - &(&term * divisor);
            quot.add_term(k, c);
        }
        Some(quot)
    }

    /// True iff `self = ± u^k * other` for some integer `k`.
    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        match (self.min_exp(), other.min_exp()) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                if self.len() != other.len() {
                    return false;
                }
                let shifted = other.shift(a - b);
                shifted == *self || -&shifted == *self
            }
            _ => false,
        }
    }

    /// Rewrite as a polynomial in `z = u - u^{-1}`.
    pub fn to_conway(&self) -> Result<ConwayPoly, PolyError> {
        let mut rem = self.clone();
        let mut out = ConwayPoly::zero();
        while let Some(top) = rem.max_exp() {
            if top < 0 {
                return Err(PolyError::NotConway(self.to_string()));
            }
            let lead = rem.coeff(top);
            let power = z_power(top as u32);
            rem = &rem - &power.scale(&lead);
            out.add_term(top as u32, lead);
        }
        Ok(out)
    }

    /// Render in `t`, ascending: `t^{-1} - 1 + t`. Odd `u` powers print as
    /// half-integer `t` exponents.
    pub fn to_t_string(&self) -> String {
        let terms: Vec<(BigInt, String)> = self
            .coeffs
            .iter()
            .map(|(k, c)| (c.clone(), t_monomial(*k)))
            .collect();
        render_terms(&terms)
    }
}

fn t_monomial(k: i64) -> String {
    match k {
        0 => String::new(),
        2 => "t".to_string(),
        k if k % 2 == 0 => format!("t^{{{}}}", k / 2),
        k => format!("t^{{{}/2}}", k),
    }
}

fn z_monomial(k: u32) -> String {
    match k {
        0 => String::new(),
        1 => "z".to_string(),
        k => format!("z^{k}"),
    }
}

fn render_terms(terms: &[(BigInt, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(mono);
        }
    }
    out
}

/// `z^m` expanded in `u`.
fn z_power(m: u32) -> HalfLaurent {
    let mut p = HalfLaurent::zero();
    let mut binom = BigInt::one();
    for j in 0..=m {
        let c = if j % 2 == 0 {
            binom.clone()
        } else {
            -binom.clone()
        };
        p.add_term(m as i64 - 2 * j as i64, c);
        binom = binom * BigInt::from(m - j) / BigInt::from(j + 1);
    }
    p
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_t_string())
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(HalfLaurent, Add, add);
forward_owned!(HalfLaurent, Sub, sub);
forward_owned!(HalfLaurent, Mul, mul);

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

/// A polynomial in `z` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConwayPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl ConwayPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, C)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    pub fn add_term(&mut self, k: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u32) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn from_conway(&self) -> HalfLaurent {
        self.coeffs.iter().fold(HalfLaurent::zero(), |acc, (k, c)| {
            &acc + &z_power(*k).scale(c)
        })
    }

    /// `z -> -z`.
    pub fn substitute_neg_z(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (*k, if k % 2 == 0 { c.clone() } else { -c.clone() }))
                .collect(),
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    /// Descending render: `z^2 + 1`.
    pub fn to_z_string(&self) -> String {
        let terms: Vec<(BigInt, String)> = self
            .coeffs
            .iter()
            .rev()
            .map(|(k, c)| (c.clone(), z_monomial(*k)))
            .collect();
        render_terms(&terms)
    }
}

impl fmt::Display for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_z_string())
    }
}

/// Coefficients go out as JSON numbers when they fit in an `i64` and as
/// decimal strings otherwise.
fn ser_coeff_map<'a, S: Serializer>(
    key: &str,
    entries: impl Iterator<Item = (String, &'a BigInt)> + Clone,
    s: S,
) -> Result<S::Ok, S::Error> {
    struct Inner<I>(I);
    impl<'a, I: Iterator<Item = (String, &'a BigInt)> + Clone> Serialize for Inner<I> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let mut m = s.serialize_map(None)?;
            for (k, c) in self.0.clone() {
                match c.to_i64() {
                    Some(v) => m.serialize_entry(&k, &v)?,
                    None => m.serialize_entry(&k, &c.to_string())?,
                }
            }
            m.end()
        }
    }
    let mut m = s.serialize_map(Some(1))?;
    m.serialize_entry(key, &Inner(entries))?;
    m.end()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Int(i64),
    Text(String),
}

impl CoeffRepr {
    fn into_bigint<E: de::Error>(self) -> Result<BigInt, E> {
        match self {
            CoeffRepr::Int(v) => Ok(BigInt::from(v)),
            CoeffRepr::Text(s) => s
                .parse()
                .map_err(|_| E::custom(format!("bad coefficient {s}"))),
        }
    }
}

impl Serialize for HalfLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ser_coeff_map("u", self.coeffs.iter().map(|(k, c)| (k.to_string(), c)), s)
    }
}

impl<'de> Deserialize<'de> for HalfLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut raw: BTreeMap<String, BTreeMap<String, CoeffRepr>> = BTreeMap::deserialize(d)?;
        let inner = raw
            .remove("u")
            .ok_or_else(|| de::Error::missing_field("u"))?;
        let mut p = HalfLaurent::zero();
        for (k, c) in inner {
            let k: i64 = k
                .parse()
                .map_err(|_| de::Error::custom(format!("bad exponent {k}")))?;
            p.add_term(k, c.into_bigint()?);
        }
        Ok(p)
    }
}

impl Serialize for ConwayPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ser_coeff_map("z", self.coeffs.iter().map(|(k, c)| (k.to_string(), c)), s)
    }
}

impl<'de> Deserialize<'de> for ConwayPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut raw: BTreeMap<String, BTreeMap<String, CoeffRepr>> = BTreeMap::deserialize(d)?;
        let inner = raw
            .remove("z")
            .ok_or_else(|| de::Error::missing_field("z"))?;
        let mut p = ConwayPoly::zero();
        for (k, c) in inner {
            let k: u32 = k
                .parse()
                .map_err(|_| de::Error::custom(format!("bad exponent {k}")))?;
            p.add_term(k, c.into_bigint()?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u(terms: &[(i64, i64)]) -> HalfLaurent {
        HalfLaurent::from_terms(terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = u(&[(1, 1), (-1, -1)]);
        let b = u(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, u(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn additive_inverse() {
        let p = u(&[(3, 2), (0, -7), (-5, 1)]);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn square_of_z() {
        let z = HalfLaurent::z();
        assert_eq!(&z * &z, u(&[(2, 1), (0, -2), (-2, 1)]));
    }

    #[test]
    fn conway_conversions() {
        let p = u(&[(2, 1), (0, -1), (-2, 1)]);
        assert_eq!(
            p.to_conway().unwrap(),
            ConwayPoly::from_terms([(2, 1), (0, 1)])
        );
        assert_eq!(
            HalfLaurent::one().to_conway().unwrap(),
            ConwayPoly::from_terms([(0, 1)])
        );
        assert_eq!(
            HalfLaurent::z().to_conway().unwrap(),
            ConwayPoly::from_terms([(1, 1)])
        );
        assert!(HalfLaurent::zero().to_conway().unwrap().is_zero());
    }

    #[test]
    fn not_conway() {
        assert!(HalfLaurent::u_pow(2).to_conway().is_err());
        assert!(HalfLaurent::u_pow(-1).to_conway().is_err());
        assert!(u(&[(1, 1), (-1, 1)]).to_conway().is_err());
    }

    #[test]
    fn neg_z_substitution() {
        let even = ConwayPoly::from_terms([(2, 1), (0, 1)]);
        assert_eq!(even.substitute_neg_z(), even);
        let z = ConwayPoly::from_terms([(1, 1)]);
        assert_eq!(z.substitute_neg_z(), ConwayPoly::from_terms([(1, -1)]));
        let cubic = ConwayPoly::from_terms([(3, 1), (1, -1)]);
        assert_eq!(
            cubic.substitute_neg_z(),
            ConwayPoly::from_terms([(3, -1), (1, 1)])
        );
    }

    #[test]
    fn units() {
        let p = u(&[(2, 1), (1, -1), (0, 1)]);
        let q = -&p.shift(-2);
        assert!(p.equal_up_to_unit(&q));
        assert!(HalfLaurent::zero().equal_up_to_unit(&HalfLaurent::zero()));
        assert!(!p.equal_up_to_unit(&HalfLaurent::zero()));
        // u^2 - u + 1 against u^2 + u + 1: checked over every shift in a
        // window well beyond both spans.
        let r = u(&[(2, 1), (1, 1), (0, 1)]);
        for k in -6..=6 {
            assert_ne!(p, r.shift(k));
            assert_ne!(p, -&r.shift(k));
        }
        assert!(!p.equal_up_to_unit(&r));
    }

    #[test]
    fn rendering() {
        let p = u(&[(2, 1), (0, -1), (-2, 1)]);
        assert_eq!(p.to_t_string(), "t^{-1} - 1 + t");
        assert_eq!(u(&[(1, 1), (-1, -1)]).to_t_string(), "-t^{-1/2} + t^{1/2}");
        assert_eq!(HalfLaurent::zero().to_t_string(), "0");
        assert_eq!(u(&[(4, -3)]).to_t_string(), "-3t^{2}");
        let c = ConwayPoly::from_terms([(2, 1), (0, 1)]);
        assert_eq!(c.to_z_string(), "z^2 + 1");
        assert_eq!(
            ConwayPoly::from_terms([(2, -1), (0, 1)]).to_z_string(),
            "-z^2 + 1"
        );
        assert_eq!(ConwayPoly::from_terms([(1, 1)]).to_z_string(), "z");
    }

    #[test]
    fn json_shape() {
        let p = u(&[(2, 1), (0, -1), (-2, 1)]);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v, serde_json::json!({"u": {"-2": 1, "0": -1, "2": 1}}));
        let back: HalfLaurent = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
        let c = ConwayPoly::from_terms([(2, 1), (0, 1)]);
        assert_eq!(
            serde_json::to_value(&c).unwrap(),
            serde_json::json!({"z": {"0": 1, "2": 1}})
        );
        let big = HalfLaurent::monomial(0, BigInt::from(i64::MAX) * 4);
        let text = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<HalfLaurent>(&text).unwrap(), big);
    }

    #[test]
    fn exact_division() {
        let a = u(&[(2, 1), (1, -1), (0, 1)]);
        let b = u(&[(3, 2), (-1, 5)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(a.div_exact(&u(&[(0, 2)])).is_none());
        assert!(HalfLaurent::one().div_exact(&HalfLaurent::z()).is_none());
    }

    fn arb_poly() -> impl Strategy<Value = HalfLaurent> {
        prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(HalfLaurent::from_terms)
    }

    fn arb_conway() -> impl Strategy<Value = ConwayPoly> {
        prop::collection::vec((0u32..=7, -20i64..=20), 0..5).prop_map(ConwayPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &HalfLaurent::one(), a.clone());
        }

        #[test]
        fn conway_round_trip(c in arb_conway()) {
            let p = c.from_conway();
            prop_assert_eq!(p.to_conway().unwrap(), c.clone());
            prop_assert_eq!(p.invert_variable().to_conway().unwrap(), c.substitute_neg_z());
        }

        #[test]
        fn unit_multiples_detected(a in arb_poly(), k in -5i64..=5, neg in any::<bool>()) {
            let b = if neg { -&a.shift(k) } else { a.shift(k) };
            prop_assert!(a.equal_up_to_unit(&b));
        }
    }
}
