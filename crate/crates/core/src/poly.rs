//! Exact Laurent polynomials in `A` with nonnegative powers of `t`.
//!
//! Coefficients are exact integers. The machine-word backend (`i64`) fails
//! with [`Error::Overflow`] instead of wrapping; [`BigInt`] never overflows.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub trait Coefficient: Clone + Eq + Ord + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_u64(v: u64) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn checked_add(&self, other: &Self) -> Option<Self>;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;
    fn parse(s: &str) -> Option<Self>;
    fn to_value(&self) -> Value;

    fn one() -> Self {
        Self::from_i64(1)
    }
}

impl Coefficient for i64 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn from_u64(v: u64) -> Option<Self> {
        i64::try_from(v).ok()
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        i64::checked_add(*self, *other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other)
    }
    fn checked_neg(&self) -> Option<Self> {
        i64::checked_neg(*self)
    }
    fn parse(s: &str) -> Option<Self> {
        s.parse().ok()
    }
    fn to_value(&self) -> Value {
        json!(*self)
    }
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        BigInt::from(0)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_u64(v: u64) -> Option<Self> {
        Some(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        *self == BigInt::from(0)
    }
    fn is_negative(&self) -> bool {
        self.sign() == num_bigint::Sign::Minus
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn parse(s: &str) -> Option<Self> {
        s.parse().ok()
    }
    fn to_value(&self) -> Value {
        json!(self.to_string())
    }
}

/// Key of a term `A^a t^t`. Orders by `t` first, then `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub t: u32,
    pub a: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C: Coefficient> {
    terms: BTreeMap<Monomial, C>,
}

/// The bracket-valued polynomial with checked machine-word coefficients.
pub type SkeinPolynomial = Poly<i64>;
/// Arbitrary-precision variant.
pub type BigSkeinPolynomial = Poly<BigInt>;

impl<C: Coefficient> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0, 0)
    }

    pub fn monomial(coef: C, a: i32, t: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(Monomial { t, a }, coef);
        }
        Poly { terms }
    }

    /// `-A^2 - A^-2`, the value of a disjoint trivial circle.
    pub fn delta() -> Self {
        let m1 = C::from_i64(-1);
        let mut terms = BTreeMap::new();
        terms.insert(Monomial { t: 0, a: -2 }, m1.clone());
        terms.insert(Monomial { t: 0, a: 2 }, m1);
        Poly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, u32, C)>) -> Result<Self> {
        let mut p = Self::zero();
        for (a, t, c) in terms {
            p.add_term(a, t, &c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(a_exp, t_exp, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, u32, &C)> + '_ {
        self.terms.iter().map(|(m, c)| (m.a, m.t, c))
    }

    pub fn coefficient(&self, a: i32, t: u32) -> C {
        self.terms.get(&Monomial { t, a }).cloned().unwrap_or_else(C::zero)
    }

    pub(crate) fn add_term(&mut self, a: i32, t: u32, c: &C) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        let key = Monomial { t, a };
        match self.terms.get_mut(&key) {
            Some(v) => {
                let s = v.checked_add(c).ok_or(Error::Overflow)?;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.a, m.t, c)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(*m, c.checked_neg().ok_or(Error::Overflow)?);
        }
        Ok(Poly { terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1.checked_mul(c2).ok_or(Error::Overflow)?;
                let a = m1.a.checked_add(m2.a).ok_or(Error::Overflow)?;
                let t = m1.t.checked_add(m2.t).ok_or(Error::Overflow)?;
                out.add_term(a, t, &c)?;
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self> {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(out)
    }

    /// Multiplies by `coef * A^a * t^t`.
    pub fn scale(&self, coef: &C, a: i32, t: u32) -> Result<Self> {
        let mut terms = BTreeMap::new();
        if coef.is_zero() {
            return Ok(Self::zero());
        }
        for (m, c) in &self.terms {
            let key = Monomial {
                t: m.t.checked_add(t).ok_or(Error::Overflow)?,
                a: m.a.checked_add(a).ok_or(Error::Overflow)?,
            };
            terms.insert(key, c.checked_mul(coef).ok_or(Error::Overflow)?);
        }
        Ok(Poly { terms })
    }

    /// Substitutes `A -> A^-1`.
    pub fn invert_a(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (Monomial { t: m.t, a: -m.a }, c.clone())).collect() }
    }

    /// Substitutes `t -> 1`.
    pub fn at_t_one(&self) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.a, 0, c)?;
        }
        Ok(out)
    }

    pub fn max_t(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.t).max()
    }

    pub fn max_a(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.a).max()
    }

    pub fn min_a(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.a).min()
    }

    /// Structured-object form: a list of `{a, t, coef}` terms.
    pub fn to_object(&self) -> Value {
        Value::Array(self.terms.iter().map(|(m, c)| json!({ "a": m.a, "t": m.t, "coef": c.to_value() })).collect())
    }

    /// Display form in `q = A^-4`: exponents `-a/4` as exact rationals.
    pub fn to_q_string(&self) -> String {
        let mut terms: Vec<(u32, i32, &C)> = self.terms.iter().map(|(m, c)| (m.t, -m.a, c)).collect();
        terms.sort_by_key(|&(t, qa, _)| (t, qa));
        join_terms(terms.into_iter().map(|(t, qa, c)| {
            let mut body = String::new();
            if qa != 0 {
                let g = qa.gcd(&4);
                let (num, den) = (qa / g, 4 / g);
                if den == 1 {
                    body.push_str(&format!("*q^{num}"));
                } else {
                    body.push_str(&format!("*q^({num}/{den})"));
                }
            }
            if t != 0 {
                body.push_str(&format!("*t^{t}"));
            }
            (c, body)
        }))
    }
}

impl Poly<i64> {
    pub fn to_big(&self) -> Poly<BigInt> {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, BigInt::from(*c))).collect() }
    }
}

fn join_terms<'a, C: Coefficient>(terms: impl Iterator<Item = (&'a C, String)>) -> String {
    let mut out = String::new();
    for (i, (c, body)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = if neg { c.checked_neg().expect("nonzero") } else { c.clone() };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&abs.to_string());
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<C: Coefficient> fmt::Display for Poly<C> {
    /// Canonical text: `coef*A^a*t^k` terms sorted by `(t, a)`; factors with
    /// a zero exponent are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = join_terms(self.terms.iter().map(|(m, c)| {
            let mut body = String::new();
            if m.a != 0 {
                body.push_str(&format!("*A^{}", m.a));
            }
            if m.t != 0 {
                body.push_str(&format!("*t^{}", m.t));
            }
            (c, body)
        }));
        f.write_str(&s)
    }
}

impl<C: Coefficient> FromStr for Poly<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Unsupported(format!("polynomial text: {msg}"));
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens == ["0"] {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        let mut i = 0;
        let mut negate = false;
        while i < tokens.len() {
            if i > 0 {
                negate = match tokens[i] {
                    "+" => false,
                    "-" => true,
                    _ => return Err(bad("expected `+` or `-`")),
                };
                i += 1;
            }
            let term = tokens.get(i).ok_or_else(|| bad("dangling operator"))?;
            i += 1;
            let mut parts = term.split('*');
            let coef_str = parts.next().unwrap_or_default();
            let mut coef = C::parse(coef_str).ok_or_else(|| bad("coefficient"))?;
            if negate {
                coef = coef.checked_neg().ok_or(Error::Overflow)?;
            }
            let (mut a, mut t) = (0i32, 0u32);
            for factor in parts {
                if let Some(e) = factor.strip_prefix("A^") {
                    a = e.parse().map_err(|_| bad("A exponent"))?;
                } else if let Some(e) = factor.strip_prefix("t^") {
                    t = e.parse().map_err(|_| bad("t exponent"))?;
                } else {
                    return Err(bad("factor"));
                }
            }
            p.add_term(a, t, &coef)?;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = SkeinPolynomial;

    #[test]
    fn delta_text() {
        assert_eq!(P::delta().to_string(), "-1*A^-2 - 1*A^2");
        let dt = P::delta().scale(&1, 0, 1).unwrap();
        assert_eq!(dt.to_string(), "-1*A^-2*t^1 - 1*A^2*t^1");
    }

    #[test]
    fn constant_and_t() {
        assert_eq!(P::one().to_string(), "1");
        assert_eq!(P::monomial(1, 0, 1).to_string(), "1*t^1");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn terms_sorted_by_t_then_a() {
        let p = P::from_terms([(5, 0, 1), (-3, 1, 2), (-7, 0, -4)]).unwrap();
        assert_eq!(p.to_string(), "-4*A^-7 + 1*A^5 + 2*A^-3*t^1");
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = P::delta();
        let z = p.checked_add(&p.checked_neg().unwrap()).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn overflow_is_detected() {
        let p = P::monomial(i64::MAX, 0, 0);
        assert_eq!(p.checked_add(&P::one()), Err(Error::Overflow));
        assert_eq!(p.checked_mul(&P::monomial(2, 1, 0)), Err(Error::Overflow));
        assert!(P::monomial(i64::MIN, 0, 0).checked_neg().is_err());
    }

    #[test]
    fn big_backend_does_not_overflow() {
        let p = P::monomial(i64::MAX, 0, 0).to_big();
        let q = p.checked_add(&p).unwrap();
        assert_eq!(q.coefficient(0, 0), BigInt::from(i64::MAX) * 2);
    }

    #[test]
    fn delta_powers() {
        let d3 = P::delta().checked_pow(3).unwrap();
        assert_eq!(d3.to_string(), "-1*A^-6 - 3*A^-2 - 3*A^2 - 1*A^6");
        assert_eq!(P::delta().checked_pow(0).unwrap(), P::one());
    }

    #[test]
    fn q_display() {
        let p = P::from_terms([(-16, 0, -1), (-12, 0, 1), (-4, 0, 1)]).unwrap();
        assert_eq!(p.to_q_string(), "1*q^1 + 1*q^3 - 1*q^4");
        let h = P::from_terms([(-2, 0, -1), (-10, 0, -1)]).unwrap();
        assert_eq!(h.to_q_string(), "-1*q^(1/2) - 1*q^(5/2)");
        assert_eq!(P::monomial(3, 1, 2).to_q_string(), "3*q^(-1/4)*t^2");
    }

    #[test]
    fn object_form() {
        let v = P::monomial(-1, 3, 0).to_object();
        assert_eq!(v, json!([{ "a": 3, "t": 0, "coef": -1 }]));
    }
}
