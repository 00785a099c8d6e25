//! Laurent polynomials in one variable `q` with integer coefficients.
//!
//! [`LaurentPoly`] keeps its terms in a sorted map from exponent to a
//! nonzero [`BigInt`] coefficient, so structural equality is ring equality.
//! Values can be specialized at a nonzero complex number or at a unit of
//! `Z/pZ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The Mersenne prime 2^61 - 1, used for all modular fingerprints.
pub const MODULUS: u64 = (1 << 61) - 1;

/// A complex specialization point for `q`.
pub type ComplexValue = Complex64;

/// An element of `Z/pZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModularValue {
    residue: u64,
    modulus: u64,
}

#[allow(clippy::should_implement_trait)]
impl ModularValue {
    /// Residue `value mod MODULUS`.
    pub fn new(value: u64) -> Self {
        Self::with_modulus(value, MODULUS)
    }

    pub fn with_modulus(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        Self {
            residue: value % modulus,
            modulus,
        }
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn add(self, other: Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Self {
            residue: add_mod(self.residue, other.residue, self.modulus),
            modulus: self.modulus,
        }
    }

    pub fn mul(self, other: Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Self {
            residue: mul_mod(self.residue, other.residue, self.modulus),
            modulus: self.modulus,
        }
    }

    pub fn pow(self, exp: u64) -> Self {
        Self {
            residue: pow_mod(self.residue, exp, self.modulus),
            modulus: self.modulus,
        }
    }

    /// Multiplicative inverse, `None` when the residue is not a unit.
    pub fn inverse(self) -> Option<Self> {
        inv_mod(self.residue, self.modulus).map(|residue| Self {
            residue,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for ModularValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % m as u128) as u64
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let g = i128::from(a % m).extended_gcd(&i128::from(m));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.mod_floor(&i128::from(m)) as u64)
}

/// The unit `sign * q^exponent` of `Z[q, q^-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unit {
    pub negative: bool,
    pub exponent: i64,
}

/// An element of `Z[q, q^-1]`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Returns the sign and exponent when `self = ±q^k`.
    pub fn as_unit(&self) -> Option<Unit> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&k, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some(Unit {
                negative: false,
                exponent: k,
            })
        } else if (-c).is_one() {
            Some(Unit {
                negative: true,
                exponent: k,
            })
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    /// Exact quotient `self / divisor` in `Z[q, q^-1]`.
    ///
    /// Both operands are reduced to ordinary polynomials with nonzero
    /// constant term; since `q` does not divide the divisor, divisibility in
    /// the Laurent ring is divisibility in `Z[q]`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(dlo), Some(dhi)) = (divisor.min_exponent(), divisor.max_exponent()) else {
            return Err(Error::NotDivisible);
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(u) = divisor.as_unit() {
            let p = self.shift(-u.exponent);
            return Ok(if u.negative { -p } else { p });
        }
        let lo = self.min_exponent().unwrap();
        let hi = self.max_exponent().unwrap();
        if hi - lo < dhi - dlo {
            return Err(Error::NotDivisible);
        }

        // dense coefficient vectors, index = exponent - low
        let mut rem: Vec<BigInt> = dense(self, lo, hi);
        let den: Vec<BigInt> = dense(divisor, dlo, dhi);
        let lead = den.last().unwrap();
        let dlen = den.len();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        let base = lo - dlo;
        Ok(Self::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (base + i as i64, c)),
        ))
    }

    /// Evaluates at a nonzero complex `q0`.
    pub fn eval_complex(&self, q0: ComplexValue) -> Result<ComplexValue> {
        if q0.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Ok(Complex64::zero());
        };
        let mut acc = Complex64::zero();
        for k in (lo..=hi).rev() {
            acc *= q0;
            if let Some(c) = self.terms.get(&k) {
                acc += c.to_f64().unwrap_or(f64::NAN);
            }
        }
        Ok(acc * q0.powi(lo as i32))
    }

    /// Evaluates at a unit of `Z/pZ`.
    pub fn eval_mod(&self, q0: ModularValue) -> Result<ModularValue> {
        let m = q0.modulus();
        let inv = q0.inverse().ok_or(Error::ZeroSpecialization)?;
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Ok(ModularValue::with_modulus(0, m));
        };
        let big_m = BigInt::from(m);
        let mut acc = 0u64;
        for k in (lo..=hi).rev() {
            acc = mul_mod(acc, q0.residue(), m);
            if let Some(c) = self.terms.get(&k) {
                let r = c.mod_floor(&big_m).to_u64().unwrap();
                acc = add_mod(acc, r, m);
            }
        }
        let scale = if lo >= 0 {
            q0.pow(lo as u64)
        } else {
            inv.pow(lo.unsigned_abs())
        };
        Ok(ModularValue::with_modulus(acc, m).mul(scale))
    }
}

fn dense(p: &LaurentPoly, lo: i64, hi: i64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (k, c) in p.terms() {
        v[(k - lo) as usize] = c.clone();
    }
    v
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Ascending exponents, e.g. `-q + q^3` or `1 - q + 2*q^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (&k, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if k == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            if k == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the display form and the usual variants of it: any term
    /// order, explicit `+ -`, `q^1`, `1*q`, and whitespace anywhere.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let err = |pos: usize, msg: &str| Error::Syntax {
            pos,
            msg: msg.to_string(),
        };
        if chars.is_empty() {
            return Err(err(0, "empty polynomial"));
        }
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        while i < chars.len() {
            let mut negative = false;
            let mut saw_sign = false;
            while i < chars.len() && (chars[i].1 == '+' || chars[i].1 == '-') {
                negative ^= chars[i].1 == '-';
                saw_sign = true;
                i += 1;
            }
            if i > 0 && !saw_sign {
                return Err(err(chars[i].0, "expected '+' or '-'"));
            }
            let start = i;
            while i < chars.len() && !(matches!(chars[i].1, '+' | '-') && chars[i - 1].1 != '^') {
                i += 1;
            }
            if start == i {
                let pos = chars.get(start).map_or(s.len(), |c| c.0);
                return Err(err(pos, "missing term"));
            }
            let body: String = chars[start..i].iter().map(|(_, c)| c).collect();
            let pos = chars[start].0;
            let (coef, exp) = parse_term(&body).ok_or_else(|| err(pos, "malformed term"))?;
            out.add_term(exp, if negative { -coef } else { coef });
        }
        Ok(out)
    }
}

fn parse_term(body: &str) -> Option<(BigInt, i64)> {
    let (coef, var) = match body.find('q') {
        None => return Some((body.parse().ok()?, 0)),
        Some(0) => (BigInt::one(), body),
        Some(p) => {
            let c = body[..p].strip_suffix('*')?;
            (c.parse().ok()?, &body[p..])
        }
    };
    let exp = match var.strip_prefix('q')? {
        "" => 1,
        rest => rest.strip_prefix('^')?.parse().ok()?,
    };
    Some((coef, exp))
}

// JSON form: {"k": c} with string exponent keys. Coefficients that fit in
// an i64 are written as numbers, larger ones as decimal strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            match c.to_i64() {
                Some(small) => map.serialize_entry(&k.to_string(), &small)?,
                None => map.serialize_entry(&k.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponent strings to integer coefficients")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<LaurentPoly, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((k, c)) = access.next_entry::<String, serde_json::Value>()? {
                    let k: i64 = k.parse().map_err(de::Error::custom)?;
                    let c: BigInt = match c {
                        serde_json::Value::Number(n) => n.to_string().parse().map_err(de::Error::custom)?,
                        serde_json::Value::String(s) => s.parse().map_err(de::Error::custom)?,
                        other => return Err(de::Error::custom(format!("bad coefficient {other}"))),
                    };
                    p.add_term(k, c);
                }
                Ok(p)
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}
