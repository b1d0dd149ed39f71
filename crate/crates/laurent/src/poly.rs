use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::{ExactRational, LaurentError};

/// An element of `Z[q, q^-1]`, stored as exponent → nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// Integer constant.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<C: Into<BigInt>>(it: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `q^e` (zero when absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// If `self = c * q^e`, returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`, i.e. the coefficient sum.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact value at `q = q0`; `q0` must be nonzero.
    pub fn eval(&self, q0: &ExactRational) -> Result<ExactRational, LaurentError> {
        if q0.is_zero() {
            return Err(LaurentError::InvalidArgument(
                "q must be invertible; cannot evaluate at 0".into(),
            ));
        }
        let mut acc = ExactRational::zero();
        for (e, c) in &self.terms {
            let e32 = i32::try_from(*e).map_err(|_| {
                LaurentError::InvalidArgument(format!("exponent {e} too large to evaluate"))
            })?;
            acc += ExactRational::from_integer(c.clone()) * num_traits::pow::Pow::pow(q0, e32);
        }
        Ok(acc)
    }

    /// Integer power; negative exponents are allowed only for monomials `±q^e`.
    pub fn pow(&self, k: i64) -> Option<Self> {
        if k >= 0 {
            let mut acc = Self::one();
            for _ in 0..k {
                acc = &acc * self;
            }
            return Some(acc);
        }
        let (c, e) = self.as_monomial()?;
        if c.abs().is_one() {
            let sign = if c.is_negative() && k % 2 != 0 { -1 } else { 1 };
            Some(Self::monomial(sign, e * k))
        } else {
            None
        }
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &Self, sign: i32) {
        for (e, c) in &other.terms {
            let c = if sign < 0 { -c } else { c.clone() };
            self.add_term(*e, c);
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::q_pow(0)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $asg:ident, $am:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
        impl $asg<&LaurentPoly> for LaurentPoly {
            fn $am(&mut self, rhs: &LaurentPoly) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $asg<LaurentPoly> for LaurentPoly {
            fn $am(&mut self, rhs: LaurentPoly) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, |a, b| {
    let mut out = a.clone();
    out.add_scaled(b, 1);
    out
});
binop!(Sub, sub, SubAssign, sub_assign, |a, b| {
    let mut out = a.clone();
    out.add_scaled(b, -1);
    out
});
binop!(Mul, mul, MulAssign, mul_assign, |a, b| a.mul_ref(b));

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for p in iter {
            acc.add_scaled(&p, 1);
        }
        acc
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for p in iter {
            acc.add_scaled(p, 1);
        }
        acc
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a.mul_ref(&b))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k == 0 {
                write!(f, "{c}*q^{e}")?;
            } else if c.is_negative() {
                write!(f, " - {}*q^{e}", -c)?;
            } else {
                write!(f, " + {c}*q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse Laurent polynomial at byte {offset}: {msg}")]
pub struct ParsePolyError {
    pub offset: usize,
    pub msg: String,
}

/// Accepts the `Display` form as well as looser input such as
/// `q^-1 + q`, `-2q^3`, `3*q`, `q^2-1`.
impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let b = s.as_bytes();
        let err = |offset: usize, msg: &str| ParsePolyError { offset, msg: msg.to_string() };
        let mut i = 0;
        let skip_ws = |i: &mut usize| {
            while *i < b.len() && b[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let read_int = |i: &mut usize| -> Option<BigInt> {
            let start = *i;
            while *i < b.len() && b[*i].is_ascii_digit() {
                *i += 1;
            }
            (start < *i).then(|| s[start..*i].parse().unwrap())
        };
        let mut out = LaurentPoly::zero();
        skip_ws(&mut i);
        if i == b.len() {
            return Err(err(0, "empty input"));
        }
        let mut first = true;
        while i < b.len() {
            skip_ws(&mut i);
            let mut neg = false;
            if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
                neg = b[i] == b'-';
                i += 1;
                skip_ws(&mut i);
            } else if !first {
                return Err(err(i, "expected '+' or '-'"));
            }
            first = false;
            let term_start = i;
            let coeff = read_int(&mut i);
            skip_ws(&mut i);
            let mut exp = 0i64;
            let mut has_q = false;
            if i < b.len() && b[i] == b'*' {
                if coeff.is_none() {
                    return Err(err(i, "unexpected '*'"));
                }
                i += 1;
                skip_ws(&mut i);
                if i >= b.len() || b[i] != b'q' {
                    return Err(err(i, "expected 'q' after '*'"));
                }
            }
            if i < b.len() && b[i] == b'q' {
                has_q = true;
                exp = 1;
                i += 1;
                skip_ws(&mut i);
                if i < b.len() && b[i] == b'^' {
                    i += 1;
                    skip_ws(&mut i);
                    let mut eneg = false;
                    if i < b.len() && (b[i] == b'-' || b[i] == b'+') {
                        eneg = b[i] == b'-';
                        i += 1;
                    }
                    let at = i;
                    let v = read_int(&mut i).ok_or_else(|| err(at, "expected exponent"))?;
                    let v: i64 = v.try_into().map_err(|_| err(at, "exponent out of range"))?;
                    exp = if eneg { -v } else { v };
                }
            }
            if coeff.is_none() && !has_q {
                return Err(err(term_start, "expected a term"));
            }
            let c = coeff.unwrap_or_else(BigInt::one);
            out.add_term(exp, if neg { -c } else { c });
            skip_ws(&mut i);
        }
        Ok(out)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponent strings to decimal coefficient strings")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<LaurentPoly, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((k, v)) = map.next_entry::<String, String>()? {
                    let e: i64 = k.parse().map_err(de::Error::custom)?;
                    let c: BigInt = v.parse().map_err(de::Error::custom)?;
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }
        de.deserialize_map(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let p = LaurentPoly::from_terms([(-1, -1), (3, 1)]);
        assert_eq!(p.to_string(), "-1*q^-1 + 1*q^3");
        assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert_eq!(
            "q^3 - q".parse::<LaurentPoly>().unwrap(),
            LaurentPoly::from_terms([(3, 1), (1, -1)])
        );
        assert_eq!("-2q^-2+5".parse::<LaurentPoly>().unwrap(), LaurentPoly::from_terms([(-2, -2), (0, 5)]));
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("1 2".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn cancellation_is_canonical() {
        let a = LaurentPoly::q_pow(2) + LaurentPoly::one();
        let b = a.clone() - LaurentPoly::one();
        assert_eq!(b, LaurentPoly::q_pow(2));
        assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn negative_powers_of_units() {
        let p = LaurentPoly::monomial(-1, 2);
        assert_eq!(p.pow(-3).unwrap(), LaurentPoly::monomial(-1, -6));
        assert!(LaurentPoly::constant(2).pow(-1).is_none());
    }

    #[test]
    fn eval_rejects_zero() {
        assert!(LaurentPoly::q_pow(1).eval(&ExactRational::zero()).is_err());
        assert!(LaurentPoly::zero().eval(&ExactRational::zero()).is_err());
    }
}
