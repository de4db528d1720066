//! Coefficient intervals `[lo, hi]` with possibly infinite ends, tagged with
//! the bound assumptions they depend on.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A bound on an untracked family of coefficients that some class relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Assumption {
    /// Pulled-back slope divisor: every `δ_{i≥1}` family has coefficient `<= -1`.
    SlopeTail,
    /// Sporadic slope divisors: same `-1` bound on a tail that is not printed anywhere.
    SporadicTail,
    /// Weierstrass classes: `δ_{i≥1}` families bounded by `0` only.
    WeierstrassHigherGenus,
    /// Weierstrass classes: `δ_{0,s}` for `s >= 3` bounded by `-max(s, b)`.
    WeierstrassRationalTail,
    /// `T_g`, `F_{g,m}`, `F̃_{g,m}`: all untracked boundary terms `<= -2`.
    CatalogTail,
}

impl Assumption {
    /// Bounds the artifact declares itself rather than reading off a printed statement.
    pub fn is_declared(&self) -> bool {
        matches!(
            self,
            Assumption::SlopeTail | Assumption::SporadicTail | Assumption::WeierstrassHigherGenus
        )
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Assumption::SlopeTail => {
                "declared: slope divisor δ_{i≥1} coefficients ≤ −1 after δ_irr-normalization (Brill–Noether ratio 6i(g−i)/(g+1) ≥ 1)"
            }
            Assumption::SporadicTail => {
                "declared: sporadic slope divisor tail assumed ≤ −1 (assumption: sporadic tail)"
            }
            Assumption::WeierstrassHigherGenus => {
                "declared: Weierstrass δ_{i≥1} coefficients bounded by 0 only"
            }
            Assumption::WeierstrassRationalTail => {
                "quoted: Weierstrass δ_{0,s} (s ≥ 3) coefficients ≤ −max(s, b_2) from w_s ≥ s·w_ψ and b_s > b_2"
            }
            Assumption::CatalogTail => "quoted: T/F/F̃ higher-order boundary coefficients ≤ −2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Ext {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Ext::Finite(q) => Some(q),
            _ => None,
        }
    }

    fn add(&self, other: &Ext) -> Ext {
        match (self, other) {
            (Ext::Finite(a), Ext::Finite(b)) => Ext::Finite(a + b),
            (Ext::NegInf, Ext::PosInf) | (Ext::PosInf, Ext::NegInf) => {
                unreachable!("lower ends are never +inf and upper ends never -inf")
            }
            (Ext::NegInf, _) | (_, Ext::NegInf) => Ext::NegInf,
            (Ext::PosInf, _) | (_, Ext::PosInf) => Ext::PosInf,
        }
    }

    fn scale(&self, s: &Rational) -> Ext {
        match self {
            Ext::Finite(a) => Ext::Finite(a * s),
            _ if s.is_zero() => Ext::Finite(Rational::zero()),
            Ext::NegInf if s.is_positive() => Ext::NegInf,
            Ext::NegInf => Ext::PosInf,
            Ext::PosInf if s.is_positive() => Ext::PosInf,
            Ext::PosInf => Ext::NegInf,
        }
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::NegInf => f.write_str("-inf"),
            Ext::PosInf => f.write_str("+inf"),
            Ext::Finite(q) => write!(f, "{q}"),
        }
    }
}

impl std::str::FromStr for Ext {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" => Ok(Ext::NegInf),
            "+inf" | "inf" => Ok(Ext::PosInf),
            other => Ok(Ext::Finite(other.parse()?)),
        }
    }
}

impl Serialize for Ext {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Ext {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A coefficient known to lie in `[lo, hi]`. Exact coefficients are `[q, q]`.
///
/// Equality compares the ends only; the assumption tags are bookkeeping.
#[derive(Clone, Debug, Eq)]
pub struct CoefInterval {
    lo: Ext,
    hi: Ext,
    deps: BTreeSet<Assumption>,
}

impl PartialEq for CoefInterval {
    fn eq(&self, other: &Self) -> bool {
        self.lo == other.lo && self.hi == other.hi
    }
}

impl Default for CoefInterval {
    fn default() -> Self {
        CoefInterval::zero()
    }
}

impl CoefInterval {
    pub fn exact(q: Rational) -> Self {
        CoefInterval {
            lo: Ext::Finite(q.clone()),
            hi: Ext::Finite(q),
            deps: BTreeSet::new(),
        }
    }

    pub fn zero() -> Self {
        Self::exact(Rational::zero())
    }

    pub fn new(lo: Ext, hi: Ext) -> Result<Self> {
        if lo == Ext::PosInf || hi == Ext::NegInf || lo > hi {
            return Err(Error::Domain(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(CoefInterval {
            lo,
            hi,
            deps: BTreeSet::new(),
        })
    }

    /// `(-inf, hi]` resting on `why`.
    pub fn at_most(hi: Rational, why: Assumption) -> Self {
        CoefInterval {
            lo: Ext::NegInf,
            hi: Ext::Finite(hi),
            deps: BTreeSet::from([why]),
        }
    }

    pub fn lo(&self) -> &Ext {
        &self.lo
    }

    pub fn hi(&self) -> &Ext {
        &self.hi
    }

    pub fn assumptions(&self) -> &BTreeSet<Assumption> {
        &self.deps
    }

    pub fn is_exact(&self) -> bool {
        matches!((&self.lo, &self.hi), (Ext::Finite(a), Ext::Finite(b)) if a == b)
    }

    pub fn exact_value(&self) -> Option<&Rational> {
        match (&self.lo, &self.hi) {
            (Ext::Finite(a), Ext::Finite(b)) if a == b => Some(a),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.exact_value().is_some_and(|q| q.is_zero())
    }

    pub fn contains(&self, q: &Rational) -> bool {
        let above = match &self.lo {
            Ext::NegInf => true,
            Ext::Finite(a) => a <= q,
            Ext::PosInf => false,
        };
        let below = match &self.hi {
            Ext::PosInf => true,
            Ext::Finite(b) => q <= b,
            Ext::NegInf => false,
        };
        above && below
    }

    /// True when every value in the interval is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        matches!(&self.lo, Ext::Finite(a) if !a.is_negative())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return CoefInterval::zero();
        }
        let (lo, hi) = if s.is_negative() {
            (self.hi.scale(s), self.lo.scale(s))
        } else {
            (self.lo.scale(s), self.hi.scale(s))
        };
        CoefInterval {
            lo,
            hi,
            deps: self.deps.clone(),
        }
    }

    pub fn add(&self, other: &CoefInterval) -> Self {
        let mut deps = self.deps.clone();
        deps.extend(other.deps.iter().copied());
        let out = CoefInterval {
            lo: self.lo.add(&other.lo),
            hi: self.hi.add(&other.hi),
            deps,
        };
        out.normalized()
    }

    /// `self + s · other`.
    pub fn add_scaled(&self, other: &CoefInterval, s: &Rational) -> Self {
        self.add(&other.scale(s))
    }

    fn normalized(mut self) -> Self {
        if self.is_exact() {
            self.deps.clear();
        }
        self
    }
}

impl Add for &CoefInterval {
    type Output = CoefInterval;
    fn add(self, rhs: &CoefInterval) -> CoefInterval {
        CoefInterval::add(self, rhs)
    }
}

impl Sub for &CoefInterval {
    type Output = CoefInterval;
    fn sub(self, rhs: &CoefInterval) -> CoefInterval {
        CoefInterval::add(self, &-rhs)
    }
}

impl Neg for &CoefInterval {
    type Output = CoefInterval;
    fn neg(self) -> CoefInterval {
        self.scale(&Rational::from_int(-1))
    }
}

impl From<Rational> for CoefInterval {
    fn from(q: Rational) -> Self {
        CoefInterval::exact(q)
    }
}

impl fmt::Display for CoefInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact_value() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "[{}, {}]", self.lo, self.hi),
        }
    }
}

/// Wire shape: `{"lo": "p/q" | "-inf", "hi": "p/q" | "+inf"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub lo: Ext,
    pub hi: Ext,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assumptions: Vec<Assumption>,
}

impl From<&CoefInterval> for IntervalJson {
    fn from(iv: &CoefInterval) -> Self {
        IntervalJson {
            lo: iv.lo.clone(),
            hi: iv.hi.clone(),
            assumptions: iv.deps.iter().copied().collect(),
        }
    }
}

impl TryFrom<&IntervalJson> for CoefInterval {
    type Error = Error;
    fn try_from(js: &IntervalJson) -> Result<Self> {
        let mut iv = CoefInterval::new(js.lo.clone(), js.hi.clone())?;
        iv.deps = js.assumptions.iter().copied().collect();
        Ok(iv.normalized())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d)
    }

    #[test]
    fn scaling_flips_and_keeps_tags() {
        let iv = CoefInterval::at_most(q(-3, 1), Assumption::WeierstrassRationalTail);
        let s = iv.scale(&q(1, 2));
        assert_eq!(s.lo(), &Ext::NegInf);
        assert_eq!(s.hi(), &Ext::Finite(q(-3, 2)));
        let t = iv.scale(&q(-2, 1));
        assert_eq!(t.lo(), &Ext::Finite(q(6, 1)));
        assert_eq!(t.hi(), &Ext::PosInf);
        assert!(t.assumptions().contains(&Assumption::WeierstrassRationalTail));
        assert!(iv.scale(&Rational::zero()).is_zero());
    }

    #[test]
    fn subtraction_of_upper_bounded_terms_gives_lower_bound() {
        let k = CoefInterval::exact(q(-2, 1));
        let w = CoefInterval::at_most(q(-3, 1), Assumption::WeierstrassRationalTail);
        let rem = &k - &w.scale(&q(1, 1));
        assert_eq!(rem.lo(), &Ext::Finite(q(1, 1)));
        assert_eq!(rem.hi(), &Ext::PosInf);
        assert!(rem.is_nonnegative());
        assert!(rem.contains(&q(100, 1)));
        assert!(!rem.contains(&q(0, 1)));
    }

    #[test]
    fn exact_sums_drop_tags() {
        let a = CoefInterval::exact(q(1, 3));
        let b = CoefInterval::exact(q(2, 3));
        let s = &a + &b;
        assert_eq!(s.exact_value(), Some(&q(1, 1)));
        assert!(s.assumptions().is_empty());
        assert!(CoefInterval::new(Ext::Finite(q(1, 1)), Ext::Finite(q(0, 1))).is_err());
        assert!(CoefInterval::new(Ext::PosInf, Ext::PosInf).is_err());
    }

    #[test]
    fn json_shape() {
        let iv = CoefInterval::at_most(q(-2, 1), Assumption::CatalogTail);
        let js = serde_json::to_value(IntervalJson::from(&iv)).unwrap();
        assert_eq!(js["lo"], "-inf");
        assert_eq!(js["hi"], "-2");
        let back: IntervalJson = serde_json::from_value(js).unwrap();
        assert_eq!(CoefInterval::try_from(&back).unwrap(), iv);
    }
}
