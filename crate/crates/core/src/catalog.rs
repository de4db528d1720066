//! Effective divisor templates: minimal-slope divisors on `M(g)`,
//! generalized Weierstrass divisors, and the classes `T_g`, `F_{g,m}`,
//! `F̃_{g,m}`. Untracked coefficient families carry declared upper bounds.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::SpaceId;
use crate::rational::{binomial, is_prime, Rational};
use crate::symmetry::{Assumption, BlockPartition, CoefInterval, IntervalJson, ProfileBasis, ProfileDivisorClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlopeProvenance {
    BrillNoether,
    GiesekerPetri,
    Sporadic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeEntry {
    pub g: u32,
    pub slope: Rational,
    pub provenance: SlopeProvenance,
}

impl SlopeEntry {
    pub fn tail_assumption(&self) -> Assumption {
        match self.provenance {
            SlopeProvenance::Sporadic => Assumption::SporadicTail,
            _ => Assumption::SlopeTail,
        }
    }

    /// `s·λ − δ_irr` on `M(g)` with every `δ_i` (`i >= 1`) bounded by `-1`.
    pub fn class(&self) -> Result<ProfileDivisorClass> {
        let space = SpaceId::new(self.g, 0)?;
        let basis = ProfileBasis::new(space, BlockPartition::single(0))?;
        let mut out = ProfileDivisorClass::zero(basis);
        out.set_lambda(CoefInterval::exact(self.slope.clone()));
        out.set_irr(CoefInterval::exact(Rational::from_int(-1)));
        for i in 1..=self.g / 2 {
            out.set_coefficient(i, &[], CoefInterval::at_most(Rational::from_int(-1), self.tail_assumption()))?;
        }
        Ok(out)
    }
}

const SPORADIC: [(u32, i64, i64); 4] = [(10, 7, 1), (12, 4415, 642), (16, 407, 61), (21, 2459, 377)];

const SLOPE_MEMO_MAX: u32 = 128;

fn compute_slope(g: u32) -> SlopeEntry {
    let gi = g as i64;
    let mut best: Option<SlopeEntry> = None;
    let mut offer = |slope: Rational, provenance| {
        if best.as_ref().is_none_or(|b| slope < b.slope) {
            best = Some(SlopeEntry { g, slope, provenance });
        }
    };
    if !is_prime(g as u64 + 1) {
        offer(Rational::from_int(6) + Rational::new(12, gi + 1), SlopeProvenance::BrillNoether);
    }
    if (g + 1) % 2 == 1 {
        offer(
            Rational::from_int(6) + Rational::new(14 * gi + 4, gi * gi + 2 * gi),
            SlopeProvenance::GiesekerPetri,
        );
    }
    if let Some(&(_, p, q)) = SPORADIC.iter().find(|(h, _, _)| *h == g) {
        offer(Rational::new(p, q), SlopeProvenance::Sporadic);
    }
    best.expect("g + 1 is either composite or odd")
}

/// The smallest known slope of an effective divisor on `M(g)`, for `g >= 4`.
pub fn slope_min(g: u32) -> Result<SlopeEntry> {
    if g < 4 {
        return Err(Error::Unsupported(format!("no slope divisor is catalogued for g = {g} < 4")));
    }
    static MEMO: OnceLock<Vec<SlopeEntry>> = OnceLock::new();
    if g <= SLOPE_MEMO_MAX {
        let memo = MEMO.get_or_init(|| (4..=SLOPE_MEMO_MAX).map(compute_slope).collect());
        return Ok(memo[(g - 4) as usize].clone());
    }
    Ok(compute_slope(g))
}

/// Weights for `W(g; a_1..a_m)`: `g = km + r`, `r` weights `k+1` then `m − r` weights `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassParams {
    pub g: u32,
    pub m: u32,
    pub k: u32,
    pub r: u32,
    pub weights: Vec<u32>,
}

pub fn weierstrass_params(g: u32, m: u32) -> Result<WeierstrassParams> {
    if m == 0 {
        return Err(Error::Domain("at least one weighted point is required".into()));
    }
    SpaceId::new(g, m)?;
    let (k, r) = (g / m, g % m);
    let weights = (0..m).map(|j| if j < r { k + 1 } else { k }).collect();
    Ok(WeierstrassParams { g, m, k, r, weights })
}

fn tri(a: u32) -> Rational {
    Rational::from_int(a as i64 * (a as i64 + 1) / 2)
}

/// `W(g; a_1..a_m)` on `M(g,m)` in the `ψ` basis, blocks grouped by weight.
///
/// Tracked: `−λ + Σ C(a_i+1, 2)·ω_i − Σ a_i a_j δ_{0,{i,j}}`. After the base
/// change the pair coefficient is `−C(a_i+a_j+1, 2)`; larger rational tails
/// keep only the `ω`-conversion bound and higher genus tails the bound `0`.
pub fn weierstrass_factor(g: u32, m: u32) -> Result<ProfileDivisorClass> {
    if m > g {
        return Err(Error::Unsupported(format!("W(g; a) needs m <= g, got m = {m} > g = {g}")));
    }
    let p = weierstrass_params(g, m)?;
    let sizes: Vec<u32> = [p.r, m - p.r].into_iter().filter(|&s| s > 0).collect();
    let block_weights: Vec<u32> = if p.r > 0 && p.r < m { vec![p.k + 1, p.k] } else { vec![p.weights[0]] };
    let space = SpaceId::new(g, m)?;
    let basis = ProfileBasis::new(space, BlockPartition::from_sizes(&sizes)?)?;
    let profiles = basis.profiles()?;
    let mut out = ProfileDivisorClass::zero(basis);
    out.set_lambda(CoefInterval::exact(Rational::from_int(-1)));
    for (b, &a) in block_weights.iter().enumerate() {
        out.set_psi(b, CoefInterval::exact(tri(a)));
    }
    for prof in profiles {
        let c = if prof.i > 0 {
            CoefInterval::at_most(Rational::zero(), Assumption::WeierstrassHigherGenus)
        } else {
            let mut weights = Vec::new();
            for (b, &cnt) in prof.counts.iter().enumerate() {
                weights.extend(std::iter::repeat_n(block_weights[b], cnt as usize));
            }
            let omega: Rational = weights.iter().map(|&a| tri(a)).sum();
            if weights.len() == 2 {
                CoefInterval::exact(-tri(weights[0] + weights[1]))
            } else {
                CoefInterval::at_most(-omega, Assumption::WeierstrassRationalTail)
            }
        };
        out.set_coefficient(prof.i, &prof.counts, c)?;
    }
    Ok(out)
}

/// Coefficients of the sum of `W(g; a)` pulled back along every projection `M(g,n) → M(g,m)`:
/// `−w_λ λ + w_ψ ψ − w_2 δ_{0,2} − ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassSum {
    pub g: u32,
    pub n: u32,
    pub m: u32,
    pub w_lambda: Rational,
    pub w_psi: Rational,
    pub w_2: Rational,
}

impl WeierstrassSum {
    /// Upper bound on the `δ_{0,s}` coefficient for `s >= 3`: `−s·w_ψ`.
    pub fn rational_tail_bound(&self, s: u32) -> CoefInterval {
        CoefInterval::at_most(-(Rational::from_int(s as i64) * &self.w_psi), Assumption::WeierstrassRationalTail)
    }

    pub fn higher_genus_bound(&self) -> CoefInterval {
        CoefInterval::at_most(Rational::zero(), Assumption::WeierstrassHigherGenus)
    }
}

pub fn weierstrass_summed(g: u32, n: u32, m: u32) -> Result<WeierstrassSum> {
    if m == 0 || m > n || m > g {
        return Err(Error::Domain(format!("need 1 <= m <= min(n, g), got g={g} n={n} m={m}")));
    }
    let p = weierstrass_params(g, m)?;
    let (n, m, k, r) = (n as i64, m as i64, p.k as i64, p.r as i64);
    let b = |a: i64, c: i64| Rational::from_bigint(binomial(a, c));
    let q = |x: i64| Rational::from_int(x);
    let w_lambda = b(n, r) * b(n - r, m - r);
    let w_psi = b(n - 1, r - 1) * b(n - r, m - r) * q((k + 1) * (k + 2)) / q(2)
        + b(n - 1, r) * b(n - r - 1, m - r - 1) * q(k * (k + 1)) / q(2);
    let w_2 = q(2) * &w_psi
        + b(n - 2, r - 2) * b(n - r, m - r) * q((k + 1) * (k + 1))
        + q(2) * b(n - 2, r - 1) * b(n - r - 1, m - r - 1) * q(k * (k + 1))
        + b(n - 2, r) * b(n - r - 2, m - r - 2) * q(k * k);
    Ok(WeierstrassSum {
        g,
        n: n as u32,
        m: m as u32,
        w_lambda,
        w_psi,
        w_2,
    })
}

/// Closed form of `a(g,n) = w_λ / w_ψ` with `m = min(g,n)`.
pub fn weierstrass_a(g: u32, n: u32) -> Rational {
    let (gi, ni) = (g as i64, n as i64);
    if n > g {
        return Rational::new(ni, gi);
    }
    let (k, r) = (gi / ni, gi % ni);
    Rational::new(2 * ni, (k + 1) * (gi + r))
}

/// Closed form of `b(g,n) = w_2 / w_ψ` with `m = min(g,n)`; `b(g,1) = 2`.
pub fn weierstrass_b(g: u32, n: u32) -> Rational {
    let (gi, ni) = (g as i64, n as i64);
    if n <= 1 {
        return Rational::from_int(2);
    }
    if n > g {
        return Rational::from_int(2) + Rational::new(gi - 1, ni - 1);
    }
    let (k, r) = (gi / ni, gi % ni);
    let num = r * (r - 1) * (k + 1) * (k + 1) + 2 * r * (ni - r) * k * (k + 1) + (ni - r) * (ni - r - 1) * k * k;
    let den = r * (k + 1) * (k + 2) + (ni - r) * k * (k + 1);
    Rational::from_int(2) + Rational::new(2, ni - 1) * Rational::new(num, den)
}

/// `W_{g,n}`: the summed Weierstrass class normalized to `ψ`-coefficient 1.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedWeierstrass {
    pub g: u32,
    pub n: u32,
    /// Positive; the stored `λ`-coefficient is `−a`.
    pub a: Rational,
    pub b: Rational,
    pub class: ProfileDivisorClass,
}

pub fn weierstrass_normalized(g: u32, n: u32) -> Result<NormalizedWeierstrass> {
    if n == 0 {
        return Err(Error::Domain("W_{g,n} needs n >= 1".into()));
    }
    let sum = weierstrass_summed(g, n, g.min(n))?;
    let a = &sum.w_lambda / &sum.w_psi;
    let b = &sum.w_2 / &sum.w_psi;
    let entry = CatalogEntry {
        name: EntryName::Weierstrass,
        g,
        n,
        a: -a.clone(),
        b_irr: Rational::zero(),
        b_pair: b.clone(),
    };
    Ok(NormalizedWeierstrass {
        g,
        n,
        a,
        b,
        class: entry.class()?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntryName {
    /// `T_g` on `n = g − 1`.
    T,
    /// `F_{g,m}` on `n = g − 2m`.
    F(u32),
    /// `F̃_{g,m}` on `n = g − 2m + 1`.
    Ftilde(u32),
    /// Normalized `W_{g,n}`.
    Weierstrass,
}

impl fmt::Display for EntryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryName::T => f.write_str("T"),
            EntryName::F(m) => write!(f, "F:{m}"),
            EntryName::Ftilde(m) => write!(f, "Ftilde:{m}"),
            EntryName::Weierstrass => f.write_str("W"),
        }
    }
}

impl std::str::FromStr for EntryName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let param = |rest: &str| {
            rest.parse::<u32>()
                .map_err(|_| Error::Parse(format!("entry {s:?}: expected a positive integer parameter")))
        };
        match s {
            "T" => Ok(EntryName::T),
            "W" => Ok(EntryName::Weierstrass),
            _ => {
                if let Some(rest) = s.strip_prefix("Ftilde:") {
                    Ok(EntryName::Ftilde(param(rest)?))
                } else if let Some(rest) = s.strip_prefix("F:") {
                    Ok(EntryName::F(param(rest)?))
                } else {
                    Err(Error::Parse(format!("unknown catalog entry {s:?}")))
                }
            }
        }
    }
}

/// `L = a·λ + ψ − b_irr·δ_irr − b_pair·δ_{0,2} − ...` on `M(g,n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: EntryName,
    pub g: u32,
    pub n: u32,
    /// Signed `λ`-coefficient.
    pub a: Rational,
    pub b_irr: Rational,
    pub b_pair: Rational,
}

impl CatalogEntry {
    pub fn space(&self) -> SpaceId {
        SpaceId { g: self.g, n: self.n }
    }

    /// Upper bound on a boundary family other than `δ_{0,2}`.
    pub fn tail_bound(&self, i: u32, s: u32) -> CoefInterval {
        match self.name {
            EntryName::Weierstrass if i == 0 => CoefInterval::at_most(
                -Rational::from_int(s as i64).max(self.b_pair.clone()),
                Assumption::WeierstrassRationalTail,
            ),
            EntryName::Weierstrass => CoefInterval::at_most(Rational::zero(), Assumption::WeierstrassHigherGenus),
            _ => CoefInterval::at_most(Rational::from_int(-2), Assumption::CatalogTail),
        }
    }

    /// The entry as a one-block class on its space.
    pub fn class(&self) -> Result<ProfileDivisorClass> {
        let space = SpaceId::new(self.g, self.n)?;
        let basis = ProfileBasis::new(space, BlockPartition::single(self.n))?;
        let profiles = basis.profiles()?;
        let mut out = ProfileDivisorClass::zero(basis);
        out.set_lambda(CoefInterval::exact(self.a.clone()));
        out.set_psi_all(CoefInterval::exact(Rational::one()));
        out.set_irr(CoefInterval::exact(-self.b_irr.clone()));
        for p in profiles {
            let s = p.total();
            let c = if p.i == 0 && s == 2 {
                CoefInterval::exact(-self.b_pair.clone())
            } else {
                self.tail_bound(p.i, s)
            };
            out.set_coefficient(p.i, &p.counts, c)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> CatalogJson {
        let mut bounds = Vec::new();
        let mut push = |family: &str, iv: CoefInterval| {
            bounds.push(BoundJson {
                family: family.to_string(),
                bound: (&iv).into(),
                notes: iv.assumptions().iter().map(|a| a.describe().to_string()).collect(),
            })
        };
        match self.name {
            EntryName::Weierstrass => {
                push("delta_0_s (s >= 3)", self.tail_bound(0, 3));
                push("delta_i (i >= 1)", self.tail_bound(1, 0));
            }
            _ => push("all other boundary families", self.tail_bound(1, 0)),
        }
        CatalogJson {
            name: self.name.to_string(),
            g: self.g,
            n: self.n,
            lambda: self.a.clone(),
            psi: Rational::one(),
            irr: -self.b_irr.clone(),
            pair: -self.b_pair.clone(),
            provenance: match self.name {
                EntryName::T => "anti-ramification class T_g",
                EntryName::F(_) => "normalized class F_{g,m}",
                EntryName::Ftilde(_) => "normalized class F~_{g,m}",
                EntryName::Weierstrass => "summed generalized Weierstrass class W_{g,n}, m = min(g,n)",
            }
            .to_string(),
            bounds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundJson {
    pub family: String,
    pub bound: IntervalJson,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogJson {
    pub name: String,
    pub g: u32,
    pub n: u32,
    pub lambda: Rational,
    pub psi: Rational,
    pub irr: Rational,
    /// Coefficient of `δ_{0,2}`.
    pub pair: Rational,
    pub provenance: String,
    pub bounds: Vec<BoundJson>,
}

fn hodge_part(g: i64, m: i64) -> Rational {
    Rational::new(10 * m, g - 2) + Rational::new(1 - g, g - m)
}

/// `T_g`, `F_{g,m}`, `F̃_{g,m}` or `W_{g,n}`; `n` is only read for `W`.
pub fn catalog_entry(name: EntryName, g: u32, n: Option<u32>) -> Result<CatalogEntry> {
    let gi = g as i64;
    match name {
        EntryName::T => {
            if g < 3 {
                return Err(Error::Domain(format!("T_g needs g >= 3, got {g}")));
            }
            Ok(CatalogEntry {
                name,
                g,
                n: g - 1,
                a: -Rational::new(gi - 7, gi - 2),
                b_irr: Rational::new(1, 2 * gi - 4),
                b_pair: Rational::from_int(3) + Rational::new(1, 2 * gi - 4),
            })
        }
        EntryName::F(m) => {
            if m == 0 || 2 * m + 2 > g {
                return Err(Error::Domain(format!("F_(g,m) needs m >= 1 and n = g - 2m >= 2, got g={g} m={m}")));
            }
            let (mi, ni) = (m as i64, gi - 2 * m as i64);
            Ok(CatalogEntry {
                name,
                g,
                n: ni as u32,
                a: Rational::new(ni, ni - 1) * hodge_part(gi, mi),
                b_irr: Rational::new(ni * mi, (gi - 2) * (ni - 1)),
                b_pair: Rational::from_int(3) + Rational::new((gi - ni) * (ni + 1), (gi + ni) * (ni - 1)),
            })
        }
        EntryName::Ftilde(m) => {
            if m == 0 || 2 * m + 2 > g || g < 3 {
                return Err(Error::Domain(format!(
                    "F~_(g,m) needs m >= 1 and n = g - 2m + 1 >= 3, got g={g} m={m}"
                )));
            }
            let (mi, ni) = (m as i64, gi - 2 * m as i64 + 1);
            Ok(CatalogEntry {
                name,
                g,
                n: ni as u32,
                a: Rational::new(ni, ni - 2) * hodge_part(gi, mi),
                b_irr: Rational::new(ni * mi, (gi - 2) * (ni - 2)),
                b_pair: Rational::from_int(3) + Rational::new(gi - ni - 1, gi + ni - 1),
            })
        }
        EntryName::Weierstrass => {
            let n = n.ok_or_else(|| Error::Domain("W_{g,n} needs the number of points".into()))?;
            let w = weierstrass_normalized(g, n)?;
            Ok(CatalogEntry {
                name,
                g,
                n,
                a: -w.a,
                b_irr: Rational::zero(),
                b_pair: w.b,
            })
        }
    }
}

/// Number of projections `M(g,n) → M(g,m)` summed in [`weierstrass_summed`].
pub fn projection_count(g: u32, n: u32, m: u32) -> BigInt {
    let r = (g % m) as i64;
    binomial(n as i64, r) * binomial(n as i64 - r, m as i64 - r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d)
    }

    #[test]
    fn slope_examples() {
        let s = slope_min(10).unwrap();
        assert_eq!((s.slope.clone(), s.provenance), (q(7, 1), SlopeProvenance::Sporadic));
        let s = slope_min(23).unwrap();
        assert_eq!((s.slope.clone(), s.provenance), (q(13, 2), SlopeProvenance::BrillNoether));
        let s = slope_min(22).unwrap();
        assert_eq!((s.slope.clone(), s.provenance), (q(145, 22), SlopeProvenance::GiesekerPetri));
        assert_eq!(slope_min(12).unwrap().slope, Rational::from_int(6) + q(563, 642));
        assert_eq!(slope_min(16).unwrap().slope, Rational::from_int(6) + q(41, 61));
        assert_eq!(slope_min(21).unwrap().slope, Rational::from_int(6) + q(197, 377));
        assert!(slope_min(3).is_err());
        assert_eq!(slope_min(200).unwrap().slope, Rational::from_int(6) + q(12, 201));
    }

    #[test]
    fn slope_is_below_generic_formulas() {
        for g in 4..=60u32 {
            let s = slope_min(g).unwrap().slope;
            let gi = g as i64;
            if !is_prime(g as u64 + 1) {
                assert!(s <= Rational::from_int(6) + q(12, gi + 1));
            }
            if g % 2 == 0 {
                assert!(s <= Rational::from_int(6) + q(14 * gi + 4, gi * gi + 2 * gi));
            }
            assert!(s > Rational::from_int(6));
        }
    }

    #[test]
    fn params_examples() {
        let p = weierstrass_params(23, 2).unwrap();
        assert_eq!((p.k, p.r, p.weights), (11, 1, vec![12, 11]));
        let p = weierstrass_params(20, 8).unwrap();
        assert_eq!((p.k, p.r, p.weights), (2, 4, vec![3, 3, 3, 3, 2, 2, 2, 2]));
        let p = weierstrass_params(5, 5).unwrap();
        assert_eq!((p.k, p.r, p.weights), (1, 0, vec![1; 5]));
    }

    #[test]
    fn factor_examples() {
        let w = weierstrass_factor(7, 1).unwrap();
        assert_eq!(w.lambda(), &CoefInterval::exact(q(-1, 1)));
        assert_eq!(w.psi(0), &CoefInterval::exact(q(28, 1)));
        // (5,3): weights (2,2,1); the ω-form pair coefficient −(k+1)² = −4 becomes −C(5,2)
        let w = weierstrass_factor(5, 3).unwrap();
        assert_eq!(w.coefficient(0, &[2, 0]).unwrap(), CoefInterval::exact(q(-10, 1)));
        assert_eq!(w.coefficient(0, &[1, 1]).unwrap(), CoefInterval::exact(q(-6, 1)));
        assert!(w.irr().is_zero());
        assert!(weierstrass_factor(3, 4).is_err());
    }

    #[test]
    fn summed_examples() {
        let w = weierstrass_summed(5, 3, 3).unwrap();
        assert_eq!((w.w_lambda, w.w_psi, w.w_2), (q(3, 1), q(7, 1), q(22, 1)));
        let w = weierstrass_summed(23, 2, 2).unwrap();
        assert_eq!((w.w_lambda, w.w_psi, w.w_2), (q(2, 1), q(144, 1), q(552, 1)));
        let w = weierstrass_summed(12, 9, 4).unwrap();
        assert_eq!(w.w_lambda, Rational::from_bigint(binomial(9, 4)));
    }

    #[test]
    fn normalized_examples() {
        assert_eq!(weierstrass_a(23, 2), q(1, 72));
        assert_eq!(weierstrass_b(23, 2), q(23, 6));
        assert_eq!(weierstrass_a(10, 12), q(6, 5));
        assert_eq!(weierstrass_b(24, 23), q(3, 1));
        let w = weierstrass_normalized(23, 2).unwrap();
        assert_eq!((w.a.clone(), w.b.clone()), (q(1, 72), q(23, 6)));
        assert_eq!(w.class.lambda(), &CoefInterval::exact(q(-1, 72)));
        assert_eq!(w.class.coefficient(0, &[2]).unwrap(), CoefInterval::exact(q(-23, 6)));
    }

    #[test]
    fn catalog_examples() {
        let t = catalog_entry(EntryName::T, 24, None).unwrap();
        assert_eq!(t.a, q(-17, 22));
        assert_eq!(&t.b_pair - Rational::from_int(3), q(1, 44));
        assert_eq!(t.n, 23);
        let f = catalog_entry(EntryName::F(8), 20, None).unwrap();
        assert_eq!((f.n, f.a.clone(), f.b_pair.clone(), f.b_irr.clone()), (4, q(103, 27), q(37, 9), q(16, 27)));
        let ft = catalog_entry(EntryName::Ftilde(9), 22, None).unwrap();
        assert_eq!((ft.n, ft.b_pair.clone()), (5, Rational::from_int(3) + q(8, 13)));
        assert!(catalog_entry(EntryName::F(10), 20, None).is_err());
        for e in [t, f, ft] {
            assert_eq!(e.class().unwrap().psi(0), &CoefInterval::exact(Rational::one()));
        }
    }

    #[test]
    fn entry_names_parse() {
        assert_eq!("F:8".parse::<EntryName>().unwrap(), EntryName::F(8));
        assert_eq!("Ftilde:9".parse::<EntryName>().unwrap(), EntryName::Ftilde(9));
        assert_eq!("T".parse::<EntryName>().unwrap(), EntryName::T);
        assert!("G:2".parse::<EntryName>().is_err());
        assert!("F:x".parse::<EntryName>().is_err());
    }
}
