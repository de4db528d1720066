//! Divisor classes on the moduli space of `n`-pointed genus-`g` curves,
//! written in the basis `λ, ψ_1..ψ_n, δ_irr, δ_{i,S}`.
//!
//! Boundary classes are identified under `(i, S) ~ (g - i, Sᶜ)`; keys are
//! always stored in canonical form (see [`canonical_boundary`]) and classes
//! `δ_{0,S}` with `|S| <= 1` are the zero class and never stored.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest number of subset-indexed basis entries a full class may enumerate.
pub const FULL_BASIS_CAP: u128 = 1 << 22;

/// Labels are packed into a `u64`, so full classes support at most this many points.
pub const MAX_FULL_POINTS: u32 = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpaceId {
    pub g: u32,
    pub n: u32,
}

impl SpaceId {
    pub fn new(g: u32, n: u32) -> Result<Self> {
        if g < 2 {
            return Err(Error::Domain(format!("genus must be at least 2, got {g}")));
        }
        Ok(SpaceId { g, n })
    }

    /// Mask with bits `1..=n` set (bit `l - 1` stands for label `l`).
    pub fn full_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            u64::MAX >> (64 - self.n)
        }
    }

    /// Number of subset-indexed entries `(⌊g/2⌋ + 1) · 2ⁿ`, an upper bound on the basis size.
    pub fn boundary_bound(&self) -> u128 {
        ((self.g / 2 + 1) as u128) << self.n.min(100)
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.g, self.n)
    }
}

/// A canonical boundary key `δ_{i,S}`; `S` is a bitmask over labels `1..=n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryIndex {
    pub i: u32,
    pub set: u64,
}

impl BoundaryIndex {
    pub fn labels(&self) -> Vec<u32> {
        mask_labels(self.set)
    }

    pub fn size(&self) -> u32 {
        self.set.count_ones()
    }
}

impl fmt::Debug for BoundaryIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ({},{:?})", self.i, self.labels())
    }
}

pub fn mask_labels(mask: u64) -> Vec<u32> {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

pub fn labels_mask(space: SpaceId, labels: &[u32]) -> Result<u64> {
    let mut mask = 0u64;
    for &l in labels {
        if l == 0 || l > space.n {
            return Err(Error::Domain(format!("label {l} out of range 1..={}", space.n)));
        }
        mask |= 1 << (l - 1);
    }
    Ok(mask)
}

/// Canonical representative of `δ_{i,S}`, or `None` for the zero class.
///
/// The representative has `i <= ⌊g/2⌋`; when `g` is even and `i = g/2` the
/// side containing label 1 is kept.
pub fn canonical_boundary(space: SpaceId, i: u32, set: u64) -> Result<Option<BoundaryIndex>> {
    if i > space.g {
        return Err(Error::Domain(format!("node order {i} exceeds genus {}", space.g)));
    }
    if set & !space.full_mask() != 0 {
        return Err(Error::Domain(format!(
            "subset {:?} not contained in 1..={}",
            mask_labels(set),
            space.n
        )));
    }
    Ok(canonical_unchecked(space, i, set))
}

pub(crate) fn canonical_unchecked(space: SpaceId, i: u32, set: u64) -> Option<BoundaryIndex> {
    let g = space.g;
    let comp = space.full_mask() & !set;
    let (i, set) = if 2 * i > g {
        (g - i, comp)
    } else if 2 * i == g && space.n > 0 && set & 1 == 0 {
        (i, comp)
    } else {
        (i, set)
    };
    if i == 0 && set.count_ones() <= 1 {
        None
    } else {
        Some(BoundaryIndex { i, set })
    }
}

/// Every canonical boundary key of `space`, in key order.
pub fn all_boundary_indices(space: SpaceId) -> Result<Vec<BoundaryIndex>> {
    if space.n > MAX_FULL_POINTS {
        return Err(Error::SizeCap {
            what: "full boundary basis",
            needed: space.boundary_bound(),
            cap: FULL_BASIS_CAP,
        });
    }
    let needed = space.boundary_bound();
    if needed > FULL_BASIS_CAP {
        return Err(Error::SizeCap {
            what: "full boundary basis",
            needed,
            cap: FULL_BASIS_CAP,
        });
    }
    let mut out = Vec::new();
    for i in 0..=space.g / 2 {
        for set in 0..=space.full_mask() {
            if let Some(key) = canonical_unchecked(space, i, set) {
                if key.i == i && key.set == set {
                    out.push(key);
                }
            }
        }
    }
    Ok(out)
}

/// A divisor class with exact coefficients over the subset-indexed basis.
#[derive(Clone, PartialEq, Eq)]
pub struct FullDivisorClass {
    space: SpaceId,
    lambda: Rational,
    psi: BTreeMap<u32, Rational>,
    irr: Rational,
    boundary: BTreeMap<BoundaryIndex, Rational>,
}

impl FullDivisorClass {
    pub fn zero(space: SpaceId) -> Self {
        FullDivisorClass {
            space,
            lambda: Rational::zero(),
            psi: BTreeMap::new(),
            irr: Rational::zero(),
            boundary: BTreeMap::new(),
        }
    }

    pub fn lambda_class(space: SpaceId) -> Self {
        let mut x = Self::zero(space);
        x.lambda = Rational::one();
        x
    }

    pub fn irr_class(space: SpaceId) -> Self {
        let mut x = Self::zero(space);
        x.irr = Rational::one();
        x
    }

    pub fn psi_class(space: SpaceId, label: u32) -> Result<Self> {
        let mut x = Self::zero(space);
        x.add_psi(label, &Rational::one())?;
        Ok(x)
    }

    /// `ψ = Σ ψ_i`.
    pub fn psi_total(space: SpaceId) -> Self {
        let mut x = Self::zero(space);
        for l in 1..=space.n {
            x.psi.insert(l, Rational::one());
        }
        x
    }

    /// `δ_{i,S}` for explicit labels; the zero class when `i = 0, |S| <= 1`.
    pub fn boundary_class(space: SpaceId, i: u32, labels: &[u32]) -> Result<Self> {
        let mask = labels_mask(space, labels)?;
        let mut x = Self::zero(space);
        x.add_boundary(i, mask, &Rational::one())?;
        Ok(x)
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    pub fn psi(&self, label: u32) -> Rational {
        self.psi.get(&label).cloned().unwrap_or_default()
    }

    pub fn psi_entries(&self) -> &BTreeMap<u32, Rational> {
        &self.psi
    }

    pub fn boundary_entries(&self) -> &BTreeMap<BoundaryIndex, Rational> {
        &self.boundary
    }

    /// Coefficient of `δ_{i,S}` (any representative; zero class gives 0).
    pub fn boundary(&self, i: u32, set: u64) -> Result<Rational> {
        Ok(match canonical_boundary(self.space, i, set)? {
            Some(key) => self.boundary.get(&key).cloned().unwrap_or_default(),
            None => Rational::zero(),
        })
    }

    pub fn boundary_at(&self, key: &BoundaryIndex) -> Rational {
        self.boundary.get(key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_zero() && self.irr.is_zero() && self.psi.is_empty() && self.boundary.is_empty()
    }

    pub fn set_lambda(&mut self, c: Rational) {
        self.lambda = c;
    }

    pub fn set_irr(&mut self, c: Rational) {
        self.irr = c;
    }

    pub fn add_lambda(&mut self, c: &Rational) {
        self.lambda += c;
    }

    pub fn add_irr(&mut self, c: &Rational) {
        self.irr += c;
    }

    pub fn add_psi(&mut self, label: u32, c: &Rational) -> Result<()> {
        if label == 0 || label > self.space.n {
            return Err(Error::Domain(format!("ψ label {label} out of range 1..={}", self.space.n)));
        }
        add_sparse(&mut self.psi, label, c);
        Ok(())
    }

    /// Adds `c · δ_{i,S}`, canonicalizing the key; a zero-class target is ignored.
    pub fn add_boundary(&mut self, i: u32, set: u64, c: &Rational) -> Result<()> {
        if let Some(key) = canonical_boundary(self.space, i, set)? {
            add_sparse(&mut self.boundary, key, c);
        }
        Ok(())
    }

    pub(crate) fn add_boundary_key(&mut self, key: BoundaryIndex, c: &Rational) {
        add_sparse(&mut self.boundary, key, c);
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.space);
        out.add_scaled(self, s).expect("same space");
        out
    }

    /// `self += s · other`.
    pub fn add_scaled(&mut self, other: &FullDivisorClass, s: &Rational) -> Result<()> {
        if other.space != self.space {
            return Err(Error::Domain(format!(
                "cannot combine classes on {} and {}",
                self.space, other.space
            )));
        }
        if s.is_zero() {
            return Ok(());
        }
        self.lambda += &other.lambda * s;
        self.irr += &other.irr * s;
        for (l, c) in &other.psi {
            add_sparse(&mut self.psi, *l, &(c * s));
        }
        for (k, c) in &other.boundary {
            add_sparse(&mut self.boundary, *k, &(c * s));
        }
        Ok(())
    }

    /// Image under the relabelling `l ↦ perm[l - 1]` (a permutation of `1..=n`).
    pub fn relabel(&self, perm: &[u32]) -> Result<Self> {
        let n = self.space.n as usize;
        if perm.len() != n {
            return Err(Error::Domain("permutation length differs from n".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p == 0 || p as usize > n || seen[p as usize - 1] {
                return Err(Error::Domain(format!("not a permutation of 1..={n}: {perm:?}")));
            }
            seen[p as usize - 1] = true;
        }
        let map_mask = |m: u64| {
            let mut out = 0u64;
            for b in 0..n {
                if m >> b & 1 == 1 {
                    out |= 1 << (perm[b] - 1);
                }
            }
            out
        };
        let mut out = Self::zero(self.space);
        out.lambda = self.lambda.clone();
        out.irr = self.irr.clone();
        for (l, c) in &self.psi {
            out.psi.insert(perm[*l as usize - 1], c.clone());
        }
        for (k, c) in &self.boundary {
            out.add_boundary(k.i, map_mask(k.set), c)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> FullClassJson {
        FullClassJson {
            g: self.space.g,
            n: self.space.n,
            lambda: self.lambda.clone(),
            psi: self.psi.iter().map(|(l, c)| (l.to_string(), c.clone())).collect(),
            irr: self.irr.clone(),
            boundary: self
                .boundary
                .iter()
                .map(|(k, c)| BoundaryJson {
                    i: k.i,
                    s: k.labels(),
                    c: c.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(js: &FullClassJson) -> Result<Self> {
        let space = SpaceId::new(js.g, js.n)?;
        if space.n > MAX_FULL_POINTS {
            return Err(Error::Domain(format!("at most {MAX_FULL_POINTS} points supported")));
        }
        let mut x = Self::zero(space);
        x.lambda = js.lambda.clone();
        x.irr = js.irr.clone();
        for (l, c) in &js.psi {
            let label: u32 = l
                .parse()
                .map_err(|_| Error::Parse(format!("ψ key {l:?} is not a label")))?;
            x.add_psi(label, c)?;
        }
        for b in &js.boundary {
            let mask = labels_mask(space, &b.s)?;
            x.add_boundary(b.i, mask, &b.c)?;
        }
        Ok(x)
    }
}

impl fmt::Debug for FullDivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} λ={} irr={} ψ={:?} δ={:?}", self.space, self.lambda, self.irr, self.psi, self.boundary)
    }
}

fn add_sparse<K: Ord + Copy>(map: &mut BTreeMap<K, Rational>, key: K, c: &Rational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key).or_default();
    *entry += c;
    if entry.is_zero() {
        map.remove(&key);
    }
}

/// Exact linear combination `Σ c_j X_j`; all terms must live on one space.
pub fn linear_combine(terms: &[(Rational, &FullDivisorClass)]) -> Result<FullDivisorClass> {
    let space = match terms.first() {
        Some((_, x)) => x.space,
        None => return Err(Error::Domain("empty linear combination has no space".into())),
    };
    let mut out = FullDivisorClass::zero(space);
    for (c, x) in terms {
        out.add_scaled(x, c)?;
    }
    Ok(out)
}

/// `K = 13λ + ψ − 2δ`, with `δ` the sum of `δ_irr` and every boundary class.
pub fn canonical_class(space: SpaceId) -> Result<FullDivisorClass> {
    let mut k = FullDivisorClass::psi_total(space);
    k.lambda = Rational::from_int(13);
    k.irr = Rational::from_int(-2);
    let minus_two = Rational::from_int(-2);
    for key in all_boundary_indices(space)? {
        k.boundary.insert(key, minus_two.clone());
    }
    Ok(k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryJson {
    pub i: u32,
    #[serde(rename = "S")]
    pub s: Vec<u32>,
    pub c: Rational,
}

/// Wire shape of a [`FullDivisorClass`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullClassJson {
    pub g: u32,
    pub n: u32,
    pub lambda: Rational,
    #[serde(default)]
    pub psi: BTreeMap<String, Rational>,
    pub irr: Rational,
    #[serde(default)]
    pub boundary: Vec<BoundaryJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(g: u32, n: u32) -> SpaceId {
        SpaceId::new(g, n).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let s = sp(5, 3);
        let k = canonical_boundary(s, 4, 0b001).unwrap().unwrap();
        assert_eq!((k.i, k.labels()), (1, vec![2, 3]));
        assert_eq!(canonical_boundary(s, 0, 0b001).unwrap(), None);
        let k = canonical_boundary(s, 2, 0b011).unwrap().unwrap();
        assert_eq!((k.i, k.labels()), (2, vec![1, 2]));
    }

    #[test]
    fn canonical_errors() {
        let s = sp(5, 3);
        assert!(canonical_boundary(s, 6, 0).is_err());
        assert!(canonical_boundary(s, 1, 0b1000).is_err());
        assert!(SpaceId::new(1, 3).is_err());
    }

    #[test]
    fn even_genus_tie_break() {
        let s = sp(4, 3);
        let k = canonical_boundary(s, 2, 0b110).unwrap().unwrap();
        assert_eq!(k.labels(), vec![1]);
        let s0 = sp(4, 0);
        let k = canonical_boundary(s0, 2, 0).unwrap().unwrap();
        assert_eq!((k.i, k.set), (2, 0));
        // (g, S) is the rational tail on Sᶜ
        assert_eq!(canonical_boundary(s, 4, 0b110).unwrap(), None);
        let k = canonical_boundary(s, 4, 0b100).unwrap().unwrap();
        assert_eq!((k.i, k.labels()), (0, vec![1, 2]));
    }

    #[test]
    fn canonicalization_is_involution_respecting() {
        for g in 2..=8 {
            for n in 0..=6 {
                let s = sp(g, n);
                for i in 0..=g {
                    for set in 0..=s.full_mask() {
                        let a = canonical_boundary(s, i, set).unwrap();
                        let b = canonical_boundary(s, g - i, s.full_mask() & !set).unwrap();
                        assert_eq!(a, b, "g={g} n={n} i={i} S={set:b}");
                        if let Some(k) = a {
                            assert!(2 * k.i <= g);
                            assert_eq!(canonical_boundary(s, k.i, k.set).unwrap(), Some(k));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn linear_combination_examples() {
        let s = sp(5, 3);
        let x = FullDivisorClass::boundary_class(s, 1, &[1, 2]).unwrap();
        let z = linear_combine(&[(Rational::one(), &x), (Rational::from_int(-1), &x)]).unwrap();
        assert!(z.is_zero());
        let l = FullDivisorClass::lambda_class(s);
        let five = linear_combine(&[(Rational::from_int(2), &l), (Rational::from_int(3), &l)]).unwrap();
        assert_eq!(five.lambda(), &Rational::from_int(5));
        let p = FullDivisorClass::psi_class(s, 1).unwrap().scaled(&Rational::from_int(3));
        let back = linear_combine(&[(Rational::new(1, 3), &p)]).unwrap();
        assert_eq!(back, FullDivisorClass::psi_class(s, 1).unwrap());
    }

    #[test]
    fn mixed_spaces_rejected() {
        let a = FullDivisorClass::lambda_class(sp(5, 2));
        let b = FullDivisorClass::lambda_class(sp(5, 3));
        assert!(linear_combine(&[(Rational::one(), &a), (Rational::one(), &b)]).is_err());
    }

    #[test]
    fn canonical_class_coefficients() {
        let s = sp(5, 2);
        let k = canonical_class(s).unwrap();
        assert_eq!(k.lambda(), &Rational::from_int(13));
        assert_eq!(k.psi(1), Rational::one());
        assert_eq!(k.psi(2), Rational::one());
        assert_eq!(k.irr(), &Rational::from_int(-2));
        assert_eq!(k.boundary(0, 0b11).unwrap(), Rational::from_int(-2));
        for key in all_boundary_indices(s).unwrap() {
            assert_eq!(k.boundary_at(&key), Rational::from_int(-2));
        }
        // i in {0,1,2}, 4 subsets each, minus the three zero classes δ_{0,∅}, δ_{0,{1}}, δ_{0,{2}}
        assert_eq!(k.boundary_entries().len(), 9);
    }

    #[test]
    fn json_round_trip() {
        let s = sp(6, 3);
        let mut x = canonical_class(s).unwrap();
        x.add_boundary(3, 0b010, &Rational::new(7, 3)).unwrap();
        let js = serde_json::to_string(&x.to_json()).unwrap();
        let back: FullClassJson = serde_json::from_str(&js).unwrap();
        assert_eq!(FullDivisorClass::from_json(&back).unwrap(), x);
    }

    #[test]
    fn relabel_moves_keys() {
        let s = sp(5, 3);
        let x = FullDivisorClass::boundary_class(s, 0, &[1, 2]).unwrap();
        let y = x.relabel(&[3, 1, 2]).unwrap();
        assert_eq!(y, FullDivisorClass::boundary_class(s, 0, &[1, 3]).unwrap());
        assert!(x.relabel(&[1, 1, 2]).is_err());
    }
}
