//! Block-symmetric divisor classes in the profile basis
//! `λ, Ψ_1..Ψ_m, δ_irr, δ_{(i; c_1..c_m)}`.
//!
//! A profile `(i; c)` stands for the orbit sum of all `δ_{i,S}` with
//! `|S ∩ S_k| = c_k`. Blocks may additionally be grouped into *types*:
//! blocks of one type are interchangeable, so profiles differing by a
//! permutation of counts inside a type are identified.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::group::BlockPartition;
use super::interval::{CoefInterval, IntervalJson};
use crate::error::{Error, Result};
use crate::picard::{all_boundary_indices, FullDivisorClass, SpaceId};
use crate::rational::{binomial, Rational};

/// Default cap on the number of profiles a basis may enumerate.
pub const PROFILE_CAP: u128 = 4_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Profile {
    pub i: u32,
    pub counts: Vec<u32>,
}

impl Profile {
    pub fn new(i: u32, counts: Vec<u32>) -> Self {
        Profile { i, counts }
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.counts.iter().map(u32::to_string).collect();
        write!(f, "({};({}))", self.i, c.join(","))
    }
}

/// Space, ordered block partition and block types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileBasis {
    space: SpaceId,
    partition: BlockPartition,
    types: Vec<usize>,
}

impl ProfileBasis {
    /// Every block is its own type.
    pub fn new(space: SpaceId, partition: BlockPartition) -> Result<Self> {
        let types = (0..partition.len()).collect();
        Self::with_types(space, partition, types)
    }

    /// `types[k]` labels block `k`; blocks sharing a label must have equal size.
    pub fn with_types(space: SpaceId, partition: BlockPartition, types: Vec<usize>) -> Result<Self> {
        if partition.n() != space.n {
            return Err(Error::Domain(format!(
                "partition of {} points on a space with n = {}",
                partition.n(),
                space.n
            )));
        }
        if types.len() != partition.len() {
            return Err(Error::Domain("one type per block required".into()));
        }
        let sizes = partition.sizes();
        let mut first: BTreeMap<usize, usize> = BTreeMap::new();
        let mut renumbered = Vec::with_capacity(types.len());
        for (k, t) in types.iter().enumerate() {
            let next = first.len();
            let id = *first.entry(*t).or_insert(next);
            let rep = renumbered.iter().position(|&x| x == id).unwrap_or(k);
            if sizes[rep] != sizes[k] {
                return Err(Error::Domain("blocks of one type must have equal size".into()));
            }
            renumbered.push(id);
        }
        Ok(ProfileBasis {
            space,
            partition,
            types: renumbered,
        })
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn partition(&self) -> &BlockPartition {
        &self.partition
    }

    pub fn types(&self) -> &[usize] {
        &self.types
    }

    pub fn is_untyped(&self) -> bool {
        self.types.iter().enumerate().all(|(k, &t)| k == t)
    }

    fn type_groups(&self) -> Vec<Vec<usize>> {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for (k, &t) in self.types.iter().enumerate() {
            if t == groups.len() {
                groups.push(vec![k]);
            } else {
                groups[t].push(k);
            }
        }
        groups
    }

    fn sort_within_types(&self, counts: &mut [u32]) {
        for group in self.type_groups() {
            if group.len() < 2 {
                continue;
            }
            let mut vals: Vec<u32> = group.iter().map(|&k| counts[k]).collect();
            vals.sort_unstable_by(|a, b| b.cmp(a));
            for (&k, v) in group.iter().zip(vals) {
                counts[k] = v;
            }
        }
    }

    /// Canonical representative of `(i; counts)`, or `None` for the zero class.
    pub fn canonical(&self, i: u32, counts: &[u32]) -> Result<Option<Profile>> {
        let g = self.space.g;
        if i > g {
            return Err(Error::Domain(format!("node order {i} exceeds genus {g}")));
        }
        let sizes = self.partition.sizes();
        if counts.len() != sizes.len() || counts.iter().zip(&sizes).any(|(c, s)| c > s) {
            return Err(Error::Domain(format!("counts {counts:?} do not fit blocks {sizes:?}")));
        }
        Ok(self.canonical_unchecked(i, counts))
    }

    pub(crate) fn canonical_unchecked(&self, i: u32, counts: &[u32]) -> Option<Profile> {
        let g = self.space.g;
        let sizes = self.partition.sizes();
        let complement = || -> Vec<u32> { sizes.iter().zip(counts).map(|(s, c)| s - c).collect() };
        let (i, mut c) = if 2 * i > g { (g - i, complement()) } else { (i, counts.to_vec()) };
        self.sort_within_types(&mut c);
        if 2 * i == g {
            let mut other: Vec<u32> = sizes.iter().zip(&c).map(|(s, x)| s - x).collect();
            self.sort_within_types(&mut other);
            if other > c {
                c = other;
            }
        }
        if i == 0 && c.iter().sum::<u32>() <= 1 {
            return None;
        }
        Some(Profile { i, counts: c })
    }

    /// Upper bound on the number of canonical profiles.
    pub fn size_estimate(&self) -> u128 {
        let sizes = self.partition.sizes();
        let per_i: u128 = self
            .type_groups()
            .iter()
            .map(|grp| {
                // nonincreasing sequences of length |grp| in 0..=size
                let len = grp.len() as i64;
                let size = sizes[grp[0]] as i64;
                binomial(size + len, len).try_into().unwrap_or(u128::MAX)
            })
            .fold(1u128, |a, b| a.saturating_mul(b));
        per_i.saturating_mul((self.space.g / 2 + 1) as u128)
    }

    /// Every canonical profile, sorted.
    pub fn profiles(&self) -> Result<Vec<Profile>> {
        let needed = self.size_estimate();
        if needed > PROFILE_CAP {
            return Err(Error::SizeCap {
                what: "profile basis",
                needed,
                cap: PROFILE_CAP,
            });
        }
        let sizes = self.partition.sizes();
        let groups = self.type_groups();
        let mut vectors: Vec<Vec<u32>> = vec![vec![0; sizes.len()]];
        for grp in &groups {
            let size = sizes[grp[0]];
            let mut next = Vec::new();
            for v in &vectors {
                let mut stack = vec![(0usize, size, v.clone())];
                while let Some((pos, cap, cur)) = stack.pop() {
                    if pos == grp.len() {
                        next.push(cur);
                        continue;
                    }
                    for c in 0..=cap {
                        let mut w = cur.clone();
                        w[grp[pos]] = c;
                        stack.push((pos + 1, c, w));
                    }
                }
            }
            vectors = next;
        }
        let mut out = BTreeSet::new();
        for i in 0..=self.space.g / 2 {
            for v in &vectors {
                if let Some(p) = self.canonical_unchecked(i, v) {
                    if p.i == i && &p.counts == v {
                        out.insert(p);
                    }
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Number of canonical boundary keys `δ_{i,S}` in the orbit of `p`.
    pub fn orbit_size(&self, p: &Profile) -> u128 {
        let sizes = self.partition.sizes();
        let untyped = ProfileBasis {
            space: self.space,
            partition: self.partition.clone(),
            types: (0..sizes.len()).collect(),
        };
        let mut arrangements = BTreeSet::new();
        for c in self.arrangements(&p.counts) {
            if let Some(q) = untyped.canonical_unchecked(p.i, &c) {
                arrangements.insert(q);
            }
        }
        arrangements
            .iter()
            .map(|q| {
                let prod: u128 = sizes
                    .iter()
                    .zip(&q.counts)
                    .map(|(s, c)| u128::try_from(binomial(*s as i64, *c as i64)).unwrap_or(u128::MAX))
                    .fold(1, |a, b| a.saturating_mul(b));
                let self_dual = 2 * q.i == self.space.g
                    && self.space.n > 0
                    && sizes.iter().zip(&q.counts).all(|(s, c)| s - c == *c);
                if self_dual {
                    prod / 2
                } else {
                    prod
                }
            })
            .sum()
    }

    /// All count vectors obtained by permuting counts inside each type group.
    fn arrangements(&self, counts: &[u32]) -> Vec<Vec<u32>> {
        let mut out = vec![counts.to_vec()];
        for grp in self.type_groups() {
            if grp.len() < 2 {
                continue;
            }
            let mut next = BTreeSet::new();
            for v in &out {
                let mut vals: Vec<u32> = grp.iter().map(|&k| v[k]).collect();
                vals.sort_unstable();
                loop {
                    let mut w = v.clone();
                    for (&k, &x) in grp.iter().zip(&vals) {
                        w[k] = x;
                    }
                    next.insert(w);
                    let Some(a) = (1..vals.len()).rev().find(|&a| vals[a - 1] < vals[a]) else {
                        break;
                    };
                    let b = (a..vals.len()).rev().find(|&b| vals[b] > vals[a - 1]).unwrap();
                    vals.swap(a - 1, b);
                    vals[a..].reverse();
                }
            }
            out = next.into_iter().collect();
        }
        out
    }
}

/// A class over the profile basis with interval coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ProfileDivisorClass {
    basis: ProfileBasis,
    lambda: CoefInterval,
    irr: CoefInterval,
    psi: Vec<CoefInterval>,
    profiles: BTreeMap<Profile, CoefInterval>,
}

impl ProfileDivisorClass {
    pub fn zero(basis: ProfileBasis) -> Self {
        let m = basis.partition.len();
        ProfileDivisorClass {
            basis,
            lambda: CoefInterval::zero(),
            irr: CoefInterval::zero(),
            psi: vec![CoefInterval::zero(); m],
            profiles: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> &ProfileBasis {
        &self.basis
    }

    pub fn space(&self) -> SpaceId {
        self.basis.space
    }

    pub fn partition(&self) -> &BlockPartition {
        &self.basis.partition
    }

    pub fn lambda(&self) -> &CoefInterval {
        &self.lambda
    }

    pub fn irr(&self) -> &CoefInterval {
        &self.irr
    }

    /// Coefficient of `Ψ_k`, i.e. of each `ψ_i` with `i ∈ S_k`.
    pub fn psi(&self, block: usize) -> &CoefInterval {
        &self.psi[block]
    }

    pub fn psi_all(&self) -> &[CoefInterval] {
        &self.psi
    }

    pub fn profile_entries(&self) -> &BTreeMap<Profile, CoefInterval> {
        &self.profiles
    }

    /// Coefficient at `(i; counts)`, canonicalizing first.
    pub fn coefficient(&self, i: u32, counts: &[u32]) -> Result<CoefInterval> {
        Ok(match self.basis.canonical(i, counts)? {
            Some(p) => self.at(&p),
            None => CoefInterval::zero(),
        })
    }

    pub(crate) fn coefficient_unchecked(&self, i: u32, counts: &[u32]) -> CoefInterval {
        match self.basis.canonical_unchecked(i, counts) {
            Some(p) => self.at(&p),
            None => CoefInterval::zero(),
        }
    }

    /// Coefficient at an already canonical profile.
    pub fn at(&self, p: &Profile) -> CoefInterval {
        self.profiles.get(p).cloned().unwrap_or_default()
    }

    pub fn set_lambda(&mut self, c: CoefInterval) {
        self.lambda = c;
    }

    pub fn set_irr(&mut self, c: CoefInterval) {
        self.irr = c;
    }

    pub fn set_psi(&mut self, block: usize, c: CoefInterval) {
        self.psi[block] = c;
    }

    pub fn set_psi_all(&mut self, c: CoefInterval) {
        for p in &mut self.psi {
            *p = c.clone();
        }
    }

    /// Sets the coefficient of `(i; counts)`; setting a zero-class profile to zero is a no-op.
    pub fn set_coefficient(&mut self, i: u32, counts: &[u32], c: CoefInterval) -> Result<()> {
        match self.basis.canonical(i, counts)? {
            Some(p) => {
                if c.is_zero() {
                    self.profiles.remove(&p);
                } else {
                    self.profiles.insert(p, c);
                }
                Ok(())
            }
            None if c.is_zero() => Ok(()),
            None => Err(Error::Domain(format!("({i};{counts:?}) is the zero class"))),
        }
    }

    pub fn add_scaled(&mut self, other: &ProfileDivisorClass, s: &Rational) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::Domain("profile classes over different bases".into()));
        }
        self.lambda = self.lambda.add_scaled(&other.lambda, s);
        self.irr = self.irr.add_scaled(&other.irr, s);
        for (a, b) in self.psi.iter_mut().zip(&other.psi) {
            *a = a.add_scaled(b, s);
        }
        for (p, c) in &other.profiles {
            let cur = self.at(p).add_scaled(c, s);
            if cur.is_zero() {
                self.profiles.remove(p);
            } else {
                self.profiles.insert(p.clone(), cur);
            }
        }
        Ok(())
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.basis.clone());
        out.add_scaled(self, s).expect("same basis");
        out
    }

    /// The group average of `x` under the symmetric block product, in profile form.
    pub fn symmetrize(x: &FullDivisorClass, partition: &BlockPartition) -> Result<Self> {
        let space = x.space();
        let basis = ProfileBasis::new(space, partition.clone())?;
        let mut out = Self::zero(basis);
        out.lambda = CoefInterval::exact(x.lambda().clone());
        out.irr = CoefInterval::exact(x.irr().clone());
        for (k, block) in partition.blocks().iter().enumerate() {
            let sum: Rational = block.iter().map(|&l| x.psi(l)).sum();
            out.psi[k] = CoefInterval::exact(sum / Rational::from_int(block.len() as i64));
        }
        let mut sums: BTreeMap<Profile, (Rational, i64)> = BTreeMap::new();
        for key in all_boundary_indices(space)? {
            let counts = partition.counts_of(key.set);
            let p = out
                .basis
                .canonical_unchecked(key.i, &counts)
                .expect("canonical boundary keys are nonzero");
            let e = sums.entry(p).or_insert((Rational::zero(), 0));
            e.0 += x.boundary_at(&key);
            e.1 += 1;
        }
        for (p, (sum, count)) in sums {
            let avg = sum / Rational::from_int(count);
            if !avg.is_zero() {
                out.profiles.insert(p, CoefInterval::exact(avg));
            }
        }
        Ok(out)
    }

    /// Subset-basis form: each boundary key receives its profile's coefficient.
    pub fn expand(&self) -> Result<FullDivisorClass> {
        let exact = |c: &CoefInterval, what: &str| -> Result<Rational> {
            c.exact_value()
                .cloned()
                .ok_or_else(|| Error::Domain(format!("cannot expand interval coefficient on {what}")))
        };
        let space = self.space();
        let mut out = FullDivisorClass::zero(space);
        out.set_lambda(exact(&self.lambda, "λ")?);
        out.set_irr(exact(&self.irr, "δ_irr")?);
        for (k, block) in self.partition().blocks().iter().enumerate() {
            let c = exact(&self.psi[k], "ψ")?;
            for &l in block {
                out.add_psi(l, &c)?;
            }
        }
        for key in all_boundary_indices(space)? {
            let counts = self.partition().counts_of(key.set);
            let c = exact(&self.coefficient_unchecked(key.i, &counts), "a boundary profile")?;
            out.add_boundary_key(key, &c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> ProfileClassJson {
        ProfileClassJson {
            g: self.space().g,
            n: self.space().n,
            blocks: self.partition().blocks().to_vec(),
            types: if self.basis.is_untyped() { None } else { Some(self.basis.types.clone()) },
            lambda: (&self.lambda).into(),
            irr: (&self.irr).into(),
            psi: self.psi.iter().map(Into::into).collect(),
            profiles: self
                .profiles
                .iter()
                .map(|(p, c)| ProfileEntryJson {
                    profile: p.clone(),
                    interval: c.into(),
                })
                .collect(),
        }
    }

    pub fn from_json(js: &ProfileClassJson) -> Result<Self> {
        let space = SpaceId::new(js.g, js.n)?;
        let partition = BlockPartition::new(js.n, js.blocks.clone())?;
        let basis = match &js.types {
            Some(t) => ProfileBasis::with_types(space, partition, t.clone())?,
            None => ProfileBasis::new(space, partition)?,
        };
        if js.psi.len() != basis.partition.len() {
            return Err(Error::Parse("one ψ coefficient per block required".into()));
        }
        let mut out = Self::zero(basis);
        out.lambda = (&js.lambda).try_into()?;
        out.irr = (&js.irr).try_into()?;
        out.psi = js.psi.iter().map(TryInto::try_into).collect::<Result<_>>()?;
        for e in &js.profiles {
            out.set_coefficient(e.profile.i, &e.profile.counts, (&e.interval).try_into()?)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileEntryJson {
    pub profile: Profile,
    #[serde(flatten)]
    pub interval: IntervalJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileClassJson {
    pub g: u32,
    pub n: u32,
    pub blocks: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub types: Option<Vec<usize>>,
    pub lambda: IntervalJson,
    pub irr: IntervalJson,
    pub psi: Vec<IntervalJson>,
    pub profiles: Vec<ProfileEntryJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::labels_mask;

    fn basis(g: u32, sizes: &[u32]) -> ProfileBasis {
        let p = BlockPartition::from_sizes(sizes).unwrap();
        ProfileBasis::new(SpaceId::new(g, p.n()).unwrap(), p).unwrap()
    }

    #[test]
    fn canonical_profiles() {
        let b = basis(5, &[2, 2]);
        assert_eq!(b.canonical(4, &[2, 1]).unwrap(), Some(Profile::new(1, vec![0, 1])));
        assert_eq!(b.canonical(0, &[1, 0]).unwrap(), None);
        assert_eq!(b.canonical(5, &[2, 1]).unwrap(), None);
        let b = basis(4, &[2, 1]);
        assert_eq!(b.canonical(2, &[0, 1]).unwrap(), Some(Profile::new(2, vec![2, 0])));
        assert!(b.canonical(5, &[0, 0]).is_err());
        assert!(b.canonical(1, &[3, 0]).is_err());
    }

    #[test]
    fn typed_canonical_sorts_counts() {
        let p = BlockPartition::from_sizes(&[3, 3]).unwrap();
        let b = ProfileBasis::with_types(SpaceId::new(7, 6).unwrap(), p, vec![0, 0]).unwrap();
        assert_eq!(b.canonical(0, &[1, 2]).unwrap(), Some(Profile::new(0, vec![2, 1])));
        assert_eq!(b.orbit_size(&Profile::new(0, vec![2, 1])), 18);
        let bad = BlockPartition::from_sizes(&[3, 2]).unwrap();
        assert!(ProfileBasis::with_types(SpaceId::new(7, 5).unwrap(), bad, vec![0, 0]).is_err());
    }

    #[test]
    fn orbit_sizes_cover_all_keys() {
        for g in 2..=6 {
            for sizes in [vec![3], vec![2, 2], vec![1, 2, 2], vec![4, 1], vec![2, 2, 2]] {
                let b = basis(g, &sizes);
                let total: u128 = b.profiles().unwrap().iter().map(|p| b.orbit_size(p)).sum();
                let keys = all_boundary_indices(b.space()).unwrap().len() as u128;
                assert_eq!(total, keys, "g={g} sizes={sizes:?}");
            }
        }
    }

    #[test]
    fn orbit_sizes_sum_to_power_of_two() {
        let b = basis(9, &[3, 4, 5]);
        for i in 1..=4 {
            let total: u128 = b
                .profiles()
                .unwrap()
                .iter()
                .filter(|p| p.i == i)
                .map(|p| b.orbit_size(p))
                .sum();
            assert_eq!(total, 1 << 12);
        }
    }

    #[test]
    fn typed_profile_enumeration_matches_untyped_orbits() {
        let p = BlockPartition::from_sizes(&[2, 2, 2]).unwrap();
        let space = SpaceId::new(6, 6).unwrap();
        let typed = ProfileBasis::with_types(space, p, vec![0, 0, 0]).unwrap();
        let total: u128 = typed.profiles().unwrap().iter().map(|q| typed.orbit_size(q)).sum();
        assert_eq!(total, all_boundary_indices(space).unwrap().len() as u128);
    }

    #[test]
    fn symmetrize_and_expand() {
        let space = SpaceId::new(5, 3).unwrap();
        let part = BlockPartition::single(3);
        let d12 = FullDivisorClass::boundary_class(space, 0, &[1, 2]).unwrap();
        let s = ProfileDivisorClass::symmetrize(&d12, &part).unwrap();
        assert_eq!(s.coefficient(0, &[2]).unwrap(), CoefInterval::exact(Rational::new(1, 3)));
        assert_eq!(s.profile_entries().len(), 1);

        let mut one = ProfileDivisorClass::zero(ProfileBasis::new(space, part.clone()).unwrap());
        one.set_coefficient(0, &[2], CoefInterval::exact(Rational::one())).unwrap();
        let e = one.expand().unwrap();
        for pair in [[1, 2], [1, 3], [2, 3]] {
            let m = labels_mask(space, &pair).unwrap();
            assert_eq!(e.boundary(0, m).unwrap(), Rational::one());
        }
        assert_eq!(e.boundary_entries().len(), 3);

        let lam = FullDivisorClass::lambda_class(space);
        let s = ProfileDivisorClass::symmetrize(&lam, &part).unwrap();
        assert_eq!(s.expand().unwrap(), lam);
    }

    #[test]
    fn json_round_trip() {
        let b = basis(6, &[2, 3]);
        let mut x = ProfileDivisorClass::zero(b);
        x.set_lambda(CoefInterval::exact(Rational::from_int(13)));
        x.set_coefficient(
            1,
            &[1, 2],
            CoefInterval::at_most(Rational::from_int(-1), crate::symmetry::Assumption::SlopeTail),
        )
        .unwrap();
        let js = serde_json::to_string(&x.to_json()).unwrap();
        assert!(js.contains("\"lo\":\"-inf\""));
        let back: ProfileClassJson = serde_json::from_str(&js).unwrap();
        assert_eq!(ProfileDivisorClass::from_json(&back).unwrap(), x);
    }
}
