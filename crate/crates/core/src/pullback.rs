//! Pullbacks along forgetful maps and the `ω`/`ψ` change of basis.
//!
//! The aggregate path works in the profile basis and is polynomial in `n`.
//! The one-point path works in the subset basis, one forgotten point at a
//! time, and serves as an oracle for the aggregate one.

use crate::error::{Error, Result};
use crate::picard::{labels_mask, mask_labels, FullDivisorClass, SpaceId, FULL_BASIS_CAP};
use crate::rational::Rational;
use crate::symmetry::{BlockPartition, CoefInterval, ProfileBasis, ProfileDivisorClass};

/// `π: M(g,n) → M(g,|kept|)` forgetting every label outside `kept`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForgetfulMap {
    source: SpaceId,
    kept: Vec<u32>,
}

impl ForgetfulMap {
    pub fn new(source: SpaceId, kept: &[u32]) -> Result<Self> {
        let mut kept = kept.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if kept.is_empty() {
            return Err(Error::Domain("a forgetful map keeps at least one label".into()));
        }
        labels_mask(source, &kept)?;
        Ok(ForgetfulMap { source, kept })
    }

    pub fn source(&self) -> SpaceId {
        self.source
    }

    pub fn kept(&self) -> &[u32] {
        &self.kept
    }

    pub fn target(&self) -> SpaceId {
        SpaceId {
            g: self.source.g,
            n: self.kept.len() as u32,
        }
    }

    pub fn forgotten(&self) -> Vec<u32> {
        (1..=self.source.n).filter(|l| self.kept.binary_search(l).is_err()).collect()
    }
}

/// For each block of `ambient`, the block of `target` it lands in under `map`
/// (`None` when forgotten). Kept labels are renumbered `1..=|kept|` in order.
fn block_map(map: &ForgetfulMap, ambient: &BlockPartition, target: &BlockPartition) -> Result<Vec<Option<usize>>> {
    if ambient.n() != map.source.n {
        return Err(Error::Domain("ambient partition does not live on the source space".into()));
    }
    let mut out = Vec::with_capacity(ambient.len());
    for block in ambient.blocks() {
        let inside = block.iter().filter(|l| map.kept.binary_search(l).is_ok()).count();
        if inside == 0 {
            out.push(None);
            continue;
        }
        if inside != block.len() {
            return Err(Error::Domain(format!("kept set splits the block {block:?}")));
        }
        let images: Vec<u32> = block
            .iter()
            .map(|l| map.kept.binary_search(l).unwrap() as u32 + 1)
            .collect();
        let tk = target.block_of(images[0]).expect("target partition covers its labels");
        if images.iter().any(|&l| target.block_of(l) != Some(tk)) {
            return Err(Error::Domain(format!("block {block:?} straddles target blocks")));
        }
        out.push(Some(tk));
    }
    Ok(out)
}

/// Coefficient of `π*X` at the source profile `(i; counts)`.
///
/// `map[k]` names the target block that source block `k` is sent into, or
/// `None` when block `k` is forgotten. Source profiles are read on their
/// rational-tail side when `i = 0`.
pub fn pulled_coefficient(target: &ProfileDivisorClass, map: &[Option<usize>], i: u32, counts: &[u32]) -> CoefInterval {
    let m = target.partition().len();
    let mut tc = vec![0u32; m];
    for (k, c) in counts.iter().enumerate() {
        if let Some(t) = map[k] {
            tc[t] += c;
        }
    }
    let mut out = target.coefficient_unchecked(i, &tc);
    if i == 0 && tc.iter().sum::<u32>() == 1 && counts.iter().sum::<u32>() >= 2 {
        let t = tc.iter().position(|&c| c == 1).unwrap();
        out = &out - target.psi(t);
    }
    out
}

/// `π*` of the target `λ, δ_irr, Ψ` coordinates onto a source basis.
fn pull_non_boundary(target: &ProfileDivisorClass, map: &[Option<usize>], out: &mut ProfileDivisorClass) {
    out.set_lambda(target.lambda().clone());
    out.set_irr(target.irr().clone());
    for (k, t) in map.iter().enumerate() {
        out.set_psi(k, t.map(|t| target.psi(t).clone()).unwrap_or_default());
    }
}

/// Pullback of a block-symmetric target class onto the source basis `basis`.
pub fn pullback_with_map(
    target: &ProfileDivisorClass,
    basis: &ProfileBasis,
    map: &[Option<usize>],
) -> Result<ProfileDivisorClass> {
    if target.space().g != basis.space().g {
        return Err(Error::Domain("pullback between different genera".into()));
    }
    let mut out = ProfileDivisorClass::zero(basis.clone());
    pull_non_boundary(target, map, &mut out);
    for p in basis.profiles()? {
        let c = pulled_coefficient(target, map, p.i, &p.counts);
        out.set_coefficient(p.i, &p.counts, c)?;
    }
    Ok(out)
}

/// Aggregate pullback `π*X` onto the block-symmetric basis `ambient`.
///
/// The kept set must be a union of ambient blocks, and each kept block must
/// land inside one block of the target class.
pub fn pullback_aggregate(
    target: &ProfileDivisorClass,
    map: &ForgetfulMap,
    ambient: &BlockPartition,
) -> Result<ProfileDivisorClass> {
    if target.space() != map.target() {
        return Err(Error::Domain(format!(
            "class lives on {} but the map targets {}",
            target.space(),
            map.target()
        )));
    }
    let bm = block_map(map, ambient, target.partition())?;
    let basis = ProfileBasis::new(map.source, ambient.clone())?;
    pullback_with_map(target, &basis, &bm)
}

/// Pullback from `M(g,0)` (every point forgotten) onto `basis`.
pub fn pullback_from_mg(target: &ProfileDivisorClass, basis: &ProfileBasis) -> Result<ProfileDivisorClass> {
    if target.space().n != 0 {
        return Err(Error::Domain("expected a class on the space without marked points".into()));
    }
    let map = vec![None; basis.partition().len()];
    pullback_with_map(target, basis, &map)
}

/// Pulls `x` back along the map forgetting one point, inserted as label
/// `label` of the source (old labels `>= label` shift up by one).
pub fn pullback_onepoint_oracle(x: &FullDivisorClass, label: u32) -> Result<FullDivisorClass> {
    let old = x.space();
    if label == 0 || label > old.n + 1 {
        return Err(Error::Domain(format!("insertion position {label} out of range 1..={}", old.n + 1)));
    }
    let new = SpaceId { g: old.g, n: old.n + 1 };
    if new.boundary_bound() > FULL_BASIS_CAP || new.n > 63 {
        return Err(Error::SizeCap {
            what: "one-point pullback",
            needed: new.boundary_bound(),
            cap: FULL_BASIS_CAP,
        });
    }
    let shift = |l: u32| if l < label { l } else { l + 1 };
    let shift_mask = |m: u64| mask_labels(m).into_iter().fold(0u64, |acc, l| acc | 1 << (shift(l) - 1));
    let new_bit = 1u64 << (label - 1);
    let mut out = FullDivisorClass::zero(new);
    out.set_lambda(x.lambda().clone());
    out.set_irr(x.irr().clone());
    for (l, c) in x.psi_entries() {
        let l2 = shift(*l);
        out.add_psi(l2, c)?;
        out.add_boundary(0, 1 << (l2 - 1) | new_bit, &-c)?;
    }
    for (key, c) in x.boundary_entries() {
        let t = shift_mask(key.set);
        out.add_boundary(key.i, t, c)?;
        out.add_boundary(key.i, t | new_bit, c)?;
    }
    Ok(out)
}

/// `π*X` in the subset basis, realized by inserting the forgotten labels
/// one at a time in increasing order.
pub fn pullback_full(x: &FullDivisorClass, map: &ForgetfulMap) -> Result<FullDivisorClass> {
    if x.space() != map.target() {
        return Err(Error::Domain("class does not live on the target of the map".into()));
    }
    let mut cur = x.clone();
    let mut present = map.kept.clone();
    for f in map.forgotten() {
        let pos = present.iter().filter(|&&l| l < f).count() as u32 + 1;
        cur = pullback_onepoint_oracle(&cur, pos)?;
        present.insert(pos as usize - 1, f);
    }
    Ok(cur)
}

fn check_small(space: SpaceId) -> Result<()> {
    if space.n > 30 || space.boundary_bound() > FULL_BASIS_CAP {
        return Err(Error::SizeCap {
            what: "ω/ψ change of basis",
            needed: space.boundary_bound(),
            cap: FULL_BASIS_CAP,
        });
    }
    Ok(())
}

/// Reads the `ψ` entries of `x` as `ω_i = ψ_i − Σ_{S ∋ i} δ_{0,S}` and rewrites them in `ψ`.
pub fn omega_base_change(x: &FullDivisorClass) -> Result<FullDivisorClass> {
    change_basis(x, &Rational::from_int(-1))
}

/// Inverse of [`omega_base_change`].
pub fn psi_to_omega(x: &FullDivisorClass) -> Result<FullDivisorClass> {
    change_basis(x, &Rational::one())
}

fn change_basis(x: &FullDivisorClass, sign: &Rational) -> Result<FullDivisorClass> {
    let space = x.space();
    check_small(space)?;
    let mut out = x.clone();
    let full = space.full_mask();
    for (l, c) in x.psi_entries() {
        let bit = 1u64 << (l - 1);
        let rest = full & !bit;
        // every nonempty subset of the other labels
        let mut sub = rest;
        while sub != 0 {
            out.add_boundary(0, sub | bit, &(c * sign))?;
            sub = (sub - 1) & rest;
        }
    }
    Ok(out)
}
