//! Groups acting on marked points, the profile basis of invariant classes,
//! the ramification divisor `R` and the canonical class `K_G = K − R`.

pub mod group;
pub mod interval;
pub mod profile;

pub use group::{group_cap, parse_group, BlockPartition, GroupKind, GroupSpec, Permutation, DEFAULT_GROUP_CAP};
pub use interval::{Assumption, CoefInterval, Ext, IntervalJson};
pub use profile::{Profile, ProfileBasis, ProfileClassJson, ProfileDivisorClass, PROFILE_CAP};

use crate::error::Result;
use crate::picard::SpaceId;
use crate::rational::Rational;

/// Profile basis on which `R` and `K_G` are written, with per-block swap flags.
pub fn ramification_basis(g: u32, group: &GroupSpec) -> Result<(ProfileBasis, Vec<bool>)> {
    let (partition, swaps) = group.ramification_basis()?;
    let basis = ProfileBasis::new(SpaceId::new(g, group.n())?, partition)?;
    Ok((basis, swaps))
}

/// `R = Σ_{(i j) ∈ G} δ_{0,{i,j}}`.
pub fn ramification_class(g: u32, group: &GroupSpec) -> Result<ProfileDivisorClass> {
    let (basis, swaps) = ramification_basis(g, group)?;
    ramification_on(basis, &swaps)
}

/// `R` on a given basis: coefficient 1 on the within-block pair profile of every swap block.
pub fn ramification_on(basis: ProfileBasis, swaps: &[bool]) -> Result<ProfileDivisorClass> {
    let m = basis.partition().len();
    let mut out = ProfileDivisorClass::zero(basis);
    for (k, _) in swaps.iter().enumerate().filter(|(_, s)| **s) {
        let mut counts = vec![0; m];
        counts[k] = 2;
        out.set_coefficient(0, &counts, CoefInterval::exact(Rational::one()))?;
    }
    Ok(out)
}

/// `K_G = 13λ + ψ − 2δ − R`.
pub fn canonical_class_kg(g: u32, group: &GroupSpec) -> Result<ProfileDivisorClass> {
    let (basis, swaps) = ramification_basis(g, group)?;
    canonical_class_kg_on(basis, &swaps)
}

pub fn canonical_class_kg_on(basis: ProfileBasis, swaps: &[bool]) -> Result<ProfileDivisorClass> {
    let mut out = canonical_class_on(basis.clone())?;
    out.add_scaled(&ramification_on(basis, swaps)?, &Rational::from_int(-1))?;
    Ok(out)
}

/// `K = 13λ + ψ − 2δ` in profile form.
pub fn canonical_class_on(basis: ProfileBasis) -> Result<ProfileDivisorClass> {
    let profiles = basis.profiles()?;
    let mut out = ProfileDivisorClass::zero(basis);
    out.set_lambda(CoefInterval::exact(Rational::from_int(13)));
    out.set_psi_all(CoefInterval::exact(Rational::one()));
    out.set_irr(CoefInterval::exact(Rational::from_int(-2)));
    for p in profiles {
        out.set_coefficient(p.i, &p.counts, CoefInterval::exact(Rational::from_int(-2)))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::canonical_class;

    fn exact(p: i64) -> CoefInterval {
        CoefInterval::exact(Rational::from_int(p))
    }

    #[test]
    fn ramification_examples() {
        let bp = GroupSpec::block_product(BlockPartition::from_sizes(&[2, 2]).unwrap());
        let r = ramification_class(5, &bp).unwrap();
        assert_eq!(r.coefficient(0, &[2, 0]).unwrap(), exact(1));
        assert_eq!(r.coefficient(0, &[0, 2]).unwrap(), exact(1));
        assert_eq!(r.coefficient(0, &[1, 1]).unwrap(), exact(0));
        assert!(ramification_class(5, &GroupSpec::alternating(4))
            .unwrap()
            .profile_entries()
            .is_empty());
        let r = ramification_class(5, &GroupSpec::full_symmetric(2)).unwrap();
        assert_eq!(r.expand().unwrap(), crate::picard::FullDivisorClass::boundary_class(SpaceId::new(5, 2).unwrap(), 0, &[1, 2]).unwrap());
    }

    #[test]
    fn kg_examples() {
        let k = canonical_class_kg(5, &GroupSpec::full_symmetric(2)).unwrap();
        assert_eq!(k.coefficient(0, &[2]).unwrap(), exact(-3));
        assert_eq!(k.lambda(), &exact(13));
        let bp = GroupSpec::block_product(BlockPartition::from_sizes(&[2, 2]).unwrap());
        let k = canonical_class_kg(5, &bp).unwrap();
        assert_eq!(k.coefficient(0, &[1, 1]).unwrap(), exact(-2));
        assert_eq!(k.coefficient(0, &[2, 0]).unwrap(), exact(-3));
        assert_eq!(k.psi(1), &exact(1));
    }

    #[test]
    fn kg_is_k_minus_r_in_full_basis() {
        for spec in ["prod:2,3", "S4", "A4", "gen:(1 2);(3 4 5)", "trivial"] {
            let n = if spec == "S4" || spec == "A4" { 4 } else { 5 };
            let group = parse_group(spec, n).unwrap();
            for g in [2, 3, 4] {
                let kg = canonical_class_kg(g, &group).unwrap().expand().unwrap();
                let mut expect = canonical_class(SpaceId::new(g, n).unwrap()).unwrap();
                for (i, j) in group.transpositions().unwrap() {
                    let d = crate::picard::FullDivisorClass::boundary_class(expect.space(), 0, &[i, j]).unwrap();
                    expect.add_scaled(&d, &Rational::from_int(-1)).unwrap();
                }
                assert_eq!(kg, expect, "{spec} g={g}");
            }
        }
    }
}
