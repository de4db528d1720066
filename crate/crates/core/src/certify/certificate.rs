//! Coordinate-wise verification of
//! `K_G − μ_D·π*D − μ_L·Σ π_k*L_k − μ_W·W − η·ψ >= 0` in the profile basis.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::fm::{ingredients, CertificateInput, Ingredients};
use crate::catalog::{weierstrass_normalized, SlopeEntry};
use crate::error::Result;
use crate::picard::SpaceId;
use crate::pullback::pulled_coefficient;
use crate::rational::Rational;
use crate::symmetry::{
    canonical_class_kg_on, Assumption, BlockPartition, CoefInterval, IntervalJson, Profile, ProfileBasis,
    ProfileClassJson, ProfileDivisorClass,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "assumptions", rename_all = "snake_case")]
pub enum CoordStatus {
    ProvedExact,
    ProvedByBound(Vec<Assumption>),
    Unproved,
}

impl CoordStatus {
    pub fn of(c: &CoefInterval) -> Self {
        if !c.is_nonnegative() {
            CoordStatus::Unproved
        } else if c.assumptions().is_empty() {
            CoordStatus::ProvedExact
        } else {
            CoordStatus::ProvedByBound(c.assumptions().iter().copied().collect())
        }
    }

    pub fn is_proved(&self) -> bool {
        !matches!(self, CoordStatus::Unproved)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grade {
    GeneralType,
    NonNegativeKodaira,
    Fail,
}

/// A named coordinate of the remainder.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coordinate {
    Lambda,
    Irr,
    Psi(usize),
    Boundary(Profile),
}

impl std::fmt::Display for Coordinate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coordinate::Lambda => f.write_str("λ"),
            Coordinate::Irr => f.write_str("δ_irr"),
            Coordinate::Psi(k) => write!(f, "Ψ_{}", k + 1),
            Coordinate::Boundary(p) => write!(f, "δ{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub ingredients: Ingredients,
    pub remainder: ProfileDivisorClass,
    pub status: BTreeMap<Coordinate, CoordStatus>,
    pub grade: Grade,
}

impl Certificate {
    pub fn input(&self) -> &CertificateInput {
        &self.ingredients.input
    }

    pub fn epsilon(&self) -> &Rational {
        &self.ingredients.epsilon
    }

    pub fn eta(&self) -> &Rational {
        &self.ingredients.eta
    }

    pub fn f(&self) -> &Rational {
        &self.ingredients.f
    }

    pub fn slope(&self) -> &SlopeEntry {
        &self.ingredients.slope
    }

    pub fn all_proved(&self) -> bool {
        self.status.values().all(CoordStatus::is_proved)
    }

    pub fn unproved(&self) -> Vec<&Coordinate> {
        self.status
            .iter()
            .filter(|(_, s)| !s.is_proved())
            .map(|(c, _)| c)
            .collect()
    }

    /// Remainder coefficient at `(i; counts)` for any representative.
    pub fn remainder_at(&self, i: u32, counts: &[u32]) -> Result<CoefInterval> {
        self.remainder.coefficient(i, counts)
    }

    /// Every assumption used, with the number of coordinates relying on it.
    pub fn assumption_usage(&self) -> BTreeMap<Assumption, usize> {
        let mut out = BTreeMap::new();
        for s in self.status.values() {
            if let CoordStatus::ProvedByBound(deps) = s {
                for d in deps {
                    *out.entry(*d).or_insert(0) += 1;
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> CertificateJson {
        let ing = &self.ingredients;
        let thirteen = Rational::from_int(13);
        let remainder = self
            .status
            .iter()
            .map(|(coord, st)| {
                let c = match coord {
                    Coordinate::Lambda => self.remainder.lambda().clone(),
                    Coordinate::Irr => self.remainder.irr().clone(),
                    Coordinate::Psi(k) => self.remainder.psi(*k).clone(),
                    Coordinate::Boundary(p) => self.remainder.at(p),
                };
                RemainderEntryJson {
                    coordinate: coord.clone(),
                    interval: (&c).into(),
                    status: st.clone(),
                }
            })
            .collect();
        let mut counts = StatusCountsJson::default();
        for s in self.status.values() {
            match s {
                CoordStatus::ProvedExact => counts.proved_exact += 1,
                CoordStatus::ProvedByBound(_) => counts.proved_by_bound += 1,
                CoordStatus::Unproved => counts.unproved += 1,
            }
        }
        CertificateJson {
            input: ing.input.clone(),
            slope: ing.slope.clone(),
            epsilon: ing.epsilon.clone(),
            eta: ing.eta.clone(),
            f: ing.f.clone(),
            f_relative: ing.f.relative_to(&thirteen),
            multipliers: MultipliersJson {
                d: ing.mult_d.clone(),
                l: ing.mult_l.clone(),
                w: ing.mult_w.clone(),
                psi: ing.eta.clone(),
            },
            w: WeierstrassJson {
                a: ing.a.clone(),
                b: ing.b.clone(),
            },
            remainder,
            status: counts,
            verdict: self.grade,
            assumptions: self
                .assumption_usage()
                .into_iter()
                .map(|(a, coordinates)| AssumptionJson {
                    name: a,
                    declared: a.is_declared(),
                    description: a.describe().to_string(),
                    coordinates,
                })
                .collect(),
            remainder_class: self.remainder.to_json(),
        }
    }
}

/// Blocks with equal size and equal divisor choice are interchangeable.
fn block_types(input: &CertificateInput) -> Vec<usize> {
    let mut seen: Vec<(u32, crate::catalog::EntryName)> = Vec::new();
    input
        .blocks
        .iter()
        .zip(&input.entries)
        .map(|(&n, &e)| match seen.iter().position(|x| *x == (n, e)) {
            Some(t) => t,
            None => {
                seen.push((n, e));
                seen.len() - 1
            }
        })
        .collect()
}

pub fn build_certificate(input: &CertificateInput) -> Result<Certificate> {
    let ing = ingredients(input)?;
    let g = input.g;
    let n = input.n();
    let space = SpaceId::new(g, n)?;
    let partition = BlockPartition::from_sizes(&input.blocks)?;
    let m = partition.len();
    let basis = ProfileBasis::with_types(space, partition, block_types(input))?;

    let d = ing.slope.class()?;
    let w = weierstrass_normalized(g, n)?.class;
    let ls: Vec<ProfileDivisorClass> = ing.entries.iter().map(|e| e.class()).collect::<Result<_>>()?;

    let swaps: Vec<bool> = input.blocks.iter().map(|&s| s >= 2).collect();
    let kg = canonical_class_kg_on(basis.clone(), &swaps)?;
    let d_map = vec![None; m];
    let w_map = vec![Some(0); m];
    let l_maps: Vec<Vec<Option<usize>>> = (0..m)
        .map(|k| (0..m).map(|j| (j == k).then_some(0)).collect())
        .collect();

    let neg = |x: &Rational| -x.clone();
    let mut rem = ProfileDivisorClass::zero(basis.clone());
    let lam = kg
        .lambda()
        .add_scaled(d.lambda(), &neg(&ing.mult_d))
        .add_scaled(w.lambda(), &neg(&ing.mult_w));
    let lam = ls.iter().fold(lam, |acc, l| acc.add_scaled(l.lambda(), &neg(&ing.mult_l)));
    rem.set_lambda(lam);
    let irr = kg
        .irr()
        .add_scaled(d.irr(), &neg(&ing.mult_d))
        .add_scaled(w.irr(), &neg(&ing.mult_w));
    let irr = ls.iter().fold(irr, |acc, l| acc.add_scaled(l.irr(), &neg(&ing.mult_l)));
    rem.set_irr(irr);
    for k in 0..m {
        let psi = kg
            .psi(k)
            .add_scaled(ls[k].psi(0), &neg(&ing.mult_l))
            .add_scaled(w.psi(0), &neg(&ing.mult_w))
            .add_scaled(&CoefInterval::exact(Rational::one()), &neg(&ing.eta));
        rem.set_psi(k, psi);
    }
    for p in basis.profiles()? {
        let mut c = kg.at(&p);
        c = c.add_scaled(&pulled_coefficient(&d, &d_map, p.i, &p.counts), &neg(&ing.mult_d));
        c = c.add_scaled(&pulled_coefficient(&w, &w_map, p.i, &p.counts), &neg(&ing.mult_w));
        for (l, map) in ls.iter().zip(&l_maps) {
            c = c.add_scaled(&pulled_coefficient(l, map, p.i, &p.counts), &neg(&ing.mult_l));
        }
        rem.set_coefficient(p.i, &p.counts, c)?;
    }

    let mut status = BTreeMap::new();
    status.insert(Coordinate::Lambda, CoordStatus::of(rem.lambda()));
    status.insert(Coordinate::Irr, CoordStatus::of(rem.irr()));
    let mut psi_seen = BTreeSet::new();
    for k in 0..m {
        if psi_seen.insert(basis.types()[k]) {
            status.insert(Coordinate::Psi(k), CoordStatus::of(rem.psi(k)));
        }
    }
    for p in basis.profiles()? {
        status.insert(Coordinate::Boundary(p.clone()), CoordStatus::of(&rem.at(&p)));
    }
    let proved = status.values().all(CoordStatus::is_proved);
    let grade = match (proved, ing.eta.is_positive()) {
        (true, true) => Grade::GeneralType,
        (true, false) => Grade::NonNegativeKodaira,
        _ => Grade::Fail,
    };
    Ok(Certificate {
        ingredients: ing,
        remainder: rem,
        status,
        grade,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipliersJson {
    #[serde(rename = "D")]
    pub d: Rational,
    #[serde(rename = "L")]
    pub l: Rational,
    #[serde(rename = "W")]
    pub w: Rational,
    pub psi: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassJson {
    pub a: Rational,
    pub b: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemainderEntryJson {
    pub coordinate: Coordinate,
    #[serde(flatten)]
    pub interval: IntervalJson,
    pub status: CoordStatus,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusCountsJson {
    pub proved_exact: usize,
    pub proved_by_bound: usize,
    pub unproved: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssumptionJson {
    pub name: Assumption,
    pub declared: bool,
    pub description: String,
    pub coordinates: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub input: CertificateInput,
    pub slope: SlopeEntry,
    pub epsilon: Rational,
    pub eta: Rational,
    pub f: Rational,
    pub f_relative: String,
    pub multipliers: MultipliersJson,
    #[serde(rename = "W")]
    pub w: WeierstrassJson,
    pub remainder: Vec<RemainderEntryJson>,
    pub status: StatusCountsJson,
    pub verdict: Grade,
    pub assumptions: Vec<AssumptionJson>,
    pub remainder_class: ProfileClassJson,
}
