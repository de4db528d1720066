//! The scalar part of a certificate: `ε`, `η`, the multipliers and `f_m`.

use serde::{Deserialize, Serialize};

use crate::catalog::{catalog_entry, slope_min, weierstrass_a, weierstrass_b, CatalogEntry, EntryName, SlopeEntry};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A partition `n = n_1 + ... + n_m` with one divisor choice per block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateInput {
    pub g: u32,
    pub blocks: Vec<u32>,
    #[serde(with = "entry_names")]
    pub entries: Vec<EntryName>,
}

mod entry_names {
    use super::EntryName;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[EntryName], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|e| e.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<EntryName>, D::Error> {
        let names = Vec::<String>::deserialize(d)?;
        names
            .iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

impl CertificateInput {
    /// Weierstrass divisors on every block.
    pub fn closed(g: u32, blocks: &[u32]) -> Self {
        CertificateInput {
            g,
            blocks: blocks.to_vec(),
            entries: vec![EntryName::Weierstrass; blocks.len()],
        }
    }

    pub fn general(g: u32, blocks: &[u32], entries: &[EntryName]) -> Result<Self> {
        if entries.len() != blocks.len() {
            return Err(Error::Domain("one divisor choice per block required".into()));
        }
        Ok(CertificateInput {
            g,
            blocks: blocks.to_vec(),
            entries: entries.to_vec(),
        })
    }

    pub fn n(&self) -> u32 {
        self.blocks.iter().sum()
    }

    pub fn is_closed(&self) -> bool {
        self.entries.iter().all(|e| *e == EntryName::Weierstrass)
    }
}

/// Everything a certificate needs besides the boundary bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ingredients {
    pub input: CertificateInput,
    pub slope: SlopeEntry,
    pub entries: Vec<CatalogEntry>,
    pub epsilon: Rational,
    pub eta: Rational,
    pub mult_d: Rational,
    pub mult_l: Rational,
    pub mult_w: Rational,
    /// `a(g,n)` and `b(g,n)` of `W_{g,n}` on the whole space.
    pub a: Rational,
    pub b: Rational,
    pub f: Rational,
}

pub fn ingredients(input: &CertificateInput) -> Result<Ingredients> {
    let g = input.g;
    if input.blocks.is_empty() || input.blocks.contains(&0) {
        return Err(Error::Domain("blocks must be positive".into()));
    }
    if input.entries.len() != input.blocks.len() {
        return Err(Error::Domain("one divisor choice per block required".into()));
    }
    let max = *input.blocks.iter().max().unwrap();
    if max > g {
        return Err(Error::CriterionInapplicable(format!(
            "largest block {max} exceeds g = {g}, so b(g, n_k) < 3"
        )));
    }
    if max < 2 {
        return Err(Error::CriterionInapplicable(
            "all blocks are singletons; the group is trivial and the transposition-free rule applies".into(),
        ));
    }
    let slope = slope_min(g)?;
    let mut entries = Vec::with_capacity(input.blocks.len());
    for (&nk, &name) in input.blocks.iter().zip(&input.entries) {
        let e = catalog_entry(name, g, Some(nk))?;
        if e.n != nk {
            return Err(Error::Domain(format!("{name} lives on n = {}, not on a block of size {nk}", e.n)));
        }
        entries.push(e);
    }
    let epsilon = input
        .blocks
        .iter()
        .zip(&entries)
        .filter(|(nk, _)| **nk >= 2)
        .map(|(_, e)| &e.b_pair - Rational::from_int(3))
        .min()
        .expect("some block has at least two points");
    if epsilon.is_negative() || (!input.is_closed() && !epsilon.is_positive()) {
        return Err(Error::CriterionInapplicable(format!(
            "ε = {epsilon}; every divisor choice needs b_k > 3"
        )));
    }
    let n = input.n();
    let (a, b) = (weierstrass_a(g, n), weierstrass_b(g, n));
    let one = Rational::one();
    let mult_l = (&one + &epsilon).recip();
    let mult_w = Rational::from_int(2) * &epsilon / (&b * (&one + &epsilon));
    let eta = &epsilon / (&one + &epsilon) * (&one - Rational::from_int(2) / &b);
    let b_irr: Rational = entries.iter().map(|e| &e.b_irr).sum();
    let mult_d = (Rational::from_int(2) - &mult_l * b_irr).positive_part();
    let a_sum: Rational = entries.iter().map(|e| &e.a).sum();
    let f = &mult_d * &slope.slope + &mult_l * a_sum - &mult_w * &a;
    Ok(Ingredients {
        input: input.clone(),
        slope,
        entries,
        epsilon,
        eta,
        mult_d,
        mult_l,
        mult_w,
        a,
        b,
        f,
    })
}

/// `f_m(g; n_1..n_m)` with Weierstrass divisors on every block.
pub fn f_closed(g: u32, blocks: &[u32]) -> Result<Rational> {
    Ok(ingredients(&CertificateInput::closed(g, blocks))?.f)
}

/// `f_m(g; n_1..n_m, L_1..L_m)` for catalog choices `L_k`; requires every `b_k > 3`.
pub fn f_general(g: u32, blocks: &[u32], entries: &[EntryName]) -> Result<Rational> {
    let input = CertificateInput::general(g, blocks, entries)?;
    let ing = ingredients(&input)?;
    if !ing.epsilon.is_positive() {
        return Err(Error::CriterionInapplicable(format!("ε = {} is not positive", ing.epsilon)));
    }
    Ok(ing.f)
}
