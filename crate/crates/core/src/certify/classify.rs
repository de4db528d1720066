//! Rule-based Kodaira classification of `M̄_{g,n} / G`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::certificate::{build_certificate, Grade};
use super::fm::{ingredients, CertificateInput};
use super::tables::{catalog_choice, stored_table, TableId};
use crate::catalog::EntryName;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::symmetry::{BlockPartition, GroupKind, GroupSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "kappa", rename_all = "snake_case")]
pub enum Classification {
    GeneralType,
    NonNegativeKodaira,
    /// Known Kodaira dimension strictly between 0 and the dimension.
    IntermediateKodaira(u32),
    Uniruled,
    Unirational,
    Unknown,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::GeneralType => f.write_str("general type"),
            Classification::NonNegativeKodaira => f.write_str("non-negative Kodaira dimension"),
            Classification::IntermediateKodaira(k) => write!(f, "intermediate Kodaira dimension {k}"),
            Classification::Uniruled => f.write_str("uniruled"),
            Classification::Unirational => f.write_str("unirational"),
            Classification::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: String,
    pub reference: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub g: u32,
    pub n: u32,
    pub group: String,
    pub classification: Classification,
    pub justification: Vec<Step>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

struct Builder {
    steps: Vec<Step>,
    notes: Vec<String>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            steps: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn step(&mut self, rule: &str, reference: &str, detail: impl Into<String>) {
        self.steps.push(Step {
            rule: rule.into(),
            reference: reference.into(),
            detail: detail.into(),
        });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn absorb(&mut self, mut other: Builder) {
        self.steps.append(&mut other.steps);
        self.notes.append(&mut other.notes);
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::from(1), |acc, j| acc * BigInt::from(j))
}

pub fn classify(g: u32, n: u32, group: &GroupSpec) -> Result<Verdict> {
    if group.n() != n {
        return Err(Error::Domain(format!("group acts on {} points, not {n}", group.n())));
    }
    let mut b = Builder::new();
    let classification = classify_into(g, group, &mut b)?;
    Ok(Verdict {
        g,
        n,
        group: group.to_string(),
        classification,
        justification: b.steps,
        notes: b.notes,
    })
}

fn classify_into(g: u32, group: &GroupSpec, b: &mut Builder) -> Result<Classification> {
    let n = group.n();
    match group.kind() {
        GroupKind::Trivial | GroupKind::Alternating => return Ok(transposition_free(g, n, b)),
        GroupKind::FullSymmetric if n < 2 => return Ok(transposition_free(g, n, b)),
        GroupKind::FullSymmetric => return Ok(full_symmetric(g, n, b)),
        GroupKind::BlockProduct(p) => return block_product(g, p, b),
        GroupKind::Generated(_) => {}
    }

    let ts = group.transpositions()?;
    if ts.is_empty() {
        b.step("no transpositions", "subgroups of A_n", "G contains no transposition");
        return Ok(transposition_free(g, n, b));
    }
    let order = group.order()?;
    if order == factorial(n) {
        b.step("full symmetric group", "group order", format!("|G| = {n}!"));
        return Ok(full_symmetric(g, n, b));
    }
    let orbits = group.orbit_partition()?;
    let product_order: BigInt = orbits.sizes().into_iter().map(factorial).product();
    if order == product_order {
        b.step(
            "block product",
            "group order",
            format!("|G| equals the order of the symmetric product over the orbits {orbits}"),
        );
        return block_product(g, &orbits, b);
    }

    let (ram, swaps) = group.ramification_basis()?;
    let largest = ram
        .blocks()
        .iter()
        .zip(&swaps)
        .filter(|(_, s)| **s)
        .map(|(blk, _)| blk.len() as u32)
        .max()
        .unwrap_or(0);
    if largest > g {
        b.step(
            "uniruled subquotient",
            "Riemann-Roch",
            format!(
                "the transpositions of G generate a full symmetric group on {largest} > g points; \
                 the fibre over a smooth curve dominates a symmetric product of degree > g"
            ),
        );
        return Ok(Classification::Uniruled);
    }

    let mut sub = Builder::new();
    let via_orbits = block_product(g, &orbits, &mut sub)?;
    if via_orbits == Classification::GeneralType {
        b.absorb(sub);
        b.step(
            "subgroup lemma",
            "quotients by subgroups",
            format!("G is a subgroup of the symmetric product over its orbits {orbits}"),
        );
        return Ok(Classification::GeneralType);
    }
    let mut sub = Builder::new();
    if full_symmetric(g, n, &mut sub) == Classification::GeneralType {
        b.absorb(sub);
        b.step("subgroup lemma", "quotients by subgroups", format!("G is a subgroup of S_{n}"));
        return Ok(Classification::GeneralType);
    }
    b.note(format!(
        "no rule applies: the orbit product over {orbits} is {via_orbits}, and S_{n} is not known to be of general type"
    ));
    Ok(Classification::Unknown)
}

fn transposition_free(g: u32, n: u32, b: &mut Builder) -> Classification {
    let rule = "transposition-free group";
    let reference = "K_G = K for groups without transpositions; stored mgn table";
    if g >= 23 {
        b.step(rule, reference, format!("g = {g} ≥ 23, so M̄_{{g,n}} is of general type for every n"));
        return Classification::GeneralType;
    }
    match stored_table(TableId::Mgn).n_min(g) {
        Some(nmin) if n >= nmin => {
            b.step(rule, reference, format!("n = {n} ≥ n_min({g}) = {nmin}"));
            Classification::GeneralType
        }
        Some(nmin) => {
            b.note(format!("n = {n} is below n_min({g}) = {nmin} for the pointed moduli space"));
            b.note("the extension to every subgroup of A_n whenever M̄_{g,n} is of general type is a conjecture and is not used");
            Classification::Unknown
        }
        None => {
            b.note(format!("no general-type range is recorded for g = {g}"));
            Classification::Unknown
        }
    }
}

fn full_symmetric(g: u32, n: u32, b: &mut Builder) -> Classification {
    if n > g {
        b.step("uniruled", "Riemann-Roch", format!("n = {n} > g = {g}: every degree-n divisor moves in a pencil"));
        return Classification::Uniruled;
    }
    if (g == 10 || g == 11) && n != g {
        b.step("uniruled", "known results for S_n quotients", format!("g = {g} and n ≠ g"));
        return Classification::Uniruled;
    }
    if g < 10 {
        b.step("unirational", "known results for S_n quotients", format!("g = {g} < 10 and n ≤ g"));
        return Classification::Unirational;
    }
    if g >= 12 && n == g {
        b.step(
            "intermediate Kodaira dimension",
            "known results for S_n quotients",
            format!("κ(M̄_{{g,g}}/S_g) = 3g − 3 = {} for g ≥ 12", 3 * g - 3),
        );
        return Classification::IntermediateKodaira(3 * g - 3);
    }
    if g >= 24 {
        b.step("symmetric quotient, large genus", "symmetric quotients of large genus", format!("g = {g} ≥ 24 and n = {n} < g"));
        return Classification::GeneralType;
    }
    match stored_table(TableId::Msn).n_min(g) {
        Some(nmin) if nmin <= n && n < g => {
            b.step("symmetric quotient", "stored msn table", format!("n_min({g}) = {nmin} ≤ n = {n} ≤ g − 1"));
            if g == 12 {
                b.note("the stated range of the msn result is 13 ≤ g ≤ 23; the stored g = 12 row is used");
            }
            Classification::GeneralType
        }
        Some(nmin) => {
            b.note(format!("n = {n} is below n_min({g}) = {nmin} for the S_n quotient"));
            Classification::Unknown
        }
        None => {
            b.note(format!("no result covers the S_n quotient for g = {g}, n = {n}"));
            Classification::Unknown
        }
    }
}

fn describe_entries(entries: &[EntryName]) -> String {
    entries.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

/// Runs the certificate, falling back to the scalar inequality when the
/// profile basis is too large to expand.
fn try_certificate(input: &CertificateInput, b: &mut Builder) -> Result<Option<Grade>> {
    let label = format!("g = {}, blocks {:?}, divisors [{}]", input.g, input.blocks, describe_entries(&input.entries));
    match build_certificate(input) {
        Ok(c) => {
            let f = c.f().clone();
            if c.grade == Grade::Fail {
                let bad: Vec<String> = c.unproved().iter().map(|x| x.to_string()).collect();
                b.note(format!("certificate {label}: f = {f}, unproved coordinates {}", bad.join(", ")));
            }
            Ok(Some(c.grade).filter(|g| *g != Grade::Fail).inspect(|grade| {
                b.step(
                    "certificate",
                    "block-product criterion",
                    format!("{label}: f = {f} ≤ 13, every coordinate proved, grade {grade:?}"),
                );
            }))
        }
        Err(Error::SizeCap { .. }) => {
            let ing = ingredients(input)?;
            let thirteen = Rational::from_int(13);
            if ing.f > thirteen {
                b.note(format!("{label}: f = {} > 13", ing.f));
                return Ok(None);
            }
            let grade = if ing.eta.is_positive() { Grade::GeneralType } else { Grade::NonNegativeKodaira };
            b.step(
                "scalar criterion",
                "block-product criterion",
                format!("{label}: f = {} ≤ 13 (profile basis too large to expand coordinate-wise)", ing.f),
            );
            Ok(Some(grade))
        }
        Err(Error::CriterionInapplicable(msg)) => {
            b.note(format!("{label}: {msg}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn block_product(g: u32, p: &BlockPartition, b: &mut Builder) -> Result<Classification> {
    let n = p.n();
    let sizes = p.sizes();
    if sizes.iter().all(|&s| s < 2) {
        b.step("trivial group", "block sizes", "every block is a singleton");
        return Ok(transposition_free(g, n, b));
    }
    if sizes.len() == 1 {
        return Ok(full_symmetric(g, n, b));
    }
    let max = *sizes.iter().max().unwrap();
    if max > g {
        b.step(
            "uniruled",
            "Riemann-Roch",
            format!("a block of size {max} > g = {g}; a product with a uniruled factor is uniruled"),
        );
        return Ok(Classification::Uniruled);
    }
    let mut sub = Builder::new();
    if full_symmetric(g, n, &mut sub) == Classification::GeneralType {
        b.absorb(sub);
        b.step("subgroup lemma", "quotients by subgroups", format!("G ⊂ S_{n}"));
        return Ok(Classification::GeneralType);
    }
    if g >= 24 && max + 1 <= g {
        b.step("block product, large genus", "block-product criterion, large genus", format!("g = {g} ≥ 24 and max n_k = {max} ≤ g − 1"));
        return Ok(Classification::GeneralType);
    }

    let closed = CertificateInput::closed(g, &sizes);
    let closed_grade = try_certificate(&closed, b)?;
    if closed_grade == Some(Grade::GeneralType) {
        return Ok(Classification::GeneralType);
    }
    let entries: Option<Vec<EntryName>> = sizes
        .iter()
        .map(|&s| match catalog_choice(g, s) {
            Some(e) => Some(e),
            None if s + 2 <= g => Some(EntryName::Weierstrass),
            None => None,
        })
        .collect();
    if let Some(entries) = entries.filter(|e| e.iter().any(|x| *x != EntryName::Weierstrass)) {
        let general = CertificateInput::general(g, &sizes, &entries)?;
        if try_certificate(&general, b)? == Some(Grade::GeneralType) {
            return Ok(Classification::GeneralType);
        }
    }
    if closed_grade == Some(Grade::NonNegativeKodaira) {
        return Ok(Classification::NonNegativeKodaira);
    }
    Ok(Classification::Unknown)
}
