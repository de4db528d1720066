//! Built-in consistency suites behind `modquot selfcheck`.

use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::catalog::{weierstrass_a, weierstrass_b, weierstrass_summed, EntryName};
use crate::certify::{build_certificate, classify, f_closed, f_general, Classification, CertificateInput, Grade};
use crate::certify::{certificate::Coordinate, stored_table, TableId};
use crate::error::{Error, Result};
use crate::oracle::{group_average, sample_bound_soundness, weierstrass_bruteforce};
use crate::picard::{all_boundary_indices, FullDivisorClass, SpaceId};
use crate::pullback::{pullback_aggregate, pullback_full, ForgetfulMap};
use crate::rational::Rational;
use crate::symmetry::{parse_group, BlockPartition, GroupSpec, ProfileDivisorClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(Error::Parse(format!("unknown level {s:?}; expected quick or full"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfCheckReport {
    pub level: Level,
    pub checks: Vec<CheckResult>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Counts cases and remembers the first failure.
struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, name: &str) -> CheckResult {
        CheckResult {
            name: name.into(),
            passed: self.failure.is_none(),
            cases: self.cases,
            detail: self.failure.unwrap_or_else(|| "ok".into()),
        }
    }
}

fn run_check(name: &str, f: impl FnOnce(&mut Tally) -> Result<()>) -> CheckResult {
    let mut t = Tally::new();
    if let Err(e) = f(&mut t) {
        t.failure.get_or_insert_with(|| format!("error: {e}"));
    }
    t.finish(name)
}

fn closed_forms(t: &mut Tally) -> Result<()> {
    for g in 2..=30 {
        for n in 1..=30 {
            let s = weierstrass_summed(g, n, g.min(n))?;
            let (a, b) = (weierstrass_a(g, n), weierstrass_b(g, n));
            t.check(&a * &s.w_psi == s.w_lambda, || format!("a({g},{n})·w_ψ ≠ w_λ"));
            t.check(&b * &s.w_psi == s.w_2, || format!("b({g},{n})·w_ψ ≠ w_2"));
        }
    }
    Ok(())
}

fn boundary_identities(t: &mut Tally) -> Result<()> {
    let three = Rational::from_int(3);
    for g in 5..=40u32 {
        t.check(weierstrass_b(g, g - 1) == three, || format!("b({g},{}) ≠ 3", g - 1));
        t.check(weierstrass_b(g, g) == three, || format!("b({g},{g}) ≠ 3"));
        for n in 2..=g - 2 {
            t.check(weierstrass_b(g, n) > three, || format!("b({g},{n}) ≤ 3"));
        }
        for n in g + 1..=40 {
            t.check(weierstrass_b(g, n) < three, || format!("b({g},{n}) ≥ 3"));
        }
    }
    Ok(())
}

fn spot_values(t: &mut Tally) -> Result<()> {
    let thirteen = Rational::from_int(13);
    let f = f_closed(23, &[2, 2])?;
    t.check(f == &thirteen - &Rational::new(11, 396), || format!("f(23,(2,2)) = {f}"));
    let f = f_closed(10, &[7, 7])?;
    t.check(f == &thirteen - &Rational::new(13, 175), || format!("f(10,(7,7)) = {f}"));
    let f = f_closed(23, &[23])?;
    t.check(f == Rational::from_int(12), || format!("f(23,(23)) = {f}"));
    for (g, nk, e) in [(20, 4, EntryName::F(8)), (22, 5, EntryName::Ftilde(9)), (24, 23, EntryName::T)] {
        let f = f_general(g, &[nk, nk], &[e, e])?;
        t.check(f <= thirteen, || format!("f_general({g},({nk},{nk}),{e}) = {f} > 13"));
    }
    Ok(())
}

/// Exact zeros of the remainder on the certified difference-variety cases.
fn certificate_zeros(t: &mut Tally) -> Result<()> {
    let thirteen = Rational::from_int(13);
    for row in &stored_table(TableId::Diff).rows {
        let g = row.g;
        let blocks = [row.n_min, row.n_min];
        let input = match crate::certify::tables::certifying_input(g, 2, row.n_min, crate::certify::SearchMode::General)? {
            Some(i) => i,
            None => continue,
        };
        let c = build_certificate(&input)?;
        t.check(c.grade == Grade::GeneralType, || format!("g={g} {blocks:?}: grade {:?}", c.grade));
        let lam = c.remainder.lambda().exact_value().cloned();
        t.check(lam == Some(&thirteen - c.f()), || format!("g={g}: λ-coordinate ≠ 13 − f"));
        t.check(c.remainder.psi(0).is_zero(), || format!("g={g}: ψ-coordinate ≠ 0"));
        t.check(c.remainder.coefficient(0, &[1, 1])?.is_zero(), || format!("g={g}: cross pair ≠ 0"));
        if input.is_closed() {
            t.check(c.remainder.irr().is_zero(), || format!("g={g}: δ_irr ≠ 0"));
        }
        t.check(
            c.status.get(&Coordinate::Lambda).is_some_and(|s| s.is_proved()),
            || format!("g={g}: λ unproved"),
        );
    }
    Ok(())
}

fn verdicts(t: &mut Tally) -> Result<()> {
    let cases = [
        (25, 40, "A40", Classification::GeneralType),
        (10, 12, "S12", Classification::Uniruled),
        (9, 5, "S5", Classification::Unirational),
        (12, 12, "S12", Classification::IntermediateKodaira(33)),
    ];
    for (g, n, spec, want) in cases {
        let got = classify(g, n, &parse_group(spec, n)?)?.classification;
        t.check(got == want, || format!("({g},{n},{spec}) → {got:?}, expected {want:?}"));
    }
    for g in 4..=25 {
        for n in 4..=18 {
            let got = classify(g, n, &parse_group("gen:(1 2)(3 4)", n)?)?.classification;
            let free = classify(g, n, &GroupSpec::trivial(n))?.classification;
            t.check(got == free, || format!("({g},{n},<(1 2)(3 4)>) → {got:?}, trivial group → {free:?}"));
        }
    }
    Ok(())
}

fn transposition_counts(t: &mut Tally, rng: &mut StdRng) -> Result<()> {
    for _ in 0..50 {
        let m = rng.gen_range(1..=5);
        let sizes: Vec<u32> = (0..m).map(|_| rng.gen_range(1..=8)).collect();
        let group = GroupSpec::block_product(BlockPartition::from_sizes(&sizes)?);
        let want: usize = sizes.iter().map(|&s| (s * (s - 1) / 2) as usize).sum();
        let got = group.transpositions()?.len();
        t.check(got == want, || format!("blocks {sizes:?}: {got} transpositions, expected {want}"));
    }
    Ok(())
}

fn stored_tables(t: &mut Tally) -> Result<()> {
    let expect: [(TableId, u32, &[u32]); 3] = [
        (TableId::Mgn, 4, &[16, 15, 16, 15, 14, 13, 11, 12, 11, 11, 10, 10, 9, 9, 9, 7, 6, 4, 4]),
        (TableId::Msn, 12, &[10, 11, 10, 10, 9, 9, 10, 7, 6, 4, 7, 1]),
        (TableId::Diff, 10, &[7, 8, 8, 7, 7, 7, 6, 6, 7, 5, 4, 3, 5, 2]),
    ];
    for (id, g0, values) in expect {
        let rows = &stored_table(id).rows;
        t.check(rows.len() == values.len(), || format!("{id}: {} rows", rows.len()));
        for (j, (row, &v)) in rows.iter().zip(values).enumerate() {
            t.check(row.g == g0 + j as u32 && row.n_min == v, || format!("{id}: row {row:?}"));
        }
    }
    Ok(())
}

fn bruteforce_weierstrass(t: &mut Tally) -> Result<()> {
    for g in 2..=12 {
        for n in 1..=7 {
            for m in 1..=n.min(g) {
                let s = weierstrass_summed(g, n, m)?;
                let got = weierstrass_bruteforce(g, n, m)?;
                let want = (s.w_lambda, s.w_psi, if n >= 2 { s.w_2 } else { Rational::zero() });
                t.check(got == want, || format!("(g,n,m)=({g},{n},{m}): brute force {got:?}, closed form {want:?}"));
            }
        }
    }
    Ok(())
}

fn basis_classes(space: SpaceId) -> Result<Vec<FullDivisorClass>> {
    let mut out = vec![FullDivisorClass::lambda_class(space), FullDivisorClass::irr_class(space)];
    for l in 1..=space.n {
        out.push(FullDivisorClass::psi_class(space, l)?);
    }
    for key in all_boundary_indices(space)? {
        let mut x = FullDivisorClass::zero(space);
        x.add_boundary(key.i, key.set, &Rational::one())?;
        out.push(x);
    }
    Ok(out)
}

fn pullback_equivalence(t: &mut Tally) -> Result<()> {
    for g in 2..=5 {
        for n in 1..=6u32 {
            let source = SpaceId::new(g, n)?;
            for mask in 1u64..(1 << n) {
                let kept: Vec<u32> = (1..=n).filter(|l| mask >> (l - 1) & 1 == 1).collect();
                let rest: Vec<u32> = (1..=n).filter(|l| mask >> (l - 1) & 1 == 0).collect();
                let mut blocks = vec![kept.clone()];
                if !rest.is_empty() {
                    blocks.push(rest);
                }
                let ambient = BlockPartition::new(n, blocks)?;
                let map = ForgetfulMap::new(source, &kept)?;
                let tpart = BlockPartition::single(kept.len() as u32);
                for x in basis_classes(map.target())? {
                    let oracle = ProfileDivisorClass::symmetrize(&pullback_full(&x, &map)?, &ambient)?;
                    let agg = pullback_aggregate(&ProfileDivisorClass::symmetrize(&x, &tpart)?, &map, &ambient)?;
                    t.check(agg == oracle, || format!("g={g} n={n} kept={kept:?}"));
                }
            }
        }
    }
    Ok(())
}

fn group_averages(t: &mut Tally) -> Result<()> {
    for (n, sizes) in [(3, vec![3]), (4, vec![2, 2]), (5, vec![3, 2]), (5, vec![2, 2, 1])] {
        let space = SpaceId::new(3, n)?;
        let part = BlockPartition::from_sizes(&sizes)?;
        let group = GroupSpec::block_product(part.clone());
        for x in basis_classes(space)? {
            let avg = group_average(&x, &group)?;
            let sym = ProfileDivisorClass::symmetrize(&x, &part)?.expand()?;
            t.check(avg == sym, || format!("n={n} blocks {sizes:?}: {x:?}"));
        }
    }
    Ok(())
}

fn bound_sampling(t: &mut Tally, rng: &mut StdRng, samples: usize) -> Result<()> {
    for (g, blocks) in [(23, vec![2, 2]), (23, vec![3, 3]), (23, vec![2, 1]), (21, vec![3, 3])] {
        let input = CertificateInput::closed(g, &blocks);
        let bad = sample_bound_soundness(&input, samples, rng)?;
        t.check(bad.is_none(), || format!("g={g} {blocks:?}: negative coordinates {:?}", bad.unwrap_or_default()));
    }
    Ok(())
}

pub fn run_selfcheck(level: Level) -> SelfCheckReport {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut checks = vec![
        run_check("weierstrass closed forms", closed_forms),
        run_check("boundary identities of b(g,n)", boundary_identities),
        run_check("spot values of f", spot_values),
        run_check("certificate exact zeros", certificate_zeros),
        run_check("classification verdicts", verdicts),
        run_check("transposition counts", |t| transposition_counts(t, &mut rng)),
        run_check("stored tables", stored_tables),
    ];
    if level == Level::Full {
        checks.push(run_check("weierstrass brute force", bruteforce_weierstrass));
        checks.push(run_check("pullback oracle", pullback_equivalence));
        checks.push(run_check("group averages", group_averages));
        checks.push(run_check("bound sampling", |t| bound_sampling(t, &mut rng, 100)));
    }
    SelfCheckReport { level, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        let r = run_selfcheck(Level::Quick);
        for c in &r.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn tally_keeps_first_failure() {
        let r = run_check("demo", |t| {
            t.check(true, || "a".into());
            t.check(false, || "b".into());
            t.check(false, || "c".into());
            Ok(())
        });
        assert_eq!((r.passed, r.cases, r.detail.as_str()), (false, 3, "b"));
        let r = run_check("err", |_| Err(Error::Domain("x".into())));
        assert!(!r.passed && r.detail.contains("domain error"));
    }
}
