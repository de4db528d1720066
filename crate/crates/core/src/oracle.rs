//! Slow reference computations in the subset basis, used to cross-check the
//! closed forms and the profile engine.

use rand::Rng;

use crate::catalog::{weierstrass_normalized, weierstrass_params};
use crate::certify::{build_certificate, CertificateInput, Certificate};
use crate::error::{Error, Result};
use crate::picard::{all_boundary_indices, canonical_class, labels_mask, FullDivisorClass, SpaceId};
use crate::pullback::{pullback_full, pullback_onepoint_oracle, ForgetfulMap};
use crate::rational::{binom_q, Rational};
use crate::symmetry::{group_cap, BlockPartition, CoefInterval, Ext, GroupSpec, ProfileDivisorClass};

/// `(w_λ, w_ψ, w_2)` by pulling `W(g; a)` back along every projection and summing.
///
/// Only `λ`, `ψ` and two-point rational tails of the factor enter these
/// coordinates, so larger tails are left out of the factor.
pub fn weierstrass_bruteforce(g: u32, n: u32, m: u32) -> Result<(Rational, Rational, Rational)> {
    if m == 0 || m > n || m > g {
        return Err(Error::Domain(format!("need 1 <= m <= min(n, g), got g={g} n={n} m={m}")));
    }
    let p = weierstrass_params(g, m)?;
    let source = SpaceId::new(g, n)?;
    let target = SpaceId::new(g, m)?;
    let mut total = FullDivisorClass::zero(source);
    for kept_mask in 1u64..(1 << n) {
        if kept_mask.count_ones() != m {
            continue;
        }
        let kept: Vec<u32> = (1..=n).filter(|l| kept_mask >> (l - 1) & 1 == 1).collect();
        // choose which r of the kept points carry weight k + 1
        for heavy in 0u64..(1 << m) {
            if heavy.count_ones() != p.r {
                continue;
            }
            let weight = |j: u32| if heavy >> (j - 1) & 1 == 1 { p.k + 1 } else { p.k };
            let mut w = FullDivisorClass::zero(target);
            w.set_lambda(Rational::from_int(-1));
            for j in 1..=m {
                w.add_psi(j, &binom_q(weight(j) as i64 + 1, 2))?;
                for l in j + 1..=m {
                    let c = -binom_q((weight(j) + weight(l)) as i64 + 1, 2);
                    w.add_boundary(0, labels_mask(target, &[j, l])?, &c)?;
                }
            }
            let pulled = pullback_full(&w, &ForgetfulMap::new(source, &kept)?)?;
            total = crate::picard::linear_combine(&[(Rational::one(), &total), (Rational::one(), &pulled)])?;
        }
    }
    let w_2 = if n >= 2 {
        -total.boundary(0, labels_mask(source, &[1, 2])?)?
    } else {
        Rational::zero()
    };
    Ok((-total.lambda().clone(), total.psi(1), w_2))
}

/// `(1/|G|) Σ_σ σ·X` by enumerating the group.
pub fn group_average(x: &FullDivisorClass, group: &GroupSpec) -> Result<FullDivisorClass> {
    if group.n() != x.space().n {
        return Err(Error::Domain("group and class act on different numbers of points".into()));
    }
    let elements = group.enumerate(group_cap())?;
    let weight = Rational::new(1, elements.len() as i64);
    let mut out = FullDivisorClass::zero(x.space());
    for sigma in &elements {
        let moved = x.relabel(&sigma.images())?;
        out = crate::picard::linear_combine(&[(Rational::one(), &out), (weight.clone(), &moved)])?;
    }
    Ok(out)
}

/// A value inside `c`: the upper end, or a random rational step below it.
fn sample_in<R: Rng>(c: &CoefInterval, rng: &mut R) -> Rational {
    if let Some(q) = c.exact_value() {
        return q.clone();
    }
    let step = Rational::new(rng.gen_range(1..=64), 8);
    match (c.lo(), c.hi()) {
        (_, Ext::Finite(hi)) if rng.gen_bool(0.25) => hi.clone(),
        (Ext::Finite(lo), Ext::Finite(hi)) => {
            let t = Rational::new(rng.gen_range(0..=16), 16);
            lo + &(t * (hi - lo))
        }
        (_, Ext::Finite(hi)) => hi - &step,
        (Ext::Finite(lo), _) => lo + &step,
        _ => step,
    }
}

/// Expands a profile class, drawing every subset coefficient independently from its interval.
pub fn expand_sampled<R: Rng>(x: &ProfileDivisorClass, rng: &mut R) -> Result<FullDivisorClass> {
    let space = x.space();
    let part = x.partition();
    let mut out = FullDivisorClass::zero(space);
    out.set_lambda(sample_in(x.lambda(), rng));
    out.set_irr(sample_in(x.irr(), rng));
    for l in 1..=space.n {
        let k = part.block_of(l).expect("partition covers every label");
        out.add_psi(l, &sample_in(x.psi(k), rng))?;
    }
    for key in all_boundary_indices(space)? {
        let c = x.coefficient(key.i, &part.counts_of(key.set))?;
        out.add_boundary(key.i, key.set, &sample_in(&c, rng))?;
    }
    Ok(out)
}

/// `K − R` in the subset basis, `R` summing the two-point tails inside each block.
pub fn kg_full(space: SpaceId, partition: &BlockPartition) -> Result<FullDivisorClass> {
    let mut k = canonical_class(space)?;
    let minus_one = Rational::from_int(-1);
    for block in partition.blocks() {
        for (a, &i) in block.iter().enumerate() {
            for &j in &block[a + 1..] {
                k.add_boundary(0, labels_mask(space, &[i, j])?, &minus_one)?;
            }
        }
    }
    Ok(k)
}

/// One random realization of the remainder of `cert` in the subset basis.
pub fn sampled_remainder<R: Rng>(cert: &Certificate, rng: &mut R) -> Result<FullDivisorClass> {
    let ing = &cert.ingredients;
    let input = &ing.input;
    let space = SpaceId::new(input.g, input.n())?;
    let partition = BlockPartition::from_sizes(&input.blocks)?;

    let mut d = expand_sampled(&ing.slope.class()?, rng)?;
    for l in 1..=space.n {
        d = pullback_onepoint_oracle(&d, l)?;
    }
    let w = expand_sampled(&weierstrass_normalized(input.g, space.n)?.class, rng)?;
    let mut terms = vec![
        (Rational::one(), kg_full(space, &partition)?),
        (-ing.mult_d.clone(), d),
        (-ing.mult_w.clone(), w),
        (-ing.eta.clone(), FullDivisorClass::psi_total(space)),
    ];
    for (entry, block) in ing.entries.iter().zip(partition.blocks()) {
        let l = expand_sampled(&entry.class()?, rng)?;
        let pulled = pullback_full(&l, &ForgetfulMap::new(space, block)?)?;
        terms.push((-ing.mult_l.clone(), pulled));
    }
    let refs: Vec<(Rational, &FullDivisorClass)> = terms.iter().map(|(c, x)| (c.clone(), x)).collect();
    crate::picard::linear_combine(&refs)
}

/// Every coordinate of `x` that is negative.
pub fn negative_coordinates(x: &FullDivisorClass) -> Vec<String> {
    let mut out = Vec::new();
    if x.lambda().is_negative() {
        out.push(format!("λ = {}", x.lambda()));
    }
    if x.irr().is_negative() {
        out.push(format!("δ_irr = {}", x.irr()));
    }
    for (l, c) in x.psi_entries() {
        if c.is_negative() {
            out.push(format!("ψ_{l} = {c}"));
        }
    }
    for (key, c) in x.boundary_entries() {
        if c.is_negative() {
            out.push(format!("δ_{{{},{:?}}} = {c}", key.i, key.labels()));
        }
    }
    out
}

/// Draws `samples` remainders of a proved certificate and reports the first negative one.
pub fn sample_bound_soundness<R: Rng>(input: &CertificateInput, samples: usize, rng: &mut R) -> Result<Option<Vec<String>>> {
    let cert = build_certificate(input)?;
    if !cert.all_proved() {
        return Err(Error::Domain("sampling needs a certificate with every coordinate proved".into()));
    }
    for _ in 0..samples {
        let bad = negative_coordinates(&sampled_remainder(&cert, rng)?);
        if !bad.is_empty() {
            return Ok(Some(bad));
        }
    }
    Ok(None)
}
