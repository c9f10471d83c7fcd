//! Seeded random checks of the ring laws on classes and series.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graded::{GradedClass, GradedRing, Monomial};
use crate::manifolds::partitions;
use crate::rational::{frac, int, Rational};
use crate::series::Series;

/// Every monomial of `ring` up to its truncation.
pub fn monomials(ring: GradedRing) -> Vec<Monomial> {
    let mut out = Vec::new();
    let max_u = if ring.has_euler() { ring.max_degree() } else { 0 };
    for u in 0..=max_u {
        let rest = ring.max_degree() - u;
        for half in 0..=rest / 2 {
            for lambda in partitions(half) {
                if lambda.iter().all(|&i| i <= ring.pontryagin_count()) {
                    let m = Monomial::from_partition(&lambda);
                    out.push(Monomial::from_exponents(m.pontryagin_exponents(), u));
                }
            }
        }
    }
    out
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

/// A class with roughly half of the monomials present.
pub fn random_class(rng: &mut ChaCha8Rng, ring: GradedRing) -> GradedClass {
    let mut terms = Vec::new();
    for m in monomials(ring) {
        if rng.gen_bool(0.5) {
            terms.push((m, random_rational(rng)));
        }
    }
    GradedClass::from_terms(ring, terms)
}

fn check(ok: bool, what: &str, seed: u64) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invalid(format!("{what} fails for seed {seed}")))
    }
}

/// Associativity, commutativity, distributivity, inverses, exp/log and
/// truncation on random classes in dimension 12 with an Euler class, plus
/// series inverses.
pub fn ring_law_check(seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = GradedRing::for_dimension(12, true);
    let (a, b, c) = (
        random_class(&mut rng, ring),
        random_class(&mut rng, ring),
        random_class(&mut rng, ring),
    );
    check(&(&a * &b) * &c == &a * &(&b * &c), "associativity", seed)?;
    check(&a * &b == &b * &a, "commutativity", seed)?;
    check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity", seed)?;

    let unit = &a + &GradedClass::constant(ring, int(rng.gen_range(1..=5)));
    let unit = if unit.constant_term() == int(0) { &unit + &GradedClass::one(ring) } else { unit };
    check(&unit * &unit.try_inverse()? == GradedClass::one(ring), "inverse", seed)?;

    let nilpotent = &b - &GradedClass::constant(ring, b.constant_term());
    check(nilpotent.exp()?.log()? == nilpotent, "log after exp", seed)?;
    let one_plus = &GradedClass::one(ring) + &nilpotent;
    check(one_plus.log()?.exp()? == one_plus, "exp after log", seed)?;

    let small = ring.with_max_degree(4);
    check(
        (&a * &b).embed(small)? == &a.embed(small)? * &b.embed(small)?,
        "truncation",
        seed,
    )?;

    let order = 8;
    let mut coeffs: Vec<Rational> = (0..=order).map(|_| random_rational(&mut rng)).collect();
    if coeffs[0] == int(0) {
        coeffs[0] = int(1);
    }
    let s = Series::new(coeffs);
    check(s.mul(&s.inverse()?) == Series::one(&int(0), order), "series inverse", seed)
}
