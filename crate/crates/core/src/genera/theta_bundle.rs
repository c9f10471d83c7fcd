//! Chern characters of the q-series bundles Θ₁ and Θ₂.
//!
//! Every tangent-bundle factor is a total exterior or symmetric power of
//! `T̃ = T_C M - C^dim`. Their logarithms are sums of Adams operations,
//! `log ch Λ_t(E) = Σ_a (-1)^{a+1} t^a ψ^a(E) / a` and
//! `log ch S_t(E) = Σ_a t^a ψ^a(E) / a`, with
//! `ψ^a(T̃) = Σ_j (e^{a x_j} + e^{-a x_j} - 2)`, so the whole product is one
//! additive symmetrisation per q-order followed by an exponential. Factors
//! in `ξ` are multiplied in directly.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{GradedClass, GradedRing};
use crate::rational::{int, Rational};
use crate::series::{HalfQSeries, Series};

use super::bridge::PowerSumBridge;
use super::forms::{cosh_series, LineBundleTerms};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ThetaElement {
    /// Θ₁, paired with L̂
    First,
    /// Θ₂, paired with Â
    Second,
}

/// The formal variable `t = ±q^{half_steps / 2}` of a total power operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Level {
    pub negative: bool,
    pub half_steps: usize,
}

impl Level {
    pub fn q_pow(half_steps: usize) -> Self {
        Self {
            negative: false,
            half_steps,
        }
    }

    pub fn minus_q_pow(half_steps: usize) -> Self {
        Self {
            negative: true,
            half_steps,
        }
    }

    fn sign_pow(&self, a: usize) -> i64 {
        if self.negative && a % 2 == 1 {
            -1
        } else {
            1
        }
    }
}

/// Accumulates `Σ_j Σ_a c_{j,a} ψ^a(T̃) q^{j/2}`.
#[derive(Debug, Default)]
struct AdamsLog {
    terms: BTreeMap<usize, BTreeMap<usize, Rational>>,
}

impl AdamsLog {
    fn add(&mut self, j: usize, a: usize, c: Rational) {
        let slot = self.terms.entry(j).or_default().entry(a).or_insert_with(|| int(0));
        *slot += c;
    }

    fn exterior(&mut self, level: Level, order: usize) {
        for a in 1..=order / level.half_steps {
            let sign = if a % 2 == 1 { 1 } else { -1 } * level.sign_pow(a);
            self.add(a * level.half_steps, a, Rational::new(sign.into(), (a as i64).into()));
        }
    }

    fn symmetric(&mut self, level: Level, order: usize) {
        for a in 1..=order / level.half_steps {
            let sign = level.sign_pow(a);
            self.add(a * level.half_steps, a, Rational::new(sign.into(), (a as i64).into()));
        }
    }

    fn exponentiate(&self, bridge: &PowerSumBridge, order: usize) -> Result<HalfQSeries<GradedClass>> {
        let ring = bridge.ring();
        let r = bridge.max_power();
        let mut log = vec![GradedClass::zero(ring); order + 1];
        for (&j, adams) in &self.terms {
            let mut even = Series::zero(&int(0), r);
            for (&a, c) in adams {
                // c (2 cosh(a x) - 2)
                let psi = cosh_series(&int(a as i64), r)
                    .sub(&Series::one(&int(0), r))
                    .scale(&(c * int(2)));
                even = even.add(&psi);
            }
            log[j] = bridge.symmetrize_additive(&even);
        }
        Series::new(log).exp()
    }
}

/// `ch Λ_t(T̃_C M)`.
pub fn exterior_powers_reduced_tangent(
    bridge: &PowerSumBridge,
    level: Level,
    order: usize,
) -> Result<HalfQSeries<GradedClass>> {
    let mut log = AdamsLog::default();
    log.exterior(level, order);
    log.exponentiate(bridge, order)
}

/// `ch S_t(T̃_C M)`.
pub fn symmetric_powers_reduced_tangent(
    bridge: &PowerSumBridge,
    level: Level,
    order: usize,
) -> Result<HalfQSeries<GradedClass>> {
    let mut log = AdamsLog::default();
    log.symmetric(level, order);
    log.exponentiate(bridge, order)
}

/// `ch Λ_t(ξ̃_C) = (1 + ch(ξ_C) t + t²) / (1 + t)²`.
pub fn exterior_powers_reduced_line(
    ring: GradedRing,
    level: Level,
    order: usize,
) -> Result<HalfQSeries<GradedClass>> {
    let terms = LineBundleTerms::new(ring)?;
    let sign = int(level.sign_pow(1));
    let l = level.half_steps;
    let unit = GradedClass::one(ring);
    let numerator = Series::constant(unit.clone(), order)
        .add(&Series::monomial(terms.ch_xi.scaled(&sign), l, order))
        .add(&Series::monomial(unit.clone(), 2 * l, order));
    let one_plus_t = Series::constant(int(1), order).add(&Series::monomial(sign, l, order));
    let denominator = one_plus_t.pow(2).inverse()?;
    Ok(numerator.mul(&denominator.map(|c| unit.scaled(c))))
}

fn product_over(
    ring: GradedRing,
    order: usize,
    levels: impl Iterator<Item = Level>,
    power: i64,
) -> Result<HalfQSeries<GradedClass>> {
    let mut acc = Series::one(&GradedClass::one(ring), order);
    for level in levels.take_while(|l| l.half_steps <= order) {
        acc = acc.mul(&exterior_powers_reduced_line(ring, level, order)?.powi(power)?);
    }
    Ok(acc)
}

/// `ch Θ_i(T_C M)` or, if `twisted`, `ch Θ_i(T_C M, ξ_C)`, through
/// `q^{order/2}`. The bridge ring must carry `u` exactly when `twisted`.
pub fn theta_element_ch(
    which: ThetaElement,
    twisted: bool,
    bridge: &PowerSumBridge,
    order: usize,
) -> Result<HalfQSeries<GradedClass>> {
    let ring = bridge.ring();
    if twisted && !ring.has_euler() {
        return Err(Error::Structural(
            "twisted Θ needs a ring with an Euler class".into(),
        ));
    }
    let mut log = AdamsLog::default();
    for n in 1..=order / 2 {
        log.symmetric(Level::q_pow(2 * n), order);
    }
    match which {
        ThetaElement::First => {
            for m in 1..=order / 2 {
                log.exterior(Level::q_pow(2 * m), order);
            }
        }
        ThetaElement::Second => {
            for m in 1..=order.div_ceil(2) {
                log.exterior(Level::minus_q_pow(2 * m - 1), order);
            }
        }
    }
    let untwisted = log.exponentiate(bridge, order)?;
    if !twisted {
        return Ok(untwisted);
    }
    let integral = (1..).map(|n| Level::q_pow(2 * n));
    let half_plus = (1..).map(|n| Level::q_pow(2 * n - 1));
    let half_minus = (1..).map(|n| Level::minus_q_pow(2 * n - 1));
    let twist = match which {
        ThetaElement::First => product_over(ring, order, integral, -2)?
            .mul(&product_over(ring, order, half_plus, 1)?)
            .mul(&product_over(ring, order, half_minus, 1)?),
        ThetaElement::Second => product_over(ring, order, half_minus, -2)?
            .mul(&product_over(ring, order, half_plus, 1)?)
            .mul(&product_over(ring, order, integral, 1)?),
    };
    Ok(untwisted.mul(&twist))
}
