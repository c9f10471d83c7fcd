//! Jacobi theta functions from their product formulas.
//!
//! With `z = q^{1/2}` and `y` standing for `2π√-1 v`:
//!
//! ```text
//! θ(v)  = 2 q^{1/8} sin(πv) Π (1-q^j)(1-e^y q^j)(1-e^{-y} q^j)
//! θ₁(v) = 2 q^{1/8} cos(πv) Π (1-q^j)(1+e^y q^j)(1+e^{-y} q^j)
//! θ₂(v) =                   Π (1-q^j)(1-e^y q^{j-1/2})(1-e^{-y} q^{j-1/2})
//! θ₃(v) =                   Π (1-q^j)(1+e^y q^{j-1/2})(1+e^{-y} q^{j-1/2})
//! ```
//!
//! Constants `2`, `q^{1/8}` and `π` are carried in a [`Prefactor`] so every
//! series stays rational. A prefactor may only be materialised when it is a
//! power of two times an integral power of `q^{1/2}`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{int, pow2, Rational};
use crate::series::{HalfQSeries, Series};

use crate::genera::forms::cosh_series;

/// `2^pow2 · q^{pow_q8/8} · π^pow_pi`
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Prefactor {
    pub pow2: i32,
    pub pow_q8: i32,
    pub pow_pi: i32,
}

impl Prefactor {
    pub const ONE: Prefactor = Prefactor {
        pow2: 0,
        pow_q8: 0,
        pow_pi: 0,
    };

    pub fn times(self, rhs: Prefactor) -> Prefactor {
        Prefactor {
            pow2: self.pow2 + rhs.pow2,
            pow_q8: self.pow_q8 + rhs.pow_q8,
            pow_pi: self.pow_pi + rhs.pow_pi,
        }
    }

    pub fn pow(self, n: i32) -> Prefactor {
        Prefactor {
            pow2: self.pow2 * n,
            pow_q8: self.pow_q8 * n,
            pow_pi: self.pow_pi * n,
        }
    }

    pub fn recip(self) -> Prefactor {
        self.pow(-1)
    }
}

impl fmt::Display for Prefactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^{} q^({}/8) pi^{}", self.pow2, self.pow_q8, self.pow_pi)
    }
}

/// A q-series times a symbolic prefactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaValue {
    pub prefactor: Prefactor,
    pub series: HalfQSeries<Rational>,
}

impl ThetaValue {
    pub fn times(&self, rhs: &ThetaValue) -> ThetaValue {
        ThetaValue {
            prefactor: self.prefactor.times(rhs.prefactor),
            series: self.series.mul(&rhs.series),
        }
    }

    pub fn pow(&self, n: u32) -> ThetaValue {
        ThetaValue {
            prefactor: self.prefactor.pow(n as i32),
            series: self.series.pow(n),
        }
    }

    pub fn ratio(&self, rhs: &ThetaValue) -> Result<ThetaValue> {
        Ok(ThetaValue {
            prefactor: self.prefactor.times(rhs.prefactor.recip()),
            series: self.series.mul(&rhs.series.inverse()?),
        })
    }

    /// The plain q-series, if the prefactor is rational and a whole number
    /// of half-steps.
    pub fn materialize(&self) -> Result<HalfQSeries<Rational>> {
        let p = self.prefactor;
        if p.pow_pi != 0 || p.pow_q8 < 0 || p.pow_q8 % 4 != 0 {
            return Err(Error::Prefactor(p.to_string()));
        }
        Ok(self
            .series
            .shift((p.pow_q8 / 4) as usize)
            .scale(&pow2(p.pow2)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ThetaIndex {
    One,
    Two,
    Three,
}

/// `Π_{j ≥ 1} (1 - q^j)` through `q^{order/2}`.
pub fn euler_product(order: usize) -> HalfQSeries<Rational> {
    let mut acc = Series::one(&int(0), order);
    for j in 1..=order / 2 {
        acc = acc.mul(&Series::one(&int(0), order).sub(&Series::monomial(int(1), 2 * j, order)));
    }
    acc
}

/// `Π (1 + s z^ℓ)` over the given half-step levels.
fn linear_product(sign: i64, levels: impl Iterator<Item = usize>, order: usize) -> HalfQSeries<Rational> {
    let mut acc = Series::one(&int(0), order);
    for l in levels.take_while(|&l| l <= order) {
        acc = acc.mul(&Series::one(&int(0), order).add(&Series::monomial(int(sign), l, order)));
    }
    acc
}

fn integral_levels() -> impl Iterator<Item = usize> {
    (1..).map(|j| 2 * j)
}

fn half_levels() -> impl Iterator<Item = usize> {
    (1..).map(|j| 2 * j - 1)
}

/// `θ_j(0, τ)`.
pub fn theta_null(which: ThetaIndex, order: usize) -> ThetaValue {
    let eta = euler_product(order);
    match which {
        ThetaIndex::One => ThetaValue {
            prefactor: Prefactor {
                pow2: 1,
                pow_q8: 1,
                pow_pi: 0,
            },
            series: eta.mul(&linear_product(1, integral_levels(), order).pow(2)),
        },
        ThetaIndex::Two => ThetaValue {
            prefactor: Prefactor::ONE,
            series: eta.mul(&linear_product(-1, half_levels(), order).pow(2)),
        },
        ThetaIndex::Three => ThetaValue {
            prefactor: Prefactor::ONE,
            series: eta.mul(&linear_product(1, half_levels(), order).pow(2)),
        },
    }
}

/// `θ'(0, τ) = 2 q^{1/8} π Π (1 - q^j)³`.
pub fn theta_prime_null(order: usize) -> ThetaValue {
    ThetaValue {
        prefactor: Prefactor {
            pow2: 1,
            pow_q8: 1,
            pow_pi: 1,
        },
        series: euler_product(order).pow(3),
    }
}

/// Checks `θ'(0,τ) = π θ₁(0,τ) θ₂(0,τ) θ₃(0,τ)` through `q^{order/2}`.
/// Prefactors must agree exactly; the error names the first differing
/// half-step.
pub fn jacobi_identity_check(order: usize) -> Result<()> {
    let lhs = theta_prime_null(order);
    let pi = ThetaValue {
        prefactor: Prefactor {
            pow2: 0,
            pow_q8: 0,
            pow_pi: 1,
        },
        series: Series::one(&int(0), order),
    };
    let rhs = pi
        .times(&theta_null(ThetaIndex::One, order))
        .times(&theta_null(ThetaIndex::Two, order))
        .times(&theta_null(ThetaIndex::Three, order));
    if lhs.prefactor != rhs.prefactor {
        return Err(Error::Prefactor(format!(
            "{} against {}",
            lhs.prefactor, rhs.prefactor
        )));
    }
    match lhs.series.first_difference(&rhs.series) {
        None => Ok(()),
        Some(j) => Err(Error::Mismatch {
            what: "θ'(0) and πθ₁θ₂θ₃".into(),
            q_order: j,
            degree: 0,
        }),
    }
}

/// A q-series whose coefficients are even series in one variable `y`
/// (stored in `y²`).
pub type BivariateSeries = HalfQSeries<Series<Rational>>;

/// `Π_ℓ (1 + s e^y z^ℓ)(1 + s e^{-y} z^ℓ) / (1 + s z^ℓ)²` over the levels.
fn root_pair_product(
    sign: i64,
    levels: impl Iterator<Item = usize>,
    order: usize,
    y_order: usize,
) -> BivariateSeries {
    let unit = Series::one(&int(0), y_order);
    let two_cosh = cosh_series(&int(1), y_order).scale(&int(2 * sign));
    let mut num = Series::one(&unit, order);
    let mut den = Series::one(&int(0), order);
    for l in levels.take_while(|&l| l <= order) {
        let factor = Series::one(&unit, order)
            .add(&Series::monomial(two_cosh.clone(), l, order))
            .add(&Series::monomial(unit.clone(), 2 * l, order));
        num = num.mul(&factor);
        den = den.mul(&Series::one(&int(0), order).add(&Series::monomial(int(sign), l, order)));
    }
    let den_inv = den.pow(2).inverse().expect("constant term is 1");
    num.mul(&den_inv.map(|c| unit.scale(c)))
}

fn constant_in_q(f: Series<Rational>, order: usize) -> BivariateSeries {
    Series::constant(f, order)
}

/// `θ_j(v, τ) / θ_j(0, τ)` as a series in `q^{1/2}` and `y²`.
pub fn theta_quotient(which: ThetaIndex, order: usize, y_order: usize) -> BivariateSeries {
    let half = Rational::new(1.into(), 2.into());
    match which {
        ThetaIndex::One => constant_in_q(cosh_series(&half, y_order), order)
            .mul(&root_pair_product(1, integral_levels(), order, y_order)),
        ThetaIndex::Two => root_pair_product(-1, half_levels(), order, y_order),
        ThetaIndex::Three => root_pair_product(1, half_levels(), order, y_order),
    }
}

/// `v θ'(0, τ) / θ(v, τ)` as a series in `q^{1/2}` and `y²`.
pub fn theta_derivative_quotient(order: usize, y_order: usize) -> BivariateSeries {
    let a_hat = crate::genera::forms::a_hat_root_factor(y_order);
    let inv = root_pair_product(-1, integral_levels(), order, y_order)
        .inverse()
        .expect("constant term is 1");
    constant_in_q(a_hat, order).mul(&inv)
}
