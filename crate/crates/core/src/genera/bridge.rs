//! Symmetric functions of Chern roots expressed in Pontryagin classes.
//!
//! The tangent bundle of a `dim`-manifold complexifies to roots `±x_j`,
//! `j = 1..m` with `m = dim / 2`, and `p_i` is the `i`-th elementary
//! symmetric function of the `x_j²`. A symmetric expression `Σ_j f(x_j)` or
//! `Π_j f(x_j)` with `f` even only needs the power sums
//! `s_{2r} = Σ_j x_j^{2r}`, which Newton's identities write in the `p_i`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graded::{GradedClass, GradedRing};
use crate::rational::{int, Rational};
use crate::ring::Ring;
use crate::series::Series;

/// How an [`EvenSeries`] is combined over the roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combination {
    /// `Π_j f(x_j)`
    Multiplicative,
    /// `Σ_j f(x_j)`
    Additive,
}

/// `f(x) = Σ_r a_r x^{2r}` together with how it is combined over roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenSeries {
    coeffs: Series<Rational>,
    combination: Combination,
}

impl EvenSeries {
    /// `coeffs[r]` is the coefficient of `x^{2r}`.
    pub fn new(coeffs: Series<Rational>, combination: Combination) -> Self {
        Self {
            coeffs,
            combination,
        }
    }

    pub fn multiplicative(coeffs: Series<Rational>) -> Self {
        Self::new(coeffs, Combination::Multiplicative)
    }

    pub fn additive(coeffs: Series<Rational>) -> Self {
        Self::new(coeffs, Combination::Additive)
    }

    pub fn combination(&self) -> Combination {
        self.combination
    }

    /// The coefficients as a series in `x²`.
    pub fn coefficients(&self) -> &Series<Rational> {
        &self.coeffs
    }

    pub fn coefficient(&self, r: usize) -> Rational {
        self.coeffs.coeff(r).cloned().unwrap_or_else(|_| Rational::zero())
    }
}

/// Power sums `s_2, s_4, ...` of `m` root pairs, as classes in a fixed ring.
#[derive(Clone, Debug)]
pub struct PowerSumBridge {
    roots: u32,
    ring: GradedRing,
    // power_sums[r - 1] = s_{2r}
    power_sums: Vec<GradedClass>,
}

impl PowerSumBridge {
    /// `roots` root pairs, classes living in `ring`.
    pub fn new(roots: u32, ring: GradedRing) -> Self {
        let max_r = ring.max_degree() / 2;
        let elementary = |i: u32| {
            if i <= roots && i <= ring.pontryagin_count() {
                GradedClass::pontryagin(ring, i as usize)
            } else {
                GradedClass::zero(ring)
            }
        };
        let mut power_sums: Vec<GradedClass> = Vec::with_capacity(max_r as usize);
        for r in 1..=max_r {
            // s_{2r} = Σ_{i=1}^{r-1} (-1)^{i-1} e_i s_{2(r-i)} + (-1)^{r-1} r e_r
            let mut s = elementary(r).scaled(&int(if r % 2 == 1 { r as i64 } else { -(r as i64) }));
            for i in 1..r {
                let term = elementary(i).times(&power_sums[(r - i - 1) as usize]);
                s = if i % 2 == 1 { s.plus(&term) } else { s.minus(&term) };
            }
            power_sums.push(s);
        }
        Self {
            roots,
            ring,
            power_sums,
        }
    }

    /// Bridge for the tangent bundle of a `dim`-manifold, optionally with
    /// an Euler-class variable in the ring.
    pub fn for_dimension(dim: u32, euler: bool) -> Self {
        Self::new(dim / 2, GradedRing::for_dimension(dim, euler))
    }

    pub fn roots(&self) -> u32 {
        self.roots
    }

    pub fn ring(&self) -> GradedRing {
        self.ring
    }

    /// Largest `r` for which `x^{2r}` survives truncation.
    pub fn max_power(&self) -> usize {
        self.power_sums.len()
    }

    /// `s_{2r}` for `r >= 1`.
    pub fn power_sum(&self, r: usize) -> &GradedClass {
        &self.power_sums[r - 1]
    }

    /// `Σ_j f(x_j) = m a_0 + Σ_r a_r s_{2r}`.
    pub fn symmetrize_additive(&self, f: &Series<Rational>) -> GradedClass {
        let coeffs = f.coeffs();
        let mut out = GradedClass::constant(self.ring, &coeffs[0] * int(self.roots as i64));
        for (r, a) in coeffs.iter().enumerate().skip(1).take(self.max_power()) {
            if !Zero::is_zero(a) {
                out = out.plus(&self.power_sums[r - 1].scaled(a));
            }
        }
        out
    }

    /// `Π_j f(x_j) = exp(Σ_j log f(x_j))`; needs `a_0 = 1`.
    pub fn symmetrize_multiplicative(&self, f: &Series<Rational>) -> Result<GradedClass> {
        if !One::is_one(f.leading()) {
            return Err(Error::Domain(
                "multiplicative root factor must have constant term 1".into(),
            ));
        }
        let log = f.truncate(self.max_power()).log()?;
        self.symmetrize_additive(&log).exp()
    }

    pub fn symmetrize(&self, f: &EvenSeries) -> Result<GradedClass> {
        match f.combination() {
            Combination::Additive => Ok(self.symmetrize_additive(f.coefficients())),
            Combination::Multiplicative => self.symmetrize_multiplicative(f.coefficients()),
        }
    }
}
