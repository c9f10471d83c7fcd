//! Writing `P₂` in the basis `(8δ₂)^{e} ε₂^r` and rebuilding `P₁` from it.
//!
//! `ε₂` starts at `q^{1/2}` and `δ₂(0) = -1/8`, so the `r`-th basis element
//! starts at `q^{r/2}` with coefficient `±1` and the system is triangular.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::GradedClass;
use crate::rational::{int, pow2, Rational};
use crate::series::{HalfQSeries, Series};

use super::forms::{modular_form, FormName};
use super::pseries::{first_disagreement, Case, PSeries};

/// Which pair of forms spans the basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Basis {
    /// `δ₁, ε₁`, the side of `P₁`
    First,
    /// `δ₂, ε₂`, the side of `P₂`
    Second,
}

/// `(8δ)^{e} ε^r` with `e` from [`Case::delta_exponent`].
pub fn basis_element(case: Case, k: u32, r: u32, basis: Basis, order: usize) -> HalfQSeries<Rational> {
    let (delta, eps) = match basis {
        Basis::First => (FormName::Delta1, FormName::Eps1),
        Basis::Second => (FormName::Delta2, FormName::Eps2),
    };
    let delta = modular_form(delta, order).series.scale(&int(8));
    let eps = modular_form(eps, order).series;
    delta.pow(case.delta_exponent(k, r)).mul(&eps.pow(r))
}

/// Solved coefficients `h_0..h_k` (or `z_0..z_k`) and what is left over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub case: Case,
    pub k: u32,
    pub coefficients: Vec<GradedClass>,
    /// `P₂ - Σ_r h_r (8δ₂)^{e} ε₂^r`; zero when the decomposition is exact.
    pub residual: HalfQSeries<GradedClass>,
}

impl Decomposition {
    pub fn coefficient(&self, r: usize) -> &GradedClass {
        &self.coefficients[r]
    }

    pub fn order(&self) -> usize {
        self.residual.order()
    }

    /// Fails at the first half-step where the residual is nonzero.
    pub fn check(&self) -> Result<()> {
        match self.residual.valuation() {
            None => Ok(()),
            Some(j) => Err(Error::Mismatch {
                what: "P2 and its modular decomposition".into(),
                q_order: j,
                degree: self.residual.coeffs()[j].min_degree().unwrap_or(0),
            }),
        }
    }
}

/// Solves for the coefficients of the top-degree `P₂` and records the
/// residual through the full truncation. Needs at least two half-steps
/// past the `k + 1` unknowns.
pub fn decompose(p2: &PSeries) -> Result<Decomposition> {
    let (case, k) = (p2.case, p2.k);
    let series = &p2.top;
    let order = series.order();
    if order < k as usize + 2 {
        return Err(Error::Invalid(format!(
            "decomposition with k = {k} needs at least {} half-steps, got {order}",
            k + 2
        )));
    }
    let ring = series.leading().ring();
    let basis: Vec<HalfQSeries<Rational>> = (0..=k)
        .map(|r| basis_element(case, k, r, Basis::Second, order))
        .collect();
    let mut remaining = series.clone();
    let mut coefficients = Vec::with_capacity(k as usize + 1);
    for (r, b) in basis.iter().enumerate() {
        assert_eq!(b.valuation(), Some(r), "basis element {r} must start at q^({r}/2)");
        let lead = b.coeffs()[r].clone();
        let h = remaining.coeffs()[r].scaled(&lead.recip());
        remaining = remaining.sub(&b.map(|c| h.scaled(c)));
        coefficients.push(h);
    }
    debug_assert!(coefficients.iter().all(|h| h.ring() == ring));
    Ok(Decomposition {
        case,
        k,
        coefficients,
        residual: remaining,
    })
}

/// The matrix `c` with `h_r = Σ_{j ≤ r} c[r][j] P₂[j]`, where `P₂[j]` is the
/// `q^{j/2}` coefficient of `P₂`, i.e. `{Â ch B_j}`.
pub fn b_basis_coefficients(case: Case, k: u32) -> Vec<Vec<Rational>> {
    let n = k as usize + 1;
    let basis: Vec<HalfQSeries<Rational>> = (0..=k)
        .map(|r| basis_element(case, k, r, Basis::Second, n - 1))
        .collect();
    // m[j][r]: coefficient of q^{j/2} in basis element r (lower triangular)
    let m = |j: usize, r: usize| basis[r].coeffs()[j].clone();
    let zero = int(0);
    let mut c = vec![vec![zero.clone(); n]; n];
    for r in 0..n {
        let inv = m(r, r).recip();
        c[r][r] = inv.clone();
        for j in (0..r).rev() {
            // row r of m^{-1}: Σ_{i=j..r} c[r][i] m[i][j] = 0 for j < r
            let mut acc = zero.clone();
            for i in j + 1..=r {
                acc += &c[r][i] * m(i, j);
            }
            c[r][j] = -acc / m(j, j);
        }
    }
    c
}

/// `2^{dim/2} Σ_r h_r (8δ₁)^{e} ε₁^r`, the `P₁` predicted by modularity.
pub fn reconstruct_p1(dec: &Decomposition, order: usize) -> HalfQSeries<GradedClass> {
    let ring = dec.coefficients[0].ring();
    let mut acc = Series::zero(&GradedClass::zero(ring), order);
    for (r, h) in dec.coefficients.iter().enumerate() {
        let b = basis_element(dec.case, dec.k, r as u32, Basis::First, order);
        acc = acc.add(&b.map(|c| h.scaled(c)));
    }
    acc.scale(&pow2(dec.case.dim(dec.k) as i32 / 2))
}

/// Checks a reconstruction against a built `P₁`.
pub fn check_reconstruction(dec: &Decomposition, p1: &PSeries) -> Result<()> {
    let rebuilt = reconstruct_p1(dec, p1.top.order());
    match first_disagreement(&rebuilt, &p1.top) {
        None => Ok(()),
        Some((q_order, degree)) => Err(Error::Mismatch {
            what: "P1 and its reconstruction from the P2 decomposition".into(),
            q_order,
            degree,
        }),
    }
}

/// The `q⁰, q¹, q²` coefficients of `(8δ₁)^{e} ε₁^r` against the closed
/// forms `2^{2k+1-6r}[1 + (48k+24-64r) q + (1152k² - 3072kr + 2048r² +
/// 624k - 1024r + 24) q²]` (dimension `8k+4`) and
/// `2^{2k-6r}[1 + (48k-64r) q + (1152k² - 3072kr + 2048r² - 528k + 512r) q²]`
/// (dimension `8k`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisCheck {
    pub plus4: bool,
    pub k: u32,
    pub r: u32,
    #[serde(serialize_with = "crate::report::serialize_rationals")]
    pub computed: Vec<Rational>,
    #[serde(serialize_with = "crate::report::serialize_rationals")]
    pub closed_form: Vec<Rational>,
}

impl BasisCheck {
    pub fn passes(&self) -> bool {
        self.computed == self.closed_form
    }
}

pub fn basis_expansion_check(case: Case, k: u32, r: u32) -> BasisCheck {
    let series = basis_element(case, k, r, Basis::First, 4);
    let computed = vec![
        series.coeffs()[0].clone(),
        series.coeffs()[2].clone(),
        series.coeffs()[4].clone(),
    ];
    let (k, r) = (k as i64, r as i64);
    let (scale, q1, q2) = if case.is_plus4() {
        (
            pow2((2 * k + 1 - 6 * r) as i32),
            48 * k + 24 - 64 * r,
            1152 * k * k - 3072 * k * r + 2048 * r * r + 624 * k - 1024 * r + 24,
        )
    } else {
        (
            pow2((2 * k - 6 * r) as i32),
            48 * k - 64 * r,
            1152 * k * k - 3072 * k * r + 2048 * r * r - 528 * k + 512 * r,
        )
    };
    let closed_form = vec![scale.clone(), &scale * int(q1), &scale * int(q2)];
    BasisCheck {
        plus4: case.is_plus4(),
        k: k as u32,
        r: r as u32,
        computed,
        closed_form,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genera::forms::a_hat;
    use crate::modular::pseries::{build_p1, build_p2};
    use crate::ring::Ring;

    #[test]
    fn first_coefficient_is_minus_a_hat() {
        let p2 = build_p2(Case::EightKPlus4, 1, 8).unwrap();
        let dec = decompose(&p2).unwrap();
        dec.check().unwrap();
        let a = a_hat(&Case::EightKPlus4.bridge(1)).top();
        assert_eq!(dec.coefficient(0), &a.negate());
    }

    #[test]
    fn reconstruction_matches_in_dim_12() {
        let p2 = build_p2(Case::EightKPlus4, 1, 8).unwrap();
        let p1 = build_p1(Case::EightKPlus4, 1, 8).unwrap();
        let dec = decompose(&p2).unwrap();
        check_reconstruction(&dec, &p1).unwrap();
    }

    #[test]
    fn too_short_truncation_is_rejected() {
        let p2 = build_p2(Case::EightK, 2, 3).unwrap();
        assert!(matches!(decompose(&p2), Err(Error::Invalid(_))));
    }

    #[test]
    fn coefficients_are_integral_in_the_b_basis() {
        for case in [Case::EightKPlus4, Case::EightK] {
            for k in 0..=3 {
                let c = b_basis_coefficients(case, k);
                assert!(c.iter().flatten().all(Rational::is_integer));
            }
        }
        let p2 = build_p2(Case::EightKPlus4, 2, 8).unwrap();
        let dec = decompose(&p2).unwrap();
        let c = b_basis_coefficients(Case::EightKPlus4, 2);
        for r in 0..=2 {
            let mut h = GradedClass::zero(dec.coefficient(0).ring());
            for j in 0..=r {
                h = h.plus(&p2.top.coeffs()[j].scaled(&c[r][j]));
            }
            assert_eq!(&h, dec.coefficient(r));
        }
    }

    #[test]
    fn closed_form_examples() {
        let c = basis_expansion_check(Case::EightKPlus4, 1, 0);
        assert!(c.passes());
        assert_eq!(c.computed[1], int(72 * 8));
        let c = basis_expansion_check(Case::EightKPlus4, 1, 1);
        assert_eq!(c.computed[0], pow2(-3));
        let c = basis_expansion_check(Case::EightK, 2, 0);
        assert_eq!(c.computed[2], int(3552 * 16));
    }
}
