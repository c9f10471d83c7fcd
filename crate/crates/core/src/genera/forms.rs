//! Â, L̂, Chern characters of the tangent bundle and the line-bundle terms
//! in the Euler class `u`.

use crate::error::{Error, Result};
use crate::graded::{GradedClass, GradedRing};
use crate::rational::{inv_factorial, Rational};
use crate::ring::Ring;
use crate::series::Series;

use super::bridge::PowerSumBridge;

/// `cosh(a x)` as a series in `x²` through `(x²)^order`.
pub fn cosh_series(a: &Rational, order: usize) -> Series<Rational> {
    let a2 = a * a;
    let mut power = Rational::from_integer(1.into());
    let mut out = Vec::with_capacity(order + 1);
    for r in 0..=order {
        out.push(&power * inv_factorial(2 * r as u32));
        power *= &a2;
    }
    Series::new(out)
}

/// `sinh(a x) / (a x)` as a series in `x²`.
pub fn sinh_over_arg_series(a: &Rational, order: usize) -> Series<Rational> {
    let a2 = a * a;
    let mut power = Rational::from_integer(1.into());
    let mut out = Vec::with_capacity(order + 1);
    for r in 0..=order {
        out.push(&power * inv_factorial(2 * r as u32 + 1));
        power *= &a2;
    }
    Series::new(out)
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// `(x/2) / sinh(x/2)`
pub fn a_hat_root_factor(order: usize) -> Series<Rational> {
    sinh_over_arg_series(&half(), order)
        .inverse()
        .expect("constant term is 1")
}

/// `(x/2) / tanh(x/2)`
pub fn l_hat_root_factor(order: usize) -> Series<Rational> {
    cosh_series(&half(), order).mul(&a_hat_root_factor(order))
}

/// `x / tanh(x)`, the root factor of Hirzebruch's L-class.
pub fn classical_l_root_factor(order: usize) -> Series<Rational> {
    let one = Rational::from_integer(1.into());
    cosh_series(&one, order).mul(
        &sinh_over_arg_series(&one, order)
            .inverse()
            .expect("constant term is 1"),
    )
}

/// `Π_j (x_j/2) / sinh(x_j/2)`
pub fn a_hat(bridge: &PowerSumBridge) -> GradedClass {
    bridge
        .symmetrize_multiplicative(&a_hat_root_factor(bridge.max_power()))
        .expect("root factor has constant term 1")
}

/// `Π_j x_j / tanh(x_j/2) = 2^m Π_j (x_j/2) / tanh(x_j/2)`
pub fn l_hat(bridge: &PowerSumBridge) -> GradedClass {
    bridge
        .symmetrize_multiplicative(&l_hat_root_factor(bridge.max_power()))
        .expect("root factor has constant term 1")
        .scaled(&crate::rational::pow2(bridge.roots() as i32))
}

/// `Π_j x_j / tanh(x_j)`
pub fn classical_l(bridge: &PowerSumBridge) -> GradedClass {
    bridge
        .symmetrize_multiplicative(&classical_l_root_factor(bridge.max_power()))
        .expect("root factor has constant term 1")
}

/// `ch(T_C M) = Σ_j (e^{x_j} + e^{-x_j})`
pub fn ch_tangent(bridge: &PowerSumBridge) -> GradedClass {
    let one = Rational::from_integer(1.into());
    let two = Rational::from_integer(2.into());
    bridge.symmetrize_additive(&cosh_series(&one, bridge.max_power()).scale(&two))
}

/// `ch(T_C M ⊗ T_C M)`
pub fn ch_tensor_square(bridge: &PowerSumBridge) -> GradedClass {
    let ch = ch_tangent(bridge);
    ch.times(&ch)
}

fn check_dim(dim: u32) -> Result<()> {
    if dim == 0 || dim % 4 != 0 {
        Err(Error::Invalid(format!(
            "dimension {dim} is not a positive multiple of 4"
        )))
    } else {
        Ok(())
    }
}

/// Â of a `dim`-manifold in the ring truncated at `dim / 2`.
pub fn a_hat_form(dim: u32) -> Result<GradedClass> {
    check_dim(dim)?;
    Ok(a_hat(&PowerSumBridge::for_dimension(dim, false)))
}

/// L̂ of a `dim`-manifold in the ring truncated at `dim / 2`.
pub fn l_hat_form(dim: u32) -> Result<GradedClass> {
    check_dim(dim)?;
    Ok(l_hat(&PowerSumBridge::for_dimension(dim, false)))
}

/// Spreads a series in `u²` over powers of `u`.
pub fn even_u_class(ring: GradedRing, f: &Series<Rational>) -> GradedClass {
    let zero = Rational::from_integer(0.into());
    let mut coeffs = Vec::with_capacity(2 * f.coeffs().len());
    for c in f.coeffs() {
        coeffs.push(c.clone());
        coeffs.push(zero.clone());
    }
    GradedClass::from_euler_series(ring, &coeffs)
}

/// The Euler-class expressions for an oriented plane bundle `ξ` with Euler
/// class `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBundleTerms {
    /// `ch ξ_C = e^u + e^{-u}`
    pub ch_xi: GradedClass,
    /// `cosh(u/2)`
    pub cosh_half: GradedClass,
    /// `cosh²(u/2)`
    pub cosh_sq_half: GradedClass,
    /// `sinh²(u/2)`
    pub sinh_sq_half: GradedClass,
}

impl LineBundleTerms {
    pub fn new(ring: GradedRing) -> Result<Self> {
        if !ring.has_euler() {
            return Err(Error::Structural(
                "line bundle terms need a ring with an Euler class".into(),
            ));
        }
        let order = ring.max_degree() as usize / 2;
        let one = Rational::from_integer(1.into());
        let cosh_u = cosh_series(&one, order);
        let cosh_half = even_u_class(ring, &cosh_series(&half(), order));
        let cosh_u = even_u_class(ring, &cosh_u);
        let unit = GradedClass::one(ring);
        Ok(Self {
            ch_xi: cosh_u.scaled(&Rational::from_integer(2.into())),
            cosh_sq_half: cosh_u.plus(&unit).scaled(&half()),
            sinh_sq_half: cosh_u.minus(&unit).scaled(&half()),
            cosh_half,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Monomial;
    use crate::rational::{frac, int};

    #[test]
    fn a_hat_low_degrees() {
        let a = a_hat_form(8).unwrap();
        assert_eq!(a.constant_term(), int(1));
        assert_eq!(a.coefficient(&Monomial::pontryagin(1)), frac(-1, 24));
    }

    #[test]
    fn l_hat_low_degrees() {
        let l = l_hat_form(8).unwrap();
        // degree 0 of the 2^m normalisation
        assert_eq!(l.constant_term(), int(16));
        let top = l.top();
        assert_eq!(top.to_string(), "-1/45*p1^2 + 7/45*p2");
        let l4 = l_hat_form(4).unwrap();
        assert_eq!(l4.top().to_string(), "1/3*p1");
    }

    #[test]
    fn bad_dimensions() {
        assert!(a_hat_form(6).is_err());
        assert!(l_hat_form(0).is_err());
    }

    #[test]
    fn tangent_characters() {
        let b = PowerSumBridge::for_dimension(12, false);
        let ch = ch_tangent(&b);
        assert_eq!(ch.constant_term(), int(12));
        assert_eq!(ch.coefficient(&Monomial::pontryagin(1)), int(1));
        let b8 = PowerSumBridge::for_dimension(8, false);
        assert_eq!(ch_tensor_square(&b8).constant_term(), int(64));
    }

    #[test]
    fn line_bundle_terms() {
        let ring = GradedRing::for_dimension(16, true);
        let t = LineBundleTerms::new(ring).unwrap();
        assert_eq!(t.ch_xi.constant_term(), int(2));
        assert_eq!(t.cosh_sq_half.coefficient(&Monomial::euler(2)), frac(1, 4));
        let two = GradedClass::constant(ring, int(2));
        let four = int(4);
        assert!((t.ch_xi.minus(&two)).minus(&t.sinh_sq_half.scaled(&four)).is_empty());
        assert!(LineBundleTerms::new(GradedRing::for_dimension(16, false)).is_err());
    }
}
