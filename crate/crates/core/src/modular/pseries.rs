//! The q-series `P₁` and `P₂`, each built along two independent routes.
//!
//! The genus route multiplies L̂ or Â by the Chern character of Θ₁ or Θ₂.
//! The theta route takes the product over Chern roots of theta-function
//! quotients. Both must give the same class in every q-order and degree.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::genera::forms::{a_hat, even_u_class, l_hat, LineBundleTerms};
use crate::genera::{theta_element_ch, PowerSumBridge, ThetaElement};
use crate::graded::{GradedClass, GradedRing};
use crate::rational::{pow2, Rational};
use crate::ring::Ring;
use crate::series::HalfQSeries;

use super::theta::{theta_derivative_quotient, theta_quotient, BivariateSeries, ThetaIndex};

/// Which family of cancellation formulas a computation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Case {
    /// dimension `8k+4`
    EightKPlus4,
    /// dimension `8k`
    EightK,
    /// dimension `8k+4` with a line bundle `ξ`
    TwistedEightKPlus4,
    /// dimension `8k` with a line bundle `ξ`
    TwistedEightK,
}

impl Case {
    pub const ALL: [Case; 4] = [
        Case::EightKPlus4,
        Case::EightK,
        Case::TwistedEightKPlus4,
        Case::TwistedEightK,
    ];

    pub fn is_twisted(self) -> bool {
        matches!(self, Case::TwistedEightKPlus4 | Case::TwistedEightK)
    }

    pub fn is_plus4(self) -> bool {
        matches!(self, Case::EightKPlus4 | Case::TwistedEightKPlus4)
    }

    pub fn dim(self, k: u32) -> u32 {
        if self.is_plus4() {
            8 * k + 4
        } else {
            8 * k
        }
    }

    /// The case and `k` for a dimension. Dimension 0 is rejected.
    pub fn for_dimension(dim: u32, twisted: bool) -> Result<(Case, u32)> {
        let case = match (dim % 8, twisted) {
            _ if dim == 0 || dim % 4 != 0 => {
                return Err(Error::Invalid(format!(
                    "dimension {dim} is not a positive multiple of 4"
                )))
            }
            (4, false) => Case::EightKPlus4,
            (4, true) => Case::TwistedEightKPlus4,
            (_, false) => Case::EightK,
            (_, true) => Case::TwistedEightK,
        };
        Ok((case, dim / 8))
    }

    /// Power of `8δ` in the `r`-th basis element: `2k+1-2r` or `2k-2r`.
    pub fn delta_exponent(self, k: u32, r: u32) -> u32 {
        let top = if self.is_plus4() { 2 * k + 1 } else { 2 * k };
        top - 2 * r
    }

    /// Half-step truncation used when none is given.
    pub fn default_order(self, k: u32) -> usize {
        2 * k as usize + 6
    }

    pub fn untwisted(self) -> Case {
        match self {
            Case::TwistedEightKPlus4 => Case::EightKPlus4,
            Case::TwistedEightK => Case::EightK,
            c => c,
        }
    }

    /// Bridge for the default truncation `dim / 2`.
    pub fn bridge(self, k: u32) -> PowerSumBridge {
        PowerSumBridge::for_dimension(self.dim(k), self.is_twisted())
    }

    /// Bridge truncated at `degree >= dim / 2`.
    pub fn bridge_with_degree(self, k: u32, degree: u32) -> Result<PowerSumBridge> {
        let dim = self.dim(k);
        if degree < dim / 2 {
            return Err(Error::Invalid(format!(
                "truncation degree {degree} is below the top degree {} of dimension {dim}",
                dim / 2
            )));
        }
        Ok(PowerSumBridge::new(
            dim / 2,
            GradedRing::truncated(degree, self.is_twisted()),
        ))
    }

    pub fn label(self) -> &'static str {
        match self {
            Case::EightKPlus4 => "8k+4",
            Case::EightK => "8k",
            Case::TwistedEightKPlus4 => "8k+4 twisted",
            Case::TwistedEightK => "8k twisted",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RatioKind {
    /// `v θ'(0)/θ(v) · θ₁(v)/θ₁(0)`, the root factor of `P₁`
    LFactor,
    /// `v θ'(0)/θ(v) · θ₂(v)/θ₂(0)`, the root factor of `P₂`
    AFactor,
    /// `θ₁²(0)/θ₁²(u) · θ₃(u)/θ₃(0) · θ₂(u)/θ₂(0)`
    TwistFirst,
    /// `θ₂²(0)/θ₂²(u) · θ₃(u)/θ₃(0) · θ₁(u)/θ₁(0)`
    TwistSecond,
}

/// A theta quotient expanded in `q^{1/2}` and the square of its variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaRatio {
    pub kind: RatioKind,
    pub expansion: BivariateSeries,
}

impl ThetaRatio {
    pub fn new(kind: RatioKind, order: usize, y_order: usize) -> Result<Self> {
        let quotient = |i| theta_quotient(i, order, y_order);
        let expansion = match kind {
            RatioKind::LFactor => theta_derivative_quotient(order, y_order).mul(&quotient(ThetaIndex::One)),
            RatioKind::AFactor => theta_derivative_quotient(order, y_order).mul(&quotient(ThetaIndex::Two)),
            RatioKind::TwistFirst => quotient(ThetaIndex::One)
                .powi(-2)?
                .mul(&quotient(ThetaIndex::Three))
                .mul(&quotient(ThetaIndex::Two)),
            RatioKind::TwistSecond => quotient(ThetaIndex::Two)
                .powi(-2)?
                .mul(&quotient(ThetaIndex::Three))
                .mul(&quotient(ThetaIndex::One)),
        };
        Ok(Self { kind, expansion })
    }

    /// Coefficient of `y^{2r}` as a q-series.
    pub fn y_coefficient(&self, r: usize) -> HalfQSeries<Rational> {
        self.expansion.map(|c| {
            c.coeff(r)
                .cloned()
                .unwrap_or_else(|_| Rational::from_integer(0.into()))
        })
    }
}

/// Genus route for `P₁` (`which = First`) or `P₂` (`Second`), before the
/// top-degree extraction.
pub fn genus_route(
    which: ThetaElement,
    case: Case,
    bridge: &PowerSumBridge,
    order: usize,
) -> Result<HalfQSeries<GradedClass>> {
    let ch = theta_element_ch(which, case.is_twisted(), bridge, order)?;
    let mut genus = match which {
        ThetaElement::First => l_hat(bridge),
        ThetaElement::Second => a_hat(bridge),
    };
    if case.is_twisted() {
        let terms = LineBundleTerms::new(bridge.ring())?;
        genus = match which {
            ThetaElement::First => genus.times(&terms.cosh_sq_half.try_inverse()?),
            ThetaElement::Second => genus.times(&terms.cosh_half),
        };
    }
    Ok(ch.mul_coeff(&genus))
}

/// Theta route for `P₁` or `P₂`, before the top-degree extraction.
pub fn theta_route(
    which: ThetaElement,
    case: Case,
    bridge: &PowerSumBridge,
    order: usize,
) -> Result<HalfQSeries<GradedClass>> {
    let ring = bridge.ring();
    let y_order = bridge.max_power();
    let kind = match which {
        ThetaElement::First => RatioKind::LFactor,
        ThetaElement::Second => RatioKind::AFactor,
    };
    let root_factor = ThetaRatio::new(kind, order, y_order)?.expansion;
    let log = root_factor.log()?;
    let mut product = log.map(|c| bridge.symmetrize_additive(c)).exp()?;
    if which == ThetaElement::First {
        product = product.scale(&pow2(bridge.roots() as i32));
    }
    if case.is_twisted() {
        let twist_kind = match which {
            ThetaElement::First => RatioKind::TwistFirst,
            ThetaElement::Second => RatioKind::TwistSecond,
        };
        let u_order = ring.max_degree() as usize / 2;
        let twist = ThetaRatio::new(twist_kind, order, u_order)?;
        product = product.mul(&twist.expansion.map(|c| even_u_class(ring, c)));
    }
    Ok(product)
}

/// First `(q-order, degree)` where two class-valued series differ.
pub fn first_disagreement(
    a: &HalfQSeries<GradedClass>,
    b: &HalfQSeries<GradedClass>,
) -> Option<(usize, u32)> {
    let j = a.first_difference(b)?;
    let diff = a.coeffs()[j].minus(&b.coeffs()[j]);
    Some((j, diff.min_degree().unwrap_or(0)))
}

/// `P₁` or `P₂` with both routes checked against each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSeries {
    pub which: ThetaElement,
    pub case: Case,
    pub k: u32,
    /// All degrees, as produced by the genus route.
    pub full: HalfQSeries<GradedClass>,
    /// The degree `dim / 2` component of every coefficient.
    pub top: HalfQSeries<GradedClass>,
}

/// Builds `P₁` (`First`) or `P₂` (`Second`) on a given bridge, failing if
/// the two routes disagree anywhere.
pub fn build_with(
    which: ThetaElement,
    case: Case,
    k: u32,
    bridge: &PowerSumBridge,
    order: usize,
) -> Result<PSeries> {
    let genus = genus_route(which, case, bridge, order)?;
    let theta = theta_route(which, case, bridge, order)?;
    if let Some((q_order, degree)) = first_disagreement(&genus, &theta) {
        let name = match which {
            ThetaElement::First => "P1",
            ThetaElement::Second => "P2",
        };
        return Err(Error::Mismatch {
            what: format!("{name} genus and theta routes"),
            q_order,
            degree,
        });
    }
    let top_degree = case.dim(k) / 2;
    let top = genus.try_map(|c| c.component(top_degree))?;
    Ok(PSeries {
        which,
        case,
        k,
        full: genus,
        top,
    })
}

/// `P₁ = {L̂ ch Θ₁}` (twisted: `{L̂ ch Θ₁(T, ξ) / cosh²(u/2)}`) through
/// `q^{order/2}`.
pub fn build_p1(case: Case, k: u32, order: usize) -> Result<PSeries> {
    build_with(ThetaElement::First, case, k, &case.bridge(k), order)
}

/// `P₂ = {Â ch Θ₂}` (twisted: `{Â ch Θ₂(T, ξ) cosh(u/2)}`) through
/// `q^{order/2}`.
pub fn build_p2(case: Case, k: u32, order: usize) -> Result<PSeries> {
    build_with(ThetaElement::Second, case, k, &case.bridge(k), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genera::forms::a_hat;
    use crate::rational::int;

    #[test]
    fn routes_agree_in_low_dimensions() {
        for case in Case::ALL {
            for k in 0..=1 {
                if case.dim(k) == 0 {
                    continue;
                }
                build_p1(case, k, 6).unwrap();
                build_p2(case, k, 6).unwrap();
            }
        }
    }

    #[test]
    fn constant_terms() {
        let p2 = build_p2(Case::EightKPlus4, 1, 4).unwrap();
        let bridge = Case::EightKPlus4.bridge(1);
        assert_eq!(p2.top.coeffs()[0], a_hat(&bridge).top());
        let p1 = build_p1(Case::EightKPlus4, 1, 4).unwrap();
        assert_eq!(p1.top.coeffs()[0], l_hat(&bridge).top());
    }

    #[test]
    fn dimensions_map_to_cases() {
        assert_eq!(Case::for_dimension(12, false).unwrap(), (Case::EightKPlus4, 1));
        assert_eq!(Case::for_dimension(16, true).unwrap(), (Case::TwistedEightK, 2));
        assert!(Case::for_dimension(6, false).is_err());
        assert!(Case::for_dimension(0, false).is_err());
        assert_eq!(Case::EightK.delta_exponent(2, 1), 2);
        assert_eq!(Case::EightKPlus4.delta_exponent(1, 0), 3);
    }

    #[test]
    fn l_factor_is_l_hat_root_at_q0() {
        let r = ThetaRatio::new(RatioKind::LFactor, 4, 3).unwrap();
        let expected = crate::genera::forms::l_hat_root_factor(3);
        assert_eq!(r.expansion.coeffs()[0], expected);
        assert_eq!(r.y_coefficient(0).coeffs()[0], int(1));
    }
}
