//! The weight 2 and 4 forms `δ₁, ε₁` over Γ₀(2) and `δ₂, ε₂` over Γ⁰(2).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};
use crate::series::HalfQSeries;

use super::theta::{theta_null, ThetaIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FormName {
    Delta1,
    Eps1,
    Delta2,
    Eps2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CongruenceGroup {
    /// Γ₀(2): lower-left entry even
    Gamma0,
    /// Γ⁰(2): upper-right entry even
    GammaUpper0,
}

impl FormName {
    pub const ALL: [FormName; 4] = [
        FormName::Delta1,
        FormName::Eps1,
        FormName::Delta2,
        FormName::Eps2,
    ];

    pub fn weight(self) -> u32 {
        match self {
            FormName::Delta1 | FormName::Delta2 => 2,
            FormName::Eps1 | FormName::Eps2 => 4,
        }
    }

    pub fn group(self) -> CongruenceGroup {
        match self {
            FormName::Delta1 | FormName::Eps1 => CongruenceGroup::Gamma0,
            FormName::Delta2 | FormName::Eps2 => CongruenceGroup::GammaUpper0,
        }
    }

    /// Leading coefficients as they are usually quoted, in half-steps.
    pub fn quoted_head(self) -> Vec<Rational> {
        match self {
            FormName::Delta1 => vec![frac(1, 4), int(0), int(6), int(0), int(6)],
            FormName::Eps1 => vec![frac(1, 16), int(0), int(-1), int(0), int(7)],
            FormName::Delta2 => vec![frac(-1, 8), int(-3), int(-3)],
            FormName::Eps2 => vec![int(0), int(1), int(8)],
        }
    }
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormName::Delta1 => "delta1",
            FormName::Eps1 => "eps1",
            FormName::Delta2 => "delta2",
            FormName::Eps2 => "eps2",
        })
    }
}

impl FromStr for FormName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta1" => Ok(FormName::Delta1),
            "eps1" => Ok(FormName::Eps1),
            "delta2" => Ok(FormName::Delta2),
            "eps2" => Ok(FormName::Eps2),
            _ => Err(Error::Invalid(format!("unknown modular form {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularForm {
    pub name: FormName,
    pub series: HalfQSeries<Rational>,
    pub weight: u32,
    pub group: CongruenceGroup,
}

impl ModularForm {
    /// Whether the first coefficients agree with [`FormName::quoted_head`].
    pub fn check_quoted_head(&self) -> Result<()> {
        for (j, expected) in self.name.quoted_head().iter().enumerate() {
            let got = self.series.coeff(j)?;
            if got != expected {
                return Err(Error::Mismatch {
                    what: format!("{} against its quoted expansion", self.name),
                    q_order: j,
                    degree: 0,
                });
            }
        }
        Ok(())
    }

    /// Every coefficient past the constant term is an integer.
    pub fn has_integral_tail(&self) -> bool {
        self.series.coeffs()[1..].iter().all(Rational::is_integer)
    }
}

/// Builds a form from theta constants, through `q^{order/2}`.
pub fn modular_form(name: FormName, order: usize) -> ModularForm {
    let fourth = |i| {
        theta_null(i, order)
            .pow(4)
            .materialize()
            .expect("fourth powers of theta constants are rational")
    };
    let series = match name {
        FormName::Delta1 => fourth(ThetaIndex::Two)
            .add(&fourth(ThetaIndex::Three))
            .scale(&frac(1, 8)),
        FormName::Eps1 => fourth(ThetaIndex::Two)
            .mul(&fourth(ThetaIndex::Three))
            .scale(&frac(1, 16)),
        FormName::Delta2 => fourth(ThetaIndex::One)
            .add(&fourth(ThetaIndex::Three))
            .scale(&frac(-1, 8)),
        FormName::Eps2 => fourth(ThetaIndex::One)
            .mul(&fourth(ThetaIndex::Three))
            .scale(&frac(1, 16)),
    };
    ModularForm {
        name,
        series,
        weight: name.weight(),
        group: name.group(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_heads() {
        for name in FormName::ALL {
            let f = modular_form(name, 8);
            f.check_quoted_head().unwrap();
            assert!(f.has_integral_tail());
        }
        assert_eq!(modular_form(FormName::Delta2, 4).series.to_string(), "-1/8 - 3 q^(1/2) - 3 q - 12 q^(3/2) - 3 q^2");
        assert_eq!(modular_form(FormName::Eps2, 2).series.to_string(), "q^(1/2) + 8 q");
    }

    #[test]
    fn names_round_trip() {
        for name in FormName::ALL {
            assert_eq!(name.to_string().parse::<FormName>().unwrap(), name);
        }
        assert!("delta3".parse::<FormName>().is_err());
    }
}
