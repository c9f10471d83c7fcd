//! The coefficient-ring abstraction shared by every series type.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A commutative ring with rational scalars.
///
/// Elements carry enough context (truncation, generator set) to build their
/// own zero and one, which is why those take `&self`. Binary operations
/// panic if the operands are structurally incompatible; checked variants
/// live on the concrete types.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scale(&self, s: &Rational) -> Self;
    /// Multiplicative inverse, if one exists in the (truncated) ring.
    fn inverse(&self) -> Option<Self>;

    /// `exp` of a ring element. Only nilpotent elements qualify; the
    /// default accepts just zero.
    fn exp_nilpotent(&self) -> Result<Self> {
        if self.is_zero() {
            Ok(self.one_like())
        } else {
            Err(Error::Domain("exp of a non-nilpotent coefficient".into()))
        }
    }

    /// `log` of a ring element of the form `1 + nilpotent`. The default
    /// accepts just one.
    fn log_unipotent(&self) -> Result<Self> {
        if *self == self.one_like() {
            Ok(self.zero_like())
        } else {
            Err(Error::Domain("log of a coefficient that is not 1".into()))
        }
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Rational) -> Self {
        self * s
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
