//! Dense truncated power series over any [`Ring`].
//!
//! A [`Series`] stores coefficients `a_0 ..= a_J` of `Σ a_j z^j`. Used with
//! `z = q^{1/2}` it is a [`HalfQSeries`]; the genera module also uses it
//! with `z = x²` for even series in a Chern root.

use std::fmt;

use crate::error::{Error, Result};
use crate::graded::GradedClass;
use crate::rational::{format_rational, int, Rational};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

/// `Σ a_j q^{j/2}`: index `j` is a half-step exponent.
pub type HalfQSeries<C> = Series<C>;

impl<C: Ring> Series<C> {
    /// Panics on an empty coefficient list; a series always knows its
    /// truncation order and coefficient ring.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Self { coeffs }
    }

    pub fn zero(template: &C, order: usize) -> Self {
        Self::new(vec![template.zero_like(); order + 1])
    }

    pub fn one(template: &C, order: usize) -> Self {
        Self::constant(template.one_like(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(&c, order);
        s.coeffs[0] = c;
        s
    }

    /// `c z^j`, truncated to `order`.
    pub fn monomial(c: C, j: usize, order: usize) -> Self {
        let mut s = Self::zero(&c, order);
        if j <= order {
            s.coeffs[j] = c;
        }
        s
    }

    /// Highest stored exponent.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Result<&C> {
        self.coeffs.get(j).ok_or(Error::Range {
            index: j,
            limit: self.order(),
        })
    }

    pub fn leading(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self::new(self.coeffs[..=order].to_vec())
    }

    pub fn map<D: Ring>(&self, f: impl FnMut(&C) -> D) -> Series<D> {
        Series::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<D: Ring>(&self, f: impl FnMut(&C) -> Result<D>) -> Result<Series<D>> {
        Ok(Series::new(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }

    /// Multiplies by `z^k`, keeping the truncation order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; order + 1];
        for j in 0..=order {
            if j + k <= order {
                out[j + k] = self.coeffs[j].clone();
            }
        }
        Self::new(out)
    }

    /// `f(z^k)`, keeping the truncation order.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1);
        let order = self.order();
        let mut out = vec![self.coeffs[0].zero_like(); order + 1];
        for j in 0..=order / k {
            out[j * k] = self.coeffs[j].clone();
        }
        Self::new(out)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let order = self.order().min(rhs.order());
        Self::new((0..=order).map(|j| f(&self.coeffs[j], &rhs.coeffs[j])).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, C::plus)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, C::minus)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out: Vec<C> = vec![self.coeffs[0].zero_like(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Self::new(out)
    }

    /// Multiplies every coefficient by a ring element.
    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map(|a| a.scale(s))
    }

    pub fn neg(&self) -> Self {
        self.map(C::negate)
    }

    /// Inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let b0 = self.coeffs[0].inverse().ok_or_else(|| {
            Error::Domain("series with a non-invertible constant term".into())
        })?;
        let order = self.order();
        let mut out = Vec::with_capacity(order + 1);
        out.push(b0.clone());
        for n in 1..=order {
            let mut acc = self.coeffs[0].zero_like();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc = acc.plus(&self.coeffs[i].times(&out[n - i]));
                }
            }
            out.push(acc.times(&b0).negate());
        }
        Ok(Self::new(out))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.coeffs[0], self.order());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents go through [`Series::inverse`].
    pub fn powi(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inverse()?.pow(n.unsigned_abs() as u32))
        }
    }

    /// Exponential. The constant term must itself be exponentiable in the
    /// coefficient ring (nilpotent).
    pub fn exp(&self) -> Result<Self> {
        let order = self.order();
        let mut out = Vec::with_capacity(order + 1);
        out.push(self.coeffs[0].exp_nilpotent()?);
        // k G_k = Σ_{i=1}^k i a_i G_{k-i}
        for k in 1..=order {
            let mut acc = self.coeffs[0].zero_like();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc = acc.plus(&self.coeffs[i].times(&out[k - i]).scale(&int(i as i64)));
                }
            }
            out.push(acc.scale(&Rational::new(1.into(), (k as i64).into())));
        }
        Ok(Self::new(out))
    }

    /// Logarithm. The constant term must be `1 + nilpotent`.
    pub fn log(&self) -> Result<Self> {
        let order = self.order();
        let head = self.coeffs[0].log_unipotent()?;
        let inv = self.inverse()?;
        let mut out = Vec::with_capacity(order + 1);
        out.push(head);
        // L' = f' / f
        for k in 1..=order {
            let mut acc = self.coeffs[0].zero_like();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc = acc.plus(&self.coeffs[i].times(&inv.coeffs[k - i]).scale(&int(i as i64)));
                }
            }
            out.push(acc.scale(&Rational::new(1.into(), (k as i64).into())));
        }
        Ok(Self::new(out))
    }

    /// First exponent at which two series differ, up to the shorter order.
    pub fn first_difference(&self, rhs: &Self) -> Option<usize> {
        let order = self.order().min(rhs.order());
        (0..=order).find(|&j| self.coeffs[j] != rhs.coeffs[j])
    }
}

impl<C: Ring> Ring for Series<C> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.coeffs[0], self.order())
    }
    fn one_like(&self) -> Self {
        Self::one(&self.coeffs[0], self.order())
    }
    fn is_zero(&self) -> bool {
        Series::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn scale(&self, s: &Rational) -> Self {
        Series::scale(self, s)
    }
    fn inverse(&self) -> Option<Self> {
        Series::inverse(self).ok()
    }
    fn exp_nilpotent(&self) -> Result<Self> {
        self.exp()
    }
    fn log_unipotent(&self) -> Result<Self> {
        self.log()
    }
}

impl Series<Rational> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }
}

/// `q^(j/2)` in its shortest form: `q`, `q^2`, `q^(3/2)`.
pub fn half_q_power(j: usize) -> String {
    match j {
        0 => String::new(),
        2 => "q".into(),
        j if j % 2 == 0 => format!("q^{}", j / 2),
        j => format!("q^({j}/2)"),
    }
}

/// Key used for q-coefficients in machine-readable output.
pub fn half_q_key(j: usize) -> String {
    if j % 2 == 0 {
        format!("q^{}", j / 2)
    } else {
        format!("q^({j}/2)")
    }
}

impl fmt::Display for Series<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let negative = c < &Rational::from_integer(0.into());
            let abs = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let var = half_q_power(j);
            let unit = num_traits::One::is_one(&abs);
            match (var.is_empty(), unit) {
                (true, _) => write!(f, "{}", format_rational(&abs))?,
                (false, true) => write!(f, "{var}")?,
                (false, false) => write!(f, "{} {var}", format_rational(&abs))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for Series<GradedClass> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_empty() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = half_q_power(j);
            if var.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}) {var}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
