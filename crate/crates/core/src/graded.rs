//! Truncated polynomials in the Pontryagin classes `p_1, p_2, ...` and an
//! Euler-class variable `u`.
//!
//! Degrees are internal: `u` has degree 1 and `p_i` has degree `2i`, so one
//! internal unit is two real cohomological degrees and the top component of
//! a `dim`-manifold sits in internal degree `dim / 2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, Rational};
use crate::ring::Ring;

/// Generator set and truncation of a [`GradedClass`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GradedRing {
    pontryagin: u32,
    euler: bool,
    max_degree: u32,
}

impl GradedRing {
    pub fn new(pontryagin: u32, euler: bool, max_degree: u32) -> Self {
        Self {
            pontryagin,
            euler,
            max_degree,
        }
    }

    /// All Pontryagin classes that fit below `max_degree`.
    pub fn truncated(max_degree: u32, euler: bool) -> Self {
        Self::new(max_degree / 2, euler, max_degree)
    }

    /// The ring whose top degree is the fundamental-class degree of a
    /// `dim`-manifold.
    pub fn for_dimension(dim: u32, euler: bool) -> Self {
        Self::truncated(dim / 2, euler)
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn pontryagin_count(&self) -> u32 {
        self.pontryagin
    }

    pub fn has_euler(&self) -> bool {
        self.euler
    }

    /// Same generators, different truncation.
    pub fn with_max_degree(&self, max_degree: u32) -> Self {
        Self::new(self.pontryagin.max(max_degree / 2), self.euler, max_degree)
    }

    pub fn without_euler(&self) -> Self {
        Self::new(self.pontryagin, false, self.max_degree)
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        m.p.len() as u32 <= self.pontryagin && (self.euler || m.u == 0)
    }
}

/// Exponent vector `p_1^{a_1} ... p_s^{a_s} u^b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    // exponent of p_{i+1} at index i; no trailing zeros
    p: Vec<u32>,
    u: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `p_i` for `i >= 1`.
    pub fn pontryagin(i: usize) -> Self {
        assert!(i >= 1, "Pontryagin classes are indexed from 1");
        let mut p = vec![0; i];
        p[i - 1] = 1;
        Self { p, u: 0 }
    }

    pub fn euler(power: u32) -> Self {
        Self { p: Vec::new(), u: power }
    }

    pub fn from_exponents(p: &[u32], u: u32) -> Self {
        let mut p = p.to_vec();
        while p.last() == Some(&0) {
            p.pop();
        }
        Self { p, u }
    }

    /// Monomial `p_{λ_1} p_{λ_2} ...` for a partition `λ`.
    pub fn from_partition(parts: &[u32]) -> Self {
        let len = parts.iter().copied().max().unwrap_or(0) as usize;
        let mut p = vec![0; len];
        for &part in parts {
            assert!(part >= 1, "partition parts are positive");
            p[part as usize - 1] += 1;
        }
        Self { p, u: 0 }
    }

    pub fn degree(&self) -> u32 {
        self.p
            .iter()
            .enumerate()
            .map(|(i, e)| 2 * (i as u32 + 1) * e)
            .sum::<u32>()
            + self.u
    }

    pub fn pontryagin_exponents(&self) -> &[u32] {
        &self.p
    }

    pub fn euler_exponent(&self) -> u32 {
        self.u
    }

    /// The multiset of Pontryagin indices, largest first.
    pub fn partition(&self) -> Vec<u32> {
        let mut parts = Vec::new();
        for (i, &e) in self.p.iter().enumerate().rev() {
            parts.extend(std::iter::repeat(i as u32 + 1).take(e as usize));
        }
        parts
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.p.len() >= other.p.len() {
            (&self.p, &other.p)
        } else {
            (&other.p, &self.p)
        };
        let mut p = long.clone();
        for (a, b) in p.iter_mut().zip(short) {
            *a += b;
        }
        Monomial {
            p,
            u: self.u + other.u,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.u.cmp(&other.u))
            .then_with(|| other.p.cmp(&self.p))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (i, &e) in self.p.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("p{}", i + 1)),
                _ => factors.push(format!("p{}^{}", i + 1, e)),
            }
        }
        match self.u {
            0 => {}
            1 => factors.push("u".to_string()),
            e => factors.push(format!("u^{e}")),
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let bad = || Error::Invalid(format!("not a monomial: {s:?}"));
        let mut m = Monomial::one();
        for factor in s.split('*') {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            let g = if base == "u" {
                Monomial::euler(1)
            } else if let Some(idx) = base.strip_prefix('p') {
                let i: usize = idx.parse().map_err(|_| bad())?;
                if i == 0 {
                    return Err(bad());
                }
                Monomial::pontryagin(i)
            } else {
                return Err(bad());
            };
            for _ in 0..exp {
                m = m.times(&g);
            }
        }
        Ok(m)
    }
}

/// A truncated characteristic class: an exact polynomial in `p_i` and `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedClass {
    ring: GradedRing,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedClass {
    pub fn zero(ring: GradedRing) -> Self {
        Self {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: GradedRing) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: GradedRing, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    /// `c * m`, or zero if `m` is truncated away. Panics if `m` uses a
    /// generator the ring does not have.
    pub fn monomial(ring: GradedRing, m: Monomial, c: Rational) -> Self {
        assert!(ring.admits(&m), "monomial {m} is not in {ring:?}");
        let mut out = Self::zero(ring);
        if m.degree() <= ring.max_degree && !Zero::is_zero(&c) {
            out.terms.insert(m, c);
        }
        out
    }

    /// The generator `p_i`.
    pub fn pontryagin(ring: GradedRing, i: usize) -> Self {
        Self::monomial(ring, Monomial::pontryagin(i), Rational::one())
    }

    /// The Euler-class variable `u`.
    pub fn euler(ring: GradedRing) -> Self {
        Self::monomial(ring, Monomial::euler(1), Rational::one())
    }

    /// `Σ c_n u^n` from a coefficient list.
    pub fn from_euler_series(ring: GradedRing, coeffs: &[Rational]) -> Self {
        let mut out = Self::zero(ring);
        for (n, c) in coeffs.iter().enumerate() {
            out.add_term(Monomial::euler(n as u32), c.clone());
        }
        out
    }

    pub fn from_terms<I>(ring: GradedRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut out = Self::zero(ring);
        for (m, c) in terms {
            assert!(ring.admits(&m), "monomial {m} is not in {ring:?}");
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if m.degree() > self.ring.max_degree || Zero::is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if Zero::is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> GradedRing {
        self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::Structural(format!(
                "graded rings differ: {:?} vs {:?}",
                self.ring, other.ring
            )))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let max = self.ring.max_degree;
        let mut out = Self::zero(self.ring);
        let right: Vec<(u32, &Monomial, &Rational)> =
            other.terms.iter().map(|(m, c)| (m.degree(), m, c)).collect();
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            for &(d2, m2, c2) in &right {
                if d1 + d2 <= max {
                    out.add_term(m1.times(m2), c1 * c2);
                }
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        if Zero::is_zero(s) {
            return Self::zero(self.ring);
        }
        Self {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.times(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    /// Homogeneous component of internal degree `d`.
    pub fn component(&self, d: u32) -> Result<Self> {
        if d > self.ring.max_degree {
            return Err(Error::Range {
                index: d as usize,
                limit: self.ring.max_degree as usize,
            });
        }
        Ok(Self {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Component in the truncation degree.
    pub fn top(&self) -> Self {
        self.component(self.ring.max_degree)
            .expect("max degree is always in range")
    }

    /// Lowest degree carrying a nonzero term.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Re-express in another ring. Terms above the new truncation are
    /// dropped; terms using generators the target lacks are an error.
    pub fn embed(&self, ring: GradedRing) -> Result<Self> {
        let mut out = Self::zero(ring);
        for (m, c) in &self.terms {
            if m.degree() > ring.max_degree {
                continue;
            }
            if !ring.admits(m) {
                return Err(Error::Structural(format!(
                    "{m} has no image in {ring:?}"
                )));
            }
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Specialise `u = 0`, staying in the same ring.
    pub fn at_euler_zero(&self) -> Self {
        Self {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.u == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Truncated exponential. The argument must have zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !Zero::is_zero(&self.constant_term()) {
            return Err(Error::Domain(
                "exp needs a class with zero constant term".into(),
            ));
        }
        let mut out = Self::one(self.ring);
        let mut term = Self::one(self.ring);
        for n in 1..=self.ring.max_degree {
            term = term.times(self).scaled(&Rational::new(1.into(), n.into()));
            if term.is_empty() {
                break;
            }
            out = out.plus(&term);
        }
        Ok(out)
    }

    /// Truncated logarithm. The argument must have constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !One::is_one(&self.constant_term()) {
            return Err(Error::Domain(
                "log needs a class with constant term 1".into(),
            ));
        }
        let h = self.minus(&Self::one(self.ring));
        let mut out = Self::zero(self.ring);
        let mut power = Self::one(self.ring);
        for n in 1..=self.ring.max_degree {
            power = power.times(&h);
            if power.is_empty() {
                break;
            }
            let c = Rational::new(if n % 2 == 1 { 1 } else { -1 }.into(), n.into());
            out = out.plus(&power.scaled(&c));
        }
        Ok(out)
    }

    /// Inverse when the constant term is nonzero.
    pub fn try_inverse(&self) -> Result<Self> {
        let c = self.constant_term();
        if Zero::is_zero(&c) {
            return Err(Error::Domain(
                "class with zero constant term is not invertible".into(),
            ));
        }
        let c_inv = c.recip();
        let h = self.scaled(&c_inv).minus(&Self::one(self.ring));
        let neg_h = h.negate();
        let mut out = Self::one(self.ring);
        let mut power = Self::one(self.ring);
        for _ in 1..=self.ring.max_degree {
            power = power.times(&neg_h);
            if power.is_empty() {
                break;
            }
            out = out.plus(&power);
        }
        Ok(out.scaled(&c_inv))
    }

    /// Terms as `(monomial string, rational string)` in the fixed monomial
    /// order.
    pub fn to_string_map(&self) -> Vec<(String, String)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.to_string(), format_rational(c)))
            .collect()
    }
}

impl Ring for GradedClass {
    fn zero_like(&self) -> Self {
        Self::zero(self.ring)
    }
    fn one_like(&self) -> Self {
        Self::one(self.ring)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
    fn times(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
    fn negate(&self) -> Self {
        self.scaled(&int(-1))
    }
    fn scale(&self, s: &Rational) -> Self {
        self.scaled(s)
    }
    fn inverse(&self) -> Option<Self> {
        self.try_inverse().ok()
    }
    fn exp_nilpotent(&self) -> Result<Self> {
        self.exp()
    }
    fn log_unipotent(&self) -> Result<Self> {
        self.log()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $ring_method:ident) => {
        impl std::ops::$tr<&GradedClass> for &GradedClass {
            type Output = GradedClass;
            fn $method(self, rhs: &GradedClass) -> GradedClass {
                self.$ring_method(rhs)
            }
        }
        impl std::ops::$tr<GradedClass> for GradedClass {
            type Output = GradedClass;
            fn $method(self, rhs: GradedClass) -> GradedClass {
                (&self).$ring_method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);

impl std::ops::Neg for &GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        self.negate()
    }
}

impl std::ops::Neg for GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        self.negate()
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let is_unit_monomial = *m == Monomial::one();
            if is_unit_monomial {
                write!(f, "{}", format_rational(&abs))?;
            } else if One::is_one(&abs) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl Serialize for GradedClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            map.serialize_entry(&m.to_string(), &format_rational(c))?;
        }
        map.end()
    }
}
