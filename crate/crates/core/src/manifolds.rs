//! Manifolds presented by their Pontryagin numbers, products of them, and
//! the characteristic numbers and divisibility rules built on top.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::genera::{a_hat, ch_tangent, ch_tensor_square, classical_l, l_hat, PowerSumBridge};
use crate::graded::{GradedClass, Monomial};
use crate::rational::{format_rational, int, Rational};
use crate::report::VerificationReport;
use crate::series::Series;

/// Partitions of `n`, each listed largest part first.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A closed oriented manifold known through its Pontryagin numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManifoldClass {
    pub name: String,
    pub dim: u32,
    #[serde(serialize_with = "serialize_numbers")]
    pontryagin_numbers: BTreeMap<Vec<u32>, Rational>,
    pub spin: bool,
}

fn serialize_numbers<S: Serializer>(
    numbers: &BTreeMap<Vec<u32>, Rational>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut map = serializer.serialize_map(Some(numbers.len()))?;
    for (lambda, v) in numbers {
        map.serialize_entry(&Monomial::from_partition(lambda).to_string(), &format_rational(v))?;
    }
    map.end()
}

impl ManifoldClass {
    /// Missing partitions are read as zero.
    pub fn new(
        name: impl Into<String>,
        dim: u32,
        numbers: impl IntoIterator<Item = (Vec<u32>, Rational)>,
        spin: bool,
    ) -> Result<Self> {
        if dim == 0 || dim % 4 != 0 {
            return Err(Error::Invalid(format!("dimension {dim} is not a positive multiple of 4")));
        }
        let n = dim / 4;
        let mut pontryagin_numbers: BTreeMap<Vec<u32>, Rational> =
            partitions(n).into_iter().map(|l| (l, Rational::zero())).collect();
        for (mut lambda, v) in numbers {
            lambda.sort_unstable_by(|a, b| b.cmp(a));
            match pontryagin_numbers.get_mut(&lambda) {
                Some(slot) => *slot = v,
                None => return Err(Error::Invalid(format!("{lambda:?} is not a partition of {n}"))),
            }
        }
        Ok(Self {
            name: name.into(),
            dim,
            pontryagin_numbers,
            spin,
        })
    }

    pub fn pontryagin_number(&self, lambda: &[u32]) -> Rational {
        let mut key = lambda.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.pontryagin_numbers.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn pontryagin_numbers(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.pontryagin_numbers.iter()
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `<c, [M]>`: pairs the component of `c` in the fundamental degree.
    pub fn pair(&self, c: &GradedClass) -> Result<Rational> {
        let top = self.dim / 2;
        if c.ring().max_degree() < top {
            return Err(Error::Range {
                index: top as usize,
                limit: c.ring().max_degree() as usize,
            });
        }
        let mut total = Rational::zero();
        for (m, coeff) in c.component(top)?.terms() {
            if m.euler_exponent() != 0 {
                return Err(Error::Structural(format!("cannot pair {m} with a manifold")));
            }
            total += coeff * self.pontryagin_number(&m.partition());
        }
        Ok(total)
    }

    /// `M1 × M2`, from `p(T1 ⊕ T2) = p(T1) p(T2)` and the Künneth split.
    pub fn product(&self, other: &ManifoldClass) -> ManifoldClass {
        let (na, nb) = (self.dim / 4, other.dim / 4);
        let mut numbers = BTreeMap::new();
        for lambda in partitions(na + nb) {
            let mut acc: BTreeMap<(Vec<u32>, Vec<u32>), BigInt> = BTreeMap::new();
            acc.insert((Vec::new(), Vec::new()), BigInt::one());
            for &t in &lambda {
                let mut next: BTreeMap<(Vec<u32>, Vec<u32>), BigInt> = BTreeMap::new();
                for ((l, r), c) in &acc {
                    let (lw, rw) = (l.iter().sum::<u32>(), r.iter().sum::<u32>());
                    for i in 0..=t {
                        let j = t - i;
                        if lw + i > na || rw + j > nb {
                            continue;
                        }
                        let (mut l, mut r) = (l.clone(), r.clone());
                        if i > 0 {
                            l.push(i);
                            l.sort_unstable_by(|a, b| b.cmp(a));
                        }
                        if j > 0 {
                            r.push(j);
                            r.sort_unstable_by(|a, b| b.cmp(a));
                        }
                        *next.entry((l, r)).or_insert_with(BigInt::zero) += c;
                    }
                }
                acc = next;
            }
            let value: Rational = acc
                .into_iter()
                .filter(|((l, r), _)| l.iter().sum::<u32>() == na && r.iter().sum::<u32>() == nb)
                .map(|((l, r), c)| {
                    Rational::from_integer(c) * self.pontryagin_number(&l) * other.pontryagin_number(&r)
                })
                .sum();
            numbers.insert(lambda, value);
        }
        ManifoldClass {
            name: format!("{}×{}", self.name, other.name),
            dim: self.dim + other.dim,
            pontryagin_numbers: numbers,
            spin: self.spin && other.spin,
        }
    }

    pub fn power(&self, n: u32) -> Result<ManifoldClass> {
        if n == 0 {
            return Err(Error::Invalid("exponent must be at least 1".into()));
        }
        let mut out = self.clone();
        for _ in 1..n {
            out = out.product(self);
        }
        Ok(out.renamed(if n == 1 { self.name.clone() } else { format!("{}^{n}", self.name) }))
    }
}

/// Quaternionic projective space, total class `(1+u)^{2n+2} (1+4u)^{-1}`.
pub fn hpn(n: u32) -> Result<ManifoldClass> {
    if n == 0 {
        return Err(Error::Invalid("HPn needs n >= 1".into()));
    }
    let order = n as usize + 1;
    let linear = |a: i64| {
        let mut c = vec![int(0); order];
        c[0] = int(1);
        c[1] = int(a);
        Series::new(c)
    };
    let p = linear(1).pow(2 * n + 2).mul(&linear(4).inverse()?);
    let numbers = partitions(n).into_iter().map(|lambda| {
        let value = lambda.iter().map(|&i| p.coeffs()[i as usize].clone()).product();
        (lambda, value)
    });
    ManifoldClass::new(format!("HP{n}"), 4 * n, numbers, true)
}

/// The K3 surface: `p_1` fixed by a signature of `-16`.
pub fn k3() -> Result<ManifoldClass> {
    let l = top_forms(4)?.l_hat.clone();
    let per_p1 = l.coefficient(&Monomial::pontryagin(1));
    ManifoldClass::new("K3", 4, [(vec![1], int(-16) / per_p1)], true)
}

/// An 8-dimensional spin manifold with `Â = 1` and signature `0`.
pub fn bott8() -> Result<ManifoldClass> {
    let forms = top_forms(8)?;
    let (p11, p2) = (Monomial::from_partition(&[1, 1]), Monomial::pontryagin(2));
    let (a, b) = (forms.a_hat.coefficient(&p11), forms.a_hat.coefficient(&p2));
    let (c, d) = (forms.l_hat.coefficient(&p11), forms.l_hat.coefficient(&p2));
    // a x + b y = 1, c x + d y = 0
    let det = &a * &d - &b * &c;
    if det.is_zero() {
        return Err(Error::Domain("singular system for Bott8".into()));
    }
    let x = &d / &det;
    let y = -&c / &det;
    ManifoldClass::new("Bott8", 8, [(vec![1, 1], x), (vec![2], y)], true)
}

/// Named catalog entries: `K3`, `Bott8` (or `B8`), `HPn` / `HPn(n)`.
pub fn catalog(name: &str) -> Result<ManifoldClass> {
    let lower = name.trim().to_ascii_lowercase();
    match lower.as_str() {
        "k3" => k3(),
        "bott8" | "b8" => bott8(),
        _ => {
            let rest = lower
                .strip_prefix("hpn(")
                .and_then(|r| r.strip_suffix(')'))
                .or_else(|| lower.strip_prefix("hp"));
            match rest.and_then(|r| r.parse::<u32>().ok()) {
                Some(n) => hpn(n),
                None => Err(Error::Invalid(format!("unknown manifold {name:?}"))),
            }
        }
    }
}

/// Evaluates `K3×Bott8`, `HP2^2×K3`, `HP2 x HP2`, ...
pub fn parse_expression(expr: &str) -> Result<ManifoldClass> {
    let factors: Vec<&str> = expr.split(['×', '*', 'x']).map(str::trim).collect();
    if factors.iter().any(|f| f.is_empty()) {
        return Err(Error::Invalid(format!("malformed product {expr:?}")));
    }
    let mut names = Vec::new();
    let mut result: Option<ManifoldClass> = None;
    for factor in factors {
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => {
                let e = e
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Invalid(format!("bad exponent in {factor:?}")))?;
                (b.trim(), e)
            }
            None => (factor, 1),
        };
        let m = catalog(base)?;
        let m = m.power(exp)?;
        names.push(m.name.clone());
        result = Some(match result {
            None => m,
            Some(acc) => acc.product(&m),
        });
    }
    let m = result.ok_or_else(|| Error::Invalid("empty expression".into()))?;
    Ok(m.renamed(names.join("×")))
}

/// The characteristic numbers computed for a manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Functional {
    Signature,
    AHat,
    SignatureTangent,
    SignatureTensorSquare,
}

impl Functional {
    pub const ALL: [Functional; 4] = [
        Functional::Signature,
        Functional::AHat,
        Functional::SignatureTangent,
        Functional::SignatureTensorSquare,
    ];

    /// The number written out for a named manifold, e.g. `Sig(K3,T)`.
    pub fn of(self, name: &str) -> String {
        match self {
            Functional::Signature => format!("Sig({name})"),
            Functional::AHat => format!("Â({name})"),
            Functional::SignatureTangent => format!("Sig({name},T)"),
            Functional::SignatureTensorSquare => format!("Sig({name},T⊗T)"),
        }
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Functional::Signature => "Sig",
            Functional::AHat => "Â",
            Functional::SignatureTangent => "Sig(·,T)",
            Functional::SignatureTensorSquare => "Sig(·,T⊗T)",
        })
    }
}

impl FromStr for Functional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Sig" | "sig" => Ok(Functional::Signature),
            "Â" | "A" | "ahat" => Ok(Functional::AHat),
            "Sig(·,T)" | "sig-t" => Ok(Functional::SignatureTangent),
            "Sig(·,T⊗T)" | "sig-tt" => Ok(Functional::SignatureTensorSquare),
            other => Err(Error::Invalid(format!("unknown functional {other:?}"))),
        }
    }
}

impl Serialize for Functional {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Top-degree forms paired against a manifold of one dimension.
#[derive(Clone, Debug)]
pub struct TopForms {
    pub a_hat: GradedClass,
    pub l_hat: GradedClass,
    pub classical_l: GradedClass,
    pub l_hat_tangent: GradedClass,
    pub l_hat_tensor_square: GradedClass,
}

impl TopForms {
    fn new(dim: u32) -> Self {
        let bridge = PowerSumBridge::for_dimension(dim, false);
        let top = dim / 2;
        let l = l_hat(&bridge);
        let part = |c: &GradedClass| c.component(top).expect("top degree is within the truncation");
        Self {
            a_hat: part(&a_hat(&bridge)),
            classical_l: part(&classical_l(&bridge)),
            l_hat_tangent: part(&(&l * &ch_tangent(&bridge))),
            l_hat_tensor_square: part(&(&l * &ch_tensor_square(&bridge))),
            l_hat: part(&l),
        }
    }

    pub fn form(&self, f: Functional) -> &GradedClass {
        match f {
            Functional::Signature => &self.l_hat,
            Functional::AHat => &self.a_hat,
            Functional::SignatureTangent => &self.l_hat_tangent,
            Functional::SignatureTensorSquare => &self.l_hat_tensor_square,
        }
    }
}

/// Largest dimension for which forms are cached.
pub const FORM_CACHE_DIM: u32 = 64;

/// Top forms for `dim`, computed once per process.
pub fn top_forms(dim: u32) -> Result<&'static TopForms> {
    static CACHE: OnceLock<Vec<OnceLock<TopForms>>> = OnceLock::new();
    if dim == 0 || dim % 4 != 0 || dim > FORM_CACHE_DIM {
        return Err(Error::Invalid(format!("no forms for dimension {dim}")));
    }
    let cache = CACHE.get_or_init(|| (0..=FORM_CACHE_DIM / 4).map(|_| OnceLock::new()).collect());
    Ok(cache[(dim / 4) as usize].get_or_init(|| TopForms::new(dim)))
}

/// One divisibility statement evaluated on a manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divisibility {
    pub statement: String,
    #[serde(serialize_with = "serialize_int")]
    pub modulus: BigInt,
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
    pub holds: bool,
    #[serde(serialize_with = "serialize_opt_rational", skip_serializing_if = "Option::is_none")]
    pub quotient: Option<Rational>,
    /// Quotient is `±1` on a rule that is claimed sharp.
    pub witness: bool,
}

fn serialize_int<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

fn serialize_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_rational(r)),
        None => s.serialize_none(),
    }
}

/// A characteristic number with its divisibility annotations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharNumberResult {
    pub manifold: String,
    pub dim: u32,
    pub functional: Functional,
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<Divisibility>,
}

/// Pairs characteristic forms against manifolds up to `max_dim`.
#[derive(Clone, Copy, Debug)]
pub struct Evaluator {
    max_dim: u32,
}

impl Evaluator {
    pub fn new(max_dim: u32) -> Result<Self> {
        if max_dim > FORM_CACHE_DIM {
            return Err(Error::Invalid(format!("max dimension {max_dim} exceeds {FORM_CACHE_DIM}")));
        }
        Ok(Self { max_dim })
    }

    pub fn max_dim(&self) -> u32 {
        self.max_dim
    }

    fn forms(&self, m: &ManifoldClass) -> Result<&'static TopForms> {
        if m.dim > self.max_dim {
            return Err(Error::Range {
                index: m.dim as usize,
                limit: self.max_dim as usize,
            });
        }
        top_forms(m.dim)
    }

    pub fn value(&self, m: &ManifoldClass, f: Functional) -> Result<Rational> {
        m.pair(self.forms(m)?.form(f))
    }

    /// Signature through the classical L-genus instead of `L̂`.
    pub fn classical_signature(&self, m: &ManifoldClass) -> Result<Rational> {
        m.pair(&self.forms(m)?.classical_l)
    }

    pub fn char_number(&self, m: &ManifoldClass, f: Functional) -> Result<CharNumberResult> {
        Ok(CharNumberResult {
            manifold: m.name.clone(),
            dim: m.dim,
            functional: f,
            value: self.value(m, f)?,
            annotations: Vec::new(),
        })
    }

    /// All four numbers, with the divisibility rules for spin manifolds
    /// attached to the functional they constrain.
    pub fn divisibility_report(&self, m: &ManifoldClass) -> Result<Vec<CharNumberResult>> {
        let mut rows = Functional::ALL
            .iter()
            .map(|&f| self.char_number(m, f))
            .collect::<Result<Vec<_>>>()?;
        if !m.spin {
            return Ok(rows);
        }
        let values: BTreeMap<Functional, Rational> = rows.iter().map(|r| (r.functional, r.value.clone())).collect();
        for rule in rules(m.dim) {
            let value: Rational = rule
                .combination
                .iter()
                .map(|(f, c)| int(*c) * &values[f])
                .sum();
            let modulus = rule.modulus.clone();
            let holds = crate::rational::divides(&modulus, &value);
            let quotient = holds.then(|| &value / Rational::from_integer(modulus.clone()));
            let witness = rule.sharp && quotient.as_ref().is_some_and(|q| q.abs().is_one());
            let row = rows
                .iter_mut()
                .find(|r| r.functional == rule.combination[0].0)
                .expect("rows cover every functional");
            row.annotations.push(Divisibility {
                statement: rule.statement,
                modulus,
                value,
                holds,
                quotient,
                witness,
            });
        }
        Ok(rows)
    }
}

struct Rule {
    statement: String,
    modulus: BigInt,
    combination: Vec<(Functional, i64)>,
    sharp: bool,
}

fn rule(statement: &str, modulus: BigInt, combination: &[(Functional, i64)], sharp: bool) -> Rule {
    Rule {
        statement: statement.to_string(),
        modulus,
        combination: combination.to_vec(),
        sharp,
    }
}

fn rules(dim: u32) -> Vec<Rule> {
    use Functional::*;
    let two = |e: u32| BigInt::from(2).pow(e);
    let mut out = Vec::new();
    if dim % 8 == 4 {
        out.push(rule("16 | Sig", two(4), &[(Signature, 1)], false));
        out.push(rule("256 | Sig(·,T)", two(8), &[(SignatureTangent, 1)], true));
        out.push(rule(
            "2^15 | Sig(·,T) - 16 Sig",
            two(15),
            &[(SignatureTangent, 1), (Signature, -16)],
            false,
        ));
        out.push(rule(
            "2^26 | Sig(·,T⊗T) - 55 Sig(·,T) + 768 Sig",
            two(26),
            &[(SignatureTensorSquare, 1), (SignatureTangent, -55), (Signature, 768)],
            false,
        ));
        if dim == 4 {
            out.push(rule("256·7 | Sig(·,T⊗T)", two(8) * 7, &[(SignatureTensorSquare, 1)], true));
        } else {
            out.push(rule("256 | Sig(·,T⊗T)", two(8), &[(SignatureTensorSquare, 1)], true));
        }
    } else {
        out.push(rule("2048 | Sig(·,T)", two(11), &[(SignatureTangent, 1)], true));
        out.push(rule(
            "2^22 | Sig(·,T⊗T) - 23 Sig(·,T)",
            two(22),
            &[(SignatureTensorSquare, 1), (SignatureTangent, -23)],
            false,
        ));
        if dim == 8 {
            out.push(rule("2048·23 | Sig(·,T⊗T)", two(11) * 23, &[(SignatureTensorSquare, 1)], true));
        } else {
            out.push(rule("2048 | Sig(·,T⊗T)", two(11), &[(SignatureTensorSquare, 1)], true));
        }
    }
    out
}

/// Twisted signatures of a product, as two reports: T and T⊗T.
pub fn verify_product_formula(ev: &Evaluator, m1: &ManifoldClass, m2: &ManifoldClass) -> Vec<VerificationReport> {
    use Functional::*;
    let product = m1.product(m2);
    let id = |which: &str| format!("product-formula/{which}/{}", product.name);
    let outcome = (|| -> Result<[(Rational, Rational); 2]> {
        let v = |m: &ManifoldClass, f| ev.value(m, f);
        let (s1, s2) = (v(m1, Signature)?, v(m2, Signature)?);
        let (t1, t2) = (v(m1, SignatureTangent)?, v(m2, SignatureTangent)?);
        let (tt1, tt2) = (v(m1, SignatureTensorSquare)?, v(m2, SignatureTensorSquare)?);
        let tangent = (v(&product, SignatureTangent)?, &s1 * &t2 + &s2 * &t1);
        let square = (
            v(&product, SignatureTensorSquare)?,
            &s1 * &tt2 + int(2) * &t1 * &t2 + &s2 * &tt1,
        );
        Ok([tangent, square])
    })();
    match outcome {
        Ok([(a, b), (c, d)]) => vec![
            VerificationReport::compare_numbers(id("T"), a, b),
            VerificationReport::compare_numbers(id("TxT"), c, d),
        ],
        Err(e) => vec![
            VerificationReport::from_check(id("T"), Err(e.clone())),
            VerificationReport::from_check(id("TxT"), Err(e)),
        ],
    }
}

/// Spin building blocks used for catalog products.
pub const CATALOG_FACTORS: [&str; 5] = ["K3", "HP1", "HP2", "HP3", "Bott8"];

/// Every product of catalog factors (with repetition) of dimension at most
/// `max_dim`, named canonically.
pub fn catalog_products(max_dim: u32) -> Result<Vec<ManifoldClass>> {
    let factors = CATALOG_FACTORS
        .iter()
        .map(|n| catalog(n))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let mut counts = vec![0u32; factors.len()];
    fn go(
        i: usize,
        budget: u32,
        factors: &[ManifoldClass],
        counts: &mut Vec<u32>,
        out: &mut Vec<ManifoldClass>,
    ) {
        if i == factors.len() {
            let mut acc: Option<(ManifoldClass, Vec<String>)> = None;
            for (m, &c) in factors.iter().zip(counts.iter()) {
                if c == 0 {
                    continue;
                }
                let p = m.power(c).expect("positive exponent");
                acc = Some(match acc {
                    None => (p.clone(), vec![p.name.clone()]),
                    Some((a, mut names)) => {
                        names.push(p.name.clone());
                        (a.product(&p), names)
                    }
                });
            }
            if let Some((m, names)) = acc {
                out.push(m.renamed(names.join("×")));
            }
            return;
        }
        let d = factors[i].dim;
        let mut c = 0;
        while c * d <= budget {
            counts[i] = c;
            go(i + 1, budget - c * d, factors, counts, out);
            c += 1;
        }
        counts[i] = 0;
    }
    go(0, max_dim, &factors, &mut counts, &mut out);
    out.sort_by(|a, b| (a.dim, &a.name).cmp(&(b.dim, &b.name)));
    Ok(out)
}

/// Characteristic numbers quoted for specific manifolds.
pub const KNOWN_VALUES: [(&str, Functional, i64); 13] = [
    ("HP2", Functional::Signature, 1),
    ("HP2", Functional::AHat, 0),
    ("K3", Functional::Signature, -16),
    ("K3", Functional::AHat, 2),
    ("K3", Functional::SignatureTangent, -256),
    ("K3", Functional::SignatureTensorSquare, -1792),
    ("Bott8", Functional::AHat, 1),
    ("Bott8", Functional::SignatureTangent, 2048),
    ("Bott8", Functional::SignatureTensorSquare, 47104),
    ("K3×Bott8", Functional::SignatureTensorSquare, -1802240),
    ("HP2", Functional::SignatureTangent, 0),
    ("HP2^2", Functional::SignatureTangent, 0),
    ("HP2^3", Functional::SignatureTangent, 0),
];

fn slug(f: Functional) -> &'static str {
    match f {
        Functional::Signature => "sig",
        Functional::AHat => "ahat",
        Functional::SignatureTangent => "sig-t",
        Functional::SignatureTensorSquare => "sig-tt",
    }
}

fn known_value_report(ev: &Evaluator, expr: &str, f: Functional, expected: i64) -> VerificationReport {
    let id = format!("manifold/{}/{expr}", slug(f));
    match parse_expression(expr).and_then(|m| ev.value(&m, f)) {
        Ok(v) => VerificationReport::compare_numbers(id, v, int(expected)),
        Err(e) => VerificationReport::from_check(id, Err(e)),
    }
}

/// One report per catalog product: every rule holds and every number is an
/// integer.
pub fn divisibility_check(ev: &Evaluator, m: &ManifoldClass) -> VerificationReport {
    let id = format!("divisibility/dim{:02}/{}", m.dim, m.name);
    match ev.divisibility_report(m) {
        Ok(rows) => {
            let mut report = VerificationReport::from_check(id, Ok(()));
            report.dim = Some(m.dim);
            for row in &rows {
                report = report.require(row.value.is_integer(), format!("{} is not an integer", row.functional));
                for a in &row.annotations {
                    report = report
                        .require(a.holds, format!("{} fails: value {}", a.statement, format_rational(&a.value)));
                    if a.witness {
                        report = report.with_note(format!("witness for {}", a.statement));
                    }
                }
            }
            report
        }
        Err(e) => VerificationReport::from_check(id, Err(e)),
    }
}

fn quotient(ev: &Evaluator, expr: &str, f: Functional, modulus: i64) -> Result<Rational> {
    Ok(ev.value(&parse_expression(expr)?, f)? / int(modulus))
}

fn hp2_power(k: u32) -> String {
    match k {
        0 => String::new(),
        1 => "×HP2".into(),
        k => format!("×HP2^{k}"),
    }
}

/// Sharpness witnesses: exact quotients on specific products, or coprime
/// quotients on a pair of products.
pub fn witness_reports(ev: &Evaluator) -> Vec<VerificationReport> {
    use Functional::*;
    let max = ev.max_dim();
    let mut out = Vec::new();
    let exact = |id: String, expr: String, f, modulus, expected: i64| {
        let r = match quotient(ev, &expr, f, modulus) {
            Ok(q) => VerificationReport::compare_numbers(id, q, int(expected)),
            Err(e) => VerificationReport::from_check(id, Err(e)),
        };
        r.with_note(format!("{} / {modulus}", f.of(&expr)))
    };
    let coprime = |id: String, a: String, b: String, f, modulus: i64| {
        let outcome = quotient(ev, &a, f, modulus).and_then(|qa| Ok((qa, quotient(ev, &b, f, modulus)?)));
        match outcome {
            Ok((qa, qb)) => {
                let integral = qa.is_integer() && qb.is_integer();
                let g = qa.numer().gcd(qb.numer());
                VerificationReport::compare_numbers(id, Rational::from_integer(g), int(1))
                    .require(integral, "quotients are not integers")
                    .with_note(format!(
                        "{} / {modulus} = {}, {} / {modulus} = {}",
                        f.of(&a),
                        format_rational(&qa),
                        f.of(&b),
                        format_rational(&qb)
                    ))
            }
            Err(e) => VerificationReport::from_check(id, Err(e)),
        }
    };
    for k in 0.. {
        let dim = 8 * k + 4;
        if dim > max {
            break;
        }
        let id = |what: &str| format!("witness/{what}/dim{dim:02}");
        out.push(exact(id("sig-t"), format!("K3{}", hp2_power(k)), SignatureTangent, 256, -1));
        if k == 0 {
            out.push(exact(id("sig-tt"), "K3".into(), SignatureTensorSquare, 1792, -1));
        } else {
            out.push(coprime(
                id("sig-tt"),
                format!("K3×Bott8{}", hp2_power(k - 1)),
                format!("K3{}", hp2_power(k)),
                SignatureTensorSquare,
                256,
            ));
        }
    }
    for k in 1.. {
        let dim = 8 * k;
        if dim > max {
            break;
        }
        let id = |what: &str| format!("witness/{what}/dim{dim:02}");
        out.push(exact(id("sig-t"), format!("Bott8{}", hp2_power(k - 1)), SignatureTangent, 2048, 1));
        if k == 1 {
            out.push(exact(id("sig-tt"), "Bott8".into(), SignatureTensorSquare, 47104, 1));
        } else {
            out.push(coprime(
                id("sig-tt"),
                format!("Bott8^2{}", hp2_power(k - 2)),
                format!("Bott8{}", hp2_power(k - 1)),
                SignatureTensorSquare,
                2048,
            ));
        }
    }
    out
}

/// Every manifold-level check up to the evaluator's dimension.
pub fn manifold_reports(ev: &Evaluator) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for (expr, f, v) in KNOWN_VALUES {
        out.push(known_value_report(ev, expr, f, v));
    }
    let factors: Vec<ManifoldClass> = match CATALOG_FACTORS.iter().map(|n| catalog(n)).collect() {
        Ok(f) => f,
        Err(e) => {
            out.push(VerificationReport::from_check("manifold/catalog", Err(e)));
            return out;
        }
    };
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            if a.dim + b.dim <= ev.max_dim() {
                out.extend(verify_product_formula(ev, a, b));
            }
        }
    }
    match catalog_products(ev.max_dim()) {
        Ok(products) => {
            for m in &products {
                out.push(divisibility_check(ev, m));
                let id = format!("normalization/dim{:02}/{}", m.dim, m.name);
                out.push(match (ev.value(m, Functional::Signature), ev.classical_signature(m)) {
                    (Ok(a), Ok(b)) => VerificationReport::compare_numbers(id, a, b),
                    (Err(e), _) | (_, Err(e)) => VerificationReport::from_check(id, Err(e)),
                });
            }
        }
        Err(e) => out.push(VerificationReport::from_check("manifold/products", Err(e))),
    }
    out.extend(witness_reports(ev));
    out
}
