//! Pass/fail records for every verified identity.

use std::fmt::Write as _;
use std::time::Duration;

use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::Error;
use crate::graded::GradedClass;
use crate::rational::{format_rational, Rational};
use crate::series::{half_q_key, HalfQSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A value on one side of a checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    None,
    Number(Rational),
    Class(GradedClass),
    Series(HalfQSeries<Rational>),
    ClassSeries(HalfQSeries<GradedClass>),
}

impl Value {
    fn render(&self) -> Option<String> {
        match self {
            Value::None => None,
            Value::Number(r) => Some(format_rational(r)),
            Value::Class(c) => Some(c.to_string()),
            Value::Series(s) => Some(s.to_string()),
            Value::ClassSeries(s) => Some(s.to_string()),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::None => serializer.serialize_none(),
            Value::Number(r) => serializer.serialize_str(&format_rational(r)),
            Value::Class(c) => c.serialize(serializer),
            Value::Series(s) => {
                let mut map = serializer.serialize_map(None)?;
                for (j, c) in s.coeffs().iter().enumerate() {
                    if !num_traits::Zero::is_zero(c) {
                        map.serialize_entry(&half_q_key(j), &format_rational(c))?;
                    }
                }
                map.end()
            }
            Value::ClassSeries(s) => {
                let mut map = serializer.serialize_map(None)?;
                for (j, c) in s.coeffs().iter().enumerate() {
                    if !c.is_empty() {
                        map.serialize_entry(&half_q_key(j), c)?;
                    }
                }
                map.end()
            }
        }
    }
}

/// Where a failing check first went wrong.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    pub detail: String,
}

impl From<&Error> for Failure {
    fn from(e: &Error) -> Self {
        match e {
            Error::Mismatch { q_order, degree, .. } => Failure {
                q_order: Some(*q_order),
                degree: Some(*degree),
                detail: e.to_string(),
            },
            _ => Failure {
                q_order: None,
                degree: None,
                detail: e.to_string(),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub case: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<u32>,
    #[serde(rename = "D", skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(rename = "J", skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
    pub residual: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn blank(case: impl Into<String>, status: Status) -> Self {
        Self {
            case: case.into(),
            dim: None,
            degree: None,
            order: None,
            status,
            lhs: Value::None,
            rhs: Value::None,
            residual: Value::None,
            failure: None,
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// Pass iff `lhs - rhs` is the zero class.
    pub fn compare_classes(case: impl Into<String>, lhs: GradedClass, rhs: GradedClass) -> Self {
        let residual = lhs.checked_sub(&rhs);
        let mut report = Self::blank(case, Status::Pass);
        match residual {
            Ok(res) if res.is_empty() => report.residual = Value::Class(res),
            Ok(res) => {
                report.status = Status::Fail;
                report.failure = Some(Failure {
                    q_order: None,
                    degree: res.min_degree(),
                    detail: "sides differ".into(),
                });
                report.residual = Value::Class(res);
            }
            Err(e) => {
                report.status = Status::Fail;
                report.failure = Some(Failure::from(&e));
            }
        }
        report.lhs = Value::Class(lhs);
        report.rhs = Value::Class(rhs);
        report
    }

    /// Pass iff the numbers are equal.
    pub fn compare_numbers(case: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        let residual = &lhs - &rhs;
        let pass = num_traits::Zero::is_zero(&residual);
        let mut report = Self::blank(case, if pass { Status::Pass } else { Status::Fail });
        if !pass {
            report.failure = Some(Failure {
                q_order: None,
                degree: None,
                detail: "numbers differ".into(),
            });
        }
        report.lhs = Value::Number(lhs);
        report.rhs = Value::Number(rhs);
        report.residual = Value::Number(residual);
        report
    }

    /// Pass iff the q-series are equal through the shorter truncation.
    pub fn compare_series(
        case: impl Into<String>,
        lhs: HalfQSeries<Rational>,
        rhs: HalfQSeries<Rational>,
    ) -> Self {
        let residual = lhs.sub(&rhs);
        let first = residual.valuation();
        let mut report = Self::blank(case, if first.is_none() { Status::Pass } else { Status::Fail });
        if let Some(j) = first {
            report.failure = Some(Failure {
                q_order: Some(j),
                degree: None,
                detail: "series differ".into(),
            });
        }
        report.order = Some(residual.order());
        report.lhs = Value::Series(lhs);
        report.rhs = Value::Series(rhs);
        report.residual = Value::Series(residual);
        report
    }

    /// Turns the outcome of a structural check into a report.
    pub fn from_check(case: impl Into<String>, outcome: Result<(), Error>) -> Self {
        match outcome {
            Ok(()) => Self::blank(case, Status::Pass),
            Err(e) => {
                let mut report = Self::blank(case, Status::Fail);
                report.failure = Some(Failure::from(&e));
                report
            }
        }
    }

    pub fn with_dims(mut self, dim: u32, degree: u32, order: usize) -> Self {
        self.dim = Some(dim);
        self.degree = Some(degree);
        self.order = Some(order);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Marks the report failed unless `ok`, with a reason.
    pub fn require(mut self, ok: bool, detail: impl Into<String>) -> Self {
        if !ok && self.status == Status::Pass {
            self.status = Status::Fail;
            self.failure = Some(Failure {
                q_order: None,
                degree: None,
                detail: detail.into(),
            });
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Multi-line text form, stable across runs.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let _ = write!(out, "{status} {}", self.case);
        if let Some(dim) = self.dim {
            let _ = write!(out, "  dim={dim}");
        }
        if let Some(d) = self.degree {
            let _ = write!(out, " D={d}");
        }
        if let Some(j) = self.order {
            let _ = write!(out, " J={j}");
        }
        out.push('\n');
        for (label, value) in [("lhs", &self.lhs), ("rhs", &self.rhs)] {
            if let Some(text) = value.render() {
                let _ = writeln!(out, "    {label}: {text}");
            }
        }
        if self.status == Status::Fail {
            if let Some(text) = self.residual.render() {
                let _ = writeln!(out, "    residual: {text}");
            }
        }
        if let Some(f) = &self.failure {
            let _ = write!(out, "    failure: {}", f.detail);
            if let Some(j) = f.q_order {
                let _ = write!(out, " (first at q^({j}/2)");
                match f.degree {
                    Some(d) => {
                        let _ = write!(out, ", degree {d})");
                    }
                    None => out.push(')'),
                }
            }
            out.push('\n');
        }
        for note in &self.notes {
            let _ = writeln!(out, "    note: {note}");
        }
        out
    }
}

/// Serialises rationals as `"a/b"` strings.
pub fn serialize_rationals<S: Serializer>(values: &[Rational], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&format_rational(v))?;
    }
    seq.end()
}

/// Sorts by case id and reports whether every entry passed.
pub fn finish(reports: &mut [VerificationReport]) -> bool {
    reports.sort_by(|a, b| a.case.cmp(&b.case));
    reports.iter().all(VerificationReport::passed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedRing;
    use crate::rational::int;

    #[test]
    fn class_comparison() {
        let r = GradedRing::truncated(2, false);
        let p1 = GradedClass::pontryagin(r, 1);
        let pass = VerificationReport::compare_classes("same", p1.clone(), p1.clone());
        assert!(pass.passed());
        let fail = VerificationReport::compare_classes("differ", p1.clone(), p1.scaled(&int(2)));
        assert!(!fail.passed());
        assert_eq!(fail.failure.unwrap().degree, Some(2));
    }

    #[test]
    fn json_shape() {
        let rep = VerificationReport::compare_numbers("n", int(-256), int(-256)).with_dims(4, 2, 6);
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["lhs"], "-256");
        assert_eq!(v["D"], 2);
        assert_eq!(v["J"], 6);
    }
}
