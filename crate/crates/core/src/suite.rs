//! The full verification run, split into independent jobs.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::laws::ring_law_check;
use crate::manifolds::{manifold_reports, Evaluator};
use crate::modular::{basis_expansion_check, jacobi_identity_check, modular_form, Case, FormName};
use crate::report::VerificationReport;
use crate::series::Series;
use crate::theorems::{
    verify_coefficient_formulas, verify_corollary, verify_hyperbolic_identity, verify_specialization, verify_theorem,
    CaseData, Corollary, Theorem,
};

/// Default verified dimensions stop here.
pub const DEFAULT_MAX_DIM: u32 = 28;
/// Twisted theorems are checked up to this dimension unless dimensions are
/// listed explicitly.
pub const TWISTED_MAX_DIM: u32 = 20;
/// Half-steps for the Jacobi identity: through `q^12`.
pub const JACOBI_ORDER: usize = 25;
/// Largest `k` in the basis expansion checks.
pub const BASIS_MAX_K: u32 = 3;
/// Internal degree for the hyperbolic identity.
pub const HYPERBOLIC_DEGREE: u32 = 16;

/// What to verify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub all: bool,
    pub theorem: Option<Theorem>,
    pub dims: Vec<u32>,
    pub max_dim: u32,
    pub order: Option<usize>,
    pub degree: Option<u32>,
    /// Seeds for the random ring-law checks.
    pub seeds: Vec<u64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            all: false,
            theorem: None,
            dims: Vec::new(),
            max_dim: DEFAULT_MAX_DIM,
            order: None,
            degree: None,
            seeds: vec![0],
        }
    }
}

/// One independent unit of work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Job {
    ModularForms,
    Jacobi,
    Basis { case: Case, k: u32 },
    Hyperbolic,
    RingLaws { seed: u64 },
    Theorems { case: Case, k: u32, only: Option<Theorem> },
    Manifolds { max_dim: u32 },
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_dim == 0 || self.max_dim % 4 != 0 {
            return Err(Error::Invalid(format!("--max-dim {} is not a positive multiple of 4", self.max_dim)));
        }
        for &dim in &self.dims {
            if dim == 0 || dim % 4 != 0 {
                return Err(Error::Invalid(format!("dimension {dim} is not a positive multiple of 4")));
            }
            if dim > self.max_dim {
                return Err(Error::Invalid(format!("dimension {dim} exceeds --max-dim {}", self.max_dim)));
            }
            if let Some(t) = self.theorem {
                if !t.applies_to(dim) {
                    return Err(Error::Invalid(format!("theorem {t} does not apply in dimension {dim}")));
                }
            }
        }
        if let Some(degree) = self.degree {
            let top = self.dims.iter().copied().max().unwrap_or(self.max_dim) / 2;
            if degree < top {
                return Err(Error::Invalid(format!("--degree {degree} is below the top degree {top}")));
            }
        }
        if self.order == Some(0) {
            return Err(Error::Invalid("--order must be positive".into()));
        }
        Ok(())
    }

    fn includes_global_checks(&self) -> bool {
        self.all || (self.theorem.is_none() && self.dims.is_empty())
    }

    fn case_dims(&self, twisted: bool) -> Vec<u32> {
        if !self.dims.is_empty() && !self.all {
            return self.dims.clone();
        }
        let cap = if twisted { self.max_dim.min(TWISTED_MAX_DIM) } else { self.max_dim };
        (1..=cap / 4).map(|i| 4 * i).collect()
    }

    /// Jobs in a fixed order; running them in any order gives the same
    /// reports once sorted.
    pub fn jobs(&self) -> Result<Vec<Job>> {
        self.validate()?;
        let mut jobs = Vec::new();
        if self.includes_global_checks() {
            jobs.push(Job::ModularForms);
            jobs.push(Job::Jacobi);
            for case in [Case::EightKPlus4, Case::EightK] {
                for k in 0..=BASIS_MAX_K {
                    jobs.push(Job::Basis { case, k });
                }
            }
            jobs.push(Job::Hyperbolic);
            for &seed in &self.seeds {
                jobs.push(Job::RingLaws { seed });
            }
        }
        for twisted in [false, true] {
            for dim in self.case_dims(twisted) {
                let (case, k) = Case::for_dimension(dim, twisted)?;
                let only = match self.theorem {
                    Some(t) if t.case() != case => continue,
                    other => other,
                };
                jobs.push(Job::Theorems { case, k, only });
            }
        }
        if self.includes_global_checks() {
            jobs.push(Job::Manifolds { max_dim: self.max_dim });
        }
        Ok(jobs)
    }
}

impl Job {
    /// Label used for timings.
    pub fn id(&self) -> String {
        match self {
            Job::ModularForms => "modular-forms".into(),
            Job::Jacobi => "jacobi".into(),
            Job::Basis { case, k } => format!("basis/{}/k{k}", case.label()),
            Job::Hyperbolic => "hyperbolic".into(),
            Job::RingLaws { seed } => format!("ring-laws/seed{seed}"),
            Job::Theorems { case, k, .. } => format!("theorems/{}/dim{:02}", case.label().replace(' ', "-"), case.dim(*k)),
            Job::Manifolds { max_dim } => format!("manifolds/max-dim{max_dim}"),
        }
    }

    pub fn run(&self, config: &SuiteConfig) -> Vec<VerificationReport> {
        let start = Instant::now();
        let mut out = match self {
            Job::ModularForms => modular_form_reports(),
            Job::Jacobi => {
                let mut r = VerificationReport::from_check("jacobi-identity", jacobi_identity_check(JACOBI_ORDER));
                r.order = Some(JACOBI_ORDER);
                vec![r]
            }
            Job::Basis { case, k } => (0..=*k)
                .map(|r| {
                    let check = basis_expansion_check(*case, *k, r);
                    let id = format!(
                        "basis/{}/k{k}/r{r}",
                        if case.is_plus4() { "8k+4" } else { "8k" }
                    );
                    let mut rep = VerificationReport::compare_series(
                        id,
                        Series::new(check.computed.clone()),
                        Series::new(check.closed_form.clone()),
                    );
                    rep.order = None;
                    rep.with_note("coefficients of q^0, q^1, q^2")
                })
                .collect(),
            Job::Hyperbolic => vec![verify_hyperbolic_identity(HYPERBOLIC_DEGREE)],
            Job::RingLaws { seed } => vec![VerificationReport::from_check(
                format!("ring-laws/seed{seed}"),
                ring_law_check(*seed),
            )],
            Job::Theorems { case, k, only } => theorem_job(*case, *k, *only, config),
            Job::Manifolds { max_dim } => match Evaluator::new(*max_dim) {
                Ok(ev) => manifold_reports(&ev),
                Err(e) => vec![VerificationReport::from_check("manifolds", Err(e))],
            },
        };
        if out.len() == 1 && out[0].elapsed.is_zero() {
            out[0].elapsed = start.elapsed();
        }
        out
    }
}

fn modular_form_reports() -> Vec<VerificationReport> {
    FormName::ALL
        .into_iter()
        .map(|name| {
            let head = name.quoted_head();
            let form = modular_form(name, head.len() - 1);
            let text = form.series.to_string();
            let rep = VerificationReport::compare_series(format!("modular/{name}"), form.series, Series::new(head));
            rep.with_note(format!("{name} = {text} + ..."))
                .require(modular_form(name, 13).has_integral_tail(), "non-integral coefficient")
        })
        .collect()
}

fn theorem_job(case: Case, k: u32, only: Option<Theorem>, config: &SuiteConfig) -> Vec<VerificationReport> {
    let data = match CaseData::new(case, k, config.order, config.degree) {
        Ok(d) => d,
        Err(e) => {
            let id = format!("case/{}/dim{:02}", case.label().replace(' ', "-"), case.dim(k));
            return vec![VerificationReport::from_check(id, Err(e))];
        }
    };
    let mut out = data.structural_reports();
    for t in Theorem::ALL {
        if t.case() == case && only.map_or(true, |o| o == t) {
            out.push(verify_theorem(t, &data));
            for cor in Corollary::ALL.iter().filter(|c| c.theorem == t && c.dim == data.dim()) {
                out.push(verify_corollary(cor, &data));
            }
        }
    }
    out.extend(verify_coefficient_formulas(&data));
    if case.is_twisted() {
        match CaseData::new(case.untwisted(), k, config.order, config.degree) {
            Ok(plain) => out.push(verify_specialization(&data, &plain)),
            Err(e) => out.push(VerificationReport::from_check(
                format!("specialization/{}/dim{:02}", case.label().replace(' ', "-"), data.dim()),
                Err(e),
            )),
        }
    }
    out
}

/// Runs every job in order.
pub fn run_sequential(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    Ok(config.jobs()?.iter().flat_map(|j| j.run(config)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_jobs_cover_every_dimension() {
        let jobs = SuiteConfig::default().jobs().unwrap();
        let theorem_jobs = jobs.iter().filter(|j| matches!(j, Job::Theorems { .. })).count();
        assert_eq!(theorem_jobs, 7 + 5);
        assert!(jobs.contains(&Job::Manifolds { max_dim: 28 }));
    }

    #[test]
    fn theorem_filter_restricts_cases() {
        let config = SuiteConfig {
            theorem: Some(Theorem::TangentPlus4),
            dims: vec![12],
            ..SuiteConfig::default()
        };
        assert_eq!(
            config.jobs().unwrap(),
            vec![Job::Theorems {
                case: Case::EightKPlus4,
                k: 1,
                only: Some(Theorem::TangentPlus4)
            }]
        );
    }

    #[test]
    fn bad_dimensions_are_rejected() {
        for dims in [vec![6], vec![0], vec![32]] {
            let config = SuiteConfig {
                dims,
                ..SuiteConfig::default()
            };
            assert!(config.jobs().is_err());
        }
        let config = SuiteConfig {
            theorem: Some(Theorem::Tangent),
            dims: vec![12],
            ..SuiteConfig::default()
        };
        assert!(config.validate().is_err());
    }
}
