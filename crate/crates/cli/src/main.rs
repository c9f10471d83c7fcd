use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anomaly_core::error::Error;
use anomaly_core::genera::{theta_element_ch, ThetaElement};
use anomaly_core::graded::{GradedClass, Monomial};
use anomaly_core::manifolds::{parse_expression, CharNumberResult, Evaluator, ManifoldClass};
use anomaly_core::modular::{build_with, modular_form, Case, FormName, RatioKind, ThetaRatio};
use anomaly_core::rational::format_rational;
use anomaly_core::report::{finish, Value, VerificationReport};
use anomaly_core::series::{half_q_key, HalfQSeries};
use anomaly_core::suite::{SuiteConfig, DEFAULT_MAX_DIM};
use anomaly_core::theorems::Theorem;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "anomaly", version, about = "Exact checks of twisted anomaly cancellation formulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Delta1,
    Eps1,
    Delta2,
    Eps2,
    ThetaRatio,
    ThetaElement,
    #[value(name = "P1", alias = "p1")]
    P1,
    #[value(name = "P2", alias = "p2")]
    P2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    LFactor,
    AFactor,
    TwistFirst,
    TwistSecond,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification checks and report pass/fail per case.
    Verify {
        /// Every check at every default dimension.
        #[arg(long)]
        all: bool,
        /// Restrict to one theorem, 2.1 to 2.6.
        #[arg(long, value_name = "ID")]
        theorem: Option<String>,
        /// Dimension to verify; repeatable.
        #[arg(long = "dim", value_name = "DIM", value_delimiter = ',')]
        dims: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u32,
        /// q-expansion order J in half-steps.
        #[arg(long, value_name = "J")]
        order: Option<usize>,
        /// Internal degree truncation D.
        #[arg(long, value_name = "D")]
        degree: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also write the JSON report here.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Seed for the random ring-law checks; repeatable.
        #[arg(long = "seed", value_delimiter = ',')]
        seeds: Vec<u64>,
    },
    /// Print a q-expansion.
    Expand {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, default_value_t = 4)]
        dim: u32,
        /// Through q^(order/2).
        #[arg(long)]
        order: Option<usize>,
        /// Internal degree truncation; for theta-ratio, the power of y².
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        twisted: bool,
        /// For P1/P2, print every degree rather than the top one.
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Characteristic numbers of a catalog product such as "K3×Bott8".
    Manifold {
        expr: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

enum Failure {
    Checks,
    Config(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Config(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify {
            all,
            theorem,
            dims,
            max_dim,
            order,
            degree,
            format,
            jobs,
            out,
            seeds,
        } => verify(
            all, theorem, dims, max_dim, order, degree, format, jobs, out, seeds,
        ),
        Command::Expand {
            target,
            dim,
            order,
            degree,
            twisted,
            full,
            kind,
            format,
        } => expand(target, dim, order, degree, twisted, full, kind, format),
        Command::Manifold { expr, max_dim, format } => manifold(&expr, max_dim, format),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[derive(Serialize)]
struct Document<'a> {
    passed: bool,
    total: usize,
    failed: usize,
    reports: &'a [VerificationReport],
}

#[allow(clippy::too_many_arguments)]
fn verify(
    all: bool,
    theorem: Option<String>,
    dims: Vec<u32>,
    max_dim: u32,
    order: Option<usize>,
    degree: Option<u32>,
    format: Format,
    jobs: usize,
    out: Option<PathBuf>,
    seeds: Vec<u64>,
) -> Result<(), Failure> {
    let theorem = theorem.map(|t| t.parse::<Theorem>()).transpose()?;
    let config = SuiteConfig {
        all,
        theorem,
        dims,
        max_dim,
        order,
        degree,
        seeds: if seeds.is_empty() { vec![0] } else { seeds },
    };
    let job_list = config.jobs()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Config(e.to_string()))?;
    let start = Instant::now();
    let results: Vec<(String, f64, Vec<VerificationReport>)> = pool.install(|| {
        job_list
            .par_iter()
            .map(|job| {
                let t = Instant::now();
                let reports = job.run(&config);
                (job.id(), t.elapsed().as_secs_f64(), reports)
            })
            .collect()
    });
    let mut reports = Vec::new();
    for (id, secs, batch) in results {
        eprintln!("timing {id} {secs:.3}s");
        reports.extend(batch);
    }
    eprintln!("timing total {:.3}s", start.elapsed().as_secs_f64());
    let passed = finish(&mut reports);
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let doc = Document {
        passed,
        total: reports.len(),
        failed,
        reports: &reports,
    };
    let json = serde_json::to_string_pretty(&doc).expect("reports serialise");
    if let Some(path) = out {
        std::fs::write(&path, format!("{json}\n"))
            .map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display())))?;
    }
    match format {
        Format::Json => emit(&format!("{json}\n")),
        Format::Text => {
            let mut text: String = reports.iter().map(VerificationReport::render_text).collect();
            let _ = writeln!(text, "{} checks, {} passed, {failed} failed", reports.len(), reports.len() - failed);
            emit(&text);
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn render_value(out: &mut String, label: &str, value: Value, format: Format) {
    match format {
        Format::Json => {
            let doc = serde_json::json!({ "target": label, "expansion": value });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("values serialise"));
        }
        Format::Text => match value {
            Value::Series(s) => {
                let _ = writeln!(out, "{s}");
            }
            Value::ClassSeries(s) => out.push_str(&class_series_lines(&s)),
            _ => {}
        },
    }
}

fn class_series_lines(s: &HalfQSeries<GradedClass>) -> String {
    let mut out = String::new();
    for (j, c) in s.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{}: {c}", half_q_key(j));
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn expand(
    target: Target,
    dim: u32,
    order: Option<usize>,
    degree: Option<u32>,
    twisted: bool,
    full: bool,
    kind: Option<Kind>,
    format: Format,
) -> Result<(), Failure> {
    let mut out = String::new();
    let mut form = |name: FormName| {
        let f = modular_form(name, order.unwrap_or(4));
        render_value(&mut out, &name.to_string(), Value::Series(f.series), format);
    };
    match target {
        Target::Delta1 => form(FormName::Delta1),
        Target::Eps1 => form(FormName::Eps1),
        Target::Delta2 => form(FormName::Delta2),
        Target::Eps2 => form(FormName::Eps2),
        Target::ThetaRatio => {
            let y_order = degree.unwrap_or(4) as usize;
            let kinds = match kind {
                Some(k) => vec![k],
                None => vec![Kind::LFactor, Kind::AFactor, Kind::TwistFirst, Kind::TwistSecond],
            };
            for k in kinds {
                let (name, ratio_kind) = match k {
                    Kind::LFactor => ("l-factor", RatioKind::LFactor),
                    Kind::AFactor => ("a-factor", RatioKind::AFactor),
                    Kind::TwistFirst => ("twist-first", RatioKind::TwistFirst),
                    Kind::TwistSecond => ("twist-second", RatioKind::TwistSecond),
                };
                let ratio = ThetaRatio::new(ratio_kind, order.unwrap_or(4), y_order)?;
                for r in 0..=y_order {
                    let label = format!("{name} y^{}", 2 * r);
                    if format == Format::Text {
                        let _ = write!(out, "{label}: ");
                    }
                    render_value(&mut out, &label, Value::Series(ratio.y_coefficient(r)), format);
                }
            }
        }
        Target::ThetaElement => {
            let (case, k) = Case::for_dimension(dim, twisted)?;
            let bridge = match degree {
                Some(d) => case.bridge_with_degree(k, d)?,
                None => case.bridge(k),
            };
            for (name, which) in [("Theta1", ThetaElement::First), ("Theta2", ThetaElement::Second)] {
                let s = theta_element_ch(which, twisted, &bridge, order.unwrap_or(4))?;
                if format == Format::Text {
                    let _ = writeln!(out, "{name}");
                }
                render_value(&mut out, name, Value::ClassSeries(s), format);
            }
        }
        Target::P1 | Target::P2 => {
            let (case, k) = Case::for_dimension(dim, twisted)?;
            let bridge = match degree {
                Some(d) => case.bridge_with_degree(k, d)?,
                None => case.bridge(k),
            };
            let (name, which) = match target {
                Target::P1 => ("P1", ThetaElement::First),
                _ => ("P2", ThetaElement::Second),
            };
            let p = build_with(which, case, k, &bridge, order.unwrap_or_else(|| case.default_order(k)))?;
            render_value(&mut out, name, Value::ClassSeries(if full { p.full } else { p.top }), format);
        }
    }
    emit(&out);
    Ok(())
}

#[derive(Serialize)]
struct ManifoldDocument<'a> {
    manifold: &'a ManifoldClass,
    numbers: &'a [CharNumberResult],
    passed: bool,
}

fn manifold(expr: &str, max_dim: u32, format: Format) -> Result<(), Failure> {
    let m = parse_expression(expr)?;
    let ev = Evaluator::new(max_dim)?;
    let rows = ev.divisibility_report(&m)?;
    let passed = !m.spin
        || rows
            .iter()
            .all(|r| r.value.is_integer() && r.annotations.iter().all(|a| a.holds));
    let mut out = String::new();
    match format {
        Format::Json => {
            let doc = ManifoldDocument {
                manifold: &m,
                numbers: &rows,
                passed,
            };
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("results serialise"));
        }
        Format::Text => {
            let _ = writeln!(out, "{}  dim={}{}", m.name, m.dim, if m.spin { "  spin" } else { "" });
            let numbers: Vec<String> = m
                .pontryagin_numbers()
                .map(|(lambda, v)| format!("{} = {}", Monomial::from_partition(lambda), format_rational(v)))
                .collect();
            let _ = writeln!(out, "  {}", numbers.join(", "));
            for row in &rows {
                let _ = writeln!(out, "  {:<12} {}", row.functional.to_string(), format_rational(&row.value));
                for a in &row.annotations {
                    let verdict = if a.holds { "holds" } else { "FAILS" };
                    let mut line = format!("      {}: {verdict}", a.statement);
                    if let Some(q) = &a.quotient {
                        let _ = write!(line, ", quotient {}", format_rational(q));
                    }
                    if a.witness {
                        line.push_str(", sharp");
                    }
                    let _ = writeln!(out, "{line}");
                }
            }
        }
    }
    emit(&out);
    if passed {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}
