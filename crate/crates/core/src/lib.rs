//! Exact verification of elliptic cancellation formulas for twisted
//! signatures.
//!
//! Everything is computed over the rationals: truncated power series,
//! a graded ring of Pontryagin classes with an optional Euler variable,
//! genera built from root factors, theta functions and level-2 modular
//! forms. On top of that sit the cancellation formulas themselves
//! ([`theorems`]), characteristic numbers of concrete manifolds
//! ([`manifolds`]) and a job-based runner ([`suite`]).
//!
//! ```
//! use anomaly_core::manifolds::{parse_expression, Evaluator, Functional};
//! use anomaly_core::rational::int;
//!
//! let ev = Evaluator::new(8).unwrap();
//! let b = parse_expression("Bott8").unwrap();
//! assert_eq!(ev.value(&b, Functional::SignatureTangent).unwrap(), int(2048));
//! ```

pub mod error;
pub mod graded;
pub mod rational;
pub mod ring;
pub mod series;
pub mod genera;
pub mod modular;
pub mod report;
pub mod theorems;
pub mod laws;
pub mod manifolds;
pub mod suite;

// The guide's snippets run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/classes.md")]
    mod classes {}
    #[doc = include_str!("../../../book/src/genera.md")]
    mod genera {}
    #[doc = include_str!("../../../book/src/modular.md")]
    mod modular {}
    #[doc = include_str!("../../../book/src/cancellation.md")]
    mod cancellation {}
    #[doc = include_str!("../../../book/src/manifolds.md")]
    mod manifolds {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
