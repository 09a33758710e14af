//! Experiment files, the analysis pipeline and its reports.
//!
//! An experiment names a field, a polynomial self-map `phi` of affine space,
//! a starting point `alpha`, a subvariety `V` and a horizon `N`.
//! [`run_experiment`] computes the return set `{n < N : phi^n(alpha) ∈ V}`,
//! its density profile, the arithmetic progressions it contains, closure
//! certificates for each progression and the split into progressions plus
//! a residual.

pub mod error;
pub mod experiment;
pub mod parser;
pub mod pipeline;
pub mod report;

pub use error::FrontendError;
pub use experiment::{load_experiment, Analysis, ExperimentSpec, Problem};
pub use parser::{parse_polynomial_expr, ParseError};
pub use pipeline::{certify_progression, density_report, run_experiment};
pub use report::Report;

/// Runs `$body` with `$F` bound to the coefficient type of descriptor `$d`.
#[macro_export]
macro_rules! dispatch {
    ($d:expr, $F:ident => $body:expr) => {
        match $d.kind() {
            ::dml_core::FieldKind::Rationals => {
                type $F = ::dml_core::Rational;
                $body
            }
            ::dml_core::FieldKind::PrimeField => {
                type $F = ::dml_core::Fp;
                $body
            }
            ::dml_core::FieldKind::RationalFunctionField => {
                type $F = ::dml_core::Fpt;
                $body
            }
        }
    };
}
