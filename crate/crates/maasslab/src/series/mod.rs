//! Exact truncated Laurent-series arithmetic.
//!
//! Two carriers: [`QSeries`] (one variable `q`, dense rational coefficients,
//! rational exponent offset) and [`BiSeries`] (series in `q` whose
//! coefficients are Laurent polynomials in `y`).
//!
//! Truncation is metadata: a series knows its coefficients for exponents up
//! to `trunc` and claims nothing beyond. Binary operations propagate
//! truncation pessimistically, so a long pipeline can never manufacture
//! knowledge it does not have. All coefficients are exact rationals; the only
//! place the crate converts to floating point is `maass`.

mod biseries;
mod qseries;

pub use biseries::{BiSeries, YPoly};
pub use qseries::QSeries;

/// Exact rational coefficient type (GMP-backed; always reduced, denominator
/// positive, canonical zero `0/1`).
pub type Rat = rug::Rational;

/// Errors from series arithmetic.
#[derive(Debug, thiserror::Error)]
pub enum SeriesError {
    /// Inversion requires a nonzero lowest stored coefficient.
    #[error("cannot invert series: lowest stored coefficient is zero")]
    ZeroLeadingCoefficient,
    /// Addition requires offsets differing by an integer.
    #[error("incompatible exponent offsets: {0} vs {1}")]
    IncompatibleOffsets(String, String),
}

pub(crate) fn rat(n: i64) -> Rat {
    Rat::from(n)
}

pub(crate) fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::from((n, d))
}
