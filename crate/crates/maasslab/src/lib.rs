//! maasslab: exact q-series and arbitrary-precision numerics for modular
//! and mock modular generating functions of BPS state counts.
//!
//! The crate is organized around five subsystems:
//!
//! - [`series`]: truncated Laurent series with exact rational coefficients,
//!   in one variable `q` ([`series::QSeries`]) and in the pair `(q, y)`
//!   ([`series::BiSeries`]). Every form in the crate lives in one of these.
//! - [`forms`]: the classical objects — Dedekind eta powers, Jacobi theta,
//!   Eisenstein series `E4`/`E6`, and Hurwitz class numbers.
//! - [`maass`]: arbitrary-precision evaluation on the upper half-plane,
//!   incomplete gamma, Eichler integrals, the `xi` and Laplace operators,
//!   modularity verification with multiplier systems, and the real-analytic
//!   Eisenstein series.
//! - [`siegel`]: the Igusa cusp form `Phi10` built by the arithmetic lift of
//!   the Jacobi cusp form `phi_{10,1}`, and its inversion in the `y_small`
//!   chamber, producing quarter-BPS coefficients `d(m,n,l)`.
//! - [`bps`]: BPS indices, entropy, coefficient-growth fits, and naive /
//!   completed L-series with functional-equation checks.
//!
//! [`cache`] and [`cli`] provide the on-disk coefficient cache and the
//! command-line surface.

pub mod bps;
pub mod cache;
pub mod cli;
pub mod forms;
pub mod maass;
pub mod series;
pub mod siegel;

pub use series::{BiSeries, QSeries, Rat};
