//! Numerical engine for the upper half-plane: evaluation of q-series at
//! arbitrary precision, harmonic completions via incomplete gamma and
//! Eichler integrals, the `xi_k` and `Delta_k` operators by finite
//! differences, automorphy verification with multiplier systems, and the
//! real-analytic Eisenstein series.

mod cnum;
mod eichler;
mod eisenstein;
mod eval;
mod gamma;
mod modularity;
mod operators;

pub use cnum::CNum;
pub use eichler::eichler_integral;
pub use eisenstein::{eisenstein_real_analytic, EisensteinEvaluator};
pub use eval::{
    assemble_completion, completion_from_shadow, eval_qseries, EvalOutcome, MaassFormEvaluator,
    SeriesEvaluator,
};
pub use gamma::{incomplete_gamma, incomplete_gamma_complex};
pub use modularity::{
    default_sample_points, fit_completion_constant, verify_modularity, FitOutcome, ResidualRecord,
};
pub use operators::{laplacian, xi_operator};

use crate::forms::Multiplier;
use crate::series::QSeries;
use rug::Float;

/// A point `tau = u + iv` of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub u: f64,
    pub v: f64,
}

impl Point {
    pub fn new(u: f64, v: f64) -> Self {
        assert!(v > 0.0, "point must lie in the upper half-plane");
        Point { u, v }
    }

    pub(crate) fn to_cnum(self, prec: u32) -> CNum {
        CNum::from_f64(prec, self.u, self.v)
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}+{}i", self.u, self.v)
    }
}

/// Working-precision and discretization parameters shared by the engine.
#[derive(Debug, Clone)]
pub struct EvalContext {
    /// Mantissa bits for all floating-point work; at least 53.
    pub precision_bits: u32,
    /// Series truncation used when converting exact series to evaluators.
    pub trunc: i64,
    /// Finite-difference step for `xi` and the Laplacian.
    pub fd_step: f64,
    /// Upper limit of the vertical quadrature path for Eichler integrals.
    pub quad_height: f64,
    /// Node budget for quadrature level-doubling.
    pub quad_nodes: u32,
}

impl EvalContext {
    pub fn new(precision_bits: u32) -> Self {
        assert!(precision_bits >= 53, "precision must be at least 53 bits");
        EvalContext {
            precision_bits,
            trunc: 600,
            fd_step: 2f64.powi(-((precision_bits / 4) as i32)),
            quad_height: precision_bits as f64 * std::f64::consts::LN_2
                / (2.0 * std::f64::consts::PI)
                + 8.0,
            quad_nodes: 4096,
        }
    }

    pub fn with_trunc(mut self, trunc: i64) -> Self {
        self.trunc = trunc;
        self
    }

    /// Internal working precision: requested bits plus guard digits.
    pub(crate) fn prec(&self) -> u32 {
        self.precision_bits + 24
    }
}

/// Element of SL2(Z) acting by Moebius transformations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupElement {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl GroupElement {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        assert_eq!(a * d - b * c, 1, "determinant must be 1");
        GroupElement { a, b, c, d }
    }

    /// `T = [[1,1],[0,1]]`.
    pub fn translation() -> Self {
        GroupElement::new(1, 1, 0, 1)
    }

    /// `S = [[0,-1],[1,0]]`.
    pub fn inversion() -> Self {
        GroupElement::new(0, -1, 1, 0)
    }

    /// Generators of SL2(Z): `T` and `S`.
    pub fn sl2z_generators() -> Vec<GroupElement> {
        vec![Self::translation(), Self::inversion()]
    }

    /// Generators of Gamma_0(4) (up to -I): `T` and `[[1,0],[4,1]]`.
    pub fn gamma0_4_generators() -> Vec<GroupElement> {
        vec![Self::translation(), GroupElement::new(1, 0, 4, 1)]
    }

    pub fn in_gamma0(&self, n: i64) -> bool {
        self.c.rem_euclid(n) == 0
    }

    /// Moebius action `tau -> (a tau + b) / (c tau + d)`.
    pub fn apply(&self, tau: &CNum) -> CNum {
        let prec = tau.prec();
        let num = tau.scale_i64(self.a).add_real_i64(self.b);
        let den = tau.scale_i64(self.c).add_real_i64(self.d);
        let _ = prec;
        num.div(&den)
    }

    /// `c tau + d`, the automorphy denominator.
    pub fn cocycle(&self, tau: &CNum) -> CNum {
        tau.scale_i64(self.c).add_real_i64(self.d)
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{};{},{}]", self.a, self.b, self.c, self.d)
    }
}

/// Data of a (weak) harmonic Maass form: weight `k` (doubled, so
/// half-integral weights stay integral), level, multiplier system, the
/// holomorphic coefficients `c^+(n)` as a q-series, and the non-holomorphic
/// side — coefficients `c^-(n)` for `n < 0` together with the coefficient of
/// `v^{1-k}`.
#[derive(Debug, Clone)]
pub struct MaassSpec {
    pub two_k: i64,
    pub level: u32,
    pub multiplier: Multiplier,
    pub holo: QSeries,
    pub neg_terms: Vec<(i64, Float)>,
    pub c_minus_zero: Float,
}

impl MaassSpec {
    pub fn new(
        two_k: i64,
        level: u32,
        multiplier: Multiplier,
        holo: QSeries,
        neg_terms: Vec<(i64, Float)>,
        c_minus_zero: Float,
    ) -> Self {
        if let Multiplier::ThetaPower(_) = multiplier {
            assert!(level % 4 == 0, "theta-power multipliers require 4 | level");
        }
        assert!(neg_terms.iter().all(|(n, _)| *n < 0), "non-holomorphic exponents must be negative");
        MaassSpec { two_k, level, multiplier, holo, neg_terms, c_minus_zero }
    }

    /// A purely holomorphic spec (empty non-holomorphic part).
    pub fn holomorphic(two_k: i64, level: u32, multiplier: Multiplier, holo: QSeries) -> Self {
        MaassSpec::new(two_k, level, multiplier, holo, Vec::new(), Float::new(53))
    }
}

/// Errors from the numerical engine.
#[derive(Debug, thiserror::Error)]
pub enum MaassError {
    #[error("series tail bound {bound:e} exceeds tolerance {tol:e}")]
    TailBoundExceeded { bound: f64, tol: f64 },
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("quadrature did not converge within the node budget")]
    QuadratureNotConverged,
    #[error("finite-difference step underflows working precision")]
    StepUnderflow,
    #[error("Eisenstein sum requires Re(s) > 1")]
    ConvergenceDomain,
    #[error("completion fit is degenerate: shadow vanishes on the grid")]
    FitDegenerate,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Anything that can be evaluated at a high-precision point of the upper
/// half-plane. Implemented by series evaluators, Maass-form evaluators, the
/// Eisenstein series, and closures.
pub trait Evaluator {
    fn eval(&self, tau: &CNum, ctx: &EvalContext) -> Result<CNum, MaassError>;
}

impl<F> Evaluator for F
where
    F: Fn(&CNum, &EvalContext) -> Result<CNum, MaassError>,
{
    fn eval(&self, tau: &CNum, ctx: &EvalContext) -> Result<CNum, MaassError> {
        self(tau, ctx)
    }
}
