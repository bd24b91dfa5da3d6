//! The specific modular objects the toolkit is built around: Dedekind eta
//! powers, Jacobi theta, Eisenstein series, the half-BPS generating function
//! `eta^{-24}`, and Hurwitz class numbers.

mod hurwitz;

pub use hurwitz::{hurwitz, hurwitz_series, HurwitzTable};

use crate::series::{rat, rat_frac, QSeries, Rat};
use rug::{Assign, Rational};

/// Multiplier system attached to a form (theta-power systems only; the
/// automorphy factor is computed numerically as a ratio of theta values).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplier {
    Trivial,
    ThetaPower(i32),
}

/// Stable identifiers for the forms the CLI and cache understand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormId {
    Eta,
    Eta24,
    EtaInv24,
    Theta,
    E4,
    E6,
    Hurwitz,
}

impl FormId {
    pub const ALL: [FormId; 7] = [
        FormId::Eta,
        FormId::Eta24,
        FormId::EtaInv24,
        FormId::Theta,
        FormId::E4,
        FormId::E6,
        FormId::Hurwitz,
    ];

    pub fn parse(s: &str) -> Option<FormId> {
        Some(match s {
            "eta" => FormId::Eta,
            "eta24" => FormId::Eta24,
            "eta_inv24" => FormId::EtaInv24,
            "theta" => FormId::Theta,
            "e4" => FormId::E4,
            "e6" => FormId::E6,
            "hurwitz" => FormId::Hurwitz,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            FormId::Eta => "eta",
            FormId::Eta24 => "eta24",
            FormId::EtaInv24 => "eta_inv24",
            FormId::Theta => "theta",
            FormId::E4 => "e4",
            FormId::E6 => "e6",
            FormId::Hurwitz => "hurwitz",
        }
    }

    /// Weight, doubled (half-integral weights are odd values).
    pub fn weight_two_k(&self) -> i64 {
        match self {
            FormId::Eta => 1,
            FormId::Eta24 => 24,
            FormId::EtaInv24 => -24,
            FormId::Theta => 1,
            FormId::E4 => 8,
            FormId::E6 => 12,
            FormId::Hurwitz => 3,
        }
    }

    pub fn level(&self) -> u32 {
        match self {
            FormId::Eta | FormId::Eta24 | FormId::EtaInv24 | FormId::E4 | FormId::E6 => 1,
            FormId::Theta | FormId::Hurwitz => 4,
        }
    }

    /// `None` for eta itself (its multiplier is not a theta power).
    pub fn multiplier(&self) -> Option<Multiplier> {
        match self {
            FormId::Eta => None,
            FormId::Eta24 | FormId::EtaInv24 | FormId::E4 | FormId::E6 => {
                Some(Multiplier::Trivial)
            }
            FormId::Theta => Some(Multiplier::ThetaPower(1)),
            FormId::Hurwitz => Some(Multiplier::ThetaPower(3)),
        }
    }

    /// Expand this form to truncation `n` (relative exponents through `n`).
    pub fn build(&self, n: i64) -> QSeries {
        match self {
            FormId::Eta => dedekind_eta(n),
            FormId::Eta24 => eta_power(24, n),
            FormId::EtaInv24 => half_bps_series(n),
            FormId::Theta => jacobi_theta(n),
            FormId::E4 => eisenstein(4, n),
            FormId::E6 => eisenstein(6, n),
            FormId::Hurwitz => hurwitz_series(n),
        }
    }
}

impl std::fmt::Display for FormId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Euler's function `prod_{n>=1} (1 - q^n)` via the pentagonal number
/// theorem: `sum_k (-1)^k q^{k(3k-1)/2}` over all integers `k`.
pub fn euler_function(n: i64) -> QSeries {
    assert!(n >= 0);
    let mut coeffs = vec![Rat::new(); n as usize + 1];
    coeffs[0] = rat(1);
    let mut k = 1i64;
    loop {
        let g1 = k * (3 * k - 1) / 2;
        let g2 = k * (3 * k + 1) / 2;
        if g1 > n && g2 > n {
            break;
        }
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        if g1 <= n {
            coeffs[g1 as usize] += &sign;
        }
        if g2 <= n {
            coeffs[g2 as usize] += &sign;
        }
        k += 1;
    }
    QSeries::from_coeffs(Rat::new(), 0, coeffs)
}

/// Dedekind eta: `q^{1/24} prod_{n>=1} (1 - q^n)`, offset `1/24`.
pub fn dedekind_eta(n: i64) -> QSeries {
    assert!(n >= 1);
    let e = euler_function(n);
    QSeries::from_coeffs(rat_frac(1, 24), 0, e.coeffs().to_vec())
}

/// `eta^alpha` for any integer `alpha`, offset `alpha/24`.
///
/// Uses the logarithmic-derivative recurrence on the (sparse) pentagonal
/// series `E`: with `f = E^alpha`,
/// `n f_n = sum_{m>=1} ((alpha+1) m - n) E_m f_{n-m}`,
/// which costs `O(N sqrt(N))` exact operations instead of the `O(N^2 log
/// alpha)` of repeated squaring. Coefficients of integer powers are integers.
pub fn eta_power(alpha: i64, n: i64) -> QSeries {
    assert!(n >= 0);
    let e = euler_function(n);
    let pent: Vec<(usize, i64)> = e
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| c.cmp0() != std::cmp::Ordering::Equal)
        .map(|(m, c)| (m, c.numer().to_i64().unwrap()))
        .collect();
    let mut f: Vec<Rat> = Vec::with_capacity(n as usize + 1);
    f.push(rat(1));
    let mut tmp = Rational::new();
    for nn in 1..=n as usize {
        let mut acc = Rational::new();
        for &(m, em) in &pent {
            if m > nn {
                break;
            }
            let c = ((alpha + 1) * m as i64 - nn as i64) * em;
            if c == 0 {
                continue;
            }
            tmp.assign(&f[nn - m] * c);
            acc += &tmp;
        }
        acc /= nn as i64;
        f.push(Rat::from(acc));
    }
    QSeries::from_coeffs(rat_frac(alpha, 24), 0, f)
}

/// The half-BPS generating function `eta^{-24}`, lowest exponent `q^{-1}`.
/// The coefficient of `q^n` is the BPS count `d(n)`, for `n = -1 ..= n_max`.
pub fn half_bps_series(n_max: i64) -> QSeries {
    assert!(n_max >= -1);
    eta_power(-24, n_max + 1)
}

/// Jacobi theta `sum_{n in Z} q^{n^2}`: 1 at `q^0`, 2 at each positive
/// perfect square.
pub fn jacobi_theta(n: i64) -> QSeries {
    assert!(n >= 0);
    let mut coeffs = vec![Rat::new(); n as usize + 1];
    coeffs[0] = rat(1);
    let mut m = 1i64;
    while m * m <= n {
        coeffs[(m * m) as usize] = rat(2);
        m += 1;
    }
    QSeries::from_coeffs(Rat::new(), 0, coeffs)
}

/// Sieve of `sigma_k(n) = sum_{d | n} d^k` for `n = 0 ..= n_max`
/// (`sigma_k(0) = 0` by convention).
pub fn sigma_table(k: u32, n_max: i64) -> Vec<Rat> {
    let n_max = n_max.max(0) as usize;
    let mut out = vec![Rat::new(); n_max + 1];
    for d in 1..=n_max {
        let dk = Rat::from(rug::Integer::from(d).pow(k));
        let mut m = d;
        while m <= n_max {
            out[m] += &dk;
            m += d;
        }
    }
    out
}

/// Normalized Eisenstein series `E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n`
/// for `k` in `{4, 6}`: `E4 = 1 + 240 sum sigma_3 q^n`,
/// `E6 = 1 - 504 sum sigma_5 q^n`.
pub fn eisenstein(k: u32, n: i64) -> QSeries {
    assert!(k == 4 || k == 6, "only E4 and E6 are provided");
    assert!(n >= 0);
    let factor = if k == 4 { rat(240) } else { rat(-504) };
    let sig = sigma_table(k - 1, n);
    let mut coeffs = vec![Rat::new(); n as usize + 1];
    coeffs[0] = rat(1);
    for (m, s) in sig.iter().enumerate().skip(1) {
        coeffs[m] = Rat::from(s * &factor);
    }
    QSeries::from_coeffs(Rat::new(), 0, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_leading_coefficients() {
        // product expansion oracle: multiply out prod (1 - q^n) literally
        let n = 64i64;
        let mut oracle = QSeries::one(n);
        for m in 1..=n {
            let mut coeffs = vec![Rat::new(); n as usize + 1];
            coeffs[0] = rat(1);
            coeffs[m as usize] = rat(-1);
            oracle = oracle.mul(&QSeries::from_coeffs(Rat::new(), 0, coeffs)).truncate(n);
        }
        let eta = dedekind_eta(n);
        assert_eq!(eta.coeff(0).unwrap(), rat(1));
        assert_eq!(eta.coeff(1).unwrap(), rat(-1));
        for m in 0..=n {
            assert_eq!(eta.coeff(m), oracle.coeff(m), "eta vs product at {m}");
        }
        assert_eq!(eta.offset(), &rat_frac(1, 24));
    }

    #[test]
    fn eta_pow_24_is_discriminant_cusp_form() {
        let d = eta_power(24, 8);
        // q - 24q^2 + 252q^3 - 1472q^4 (exponents shifted by the offset 1)
        assert_eq!(d.offset(), &rat(1));
        assert_eq!(d.coeff(0).unwrap(), rat(1));
        assert_eq!(d.coeff(1).unwrap(), rat(-24));
        assert_eq!(d.coeff(2).unwrap(), rat(252));
        assert_eq!(d.coeff(3).unwrap(), rat(-1472));
        // same thing via generic pow on eta
        let p = dedekind_eta(8).pow(24).unwrap();
        assert!(p.agrees_with(&d));
    }

    #[test]
    fn half_bps_low_coefficients() {
        let d = half_bps_series(3);
        assert_eq!(d.offset(), &rat(-1));
        let want = [1i64, 24, 324, 3200, 25650];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(d.coeff(i as i64).unwrap(), rat(*w), "d({})", i as i64 - 1);
        }
    }

    #[test]
    fn theta_coefficients() {
        let t = jacobi_theta(9);
        let want = [1i64, 2, 0, 0, 2, 0, 0, 0, 0, 2];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(t.coeff(i as i64).unwrap(), rat(*w));
        }
    }

    #[test]
    fn theta_squared_counts_lattice_points() {
        // r_2(n) by brute force over integer pairs
        let n = 50i64;
        let t = jacobi_theta(n);
        let t2 = t.mul(&t);
        for m in 0..=n {
            let mut r2 = 0i64;
            let bound = (m as f64).sqrt() as i64 + 1;
            for x in -bound..=bound {
                for y in -bound..=bound {
                    if x * x + y * y == m {
                        r2 += 1;
                    }
                }
            }
            assert_eq!(t2.coeff(m).unwrap(), rat(r2), "r_2({m})");
        }
    }

    #[test]
    fn eisenstein_low_coefficients() {
        let e4 = eisenstein(4, 4);
        assert_eq!(e4.coeff(0).unwrap(), rat(1));
        assert_eq!(e4.coeff(1).unwrap(), rat(240));
        assert_eq!(e4.coeff(2).unwrap(), rat(2160));
        let e6 = eisenstein(6, 4);
        assert_eq!(e6.coeff(0).unwrap(), rat(1));
        assert_eq!(e6.coeff(1).unwrap(), rat(-504));
        assert_eq!(e6.coeff(2).unwrap(), rat(-16632));
    }

    #[test]
    fn e4_cubed_minus_e6_squared() {
        let n = 60i64;
        let e4 = eisenstein(4, n);
        let e6 = eisenstein(6, n);
        let lhs = e4.pow(3).unwrap().sub(&e6.pow(2).unwrap()).unwrap();
        let rhs = eta_power(24, n).scale(&rat(1728));
        assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn rescaled_eta_offset() {
        let eta2 = dedekind_eta(10).rescale(2);
        assert_eq!(eta2.offset(), &rat_frac(2, 24));
    }
}
