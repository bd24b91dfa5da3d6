//! Complex arithmetic on MPFR floats.
//!
//! A small fixed-API complex layer (MPC is not linked; only real MPFR is).
//! All transcendental functions use principal branches: `ln` takes the
//! argument in `(-pi, pi]`, and `powc`/`powf` go through `exp(s ln z)`.

use rug::float::Round;
use rug::ops::Pow;
use rug::{Assign, Float, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct CNum {
    re: Float,
    im: Float,
}

impl CNum {
    pub fn new(prec: u32) -> Self {
        CNum { re: Float::new(prec), im: Float::new(prec) }
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        CNum { re: Float::with_val(prec, re), im: Float::with_val(prec, im) }
    }

    pub fn from_float(re: Float) -> Self {
        let prec = re.prec();
        CNum { re, im: Float::new(prec) }
    }

    pub fn from_parts(re: Float, im: Float) -> Self {
        assert_eq!(re.prec(), im.prec());
        CNum { re, im }
    }

    pub fn from_rational(prec: u32, r: &Rational) -> Self {
        CNum { re: Float::with_val(prec, r), im: Float::new(prec) }
    }

    pub fn i(prec: u32) -> Self {
        CNum { re: Float::new(prec), im: Float::with_val(prec, 1) }
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn add(&self, o: &CNum) -> CNum {
        let p = self.prec();
        CNum {
            re: Float::with_val(p, &self.re + &o.re),
            im: Float::with_val(p, &self.im + &o.im),
        }
    }

    pub fn sub(&self, o: &CNum) -> CNum {
        let p = self.prec();
        CNum {
            re: Float::with_val(p, &self.re - &o.re),
            im: Float::with_val(p, &self.im - &o.im),
        }
    }

    pub fn neg(&self) -> CNum {
        let p = self.prec();
        CNum {
            re: Float::with_val(p, -&self.re),
            im: Float::with_val(p, -&self.im),
        }
    }

    pub fn conj(&self) -> CNum {
        let p = self.prec();
        CNum { re: self.re.clone(), im: Float::with_val(p, -&self.im) }
    }

    pub fn mul(&self, o: &CNum) -> CNum {
        let p = self.prec();
        let mut re = Float::with_val(p, &self.re * &o.re);
        re -= Float::with_val(p, &self.im * &o.im);
        let mut im = Float::with_val(p, &self.re * &o.im);
        im += Float::with_val(p, &self.im * &o.re);
        CNum { re, im }
    }

    pub fn div(&self, o: &CNum) -> CNum {
        let p = self.prec();
        let mut den = Float::with_val(p, &o.re * &o.re);
        den += Float::with_val(p, &o.im * &o.im);
        let mut re = Float::with_val(p, &self.re * &o.re);
        re += Float::with_val(p, &self.im * &o.im);
        re /= &den;
        let mut im = Float::with_val(p, &self.im * &o.re);
        im -= Float::with_val(p, &self.re * &o.im);
        im /= &den;
        CNum { re, im }
    }

    pub fn recip(&self) -> CNum {
        CNum::from_f64(self.prec(), 1.0, 0.0).div(self)
    }

    pub fn scale(&self, s: &Float) -> CNum {
        let p = self.prec();
        CNum {
            re: Float::with_val(p, &self.re * s),
            im: Float::with_val(p, &self.im * s),
        }
    }

    pub fn scale_i64(&self, s: i64) -> CNum {
        let p = self.prec();
        CNum {
            re: Float::with_val(p, &self.re * s),
            im: Float::with_val(p, &self.im * s),
        }
    }

    pub fn add_real(&self, s: &Float) -> CNum {
        let p = self.prec();
        CNum { re: Float::with_val(p, &self.re + s), im: self.im.clone() }
    }

    pub fn add_real_i64(&self, s: i64) -> CNum {
        let p = self.prec();
        CNum { re: Float::with_val(p, &self.re + s), im: self.im.clone() }
    }

    /// Multiply by `i`.
    pub fn mul_i(&self) -> CNum {
        let p = self.prec();
        CNum { re: Float::with_val(p, -&self.im), im: self.re.clone() }
    }

    /// `|z|`, computed as a hypotenuse.
    pub fn abs(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.hypot_ref(&self.im))
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }

    /// `|z|^2`.
    pub fn norm_sq(&self) -> Float {
        let p = self.prec();
        let mut n = Float::with_val(p, &self.re * &self.re);
        n += Float::with_val(p, &self.im * &self.im);
        n
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> Float {
        let p = self.prec();
        let mut a = Float::with_val(p, &self.im);
        a.atan2_mut(&self.re);
        a
    }

    pub fn exp(&self) -> CNum {
        let p = self.prec();
        let r = Float::with_val(p, self.re.exp_ref());
        let (sin, cos) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        CNum {
            re: Float::with_val(p, &r * &cos),
            im: Float::with_val(p, &r * &sin),
        }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> CNum {
        let p = self.prec();
        let re = Float::with_val(p, self.abs().ln_ref());
        CNum { re, im: self.arg() }
    }

    /// Principal power `z^s` for complex `s`.
    pub fn powc(&self, s: &CNum) -> CNum {
        self.ln().mul(s).exp()
    }

    /// Principal power `z^k` for real `k`.
    pub fn powf(&self, k: &Float) -> CNum {
        let p = self.prec();
        self.ln().scale(k).exp().with_prec(p)
    }

    /// Small integer power by repeated multiplication (exact branch-free).
    pub fn powi(&self, k: i64) -> CNum {
        let p = self.prec();
        if k == 0 {
            return CNum::from_f64(p, 1.0, 0.0);
        }
        let base = if k < 0 { self.recip() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc: Option<CNum> = None;
        let mut pw = base;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => pw.clone(),
                    Some(a) => a.mul(&pw),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            pw = pw.mul(&pw);
        }
        acc.unwrap()
    }

    fn with_prec(mut self, p: u32) -> CNum {
        self.re.set_prec_round(p as i64 as u32, Round::Nearest);
        self.im.set_prec_round(p, Round::Nearest);
        CNum { re: self.re, im: self.im }
    }
}

impl std::fmt::Display for CNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (re, im) = self.to_f64_pair();
        if im >= 0.0 {
            write!(f, "{re}+{im}i")
        } else {
            write!(f, "{re}{im}i")
        }
    }
}

/// `pi` at the given precision.
pub(crate) fn pi(prec: u32) -> Float {
    Float::with_val(prec, rug::float::Constant::Pi)
}

/// `2 pi` at the given precision.
pub(crate) fn two_pi(prec: u32) -> Float {
    Float::with_val(prec, rug::float::Constant::Pi) * 2u32
}

/// Real power `x^k` for positive real `x` without branch concerns.
pub(crate) fn real_pow(x: &Float, k: &Float) -> Float {
    debug_assert!(x.is_sign_positive());
    Float::with_val(x.prec(), x.pow_ref(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 150;

    fn close(a: &CNum, re: f64, im: f64, tol: f64) -> bool {
        (a.re().to_f64() - re).abs() < tol && (a.im().to_f64() - im).abs() < tol
    }

    #[test]
    fn complex_basics() {
        let a = CNum::from_f64(P, 3.0, 4.0);
        let b = CNum::from_f64(P, -1.0, 2.0);
        assert!(close(&a.mul(&b), -11.0, 2.0, 1e-12));
        assert!(close(&a.div(&a), 1.0, 0.0, 1e-12));
        assert_eq!(a.abs().to_f64(), 5.0);
    }

    #[test]
    fn exp_ln_roundtrip() {
        let z = CNum::from_f64(P, 0.3, -1.2);
        let w = z.exp().ln();
        assert!(close(&w, 0.3, -1.2, 1e-30));
    }

    #[test]
    fn principal_branch_of_i() {
        // ln(i) = i pi / 2
        let i = CNum::i(P);
        let l = i.ln();
        let half_pi = pi(P).to_f64() / 2.0;
        assert!(close(&l, 0.0, half_pi, 1e-14));
        // i^{-3/2} = exp(-3 pi i / 4)
        let k = Float::with_val(P, -1.5);
        let p = i.powf(&k);
        let want = (-3.0 * pi(P).to_f64() / 4.0).cos();
        assert!((p.re().to_f64() - want).abs() < 1e-14);
    }

    #[test]
    fn powi_matches_powf() {
        let z = CNum::from_f64(P, 1.3, -0.7);
        let a = z.powi(5);
        let b = z.powf(&Float::with_val(P, 5));
        assert!((a.sub(&b)).abs_f64() < 1e-30);
    }
}
