//! Dense truncated Laurent series in `q` with a rational exponent offset.

use rug::{Assign, Rational};

use super::{Rat, SeriesError};

/// A truncated Laurent series
/// `q^offset * sum_{n = vmin}^{trunc} coeffs[n - vmin] * q^n`.
///
/// `offset` carries fractional exponents (`1/24` for eta-quotients) so the
/// integer index stays dense; its denominator divides 24. Coefficients for
/// exponents above `trunc` are *unknown*, not zero.
#[derive(Debug, Clone, PartialEq)]
pub struct QSeries {
    offset: Rat,
    vmin: i64,
    coeffs: Vec<Rat>,
    trunc: i64,
}

impl QSeries {
    /// Build from parts. `coeffs[i]` is the coefficient of `q^(offset + vmin + i)`.
    pub fn from_coeffs(offset: Rat, vmin: i64, coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one known coefficient");
        debug_assert!(
            (Rat::from(24) * &offset).is_integer(),
            "offset denominator must divide 24"
        );
        let trunc = vmin + coeffs.len() as i64 - 1;
        QSeries { offset, vmin, coeffs, trunc }
    }

    /// The zero series, known through exponent `trunc`.
    pub fn zero(trunc: i64) -> Self {
        assert!(trunc >= 0);
        QSeries {
            offset: Rat::new(),
            vmin: 0,
            coeffs: vec![Rat::new(); trunc as usize + 1],
            trunc,
        }
    }

    /// The constant series 1, known through exponent `trunc`.
    pub fn one(trunc: i64) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = Rat::from(1);
        s
    }

    /// `c * q^(offset + n)`, known through `trunc` (relative exponents `n..=trunc`).
    pub fn monomial(offset: Rat, n: i64, c: Rat, trunc: i64) -> Self {
        assert!(trunc >= n);
        let mut coeffs = vec![Rat::new(); (trunc - n) as usize + 1];
        coeffs[0] = c;
        QSeries::from_coeffs(offset, n, coeffs)
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn vmin(&self) -> i64 {
        self.vmin
    }

    /// Highest integer exponent (relative to `offset`) with a known coefficient.
    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Known coefficients, lowest exponent first.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `q^(offset + n)`. `Some(0)` below `vmin` (known zero),
    /// `None` above `trunc` (unknown).
    pub fn coeff(&self, n: i64) -> Option<Rat> {
        if n > self.trunc {
            None
        } else if n < self.vmin {
            Some(Rat::new())
        } else {
            Some(self.coeffs[(n - self.vmin) as usize].clone())
        }
    }

    /// Coefficient at the *absolute* exponent `e = offset + n`, given as a rational.
    pub fn coeff_at(&self, e: &Rat) -> Option<Rat> {
        let rel = Rat::from(e - &self.offset);
        if !rel.is_integer() {
            return Some(Rat::new());
        }
        let n = rel.numer().to_i64()?;
        self.coeff(n)
    }

    /// Absolute exponent of the stored index `i`.
    pub fn exponent(&self, i: usize) -> Rat {
        Rat::from(&self.offset + Rat::from(self.vmin + i as i64))
    }

    /// True if every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.cmp0() == std::cmp::Ordering::Equal)
    }

    /// Drop leading zero coefficients so the lowest stored coefficient is
    /// nonzero (a "normalized" series). The zero series collapses to a single
    /// stored zero at `trunc`.
    pub fn normalize(mut self) -> Self {
        let lead = self
            .coeffs
            .iter()
            .position(|c| c.cmp0() != std::cmp::Ordering::Equal)
            .unwrap_or(self.coeffs.len() - 1);
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.vmin += lead as i64;
        }
        self
    }

    fn require_aligned(&self, other: &QSeries) -> Result<i64, SeriesError> {
        let diff = Rat::from(&other.offset - &self.offset);
        if !diff.is_integer() {
            return Err(SeriesError::IncompatibleOffsets(
                self.offset.to_string(),
                other.offset.to_string(),
            ));
        }
        Ok(diff.numer().to_i64().expect("offset shift fits i64"))
    }

    /// Sum. Offsets must differ by an integer; the result uses `self`'s offset.
    pub fn add(&self, other: &QSeries) -> Result<QSeries, SeriesError> {
        let shift = self.require_aligned(other)?;
        // other's relative exponent n corresponds to self-relative n + shift
        let vmin = self.vmin.min(other.vmin + shift);
        let trunc = self.trunc.min(other.trunc + shift);
        assert!(trunc >= vmin, "no common known window");
        let mut coeffs = vec![Rat::new(); (trunc - vmin) as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            let n = self.vmin + i as i64;
            if n <= trunc {
                coeffs[(n - vmin) as usize].assign(c);
            }
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let n = other.vmin + i as i64 + shift;
            if n <= trunc {
                coeffs[(n - vmin) as usize] += c;
            }
        }
        Ok(QSeries { offset: self.offset.clone(), vmin, coeffs, trunc })
    }

    pub fn sub(&self, other: &QSeries) -> Result<QSeries, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QSeries {
        let coeffs = self.coeffs.iter().map(|c| Rat::from(-c.clone())).collect();
        QSeries { offset: self.offset.clone(), vmin: self.vmin, coeffs, trunc: self.trunc }
    }

    pub fn scale(&self, s: &Rat) -> QSeries {
        let coeffs = self.coeffs.iter().map(|c| Rat::from(c * s)).collect();
        QSeries { offset: self.offset.clone(), vmin: self.vmin, coeffs, trunc: self.trunc }
    }

    /// Exact Cauchy product. Offsets add; the result is known through
    /// `min(a.trunc + b.vmin, b.trunc + a.vmin)`.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let offset = Rat::from(&self.offset + &other.offset);
        let vmin = self.vmin + other.vmin;
        let trunc = (self.trunc + other.vmin).min(other.trunc + self.vmin);
        let len = (trunc - vmin) as usize + 1;
        let mut coeffs = vec![Rat::new(); len];
        let mut tmp = Rational::new();
        for (out, slot) in coeffs.iter_mut().enumerate() {
            // out = (i - a.vmin) + (j - b.vmin) over pairs i + j = vmin + out
            let mut acc = Rational::new();
            let lo = out.saturating_sub(other.coeffs.len() - 1);
            let hi = out.min(self.coeffs.len() - 1);
            for i in lo..=hi {
                let a = &self.coeffs[i];
                if a.cmp0() == std::cmp::Ordering::Equal {
                    continue;
                }
                tmp.assign(a * &other.coeffs[out - i]);
                acc += &tmp;
            }
            slot.assign(&acc);
        }
        QSeries { offset, vmin, coeffs, trunc }
    }

    /// Exact reciprocal of a normalized series, to the same relative depth.
    /// Offset and lowest exponent negate.
    pub fn invert(&self) -> Result<QSeries, SeriesError> {
        let lead = &self.coeffs[0];
        if lead.cmp0() == std::cmp::Ordering::Equal {
            return Err(SeriesError::ZeroLeadingCoefficient);
        }
        let depth = (self.trunc - self.vmin) as usize;
        let inv_lead = Rat::from(lead.recip_ref());
        let mut out: Vec<Rat> = Vec::with_capacity(depth + 1);
        out.push(inv_lead.clone());
        let mut tmp = Rational::new();
        for n in 1..=depth {
            // sum_{k=1}^{n} a[k] * c[n-k], then c[n] = -sum / a[0]
            let mut acc = Rational::new();
            for k in 1..=n.min(self.coeffs.len() - 1) {
                let ak = &self.coeffs[k];
                if ak.cmp0() == std::cmp::Ordering::Equal {
                    continue;
                }
                tmp.assign(ak * &out[n - k]);
                acc += &tmp;
            }
            acc = -acc;
            acc *= &inv_lead;
            out.push(acc);
        }
        Ok(QSeries {
            offset: Rat::from(-self.offset.clone()),
            vmin: -self.vmin,
            coeffs: out,
            trunc: -self.vmin + depth as i64,
        })
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// [`QSeries::invert`]. `pow(a, 0)` is 1 known to `a`'s relative depth.
    pub fn pow(&self, e: i64) -> Result<QSeries, SeriesError> {
        let depth = self.trunc - self.vmin;
        if e == 0 {
            return Ok(QSeries::one(depth));
        }
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut result: Option<QSeries> = None;
        let mut power = base;
        loop {
            if exp & 1 == 1 {
                result = Some(match result {
                    None => power.clone(),
                    Some(r) => r.mul(&power),
                });
            }
            exp >>= 1;
            if exp == 0 {
                break;
            }
            power = power.mul(&power);
        }
        Ok(result.expect("e != 0"))
    }

    /// Substitute `q -> q^d`: exponent `n` maps to `d*n`, the offset
    /// multiplies by `d`, and the result is known through `d * trunc`.
    pub fn rescale(&self, d: u32) -> QSeries {
        assert!(d >= 1);
        let d = d as i64;
        let vmin = self.vmin * d;
        let trunc = self.trunc * d;
        let mut coeffs = vec![Rat::new(); (trunc - vmin) as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d as usize].assign(c);
        }
        QSeries { offset: Rat::from(&self.offset * Rat::from(d)), vmin, coeffs, trunc }
    }

    /// Restrict the known window to exponents `<= new_trunc`.
    pub fn truncate(&self, new_trunc: i64) -> QSeries {
        assert!(new_trunc >= self.vmin, "truncation below lowest exponent");
        if new_trunc >= self.trunc {
            return self.clone();
        }
        let len = (new_trunc - self.vmin) as usize + 1;
        QSeries {
            offset: self.offset.clone(),
            vmin: self.vmin,
            coeffs: self.coeffs[..len].to_vec(),
            trunc: new_trunc,
        }
    }

    /// Equality of known coefficients on the common window (offsets must
    /// agree up to integer shift; differing windows compare on the overlap).
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        let Ok(shift) = self.require_aligned(other) else {
            return false;
        };
        let lo = self.vmin.min(other.vmin + shift);
        let hi = self.trunc.min(other.trunc + shift);
        (lo..=hi).all(|n| {
            let a = self.coeff(n).unwrap_or_default();
            let b = other.coeff(n - shift).unwrap_or_default();
            a == b
        })
    }
}

impl std::fmt::Display for QSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            let e = self.exponent(i);
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})q^({e})")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^({}))", Rat::from(&self.offset + Rat::from(self.trunc + 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_frac};
    use super::*;

    fn poly(coeffs: &[i64]) -> QSeries {
        QSeries::from_coeffs(Rat::new(), 0, coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn mul_polynomial_identity() {
        // (1 + q)(1 - q) = 1 - q^2
        let a = poly(&[1, 1, 0, 0]);
        let b = poly(&[1, -1, 0, 0]);
        let p = a.mul(&b);
        assert_eq!(p.coeff(0).unwrap(), rat(1));
        assert_eq!(p.coeff(1).unwrap(), rat(0));
        assert_eq!(p.coeff(2).unwrap(), rat(-1));
        assert_eq!(p.coeff(3).unwrap(), rat(0));
    }

    #[test]
    fn mul_identity_case() {
        let a = poly(&[3, -5, 7, 11]);
        let one = QSeries::one(3);
        assert!(a.mul(&one).agrees_with(&a));
    }

    #[test]
    fn invert_geometric() {
        // 1/(1 - q) = sum q^n
        let a = poly(&[1, -1, 0, 0, 0, 0]);
        let inv = a.invert().unwrap();
        for n in 0..=5 {
            assert_eq!(inv.coeff(n).unwrap(), rat(1));
        }
    }

    #[test]
    fn invert_zero_series_errors() {
        let z = QSeries::zero(4);
        assert!(matches!(z.invert(), Err(SeriesError::ZeroLeadingCoefficient)));
    }

    #[test]
    fn invert_roundtrip() {
        let a = poly(&[2, 5, -3, 7, 1, -4]);
        let inv = a.invert().unwrap();
        let p = a.mul(&inv);
        assert_eq!(p.coeff(0).unwrap(), rat(1));
        for n in 1..=p.trunc() {
            assert_eq!(p.coeff(n).unwrap(), rat(0), "at {n}");
        }
    }

    #[test]
    fn pow_square() {
        let a = poly(&[1, 1, 0, 0]);
        let sq = a.pow(2).unwrap();
        assert_eq!(sq.coeff(0).unwrap(), rat(1));
        assert_eq!(sq.coeff(1).unwrap(), rat(2));
        assert_eq!(sq.coeff(2).unwrap(), rat(1));
    }

    #[test]
    fn pow_zero_is_one() {
        let a = poly(&[4, 2, 9]);
        let p = a.pow(0).unwrap();
        assert_eq!(p.coeff(0).unwrap(), rat(1));
        assert_eq!(p.coeff(1).unwrap(), rat(0));
    }

    #[test]
    fn rescale_basics() {
        let a = poly(&[1, 1, 0, 0]); // 1 + q, trunc 3
        let r = a.rescale(2);
        assert_eq!(r.coeff(0).unwrap(), rat(1));
        assert_eq!(r.coeff(1).unwrap(), rat(0));
        assert_eq!(r.coeff(2).unwrap(), rat(1));
        assert_eq!(r.trunc(), 6);
    }

    #[test]
    fn rescale_composition() {
        let a = QSeries::from_coeffs(rat_frac(1, 24), 0, vec![rat(1), rat(-1), rat(2)]);
        let twice = a.rescale(2).rescale(2);
        let once = a.rescale(4);
        assert_eq!(twice, once);
        assert_eq!(a.rescale(2).offset(), &rat_frac(2, 24));
    }

    #[test]
    fn normalize_trims_leading_zeros() {
        let a = QSeries::from_coeffs(Rat::new(), 0, vec![rat(0), rat(0), rat(3), rat(1)]);
        let n = a.normalize();
        assert_eq!(n.vmin(), 2);
        assert_eq!(n.coeff(2).unwrap(), rat(3));
        assert_eq!(n.coeff(0).unwrap(), rat(0));
    }

    #[test]
    fn add_with_integer_offset_shift() {
        let a = QSeries::from_coeffs(rat(1), 0, vec![rat(1), rat(2)]); // q + 2q^2
        let b = QSeries::from_coeffs(rat(0), 0, vec![rat(5), rat(0), rat(0)]); // 5
        let s = a.add(&b).unwrap();
        assert_eq!(s.coeff_at(&rat(0)).unwrap(), rat(5));
        assert_eq!(s.coeff_at(&rat(1)).unwrap(), rat(1));
        assert_eq!(s.coeff_at(&rat(2)).unwrap(), rat(2));
    }

    #[test]
    fn add_incompatible_offsets_errors() {
        let a = QSeries::from_coeffs(rat_frac(1, 24), 0, vec![rat(1)]);
        let b = QSeries::from_coeffs(Rat::new(), 0, vec![rat(1)]);
        assert!(a.add(&b).is_err());
    }
}
