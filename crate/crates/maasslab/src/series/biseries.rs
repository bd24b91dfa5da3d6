//! Truncated series in `q` whose coefficients are Laurent polynomials in `y`.
//!
//! Houses Jacobi forms (exact polynomial rows) and chamber expansions of
//! meromorphic Jacobi forms (rows truncated above in `y`). Fractional
//! exponents are carried as offsets: `qoffset` in units of 1/8 (theta1 lives
//! at `q^{1/8}`), `yoffset` in units of 1/2 (theta1's `y^{1/2}`).

use rug::{Assign, Rational};

use super::Rat;

/// Laurent polynomial in `y` over the rationals, stored on a dense window
/// starting at `ymin`. An empty window is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct YPoly {
    ymin: i64,
    coeffs: Vec<Rat>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        if c.cmp0() == std::cmp::Ordering::Equal {
            return YPoly::zero();
        }
        YPoly { ymin: 0, coeffs: vec![c] }
    }

    /// Build from `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: &[(i64, Rat)]) -> Self {
        let mut p = YPoly::zero();
        for (e, c) in terms {
            p.add_term(*e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.cmp0() == std::cmp::Ordering::Equal)
    }

    pub fn ymin(&self) -> i64 {
        self.ymin
    }

    pub fn ymax(&self) -> i64 {
        self.ymin + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> Rat {
        if self.coeffs.is_empty() || e < self.ymin || e > self.ymax() {
            Rat::new()
        } else {
            self.coeffs[(e - self.ymin) as usize].clone()
        }
    }

    /// Iterate nonzero `(exponent, coefficient)` terms in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.cmp0() != std::cmp::Ordering::Equal)
            .map(|(i, c)| (self.ymin + i as i64, c))
    }

    pub fn add_term(&mut self, e: i64, c: &Rat) {
        if c.cmp0() == std::cmp::Ordering::Equal {
            return;
        }
        if self.coeffs.is_empty() {
            self.ymin = e;
            self.coeffs.push(c.clone());
            return;
        }
        if e < self.ymin {
            let pad = (self.ymin - e) as usize;
            let mut v = vec![Rat::new(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.ymin = e;
        } else if e > self.ymax() {
            self.coeffs.resize((e - self.ymin) as usize + 1, Rat::new());
        }
        self.coeffs[(e - self.ymin) as usize] += c;
    }

    pub fn add_assign(&mut self, other: &YPoly) {
        for (e, c) in other.terms() {
            self.add_term(e, c);
        }
    }

    pub fn neg(&self) -> YPoly {
        YPoly {
            ymin: self.ymin,
            coeffs: self.coeffs.iter().map(|c| Rat::from(-c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> YPoly {
        YPoly { ymin: self.ymin, coeffs: self.coeffs.iter().map(|c| Rat::from(c * s)).collect() }
    }

    /// Shift all exponents by `d` (multiply by `y^d`).
    pub fn shift(&self, d: i64) -> YPoly {
        YPoly { ymin: self.ymin + d, coeffs: self.coeffs.clone() }
    }

    /// Product; `clip` discards exponents above the bound.
    pub fn mul(&self, other: &YPoly, clip: Option<i64>) -> YPoly {
        if self.is_zero() || other.is_zero() {
            return YPoly::zero();
        }
        let ymin = self.ymin + other.ymin;
        let mut ymax = self.ymax() + other.ymax();
        if let Some(b) = clip {
            ymax = ymax.min(b);
            if ymax < ymin {
                return YPoly::zero();
            }
        }
        let mut coeffs = vec![Rat::new(); (ymax - ymin) as usize + 1];
        let mut tmp = Rational::new();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = ymin + (i + j) as i64;
                if e > ymax {
                    break;
                }
                tmp.assign(a * b);
                coeffs[(i + j) as usize] += &tmp;
            }
        }
        YPoly { ymin, coeffs }.trimmed()
    }

    /// Drop zero coefficients at both ends of the window.
    fn trimmed(mut self) -> YPoly {
        while let Some(c) = self.coeffs.last() {
            if c.cmp0() == std::cmp::Ordering::Equal {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        let lead = self
            .coeffs
            .iter()
            .position(|c| c.cmp0() != std::cmp::Ordering::Equal);
        match lead {
            None => YPoly::zero(),
            Some(0) => self,
            Some(k) => {
                self.coeffs.drain(..k);
                self.ymin += k as i64;
                self
            }
        }
    }

    /// Discard exponents above `b`.
    pub fn clip_above(&self, b: i64) -> YPoly {
        if self.coeffs.is_empty() || self.ymax() <= b {
            return self.clone().trimmed();
        }
        if b < self.ymin {
            return YPoly::zero();
        }
        YPoly {
            ymin: self.ymin,
            coeffs: self.coeffs[..(b - self.ymin) as usize + 1].to_vec(),
        }
        .trimmed()
    }

    /// Reciprocal in the `|y| < 1` chamber: factor `c0 * y^{m0} * (1 + h)`
    /// with `h` supported on positive exponents, expand the geometric series,
    /// and keep exponents up to `bound`. `1/(y - 2 + y^{-1})` comes out as
    /// `sum_{n>=1} n y^n`.
    pub fn chamber_invert(&self, bound: i64) -> YPoly {
        let p = self.clone().trimmed();
        assert!(!p.is_zero(), "cannot invert zero y-polynomial");
        let m0 = p.ymin;
        let c0 = p.coeffs[0].clone();
        let inv_c0 = Rat::from(c0.recip_ref());
        // u = p / (c0 y^{m0}) = 1 + h
        let depth = bound - (-m0); // output exponents run from -m0 to bound
        assert!(depth >= 0, "bound below leading inverse exponent");
        let n = depth as usize;
        // inverse of 1 + h to y-degree n by the convolution recurrence
        let mut inv = vec![Rat::new(); n + 1];
        inv[0] = Rat::from(1);
        let mut tmp = Rational::new();
        for m in 1..=n {
            let mut acc = Rational::new();
            for k in 1..=m.min(p.coeffs.len() - 1) {
                let hk = Rat::from(&p.coeffs[k] * &inv_c0);
                if hk.cmp0() == std::cmp::Ordering::Equal {
                    continue;
                }
                tmp.assign(&hk * &inv[m - k]);
                acc += &tmp;
            }
            acc = -acc;
            inv[m] = Rat::from(acc);
        }
        for c in inv.iter_mut() {
            *c *= &inv_c0;
        }
        YPoly { ymin: -m0, coeffs: inv }.trimmed()
    }
}

/// Truncated series `q^qoffset y^yoffset * sum_{n=qmin}^{qtrunc} rows[n] (y)
/// q^n`. `ybound = None` means rows are exact Laurent polynomials;
/// `ybound = Some(B)` means each row is complete only for y-exponents `<= B`
/// (a `y_small` chamber truncation; the lower side is always exact).
#[derive(Debug, Clone, PartialEq)]
pub struct BiSeries {
    qoffset: Rat,
    yoffset: Rat,
    qmin: i64,
    rows: Vec<YPoly>,
    qtrunc: i64,
    ybound: Option<i64>,
}

impl BiSeries {
    pub fn from_rows(
        qoffset: Rat,
        yoffset: Rat,
        qmin: i64,
        rows: Vec<YPoly>,
        ybound: Option<i64>,
    ) -> Self {
        assert!(!rows.is_empty());
        debug_assert!((Rat::from(8) * &qoffset).is_integer(), "qoffset denominator must divide 8");
        debug_assert!((Rat::from(2) * &yoffset).is_integer(), "yoffset denominator must divide 2");
        let qtrunc = qmin + rows.len() as i64 - 1;
        let mut s = BiSeries { qoffset, yoffset, qmin, rows, qtrunc, ybound };
        s.normalize_offsets();
        s
    }

    pub fn zero(qtrunc: i64, ybound: Option<i64>) -> Self {
        assert!(qtrunc >= 0);
        BiSeries {
            qoffset: Rat::new(),
            yoffset: Rat::new(),
            qmin: 0,
            rows: vec![YPoly::zero(); qtrunc as usize + 1],
            qtrunc,
            ybound,
        }
    }

    pub fn one(qtrunc: i64, ybound: Option<i64>) -> Self {
        let mut s = Self::zero(qtrunc, ybound);
        s.rows[0] = YPoly::constant(Rat::from(1));
        s
    }

    /// Fold integer parts of the offsets into the stored exponents, so
    /// offsets stay in `[0, 1)`.
    fn normalize_offsets(&mut self) {
        let qfloor = Rat::from(self.qoffset.floor_ref());
        if qfloor.cmp0() != std::cmp::Ordering::Equal {
            let k = qfloor.numer().to_i64().expect("offset fits i64");
            self.qmin += k;
            self.qtrunc += k;
            self.qoffset -= qfloor;
        }
        let yfloor = Rat::from(self.yoffset.floor_ref());
        if yfloor.cmp0() != std::cmp::Ordering::Equal {
            let k = yfloor.numer().to_i64().expect("offset fits i64");
            for r in self.rows.iter_mut() {
                *r = r.shift(k);
            }
            self.yoffset -= yfloor;
        }
    }

    pub fn qoffset(&self) -> &Rat {
        &self.qoffset
    }

    pub fn yoffset(&self) -> &Rat {
        &self.yoffset
    }

    pub fn qmin(&self) -> i64 {
        self.qmin
    }

    pub fn qtrunc(&self) -> i64 {
        self.qtrunc
    }

    pub fn ybound(&self) -> Option<i64> {
        self.ybound
    }

    pub fn rows(&self) -> &[YPoly] {
        &self.rows
    }

    /// Row at relative q-exponent `n` (zero below `qmin`; panics above `qtrunc`).
    pub fn row(&self, n: i64) -> YPoly {
        assert!(n <= self.qtrunc, "row beyond truncation");
        if n < self.qmin {
            YPoly::zero()
        } else {
            self.rows[(n - self.qmin) as usize].clone()
        }
    }

    /// Coefficient of `q^(qoffset+n) y^(yoffset+r)`.
    pub fn coeff(&self, n: i64, r: i64) -> Rat {
        if n < self.qmin || n > self.qtrunc {
            return Rat::new();
        }
        self.rows[(n - self.qmin) as usize].coeff(r)
    }

    /// Most negative stored y-exponent across rows (0 for the zero series).
    pub fn ymin_global(&self) -> i64 {
        self.rows
            .iter()
            .filter(|r| !r.is_zero())
            .map(|r| r.ymin())
            .min()
            .unwrap_or(0)
    }

    pub fn neg(&self) -> BiSeries {
        BiSeries {
            qoffset: self.qoffset.clone(),
            yoffset: self.yoffset.clone(),
            qmin: self.qmin,
            rows: self.rows.iter().map(|r| r.neg()).collect(),
            qtrunc: self.qtrunc,
            ybound: self.ybound,
        }
    }

    pub fn scale(&self, s: &Rat) -> BiSeries {
        BiSeries {
            qoffset: self.qoffset.clone(),
            yoffset: self.yoffset.clone(),
            qmin: self.qmin,
            rows: self.rows.iter().map(|r| r.scale(s)).collect(),
            qtrunc: self.qtrunc,
            ybound: self.ybound,
        }
    }

    /// Sum; requires identical offsets. Truncations combine by the min rule,
    /// ybounds likewise.
    pub fn add(&self, other: &BiSeries) -> BiSeries {
        assert_eq!(self.qoffset, other.qoffset, "qoffset mismatch in add");
        assert_eq!(self.yoffset, other.yoffset, "yoffset mismatch in add");
        let qmin = self.qmin.min(other.qmin);
        let qtrunc = self.qtrunc.min(other.qtrunc);
        let ybound = match (self.ybound, other.ybound) {
            (None, None) => None,
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        let mut rows = vec![YPoly::zero(); (qtrunc - qmin) as usize + 1];
        for (i, row) in rows.iter_mut().enumerate() {
            let n = qmin + i as i64;
            let mut r = if n >= self.qmin && n <= self.qtrunc {
                self.rows[(n - self.qmin) as usize].clone()
            } else {
                YPoly::zero()
            };
            if n >= other.qmin && n <= other.qtrunc {
                r.add_assign(&other.rows[(n - other.qmin) as usize]);
            }
            *row = match ybound {
                Some(b) => r.clip_above(b),
                None => r,
            };
        }
        BiSeries {
            qoffset: self.qoffset.clone(),
            yoffset: self.yoffset.clone(),
            qmin,
            rows,
            qtrunc,
            ybound,
        }
    }

    /// Exact product within the recorded q and y bounds. Offsets add; the
    /// q-truncation follows the min rule. When a chamber-truncated factor is
    /// involved, the result's ybound shrinks by the other factor's most
    /// negative y-exponent, which is exactly the range on which the product
    /// rows are complete.
    pub fn mul(&self, other: &BiSeries) -> BiSeries {
        let qoffset = Rat::from(&self.qoffset + &other.qoffset);
        let yoffset = Rat::from(&self.yoffset + &other.yoffset);
        let qmin = self.qmin + other.qmin;
        let qtrunc = (self.qtrunc + other.qmin).min(other.qtrunc + self.qmin);
        let ybound = match (self.ybound, other.ybound) {
            (None, None) => None,
            (Some(a), None) => Some(a + other.ymin_global().min(0)),
            (None, Some(b)) => Some(b + self.ymin_global().min(0)),
            (Some(a), Some(b)) => {
                Some((a + other.ymin_global().min(0)).min(b + self.ymin_global().min(0)))
            }
        };
        let len = (qtrunc - qmin) as usize + 1;
        let mut rows = vec![YPoly::zero(); len];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                rows[i + j].add_assign(&a.mul(b, ybound));
            }
        }
        if let Some(bnd) = ybound {
            for r in rows.iter_mut() {
                *r = r.clip_above(bnd);
            }
        }
        let mut s = BiSeries { qoffset, yoffset, qmin, rows, qtrunc, ybound };
        s.normalize_offsets();
        s
    }

    /// True when `coeff(n, r) == coeff(n, -r)` for everything stored
    /// (Jacobi-form evenness; meaningful for integer `yoffset` only).
    pub fn is_y_symmetric(&self) -> bool {
        self.rows.iter().all(|row| {
            row.terms().all(|(e, c)| row.coeff(-e) == *c)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn ypoly_mul_basic() {
        // (y - 2 + y^{-1}) * y = y^2 - 2y + 1
        let a = YPoly::from_terms(&[(-1, rat(1)), (0, rat(-2)), (1, rat(1))]);
        let y = YPoly::from_terms(&[(1, rat(1))]);
        let p = a.mul(&y, None);
        assert_eq!(p.coeff(0), rat(1));
        assert_eq!(p.coeff(1), rat(-2));
        assert_eq!(p.coeff(2), rat(1));
        assert_eq!(p.coeff(-1), rat(0));
    }

    #[test]
    fn ypoly_chamber_invert_pole() {
        // 1/(y - 2 + y^{-1}) = sum_{n>=1} n y^n in |y| < 1
        let a = YPoly::from_terms(&[(-1, rat(1)), (0, rat(-2)), (1, rat(1))]);
        let inv = a.chamber_invert(8);
        for n in 1..=8 {
            assert_eq!(inv.coeff(n), rat(n), "coefficient of y^{n}");
        }
        assert_eq!(inv.coeff(0), rat(0));
        // check: a * inv = 1 on the trusted window
        let p = a.mul(&inv, Some(7));
        assert_eq!(p.coeff(0), rat(1));
        for e in 1..=7 {
            assert_eq!(p.coeff(e), rat(0), "at y^{e}");
        }
    }

    #[test]
    fn bimul_identity() {
        let a = BiSeries::from_rows(
            Rat::new(),
            Rat::new(),
            0,
            vec![YPoly::from_terms(&[(-1, rat(2)), (1, rat(3))]), YPoly::constant(rat(5))],
            None,
        );
        let one = BiSeries::one(1, None);
        let p = a.mul(&one);
        assert_eq!(p.coeff(0, -1), rat(2));
        assert_eq!(p.coeff(0, 1), rat(3));
        assert_eq!(p.coeff(1, 0), rat(5));
    }

    #[test]
    fn bimul_ybound_shrinks_with_pole() {
        // chamber factor known to y^5, other factor has a y^{-2} pole:
        // the product is only complete through y^3
        let a = BiSeries::from_rows(
            Rat::new(),
            Rat::new(),
            0,
            vec![YPoly::from_terms(&[(0, rat(1)), (5, rat(1))])],
            Some(5),
        );
        let b = BiSeries::from_rows(
            Rat::new(),
            Rat::new(),
            0,
            vec![YPoly::from_terms(&[(-2, rat(1)), (0, rat(1))])],
            None,
        );
        let p = a.mul(&b);
        assert_eq!(p.ybound(), Some(3));
        assert_eq!(p.coeff(0, -2), rat(1));
        assert_eq!(p.coeff(0, 3), rat(1));
    }

    #[test]
    fn offsets_fold_into_exponents() {
        // q^{1/2} * q^{1/2} = q: offset folds to integer exponent shift
        let h = BiSeries::from_rows(
            Rat::from((1, 2)),
            Rat::from((1, 2)),
            0,
            vec![YPoly::constant(rat(1))],
            None,
        );
        let p = h.mul(&h);
        assert_eq!(p.qoffset(), &Rat::new());
        assert_eq!(p.yoffset(), &Rat::new());
        assert_eq!(p.qmin(), 1);
        assert_eq!(p.coeff(1, 1), rat(1));
    }
}
