//! Hurwitz class numbers by reduced-form enumeration.

use rayon::prelude::*;

use crate::series::{rat, rat_frac, QSeries, Rat};

/// Exact values `H(0) ..= H(n_max)`, with `H(0) = -1/12` and `H(n) = 0`
/// for `n = 1, 2 mod 4`.
#[derive(Debug, Clone)]
pub struct HurwitzTable {
    values: Vec<Rat>,
}

impl HurwitzTable {
    pub fn n_max(&self) -> i64 {
        self.values.len() as i64 - 1
    }

    pub fn get(&self, n: i64) -> Option<&Rat> {
        if n < 0 {
            None
        } else {
            self.values.get(n as usize)
        }
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

/// Weighted count of reduced positive-definite binary quadratic forms
/// `(a, b, c)` of discriminant `b^2 - 4ac = -n`, reduced as `|b| <= a <= c`
/// with `b >= 0` whenever `|b| = a` or `a = c`. Forms `(a, 0, a)` count 1/2
/// (multiples of `x^2 + y^2`), forms `(a, a, a)` count 1/3 (multiples of
/// `x^2 + xy + y^2`), everything else counts 1.
fn hurwitz_single(n: i64) -> Rat {
    debug_assert!(n > 0);
    if n % 4 == 1 || n % 4 == 2 {
        return Rat::new();
    }
    let mut sixths = 0i64; // accumulate in units of 1/6 to stay in integers
    let mut a = 1i64;
    while 3 * a * a <= n {
        for b in -a..=a {
            let num = b * b + n;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            // boundary convention: drop b < 0 on |b| = a or a = c
            if b < 0 && (-b == a || a == c) {
                continue;
            }
            sixths += if b.abs() == a && a == c {
                2 // (a, a, a)
            } else if b == 0 && a == c {
                3 // (a, 0, a)
            } else {
                6
            };
        }
        a += 1;
    }
    rat_frac(sixths, 6)
}

/// Hurwitz class numbers `H(0) ..= H(n_max)`. Enumeration is
/// `O(n)` per value; values are independent and computed in parallel.
pub fn hurwitz(n_max: i64) -> HurwitzTable {
    assert!(n_max >= 0);
    let mut values = vec![rat_frac(-1, 12)];
    let rest: Vec<Rat> = (1..=n_max).into_par_iter().map(hurwitz_single).collect();
    values.extend(rest);
    HurwitzTable { values }
}

/// The class-number generating series `sum_n H(n) q^n`, the holomorphic part
/// of the weight-3/2 form attached to the N=4 attractor count. Constant term
/// `H(0) = -1/12`.
pub fn hurwitz_series(n_max: i64) -> QSeries {
    let table = hurwitz(n_max);
    QSeries::from_coeffs(Rat::new(), 0, table.values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::sigma_table;

    #[test]
    fn small_values() {
        let t = hurwitz(23);
        assert_eq!(t.get(0).unwrap(), &rat_frac(-1, 12));
        assert_eq!(t.get(1).unwrap(), &rat(0));
        assert_eq!(t.get(2).unwrap(), &rat(0));
        assert_eq!(t.get(3).unwrap(), &rat_frac(1, 3));
        assert_eq!(t.get(4).unwrap(), &rat_frac(1, 2));
        assert_eq!(t.get(7).unwrap(), &rat(1));
        assert_eq!(t.get(8).unwrap(), &rat(1));
        assert_eq!(t.get(11).unwrap(), &rat(1));
        assert_eq!(t.get(12).unwrap(), &rat_frac(4, 3));
        assert_eq!(t.get(23).unwrap(), &rat(3));
    }

    #[test]
    fn vanishing_residues_and_denominators() {
        let t = hurwitz(120);
        for n in 1..=120i64 {
            let h = t.get(n).unwrap();
            if n % 4 == 1 || n % 4 == 2 {
                assert_eq!(h, &rat(0), "H({n}) should vanish");
            } else {
                assert!(h.cmp0() != std::cmp::Ordering::Less, "H({n}) >= 0");
                assert!(
                    Rat::from(h * rat(6)).is_integer(),
                    "6 H({n}) should be integral, got {h}"
                );
            }
        }
    }

    #[test]
    fn kronecker_hurwitz_relation() {
        // sum_{r^2 <= 4n} H(4n - r^2) = 2 sigma_1(n) - sum_{d|n} min(d, n/d)
        let n_max = 60i64;
        let t = hurwitz(4 * n_max);
        let sigma1 = sigma_table(1, n_max);
        for n in 1..=n_max {
            let mut lhs = Rat::new();
            let mut r = 0i64;
            while r * r <= 4 * n {
                let h = t.get(4 * n - r * r).unwrap();
                lhs += h;
                if r > 0 {
                    lhs += h; // negative r
                }
                r += 1;
            }
            let mut md = Rat::new();
            for d in 1..=n {
                if n % d == 0 {
                    md += rat(d.min(n / d));
                }
            }
            let rhs = Rat::from(rat(2) * &sigma1[n as usize]) - md;
            assert_eq!(lhs, rhs, "Kronecker-Hurwitz at n = {n}");
        }
    }

    #[test]
    fn series_matches_table() {
        let s = hurwitz_series(12);
        assert_eq!(s.coeff(0).unwrap(), rat_frac(-1, 12));
        assert_eq!(s.coeff(1).unwrap(), rat(0));
        assert_eq!(s.coeff(2).unwrap(), rat(0));
        assert_eq!(s.coeff(3).unwrap(), rat_frac(1, 3));
        assert_eq!(s.coeff(12).unwrap(), rat_frac(4, 3));
    }
}
