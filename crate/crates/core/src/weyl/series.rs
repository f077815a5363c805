//! Taylor coefficients of `T/(1 − e^{−T})` and `T/(e^T − 1)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesCoefficients {
    /// `T/(1 − e^{−T}) = Σ b_r T^r`.
    pub b: Vec<Q>,
    /// `T/(e^T − 1) = Σ c_r T^r`.
    pub c: Vec<Q>,
}

/// Reciprocal of a power series with nonzero constant term, truncated to `len` terms.
pub fn invert_series(a: &[Q], len: usize) -> Vec<Q> {
    assert!(
        !a.is_empty() && !a[0].is_zero(),
        "constant term must be invertible"
    );
    let mut out: Vec<Q> = Vec::with_capacity(len);
    let lead = a[0].recip();
    for m in 0..len {
        let mut acc = if m == 0 { Q::one() } else { Q::zero() };
        for j in 1..=m.min(a.len() - 1) {
            acc -= &a[j] * &out[m - j];
        }
        out.push(acc * &lead);
    }
    out
}

fn inverse_factorials(len: usize) -> Vec<Q> {
    let mut out = Vec::with_capacity(len);
    let mut f = Q::one();
    for m in 0..len {
        if m > 0 {
            f /= Q::from_integer(m.into());
        }
        out.push(f.clone());
    }
    out
}

/// Coefficients `b_0..=b_{r_max}` and `c_0..=c_{r_max}`.
pub fn series_coefficients(r_max: usize) -> SeriesCoefficients {
    let len = r_max + 1;
    // (1 − e^{−T})/T = Σ (−1)^m T^m/(m+1)!,  (e^T − 1)/T = Σ T^m/(m+1)!
    let inv_fact = inverse_factorials(len + 1);
    let plus: Vec<Q> = (0..len).map(|m| inv_fact[m + 1].clone()).collect();
    let minus: Vec<Q> = plus
        .iter()
        .enumerate()
        .map(|(m, v)| if m % 2 == 0 { v.clone() } else { -v.clone() })
        .collect();
    SeriesCoefficients {
        b: invert_series(&minus, len),
        c: invert_series(&plus, len),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub r_max: usize,
    pub coefficients: SeriesCoefficients,
    pub leading: bool,
    pub odd_vanish: bool,
    pub agree_from_two: bool,
}

impl SeriesReport {
    pub fn passed(&self) -> bool {
        self.leading && self.odd_vanish && self.agree_from_two
    }
}

/// `b_0 = c_0 = 1`, `b_1 = ½`, `c_1 = −½`, `b_{2r+1} = 0` and `b_r = c_r` for `r ≥ 2`.
pub fn series_report(r_max: usize) -> SeriesReport {
    let s = series_coefficients(r_max.max(1));
    let half = Q::new(1.into(), 2.into());
    let leading = s.b[0].is_one() && s.c[0].is_one() && s.b[1] == half && s.c[1] == -half;
    let odd_vanish = (3..s.b.len()).step_by(2).all(|r| s.b[r].is_zero());
    let agree_from_two = (2..s.b.len()).all(|r| s.b[r] == s.c[r]);
    SeriesReport {
        r_max,
        coefficients: s,
        leading,
        odd_vanish,
        agree_from_two,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        let a = vec![Q::one(), -Q::one()];
        let inv = invert_series(&a, 6);
        assert!(inv.iter().all(|v| v.is_one()));
    }

    #[test]
    fn first_coefficients() {
        let s = series_coefficients(4);
        assert_eq!(s.b[2], Q::new(1.into(), 12.into()));
        assert!(s.b[3].is_zero());
        assert_eq!(s.b[4], Q::new((-1).into(), 720.into()));
    }
}
