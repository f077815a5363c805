//! Gaussian rationals and Laurent polynomials in a formal transcendental π.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::AlgError;

/// Rational numbers used throughout the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn q_str(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn parse_q(s: &str) -> Result<Q, AlgError> {
    let bad = || AlgError::Parse(s.to_string());
    let (n, d) = s.trim().split_once('/').ok_or_else(bad)?;
    let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
    let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gauss {
    pub re: Q,
    pub im: Q,
}

impl Gauss {
    pub fn new(re: Q, im: Q) -> Self {
        Gauss { re, im }
    }

    pub fn real(re: Q) -> Self {
        Gauss { re, im: Q::zero() }
    }

    pub fn zero() -> Self {
        Gauss::real(Q::zero())
    }

    pub fn one() -> Self {
        Gauss::real(Q::one())
    }

    pub fn i() -> Self {
        Gauss::new(Q::zero(), Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gauss::new(self.re.clone(), -self.im.clone())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Gauss::new(&self.re / &norm, -(&self.im / &norm)))
    }

    /// Serialized form `p/q+(r/s)i`.
    pub fn to_canonical_string(&self) -> String {
        format!("{}+({})i", q_str(&self.re), q_str(&self.im))
    }

    pub fn parse_canonical(s: &str) -> Result<Self, AlgError> {
        let bad = || AlgError::Parse(s.to_string());
        let s = s.trim();
        let body = s.strip_suffix(")i").ok_or_else(bad)?;
        let (re, im) = body.split_once("+(").ok_or_else(bad)?;
        Ok(Gauss::new(parse_q(re)?, parse_q(im)?))
    }
}

impl Add for &Gauss {
    type Output = Gauss;
    fn add(self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &Gauss {
    type Output = Gauss;
    fn sub(self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &Gauss {
    type Output = Gauss;
    fn mul(self, o: &Gauss) -> Gauss {
        Gauss::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss::new(-self.re.clone(), -self.im.clone())
    }
}

fn fmt_gauss(g: &Gauss) -> String {
    let re = (!g.re.is_zero()).then(|| g.re.to_string());
    let im = (!g.im.is_zero()).then(|| {
        if g.im.is_one() {
            "i".to_string()
        } else if (-g.im.clone()).is_one() {
            "-i".to_string()
        } else {
            format!("{}i", g.im)
        }
    });
    match (re, im) {
        (Some(r), None) => r,
        (None, Some(i)) => i,
        (Some(r), Some(i)) => {
            if i.starts_with('-') {
                format!("({}{})", r, i)
            } else {
                format!("({}+{})", r, i)
            }
        }
        (None, None) => "0".to_string(),
    }
}

/// An element of ℚ(i)[π, π⁻¹], stored as `Σ coeffs[d]·π^(low+d)`.
///
/// Canonical form: no zero coefficient at either end, and `low = 0` for zero.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ScalarRepr", into = "ScalarRepr")]
pub struct ExactScalar {
    low: i32,
    coeffs: Vec<Gauss>,
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    pi_low: i32,
    coeffs: Vec<String>,
}

impl From<ExactScalar> for ScalarRepr {
    fn from(s: ExactScalar) -> Self {
        ScalarRepr {
            pi_low: s.low,
            coeffs: s.coeffs.iter().map(Gauss::to_canonical_string).collect(),
        }
    }
}

impl TryFrom<ScalarRepr> for ExactScalar {
    type Error = AlgError;
    fn try_from(r: ScalarRepr) -> Result<Self, AlgError> {
        let coeffs = r
            .coeffs
            .iter()
            .map(|c| Gauss::parse_canonical(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExactScalar::from_parts(r.pi_low, coeffs))
    }
}

impl ExactScalar {
    /// Builds `Σ coeffs[d]·π^(low+d)` and normalizes it.
    pub fn from_parts(low: i32, coeffs: Vec<Gauss>) -> Self {
        ExactScalar { low, coeffs }.normalized()
    }

    pub fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Gauss::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn zero() -> Self {
        ExactScalar {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        ExactScalar::from_gauss(Gauss::one())
    }

    pub fn from_gauss(g: Gauss) -> Self {
        ExactScalar::from_parts(0, vec![g])
    }

    pub fn from_q(x: Q) -> Self {
        ExactScalar::from_gauss(Gauss::real(x))
    }

    pub fn int(n: i64) -> Self {
        ExactScalar::from_q(q(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        ExactScalar::from_q(q_frac(n, d))
    }

    pub fn i() -> Self {
        ExactScalar::from_gauss(Gauss::i())
    }

    pub fn pi() -> Self {
        ExactScalar::from_parts(1, vec![Gauss::one()])
    }

    /// `c·π^d` for a Gaussian rational `c`.
    pub fn monomial(c: Gauss, d: i32) -> Self {
        ExactScalar::from_parts(d, vec![c])
    }

    /// The factor `2iπ`.
    pub fn two_i_pi() -> Self {
        ExactScalar::monomial(Gauss::new(Q::zero(), q(2)), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> i32 {
        self.low
    }

    pub fn coefficients(&self) -> &[Gauss] {
        &self.coeffs
    }

    /// Coefficient of `π^d`.
    pub fn coeff(&self, d: i32) -> Gauss {
        let idx = d - self.low;
        if idx < 0 {
            return Gauss::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(Gauss::zero)
    }

    /// Returns the rational value when the scalar has no π and no i part.
    pub fn as_rational(&self) -> Option<Q> {
        if self.is_zero() {
            return Some(Q::zero());
        }
        if self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].im.is_zero() {
            return Some(self.coeffs[0].re.clone());
        }
        None
    }

    pub fn as_gauss(&self) -> Option<Gauss> {
        if self.is_zero() {
            return Some(Gauss::zero());
        }
        (self.low == 0 && self.coeffs.len() == 1).then(|| self.coeffs[0].clone())
    }

    /// Units of the ring are exactly the nonzero monomials `c·π^d`.
    pub fn inv(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let c = self.coeffs[0].inv()?;
        Some(ExactScalar::monomial(c, -self.low))
    }

    pub fn scale(&self, c: &Q) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|g| Gauss::new(&g.re * c, &g.im * c))
            .collect();
        ExactScalar::from_parts(self.low, coeffs)
    }

    /// Serialized form `pi^LOW:[c0, c1, ...]` with each `c` as `p/q+(r/s)i`.
    pub fn to_canonical_string(&self) -> String {
        let cs: Vec<String> = self.coeffs.iter().map(Gauss::to_canonical_string).collect();
        format!("pi^{}:[{}]", self.low, cs.join(", "))
    }

    pub fn parse_canonical(s: &str) -> Result<Self, AlgError> {
        let bad = || AlgError::Parse(s.to_string());
        let rest = s.trim().strip_prefix("pi^").ok_or_else(bad)?;
        let (low, list) = rest.split_once(':').ok_or_else(bad)?;
        let low: i32 = low.trim().parse().map_err(|_| bad())?;
        let inner = list
            .trim()
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(bad)?;
        let coeffs = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(", ")
                .map(Gauss::parse_canonical)
                .collect::<Result<Vec<_>, _>>()?
        };
        Ok(ExactScalar::from_parts(low, coeffs))
    }

    fn combine(&self, o: &Self, sign: bool) -> Self {
        if self.is_zero() {
            return if sign { o.clone() } else { -o };
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = (self.low + self.coeffs.len() as i32).max(o.low + o.coeffs.len() as i32);
        let coeffs = (low..high)
            .map(|d| {
                let a = self.coeff(d);
                let b = o.coeff(d);
                if sign {
                    &a + &b
                } else {
                    &a - &b
                }
            })
            .collect();
        ExactScalar::from_parts(low, coeffs)
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        ExactScalar::zero()
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        self.combine(o, true)
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        self.combine(o, false)
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        if self.is_zero() || o.is_zero() {
            return ExactScalar::zero();
        }
        let mut coeffs = vec![Gauss::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            for (b, cb) in o.coeffs.iter().enumerate() {
                coeffs[a + b] = &coeffs[a + b] + &(ca * cb);
            }
        }
        ExactScalar::from_parts(self.low + o.low, coeffs)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: &ExactScalar) -> ExactScalar {
                (&self).$m(o)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::int(n)
    }
}

impl From<Q> for ExactScalar {
    fn from(x: Q) -> Self {
        ExactScalar::from_q(x)
    }
}

impl PartialOrd for Gauss {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Gauss {
    fn cmp(&self, o: &Self) -> Ordering {
        self.re.cmp(&o.re).then_with(|| self.im.cmp(&o.im))
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let d = self.low + idx as i32;
            let mut body = fmt_gauss(c);
            let pi = match d {
                0 => String::new(),
                1 => "π".to_string(),
                _ => format!("π^{}", d),
            };
            if !pi.is_empty() {
                if body == "1" {
                    body = pi;
                } else if body == "-1" {
                    body = format!("-{}", pi);
                } else {
                    body = format!("{}{}", body, pi);
                }
            }
            if first {
                write!(f, "{}", body)?;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", body)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Sign of a rational number as -1, 0 or +1.
pub fn q_sign(x: &Q) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
