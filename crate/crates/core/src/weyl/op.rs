//! Polynomial differential operators with opaque atoms, kept in normal form:
//! coordinates, then derivations, then atoms in written order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::exactalg::{ExactScalar, Q};
use crate::liecore::Generator;

/// Which family a coordinate belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VarKind {
    /// Coordinates on the source unipotent space.
    X,
    /// Coordinates on the target unipotent space.
    Y,
    /// The extra coordinate of the maximal cases.
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Var {
    pub kind: VarKind,
    pub i: usize,
    pub j: usize,
}

impl Var {
    pub fn x(i: usize, j: usize) -> Self {
        Var {
            kind: VarKind::X,
            i,
            j,
        }
    }

    pub fn y(i: usize, j: usize) -> Self {
        Var {
            kind: VarKind::Y,
            i,
            j,
        }
    }

    pub fn t() -> Self {
        Var {
            kind: VarKind::T,
            i: 0,
            j: 0,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::X => write!(f, "x[{},{}]", self.i, self.j),
            VarKind::Y => write!(f, "y[{},{}]", self.i, self.j),
            VarKind::T => write!(f, "t"),
        }
    }
}

/// Uninterpreted symbols. They commute with every coordinate and derivation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Atom {
    /// The function `b_{i,k}` on the reductive factor.
    B(usize, usize),
    /// The function `a_{k+1,j}` on the reductive factor.
    A(usize, usize),
    /// The derivation `d_Z` along the reductive factor.
    D(Generator),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::B(i, k) => write!(f, "b[{i},{k}]"),
            Atom::A(i, j) => write!(f, "a[{i},{j}]"),
            Atom::D(g) => write!(f, "d({})", g.name()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub coords: BTreeMap<Var, u32>,
    pub derivs: BTreeMap<Var, u32>,
    pub atoms: Vec<Atom>,
}

impl Monomial {
    pub fn is_unit(&self) -> bool {
        self.coords.is_empty() && self.derivs.is_empty() && self.atoms.is_empty()
    }

    pub fn has_atoms(&self) -> bool {
        !self.atoms.is_empty()
    }

    /// Total degree in coordinates minus total order in derivations.
    pub fn weight(&self) -> i64 {
        let c: i64 = self.coords.values().map(|&e| i64::from(e)).sum();
        let d: i64 = self.derivs.values().map(|&e| i64::from(e)).sum();
        c - d
    }

    pub fn vars(&self) -> impl Iterator<Item = &Var> {
        self.coords.keys().chain(self.derivs.keys())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (v, &e) in &self.coords {
            parts.push(if e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            });
        }
        for (v, &e) in &self.derivs {
            parts.push(if e == 1 {
                format!("∂{v}")
            } else {
                format!("∂{v}^{e}")
            });
        }
        let mut s = parts.join(" ");
        if !self.atoms.is_empty() {
            let atoms: Vec<String> = self.atoms.iter().map(ToString::to_string).collect();
            if !s.is_empty() {
                s.push_str(" · ");
            }
            s.push_str(&atoms.join(" "));
        }
        if s.is_empty() {
            s.push('1');
        }
        f.write_str(&s)
    }
}

fn falling(l: u32, r: u32) -> BigInt {
    (0..r).fold(BigInt::one(), |acc, s| acc * BigInt::from(l - s))
}

fn binomial(m: u32, r: u32) -> BigInt {
    falling(m, r) / falling(r, r)
}

/// `∂^m y^l = Σ_r C(m,r)·l!/(l−r)!·y^{l−r}∂^{m−r}`.
fn reorder_power(m: u32, l: u32) -> Vec<(BigInt, u32, u32)> {
    (0..=m.min(l))
        .map(|r| (binomial(m, r) * falling(l, r), l - r, m - r))
        .collect()
}

fn bump(map: &mut BTreeMap<Var, u32>, v: Var, e: u32) {
    if e > 0 {
        *map.entry(v).or_insert(0) += e;
    }
}

/// An element of the Weyl algebra with opaque atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylOp {
    terms: BTreeMap<Monomial, ExactScalar>,
}

/// Exponent of each variable in a coordinate or derivative block.
type Exponents = BTreeMap<Var, u32>;

impl WeylOp {
    pub fn zero() -> Self {
        WeylOp::default()
    }

    pub fn scalar(c: ExactScalar) -> Self {
        WeylOp::term(c, Monomial::default())
    }

    pub fn one() -> Self {
        WeylOp::scalar(ExactScalar::one())
    }

    pub fn term(c: ExactScalar, m: Monomial) -> Self {
        let mut out = WeylOp::zero();
        out.add_term(m, c);
        out
    }

    pub fn coord(v: Var) -> Self {
        let mut m = Monomial::default();
        m.coords.insert(v, 1);
        WeylOp::term(ExactScalar::one(), m)
    }

    pub fn deriv(v: Var) -> Self {
        let mut m = Monomial::default();
        m.derivs.insert(v, 1);
        WeylOp::term(ExactScalar::one(), m)
    }

    pub fn atom(a: Atom) -> Self {
        let m = Monomial {
            atoms: vec![a],
            ..Monomial::default()
        };
        WeylOp::term(ExactScalar::one(), m)
    }

    /// `v ∂_v`.
    pub fn euler(v: Var) -> Self {
        let mut m = Monomial::default();
        m.coords.insert(v, 1);
        m.derivs.insert(v, 1);
        WeylOp::term(ExactScalar::one(), m)
    }

    fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = &*slot + &c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_atoms(&self) -> bool {
        self.terms.keys().any(Monomial::has_atoms)
    }

    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars().copied()).collect()
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        let mut out = WeylOp::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        self.scale(&ExactScalar::from_q(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(WeylOp::one(), |acc, _| &acc * self)
    }

    fn mul_monomials(a: &Monomial, b: &Monomial) -> Vec<(BigInt, Monomial)> {
        // a = Y1 D1 A1, b = Y2 D2 A2; only D1·Y2 needs reordering.
        let mut partial: Vec<(BigInt, Exponents, Exponents)> =
            vec![(BigInt::one(), a.coords.clone(), BTreeMap::new())];
        let mut keys: Vec<Var> = a.derivs.keys().chain(b.coords.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        for v in keys {
            let m = a.derivs.get(&v).copied().unwrap_or(0);
            let l = b.coords.get(&v).copied().unwrap_or(0);
            let mut next = Vec::with_capacity(partial.len());
            for (c, ys, ds) in &partial {
                for (k, ly, md) in reorder_power(m, l) {
                    let mut ys2 = ys.clone();
                    let mut ds2 = ds.clone();
                    bump(&mut ys2, v, ly);
                    bump(&mut ds2, v, md);
                    next.push((c * &k, ys2, ds2));
                }
            }
            partial = next;
        }
        partial
            .into_iter()
            .map(|(c, coords, mut derivs)| {
                for (&v, &e) in &b.derivs {
                    bump(&mut derivs, v, e);
                }
                let mut atoms = a.atoms.clone();
                atoms.extend(b.atoms.iter().copied());
                (
                    c,
                    Monomial {
                        coords,
                        derivs,
                        atoms,
                    },
                )
            })
            .collect()
    }

    pub fn commutator(&self, other: &WeylOp) -> WeylOp {
        &(self * other) - &(other * self)
    }

    /// Replace every coordinate and derivation by the image operators, keeping
    /// atoms in place. Both maps must cover every variable of `self`.
    pub fn substitute<F, G>(&self, coord: F, deriv: G) -> WeylOp
    where
        F: Fn(&Var) -> WeylOp,
        G: Fn(&Var) -> WeylOp,
    {
        let mut out = WeylOp::zero();
        for (m, c) in &self.terms {
            let mut acc = WeylOp::scalar(c.clone());
            for (v, &e) in &m.coords {
                acc = &acc * &coord(v).pow(e);
            }
            for (v, &e) in &m.derivs {
                acc = &acc * &deriv(v).pow(e);
            }
            for a in &m.atoms {
                acc = &acc * &WeylOp::atom(*a);
            }
            out = &out + &acc;
        }
        out
    }
}

impl Add for &WeylOp {
    type Output = WeylOp;
    fn add(self, o: &WeylOp) -> WeylOp {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &WeylOp {
    type Output = WeylOp;
    fn sub(self, o: &WeylOp) -> WeylOp {
        self + &(-o)
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        WeylOp {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &WeylOp {
    type Output = WeylOp;
    fn mul(self, o: &WeylOp) -> WeylOp {
        let mut out = WeylOp::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let c = ca * cb;
                for (k, m) in WeylOp::mul_monomials(ma, mb) {
                    let kq = ExactScalar::from_q(Q::from_integer(k));
                    out.add_term(m, &c * &kq);
                }
            }
        }
        out
    }
}

macro_rules! by_value_op {
    ($tr:ident, $m:ident) => {
        impl $tr for WeylOp {
            type Output = WeylOp;
            fn $m(self, o: WeylOp) -> WeylOp {
                (&self).$m(&o)
            }
        }
    };
}
by_value_op!(Add, add);
by_value_op!(Sub, sub);
by_value_op!(Mul, mul);

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_unit() {
                    format!("({c})")
                } else {
                    format!("({c}) · {m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `Σ_{v} v ∂_v` over the given coordinates, with signs.
pub fn euler_sum<I: IntoIterator<Item = (i64, Var)>>(items: I) -> WeylOp {
    items.into_iter().fold(WeylOp::zero(), |acc, (s, v)| {
        &acc + &WeylOp::euler(v).scale(&ExactScalar::int(s))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_relation() {
        let v = Var::y(3, 4);
        let c = WeylOp::deriv(v).commutator(&WeylOp::coord(v));
        assert_eq!(c, WeylOp::one());
        let w = Var::y(3, 5);
        assert!(WeylOp::deriv(v).commutator(&WeylOp::coord(w)).is_zero());
    }

    #[test]
    fn euler_on_square() {
        let t = Var::t();
        let h = &WeylOp::euler(t) + &WeylOp::scalar(ExactScalar::frac(1, 2));
        let t2 = WeylOp::coord(t).pow(2);
        assert_eq!(h.commutator(&t2), t2.scale(&ExactScalar::int(2)));
    }

    #[test]
    fn atoms_commute_with_coordinates() {
        let y = WeylOp::coord(Var::y(3, 5));
        let b = WeylOp::atom(Atom::B(1, 2));
        assert!(b.commutator(&y).is_zero());
        let d = WeylOp::atom(Atom::D(Generator::pos(1)));
        assert!(!b.commutator(&d).is_zero());
    }

    #[test]
    fn higher_reordering() {
        // ∂² y² = y²∂² + 4y∂ + 2
        let v = Var::x(1, 2);
        let lhs = &WeylOp::deriv(v).pow(2) * &WeylOp::coord(v).pow(2);
        let mut expect = &WeylOp::coord(v).pow(2) * &WeylOp::deriv(v).pow(2);
        expect = &expect + &WeylOp::euler(v).scale(&ExactScalar::int(4));
        expect = &expect + &WeylOp::scalar(ExactScalar::int(2));
        assert_eq!(lhs, expect);
    }

    #[test]
    fn rendering() {
        let op = &WeylOp::euler(Var::y(3, 4)).scale(&ExactScalar::two_i_pi())
            + &WeylOp::atom(Atom::A(3, 4));
        let s = op.to_string();
        assert!(s.contains("y[3,4] ∂y[3,4]"), "{s}");
        assert!(s.contains("a[3,4]"), "{s}");
    }
}
