//! Exact arithmetic in the fraction field of Q(q^{1/N})[s].
//!
//! A [`LaurentPoly`] is a Laurent polynomial in q^{1/N} with ordinary
//! (non-negative) powers of an extra parameter s and rational coefficients.
//! A [`Scalar`] is a quotient of two such polynomials kept in canonical form:
//! numerator and denominator share no polynomial factor, the denominator has
//! minimal q-exponent 0, and its lex-leading term (by q-exponent, then
//! s-exponent) has coefficient 1.  Equality of canonical forms is map
//! equality with exponents compared as rationals eq/N, so the same value
//! expressed at root orders N and kN compares equal.
//!
//! All values are immutable; every operation is a pure function.

mod gcd;
mod parse;

pub use parse::parse_scalar;

use crate::error::{Error, Result};
use gcd::{SPoly, TPoly};
use num::{BigInt, BigRational, FromPrimitive, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Arbitrary-precision rational coefficient.
pub type Rational = BigRational;

fn lcm_u32(a: u32, b: u32) -> u32 {
    a / num::integer::gcd(a, b) * b
}

/// Laurent polynomial in q^{1/N} and s.  The key (eq, es) stands for the
/// monomial q^{eq/N} * s^{es}; stored coefficients are never zero.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    root_order: u32,
    terms: BTreeMap<(i64, u32), Rational>,
}

impl LaurentPoly {
    pub fn zero(root_order: u32) -> Self {
        assert!(root_order > 0);
        LaurentPoly { root_order, terms: BTreeMap::new() }
    }

    pub fn one(root_order: u32) -> Self {
        Self::constant(Rational::one(), root_order)
    }

    pub fn constant(c: Rational, root_order: u32) -> Self {
        Self::monomial(c, 0, 0, root_order)
    }

    /// The monomial c * q^{eq/N} * s^{es}.
    pub fn monomial(c: Rational, eq: i64, es: u32, root_order: u32) -> Self {
        assert!(root_order > 0);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((eq, es), c);
        }
        LaurentPoly { root_order, terms }
    }

    /// q^{eq/N}.
    pub fn q_power(eq: i64, root_order: u32) -> Self {
        Self::monomial(Rational::one(), eq, 0, root_order)
    }

    /// The parameter s.
    pub fn s_var(root_order: u32) -> Self {
        Self::monomial(Rational::one(), 0, 1, root_order)
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map_or(false, |c| c.is_one())
    }

    fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Re-express with root order `target`, a multiple of the current one.
    pub fn lift(&self, target: u32) -> LaurentPoly {
        assert!(target % self.root_order == 0, "lift target must be a multiple");
        let f = (target / self.root_order) as i64;
        if f == 1 {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&(eq, es), c)| ((eq * f, es), c.clone()))
            .collect();
        LaurentPoly { root_order: target, terms }
    }

    fn common(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly, u32) {
        let l = lcm_u32(a.root_order, b.root_order);
        (a.lift(l), b.lift(l), l)
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let (a, b, l) = Self::common(self, other);
        let mut terms = a.terms;
        for (k, c) in b.terms {
            let entry = terms.entry(k).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&k);
            }
        }
        LaurentPoly { root_order: l, terms }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            root_order: self.root_order,
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let (a, b, l) = Self::common(self, other);
        let mut terms: BTreeMap<(i64, u32), Rational> = BTreeMap::new();
        for (&(ea, sa), ca) in &a.terms {
            for (&(eb, sb), cb) in &b.terms {
                let k = (ea + eb, sa + sb);
                let entry = terms.entry(k).or_insert_with(Rational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&k);
                }
            }
        }
        LaurentPoly { root_order: l, terms }
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.root_order);
        }
        LaurentPoly {
            root_order: self.root_order,
            terms: self.terms.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }

    pub fn min_q_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(eq, _)| eq).min()
    }

    /// Inverse of a monomial.
    fn monomial_inverse(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(eq, es), c) = self.terms.iter().next().unwrap();
        if es != 0 {
            return None;
        }
        Some(LaurentPoly::monomial(c.recip(), -eq, 0, self.root_order))
    }

    fn to_tpoly(&self, shift: i64) -> TPoly {
        let max = self.terms.keys().map(|&(eq, _)| eq - shift).max().unwrap_or(0);
        let mut coeffs = vec![Vec::new(); (max + 1) as usize];
        for (&(eq, es), c) in &self.terms {
            let t = (eq - shift) as usize;
            let col = &mut coeffs[t];
            if col.len() <= es as usize {
                col.resize(es as usize + 1, Rational::zero());
            }
            col[es as usize] = c.clone();
        }
        TPoly(
            coeffs
                .into_iter()
                .map(|v| {
                    let mut p = SPoly(v);
                    while p.0.last().map_or(false, |c| c.is_zero()) {
                        p.0.pop();
                    }
                    p
                })
                .collect(),
        )
    }

    fn from_tpoly(p: &TPoly, shift: i64, root_order: u32) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (t, sp) in p.0.iter().enumerate() {
            for (es, c) in sp.0.iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((t as i64 + shift, es as u32), c.clone());
                }
            }
        }
        LaurentPoly { root_order: root_order, terms }
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Self::common(self, other);
        a.terms == b.terms
    }
}

impl Eq for LaurentPoly {}

/// Element of the fraction field, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// The four field operations, as named by [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    /// Embed a polynomial; a Scalar with denominator 1 round-trips unchanged.
    pub fn from_poly(num: LaurentPoly) -> Scalar {
        let n = num.root_order();
        Scalar { num, den: LaurentPoly::one(n) }
    }

    /// Form num/den and reduce to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::from_poly(LaurentPoly::zero(num.root_order())));
        }
        if den.is_one() {
            return Ok(Scalar::from_poly(num));
        }
        if let Some(inv) = den.monomial_inverse() {
            return Ok(Scalar::from_poly(num.mul(&inv)));
        }
        let (n, d, l) = LaurentPoly::common(&num, &den);
        let mn = n.min_q_exp().unwrap();
        let md = d.min_q_exp().unwrap();
        let tn = n.to_tpoly(mn);
        let td = d.to_tpoly(md);
        let (rn, rd, shift) = gcd::reduce_fraction(&tn, &td, mn - md);
        Ok(Scalar {
            num: LaurentPoly::from_tpoly(&rn, shift, l),
            den: LaurentPoly::from_tpoly(&rd, 0, l),
        })
    }

    pub fn zero() -> Scalar {
        Scalar::from_poly(LaurentPoly::zero(1))
    }

    pub fn one() -> Scalar {
        Scalar::from_poly(LaurentPoly::one(1))
    }

    pub fn from_int(v: i64) -> Scalar {
        Scalar::from_poly(LaurentPoly::constant(Rational::from_i64(v).unwrap(), 1))
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar::from_poly(LaurentPoly::constant(r, 1))
    }

    /// q^{eq/N}.
    pub fn q_pow(eq: i64, root_order: u32) -> Scalar {
        Scalar::from_poly(LaurentPoly::q_power(eq, root_order))
    }

    /// q^p for integer p.
    pub fn q_int(p: i64) -> Scalar {
        Scalar::q_pow(p, 1)
    }

    pub fn s() -> Scalar {
        Scalar::from_poly(LaurentPoly::s_var(1))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar::from_poly(self.num.add(&other.num));
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Scalar::new(num, den).expect("denominator product is nonzero")
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar::from_poly(self.num.mul(&other.num));
        }
        Scalar::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("denominator product is nonzero")
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Scalar::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Scalar::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut out = Scalar::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        Ok(out)
    }

    /// Scale by a rational constant.
    pub fn scale(&self, c: &Rational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { num: self.num.scale(c), den: self.den.clone() }
    }

    /// If the scalar is a single monomial r * q^{eq/N} * s^{es}, return its parts.
    pub fn as_monomial(&self) -> Option<(Rational, i64, u32, u32)> {
        if !self.den.is_one() || !self.num.is_monomial() {
            return None;
        }
        let (&(eq, es), c) = self.num.terms.iter().next().unwrap();
        Some((c.clone(), eq, es, self.num.root_order()))
    }

    /// True if no term of numerator or denominator contains the parameter s.
    pub fn is_s_free(&self) -> bool {
        self.num.terms.keys().all(|&(_, es)| es == 0)
            && self.den.terms.keys().all(|&(_, es)| es == 0)
    }
}

/// Exact field arithmetic dispatcher.
pub fn arith(a: &Scalar, b: &Scalar, kind: ArithKind) -> Result<Scalar> {
    match kind {
        ArithKind::Add => Ok(a.add(b)),
        ArithKind::Sub => Ok(a.sub(b)),
        ArithKind::Mul => Ok(a.mul(b)),
        ArithKind::Div => a.div(b),
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_monomial(out: &mut String, coeff: &Rational, eq: i64, es: u32, n: u32) {
    let mut parts: Vec<String> = Vec::new();
    if eq != 0 {
        let g = num::integer::gcd(eq.unsigned_abs(), n as u64) as i64;
        let (p, d) = (eq / g, n as i64 / g);
        if d == 1 {
            if p == 1 {
                parts.push("q".to_string());
            } else {
                parts.push(format!("q^{}", p));
            }
        } else {
            parts.push(format!("q^({}/{})", p, d));
        }
    }
    if es != 0 {
        if es == 1 {
            parts.push("s".to_string());
        } else {
            parts.push(format!("s^{}", es));
        }
    }
    let abs = coeff.abs();
    if parts.is_empty() {
        out.push_str(&fmt_rational(&abs));
    } else {
        if !abs.is_one() {
            out.push_str(&fmt_rational(&abs));
            out.push('*');
        }
        out.push_str(&parts.join("*"));
    }
}

fn fmt_poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    // decreasing q-exponent, then increasing s-exponent
    let mut keys: Vec<(&(i64, u32), &Rational)> = p.terms.iter().collect();
    keys.sort_by(|a, b| b.0 .0.cmp(&a.0 .0).then(a.0 .1.cmp(&b.0 .1)));
    let mut out = String::new();
    for (i, (&(eq, es), c)) in keys.into_iter().enumerate() {
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        fmt_monomial(&mut out, c, eq, es, p.root_order);
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", fmt_poly(&self.num))
        } else {
            write!(f, "({})/({})", fmt_poly(&self.num), fmt_poly(&self.den))
        }
    }
}

/// Canonical textual form; inverse of [`parse_scalar`] on canonical values.
pub fn print_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// Exact n-th root of a rational, when one exists in Q.
pub fn rational_nth_root(r: &Rational, n: u32) -> Option<Rational> {
    gcd::rational_nth_root(r, n)
}

/// Helper for building integer BigInt-backed rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
