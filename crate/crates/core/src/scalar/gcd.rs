//! Fraction reduction for the field of fractions of Q[s][t, t^-1], t = q^{1/N}.
//!
//! The canonical form of a fraction num/den demands that num and den share no
//! polynomial factor.  The gcd in t is computed by the subresultant polynomial
//! remainder sequence over Q[s] after clearing s-content, which keeps the
//! remainder sequence fraction-free and the result deterministic.

use num::{BigInt, BigRational, One, Signed, Zero};

/// Dense polynomial in s over Q.  Trailing zero coefficients are trimmed.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct SPoly(pub Vec<BigRational>);

impl SPoly {
    pub fn zero() -> Self {
        SPoly(Vec::new())
    }

    pub fn one() -> Self {
        SPoly(vec![BigRational::one()])
    }

    fn trim(&mut self) {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.0.len() - 1
    }

    pub fn lc(&self) -> &BigRational {
        self.0.last().expect("lc of zero polynomial")
    }

    pub fn add(&self, other: &SPoly) -> SPoly {
        let mut out = vec![BigRational::zero(); self.0.len().max(other.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        let mut p = SPoly(out);
        p.trim();
        p
    }

    pub fn sub(&self, other: &SPoly) -> SPoly {
        let mut out = vec![BigRational::zero(); self.0.len().max(other.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] -= c;
        }
        let mut p = SPoly(out);
        p.trim();
        p
    }

    pub fn mul(&self, other: &SPoly) -> SPoly {
        if self.is_zero() || other.is_zero() {
            return SPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        let mut p = SPoly(out);
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigRational) -> SPoly {
        let mut p = SPoly(self.0.iter().map(|a| a * c).collect());
        p.trim();
        p
    }

    pub fn pow(&self, e: usize) -> SPoly {
        let mut out = SPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Division with remainder over Q.
    pub fn div_rem(&self, d: &SPoly) -> (SPoly, SPoly) {
        assert!(!d.is_zero(), "division by zero polynomial in s");
        let mut rem = self.clone();
        let mut quot = vec![BigRational::zero(); self.0.len().saturating_sub(d.0.len()) + 1];
        while !rem.is_zero() && rem.deg() >= d.deg() {
            let shift = rem.deg() - d.deg();
            let c = rem.lc() / d.lc();
            quot[shift] += &c;
            // rem -= c * s^shift * d
            let mut sub = vec![BigRational::zero(); shift];
            sub.extend(d.0.iter().map(|a| a * &c));
            let mut subp = SPoly(sub);
            subp.trim();
            rem = rem.sub(&subp);
        }
        let mut q = SPoly(quot);
        q.trim();
        (q, rem)
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn divexact(&self, d: &SPoly) -> SPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division in s");
        q
    }

    /// Monic gcd over Q.
    pub fn gcd(&self, other: &SPoly) -> SPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lc = a.lc().clone();
        a.scale(&lc.recip())
    }
}

/// Dense polynomial in t with coefficients in Q[s].  Index = t-exponent.
#[derive(Clone, Debug)]
pub(crate) struct TPoly(pub Vec<SPoly>);

impl TPoly {
    pub fn one() -> Self {
        TPoly(vec![SPoly::one()])
    }

    fn trim(&mut self) {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.0.len() - 1
    }

    pub fn lc(&self) -> &SPoly {
        self.0.last().expect("lc of zero polynomial")
    }

    pub fn scale_sp(&self, c: &SPoly) -> TPoly {
        let mut p = TPoly(self.0.iter().map(|a| a.mul(c)).collect());
        p.trim();
        p
    }

    pub fn sub(&self, other: &TPoly) -> TPoly {
        let mut out = vec![SPoly::zero(); self.0.len().max(other.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] = out[i].sub(c);
        }
        let mut p = TPoly(out);
        p.trim();
        p
    }

    /// s-content: monic gcd over Q[s] of all t-coefficients.
    pub fn content_s(&self) -> SPoly {
        let mut g = SPoly::zero();
        for c in &self.0 {
            if !c.is_zero() {
                g = g.gcd(c);
                if !g.is_zero() && g.deg() == 0 {
                    break;
                }
            }
        }
        g
    }

    /// Divide every t-coefficient exactly by an s-polynomial.
    pub fn divexact_sp(&self, d: &SPoly) -> TPoly {
        TPoly(
            self.0
                .iter()
                .map(|c| if c.is_zero() { SPoly::zero() } else { c.divexact(d) })
                .collect(),
        )
    }

    /// Primitive part with respect to s, together with the content.
    pub fn primitive_s(&self) -> (TPoly, SPoly) {
        let c = self.content_s();
        if c.is_zero() {
            return (self.clone(), SPoly::one());
        }
        (self.divexact_sp(&c), c)
    }

    /// Pseudo-remainder: lc(d)^(deg a - deg d + 1) * a  mod  d.
    pub fn prem(&self, d: &TPoly) -> TPoly {
        let lcd = d.lc().clone();
        let mut r = self.clone();
        let mut e = self.deg() as i64 - d.deg() as i64 + 1;
        while !r.is_zero() && r.deg() >= d.deg() {
            let shift = r.deg() - d.deg();
            let lead = r.lc().clone();
            // r = lcd*r - lead*t^shift*d
            let mut shifted = vec![SPoly::zero(); shift];
            shifted.extend(d.0.iter().map(|c| c.mul(&lead)));
            let mut shifted = TPoly(shifted);
            shifted.trim();
            r = r.scale_sp(&lcd).sub(&shifted);
            e -= 1;
        }
        if e > 0 {
            r = r.scale_sp(&lcd.pow(e as usize));
        }
        r
    }

    /// Exact long division by another t-polynomial (quotient must exist in Q[s][t]).
    pub fn divexact(&self, d: &TPoly) -> TPoly {
        assert!(!d.is_zero());
        let mut rem = self.clone();
        let mut quot = vec![SPoly::zero(); self.0.len().saturating_sub(d.0.len()) + 1];
        while !rem.is_zero() && rem.deg() >= d.deg() {
            let shift = rem.deg() - d.deg();
            let c = rem.lc().divexact(d.lc());
            let mut shifted = vec![SPoly::zero(); shift];
            shifted.extend(d.0.iter().map(|a| a.mul(&c)));
            let mut shifted = TPoly(shifted);
            shifted.trim();
            rem = rem.sub(&shifted);
            quot[shift] = quot[shift].add(&c);
        }
        assert!(rem.is_zero(), "inexact polynomial division in t");
        let mut q = TPoly(quot);
        q.trim();
        q
    }

    /// Leading rational coefficient in (t-exponent, s-exponent) lex order.
    pub fn lex_leading(&self) -> BigRational {
        self.lc().lc().clone()
    }

    pub fn scale_rat(&self, c: &BigRational) -> TPoly {
        TPoly(self.0.iter().map(|a| a.scale(c)).collect())
    }
}

/// Primitive gcd in t of two nonzero primitive polynomials, by the
/// subresultant PRS.  The result is primitive in s with lex-leading
/// coefficient 1.
pub(crate) fn gcd_t(a0: &TPoly, b0: &TPoly) -> TPoly {
    let (pa, _) = a0.primitive_s();
    let (pb, _) = b0.primitive_s();
    let (mut a, mut b) = if pa.deg() >= pb.deg() { (pa, pb) } else { (pb, pa) };
    if b.is_zero() {
        return normalize(a);
    }
    if b.deg() == 0 {
        return TPoly::one();
    }
    let mut g = SPoly::one();
    let mut h = SPoly::one();
    loop {
        let d = a.deg() - b.deg();
        let r = a.prem(&b);
        if r.is_zero() {
            let (pp, _) = b.primitive_s();
            return normalize(pp);
        }
        if r.deg() == 0 {
            return TPoly::one();
        }
        a = b;
        let divisor = g.mul(&h.pow(d));
        b = r.divexact_sp(&divisor);
        g = a.lc().clone();
        if d > 0 {
            h = g.pow(d).divexact(&h.pow(d - 1));
        }
    }
}

fn normalize(p: TPoly) -> TPoly {
    if p.is_zero() {
        return p;
    }
    let l = p.lex_leading();
    p.scale_rat(&l.recip())
}

/// Reduce num/den (both over a common root order, den nonzero, num nonzero,
/// both given as t-shifted ordinary polynomials) to canonical form.
///
/// Input: num = t^shift_n * pn, den = t^shift_d * pd where pn, pd have a
/// nonzero constant t-term.  Output: (reduced pn, reduced pd, laurent shift)
/// with pd of minimal t-exponent 0 and lex-leading coefficient 1.
pub(crate) fn reduce_fraction(pn: &TPoly, pd: &TPoly, shift: i64) -> (TPoly, TPoly, i64) {
    let (mut n1, cn) = pn.primitive_s();
    let (mut d1, cd) = pd.primitive_s();
    let g = gcd_t(&n1, &d1);
    if !g.is_zero() && !(g.deg() == 0 && g.lc().deg() == 0 && g.lc().lc().is_one()) {
        n1 = n1.divexact(&g);
        d1 = d1.divexact(&g);
    }
    let cg = cn.gcd(&cd);
    let (cn, cd) = if cg.is_zero() || (cg.deg() == 0) {
        (cn, cd)
    } else {
        (cn.divexact(&cg), cd.divexact(&cg))
    };
    let mut num = n1.scale_sp(&cn);
    let mut den = d1.scale_sp(&cd);
    let lead = den.lex_leading();
    if !lead.is_one() {
        let inv = lead.recip();
        num = num.scale_rat(&inv);
        den = den.scale_rat(&inv);
    }
    (num, den, shift)
}

/// Exact n-th root of a rational, if one exists in Q.
pub(crate) fn rational_nth_root(r: &BigRational, n: u32) -> Option<BigRational> {
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    if r.is_negative() && n % 2 == 0 {
        return None;
    }
    let (num, den) = (r.numer(), r.denom());
    let nn = num.abs();
    let root_n = nn.nth_root(n);
    let root_d = den.nth_root(n);
    if num::pow::pow(root_n.clone(), n as usize) != nn
        || num::pow::pow(root_d.clone(), n as usize) != *den
    {
        return None;
    }
    let signed: BigInt = if r.is_negative() { -root_n } else { root_n };
    Some(BigRational::new(signed, root_d))
}
