//! Characters of the reflection-equation algebra: quantum-determinant
//! evaluation by two independent routes, the invertibility criterion,
//! SL(n)-normalization, cylinder-form scaling, and the Grassmannian family
//! with its Omega-matrix invariance relations.

use crate::error::{Error, Result};
use crate::scalar::{rational_nth_root, Scalar};
use crate::tensor::{
    apply_on_legs, det_fraction_free, flatten, inverse, TensorOperator, TensorVector,
};
use crate::uqsln::r_matrix;
use itertools::Itertools;
use std::collections::BTreeMap;

/// Which universal r-form variant a matrix is declared to solve the
/// reflection equation for: R' = R ("r") or R' = R21^{-1} ("rbar21").
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReVariant {
    R,
    RBar21,
}

impl ReVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            ReVariant::R => "r",
            ReVariant::RBar21 => "rbar21",
        }
    }

    pub fn parse(s: &str) -> Option<ReVariant> {
        match s {
            "r" => Some(ReVariant::R),
            "rbar21" => Some(ReVariant::RBar21),
            _ => None,
        }
    }

    /// The operator R' used by the reflection-equation checks.
    pub fn r_prime(self, n: usize) -> Result<TensorOperator> {
        let r = r_matrix(n)?;
        match self {
            ReVariant::R => Ok(r),
            ReVariant::RBar21 => {
                let p = crate::tensor::flip(n);
                inverse(&p.mul(&r)?.mul(&p)?)
            }
        }
    }
}

/// Candidate numerical reflection-equation solution M with M^i_j = f(s^i_j).
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterMatrix {
    n: usize,
    variant: ReVariant,
    entries: Vec<Scalar>,
}

impl CharacterMatrix {
    pub fn new(n: usize, entries: Vec<Scalar>) -> Result<CharacterMatrix> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        Ok(CharacterMatrix { n, variant: ReVariant::R, entries })
    }

    pub fn with_variant(mut self, variant: ReVariant) -> CharacterMatrix {
        self.variant = variant;
        self
    }

    pub fn identity(n: usize) -> CharacterMatrix {
        let mut entries = vec![Scalar::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Scalar::one();
        }
        CharacterMatrix { n, variant: ReVariant::R, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> ReVariant {
        self.variant
    }

    /// Entry M^i_j, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }

    pub fn scale(&self, c: &Scalar) -> CharacterMatrix {
        CharacterMatrix {
            n: self.n,
            variant: self.variant,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    /// As a one-leg operator on V: M(v_j) = sum_i v_i M^i_j.
    pub fn as_operator(&self) -> TensorOperator {
        let mut op = TensorOperator::zero(self.n, 1);
        for i in 1..=self.n {
            for j in 1..=self.n {
                op.set(i - 1, j - 1, self.get(i, j).clone());
            }
        }
        op
    }

    pub fn from_operator(op: &TensorOperator) -> CharacterMatrix {
        assert_eq!(op.legs(), 1);
        let n = op.n();
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(op.get(r, c).clone());
            }
        }
        CharacterMatrix { n, variant: ReVariant::R, entries }
    }
}

/// The matrix Omega of the Grassmannian central element, with its block
/// pattern (zero top-left block, codiagonal F and G, diagonal H) and the
/// overall scale read off the bottom-left codiagonal entry.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaMatrix {
    n: usize,
    entries: Vec<Scalar>,
    scale: Scalar,
}

impl OmegaMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry Omega_{i,j}, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn scale(&self) -> &Scalar {
        &self.scale
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }
}

/// The q-antisymmetrizer Y = sum_sigma (-q)^{l(sigma)} v_{sigma(1)} (x) ...
/// (x) v_{sigma(n)}.
pub fn antisymmetrizer_vector(n: usize) -> TensorVector {
    let mut y = TensorVector::zero(n, n);
    for perm in (1..=n).permutations(n) {
        let inv = inversions(&perm);
        let coeff = Scalar::q_int(inv as i64)
            .scale(&crate::scalar::rat(if inv % 2 == 0 { 1 } else { -1 }, 1));
        y.set_coord(flatten(n, &perm), coeff);
    }
    y
}

fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

/// f(det_q) via the antisymmetrizer route.
///
/// Builds M_k = (R_{V,W})^{-1} (M (x) id_W) R_{V,W} acting on the last k legs
/// of V^(x)n, where W = V^(x)(k-1) and the iterated braiding R_{V,W} is the
/// product R_{a,n} ... R_{a,a+1} of R-matrices pulling the auxiliary leg
/// a = n-k+1 past the legs to its right (the convention matching the
/// coproduct splitting used by [`CharEvaluator`]); then D = M_n ... M_1
/// applied to the antisymmetrizer Y must be a scalar multiple of Y, and that
/// scalar is f(det_q).  Two gates pin the convention: M = I yields exactly 1,
/// and the Grassmannian matrices give a proportional image (both asserted in
/// the tests).
///
/// Operators are applied to the single vector Y leg by leg, so no n^n x n^n
/// matrix is ever materialized.
pub fn qdet_antisym(m: &CharacterMatrix) -> Result<Scalar> {
    let n = m.n();
    let r = r_matrix(n)?;
    let rinv = inverse(&r)?;
    let mop = m.as_operator();
    let y = antisymmetrizer_vector(n);
    let mut w = y.clone();
    for k in 1..=n {
        let a = n - k + 1;
        for j in a + 1..=n {
            w = apply_on_legs(&r, &w, &[a, j])?;
        }
        w = apply_on_legs(&mop, &w, &[a])?;
        for j in (a + 1..=n).rev() {
            w = apply_on_legs(&rinv, &w, &[a, j])?;
        }
    }
    // proportionality against the coordinate of the identity permutation
    let idx0 = flatten(n, &(1..=n).collect::<Vec<_>>());
    let ratio = w.coord(idx0).clone();
    let diff = w.sub(&y.scale(&ratio));
    if let Some(bad) = (0..diff.dim()).find(|&i| !diff.coord(i).is_zero()) {
        return Err(Error::NotProportional(format!(
            "first deviation at coordinate {:?}",
            crate::tensor::unflatten(n, n, bad)
        )));
    }
    Ok(ratio)
}

/// Recursive character evaluation on monomials in the FRT generators via the
/// covariantized-product splitting: for a word t^{i}_{j} w the value is a
/// contraction of R^{-1}-chains against the first coproduct leg, R-chains
/// against the second, M in the middle, and the recursive value of the
/// shortened word.  Degree-one evaluation is M itself.
pub struct CharEvaluator {
    n: usize,
    m: CharacterMatrix,
    r: TensorOperator,
    rinv: TensorOperator,
    bound: usize,
    memo: BTreeMap<Vec<(u8, u8)>, Scalar>,
}

impl CharEvaluator {
    pub fn new(m: &CharacterMatrix) -> Result<CharEvaluator> {
        Self::with_bound(m, 4)
    }

    pub fn with_bound(m: &CharacterMatrix, bound: usize) -> Result<CharEvaluator> {
        let n = m.n();
        let r = r_matrix(n)?;
        let rinv = inverse(&r)?;
        Ok(CharEvaluator { n, m: m.clone(), r, rinv, bound, memo: BTreeMap::new() })
    }

    fn r_entry(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        self.r.get((i - 1) * self.n + (j - 1), (k - 1) * self.n + (l - 1))
    }

    fn rinv_entry(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        self.rinv.get((i - 1) * self.n + (j - 1), (k - 1) * self.n + (l - 1))
    }

    /// f(t^{i1}_{j1} ... t^{ik}_{jk}) for a word of 1-based index pairs.
    pub fn eval(&mut self, word: &[(usize, usize)]) -> Result<Scalar> {
        if word.len() > self.bound {
            return Err(Error::WordTooLong { len: word.len(), bound: self.bound });
        }
        self.eval_inner(word)
    }

    fn eval_inner(&mut self, word: &[(usize, usize)]) -> Result<Scalar> {
        if word.is_empty() {
            return Ok(Scalar::one());
        }
        if word.len() == 1 {
            return Ok(self.m.get(word[0].0, word[0].1).clone());
        }
        let key: Vec<(u8, u8)> = word.iter().map(|&(a, b)| (a as u8, b as u8)).collect();
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let n = self.n;
        let (i, j) = word[0];
        let rest = &word[1..];
        let p = rest.len();
        let uppers: Vec<usize> = rest.iter().map(|&(k, _)| k).collect();
        let lowers: Vec<usize> = rest.iter().map(|&(_, l)| l).collect();
        let mut total = Scalar::zero();
        for u in std::iter::repeat(1..=n).take(p).multi_cartesian_product() {
            // a[alpha] = sum over chains of R^{-1} slices from i through
            // (uppers, u) down to alpha
            let mut a = vec![Scalar::zero(); n + 1];
            a[i] = Scalar::one();
            for t in 0..p {
                let mut next = vec![Scalar::zero(); n + 1];
                for c in 1..=n {
                    if a[c].is_zero() {
                        continue;
                    }
                    for cp in 1..=n {
                        let e = self.rinv_entry(c, uppers[t], cp, u[t]);
                        if !e.is_zero() {
                            next[cp] = next[cp].add(&a[c].mul(e));
                        }
                    }
                }
                a = next;
            }
            if a.iter().all(|x| x.is_zero()) {
                continue;
            }
            for v in std::iter::repeat(1..=n).take(p).multi_cartesian_product() {
                // b[beta] = chain of R slices pairing (u, v) in reverse order,
                // ending at j
                let mut b = vec![Scalar::zero(); n + 1];
                b[j] = Scalar::one();
                for t in 0..p {
                    let mut next = vec![Scalar::zero(); n + 1];
                    for d in 1..=n {
                        if b[d].is_zero() {
                            continue;
                        }
                        for dp in 1..=n {
                            let e = self.r_entry(dp, u[t], d, v[t]);
                            if !e.is_zero() {
                                next[dp] = next[dp].add(&b[d].mul(e));
                            }
                        }
                    }
                    b = next;
                }
                if b.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let subword: Vec<(usize, usize)> =
                    v.iter().zip(&lowers).map(|(&vv, &ll)| (vv, ll)).collect();
                let frest = self.eval_inner(&subword)?;
                if frest.is_zero() {
                    continue;
                }
                for alpha in 1..=n {
                    if a[alpha].is_zero() {
                        continue;
                    }
                    for beta in 1..=n {
                        if b[beta].is_zero() {
                            continue;
                        }
                        let mab = self.m.get(alpha, beta);
                        if mab.is_zero() {
                            continue;
                        }
                        total = total.add(&a[alpha].mul(&b[beta]).mul(mab).mul(&frest));
                    }
                }
            }
        }
        self.memo.insert(key, total.clone());
        Ok(total)
    }
}

/// Single-shot monomial evaluation (default bound 4).
pub fn char_eval_monomial(m: &CharacterMatrix, word: &[(usize, usize)]) -> Result<Scalar> {
    CharEvaluator::new(m)?.eval(word)
}

/// f(det_q) = sum_sigma (-q)^{l(sigma)} f(t^1_{sigma(1)} ... t^n_{sigma(n)}),
/// the independent oracle for [`qdet_antisym`]; n <= 3 only.
pub fn qdet_monomial_oracle(m: &CharacterMatrix) -> Result<Scalar> {
    let n = m.n();
    if n > 3 {
        return Err(Error::TooLarge(n));
    }
    let mut ev = CharEvaluator::with_bound(m, n)?;
    let mut total = Scalar::zero();
    for perm in (1..=n).permutations(n) {
        let word: Vec<(usize, usize)> = (1..=n).zip(perm.iter().copied()).collect();
        let inv = inversions(&perm);
        let coeff = Scalar::q_int(inv as i64)
            .scale(&crate::scalar::rat(if inv % 2 == 0 { 1 } else { -1 }, 1));
        total = total.add(&coeff.mul(&ev.eval(&word)?));
    }
    Ok(total)
}

/// Invertibility criterion: det M != 0 iff f(det_q) != 0 for characters.
pub fn check_invertibility_criterion(m: &CharacterMatrix) -> Result<crate::relations::Report> {
    let det = det_fraction_free(&m.as_operator());
    let qdet = qdet_antisym(m)?;
    if det.is_zero() == qdet.is_zero() {
        Ok(crate::relations::Report::pass("invertibility_criterion"))
    } else {
        Ok(crate::relations::Report::fail(
            "invertibility_criterion",
            crate::relations::Witness {
                index: vec![],
                lhs: det.clone(),
                rhs: qdet.clone(),
                residual: det.sub(&qdet),
            },
        ))
    }
}

/// Outcome of SL(n)-normalization: the exact f(det_q), the n-th root beta
/// when it exists in the coefficient field, and the scaled matrix beta^{-1}M.
#[derive(Clone, Debug)]
pub struct SlNormalization {
    pub qdet: Scalar,
    pub beta: Option<Scalar>,
    pub normalized: Option<CharacterMatrix>,
}

/// Scale a character to quantum determinant 1 when an exact n-th root of
/// f(det_q) exists in Q(q^{1/N}); otherwise report the exact value with the
/// extension flag (beta = None).
pub fn normalize_sl_character(m: &CharacterMatrix) -> Result<SlNormalization> {
    let n = m.n() as u32;
    let qdet = qdet_antisym(m)?;
    if qdet.is_zero() {
        return Err(Error::ZeroQdet);
    }
    let beta = qdet.as_monomial().and_then(|(r, eq, es, order)| {
        if es != 0 || eq.rem_euclid(n as i64) != 0 {
            return None;
        }
        let root = rational_nth_root(&r, n)?;
        Some(Scalar::q_pow(eq / n as i64, order).scale(&root))
    });
    let normalized = match &beta {
        Some(b) => Some(m.scale(&b.inverse().expect("beta is nonzero"))),
        None => None,
    };
    Ok(SlNormalization { qdet, beta, normalized })
}

/// Degree-one avatar of the cylinder-form bijection: multiply by
/// q^{(omega_1 + 2 rho, omega_1)} = q^{(n^2-1)/n}.
pub fn cylinder_scale(m: &CharacterMatrix) -> CharacterMatrix {
    let n = m.n();
    m.scale(&Scalar::q_pow(n as i64 * n as i64 - 1, n as u32))
}

/// The explicit Grassmannian Gr(m, 2m) reflection-equation solution:
/// M^i_j = lambda ( q^{2i-n}   if j = n-i+1 <= m,
///                  q^{2i-n-1} if j = n-i+1 >= m+1,
///                  s (q^2-1)  if i = j >= m+1,
///                  0          otherwise ).
pub fn grassmann_matrix(n: usize, s: &Scalar, lambda: &Scalar) -> Result<CharacterMatrix> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::OddDimension(n));
    }
    let m = n / 2;
    let mut out = CharacterMatrix::new(n, vec![Scalar::zero(); n * n])?;
    let shift = sq_minus_one().mul(s); // s(q^2 - 1)
    for i in 1..=n {
        let j = n - i + 1;
        let e = if j <= m { 2 * i as i64 - n as i64 } else { 2 * i as i64 - n as i64 - 1 };
        out.set(i, j, Scalar::q_int(e).mul(lambda));
        if i >= m + 1 {
            out.set(i, i, shift.mul(lambda));
        }
    }
    Ok(out)
}

fn sq_minus_one() -> Scalar {
    Scalar::q_int(2).sub(&Scalar::one())
}

/// Detect the Grassmannian pattern; returns (lambda, s) when M equals
/// grassmann_matrix(n, s, lambda) exactly.
pub fn grassmann_parameters(m: &CharacterMatrix) -> Option<(Scalar, Scalar)> {
    let n = m.n();
    if n < 2 || n % 2 != 0 {
        return None;
    }
    let half = n / 2;
    // lambda from the bottom-left codiagonal entry M^n_1 = lambda q^n
    let lambda = m.get(n, 1).mul(&Scalar::q_int(-(n as i64)));
    if lambda.is_zero() {
        return None;
    }
    // s from M^{m+1}_{m+1} = lambda s (q^2 - 1)
    let s = m
        .get(half + 1, half + 1)
        .div(&lambda.mul(&sq_minus_one()))
        .ok()?;
    let expect = grassmann_matrix(n, &s, &lambda).ok()?;
    for i in 1..=n {
        for j in 1..=n {
            if m.get(i, j) != expect.get(i, j) {
                return None;
            }
        }
    }
    Some((lambda, s))
}

/// Omega_{j,i} = q^{n+1-2i} M^i_j (inverse of the matrix-coefficient
/// conversion).
pub fn omega_from_character(m: &CharacterMatrix) -> OmegaMatrix {
    let n = m.n();
    let mut entries = vec![Scalar::zero(); n * n];
    for i in 1..=n {
        let w = Scalar::q_int(n as i64 + 1 - 2 * i as i64);
        for j in 1..=n {
            entries[(j - 1) * n + (i - 1)] = w.mul(m.get(i, j));
        }
    }
    let scale = entries[(n - 1) * n].clone();
    OmegaMatrix { n, entries, scale }
}

/// M^i_j = q^{2i-n-1} Omega_{j,i}; inverse of [`omega_from_character`].
pub fn character_from_omega(o: &OmegaMatrix) -> CharacterMatrix {
    let n = o.n();
    let mut m = CharacterMatrix::new(n, vec![Scalar::zero(); n * n]).unwrap();
    for i in 1..=n {
        let w = Scalar::q_int(2 * i as i64 - n as i64 - 1);
        for j in 1..=n {
            m.set(i, j, w.mul(o.get(j, i)));
        }
    }
    m
}

/// Structural relations of the Grassmannian Omega matrix: triangularity and
/// block pattern, constant codiagonals with F = qG, the geometric diagonal
/// Omega_{i,i} = q^2 Omega_{i+1,i+1}, and the seed
/// Omega_{m+1,m+1} = s (q - q^{-1}) Omega_{m+1,m}.
pub fn check_grassmann_invariance(o: &OmegaMatrix, s: &Scalar) -> crate::relations::Report {
    use crate::relations::{Report, Witness};
    let n = o.n();
    let m = n / 2;
    let fail = |relation: &str, i: usize, j: usize, lhs: &Scalar, rhs: &Scalar| {
        Report::fail(
            relation,
            Witness { index: vec![i, j], lhs: lhs.clone(), rhs: rhs.clone(), residual: lhs.sub(rhs) },
        )
    };
    if n % 2 != 0 || n == 0 {
        return fail("omega_even_dimension", n, n, &Scalar::zero(), &Scalar::zero());
    }
    // zero outside the codiagonal and the lower-right diagonal
    for i in 1..=n {
        for j in 1..=n {
            let on_codiag = j == n - i + 1;
            let on_diag = i == j && i >= m + 1;
            if !on_codiag && !on_diag && !o.get(i, j).is_zero() {
                return fail("omega_pattern", i, j, o.get(i, j), &Scalar::zero());
            }
        }
    }
    // triangularity already follows; keep the literal check for reporting
    for i in 1..=n {
        for j in 1..=n {
            if n - i + 1 > j && !o.get(i, j).is_zero() {
                return fail("omega_triangular", i, j, o.get(i, j), &Scalar::zero());
            }
        }
    }
    // F entries all equal, G entries all equal
    let f = o.get(1, n).clone();
    for i in 2..=m {
        if o.get(i, n - i + 1) != &f {
            return fail("omega_f_constant", i, n - i + 1, o.get(i, n - i + 1), &f);
        }
    }
    let g = o.get(n, 1).clone();
    for i in m + 1..=n {
        if o.get(i, n - i + 1) != &g {
            return fail("omega_g_constant", i, n - i + 1, o.get(i, n - i + 1), &g);
        }
    }
    // F = qG
    let qg = Scalar::q_int(1).mul(&g);
    if f != qg {
        return fail("omega_f_eq_qg", 1, n, &f, &qg);
    }
    // Omega_{i,i} = q^2 Omega_{i+1,i+1} for m+1 <= i <= n-1
    for i in m + 1..n {
        let lhs = o.get(i, i).clone();
        let rhs = Scalar::q_int(2).mul(o.get(i + 1, i + 1));
        if lhs != rhs {
            return fail("omega_h_ratio", i, i, &lhs, &rhs);
        }
    }
    // Omega_{m+1,m+1} = s (q - q^{-1}) Omega_{m+1,m}
    let lhs = o.get(m + 1, m + 1).clone();
    let rhs = s
        .mul(&Scalar::q_int(1).sub(&Scalar::q_int(-1)))
        .mul(o.get(m + 1, m));
    if lhs != rhs {
        return fail("omega_h_seed", m + 1, m + 1, &lhs, &rhs);
    }
    crate::relations::Report::pass("grassmann_omega")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::check_reflection;
    use crate::scalar::parse_scalar;

    fn sc(t: &str, n: u32) -> Scalar {
        parse_scalar(t, n).unwrap()
    }

    fn cm(n: usize, entries: &[&str]) -> CharacterMatrix {
        CharacterMatrix::new(n, entries.iter().map(|t| sc(t, n as u32)).collect()).unwrap()
    }

    #[test]
    fn grassmann_entries_n2_n4() {
        let g = grassmann_matrix(2, &Scalar::s(), &Scalar::one()).unwrap();
        assert!(g.get(1, 1).is_zero());
        assert_eq!(g.get(1, 2), &sc("q^-1", 1));
        assert_eq!(g.get(2, 1), &sc("q^2", 1));
        assert_eq!(g.get(2, 2), &sc("s*(q^2 - 1)", 1));

        let g = grassmann_matrix(4, &Scalar::s(), &Scalar::one()).unwrap();
        assert_eq!(g.get(1, 4), &sc("q^-3", 1));
        assert_eq!(g.get(2, 3), &sc("q^-1", 1));
        assert_eq!(g.get(3, 2), &sc("q^2", 1));
        assert_eq!(g.get(4, 1), &sc("q^4", 1));
        assert_eq!(g.get(3, 3), &sc("s*(q^2 - 1)", 1));
        assert_eq!(g.get(4, 4), &sc("s*(q^2 - 1)", 1));
        let zeros = (1..=4)
            .flat_map(|i| (1..=4).map(move |j| (i, j)))
            .filter(|&(i, j)| g.get(i, j).is_zero())
            .count();
        assert_eq!(zeros, 10);

        // s = 0 leaves the codiagonal only
        let g0 = grassmann_matrix(4, &Scalar::zero(), &Scalar::one()).unwrap();
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(g0.get(i, j).is_zero(), j != 4 - i + 1);
            }
        }

        assert!(matches!(
            grassmann_matrix(3, &Scalar::s(), &Scalar::one()),
            Err(Error::OddDimension(3))
        ));
    }

    #[test]
    fn grassmann_pattern_detection() {
        let lam = sc("q^3", 1);
        let s = sc("s + 1", 1);
        let g = grassmann_matrix(4, &s, &lam).unwrap();
        let (l2, s2) = grassmann_parameters(&g).unwrap();
        assert_eq!(l2, lam);
        assert_eq!(s2, s);
        assert!(grassmann_parameters(&CharacterMatrix::identity(2)).is_none());
        // s = 0 still matches, with s recovered as 0
        let g0 = grassmann_matrix(2, &Scalar::zero(), &Scalar::one()).unwrap();
        let (_, s0) = grassmann_parameters(&g0).unwrap();
        assert!(s0.is_zero());
    }

    #[test]
    fn omega_conversion_examples() {
        let g = grassmann_matrix(2, &Scalar::s(), &Scalar::one()).unwrap();
        let o = omega_from_character(&g);
        assert!(o.get(1, 1).is_zero());
        assert_eq!(o.get(1, 2), &sc("q", 1));
        assert_eq!(o.get(2, 1), &Scalar::one());
        assert_eq!(o.get(2, 2), &sc("s*(q - q^-1)", 1));

        let id = CharacterMatrix::identity(2);
        let oid = omega_from_character(&id);
        assert_eq!(oid.get(1, 1), &sc("q", 1));
        assert_eq!(oid.get(2, 2), &sc("q^-1", 1));
        assert!(oid.get(1, 2).is_zero() && oid.get(2, 1).is_zero());

        for mat in [&g, &id] {
            assert_eq!(&character_from_omega(&omega_from_character(mat)), mat);
        }
    }

    #[test]
    fn omega_invariance_checks() {
        for n in [2usize, 4, 6] {
            let s = Scalar::s();
            let g = grassmann_matrix(n, &s, &Scalar::one()).unwrap();
            let o = omega_from_character(&g);
            let rep = check_grassmann_invariance(&o, &s);
            assert!(rep.passed, "n={n}: {:?}", rep.relation);
        }
        // zeroing H while s != 0 breaks the seed relation
        let s = Scalar::s();
        let g = grassmann_matrix(4, &s, &Scalar::one()).unwrap();
        let mut o = omega_from_character(&g);
        o.set(3, 3, Scalar::zero());
        o.set(4, 4, Scalar::zero());
        let rep = check_grassmann_invariance(&o, &s);
        assert!(!rep.passed);
        assert_eq!(rep.relation, "omega_h_seed");
        // s = 0 codiagonal-only passes
        let g0 = grassmann_matrix(4, &Scalar::zero(), &Scalar::one()).unwrap();
        let o0 = omega_from_character(&g0);
        assert!(check_grassmann_invariance(&o0, &Scalar::zero()).passed);
    }

    #[test]
    fn qdet_identity_is_one() {
        for n in 2..=4 {
            assert!(qdet_antisym(&CharacterMatrix::identity(n)).unwrap().is_one(), "n={n}");
        }
    }

    #[test]
    fn qdet_scaling_homogeneity() {
        for n in 2..=3usize {
            let c = Scalar::s();
            let m = CharacterMatrix::identity(n).scale(&c);
            let got = qdet_antisym(&m).unwrap();
            assert_eq!(got, c.pow(n as i64).unwrap(), "n={n}");
            let g = grassmann_matrix(2, &Scalar::s(), &Scalar::one()).unwrap();
            let scaled = g.scale(&sc("q^3", 1));
            assert_eq!(
                qdet_antisym(&scaled).unwrap(),
                qdet_antisym(&g).unwrap().mul(&sc("q^6", 1))
            );
        }
    }

    #[test]
    fn qdet_grassmann_nonzero_and_dual_route() {
        let g = grassmann_matrix(2, &Scalar::s(), &Scalar::one()).unwrap();
        let a = qdet_antisym(&g).unwrap();
        assert!(!a.is_zero());
        let b = qdet_monomial_oracle(&g).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn char_eval_examples() {
        let g = grassmann_matrix(2, &Scalar::s(), &Scalar::one()).unwrap();
        let mut ev = CharEvaluator::new(&g).unwrap();
        assert!(ev.eval(&[]).unwrap().is_one());
        assert_eq!(ev.eval(&[(2, 1)]).unwrap(), sc("q^2", 1));
        // counit character: f(t^i_j t^k_l) = delta_ij delta_kl exercises the
        // R / R^{-1} contraction cancellation
        let id = CharacterMatrix::identity(2);
        let mut ev = CharEvaluator::new(&id).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                for k in 1..=2 {
                    for l in 1..=2 {
                        let got = ev.eval(&[(i, j), (k, l)]).unwrap();
                        if i == j && k == l {
                            assert!(got.is_one());
                        } else {
                            assert!(got.is_zero(), "({i},{j},{k},{l}) -> {got}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn word_length_bound() {
        let id = CharacterMatrix::identity(2);
        let mut ev = CharEvaluator::new(&id).unwrap();
        let long: Vec<(usize, usize)> = vec![(1, 1); 5];
        assert!(matches!(ev.eval(&long), Err(Error::WordTooLong { len: 5, bound: 4 })));
        assert!(matches!(
            qdet_monomial_oracle(&CharacterMatrix::identity(4)),
            Err(Error::TooLarge(4))
        ));
    }

    #[test]
    fn generic_diagonal_is_not_proportional() {
        // diag(2, 3) is not a character; the antisymmetrizer image leaves
        // the antisymmetric line.
        let m = cm(2, &["2", "0", "0", "3"]);
        assert!(matches!(qdet_antisym(&m), Err(Error::NotProportional(_))));
    }

    #[test]
    fn singular_diagonal_character_has_zero_qdet() {
        // diag(0, s) solves the reflection equation and is singular
        let m = cm(2, &["0", "0", "0", "s"]);
        let r = r_matrix(2).unwrap();
        assert!(check_reflection(&r, &m).passed);
        assert!(qdet_antisym(&m).unwrap().is_zero());
        assert!(qdet_monomial_oracle(&m).unwrap().is_zero());
        assert!(check_invertibility_criterion(&m).unwrap().passed);
    }

    #[test]
    fn criterion_on_battery() {
        for m in [
            CharacterMatrix::identity(2),
            CharacterMatrix::identity(2).scale(&Scalar::s()),
            grassmann_matrix(2, &Scalar::s(), &Scalar::one()).unwrap(),
        ] {
            assert!(check_invertibility_criterion(&m).unwrap().passed);
        }
    }

    #[test]
    fn normalization_examples() {
        let r = normalize_sl_character(&CharacterMatrix::identity(2)).unwrap();
        assert!(r.qdet.is_one());
        assert!(r.beta.unwrap().is_one());
        assert_eq!(r.normalized.unwrap(), CharacterMatrix::identity(2));

        // c I with c = q^2: f(det_q) = q^4, beta = q^2
        let m = CharacterMatrix::identity(2).scale(&sc("q^2", 1));
        let r = normalize_sl_character(&m).unwrap();
        assert_eq!(r.qdet, sc("q^4", 1));
        assert_eq!(r.beta.unwrap(), sc("q^2", 1));
        assert_eq!(r.normalized.unwrap(), CharacterMatrix::identity(2));

        // zero qdet errors
        let z = cm(2, &["0", "0", "0", "s"]);
        assert!(matches!(normalize_sl_character(&z), Err(Error::ZeroQdet)));
    }

    #[test]
    fn cylinder_scale_factors() {
        let m = CharacterMatrix::identity(2);
        assert_eq!(cylinder_scale(&m).get(1, 1), &Scalar::q_pow(3, 2));
        let m = CharacterMatrix::identity(3);
        assert_eq!(cylinder_scale(&m).get(1, 1), &Scalar::q_pow(8, 3));
        let z = CharacterMatrix::new(2, vec![Scalar::zero(); 4]).unwrap();
        assert_eq!(cylinder_scale(&z), z);
    }

    #[test]
    fn antisymmetrizer_coefficients() {
        let y = antisymmetrizer_vector(2);
        assert!(y.coord(flatten(2, &[1, 2])).is_one());
        assert_eq!(y.coord(flatten(2, &[2, 1])), &sc("-q", 1));
        assert!(y.coord(flatten(2, &[1, 1])).is_zero());
    }
}
