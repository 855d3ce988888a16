//! Exact dense linear algebra over [`Scalar`] for operators on tensor powers
//! V^{⊗k}, including leg embeddings, permutation operators, fraction-free
//! determinants, and exact inverses.
//!
//! Basis indexing: the basis vector v_{i1} ⊗ … ⊗ v_{ik} (indices 1-based) has
//! flat index Σ_j (i_j − 1) n^{k−j}, row-major and 0-based.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense square matrix acting on V^{⊗legs} with dim V = n.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOperator {
    n: usize,
    legs: usize,
    entries: Vec<Scalar>,
}

/// Dense vector in V^{⊗legs}.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorVector {
    n: usize,
    legs: usize,
    coords: Vec<Scalar>,
}

pub fn flatten(n: usize, multi: &[usize]) -> usize {
    let mut idx = 0;
    for &i in multi {
        debug_assert!((1..=n).contains(&i));
        idx = idx * n + (i - 1);
    }
    idx
}

pub fn unflatten(n: usize, legs: usize, mut idx: usize) -> Vec<usize> {
    let mut multi = vec![1; legs];
    for j in (0..legs).rev() {
        multi[j] = idx % n + 1;
        idx /= n;
    }
    multi
}

impl TensorOperator {
    pub fn zero(n: usize, legs: usize) -> Self {
        let dim = n.pow(legs as u32);
        TensorOperator { n, legs, entries: vec![Scalar::zero(); dim * dim] }
    }

    pub fn identity(n: usize, legs: usize) -> Self {
        let mut op = Self::zero(n, legs);
        let d = op.dim();
        for i in 0..d {
            op.entries[i * d + i] = Scalar::one();
        }
        op
    }

    pub fn from_fn(n: usize, legs: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let dim = n.pow(legs as u32);
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        TensorOperator { n, legs, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.legs as u32)
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Scalar) {
        let d = self.dim();
        self.entries[row * d + col] = v;
    }

    pub fn mul(&self, other: &TensorOperator) -> Result<TensorOperator> {
        if self.n != other.n || self.legs != other.legs {
            return Err(Error::DimensionMismatch(format!(
                "product of operators on {}^{} and {}^{}",
                self.n, self.legs, other.n, other.legs
            )));
        }
        let d = self.dim();
        let mut out = TensorOperator::zero(self.n, self.legs);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &TensorOperator) -> Result<TensorOperator> {
        if self.n != other.n || self.legs != other.legs {
            return Err(Error::DimensionMismatch("operator sum".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(other.entries.iter()) {
            *a = a.add(b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorOperator) -> Result<TensorOperator> {
        if self.n != other.n || self.legs != other.legs {
            return Err(Error::DimensionMismatch("operator difference".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(other.entries.iter()) {
            *a = a.sub(b);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> TensorOperator {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.mul(c);
        }
        out
    }

    pub fn apply(&self, v: &TensorVector) -> Result<TensorVector> {
        if self.n != v.n || self.legs != v.legs {
            return Err(Error::DimensionMismatch("operator application".into()));
        }
        let d = self.dim();
        let mut out = TensorVector::zero(self.n, self.legs);
        for c in 0..d {
            if v.coords[c].is_zero() {
                continue;
            }
            for r in 0..d {
                let a = self.get(r, c);
                if a.is_zero() {
                    continue;
                }
                out.coords[r] = out.coords[r].add(&a.mul(&v.coords[c]));
            }
        }
        Ok(out)
    }

    /// First entry where the two operators differ, row-major.
    pub fn first_difference(&self, other: &TensorOperator) -> Option<(usize, usize)> {
        let d = self.dim();
        for r in 0..d {
            for c in 0..d {
                if self.get(r, c) != other.get(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }
}

/// Kronecker product: acts as `a` on the first a.legs legs and as `b` on the rest.
pub fn kron(a: &TensorOperator, b: &TensorOperator) -> Result<TensorOperator> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(format!(
            "kron of operators over V of dim {} and {}",
            a.n, b.n
        )));
    }
    let (da, db) = (a.dim(), b.dim());
    let mut out = TensorOperator::zero(a.n, a.legs + b.legs);
    for ra in 0..da {
        for ca in 0..da {
            let x = a.get(ra, ca);
            if x.is_zero() {
                continue;
            }
            for rb in 0..db {
                for cb in 0..db {
                    let y = b.get(rb, cb);
                    if y.is_zero() {
                        continue;
                    }
                    out.set(ra * db + rb, ca * db + cb, x.mul(y));
                }
            }
        }
    }
    Ok(out)
}

/// Embed `op` into V^{⊗legs_target}, acting as `op` on the listed legs (in
/// the listed order, 1-based) and as identity elsewhere.
pub fn leg_embed(op: &TensorOperator, legs_target: usize, positions: &[usize]) -> Result<TensorOperator> {
    if positions.len() != op.legs {
        return Err(Error::BadPositions(format!(
            "operator has {} legs but {} positions were given",
            op.legs,
            positions.len()
        )));
    }
    let mut seen = vec![false; legs_target];
    for &p in positions {
        if p == 0 || p > legs_target || seen[p - 1] {
            return Err(Error::BadPositions(format!(
                "positions {:?} must be distinct and within 1..={}",
                positions, legs_target
            )));
        }
        seen[p - 1] = true;
    }
    let n = op.n;
    let rest: Vec<usize> = (1..=legs_target).filter(|p| !seen[p - 1]).collect();
    let dsub = op.dim();
    let drest = n.pow(rest.len() as u32);
    let mut out = TensorOperator::zero(n, legs_target);
    let mut row_multi = vec![0usize; legs_target];
    let mut col_multi = vec![0usize; legs_target];
    for rsub in 0..dsub {
        let rm = unflatten(n, op.legs, rsub);
        for csub in 0..dsub {
            let x = op.get(rsub, csub);
            if x.is_zero() {
                continue;
            }
            let cm = unflatten(n, op.legs, csub);
            for fill in 0..drest {
                let fm = unflatten(n, rest.len(), fill);
                for (t, &p) in positions.iter().enumerate() {
                    row_multi[p - 1] = rm[t];
                    col_multi[p - 1] = cm[t];
                }
                for (t, &p) in rest.iter().enumerate() {
                    row_multi[p - 1] = fm[t];
                    col_multi[p - 1] = fm[t];
                }
                out.set(flatten(n, &row_multi), flatten(n, &col_multi), x.clone());
            }
        }
    }
    Ok(out)
}

/// Apply `op` to the listed legs of a vector without materialising the
/// embedded operator.
pub fn apply_on_legs(op: &TensorOperator, v: &TensorVector, positions: &[usize]) -> Result<TensorVector> {
    if positions.len() != op.legs {
        return Err(Error::BadPositions("wrong number of positions".into()));
    }
    if op.n != v.n {
        return Err(Error::DimensionMismatch("apply_on_legs".into()));
    }
    let n = v.n;
    let dim = v.dim();
    let dsub = op.dim();
    let mut out = TensorVector::zero(v.n, v.legs);
    let mut multi = vec![0usize; v.legs];
    for c in 0..dim {
        if v.coords[c].is_zero() {
            continue;
        }
        let cm = unflatten(n, v.legs, c);
        let sub: Vec<usize> = positions.iter().map(|&p| cm[p - 1]).collect();
        let csub = flatten(n, &sub);
        for rsub in 0..dsub {
            let a = op.get(rsub, csub);
            if a.is_zero() {
                continue;
            }
            let rm = unflatten(n, op.legs, rsub);
            multi.copy_from_slice(&cm);
            for (t, &p) in positions.iter().enumerate() {
                multi[p - 1] = rm[t];
            }
            let r = flatten(n, &multi);
            out.coords[r] = out.coords[r].add(&a.mul(&v.coords[c]));
        }
    }
    Ok(out)
}

/// Operator permuting tensor legs: v_{i1}⊗…⊗v_{ik} maps to the vector whose
/// leg perm(t) carries i_t; permutation_op is a group homomorphism.
pub fn permutation_op(perm: &[usize], n: usize) -> TensorOperator {
    let k = perm.len();
    let dim = n.pow(k as u32);
    let mut out = TensorOperator::zero(n, k);
    for c in 0..dim {
        let cm = unflatten(n, k, c);
        let mut rm = vec![0usize; k];
        for (t, &p) in perm.iter().enumerate() {
            rm[p - 1] = cm[t];
        }
        out.set(flatten(n, &rm), c, Scalar::one());
    }
    out
}

/// The flip of two tensor factors.
pub fn flip(n: usize) -> TensorOperator {
    permutation_op(&[2, 1], n)
}

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// denominators.
pub fn det_fraction_free(a: &TensorOperator) -> Scalar {
    let d = a.dim();
    if d == 0 {
        return Scalar::one();
    }
    let mut m: Vec<Vec<Scalar>> = (0..d)
        .map(|r| (0..d).map(|c| a.get(r, c).clone()).collect())
        .collect();
    // clear denominators row by row, tracking the overall factor
    let mut scale = Scalar::one();
    for row in m.iter_mut() {
        let mut rowden = Scalar::one();
        for e in row.iter() {
            if !e.den().is_one() {
                rowden = rowden.mul(&Scalar::from_poly(e.den().clone()));
            }
        }
        if !rowden.is_one() {
            for e in row.iter_mut() {
                *e = e.mul(&rowden);
            }
            scale = scale.mul(&rowden);
        }
    }
    let mut sign = false;
    let mut prev = Scalar::one();
    for k in 0..d {
        let pivot = (k..d).find(|&r| !m[r][k].is_zero());
        let Some(p) = pivot else {
            return Scalar::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        if k + 1 == d {
            break;
        }
        for i in k + 1..d {
            for j in k + 1..d {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.div(&prev).expect("Bareiss pivot is nonzero");
            }
            m[i][k] = Scalar::zero();
        }
        prev = m[k][k].clone();
    }
    let mut det = m[d - 1][d - 1].clone();
    if sign {
        det = det.neg();
    }
    det.div(&scale).expect("denominator factor is nonzero")
}

/// Exact inverse; errors with [`Error::SingularMatrix`] when none exists.
pub fn inverse(a: &TensorOperator) -> Result<TensorOperator> {
    let d = a.dim();
    let mut m: Vec<Vec<Scalar>> = (0..d)
        .map(|r| (0..d).map(|c| a.get(r, c).clone()).collect())
        .collect();
    let mut inv: Vec<Vec<Scalar>> = (0..d)
        .map(|r| (0..d).map(|c| if r == c { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    for k in 0..d {
        let pivot = (k..d).find(|&r| !m[r][k].is_zero()).ok_or(Error::SingularMatrix)?;
        m.swap(pivot, k);
        inv.swap(pivot, k);
        let pv = m[k][k].clone();
        let pv_inv = pv.inverse().expect("pivot is nonzero");
        for j in 0..d {
            m[k][j] = m[k][j].mul(&pv_inv);
            inv[k][j] = inv[k][j].mul(&pv_inv);
        }
        for i in 0..d {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone();
            for j in 0..d {
                let t = m[k][j].mul(&f);
                m[i][j] = m[i][j].sub(&t);
                let t = inv[k][j].mul(&f);
                inv[i][j] = inv[i][j].sub(&t);
            }
        }
    }
    let mut out = TensorOperator::zero(a.n, a.legs);
    for r in 0..d {
        for c in 0..d {
            out.set(r, c, inv[r][c].clone());
        }
    }
    Ok(out)
}

/// [a, b] = ab - ba.
pub fn commutator(a: &TensorOperator, b: &TensorOperator) -> Result<TensorOperator> {
    a.mul(b)?.sub(&b.mul(a)?)
}

impl TensorVector {
    pub fn zero(n: usize, legs: usize) -> Self {
        TensorVector { n, legs, coords: vec![Scalar::zero(); n.pow(legs as u32)] }
    }

    pub fn basis(n: usize, multi: &[usize]) -> Self {
        let mut v = TensorVector::zero(n, multi.len());
        v.coords[flatten(n, multi)] = Scalar::one();
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.legs as u32)
    }

    pub fn coord(&self, idx: usize) -> &Scalar {
        &self.coords[idx]
    }

    pub fn set_coord(&mut self, idx: usize, v: Scalar) {
        self.coords[idx] = v;
    }

    pub fn scale(&self, c: &Scalar) -> TensorVector {
        TensorVector {
            n: self.n,
            legs: self.legs,
            coords: self.coords.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn sub(&self, other: &TensorVector) -> TensorVector {
        assert_eq!(self.dim(), other.dim());
        TensorVector {
            n: self.n,
            legs: self.legs,
            coords: self
                .coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, Scalar};

    fn sc(t: &str) -> Scalar {
        parse_scalar(t, 2).unwrap()
    }

    fn diag(entries: &[Scalar]) -> TensorOperator {
        let n = entries.len();
        let mut op = TensorOperator::zero(n, 1);
        for (i, e) in entries.iter().enumerate() {
            op.set(i, i, e.clone());
        }
        op
    }

    #[test]
    fn indexing_round_trip() {
        for n in 1..=4usize {
            for k in 1..=4usize {
                for idx in 0..n.pow(k as u32) {
                    let m = unflatten(n, k, idx);
                    assert!(m.iter().all(|&i| (1..=n).contains(&i)));
                    assert_eq!(flatten(n, &m), idx);
                }
            }
        }
    }

    #[test]
    fn kron_of_identities() {
        let i2 = TensorOperator::identity(2, 1);
        assert_eq!(kron(&i2, &i2).unwrap(), TensorOperator::identity(2, 2));
    }

    #[test]
    fn kron_diagonal_action() {
        let d = diag(&[sc("q"), sc("q^-1")]);
        let op = kron(&d, &TensorOperator::identity(2, 1)).unwrap();
        let v = TensorVector::basis(2, &[2, 1]);
        let out = op.apply(&v).unwrap();
        assert_eq!(out.coord(flatten(2, &[2, 1])), &sc("q^-1"));
    }

    #[test]
    fn kron_mixed_product() {
        // kron(A,B) * kron(C,D) = kron(A*C, B*D)
        let a = TensorOperator::from_fn(2, 1, |r, c| sc(&format!("q^{}", (r + 2 * c) as i64 - 1)));
        let b = TensorOperator::from_fn(2, 1, |r, c| {
            if (r + c) % 2 == 0 { sc("s") } else { sc("1 + q") }
        });
        let c = TensorOperator::from_fn(2, 1, |r, c| sc(&format!("{}", 1 + r * 2 + c)));
        let d = TensorOperator::from_fn(2, 1, |r, c| if r == c { sc("q - s") } else { sc("2") });
        let lhs = kron(&a, &b).unwrap().mul(&kron(&c, &d).unwrap()).unwrap();
        let rhs = kron(&a.mul(&c).unwrap(), &b.mul(&d).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn leg_embed_matches_kron() {
        let a = TensorOperator::from_fn(2, 1, |r, c| sc(&format!("{}", r + 2 * c + 1)));
        let e = leg_embed(&a, 2, &[1]).unwrap();
        assert_eq!(e, kron(&a, &TensorOperator::identity(2, 1)).unwrap());
    }

    #[test]
    fn leg_embed_reversal_is_flip_conjugation() {
        let r = crate::uqsln::r_matrix(2).unwrap();
        let p = flip(2);
        let lhs = leg_embed(&r, 3, &[2, 1]).unwrap();
        let p12 = leg_embed(&p, 3, &[1, 2]).unwrap();
        let rhs = p12
            .mul(&leg_embed(&r, 3, &[1, 2]).unwrap())
            .unwrap()
            .mul(&p12)
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn disjoint_legs_commute() {
        let a = TensorOperator::from_fn(2, 1, |r, c| sc(&format!("q^{}", r as i64 - c as i64)));
        let b = TensorOperator::from_fn(2, 1, |r, c| sc(&format!("{}", r + c + 1)));
        let ea = leg_embed(&a, 3, &[1]).unwrap();
        let eb = leg_embed(&b, 3, &[3]).unwrap();
        assert_eq!(ea.mul(&eb).unwrap(), eb.mul(&ea).unwrap());
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(permutation_op(&[1, 2], 2), TensorOperator::identity(2, 2));
        let p = flip(2);
        let v = TensorVector::basis(2, &[1, 2]);
        assert_eq!(p.apply(&v).unwrap(), TensorVector::basis(2, &[2, 1]));
        assert_eq!(p.mul(&p).unwrap(), TensorOperator::identity(2, 2));
    }

    #[test]
    fn permutation_homomorphism() {
        use itertools::Itertools;
        let n = 2;
        for pi in (1..=3usize).permutations(3) {
            for tau in (1..=3usize).permutations(3) {
                let comp: Vec<usize> = (0..3).map(|t| pi[tau[t] - 1]).collect();
                let lhs = permutation_op(&pi, n).mul(&permutation_op(&tau, n)).unwrap();
                assert_eq!(lhs, permutation_op(&comp, n));
            }
        }
    }

    #[test]
    fn det_examples() {
        assert!(det_fraction_free(&TensorOperator::identity(3, 1)).is_one());
        let d = diag(&[sc("q"), sc("q^-1")]);
        assert!(det_fraction_free(&d).is_one());
        let mut m = TensorOperator::zero(2, 1);
        m.set(0, 0, sc("q"));
        m.set(0, 1, sc("1"));
        m.set(1, 0, sc("1"));
        m.set(1, 1, sc("q^-1"));
        assert!(det_fraction_free(&m).is_zero());
    }

    #[test]
    fn det_with_fractional_entries() {
        let mut m = TensorOperator::zero(2, 1);
        m.set(0, 0, sc("(q)/(q^2 - 1)"));
        m.set(1, 1, sc("q^2 - 1"));
        assert_eq!(det_fraction_free(&m), sc("q"));
    }

    #[test]
    fn det_is_multiplicative() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let a = TensorOperator::from_fn(3, 1, |_, _| {
                Scalar::q_int(rng.gen_range(-2..3)).scale(&crate::scalar::rat(rng.gen_range(-3..4), 1))
            });
            let b = TensorOperator::from_fn(3, 1, |_, _| {
                let e = rng.gen_range(0..3);
                Scalar::from_int(rng.gen_range(-2..3)).mul(&Scalar::s().pow(e).unwrap())
            });
            let lhs = det_fraction_free(&a.mul(&b).unwrap());
            let rhs = det_fraction_free(&a).mul(&det_fraction_free(&b));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn inverse_contract() {
        let r = crate::uqsln::r_matrix(2).unwrap();
        let rinv = inverse(&r).unwrap();
        assert_eq!(r.mul(&rinv).unwrap(), TensorOperator::identity(2, 2));
        assert_eq!(rinv.mul(&r).unwrap(), TensorOperator::identity(2, 2));
        let p = flip(2);
        assert_eq!(inverse(&p).unwrap(), p);
        assert_eq!(inverse(&TensorOperator::identity(2, 2)).unwrap(), TensorOperator::identity(2, 2));
    }

    #[test]
    fn singular_inverse_is_an_error() {
        let mut m = TensorOperator::zero(2, 1);
        m.set(0, 0, sc("1"));
        assert_eq!(inverse(&m), Err(crate::error::Error::SingularMatrix));
    }

    #[test]
    fn apply_on_legs_matches_embedding() {
        let r = crate::uqsln::r_matrix(2).unwrap();
        let emb = leg_embed(&r, 3, &[3, 1]).unwrap();
        for idx in 0..8 {
            let v = {
                let mut v = TensorVector::zero(2, 3);
                v.set_coord(idx, sc("q + s"));
                v
            };
            assert_eq!(
                apply_on_legs(&r, &v, &[3, 1]).unwrap(),
                emb.apply(&v).unwrap()
            );
        }
    }

    #[test]
    fn bad_positions_are_rejected() {
        let r = crate::uqsln::r_matrix(2).unwrap();
        assert!(matches!(leg_embed(&r, 3, &[1, 1]), Err(Error::BadPositions(_))));
        assert!(matches!(leg_embed(&r, 3, &[0, 2]), Err(Error::BadPositions(_))));
        assert!(matches!(leg_embed(&r, 3, &[1, 4]), Err(Error::BadPositions(_))));
        assert!(matches!(leg_embed(&r, 1, &[1]), Err(Error::BadPositions(_))));
    }
}
