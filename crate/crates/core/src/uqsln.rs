//! Representation data of U_q(sl_n) on the vector representation V:
//! generator matrices, weights, antipode and coproduct images, the diagonal
//! actions tau(lambda), the R-matrix, and q-traces.
//!
//! Conventions: x_i v_j = delta_{i,j-1} v_{j-1}, y_i v_j = delta_{i,j} v_{j+1},
//! t_i v_j = q^{delta_{i,j}-delta_{i+1,j}} v_j; antipode
//! sigma(x_i) = -t_i^{-1} x_i, sigma(y_i) = -y_i t_i, sigma(tau(l)) = tau(-l);
//! coproduct Dx_i = x_i (x) 1 + t_i (x) x_i, Dy_i = y_i (x) t_i^{-1} + 1 (x) y_i.
//! The session root order is n, the smallest exact exponent lattice: every
//! exponent that appears is a multiple of 1/n.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{flip, kron, TensorOperator};

/// Weight in the fundamental-weight basis: lambda = sum coords[i-1] * omega_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    coords: Vec<i64>,
}

impl WeightVector {
    pub fn new(coords: Vec<i64>) -> Self {
        WeightVector { coords }
    }

    pub fn zero(n: usize) -> Self {
        WeightVector { coords: vec![0; n - 1] }
    }

    /// omega_i, 1-based.
    pub fn fundamental(i: usize, n: usize) -> Self {
        let mut coords = vec![0; n - 1];
        coords[i - 1] = 1;
        WeightVector { coords }
    }

    /// rho = omega_1 + ... + omega_{n-1}.
    pub fn rho(n: usize) -> Self {
        WeightVector { coords: vec![1; n - 1] }
    }

    /// alpha_i = -omega_{i-1} + 2 omega_i - omega_{i+1} (omega_0 = omega_n = 0).
    pub fn alpha(i: usize, n: usize) -> Self {
        let mut coords = vec![0i64; n - 1];
        coords[i - 1] = 2;
        if i >= 2 {
            coords[i - 2] = -1;
        }
        if i < n - 1 {
            coords[i] = -1;
        }
        WeightVector { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len() + 1
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> WeightVector {
        WeightVector { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, f: i64) -> WeightVector {
        WeightVector { coords: self.coords.iter().map(|c| c * f).collect() }
    }

    /// n * (lambda, mu), exact; uses (omega_i, omega_j) = min(i,j) - ij/n.
    pub fn pairing_times_n(&self, other: &WeightVector) -> i64 {
        let n = self.n() as i64;
        let mut acc = 0;
        for (i, &ci) in self.coords.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            let i = i as i64 + 1;
            for (j, &dj) in other.coords.iter().enumerate() {
                if dj == 0 {
                    continue;
                }
                let j = j as i64 + 1;
                acc += ci * dj * (n * i.min(j) - i * j);
            }
        }
        acc
    }

    /// n * (lambda, wt v_j) with wt v_j = omega_j - omega_{j-1}, 1-based j.
    pub fn pairing_with_basis_weight_times_n(&self, j: usize) -> i64 {
        let n = self.n() as i64;
        let j = j as i64;
        let mut acc = 0;
        for (idx, &ci) in self.coords.iter().enumerate() {
            let i = idx as i64 + 1;
            acc += ci * (if i >= j { n } else { 0 } - i);
        }
        acc
    }
}

/// Generator id for [`coproduct_on_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    X(usize),
    Y(usize),
    T(usize),
    TInv(usize),
}

/// Matrices of the Chevalley generators and their antipode images on V.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub n: usize,
    pub root_order: u32,
    pub x: Vec<TensorOperator>,
    pub y: Vec<TensorOperator>,
    pub t: Vec<TensorOperator>,
    pub t_inv: Vec<TensorOperator>,
    pub sigma_x: Vec<TensorOperator>,
    pub sigma_y: Vec<TensorOperator>,
    pub sigma_t: Vec<TensorOperator>,
}

impl GeneratorSet {
    pub fn gen_matrix(&self, g: Gen) -> Result<&TensorOperator> {
        match g {
            Gen::X(i) => check_index(self.n, i).map(|k| &self.x[k]),
            Gen::Y(i) => check_index(self.n, i).map(|k| &self.y[k]),
            Gen::T(i) => check_index(self.n, i).map(|k| &self.t[k]),
            Gen::TInv(i) => check_index(self.n, i).map(|k| &self.t_inv[k]),
        }
    }

    /// All generator ids, for batteries.
    pub fn all_gens(&self) -> Vec<Gen> {
        (1..self.n)
            .flat_map(|i| [Gen::X(i), Gen::Y(i), Gen::T(i), Gen::TInv(i)])
            .collect()
    }
}

fn unit_matrix(n: usize, row: usize, col: usize) -> TensorOperator {
    let mut m = TensorOperator::zero(n, 1);
    m.set(row - 1, col - 1, Scalar::one());
    m
}

/// The vector representation of U_q(sl_n).
pub fn vector_rep(n: usize) -> GeneratorSet {
    assert!(n >= 2, "vector_rep needs n >= 2");
    let root_order = n as u32;
    let mut x = Vec::new();
    let mut y = Vec::new();
    let mut t = Vec::new();
    let mut t_inv = Vec::new();
    let mut sigma_x = Vec::new();
    let mut sigma_y = Vec::new();
    let mut sigma_t = Vec::new();
    for i in 1..n {
        let xi = unit_matrix(n, i, i + 1);
        let yi = unit_matrix(n, i + 1, i);
        let mut ti = TensorOperator::zero(n, 1);
        let mut ti_inv = TensorOperator::zero(n, 1);
        for j in 1..=n {
            let e = if j == i { 1 } else if j == i + 1 { -1 } else { 0 };
            ti.set(j - 1, j - 1, Scalar::q_int(e));
            ti_inv.set(j - 1, j - 1, Scalar::q_int(-e));
        }
        sigma_x.push(ti_inv.mul(&xi).unwrap().scale(&Scalar::from_int(-1)));
        sigma_y.push(yi.mul(&ti).unwrap().scale(&Scalar::from_int(-1)));
        sigma_t.push(ti_inv.clone());
        x.push(xi);
        y.push(yi);
        t.push(ti);
        t_inv.push(ti_inv);
    }
    GeneratorSet { n, root_order, x, y, t, t_inv, sigma_x, sigma_y, sigma_t }
}

/// Diagonal operator tau(lambda) = diag(q^{(lambda, wt v_j)}).
pub fn tau_action(lambda: &WeightVector, n: usize) -> TensorOperator {
    assert_eq!(lambda.n(), n);
    let mut op = TensorOperator::zero(n, 1);
    for j in 1..=n {
        let eq = lambda.pairing_with_basis_weight_times_n(j);
        op.set(j - 1, j - 1, Scalar::q_pow(eq, n as u32));
    }
    op
}

/// The R-matrix on V (x) V at the given root order, which must be divisible
/// by n: R(v_k (x) v_l) = sum v_i (x) v_j R^{ij}_{kl} with
/// R^{ij}_{kl} = q^{1/n} (q^{-1} [i=j=k=l] + [i=k!=j=l] + (q^{-1}-q) [i=l<j=k]).
pub fn r_matrix_with_order(n: usize, root_order: u32) -> Result<TensorOperator> {
    if root_order == 0 || root_order % (n as u32) != 0 {
        return Err(Error::RootOrderIncompatible { root_order, n });
    }
    let nn = root_order as i64; // exponent of q^1
    let f = nn / n as i64; // exponent of q^{1/n}
    let mut r = TensorOperator::zero(n, 2);
    for i in 1..=n {
        for j in 1..=n {
            let row = (i - 1) * n + (j - 1);
            if i == j {
                // column (k,l) = (i,i)
                r.set(row, row, Scalar::q_pow(f - nn, root_order));
            } else {
                // i = k != j = l
                r.set(row, row, Scalar::q_pow(f, root_order));
                if i < j {
                    // column (k,l) = (j,i)
                    let col = (j - 1) * n + (i - 1);
                    let v = Scalar::q_pow(f - nn, root_order).sub(&Scalar::q_pow(f + nn, root_order));
                    r.set(row, col, v);
                }
            }
        }
    }
    Ok(r)
}

/// The R-matrix at the session root order n.
pub fn r_matrix(n: usize) -> Result<TensorOperator> {
    r_matrix_with_order(n, n as u32)
}

/// The braiding R-hat = P . R; commutes with the coproduct action on V (x) V.
pub fn rhat(n: usize) -> Result<TensorOperator> {
    flip(n).mul(&r_matrix(n)?)
}

/// Coproduct image of a generator on V (x) V.
pub fn coproduct_on_pair(g: Gen, n: usize) -> Result<TensorOperator> {
    let gs = vector_rep(n);
    let id = TensorOperator::identity(n, 1);
    let idx = |i: usize| -> Result<usize> {
        if i >= 1 && i <= n - 1 {
            Ok(i - 1)
        } else {
            Err(Error::UnknownGenerator(format!("index {i} out of 1..={}", n - 1)))
        }
    };
    match g {
        Gen::X(i) => {
            let k = idx(i)?;
            kron(&gs.x[k], &id)?.add(&kron(&gs.t[k], &gs.x[k])?)
        }
        Gen::Y(i) => {
            let k = idx(i)?;
            kron(&gs.y[k], &gs.t_inv[k])?.add(&kron(&id, &gs.y[k])?)
        }
        Gen::T(i) => {
            let k = idx(i)?;
            kron(&gs.t[k], &gs.t[k])
        }
        Gen::TInv(i) => {
            let k = idx(i)?;
            kron(&gs.t_inv[k], &gs.t_inv[k])
        }
    }
}

/// q-trace of a one-leg operator: tr(X tau(2 rho)) = sum_i q^{n-2i+1} X_ii.
pub fn qtrace(x: &TensorOperator, n: usize) -> Scalar {
    assert_eq!(x.legs(), 1);
    assert_eq!(x.n(), n);
    let mut acc = Scalar::zero();
    for i in 1..=n {
        let w = Scalar::q_int(n as i64 - 2 * i as i64 + 1);
        acc = acc.add(&w.mul(x.get(i - 1, i - 1)));
    }
    acc
}

/// Matrices of sigma^2 applied to each generator, computed by applying the
/// antipode formulas twice: sigma^2(x_i) = t_i^{-1} x_i t_i,
/// sigma^2(y_i) = t_i^{-1} y_i t_i, sigma^2(t_i^{+-1}) = t_i^{+-1}.
pub fn sigma_square(gs: &GeneratorSet, g: Gen) -> Result<TensorOperator> {
    match g {
        Gen::X(i) => {
            // sigma(-t^{-1}x) = -sigma(x)sigma(t^{-1}) = t^{-1} x t
            let k = check_index(gs.n, i)?;
            let m = gs.sigma_x[k].mul(&gs.t[k])?.scale(&Scalar::from_int(-1));
            Ok(m)
        }
        Gen::Y(i) => {
            // sigma(-y t) = -sigma(t)sigma(y) = t^{-1} y t
            let k = check_index(gs.n, i)?;
            let m = gs.t_inv[k].mul(&gs.sigma_y[k])?.scale(&Scalar::from_int(-1));
            Ok(m)
        }
        Gen::T(i) => {
            let k = check_index(gs.n, i)?;
            Ok(gs.t[k].clone())
        }
        Gen::TInv(i) => {
            let k = check_index(gs.n, i)?;
            Ok(gs.t_inv[k].clone())
        }
    }
}

fn check_index(n: usize, i: usize) -> Result<usize> {
    if i >= 1 && i <= n - 1 {
        Ok(i - 1)
    } else {
        Err(Error::UnknownGenerator(format!("index {i} out of 1..={}", n - 1)))
    }
}
