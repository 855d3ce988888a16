//! Noumi L-operators at representation level: build the operator matrix K
//! from a character matrix, extract the q-trace central element on the
//! auxiliary leg, and verify centrality against the Grassmannian coideal
//! generators.

use crate::characters::CharacterMatrix;
use crate::error::{Error, Result};
use crate::relations::Report;
use crate::scalar::Scalar;
use crate::tensor::{commutator, flip, kron, TensorOperator};
use crate::uqsln::{r_matrix, tau_action, vector_rep, WeightVector};

/// n x n grid of d x d operator-valued entries K^i_j, equivalently one flat
/// operator on V_aux (x) V_rep with the auxiliary space as leg 1.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    n: usize,
    d: usize,
    grid: Vec<TensorOperator>,
}

impl OperatorMatrix {
    pub fn from_grid(n: usize, d: usize, grid: Vec<TensorOperator>) -> Result<OperatorMatrix> {
        if grid.len() != n * n || grid.iter().any(|b| b.n() != d || b.legs() != 1) {
            return Err(Error::DimensionMismatch(format!(
                "grid must hold {0}x{0} blocks of dimension {1}",
                n, d
            )));
        }
        Ok(OperatorMatrix { n, d, grid })
    }

    /// Split a flat operator on V (x) V into aux-indexed blocks.
    pub fn from_flat(flat: &TensorOperator) -> Result<OperatorMatrix> {
        if flat.legs() != 2 {
            return Err(Error::DimensionMismatch(
                "flat operator form needs exactly two legs".into(),
            ));
        }
        let n = flat.n();
        let d = n;
        let mut grid = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut block = TensorOperator::zero(d, 1);
                for k in 0..d {
                    for m in 0..d {
                        block.set(k, m, flat.get(i * d + k, j * d + m).clone());
                    }
                }
                grid.push(block);
            }
        }
        Ok(OperatorMatrix { n, d, grid })
    }

    pub fn aux_dim(&self) -> usize {
        self.n
    }

    pub fn rep_dim(&self) -> usize {
        self.d
    }

    /// Block K^i_j, 1-based.
    pub fn block(&self, i: usize, j: usize) -> &TensorOperator {
        &self.grid[(i - 1) * self.n + (j - 1)]
    }

    pub fn set_block(&mut self, i: usize, j: usize, b: TensorOperator) {
        self.grid[(i - 1) * self.n + (j - 1)] = b;
    }

    /// Flat operator on V_aux (x) V_rep; requires aux and rep dimensions to
    /// agree so both legs live over the same V.
    pub fn flat_op(&self) -> Result<TensorOperator> {
        if self.n != self.d {
            return Err(Error::DimensionMismatch(
                "flat form needs aux and rep dimensions to agree".into(),
            ));
        }
        let n = self.n;
        let mut flat = TensorOperator::zero(n, 2);
        for i in 0..n {
            for j in 0..n {
                let block = &self.grid[i * n + j];
                for k in 0..n {
                    for m in 0..n {
                        let v = block.get(k, m);
                        if !v.is_zero() {
                            flat.set(i * n + k, j * n + m, v.clone());
                        }
                    }
                }
            }
        }
        Ok(flat)
    }

    pub fn scale(&self, c: &Scalar) -> OperatorMatrix {
        OperatorMatrix {
            n: self.n,
            d: self.d,
            grid: self.grid.iter().map(|b| b.scale(c)).collect(),
        }
    }
}

/// K = R21 (M (x) I) R12 on V_aux (x) V_rep: the representation matrix of
/// the coideal generators l^+(c_{i,a}) f(c_{a,b}) sigma(l^-(c_{b,j})).
/// Entry-wise, (K^i_j)_{k,m} = sum_{a,b,l} R^{ki}_{la} M^a_b R^{bl}_{jm};
/// the agreement of this contraction with the flat product is checked in
/// the tests.
pub fn build_k_operator(m: &CharacterMatrix, n: usize) -> Result<OperatorMatrix> {
    if m.n() != n {
        return Err(Error::DimensionMismatch("matrix dimension differs from n".into()));
    }
    let r = r_matrix(n)?;
    let p = flip(n);
    let r21 = p.mul(&r)?.mul(&p)?;
    let id = TensorOperator::identity(n, 1);
    let m1 = kron(&m.as_operator(), &id)?;
    let flat = r21.mul(&m1)?.mul(&r)?;
    OperatorMatrix::from_flat(&flat)
}

/// q-trace over the auxiliary leg: C_V = sum_i q^{n-2i+1} K^i_i, the
/// representation image of the central element attached to the quantum
/// trace of the vector representation.
pub fn qtrace_aux(k: &OperatorMatrix) -> TensorOperator {
    let n = k.aux_dim();
    let mut acc = TensorOperator::zero(k.rep_dim(), 1);
    for i in 1..=n {
        let w = Scalar::q_int(n as i64 - 2 * i as i64 + 1);
        acc = acc.add(&k.block(i, i).scale(&w)).unwrap();
    }
    acc
}

/// Centrality in B_f: [qtrace_aux(K), K^i_j] = 0 for all i, j.
pub fn check_centrality_bf(k: &OperatorMatrix) -> Report {
    let c = qtrace_aux(k);
    let n = k.aux_dim();
    for i in 1..=n {
        for j in 1..=n {
            let comm = commutator(&c, k.block(i, j)).unwrap();
            let zero = TensorOperator::zero(k.rep_dim(), 1);
            let rep = Report::compare(format!("centrality_bf({i},{j})"), &comm, &zero);
            if !rep.passed {
                return rep;
            }
        }
    }
    Report::pass("centrality_bf")
}

/// Matrices on V of the generators of the Grassmannian coideal subalgebra
/// (images under the antipode of B_i, plus the torus generators): for
/// p(i) = n - i,
/// sigma(B_i) = -y_i t_i - t_{p(i)}^{-1} x_{p(i)} t_i for i != m,
/// sigma(B_m) = -y_m t_m - t_m^{-1} x_m t_m + s t_m, and
/// tau(omega_i - omega_{p(i)}) for i != m.
#[derive(Clone, Debug)]
pub struct CoidealGenerators {
    pub n: usize,
    pub s: Scalar,
    /// (i, matrix of sigma(B_i)) for i = 1..n-1.
    pub sigma_b: Vec<(usize, TensorOperator)>,
    /// (i, matrix of tau(omega_i - omega_{n-i})) for i != m.
    pub tau_gens: Vec<(usize, TensorOperator)>,
}

pub fn grassmann_coideal_generators(n: usize, s: &Scalar) -> Result<CoidealGenerators> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::OddDimension(n));
    }
    let m = n / 2;
    let gs = vector_rep(n);
    let mut sigma_b = Vec::new();
    for i in 1..n {
        let p = n - i;
        let yt = gs.y[i - 1].mul(&gs.t[i - 1])?;
        let mat = if i != m {
            // -y_i t_i - t_{p}^{-1} x_{p} t_i
            let xterm = gs.t_inv[p - 1].mul(&gs.x[p - 1])?.mul(&gs.t[i - 1])?;
            yt.add(&xterm)?.scale(&Scalar::from_int(-1))
        } else {
            // -y_m t_m - t_m^{-1} x_m t_m + s t_m
            let xterm = gs.t_inv[m - 1].mul(&gs.x[m - 1])?.mul(&gs.t[m - 1])?;
            let st = gs.t[m - 1].scale(s);
            yt.add(&xterm)?.scale(&Scalar::from_int(-1)).add(&st)?
        };
        sigma_b.push((i, mat));
    }
    let mut tau_gens = Vec::new();
    for i in 1..n {
        if i == m {
            continue;
        }
        let p = n - i;
        let w = WeightVector::fundamental(i, n).add(&WeightVector::fundamental(p, n).neg());
        tau_gens.push((i, tau_action(&w, n)));
    }
    Ok(CoidealGenerators { n, s: s.clone(), sigma_b, tau_gens })
}

/// Centrality against the quantum-symmetric-pair generators:
/// [qtrace_aux(K), g] = 0 for every generator matrix g.
pub fn check_centrality_bs(k: &OperatorMatrix, gens: &CoidealGenerators) -> Report {
    let c = qtrace_aux(k);
    let zero = TensorOperator::zero(k.rep_dim(), 1);
    for (i, g) in &gens.sigma_b {
        let rep = Report::compare(
            format!("centrality_bs:sigma_b({i})"),
            &commutator(&c, g).unwrap(),
            &zero,
        );
        if !rep.passed {
            return rep;
        }
    }
    for (i, g) in &gens.tau_gens {
        let rep = Report::compare(
            format!("centrality_bs:tau({i})"),
            &commutator(&c, g).unwrap(),
            &zero,
        );
        if !rep.passed {
            return rep;
        }
    }
    Report::pass("centrality_bs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::grassmann_matrix;
    use crate::relations::check_operator_reflection;
    use crate::scalar::parse_scalar;
    use crate::tensor::leg_embed;

    fn sc(t: &str, n: u32) -> Scalar {
        parse_scalar(t, n).unwrap()
    }

    #[test]
    fn k_from_identity_is_r21_r12() {
        let n = 2;
        let r = r_matrix(n).unwrap();
        let p = flip(n);
        let r21 = p.mul(&r).unwrap().mul(&p).unwrap();
        let want = r21.mul(&r).unwrap();
        let k = build_k_operator(&CharacterMatrix::identity(n), n).unwrap();
        assert_eq!(k.flat_op().unwrap(), want);
    }

    #[test]
    fn k_entries_match_index_contraction() {
        // independent index-by-index contraction oracle at n = 2
        let n = 2;
        let r = r_matrix(n).unwrap();
        let re = |i: usize, j: usize, k: usize, l: usize| {
            r.get((i - 1) * n + (j - 1), (k - 1) * n + (l - 1)).clone()
        };
        let g = grassmann_matrix(2, &Scalar::s(), &Scalar::one()).unwrap();
        let kop = build_k_operator(&g, n).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for m in 1..=n {
                        let mut want = Scalar::zero();
                        for a in 1..=n {
                            for b in 1..=n {
                                for l in 1..=n {
                                    want = want.add(
                                        &re(k, i, l, a).mul(g.get(a, b)).mul(&re(b, l, j, m)),
                                    );
                                }
                            }
                        }
                        assert_eq!(kop.block(i, j).get(k - 1, m - 1), &want, "K^{i}_{j} [{k},{m}]");
                    }
                }
            }
        }
    }

    #[test]
    fn k_scales_linearly() {
        let n = 2;
        let g = grassmann_matrix(2, &Scalar::s(), &Scalar::one()).unwrap();
        let c = sc("q^2 + 1", 1);
        let lhs = build_k_operator(&g.scale(&c), n).unwrap();
        let rhs = build_k_operator(&g, n).unwrap().scale(&c);
        assert_eq!(lhs, rhs);
        // and the q-trace scales with it
        assert_eq!(qtrace_aux(&lhs), qtrace_aux(&rhs));
    }

    #[test]
    fn grid_flat_round_trip() {
        let g = grassmann_matrix(2, &Scalar::s(), &Scalar::one()).unwrap();
        let k = build_k_operator(&g, 2).unwrap();
        let flat = k.flat_op().unwrap();
        assert_eq!(OperatorMatrix::from_flat(&flat).unwrap(), k);
    }

    #[test]
    fn qtrace_aux_identity_character_is_scalar() {
        // image of a central element of U on the simple module V
        let n = 2;
        let k = build_k_operator(&CharacterMatrix::identity(n), n).unwrap();
        let c = qtrace_aux(&k);
        let expect = TensorOperator::identity(n, 1).scale(&sc("q^2 + q^-2", 1));
        assert_eq!(c, expect);
        assert!(check_centrality_bf(&k).passed);
    }

    #[test]
    fn qtrace_aux_grassmann_fixture() {
        // frozen regression value computed by the flat product
        let g = grassmann_matrix(2, &Scalar::s(), &Scalar::one()).unwrap();
        let k = build_k_operator(&g, 2).unwrap();
        let c = qtrace_aux(&k);
        assert_eq!(c.get(0, 0), &sc("s*q^2 - s", 1));
        assert_eq!(c.get(0, 1), &sc("q^-3 - q^-1", 1));
        assert_eq!(c.get(1, 0), &sc("1 - q^2", 1));
        assert_eq!(c.get(1, 1), &sc("s - s*q^-2", 1));
        assert!(check_centrality_bf(&k).passed);
    }

    #[test]
    fn zero_operator_matrix_traces_to_zero() {
        let zero = OperatorMatrix::from_grid(
            2,
            2,
            vec![TensorOperator::zero(2, 1); 4],
        )
        .unwrap();
        assert_eq!(qtrace_aux(&zero), TensorOperator::zero(2, 1));
    }

    #[test]
    fn operator_reflection_for_battery() {
        let n = 2;
        let r = r_matrix(n).unwrap();
        for m in [
            CharacterMatrix::identity(n),
            grassmann_matrix(n, &Scalar::s(), &Scalar::one()).unwrap(),
        ] {
            let k = build_k_operator(&m, n).unwrap();
            assert!(check_operator_reflection(&k, &r).unwrap().passed);
            assert!(check_centrality_bf(&k).passed);
        }
        // perturbing one entry breaks both
        let g = grassmann_matrix(n, &Scalar::s(), &Scalar::one()).unwrap();
        let mut k = build_k_operator(&g, n).unwrap();
        let mut b = k.block(1, 1).clone();
        b.set(0, 0, b.get(0, 0).add(&Scalar::one()));
        k.set_block(1, 1, b);
        assert!(!check_operator_reflection(&k, &r).unwrap().passed);
        assert!(!check_centrality_bf(&k).passed);
    }

    #[test]
    fn coideal_generator_matrices() {
        // n = 2: only sigma(B_1) = -y t - t^{-1} x t + s t
        let gens = grassmann_coideal_generators(2, &Scalar::s()).unwrap();
        assert_eq!(gens.sigma_b.len(), 1);
        assert!(gens.tau_gens.is_empty());
        let b = &gens.sigma_b[0].1;
        assert_eq!(b.get(0, 0), &sc("s*q", 1));
        assert_eq!(b.get(0, 1), &sc("-q^-2", 1));
        assert_eq!(b.get(1, 0), &sc("-q", 1));
        assert_eq!(b.get(1, 1), &sc("s*q^-1", 1));

        // n = 4: sigma(B_1) = -y_1 t_1 - t_3^{-1} x_3 t_1
        let gens = grassmann_coideal_generators(4, &Scalar::s()).unwrap();
        assert_eq!(gens.sigma_b.len(), 3);
        assert_eq!(gens.tau_gens.len(), 2);
        let gs = vector_rep(4);
        let want = gs.y[0]
            .mul(&gs.t[0])
            .unwrap()
            .add(&gs.t_inv[2].mul(&gs.x[2]).unwrap().mul(&gs.t[0]).unwrap())
            .unwrap()
            .scale(&Scalar::from_int(-1));
        assert_eq!(gens.sigma_b[0].1, want);

        // tau(omega_1 - omega_3) is diagonal with the Gram pairing exponents
        let w = WeightVector::fundamental(1, 4).add(&WeightVector::fundamental(3, 4).neg());
        for j in 1..=4 {
            let eq = w.pairing_with_basis_weight_times_n(j);
            assert_eq!(
                gens.tau_gens[0].1.get(j - 1, j - 1),
                &Scalar::q_pow(eq, 4)
            );
        }

        assert!(matches!(
            grassmann_coideal_generators(3, &Scalar::s()),
            Err(Error::OddDimension(3))
        ));
    }

    #[test]
    fn grassmann_centrality_bs_n2() {
        let s = Scalar::s();
        let g = grassmann_matrix(2, &s, &Scalar::one()).unwrap();
        let k = build_k_operator(&g, 2).unwrap();
        let gens = grassmann_coideal_generators(2, &s).unwrap();
        assert!(check_centrality_bs(&k, &gens).passed);
    }

    #[test]
    fn mismatched_parameter_fails_bs() {
        // K built at parameter s, generators at s + 1: a genuinely wrong
        // pairing that the checker rejects
        let s = Scalar::s();
        let g = grassmann_matrix(2, &s, &Scalar::one()).unwrap();
        let k = build_k_operator(&g, 2).unwrap();
        let shifted = s.add(&Scalar::one());
        let gens = grassmann_coideal_generators(2, &shifted).unwrap();
        let rep = check_centrality_bs(&k, &gens);
        assert!(!rep.passed);
    }

    #[test]
    fn flat_and_embedded_forms_agree_under_rtt() {
        // the flat operator viewed on legs [1,3] of three legs reproduces
        // the grid blocks
        let g = grassmann_matrix(2, &Scalar::s(), &Scalar::one()).unwrap();
        let k = build_k_operator(&g, 2).unwrap();
        let flat = k.flat_op().unwrap();
        let emb = leg_embed(&flat, 3, &[1, 3]).unwrap();
        // entry ((i,a,k),(j,a,m)) = (K^i_j)_{k,m}
        for i in 0..2 {
            for j in 0..2 {
                for kk in 0..2 {
                    for m in 0..2 {
                        let row = i * 4 + 0 * 2 + kk;
                        let col = j * 4 + 0 * 2 + m;
                        assert_eq!(emb.get(row, col), k.block(i + 1, j + 1).get(kk, m));
                    }
                }
            }
        }
    }
}
