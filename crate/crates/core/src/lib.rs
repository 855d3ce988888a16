//! Exact symbolic verification of quantum-group identities for the vector
//! representation of U_q(sl_n): the R-matrix and its Yang-Baxter, braid and
//! Hecke relations, numerical and operator-valued reflection-equation
//! solutions, quantum determinants, coideal central elements, and the
//! explicit Grassmannian K-matrix family.  All arithmetic is exact over the
//! fraction field of Q(q^{1/N})[s].

pub mod characters;
pub mod coideal;
pub mod error;
pub mod relations;
pub mod scalar;
pub mod tensor;
pub mod uqsln;

pub use characters::{
    antisymmetrizer_vector, char_eval_monomial, character_from_omega, check_grassmann_invariance,
    check_invertibility_criterion, cylinder_scale, grassmann_matrix, grassmann_parameters,
    normalize_sl_character, omega_from_character, qdet_antisym, qdet_monomial_oracle,
    CharEvaluator, CharacterMatrix, OmegaMatrix, ReVariant, SlNormalization,
};
pub use coideal::{
    build_k_operator, check_centrality_bf, check_centrality_bs, grassmann_coideal_generators,
    qtrace_aux, CoidealGenerators, OperatorMatrix,
};
pub use error::{Error, Result};
pub use relations::{
    check_braid, check_four_braid, check_hecke, check_operator_reflection, check_qybe,
    check_reflection, check_rtt, type_b_relation_reports, type_b_rep, Report, TMatrix, Witness,
};
pub use scalar::{arith, parse_scalar, print_scalar, ArithKind, LaurentPoly, Rational, Scalar};
pub use tensor::{
    apply_on_legs, commutator, det_fraction_free, flatten, flip, inverse, kron, leg_embed,
    permutation_op, unflatten, TensorOperator, TensorVector,
};
pub use uqsln::{
    coproduct_on_pair, qtrace, r_matrix, r_matrix_with_order, rhat, tau_action, vector_rep, Gen,
    GeneratorSet, WeightVector,
};
