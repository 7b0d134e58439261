//! The oscillator realization of `gl_d × gl(m+p|n+q)` on the
//! supersymmetric polynomial ring `ℂ[x, y, η, ζ]`, with explicit highest
//! weight vectors and a linear-algebra search for all of them.
//!
//! Generators are `x^l_i`, `y^l_r` (even) and `η^l_j`, `ζ^l_s` (odd).
//! Polynomials are kept in normal order: bosonic exponents, then fermions
//! with every `ζ` before every `η`.

pub(crate) mod algebra;
pub(crate) mod hwv;
pub(crate) mod kernel;
pub(crate) mod operator;
pub(crate) mod phi;
pub(crate) mod poly;

pub use algebra::{basis, bracket, cartan, index_parity, raising, sigma, AlgebraElement};
pub use hwv::{
    annihilated_by_raising, box_lambda, certify, delta, delta_kr, delta_lambda, delta_star, delta_star_kr,
    delta_star_lambda, eigenvalue, joint_weight, ladder_identity, signed_determinant, Certificate,
};
pub use kernel::{
    joint_hwv_kernel, joint_hwv_kernel_by_weight, monomial_weight, monomials_of_degree, monomials_up_to, nullspace,
    KernelVector,
};
pub use operator::{Factor, SuperOperator};
pub use phi::phi;
pub use poly::{generators, hermitian_form, Generator, Monomial, SuperPolynomial};
