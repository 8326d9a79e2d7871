//! Small dense complex matrices, Kronecker utilities, factorizations,
//! and root finding (polynomial and on torus cells).
//!
//! The tensor index convention is normative for every bracket comparison:
//! `(A kron B)[(i,k),(j,l)] = A[i,j] B[k,l]` with flattened row index
//! `i*N + k` for an `N x N` second factor.

mod factor;
mod matrix;
mod poly;
mod torus;

pub use factor::{char_poly, det, eigenvalues, inverse, kernel_vector, solve, svd, Svd};
pub use matrix::{anticommutator, commutator, embed_pair, kron, permutation_matrix, CMatrix};
pub use poly::{eval_poly, eval_poly_deriv, poly_roots};
pub use torus::{torus_root_sum, torus_roots, TorusDomain};
