//! Dense floating-point and exact integer linear algebra.

mod coronal;
mod dense;
mod exact;

pub use coronal::{coronal, coronal_mask, coronal_regular_closed, det_rank_one_identity, RankOneSides};
pub use dense::{jacobi_eigenvalues, SymMatrix};
pub(crate) use dense::Lu;
pub use exact::{
    adjacency_charpoly, adjacency_charpoly_with_limit, bareiss_det, fraction_string, monic_rational_form,
    pencil_charpoly, pencil_charpoly_with_limit, ExactCharPoly, IntMatrix, IntPolynomial, DEFAULT_SIZE_GUARD,
};
