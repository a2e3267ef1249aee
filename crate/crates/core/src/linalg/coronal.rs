//! The generalized coronal `Γ_M(x, α) = 1ᵀ (xI − M∘(αJ + (1−α)I))⁻¹ 1` and the
//! rank-one determinant identity built on it.

use super::dense::{Lu, SymMatrix};
use crate::error::{Error, Result};

/// `α J + (1 − α) I`: off-diagonal entries scaled by `α`, diagonal kept.
pub fn coronal_mask(order: usize, alpha: f64) -> SymMatrix {
    SymMatrix::from_fn(order, |i, j| if i == j { 1.0 } else { alpha })
}

/// Sum of the entries of `(xI − M∘B)⁻¹`, from one linear solve against `1`.
pub fn coronal(m: &SymMatrix, x: f64, alpha: f64) -> Result<f64> {
    let n = m.order();
    let system = m.hadamard(&coronal_mask(n, alpha)).shifted(x);
    let y = system.solve(&vec![1.0; n])?;
    Ok(y.iter().sum())
}

/// Closed form of the coronal of a regular graph's normalized Laplacian:
/// every row of `𝓛∘B` sums to `1 − α`, so `Γ = n / (x + α − 1)`.
pub fn coronal_regular_closed(n: usize, x: f64, alpha: f64) -> Result<f64> {
    let denom = x + alpha - 1.0;
    if denom == 0.0 {
        return Err(Error::Singular(format!("pole at x + α − 1 = 0 (x = {x}, α = {alpha})")));
    }
    Ok(n as f64 / denom)
}

/// Both sides of `det(xI − A − αJ) = (1 − α Γ_A(x, 1)) · det(xI − A)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankOneSides {
    pub lhs: f64,
    pub rhs: f64,
}

impl RankOneSides {
    pub fn agrees(&self, rel_tol: f64) -> bool {
        (self.lhs - self.rhs).abs() <= rel_tol * self.lhs.abs().max(1.0)
    }
}

pub fn det_rank_one_identity(a: &SymMatrix, alpha: f64, x: f64) -> Result<RankOneSides> {
    let n = a.order();
    let lhs = a.combine(1.0, &SymMatrix::ones(n), alpha).shifted(x).determinant();
    let base = a.shifted(x);
    let lu = Lu::factor(&base);
    let gamma: f64 = lu.solve(&vec![1.0; n])?.iter().sum();
    let rhs = (1.0 - alpha * gamma) * lu.determinant();
    Ok(RankOneSides { lhs, rhs })
}
