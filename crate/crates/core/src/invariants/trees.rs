use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{regular_profile, Graph, RegularProfile};
use crate::linalg::IntMatrix;
use crate::spectra::{check_factors, nl_spectrum_direct, RegularFactor, Spectrum};

/// Exact count from any principal cofactor of `D − A`; 0 when disconnected.
pub fn spanning_trees_matrix_tree(g: &Graph) -> BigInt {
    if g.order() == 0 {
        return BigInt::zero();
    }
    IntMatrix::laplacian(g).minor(0).determinant()
}

/// `(1/2m) · Π dᵢ · Π_{j≥2} λⱼ` over the normalized Laplacian spectrum,
/// accumulated in log space.
pub fn spanning_trees_spectral(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let s = nl_spectrum_direct(g)?;
    let v = s.values();
    if v.len() > 1 && v[1] < 1e-9 {
        return Err(Error::Disconnected);
    }
    let log_deg: f64 = g.degrees().iter().map(|&d| (d as f64).ln()).sum();
    let log_eig: f64 = v[1..].iter().map(|x| x.ln()).sum();
    Ok((log_deg + log_eig - (2.0 * g.size() as f64).ln()).exp())
}

/// Closed-form tree count of a join: the floating-point evaluation from the
/// factor spectra next to the same product evaluated in exact arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeCount {
    pub estimate: f64,
    pub count: BigInt,
}

impl TreeCount {
    /// `|estimate − count| / count`.
    pub fn relative_deviation(&self) -> f64 {
        let c = to_f64(&self.count);
        if c == 0.0 {
            self.estimate.abs()
        } else {
            (self.estimate - c).abs() / c
        }
    }
}

fn to_f64(x: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::INFINITY)
}

/// `2^{m₁−n₁+1} · Π_{i≥2}(2n₂ + r₁μᵢ) · Π_{j≥2}(n₁ + r₂νⱼ)` in floating point.
pub fn sv_join_trees_formula(p1: &RegularProfile, mu: &Spectrum, p2: &RegularProfile, nu: &Spectrum) -> Result<f64> {
    check_factors(p1, mu, p2, nu)?;
    let (n1, m1, r1) = (p1.n as f64, p1.m as f64, p1.r as f64);
    let (n2, r2) = (p2.n as f64, p2.r as f64);
    let log = (m1 - n1 + 1.0) * 2f64.ln()
        + mu.values()[1..].iter().map(|m| (2.0 * n2 + r1 * m).ln()).sum::<f64>()
        + nu.values()[1..].iter().map(|v| (n1 + r2 * v).ln()).sum::<f64>();
    Ok(log.exp())
}

/// `r₁^{n₁} (2+n₂)^{m₁−n₁} · Π_{i≥2}(n₂ + μᵢ) · Π_{j≥2}(m₁ + r₂νⱼ)` in floating point.
pub fn se_join_trees_formula(p1: &RegularProfile, mu: &Spectrum, p2: &RegularProfile, nu: &Spectrum) -> Result<f64> {
    check_factors(p1, mu, p2, nu)?;
    let (n1, m1, r1) = (p1.n as f64, p1.m as f64, p1.r as f64);
    let (n2, r2) = (p2.n as f64, p2.r as f64);
    let log = n1 * r1.ln()
        + (m1 - n1) * (2.0 + n2).ln()
        + mu.values()[1..].iter().map(|m| (n2 + m).ln()).sum::<f64>()
        + nu.values()[1..].iter().map(|v| (m1 + r2 * v).ln()).sum::<f64>();
    Ok(log.exp())
}

/// `Π_{i≥2}(c + θᵢ)` over the combinatorial Laplacian eigenvalues `θ` of `g`
/// (with `θ₁ = 0` dropped), as `det(cI + L) / c`.
fn shifted_laplacian_product(g: &Graph, c: usize) -> Result<BigInt> {
    let mut m = IntMatrix::laplacian(g);
    for i in 0..g.order() {
        let d = m.get(i, i) + BigInt::from(c);
        m.set(i, i, d);
    }
    let (q, r) = m.determinant().div_rem(&BigInt::from(c));
    if !r.is_zero() {
        return Err(Error::Consistency(format!("det(cI + L) not divisible by c = {c}")));
    }
    Ok(q)
}

fn factor_profiles(g1: &Graph, g2: &Graph) -> Result<(RegularProfile, RegularProfile)> {
    let p1 = regular_profile(g1)?;
    let p2 = regular_profile(g2)?;
    if p1.r < 2 {
        return Err(Error::Domain(format!(
            "closed forms need the first factor to be r-regular with r ≥ 2, got r = {}",
            p1.r
        )));
    }
    Ok((p1, p2))
}

/// The subdivision-vertex tree product in exact integer arithmetic, using
/// `r₁μᵢ` and `r₂νⱼ` as combinatorial Laplacian eigenvalues of the factors.
pub fn sv_join_trees_exact(g1: &Graph, g2: &Graph) -> Result<BigInt> {
    let (p1, p2) = factor_profiles(g1, g2)?;
    let a = shifted_laplacian_product(g1, 2 * p2.n)?;
    let b = shifted_laplacian_product(g2, p1.n)?;
    Ok(num_traits::pow(BigInt::from(2), p1.m - p1.n + 1) * a * b)
}

/// The subdivision-edge tree product in exact integer arithmetic. The
/// `r₁^{n₁}` prefactor absorbs the denominators of `n₂ + θᵢ/r₁`.
pub fn se_join_trees_exact(g1: &Graph, g2: &Graph) -> Result<BigInt> {
    let (p1, p2) = factor_profiles(g1, g2)?;
    let a = shifted_laplacian_product(g1, p1.r * p2.n)? * BigInt::from(p1.r);
    let b = shifted_laplacian_product(g2, p1.m)?;
    Ok(num_traits::pow(BigInt::from(2 + p2.n), p1.m - p1.n) * a * b)
}

pub fn sv_join_trees_closed(g1: &Graph, g2: &Graph) -> Result<TreeCount> {
    let count = sv_join_trees_exact(g1, g2)?;
    let (f1, f2) = (RegularFactor::of(g1)?, RegularFactor::of(g2)?);
    let estimate = sv_join_trees_formula(&f1.profile, &f1.spectrum, &f2.profile, &f2.spectrum)?;
    Ok(TreeCount { estimate, count })
}

pub fn se_join_trees_closed(g1: &Graph, g2: &Graph) -> Result<TreeCount> {
    let count = se_join_trees_exact(g1, g2)?;
    let (f1, f2) = (RegularFactor::of(g1)?, RegularFactor::of(g2)?);
    let estimate = se_join_trees_formula(&f1.profile, &f1.spectrum, &f2.profile, &f2.spectrum)?;
    Ok(TreeCount { estimate, count })
}

/// Nearest integer to a non-negative float.
pub fn round_to_integer(x: f64) -> BigInt {
    num_traits::FromPrimitive::from_f64(x.round()).unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::graph::{generate, se_join, sv_join, Family};

    fn g(f: Family, p: &[usize]) -> Graph {
        generate(f, p).unwrap()
    }

    #[test]
    fn matrix_tree_examples() {
        assert_eq!(spanning_trees_matrix_tree(&g(Family::Complete, &[4])), BigInt::from(16));
        assert_eq!(spanning_trees_matrix_tree(&g(Family::Cycle, &[5])), BigInt::from(5));
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_trees_matrix_tree(&two_k2), BigInt::zero());
        assert_eq!(spanning_trees_matrix_tree(&Graph::empty(1)), BigInt::one());
        assert_eq!(spanning_trees_matrix_tree(&g(Family::Petersen, &[])), BigInt::from(2000));
    }

    #[test]
    fn spectral_examples() {
        for (f, p, t) in [
            (Family::Complete, vec![2], 1.0),
            (Family::Complete, vec![3], 3.0),
            (Family::Cycle, vec![4], 4.0),
        ] {
            let s = spanning_trees_spectral(&g(f, &p)).unwrap();
            assert!((s - t).abs() < 1e-12 * t, "{f} {s}");
        }
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(spanning_trees_spectral(&two_k2), Err(Error::Disconnected)));
    }

    #[test]
    fn closed_candidates() {
        let (k3, k2) = (g(Family::Complete, &[3]), g(Family::Complete, &[2]));
        let t = sv_join_trees_closed(&k3, &k2).unwrap();
        assert_eq!(t.count, BigInt::from(490));
        assert_eq!(t.count, spanning_trees_matrix_tree(&sv_join(&k3, &k2).0));
        assert!(t.relative_deviation() < 1e-12);

        let c4 = g(Family::Cycle, &[4]);
        let t = sv_join_trees_closed(&c4, &Graph::empty(1)).unwrap();
        assert_eq!(t.count, BigInt::from(192));
        assert_eq!(round_to_integer(t.estimate), BigInt::from(192));

        let c3 = g(Family::Cycle, &[3]);
        let t = se_join_trees_closed(&c3, &Graph::empty(1)).unwrap();
        assert_eq!(t.count, BigInt::from(50));
        assert_eq!(t.count, spanning_trees_matrix_tree(&se_join(&c3, &Graph::empty(1)).0));
    }

    #[test]
    fn closed_preconditions() {
        let k2 = g(Family::Complete, &[2]);
        assert!(sv_join_trees_exact(&k2, &k2).is_err());
        assert!(se_join_trees_exact(&g(Family::Path, &[3]), &k2).is_err());
    }
}
