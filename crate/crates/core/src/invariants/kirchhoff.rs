use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, RegularProfile};
use crate::linalg::{Lu, SymMatrix};
use crate::spectra::{check_factors, nl_spectrum_direct, Spectrum};

/// `Kf*(G) = 2m · Σ_{i≥2} 1/λᵢ` over the normalized Laplacian spectrum.
pub fn degree_kirchhoff_spectral(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.order() == 1 {
        return Ok(0.0);
    }
    let s = nl_spectrum_direct(g)?;
    let v = s.values();
    if v[1] < 1e-9 {
        return Err(Error::Disconnected);
    }
    Ok(2.0 * g.size() as f64 * v[1..].iter().map(|x| 1.0 / x).sum::<f64>())
}

/// Effective resistances `r_ij = X_ii + X_jj − 2X_ij` with `X` the Laplacian
/// pseudoinverse, obtained from `(L + J/n) X = I − J/n`.
pub fn resistance_matrix(g: &Graph) -> Result<Vec<Vec<f64>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let inv_n = 1.0 / n as f64;
    let deg = g.degrees();
    let m = SymMatrix::from_fn(n, |i, j| {
        let l = if i == j {
            deg[i] as f64
        } else if g.has_edge(i, j) {
            -1.0
        } else {
            0.0
        };
        l + inv_n
    });
    let lu = Lu::factor(&m);
    let cols: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let rhs: Vec<f64> = (0..n).map(|i| if i == j { 1.0 - inv_n } else { -inv_n }).collect();
            lu.solve(&rhs)
        })
        .collect::<Result<_>>()?;
    // cols[j][i] = X_ij, and X is symmetric
    Ok((0..n)
        .map(|i| (0..n).map(|j| cols[i][i] + cols[j][j] - 2.0 * cols[j][i]).collect())
        .collect())
}

/// `Kf*(G) = Σ_{i<j} dᵢ dⱼ r_ij`.
pub fn degree_kirchhoff_resistance(g: &Graph) -> Result<f64> {
    let r = resistance_matrix(g)?;
    let d = g.degrees();
    let mut total = 0.0;
    for i in 0..g.order() {
        for j in i + 1..g.order() {
            total += (d[i] * d[j]) as f64 * r[i][j];
        }
    }
    Ok(total)
}

/// Degree-Kirchhoff index of the subdivision-vertex join from the factor spectra.
pub fn sv_join_kirchhoff_closed(p1: &RegularProfile, mu: &Spectrum, p2: &RegularProfile, nu: &Spectrum) -> Result<f64> {
    check_factors(p1, mu, p2, nu)?;
    let (n1, m1, r1) = (p1.n as f64, p1.m as f64, p1.r as f64);
    let (n2, r2) = (p2.n as f64, p2.r as f64);
    let prefactor = n1 * r1 + n2 * r2 + 2.0 * n1 * n2 + 2.0 * m1;
    let special = (r1 + n2) * (2.0 * r2 + 3.0 * n1) / (2.0 * n1 * r1 + 2.0 * n1 * n2 + n2 * r2);
    let from_g1: f64 = mu.values()[1..].iter().map(|m| 4.0 * (r1 + n2) / (2.0 * n2 + r1 * m)).sum();
    let from_g2: f64 = nu.values()[1..].iter().map(|v| (r2 + n1) / (n1 + r2 * v)).sum();
    Ok(prefactor * (m1 - n1 + special + from_g1 + from_g2))
}

/// Degree-Kirchhoff index of the subdivision-edge join from the factor spectra.
pub fn se_join_kirchhoff_closed(p1: &RegularProfile, mu: &Spectrum, p2: &RegularProfile, nu: &Spectrum) -> Result<f64> {
    check_factors(p1, mu, p2, nu)?;
    let (n1, m1, r1) = (p1.n as f64, p1.m as f64, p1.r as f64);
    let (n2, r2) = (p2.n as f64, p2.r as f64);
    let prefactor = n1 * r1 + n2 * r2 + 2.0 * m1 * n2 + 2.0 * m1;
    let special = (2.0 + n2) * (2.0 * r2 + 3.0 * m1) / (4.0 * m1 + 2.0 * m1 * n2 + n2 * r2);
    let from_g1: f64 = mu.values()[1..].iter().map(|m| (4.0 + 2.0 * n2) / (n2 + m)).sum();
    let from_g2: f64 = nu.values()[1..].iter().map(|v| (r2 + m1) / (m1 + r2 * v)).sum();
    Ok(prefactor * (m1 - n1 + special + from_g1 + from_g2))
}

/// `|a − b| / |a|`, or `|b|` when `a = 0`.
pub fn relative_difference(a: f64, b: f64) -> f64 {
    if a == 0.0 {
        b.abs()
    } else {
        (a - b).abs() / a.abs()
    }
}
