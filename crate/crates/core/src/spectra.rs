//! Normalized Laplacian spectra: direct computation and the closed forms for
//! subdivision-vertex and subdivision-edge joins of regular graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{regular_profile, Graph, RegularProfile};
use crate::linalg::{jacobi_eigenvalues, SymMatrix};

/// Default tolerance for grouping equal eigenvalues into multiplicities.
pub const GROUPING_TOL: f64 = 1e-7;
/// Default per-eigenvalue relative tolerance for spectrum comparison.
pub const COMPARE_TOL: f64 = 1e-9;
/// Discriminants within this distance of zero give a double root.
pub const DISCRIMINANT_FLOOR: f64 = 1e-12;

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut a = SymMatrix::zeros(g.order());
    for (u, v) in g.edges() {
        a.set(u, v, 1.0);
    }
    a
}

/// `I − D^{-1/2} A D^{-1/2}`. Undefined when some vertex is isolated.
pub fn normalized_laplacian(g: &Graph) -> Result<SymMatrix> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let d = g.degrees();
    let mut l = SymMatrix::identity(g.order());
    for (u, v) in g.edges() {
        l.set(u, v, -1.0 / ((d[u] * d[v]) as f64).sqrt());
    }
    Ok(l)
}

/// Ascending multiset of real eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tolerance: f64,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum {
            values,
            tolerance: GROUPING_TOL,
        }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Number of eigenvalues within the grouping tolerance of `x`.
    pub fn multiplicity_of(&self, x: f64) -> usize {
        self.values
            .iter()
            .filter(|&&v| (v - x).abs() <= self.tolerance * x.abs().max(1.0))
            .count()
    }

    /// `(value, multiplicity)` groups; a group's value is the mean of its members.
    pub fn groups(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut start = f64::NAN;
        let mut acc = 0.0;
        for &v in &self.values {
            match out.last_mut() {
                Some((mean, count)) if v - start <= self.tolerance * start.abs().max(1.0) => {
                    acc += v;
                    *count += 1;
                    *mean = acc / *count as f64;
                }
                _ => {
                    start = v;
                    acc = v;
                    out.push((v, 1));
                }
            }
        }
        out
    }

    /// Checks the normalized-Laplacian shape: smallest value 0, largest at
    /// most 2, trace equal to the order.
    pub fn check_normalized(&self) -> Result<()> {
        let n = self.len();
        let Some((&min, &max)) = self.values.first().zip(self.values.last()) else {
            return Ok(());
        };
        if min.abs() > self.tolerance {
            return Err(Error::Consistency(format!("smallest eigenvalue {min} is not 0")));
        }
        if max > 2.0 + 1e-9 {
            return Err(Error::Consistency(format!("largest eigenvalue {max} exceeds 2")));
        }
        if (self.sum() - n as f64).abs() > 1e-8 * n as f64 {
            return Err(Error::Consistency(format!("eigenvalues sum to {}, expected {n}", self.sum())));
        }
        Ok(())
    }
}

/// True when both spectra have the same length and, sorted, every pair
/// satisfies `|a − b| ≤ tol · max(1, |a|)`.
pub fn spectra_equal(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    max_relative_deviation(a, b).is_some_and(|d| d <= tol)
}

/// Largest `|a − b| / max(1, |a|)` over sorted pairs; `None` on length mismatch.
pub fn max_relative_deviation(a: &Spectrum, b: &Spectrum) -> Option<f64> {
    (a.len() == b.len()).then(|| {
        a.values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| (x - y).abs() / x.abs().max(1.0))
            .fold(0.0, f64::max)
    })
}

pub fn nl_spectrum_direct(g: &Graph) -> Result<Spectrum> {
    let l = normalized_laplacian(g)?;
    Ok(Spectrum::new(jacobi_eigenvalues(&l)?))
}

/// A regular factor graph reduced to what the closed forms need.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularFactor {
    pub profile: RegularProfile,
    pub spectrum: Spectrum,
}

impl RegularFactor {
    /// Profile and normalized Laplacian spectrum. Edgeless graphs get the
    /// all-zero spectrum, one zero per isolated vertex.
    pub fn of(g: &Graph) -> Result<Self> {
        let profile = regular_profile(g)?;
        let spectrum = if profile.r == 0 {
            Spectrum::new(vec![0.0; profile.n])
        } else {
            nl_spectrum_direct(g)?
        };
        Ok(RegularFactor { profile, spectrum })
    }
}

/// Adjacency spectrum of the line graph of an `r`-regular graph from its
/// normalized Laplacian spectrum: `2(r−1) − r μ` for each `μ`, plus `−2`
/// repeated `m − n` times.
pub fn line_graph_adjacency_spectrum(p: &RegularProfile, mu: &Spectrum) -> Result<Spectrum> {
    if p.r < 2 {
        return Err(Error::Domain(format!("line graph spectrum needs r ≥ 2, got r = {}", p.r)));
    }
    if mu.len() != p.n {
        return Err(Error::Domain(format!("expected {} eigenvalues, got {}", p.n, mu.len())));
    }
    let r = p.r as f64;
    let mut values: Vec<f64> = mu.values().iter().map(|m| 2.0 * (r - 1.0) - r * m).collect();
    values.extend(std::iter::repeat_n(-2.0, p.m - p.n));
    Ok(Spectrum::new(values))
}

/// Monic quadratic `x² + b x + c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quadratic {
    pub b: f64,
    pub c: f64,
}

impl Quadratic {
    pub fn discriminant(&self) -> f64 {
        self.b * self.b - 4.0 * self.c
    }

    /// Both real roots, smaller first. The larger-magnitude root comes from
    /// the quadratic formula, the other from the product `c`.
    pub fn roots(&self) -> Result<(f64, f64)> {
        let disc = self.discriminant();
        if disc < -DISCRIMINANT_FLOOR {
            return Err(Error::Consistency(format!(
                "quadratic x² + ({})x + ({}) has negative discriminant {disc:e}",
                self.b, self.c
            )));
        }
        if disc.abs() <= DISCRIMINANT_FLOOR {
            let r = -self.b / 2.0;
            return Ok((r, r));
        }
        let sign = if self.b >= 0.0 { 1.0 } else { -1.0 };
        let q = -(self.b + sign * disc.sqrt()) / 2.0;
        let (x1, x2) = (q, self.c / q);
        Ok((x1.min(x2), x1.max(x2)))
    }
}

/// A join spectrum in its five structured parts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormSpectrum {
    pub zero: f64,
    /// multiplicity of the eigenvalue 1
    pub ones: usize,
    /// one eigenvalue per non-trivial eigenvalue of the second factor
    pub linear_part: Vec<f64>,
    /// one quadratic per non-trivial eigenvalue of the first factor
    pub quadratic_part: Vec<Quadratic>,
    pub special_quadratic: Quadratic,
}

impl ClosedFormSpectrum {
    pub fn total_len(&self) -> usize {
        1 + self.ones + self.linear_part.len() + 2 * self.quadratic_part.len() + 2
    }

    pub fn flatten(&self) -> Result<Spectrum> {
        flatten(self)
    }
}

pub fn flatten(cf: &ClosedFormSpectrum) -> Result<Spectrum> {
    let mut values = Vec::with_capacity(cf.total_len());
    values.push(cf.zero);
    values.extend(std::iter::repeat_n(1.0, cf.ones));
    values.extend_from_slice(&cf.linear_part);
    for q in cf.quadratic_part.iter().chain(std::iter::once(&cf.special_quadratic)) {
        let (a, b) = q.roots()?;
        values.push(a);
        values.push(b);
    }
    Ok(Spectrum::new(values))
}

pub(crate) fn check_factors(p1: &RegularProfile, mu: &Spectrum, p2: &RegularProfile, nu: &Spectrum) -> Result<()> {
    if p1.r < 2 {
        return Err(Error::Domain(format!(
            "closed forms need the first factor to be r-regular with r ≥ 2, got r = {}",
            p1.r
        )));
    }
    if p2.n == 0 {
        return Err(Error::Domain("second factor has no vertices".into()));
    }
    for (name, p, s) in [("first", p1, mu), ("second", p2, nu)] {
        if s.len() != p.n {
            return Err(Error::Domain(format!(
                "{name} factor: expected {} eigenvalues, got {}",
                p.n,
                s.len()
            )));
        }
        if s.values()[0].abs() > 1e-8 {
            return Err(Error::Domain(format!(
                "{name} factor: smallest eigenvalue {} is not 0",
                s.values()[0]
            )));
        }
    }
    Ok(())
}

/// Normalized Laplacian spectrum of the subdivision-vertex join of an
/// `r1`-regular `G1` and an `r2`-regular `G2`, from the factor spectra.
pub fn sv_join_spectrum_closed(
    p1: &RegularProfile,
    mu: &Spectrum,
    p2: &RegularProfile,
    nu: &Spectrum,
) -> Result<ClosedFormSpectrum> {
    check_factors(p1, mu, p2, nu)?;
    let (n1, m1, r1) = (p1.n as f64, p1.m as f64, p1.r as f64);
    let (n2, r2) = (p2.n as f64, p2.r as f64);

    let linear_part = nu.values()[1..].iter().map(|v| (n1 + r2 * v) / (r2 + n1)).collect();
    let quadratic_part = mu.values()[1..]
        .iter()
        .map(|m| Quadratic {
            b: -2.0,
            c: 1.0 - r1 * (2.0 - m) / (2.0 * (r1 + n2)),
        })
        .collect();
    let special_quadratic = Quadratic {
        b: -(2.0 + n1 / (r2 + n1)),
        c: 2.0 * n1 / (r2 + n1) + n2 * r2 / ((r1 + n2) * (r2 + n1)),
    };
    Ok(ClosedFormSpectrum {
        zero: 0.0,
        ones: (m1 - n1) as usize,
        linear_part,
        quadratic_part,
        special_quadratic,
    })
}

/// Normalized Laplacian spectrum of the subdivision-edge join of an
/// `r1`-regular `G1` and an `r2`-regular `G2`, from the factor spectra.
pub fn se_join_spectrum_closed(
    p1: &RegularProfile,
    mu: &Spectrum,
    p2: &RegularProfile,
    nu: &Spectrum,
) -> Result<ClosedFormSpectrum> {
    check_factors(p1, mu, p2, nu)?;
    let (n1, m1) = (p1.n as f64, p1.m as f64);
    let (n2, r2) = (p2.n as f64, p2.r as f64);

    let linear_part = nu.values()[1..].iter().map(|v| (m1 + r2 * v) / (r2 + m1)).collect();
    let quadratic_part = mu.values()[1..]
        .iter()
        .map(|m| Quadratic {
            b: -2.0,
            c: 1.0 - (2.0 - m) / (2.0 + n2),
        })
        .collect();
    let special_quadratic = Quadratic {
        b: -(2.0 + m1 / (r2 + m1)),
        c: 2.0 * m1 / (r2 + m1) + n2 * r2 / ((2.0 + n2) * (r2 + m1)),
    };
    Ok(ClosedFormSpectrum {
        zero: 0.0,
        ones: (m1 - n1) as usize,
        linear_part,
        quadratic_part,
        special_quadratic,
    })
}

/// How a reported spectrum was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "direct")]
    Direct,
    #[serde(rename = "closed-form-sv")]
    ClosedFormSv,
    #[serde(rename = "closed-form-se")]
    ClosedFormSe,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueGroup {
    pub value: f64,
    pub multiplicity: usize,
}

/// Serialized form of a spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub eigenvalues: Vec<EigenvalueGroup>,
    pub method: Method,
    pub tolerance: f64,
}

impl SpectrumReport {
    pub fn new(spectrum: &Spectrum, method: Method) -> Self {
        SpectrumReport {
            n: spectrum.len(),
            eigenvalues: spectrum
                .groups()
                .into_iter()
                .map(|(value, multiplicity)| EigenvalueGroup { value, multiplicity })
                .collect(),
            method,
            tolerance: spectrum.tolerance(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectrum report serializes")
    }

    /// `value,multiplicity` rows under a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,multiplicity\n");
        for g in &self.eigenvalues {
            out.push_str(&format!("{},{}\n", g.value, g.multiplicity));
        }
        out
    }
}
