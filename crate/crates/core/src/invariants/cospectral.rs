use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, regular_profile, Graph, JoinKind};
use crate::linalg::{
    adjacency_charpoly_with_limit, fraction_string, monic_rational_form, pencil_charpoly_with_limit, DEFAULT_SIZE_GUARD,
};

/// Which characteristic polynomial a certificate compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateKind {
    /// `det(xD − A) / det D`, whose roots are `1 − λ` over the normalized
    /// Laplacian eigenvalues
    #[serde(rename = "normalized-laplacian")]
    NormalizedLaplacian,
    /// `det(xI − A)`
    #[serde(rename = "adjacency")]
    Adjacency,
}

/// Exact comparison of two monic rational characteristic polynomials.
/// Coefficients are lowest degree first, written `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CospectralCertificate {
    pub kind: CertificateKind,
    pub poly_a: Vec<String>,
    pub poly_b: Vec<String>,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub isomorphic: Option<bool>,
}

impl CospectralCertificate {
    fn new(kind: CertificateKind, a: &[BigRational], b: &[BigRational]) -> Self {
        CospectralCertificate {
            kind,
            poly_a: a.iter().map(fraction_string).collect(),
            poly_b: b.iter().map(fraction_string).collect(),
            equal: a == b,
            isomorphic: None,
        }
    }

    /// Equal polynomials on graphs known not to be isomorphic.
    pub fn is_nontrivial_pair(&self) -> bool {
        self.equal && self.isomorphic == Some(false)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Knobs shared by the certificate builders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// also decide isomorphism
    pub check_iso: bool,
    /// largest order accepted by the exact determinant evaluation
    pub size_limit: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            check_iso: false,
            size_limit: DEFAULT_SIZE_GUARD,
        }
    }
}

impl CertifyOptions {
    pub fn with_iso(mut self) -> Self {
        self.check_iso = true;
        self
    }

    pub fn with_limit(mut self, size_limit: usize) -> Self {
        self.size_limit = size_limit;
        self
    }
}

/// Normalized-Laplacian cospectrality certificate from the integer pencil
/// `det(xD − A)`.
pub fn exact_cospectral(g: &Graph, h: &Graph, opts: CertifyOptions) -> Result<CospectralCertificate> {
    let a = monic_rational_form(&pencil_charpoly_with_limit(g, opts.size_limit)?);
    let b = monic_rational_form(&pencil_charpoly_with_limit(h, opts.size_limit)?);
    let mut cert = CospectralCertificate::new(CertificateKind::NormalizedLaplacian, &a, &b);
    if opts.check_iso {
        cert.isomorphic = Some(is_isomorphic(g, h));
    }
    Ok(cert)
}

/// Adjacency cospectrality certificate from `det(xI − A)`.
pub fn exact_adjacency_cospectral(g: &Graph, h: &Graph, opts: CertifyOptions) -> Result<CospectralCertificate> {
    let rational = |g: &Graph| -> Result<Vec<BigRational>> {
        Ok(adjacency_charpoly_with_limit(g, opts.size_limit)?
            .coefficients()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect())
    };
    let mut cert = CospectralCertificate::new(CertificateKind::Adjacency, &rational(g)?, &rational(h)?);
    if opts.check_iso {
        cert.isomorphic = Some(is_isomorphic(g, h));
    }
    Ok(cert)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CospectralJoinPair {
    pub g: Graph,
    pub h: Graph,
    pub certificate: CospectralCertificate,
}

/// Joins `g1` with `h1` and `g2` with `h2`, then certifies the two joins.
/// Each factor pair must consist of regular graphs of equal degree with
/// equal adjacency polynomials, which for regular graphs is the same as
/// normalized Laplacian cospectrality and also covers edgeless factors.
pub fn build_cospectral_join_pair(
    g1: &Graph,
    g2: &Graph,
    h1: &Graph,
    h2: &Graph,
    kind: JoinKind,
    opts: CertifyOptions,
) -> Result<CospectralJoinPair> {
    let profile = |name: &str, g: &Graph| regular_profile(g).map_err(|e| Error::Domain(format!("{name}: {e}")));
    for (a, b, na, nb) in [(g1, g2, "g1", "g2"), (h1, h2, "h1", "h2")] {
        let (pa, pb) = (profile(na, a)?, profile(nb, b)?);
        if pa.r != pb.r {
            return Err(Error::Domain(format!("{na} is {}-regular but {nb} is {}-regular", pa.r, pb.r)));
        }
        if !exact_adjacency_cospectral(a, b, CertifyOptions { check_iso: false, ..opts })?.equal {
            return Err(Error::Domain(format!("{na} and {nb} are not cospectral")));
        }
    }
    let g = kind.join(g1, h1).0;
    let h = kind.join(g2, h2).0;
    let certificate = exact_cospectral(&g, &h, opts)?;
    Ok(CospectralJoinPair { g, h, certificate })
}
