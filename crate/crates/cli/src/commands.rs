use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use specjoin::example32::run_example32;
use specjoin::graph::graph6::write_graph6;
use specjoin::invariants::{
    degree_kirchhoff_resistance, degree_kirchhoff_spectral, exact_cospectral, relative_difference,
    se_join_kirchhoff_closed, se_join_trees_closed, spanning_trees_matrix_tree, sv_join_kirchhoff_closed,
    sv_join_trees_closed, CertifyOptions, InvariantReport,
};
use specjoin::linalg::{coronal, coronal_regular_closed, det_rank_one_identity, jacobi_eigenvalues};
use specjoin::spectra::{
    adjacency_matrix, line_graph_adjacency_spectrum, max_relative_deviation, nl_spectrum_direct,
    normalized_laplacian, se_join_spectrum_closed, sv_join_spectrum_closed, ClosedFormSpectrum, Method,
    RegularFactor, SpectrumReport,
};
use specjoin::{generate, is_isomorphic, line_graph, Error, Family, Graph, JoinKind, PartLabels, PartTag, RegularProfile, Spectrum};

use crate::error::{CliError, CliResult};
use crate::io::{emit, read_graph};
use crate::{CospectralArgs, FormatArg, InvariantsArgs, MethodArg, SpectrumArgs, Theorem, VerifyArgs};

pub fn gen(family: Family, params: &[usize], out: Option<&Path>) -> CliResult<()> {
    let g = generate(family, params).map_err(|e| match e {
        Error::InvalidArgument(msg) => CliError::Usage(msg),
        other => other.into(),
    })?;
    emit(&format!("{}\n", write_graph6(&g)?), out)
}

#[derive(Serialize)]
struct LabelSidecar<'a> {
    original: usize,
    subdivision: usize,
    second: usize,
    #[serde(flatten)]
    labels: &'a PartLabels,
}

pub fn join(kind: JoinKind, g1: &str, g2: &str, out: Option<&Path>, labels: Option<&Path>) -> CliResult<()> {
    let (a, b) = (read_graph(g1)?, read_graph(g2)?);
    let (g, parts) = kind.join(&a, &b);
    let text = format!("{}\n", write_graph6(&g)?);
    if let Some(path) = labels {
        let sidecar = LabelSidecar {
            original: parts.count(PartTag::OriginalOfG1),
            subdivision: parts.count(PartTag::SubdivisionVertex),
            second: parts.count(PartTag::VertexOfG2),
            labels: &parts,
        };
        emit(&format!("{}\n", to_json(&sidecar)), Some(path))?;
    }
    emit(&text, out)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

fn require_g2(g2: Option<&str>, what: &str) -> CliResult<Graph> {
    let path = g2.ok_or_else(|| CliError::Usage(format!("{what} needs a second factor graph")))?;
    read_graph(path)
}

fn factors(g1: &Graph, g2: &Graph) -> CliResult<(RegularFactor, RegularFactor)> {
    let f1 = RegularFactor::of(g1).map_err(|e| CliError::Failed(format!("G1: {e}")))?;
    let f2 = RegularFactor::of(g2).map_err(|e| CliError::Failed(format!("G2: {e}")))?;
    Ok((f1, f2))
}

fn closed_spectrum(kind: JoinKind, f1: &RegularFactor, f2: &RegularFactor) -> CliResult<ClosedFormSpectrum> {
    Ok(match kind {
        JoinKind::Sv => sv_join_spectrum_closed(&f1.profile, &f1.spectrum, &f2.profile, &f2.spectrum)?,
        JoinKind::Se => se_join_spectrum_closed(&f1.profile, &f1.spectrum, &f2.profile, &f2.spectrum)?,
    })
}

#[derive(Serialize)]
struct ClosedSpectrumOutput<'a> {
    #[serde(flatten)]
    report: SpectrumReport,
    factors: [RegularProfile; 2],
    parts: &'a ClosedFormSpectrum,
}

fn tolerance(tol: f64) -> CliResult<f64> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(CliError::Usage(format!("--tol must be a positive number, got {tol}")))
    }
}

pub fn spectrum(a: &SpectrumArgs) -> CliResult<()> {
    let tol = tolerance(a.tol)?;
    let g = read_graph(&a.graph)?;
    let text = match a.method {
        MethodArg::Direct => {
            if a.g2.is_some() {
                return Err(CliError::Usage("--g2 only applies to the closed methods".into()));
            }
            let s = nl_spectrum_direct(&g)?.with_tolerance(tol);
            let report = SpectrumReport::new(&s, Method::Direct);
            match a.format {
                FormatArg::Json => format!("{}\n", report.to_json()),
                FormatArg::Csv => report.to_csv(),
            }
        }
        MethodArg::ClosedSv | MethodArg::ClosedSe => {
            let (kind, method) = if a.method == MethodArg::ClosedSv {
                (JoinKind::Sv, Method::ClosedFormSv)
            } else {
                (JoinKind::Se, Method::ClosedFormSe)
            };
            let g2 = require_g2(a.g2.as_deref(), "a closed method")?;
            let (f1, f2) = factors(&g, &g2)?;
            let cf = closed_spectrum(kind, &f1, &f2)?;
            let s = cf.flatten()?.with_tolerance(tol);
            let report = SpectrumReport::new(&s, method);
            match a.format {
                FormatArg::Json => {
                    let out = ClosedSpectrumOutput {
                        report,
                        factors: [f1.profile, f2.profile],
                        parts: &cf,
                    };
                    format!("{}\n", to_json(&out))
                }
                FormatArg::Csv => {
                    eprintln!("{}", describe_parts(&f1.profile, &f2.profile, &cf));
                    report.to_csv()
                }
            }
        }
    };
    emit(&text, None)
}

fn describe_parts(p1: &RegularProfile, p2: &RegularProfile, cf: &ClosedFormSpectrum) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "G1: n={} m={} r={}", p1.n, p1.m, p1.r);
    let _ = writeln!(s, "G2: n={} m={} r={}", p2.n, p2.m, p2.r);
    let _ = writeln!(s, "zero: {}", cf.zero);
    let _ = writeln!(s, "ones: {}", cf.ones);
    let _ = writeln!(s, "linear part: {} values", cf.linear_part.len());
    let _ = writeln!(s, "quadratic part: {} quadratics", cf.quadratic_part.len());
    let q = cf.special_quadratic;
    let _ = write!(s, "special quadratic: x^2 + ({})x + ({})", q.b, q.c);
    s
}

/// Collects a verification report; the last line is PASS or FAIL.
struct Check {
    text: String,
    passed: bool,
}

impl Check {
    fn new(title: &str) -> Self {
        Check {
            text: format!("{title}\n"),
            passed: true,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn require(&mut self, ok: bool) {
        self.passed &= ok;
    }

    fn finish(mut self) -> CliResult<()> {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        self.line(verdict);
        emit(&self.text, None)?;
        if self.passed {
            Ok(())
        } else {
            Err(CliError::Failed("verification failed".into()))
        }
    }
}

fn profile_line(name: &str, p: &RegularProfile) -> String {
    format!("{name}: n={} m={} r={}", p.n, p.m, p.r)
}

pub fn verify(a: &VerifyArgs) -> CliResult<()> {
    let tol = tolerance(a.tol)?;
    let g1 = read_graph(&a.g1)?;
    match a.theorem {
        Theorem::SvSpectrum => verify_spectrum(JoinKind::Sv, &g1, &require_g2(a.g2.as_deref(), "theorem 2.3")?, tol),
        Theorem::SeSpectrum => verify_spectrum(JoinKind::Se, &g1, &require_g2(a.g2.as_deref(), "theorem 2.4")?, tol),
        Theorem::Kirchhoff => verify_kirchhoff(&g1, &require_g2(a.g2.as_deref(), "theorem 3.3")?, tol),
        Theorem::Trees => verify_trees(&g1, &require_g2(a.g2.as_deref(), "theorem 3.4")?),
        Theorem::LineGraph => verify_line_graph(&g1, tol),
        Theorem::RankOne => verify_rank_one(&g1, tol),
        Theorem::Coronal => verify_coronal(&g1, tol),
    }
}

fn verify_spectrum(kind: JoinKind, g1: &Graph, g2: &Graph, tol: f64) -> CliResult<()> {
    let (f1, f2) = factors(g1, g2)?;
    let closed = closed_spectrum(kind, &f1, &f2)?.flatten()?;
    let direct = nl_spectrum_direct(&kind.join(g1, g2).0)?;
    let title = match kind {
        JoinKind::Sv => "subdivision-vertex join spectrum: closed form vs direct eigensolver",
        JoinKind::Se => "subdivision-edge join spectrum: closed form vs direct eigensolver",
    };
    let mut c = Check::new(title);
    c.line(profile_line("G1", &f1.profile));
    c.line(profile_line("G2", &f2.profile));
    c.line(format!("{:>24} {:>24}", "closed", "direct"));
    let n = closed.len().max(direct.len());
    for i in 0..n {
        let cell = |s: &Spectrum| s.values().get(i).map_or("-".to_string(), |v| format!("{v:.15}"));
        c.line(format!("{:>24} {:>24}", cell(&closed), cell(&direct)));
    }
    match max_relative_deviation(&closed, &direct) {
        Some(d) => {
            c.line(format!("max relative deviation: {d:.3e} (tolerance {tol:e})"));
            c.require(d <= tol);
        }
        None => {
            c.line(format!("length mismatch: {} vs {}", closed.len(), direct.len()));
            c.require(false);
        }
    }
    c.finish()
}

fn verify_kirchhoff(g1: &Graph, g2: &Graph, tol: f64) -> CliResult<()> {
    let (f1, f2) = factors(g1, g2)?;
    let resistance_tol = tol.max(1e-6);
    let mut c = Check::new("degree-Kirchhoff index: closed form vs spectral and resistance oracles");
    c.line(profile_line("G1", &f1.profile));
    c.line(profile_line("G2", &f2.profile));
    for kind in [JoinKind::Sv, JoinKind::Se] {
        let closed = match kind {
            JoinKind::Sv => sv_join_kirchhoff_closed(&f1.profile, &f1.spectrum, &f2.profile, &f2.spectrum)?,
            JoinKind::Se => se_join_kirchhoff_closed(&f1.profile, &f1.spectrum, &f2.profile, &f2.spectrum)?,
        };
        let join = kind.join(g1, g2).0;
        let spectral = degree_kirchhoff_spectral(&join)?;
        let resistance = degree_kirchhoff_resistance(&join)?;
        let (ds, dr) = (relative_difference(spectral, closed), relative_difference(spectral, resistance));
        c.line(format!(
            "{}: closed {closed} spectral {spectral} resistance {resistance}",
            kind.name()
        ));
        c.line(format!(
            "{}: closed/spectral {ds:.3e} (tolerance {tol:e}), resistance/spectral {dr:.3e} (tolerance {resistance_tol:e})",
            kind.name()
        ));
        c.require(ds <= tol && dr <= resistance_tol);
    }
    c.finish()
}

fn verify_trees(g1: &Graph, g2: &Graph) -> CliResult<()> {
    let (f1, f2) = factors(g1, g2)?;
    let mut c = Check::new("spanning trees: closed form vs matrix-tree determinant");
    c.line(profile_line("G1", &f1.profile));
    c.line(profile_line("G2", &f2.profile));
    for kind in [JoinKind::Sv, JoinKind::Se] {
        let t = match kind {
            JoinKind::Sv => sv_join_trees_closed(g1, g2)?,
            JoinKind::Se => se_join_trees_closed(g1, g2)?,
        };
        let oracle = spanning_trees_matrix_tree(&kind.join(g1, g2).0);
        let dev = t.relative_deviation();
        c.line(format!("{}: closed {} matrix-tree {oracle}", kind.name(), t.count));
        c.line(format!(
            "{}: floating-point product {:e}, relative deviation {dev:.3e}",
            kind.name(),
            t.estimate
        ));
        c.require(t.count == oracle && dev <= 1e-6);
    }
    c.finish()
}

fn verify_line_graph(g: &Graph, tol: f64) -> CliResult<()> {
    let f = RegularFactor::of(g)?;
    let closed = line_graph_adjacency_spectrum(&f.profile, &f.spectrum)?;
    let direct = Spectrum::new(jacobi_eigenvalues(&adjacency_matrix(&line_graph(g)))?);
    let mut c = Check::new("line graph adjacency spectrum: from normalized Laplacian vs direct eigensolver");
    c.line(profile_line("G", &f.profile));
    let d = max_relative_deviation(&closed, &direct).unwrap_or(f64::INFINITY);
    c.line(format!("{} eigenvalues, max relative deviation {d:.3e} (tolerance {tol:e})", closed.len()));
    c.require(d <= tol);
    c.finish()
}

fn verify_rank_one(g: &Graph, tol: f64) -> CliResult<()> {
    let a = adjacency_matrix(g);
    let bound = g.degrees().into_iter().max().unwrap_or(0) as f64;
    let mut c = Check::new("rank-one determinant identity on the adjacency matrix");
    let mut worst: f64 = 0.0;
    let mut used = 0;
    for x in [bound + 1.5, -(bound + 1.5), bound + 0.25, 0.37] {
        for alpha in [-1.0, -0.5, 0.5, 1.0] {
            match det_rank_one_identity(&a, alpha, x) {
                Ok(s) => {
                    let gap = (s.lhs - s.rhs).abs() / s.lhs.abs().max(1.0);
                    c.line(format!("x={x} alpha={alpha}: lhs {} rhs {} gap {gap:.3e}", s.lhs, s.rhs));
                    worst = worst.max(gap);
                    used += 1;
                }
                Err(Error::Singular(_)) => c.line(format!("x={x} alpha={alpha}: skipped, x is an eigenvalue")),
                Err(e) => return Err(e.into()),
            }
        }
    }
    c.line(format!("{used} samples, max relative gap {worst:.3e} (tolerance {tol:e})"));
    c.require(used > 0 && worst <= tol);
    c.finish()
}

fn verify_coronal(g: &Graph, tol: f64) -> CliResult<()> {
    let p = specjoin::regular_profile(g)?;
    let l = normalized_laplacian(g)?;
    let n = p.n as f64;
    let mut c = Check::new("coronal of a regular normalized Laplacian vs n/(x + alpha - 1)");
    c.line(profile_line("G", &p));
    let mut worst: f64 = 0.0;
    for x in [2.5, 3.5, 5.0, -2.0, -3.5] {
        for alpha in [-0.75, -0.25, 0.25, 0.5, 1.0] {
            let got = coronal(&l, x, alpha)?;
            let want = coronal_regular_closed(p.n, x, alpha)?;
            worst = worst.max((got - want).abs());
            c.line(format!("x={x} alpha={alpha}: coronal {got} closed {want}"));
        }
    }
    c.line(format!("max error {worst:.3e} (tolerance {:e})", tol * n));
    c.require(worst <= tol * n);
    c.finish()
}

#[derive(Serialize)]
struct NumericComparison {
    method: &'static str,
    equal: bool,
    tolerance: f64,
    max_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    isomorphic: Option<bool>,
}

pub fn cospectral(a: &CospectralArgs) -> CliResult<()> {
    let tol = tolerance(a.tol)?;
    let (g, h) = (read_graph(&a.g)?, read_graph(&a.h)?);
    let (equal, text) = if a.exact {
        let mut opts = CertifyOptions::default().with_limit(a.limit);
        opts.check_iso = a.iso;
        let cert = exact_cospectral(&g, &h, opts)?;
        (cert.equal, cert.to_json())
    } else {
        let (sg, sh) = (nl_spectrum_direct(&g)?, nl_spectrum_direct(&h)?);
        let max_deviation = max_relative_deviation(&sg, &sh);
        let cmp = NumericComparison {
            method: "numeric",
            equal: max_deviation.is_some_and(|d| d <= tol),
            tolerance: tol,
            max_deviation,
            isomorphic: a.iso.then(|| is_isomorphic(&g, &h)),
        };
        (cmp.equal, to_json(&cmp))
    };
    emit(&format!("{text}\n"), None)?;
    if equal {
        Ok(())
    } else {
        Err(CliError::Failed("spectra differ".into()))
    }
}

pub fn invariants(a: &InvariantsArgs) -> CliResult<()> {
    let g = read_graph(&a.graph)?;
    let report = match a.closed {
        Some(kind) => {
            let g2 = require_g2(a.g2.as_deref(), "--closed")?;
            InvariantReport::closed_form(&g, &g2, kind.into())?
        }
        None => InvariantReport::direct(&g)?,
    };
    emit(&format!("{}\n", report.to_json()), None)
}

pub fn example32(json: bool) -> CliResult<()> {
    let report = run_example32()?;
    let text = if json {
        format!("{}\n", report.to_json())
    } else {
        report.to_string()
    };
    emit(&text, None)?;
    match report.checks().iter().find(|c| !c.1) {
        None => Ok(()),
        Some((name, _)) => Err(CliError::Failed(format!("check failed: {name}"))),
    }
}
