#![allow(dead_code)]

use rand::Rng;
use specjoin::spectra::{
    nl_spectrum_direct, se_join_spectrum_closed, sv_join_spectrum_closed, ClosedFormSpectrum, RegularFactor,
};
use specjoin::{generate, Family, Graph, JoinKind, Result, Spectrum};

pub type Named = (&'static str, Graph);

fn named(name: &'static str, f: Family, p: &[usize]) -> Named {
    (name, generate(f, p).unwrap())
}

/// Regular first factors, all with r ≥ 2.
pub fn first_factors() -> Vec<Named> {
    vec![
        named("C3", Family::Cycle, &[3]),
        named("C4", Family::Cycle, &[4]),
        named("C5", Family::Cycle, &[5]),
        named("C6", Family::Cycle, &[6]),
        named("K4", Family::Complete, &[4]),
        named("K5", Family::Complete, &[5]),
        named("Q3", Family::Hypercube, &[3]),
        named("Petersen", Family::Petersen, &[]),
    ]
}

pub fn second_factors() -> Vec<Named> {
    vec![
        ("K1", Graph::empty(1)),
        named("K2", Family::Complete, &[2]),
        named("K3", Family::Complete, &[3]),
        named("C4", Family::Cycle, &[4]),
        named("C5", Family::Cycle, &[5]),
        ("empty(2)", Graph::empty(2)),
        ("empty(3)", Graph::empty(3)),
    ]
}

/// The 7 × 6 pairs of the acceptance battery.
pub fn acceptance_pairs() -> Vec<(Named, Named)> {
    let g1: Vec<Named> = first_factors().into_iter().filter(|(n, _)| *n != "Q3").collect();
    let g2: Vec<Named> = second_factors().into_iter().filter(|(n, _)| *n != "empty(2)").collect();
    cross(&g1, &g2)
}

/// The full 8 × 7 battery.
pub fn battery_pairs() -> Vec<(Named, Named)> {
    cross(&first_factors(), &second_factors())
}

fn cross(a: &[Named], b: &[Named]) -> Vec<(Named, Named)> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

/// Connected regular graphs with r ≥ 1 from both factor lists.
pub fn regular_connected() -> Vec<Named> {
    let mut out = first_factors();
    out.push(named("K2", Family::Complete, &[2]));
    out
}

pub fn closed_form(g1: &Graph, g2: &Graph, kind: JoinKind) -> Result<ClosedFormSpectrum> {
    let (f1, f2) = (RegularFactor::of(g1)?, RegularFactor::of(g2)?);
    match kind {
        JoinKind::Sv => sv_join_spectrum_closed(&f1.profile, &f1.spectrum, &f2.profile, &f2.spectrum),
        JoinKind::Se => se_join_spectrum_closed(&f1.profile, &f1.spectrum, &f2.profile, &f2.spectrum),
    }
}

/// Flattened closed form next to the direct spectrum of the constructed join.
pub fn closed_and_direct(g1: &Graph, g2: &Graph, kind: JoinKind) -> Result<(Spectrum, Spectrum)> {
    let closed = closed_form(g1, g2, kind)?.flatten()?;
    let direct = nl_spectrum_direct(&kind.join(g1, g2).0)?;
    Ok((closed, direct))
}

/// Random simple graph with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
