//! Subdivision-vertex and subdivision-edge joins of graphs: normalized
//! Laplacian spectra, spanning-tree counts and degree-Kirchhoff indices in
//! closed form, each checked against an independent direct computation, plus
//! exact certificates for normalized Laplacian cospectral pairs.

pub mod error;
pub mod example32;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{
    degree_multiset, degree_sequence, generate, gm_search, gm_switch, is_isomorphic, line_graph, regular_profile,
    se_join, subdivision, sv_join, Family, Graph, JoinKind, PartLabels, PartTag, RegularProfile, SwitchingSet,
};
pub use spectra::{ClosedFormSpectrum, Spectrum};
