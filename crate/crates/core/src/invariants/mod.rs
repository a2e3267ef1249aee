//! Spanning-tree counts, degree-Kirchhoff indices and exact cospectrality
//! certificates.

mod cospectral;
mod kirchhoff;
mod trees;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{graph6::write_graph6, Graph, JoinKind};
use crate::spectra::RegularFactor;

pub use cospectral::{
    build_cospectral_join_pair, exact_adjacency_cospectral, exact_cospectral, CertificateKind, CertifyOptions,
    CospectralCertificate, CospectralJoinPair,
};
pub use kirchhoff::{
    degree_kirchhoff_resistance, degree_kirchhoff_spectral, relative_difference, resistance_matrix,
    se_join_kirchhoff_closed, sv_join_kirchhoff_closed,
};
pub use trees::{
    round_to_integer, se_join_trees_closed, se_join_trees_exact, se_join_trees_formula, spanning_trees_matrix_tree,
    spanning_trees_spectral, sv_join_trees_closed, sv_join_trees_exact, sv_join_trees_formula, TreeCount,
};

/// Tree count and degree-Kirchhoff index of one graph, with the method used
/// for each value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub graph: String,
    pub spanning_trees: String,
    pub kirchhoff: f64,
    pub methods: BTreeMap<String, String>,
}

impl InvariantReport {
    /// Matrix-tree count and spectral `Kf*`.
    pub fn direct(g: &Graph) -> Result<Self> {
        Ok(InvariantReport {
            graph: write_graph6(g)?,
            spanning_trees: spanning_trees_matrix_tree(g).to_string(),
            kirchhoff: degree_kirchhoff_spectral(g)?,
            methods: methods("matrix-tree", "spectral"),
        })
    }

    /// Both values of the join from the closed forms over the factors.
    pub fn closed_form(g1: &Graph, g2: &Graph, kind: JoinKind) -> Result<Self> {
        let (f1, f2) = (RegularFactor::of(g1)?, RegularFactor::of(g2)?);
        let (trees, kirchhoff) = match kind {
            JoinKind::Sv => (
                sv_join_trees_exact(g1, g2)?,
                sv_join_kirchhoff_closed(&f1.profile, &f1.spectrum, &f2.profile, &f2.spectrum)?,
            ),
            JoinKind::Se => (
                se_join_trees_exact(g1, g2)?,
                se_join_kirchhoff_closed(&f1.profile, &f1.spectrum, &f2.profile, &f2.spectrum)?,
            ),
        };
        let tag = format!("closed-form-{}", kind.name());
        Ok(InvariantReport {
            graph: write_graph6(&kind.join(g1, g2).0)?,
            spanning_trees: trees.to_string(),
            kirchhoff,
            methods: methods(&tag, &tag),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn methods(trees: &str, kirchhoff: &str) -> BTreeMap<String, String> {
    BTreeMap::from([
        ("spanning_trees".to_string(), trees.to_string()),
        ("kirchhoff".to_string(), kirchhoff.to_string()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn reports_agree() {
        let c4 = generate(Family::Cycle, &[4]).unwrap();
        let k2 = generate(Family::Complete, &[2]).unwrap();
        let closed = InvariantReport::closed_form(&c4, &k2, JoinKind::Se).unwrap();
        let direct = InvariantReport::direct(&JoinKind::Se.join(&c4, &k2).0).unwrap();
        assert_eq!(closed.graph, direct.graph);
        assert_eq!(closed.spanning_trees, direct.spanning_trees);
        assert!(relative_difference(direct.kirchhoff, closed.kirchhoff) < 1e-9);
        let json: serde_json::Value = serde_json::from_str(&closed.to_json()).unwrap();
        assert_eq!(json["methods"]["kirchhoff"], "closed-form-se");
        assert!(json["spanning_trees"].is_string());
    }
}
