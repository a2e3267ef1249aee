//! Godsil-McKay switching with a single switching set.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{is_isomorphic, Graph};
use crate::error::{Error, Result};

/// A candidate switching set `S`. Valid with respect to a graph `g` when
/// `|S|` is even, `S` induces a regular subgraph, and every vertex outside
/// `S` has 0, |S|/2 or |S| neighbours in `S`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SwitchingSet {
    pub vertices: Vec<usize>,
}

impl SwitchingSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        SwitchingSet { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the switching conditions and returns the outside vertices
    /// whose adjacency to `S` gets complemented.
    pub fn validate(&self, g: &Graph) -> Result<Vec<usize>> {
        let n = g.order();
        let mut inside = vec![false; n];
        for &v in &self.vertices {
            if v >= n {
                return Err(Error::InvalidSwitchingSet {
                    vertex: v,
                    reason: format!("out of range for {n} vertices"),
                });
            }
            inside[v] = true;
        }
        let k = self.len();
        if k % 2 == 1 {
            return Err(Error::InvalidSwitchingSet {
                vertex: self.vertices[0],
                reason: format!("set size {k} is odd"),
            });
        }
        let count_in = |v: usize| g.neighbors(v).iter().filter(|&&w| inside[w]).count();

        if let Some(&first) = self.vertices.first() {
            let d = count_in(first);
            if let Some(&v) = self.vertices.iter().find(|&&v| count_in(v) != d) {
                return Err(Error::InvalidSwitchingSet {
                    vertex: v,
                    reason: format!(
                        "induced subgraph not regular ({} vs {d} neighbours inside)",
                        count_in(v)
                    ),
                });
            }
        }

        let mut flipped = Vec::new();
        for v in (0..n).filter(|&v| !inside[v]) {
            match count_in(v) {
                0 => {}
                c if c == k => {}
                c if 2 * c == k => flipped.push(v),
                c => {
                    return Err(Error::InvalidSwitchingSet {
                        vertex: v,
                        reason: format!("{c} neighbours in a set of size {k}"),
                    })
                }
            }
        }
        Ok(flipped)
    }
}

/// Complements the adjacency between `S` and each outside vertex that has
/// exactly |S|/2 neighbours in `S`.
pub fn gm_switch(g: &Graph, s: &SwitchingSet) -> Result<Graph> {
    let flipped = s.validate(g)?;
    let mut out = g.clone();
    for v in flipped {
        for &u in &s.vertices {
            if !out.remove_edge(u, v) {
                out.add_edge(u, v)?;
            }
        }
    }
    Ok(out)
}

/// All switching sets of the given size whose switch is not isomorphic to
/// `g`, in lexicographic order. Exhaustive, so keep `g` small.
pub fn gm_search(g: &Graph, size: usize) -> Vec<SwitchingSet> {
    if size % 2 == 1 || size > g.order() {
        return Vec::new();
    }
    let candidates: Vec<Vec<usize>> = (0..g.order()).combinations(size).collect();
    candidates
        .into_par_iter()
        .filter_map(|vertices| {
            let s = SwitchingSet { vertices };
            let switched = gm_switch(g, &s).ok()?;
            (!is_isomorphic(g, &switched)).then_some(s)
        })
        .collect()
}
