use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `cycle n`, n ≥ 3
    Cycle,
    /// `path n`, n ≥ 1
    Path,
    /// `complete n`, n ≥ 1
    Complete,
    /// `complete_bipartite a b`, a, b ≥ 1; part `a` gets the low labels
    CompleteBipartite,
    /// `hypercube d`, d ≥ 1; binary labels, edge iff labels differ in one bit
    Hypercube,
    Petersen,
    /// `empty n`, any n
    Empty,
    /// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}
    Shrikhande,
    /// K4 □ K4
    Rook4x4,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Cycle,
        Family::Path,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Hypercube,
        Family::Petersen,
        Family::Empty,
        Family::Shrikhande,
        Family::Rook4x4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Hypercube => "hypercube",
            Family::Petersen => "petersen",
            Family::Empty => "empty",
            Family::Shrikhande => "shrikhande",
            Family::Rook4x4 => "rook4x4",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::Petersen | Family::Shrikhande | Family::Rook4x4 => 0,
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown graph family '{s}'")))
    }
}

/// Builds a member of `family` with canonical vertex numbering.
pub fn generate(family: Family, params: &[usize]) -> Result<Graph> {
    if params.len() != family.arity() {
        return Err(Error::InvalidArgument(format!(
            "{family} takes {} parameter(s), got {}",
            family.arity(),
            params.len()
        )));
    }
    let g = match family {
        Family::Cycle => {
            let n = params[0];
            if n < 3 {
                return Err(Error::InvalidArgument("cycle length must be ≥ 3".into()));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?
        }
        Family::Path => {
            let n = params[0];
            if n < 1 {
                return Err(Error::InvalidArgument("path order must be ≥ 1".into()));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?
        }
        Family::Complete => {
            let n = params[0];
            if n < 1 {
                return Err(Error::InvalidArgument("complete graph order must be ≥ 1".into()));
            }
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?
        }
        Family::CompleteBipartite => {
            let (a, b) = (params[0], params[1]);
            if a < 1 || b < 1 {
                return Err(Error::InvalidArgument("complete bipartite parts must be ≥ 1".into()));
            }
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))?
        }
        Family::Hypercube => {
            let d = params[0];
            if !(1..=16).contains(&d) {
                return Err(Error::InvalidArgument("hypercube dimension must be in 1..=16".into()));
            }
            let n = 1usize << d;
            Graph::from_edges(
                n,
                (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v)),
            )?
        }
        Family::Petersen => Graph::from_edges(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
        )?,
        Family::Empty => Graph::empty(params[0]),
        Family::Shrikhande => {
            let id = |a: usize, b: usize| 4 * (a % 4) + b % 4;
            let mut g = Graph::empty(16);
            for a in 0..4 {
                for b in 0..4 {
                    // half of the symmetric connection set; the other half is the reverse edge
                    for (da, db) in [(1, 0), (0, 1), (1, 1)] {
                        g.add_edge(id(a, b), id(a + da, b + db))?;
                    }
                }
            }
            g
        }
        Family::Rook4x4 => {
            let mut g = Graph::empty(16);
            for u in 0..16 {
                for v in u + 1..16 {
                    if u / 4 == v / 4 || u % 4 == v % 4 {
                        g.add_edge(u, v)?;
                    }
                }
            }
            g
        }
    };
    Ok(g)
}
