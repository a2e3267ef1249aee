//! Simple undirected graphs and the constructions built on them: subdivision,
//! line graph, and the two subdivision joins.
//!
//! Edges are always enumerated lexicographically on `(min endpoint, max endpoint)`.
//! That order fixes which vertex of a subdivision stands for which edge, and
//! which vertex of a line graph stands for which edge.

mod generators;
pub mod graph6;
mod isomorphism;
mod switching;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use generators::{generate, Family};
pub use isomorphism::is_isomorphic;
pub use switching::{gm_search, gm_switch, SwitchingSet};

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, parallel edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::InvalidArgument(format!("parallel edge ({u}, {v})"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    /// Removes `{u, v}` if present; returns whether it was there.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.order() || v >= self.order() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.order();
        let mut a = vec![vec![0u8; n]; n];
        for (u, v) in self.edges() {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// First vertex of degree zero, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(Vec::is_empty)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument("not a permutation of the vertex set".into()));
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union with `other`, whose vertices are shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&v| v + shift).collect()),
        );
        Graph { adj }
    }
}

/// `(n, m, r)` of a graph in which every vertex has degree `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularProfile {
    pub n: usize,
    pub m: usize,
    pub r: usize,
}

/// Returns the regularity profile, or the first pair of vertices whose
/// degrees disagree. A graph without edges is 0-regular.
pub fn regular_profile(g: &Graph) -> Result<RegularProfile> {
    if g.order() == 0 {
        return Err(Error::Domain("regular profile of the graph on 0 vertices".into()));
    }
    let r = g.degree(0);
    if let Some(v) = (1..g.order()).find(|&v| g.degree(v) != r) {
        return Err(Error::NotRegular {
            u: 0,
            du: r,
            v,
            dv: g.degree(v),
        });
    }
    Ok(RegularProfile {
        n: g.order(),
        m: g.size(),
        r,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PartTag {
    OriginalOfG1,
    SubdivisionVertex,
    VertexOfG2,
}

/// Which block each vertex of a subdivision or join came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartLabels {
    pub labels: Vec<PartTag>,
}

impl PartLabels {
    fn blocks(n1: usize, m1: usize, n2: usize) -> Self {
        let mut labels = Vec::with_capacity(n1 + m1 + n2);
        labels.extend(std::iter::repeat_n(PartTag::OriginalOfG1, n1));
        labels.extend(std::iter::repeat_n(PartTag::SubdivisionVertex, m1));
        labels.extend(std::iter::repeat_n(PartTag::VertexOfG2, n2));
        PartLabels { labels }
    }

    pub fn count(&self, tag: PartTag) -> usize {
        self.labels.iter().filter(|&&t| t == tag).count()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Splits every edge with a new vertex. Edge `k` becomes vertex `n + k`.
pub fn subdivision(g: &Graph) -> (Graph, PartLabels) {
    subdivided_with(g, &Graph::empty(0))
}

/// `S(g1)` placed next to a copy of `g2`, no join edges yet.
fn subdivided_with(g1: &Graph, g2: &Graph) -> (Graph, PartLabels) {
    let (n1, m1, n2) = (g1.order(), g1.size(), g2.order());
    let mut adj = vec![Vec::new(); n1 + m1 + n2];
    for (k, (u, v)) in g1.edges().enumerate() {
        let w = n1 + k;
        adj[u].push(w);
        adj[v].push(w);
        adj[w] = vec![u, v];
    }
    let shift = n1 + m1;
    for (x, nbrs) in g2.adj.iter().enumerate() {
        adj[shift + x] = nbrs.iter().map(|&y| y + shift).collect();
    }
    // subdivision vertices are appended in increasing order, so lists stay sorted
    (Graph { adj }, PartLabels::blocks(n1, m1, n2))
}

/// Vertices are the edges of `g`; two are adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edge_list();
    let index = |u: usize, v: usize| -> usize {
        let key = (u.min(v), u.max(v));
        edges.binary_search(&key).expect("edge present")
    };
    let mut lg = Graph::empty(edges.len());
    for x in 0..g.order() {
        let incident: Vec<usize> = g.neighbors(x).iter().map(|&y| index(x, y)).collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                // two distinct edges share at most one endpoint in a simple graph
                lg.add_edge(a, b).expect("simple line graph");
            }
        }
    }
    lg
}

/// Subdivision-vertex join: `S(g1)` and `g2`, with every original vertex of
/// `g1` joined to every vertex of `g2`. Blocks are `[V(g1) | I(g1) | V(g2)]`.
pub fn sv_join(g1: &Graph, g2: &Graph) -> (Graph, PartLabels) {
    let (mut g, labels) = subdivided_with(g1, g2);
    let shift = g1.order() + g1.size();
    for u in 0..g1.order() {
        for x in 0..g2.order() {
            g.add_edge(u, shift + x).expect("join edge is new");
        }
    }
    (g, labels)
}

/// Subdivision-edge join: `S(g1)` and `g2`, with every subdivision vertex
/// joined to every vertex of `g2`. Blocks are `[V(g1) | I(g1) | V(g2)]`.
pub fn se_join(g1: &Graph, g2: &Graph) -> (Graph, PartLabels) {
    let (mut g, labels) = subdivided_with(g1, g2);
    let (n1, m1) = (g1.order(), g1.size());
    for w in n1..n1 + m1 {
        for x in 0..g2.order() {
            g.add_edge(w, n1 + m1 + x).expect("join edge is new");
        }
    }
    (g, labels)
}

/// Which of the two subdivision joins to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JoinKind {
    Sv,
    Se,
}

impl JoinKind {
    pub fn join(self, g1: &Graph, g2: &Graph) -> (Graph, PartLabels) {
        match self {
            JoinKind::Sv => sv_join(g1, g2),
            JoinKind::Se => se_join(g1, g2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            JoinKind::Sv => "sv",
            JoinKind::Se => "se",
        }
    }
}

/// Degrees in non-increasing order.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Degree sequence as `(degree, multiplicity)` pairs, highest degree first.
pub fn degree_multiset(g: &Graph) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for d in degree_sequence(g) {
        match out.last_mut() {
            Some((v, c)) if *v == d => *c += 1,
            _ => out.push((d, 1)),
        }
    }
    out
}
