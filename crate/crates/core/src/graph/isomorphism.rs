//! Isomorphism test by colour refinement plus individualization backtracking.
//!
//! Both graphs are refined together as one disjoint union, so a colour means
//! the same thing on both sides. A branch dies as soon as some colour class
//! has different sizes in the two halves.

use std::collections::BTreeMap;

use super::{degree_sequence, Graph};

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    if degree_sequence(g) != degree_sequence(h) {
        return false;
    }
    let n = g.order();
    if n == 0 {
        return true;
    }
    let union = g.disjoint_union(h);
    let colors = refine(&union, union.degrees().into_iter().map(|d| d as u32).collect());
    search(g, h, &union, colors)
}

fn refine(union: &Graph, mut colors: Vec<u32>) -> Vec<u32> {
    let mut classes = count_classes(&colors);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..union.order())
            .map(|v| {
                let mut nbr: Vec<u32> = union.neighbors(v).iter().map(|&w| colors[w]).collect();
                nbr.sort_unstable();
                (colors[v], nbr)
            })
            .collect();
        let mut palette: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in &signatures {
            palette.entry(s).or_insert(0);
        }
        for (i, c) in palette.values_mut().enumerate() {
            *c = i as u32;
        }
        let next: Vec<u32> = signatures.iter().map(|s| palette[s]).collect();
        let next_classes = palette.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Per-colour vertex counts in each half; `None` when they disagree.
fn class_sizes(colors: &[u32], n: usize) -> Option<BTreeMap<u32, usize>> {
    let mut left: BTreeMap<u32, usize> = BTreeMap::new();
    let mut right: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colors[..n] {
        *left.entry(c).or_default() += 1;
    }
    for &c in &colors[n..] {
        *right.entry(c).or_default() += 1;
    }
    (left == right).then_some(left)
}

fn search(g: &Graph, h: &Graph, union: &Graph, colors: Vec<u32>) -> bool {
    let n = g.order();
    let Some(sizes) = class_sizes(&colors, n) else {
        return false;
    };
    let target = sizes
        .iter()
        .filter(|(_, &k)| k > 1)
        .min_by_key(|(_, &k)| k)
        .map(|(&c, _)| c);

    let Some(target) = target else {
        // discrete: the colouring itself is the only candidate bijection
        let mut map = vec![0; n];
        for w in 0..n {
            let v = colors[..n].iter().position(|&c| c == colors[n + w]).unwrap();
            map[v] = w;
        }
        return g.edges().all(|(u, v)| h.has_edge(map[u], map[v]));
    };

    let v = colors[..n].iter().position(|&c| c == target).unwrap();
    let fresh = colors.iter().max().unwrap() + 1;
    for w in (0..n).filter(|&w| colors[n + w] == target) {
        let mut trial = colors.clone();
        trial[v] = fresh;
        trial[n + w] = fresh;
        if search(g, h, union, refine(union, trial)) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn cycle_vs_star() {
        let c4 = generate(Family::Cycle, &[4]).unwrap();
        let star = generate(Family::CompleteBipartite, &[1, 3]).unwrap();
        assert!(!is_isomorphic(&c4, &star));
    }

    #[test]
    fn relabelled_copies() {
        let c4 = generate(Family::Cycle, &[4]).unwrap();
        assert!(is_isomorphic(&c4, &c4.permute(&[2, 0, 3, 1]).unwrap()));
        let p = generate(Family::Petersen, &[]).unwrap();
        let perm: Vec<usize> = (0..10).map(|i| (3 * i + 7) % 10).collect();
        assert!(is_isomorphic(&p, &p.permute(&perm).unwrap()));
    }

    #[test]
    fn same_degrees_different_structure() {
        // C6 vs two triangles
        let c6 = generate(Family::Cycle, &[6]).unwrap();
        let k3 = generate(Family::Complete, &[3]).unwrap();
        assert!(!is_isomorphic(&c6, &k3.disjoint_union(&k3)));
        let q3 = generate(Family::Hypercube, &[3]).unwrap();
        let c8 = generate(Family::Cycle, &[8]).unwrap();
        assert!(!is_isomorphic(&q3, &c8));
    }

    #[test]
    fn empty_graphs() {
        assert!(is_isomorphic(&Graph::empty(0), &Graph::empty(0)));
        assert!(is_isomorphic(&Graph::empty(4), &Graph::empty(4)));
        assert!(!is_isomorphic(&Graph::empty(4), &Graph::empty(5)));
    }
}
