//! Graph surgery: switching, subdivision, contraction, internal paths.
//!
//! Every operation returns a new graph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

/// A walk `u1 … uk` (k ≥ 2) whose endpoints have degree ≥ 3 and whose
/// interior vertices have degree 2. Vertices are distinct except that
/// `u1 = uk` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct InternalPath {
    pub vertices: Vec<usize>,
}

impl InternalPath {
    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges().any(|x| x == e)
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::InvalidInput(format!("vertex {v} out of range 0..{}", g.n())));
    }
    Ok(())
}

/// Moves the edges `v s` (s ∈ S) to `u s`.
pub fn switch(g: &Graph, u: usize, v: usize, set: &[usize]) -> Result<Graph> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(Error::InvalidSwitch("u and v must differ".into()));
    }
    let mut mask = 0u64;
    for &s in set {
        check_vertex(g, s)?;
        mask |= bit(s);
    }
    if mask & bit(u) != 0 {
        return Err(Error::InvalidSwitch(format!("u={u} cannot be in S")));
    }
    let allowed = g.mask(v) & !g.mask(u);
    if mask & !allowed != 0 {
        return Err(Error::InvalidSwitch(format!(
            "S must lie in N({v}) \\ N({u})"
        )));
    }
    let remove: Vec<_> = crate::graph::Bits(mask).map(|s| (v, s)).collect();
    let add: Vec<_> = crate::graph::Bits(mask).map(|s| (u, s)).collect();
    Ok(g.edited(&add, &remove))
}

/// Replaces edge `uv` by the path `u w v`; `w` is the new vertex `n`.
pub fn subdivide(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return Err(Error::InvalidEdge(format!("({u},{v}) is not an edge")));
    }
    if g.n() >= MAX_VERTICES {
        return Err(Error::InvalidParameter("subdivision would exceed the vertex cap".into()));
    }
    let w = g.n();
    let bigger = g.with_isolated(1)?;
    Ok(bigger.edited(&[(u, w), (w, v)], &[(u, v)]))
}

/// Deletes `uv` and identifies its ends. The merged vertex takes id
/// `min(u, v)`; ids above `max(u, v)` shift down by one.
pub fn contract(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return Err(Error::InvalidEdge(format!("({u},{v}) is not an edge")));
    }
    if g.mask(u) & g.mask(v) != 0 {
        return Err(Error::InvalidContraction(format!(
            "{u} and {v} have a common neighbor"
        )));
    }
    let (keep, gone) = (u.min(v), u.max(v));
    let relabel = |x: usize| -> usize {
        if x == gone {
            keep
        } else if x > gone {
            x - 1
        } else {
            x
        }
    };
    let edges: Vec<_> = g
        .edges()
        .iter()
        .filter(|&&e| e != (keep, gone))
        .map(|&(a, b)| (relabel(a), relabel(b)))
        .collect();
    Graph::from_edges(g.n() - 1, &edges)
}

/// Position of the merged vertex and relabeling used by [`contract`]:
/// `map[x]` is the id of old vertex `x` in the contracted graph.
pub fn contraction_map(n: usize, u: usize, v: usize) -> Vec<usize> {
    let (keep, gone) = (u.min(v), u.max(v));
    (0..n)
        .map(|x| if x == gone { keep } else if x > gone { x - 1 } else { x })
        .collect()
}

/// All internal paths, each reported once in the orientation that is
/// lexicographically smaller.
pub fn find_internal_paths(g: &Graph) -> Vec<InternalPath> {
    let mut found = BTreeSet::new();
    for a in (0..g.n()).filter(|&a| g.degree(a) >= 3) {
        for b in g.neighbors(a) {
            let mut walk = vec![a, b];
            let mut prev = a;
            let mut cur = b;
            while g.degree(cur) == 2 && cur != a {
                let next = (g.mask(cur) & !bit(prev)).trailing_zeros() as usize;
                prev = cur;
                cur = next;
                walk.push(cur);
            }
            if g.degree(cur) >= 3 {
                let rev: Vec<_> = walk.iter().rev().copied().collect();
                found.insert(walk.min(rev));
            }
        }
    }
    found.into_iter().map(|vertices| InternalPath { vertices }).collect()
}

/// Whether `uv` lies on some internal path.
pub fn on_internal_path(g: &Graph, u: usize, v: usize) -> bool {
    g.has_edge(u, v) && find_internal_paths(g).iter().any(|p| p.contains_edge(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::constructions::{complete_bipartite, cycle, path};

    fn dumbbell() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    fn theta() -> Graph {
        // degree-3 vertices 0 and 1, joined by paths 0-2-1, 0-3-4-1, 0-5-6-7-1
        Graph::from_edges(8, &[(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 7), (7, 1)]).unwrap()
    }

    #[test]
    fn empty_switch_is_identity() {
        let p3 = path(3).unwrap();
        assert_eq!(switch(&p3, 0, 2, &[]).unwrap(), p3);
    }

    #[test]
    fn switch_moves_edges() {
        // C4 with a pendant 4 at vertex 1; move it to vertex 0.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
        let h = switch(&g, 0, 1, &[4]).unwrap();
        assert_eq!(h.m(), g.m());
        assert_eq!(h.degree(0), g.degree(0) + 1);
        assert!(h.has_edge(0, 4) && !h.has_edge(1, 4));
    }

    #[test]
    fn switch_rejects_bad_sets() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert!(matches!(switch(&k23, 0, 0, &[]), Err(Error::InvalidSwitch(_))));
        // 2 is a common neighbor of 0 and 1
        assert!(matches!(switch(&k23, 0, 1, &[2]), Err(Error::InvalidSwitch(_))));
        let p3 = path(3).unwrap();
        assert!(matches!(switch(&p3, 0, 1, &[0]), Err(Error::InvalidSwitch(_))));
    }

    #[test]
    fn subdivide_examples() {
        let c3 = cycle(3).unwrap();
        assert!(are_isomorphic(&subdivide(&c3, 0, 1).unwrap(), &cycle(4).unwrap()));
        let k2 = path(2).unwrap();
        assert!(are_isomorphic(&subdivide(&k2, 0, 1).unwrap(), &path(3).unwrap()));
        assert!(matches!(subdivide(&c3.with_isolated(1).unwrap(), 0, 3), Err(Error::InvalidEdge(_))));
    }

    #[test]
    fn contract_examples() {
        assert!(are_isomorphic(&contract(&cycle(5).unwrap(), 0, 1).unwrap(), &cycle(4).unwrap()));
        assert!(are_isomorphic(&contract(&cycle(4).unwrap(), 0, 1).unwrap(), &cycle(3).unwrap()));
        assert!(matches!(contract(&cycle(3).unwrap(), 0, 1), Err(Error::InvalidContraction(_))));
        assert!(matches!(contract(&cycle(5).unwrap(), 0, 2), Err(Error::InvalidEdge(_))));
        let d = contract(&dumbbell(), 2, 3).unwrap();
        assert_eq!((d.n(), d.m()), (5, 6));
        assert_eq!(d.degree(2), 4);
    }

    #[test]
    fn internal_paths() {
        // the bridge, plus each triangle as a closed path through its
        // degree-3 vertex
        let paths = find_internal_paths(&dumbbell());
        assert_eq!(paths.len(), 3);
        assert!(paths.contains(&InternalPath { vertices: vec![2, 3] }));
        assert_eq!(paths.iter().filter(|p| p.is_closed()).count(), 2);
        assert!(find_internal_paths(&cycle(6).unwrap()).is_empty());
        let t = find_internal_paths(&theta());
        assert_eq!(t.len(), 3);
        assert!(t.iter().all(|p| !p.is_closed()));
        assert!(on_internal_path(&theta(), 5, 6));
    }

    #[test]
    fn closed_internal_path() {
        // a 4-cycle hanging at vertex 0, which also has two pendants
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5)]).unwrap();
        let paths = find_internal_paths(&g);
        assert_eq!(paths.len(), 1);
        assert!(paths[0].is_closed());
        assert_eq!(paths[0].vertices.len(), 5);
    }
}
