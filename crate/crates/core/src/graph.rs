//! Immutable simple undirected graphs on at most 62 vertices.
//!
//! Adjacency is stored as one `u64` neighbor mask per vertex alongside the
//! sorted edge list, so both set operations and edge iteration are cheap.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count the graph6 short form can encode.
pub const MAX_VERTICES: usize = 62;

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidEdge(format!("self-loop at vertex {u}")));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Self::from_masks(adj))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self::from_masks(vec![0; n]))
    }

    /// Builds from symmetric neighbor masks. Callers guarantee symmetry,
    /// no self-loops and no bits at or above `adj.len()`.
    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n <= 64);
        let mut edges = Vec::new();
        for u in 0..n {
            debug_assert_eq!(adj[u] & bit(u), 0, "self-loop at {u}");
            for v in Bits(adj[u] >> u >> 1) {
                let v = v + u + 1;
                debug_assert!(v < n && adj[v] & bit(u) != 0, "asymmetric pair ({u},{v})");
                edges.push((u, v));
            }
        }
        Graph { n, adj, edges }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbor bitmask of `u`.
    #[inline]
    pub fn mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    #[inline]
    pub fn masks(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> Bits {
        Bits(self.adj[u])
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[perm[u]] |= bit(perm[v]);
            adj[perm[v]] |= bit(perm[u]);
        }
        Graph::from_masks(adj)
    }

    /// Subgraph induced by the vertices of `keep`, relabeled in increasing
    /// order of their old ids.
    pub fn induced(&self, keep: u64) -> Graph {
        let verts: Vec<usize> = Bits(keep & self.vertex_mask()).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| Bits(self.adj[v] & keep).fold(0u64, |acc, w| acc | bit(index[w])))
            .collect();
        Graph::from_masks(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&a| a << self.n));
        Ok(Graph::from_masks(adj))
    }

    /// Copy with the given edges added and removed. Used by transforms and
    /// the lemma suites; ids must already be in range.
    pub(crate) fn edited(&self, add: &[(usize, usize)], remove: &[(usize, usize)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in remove {
            adj[u] &= !bit(v);
            adj[v] &= !bit(u);
        }
        for &(u, v) in add {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Graph::from_masks(adj)
    }

    /// Copy with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Result<Graph> {
        check_order(self.n + extra)?;
        let mut adj = self.adj.clone();
        adj.resize(self.n + extra, 0);
        Ok(Graph::from_masks(adj))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "vertex count {n} outside 1..={MAX_VERTICES}"
        )));
    }
    Ok(())
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn reversed_duplicate_collapses() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn rejects_self_loop_and_out_of_range() {
        assert!(matches!(Graph::from_edges(4, &[(0, 0)]), Err(Error::InvalidEdge(_))));
        assert!(matches!(Graph::from_edges(4, &[(0, 4)]), Err(Error::InvalidEdge(_))));
        assert!(matches!(Graph::from_edges(0, &[]), Err(Error::InvalidParameter(_))));
        assert!(matches!(Graph::from_edges(63, &[]), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn induced_and_union() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let sub = p4.induced(0b1110);
        assert_eq!(sub.edges(), &[(0, 1), (1, 2)]);
        let u = sub.disjoint_union(&p4).unwrap();
        assert_eq!(u.n(), 7);
        assert_eq!(u.m(), 5);
        assert!(u.has_edge(5, 6));
    }

    #[test]
    fn permutation_preserves_edge_count() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let h = g.permuted(&[2, 0, 3, 1]);
        assert_eq!(h.m(), 4);
        assert!(h.has_edge(2, 0));
        assert!(h.has_edge(2, 1));
    }
}
