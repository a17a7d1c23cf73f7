//! Canonical labeling by individualization and refinement.
//!
//! Connected graphs are canonized by equitable partition refinement followed
//! by a backtracking search over individualizations, keeping the labeling
//! with the lexicographically least adjacency rows. Two kinds of pruning
//! keep the search small on the highly symmetric graphs this crate meets
//! (stars, pendant bunches, complete bipartite pieces):
//!
//! * twins (equal neighborhoods up to each other) are interchangeable, so
//!   only one twin per class is individualized at a node;
//! * automorphisms discovered at equal leaves prune whole orbits among
//!   children of nodes whose prefix they fix.
//!
//! Disconnected graphs are canonized per component, with the components
//! ordered by their canonical graph6 bytes.

use crate::graph::{bit, Bits, Graph};
use crate::graph6::to_graph6;
use crate::structure::component_masks;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// graph6 of the canonical graph.
    pub bytes: String,
    /// `permutation[v]` is the canonical label of input vertex `v`.
    pub permutation: Vec<usize>,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        crate::graph6::parse_graph6(&self.bytes).expect("canonical bytes are valid graph6")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let comps = component_masks(g);
    if comps.len() == 1 {
        let permutation = canonical_labeling_connected(g);
        let bytes = to_graph6(&g.permuted(&permutation));
        return CanonicalForm { bytes, permutation };
    }

    let mut parts: Vec<(String, Vec<usize>, Vec<usize>)> = comps
        .into_iter()
        .map(|mask| {
            let verts: Vec<usize> = Bits(mask).collect();
            let sub = g.induced(mask);
            let perm = canonical_labeling_connected(&sub);
            let key = to_graph6(&sub.permuted(&perm));
            (key, verts, perm)
        })
        .collect();
    parts.sort_by(|a, b| a.0.cmp(&b.0));

    let mut permutation = vec![0; g.n()];
    let mut offset = 0;
    for (_, verts, perm) in &parts {
        for (local, &v) in verts.iter().enumerate() {
            permutation[v] = offset + perm[local];
        }
        offset += verts.len();
    }
    let bytes = to_graph6(&g.permuted(&permutation));
    CanonicalForm { bytes, permutation }
}

/// Shorthand for `canonical_form(g).bytes`.
pub fn canonical_graph6(g: &Graph) -> String {
    canonical_form(g).bytes
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_graph6(a) == canonical_graph6(b)
}

/// Canonical labeling of a graph treated as a single refinement problem.
/// Correct for disconnected input too, but the component-wise path in
/// [`canonical_form`] is far cheaper there.
pub(crate) fn canonical_labeling_connected(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 1 {
        return vec![0];
    }
    let twins = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| w != v && (g.mask(v) & !bit(w)) == (g.mask(w) & !bit(v)))
                .fold(0u64, |acc, w| acc | bit(w))
        })
        .collect();
    let mut search = Search {
        g,
        twins,
        best_code: Vec::new(),
        best_inverse: Vec::new(),
        best_perm: Vec::new(),
        automorphisms: Vec::new(),
    };
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    let mut prefix = Vec::with_capacity(n);
    search.descend(cells, &mut prefix);
    search.best_perm
}

struct Search<'a> {
    g: &'a Graph,
    twins: Vec<u64>,
    best_code: Vec<u64>,
    best_inverse: Vec<usize>,
    best_perm: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };

        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(cells[t]) {
            if explored.iter().any(|&w| self.twins[w] & bit(v) != 0) {
                continue;
            }
            if !explored.is_empty() && self.same_orbit_as_explored(v, &explored, prefix) {
                continue;
            }
            explored.push(v);

            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(bit(v));
            child.push(cells[t] & !bit(v));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// Orbit test under the stored automorphisms that fix `prefix` pointwise.
    fn same_orbit_as_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let fixing: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in fixing {
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.n();
        let mut perm = vec![0; n];
        for (pos, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = pos;
        }
        let mut code = vec![0u64; n];
        for v in 0..n {
            code[perm[v]] = Bits(self.g.mask(v)).fold(0u64, |acc, w| acc | bit(perm[w]));
        }

        if self.best_perm.is_empty() || code < self.best_code {
            let mut inverse = vec![0; n];
            for (v, &p) in perm.iter().enumerate() {
                inverse[p] = v;
            }
            self.best_code = code;
            self.best_inverse = inverse;
            self.best_perm = perm;
        } else if code == self.best_code {
            let aut: Vec<usize> = (0..n).map(|v| self.best_inverse[perm[v]]).collect();
            if aut.iter().enumerate().any(|(v, &w)| v != w) {
                self.automorphisms.push(aut);
            }
        }
    }
}

/// Refines an ordered partition (cells as vertex masks) to the coarsest
/// equitable partition below it. Cells split by neighbor count into each
/// splitter cell, in increasing count order, so the result depends only on
/// the isomorphism type of (graph, partition).
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let n = g.n();
    let mut counts = vec![0usize; n];
    'restart: loop {
        for si in 0..cells.len() {
            let splitter = cells[si];
            for xi in 0..cells.len() {
                let x = cells[xi];
                if x & (x - 1) == 0 {
                    continue;
                }
                let mut lo = usize::MAX;
                let mut hi = 0;
                for v in Bits(x) {
                    let c = (g.mask(v) & splitter).count_ones() as usize;
                    counts[v] = c;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    continue;
                }
                let mut pieces = Vec::new();
                for c in lo..=hi {
                    let piece = Bits(x).filter(|&v| counts[v] == c).fold(0u64, |a, v| a | bit(v));
                    if piece != 0 {
                        pieces.push(piece);
                    }
                }
                cells.splice(xi..=xi, pieces);
                continue 'restart;
            }
        }
        break;
    }
}
