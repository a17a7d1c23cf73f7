//! Structural parameters: girth, circumference, clique number, connectivity.

use std::collections::VecDeque;

use crate::graph::{bit, Bits, Graph};

/// Length of a shortest cycle, or `None` for a forest.
///
/// BFS from every root; a non-tree edge `xy` closes a closed walk of length
/// `dist[x] + dist[y] + 1` through the root, and the minimum over all roots
/// is attained by a genuine shortest cycle.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(x) = queue.pop_front() {
            // Edges seen from depth d close walks of length at least 2d.
            if 2 * dist[x] >= best {
                break;
            }
            for y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Length of a longest cycle, or `None` for a forest.
pub fn circumference(g: &Graph) -> Option<usize> {
    longest_cycle(g).map(|c| c.len())
}

/// A longest cycle as a vertex sequence (the closing edge is implicit).
pub fn longest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut search = CycleSearch {
        g,
        best: Vec::new(),
        path: Vec::with_capacity(g.n()),
    };
    for start in 0..g.n() {
        // Cycles are rooted at their smallest vertex.
        let allowed = !(bit(start + 1) - 1) & g.vertex_mask();
        if (allowed.count_ones() as usize) < search.best.len() {
            break;
        }
        search.path.clear();
        search.path.push(start);
        search.extend(start, bit(start), allowed);
    }
    (!search.best.is_empty()).then_some(search.best)
}

struct CycleSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    path: Vec<usize>,
}

impl CycleSearch<'_> {
    fn extend(&mut self, start: usize, visited: u64, allowed: u64) {
        let end = *self.path.last().expect("path is never empty");
        if self.path.len() >= 3 && self.g.has_edge(end, start) && self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        let open = allowed & !visited;
        // Branch and bound: every remaining candidate vertex joins the path.
        if self.path.len() + open.count_ones() as usize <= self.best.len() {
            return;
        }
        for next in Bits(self.g.mask(end) & open) {
            self.path.push(next);
            self.extend(start, visited | bit(next), allowed);
            self.path.pop();
        }
    }
}

/// Every cycle of exactly `len` vertices, each reported once: rooted at its
/// smallest vertex, with the second vertex smaller than the last.
pub fn cycles_of_length(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    fn walk(g: &Graph, len: usize, path: &mut Vec<usize>, visited: u64, allowed: u64, out: &mut Vec<Vec<usize>>) {
        let end = *path.last().unwrap();
        if path.len() == len {
            if g.has_edge(end, path[0]) && path[1] < path[len - 1] {
                out.push(path.clone());
            }
            return;
        }
        for next in Bits(g.mask(end) & allowed & !visited) {
            path.push(next);
            walk(g, len, path, visited | bit(next), allowed, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    if len < 3 {
        return out;
    }
    for start in 0..g.n() {
        let allowed = !(bit(start + 1) - 1) & g.vertex_mask();
        let mut path = vec![start];
        walk(g, len, &mut path, bit(start), allowed, &mut out);
    }
    out
}

/// Clique number by branch and bound over candidate sets.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, mut cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !bit(v);
            expand(g, size + 1, cand & g.mask(v), best);
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertex_mask(), &mut best);
    best
}

/// Vertex masks of the connected components, ordered by smallest vertex.
pub fn component_masks(g: &Graph) -> Vec<u64> {
    let mut out = Vec::new();
    let mut unseen = g.vertex_mask();
    while unseen != 0 {
        let root = unseen.trailing_zeros() as usize;
        let mut comp = bit(root);
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= g.mask(v);
            }
            frontier = next & !comp;
            comp |= next;
        }
        unseen &= !comp;
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    component_masks(g).len() == 1
}

/// Connected components as standalone graphs, each relabeled in increasing
/// order of original vertex id.
pub fn components(g: &Graph) -> Vec<Graph> {
    component_masks(g).into_iter().map(|c| g.induced(c)).collect()
}

/// Two-coloring `(side0, side1)` if the graph is bipartite.
pub fn bipartition(g: &Graph) -> Option<(u64, u64)> {
    let mut color = vec![u8::MAX; g.n()];
    let mut queue = VecDeque::new();
    for root in 0..g.n() {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return None;
                }
            }
        }
    }
    let side0 = (0..g.n()).filter(|&v| color[v] == 0).fold(0, |a, v| a | bit(v));
    Some((side0, g.vertex_mask() & !side0))
}

/// Edges whose removal disconnects their component.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let base = component_masks(g).len();
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| component_masks(&g.edited(&[], &[(u, v)])).len() > base)
        .collect()
}
