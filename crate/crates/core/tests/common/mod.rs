//! Independent reference implementations used as test oracles. None of
//! this shares code with the library beyond the `Graph` container.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use nalgebra::DMatrix;
use spex_core::Graph;

/// Largest eigenvalue of the dense signless Laplacian via a symmetric
/// eigendecomposition.
pub fn dense_q(g: &Graph) -> f64 {
    let n = g.n();
    let mut q = DMatrix::<f64>::zeros(n, n);
    for &(a, b) in g.edges() {
        q[(a, b)] += 1.0;
        q[(b, a)] += 1.0;
        q[(a, a)] += 1.0;
        q[(b, b)] += 1.0;
    }
    q.symmetric_eigenvalues().iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Isomorphism by backtracking over degree-preserving partial maps.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let (ag, ah) = (adjacency(g), adjacency(h));
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(i: usize, ag: &[Vec<bool>], ah: &[Vec<bool>], g: &Graph, h: &Graph, map: &mut [usize], used: &mut [bool]) -> bool {
        if i == ag.len() {
            return true;
        }
        for t in 0..ah.len() {
            if used[t] || g.degree(i) != h.degree(t) {
                continue;
            }
            if (0..i).all(|j| ag[i][j] == ah[t][map[j]]) {
                map[i] = t;
                used[t] = true;
                if extend(i + 1, ag, ah, g, h, map, used) {
                    return true;
                }
                used[t] = false;
            }
        }
        false
    }
    extend(0, &ag, &ah, g, h, &mut map, &mut used)
}

/// Shortest cycle via `min over edges uv of dist_{G-uv}(u, v) + 1`.
pub fn naive_girth(g: &Graph) -> Option<usize> {
    let adj = adjacency(g);
    let mut best: Option<usize> = None;
    for &(u, v) in g.edges() {
        let mut dist = vec![usize::MAX; g.n()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in 0..g.n() {
                if adj[x][y] && (x, y) != (u, v) && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            let len = dist[v] + 1;
            best = Some(best.map_or(len, |b| b.min(len)));
        }
    }
    best
}

/// Longest cycle by exhaustive simple-path search from every start.
pub fn naive_circumference(g: &Graph) -> Option<usize> {
    let adj = adjacency(g);
    let n = g.n();
    let mut best = 0;
    fn walk(adj: &[Vec<bool>], start: usize, cur: usize, len: usize, seen: &mut [bool], best: &mut usize) {
        for y in 0..adj.len() {
            if !adj[cur][y] {
                continue;
            }
            if y == start && len >= 3 {
                *best = (*best).max(len);
            } else if !seen[y] && y > start {
                seen[y] = true;
                walk(adj, start, y, len + 1, seen, best);
                seen[y] = false;
            }
        }
    }
    for s in 0..n {
        let mut seen = vec![false; n];
        seen[s] = true;
        walk(&adj, s, s, 1, &mut seen, &mut best);
    }
    (best >= 3).then_some(best)
}

/// Invariant used to bucket candidates before pairwise isomorphism tests:
/// sorted multiset of (degree, sorted neighbor degrees).
fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut inv: Vec<_> = (0..g.n())
        .map(|u| {
            let mut nd: Vec<_> = g.neighbors(u).map(|v| g.degree(v)).collect();
            nd.sort_unstable();
            (g.degree(u), nd)
        })
        .collect();
    inv.sort();
    inv
}

/// All graphs with `m` edges and no isolated vertices up to isomorphism,
/// from labeled edge subsets with non-increasing degree sequence, deduped
/// by backtracking isomorphism.
pub fn naive_family(m: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let mut classes: HashMap<Vec<(usize, Vec<usize>)>, Vec<Graph>> = HashMap::new();
    for n in 2..=2 * m {
        let all: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        // first index past the edges whose smaller end is `a`
        let block_end: Vec<usize> = (0..n).map(|a| all.iter().position(|&(x, _)| x > a).unwrap_or(all.len())).collect();
        let mut chosen = Vec::new();
        let mut degree = vec![0usize; n];
        subsets(&all, &block_end, m, 0, &mut chosen, &mut degree, &mut |edges, degree| {
            if degree.windows(2).any(|w| w[0] < w[1]) {
                return;
            }
            let g = Graph::from_edges(n, edges).unwrap();
            if !keep(&g) {
                return;
            }
            let bucket = classes.entry(invariant(&g)).or_default();
            if !bucket.iter().any(|h| brute_isomorphic(h, &g)) {
                bucket.push(g);
            }
        });
    }
    classes.into_values().flatten().collect()
}

fn subsets(
    all: &[(usize, usize)],
    block_end: &[usize],
    remaining: usize,
    next: usize,
    chosen: &mut Vec<(usize, usize)>,
    degree: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[(usize, usize)], &[usize]),
) {
    let n = degree.len();
    // vertices whose incident edges are all behind `next` must be covered
    for a in 0..n {
        if block_end[a] <= next && degree[a] == 0 {
            return;
        }
    }
    let uncovered = degree.iter().filter(|&&d| d == 0).count();
    if uncovered > 2 * remaining {
        return;
    }
    if remaining == 0 {
        visit(chosen, degree);
        return;
    }
    for i in next..all.len() {
        if all.len() - i < remaining {
            break;
        }
        let (a, b) = all[i];
        // vertices below `a` can no longer be covered
        if degree[..a].contains(&0) {
            break;
        }
        chosen.push((a, b));
        degree[a] += 1;
        degree[b] += 1;
        subsets(all, block_end, remaining - 1, i + 1, chosen, degree, visit);
        degree[a] -= 1;
        degree[b] -= 1;
        chosen.pop();
    }
}

/// Random graph from a seed, independent of the library's sampler.
pub fn seeded_graph(seed: u64, n: usize, p: f64) -> Graph {
    // SplitMix64
    let mut state = seed;
    let mut next = || {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let unit = (next() >> 11) as f64 / (1u64 << 53) as f64;
            if unit < p {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
