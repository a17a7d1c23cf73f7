//! Named graph families. Labelings are fixed so graph6 output is stable;
//! every hub is vertex 0.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

fn cycle_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (i, (i + 1) % n))
}

/// C_n with edges i–(i+1 mod n).
pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Graph::from_edges(n, &cycle_edges(n).collect::<Vec<_>>())
}

/// P_n on n vertices.
pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, || "path needs n >= 1".into())?;
    Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

/// K_{1,t} with center 0.
pub fn star(t: usize) -> Result<Graph> {
    require(t >= 1, || "star needs t >= 1".into())?;
    Graph::from_edges(t + 1, &(1..=t).map(|i| (0, i)).collect::<Vec<_>>())
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, || "complete graph needs n >= 1".into())?;
    let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::from_edges(n, &e)
}

/// K_{s,t}: parts 0..s and s..s+t.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    require(s >= 1 && t >= 1, || format!("complete bipartite needs s,t >= 1, got ({s},{t})"))?;
    let e: Vec<_> = (0..s).flat_map(|i| (s..s + t).map(move |j| (i, j))).collect();
    Graph::from_edges(s + t, &e)
}

/// G_{m,g}: the cycle 0..g-1 with m-g pendant vertices at vertex 0.
pub fn g_extremal(m: usize, g: usize) -> Result<Graph> {
    require(g >= 3, || format!("girth parameter must be >= 3, got {g}"))?;
    require(m >= g, || format!("G_{{m,g}} needs m >= g, got m={m}, g={g}"))?;
    let mut e: Vec<_> = cycle_edges(g).collect();
    e.extend((g..m).map(|p| (0, p)));
    Graph::from_edges(m, &e)
}

/// H_{m,c}: the cycle 0..c-1, vertex 0 joined to every cycle vertex
/// 2..=c-2, plus m-2c+3 pendant vertices at vertex 0.
pub fn h_extremal(m: usize, c: usize) -> Result<Graph> {
    require(c >= 3, || format!("circumference parameter must be >= 3, got {c}"))?;
    require(m + 3 >= 2 * c, || format!("H_{{m,c}} needs m >= 2c-3, got m={m}, c={c}"))?;
    let pendants = m + 3 - 2 * c;
    let mut e: Vec<_> = cycle_edges(c).collect();
    e.extend((2..c - 1).map(|v| (0, v)));
    e.extend((c..c + pendants).map(|p| (0, p)));
    Graph::from_edges(c + pendants, &e)
}

/// K_w^t: K_w with t pendant vertices at vertex 0.
pub fn clique_with_pendants(w: usize, t: usize) -> Result<Graph> {
    require(w >= 2, || format!("clique size must be >= 2, got {w}"))?;
    let mut e: Vec<_> = (0..w).flat_map(|i| (i + 1..w).map(move |j| (i, j))).collect();
    e.extend((w..w + t).map(|p| (0, p)));
    Graph::from_edges(w + t, &e)
}
