//! Isomorphism-free families of graphs with a fixed number of edges and no
//! isolated vertices, optionally constrained by girth or circumference.
//!
//! Connected classes are grown one edge at a time: every connected graph
//! with k ≥ 2 edges arises from one with k − 1 edges by adding either an
//! edge between existing vertices or a pendant edge to a new vertex, and
//! children are deduplicated by canonical graph6. Girth ≥ g and
//! circumference ≤ c are closed under taking subgraphs, so the growth is
//! pruned to the constraint's hereditary closure. A family member is then a
//! multiset of connected classes whose edge counts sum to m; each multiset
//! is a distinct isomorphism class, and its canonical form is the union of
//! its canonical components in graph6 order.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_labeling_connected;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};
use crate::graph6::{parse_graph6, to_graph6};
use crate::spectral::{q_radius_with, SolverConfig};
use crate::structure::{circumference, girth};

pub const DEFAULT_EDGE_CAP: usize = 12;

/// Co-maximality tolerance on q.
pub const DEFAULT_GAP_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Constraint {
    None,
    Girth(usize),
    Circumference(usize),
    CircumferenceAtLeast(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub m: usize,
    pub constraint: Constraint,
}

impl FamilySpec {
    pub fn new(m: usize, constraint: Constraint) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidParameter("edge count must be >= 1".into()));
        }
        match constraint {
            Constraint::Girth(g) if g < 3 => Err(Error::InvalidParameter(format!("girth must be >= 3, got {g}"))),
            Constraint::Circumference(c) | Constraint::CircumferenceAtLeast(c) if c < 3 => {
                Err(Error::InvalidParameter(format!("circumference must be >= 3, got {c}")))
            }
            _ => Ok(FamilySpec { m, constraint }),
        }
    }

    pub fn girth(m: usize, g: usize) -> Result<Self> {
        Self::new(m, Constraint::Girth(g))
    }

    pub fn circumference(m: usize, c: usize) -> Result<Self> {
        Self::new(m, Constraint::Circumference(c))
    }

    fn closure(&self) -> Closure {
        match self.constraint {
            Constraint::Girth(g) if g > 3 => Closure::GirthAtLeast(g),
            Constraint::Circumference(c) => Closure::CircumferenceAtMost(c),
            _ => Closure::All,
        }
    }

    fn accepts(&self, girth: Option<usize>, circ: Option<usize>) -> bool {
        match self.constraint {
            Constraint::None => true,
            Constraint::Girth(g) => girth == Some(g),
            Constraint::Circumference(c) => circ == Some(c),
            Constraint::CircumferenceAtLeast(c) => circ.is_some_and(|x| x >= c),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.constraint {
            Constraint::None => write!(f, "m={}", self.m),
            Constraint::Girth(g) => write!(f, "m={} girth={g}", self.m),
            Constraint::Circumference(c) => write!(f, "m={} circumference={c}", self.m),
            Constraint::CircumferenceAtLeast(c) => write!(f, "m={} circumference>={c}", self.m),
        }
    }
}

/// Subgraph-closed superset of a constraint used to prune growth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Closure {
    All,
    GirthAtLeast(usize),
    CircumferenceAtMost(usize),
}

impl Closure {
    fn keeps(&self, class: &ConnectedClass) -> bool {
        match *self {
            Closure::All => true,
            Closure::GirthAtLeast(g) => class.girth.is_none_or(|x| x >= g),
            Closure::CircumferenceAtMost(c) => class.circumference.is_none_or(|x| x <= c),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct EnumerationStats {
    /// Candidate graphs built before deduplication: edge augmentations of
    /// connected classes plus component multisets.
    pub generated: u64,
    /// Isomorphism classes with m edges in the pruned universe.
    pub unique: u64,
    /// Classes satisfying the constraint.
    pub matching: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Clone, Debug)]
pub struct ConnectedClass {
    pub graph: Graph,
    pub graph6: String,
    pub girth: Option<usize>,
    pub circumference: Option<usize>,
}

impl ConnectedClass {
    fn new(graph6: String) -> Self {
        let graph = parse_graph6(&graph6).expect("canonical graph6 parses");
        ConnectedClass {
            girth: girth(&graph),
            circumference: circumference(&graph),
            graph,
            graph6,
        }
    }
}

/// Connected classes by edge count (index k holds graphs with k edges).
#[derive(Debug, Default)]
struct Levels {
    by_edges: Vec<Vec<ConnectedClass>>,
    generated: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    /// Canonical graph6.
    pub graph6: String,
    /// Indices into [`Family::classes`], in canonical component order.
    pub components: Vec<usize>,
}

#[derive(Debug)]
pub struct Family {
    pub spec: FamilySpec,
    /// Members sorted by canonical bytes.
    pub members: Vec<FamilyMember>,
    /// Connected classes referenced by members.
    pub classes: Vec<ConnectedClass>,
    pub stats: EnumerationStats,
}

impl Family {
    pub fn graph(&self, member: &FamilyMember) -> Graph {
        parse_graph6(&member.graph6).expect("canonical graph6 parses")
    }

    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.members.iter().map(|m| self.graph(m))
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnumConfig {
    pub edge_cap: usize,
    /// Worker threads; `None` uses all available parallelism.
    pub workers: Option<usize>,
    pub solver: SolverConfig,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            edge_cap: DEFAULT_EDGE_CAP,
            workers: None,
            solver: SolverConfig::default(),
        }
    }
}

/// Enumerator with a cache of connected levels per pruning closure, so
/// repeated queries (e.g. every m for a fixed girth) share work.
pub struct Enumerator {
    cfg: EnumConfig,
    pool: rayon::ThreadPool,
    levels: Mutex<HashMap<Closure, Levels>>,
    q_cache: Mutex<HashMap<String, f64>>,
}

impl Enumerator {
    pub fn new(cfg: EnumConfig) -> Result<Self> {
        if cfg.edge_cap < 1 {
            return Err(Error::InvalidParameter("edge cap must be >= 1".into()));
        }
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(w) = cfg.workers {
            if w < 1 {
                return Err(Error::InvalidParameter("workers must be >= 1".into()));
            }
            builder = builder.num_threads(w);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
        Ok(Enumerator {
            cfg,
            pool,
            levels: Mutex::new(HashMap::new()),
            q_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn config(&self) -> &EnumConfig {
        &self.cfg
    }

    pub fn enumerate(&self, spec: &FamilySpec) -> Result<Family> {
        if spec.m > self.cfg.edge_cap {
            return Err(Error::ResourceLimit(format!(
                "m={} exceeds the edge cap {}",
                spec.m, self.cfg.edge_cap
            )));
        }
        let start = Instant::now();
        let closure = spec.closure();
        let (classes, aug_generated) = self.connected_upto(closure, spec.m);

        // Global class list sorted by (edges, graph6); multisets are
        // non-decreasing index sequences.
        let mut edges_of = Vec::with_capacity(classes.len());
        for c in &classes {
            edges_of.push(c.graph.m());
        }
        let mut members = Vec::new();
        let mut multisets = 0u64;
        let mut chosen = Vec::new();
        compose(&classes, &edges_of, spec.m, 0, 0, &mut chosen, &mut |picked| {
            multisets += 1;
            let girth = picked.iter().filter_map(|&i| classes[i].girth).min();
            let circ = picked.iter().filter_map(|&i| classes[i].circumference).max();
            if spec.accepts(girth, circ) {
                members.push(picked.to_vec());
            }
        });

        let mut members: Vec<FamilyMember> = self.pool.install(|| {
            members
                .into_par_iter()
                .map(|mut comps| {
                    comps.sort_by(|&a, &b| classes[a].graph6.cmp(&classes[b].graph6));
                    let mut union = classes[comps[0]].graph.clone();
                    for &c in &comps[1..] {
                        union = union.disjoint_union(&classes[c].graph).expect("vertex count within cap");
                    }
                    FamilyMember {
                        graph6: to_graph6(&union),
                        components: comps,
                    }
                })
                .collect()
        });
        members.sort_by(|a, b| a.graph6.cmp(&b.graph6));

        let stats = EnumerationStats {
            generated: aug_generated + multisets,
            unique: multisets,
            matching: members.len() as u64,
            wall_time: start.elapsed(),
        };
        Ok(Family {
            spec: *spec,
            members,
            classes,
            stats,
        })
    }

    /// q of every member, in member order.
    pub fn member_q(&self, family: &Family) -> Result<Vec<f64>> {
        let class_q = self.class_q(&family.classes)?;
        Ok(family
            .members
            .iter()
            .map(|m| m.components.iter().map(|&c| class_q[c]).fold(f64::NEG_INFINITY, f64::max))
            .collect())
    }

    fn class_q(&self, classes: &[ConnectedClass]) -> Result<Vec<f64>> {
        let solver = self.cfg.solver;
        let missing: Vec<usize> = {
            let cache = self.q_cache.lock().expect("q cache poisoned");
            (0..classes.len()).filter(|&i| !cache.contains_key(&classes[i].graph6)).collect()
        };
        let computed: Vec<(usize, f64)> = self.pool.install(|| {
            missing
                .into_par_iter()
                .map(|i| q_radius_with(&classes[i].graph, &solver).map(|r| (i, r.q)))
                .collect::<Result<_>>()
        })?;
        let mut cache = self.q_cache.lock().expect("q cache poisoned");
        for (i, q) in computed {
            cache.insert(classes[i].graph6.clone(), q);
        }
        Ok(classes.iter().map(|c| cache[&c.graph6]).collect())
    }

    /// Argmax of q over a family.
    pub fn argmax_q(&self, family: &Family, gap_tol: f64) -> Result<Argmax> {
        if family.is_empty() {
            return Err(Error::EmptyFamily(format!("no graphs with {}", family.spec)));
        }
        let qs = self.member_q(family)?;
        let q_max = qs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mut maxima = Vec::new();
        let mut runner_up: Option<f64> = None;
        for (m, &q) in family.members.iter().zip(&qs) {
            if q >= q_max - gap_tol {
                maxima.push((m.graph6.clone(), q));
            } else {
                runner_up = Some(runner_up.map_or(q, |r| r.max(q)));
            }
        }
        Ok(Argmax {
            q_max,
            maxima,
            runner_up_q: runner_up,
            gap: runner_up.map(|r| q_max - r),
        })
    }

    /// Connected classes with at most `m` edges inside `closure`, in
    /// (edges, graph6) order, and the augmentation count that produced them.
    fn connected_upto(&self, closure: Closure, m: usize) -> (Vec<ConnectedClass>, u64) {
        let mut all = self.levels.lock().expect("level cache poisoned");
        let levels = all.entry(closure).or_default();
        if levels.by_edges.is_empty() {
            levels.by_edges.push(Vec::new());
            levels.generated.push(0);
        }
        while levels.by_edges.len() <= m {
            let k = levels.by_edges.len();
            let (next, generated) = if k == 1 {
                let k2 = ConnectedClass::new(to_graph6(&Graph::from_edges(2, &[(0, 1)]).expect("K2")));
                (vec![k2], 1)
            } else {
                self.grow(&levels.by_edges[k - 1])
            };
            let next: Vec<_> = next.into_iter().filter(|c| closure.keeps(c)).collect();
            levels.by_edges.push(next);
            levels.generated.push(generated);
        }
        let classes = levels.by_edges[1..=m].iter().flatten().cloned().collect();
        let generated = levels.generated[1..=m].iter().sum();
        (classes, generated)
    }

    /// One augmentation step; returns the new classes sorted by graph6.
    fn grow(&self, parents: &[ConnectedClass]) -> (Vec<ConnectedClass>, u64) {
        const CHUNK: usize = 512;
        let mut seen: HashSet<String> = HashSet::new();
        let mut generated = 0u64;
        for chunk in parents.chunks(CHUNK) {
            let children: Vec<(u64, Vec<String>)> = self.pool.install(|| chunk.par_iter().map(|p| augment(&p.graph)).collect());
            for (count, kids) in children {
                generated += count;
                seen.extend(kids);
            }
        }
        let mut keys: Vec<String> = seen.into_iter().collect();
        keys.sort();
        let classes = self.pool.install(|| keys.into_par_iter().map(ConnectedClass::new).collect());
        (classes, generated)
    }
}

/// Canonical graph6 of every one-edge augmentation of a connected graph.
fn augment(g: &Graph) -> (u64, Vec<String>) {
    let n = g.n();
    let mut out = HashSet::new();
    let mut count = 0;
    let mut push = |child: Graph| {
        count += 1;
        let perm = canonical_labeling_connected(&child);
        out.insert(to_graph6(&child.permuted(&perm)));
    };
    for a in 0..n {
        for b in a + 1..n {
            if g.mask(a) & bit(b) == 0 {
                push(g.edited(&[(a, b)], &[]));
            }
        }
    }
    if n < MAX_VERTICES {
        let bigger = g.with_isolated(1).expect("below vertex cap");
        for a in 0..n {
            push(bigger.edited(&[(a, n)], &[]));
        }
    }
    (count, out.into_iter().collect())
}

/// Visits every multiset of classes (as non-decreasing index lists) whose
/// edge counts sum to `remaining`.
fn compose(
    classes: &[ConnectedClass],
    edges_of: &[usize],
    remaining: usize,
    from: usize,
    vertices: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        visit(chosen);
        return;
    }
    for i in from..classes.len() {
        if edges_of[i] > remaining {
            // sorted by edge count
            break;
        }
        let nv = vertices + classes[i].graph.n();
        if nv > MAX_VERTICES {
            continue;
        }
        chosen.push(i);
        compose(classes, edges_of, remaining - edges_of[i], i, nv, chosen, visit);
        chosen.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Argmax {
    pub q_max: f64,
    /// Members within the gap tolerance of `q_max`, in canonical order.
    pub maxima: Vec<(String, f64)>,
    pub runner_up_q: Option<f64>,
    pub gap: Option<f64>,
}

/// One-shot enumeration with the default configuration and the given cap.
pub fn enumerate(spec: &FamilySpec) -> Result<Family> {
    Enumerator::new(EnumConfig::default())?.enumerate(spec)
}

pub fn argmax_q(spec: &FamilySpec, gap_tol: f64) -> Result<Argmax> {
    let e = Enumerator::new(EnumConfig::default())?;
    let fam = e.enumerate(spec)?;
    e.argmax_q(&fam, gap_tol)
}
