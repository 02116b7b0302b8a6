//! Labeled graphs and the decode operation from language and word.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::languages::FiniteLanguage;
use crate::words::{project, Letter, VertexWord};
use crate::{Error, Result};

/// Guard for the brute-force isomorphism search.
pub const ISO_GUARD: usize = 8;

/// A simple undirected graph on integer-labeled vertices.  Edges are stored
/// as ordered pairs `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LabeledGraph {
    vertices: BTreeSet<Letter>,
    edges: BTreeSet<(Letter, Letter)>,
}

impl LabeledGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = Letter>,
        edges: impl IntoIterator<Item = (Letter, Letter)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<Letter> = vertices.into_iter().collect();
        let mut canon = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArguments(format!("self-loop at {u}")));
            }
            if !vertices.contains(&u) || !vertices.contains(&v) {
                return Err(Error::InvalidArguments(format!(
                    "edge {{{u},{v}}} leaves the vertex set"
                )));
            }
            canon.insert((u.min(v), u.max(v)));
        }
        Ok(LabeledGraph {
            vertices,
            edges: canon,
        })
    }

    pub fn vertices(&self) -> &BTreeSet<Letter> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(Letter, Letter)> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: Letter, v: Letter) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: Letter) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_isolated(&self, v: Letter) -> bool {
        self.degree(v) == 0
    }

    /// Same vertices, complemented edge relation.
    pub fn complement(&self) -> LabeledGraph {
        let vs: Vec<Letter> = self.vertices.iter().copied().collect();
        let mut edges = BTreeSet::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.has_edge(u, v) {
                    edges.insert((u, v));
                }
            }
        }
        LabeledGraph {
            vertices: self.vertices.clone(),
            edges,
        }
    }

    /// The subgraph induced by `keep`.
    pub fn induced(&self, keep: &BTreeSet<Letter>) -> Result<LabeledGraph> {
        if !keep.is_subset(&self.vertices) {
            return Err(Error::InvalidArguments(
                "induced vertex set is not a subset".into(),
            ));
        }
        Ok(LabeledGraph {
            vertices: keep.clone(),
            edges: self
                .edges
                .iter()
                .filter(|(u, v)| keep.contains(u) && keep.contains(v))
                .copied()
                .collect(),
        })
    }

    /// Renders the graph text format: `n m` then one sorted `u v` line per
    /// edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn edge_list(&self) -> Vec<(Letter, Letter)> {
        self.edges.iter().copied().collect()
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(V={:?}, E={:?})",
            self.vertices.iter().collect::<Vec<_>>(),
            self.edges.iter().collect::<Vec<_>>()
        )
    }
}

/// Decodes `G(L, w)`: vertices are the letters of `w`, and two letters are
/// adjacent iff their projection lies in `L`.
pub fn decode_graph(language: &FiniteLanguage, w: &VertexWord) -> LabeledGraph {
    let vertices = w.alphabet();
    let vs: Vec<Letter> = vertices.iter().copied().collect();
    let mut edges = BTreeSet::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            let h = project(w, u, v).expect("distinct letters");
            if language.contains(&h) {
                edges.insert((u, v));
            }
        }
    }
    LabeledGraph { vertices, edges }
}

/// Labeled equality: same vertex set, same edge set.
pub fn graphs_equal(g: &LabeledGraph, h: &LabeledGraph) -> bool {
    g == h
}

/// Brute-force isomorphism for graphs on at most [`ISO_GUARD`] vertices,
/// with a degree-sequence prefilter.
pub fn is_isomorphic_small(g: &LabeledGraph, h: &LabeledGraph) -> Result<bool> {
    if g.vertex_count() > ISO_GUARD || h.vertex_count() > ISO_GUARD {
        return Err(Error::Capacity(format!(
            "isomorphism search limited to {ISO_GUARD} vertices"
        )));
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let gs: Vec<Letter> = g.vertices.iter().copied().collect();
    let hs: Vec<Letter> = h.vertices.iter().copied().collect();
    let mut gdeg: Vec<usize> = gs.iter().map(|&v| g.degree(v)).collect();
    let mut hdeg: Vec<usize> = hs.iter().map(|&v| h.degree(v)).collect();
    gdeg.sort_unstable();
    hdeg.sort_unstable();
    if gdeg != hdeg {
        return Ok(false);
    }

    fn extend(
        g: &LabeledGraph,
        h: &LabeledGraph,
        gs: &[Letter],
        hs: &[Letter],
        map: &mut BTreeMap<Letter, Letter>,
        used: &mut BTreeSet<Letter>,
    ) -> bool {
        let i = map.len();
        if i == gs.len() {
            return true;
        }
        let u = gs[i];
        for &cand in hs {
            if used.contains(&cand) {
                continue;
            }
            if g.degree(u) != h.degree(cand) {
                continue;
            }
            let ok = map
                .iter()
                .all(|(&a, &b)| g.has_edge(a, u) == h.has_edge(b, cand));
            if ok {
                map.insert(u, cand);
                used.insert(cand);
                if extend(g, h, gs, hs, map, used) {
                    return true;
                }
                map.remove(&u);
                used.remove(&cand);
            }
        }
        false
    }

    Ok(extend(
        g,
        h,
        &gs,
        &hs,
        &mut BTreeMap::new(),
        &mut BTreeSet::new(),
    ))
}

/// Parses the graph text format produced by [`LabeledGraph::to_text`],
/// together with an explicit vertex list for isolated vertices: the header
/// `n m` is followed by `m` edge lines; vertices are inferred as `1..=n`
/// unless edge endpoints exceed `n`.
pub fn graph_from_text(text: &str) -> Result<LabeledGraph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph text".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("bad graph header".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("bad graph header".into()))?;
    let mut vertices: BTreeSet<Letter> = (1..=n as Letter).collect();
    let mut edges = Vec::new();
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse("missing edge line".into()))?;
        let mut it = line.split_whitespace();
        let u: Letter = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
        let v: Letter = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
        vertices.insert(u);
        vertices.insert(v);
        edges.push((u, v));
    }
    LabeledGraph::new(vertices, edges)
}

/// Convenience constructors for the small named graphs used all over the
/// test suites.
pub fn path_graph(n: usize) -> LabeledGraph {
    LabeledGraph::new(
        1..=n as Letter,
        (1..n as Letter).map(|i| (i, i + 1)),
    )
    .unwrap()
}

pub fn cycle_graph(n: usize) -> LabeledGraph {
    let mut edges: Vec<(Letter, Letter)> = (1..n as Letter).map(|i| (i, i + 1)).collect();
    edges.push((1, n as Letter));
    LabeledGraph::new(1..=n as Letter, edges).unwrap()
}

pub fn complete_graph(n: usize) -> LabeledGraph {
    let mut edges = Vec::new();
    for u in 1..=n as Letter {
        for v in (u + 1)..=(n as Letter) {
            edges.push((u, v));
        }
    }
    LabeledGraph::new(1..=n as Letter, edges).unwrap()
}

pub fn empty_graph(n: usize) -> LabeledGraph {
    LabeledGraph::new(1..=n as Letter, std::iter::empty()).unwrap()
}
