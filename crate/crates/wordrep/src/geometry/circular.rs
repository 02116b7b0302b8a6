//! Circular-arc containment models and circle-gon intersection models.
//!
//! Positions are integers in `(0, circumference)`; the cut point sits at
//! coordinate 0 and carries no endpoint.  An arc `(s, e)` with `s < e` runs
//! from `s` to `e` without passing the cut; `s > e` marks the arc that wraps
//! through the cut.  A vertex may carry no geometry at all (`None`, or an
//! empty arc list): both circular languages represent their graph class only
//! up to added isolated vertices, and a word-level isolated letter does not
//! always admit an arc placement, so detached vertices stay detached.

use std::collections::{BTreeMap, BTreeSet};

use super::{parse_component_line, respace, Role, Slot};
use crate::graphs::LabeledGraph;
use crate::words::{Letter, VertexWord};
use crate::{Error, Result};

/// Linear segments (within the cut-open circle) covered by an arc.
fn segments(arc: (i64, i64), circumference: i64) -> Vec<(i64, i64)> {
    let (s, e) = arc;
    if s < e {
        vec![(s, e)]
    } else {
        vec![(s, circumference), (0, e)]
    }
}

fn arcs_overlap(a: (i64, i64), b: (i64, i64), circ: i64) -> bool {
    segments(a, circ).iter().any(|&(s1, e1)| {
        segments(b, circ)
            .iter()
            .any(|&(s2, e2)| s1 <= e2 && s2 <= e1)
    })
}

/// Containment of arcs as point sets.
fn arc_contains(outer: (i64, i64), inner: (i64, i64)) -> bool {
    let (os, oe) = outer;
    let (is, ie) = inner;
    match (os < oe, is < ie) {
        (true, true) => os <= is && ie <= oe,
        (true, false) => false,
        (false, true) => is >= os || ie <= oe,
        (false, false) => is >= os && ie <= oe,
    }
}

/// A containment model of circular arcs: one arc per vertex, or no arc for a
/// detached (isolated) vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularArcSystem {
    pub circumference: i64,
    pub arcs: BTreeMap<Letter, Option<(i64, i64)>>,
}

impl CircularArcSystem {
    pub fn new(circumference: i64, arcs: BTreeMap<Letter, Option<(i64, i64)>>) -> Result<Self> {
        let sys = CircularArcSystem {
            circumference,
            arcs,
        };
        sys.validate()?;
        Ok(sys)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (v, arc) in &self.arcs {
            if let Some((s, e)) = arc {
                for &p in [s, e].iter() {
                    if p <= &0 || p >= &self.circumference {
                        return Err(Error::DegenerateModel(format!(
                            "endpoint {p} of vertex {v} is at or beyond the cut"
                        )));
                    }
                    if !seen.insert(*p) {
                        return Err(Error::DegenerateModel(format!(
                            "coincident arc endpoint {p}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn oracle_graph(&self) -> Result<LabeledGraph> {
        self.validate()?;
        let vs: Vec<Letter> = self.arcs.keys().copied().collect();
        let mut edges = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if let (Some(a), Some(b)) = (self.arcs[&u], self.arcs[&v]) {
                    if arc_contains(a, b) || arc_contains(b, a) {
                        edges.push((u, v));
                    }
                }
            }
        }
        LabeledGraph::new(vs, edges)
    }

    /// One flag occurrence per wrapping arc, then the counterclockwise sweep
    /// from the cut, then one occurrence per detached vertex.
    pub fn encode(&self) -> Result<VertexWord> {
        self.validate()?;
        let mut letters: Vec<Letter> = self
            .arcs
            .iter()
            .filter(|(_, a)| matches!(a, Some((s, e)) if s > e))
            .map(|(&v, _)| v)
            .collect();
        let mut coords: Vec<(i64, Letter)> = self
            .arcs
            .iter()
            .filter_map(|(&v, a)| a.map(|(s, e)| [(s, v), (e, v)]))
            .flatten()
            .collect();
        coords.sort_unstable();
        letters.extend(coords.into_iter().map(|(_, v)| v));
        letters.extend(self.arcs.iter().filter(|(_, a)| a.is_none()).map(|(&v, _)| v));
        VertexWord::new(letters)
    }

    /// Letters occurring twice become plain arcs, letters occurring thrice
    /// become wrapping arcs (the first occurrence is the flag); everything
    /// else is detached.
    pub fn decode(w: &VertexWord) -> Result<Self> {
        let active: BTreeSet<Letter> = w
            .alphabet()
            .into_iter()
            .filter(|&v| (2..=3).contains(&w.count(v)))
            .collect();
        let core = w.restricted(&active);
        // drop the flag occurrence of every thrice-occurring letter
        let mut letters = Vec::new();
        let mut seen: BTreeMap<Letter, usize> = BTreeMap::new();
        for &v in core.letters() {
            let n = seen.entry(v).or_insert(0);
            *n += 1;
            if !(core.count(v) == 3 && *n == 1) {
                letters.push(v);
            }
        }
        let reduced = VertexWord::new(letters)?;
        let mut arcs = BTreeMap::new();
        for v in w.alphabet() {
            if active.contains(&v) {
                let occ = reduced.occurrences(v);
                let (x, y) = if w.count(v) == 2 {
                    (occ[0] as i64, occ[1] as i64)
                } else {
                    (occ[1] as i64, occ[0] as i64)
                };
                arcs.insert(v, Some((x, y)));
            } else {
                arcs.insert(v, None);
            }
        }
        CircularArcSystem::new(reduced.len() as i64 + 1, arcs)
    }

    pub fn perturb(&self) -> Self {
        let items: Vec<(i64, Slot)> = self
            .arcs
            .iter()
            .filter_map(|(&v, a)| a.map(|(s, e)| [(s, (v, 0, Role::Left)), (e, (v, 1, Role::Right))]))
            .flatten()
            .collect();
        let map = respace(&items);
        let arcs = self
            .arcs
            .iter()
            .map(|(&v, a)| {
                let a = a.map(|_| (map[&(v, 0, Role::Left)], map[&(v, 1, Role::Right)]));
                (v, a)
            })
            .collect();
        CircularArcSystem {
            circumference: items.len() as i64 + 1,
            arcs,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("arc-cont {} {}\n", self.arcs.len(), self.circumference);
        for (v, a) in &self.arcs {
            match a {
                Some((s, e)) => out.push_str(&format!("{v} 0 {s} {e}\n")),
                None => out.push_str(&format!("{v} 1\n")),
            }
        }
        out
    }

    pub(crate) fn parse_body(params: &[i64], body: &[&str]) -> Result<Self> {
        let circumference = *params
            .first()
            .ok_or_else(|| Error::Parse("missing circumference".into()))?;
        let mut arcs = BTreeMap::new();
        for raw in body {
            let (id, role, coords) = parse_component_line(raw)?;
            match (role, coords.as_slice()) {
                (0, [s, e]) => {
                    arcs.insert(id, Some((*s, *e)));
                }
                (1, []) => {
                    arcs.insert(id, None);
                }
                _ => return Err(Error::Parse(format!("bad arc line {raw:?}"))),
            }
        }
        CircularArcSystem::new(circumference, arcs)
    }
}

/// An intersection model of circle-gons: each vertex owns up to `k` pairwise
/// disjoint arcs (at most one through the cut); its region is the convex
/// hull of their union.  An empty arc list marks a detached vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleGonSystem {
    pub k: usize,
    pub circumference: i64,
    pub arcs: BTreeMap<Letter, Vec<(i64, i64)>>,
}

impl CircleGonSystem {
    pub fn new(
        k: usize,
        circumference: i64,
        arcs: BTreeMap<Letter, Vec<(i64, i64)>>,
    ) -> Result<Self> {
        let sys = CircleGonSystem {
            k,
            circumference,
            arcs,
        };
        sys.validate()?;
        Ok(sys)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (v, arcs) in &self.arcs {
            if arcs.len() > self.k {
                return Err(Error::DegenerateModel(format!(
                    "vertex {v} has {} arcs, limit {}",
                    arcs.len(),
                    self.k
                )));
            }
            let mut wraps = 0;
            for &(s, e) in arcs {
                if s == e || s <= 0 || e <= 0 || s >= self.circumference || e >= self.circumference
                {
                    return Err(Error::DegenerateModel(format!(
                        "bad arc ({s},{e}) of vertex {v}"
                    )));
                }
                if s > e {
                    wraps += 1;
                }
                for p in [s, e] {
                    if !seen.insert(p) {
                        return Err(Error::DegenerateModel(format!(
                            "coincident arc endpoint {p}"
                        )));
                    }
                }
            }
            if wraps > 1 {
                return Err(Error::DegenerateModel(format!(
                    "vertex {v} has two arcs through the cut"
                )));
            }
            for (i, &a) in arcs.iter().enumerate() {
                for &b in &arcs[i + 1..] {
                    if arcs_overlap(a, b, self.circumference) {
                        return Err(Error::DegenerateModel(format!(
                            "arcs of vertex {v} overlap each other"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Convex hulls intersect iff some arcs overlap, or the two arc families
    /// interleave around the circle (no separating chord).
    fn hulls_intersect(&self, u: Letter, v: Letter) -> bool {
        let (a, b) = (&self.arcs[&u], &self.arcs[&v]);
        if a.is_empty() || b.is_empty() {
            return false;
        }
        for &x in a {
            for &y in b {
                if arcs_overlap(x, y, self.circumference) {
                    return true;
                }
            }
        }
        // all arcs pairwise disjoint: sort by start position; the wrapping
        // arc, if any, comes last and closes the cycle
        let mut owned: Vec<(i64, Letter)> = a
            .iter()
            .map(|&(s, _)| (s, u))
            .chain(b.iter().map(|&(s, _)| (s, v)))
            .collect();
        owned.sort_unstable();
        let changes = owned
            .iter()
            .zip(owned.iter().cycle().skip(1))
            .filter(|((_, x), (_, y))| x != y)
            .count();
        changes > 2
    }

    pub fn oracle_graph(&self) -> Result<LabeledGraph> {
        self.validate()?;
        let vs: Vec<Letter> = self.arcs.keys().copied().collect();
        let mut edges = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if self.hulls_intersect(u, v) {
                    edges.push((u, v));
                }
            }
        }
        LabeledGraph::new(vs, edges)
    }

    /// One flag occurrence per vertex whose filament passes the cut, then
    /// the sweep, then one occurrence per detached vertex.
    pub fn encode(&self) -> Result<VertexWord> {
        self.validate()?;
        let mut letters: Vec<Letter> = self
            .arcs
            .iter()
            .filter(|(_, arcs)| arcs.iter().any(|&(s, e)| s > e))
            .map(|(&v, _)| v)
            .collect();
        let mut coords: Vec<(i64, Letter)> = self
            .arcs
            .iter()
            .flat_map(|(&v, arcs)| arcs.iter().flat_map(move |&(s, e)| [(s, v), (e, v)]))
            .collect();
        coords.sort_unstable();
        letters.extend(coords.into_iter().map(|(_, v)| v));
        letters.extend(
            self.arcs
                .iter()
                .filter(|(_, arcs)| arcs.is_empty())
                .map(|(&v, _)| v),
        );
        VertexWord::new(letters)
    }

    /// Even occurrence counts pair up into plain arcs; odd counts ignore the
    /// flag and route one arc through the cut from the last occurrence back
    /// to the second.
    pub fn decode(w: &VertexWord, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArguments("k must be positive".into()));
        }
        let circumference = w.len() as i64 + 1;
        let mut arcs = BTreeMap::new();
        for v in w.alphabet() {
            let occ = w.occurrences(v);
            let c = occ.len();
            let list: Vec<(i64, i64)> = if (2..=2 * k + 1).contains(&c) {
                if c.is_multiple_of(2) {
                    occ.chunks(2).map(|p| (p[0] as i64, p[1] as i64)).collect()
                } else {
                    let mut list = vec![(occ[c - 1] as i64, occ[1] as i64)];
                    for p in occ[2..c - 1].chunks(2) {
                        list.push((p[0] as i64, p[1] as i64));
                    }
                    list
                }
            } else {
                Vec::new()
            };
            arcs.insert(v, list);
        }
        CircleGonSystem::new(k, circumference, arcs)
    }

    pub fn perturb(&self) -> Self {
        let items: Vec<(i64, Slot)> = self
            .arcs
            .iter()
            .flat_map(|(&v, arcs)| {
                arcs.iter().enumerate().flat_map(move |(i, &(s, e))| {
                    [(s, (v, i, Role::Left)), (e, (v, i, Role::Right))]
                })
            })
            .collect();
        let map = respace(&items);
        let arcs = self
            .arcs
            .iter()
            .map(|(&v, list)| {
                let list = (0..list.len())
                    .map(|i| (map[&(v, i, Role::Left)], map[&(v, i, Role::Right)]))
                    .collect();
                (v, list)
            })
            .collect();
        CircleGonSystem {
            k: self.k,
            circumference: items.len() as i64 + 1,
            arcs,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "circle-gon {} {} {}\n",
            self.arcs.len(),
            self.k,
            self.circumference
        );
        for (v, arcs) in &self.arcs {
            if arcs.is_empty() {
                out.push_str(&format!("{v} 0\n"));
            }
            for (i, (s, e)) in arcs.iter().enumerate() {
                out.push_str(&format!("{v} {} {s} {e}\n", i + 1));
            }
        }
        out
    }

    pub(crate) fn parse_body(params: &[i64], body: &[&str]) -> Result<Self> {
        if params.len() < 2 {
            return Err(Error::Parse("circle-gon header needs k and circumference".into()));
        }
        let (k, circumference) = (params[0] as usize, params[1]);
        let mut arcs: BTreeMap<Letter, Vec<(i64, i64)>> = BTreeMap::new();
        for raw in body {
            let (id, role, coords) = parse_component_line(raw)?;
            match (role, coords.as_slice()) {
                (0, []) => {
                    arcs.entry(id).or_default();
                }
                (_, [s, e]) if role >= 1 => {
                    arcs.entry(id).or_default().push((*s, *e));
                }
                _ => return Err(Error::Parse(format!("bad circle-gon line {raw:?}"))),
            }
        }
        CircleGonSystem::new(k, circumference, arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::decode_graph;
    use crate::languages::{arc_containment_language, circle_gon_language};

    #[test]
    fn p4_arc_containment_example() {
        let w = VertexWord::parse("abacddbbca").unwrap();
        let sys = CircularArcSystem::decode(&w).unwrap();
        // a occurs thrice and wraps the cut
        let (x, y) = sys.arcs[&1].unwrap();
        assert!(x > y);
        let g = sys.oracle_graph().unwrap();
        assert_eq!(g.edge_list(), vec![(1, 2), (2, 4), (3, 4)]);
        assert_eq!(g, decode_graph(&arc_containment_language(), &w));
    }

    #[test]
    fn arc_encode_decode_graph_roundtrip() {
        let mut arcs = BTreeMap::new();
        arcs.insert(1, Some((8, 2))); // wraps
        arcs.insert(2, Some((3, 7)));
        arcs.insert(3, Some((4, 5)));
        arcs.insert(4, None);
        let sys = CircularArcSystem::new(9, arcs).unwrap();
        let g = sys.oracle_graph().unwrap();
        // 3's arc nests inside 2's; 1 wraps and is disjoint from both
        assert_eq!(g.edge_list(), vec![(2, 3)]);
        let w = sys.encode().unwrap();
        assert_eq!(g, decode_graph(&arc_containment_language(), &w));
    }

    #[test]
    fn arc_containment_tests_point_sets() {
        // wrap arc contains a plain arc near the cut on either side
        assert!(arc_contains((8, 3), (9, 10)));
        assert!(arc_contains((8, 3), (1, 2)));
        assert!(!arc_contains((8, 3), (4, 7)));
        // plain arcs never contain wrapping arcs
        assert!(!arc_contains((1, 9), (8, 3)));
        // nested wrapping arcs
        assert!(arc_contains((7, 4), (8, 3)));
        assert!(!arc_contains((8, 3), (7, 4)));
    }

    #[test]
    fn circle_gon_chords() {
        // two chords: nested endpoints intersect (hull contains the inner
        // arc), separated endpoints do not
        let mut arcs = BTreeMap::new();
        arcs.insert(1, vec![(1, 4)]);
        arcs.insert(2, vec![(2, 3)]);
        let sys = CircleGonSystem::new(1, 5, arcs).unwrap();
        assert_eq!(sys.oracle_graph().unwrap().edge_list(), vec![(1, 2)]);

        let mut arcs = BTreeMap::new();
        arcs.insert(1, vec![(1, 2)]);
        arcs.insert(2, vec![(3, 4)]);
        let sys = CircleGonSystem::new(1, 5, arcs).unwrap();
        assert!(sys.oracle_graph().unwrap().edge_list().is_empty());

        // alternating endpoints: crossing chords
        let mut arcs = BTreeMap::new();
        arcs.insert(1, vec![(1, 3)]);
        arcs.insert(2, vec![(2, 4)]);
        let sys = CircleGonSystem::new(1, 5, arcs).unwrap();
        assert_eq!(sys.oracle_graph().unwrap().edge_list(), vec![(1, 2)]);
    }

    #[test]
    fn circle_gon_word_roundtrip() {
        let w = VertexWord::parse("abacbdbcdada").unwrap();
        let lang = circle_gon_language(2).unwrap();
        let sys = CircleGonSystem::decode(&w, 2).unwrap();
        assert_eq!(sys.oracle_graph().unwrap(), decode_graph(&lang, &w));
        let w2 = sys.encode().unwrap();
        assert_eq!(
            decode_graph(&lang, &w2),
            sys.oracle_graph().unwrap()
        );
    }

    #[test]
    fn detached_vertices_stay_isolated() {
        let mut arcs = BTreeMap::new();
        arcs.insert(1, vec![(4, 1)]); // wraps
        arcs.insert(2, vec![(2, 3)]);
        arcs.insert(3, vec![]);
        let sys = CircleGonSystem::new(1, 5, arcs).unwrap();
        let g = sys.oracle_graph().unwrap();
        assert!(g.is_isolated(3));
        let w = sys.encode().unwrap();
        assert_eq!(w.count(3), 1);
        let lang = circle_gon_language(1).unwrap();
        assert_eq!(decode_graph(&lang, &w), g);
    }
}
