//! Interval, track, box, and trapezoid systems on parallel lines.

use std::collections::{BTreeMap, BTreeSet};

use super::{
    intervals_intersect, parse_component_line, respace, two_trapezoids_intersect, Role, Slot,
};
use crate::graphs::LabeledGraph;
use crate::words::{Letter, VertexWord};
use crate::{Error, Result};

pub(crate) type Assignment = BTreeMap<Letter, Vec<(i64, i64)>>;

fn check_component_count(assignment: &Assignment, per_vertex: usize) -> Result<()> {
    for (v, ivs) in assignment {
        if ivs.len() != per_vertex {
            return Err(Error::InvalidArguments(format!(
                "vertex {v} has {} components, expected {per_vertex}",
                ivs.len()
            )));
        }
        for &(l, r) in ivs {
            if l > r {
                return Err(Error::DegenerateModel(format!(
                    "vertex {v} has an empty interval [{l},{r}]"
                )));
            }
        }
    }
    Ok(())
}

fn check_distinct(endpoints: impl Iterator<Item = i64>, scope: &str) -> Result<()> {
    let mut seen = BTreeSet::new();
    for x in endpoints {
        if !seen.insert(x) {
            return Err(Error::DegenerateModel(format!(
                "coincident endpoint {x} {scope}"
            )));
        }
    }
    Ok(())
}

/// Occurrence-pair decoding shared by every per-line family: letters with
/// exactly `2·lines` occurrences become one interval per consecutive index
/// pair; all other letters are placed past `|w|`, pairwise disjoint.
fn decode_occurrence_pairs(w: &VertexWord, lines: usize) -> Assignment {
    let mut assignment = Assignment::new();
    let mut cursor = w.len() as i64;
    for v in w.alphabet() {
        let occ = w.occurrences(v);
        if occ.len() == 2 * lines {
            let ivs = occ
                .chunks(2)
                .map(|p| (p[0] as i64, p[1] as i64))
                .collect();
            assignment.insert(v, ivs);
        } else {
            let mut ivs = Vec::with_capacity(lines);
            for _ in 0..lines {
                ivs.push((cursor + 1, cursor + 2));
                cursor += 2;
            }
            assignment.insert(v, ivs);
        }
    }
    assignment
}

/// Emits the owner of every endpoint in coordinate order.
fn sweep_word(coords: Vec<(i64, Letter)>) -> VertexWord {
    let mut coords = coords;
    coords.sort_unstable();
    VertexWord::new(coords.into_iter().map(|(_, v)| v).collect()).unwrap()
}

/// Shifts each line into its own coordinate range (all of line `i` before
/// all of line `i+1`) and sweeps; the word then carries line `m` as the
/// `m`-th occurrence pair of each letter.
fn encode_lines_shifted(assignment: &Assignment, lines: usize) -> VertexWord {
    let mut coords = Vec::new();
    let mut offset = 0i64;
    for line in 0..lines {
        let lo = assignment.values().map(|ivs| ivs[line].0).min().unwrap_or(0);
        let hi = assignment.values().map(|ivs| ivs[line].1).max().unwrap_or(0);
        for (&v, ivs) in assignment {
            let (l, r) = ivs[line];
            coords.push((l - lo + offset, v));
            coords.push((r - lo + offset, v));
        }
        offset += hi - lo + 1;
    }
    sweep_word(coords)
}

fn respace_per_line(assignment: &Assignment, lines: usize) -> Assignment {
    let mut out: Assignment = assignment
        .keys()
        .map(|&v| (v, vec![(0, 0); lines]))
        .collect();
    for line in 0..lines {
        let items: Vec<(i64, Slot)> = assignment
            .iter()
            .flat_map(|(&v, ivs)| {
                [
                    (ivs[line].0, (v, line, Role::Left)),
                    (ivs[line].1, (v, line, Role::Right)),
                ]
            })
            .collect();
        let map = respace(&items);
        for &v in assignment.keys() {
            out.get_mut(&v).unwrap()[line] = (
                map[&(v, line, Role::Left)],
                map[&(v, line, Role::Right)],
            );
        }
    }
    out
}

fn assignment_to_text(name: &str, params: &[usize], assignment: &Assignment) -> String {
    let mut out = format!("{name} {}", assignment.len());
    for p in params {
        out.push_str(&format!(" {p}"));
    }
    out.push('\n');
    for (v, ivs) in assignment {
        for (i, (l, r)) in ivs.iter().enumerate() {
            out.push_str(&format!("{v} {} {l} {r}\n", i + 1));
        }
    }
    out
}

fn assignment_from_body(params: &[i64], body: &[&str]) -> Result<(usize, Assignment)> {
    let lines = *params
        .first()
        .ok_or_else(|| Error::Parse("missing line/track/axis count".into()))?;
    if lines < 1 {
        return Err(Error::Parse("component count must be positive".into()));
    }
    let lines = lines as usize;
    let mut assignment = Assignment::new();
    for raw in body {
        let (id, role, coords) = parse_component_line(raw)?;
        if role < 1 || role > lines || coords.len() != 2 {
            return Err(Error::Parse(format!("bad component line {raw:?}")));
        }
        let entry = assignment
            .entry(id)
            .or_insert_with(|| vec![(i64::MIN, i64::MIN); lines]);
        entry[role - 1] = (coords[0], coords[1]);
    }
    for (v, ivs) in &assignment {
        if ivs.iter().any(|&(l, _)| l == i64::MIN) {
            return Err(Error::Parse(format!("vertex {v} is missing a component")));
        }
    }
    Ok((lines, assignment))
}

/// An ℓ-interval system: each vertex owns ℓ pairwise disjoint closed
/// intervals on one line; all endpoints are globally distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSystem {
    pub ell: usize,
    pub assignment: Assignment,
}

impl IntervalSystem {
    pub fn new(ell: usize, assignment: Assignment) -> Result<Self> {
        let sys = IntervalSystem { ell, assignment };
        sys.validate()?;
        Ok(sys)
    }

    fn validate(&self) -> Result<()> {
        check_component_count(&self.assignment, self.ell)?;
        check_distinct(
            self.assignment
                .values()
                .flat_map(|ivs| ivs.iter().flat_map(|&(l, r)| [l, r])),
            "in the interval system",
        )?;
        for (v, ivs) in &self.assignment {
            let mut sorted = ivs.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|p| p[0].1 >= p[1].0) {
                return Err(Error::DegenerateModel(format!(
                    "intervals of vertex {v} overlap each other"
                )));
            }
        }
        Ok(())
    }

    pub fn oracle_graph(&self) -> Result<LabeledGraph> {
        self.validate()?;
        let vs: Vec<Letter> = self.assignment.keys().copied().collect();
        let mut edges = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                let hit = self.assignment[&u].iter().any(|&a| {
                    self.assignment[&v]
                        .iter()
                        .any(|&b| intervals_intersect(a, b))
                });
                if hit {
                    edges.push((u, v));
                }
            }
        }
        LabeledGraph::new(vs, edges)
    }

    /// Sorts all endpoints and emits their owners.
    pub fn encode(&self) -> Result<VertexWord> {
        self.validate()?;
        let coords = self
            .assignment
            .iter()
            .flat_map(|(&v, ivs)| ivs.iter().flat_map(move |&(l, r)| [(l, v), (r, v)]))
            .collect();
        Ok(sweep_word(coords))
    }

    /// Occurrence-index intervals for letters occurring exactly `2ℓ` times;
    /// everything else is isolated past the word.
    pub fn decode(w: &VertexWord, ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidArguments("ℓ must be positive".into()));
        }
        IntervalSystem::new(ell, decode_occurrence_pairs(w, ell))
    }

    pub fn perturb(&self) -> Self {
        let items: Vec<(i64, Slot)> = self
            .assignment
            .iter()
            .flat_map(|(&v, ivs)| {
                ivs.iter().enumerate().flat_map(move |(i, &(l, r))| {
                    [(l, (v, i, Role::Left)), (r, (v, i, Role::Right))]
                })
            })
            .collect();
        let map = respace(&items);
        let assignment = self
            .assignment
            .iter()
            .map(|(&v, ivs)| {
                let ivs = (0..ivs.len())
                    .map(|i| (map[&(v, i, Role::Left)], map[&(v, i, Role::Right)]))
                    .collect();
                (v, ivs)
            })
            .collect();
        IntervalSystem {
            ell: self.ell,
            assignment,
        }
    }

    pub fn to_text(&self) -> String {
        assignment_to_text("l-interval", &[self.ell], &self.assignment)
    }

    pub(crate) fn parse_body(params: &[i64], body: &[&str]) -> Result<Self> {
        let (ell, assignment) = assignment_from_body(params, body)?;
        IntervalSystem::new(ell, assignment)
    }
}

/// An ℓ-track system: one interval per track per vertex; endpoints are
/// distinct within each track.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackSystem {
    pub tracks: usize,
    pub assignment: Assignment,
}

impl TrackSystem {
    pub fn new(tracks: usize, assignment: Assignment) -> Result<Self> {
        let sys = TrackSystem { tracks, assignment };
        sys.validate()?;
        Ok(sys)
    }

    fn validate(&self) -> Result<()> {
        check_component_count(&self.assignment, self.tracks)?;
        for t in 0..self.tracks {
            check_distinct(
                self.assignment
                    .values()
                    .flat_map(|ivs| [ivs[t].0, ivs[t].1]),
                &format!("on track {}", t + 1),
            )?;
        }
        Ok(())
    }

    pub fn oracle_graph(&self) -> Result<LabeledGraph> {
        self.validate()?;
        let vs: Vec<Letter> = self.assignment.keys().copied().collect();
        let mut edges = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                let hit = (0..self.tracks)
                    .any(|t| intervals_intersect(self.assignment[&u][t], self.assignment[&v][t]));
                if hit {
                    edges.push((u, v));
                }
            }
        }
        LabeledGraph::new(vs, edges)
    }

    pub fn encode(&self) -> Result<VertexWord> {
        self.validate()?;
        Ok(encode_lines_shifted(&self.assignment, self.tracks))
    }

    pub fn decode(w: &VertexWord, tracks: usize) -> Result<Self> {
        if tracks == 0 {
            return Err(Error::InvalidArguments("ℓ must be positive".into()));
        }
        TrackSystem::new(tracks, decode_occurrence_pairs(w, tracks))
    }

    pub fn perturb(&self) -> Self {
        TrackSystem {
            tracks: self.tracks,
            assignment: respace_per_line(&self.assignment, self.tracks),
        }
    }

    pub fn to_text(&self) -> String {
        assignment_to_text("l-track", &[self.tracks], &self.assignment)
    }

    pub(crate) fn parse_body(params: &[i64], body: &[&str]) -> Result<Self> {
        let (tracks, assignment) = assignment_from_body(params, body)?;
        TrackSystem::new(tracks, assignment)
    }
}

/// A boxicity-b system: each vertex is a b-dimensional axis-parallel box,
/// stored as its axis projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxSystem {
    pub dims: usize,
    pub assignment: Assignment,
}

impl BoxSystem {
    pub fn new(dims: usize, assignment: Assignment) -> Result<Self> {
        let sys = BoxSystem { dims, assignment };
        sys.validate()?;
        Ok(sys)
    }

    fn validate(&self) -> Result<()> {
        check_component_count(&self.assignment, self.dims)?;
        for d in 0..self.dims {
            check_distinct(
                self.assignment
                    .values()
                    .flat_map(|ivs| [ivs[d].0, ivs[d].1]),
                &format!("on axis {}", d + 1),
            )?;
        }
        Ok(())
    }

    pub fn oracle_graph(&self) -> Result<LabeledGraph> {
        self.validate()?;
        let vs: Vec<Letter> = self.assignment.keys().copied().collect();
        let mut edges = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                let hit = (0..self.dims)
                    .all(|d| intervals_intersect(self.assignment[&u][d], self.assignment[&v][d]));
                if hit {
                    edges.push((u, v));
                }
            }
        }
        LabeledGraph::new(vs, edges)
    }

    pub fn encode(&self) -> Result<VertexWord> {
        self.validate()?;
        Ok(encode_lines_shifted(&self.assignment, self.dims))
    }

    pub fn decode(w: &VertexWord, dims: usize) -> Result<Self> {
        if dims == 0 {
            return Err(Error::InvalidArguments("b must be positive".into()));
        }
        BoxSystem::new(dims, decode_occurrence_pairs(w, dims))
    }

    pub fn perturb(&self) -> Self {
        BoxSystem {
            dims: self.dims,
            assignment: respace_per_line(&self.assignment, self.dims),
        }
    }

    pub fn to_text(&self) -> String {
        assignment_to_text("box", &[self.dims], &self.assignment)
    }

    pub(crate) fn parse_body(params: &[i64], body: &[&str]) -> Result<Self> {
        let (dims, assignment) = assignment_from_body(params, body)?;
        BoxSystem::new(dims, assignment)
    }
}

/// A d-trapezoid system: one interval per parallel line per vertex; two
/// d-trapezoids intersect iff the trapezoids spanned by some consecutive
/// line pair intersect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrapezoidSystem {
    pub lines: usize,
    pub assignment: Assignment,
}

impl TrapezoidSystem {
    pub fn new(lines: usize, assignment: Assignment) -> Result<Self> {
        let sys = TrapezoidSystem { lines, assignment };
        sys.validate()?;
        Ok(sys)
    }

    fn validate(&self) -> Result<()> {
        check_component_count(&self.assignment, self.lines)?;
        for t in 0..self.lines {
            check_distinct(
                self.assignment
                    .values()
                    .flat_map(|ivs| [ivs[t].0, ivs[t].1]),
                &format!("on line {}", t + 1),
            )?;
        }
        Ok(())
    }

    fn pair_intersects(&self, u: Letter, v: Letter) -> bool {
        let a = &self.assignment[&u];
        let b = &self.assignment[&v];
        if self.lines == 1 {
            return intervals_intersect(a[0], b[0]);
        }
        (0..self.lines - 1)
            .any(|i| two_trapezoids_intersect(a[i], a[i + 1], b[i], b[i + 1]))
    }

    pub fn oracle_graph(&self) -> Result<LabeledGraph> {
        self.validate()?;
        let vs: Vec<Letter> = self.assignment.keys().copied().collect();
        let mut edges = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if self.pair_intersects(u, v) {
                    edges.push((u, v));
                }
            }
        }
        LabeledGraph::new(vs, edges)
    }

    pub fn encode(&self) -> Result<VertexWord> {
        self.validate()?;
        Ok(encode_lines_shifted(&self.assignment, self.lines))
    }

    pub fn decode(w: &VertexWord, lines: usize) -> Result<Self> {
        if lines == 0 {
            return Err(Error::InvalidArguments("d must be positive".into()));
        }
        TrapezoidSystem::new(lines, decode_occurrence_pairs(w, lines))
    }

    pub fn perturb(&self) -> Self {
        TrapezoidSystem {
            lines: self.lines,
            assignment: respace_per_line(&self.assignment, self.lines),
        }
    }

    pub fn to_text(&self) -> String {
        assignment_to_text("d-trap", &[self.lines], &self.assignment)
    }

    pub(crate) fn parse_body(params: &[i64], body: &[&str]) -> Result<Self> {
        let (lines, assignment) = assignment_from_body(params, body)?;
        TrapezoidSystem::new(lines, assignment)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::decode_graph;
    use crate::languages::l_interval_language;

    fn c4_two_interval_model() -> IntervalSystem {
        let mut assignment = Assignment::new();
        assignment.insert(1, vec![(1, 3), (10, 13)]);
        assignment.insert(2, vec![(2, 5), (6, 7)]);
        assignment.insert(3, vec![(4, 9), (15, 16)]);
        assignment.insert(4, vec![(8, 11), (12, 14)]);
        IntervalSystem::new(2, assignment).unwrap()
    }

    #[test]
    fn c4_oracle_and_encode() {
        let sys = c4_two_interval_model();
        let g = sys.oracle_graph().unwrap();
        assert_eq!(g.edge_list(), vec![(1, 2), (1, 4), (2, 3), (3, 4)]);
        let w = sys.encode().unwrap();
        assert_eq!(w.display(), "abacbbbdcaddadcc");
        let lang = l_interval_language(2).unwrap();
        assert_eq!(decode_graph(&lang, &w), g);
    }

    #[test]
    fn c4_decode_reproduces_paper_table() {
        let w = VertexWord::parse("abacbbbdcaddadcc").unwrap();
        let sys = IntervalSystem::decode(&w, 2).unwrap();
        assert_eq!(sys, c4_two_interval_model());
    }

    #[test]
    fn nested_single_intervals_touching() {
        let mut assignment = Assignment::new();
        assignment.insert(1, vec![(1, 4)]);
        assignment.insert(2, vec![(2, 3)]);
        let sys = IntervalSystem::new(1, assignment).unwrap();
        let g = sys.oracle_graph().unwrap();
        assert_eq!(g.edge_list(), vec![(1, 2)]);
    }

    #[test]
    fn degenerate_models_are_rejected() {
        let mut assignment = Assignment::new();
        assignment.insert(1, vec![(1, 3)]);
        assignment.insert(2, vec![(3, 5)]);
        assert!(matches!(
            IntervalSystem::new(1, assignment),
            Err(Error::DegenerateModel(_))
        ));
        let mut overlapping = Assignment::new();
        overlapping.insert(1, vec![(1, 5), (3, 8)]);
        assert!(IntervalSystem::new(2, overlapping).is_err());
    }

    #[test]
    fn trapezoid_crossing_and_disjoint() {
        // crossing pair: first intervals ordered u before v, second reversed
        let mut a = Assignment::new();
        a.insert(1, vec![(1, 2), (7, 8)]);
        a.insert(2, vec![(3, 4), (5, 6)]);
        let sys = TrapezoidSystem::new(2, a).unwrap();
        assert_eq!(sys.oracle_graph().unwrap().edge_list(), vec![(1, 2)]);

        // disjoint on both lines, same order: no edge
        let mut b = Assignment::new();
        b.insert(1, vec![(1, 2), (5, 6)]);
        b.insert(2, vec![(3, 4), (7, 8)]);
        let sys = TrapezoidSystem::new(2, b).unwrap();
        assert!(sys.oracle_graph().unwrap().edge_list().is_empty());
    }

    #[test]
    fn trapezoid_translation_invariance() {
        // shifting the second line's intervals by a common offset keeps the
        // oracle graph
        let mut a = Assignment::new();
        a.insert(1, vec![(1, 2), (7, 8)]);
        a.insert(2, vec![(3, 4), (5, 6)]);
        a.insert(3, vec![(5, 8), (1, 2)]);
        let sys = TrapezoidSystem::new(2, a.clone()).unwrap();
        let g = sys.oracle_graph().unwrap();
        for ivs in a.values_mut() {
            ivs[1] = (ivs[1].0 + 1000, ivs[1].1 + 1000);
        }
        let shifted = TrapezoidSystem::new(2, a).unwrap();
        assert_eq!(shifted.oracle_graph().unwrap(), g);
    }

    #[test]
    fn track_shift_invariance() {
        let mut a = Assignment::new();
        a.insert(1, vec![(1, 4), (2, 3)]);
        a.insert(2, vec![(2, 3), (5, 6)]);
        a.insert(3, vec![(5, 6), (1, 4)]);
        let sys = TrackSystem::new(2, a.clone()).unwrap();
        let g = sys.oracle_graph().unwrap();
        // translating one track by a common offset leaves the oracle alone
        for ivs in a.values_mut() {
            ivs[1] = (ivs[1].0 + 100, ivs[1].1 + 100);
        }
        let shifted = TrackSystem::new(2, a).unwrap();
        assert_eq!(shifted.oracle_graph().unwrap(), g);
    }

    #[test]
    fn box_oracle_needs_all_axes() {
        let mut a = Assignment::new();
        a.insert(1, vec![(1, 6), (1, 6)]);
        a.insert(2, vec![(2, 3), (7, 8)]);
        a.insert(3, vec![(4, 5), (2, 3)]);
        let sys = BoxSystem::new(2, a).unwrap();
        let g = sys.oracle_graph().unwrap();
        // 1 and 2 meet on axis 1 only; 1 and 3 meet on both axes
        assert_eq!(g.edge_list(), vec![(1, 3)]);
    }

    #[test]
    fn perturb_keeps_oracle_and_respects_touching() {
        let sys = c4_two_interval_model();
        let p = sys.perturb();
        assert_eq!(
            p.oracle_graph().unwrap(),
            sys.oracle_graph().unwrap()
        );
        // touching endpoints survive re-spacing as an intersection
        let mut a = Assignment::new();
        a.insert(1, vec![(1, 2)]);
        a.insert(2, vec![(2, 3)]);
        let touching = IntervalSystem {
            ell: 1,
            assignment: a,
        };
        let fixed = touching.perturb();
        assert_eq!(fixed.oracle_graph().unwrap().edge_list(), vec![(1, 2)]);
    }

    #[test]
    fn text_roundtrip() {
        let sys = c4_two_interval_model();
        let text = sys.to_text();
        let back = IntervalSystem::parse_body(
            &[2],
            &text.lines().skip(1).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(back, sys);
    }
}
