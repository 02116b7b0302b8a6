//! Geometric intersection and containment models, their direct graph
//! oracles, and the constructive encoders/decoders between models and words.
//!
//! All coordinates are integers.  Intervals are closed, so touching
//! endpoints count as intersecting; decoders emit occurrence indices as
//! coordinates, which are distinct by construction.  Isolated vertices are
//! placed past every occupied coordinate for linear models; the two circular
//! families instead carry them as empty objects, mirroring the fact that
//! those languages represent their class only up to added isolated vertices.

mod circular;
mod linear;
mod orders;
pub mod sample;
mod triangle;

pub use circular::{CircleGonSystem, CircularArcSystem};
pub use linear::{BoxSystem, IntervalSystem, TrackSystem, TrapezoidSystem};
pub use orders::{EnumerationScheme, LinearOrderFamily};
pub use triangle::{PiTriangle, PiTriangleSystem};

use std::collections::BTreeMap;

use crate::graphs::LabeledGraph;
use crate::languages::{self, FiniteLanguage};
use crate::words::{Letter, VertexWord};
use crate::{Error, Result};

/// Endpoint role used when re-spacing tied coordinates: left endpoints are
/// shifted earlier than point coordinates, which precede right endpoints, so
/// closed-interval touching stays intersecting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Role {
    Left,
    Point,
    Right,
}

/// A coordinate occurrence: `(vertex, component, role)` at some position.
pub(crate) type Slot = (Letter, usize, Role);

/// Re-spaces coordinates onto `1..=N`, breaking ties by role (left first),
/// then vertex id, then component index.
pub(crate) fn respace(items: &[(i64, Slot)]) -> BTreeMap<Slot, i64> {
    let mut sorted: Vec<(i64, Slot)> = items.to_vec();
    sorted.sort_by_key(|&(coord, (v, comp, role))| (coord, role, v, comp));
    sorted
        .into_iter()
        .enumerate()
        .map(|(i, (_, slot))| (slot, i as i64 + 1))
        .collect()
}

pub(crate) fn intervals_intersect(a: (i64, i64), b: (i64, i64)) -> bool {
    a.0 <= b.1 && b.0 <= a.1
}

/// Intersection of two trapezoids spanned by intervals on two parallel
/// lines: same-line overlap, or the two crossing patterns.
pub(crate) fn two_trapezoids_intersect(
    u1: (i64, i64),
    u2: (i64, i64),
    v1: (i64, i64),
    v2: (i64, i64),
) -> bool {
    intervals_intersect(u1, v1)
        || intervals_intersect(u2, v2)
        || (u1.1 < v1.0 && v2.1 < u2.0)
        || (v1.1 < u1.0 && u2.1 < v2.0)
}

/// The model families exposed by the CLI and the round-trip harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Interval(usize),
    Track(usize),
    Boxes(usize),
    Trapezoid(usize),
    Pi,
    PiStar,
    ArcContainment,
    CircleGon(usize),
    Comparability(usize),
    IntervalEnumeration,
}

impl Family {
    pub fn parse(spec: &str) -> Result<Family> {
        let (name, param) = match spec.split_once(':') {
            Some((n, p)) => {
                let v = p
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad family parameter {p:?}")))?;
                (n, Some(v))
            }
            None => (spec, None),
        };
        let need = |what: &str| {
            param.ok_or_else(|| Error::Parse(format!("family {name} needs a parameter {what}")))
        };
        let bare = |f: Family| {
            if param.is_some() {
                Err(Error::Parse(format!("family {name} takes no parameter")))
            } else {
                Ok(f)
            }
        };
        match name {
            "l-interval" => Ok(Family::Interval(need("ℓ")?)),
            "interval" => Ok(Family::Interval(param.unwrap_or(1))),
            "l-track" => Ok(Family::Track(need("ℓ")?)),
            "box" => Ok(Family::Boxes(need("b")?)),
            "trap" => bare(Family::Trapezoid(2)),
            "d-trap" => Ok(Family::Trapezoid(need("d")?)),
            "pi" => bare(Family::Pi),
            "pi-star" => bare(Family::PiStar),
            "arc-cont" => bare(Family::ArcContainment),
            "circle-gon" => Ok(Family::CircleGon(need("k")?)),
            "cmp" => Ok(Family::Comparability(need("d")?)),
            "int-en" => bare(Family::IntervalEnumeration),
            _ => Err(Error::Parse(format!("unknown family {name:?}"))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Family::Interval(l) => format!("l-interval:{l}"),
            Family::Track(l) => format!("l-track:{l}"),
            Family::Boxes(b) => format!("box:{b}"),
            Family::Trapezoid(2) => "trap".into(),
            Family::Trapezoid(d) => format!("d-trap:{d}"),
            Family::Pi => "pi".into(),
            Family::PiStar => "pi-star".into(),
            Family::ArcContainment => "arc-cont".into(),
            Family::CircleGon(k) => format!("circle-gon:{k}"),
            Family::Comparability(d) => format!("cmp:{d}"),
            Family::IntervalEnumeration => "int-en".into(),
        }
    }

    /// The finite language whose decode matches this family's oracle.
    pub fn language(&self) -> Result<FiniteLanguage> {
        match *self {
            Family::Interval(l) => languages::l_interval_language(l),
            Family::Track(l) => languages::l_track_language(l),
            Family::Boxes(b) => languages::box_language(b),
            Family::Trapezoid(d) => languages::d_trapezoid_language(d),
            Family::Pi => Ok(languages::pi_language()),
            Family::PiStar => Ok(languages::pi_star_language()),
            Family::ArcContainment => Ok(languages::arc_containment_language()),
            Family::CircleGon(k) => languages::circle_gon_language(k),
            Family::Comparability(d) => languages::comparability_language(d),
            Family::IntervalEnumeration => Ok(languages::interval_enumerable_language()),
        }
    }

    /// Reconstructs a geometric model from a vertex word.
    pub fn decode_model(&self, w: &VertexWord) -> Result<GeometricModel> {
        Ok(match *self {
            Family::Interval(l) => GeometricModel::Interval(IntervalSystem::decode(w, l)?),
            Family::Track(l) => GeometricModel::Track(TrackSystem::decode(w, l)?),
            Family::Boxes(b) => GeometricModel::Boxes(BoxSystem::decode(w, b)?),
            Family::Trapezoid(d) => GeometricModel::Trapezoid(TrapezoidSystem::decode(w, d)?),
            Family::Pi => GeometricModel::Pi(PiTriangleSystem::decode(w, false)?),
            Family::PiStar => GeometricModel::Pi(PiTriangleSystem::decode(w, true)?),
            Family::ArcContainment => GeometricModel::Arcs(CircularArcSystem::decode(w)?),
            Family::CircleGon(k) => GeometricModel::CircleGon(CircleGonSystem::decode(w, k)?),
            Family::Comparability(d) => GeometricModel::Orders(LinearOrderFamily::decode(w, d)?),
            Family::IntervalEnumeration => {
                GeometricModel::Enumeration(EnumerationScheme::decode(w)?)
            }
        })
    }

    /// Parses the geometry text format for this family.
    pub fn model_from_text(&self, text: &str) -> Result<GeometricModel> {
        GeometricModel::from_text(text).and_then(|m| {
            if m.family_matches(self) {
                Ok(m)
            } else {
                Err(Error::Parse(format!(
                    "geometry file is for family {}, expected {}",
                    m.family_name(),
                    self.name()
                )))
            }
        })
    }
}

/// A geometric model of any family.
#[derive(Clone, Debug)]
pub enum GeometricModel {
    Interval(IntervalSystem),
    Track(TrackSystem),
    Boxes(BoxSystem),
    Trapezoid(TrapezoidSystem),
    Pi(PiTriangleSystem),
    Arcs(CircularArcSystem),
    CircleGon(CircleGonSystem),
    Orders(LinearOrderFamily),
    Enumeration(EnumerationScheme),
}

impl GeometricModel {
    /// The graph defined directly by the family's geometric predicate.
    pub fn oracle_graph(&self) -> Result<LabeledGraph> {
        match self {
            GeometricModel::Interval(m) => m.oracle_graph(),
            GeometricModel::Track(m) => m.oracle_graph(),
            GeometricModel::Boxes(m) => m.oracle_graph(),
            GeometricModel::Trapezoid(m) => m.oracle_graph(),
            GeometricModel::Pi(m) => m.oracle_graph(),
            GeometricModel::Arcs(m) => m.oracle_graph(),
            GeometricModel::CircleGon(m) => m.oracle_graph(),
            GeometricModel::Orders(m) => m.oracle_graph(),
            GeometricModel::Enumeration(m) => m.oracle_graph(),
        }
    }

    /// The constructive encoding into a vertex word.
    pub fn encode(&self) -> Result<VertexWord> {
        match self {
            GeometricModel::Interval(m) => m.encode(),
            GeometricModel::Track(m) => m.encode(),
            GeometricModel::Boxes(m) => m.encode(),
            GeometricModel::Trapezoid(m) => m.encode(),
            GeometricModel::Pi(m) => m.encode(),
            GeometricModel::Arcs(m) => m.encode(),
            GeometricModel::CircleGon(m) => m.encode(),
            GeometricModel::Orders(m) => m.encode(),
            GeometricModel::Enumeration(m) => m.encode(),
        }
    }

    /// Stable integer re-spacing of all coordinates.
    pub fn perturb(&self) -> GeometricModel {
        match self {
            GeometricModel::Interval(m) => GeometricModel::Interval(m.perturb()),
            GeometricModel::Track(m) => GeometricModel::Track(m.perturb()),
            GeometricModel::Boxes(m) => GeometricModel::Boxes(m.perturb()),
            GeometricModel::Trapezoid(m) => GeometricModel::Trapezoid(m.perturb()),
            GeometricModel::Pi(m) => GeometricModel::Pi(m.perturb()),
            GeometricModel::Arcs(m) => GeometricModel::Arcs(m.perturb()),
            GeometricModel::CircleGon(m) => GeometricModel::CircleGon(m.perturb()),
            GeometricModel::Orders(m) => GeometricModel::Orders(m.clone()),
            GeometricModel::Enumeration(m) => GeometricModel::Enumeration(m.clone()),
        }
    }

    pub fn family_name(&self) -> String {
        match self {
            GeometricModel::Interval(m) => format!("l-interval:{}", m.ell),
            GeometricModel::Track(m) => format!("l-track:{}", m.tracks),
            GeometricModel::Boxes(m) => format!("box:{}", m.dims),
            GeometricModel::Trapezoid(m) => format!("d-trap:{}", m.lines),
            GeometricModel::Pi(m) => {
                if m.has_flipped() {
                    "pi-star".into()
                } else {
                    "pi".into()
                }
            }
            GeometricModel::Arcs(_) => "arc-cont".into(),
            GeometricModel::CircleGon(m) => format!("circle-gon:{}", m.k),
            GeometricModel::Orders(m) => format!("cmp:{}", m.orders.len()),
            GeometricModel::Enumeration(_) => "int-en".into(),
        }
    }

    fn family_matches(&self, family: &Family) -> bool {
        match (self, family) {
            (GeometricModel::Interval(m), Family::Interval(l)) => m.ell == *l,
            (GeometricModel::Track(m), Family::Track(l)) => m.tracks == *l,
            (GeometricModel::Boxes(m), Family::Boxes(b)) => m.dims == *b,
            (GeometricModel::Trapezoid(m), Family::Trapezoid(d)) => m.lines == *d,
            (GeometricModel::Pi(m), Family::Pi) => !m.has_flipped(),
            (GeometricModel::Pi(_), Family::PiStar) => true,
            (GeometricModel::Arcs(_), Family::ArcContainment) => true,
            (GeometricModel::CircleGon(m), Family::CircleGon(k)) => m.k == *k,
            (GeometricModel::Orders(m), Family::Comparability(d)) => m.orders.len() == *d,
            (GeometricModel::Enumeration(_), Family::IntervalEnumeration) => true,
            _ => false,
        }
    }

    /// Renders the geometry text format: a `family n params` header followed
    /// by one `id role coords...` line per component, deterministically
    /// ordered.
    pub fn to_text(&self) -> String {
        match self {
            GeometricModel::Interval(m) => m.to_text(),
            GeometricModel::Track(m) => m.to_text(),
            GeometricModel::Boxes(m) => m.to_text(),
            GeometricModel::Trapezoid(m) => m.to_text(),
            GeometricModel::Pi(m) => m.to_text(),
            GeometricModel::Arcs(m) => m.to_text(),
            GeometricModel::CircleGon(m) => m.to_text(),
            GeometricModel::Orders(m) => m.to_text(),
            GeometricModel::Enumeration(m) => m.to_text(),
        }
    }

    pub fn from_text(text: &str) -> Result<GeometricModel> {
        let mut lines = text.lines().filter(|l| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty geometry text".into()))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() < 2 {
            return Err(Error::Parse(format!("bad geometry header {header:?}")));
        }
        let family = toks[0];
        let body: Vec<&str> = lines.collect();
        let params: Vec<i64> = toks[2..]
            .iter()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad header parameter {t:?}")))
            })
            .collect::<Result<_>>()?;
        match family {
            "l-interval" => Ok(GeometricModel::Interval(IntervalSystem::parse_body(
                &params, &body,
            )?)),
            "l-track" => Ok(GeometricModel::Track(TrackSystem::parse_body(
                &params, &body,
            )?)),
            "box" => Ok(GeometricModel::Boxes(BoxSystem::parse_body(
                &params, &body,
            )?)),
            "d-trap" | "trap" => Ok(GeometricModel::Trapezoid(TrapezoidSystem::parse_body(
                &params, &body,
            )?)),
            "pi" | "pi-star" => Ok(GeometricModel::Pi(PiTriangleSystem::parse_body(&body)?)),
            "arc-cont" => Ok(GeometricModel::Arcs(CircularArcSystem::parse_body(
                &params, &body,
            )?)),
            "circle-gon" => Ok(GeometricModel::CircleGon(CircleGonSystem::parse_body(
                &params, &body,
            )?)),
            "cmp" => Ok(GeometricModel::Orders(LinearOrderFamily::parse_body(
                &params, &body,
            )?)),
            "int-en" => Ok(GeometricModel::Enumeration(EnumerationScheme::parse_body(
                &body,
            )?)),
            _ => Err(Error::Parse(format!("unknown geometry family {family:?}"))),
        }
    }
}

pub(crate) fn parse_component_line(line: &str) -> Result<(Letter, usize, Vec<i64>)> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() < 2 {
        return Err(Error::Parse(format!("bad geometry line {line:?}")));
    }
    let id: Letter = toks[0]
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex id {:?}", toks[0])))?;
    let role: usize = toks[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad role {:?}", toks[1])))?;
    let coords = toks[2..]
        .iter()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad coordinate {t:?}")))
        })
        .collect::<Result<Vec<i64>>>()?;
    Ok((id, role, coords))
}
