//! Point-interval triangles between two parallel lines.
//!
//! A standard triangle has its apex on line L and its base interval on line
//! M; a flipped triangle (the PI* extension) has the base on L and the apex
//! on M.  Either kind is a degenerate trapezoid, so intersection follows the
//! trapezoid rule with one interval collapsed to a point.

use std::collections::{BTreeMap, BTreeSet};

use super::{parse_component_line, respace, two_trapezoids_intersect, Role, Slot};
use crate::graphs::LabeledGraph;
use crate::words::{Letter, VertexWord};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PiTriangle {
    pub flipped: bool,
    /// Apex coordinate (on M when flipped, on L otherwise).
    pub apex: i64,
    /// Base interval (on L when flipped, on M otherwise).
    pub base: (i64, i64),
}

impl PiTriangle {
    fn span_l(&self) -> (i64, i64) {
        if self.flipped {
            self.base
        } else {
            (self.apex, self.apex)
        }
    }

    fn span_m(&self) -> (i64, i64) {
        if self.flipped {
            (self.apex, self.apex)
        } else {
            self.base
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiTriangleSystem {
    pub triangles: BTreeMap<Letter, PiTriangle>,
}

impl PiTriangleSystem {
    pub fn new(triangles: BTreeMap<Letter, PiTriangle>) -> Result<Self> {
        let sys = PiTriangleSystem { triangles };
        sys.validate()?;
        Ok(sys)
    }

    pub fn has_flipped(&self) -> bool {
        self.triangles.values().any(|t| t.flipped)
    }

    fn validate(&self) -> Result<()> {
        let mut line_l = BTreeSet::new();
        let mut line_m = BTreeSet::new();
        for (v, t) in &self.triangles {
            if t.base.0 >= t.base.1 {
                return Err(Error::DegenerateModel(format!(
                    "triangle {v} has a degenerate base"
                )));
            }
            let (l_coords, m_coords): (Vec<i64>, Vec<i64>) = if t.flipped {
                (vec![t.base.0, t.base.1], vec![t.apex])
            } else {
                (vec![t.apex], vec![t.base.0, t.base.1])
            };
            for c in l_coords {
                if !line_l.insert(c) {
                    return Err(Error::DegenerateModel(format!(
                        "coincident corner {c} on line L"
                    )));
                }
            }
            for c in m_coords {
                if !line_m.insert(c) {
                    return Err(Error::DegenerateModel(format!(
                        "coincident corner {c} on line M"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn oracle_graph(&self) -> Result<LabeledGraph> {
        self.validate()?;
        let vs: Vec<Letter> = self.triangles.keys().copied().collect();
        let mut edges = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                let (a, b) = (&self.triangles[&u], &self.triangles[&v]);
                if two_trapezoids_intersect(a.span_l(), a.span_m(), b.span_l(), b.span_m()) {
                    edges.push((u, v));
                }
            }
        }
        LabeledGraph::new(vs, edges)
    }

    /// Shifts line M past line L, sweeps the corners in coordinate order,
    /// and prefixes one flag occurrence per flipped triangle.
    pub fn encode(&self) -> Result<VertexWord> {
        self.validate()?;
        let max_l = self
            .triangles
            .values()
            .flat_map(|t| {
                let (a, b) = t.span_l();
                [a, b]
            })
            .max()
            .unwrap_or(0);
        let min_m = self
            .triangles
            .values()
            .flat_map(|t| {
                let (a, b) = t.span_m();
                [a, b]
            })
            .min()
            .unwrap_or(0);
        let shift = max_l - min_m + 1;
        let mut coords: Vec<(i64, Letter)> = Vec::new();
        for (&v, t) in &self.triangles {
            if t.flipped {
                coords.push((t.base.0, v));
                coords.push((t.base.1, v));
                coords.push((t.apex + shift, v));
            } else {
                coords.push((t.apex, v));
                coords.push((t.base.0 + shift, v));
                coords.push((t.base.1 + shift, v));
            }
        }
        coords.sort_unstable();
        let mut letters: Vec<Letter> = self
            .triangles
            .iter()
            .filter(|(_, t)| t.flipped)
            .map(|(&v, _)| v)
            .collect();
        letters.extend(coords.into_iter().map(|(_, v)| v));
        VertexWord::new(letters)
    }

    /// Occurrence-index triangles: three occurrences give a standard
    /// triangle, four (when `star`) a flipped one whose first occurrence is
    /// the flag; anything else is isolated past all occupied coordinates.
    pub fn decode(w: &VertexWord, star: bool) -> Result<Self> {
        let mut triangles = BTreeMap::new();
        let mut cursor = w.len() as i64;
        for v in w.alphabet() {
            let occ = w.occurrences(v);
            let tri = match occ.len() {
                3 => PiTriangle {
                    flipped: false,
                    apex: occ[0] as i64,
                    base: (occ[1] as i64, occ[2] as i64),
                },
                4 if star => PiTriangle {
                    flipped: true,
                    base: (occ[1] as i64, occ[2] as i64),
                    apex: occ[3] as i64,
                },
                _ => {
                    cursor += 3;
                    PiTriangle {
                        flipped: false,
                        apex: cursor - 2,
                        base: (cursor - 1, cursor),
                    }
                }
            };
            triangles.insert(v, tri);
        }
        PiTriangleSystem::new(triangles)
    }

    pub fn perturb(&self) -> Self {
        let mut items_l: Vec<(i64, Slot)> = Vec::new();
        let mut items_m: Vec<(i64, Slot)> = Vec::new();
        for (&v, t) in &self.triangles {
            let (base_line, apex_line) = if t.flipped {
                (&mut items_l, &mut items_m)
            } else {
                (&mut items_m, &mut items_l)
            };
            base_line.push((t.base.0, (v, 0, Role::Left)));
            base_line.push((t.base.1, (v, 0, Role::Right)));
            apex_line.push((t.apex, (v, 1, Role::Point)));
        }
        let map_l = respace(&items_l);
        let map_m = respace(&items_m);
        let triangles = self
            .triangles
            .iter()
            .map(|(&v, t)| {
                let (base_map, apex_map) = if t.flipped {
                    (&map_l, &map_m)
                } else {
                    (&map_m, &map_l)
                };
                (
                    v,
                    PiTriangle {
                        flipped: t.flipped,
                        apex: apex_map[&(v, 1, Role::Point)],
                        base: (
                            base_map[&(v, 0, Role::Left)],
                            base_map[&(v, 0, Role::Right)],
                        ),
                    },
                )
            })
            .collect();
        PiTriangleSystem { triangles }
    }

    pub fn to_text(&self) -> String {
        let name = if self.has_flipped() { "pi-star" } else { "pi" };
        let mut out = format!("{name} {}\n", self.triangles.len());
        for (v, t) in &self.triangles {
            out.push_str(&format!(
                "{v} {} {} {} {}\n",
                t.flipped as u8, t.apex, t.base.0, t.base.1
            ));
        }
        out
    }

    pub(crate) fn parse_body(body: &[&str]) -> Result<Self> {
        let mut triangles = BTreeMap::new();
        for raw in body {
            let (id, role, coords) = parse_component_line(raw)?;
            if role > 1 || coords.len() != 3 {
                return Err(Error::Parse(format!("bad triangle line {raw:?}")));
            }
            triangles.insert(
                id,
                PiTriangle {
                    flipped: role == 1,
                    apex: coords[0],
                    base: (coords[1], coords[2]),
                },
            );
        }
        PiTriangleSystem::new(triangles)
    }
}
