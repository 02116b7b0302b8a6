//! Seeded random model generators for the round-trip harnesses.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;

use super::{
    CircleGonSystem, CircularArcSystem, EnumerationScheme, Family, GeometricModel,
    IntervalSystem, LinearOrderFamily, PiTriangle, PiTriangleSystem, TrackSystem,
    TrapezoidSystem,
};
use crate::geometry::BoxSystem;
use crate::words::{Letter, VertexWord};

fn shuffled_coords(rng: &mut impl Rng, count: usize) -> Vec<i64> {
    let mut coords: Vec<i64> = (1..=count as i64).collect();
    coords.shuffle(rng);
    coords
}

/// `n` vertices, `2ℓ` globally distinct endpoints each, per-vertex intervals
/// disjoint by sorting.
pub fn interval_system(rng: &mut impl Rng, ell: usize, n: usize) -> IntervalSystem {
    let coords = shuffled_coords(rng, 2 * ell * n);
    let mut assignment = BTreeMap::new();
    for (i, chunk) in coords.chunks(2 * ell).enumerate() {
        let mut own = chunk.to_vec();
        own.sort_unstable();
        let ivs = own.chunks(2).map(|p| (p[0], p[1])).collect();
        assignment.insert(i as Letter + 1, ivs);
    }
    IntervalSystem::new(ell, assignment).unwrap()
}

fn per_line_assignment(
    rng: &mut impl Rng,
    lines: usize,
    n: usize,
) -> BTreeMap<Letter, Vec<(i64, i64)>> {
    let mut assignment: BTreeMap<Letter, Vec<(i64, i64)>> =
        (1..=n as Letter).map(|v| (v, Vec::new())).collect();
    for _ in 0..lines {
        let coords = shuffled_coords(rng, 2 * n);
        for (i, chunk) in coords.chunks(2).enumerate() {
            let (a, b) = (chunk[0].min(chunk[1]), chunk[0].max(chunk[1]));
            assignment.get_mut(&(i as Letter + 1)).unwrap().push((a, b));
        }
    }
    assignment
}

pub fn track_system(rng: &mut impl Rng, tracks: usize, n: usize) -> TrackSystem {
    TrackSystem::new(tracks, per_line_assignment(rng, tracks, n)).unwrap()
}

pub fn box_system(rng: &mut impl Rng, dims: usize, n: usize) -> BoxSystem {
    BoxSystem::new(dims, per_line_assignment(rng, dims, n)).unwrap()
}

pub fn trapezoid_system(rng: &mut impl Rng, lines: usize, n: usize) -> TrapezoidSystem {
    TrapezoidSystem::new(lines, per_line_assignment(rng, lines, n)).unwrap()
}

pub fn pi_system(rng: &mut impl Rng, n: usize, star: bool) -> PiTriangleSystem {
    let flips: Vec<bool> = (0..n).map(|_| star && rng.gen_bool(0.4)).collect();
    let on_l = flips.iter().map(|&f| if f { 2 } else { 1 }).sum::<usize>();
    let on_m = 3 * n - on_l;
    let mut l_coords = shuffled_coords(rng, on_l).into_iter();
    let mut m_coords = shuffled_coords(rng, on_m).into_iter();
    let mut triangles = BTreeMap::new();
    for (i, &flipped) in flips.iter().enumerate() {
        let tri = if flipped {
            let (a, b) = (l_coords.next().unwrap(), l_coords.next().unwrap());
            PiTriangle {
                flipped,
                apex: m_coords.next().unwrap(),
                base: (a.min(b), a.max(b)),
            }
        } else {
            let (a, b) = (m_coords.next().unwrap(), m_coords.next().unwrap());
            PiTriangle {
                flipped,
                apex: l_coords.next().unwrap(),
                base: (a.min(b), a.max(b)),
            }
        };
        triangles.insert(i as Letter + 1, tri);
    }
    PiTriangleSystem::new(triangles).unwrap()
}

pub fn arc_system(rng: &mut impl Rng, n: usize) -> CircularArcSystem {
    let coords = shuffled_coords(rng, 2 * n);
    let mut arcs = BTreeMap::new();
    for (i, chunk) in coords.chunks(2).enumerate() {
        let arc = if rng.gen_bool(0.125) {
            None
        } else if rng.gen_bool(0.5) {
            Some((chunk[0].min(chunk[1]), chunk[0].max(chunk[1])))
        } else {
            Some((chunk[0].max(chunk[1]), chunk[0].min(chunk[1])))
        };
        arcs.insert(i as Letter + 1, arc);
    }
    CircularArcSystem::new(2 * n as i64 + 1, arcs).unwrap()
}

pub fn circle_gon_system(rng: &mut impl Rng, k: usize, n: usize) -> CircleGonSystem {
    let counts: Vec<usize> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.125) {
                0
            } else {
                rng.gen_range(1..=k)
            }
        })
        .collect();
    let total: usize = counts.iter().map(|&c| 2 * c).sum();
    let mut pool = shuffled_coords(rng, total).into_iter();
    let mut arcs = BTreeMap::new();
    for (i, &c) in counts.iter().enumerate() {
        let mut own: Vec<i64> = (0..2 * c).map(|_| pool.next().unwrap()).collect();
        own.sort_unstable();
        let list: Vec<(i64, i64)> = if c > 0 && rng.gen_bool(0.5) {
            // route one arc through the cut: last endpoint back to first
            let mut list = vec![(own[2 * c - 1], own[0])];
            for p in own[1..2 * c - 1].chunks(2) {
                list.push((p[0], p[1]));
            }
            list
        } else {
            own.chunks(2).map(|p| (p[0], p[1])).collect()
        };
        arcs.insert(i as Letter + 1, list);
    }
    CircleGonSystem::new(k, total as i64 + 1, arcs).unwrap()
}

pub fn order_family(rng: &mut impl Rng, d: usize, n: usize) -> LinearOrderFamily {
    let mut detached = BTreeSet::new();
    let mut active: Vec<Letter> = Vec::new();
    for v in 1..=n as Letter {
        if d >= 2 && rng.gen_bool(0.125) {
            detached.insert(v);
        } else {
            active.push(v);
        }
    }
    let mut orders = Vec::with_capacity(d);
    for _ in 0..d {
        let mut ord = active.clone();
        ord.shuffle(rng);
        orders.push(ord);
    }
    LinearOrderFamily::new(orders, detached).unwrap()
}

pub fn enumeration_scheme(rng: &mut impl Rng, n: usize) -> EnumerationScheme {
    let mut ordering: Vec<Letter> = (1..=n as Letter).collect();
    ordering.shuffle(rng);
    let mut bounds = Vec::with_capacity(n);
    for i in 0..n {
        if i == 0 || rng.gen_bool(0.25) {
            bounds.push(None);
        } else {
            let l = rng.gen_range(1..=i);
            let r = rng.gen_range(l..=i);
            bounds.push(Some((l, r)));
        }
    }
    EnumerationScheme::new(ordering, bounds).unwrap()
}

/// A random model of the given family on `n` vertices.
pub fn model(rng: &mut impl Rng, family: Family, n: usize) -> GeometricModel {
    match family {
        Family::Interval(l) => GeometricModel::Interval(interval_system(rng, l, n)),
        Family::Track(l) => GeometricModel::Track(track_system(rng, l, n)),
        Family::Boxes(b) => GeometricModel::Boxes(box_system(rng, b, n)),
        Family::Trapezoid(d) => GeometricModel::Trapezoid(trapezoid_system(rng, d, n)),
        Family::Pi => GeometricModel::Pi(pi_system(rng, n, false)),
        Family::PiStar => GeometricModel::Pi(pi_system(rng, n, true)),
        Family::ArcContainment => GeometricModel::Arcs(arc_system(rng, n)),
        Family::CircleGon(k) => GeometricModel::CircleGon(circle_gon_system(rng, k, n)),
        Family::Comparability(d) => GeometricModel::Orders(order_family(rng, d, n)),
        Family::IntervalEnumeration => {
            GeometricModel::Enumeration(enumeration_scheme(rng, n))
        }
    }
}

/// A random word on letters `1..=letters` whose per-letter multiplicities
/// are drawn from `choices`.
pub fn word_with_counts(
    rng: &mut impl Rng,
    letters: usize,
    choices: &[usize],
) -> VertexWord {
    let mut pool: Vec<Letter> = Vec::new();
    for v in 1..=letters as Letter {
        let c = choices[rng.gen_range(0..choices.len())];
        pool.extend(std::iter::repeat_n(v, c));
    }
    pool.shuffle(rng);
    VertexWord::new(pool).unwrap()
}
