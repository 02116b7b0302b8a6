//! k-letter graphs, k-thin representations, and the thin-to-boxicity
//! construction.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::geometry::BoxSystem;
use crate::graphs::LabeledGraph;
use crate::words::Letter;
use crate::{Error, Result};

/// Guards for the exhaustive letter-graph census.
pub const LETTER_K_GUARD: usize = 3;
pub const LETTER_N_GUARD: usize = 7;

/// A word over `[k]` together with a decoder relation on ordered letter
/// pairs.  The decoder need not be symmetric: the edge test reads the
/// earlier position's letter first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterSpec {
    pub k: usize,
    pub decoder: BTreeSet<(u8, u8)>,
    pub word: Vec<u8>,
}

impl LetterSpec {
    pub fn new(k: usize, decoder: BTreeSet<(u8, u8)>, word: Vec<u8>) -> Result<Self> {
        if k == 0 || k > 255 {
            return Err(Error::InvalidArguments("k out of range".into()));
        }
        let ok = |x: u8| (1..=k as u8).contains(&x);
        if decoder.iter().any(|&(a, b)| !ok(a) || !ok(b)) {
            return Err(Error::InvalidArguments(
                "decoder pair outside the alphabet".into(),
            ));
        }
        if word.iter().any(|&x| !ok(x)) {
            return Err(Error::InvalidArguments(
                "word letter outside the alphabet".into(),
            ));
        }
        Ok(LetterSpec { k, decoder, word })
    }

    /// Text format: line 1 `k`, line 2 comma-separated decoder pairs (two
    /// digits each), line 3 the word as a digit string.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let k: usize = lines
            .next()
            .and_then(|l| l.trim().parse().ok())
            .ok_or_else(|| Error::Parse("missing alphabet size".into()))?;
        let decoder_line = lines
            .next()
            .ok_or_else(|| Error::Parse("missing decoder line".into()))?
            .trim();
        let mut decoder = BTreeSet::new();
        if !decoder_line.is_empty() && decoder_line != "-" {
            for pair in decoder_line.split(',') {
                let digits: Vec<u8> = pair
                    .trim()
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as u8)
                            .ok_or_else(|| Error::Parse(format!("bad decoder pair {pair:?}")))
                    })
                    .collect::<Result<_>>()?;
                if digits.len() != 2 {
                    return Err(Error::Parse(format!("bad decoder pair {pair:?}")));
                }
                decoder.insert((digits[0], digits[1]));
            }
        }
        let word_line = lines
            .next()
            .ok_or_else(|| Error::Parse("missing word line".into()))?
            .trim();
        let word = word_line
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("bad word digit {c:?}")))
            })
            .collect::<Result<_>>()?;
        LetterSpec::new(k, decoder, word)
    }

    pub fn to_text(&self) -> String {
        let decoder = if self.decoder.is_empty() {
            "-".to_string()
        } else {
            self.decoder
                .iter()
                .map(|(a, b)| format!("{a}{b}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        let word: String = self.word.iter().map(|d| d.to_string()).collect();
        format!("{}\n{decoder}\n{word}\n", self.k)
    }
}

/// A vertex ordering plus a class partition witnessing k-thinness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinRepresentation {
    pub ordering: Vec<Letter>,
    pub classes: BTreeMap<Letter, usize>,
}

impl ThinRepresentation {
    pub fn class_count(&self) -> usize {
        self.classes.values().copied().max().map_or(0, |m| m + 1)
    }
}

/// Decodes the k-letter graph on positions `1..=n`.
pub fn decode_letter_graph(spec: &LetterSpec) -> LabeledGraph {
    let n = spec.word.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if spec.decoder.contains(&(spec.word[i], spec.word[j])) {
                edges.push((i as Letter + 1, j as Letter + 1));
            }
        }
    }
    LabeledGraph::new(1..=n as Letter, edges).unwrap()
}

/// The canonical thin representation of a letter graph: identity ordering,
/// classes by letter.
pub fn letter_to_thin(spec: &LetterSpec) -> ThinRepresentation {
    let ordering: Vec<Letter> = (1..=spec.word.len() as Letter).collect();
    let classes = spec
        .word
        .iter()
        .enumerate()
        .map(|(i, &a)| (i as Letter + 1, a as usize - 1))
        .collect();
    ThinRepresentation { ordering, classes }
}

/// Checks the thinness condition: for positions `a < b < c` with `v_a`,
/// `v_b` in one class, an edge `{v_a, v_c}` forces the edge `{v_b, v_c}`.
pub fn is_thin_representation(graph: &LabeledGraph, rep: &ThinRepresentation) -> Result<bool> {
    let in_rep: BTreeSet<Letter> = rep.ordering.iter().copied().collect();
    if &in_rep != graph.vertices() || in_rep.len() != rep.ordering.len() {
        return Err(Error::InvalidArguments(
            "representation does not cover the vertex set".into(),
        ));
    }
    if !rep.ordering.iter().all(|v| rep.classes.contains_key(v)) {
        return Err(Error::InvalidArguments(
            "partition misses a vertex".into(),
        ));
    }
    let n = rep.ordering.len();
    for a in 0..n {
        for b in a + 1..n {
            if rep.classes[&rep.ordering[a]] != rep.classes[&rep.ordering[b]] {
                continue;
            }
            for c in b + 1..n {
                if graph.has_edge(rep.ordering[a], rep.ordering[c])
                    && !graph.has_edge(rep.ordering[b], rep.ordering[c])
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Builds a k-dimensional box system realizing a k-thin graph.
///
/// Per dimension `i`, right endpoints are laid out class-`i`-first in the
/// thin ordering; each left endpoint sits directly left of the right
/// endpoint of its anchor (the leftmost class-`i` neighbor, with the
/// fallbacks from the thinness argument).  Anchor slots are spaced so every
/// coordinate stays a distinct integer.
pub fn thin_to_boxes(graph: &LabeledGraph, rep: &ThinRepresentation) -> Result<BoxSystem> {
    if !is_thin_representation(graph, rep)? {
        return Err(Error::InvalidArguments(
            "representation is not thin for this graph".into(),
        ));
    }
    let k = rep.class_count().max(1);
    let n = rep.ordering.len();
    let order_pos: BTreeMap<Letter, usize> = rep
        .ordering
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut assignment: BTreeMap<Letter, Vec<(i64, i64)>> = rep
        .ordering
        .iter()
        .map(|&v| (v, Vec::with_capacity(k)))
        .collect();

    for class in 0..k {
        // right-endpoint order: class vertices first, then the rest
        let mut right_order: Vec<Letter> = rep
            .ordering
            .iter()
            .copied()
            .filter(|v| rep.classes[v] == class)
            .collect();
        let first_outside = right_order.len();
        right_order.extend(
            rep.ordering
                .iter()
                .copied()
                .filter(|v| rep.classes[v] != class),
        );
        let right_pos: BTreeMap<Letter, usize> = right_order
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let right_coord = |v: Letter| ((right_pos[&v] + 1) * (n + 1)) as i64;

        // leftmost class neighbor in the thin ordering
        let leftmost_neighbor = |v: Letter| -> Option<Letter> {
            rep.ordering
                .iter()
                .copied()
                .find(|&u| rep.classes[&u] == class && graph.has_edge(u, v))
        };

        let mut used_slots: BTreeMap<Letter, i64> = BTreeMap::new();
        let mut take_slot = |anchor: Letter| -> i64 {
            let used = used_slots.entry(anchor).or_insert(0);
            *used += 1;
            right_coord(anchor) - *used
        };

        for &v in &rep.ordering {
            let anchor = if rep.classes[&v] == class {
                match leftmost_neighbor(v) {
                    Some(u) if order_pos[&u] < order_pos[&v] => u,
                    _ => v,
                }
            } else {
                match leftmost_neighbor(v) {
                    Some(u) => u,
                    // no class neighbor: directly left of the leftmost
                    // vertex outside the class
                    None => right_order
                        .get(first_outside)
                        .copied()
                        .unwrap_or(v),
                }
            };
            let left = take_slot(anchor);
            assignment
                .get_mut(&v)
                .unwrap()
                .push((left, right_coord(v)));
        }
    }
    BoxSystem::new(k, assignment)
}

/// Packed edge set of a labeled graph on `1..=n`: bit per pair in
/// lexicographic order.
fn edge_mask(g: &LabeledGraph, n: usize) -> u32 {
    let mut mask = 0u32;
    let mut bit = 0;
    for u in 1..=n as Letter {
        for v in u + 1..=n as Letter {
            if g.has_edge(u, v) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

fn graph_from_mask(mask: u32, n: usize) -> LabeledGraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 1..=n as Letter {
        for v in u + 1..=n as Letter {
            if mask & (1 << bit) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    LabeledGraph::new(1..=n as Letter, edges).unwrap()
}

/// All labeled graphs on `[n]` expressible with a k-letter decoder and word,
/// deduplicated by edge set.
pub fn enumerate_letter_graphs(k: usize, n: usize) -> Result<BTreeSet<LabeledGraph>> {
    if k > LETTER_K_GUARD || n > LETTER_N_GUARD {
        return Err(Error::Capacity(format!(
            "letter-graph census limited to k ≤ {LETTER_K_GUARD}, n ≤ {LETTER_N_GUARD}"
        )));
    }
    if k == 0 || n == 0 {
        return Err(Error::InvalidArguments("k and n must be positive".into()));
    }
    let pairs: Vec<(u8, u8)> = (1..=k as u8)
        .flat_map(|a| (1..=k as u8).map(move |b| (a, b)))
        .collect();
    let mut seen: HashSet<u32> = HashSet::new();
    let mut word = vec![1u8; n];
    let total_words = (k as u64).pow(n as u32);
    for dec_bits in 0u32..(1 << pairs.len()) {
        let decoder: BTreeSet<(u8, u8)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| dec_bits & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        for idx in 0..total_words {
            let mut x = idx;
            for slot in word.iter_mut() {
                *slot = (x % k as u64) as u8 + 1;
                x /= k as u64;
            }
            let spec = LetterSpec {
                k,
                decoder: decoder.clone(),
                word: word.clone(),
            };
            seen.insert(edge_mask(&decode_letter_graph(&spec), n));
        }
    }
    Ok(seen.into_iter().map(|m| graph_from_mask(m, n)).collect())
}
