//! Linear-order families (poset dimension) and interval enumeration schemes.

use std::collections::{BTreeMap, BTreeSet};

use super::parse_component_line;
use crate::graphs::{decode_graph, LabeledGraph};
use crate::languages::interval_enumerable_language;
use crate::words::{occurrence_index, Letter, VertexWord};
use crate::{Error, Result};

/// `d` linear orders over a common vertex set.  Vertices in `detached` take
/// part in no order and are isolated by convention: a single linear order
/// cannot isolate anything, and for `d ≥ 2` this mirrors the word-level
/// treatment of letters whose multiplicity is off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOrderFamily {
    pub orders: Vec<Vec<Letter>>,
    pub detached: BTreeSet<Letter>,
}

impl LinearOrderFamily {
    pub fn new(orders: Vec<Vec<Letter>>, detached: BTreeSet<Letter>) -> Result<Self> {
        let fam = LinearOrderFamily { orders, detached };
        fam.validate()?;
        Ok(fam)
    }

    fn validate(&self) -> Result<()> {
        if self.orders.is_empty() {
            return Err(Error::InvalidArguments(
                "an order family needs at least one order".into(),
            ));
        }
        let base: BTreeSet<Letter> = self.orders[0].iter().copied().collect();
        if base.len() != self.orders[0].len() {
            return Err(Error::InvalidArguments("order repeats a vertex".into()));
        }
        for ord in &self.orders[1..] {
            let set: BTreeSet<Letter> = ord.iter().copied().collect();
            if set != base || set.len() != ord.len() {
                return Err(Error::InvalidArguments(
                    "orders must permute the same vertex set".into(),
                ));
            }
        }
        if base.intersection(&self.detached).next().is_some() {
            return Err(Error::InvalidArguments(
                "detached vertices cannot appear in orders".into(),
            ));
        }
        Ok(())
    }

    fn positions(&self, i: usize) -> BTreeMap<Letter, usize> {
        self.orders[i]
            .iter()
            .enumerate()
            .map(|(p, &v)| (v, p))
            .collect()
    }

    /// Edge iff one vertex precedes the other in every order.
    pub fn oracle_graph(&self) -> Result<LabeledGraph> {
        self.validate()?;
        let pos: Vec<BTreeMap<Letter, usize>> =
            (0..self.orders.len()).map(|i| self.positions(i)).collect();
        let vs: Vec<Letter> = self.orders[0].to_vec();
        let mut edges = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                let before = pos.iter().all(|p| p[&u] < p[&v]);
                let after = pos.iter().all(|p| p[&u] > p[&v]);
                if before || after {
                    edges.push((u, v));
                }
            }
        }
        let vertices: Vec<Letter> = vs.iter().copied().chain(self.detached.iter().copied()).collect();
        LabeledGraph::new(vertices, edges)
    }

    /// Concatenates the orders; detached vertices are appended with an
    /// off-count multiplicity (twice for `d = 1`, once otherwise).
    pub fn encode(&self) -> Result<VertexWord> {
        self.validate()?;
        let d = self.orders.len();
        let iso = if d == 1 { 2 } else { 1 };
        let mut letters: Vec<Letter> = self.orders.concat();
        for &v in &self.detached {
            letters.extend(std::iter::repeat_n(v, iso));
        }
        VertexWord::new(letters)
    }

    /// The `i`-th order sorts the active letters by their `i`-th occurrence.
    pub fn decode(w: &VertexWord, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArguments("d must be positive".into()));
        }
        let mut active: Vec<Letter> = Vec::new();
        let mut detached = BTreeSet::new();
        for v in w.alphabet() {
            if w.count(v) == d {
                active.push(v);
            } else {
                detached.insert(v);
            }
        }
        let mut orders = Vec::with_capacity(d);
        for i in 1..=d {
            let mut keyed: Vec<(usize, Letter)> = active
                .iter()
                .map(|&v| (occurrence_index(w, v, i).unwrap(), v))
                .collect();
            keyed.sort_unstable();
            orders.push(keyed.into_iter().map(|(_, v)| v).collect());
        }
        LinearOrderFamily::new(orders, detached)
    }

    pub fn to_text(&self) -> String {
        let n = self.orders[0].len() + self.detached.len();
        let mut out = format!("cmp {} {}\n", n, self.orders.len());
        let mut lines: Vec<(Letter, usize, usize)> = Vec::new();
        for (i, ord) in self.orders.iter().enumerate() {
            for (p, &v) in ord.iter().enumerate() {
                lines.push((v, i + 1, p + 1));
            }
        }
        lines.sort_unstable();
        for (v, i, p) in lines {
            out.push_str(&format!("{v} {i} {p}\n"));
        }
        for &v in &self.detached {
            out.push_str(&format!("{v} 0\n"));
        }
        out
    }

    pub(crate) fn parse_body(params: &[i64], body: &[&str]) -> Result<Self> {
        let d = *params
            .first()
            .ok_or_else(|| Error::Parse("missing order count".into()))? as usize;
        let mut detached = BTreeSet::new();
        let mut slots: Vec<BTreeMap<usize, Letter>> = vec![BTreeMap::new(); d];
        for raw in body {
            let (id, role, coords) = parse_component_line(raw)?;
            if role == 0 && coords.is_empty() {
                detached.insert(id);
            } else if (1..=d).contains(&role) && coords.len() == 1 {
                slots[role - 1].insert(coords[0] as usize, id);
            } else {
                return Err(Error::Parse(format!("bad order line {raw:?}")));
            }
        }
        let orders = slots
            .into_iter()
            .map(|m| m.into_values().collect())
            .collect();
        LinearOrderFamily::new(orders, detached)
    }
}

/// A vertex ordering where each vertex's earlier neighborhood is a
/// contiguous block `[ℓ, r]` of the ordering (or empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationScheme {
    pub ordering: Vec<Letter>,
    /// 1-based position bounds into `ordering`; `None` when the vertex has
    /// no earlier neighbor.
    pub bounds: Vec<Option<(usize, usize)>>,
}

impl EnumerationScheme {
    pub fn new(ordering: Vec<Letter>, bounds: Vec<Option<(usize, usize)>>) -> Result<Self> {
        let scheme = EnumerationScheme { ordering, bounds };
        scheme.validate()?;
        Ok(scheme)
    }

    fn validate(&self) -> Result<()> {
        if self.ordering.len() != self.bounds.len() {
            return Err(Error::InvalidArguments(
                "ordering and bounds lengths differ".into(),
            ));
        }
        let distinct: BTreeSet<Letter> = self.ordering.iter().copied().collect();
        if distinct.len() != self.ordering.len() {
            return Err(Error::InvalidArguments("ordering repeats a vertex".into()));
        }
        for (i, b) in self.bounds.iter().enumerate() {
            if let Some((l, r)) = b {
                if !(1 <= *l && l <= r && *r <= i) {
                    return Err(Error::InvalidArguments(format!(
                        "bounds ({l},{r}) invalid at position {}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn oracle_graph(&self) -> Result<LabeledGraph> {
        self.validate()?;
        let mut edges = Vec::new();
        for (i, b) in self.bounds.iter().enumerate() {
            if let Some((l, r)) = b {
                for j in (*l..=*r).map(|p| p - 1) {
                    edges.push((self.ordering[j], self.ordering[i]));
                }
            }
        }
        LabeledGraph::new(self.ordering.iter().copied(), edges)
    }

    /// The inductive word surgery: a vertex with no earlier neighbor appends
    /// its three occurrences; otherwise its copies go right before the third
    /// occurrence of the block's left end, right after the third occurrence
    /// of the block's right end, and at the very end.
    pub fn encode(&self) -> Result<VertexWord> {
        self.validate()?;
        let mut word: Vec<Letter> = Vec::new();
        for (i, &v) in self.ordering.iter().enumerate() {
            match self.bounds[i] {
                None => word.extend([v, v, v]),
                Some((l, r)) => {
                    let vl = self.ordering[l - 1];
                    let vr = self.ordering[r - 1];
                    let start = nth_position(&word, vl, 3);
                    let end = nth_position(&word, vr, 3);
                    word.push(v);
                    word.insert(end + 1, v);
                    word.insert(start, v);
                }
            }
        }
        VertexWord::new(word)
    }

    /// Orders the thrice-occurring letters by their third occurrences and
    /// reads each earlier neighborhood off the decoded graph; the language
    /// guarantees contiguity.
    pub fn decode(w: &VertexWord) -> Result<Self> {
        let lang = interval_enumerable_language();
        let graph = decode_graph(&lang, w);
        let mut keyed: Vec<(usize, Letter)> = Vec::new();
        let mut rest: Vec<Letter> = Vec::new();
        for v in w.alphabet() {
            if w.count(v) == 3 {
                keyed.push((occurrence_index(w, v, 3).unwrap(), v));
            } else {
                rest.push(v);
            }
        }
        keyed.sort_unstable();
        let mut ordering: Vec<Letter> = keyed.into_iter().map(|(_, v)| v).collect();
        ordering.extend(rest);
        let mut bounds = Vec::with_capacity(ordering.len());
        for (i, &v) in ordering.iter().enumerate() {
            let earlier: Vec<usize> = (0..i)
                .filter(|&j| graph.has_edge(ordering[j], v))
                .map(|j| j + 1)
                .collect();
            if earlier.is_empty() {
                bounds.push(None);
            } else {
                let (l, r) = (earlier[0], *earlier.last().unwrap());
                if earlier.len() != r - l + 1 {
                    return Err(Error::DegenerateModel(format!(
                        "earlier neighborhood of {v} is not an interval"
                    )));
                }
                bounds.push(Some((l, r)));
            }
        }
        EnumerationScheme::new(ordering, bounds)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("int-en {}\n", self.ordering.len());
        for (i, &v) in self.ordering.iter().enumerate() {
            match self.bounds[i] {
                Some((l, r)) => out.push_str(&format!("{v} {} {l} {r}\n", i + 1)),
                None => out.push_str(&format!("{v} {} 1 0\n", i + 1)),
            }
        }
        out
    }

    pub(crate) fn parse_body(body: &[&str]) -> Result<Self> {
        let mut rows: BTreeMap<usize, (Letter, Option<(usize, usize)>)> = BTreeMap::new();
        for raw in body {
            let (id, role, coords) = parse_component_line(raw)?;
            if role == 0 || coords.len() != 2 {
                return Err(Error::Parse(format!("bad enumeration line {raw:?}")));
            }
            let (l, r) = (coords[0] as usize, coords[1] as usize);
            let b = if l > r { None } else { Some((l, r)) };
            rows.insert(role, (id, b));
        }
        let mut ordering = Vec::new();
        let mut bounds = Vec::new();
        for (pos, (id, b)) in rows {
            if pos != ordering.len() + 1 {
                return Err(Error::Parse("enumeration positions must be 1..n".into()));
            }
            ordering.push(id);
            bounds.push(b);
        }
        EnumerationScheme::new(ordering, bounds)
    }
}

fn nth_position(word: &[Letter], v: Letter, n: usize) -> usize {
    let mut seen = 0;
    for (i, &x) in word.iter().enumerate() {
        if x == v {
            seen += 1;
            if seen == n {
                return i;
            }
        }
    }
    unreachable!("letter occurs fewer than {n} times");
}
