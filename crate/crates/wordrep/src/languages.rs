//! Finite 0-1-symmetric languages and one constructor per language family.
//!
//! All languages here are finite and small, so they are materialized as
//! explicit word sets.  Families defined by a predicate (projection into a
//! 2-uniform base, trapezoid patterns, parity cases) are built by filtering
//! [`enumerate_fixed_counts`]; families given by generator lists are built by
//! expansion plus symmetric closure.  Tests cross-check the two routes
//! against each other.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{BufRead, Write};

use crate::words::{
    delete_first_bit, deletion_op, enumerate_fixed_counts, shuffle_bits, BinaryWord, DYCK_GUARD,
};
use crate::{Error, Result};

/// A finite, non-empty, complement-closed set of binary words.
#[derive(Clone)]
pub struct FiniteLanguage {
    name: String,
    words: BTreeSet<BinaryWord>,
    counts: BTreeSet<usize>,
    iso_count: usize,
    max_len: usize,
    uniform: Option<usize>,
    // membership tables indexed [length][packed bits]; empty when max_len
    // is too large to tabulate
    tables: Vec<Vec<bool>>,
}

/// The zero-count set of a language together with the canonical
/// isolated-vertex multiplicity (smallest positive integer outside it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSet {
    pub counts: BTreeSet<usize>,
    pub iso_count: usize,
}

const TABLE_LEN_LIMIT: usize = 16;

impl FiniteLanguage {
    /// Builds a language as the symmetric closure of `words`.
    pub fn from_words(
        name: impl Into<String>,
        words: impl IntoIterator<Item = BinaryWord>,
    ) -> Result<Self> {
        let mut set: BTreeSet<BinaryWord> = BTreeSet::new();
        for w in words {
            set.insert(w.complement());
            set.insert(w);
        }
        if set.is_empty() {
            return Err(Error::InvalidArguments(
                "a finite language must be non-empty".into(),
            ));
        }
        let counts: BTreeSet<usize> = set.iter().map(|w| w.zeros()).collect();
        let iso_count = (1..).find(|c| !counts.contains(c)).unwrap();
        let max_len = set.iter().map(|w| w.len()).max().unwrap();
        let uniform = {
            let ks: BTreeSet<(usize, usize)> =
                set.iter().map(|w| (w.zeros(), w.ones())).collect();
            match ks.iter().next() {
                Some(&(z, o)) if ks.len() == 1 && z == o => Some(z),
                _ => None,
            }
        };
        let mut tables = Vec::new();
        if max_len <= TABLE_LEN_LIMIT {
            tables = (0..=max_len).map(|len| vec![false; 1usize << len]).collect();
            for w in &set {
                let (len, bits) = w.packed();
                tables[len][bits as usize] = true;
            }
        }
        Ok(FiniteLanguage {
            name: name.into(),
            words: set,
            counts,
            iso_count,
            max_len,
            uniform,
            tables,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn words(&self) -> &BTreeSet<BinaryWord> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// `Some(k)` when every word has exactly `k` zeros and `k` ones.
    pub fn uniform(&self) -> Option<usize> {
        self.uniform
    }

    /// `ml(L)`: the maximum word length.
    pub fn max_word_length(&self) -> usize {
        self.max_len
    }

    pub fn count_set(&self) -> CountSet {
        CountSet {
            counts: self.counts.clone(),
            iso_count: self.iso_count,
        }
    }

    pub fn contains(&self, w: &BinaryWord) -> bool {
        if w.len() > self.max_len {
            return false;
        }
        if !self.tables.is_empty() && w.len() <= 32 {
            let (len, bits) = w.packed();
            return self.tables[len][bits as usize];
        }
        self.words.contains(w)
    }

    /// Membership for a packed word; the fast path of the census.
    #[inline]
    pub fn contains_packed(&self, len: usize, bits: u32) -> bool {
        if len > self.max_len {
            return false;
        }
        if !self.tables.is_empty() {
            return self.tables[len][bits as usize];
        }
        self.words.contains(&BinaryWord::from_packed(len, bits))
    }

    /// Checks `L = ⟨L⟩`; true by construction, kept as a verification hook.
    pub fn is_symmetric(&self) -> bool {
        self.words.iter().all(|w| self.words.contains(&w.complement()))
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Writes the word set, one word per line, sorted.
    pub fn write_to(&self, out: &mut impl Write) -> Result<()> {
        writeln!(out, "# language {}", self.name)?;
        for w in &self.words {
            writeln!(out, "{w}")?;
        }
        Ok(())
    }

    /// Reads a language file: one 0/1 word per line, `#` starts a comment.
    /// With `close` set, the symmetric closure is applied after loading;
    /// otherwise the file must already be complement-closed.
    pub fn read_from(name: impl Into<String>, input: &mut impl BufRead, close: bool) -> Result<Self> {
        let mut words = Vec::new();
        for line in input.lines() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            words.push(BinaryWord::parse(line)?);
        }
        if !close {
            let set: BTreeSet<BinaryWord> = words.iter().cloned().collect();
            if let Some(w) = set.iter().find(|w| !set.contains(&w.complement())) {
                return Err(Error::InvalidArguments(format!(
                    "language file is not 0-1-symmetric: {w} lacks its complement (use closure)"
                )));
            }
        }
        FiniteLanguage::from_words(name, words)
    }
}

impl fmt::Debug for FiniteLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteLanguage({}, {} words)", self.name, self.words.len())
    }
}

impl PartialEq for FiniteLanguage {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words
    }
}

/// The symmetric closure `⟨ws⟩` as an anonymous language.
pub fn symmetric_closure(ws: impl IntoIterator<Item = BinaryWord>) -> Result<FiniteLanguage> {
    FiniteLanguage::from_words("closure", ws)
}

fn bw(s: &str) -> BinaryWord {
    BinaryWord::parse(s).expect("literal binary word")
}

/// The four 2-uniform base languages.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    Circle,
    Permutation,
    Interval,
    CoInterval,
}

pub fn base_two_uniform(which: Base) -> FiniteLanguage {
    let (name, gens): (&str, Vec<&str>) = match which {
        Base::Circle => ("circle", vec!["0101"]),
        Base::Permutation => ("permutation", vec!["0110"]),
        Base::Interval => ("interval", vec!["0101", "0110"]),
        Base::CoInterval => ("co-interval", vec!["0011"]),
    };
    FiniteLanguage::from_words(name, gens.into_iter().map(bw)).unwrap()
}

/// Quantifier shape used by the projection-language constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectionMode {
    /// Some pair of occurrence windows projects into the base (ℓ-interval).
    ExistsAnyPair,
    /// Some diagonal window projects into the base (ℓ-track).
    ExistsDiagonal,
    /// Every diagonal window projects into the base (boxicity, overlap dim).
    ForallDiagonal,
}

/// `{ w ∈ {0,1}^{2ℓ-uni} | Q k,m: δ_{k,m}(w) ∈ base }` for the chosen
/// quantifier shape.
pub fn projection_language(
    ell: usize,
    mode: ProjectionMode,
    base: &FiniteLanguage,
) -> Result<FiniteLanguage> {
    if ell == 0 {
        return Err(Error::InvalidArguments("ℓ must be positive".into()));
    }
    if base.uniform() != Some(2) {
        return Err(Error::InvalidArguments(format!(
            "projection base must be 2-uniform, got {:?}",
            base.uniform()
        )));
    }
    let words = enumerate_fixed_counts(2 * ell, 2 * ell)?;
    let member = |w: &BinaryWord| -> bool {
        match mode {
            ProjectionMode::ExistsAnyPair => (1..=ell).any(|k| {
                (1..=ell).any(|m| base.contains(&deletion_op(w, k, m, 1).unwrap()))
            }),
            ProjectionMode::ExistsDiagonal => {
                (1..=ell).any(|k| base.contains(&deletion_op(w, k, k, 1).unwrap()))
            }
            ProjectionMode::ForallDiagonal => {
                (1..=ell).all(|k| base.contains(&deletion_op(w, k, k, 1).unwrap()))
            }
        }
    };
    FiniteLanguage::from_words(
        format!("proj:{ell}"),
        words.into_iter().filter(member),
    )
}

pub fn l_interval_language(ell: usize) -> Result<FiniteLanguage> {
    let base = base_two_uniform(Base::Interval);
    Ok(projection_language(ell, ProjectionMode::ExistsAnyPair, &base)?
        .rename(format!("l-interval:{ell}")))
}

pub fn l_track_language(ell: usize) -> Result<FiniteLanguage> {
    let base = base_two_uniform(Base::Interval);
    Ok(projection_language(ell, ProjectionMode::ExistsDiagonal, &base)?
        .rename(format!("l-track:{ell}")))
}

pub fn box_language(b: usize) -> Result<FiniteLanguage> {
    let base = base_two_uniform(Base::Interval);
    Ok(projection_language(b, ProjectionMode::ForallDiagonal, &base)?.rename(format!("box:{b}")))
}

pub fn overlap_language(b: usize) -> Result<FiniteLanguage> {
    let base = base_two_uniform(Base::Circle);
    Ok(projection_language(b, ProjectionMode::ForallDiagonal, &base)?.rename(format!("ovlp:{b}")))
}

/// The trapezoid language: 4-uniform words whose first or second
/// occurrence-pair projection overlaps or nests, plus the crossing pair
/// `⟨00111100⟩`.
pub fn trapezoid_language() -> FiniteLanguage {
    d_trapezoid_language(2).unwrap().rename("trap")
}

/// The d-trapezoid language: some diagonal window overlaps or nests, or some
/// consecutive double window equals a crossing pattern.
pub fn d_trapezoid_language(d: usize) -> Result<FiniteLanguage> {
    if d == 0 {
        return Err(Error::InvalidArguments("d must be positive".into()));
    }
    let base = base_two_uniform(Base::Interval);
    let crossing = [bw("00111100"), bw("11000011")];
    let words = enumerate_fixed_counts(2 * d, 2 * d)?;
    let member = |w: &BinaryWord| -> bool {
        (1..=d).any(|i| base.contains(&deletion_op(w, i, i, 1).unwrap()))
            || (1..d).any(|i| {
                let proj = deletion_op(w, i, i, 2).unwrap();
                crossing.contains(&proj)
            })
    };
    FiniteLanguage::from_words(format!("d-trap:{d}"), words.into_iter().filter(member))
}

/// The point-interval triangle language (3-uniform, 14 words).
pub fn pi_language() -> FiniteLanguage {
    let gens = [
        "001101", "001110", "010101", "010110", "011001", "011010", "011100",
    ];
    FiniteLanguage::from_words("pi", gens.iter().map(|s| bw(s))).unwrap()
}

/// Words of the form `prefix · middle · suffix` where `middle` ranges over a
/// shuffle product.
fn sandwich(prefix: &str, left: &str, right: &str, suffix: &str) -> BTreeSet<BinaryWord> {
    let p = bw(prefix);
    let s = bw(suffix);
    shuffle_bits(&bw(left), &bw(right))
        .unwrap()
        .into_iter()
        .map(|m| p.concat(&m).concat(&s))
        .collect()
}

/// The dual-orientation point-interval language: the 3-uniform core, the
/// 4-uniform block whose double-deleted reverse lies in the core, and the
/// (3,4)-count block minus the two disjointness patterns.
pub fn pi_star_language() -> FiniteLanguage {
    let pi = pi_language();
    let mut words: BTreeSet<BinaryWord> = pi.words().clone();

    for w in enumerate_fixed_counts(4, 4).unwrap() {
        let core = delete_first_bit(&delete_first_bit(&w, 1), 0).reversed();
        if pi.contains(&core) {
            words.insert(w);
        }
    }

    // disjointness patterns for one point-triangle against one flipped
    // triangle, after dropping the flag occurrence
    let mut disjoint = sandwich("0", "00", "11", "1");
    disjoint.extend(sandwich("11", "0", "1", "00"));
    for w in enumerate_fixed_counts(3, 4).unwrap() {
        if !disjoint.contains(&delete_first_bit(&w, 1)) {
            words.insert(w);
        }
    }

    FiniteLanguage::from_words("pi-star", words).unwrap()
}

/// True iff `w` is of the form `0^a 1^b 0^c` (at most one block of ones).
fn matches_zeros_ones_zeros(w: &BinaryWord) -> bool {
    let bits = w.bits();
    let first = bits.iter().position(|&b| b == 1);
    let last = bits.iter().rposition(|&b| b == 1);
    match (first, last) {
        (Some(i), Some(j)) => bits[i..=j].iter().all(|&b| b == 1),
        _ => true,
    }
}

/// Decomposes a word into maximal runs `(symbol, length)`.
fn runs(w: &BinaryWord) -> Vec<(u8, usize)> {
    let mut out: Vec<(u8, usize)> = Vec::new();
    for &b in w.bits() {
        match out.last_mut() {
            Some((sym, n)) if *sym == b => *n += 1,
            _ => out.push((b, 1)),
        }
    }
    out
}

/// The k-gon-circle language: counts between 2 and k, minus words whose
/// letters never alternate twice (`⟨0*1*0*⟩`).
pub fn gon_circle_language(k: usize) -> Result<FiniteLanguage> {
    if k < 2 {
        return Err(Error::InvalidArguments(
            "k-gon-circle needs k at least 2".into(),
        ));
    }
    let mut words = Vec::new();
    for z in 2..=k {
        for o in 2..=k {
            for w in enumerate_fixed_counts(z, o)? {
                if !matches_zeros_ones_zeros(&w) && !matches_zeros_ones_zeros(&w.complement()) {
                    words.push(w);
                }
            }
        }
    }
    FiniteLanguage::from_words(format!("gon-circle:{k}"), words)
}

/// `0^a 1^b 0^c` with `a` even and positive, `b` even, `c` positive:
/// the separated pattern when exactly one side's arcs pass the cut.
fn matches_even_zero_one_zero_plus(w: &BinaryWord) -> bool {
    match runs(w).as_slice() {
        [(0, a), (1, b), (0, c)] => a % 2 == 0 && *a >= 2 && b % 2 == 0 && *c >= 1,
        _ => false,
    }
}

/// `0^a 1^b 0^c` with `a` even and positive, `b`, `c` arbitrary: the
/// separated pattern when neither side passes the cut.
fn matches_even_zero_prefix(w: &BinaryWord) -> bool {
    match runs(w).as_slice() {
        [(0, a)] => a % 2 == 0 && *a >= 2,
        [(0, a), (1, _)] => a % 2 == 0 && *a >= 2,
        [(0, a), (1, _), (0, _)] => a % 2 == 0 && *a >= 2,
        _ => false,
    }
}

/// The circle-k-gon language, by parity case analysis on the symbol counts.
pub fn circle_gon_language(k: usize) -> Result<FiniteLanguage> {
    if k == 0 {
        return Err(Error::InvalidArguments(
            "circle-k-gon needs k at least 1".into(),
        ));
    }
    let mut words = Vec::new();
    for z in 2..=(2 * k + 1) {
        for o in 2..=(2 * k + 1) {
            for w in enumerate_fixed_counts(z, o)? {
                let member = match (z % 2 == 1, o % 2 == 1) {
                    (true, true) => true,
                    (true, false) => !matches_even_zero_one_zero_plus(&w),
                    (false, true) => !matches_even_zero_one_zero_plus(&w.complement()),
                    (false, false) => {
                        !matches_even_zero_prefix(&w) && !matches_even_zero_prefix(&w.complement())
                    }
                };
                if member {
                    words.push(w);
                }
            }
        }
    }
    FiniteLanguage::from_words(format!("circle-gon:{k}"), words)
}

/// The t-circular-interval language.  Counts lie in `{2t, 2t+1}`; both-odd
/// words are always members, both-even words need some window pair to
/// overlap or nest, and mixed words are tested after splitting the arc
/// through the cut (`1·d₁(w)·100`).
pub fn circular_interval_language(t: usize) -> Result<FiniteLanguage> {
    if t == 0 {
        return Err(Error::InvalidArguments(
            "t-circular-interval needs t at least 1".into(),
        ));
    }
    let base = base_two_uniform(Base::Interval);
    let window_hit = |w: &BinaryWord, span: usize| -> bool {
        (1..=span).any(|i| (1..=span).any(|j| base.contains(&deletion_op(w, i, j, 1).unwrap())))
    };
    let mut words = Vec::new();
    words.extend(enumerate_fixed_counts(2 * t + 1, 2 * t + 1)?);
    for w in enumerate_fixed_counts(2 * t, 2 * t)? {
        if window_hit(&w, t) {
            words.push(w);
        }
    }
    let one = bw("1");
    let tail = bw("100");
    for w in enumerate_fixed_counts(2 * t, 2 * t + 1)? {
        let split = one.concat(&delete_first_bit(&w, 1)).concat(&tail);
        if window_hit(&split, t + 1) {
            words.push(w);
        }
    }
    FiniteLanguage::from_words(format!("c-int:{t}"), words)
}

/// The interval-enumerable language `⟨(00 ⧢ 1)·011⟩` (six words).
pub fn interval_enumerable_language() -> FiniteLanguage {
    let words = sandwich("", "00", "1", "011");
    FiniteLanguage::from_words("int-en", words).unwrap()
}

/// The circular-arc containment language (counts {2,3}).
///
/// `00011` covers a plain arc lying between a wrapping arc's start and the
/// cut, and `001110` two nested wrapping arcs whose flag occurrences both
/// precede the swept endpoints; dropping the flag occurrences reduces them
/// to the same arc configurations as the other generators (`0011` resp.
/// `0110`), so both must be members for the occurrence-index decoding to
/// stay faithful.
pub fn arc_containment_language() -> FiniteLanguage {
    let gens = [
        "0110", "100110", "010110", "001110", "01100", "01011", "00111", "00011",
    ];
    FiniteLanguage::from_words("arc-cont", gens.iter().map(|s| bw(s))).unwrap()
}

/// Binary images of well-parenthesized words with exactly `d` pairs:
/// words with `d` zeros, `d` ones, and every prefix holding at least as many
/// zeros as ones.
pub fn dyck_words(d: usize) -> Result<BTreeSet<BinaryWord>> {
    if d == 0 {
        return Err(Error::InvalidArguments("d must be positive".into()));
    }
    if d > DYCK_GUARD {
        return Err(Error::Capacity(format!(
            "dyck word generation for d={d} exceeds guard {DYCK_GUARD}"
        )));
    }
    fn go(opens: usize, closes: usize, cur: &mut Vec<u8>, out: &mut BTreeSet<BinaryWord>) {
        if opens == 0 && closes == 0 {
            out.insert(BinaryWord::new(cur.clone()).unwrap());
            return;
        }
        if opens > 0 {
            cur.push(0);
            go(opens - 1, closes, cur, out);
            cur.pop();
        }
        if closes > opens {
            cur.push(1);
            go(opens, closes - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(d, d, &mut Vec::new(), &mut out);
    Ok(out)
}

/// The comparability language of dimension `d`: the symmetric closure of the
/// Dyck images.  `d = 1` is allowed and yields `⟨01⟩` (complete graphs).
pub fn comparability_language(d: usize) -> Result<FiniteLanguage> {
    FiniteLanguage::from_words(format!("cmp:{d}"), dyck_words(d)?)
}

/// The bounded-interval-dimension language: all diagonal windows equal
/// `0011`, or all equal `1100`.
pub fn interval_dim_language(d: usize) -> Result<FiniteLanguage> {
    if d == 0 {
        return Err(Error::InvalidArguments("d must be positive".into()));
    }
    let low = bw("0011");
    let high = bw("1100");
    let words = enumerate_fixed_counts(2 * d, 2 * d)?;
    let member = |w: &BinaryWord| -> bool {
        let first = deletion_op(w, 1, 1, 1).unwrap();
        if first != low && first != high {
            return false;
        }
        (2..=d).all(|i| deletion_op(w, i, i, 1).unwrap() == first)
    };
    FiniteLanguage::from_words(format!("idim:{d}"), words.into_iter().filter(member))
}

/// The split-graph representation-number language `⟨01(01 ∪ λ)(01 ∪ λ)⟩`.
pub fn split_wr_language() -> FiniteLanguage {
    FiniteLanguage::from_words("split-wr", ["01", "0101", "010101"].iter().map(|s| bw(s)))
        .unwrap()
}

/// Builds a language from its CLI name, e.g. `l-interval:2` or `trap`.
pub fn from_spec(spec: &str) -> Result<FiniteLanguage> {
    let (name, param) = match spec.split_once(':') {
        Some((n, p)) => {
            let v = p
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad language parameter {p:?}")))?;
            (n, Some(v))
        }
        None => (spec, None),
    };
    let need = |what: &str| -> Result<usize> {
        param.ok_or_else(|| Error::Parse(format!("language {name} needs a parameter {what}")))
    };
    let plain = |lang: FiniteLanguage| -> Result<FiniteLanguage> {
        if param.is_some() {
            return Err(Error::Parse(format!("language {name} takes no parameter")));
        }
        Ok(lang)
    };
    match name {
        "interval" => plain(base_two_uniform(Base::Interval)),
        "circle" => plain(base_two_uniform(Base::Circle)),
        "permutation" => plain(base_two_uniform(Base::Permutation)),
        "co-interval" => plain(base_two_uniform(Base::CoInterval)),
        "l-interval" => l_interval_language(need("ℓ")?),
        "l-track" => l_track_language(need("ℓ")?),
        "box" => box_language(need("b")?),
        "ovlp" => overlap_language(need("b")?),
        "trap" => plain(trapezoid_language()),
        "d-trap" => d_trapezoid_language(need("d")?),
        "pi" => plain(pi_language()),
        "pi-star" => plain(pi_star_language()),
        "gon-circle" => gon_circle_language(need("k")?),
        "circle-gon" => circle_gon_language(need("k")?),
        "c-int" => circular_interval_language(need("t")?),
        "int-en" => plain(interval_enumerable_language()),
        "arc-cont" => plain(arc_containment_language()),
        "cmp" => comparability_language(need("d")?),
        "idim" => interval_dim_language(need("d")?),
        "split-wr" => plain(split_wr_language()),
        _ => Err(Error::Parse(format!("unknown language {name:?}"))),
    }
}

/// The default per-family instances used by the census and the verification
/// suite.
pub fn implemented_languages() -> Vec<FiniteLanguage> {
    [
        "interval",
        "circle",
        "permutation",
        "co-interval",
        "l-interval:2",
        "l-track:2",
        "box:2",
        "ovlp:2",
        "trap",
        "d-trap:2",
        "pi",
        "pi-star",
        "gon-circle:2",
        "circle-gon:1",
        "c-int:1",
        "int-en",
        "arc-cont",
        "cmp:2",
        "cmp:3",
        "idim:2",
        "split-wr",
    ]
    .iter()
    .map(|s| from_spec(s).unwrap())
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::occurrence_index_bits;

    #[test]
    fn closure_examples() {
        let l = symmetric_closure([bw("0101")]).unwrap();
        assert_eq!(
            l.words().iter().cloned().collect::<Vec<_>>(),
            vec![bw("0101"), bw("1010")]
        );
        let closed = symmetric_closure([bw("0011"), bw("1100")]).unwrap();
        assert_eq!(closed.len(), 2);
        // closure is idempotent
        let again = symmetric_closure(closed.words().iter().cloned()).unwrap();
        assert_eq!(again, closed);
        assert!(symmetric_closure(std::iter::empty()).is_err());
    }

    #[test]
    fn closure_of_dyck_three() {
        let d3 = dyck_words(3).unwrap();
        assert_eq!(d3.len(), 5);
        let l = symmetric_closure(d3).unwrap();
        assert_eq!(l.len(), 10);
    }

    #[test]
    fn base_languages() {
        let interval = base_two_uniform(Base::Interval);
        let expect: BTreeSet<BinaryWord> = ["0101", "1010", "0110", "1001"]
            .iter()
            .map(|s| bw(s))
            .collect();
        assert_eq!(interval.words(), &expect);
        let co = base_two_uniform(Base::CoInterval);
        assert_eq!(
            co.words().iter().cloned().collect::<Vec<_>>(),
            vec![bw("0011"), bw("1100")]
        );
        let circle = base_two_uniform(Base::Circle);
        assert_eq!(circle.len(), 2);
        assert!(circle.contains(&bw("0101")));
        // the six 2-uniform words split between ⟨0011⟩ and ⟨0101,0110⟩
        for w in enumerate_fixed_counts(2, 2).unwrap() {
            assert!(interval.contains(&w) != co.contains(&w));
        }
    }

    #[test]
    fn projection_identity_at_one() {
        let base = base_two_uniform(Base::Interval);
        for mode in [
            ProjectionMode::ExistsAnyPair,
            ProjectionMode::ExistsDiagonal,
            ProjectionMode::ForallDiagonal,
        ] {
            let l = projection_language(1, mode, &base).unwrap();
            assert_eq!(l, base);
        }
    }

    #[test]
    fn projection_modes_differ_at_two() {
        let any = l_interval_language(2).unwrap();
        let diag = l_track_language(2).unwrap();
        let all = box_language(2).unwrap();
        // 00101011: the second zero window against the first one window
        // overlaps, but neither diagonal does
        let w = bw("00101011");
        assert!(any.contains(&w));
        assert!(!diag.contains(&w));
        assert!(!all.contains(&w));
        // inclusions: forall ⊆ exists-diagonal ⊆ exists-any
        for w in all.words() {
            assert!(diag.contains(w));
        }
        for w in diag.words() {
            assert!(any.contains(w));
        }
        assert_eq!(any.uniform(), Some(4));
        assert_eq!(any.count_set().counts.iter().copied().collect::<Vec<_>>(), vec![4]);
        assert_eq!(any.count_set().iso_count, 1);
    }

    #[test]
    fn overlap_language_within_box() {
        let ovlp = overlap_language(2).unwrap();
        let boxes = box_language(2).unwrap();
        for w in ovlp.words() {
            assert!(boxes.contains(w));
        }
        assert!(ovlp.len() < boxes.len());
    }

    #[test]
    fn trapezoid_examples() {
        let trap = trapezoid_language();
        assert!(trap.contains(&bw("00111100")));
        assert!(!trap.contains(&bw("00110011")));
        assert!(trap.contains(&bw("01011100")));
        assert_eq!(trap.uniform(), Some(4));
    }

    #[test]
    fn d_trapezoid_examples() {
        assert_eq!(
            d_trapezoid_language(1).unwrap(),
            base_two_uniform(Base::Interval)
        );
        assert_eq!(d_trapezoid_language(2).unwrap(), trapezoid_language());
        let d3 = d_trapezoid_language(3).unwrap();
        assert!(d3.contains(&bw("000111111000")));
    }

    #[test]
    fn pi_examples() {
        let pi = pi_language();
        assert!(pi.contains(&bw("010110")));
        assert!(!pi.contains(&bw("000111")));
        assert_eq!(pi.len(), 14);
        assert_eq!(pi.uniform(), Some(3));
        assert_eq!(pi.max_word_length(), 6);
    }

    #[test]
    fn pi_star_examples() {
        let star = pi_star_language();
        let pi = pi_language();
        for w in pi.words() {
            assert!(star.contains(w));
        }
        // 1000111 drops its flag to 000111 = 0·0011·1, a disjointness pattern
        assert!(!star.contains(&bw("1000111")));
        // 10011010 double-deletes to 011010, whose reverse 010110 is a core word
        assert!(star.contains(&bw("10011010")));
        assert!(star.is_symmetric());
    }

    #[test]
    fn gon_circle_examples() {
        let g2 = gon_circle_language(2).unwrap();
        assert!(g2.contains(&bw("0101")));
        assert!(!g2.contains(&bw("0110")));
        assert_eq!(g2, base_two_uniform(Base::Circle));
        // independent route: membership iff 0101 or 1010 occurs as a
        // subsequence
        let has_altpattern = |w: &BinaryWord| -> bool {
            let subseq = |pat: [u8; 4]| {
                let mut i = 0;
                for &b in w.bits() {
                    if i < 4 && b == pat[i] {
                        i += 1;
                    }
                }
                i == 4
            };
            subseq([0, 1, 0, 1]) || subseq([1, 0, 1, 0])
        };
        let g3 = gon_circle_language(3).unwrap();
        for z in 2..=3 {
            for o in 2..=3 {
                for w in enumerate_fixed_counts(z, o).unwrap() {
                    assert_eq!(g3.contains(&w), has_altpattern(&w));
                }
            }
        }
    }

    #[test]
    fn circle_gon_examples() {
        let g2 = circle_gon_language(2).unwrap();
        // counts (5,4): matches the separated pattern (00)⁺(11)*0⁺
        assert!(!g2.contains(&bw("001111000")));
        assert!(g2.contains(&bw("0101")));
        // both odd: always a member
        for w in enumerate_fixed_counts(3, 3).unwrap() {
            assert!(g2.contains(&w));
        }
        assert!(g2.is_symmetric());
        // chord pairs: disjoint arcs are non-members, nested arcs members
        let g1 = circle_gon_language(1).unwrap();
        assert!(!g1.contains(&bw("0011")));
        assert!(g1.contains(&bw("0110")));
    }

    #[test]
    fn circular_interval_explicit_form() {
        let l = circular_interval_language(1).unwrap();
        // {0,1}^{3-uni} ∪ ⟨0101,0110⟩ ∪ ⟨(00 ⧢ 111) ∖ {11001}⟩
        let mut expect: BTreeSet<BinaryWord> =
            enumerate_fixed_counts(3, 3).unwrap().into_iter().collect();
        expect.extend(["0101", "1010", "0110", "1001"].iter().map(|s| bw(s)));
        for w in shuffle_bits(&bw("00"), &bw("111")).unwrap() {
            if w != bw("11001") {
                expect.insert(w.complement());
                expect.insert(w);
            }
        }
        assert_eq!(l.words(), &expect);
        assert!(!l.contains(&bw("11001")));
        assert!(l.contains(&bw("000111")));
    }

    #[test]
    fn interval_enumerable_words() {
        let l = interval_enumerable_language();
        let expect: BTreeSet<BinaryWord> =
            ["100011", "010011", "001011", "011100", "101100", "110100"]
                .iter()
                .map(|s| bw(s))
                .collect();
        assert_eq!(l.words(), &expect);
        assert!(l.contains(&bw("001011")));
        assert!(!l.contains(&bw("000111")));
        assert_eq!(l.len(), 6);
    }

    #[test]
    fn arc_containment_membership() {
        let l = arc_containment_language();
        assert!(l.contains(&bw("101001")));
        assert!(!l.contains(&bw("00110")));
        assert!(l.contains(&bw("01100")));
        assert!(l.contains(&bw("0110")));
        let cs = l.count_set();
        assert_eq!(cs.counts.iter().copied().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(cs.iso_count, 1);
        assert_eq!(l.max_word_length(), 6);
    }

    #[test]
    fn dyck_generation() {
        let d3 = dyck_words(3).unwrap();
        let expect: BTreeSet<BinaryWord> =
            ["000111", "001011", "001101", "010011", "010101"]
                .iter()
                .map(|s| bw(s))
                .collect();
        assert_eq!(d3, expect);
        assert_eq!(
            dyck_words(1).unwrap().into_iter().collect::<Vec<_>>(),
            vec![bw("01")]
        );
        // Catalan numbers by the ballot recurrence, independent of the
        // generator
        let mut catalan = [1u64; 7];
        for n in 1..=6 {
            catalan[n] = (0..n).map(|i| catalan[i] * catalan[n - 1 - i]).sum();
        }
        for (d, expected) in catalan.iter().enumerate().skip(1) {
            assert_eq!(dyck_words(d).unwrap().len() as u64, *expected);
        }
        assert!(dyck_words(11).is_err());
    }

    #[test]
    fn dyck_prefix_condition_agrees() {
        // prefix dominance (#0 ≥ #1 everywhere) and the paired-occurrence
        // characterization both define the same set
        for d in 1..=6 {
            let generated = dyck_words(d).unwrap();
            for w in enumerate_fixed_counts(d, d).unwrap() {
                let mut bal = 0i64;
                let mut dominant = true;
                for &b in w.bits() {
                    bal += if b == 0 { 1 } else { -1 };
                    if bal < 0 {
                        dominant = false;
                        break;
                    }
                }
                let paired = (1..=d).all(|i| {
                    occurrence_index_bits(&w, 0, i).unwrap()
                        < occurrence_index_bits(&w, 1, i).unwrap()
                });
                assert_eq!(generated.contains(&w), dominant);
                assert_eq!(dominant, paired);
            }
        }
    }

    #[test]
    fn comparability_examples() {
        let c3 = comparability_language(3).unwrap();
        assert_eq!(c3.len(), 10);
        assert!(c3.contains(&bw("010101")));
        let c2 = comparability_language(2).unwrap();
        let expect: BTreeSet<BinaryWord> = ["0011", "0101", "1100", "1010"]
            .iter()
            .map(|s| bw(s))
            .collect();
        assert_eq!(c2.words(), &expect);
        let c1 = comparability_language(1).unwrap();
        assert_eq!(c1.len(), 2);
    }

    #[test]
    fn interval_dim_examples() {
        assert_eq!(
            interval_dim_language(1).unwrap(),
            base_two_uniform(Base::CoInterval)
        );
        let i2 = interval_dim_language(2).unwrap();
        assert!(i2.contains(&bw("00110011")));
        assert!(!i2.contains(&bw("00111100")));
    }

    #[test]
    fn idim_complements_d_trapezoid() {
        for d in 1..=3 {
            let idim = interval_dim_language(d).unwrap();
            let trap = d_trapezoid_language(d).unwrap();
            for w in enumerate_fixed_counts(2 * d, 2 * d).unwrap() {
                assert!(
                    idim.contains(&w) != trap.contains(&w),
                    "2d-uniform word {w} must lie in exactly one of idim:{d}, d-trap:{d}"
                );
            }
        }
    }

    #[test]
    fn split_wr_words() {
        let l = split_wr_language();
        assert!(l.contains(&bw("0101")));
        assert!(l.contains(&bw("101010")));
        assert_eq!(l.len(), 6);
    }

    #[test]
    fn count_set_examples() {
        let interval = base_two_uniform(Base::Interval);
        let cs = interval.count_set();
        assert_eq!(cs.counts.iter().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(cs.iso_count, 1);
        assert_eq!(interval.max_word_length(), 4);
        assert_eq!(pi_language().max_word_length(), 6);
        let proj = l_interval_language(2).unwrap();
        assert_eq!(proj.count_set().counts.iter().copied().collect::<Vec<_>>(), vec![4]);
    }

    #[test]
    fn all_constructed_languages_are_symmetric_and_tagged() {
        for l in implemented_languages() {
            assert!(l.is_symmetric(), "{} not symmetric", l.name());
            if let Some(k) = l.uniform() {
                for w in l.words() {
                    assert_eq!(w.zeros(), k);
                    assert_eq!(w.ones(), k);
                }
            }
        }
    }

    #[test]
    fn language_file_roundtrip() {
        let l = pi_language();
        let mut buf = Vec::new();
        l.write_to(&mut buf).unwrap();
        let back =
            FiniteLanguage::read_from("pi", &mut std::io::Cursor::new(&buf), false).unwrap();
        assert_eq!(back, l);
        // a half language needs the closure flag
        let half = "0101\n";
        assert!(FiniteLanguage::read_from("x", &mut std::io::Cursor::new(half), false).is_err());
        let closed =
            FiniteLanguage::read_from("x", &mut std::io::Cursor::new(half), true).unwrap();
        assert_eq!(closed.len(), 2);
    }

    #[test]
    fn from_spec_names() {
        assert_eq!(from_spec("trap").unwrap().name(), "trap");
        assert_eq!(from_spec("l-interval:2").unwrap().name(), "l-interval:2");
        assert!(from_spec("l-interval").is_err());
        assert!(from_spec("trap:2").is_err());
        assert!(from_spec("nonsense").is_err());
    }
}
