//! Words, morphisms, occurrence arithmetic, shuffle, and deletion operators.
//!
//! Positions are 1-based throughout.  Vertex identifiers are positive
//! integers; the CLI additionally maps lowercase `a`-`z` to `1`-`26` so the
//! small worked examples stay readable.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// A vertex identifier (positive integer).
pub type Letter = u32;

/// Combined-length guard for [`shuffle`].
pub const SHUFFLE_GUARD: usize = 20;
/// Length guard for [`enumerate_fixed_counts`].
pub const ENUMERATE_GUARD: usize = 24;
/// Pair-count guard for [`dyck_words`](crate::languages::dyck_words).
pub const DYCK_GUARD: usize = 10;

/// A finite word over `{0,1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryWord {
    bits: Vec<u8>,
}

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidArguments(
                "binary word symbols must be 0 or 1".into(),
            ));
        }
        Ok(BinaryWord { bits })
    }

    pub fn empty() -> Self {
        BinaryWord { bits: Vec::new() }
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                _ => Err(Error::Parse(format!("bad symbol {c:?} in binary word"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(|bits| BinaryWord { bits })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// `|w|_a` for `a` in `{0,1}`.
    pub fn count(&self, symbol: u8) -> usize {
        self.bits.iter().filter(|&&b| b == symbol).count()
    }

    pub fn zeros(&self) -> usize {
        self.count(0)
    }

    pub fn ones(&self) -> usize {
        self.count(1)
    }

    /// The complement morphism: flips every bit.
    pub fn complement(&self) -> Self {
        BinaryWord {
            bits: self.bits.iter().map(|b| 1 - b).collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        BinaryWord {
            bits: self.bits.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        BinaryWord { bits }
    }

    /// True iff no two adjacent symbols are equal (membership in the
    /// classical alternation language).
    pub fn is_alternating(&self) -> bool {
        self.bits.windows(2).all(|w| w[0] != w[1])
    }

    /// Packs the word into `(length, bits)` with bit `i` of the integer
    /// holding symbol `i+1`.  Only valid for words of length at most 32.
    pub fn packed(&self) -> (usize, u32) {
        debug_assert!(self.bits.len() <= 32);
        let mut acc = 0u32;
        for (i, &b) in self.bits.iter().enumerate() {
            acc |= (b as u32) << i;
        }
        (self.bits.len(), acc)
    }

    pub fn from_packed(len: usize, bits: u32) -> Self {
        BinaryWord {
            bits: (0..len).map(|i| ((bits >> i) & 1) as u8).collect(),
        }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return write!(f, "(empty)");
        }
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite word over positive-integer vertex identifiers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexWord {
    letters: Vec<Letter>,
}

impl VertexWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidArguments(
                "vertex identifiers must be positive".into(),
            ));
        }
        Ok(VertexWord { letters })
    }

    /// Parses either a run of lowercase letters (`abcca`) or comma-separated
    /// positive integers (`1,2,3,3,1`).
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(VertexWord::default());
        }
        if s.chars().all(|c| c.is_ascii_lowercase()) {
            return VertexWord::new(s.chars().map(|c| (c as u32) - ('a' as u32) + 1).collect());
        }
        let letters = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<Letter>()
                    .map_err(|_| Error::Parse(format!("bad vertex identifier {tok:?}")))
            })
            .collect::<Result<Vec<Letter>>>()?;
        VertexWord::new(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The set of letters actually occurring in the word.
    pub fn alphabet(&self) -> BTreeSet<Letter> {
        self.letters.iter().copied().collect()
    }

    /// `|w|_a`.
    pub fn count(&self, a: Letter) -> usize {
        self.letters.iter().filter(|&&x| x == a).count()
    }

    /// 1-based positions of all occurrences of `a`, in increasing order.
    pub fn occurrences(&self, a: Letter) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == a)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Erases every letter outside `keep` (the morphism `h_A`).
    pub fn restricted(&self, keep: &BTreeSet<Letter>) -> VertexWord {
        VertexWord {
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|x| keep.contains(x))
                .collect(),
        }
    }

    /// Renders as lowercase letters when all identifiers fit in `a`-`z`,
    /// otherwise as comma-separated integers.
    pub fn display(&self) -> String {
        if !self.letters.is_empty() && self.letters.iter().all(|&x| x <= 26) {
            self.letters
                .iter()
                .map(|&x| char::from(b'a' + (x as u8) - 1))
                .collect()
        } else {
            self.letters
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for VertexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl fmt::Debug for VertexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&[Letter]> for VertexWord {
    fn from(letters: &[Letter]) -> Self {
        VertexWord {
            letters: letters.to_vec(),
        }
    }
}

/// The morphism `h_{a,b}`: `a` maps to 0, `b` to 1, everything else erased.
pub fn project(w: &VertexWord, a: Letter, b: Letter) -> Result<BinaryWord> {
    if a == b {
        return Err(Error::InvalidArguments(format!(
            "projection letters must differ (got {a} twice)"
        )));
    }
    let bits = w
        .letters
        .iter()
        .filter_map(|&x| {
            if x == a {
                Some(0u8)
            } else if x == b {
                Some(1u8)
            } else {
                None
            }
        })
        .collect();
    Ok(BinaryWord { bits })
}

/// 1-based index of the `ell`-th occurrence of a symbol in a slice.
fn occurrence_index_in<T: PartialEq>(seq: &[T], a: &T, ell: usize) -> Result<usize> {
    if ell == 0 {
        return Err(Error::InvalidArguments(
            "occurrence number must be positive".into(),
        ));
    }
    let mut seen = 0usize;
    for (i, x) in seq.iter().enumerate() {
        if x == a {
            seen += 1;
            if seen == ell {
                return Ok(i + 1);
            }
        }
    }
    Err(Error::OutOfRange(format!(
        "word has only {seen} occurrences, wanted the {ell}-th"
    )))
}

/// `ind_a(ell, w)` for vertex words.
pub fn occurrence_index(w: &VertexWord, a: Letter, ell: usize) -> Result<usize> {
    occurrence_index_in(&w.letters, &a, ell)
}

/// `ind_a(ell, u)` for binary words.
pub fn occurrence_index_bits(u: &BinaryWord, symbol: u8, ell: usize) -> Result<usize> {
    occurrence_index_in(&u.bits, &symbol, ell)
}

fn delete_first_in<T: PartialEq + Clone>(seq: &[T], a: &T) -> Vec<T> {
    match seq.iter().position(|x| x == a) {
        None => seq.to_vec(),
        Some(p) => {
            let mut out = seq.to_vec();
            out.remove(p);
            out
        }
    }
}

/// `d_a`: removes the first occurrence of `a`, or returns the word unchanged
/// when `a` does not occur.
pub fn delete_first(w: &VertexWord, a: Letter) -> VertexWord {
    VertexWord {
        letters: delete_first_in(&w.letters, &a),
    }
}

/// `d_a` on binary words.
pub fn delete_first_bit(u: &BinaryWord, symbol: u8) -> BinaryWord {
    BinaryWord {
        bits: delete_first_in(&u.bits, &symbol),
    }
}

fn shuffle_seqs<T: Clone + Ord>(u: &[T], v: &[T]) -> BTreeSet<Vec<T>> {
    // Interleavings, deduplicated via the set (duplicates arise when u and v
    // share letters).
    fn go<T: Clone + Ord>(u: &[T], v: &[T], acc: &mut Vec<T>, out: &mut BTreeSet<Vec<T>>) {
        if u.is_empty() && v.is_empty() {
            out.insert(acc.clone());
            return;
        }
        if let Some((h, rest)) = u.split_first() {
            acc.push(h.clone());
            go(rest, v, acc, out);
            acc.pop();
        }
        if let Some((h, rest)) = v.split_first() {
            acc.push(h.clone());
            go(u, rest, acc, out);
            acc.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(u, v, &mut Vec::new(), &mut out);
    out
}

/// The shuffle product `u ⧢ v` over vertex words.
pub fn shuffle(u: &VertexWord, v: &VertexWord) -> Result<BTreeSet<VertexWord>> {
    if u.len() + v.len() > SHUFFLE_GUARD {
        return Err(Error::Capacity(format!(
            "shuffle of combined length {} exceeds guard {SHUFFLE_GUARD}",
            u.len() + v.len()
        )));
    }
    Ok(shuffle_seqs(&u.letters, &v.letters)
        .into_iter()
        .map(|letters| VertexWord { letters })
        .collect())
}

/// The shuffle product over binary words.
pub fn shuffle_bits(u: &BinaryWord, v: &BinaryWord) -> Result<BTreeSet<BinaryWord>> {
    if u.len() + v.len() > SHUFFLE_GUARD {
        return Err(Error::Capacity(format!(
            "shuffle of combined length {} exceeds guard {SHUFFLE_GUARD}",
            u.len() + v.len()
        )));
    }
    Ok(shuffle_seqs(&u.bits, &v.bits)
        .into_iter()
        .map(|bits| BinaryWord { bits })
        .collect())
}

/// The deletion operator `δ_{k,m}^{2ℓ→2d}` on a `2ℓ`-uniform binary word:
/// keeps the `(2k−1)`-th through `2(k−1+d)`-th occurrences of `0` and the
/// `(2m−1)`-th through `2(m−1+d)`-th occurrences of `1`, preserving order.
pub fn deletion_op(w: &BinaryWord, k: usize, m: usize, d: usize) -> Result<BinaryWord> {
    if k == 0 || m == 0 || d == 0 {
        return Err(Error::InvalidArguments(
            "deletion operator parameters must be positive".into(),
        ));
    }
    let zeros = w.zeros();
    let ones = w.ones();
    if zeros != ones || zeros == 0 || !zeros.is_multiple_of(2) {
        return Err(Error::InvalidArguments(format!(
            "deletion operator needs a 2ℓ-uniform word, got counts ({zeros},{ones})"
        )));
    }
    let ell = zeros / 2;
    if k > ell || m > ell || k - 1 + d > ell || m - 1 + d > ell {
        return Err(Error::InvalidArguments(format!(
            "deletion window out of bounds for ℓ={ell}: k={k}, m={m}, d={d}"
        )));
    }
    let keep0 = (2 * k - 1)..=(2 * (k - 1 + d));
    let keep1 = (2 * m - 1)..=(2 * (m - 1 + d));
    let mut seen = [0usize; 2];
    let bits = w
        .bits
        .iter()
        .filter(|&&b| {
            seen[b as usize] += 1;
            let occ = seen[b as usize];
            if b == 0 {
                keep0.contains(&occ)
            } else {
                keep1.contains(&occ)
            }
        })
        .copied()
        .collect();
    Ok(BinaryWord { bits })
}

/// All binary words with the given symbol counts, in lexicographic order.
pub fn enumerate_fixed_counts(zeros: usize, ones: usize) -> Result<Vec<BinaryWord>> {
    if zeros + ones > ENUMERATE_GUARD {
        return Err(Error::Capacity(format!(
            "enumeration of length {} exceeds guard {ENUMERATE_GUARD}",
            zeros + ones
        )));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(zeros + ones);
    fn go(z: usize, o: usize, cur: &mut Vec<u8>, out: &mut Vec<BinaryWord>) {
        if z == 0 && o == 0 {
            out.push(BinaryWord { bits: cur.clone() });
            return;
        }
        if z > 0 {
            cur.push(0);
            go(z - 1, o, cur, out);
            cur.pop();
        }
        if o > 0 {
            cur.push(1);
            go(z, o - 1, cur, out);
            cur.pop();
        }
    }
    go(zeros, ones, &mut cur, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vw(s: &str) -> VertexWord {
        VertexWord::parse(s).unwrap()
    }

    fn bw(s: &str) -> BinaryWord {
        BinaryWord::parse(s).unwrap()
    }

    #[test]
    fn projection_paper_examples() {
        let w = vw("abcca");
        assert_eq!(project(&w, 1, 2).unwrap(), bw("010"));
        assert_eq!(project(&w, 1, 3).unwrap(), bw("0110"));
        // neither letter occurs: erasing morphism
        assert_eq!(project(&w, 5, 6).unwrap(), BinaryWord::empty());
        assert!(project(&w, 1, 1).is_err());
    }

    #[test]
    fn projection_complement_symmetry() {
        // h_{a,b}(w) is the bitwise complement of h_{b,a}(w)
        let w = vw("abacbbbdcaddadcc");
        for a in 1..=4u32 {
            for b in 1..=4u32 {
                if a != b {
                    assert_eq!(
                        project(&w, a, b).unwrap(),
                        project(&w, b, a).unwrap().complement()
                    );
                }
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(bw("010").complement(), bw("101"));
        assert_eq!(BinaryWord::empty().complement(), BinaryWord::empty());
        let u = bw("001011");
        assert_eq!(u.complement().complement(), u);
        assert_eq!(u.complement().zeros(), u.ones());
        assert_eq!(u.complement().len(), u.len());
    }

    #[test]
    fn occurrence_index_examples() {
        let u = bw("001001110101");
        assert_eq!(occurrence_index_bits(&u, 1, 2).unwrap(), 6);
        let w = vw("aabdacccdbbd");
        assert_eq!(occurrence_index(&w, 4, 3).unwrap(), 12);
        let w2 = vw("abc");
        assert_eq!(occurrence_index(&w2, 1, 1).unwrap(), 1);
        assert!(occurrence_index(&w2, 1, 2).is_err());
    }

    #[test]
    fn occurrence_index_strictly_increasing() {
        let u = bw("001001110101");
        for sym in [0u8, 1u8] {
            let total = u.count(sym);
            let idx: Vec<usize> = (1..=total)
                .map(|ell| occurrence_index_bits(&u, sym, ell).unwrap())
                .collect();
            assert!(idx.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn delete_first_examples() {
        assert_eq!(delete_first_bit(&bw("11001"), 1), bw("1001"));
        assert_eq!(delete_first_bit(&bw("00110"), 1), bw("0010"));
        assert_eq!(delete_first_bit(&bw("000"), 1), bw("000"));
        assert_eq!(delete_first(&vw("abcab"), 2), vw("acab"));
    }

    #[test]
    fn shuffle_examples() {
        // dabec ∈ abc ⧢ de
        let sh = shuffle(&vw("abc"), &vw("de")).unwrap();
        assert!(sh.contains(&vw("dabec")));
        assert_eq!(sh.len(), 10); // C(5,2) distinct interleavings

        let sh2 = shuffle_bits(&bw("00"), &bw("1")).unwrap();
        let expect: BTreeSet<BinaryWord> =
            ["100", "010", "001"].iter().map(|s| bw(s)).collect();
        assert_eq!(sh2, expect);

        let sh3 = shuffle(&vw("abc"), &VertexWord::default()).unwrap();
        assert_eq!(sh3.len(), 1);
        assert!(sh3.contains(&vw("abc")));

        assert!(shuffle(&vw("aaaaaaaaaaa"), &vw("bbbbbbbbbb")).is_err());
    }

    #[test]
    fn shuffle_cardinality_disjoint_letters() {
        // |u ⧢ v| = C(|u|+|v|, |u|) when u and v share no letter
        let u = vw("abc");
        let v = vw("defg");
        assert_eq!(shuffle(&u, &v).unwrap().len(), 35);
    }

    #[test]
    fn deletion_op_paper_examples() {
        let w = bw("001001110101");
        assert_eq!(deletion_op(&w, 2, 1, 1).unwrap(), bw("1001"));
        assert_eq!(deletion_op(&w, 3, 2, 1).unwrap(), bw("1100"));
        assert_eq!(deletion_op(&w, 2, 1, 2).unwrap(), bw("10011100"));
    }

    #[test]
    fn deletion_op_output_uniform() {
        let w = bw("001001110101");
        for k in 1..=3 {
            for m in 1..=3 {
                for d in 1..=3 {
                    if k - 1 + d <= 3 && m - 1 + d <= 3 {
                        let out = deletion_op(&w, k, m, d).unwrap();
                        assert_eq!(out.zeros(), 2 * d);
                        assert_eq!(out.ones(), 2 * d);
                    }
                }
            }
        }
        assert!(deletion_op(&w, 4, 1, 1).is_err());
        assert!(deletion_op(&bw("010"), 1, 1, 1).is_err());
    }

    #[test]
    fn enumerate_counts() {
        let all = enumerate_fixed_counts(2, 2).unwrap();
        let expect: Vec<BinaryWord> = ["0011", "0101", "0110", "1001", "1010", "1100"]
            .iter()
            .map(|s| bw(s))
            .collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, expect);
        assert_eq!(enumerate_fixed_counts(1, 0).unwrap(), vec![bw("0")]);
        assert_eq!(enumerate_fixed_counts(4, 4).unwrap().len(), 70);
        assert!(enumerate_fixed_counts(13, 12).is_err());
    }

    #[test]
    fn alternation() {
        assert!(bw("010").is_alternating());
        assert!(!bw("0110").is_alternating());
        assert!(BinaryWord::empty().is_alternating());
    }

    #[test]
    fn packing_roundtrip() {
        for s in ["", "0", "1", "0110", "001001110101"] {
            let w = bw(s);
            let (len, bits) = w.packed();
            assert_eq!(BinaryWord::from_packed(len, bits), w);
        }
    }

    #[test]
    fn word_parsing() {
        assert_eq!(vw("abc").letters(), &[1, 2, 3]);
        assert_eq!(vw("1,2,30").letters(), &[1, 2, 30]);
        assert!(VertexWord::parse("0,1").is_err());
        assert_eq!(vw("1,2,30").display(), "1,2,30");
        assert_eq!(vw("abc").display(), "abc");
    }
}
