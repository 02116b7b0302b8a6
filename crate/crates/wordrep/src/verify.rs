//! The cross-module property suite: round trips, dualities, hereditariness,
//! and the letter/thin/box pipeline, with counterexamples on failure.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::census::{brute_force_speed, speed_set, CensusOptions, Recognizer};
use crate::geometry::{sample, Family};
use crate::graphs::decode_graph;
use crate::languages::{
    self, base_two_uniform, comparability_language, d_trapezoid_language, dyck_words,
    interval_dim_language, Base, FiniteLanguage,
};
use crate::words::{enumerate_fixed_counts, occurrence_index_bits, Letter, VertexWord};

/// Exhaustion cap (in words) per language and alphabet size; larger spaces
/// fall back to seeded sampling.
const EXHAUSTIVE_WORD_CAP: u128 = 4_000_000;
const HEREDITARY_WORD_CAP: u128 = 150_000;
/// Sample size when a word space is too large to exhaust.
const SAMPLED_WORDS: u64 = 60_000;

#[derive(Clone, Debug)]
pub struct PropertyResult {
    pub name: String,
    pub pass: bool,
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl PropertyResult {
    fn pass(name: impl Into<String>, checked: u64) -> Self {
        PropertyResult {
            name: name.into(),
            pass: true,
            checked,
            counterexample: None,
        }
    }

    fn fail(name: impl Into<String>, checked: u64, witness: String) -> Self {
        PropertyResult {
            name: name.into(),
            pass: false,
            checked,
            counterexample: Some(witness),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub properties: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.properties.iter().all(|p| p.pass)
    }

    pub fn checked_total(&self) -> u64 {
        self.properties.iter().map(|p| p.checked).sum()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            let status = if p.pass { "pass" } else { "FAIL" };
            write!(f, "{status} {:<44} checks={}", p.name, p.checked)?;
            if let Some(w) = &p.counterexample {
                write!(f, " counterexample: {w}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "{}/{} properties passed, {} checks",
            self.properties.iter().filter(|p| p.pass).count(),
            self.properties.len(),
            self.checked_total()
        )
    }
}

/// The families exercised by the round-trip harness.
pub fn roundtrip_families() -> Vec<Family> {
    let mut fams = Vec::new();
    for l in 1..=3 {
        fams.push(Family::Interval(l));
        fams.push(Family::Track(l));
        fams.push(Family::Boxes(l));
        fams.push(Family::Trapezoid(l));
        fams.push(Family::Comparability(l));
    }
    fams.push(Family::Pi);
    fams.push(Family::PiStar);
    fams.push(Family::ArcContainment);
    fams.push(Family::CircleGon(1));
    fams.push(Family::CircleGon(2));
    fams.push(Family::IntervalEnumeration);
    fams
}

/// Round trip A: decode(encode(M)) must equal oracle(M) for random models.
pub fn roundtrip_model_word(family: Family, seed: u64, trials: u64) -> PropertyResult {
    let name = format!("roundtrip-A {}", family.name());
    let language = match family.language() {
        Ok(l) => l,
        Err(e) => return PropertyResult::fail(name, 0, e.to_string()),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let n = rng.gen_range(1..=8usize);
        let model = sample::model(&mut rng, family, n);
        let out = (|| {
            let oracle = model.oracle_graph()?;
            let word = model.encode()?;
            Ok::<_, crate::Error>((oracle, word))
        })();
        let (oracle, word) = match out {
            Ok(v) => v,
            Err(e) => {
                return PropertyResult::fail(name, t, format!("model error: {e}"));
            }
        };
        let decoded = decode_graph(&language, &word);
        if decoded != oracle {
            return PropertyResult::fail(
                name,
                t,
                format!("word {word} decodes to {decoded:?}, oracle {oracle:?}"),
            );
        }
    }
    PropertyResult::pass(name, trials)
}

/// Admissible per-letter multiplicities for a language: its count set plus
/// the canonical isolated count.
fn admissible_counts(language: &FiniteLanguage) -> Vec<usize> {
    let cs = language.count_set();
    let mut choices: Vec<usize> = cs.counts.into_iter().collect();
    choices.push(cs.iso_count);
    choices.sort_unstable();
    choices
}

/// Total number of words on alphabet `[m]` with multiplicities from
/// `choices`.
fn word_space_size(m: usize, choices: &[usize]) -> u128 {
    fn multinomial(counts: &[usize]) -> u128 {
        let mut total = 0usize;
        let mut acc: u128 = 1;
        for &c in counts {
            for i in 1..=c {
                total += 1;
                acc = acc.saturating_mul(total as u128) / i as u128;
            }
        }
        acc
    }
    fn go(m: usize, choices: &[usize], counts: &mut Vec<usize>) -> u128 {
        if counts.len() == m {
            return multinomial(counts);
        }
        let mut total = 0u128;
        for &c in choices {
            counts.push(c);
            total = total.saturating_add(go(m, choices, counts));
            counts.pop();
        }
        total
    }
    go(m, choices, &mut Vec::new())
}

/// Calls `f` on every word over exactly the alphabet `[m]` with per-letter
/// multiplicities from `choices`; aborts early returning the witness when
/// `f` fails.
fn for_each_word(
    m: usize,
    choices: &[usize],
    f: &mut impl FnMut(&VertexWord) -> bool,
) -> (u64, Option<VertexWord>) {
    let mut counts = vec![0usize; m];
    let mut seq: Vec<Letter> = Vec::new();
    let mut checked = 0u64;

    fn interleave(
        remaining: &mut [usize],
        seq: &mut Vec<Letter>,
        total: usize,
        checked: &mut u64,
        f: &mut impl FnMut(&VertexWord) -> bool,
    ) -> Option<VertexWord> {
        if seq.len() == total {
            let w = VertexWord::new(seq.clone()).unwrap();
            *checked += 1;
            if !f(&w) {
                return Some(w);
            }
            return None;
        }
        for t in 0..remaining.len() {
            if remaining[t] == 0 {
                continue;
            }
            remaining[t] -= 1;
            seq.push(t as Letter + 1);
            let bad = interleave(remaining, seq, total, checked, f);
            seq.pop();
            remaining[t] += 1;
            if bad.is_some() {
                return bad;
            }
        }
        None
    }

    fn assign(
        m: usize,
        at: usize,
        choices: &[usize],
        counts: &mut Vec<usize>,
        seq: &mut Vec<Letter>,
        checked: &mut u64,
        f: &mut impl FnMut(&VertexWord) -> bool,
    ) -> Option<VertexWord> {
        if at == m {
            let total: usize = counts.iter().sum();
            let mut remaining = counts.clone();
            return interleave(&mut remaining, seq, total, checked, f);
        }
        for &c in choices {
            counts[at] = c;
            let bad = assign(m, at + 1, choices, counts, seq, checked, f);
            if bad.is_some() {
                return bad;
            }
        }
        None
    }

    let witness = assign(m, 0, choices, &mut counts, &mut seq, &mut checked, f);
    (checked, witness)
}

/// Round trip B for one family and language: `oracle(decode_model(w))` must
/// equal `decode_graph(L, w)`.  Exhaustive per alphabet size while the space
/// fits the cap, seeded sampling beyond.
pub fn roundtrip_word_model(
    family: Family,
    language: &FiniteLanguage,
    seed: u64,
    max_letters: usize,
) -> PropertyResult {
    let name = format!("roundtrip-B {}", family.name());
    let choices = admissible_counts(language);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_b00c);
    let mut checked = 0u64;
    let check = |w: &VertexWord| -> std::result::Result<(), String> {
        let model = family
            .decode_model(w)
            .map_err(|e| format!("decode_model({w}): {e}"))?;
        let oracle = model
            .oracle_graph()
            .map_err(|e| format!("oracle({w}): {e}"))?;
        let direct = decode_graph(language, w);
        if oracle != direct {
            return Err(format!(
                "word {w}: oracle {oracle:?} vs language decode {direct:?}"
            ));
        }
        Ok(())
    };
    for m in 0..=max_letters {
        if word_space_size(m, &choices) <= EXHAUSTIVE_WORD_CAP {
            let mut err: Option<String> = None;
            let (c, witness) = for_each_word(m, &choices, &mut |w| match check(w) {
                Ok(()) => true,
                Err(e) => {
                    err = Some(e);
                    false
                }
            });
            checked += c;
            if let Some(w) = witness {
                return PropertyResult::fail(name, checked, err.unwrap_or(w.to_string()));
            }
        } else {
            for _ in 0..SAMPLED_WORDS {
                let w = sample::word_with_counts(&mut rng, m, &choices);
                checked += 1;
                if let Err(e) = check(&w) {
                    return PropertyResult::fail(name, checked, e);
                }
            }
        }
    }
    PropertyResult::pass(name, checked)
}

/// Hereditariness: decoding an erased word equals the induced subgraph, for
/// every subset of the alphabet.
pub fn hereditary_check(language: &FiniteLanguage, seed: u64) -> PropertyResult {
    let name = format!("hereditary {}", language.name());
    let choices = admissible_counts(language);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4e11_ed17);
    let mut checked = 0u64;
    let check = |w: &VertexWord| -> std::result::Result<(), String> {
        let g = decode_graph(language, w);
        let alphabet: Vec<Letter> = w.alphabet().into_iter().collect();
        for mask in 0u32..(1 << alphabet.len()) {
            let keep: BTreeSet<Letter> = alphabet
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect();
            let restricted = decode_graph(language, &w.restricted(&keep));
            let induced = g.induced(&keep).unwrap();
            if restricted != induced {
                return Err(format!(
                    "word {w}, subset {keep:?}: decode {restricted:?} vs induced {induced:?}"
                ));
            }
        }
        Ok(())
    };
    for m in 0..=5usize {
        if word_space_size(m, &choices) <= HEREDITARY_WORD_CAP {
            let mut err: Option<String> = None;
            let (c, witness) = for_each_word(m, &choices, &mut |w| match check(w) {
                Ok(()) => true,
                Err(e) => {
                    err = Some(e);
                    false
                }
            });
            checked += c;
            if let Some(w) = witness {
                return PropertyResult::fail(name, checked, err.unwrap_or(w.to_string()));
            }
        } else {
            let samples = if m == 5 { 5_000 } else { SAMPLED_WORDS / 6 };
            for _ in 0..samples {
                let w = sample::word_with_counts(&mut rng, m, &choices);
                checked += 1;
                if let Err(e) = check(&w) {
                    return PropertyResult::fail(name, checked, e);
                }
            }
        }
    }
    PropertyResult::pass(name, checked)
}

/// Complement duality: on 2d-uniform words, the bounded-interval-dimension
/// decode is the complement of the d-trapezoid decode.
pub fn complement_duality_check(d: usize, seed: u64) -> PropertyResult {
    let name = format!("complement-duality d={d}");
    let idim = match interval_dim_language(d) {
        Ok(l) => l,
        Err(e) => return PropertyResult::fail(name, 0, e.to_string()),
    };
    let trap = d_trapezoid_language(d).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xd0a1);
    let mut checked = 0u64;
    let uniform = vec![2 * d];
    let m = 4;
    let exhaustive = word_space_size(3, &uniform) <= EXHAUSTIVE_WORD_CAP;
    let run = |w: &VertexWord| -> std::result::Result<(), String> {
        let a = decode_graph(&idim, w);
        let b = decode_graph(&trap, w);
        if a != b.complement() {
            return Err(format!("word {w}"));
        }
        Ok(())
    };
    if exhaustive {
        let mut err = None;
        let (c, witness) = for_each_word(3, &uniform, &mut |w| match run(w) {
            Ok(()) => true,
            Err(e) => {
                err = Some(e);
                false
            }
        });
        checked += c;
        if witness.is_some() {
            return PropertyResult::fail(name, checked, err.unwrap());
        }
    }
    for _ in 0..2000 {
        let w = sample::word_with_counts(&mut rng, m, &uniform);
        checked += 1;
        if let Err(e) = run(&w) {
            return PropertyResult::fail(name, checked, e);
        }
    }
    PropertyResult::pass(name, checked)
}

fn letters_pipeline_check(seed: u64, trials: u64) -> PropertyResult {
    let name = "letters/thin/boxes pipeline".to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1e77e2);
    for t in 0..trials {
        let k = rng.gen_range(1..=3usize);
        let n = rng.gen_range(1..=8usize);
        let decoder: BTreeSet<(u8, u8)> = (1..=k as u8)
            .flat_map(|a| (1..=k as u8).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let word: Vec<u8> = (0..n).map(|_| rng.gen_range(1..=k as u8)).collect();
        let spec = crate::letters::LetterSpec::new(k, decoder, word).unwrap();
        let g = crate::letters::decode_letter_graph(&spec);
        let rep = crate::letters::letter_to_thin(&spec);
        match crate::letters::is_thin_representation(&g, &rep) {
            Ok(true) => {}
            Ok(false) => {
                return PropertyResult::fail(name, t, format!("not thin: {spec:?}"));
            }
            Err(e) => return PropertyResult::fail(name, t, e.to_string()),
        }
        let boxes = match crate::letters::thin_to_boxes(&g, &rep) {
            Ok(b) => b,
            Err(e) => return PropertyResult::fail(name, t, e.to_string()),
        };
        match boxes.oracle_graph() {
            Ok(h) if h == g => {}
            Ok(h) => {
                return PropertyResult::fail(
                    name,
                    t,
                    format!("box oracle {h:?} differs from {g:?} for {spec:?}"),
                );
            }
            Err(e) => return PropertyResult::fail(name, t, e.to_string()),
        }
    }
    PropertyResult::pass(name, trials)
}

fn language_identity_check() -> PropertyResult {
    let name = "language identities".to_string();
    let mut checked = 0u64;
    let mut expect = |ok: bool, what: &str| -> Option<String> {
        checked += 1;
        if ok {
            None
        } else {
            Some(what.to_string())
        }
    };
    let interval = base_two_uniform(Base::Interval);
    let checks: Vec<Option<String>> = vec![
        expect(
            languages::l_interval_language(1).unwrap() == interval,
            "l-interval:1 = interval",
        ),
        expect(
            languages::l_track_language(1).unwrap() == interval,
            "l-track:1 = interval",
        ),
        expect(
            languages::box_language(1).unwrap() == interval,
            "box:1 = interval",
        ),
        expect(
            d_trapezoid_language(1).unwrap() == interval,
            "d-trap:1 = interval",
        ),
        expect(
            interval_dim_language(1).unwrap() == base_two_uniform(Base::CoInterval),
            "idim:1 = co-interval",
        ),
        expect(
            d_trapezoid_language(2).unwrap() == languages::trapezoid_language(),
            "d-trap:2 = trap",
        ),
        expect(
            languages::gon_circle_language(2).unwrap() == base_two_uniform(Base::Circle),
            "gon-circle:2 = circle",
        ),
        expect(
            languages::interval_enumerable_language().len() == 6,
            "|int-en| = 6",
        ),
        expect(
            comparability_language(3).unwrap().len() == 10,
            "|cmp:3| = 10",
        ),
    ];
    if let Some(c) = checks.into_iter().flatten().next() {
        return PropertyResult::fail(name, checked, c);
    }
    // idim:d and d-trap:d partition the 2d-uniform words
    for d in 1..=3usize {
        let idim = interval_dim_language(d).unwrap();
        let trap = d_trapezoid_language(d).unwrap();
        for w in enumerate_fixed_counts(2 * d, 2 * d).unwrap() {
            checked += 1;
            if idim.contains(&w) == trap.contains(&w) {
                return PropertyResult::fail(
                    name,
                    checked,
                    format!("word {w} breaks the idim/d-trap partition at d={d}"),
                );
            }
        }
    }
    PropertyResult::pass(name, checked)
}

fn dyck_agreement_check() -> PropertyResult {
    let name = "dyck characterizations agree".to_string();
    let mut checked = 0u64;
    for d in 1..=6usize {
        let generated = dyck_words(d).unwrap();
        for w in enumerate_fixed_counts(d, d).unwrap() {
            checked += 1;
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
                occurrence_index_bits(&w, 0, i).unwrap() < occurrence_index_bits(&w, 1, i).unwrap()
            });
            if generated.contains(&w) != dominant || dominant != paired {
                return PropertyResult::fail(name, checked, format!("word {w} at d={d}"));
            }
        }
    }
    PropertyResult::pass(name, checked)
}

fn census_cross_check() -> PropertyResult {
    let name = "census cross-checks (n ≤ 3)".to_string();
    let opts = CensusOptions::default();
    let interval = base_two_uniform(Base::Interval);
    let mut checked = 0u64;
    for n in 1..=3usize {
        checked += 1;
        let by_words = match speed_set(&interval, n, &opts) {
            Ok((s, _)) => s.len() as u64,
            Err(e) => return PropertyResult::fail(name, checked, e.to_string()),
        };
        let by_sweep = brute_force_speed(n, Recognizer::Interval).unwrap();
        if by_words != by_sweep {
            return PropertyResult::fail(
                name,
                checked,
                format!("n={n}: census {by_words} vs sweep {by_sweep}"),
            );
        }
    }
    PropertyResult::pass(name, checked)
}

/// Runs the full property suite.  `trials` scales the randomized parts;
/// zero trials yields a vacuous pass there while the exhaustive checks still
/// run.
pub fn verify_suite(seed: u64, trials: u64) -> VerifyReport {
    let mut report = VerifyReport::default();
    report.properties.push(language_identity_check());
    report.properties.push(dyck_agreement_check());
    for family in roundtrip_families() {
        report
            .properties
            .push(roundtrip_model_word(family, seed, trials));
    }
    for family in roundtrip_families() {
        let result = match family.language() {
            Ok(lang) => roundtrip_word_model(family, &lang, seed, 4),
            Err(e) => PropertyResult::fail(format!("roundtrip-B {}", family.name()), 0, e.to_string()),
        };
        report.properties.push(result);
    }
    for lang in languages::implemented_languages() {
        report.properties.push(hereditary_check(&lang, seed));
    }
    for d in 1..=3 {
        report.properties.push(complement_duality_check(d, seed));
    }
    report.properties.push(letters_pipeline_check(seed, trials));
    report.properties.push(census_cross_check());
    report
}
