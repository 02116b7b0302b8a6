//! Exhaustive speed measurement: the number of distinct labeled graphs on
//! `[n]` decodable from a language, plus independent recognizers for
//! cross-validation.
//!
//! A letter whose multiplicity falls outside the language's count set is
//! isolated no matter where it sits, so the census enumerates words as: an
//! active subset of `[n]` with per-letter multiplicities drawn from the
//! count set, interleaved in every order, with the remaining letters
//! appended canonically at the end.  Projections are maintained
//! incrementally along the word prefix tree.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::graphs::LabeledGraph;
use crate::languages::FiniteLanguage;
use crate::words::Letter;
use crate::{Error, Result};

/// Default word budget for one census run.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Vertex guard for the full brute-force graph sweep.
pub const BRUTE_FORCE_N_GUARD: usize = 5;
/// Vertex guard for unlabeled (isomorphism-class) counting.
pub const UNLABELED_N_GUARD: usize = 6;

#[derive(Clone, Debug)]
pub struct SpeedReport {
    pub language: String,
    pub n: usize,
    pub labeled: u64,
    pub unlabeled: Option<u64>,
    pub words_examined: u64,
    pub millis: u128,
    /// Count of words of length at most `(ml(L)+1)·n` over `n` letters
    /// (saturating).  A longer word always repeats some letter often enough
    /// to isolate it, so this many words describe every decodable graph and
    /// the count bounds the labeled speed.
    pub info_bound: u128,
}

impl SpeedReport {
    /// The machine-readable line format.
    pub fn machine_line(&self) -> String {
        match self.unlabeled {
            Some(u) => format!(
                "{} {} {} {} {} {}",
                self.language, self.n, self.labeled, u, self.words_examined, self.millis
            ),
            None => format!(
                "{} {} {} {} {}",
                self.language, self.n, self.labeled, self.words_examined, self.millis
            ),
        }
    }
}

impl fmt::Display for SpeedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "language        {}", self.language)?;
        writeln!(f, "n               {}", self.n)?;
        writeln!(f, "labeled         {}", self.labeled)?;
        if let Some(u) = self.unlabeled {
            writeln!(f, "unlabeled       {u}")?;
        }
        writeln!(f, "words_examined  {}", self.words_examined)?;
        writeln!(f, "info_bound      {}", self.info_bound)?;
        write!(f, "millis          {}", self.millis)
    }
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub budget: u64,
    pub unlabeled: bool,
    pub threads: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            budget: DEFAULT_BUDGET,
            unlabeled: false,
            threads: 1,
        }
    }
}

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

/// Exact number of words the census will decode for this language and `n`.
pub fn estimate_words(language: &FiniteLanguage, n: usize) -> u128 {
    let counts: Vec<usize> = language.count_set().counts.into_iter().collect();
    let mut total: u128 = 0;
    // subsets by active size; each assignment of counts to the s active
    // letters contributes one multinomial
    for mask in 0u32..(1 << n) {
        let active: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let mut assignment = vec![0usize; active.len()];
        total = total.saturating_add(sum_assignments(&counts, &mut assignment, 0));
    }
    total
}

fn sum_assignments(counts: &[usize], assignment: &mut [usize], at: usize) -> u128 {
    if at == assignment.len() {
        return multinomial(assignment);
    }
    let mut total: u128 = 0;
    for &c in counts {
        assignment[at] = c;
        total = total.saturating_add(sum_assignments(counts, assignment, at + 1));
    }
    total
}

/// Number of words of length at most `(ml(L)+1)·n` over an `n`-letter
/// alphabet (saturating).
pub fn info_bound(language: &FiniteLanguage, n: usize) -> u128 {
    let max_len = (language.max_word_length() + 1) * n;
    let mut total: u128 = 1; // the empty word
    let mut power: u128 = 1;
    for _ in 0..max_len {
        power = power.saturating_mul(n as u128);
        total = total.saturating_add(power);
        if power == u128::MAX {
            return u128::MAX;
        }
    }
    total
}

/// Bit index of the pair `{u, v}` (1-based letters) among the `C(n,2)`
/// lexicographically ordered pairs.
fn pair_bit(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    // pairs (1,2),(1,3),...,(1,n),(2,3),...
    (u - 1) * n - (u - 1) * u / 2 + (v - u - 1)
}

struct Walker<'a> {
    language: &'a FiniteLanguage,
    active: Vec<usize>,
    remaining: Vec<usize>,
    // packed projection per active pair, flat-indexed i * m + j for i < j
    proj: Vec<(u8, u32)>,
    bits: Vec<u64>,
    total: usize,
    depth: usize,
    seen: HashSet<u64>,
    words: u64,
}

impl<'a> Walker<'a> {
    fn new(language: &'a FiniteLanguage, n: usize, active: Vec<usize>, counts: Vec<usize>) -> Self {
        let m = active.len();
        let mut bits = vec![0u64; m * m];
        for i in 0..m {
            for j in i + 1..m {
                bits[i * m + j] = 1u64 << pair_bit(n, active[i], active[j]);
            }
        }
        let total = counts.iter().sum();
        Walker {
            language,
            active,
            remaining: counts,
            proj: vec![(0, 0); m * m],
            bits,
            total,
            depth: 0,
            seen: HashSet::new(),
            words: 0,
        }
    }

    fn run(&mut self) {
        if self.depth == self.total {
            let m = self.active.len();
            let mut mask = 0u64;
            for i in 0..m {
                for j in i + 1..m {
                    let (len, bits) = self.proj[i * m + j];
                    if self.language.contains_packed(len as usize, bits) {
                        mask |= self.bits[i * m + j];
                    }
                }
            }
            self.seen.insert(mask);
            self.words += 1;
            return;
        }
        let m = self.active.len();
        for t in 0..m {
            if self.remaining[t] == 0 {
                continue;
            }
            self.remaining[t] -= 1;
            // letter t contributes 0 to pairs where it is the smaller index,
            // 1 where it is the larger
            for o in 0..m {
                if o == t {
                    continue;
                }
                let (idx, bit) = if t < o {
                    (t * m + o, 0u32)
                } else {
                    (o * m + t, 1u32)
                };
                let (len, bits) = &mut self.proj[idx];
                *bits |= bit << *len;
                *len += 1;
            }
            self.depth += 1;
            self.run();
            self.depth -= 1;
            for o in 0..m {
                if o == t {
                    continue;
                }
                let idx = if t < o { t * m + o } else { o * m + t };
                let (len, bits) = &mut self.proj[idx];
                *len -= 1;
                *bits &= !(1u32 << *len);
            }
            self.remaining[t] += 1;
        }
    }
}

fn census_tasks(counts: &[usize], n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut tasks = Vec::new();
    for mask in 0u32..(1 << n) {
        let active: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let mut assignment = vec![0usize; active.len()];
        fill_assignments(counts, &mut assignment, 0, &active, &mut tasks);
    }
    tasks
}

fn fill_assignments(
    counts: &[usize],
    assignment: &mut Vec<usize>,
    at: usize,
    active: &[usize],
    out: &mut Vec<(Vec<usize>, Vec<usize>)>,
) {
    if at == assignment.len() {
        out.push((active.to_vec(), assignment.clone()));
        return;
    }
    for &c in counts {
        assignment[at] = c;
        fill_assignments(counts, assignment, at + 1, active, out);
    }
}

/// The set of labeled edge masks reachable on `[n]`, with the number of
/// words decoded.  Masks index pairs lexicographically via `pair_bit`.
pub fn speed_set(
    language: &FiniteLanguage,
    n: usize,
    options: &CensusOptions,
) -> Result<(BTreeSet<u64>, u64)> {
    if n == 0 || n > 11 {
        return Err(Error::InvalidArguments(
            "census supports 1 ≤ n ≤ 11".into(),
        ));
    }
    let estimate = estimate_words(language, n);
    if estimate > options.budget as u128 {
        return Err(Error::Capacity(format!(
            "census of {} at n={n} needs {estimate} words, budget {}",
            language.name(),
            options.budget
        )));
    }
    let counts: Vec<usize> = language.count_set().counts.into_iter().collect();
    let tasks = census_tasks(&counts, n);
    let run_task = |(active, assignment): &(Vec<usize>, Vec<usize>)| -> (HashSet<u64>, u64) {
        let mut walker = Walker::new(language, n, active.clone(), assignment.clone());
        walker.run();
        (walker.seen, walker.words)
    };
    let results: Vec<(HashSet<u64>, u64)> = if options.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::InvalidArguments(format!("thread pool: {e}")))?;
        pool.install(|| {
            use rayon::prelude::*;
            tasks.par_iter().map(run_task).collect()
        })
    } else {
        tasks.iter().map(run_task).collect()
    };
    let mut seen = BTreeSet::new();
    let mut words = 0u64;
    for (local, w) in results {
        seen.extend(local);
        words += w;
    }
    Ok((seen, words))
}

/// Reconstructs the labeled graph on `[n]` behind a census mask.
pub fn mask_to_graph(mask: u64, n: usize) -> LabeledGraph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if mask & (1 << pair_bit(n, u, v)) != 0 {
                edges.push((u as Letter, v as Letter));
            }
        }
    }
    LabeledGraph::new(1..=n as Letter, edges).unwrap()
}

fn unlabeled_count(masks: &BTreeSet<u64>, n: usize) -> Result<u64> {
    if n > UNLABELED_N_GUARD {
        return Err(Error::Capacity(format!(
            "unlabeled counting limited to n ≤ {UNLABELED_N_GUARD}"
        )));
    }
    // all permutations of [n] as bit remappings
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut idx: Vec<usize> = (1..=n).collect();
    loop {
        perms.push(idx.clone());
        if !next_permutation(&mut idx) {
            break;
        }
    }
    let bit_count = n * (n - 1) / 2;
    let tables: Vec<Vec<usize>> = perms
        .iter()
        .map(|perm| {
            let mut table = vec![0usize; bit_count];
            for u in 1..=n {
                for v in u + 1..=n {
                    let (a, b) = (perm[u - 1], perm[v - 1]);
                    table[pair_bit(n, u, v)] = pair_bit(n, a.min(b), a.max(b));
                }
            }
            table
        })
        .collect();
    let mut canon: HashSet<u64> = HashSet::new();
    for &mask in masks {
        let mut best = u64::MAX;
        for table in &tables {
            let mut out = 0u64;
            let mut m = mask;
            while m != 0 {
                let b = m.trailing_zeros() as usize;
                out |= 1 << table[b];
                m &= m - 1;
            }
            best = best.min(out);
        }
        canon.insert(best);
    }
    Ok(canon.len() as u64)
}

fn next_permutation(arr: &mut [usize]) -> bool {
    let n = arr.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// Runs the census and assembles the report.
pub fn speed(language: &FiniteLanguage, n: usize, options: &CensusOptions) -> Result<SpeedReport> {
    let start = Instant::now();
    let (masks, words) = speed_set(language, n, options)?;
    let unlabeled = if options.unlabeled {
        Some(unlabeled_count(&masks, n)?)
    } else {
        None
    };
    Ok(SpeedReport {
        language: language.name().to_string(),
        n,
        labeled: masks.len() as u64,
        unlabeled,
        words_examined: words,
        millis: start.elapsed().as_millis(),
        info_bound: info_bound(language, n),
    })
}

/// Independent class recognizers for cross-validating the census.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recognizer {
    Interval,
}

impl FromStr for Recognizer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "interval" => Ok(Recognizer::Interval),
            _ => Err(Error::InvalidArguments(format!(
                "unknown recognizer {s:?}"
            ))),
        }
    }
}

impl Recognizer {
    pub fn accepts(&self, g: &LabeledGraph) -> Result<bool> {
        match self {
            Recognizer::Interval => recognize_interval(g),
        }
    }
}

/// Counts the labeled graphs on `[n]` accepted by the recognizer, sweeping
/// all `2^C(n,2)` graphs.
pub fn brute_force_speed(n: usize, recognizer: Recognizer) -> Result<u64> {
    if n == 0 || n > BRUTE_FORCE_N_GUARD {
        return Err(Error::Capacity(format!(
            "full graph sweep limited to n ≤ {BRUTE_FORCE_N_GUARD}"
        )));
    }
    let bits = n * (n - 1) / 2;
    let mut count = 0u64;
    for mask in 0u64..(1 << bits) {
        if recognizer.accepts(&mask_to_graph(mask, n))? {
            count += 1;
        }
    }
    Ok(count)
}

/// Interval recognition by the maximal-clique consecutive-arrangement
/// characterization: some ordering of the maximal cliques puts every
/// vertex's cliques in a contiguous run.
pub fn recognize_interval(g: &LabeledGraph) -> Result<bool> {
    let vs: Vec<Letter> = g.vertices().iter().copied().collect();
    let n = vs.len();
    if n > 8 {
        return Err(Error::Capacity(
            "interval recognition limited to 8 vertices".into(),
        ));
    }
    if n == 0 {
        return Ok(true);
    }
    let adj: Vec<u32> = vs
        .iter()
        .map(|&u| {
            vs.iter()
                .enumerate()
                .filter(|(_, &v)| g.has_edge(u, v))
                .fold(0u32, |acc, (j, _)| acc | (1 << j))
        })
        .collect();
    let is_clique = |m: u32| -> bool {
        (0..n).all(|i| m & (1 << i) == 0 || (adj[i] & m) == m & !(1 << i))
    };
    let mut cliques: Vec<u32> = Vec::new();
    for m in 1u32..(1 << n) {
        if is_clique(m) {
            let extendable = (0..n).any(|i| m & (1 << i) == 0 && (adj[i] & m) == m);
            if !extendable {
                cliques.push(m);
            }
        }
    }

    fn place(cliques: &[u32], used: u32, started: u32, finished: u32) -> bool {
        if used.count_ones() as usize == cliques.len() {
            return true;
        }
        for (i, &c) in cliques.iter().enumerate() {
            if used & (1 << i) != 0 || c & finished != 0 {
                continue;
            }
            if place(
                cliques,
                used | (1 << i),
                started | c,
                finished | (started & !c),
            ) {
                return true;
            }
        }
        false
    }

    Ok(place(&cliques, 0, 0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, cycle_graph, path_graph};
    use crate::languages::{
        base_two_uniform, comparability_language, from_spec, trapezoid_language, Base,
    };

    #[test]
    fn interval_recognizer_examples() {
        assert!(recognize_interval(&path_graph(4)).unwrap());
        assert!(!recognize_interval(&cycle_graph(4)).unwrap());
        assert!(recognize_interval(&complete_graph(6)).unwrap());
        assert!(!recognize_interval(&cycle_graph(5)).unwrap());
        assert!(recognize_interval(&complete_graph(9)).is_err());
    }

    #[test]
    fn small_interval_speeds() {
        let interval = base_two_uniform(Base::Interval);
        let opts = CensusOptions::default();
        assert_eq!(speed(&interval, 1, &opts).unwrap().labeled, 1);
        assert_eq!(speed(&interval, 2, &opts).unwrap().labeled, 2);
        assert_eq!(speed(&interval, 3, &opts).unwrap().labeled, 8);
    }

    #[test]
    fn two_vertex_sweep() {
        // any hereditary recognizer accepting K2 and its complement counts 2
        assert_eq!(brute_force_speed(2, Recognizer::Interval).unwrap(), 2);
        assert!(brute_force_speed(6, Recognizer::Interval).is_err());
    }

    #[test]
    fn census_matches_brute_force_at_four() {
        let interval = base_two_uniform(Base::Interval);
        let opts = CensusOptions::default();
        let by_words = speed(&interval, 4, &opts).unwrap().labeled;
        let by_sweep = brute_force_speed(4, Recognizer::Interval).unwrap();
        assert_eq!(by_words, by_sweep);
    }

    #[test]
    fn complement_language_same_speed() {
        let opts = CensusOptions::default();
        for n in 1..=4 {
            let a = speed(&base_two_uniform(Base::Interval), n, &opts).unwrap();
            let b = speed(&base_two_uniform(Base::CoInterval), n, &opts).unwrap();
            assert_eq!(a.labeled, b.labeled, "n={n}");
        }
    }

    #[test]
    fn cmp2_equals_permutation_as_sets() {
        let opts = CensusOptions::default();
        for n in 1..=4 {
            let a = speed_set(&comparability_language(2).unwrap(), n, &opts).unwrap();
            let b = speed_set(&base_two_uniform(Base::Permutation), n, &opts).unwrap();
            assert_eq!(a.0, b.0, "n={n}");
        }
    }

    #[test]
    fn permutation_inside_trapezoid() {
        let opts = CensusOptions::default();
        let perm = speed_set(&base_two_uniform(Base::Permutation), 3, &opts)
            .unwrap()
            .0;
        let trap = speed_set(&trapezoid_language(), 3, &opts).unwrap().0;
        assert!(perm.is_subset(&trap));
    }

    #[test]
    fn budget_is_enforced() {
        let lang = from_spec("l-interval:2").unwrap();
        let opts = CensusOptions {
            budget: 100,
            ..CensusOptions::default()
        };
        assert!(matches!(speed(&lang, 4, &opts), Err(Error::Capacity(_))));
    }

    #[test]
    fn word_estimates_are_exact() {
        // interval language at n=3: every subset of 3 letters, each letter
        // twice: sum over s of C(3,s) * (2s)!/2^s = 1 + 3·1 + 3·6 + 90 = 112
        let interval = base_two_uniform(Base::Interval);
        assert_eq!(estimate_words(&interval, 3), 112);
        let opts = CensusOptions::default();
        let (_, words) = speed_set(&interval, 3, &opts).unwrap();
        assert_eq!(words, 112);
    }

    #[test]
    fn unlabeled_counts() {
        let interval = base_two_uniform(Base::Interval);
        let opts = CensusOptions {
            unlabeled: true,
            ..CensusOptions::default()
        };
        // 4 unlabeled graphs on 3 vertices, all interval
        let report = speed(&interval, 3, &opts).unwrap();
        assert_eq!(report.unlabeled, Some(4));
    }

    #[test]
    fn info_bound_present() {
        let interval = base_two_uniform(Base::Interval);
        let r = speed(&interval, 3, &CensusOptions::default()).unwrap();
        // words of length ≤ (4+1)·3 = 15 over 3 letters
        let expect = (0..=15u32).map(|j| 3u128.pow(j)).sum::<u128>();
        assert_eq!(r.info_bound, expect);
        assert!((r.labeled as u128) < r.info_bound);
    }

    #[test]
    fn threads_do_not_change_counts() {
        let lang = from_spec("pi").unwrap();
        let seq = speed_set(&lang, 3, &CensusOptions::default()).unwrap();
        let par = speed_set(
            &lang,
            3,
            &CensusOptions {
                threads: 2,
                ..CensusOptions::default()
            },
        )
        .unwrap();
        assert_eq!(seq, par);
    }
}
