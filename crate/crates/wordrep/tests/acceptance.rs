//! The acceptance suite: one test per criterion, each printing a pass/fail
//! line.  Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines; any failure fails the corresponding test.

use std::collections::BTreeSet;

use wordrep::census::{brute_force_speed, speed, speed_set, CensusOptions, Recognizer};
use wordrep::geometry::{Family, IntervalSystem};
use wordrep::graphs::{decode_graph, is_isomorphic_small, path_graph};
use wordrep::languages::{
    arc_containment_language, base_two_uniform, box_language, circular_interval_language,
    comparability_language, d_trapezoid_language, dyck_words, from_spec,
    implemented_languages, interval_dim_language, interval_enumerable_language,
    l_interval_language, l_track_language, Base,
};
use wordrep::letters::{
    decode_letter_graph, enumerate_letter_graphs, is_thin_representation, letter_to_thin,
    thin_to_boxes, LetterSpec,
};
use wordrep::verify::{
    hereditary_check, roundtrip_families, roundtrip_model_word, roundtrip_word_model,
};
use wordrep::words::{deletion_op, enumerate_fixed_counts, BinaryWord, VertexWord};
use wordrep::Letter;

fn report(criterion: usize, what: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("ACCEPTANCE {criterion} PASS — {what}");
    } else {
        println!("ACCEPTANCE {criterion} FAIL — {what}");
        for f in failures {
            println!("  {f}");
        }
    }
    assert!(failures.is_empty(), "criterion {criterion} failed");
}

fn bw(s: &str) -> BinaryWord {
    BinaryWord::parse(s).unwrap()
}

fn vw(s: &str) -> VertexWord {
    VertexWord::parse(s).unwrap()
}

#[test]
fn criterion_01_deletion_operator_goldens() {
    let mut failures = Vec::new();
    let w = bw("001001110101");
    for (k, m, d, expect) in [
        (2usize, 1usize, 1usize, "1001"),
        (3, 2, 1, "1100"),
        (2, 1, 2, "10011100"),
    ] {
        let got = deletion_op(&w, k, m, d).unwrap();
        if got != bw(expect) {
            failures.push(format!("δ_{{{k},{m}}}^{{→{d}}} gave {got}, wanted {expect}"));
        }
    }
    report(1, "deletion-operator goldens on 001001110101", &failures);
}

#[test]
fn criterion_02_c4_via_two_intervals() {
    let mut failures = Vec::new();
    let word = vw("abacbbbdcaddadcc");
    let lang = l_interval_language(2).unwrap();
    let g = decode_graph(&lang, &word);
    let c4_edges = vec![(1, 2), (1, 4), (2, 3), (3, 4)];
    if g.edge_list() != c4_edges {
        failures.push(format!("decoded edges {:?}", g.edge_list()));
    }
    let sys = IntervalSystem::decode(&word, 2).unwrap();
    let expect: Vec<(Letter, Vec<(i64, i64)>)> = vec![
        (1, vec![(1, 3), (10, 13)]),
        (2, vec![(2, 5), (6, 7)]),
        (3, vec![(4, 9), (15, 16)]),
        (4, vec![(8, 11), (12, 14)]),
    ];
    for (v, ivs) in expect {
        if sys.assignment[&v] != ivs {
            failures.push(format!("vertex {v}: model {:?}, paper {ivs:?}", sys.assignment[&v]));
        }
    }
    match sys.oracle_graph() {
        Ok(h) if h == g => {}
        other => failures.push(format!("interval oracle disagrees: {other:?}")),
    }
    match wordrep::census::recognize_interval(&g) {
        Ok(false) => {}
        other => failures.push(format!("recognize_interval(C4) = {other:?}, wanted false")),
    }
    report(2, "C4 via 2-interval word, model table, recognizer", &failures);
}

#[test]
fn criterion_03_p4_via_arc_containment() {
    let mut failures = Vec::new();
    let lang = arc_containment_language();
    let g = decode_graph(&lang, &vw("abacddbbca"));
    if g.edge_list() != vec![(1, 2), (2, 4), (3, 4)] {
        failures.push(format!("decoded edges {:?}", g.edge_list()));
    }
    for (word, member) in [
        ("101001", true),
        ("00110", false),
        ("01100", true),
        ("0110", true),
    ] {
        if lang.contains(&bw(word)) != member {
            failures.push(format!("membership of {word} should be {member}"));
        }
    }
    report(3, "P4 via arc containment and quoted projections", &failures);
}

#[test]
fn criterion_04_c4_via_interval_enumeration() {
    let mut failures = Vec::new();
    let lang = interval_enumerable_language();
    let word = vw("aabdacccdbbd");
    let g = decode_graph(&lang, &word);
    if g.edge_list() != vec![(1, 2), (1, 4), (2, 3), (3, 4)] {
        failures.push(format!("decoded edges {:?}", g.edge_list()));
    }
    match Family::IntervalEnumeration.decode_model(&word) {
        Ok(model) => match model.oracle_graph() {
            Ok(h) if h == g => {}
            other => failures.push(format!("scheme oracle {other:?}")),
        },
        Err(e) => failures.push(format!("scheme extraction failed: {e}")),
    }
    report(4, "C4 via interval enumeration and scheme extraction", &failures);
}

#[test]
fn criterion_05_language_identities() {
    let mut failures = Vec::new();
    let interval = base_two_uniform(Base::Interval);
    let co_interval = base_two_uniform(Base::CoInterval);
    if l_interval_language(1).unwrap() != interval {
        failures.push("l-interval:1 ≠ ⟨0101,0110⟩".into());
    }
    if l_track_language(1).unwrap() != interval {
        failures.push("l-track:1 ≠ ⟨0101,0110⟩".into());
    }
    if box_language(1).unwrap() != interval {
        failures.push("box:1 ≠ ⟨0101,0110⟩".into());
    }
    if d_trapezoid_language(1).unwrap() != interval {
        failures.push("d-trap:1 ≠ ⟨0101,0110⟩".into());
    }
    if interval_dim_language(1).unwrap() != co_interval {
        failures.push("idim:1 ≠ ⟨0011⟩".into());
    }
    for d in 1..=3usize {
        let idim = interval_dim_language(d).unwrap();
        let trap = d_trapezoid_language(d).unwrap();
        for w in enumerate_fixed_counts(2 * d, 2 * d).unwrap() {
            if idim.contains(&w) == trap.contains(&w) {
                failures.push(format!("{w} breaks the idim/d-trap partition at d={d}"));
            }
        }
    }
    let d3: BTreeSet<BinaryWord> = dyck_words(3).unwrap();
    let listed: BTreeSet<BinaryWord> = ["000111", "001011", "001101", "010011", "010101"]
        .iter()
        .map(|s| bw(s))
        .collect();
    if d3 != listed {
        failures.push(format!("cmp:3 generators {d3:?}"));
    }
    if interval_enumerable_language().len() != 6 {
        failures.push("|int-en| ≠ 6".into());
    }
    let cint = circular_interval_language(1).unwrap();
    if cint.contains(&bw("11001")) {
        failures.push("11001 ∈ c-int:1".into());
    }
    for w in enumerate_fixed_counts(3, 3).unwrap() {
        if !cint.contains(&w) {
            failures.push(format!("3-uniform word {w} missing from c-int:1"));
        }
    }
    report(5, "language identities and partitions", &failures);
}

#[test]
fn criterion_06_roundtrip_suite() {
    let mut failures = Vec::new();
    for family in roundtrip_families() {
        let a = roundtrip_model_word(family, 42, 1000);
        if !a.pass {
            failures.push(format!("{}: {:?}", a.name, a.counterexample));
        }
        let language = family.language().unwrap();
        let b = roundtrip_word_model(family, &language, 42, 4);
        if !b.pass {
            failures.push(format!("{}: {:?}", b.name, b.counterexample));
        }
    }
    report(6, "round trips A (1000 models/family) and B (word spaces)", &failures);
}

#[test]
fn criterion_07_census_cross_validation() {
    let mut failures = Vec::new();
    let opts = CensusOptions::default();
    let interval = base_two_uniform(Base::Interval);
    let expected_small = [1u64, 2, 8];
    for n in 1..=5usize {
        let by_words = speed(&interval, n, &opts).unwrap().labeled;
        let by_sweep = brute_force_speed(n, Recognizer::Interval).unwrap();
        if by_words != by_sweep {
            failures.push(format!("n={n}: census {by_words} ≠ sweep {by_sweep}"));
        }
        if n <= 3 && by_words != expected_small[n - 1] {
            failures.push(format!("n={n}: census {by_words} ≠ {}", expected_small[n - 1]));
        }
    }
    let co = base_two_uniform(Base::CoInterval);
    for n in 1..=5usize {
        let a = speed(&interval, n, &opts).unwrap().labeled;
        let b = speed(&co, n, &opts).unwrap().labeled;
        if a != b {
            failures.push(format!("n={n}: interval {a} ≠ co-interval {b}"));
        }
    }
    let cmp2 = comparability_language(2).unwrap();
    let perm = base_two_uniform(Base::Permutation);
    for n in 1..=4usize {
        let (a, _) = speed_set(&cmp2, n, &opts).unwrap();
        let (b, _) = speed_set(&perm, n, &opts).unwrap();
        if a != b {
            failures.push(format!(
                "n={n}: cmp:2 and permutation graph sets differ ({} vs {})",
                a.len(),
                b.len()
            ));
        }
    }
    report(7, "census vs recognizer, complement speeds, cmp:2 = permutation", &failures);
}

#[test]
fn criterion_08_letter_thin_box_pipeline() {
    let mut failures = Vec::new();
    for n in 2..=7usize {
        match enumerate_letter_graphs(1, n) {
            Ok(graphs) if graphs.len() == 2 => {}
            Ok(graphs) => failures.push(format!("1-letter census at n={n}: {}", graphs.len())),
            Err(e) => failures.push(e.to_string()),
        }
    }
    // on a single vertex the complete and the null graph coincide
    if enumerate_letter_graphs(1, 1).unwrap().len() != 1 {
        failures.push("1-letter census at n=1 should have one graph".into());
    }
    let p4 = path_graph(4);
    for n in 1..=7usize {
        let two = enumerate_letter_graphs(2, n).unwrap();
        let bound = (1u64 << 4) * (1u64 << n);
        if two.len() as u64 > bound {
            failures.push(format!("2-letter census at n={n}: {} > {bound}", two.len()));
        }
        // the assignment construction realizes every complete split graph
        for clique_mask in 0u32..(1 << n) {
            let word: Vec<u8> = (0..n)
                .map(|i| if clique_mask & (1 << i) != 0 { 1 } else { 2 })
                .collect();
            let spec = LetterSpec::new(
                2,
                [(1, 1), (1, 2), (2, 1)].into_iter().collect(),
                word,
            )
            .unwrap();
            let split = decode_letter_graph(&spec);
            if !two.contains(&split) {
                failures.push(format!("complete split graph missing at n={n}"));
                break;
            }
        }
        if n == 4 {
            if !two
                .iter()
                .any(|g| is_isomorphic_small(g, &p4).unwrap())
            {
                failures.push("P4 missing from the 2-letter census at n=4".into());
            }
            let one = enumerate_letter_graphs(1, 4).unwrap();
            if one.iter().any(|g| is_isomorphic_small(g, &p4).unwrap()) {
                failures.push("P4 found in the 1-letter census".into());
            }
        }
    }
    // 500 random specs through the thin and box pipeline
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for t in 0..500 {
        let k = rng.gen_range(1..=3usize);
        let n = rng.gen_range(1..=8usize);
        let decoder: BTreeSet<(u8, u8)> = (1..=k as u8)
            .flat_map(|a| (1..=k as u8).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let word: Vec<u8> = (0..n).map(|_| rng.gen_range(1..=k as u8)).collect();
        let spec = LetterSpec::new(k, decoder, word).unwrap();
        let g = decode_letter_graph(&spec);
        let rep = letter_to_thin(&spec);
        if !is_thin_representation(&g, &rep).unwrap() {
            failures.push(format!("trial {t}: representation not thin"));
            break;
        }
        let boxes = thin_to_boxes(&g, &rep).unwrap();
        if boxes.oracle_graph().unwrap() != g {
            failures.push(format!("trial {t}: box oracle differs"));
            break;
        }
    }
    report(8, "letter census bounds and thin/box pipeline", &failures);
}

#[test]
fn criterion_09_hereditariness() {
    let mut failures = Vec::new();
    for lang in implemented_languages() {
        let r = hereditary_check(&lang, 42);
        if !r.pass {
            failures.push(format!("{}: {:?}", r.name, r.counterexample));
        }
    }
    report(9, "induced subwords decode to induced subgraphs", &failures);
}

#[test]
fn criterion_10_factorial_information_bound() {
    let mut failures = Vec::new();
    let opts = CensusOptions {
        budget: 500_000_000,
        threads: 2,
        ..CensusOptions::default()
    };
    println!("language        n  labeled      info_bound");
    for lang in implemented_languages() {
        for n in 1..=4usize {
            match speed(&lang, n, &opts) {
                Ok(r) => {
                    println!("{:<15} {n}  {:<12} {}", r.language, r.labeled, r.info_bound);
                    if (r.labeled as u128) > r.info_bound {
                        failures.push(format!(
                            "{} at n={n}: labeled {} exceeds bound {}",
                            r.language, r.labeled, r.info_bound
                        ));
                    }
                    let max_graphs = 1u128 << (n * (n - 1) / 2);
                    if (r.labeled as u128) > max_graphs {
                        failures.push(format!(
                            "{} at n={n}: labeled {} exceeds 2^C(n,2)",
                            r.language, r.labeled
                        ));
                    }
                }
                Err(e) => failures.push(format!("{} at n={n}: {e}", lang.name())),
            }
        }
    }
    // monotonicity spot checks from the census invariants: permutation ⊆
    // trapezoid and 1-interval ⊆ 2-interval as labeled-graph sets
    let small = CensusOptions::default();
    for n in 1..=4usize {
        let perm = speed_set(&base_two_uniform(Base::Permutation), n, &small)
            .unwrap()
            .0;
        let trap = speed_set(&from_spec("trap").unwrap(), n, &opts).unwrap().0;
        if !perm.is_subset(&trap) {
            failures.push(format!("permutation ⊄ trapezoid at n={n}"));
        }
        let one = speed_set(&base_two_uniform(Base::Interval), n, &small)
            .unwrap()
            .0;
        let two = speed_set(&from_spec("l-interval:2").unwrap(), n, &opts)
            .unwrap()
            .0;
        if !one.is_subset(&two) {
            failures.push(format!("1-interval ⊄ 2-interval at n={n}"));
        }
    }
    report(10, "labeled speeds stay under the information bound", &failures);
}

#[test]
fn deduplication_is_exact() {
    // two words with equal edge sets count once: abab and baba both decode
    // to K2 under the interval language
    let interval = base_two_uniform(Base::Interval);
    let (set, words) = speed_set(&interval, 2, &CensusOptions::default()).unwrap();
    assert!(words > set.len() as u64);
    assert_eq!(set.len(), 2);
}
