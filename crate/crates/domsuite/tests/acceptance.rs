//! Acceptance criteria: twelve end-to-end checks, each printing one PASS line
//! (visible with `--nocapture`) and enforcing its wall-clock budget.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use domsuite::{
    cartesian_product, check_cartesian_constructions, check_chain, check_corona_direct_identity,
    check_direct_lemmas, check_hereditary, complete, corona_k1, cross_validate_cartesian,
    cross_validate_direct, cross_validate_strong, cycle, direct_product, emit_graph6,
    hunt_conjecture, load_shipped_corpus, path, strong_product, CheckRecord, ExactEngine, Graph,
    HarnessConfig, StructureClass, Verdict,
};

fn timed(name: &str, budget_secs: u64, f: impl FnOnce()) {
    let start = Instant::now();
    f();
    let elapsed = start.elapsed();
    assert!(
        elapsed <= Duration::from_secs(budget_secs),
        "{name} took {elapsed:?}, budget {budget_secs}s"
    );
    println!("{name}: PASS ({elapsed:.2?})");
}

fn corpus_graphs(max_order: usize) -> Vec<Graph> {
    load_shipped_corpus(max_order)
        .unwrap()
        .entries
        .into_iter()
        .map(|e| e.graph)
        .collect()
}

fn assert_all_pass(records: &[CheckRecord]) {
    let failing: Vec<&CheckRecord> = records.iter().filter(|r| !r.pass).collect();
    assert!(failing.is_empty(), "failing records: {failing:?}");
}

fn unordered_pairs(graphs: &[Graph]) -> Vec<(Graph, Graph)> {
    let mut pairs = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        for h in &graphs[i..] {
            pairs.push((g.clone(), h.clone()));
        }
    }
    pairs
}

#[test]
fn criterion_01_product_invariant_values() {
    timed("criterion 01 product invariant values", 300, || {
        let engine = ExactEngine::default();
        let c5c5 = strong_product(&cycle(5), &cycle(5)).unwrap();
        let (g, _) = engine.domination_number(&c5c5).unwrap();
        let (u, _) = engine.upper_domination_number(&c5c5).unwrap();
        assert_eq!((g, u), (4, 6), "C5 strong C5");

        let k3p4 = cartesian_product(&complete(3), &path(4)).unwrap();
        let (g, _) = engine.domination_number(&k3p4).unwrap();
        let (u, _) = engine.upper_domination_number(&k3p4).unwrap();
        assert_eq!((g, u), (4, 6), "K3 box P4");

        let k3c4 = cartesian_product(&complete(3), &cycle(4)).unwrap();
        let (g, _) = engine.domination_number(&k3c4).unwrap();
        let (u, _) = engine.upper_domination_number(&k3c4).unwrap();
        assert_eq!((g, u), (3, 6), "K3 box C4");
    });
}

#[test]
fn criterion_02_chain_and_witnesses_on_the_full_corpus() {
    timed("criterion 02 chain and witnesses, full corpus", 120, || {
        let graphs = corpus_graphs(8);
        assert_eq!(graphs.len(), 12113);
        let records = check_chain(&graphs, &HarnessConfig::default()).unwrap();
        assert_eq!(records.len(), graphs.len());
        assert_all_pass(&records);
    });
}

#[test]
fn criterion_03_direct_characterization_cross_validation() {
    timed("criterion 03 direct characterization", 300, || {
        let graphs = corpus_graphs(4);
        let nontrivial: Vec<Graph> = graphs
            .iter()
            .filter(|g| g.order() >= 2)
            .cloned()
            .collect();
        let mut pairs = unordered_pairs(&nontrivial);
        let k2 = complete(2);
        pairs.push((k2.clone(), cycle(4)));
        pairs.push((complete(3), complete(3)));
        for f in &graphs {
            pairs.push((k2.clone(), corona_k1(f).unwrap()));
        }
        let records = cross_validate_direct(&pairs, &HarnessConfig::default()).unwrap();
        assert_eq!(records.len(), pairs.len());
        assert_all_pass(&records);
    });
}

#[test]
fn criterion_04_cartesian_characterization_cross_validation() {
    timed("criterion 04 cartesian characterization", 600, || {
        let hs: Vec<Graph> = corpus_graphs(5)
            .into_iter()
            .filter(|g| g.order() >= 2)
            .collect();
        let ms = [2usize, 3, 4];
        let config = HarnessConfig::default();
        let records = cross_validate_cartesian(&ms, &hs, &config).unwrap();
        let expected_instances = ms
            .iter()
            .map(|m| hs.iter().filter(|h| m * h.order() <= 20).count())
            .sum::<usize>();
        assert_eq!(records.len(), expected_instances);
        assert_all_pass(&records);

        // the well-dominated instances in this range are exactly
        // K2 box K2, K3 box K3, K3 box P3, K4 box K4
        let mut found = BTreeSet::new();
        for &m in &ms {
            for h in &hs {
                if m * h.order() > 20 {
                    continue;
                }
                let v = domsuite::cartesian_with_complete_well_dominated(m, h).unwrap();
                if v.verdict == Verdict::WellDominated {
                    found.insert((m, domsuite::classify_structure(h), h.order()));
                }
            }
        }
        let expected: BTreeSet<(usize, StructureClass, usize)> = [
            (2, StructureClass::Complete, 2),
            (3, StructureClass::Complete, 3),
            (3, StructureClass::Path, 3),
            (4, StructureClass::Complete, 4),
        ]
        .into_iter()
        .collect();
        assert_eq!(found, expected);
    });
}

#[test]
fn criterion_05_strong_complete_factor_cross_validation() {
    timed("criterion 05 strong complete factor", 600, || {
        let hs = corpus_graphs(6);
        let records = cross_validate_strong(&[2, 3], &hs, &HarnessConfig::default()).unwrap();
        assert_eq!(records.len(), 2 * hs.len());
        assert_all_pass(&records);
    });
}

#[test]
fn criterion_06_open_irredundant_minimum_dominating_sets() {
    timed("criterion 06 open-irredundant minimum dominating", 120, || {
        let engine = ExactEngine::default();
        for g in corpus_graphs(8) {
            if g.order() == 1 {
                // the single-vertex graph has an isolated vertex and is the
                // one corpus graph outside the theorem's scope
                assert!(engine.open_irredundant_minimum_dominating_set(&g).is_err());
                continue;
            }
            let s = engine.open_irredundant_minimum_dominating_set(&g).unwrap();
            let (gamma, _) = engine.domination_number(&g).unwrap();
            assert_eq!(s.len(), gamma, "not minimum on {}", emit_graph6(&g));
            assert!(g.is_open_irredundant(&s).unwrap());
            assert!(domsuite::is_minimal_dominating(&g, &s).unwrap());
        }
    });
}

#[test]
fn criterion_07_hereditary_closure_under_neighborhood_removal() {
    timed("criterion 07 hereditary closure", 300, || {
        let graphs = corpus_graphs(7);
        let records = check_hereditary(&graphs, &HarnessConfig::default()).unwrap();
        assert!(!records.is_empty());
        assert_all_pass(&records);
    });
}

#[test]
fn criterion_08_direct_product_lemma_suite() {
    timed("criterion 08 direct product lemmas", 300, || {
        let graphs: Vec<Graph> = corpus_graphs(4)
            .into_iter()
            .filter(|g| g.order() >= 3)
            .collect();
        assert_eq!(graphs.len(), 8);
        let pairs = unordered_pairs(&graphs);
        assert_eq!(pairs.len(), 36);
        let records = check_direct_lemmas(&pairs, &HarnessConfig::default()).unwrap();
        assert_eq!(records.len(), 4 * pairs.len());
        assert_all_pass(&records);
    });
}

#[test]
fn criterion_09_cartesian_construction_lemmas() {
    timed("criterion 09 cartesian construction lemmas", 300, || {
        let gs = corpus_graphs(5);
        let hs = [complete(2), complete(3), path(3)];
        let records =
            check_cartesian_constructions(&gs, &hs, &HarnessConfig::default()).unwrap();
        assert_eq!(records.len(), 2 * gs.len() * hs.len());
        assert_all_pass(&records);
    });
}

#[test]
fn criterion_10_corona_direct_identity() {
    timed("criterion 10 corona identity", 60, || {
        let bases = corpus_graphs(5);
        let records = check_corona_direct_identity(&bases, &HarnessConfig::default()).unwrap();
        assert_eq!(records.len(), bases.len());
        assert_all_pass(&records);
    });
}

#[test]
fn criterion_11_conjecture_hunt_is_clean_and_deterministic() {
    timed("criterion 11 conjecture hunt", 300, || {
        let graphs: Vec<Graph> = corpus_graphs(4)
            .into_iter()
            .filter(|g| g.order() >= 2)
            .collect();
        let config = HarnessConfig::default();
        let first = hunt_conjecture(&graphs, &config, None).unwrap();
        let second = hunt_conjecture(&graphs, &config, None).unwrap();
        assert_eq!(first, second, "hunt reports must be deterministic");
        assert_all_pass(&first);
        let summary: Vec<&CheckRecord> = first
            .iter()
            .filter(|r| r.check == "conj-cartesian-complete-factor-summary")
            .collect();
        assert_eq!(summary.len(), 1);
        assert!(summary[0].pass, "counterexample reported: {:?}", summary[0]);
    });
}

#[test]
fn criterion_12_codec_round_trip_and_negative_control() {
    timed("criterion 12 codec and negative control", 120, || {
        // byte-identical graph6 round-trip over every shipped corpus line
        let dir = domsuite::io::shipped_data_dir();
        let mut lines = 0usize;
        for k in 1..=8 {
            let text = std::fs::read_to_string(dir.join(format!("connected_n{k}.g6"))).unwrap();
            for line in text.lines() {
                let g = domsuite::parse_graph6(line).unwrap();
                assert_eq!(emit_graph6(&g), line);
                lines += 1;
            }
        }
        assert_eq!(lines, 12113);

        // the deliberately failing suite exits 1 with exactly one failing record
        let out = std::env::temp_dir().join(format!("neg-control-{}.jsonl", std::process::id()));
        let status = Command::new(env!("CARGO_BIN_EXE_domsuite"))
            .args([
                "verify",
                "--suite",
                "self-test-violation",
                "--order",
                "3",
                "--out",
            ])
            .arg(&out)
            .output()
            .unwrap();
        assert_eq!(status.status.code(), Some(1));
        let report = std::fs::read_to_string(&out).unwrap();
        let failing = report
            .lines()
            .skip(1) // header
            .filter(|l| l.contains("\"pass\":false"))
            .count();
        let total = report.lines().count() - 1;
        assert_eq!((total, failing), (1, 1));
        std::fs::remove_file(&out).unwrap();

        // direct product sanity pinned to the codec: K3 x K3 is one of the
        // well-dominated products and round-trips through graph6
        let p = direct_product(&complete(3), &complete(3)).unwrap();
        let line = emit_graph6(&p);
        assert_eq!(domsuite::parse_graph6(&line).unwrap(), p);
    });
}
