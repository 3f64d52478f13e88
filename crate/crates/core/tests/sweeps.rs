//! Sweep determinism, the cap, first-hit search and report replay.

mod common;

use common::all_settings;
use scstar::search::{find_first, sweep_claim, ClaimId, SweepConfig};

fn signature(id: ClaimId, config: &SweepConfig) -> (usize, u64, Vec<String>) {
    let r = sweep_claim(id, config).unwrap();
    (
        r.total_hits,
        r.instances_examined,
        r.counterexamples.iter().map(|c| c.to_string()).collect(),
    )
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let config = SweepConfig::new(4).with_cap(usize::MAX);
    for id in [ClaimId::X1, ClaimId::X3, ClaimId::X4, ClaimId::C9] {
        let many = signature(id, &config);
        let one = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| signature(id, &config));
        assert_eq!(many, one, "{id}");
        assert_eq!(many, signature(id, &config), "{id}");
    }
}

#[test]
fn existence_hit_counts_at_four_points() {
    let config = SweepConfig::new(4).with_cap(0);
    let counts: Vec<usize> = [ClaimId::X1, ClaimId::X2, ClaimId::X3, ClaimId::X4]
        .iter()
        .map(|&id| sweep_claim(id, &config).unwrap().total_hits)
        .collect();
    assert_eq!(counts, vec![3448, 1246, 24, 79]);
}

#[test]
fn cap_keeps_a_prefix() {
    let full = sweep_claim(ClaimId::X2, &SweepConfig::new(3).with_cap(usize::MAX)).unwrap();
    let capped = sweep_claim(ClaimId::X2, &SweepConfig::new(3).with_cap(5)).unwrap();
    assert_eq!(capped.total_hits, full.total_hits);
    assert_eq!(capped.counterexamples[..], full.counterexamples[..5]);
}

#[test]
fn find_first_is_the_first_sweep_hit() {
    for id in ClaimId::all() {
        let config = SweepConfig::new(3).with_cap(1);
        let first = find_first(id, &config).unwrap();
        let swept = sweep_claim(id, &config).unwrap();
        assert_eq!(first.as_ref(), swept.counterexamples.first(), "{id}");
    }
}

#[test]
fn every_report_replays() {
    for settings in all_settings() {
        for id in ClaimId::all() {
            let config = SweepConfig::new(3).with_cap(usize::MAX).with_settings(settings);
            for report in sweep_claim(id, &config).unwrap().counterexamples {
                assert!(report.replay(settings), "{report}");
            }
        }
    }
}

#[test]
fn universal_claims_have_no_counterexamples_at_four_points() {
    for settings in all_settings() {
        for id in ClaimId::all().filter(|id| !id.claim().is_existence()) {
            let config = SweepConfig::new(if id.claim().scope() == scstar::search::Scope::Maps { 3 } else { 4 })
                .with_settings(settings);
            let r = sweep_claim(id, &config).unwrap();
            assert_eq!(r.total_hits, 0, "{id} under {settings:?}: {:?}", r.counterexamples.first());
            assert!(!r.is_finding());
        }
    }
}
