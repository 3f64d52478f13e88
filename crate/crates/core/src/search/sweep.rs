//! Exhaustive claim sweeps with replayable reports.
//!
//! Spaces are processed in parallel but merged back in enumeration order, so
//! counts and the reported witnesses never depend on scheduling.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::claims::{check_map, check_space, check_subset, Claim, ClaimId, Scope};
use super::enumerate::{assignments, enumerate_up_to, Method, MAX_BRUTE_POINTS, MAX_PREORDER_POINTS};
use crate::classes::Classifier;
use crate::error::{Error, Result};
use crate::maps::{MapChecker, Verdict};
use crate::space::{FiniteSpace, PointSet};
use crate::Settings;

/// Largest space size for map-preservation sweeps.
pub const MAX_MAP_SWEEP_POINTS: usize = 4;
pub const DEFAULT_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_points: usize,
    /// Maximum number of reports kept; the full count is always reported.
    pub cap: usize,
    pub settings: Settings,
    pub method: Method,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_points: 3,
            cap: DEFAULT_CAP,
            settings: Settings::default(),
            method: Method::Preorder,
        }
    }
}

impl SweepConfig {
    pub fn new(max_points: usize) -> Self {
        SweepConfig {
            max_points,
            ..Default::default()
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_settings(mut self, settings: Settings) -> Self {
        self.settings = settings;
        self
    }
}

/// A concrete instance on which a claim fails (or, for existence searches,
/// on which the searched-for combination occurs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub claim: ClaimId,
    pub space: FiniteSpace,
    pub codomain: Option<FiniteSpace>,
    pub assignment: Option<Vec<usize>>,
    pub subsets: Vec<PointSet>,
    pub failed_side: String,
    pub detail: String,
}

impl CounterexampleReport {
    /// Re-evaluates the claim on the stored witness; true iff the recorded
    /// hit is reproduced.
    pub fn replay(&self, settings: Settings) -> bool {
        let claim = self.claim.claim();
        let c = Classifier::with_settings(&self.space, settings);
        match claim.scope() {
            Scope::Subsets => self
                .subsets
                .first()
                .and_then(|a| check_subset(self.claim, &c, a.mask()))
                .is_some_and(|h| h.failed_side == self.failed_side),
            Scope::Spaces => check_space(self.claim, &c).is_some_and(|h| h.failed_side == self.failed_side),
            Scope::Maps => {
                let (Some(cod), Some(assignment)) = (&self.codomain, &self.assignment) else {
                    return false;
                };
                let cc = Classifier::with_settings(cod, settings);
                check_map(self.claim, &MapChecker::new(assignment, &c, &cc)).is_some()
            }
        }
    }
}

impl fmt::Display for CounterexampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.claim, self.space)?;
        if let (Some(cod), Some(a)) = (&self.codomain, &self.assignment) {
            write!(f, " → {cod}, f = {a:?}")?;
        }
        for s in &self.subsets {
            write!(f, ", A = {s}")?;
        }
        write!(f, ": {} ({})", self.detail, self.failed_side)
    }
}

/// Maps on which the open-map preservation statement fails once continuity
/// is dropped from its hypotheses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelaxedTally {
    pub count: usize,
    pub first: Option<CounterexampleReport>,
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub claim: Claim,
    pub config: SweepConfig,
    pub spaces_examined: usize,
    /// Subsets, spaces or maps examined, per the claim's scope.
    pub instances_examined: u64,
    /// Every hit, before the cap.
    pub total_hits: usize,
    /// The first `cap` hits in canonical order.
    pub counterexamples: Vec<CounterexampleReport>,
    pub relaxed: Option<RelaxedTally>,
    pub elapsed: Duration,
}

impl SweepResult {
    /// A universal claim with a counterexample, or an existence search with
    /// no witness.
    pub fn is_finding(&self) -> bool {
        if self.claim.is_existence() {
            self.total_hits == 0
        } else {
            self.total_hits > 0
        }
    }
}

fn check_bounds(claim: &Claim, config: &SweepConfig) -> Result<()> {
    let max = match (claim.scope(), config.method) {
        (Scope::Maps, _) => MAX_MAP_SWEEP_POINTS,
        (_, Method::Brute) => MAX_BRUTE_POINTS,
        (_, Method::Preorder) => MAX_PREORDER_POINTS,
    };
    if config.max_points > max {
        return Err(Error::SizeTooLarge {
            size: config.max_points,
            max,
        });
    }
    if config.max_points == 0 {
        return Err(Error::EmptyGround);
    }
    Ok(())
}

struct Chunk {
    instances: u64,
    hits: Vec<CounterexampleReport>,
    relaxed: Vec<CounterexampleReport>,
}

fn subset_chunk(id: ClaimId, space: &FiniteSpace, settings: Settings, stop_at_first: bool) -> Chunk {
    let c = Classifier::with_settings(space, settings);
    let mut hits = Vec::new();
    let mut instances = 0;
    for a in space.subsets() {
        instances += 1;
        if let Some(h) = check_subset(id, &c, a.mask()) {
            hits.push(CounterexampleReport {
                claim: id,
                space: space.clone(),
                codomain: None,
                assignment: None,
                subsets: vec![a],
                failed_side: h.failed_side,
                detail: h.detail,
            });
            if stop_at_first {
                break;
            }
        }
    }
    Chunk {
        instances,
        hits,
        relaxed: Vec::new(),
    }
}

fn space_chunk(id: ClaimId, space: &FiniteSpace, settings: Settings) -> Chunk {
    let c = Classifier::with_settings(space, settings);
    let hits = check_space(id, &c)
        .map(|h| CounterexampleReport {
            claim: id,
            space: space.clone(),
            codomain: None,
            assignment: None,
            subsets: Vec::new(),
            failed_side: h.failed_side,
            detail: h.detail,
        })
        .into_iter()
        .collect();
    Chunk {
        instances: 1,
        hits,
        relaxed: Vec::new(),
    }
}

fn map_chunk(id: ClaimId, domain: &FiniteSpace, spaces: &[FiniteSpace], settings: Settings, stop_at_first: bool) -> Chunk {
    let dom = Classifier::with_settings(domain, settings);
    let mut chunk = Chunk {
        instances: 0,
        hits: Vec::new(),
        relaxed: Vec::new(),
    };
    for codomain in spaces.iter().filter(|y| y.size() <= domain.size()) {
        let cod = Classifier::with_settings(codomain, settings);
        let maps = assignments(domain.size(), codomain.size(), true).expect("sizes within sweep bounds");
        for assignment in maps {
            chunk.instances += 1;
            let checker = MapChecker::new(&assignment, &dom, &cod);
            let report = |failed_side: String, detail: String| CounterexampleReport {
                claim: id,
                space: domain.clone(),
                codomain: Some(codomain.clone()),
                assignment: Some(assignment.clone()),
                subsets: Vec::new(),
                failed_side,
                detail,
            };
            if let Some(h) = check_map(id, &checker) {
                chunk.hits.push(report(h.failed_side, h.detail));
                if stop_at_first {
                    return chunk;
                }
            }
            if id == ClaimId::C10 && !stop_at_first {
                if let Verdict::Counterexample { failing_pair: (a, b) } =
                    checker.check_theorem_3_1_without_continuity()
                {
                    chunk.relaxed.push(report(
                        "conclusion".into(),
                        format!("discontinuous map; codomain cannot separate {a} and {b}"),
                    ));
                }
            }
        }
    }
    chunk
}

/// Evaluates `id` on every instance in scope and collects the hits.
pub fn sweep_claim(id: ClaimId, config: &SweepConfig) -> Result<SweepResult> {
    let claim = id.claim();
    check_bounds(&claim, config)?;
    let start = Instant::now();
    let spaces = enumerate_up_to(config.max_points, config.method)?;
    let settings = config.settings;
    let chunks: Vec<Chunk> = match claim.scope() {
        Scope::Subsets => spaces
            .par_iter()
            .map(|s| subset_chunk(id, s, settings, false))
            .collect(),
        Scope::Spaces => spaces.par_iter().map(|s| space_chunk(id, s, settings)).collect(),
        Scope::Maps => spaces
            .par_iter()
            .map(|s| map_chunk(id, s, &spaces, settings, false))
            .collect(),
    };
    let instances_examined = chunks.iter().map(|c| c.instances).sum();
    let total_hits = chunks.iter().map(|c| c.hits.len()).sum();
    let relaxed = (id == ClaimId::C10).then(|| RelaxedTally {
        count: chunks.iter().map(|c| c.relaxed.len()).sum(),
        first: chunks.iter().flat_map(|c| c.relaxed.first()).next().cloned(),
    });
    let counterexamples = chunks
        .into_iter()
        .flat_map(|c| c.hits)
        .take(config.cap)
        .collect();
    Ok(SweepResult {
        claim,
        config: *config,
        spaces_examined: spaces.len(),
        instances_examined,
        total_hits,
        counterexamples,
        relaxed,
        elapsed: start.elapsed(),
    })
}

/// The canonically-first hit of `id`, stopping at the first space that has one.
pub fn find_first(id: ClaimId, config: &SweepConfig) -> Result<Option<CounterexampleReport>> {
    let claim = id.claim();
    check_bounds(&claim, config)?;
    let spaces = enumerate_up_to(config.max_points, config.method)?;
    let settings = config.settings;
    for s in &spaces {
        let chunk = match claim.scope() {
            Scope::Subsets => subset_chunk(id, s, settings, true),
            Scope::Spaces => space_chunk(id, s, settings),
            Scope::Maps => map_chunk(id, s, &spaces, settings, true),
        };
        if let Some(first) = chunk.hits.into_iter().next() {
            return Ok(Some(first));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c1_has_no_counterexamples_at_three_points() {
        let r = sweep_claim(ClaimId::C1, &SweepConfig::new(3)).unwrap();
        assert_eq!(r.spaces_examined, 1 + 4 + 29);
        assert_eq!(r.instances_examined, 2 + 4 * 4 + 29 * 8);
        assert_eq!(r.total_hits, 0);
        assert!(!r.is_finding());
        assert_eq!(find_first(ClaimId::C1, &SweepConfig::new(2)).unwrap(), None);
    }

    #[test]
    fn x1_finds_a_witness() {
        let r = sweep_claim(ClaimId::X1, &SweepConfig::new(3)).unwrap();
        assert!(r.total_hits > 0);
        assert!(!r.is_finding());
        let first = find_first(ClaimId::X1, &SweepConfig::new(3)).unwrap().unwrap();
        assert_eq!(first, r.counterexamples[0]);
        assert!(first.replay(Settings::default()));
    }

    #[test]
    fn cap_limits_reports_not_counts() {
        let r = sweep_claim(ClaimId::X1, &SweepConfig::new(3).with_cap(2)).unwrap();
        assert_eq!(r.counterexamples.len(), 2);
        assert!(r.total_hits > 2);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            sweep_claim(ClaimId::C10, &SweepConfig::new(5)),
            Err(Error::SizeTooLarge { .. })
        ));
        assert!(matches!(
            sweep_claim(ClaimId::C1, &SweepConfig::new(6)),
            Err(Error::SizeTooLarge { .. })
        ));
    }

    #[test]
    fn map_sweep_counts_surjections() {
        let r = sweep_claim(ClaimId::C11, &SweepConfig::new(2)).unwrap();
        // 1-point: 1 space; 2-point: 4 spaces.
        // onto 1 point: 5 domains, 1 map each; 2→2: 16 pairs × 2 surjections.
        assert_eq!(r.instances_examined, 5 + 32);
    }
}
