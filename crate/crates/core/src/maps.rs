//! Maps between finite spaces and the SC*-preservation checks.

use std::fmt;

use crate::classes::{ClassLabel, Classifier};
use crate::error::{Error, Result};
use crate::separation::is_almost_sc_star_normal;
use crate::space::{FiniteSpace, PointSet};
use crate::{NeighborhoodMode, Settings};

/// A total function between two finite spaces, stored as a dense
/// assignment indexed by domain point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpaceMap {
    domain: FiniteSpace,
    codomain: FiniteSpace,
    assignment: Vec<usize>,
}

impl SpaceMap {
    pub fn new(domain: FiniteSpace, codomain: FiniteSpace, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != domain.size() {
            return Err(Error::AssignmentLength {
                expected: domain.size(),
                found: assignment.len(),
            });
        }
        if let Some(&q) = assignment.iter().find(|&&q| q >= codomain.size()) {
            return Err(Error::PointOutOfRange {
                point: q,
                size: codomain.size(),
            });
        }
        Ok(SpaceMap {
            domain,
            codomain,
            assignment,
        })
    }

    pub fn identity(space: FiniteSpace) -> Self {
        let assignment = (0..space.size()).collect();
        SpaceMap {
            domain: space.clone(),
            codomain: space,
            assignment,
        }
    }

    pub fn domain(&self) -> &FiniteSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteSpace {
        &self.codomain
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn image(&self, a: &PointSet) -> Result<PointSet> {
        self.domain.check(a)?;
        Ok(self.codomain.set(image_mask(&self.assignment, a.mask())))
    }

    pub fn preimage(&self, b: &PointSet) -> Result<PointSet> {
        self.codomain.check(b)?;
        Ok(self.domain.set(preimage_mask(&self.assignment, b.mask())))
    }

    pub fn is_surjective(&self) -> bool {
        image_mask(&self.assignment, self.domain.full_mask()) == self.codomain.full_mask()
    }

    /// Preimages of open sets are open.
    pub fn is_continuous(&self) -> bool {
        self.codomain
            .opens()
            .masks()
            .all(|o| self.domain.is_open_mask(preimage_mask(&self.assignment, o)))
    }

    /// Evaluates every map property under `settings` with fresh classifiers.
    pub fn profile(&self, settings: Settings) -> MapProfile {
        let dom = Classifier::with_settings(&self.domain, settings);
        let cod = Classifier::with_settings(&self.codomain, settings);
        MapChecker::new(&self.assignment, &dom, &cod).profile()
    }

    pub fn check_theorem_3_1(&self, settings: Settings) -> Verdict {
        let dom = Classifier::with_settings(&self.domain, settings);
        let cod = Classifier::with_settings(&self.codomain, settings);
        MapChecker::new(&self.assignment, &dom, &cod).check_theorem_3_1()
    }

    pub fn check_theorem_3_2(&self, settings: Settings) -> Verdict {
        let dom = Classifier::with_settings(&self.domain, settings);
        let cod = Classifier::with_settings(&self.codomain, settings);
        MapChecker::new(&self.assignment, &dom, &cod).check_theorem_3_2()
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SpaceMap) -> Result<SpaceMap> {
        if g.domain != self.codomain {
            return Err(Error::GroundMismatch {
                expected: self.codomain.size(),
                found: g.domain.size(),
            });
        }
        let assignment = self.assignment.iter().map(|&q| g.assignment[q]).collect();
        Ok(SpaceMap {
            domain: self.domain.clone(),
            codomain: g.codomain.clone(),
            assignment,
        })
    }
}

pub(crate) fn image_mask(assignment: &[usize], a: u32) -> u32 {
    assignment
        .iter()
        .enumerate()
        .filter(|&(p, _)| a & (1 << p) != 0)
        .fold(0, |acc, (_, &q)| acc | (1 << q))
}

pub(crate) fn preimage_mask(assignment: &[usize], b: u32) -> u32 {
    assignment
        .iter()
        .enumerate()
        .filter(|&(_, &q)| b & (1 << q) != 0)
        .fold(0, |acc, (p, _)| acc | (1 << p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hypothesis {
    Surjective,
    Continuous,
    RcContinuous,
    TScStarOpen,
    TScStarClosed,
    AlmostScStarIrresolute,
    DomainAlmostScStarNormal,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::Surjective => "surjective",
            Hypothesis::Continuous => "continuous",
            Hypothesis::RcContinuous => "rc-continuous",
            Hypothesis::TScStarOpen => "T-SC*-open",
            Hypothesis::TScStarClosed => "T-SC*-closed",
            Hypothesis::AlmostScStarIrresolute => "almost SC*-irresolute",
            Hypothesis::DomainAlmostScStarNormal => "domain almost SC*-normal",
        })
    }
}

/// Outcome of a preservation check on one map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// All hypotheses hold and the codomain is almost SC*-normal.
    Holds,
    /// The listed hypotheses fail, so the statement says nothing about this map.
    NotApplicable { failed: Vec<Hypothesis> },
    /// All hypotheses hold but the codomain is not almost SC*-normal; the
    /// codomain pair that cannot be separated is attached.
    Counterexample { failing_pair: (PointSet, PointSet) },
}

impl Verdict {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, Verdict::Counterexample { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Holds => "Holds",
            Verdict::NotApplicable { .. } => "NotApplicable",
            Verdict::Counterexample { .. } => "Counterexample",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MapProfile {
    pub surjective: bool,
    pub continuous: bool,
    pub rc_continuous: bool,
    pub t_sc_star_open: bool,
    pub t_sc_star_closed: bool,
    pub almost_sc_star_irresolute: bool,
}

/// Evaluates map properties against pre-built classifiers of the domain and
/// codomain, so a sweep can reuse their memo tables across many maps.
pub struct MapChecker<'a> {
    assignment: &'a [usize],
    domain: &'a Classifier<'a>,
    codomain: &'a Classifier<'a>,
}

impl<'a> MapChecker<'a> {
    pub fn new(assignment: &'a [usize], domain: &'a Classifier<'a>, codomain: &'a Classifier<'a>) -> Self {
        debug_assert_eq!(assignment.len(), domain.space().size());
        MapChecker {
            assignment,
            domain,
            codomain,
        }
    }

    fn image(&self, a: u32) -> u32 {
        image_mask(self.assignment, a)
    }

    fn preimage(&self, b: u32) -> u32 {
        preimage_mask(self.assignment, b)
    }

    pub fn surjective(&self) -> bool {
        self.image(self.domain.space().full_mask()) == self.codomain.space().full_mask()
    }

    pub fn continuous(&self) -> bool {
        self.codomain
            .space()
            .opens()
            .masks()
            .all(|o| self.domain.open_m(self.preimage(o)))
    }

    /// Preimages of regular closed sets are regular closed.
    pub fn rc_continuous(&self) -> bool {
        (0..=self.codomain.space().full_mask())
            .filter(|&f| self.codomain.regular_closed_m(f))
            .all(|f| self.domain.regular_closed_m(self.preimage(f)))
    }

    fn forward_preserves(&self, label: ClassLabel) -> bool {
        (0..=self.domain.space().full_mask())
            .filter(|&a| self.domain.holds_m(label, a))
            .all(|a| self.codomain.holds_m(label, self.image(a)))
    }

    /// Images of SC*-open sets are SC*-open.
    pub fn t_sc_star_open(&self) -> bool {
        self.forward_preserves(ClassLabel::SCStarOpen)
    }

    /// Images of SC*-closed sets are SC*-closed.
    pub fn t_sc_star_closed(&self) -> bool {
        self.forward_preserves(ClassLabel::SCStarClosed)
    }

    /// For every `x` and every SC*-neighborhood `N` of `f(x)`,
    /// `SC*-cl(f⁻¹(N))` is an SC*-neighborhood of `x`.
    pub fn almost_sc_star_irresolute(&self) -> bool {
        let mode = self.domain.settings().neighborhoods;
        let cod_full = self.codomain.space().full_mask();
        (0..self.assignment.len()).all(|x| {
            let fx = self.assignment[x];
            (0..=cod_full)
                .filter(|&n| match mode {
                    NeighborhoodMode::All => self.codomain.sc_neighborhood_m(n, fx),
                    NeighborhoodMode::ScStarOpenOnly => n & (1 << fx) != 0 && self.codomain.sc_open_m(n),
                })
                .all(|n| {
                    let cl = self.domain.sc_closure_m(self.preimage(n));
                    self.domain.sc_neighborhood_m(cl, x)
                })
        })
    }

    pub fn profile(&self) -> MapProfile {
        MapProfile {
            surjective: self.surjective(),
            continuous: self.continuous(),
            rc_continuous: self.rc_continuous(),
            t_sc_star_open: self.t_sc_star_open(),
            t_sc_star_closed: self.t_sc_star_closed(),
            almost_sc_star_irresolute: self.almost_sc_star_irresolute(),
        }
    }

    fn verdict(&self, hypotheses: &[Hypothesis]) -> Verdict {
        let failed: Vec<Hypothesis> = hypotheses
            .iter()
            .copied()
            .filter(|&h| !self.hypothesis(h))
            .collect();
        if !failed.is_empty() {
            return Verdict::NotApplicable { failed };
        }
        match is_almost_sc_star_normal(self.codomain).failing_pair {
            None => Verdict::Holds,
            Some(failing_pair) => Verdict::Counterexample { failing_pair },
        }
    }

    pub fn hypothesis(&self, h: Hypothesis) -> bool {
        match h {
            Hypothesis::Surjective => self.surjective(),
            Hypothesis::Continuous => self.continuous(),
            Hypothesis::RcContinuous => self.rc_continuous(),
            Hypothesis::TScStarOpen => self.t_sc_star_open(),
            Hypothesis::TScStarClosed => self.t_sc_star_closed(),
            Hypothesis::AlmostScStarIrresolute => self.almost_sc_star_irresolute(),
            Hypothesis::DomainAlmostScStarNormal => is_almost_sc_star_normal(self.domain).holds,
        }
    }

    /// Preservation under surjective, continuous, T-SC*-open, rc-continuous,
    /// almost SC*-irresolute maps out of an almost SC*-normal space.
    pub fn check_theorem_3_1(&self) -> Verdict {
        self.verdict(&OPEN_MAP_HYPOTHESES)
    }

    /// As [`MapChecker::check_theorem_3_1`] with continuity dropped.
    pub fn check_theorem_3_1_without_continuity(&self) -> Verdict {
        self.verdict(&OPEN_MAP_HYPOTHESES_WITHOUT_CONTINUITY)
    }

    /// Preservation under surjective, rc-continuous, T-SC*-closed maps out
    /// of an almost SC*-normal space.
    pub fn check_theorem_3_2(&self) -> Verdict {
        self.verdict(&CLOSED_MAP_HYPOTHESES)
    }
}

pub const OPEN_MAP_HYPOTHESES: [Hypothesis; 6] = [
    Hypothesis::Surjective,
    Hypothesis::Continuous,
    Hypothesis::TScStarOpen,
    Hypothesis::RcContinuous,
    Hypothesis::AlmostScStarIrresolute,
    Hypothesis::DomainAlmostScStarNormal,
];

pub const OPEN_MAP_HYPOTHESES_WITHOUT_CONTINUITY: [Hypothesis; 5] = [
    Hypothesis::Surjective,
    Hypothesis::TScStarOpen,
    Hypothesis::RcContinuous,
    Hypothesis::AlmostScStarIrresolute,
    Hypothesis::DomainAlmostScStarNormal,
];

pub const CLOSED_MAP_HYPOTHESES: [Hypothesis; 4] = [
    Hypothesis::Surjective,
    Hypothesis::RcContinuous,
    Hypothesis::TScStarClosed,
    Hypothesis::DomainAlmostScStarNormal,
];

#[cfg(test)]
mod tests {
    use super::*;

    fn five_open_space() -> FiniteSpace {
        FiniteSpace::from_lists(4, &[&[], &[1, 3], &[0, 1, 3], &[1, 2, 3], &[0, 1, 2, 3]]).unwrap()
    }

    fn partition_space() -> FiniteSpace {
        FiniteSpace::from_lists(
            4,
            &[&[], &[0], &[1], &[0, 1], &[2, 3], &[0, 2, 3], &[1, 2, 3], &[0, 1, 2, 3]],
        )
        .unwrap()
    }

    fn collapse() -> SpaceMap {
        SpaceMap::new(partition_space(), partition_space(), vec![0, 0, 2, 3]).unwrap()
    }

    #[test]
    fn image_and_preimage() {
        let f = collapse();
        let x = f.domain().clone();
        assert_eq!(f.image(&x.subset(&[0, 1]).unwrap()).unwrap(), x.subset(&[0]).unwrap());
        assert_eq!(f.preimage(&x.subset(&[0]).unwrap()).unwrap(), x.subset(&[0, 1]).unwrap());
        let id = SpaceMap::identity(x.clone());
        for a in x.subsets() {
            assert_eq!(id.image(&a).unwrap(), a);
        }
        assert!(f.image(&PointSet::empty(2)).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            SpaceMap::new(partition_space(), five_open_space(), vec![0, 1]).unwrap_err(),
            Error::AssignmentLength { expected: 4, found: 2 }
        );
        assert_eq!(
            SpaceMap::new(partition_space(), five_open_space(), vec![0, 1, 2, 9]).unwrap_err(),
            Error::PointOutOfRange { point: 9, size: 4 }
        );
    }

    #[test]
    fn continuity_examples() {
        for x in [five_open_space(), partition_space()] {
            assert!(SpaceMap::identity(x.clone()).is_continuous());
            let constant = SpaceMap::new(x.clone(), five_open_space(), vec![2; 4]).unwrap();
            assert!(constant.is_continuous());
        }
        let f = SpaceMap::new(five_open_space(), partition_space(), vec![0, 1, 2, 3]).unwrap();
        assert!(!f.is_continuous());
    }

    #[test]
    fn rc_continuity_examples() {
        let s = Settings::default();
        assert!(SpaceMap::identity(partition_space()).profile(s).rc_continuous);
        let into_five_open = SpaceMap::new(partition_space(), five_open_space(), vec![3, 0, 0, 1]).unwrap();
        assert!(into_five_open.profile(s).rc_continuous);
        let f = SpaceMap::new(
            FiniteSpace::indiscrete(2).unwrap(),
            FiniteSpace::discrete(2).unwrap(),
            vec![0, 1],
        )
        .unwrap();
        assert!(!f.profile(s).rc_continuous);
    }

    #[test]
    fn t_sc_star_examples() {
        let s = Settings::default();
        let p = collapse().profile(s);
        assert!(p.t_sc_star_open && p.t_sc_star_closed);
        let into_five_open = SpaceMap::new(partition_space(), five_open_space(), vec![3, 0, 0, 1]).unwrap();
        let p = into_five_open.profile(s);
        assert!(p.t_sc_star_open && p.t_sc_star_closed);
    }

    #[test]
    fn identity_satisfies_everything() {
        for x in [five_open_space(), partition_space(), FiniteSpace::indiscrete(3).unwrap()] {
            for s in [Settings::default(), Settings::literal()] {
                let p = SpaceMap::identity(x.clone()).profile(s);
                assert_eq!(
                    p,
                    MapProfile {
                        surjective: true,
                        continuous: true,
                        rc_continuous: true,
                        t_sc_star_open: true,
                        t_sc_star_closed: true,
                        almost_sc_star_irresolute: true,
                    }
                );
            }
        }
    }

    #[test]
    fn neighborhoods() {
        let x = partition_space();
        let c = Classifier::new(&x);
        assert!(c.is_sc_star_neighborhood(&x.full(), 3).unwrap());
        assert!(c.is_sc_star_neighborhood(&x.subset(&[1, 2]).unwrap(), 1).unwrap());
        assert!(!c.is_sc_star_neighborhood(&x.empty(), 0).unwrap());
    }

    #[test]
    fn irresolute_examples() {
        let s = Settings::default();
        assert!(collapse().profile(s).almost_sc_star_irresolute);
        let constant = SpaceMap::new(partition_space(), partition_space(), vec![1; 4]).unwrap();
        assert!(constant.profile(s).almost_sc_star_irresolute);
    }

    #[test]
    fn theorem_3_1_examples() {
        let s = Settings::default();
        assert_eq!(SpaceMap::identity(partition_space()).check_theorem_3_1(s), Verdict::Holds);
        let to_point = SpaceMap::new(partition_space(), FiniteSpace::discrete(1).unwrap(), vec![0; 4]).unwrap();
        assert_eq!(to_point.check_theorem_3_1(s), Verdict::Holds);
        let inclusion = SpaceMap::new(FiniteSpace::discrete(1).unwrap(), FiniteSpace::discrete(2).unwrap(), vec![0])
            .unwrap();
        assert!(matches!(
            inclusion.check_theorem_3_1(s),
            Verdict::NotApplicable { ref failed } if failed.contains(&Hypothesis::Surjective)
        ));
    }

    #[test]
    fn theorem_3_2_examples() {
        let s = Settings::default();
        assert_eq!(SpaceMap::identity(partition_space()).check_theorem_3_2(s), Verdict::Holds);
        let quotient = FiniteSpace::from_lists(3, &[&[], &[0], &[1, 2], &[0, 1, 2]]).unwrap();
        let f = SpaceMap::new(partition_space(), quotient, vec![0, 0, 1, 2]).unwrap();
        assert!(!f.check_theorem_3_2(s).is_counterexample());
    }

    #[test]
    fn composition_of_continuous_maps() {
        let x = partition_space();
        let f = SpaceMap::new(x.clone(), x.clone(), vec![0, 0, 2, 3]).unwrap();
        let g = SpaceMap::new(x.clone(), FiniteSpace::indiscrete(2).unwrap(), vec![0, 1, 1, 0]).unwrap();
        assert!(f.is_continuous() && g.is_continuous());
        assert!(f.then(&g).unwrap().is_continuous());
    }
}
