//! Normality, almost normality and almost SC*-normality.
//!
//! Pair quantifiers run over disjoint pairs `(A, B)` in canonical order
//! (`A` first, then `B`); witness searches return the first admissible pair
//! `(U, V)` in the same order.

use crate::classes::{ClassLabel, Classifier};
use crate::error::Result;
use crate::space::PointSet;
use crate::SandwichReading;

/// Disjoint sets of class `kind` containing the two sides of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparationWitness {
    pub left: PointSet,
    pub right: PointSet,
    pub kind: ClassLabel,
}

impl SeparationWitness {
    /// Re-checks disjointness, class membership and containment of `a`, `b`.
    pub fn verify(&self, classifier: &Classifier<'_>, a: &PointSet, b: &PointSet) -> Result<bool> {
        Ok(self.left.is_disjoint(&self.right)
            && a.is_subset(&self.left)
            && b.is_subset(&self.right)
            && classifier.holds(self.kind, &self.left)?
            && classifier.holds(self.kind, &self.right)?)
    }
}

/// A set `m` of class `kind` with `I ⊆ m` and the bounding closure inside `J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SandwichWitness {
    pub m: PointSet,
    /// `SC*-cl(m)`.
    pub closure: PointSet,
    pub kind: ClassLabel,
}

/// Outcome of a separation property: on failure, the first pair that
/// cannot be separated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairVerdict {
    pub holds: bool,
    pub failing_pair: Option<(PointSet, PointSet)>,
}

impl PairVerdict {
    fn from_failure(failing_pair: Option<(PointSet, PointSet)>) -> Self {
        PairVerdict {
            holds: failing_pair.is_none(),
            failing_pair,
        }
    }
}

fn subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

/// First disjoint `(U, V)` of class `kind` with `a ⊆ U`, `b ⊆ V`.
pub fn separate(
    classifier: &Classifier<'_>,
    kind: ClassLabel,
    a: &PointSet,
    b: &PointSet,
) -> Result<Option<SeparationWitness>> {
    let space = classifier.space();
    space.check(a)?;
    space.check(b)?;
    let family = classifier.family_masks(kind);
    Ok(separate_in(&family, a.mask(), b.mask()).map(|(u, v)| SeparationWitness {
        left: space.set(u),
        right: space.set(v),
        kind,
    }))
}

fn separate_in(family: &[u32], a: u32, b: u32) -> Option<(u32, u32)> {
    family.iter().filter(|&&u| subset(a, u)).find_map(|&u| {
        family
            .iter()
            .find(|&&v| subset(b, v) && u & v == 0)
            .map(|&v| (u, v))
    })
}

/// First disjoint pair `(a, b)` with `a` in `left` and `b` in `right` that
/// has no separating pair in `family`.
fn first_unseparated(left: &[u32], right: &[u32], family: &[u32]) -> Option<(u32, u32)> {
    left.iter().find_map(|&a| {
        right
            .iter()
            .filter(|&&b| a & b == 0)
            .find(|&&b| separate_in(family, a, b).is_none())
            .map(|&b| (a, b))
    })
}

fn pair_verdict(classifier: &Classifier<'_>, right: ClassLabel, kind: ClassLabel) -> PairVerdict {
    let closed = classifier.family_masks(ClassLabel::Closed);
    let right = classifier.family_masks(right);
    let family = classifier.family_masks(kind);
    let space = classifier.space();
    PairVerdict::from_failure(
        first_unseparated(&closed, &right, &family).map(|(a, b)| (space.set(a), space.set(b))),
    )
}

/// Disjoint closed sets have disjoint open neighborhoods.
pub fn is_normal(classifier: &Classifier<'_>) -> PairVerdict {
    pair_verdict(classifier, ClassLabel::Closed, ClassLabel::Open)
}

/// A closed set and a disjoint regular closed set have disjoint open neighborhoods.
pub fn is_almost_normal(classifier: &Classifier<'_>) -> PairVerdict {
    pair_verdict(classifier, ClassLabel::RegularClosed, ClassLabel::Open)
}

/// A closed set and a disjoint regular closed set have disjoint SC*-open neighborhoods.
pub fn is_almost_sc_star_normal(classifier: &Classifier<'_>) -> PairVerdict {
    pair_verdict(classifier, ClassLabel::RegularClosed, ClassLabel::SCStarOpen)
}

/// First `m` of class `kind` with `I ⊆ m ⊆ SC*-cl(·) ⊆ J`; the middle term is
/// `SC*-cl(m)` or `SC*-cl(I)` depending on the sandwich reading.
pub fn sandwich(
    classifier: &Classifier<'_>,
    kind: ClassLabel,
    i: &PointSet,
    j: &PointSet,
) -> Result<Option<SandwichWitness>> {
    let space = classifier.space();
    space.check(i)?;
    space.check(j)?;
    let family = classifier.family_masks(kind);
    Ok(sandwich_in(classifier, &family, i.mask(), j.mask()).map(|m| SandwichWitness {
        m: space.set(m),
        closure: space.set(classifier.sc_closure_m(m)),
        kind,
    }))
}

fn sandwich_in(classifier: &Classifier<'_>, family: &[u32], i: u32, j: u32) -> Option<u32> {
    let reading = classifier.settings().sandwich;
    family.iter().copied().find(|&m| {
        if !subset(i, m) {
            return false;
        }
        let bound = match reading {
            SandwichReading::ClosureOfM => classifier.sc_closure_m(m),
            SandwichReading::ClosureOfI => classifier.sc_closure_m(i),
        };
        subset(m, bound) && subset(bound, j)
    })
}

fn sandwich_condition(classifier: &Classifier<'_>, kind: ClassLabel) -> bool {
    let closed = classifier.family_masks(ClassLabel::Closed);
    let regular_open = classifier.family_masks(ClassLabel::RegularOpen);
    let family = classifier.family_masks(kind);
    closed.iter().all(|&i| {
        regular_open
            .iter()
            .filter(|&&j| subset(i, j))
            .all(|&j| sandwich_in(classifier, &family, i, j).is_some())
    })
}

/// Condition (6): one-closed/one-regular-closed disjoint pairs in either
/// role, checked against the set of all pairs covered by disjoint SC*-open
/// pairs. Deliberately a separate code path from condition (1).
fn condition_six(classifier: &Classifier<'_>) -> bool {
    let size = classifier.space().size();
    let full = classifier.space().full_mask();
    let sc_open = classifier.family_masks(ClassLabel::SCStarOpen);
    let n = 1usize << size;
    // covered[u][v]: some disjoint SC*-open pair contains (u, v); closed
    // downward by marking the maximal pairs then propagating to subsets.
    let mut covered = vec![false; n * n];
    for &m in &sc_open {
        for &k in &sc_open {
            if m & k == 0 {
                covered[m as usize * n + k as usize] = true;
            }
        }
    }
    for a in (0..=full).rev() {
        for b in (0..=full).rev() {
            if covered[a as usize * n + b as usize] {
                for p in 0..size {
                    let bit = 1u32 << p;
                    if a & bit != 0 {
                        covered[(a & !bit) as usize * n + b as usize] = true;
                    }
                    if b & bit != 0 {
                        covered[a as usize * n + (b & !bit) as usize] = true;
                    }
                }
            }
        }
    }
    (0..=full).all(|i| {
        (0..=full).all(|j| {
            let qualifies = i & j == 0
                && ((classifier.closed_m(i) && classifier.regular_closed_m(j))
                    || (classifier.regular_closed_m(i) && classifier.closed_m(j)));
            !qualifies || covered[i as usize * n + j as usize]
        })
    })
}

/// The six equivalent characterisations of almost SC*-normality, each
/// evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem24 {
    pub conditions: [bool; 6],
}

impl Theorem24 {
    pub fn all_agree(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }
}

/// Evaluates conditions (1)–(6):
///
/// 1. almost SC*-normal;
/// 2. disjoint gSC*-open neighborhoods for disjoint (closed, regular closed);
/// 3. the same with rgSC*-open sets;
/// 4. for closed `I` inside regular open `J`, a gSC*-open sandwich `M`;
/// 5. the same with rgSC*-open `M`;
/// 6. disjoint SC*-open neighborhoods, via a separate code path.
pub fn theorem24_conditions(classifier: &Classifier<'_>) -> Theorem24 {
    Theorem24 {
        conditions: [
            is_almost_sc_star_normal(classifier).holds,
            pair_verdict(classifier, ClassLabel::RegularClosed, ClassLabel::GSCStarOpen).holds,
            pair_verdict(classifier, ClassLabel::RegularClosed, ClassLabel::RGSCStarOpen).holds,
            sandwich_condition(classifier, ClassLabel::GSCStarOpen),
            sandwich_condition(classifier, ClassLabel::RGSCStarOpen),
            condition_six(classifier),
        ],
    }
}

/// Both sides of the rgSC*-open characterisation: `a` is rgSC*-open, and
/// every regular closed `F ⊆ a` lies in `SC*-int(a)`.
pub fn lemma23_sides(classifier: &Classifier<'_>, a: &PointSet) -> Result<(bool, bool)> {
    let space = classifier.space();
    space.check(a)?;
    let m = a.mask();
    let left = classifier.rgsc_closed_m(!m & space.full_mask());
    let interior = classifier.sc_interior_m(m);
    let right = (0..=space.full_mask())
        .filter(|&f| subset(f, m) && classifier.regular_closed_m(f))
        .all(|f| subset(f, interior));
    Ok((left, right))
}

/// Whether the two sides of [`lemma23_sides`] agree at `a`.
pub fn lemma23_check(classifier: &Classifier<'_>, a: &PointSet) -> Result<bool> {
    let (l, r) = lemma23_sides(classifier, a)?;
    Ok(l == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::FiniteSpace;
    use crate::Settings;

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

    #[test]
    fn normality_examples() {
        let x = five_open_space();
        let c = Classifier::new(&x);
        let v = is_normal(&c);
        assert!(!v.holds);
        assert_eq!(v.failing_pair, Some((x.subset(&[0]).unwrap(), x.subset(&[2]).unwrap())));
        assert!(is_almost_normal(&c).holds);
        assert!(is_almost_sc_star_normal(&c).holds);

        let p = partition_space();
        let c = Classifier::new(&p);
        assert!(is_normal(&c).holds);
        assert!(is_almost_normal(&c).holds);
        assert!(is_almost_sc_star_normal(&c).holds);

        let one = FiniteSpace::discrete(1).unwrap();
        assert!(is_normal(&Classifier::new(&one)).holds);
        let two = FiniteSpace::indiscrete(2).unwrap();
        assert!(is_almost_normal(&Classifier::new(&two)).holds);
    }

    #[test]
    fn partition_space_witness() {
        let p = partition_space();
        let c = Classifier::new(&p);
        let a = p.subset(&[1]).unwrap();
        let b = p.subset(&[0]).unwrap();
        assert!(p.is_closed(&a).unwrap());
        assert!(c.is_regular_closed(&b).unwrap());
        let stated = SeparationWitness {
            left: p.subset(&[1, 2, 3]).unwrap(),
            right: p.subset(&[0]).unwrap(),
            kind: ClassLabel::Open,
        };
        assert!(stated.verify(&c, &a, &b).unwrap());
        let found = separate(&c, ClassLabel::Open, &a, &b).unwrap().unwrap();
        assert!(found.verify(&c, &a, &b).unwrap());
        assert_eq!(found.left, a);
        assert_eq!(found.right, b);
        let sc = separate(&c, ClassLabel::SCStarOpen, &a, &b).unwrap().unwrap();
        assert!(sc.verify(&c, &a, &b).unwrap());
    }

    #[test]
    fn overlapping_witness_fails_verification() {
        let p = partition_space();
        let c = Classifier::new(&p);
        let w = SeparationWitness {
            left: p.full(),
            right: p.subset(&[0]).unwrap(),
            kind: ClassLabel::Open,
        };
        assert!(!w.verify(&c, &p.subset(&[1]).unwrap(), &p.subset(&[0]).unwrap()).unwrap());
    }

    #[test]
    fn theorem24_examples() {
        for x in [five_open_space(), partition_space()] {
            let c = Classifier::new(&x);
            assert_eq!(theorem24_conditions(&c).conditions, [true; 6]);
            let lit = Classifier::with_settings(&x, Settings::literal());
            assert!(theorem24_conditions(&lit).all_agree());
        }
    }

    #[test]
    fn sandwich_witness_examples() {
        let x = partition_space();
        let c = Classifier::new(&x);
        let i = x.subset(&[1]).unwrap();
        let j = x.subset(&[1]).unwrap();
        let w = sandwich(&c, ClassLabel::GSCStarOpen, &i, &j).unwrap().unwrap();
        assert!(i.is_subset(&w.m) && w.m.is_subset(&w.closure) && w.closure.is_subset(&j));
    }

    #[test]
    fn lemma23_trivial_cases() {
        for x in [five_open_space(), partition_space(), FiniteSpace::indiscrete(3).unwrap()] {
            let c = Classifier::new(&x);
            assert_eq!(lemma23_sides(&c, &x.full()).unwrap(), (true, true));
            assert_eq!(lemma23_sides(&c, &x.empty()).unwrap(), (true, true));
        }
    }
}
