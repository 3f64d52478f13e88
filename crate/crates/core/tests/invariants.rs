//! Property tests over random finite topologies with up to five points.

mod common;

use proptest::prelude::*;
use scstar::{closure, interior, validate_topology, ClassLabel, Classifier, FiniteSpace, PointSet, SetFamily, SpaceMap};

/// Closes a random family under unions and intersections and adds ∅ and X.
fn generated(n: usize, seeds: &[u32]) -> FiniteSpace {
    let full = (1u32 << n) - 1;
    let mut masks: Vec<u32> = seeds.iter().map(|s| s & full).chain([0, full]).collect();
    masks.sort_unstable();
    masks.dedup();
    loop {
        let mut next = masks.clone();
        for &a in &masks {
            for &b in &masks {
                next.extend([a | b, a & b]);
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.len() == masks.len() {
            break;
        }
        masks = next;
    }
    FiniteSpace::from_masks(n, &masks).unwrap()
}

fn space() -> impl Strategy<Value = FiniteSpace> {
    (1usize..=5).prop_flat_map(|n| prop::collection::vec(any::<u32>(), 0..6).prop_map(move |s| generated(n, &s)))
}

fn space_and_set() -> impl Strategy<Value = (FiniteSpace, PointSet)> {
    space().prop_flat_map(|x| {
        let n = x.size();
        (Just(x), 0u32..1 << n).prop_map(move |(x, m)| (x, PointSet::from_mask(m, n).unwrap()))
    })
}

proptest! {
    #[test]
    fn closure_and_interior_are_dual((x, a) in space_and_set()) {
        let cl = closure(&x, &a).unwrap();
        prop_assert!(a.is_subset(&cl));
        prop_assert_eq!(closure(&x, &cl).unwrap(), cl);
        prop_assert_eq!(interior(&x, &a).unwrap(), closure(&x, &a.complement()).unwrap().complement());
        prop_assert!(x.is_closed(&cl).unwrap());
    }

    #[test]
    fn labels_flip_under_complement((x, a) in space_and_set()) {
        let c = Classifier::new(&x);
        for label in ClassLabel::ALL {
            prop_assert_eq!(c.holds(label, &a).unwrap(), c.holds(label.dual(), &a.complement()).unwrap(), "{}", label);
        }
    }

    #[test]
    fn closure_chain((x, a) in space_and_set()) {
        let c = Classifier::new(&x);
        let scl = c.sc_star_closure(&a).unwrap();
        let semi = c.semi_closure(&a).unwrap();
        let alpha = c.alpha_closure(&a).unwrap();
        let cl = closure(&x, &a).unwrap();
        prop_assert!(a.is_subset(&semi) && semi.is_subset(&alpha) && alpha.is_subset(&cl));
        prop_assert!(a.is_subset(&scl) && scl.is_subset(&cl));
        prop_assert_eq!(c.sc_star_closure(&scl).unwrap(), scl);
        prop_assert!(c.is_sc_star_closed(&scl).unwrap());
        prop_assert_eq!(c.sc_star_interior(&a).unwrap(), c.sc_star_closure(&a.complement()).unwrap().complement());
    }

    #[test]
    fn sc_star_closure_is_monotone((x, a) in space_and_set(), extra in any::<u32>()) {
        let b = a.union(&PointSet::from_mask(extra & x.full_mask(), x.size()).unwrap());
        let c = Classifier::new(&x);
        prop_assert!(c.sc_star_closure(&a).unwrap().is_subset(&c.sc_star_closure(&b).unwrap()));
    }

    #[test]
    fn class_inclusions((x, a) in space_and_set()) {
        let c = Classifier::new(&x);
        let r = c.classify(&a).unwrap();
        let implies = |p: ClassLabel, q: ClassLabel| !r.has(p) || r.has(q);
        prop_assert!(implies(ClassLabel::RegularOpen, ClassLabel::Open));
        prop_assert!(implies(ClassLabel::Open, ClassLabel::AlphaOpen));
        prop_assert!(implies(ClassLabel::AlphaOpen, ClassLabel::SemiOpen));
        prop_assert!(implies(ClassLabel::Closed, ClassLabel::GClosed));
        prop_assert!(implies(ClassLabel::Closed, ClassLabel::SCStarClosed));
        prop_assert!(implies(ClassLabel::SCStarClosed, ClassLabel::GSCStarClosed));
        prop_assert!(implies(ClassLabel::GSCStarClosed, ClassLabel::RGSCStarClosed));
        prop_assert!(implies(ClassLabel::RegularOpen, ClassLabel::RegularlySCStarOpen));
    }

    #[test]
    fn preimage_commutes_with_complement((x, a) in space_and_set(), raw in prop::collection::vec(0usize..5, 5)) {
        let n = x.size();
        let assignment: Vec<usize> = raw[..n].iter().map(|p| p % n).collect();
        let f = SpaceMap::new(x.clone(), x.clone(), assignment).unwrap();
        prop_assert_eq!(f.preimage(&a.complement()).unwrap(), f.preimage(&a).unwrap().complement());
        prop_assert!(a.is_subset(&f.preimage(&f.image(&a).unwrap()).unwrap()));
    }

    #[test]
    fn validation_matches_naive_axioms(n in 1usize..=3, bits in any::<u64>()) {
        let total = 1u32 << n;
        let masks: Vec<u32> = (0..total).filter(|m| bits >> m & 1 == 1).collect();
        let family = SetFamily::new(n, masks.iter().map(|&m| PointSet::from_mask(m, n).unwrap())).unwrap();
        let naive = scstar_oracle::Space {
            n,
            opens: masks.iter().map(|&m| (0..n).filter(|p| m >> p & 1 == 1).collect()).collect(),
        };
        prop_assert_eq!(validate_topology(n, &family).is_ok(), naive.is_topology());
    }

    #[test]
    fn point_set_algebra(n in 1usize..=16, a in any::<u32>(), b in any::<u32>()) {
        let full = (1u32 << n) - 1;
        let x = PointSet::from_mask(a & full, n).unwrap();
        let y = PointSet::from_mask(b & full, n).unwrap();
        let xs = common::to_set(&x);
        let ys = common::to_set(&y);
        prop_assert_eq!(common::to_set(&x.union(&y)), xs.union(&ys).copied().collect());
        prop_assert_eq!(common::to_set(&x.intersection(&y)), xs.intersection(&ys).copied().collect());
        prop_assert_eq!(x.is_subset(&y), xs.is_subset(&ys));
        prop_assert_eq!(x.complement().complement(), x);
        prop_assert_eq!(x.len(), xs.len());
    }
}

#[test]
fn every_subset_is_sc_star_closed_through_five_points() {
    // c*-open U ⊇ A gives A ∪ int(cl A) ⊆ U ∪ int(cl U) = U, so the family
    // of SC*-closed sets is always the whole power set.
    for space in scstar::search::enumerate_up_to(5, scstar::search::Method::Preorder).unwrap() {
        let c = Classifier::new(&space);
        assert_eq!(c.family_of(ClassLabel::SCStarClosed).len(), 1 << space.size(), "{space}");
    }
}
