#![allow(dead_code)]

use scstar::search::CounterexampleReport;
use scstar::{FiniteSpace, NeighborhoodMode, PointSet, RegularAlphaDefn, SandwichReading, Settings};
use scstar_oracle::{Finding, Readings, Set, Space};

pub fn readings(settings: Settings) -> Readings {
    Readings {
        ralpha_int_cl: settings.regular_alpha == RegularAlphaDefn::AlphaIntAlphaCl,
        sandwich_closure_of_i: settings.sandwich == SandwichReading::ClosureOfI,
        neighborhoods_open_only: settings.neighborhoods == NeighborhoodMode::ScStarOpenOnly,
    }
}

/// Default, literal, and the alternative regularly-α-open reading.
pub fn all_settings() -> [Settings; 3] {
    [
        Settings::default(),
        Settings::literal(),
        Settings::default().with_regular_alpha(RegularAlphaDefn::AlphaIntAlphaCl),
    ]
}

pub fn to_oracle(space: &FiniteSpace) -> Space {
    let opens: Vec<Vec<usize>> = space.opens().iter().map(|o| o.points().collect()).collect();
    Space::new(space.size(), &opens)
}

pub fn to_set(a: &PointSet) -> Set {
    a.points().collect()
}

pub fn from_set(space: &FiniteSpace, a: &Set) -> PointSet {
    PointSet::from_points(a.iter().copied(), space.size()).unwrap()
}

pub fn lists(space: &FiniteSpace) -> Vec<Vec<usize>> {
    space.opens().iter().map(|o| o.points().collect()).collect()
}

pub fn finding(report: &CounterexampleReport) -> Finding {
    Finding {
        n: report.space.size(),
        opens: lists(&report.space),
        subset: report.subsets.first().map(|a| a.points().collect()),
        codomain: report.codomain.as_ref().map(|c| (c.size(), lists(c))),
        assignment: report.assignment.clone(),
    }
}
