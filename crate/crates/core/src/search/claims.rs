//! The registry of checkable claims and the per-instance check of each.

use std::fmt;
use std::str::FromStr;

use crate::classes::Classifier;
use crate::error::Error;
use crate::maps::{MapChecker, Verdict};
use crate::separation::{is_almost_normal, is_almost_sc_star_normal, is_normal, lemma23_sides, theorem24_conditions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    C1,
    C2a,
    C2b,
    C3a,
    C3b,
    C4,
    C5a,
    C5b,
    C5c,
    C6a,
    C6b,
    C6c,
    C7a,
    C7b,
    C8,
    C9,
    C10,
    C11,
    P1,
    P2,
    X1,
    X2,
    X3,
    X4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimKind {
    SubsetImplication,
    SubsetEquivalence,
    SpaceImplication,
    MapPreservation,
    OperatorProperty,
    /// Searches for an instance; the hits are witnesses, not violations.
    Existence,
}

/// What a claim quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    Subsets,
    Spaces,
    Maps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim {
    pub id: ClaimId,
    pub kind: ClaimKind,
    pub statement: &'static str,
}

impl Claim {
    pub fn scope(&self) -> Scope {
        match self.kind {
            ClaimKind::SubsetImplication | ClaimKind::SubsetEquivalence | ClaimKind::OperatorProperty => {
                Scope::Subsets
            }
            ClaimKind::SpaceImplication => Scope::Spaces,
            ClaimKind::MapPreservation => Scope::Maps,
            ClaimKind::Existence => match self.id {
                ClaimId::X1 | ClaimId::X2 => Scope::Subsets,
                _ => Scope::Spaces,
            },
        }
    }

    pub fn is_existence(&self) -> bool {
        self.kind == ClaimKind::Existence
    }
}

use ClaimKind::*;

pub const REGISTRY: [Claim; 24] = [
    Claim { id: ClaimId::C1, kind: SubsetImplication, statement: "closed ⇒ SC*-closed" },
    Claim { id: ClaimId::C2a, kind: SubsetImplication, statement: "SC*-closed ⇒ gSC*-closed" },
    Claim { id: ClaimId::C2b, kind: SubsetImplication, statement: "gSC*-closed ⇒ SC*-closed" },
    Claim { id: ClaimId::C3a, kind: SubsetImplication, statement: "gSC*-closed ⇒ SC*g-closed" },
    Claim { id: ClaimId::C3b, kind: SubsetImplication, statement: "SC*g-closed ⇒ gSC*-closed" },
    Claim { id: ClaimId::C4, kind: SubsetImplication, statement: "closed ⇒ g-closed" },
    Claim { id: ClaimId::C5a, kind: SubsetImplication, statement: "closed ⇒ α-closed" },
    Claim { id: ClaimId::C5b, kind: SubsetImplication, statement: "α-closed ⇒ gα-closed" },
    Claim { id: ClaimId::C5c, kind: SubsetImplication, statement: "gα-closed ⇒ rgα-closed" },
    Claim { id: ClaimId::C6a, kind: SubsetImplication, statement: "α-closed ⇒ SC*-closed" },
    Claim { id: ClaimId::C6b, kind: SubsetImplication, statement: "gα-closed ⇒ gSC*-closed" },
    Claim { id: ClaimId::C6c, kind: SubsetImplication, statement: "rgα-closed ⇒ rgSC*-closed" },
    Claim { id: ClaimId::C7a, kind: SpaceImplication, statement: "normal ⇒ almost normal" },
    Claim { id: ClaimId::C7b, kind: SpaceImplication, statement: "almost normal ⇒ almost SC*-normal" },
    Claim {
        id: ClaimId::C8,
        kind: SubsetEquivalence,
        statement: "A is rgSC*-open ⇔ every regular closed F ⊆ A lies in SC*-int(A)",
    },
    Claim {
        id: ClaimId::C9,
        kind: SpaceImplication,
        statement: "the six characterisations of almost SC*-normality agree",
    },
    Claim {
        id: ClaimId::C10,
        kind: MapPreservation,
        statement: "surjective, continuous, T-SC*-open, rc-continuous, almost SC*-irresolute images of almost SC*-normal spaces are almost SC*-normal",
    },
    Claim {
        id: ClaimId::C11,
        kind: MapPreservation,
        statement: "surjective, rc-continuous, T-SC*-closed images of almost SC*-normal spaces are almost SC*-normal",
    },
    Claim { id: ClaimId::P1, kind: OperatorProperty, statement: "SC*-cl(A) is SC*-closed" },
    Claim { id: ClaimId::P2, kind: OperatorProperty, statement: "SC*-cl(SC*-cl(A)) = SC*-cl(A)" },
    Claim { id: ClaimId::X1, kind: Existence, statement: "some set is SC*-closed but not closed" },
    Claim { id: ClaimId::X2, kind: Existence, statement: "some set is g-closed but not closed" },
    Claim {
        id: ClaimId::X3,
        kind: Existence,
        statement: "some space is almost SC*-normal but not almost normal",
    },
    Claim { id: ClaimId::X4, kind: Existence, statement: "some space is almost normal but not normal" },
];

impl ClaimId {
    pub fn claim(self) -> Claim {
        REGISTRY[self as usize]
    }

    pub fn name(self) -> &'static str {
        use ClaimId::*;
        match self {
            C1 => "C1",
            C2a => "C2a",
            C2b => "C2b",
            C3a => "C3a",
            C3b => "C3b",
            C4 => "C4",
            C5a => "C5a",
            C5b => "C5b",
            C5c => "C5c",
            C6a => "C6a",
            C6b => "C6b",
            C6c => "C6c",
            C7a => "C7a",
            C7b => "C7b",
            C8 => "C8",
            C9 => "C9",
            C10 => "C10",
            C11 => "C11",
            P1 => "P1",
            P2 => "P2",
            X1 => "X1",
            X2 => "X2",
            X3 => "X3",
            X4 => "X4",
        }
    }

    pub fn all() -> impl Iterator<Item = ClaimId> {
        REGISTRY.iter().map(|c| c.id)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::all()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

/// Outcome of checking one instance: which side failed (or, for existence
/// searches, what was found) plus a short rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub failed_side: String,
    pub detail: String,
}

fn implication(hyp: bool, concl: bool, hyp_name: &str, concl_name: &str) -> Option<Hit> {
    (hyp && !concl).then(|| Hit {
        failed_side: "conclusion".into(),
        detail: format!("{hyp_name} holds but {concl_name} fails"),
    })
}

pub(crate) fn check_subset(id: ClaimId, c: &Classifier<'_>, a: u32) -> Option<Hit> {
    use ClaimId::*;
    match id {
        C1 => implication(c.closed_m(a), c.sc_closed_m(a), "closed", "SC*-closed"),
        C2a => implication(c.sc_closed_m(a), c.gsc_closed_m(a), "SC*-closed", "gSC*-closed"),
        C2b => implication(c.gsc_closed_m(a), c.sc_closed_m(a), "gSC*-closed", "SC*-closed"),
        C3a => implication(c.gsc_closed_m(a), c.scg_closed_m(a), "gSC*-closed", "SC*g-closed"),
        C3b => implication(c.scg_closed_m(a), c.gsc_closed_m(a), "SC*g-closed", "gSC*-closed"),
        C4 => implication(c.closed_m(a), c.g_closed_m(a), "closed", "g-closed"),
        C5a => implication(c.closed_m(a), c.alpha_closed_m(a), "closed", "α-closed"),
        C5b => implication(c.alpha_closed_m(a), c.g_alpha_closed_m(a), "α-closed", "gα-closed"),
        C5c => implication(c.g_alpha_closed_m(a), c.rg_alpha_closed_m(a), "gα-closed", "rgα-closed"),
        C6a => implication(c.alpha_closed_m(a), c.sc_closed_m(a), "α-closed", "SC*-closed"),
        C6b => implication(c.g_alpha_closed_m(a), c.gsc_closed_m(a), "gα-closed", "gSC*-closed"),
        C6c => implication(c.rg_alpha_closed_m(a), c.rgsc_closed_m(a), "rgα-closed", "rgSC*-closed"),
        C8 => {
            let (left, right) = lemma23_sides(c, &c.space().set(a)).ok()?;
            (left != right).then(|| Hit {
                failed_side: if left { "right" } else { "left" }.into(),
                detail: format!("rgSC*-open = {left}, regular closed subsets inside SC*-int = {right}"),
            })
        }
        P1 => {
            let r = c.sc_closure_m(a);
            (!c.sc_closed_m(r)).then(|| Hit {
                failed_side: "conclusion".into(),
                detail: format!("SC*-cl = {} is not SC*-closed", c.space().set(r)),
            })
        }
        P2 => {
            let r = c.sc_closure_m(a);
            let rr = c.sc_closure_m(r);
            (r != rr).then(|| Hit {
                failed_side: "conclusion".into(),
                detail: format!("SC*-cl = {} but SC*-cl of that is {}", c.space().set(r), c.space().set(rr)),
            })
        }
        X1 => (c.sc_closed_m(a) && !c.closed_m(a)).then(|| Hit {
            failed_side: "witness".into(),
            detail: "SC*-closed and not closed".into(),
        }),
        X2 => (c.g_closed_m(a) && !c.closed_m(a)).then(|| Hit {
            failed_side: "witness".into(),
            detail: "g-closed and not closed".into(),
        }),
        _ => None,
    }
}

fn pair_text(pair: Option<(crate::PointSet, crate::PointSet)>) -> String {
    pair.map(|(a, b)| format!(" (unseparated pair {a}, {b})")).unwrap_or_default()
}

pub(crate) fn check_space(id: ClaimId, c: &Classifier<'_>) -> Option<Hit> {
    use ClaimId::*;
    match id {
        C7a => {
            let normal = is_normal(c);
            let almost = is_almost_normal(c);
            (normal.holds && !almost.holds).then(|| Hit {
                failed_side: "conclusion".into(),
                detail: format!("normal but not almost normal{}", pair_text(almost.failing_pair)),
            })
        }
        C7b => {
            let almost = is_almost_normal(c);
            let sc = is_almost_sc_star_normal(c);
            (almost.holds && !sc.holds).then(|| Hit {
                failed_side: "conclusion".into(),
                detail: format!("almost normal but not almost SC*-normal{}", pair_text(sc.failing_pair)),
            })
        }
        C9 => {
            let t = theorem24_conditions(c);
            (!t.all_agree()).then(|| Hit {
                failed_side: format!("conditions {}", render_conditions(&t.conditions)),
                detail: format!("condition values {:?}", t.conditions),
            })
        }
        X3 => {
            let almost = is_almost_normal(c);
            (is_almost_sc_star_normal(c).holds && !almost.holds).then(|| Hit {
                failed_side: "witness".into(),
                detail: format!("almost SC*-normal, not almost normal{}", pair_text(almost.failing_pair)),
            })
        }
        X4 => {
            let normal = is_normal(c);
            (is_almost_normal(c).holds && !normal.holds).then(|| Hit {
                failed_side: "witness".into(),
                detail: format!("almost normal, not normal{}", pair_text(normal.failing_pair)),
            })
        }
        _ => None,
    }
}

fn render_conditions(conditions: &[bool; 6]) -> String {
    conditions
        .iter()
        .enumerate()
        .map(|(i, &v)| format!("({})={}", i + 1, if v { "T" } else { "F" }))
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn check_map(id: ClaimId, checker: &MapChecker<'_>) -> Option<Hit> {
    let verdict = match id {
        ClaimId::C10 => checker.check_theorem_3_1(),
        ClaimId::C11 => checker.check_theorem_3_2(),
        _ => return None,
    };
    match verdict {
        Verdict::Counterexample { failing_pair: (a, b) } => Some(Hit {
            failed_side: "conclusion".into(),
            detail: format!("all hypotheses hold but the codomain cannot separate {a} and {b}"),
        }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_indexed_by_id() {
        for (i, c) in REGISTRY.iter().enumerate() {
            assert_eq!(c.id as usize, i);
            assert_eq!(c.id.name().parse::<ClaimId>().unwrap(), c.id);
        }
        assert!(matches!("C99".parse::<ClaimId>(), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn scopes() {
        assert_eq!(ClaimId::C1.claim().scope(), Scope::Subsets);
        assert_eq!(ClaimId::C8.claim().scope(), Scope::Subsets);
        assert_eq!(ClaimId::C9.claim().scope(), Scope::Spaces);
        assert_eq!(ClaimId::C10.claim().scope(), Scope::Maps);
        assert_eq!(ClaimId::X1.claim().scope(), Scope::Subsets);
        assert_eq!(ClaimId::X4.claim().scope(), Scope::Spaces);
    }
}
