//! Generalized open/closed set classes and their closure operators.
//!
//! Every predicate is evaluated straight from its quantified definition over
//! the enumerated subsets of the space. A [`Classifier`] memoizes the full
//! membership table of each class the first time it is needed, so sweeping
//! every subset of a space costs one table build per class.
//!
//! Derived closures (semi-, α-, SC*-closure) are intersections of the
//! enumerated supersets in the class; the result is checked for membership
//! afterwards instead of being assumed.

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::space::{FiniteSpace, PointSet, SetFamily};
use crate::{RegularAlphaDefn, Settings};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    Open,
    Closed,
    RegularOpen,
    RegularClosed,
    SemiOpen,
    SemiClosed,
    AlphaOpen,
    AlphaClosed,
    GAlphaClosed,
    GAlphaOpen,
    RGAlphaClosed,
    RGAlphaOpen,
    CStarOpen,
    CStarClosed,
    SCStarOpen,
    SCStarClosed,
    GClosed,
    GOpen,
    GSCStarClosed,
    GSCStarOpen,
    SCStarGClosed,
    SCStarGOpen,
    RegularlySCStarOpen,
    RegularlySCStarClosed,
    RGSCStarClosed,
    RGSCStarOpen,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 26] = [
        ClassLabel::Open,
        ClassLabel::Closed,
        ClassLabel::RegularOpen,
        ClassLabel::RegularClosed,
        ClassLabel::SemiOpen,
        ClassLabel::SemiClosed,
        ClassLabel::AlphaOpen,
        ClassLabel::AlphaClosed,
        ClassLabel::GAlphaClosed,
        ClassLabel::GAlphaOpen,
        ClassLabel::RGAlphaClosed,
        ClassLabel::RGAlphaOpen,
        ClassLabel::CStarOpen,
        ClassLabel::CStarClosed,
        ClassLabel::SCStarOpen,
        ClassLabel::SCStarClosed,
        ClassLabel::GClosed,
        ClassLabel::GOpen,
        ClassLabel::GSCStarClosed,
        ClassLabel::GSCStarOpen,
        ClassLabel::SCStarGClosed,
        ClassLabel::SCStarGOpen,
        ClassLabel::RegularlySCStarOpen,
        ClassLabel::RegularlySCStarClosed,
        ClassLabel::RGSCStarClosed,
        ClassLabel::RGSCStarOpen,
    ];

    /// Identifier used on the command line and in structured output.
    pub fn name(self) -> &'static str {
        use ClassLabel::*;
        match self {
            Open => "Open",
            Closed => "Closed",
            RegularOpen => "RegularOpen",
            RegularClosed => "RegularClosed",
            SemiOpen => "SemiOpen",
            SemiClosed => "SemiClosed",
            AlphaOpen => "AlphaOpen",
            AlphaClosed => "AlphaClosed",
            GAlphaClosed => "GAlphaClosed",
            GAlphaOpen => "GAlphaOpen",
            RGAlphaClosed => "RGAlphaClosed",
            RGAlphaOpen => "RGAlphaOpen",
            CStarOpen => "CStarOpen",
            CStarClosed => "CStarClosed",
            SCStarOpen => "SCStarOpen",
            SCStarClosed => "SCStarClosed",
            GClosed => "GClosed",
            GOpen => "GOpen",
            GSCStarClosed => "GSCStarClosed",
            GSCStarOpen => "GSCStarOpen",
            SCStarGClosed => "SCStarGClosed",
            SCStarGOpen => "SCStarGOpen",
            RegularlySCStarOpen => "RegularlySCStarOpen",
            RegularlySCStarClosed => "RegularlySCStarClosed",
            RGSCStarClosed => "RGSCStarClosed",
            RGSCStarOpen => "RGSCStarOpen",
        }
    }

    /// Conventional mathematical spelling, e.g. `gSC*-closed`.
    pub fn notation(self) -> &'static str {
        use ClassLabel::*;
        match self {
            Open => "open",
            Closed => "closed",
            RegularOpen => "r-open",
            RegularClosed => "r-closed",
            SemiOpen => "s-open",
            SemiClosed => "s-closed",
            AlphaOpen => "α-open",
            AlphaClosed => "α-closed",
            GAlphaClosed => "gα-closed",
            GAlphaOpen => "gα-open",
            RGAlphaClosed => "rgα-closed",
            RGAlphaOpen => "rgα-open",
            CStarOpen => "c*-open",
            CStarClosed => "c*-closed",
            SCStarOpen => "SC*-open",
            SCStarClosed => "SC*-closed",
            GClosed => "g-closed",
            GOpen => "g-open",
            GSCStarClosed => "gSC*-closed",
            GSCStarOpen => "gSC*-open",
            SCStarGClosed => "SC*g-closed",
            SCStarGOpen => "SC*g-open",
            RegularlySCStarOpen => "regularly SC*-open",
            RegularlySCStarClosed => "regularly SC*-closed",
            RGSCStarClosed => "rgSC*-closed",
            RGSCStarOpen => "rgSC*-open",
        }
    }

    /// The class of complements.
    pub fn dual(self) -> ClassLabel {
        use ClassLabel::*;
        match self {
            Open => Closed,
            Closed => Open,
            RegularOpen => RegularClosed,
            RegularClosed => RegularOpen,
            SemiOpen => SemiClosed,
            SemiClosed => SemiOpen,
            AlphaOpen => AlphaClosed,
            AlphaClosed => AlphaOpen,
            GAlphaClosed => GAlphaOpen,
            GAlphaOpen => GAlphaClosed,
            RGAlphaClosed => RGAlphaOpen,
            RGAlphaOpen => RGAlphaClosed,
            CStarOpen => CStarClosed,
            CStarClosed => CStarOpen,
            SCStarOpen => SCStarClosed,
            SCStarClosed => SCStarOpen,
            GClosed => GOpen,
            GOpen => GClosed,
            GSCStarClosed => GSCStarOpen,
            GSCStarOpen => GSCStarClosed,
            SCStarGClosed => SCStarGOpen,
            SCStarGOpen => SCStarGClosed,
            RegularlySCStarOpen => RegularlySCStarClosed,
            RegularlySCStarClosed => RegularlySCStarOpen,
            RGSCStarClosed => RGSCStarOpen,
            RGSCStarOpen => RGSCStarClosed,
        }
    }

    pub fn is_open_side(self) -> bool {
        self.notation().ends_with("open")
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassLabel::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s) || l.notation().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown class label {s:?}"))
    }
}

/// The labels a subset satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub space: FiniteSpace,
    pub subset: PointSet,
    pub labels: BTreeSet<ClassLabel>,
}

impl ClassificationReport {
    pub fn has(&self, label: ClassLabel) -> bool {
        self.labels.contains(&label)
    }
}

/// Smallest-superset result of a derived closure, with a membership check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureOutcome {
    pub set: PointSet,
    /// Whether `set` itself belongs to the class it was built from.
    pub in_family: bool,
}

type Table<T> = OnceCell<Vec<T>>;

#[derive(Default)]
struct Memo {
    regular_open: Table<bool>,
    semi_open: Table<bool>,
    alpha_open: Table<bool>,
    c_star_open: Table<bool>,
    semi_closure: Table<u32>,
    alpha_closure: Table<u32>,
    sc_closed: Table<bool>,
    sc_closure: Table<u32>,
    sc_interior: Table<u32>,
    g_closed: Table<bool>,
    gsc_closed: Table<bool>,
    scg_closed: Table<bool>,
    regularly_sc_open: Table<bool>,
    rgsc_closed: Table<bool>,
    g_alpha_closed: Table<bool>,
    regularly_alpha_open: Table<bool>,
    rg_alpha_closed: Table<bool>,
}

/// Decides set classes in one space, memoizing each class table on first use.
///
/// Not `Sync`: a classifier belongs to one worker. Build one per space.
pub struct Classifier<'s> {
    space: &'s FiniteSpace,
    settings: Settings,
    memo: Memo,
}

impl<'s> Classifier<'s> {
    pub fn new(space: &'s FiniteSpace) -> Self {
        Self::with_settings(space, Settings::default())
    }

    pub fn with_settings(space: &'s FiniteSpace, settings: Settings) -> Self {
        Classifier {
            space,
            settings,
            memo: Memo::default(),
        }
    }

    pub fn space(&self) -> &'s FiniteSpace {
        self.space
    }

    pub fn settings(&self) -> Settings {
        self.settings
    }

    fn full(&self) -> u32 {
        self.space.full_mask()
    }

    fn build<'a, T, F>(&self, cell: &'a Table<T>, f: F) -> &'a [T]
    where
        F: FnMut(u32) -> T,
    {
        cell.get_or_init(|| (0..=self.full()).map(f).collect())
    }

    fn int(&self, a: u32) -> u32 {
        self.space.interior_mask(a)
    }

    fn cl(&self, a: u32) -> u32 {
        self.space.closure_mask(a)
    }

    // ---- mask-level predicates, shared with the other modules ----

    pub(crate) fn open_m(&self, a: u32) -> bool {
        self.space.is_open_mask(a)
    }

    pub(crate) fn closed_m(&self, a: u32) -> bool {
        self.space.is_open_mask(!a & self.full())
    }

    pub(crate) fn regular_open_m(&self, a: u32) -> bool {
        self.build(&self.memo.regular_open, |m| m == self.int(self.cl(m)))[a as usize]
    }

    pub(crate) fn regular_closed_m(&self, a: u32) -> bool {
        a == self.cl(self.int(a))
    }

    pub(crate) fn semi_open_m(&self, a: u32) -> bool {
        self.build(&self.memo.semi_open, |m| subset(m, self.cl(self.int(m))))[a as usize]
    }

    pub(crate) fn semi_closed_m(&self, a: u32) -> bool {
        self.semi_open_m(!a & self.full())
    }

    pub(crate) fn alpha_open_m(&self, a: u32) -> bool {
        self.build(&self.memo.alpha_open, |m| subset(m, self.int(self.cl(self.int(m)))))[a as usize]
    }

    pub(crate) fn alpha_closed_m(&self, a: u32) -> bool {
        self.alpha_open_m(!a & self.full())
    }

    pub(crate) fn c_star_open_m(&self, a: u32) -> bool {
        self.build(&self.memo.c_star_open, |m| {
            subset(self.int(self.cl(m)), m) && subset(m, self.cl(self.int(m)))
        })[a as usize]
    }

    pub(crate) fn c_star_closed_m(&self, a: u32) -> bool {
        self.c_star_open_m(!a & self.full())
    }

    fn members(&self, pred: impl Fn(u32) -> bool) -> Vec<u32> {
        (0..=self.full()).filter(|&m| pred(m)).collect()
    }

    fn intersect_supersets(&self, family: &[u32], a: u32) -> u32 {
        family
            .iter()
            .filter(|&&s| subset(a, s))
            .fold(self.full(), |acc, &s| acc & s)
    }

    pub(crate) fn semi_closure_m(&self, a: u32) -> u32 {
        self.memo
            .semi_closure
            .get_or_init(|| {
                let family = self.members(|m| self.semi_closed_m(m));
                (0..=self.full()).map(|m| self.intersect_supersets(&family, m)).collect()
            })[a as usize]
    }

    pub(crate) fn alpha_closure_m(&self, a: u32) -> u32 {
        self.memo
            .alpha_closure
            .get_or_init(|| {
                let family = self.members(|m| self.alpha_closed_m(m));
                (0..=self.full()).map(|m| self.intersect_supersets(&family, m)).collect()
            })[a as usize]
    }

    pub(crate) fn alpha_interior_m(&self, a: u32) -> u32 {
        !self.alpha_closure_m(!a & self.full()) & self.full()
    }

    pub(crate) fn sc_closed_m(&self, a: u32) -> bool {
        self.memo
            .sc_closed
            .get_or_init(|| {
                let c_star = self.members(|m| self.c_star_open_m(m));
                (0..=self.full())
                    .map(|m| trapped(self.semi_closure_m(m), m, &c_star))
                    .collect()
            })[a as usize]
    }

    pub(crate) fn sc_open_m(&self, a: u32) -> bool {
        self.sc_closed_m(!a & self.full())
    }

    pub(crate) fn sc_closure_m(&self, a: u32) -> u32 {
        self.memo
            .sc_closure
            .get_or_init(|| {
                let family = self.members(|m| self.sc_closed_m(m));
                (0..=self.full()).map(|m| self.intersect_supersets(&family, m)).collect()
            })[a as usize]
    }

    pub(crate) fn sc_interior_m(&self, a: u32) -> u32 {
        self.memo
            .sc_interior
            .get_or_init(|| {
                let family = self.members(|m| self.sc_open_m(m));
                (0..=self.full())
                    .map(|m| {
                        family
                            .iter()
                            .filter(|&&u| subset(u, m))
                            .fold(0, |acc, &u| acc | u)
                    })
                    .collect()
            })[a as usize]
    }

    pub(crate) fn g_closed_m(&self, a: u32) -> bool {
        self.memo
            .g_closed
            .get_or_init(|| {
                let opens: Vec<u32> = self.space.opens().masks().collect();
                (0..=self.full()).map(|m| trapped(self.cl(m), m, &opens)).collect()
            })[a as usize]
    }

    pub(crate) fn gsc_closed_m(&self, a: u32) -> bool {
        self.memo
            .gsc_closed
            .get_or_init(|| {
                let opens: Vec<u32> = self.space.opens().masks().collect();
                (0..=self.full())
                    .map(|m| trapped(self.sc_closure_m(m), m, &opens))
                    .collect()
            })[a as usize]
    }

    pub(crate) fn scg_closed_m(&self, a: u32) -> bool {
        self.memo
            .scg_closed
            .get_or_init(|| {
                let sc_open = self.members(|m| self.sc_open_m(m));
                (0..=self.full())
                    .map(|m| trapped(self.sc_closure_m(m), m, &sc_open))
                    .collect()
            })[a as usize]
    }

    pub(crate) fn regularly_sc_open_m(&self, a: u32) -> bool {
        self.memo
            .regularly_sc_open
            .get_or_init(|| {
                let regular = self.members(|m| self.regular_open_m(m));
                (0..=self.full())
                    .map(|m| {
                        regular
                            .iter()
                            .any(|&u| subset(u, m) && subset(m, self.sc_closure_m(u)))
                    })
                    .collect()
            })[a as usize]
    }

    pub(crate) fn rgsc_closed_m(&self, a: u32) -> bool {
        self.memo
            .rgsc_closed
            .get_or_init(|| {
                let family = self.members(|m| self.regularly_sc_open_m(m));
                (0..=self.full())
                    .map(|m| trapped(self.sc_closure_m(m), m, &family))
                    .collect()
            })[a as usize]
    }

    pub(crate) fn g_alpha_closed_m(&self, a: u32) -> bool {
        self.memo
            .g_alpha_closed
            .get_or_init(|| {
                let family = self.members(|m| self.alpha_open_m(m));
                (0..=self.full())
                    .map(|m| trapped(self.alpha_closure_m(m), m, &family))
                    .collect()
            })[a as usize]
    }

    pub(crate) fn regularly_alpha_open_m(&self, a: u32) -> bool {
        self.memo
            .regularly_alpha_open
            .get_or_init(|| match self.settings.regular_alpha {
                RegularAlphaDefn::Analogy => {
                    let regular = self.members(|m| self.regular_open_m(m));
                    (0..=self.full())
                        .map(|m| {
                            regular
                                .iter()
                                .any(|&u| subset(u, m) && subset(m, self.alpha_closure_m(u)))
                        })
                        .collect()
                }
                RegularAlphaDefn::AlphaIntAlphaCl => (0..=self.full())
                    .map(|m| m == self.alpha_interior_m(self.alpha_closure_m(m)))
                    .collect(),
            })[a as usize]
    }

    pub(crate) fn rg_alpha_closed_m(&self, a: u32) -> bool {
        self.memo
            .rg_alpha_closed
            .get_or_init(|| {
                let family = self.members(|m| self.regularly_alpha_open_m(m));
                (0..=self.full())
                    .map(|m| trapped(self.alpha_closure_m(m), m, &family))
                    .collect()
            })[a as usize]
    }

    pub(crate) fn holds_m(&self, label: ClassLabel, a: u32) -> bool {
        use ClassLabel::*;
        let co = !a & self.full();
        match label {
            Open => self.open_m(a),
            Closed => self.closed_m(a),
            RegularOpen => self.regular_open_m(a),
            RegularClosed => self.regular_closed_m(a),
            SemiOpen => self.semi_open_m(a),
            SemiClosed => self.semi_closed_m(a),
            AlphaOpen => self.alpha_open_m(a),
            AlphaClosed => self.alpha_closed_m(a),
            GAlphaClosed => self.g_alpha_closed_m(a),
            GAlphaOpen => self.g_alpha_closed_m(co),
            RGAlphaClosed => self.rg_alpha_closed_m(a),
            RGAlphaOpen => self.rg_alpha_closed_m(co),
            CStarOpen => self.c_star_open_m(a),
            CStarClosed => self.c_star_closed_m(a),
            SCStarOpen => self.sc_open_m(a),
            SCStarClosed => self.sc_closed_m(a),
            GClosed => self.g_closed_m(a),
            GOpen => self.g_closed_m(co),
            GSCStarClosed => self.gsc_closed_m(a),
            GSCStarOpen => self.gsc_closed_m(co),
            SCStarGClosed => self.scg_closed_m(a),
            SCStarGOpen => self.scg_closed_m(co),
            RegularlySCStarOpen => self.regularly_sc_open_m(a),
            RegularlySCStarClosed => self.regularly_sc_open_m(co),
            RGSCStarClosed => self.rgsc_closed_m(a),
            RGSCStarOpen => self.rgsc_closed_m(co),
        }
    }

    pub(crate) fn family_masks(&self, label: ClassLabel) -> Vec<u32> {
        self.members(|m| self.holds_m(label, m))
    }

    pub(crate) fn sc_neighborhood_m(&self, n: u32, point: usize) -> bool {
        let bit = 1u32 << point;
        (0..=self.full()).any(|u| u & bit != 0 && subset(u, n) && self.sc_open_m(u))
    }

    // ---- public, ground-checked API ----

    fn checked<T>(&self, a: &PointSet, f: impl FnOnce(u32) -> T) -> Result<T> {
        self.space.check(a)?;
        Ok(f(a.mask()))
    }

    fn set(&self, mask: u32) -> PointSet {
        self.space.set(mask)
    }

    pub fn holds(&self, label: ClassLabel, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.holds_m(label, m))
    }

    /// `a = int(cl(a))`.
    pub fn is_regular_open(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.regular_open_m(m))
    }

    /// `a = cl(int(a))`.
    pub fn is_regular_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.regular_closed_m(m))
    }

    /// `a ⊆ cl(int(a))`.
    pub fn is_semi_open(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.semi_open_m(m))
    }

    pub fn is_semi_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.semi_closed_m(m))
    }

    /// Intersection of all semi-closed supersets. Fails with
    /// [`Error::ClosureDefect`] if the result is not itself semi-closed.
    pub fn semi_closure(&self, a: &PointSet) -> Result<PointSet> {
        self.space.check(a)?;
        let r = self.semi_closure_m(a.mask());
        if !self.semi_closed_m(r) {
            return Err(Error::ClosureDefect {
                operator: "semi-closure",
                subset: *a,
                result: self.set(r),
            });
        }
        Ok(self.set(r))
    }

    /// `a ⊆ int(cl(int(a)))`.
    pub fn is_alpha_open(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.alpha_open_m(m))
    }

    pub fn is_alpha_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.alpha_closed_m(m))
    }

    /// Intersection of all α-closed supersets, checked to be α-closed.
    pub fn alpha_closure(&self, a: &PointSet) -> Result<PointSet> {
        self.space.check(a)?;
        let r = self.alpha_closure_m(a.mask());
        if !self.alpha_closed_m(r) {
            return Err(Error::ClosureDefect {
                operator: "α-closure",
                subset: *a,
                result: self.set(r),
            });
        }
        Ok(self.set(r))
    }

    /// `int(cl(a)) ⊆ a ⊆ cl(int(a))`.
    pub fn is_c_star_open(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.c_star_open_m(m))
    }

    pub fn is_c_star_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.c_star_closed_m(m))
    }

    /// Every c*-open superset of `a` contains the semi-closure of `a`.
    pub fn is_sc_star_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.sc_closed_m(m))
    }

    pub fn is_sc_star_open(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.sc_open_m(m))
    }

    /// Intersection of all SC*-closed supersets of `a`.
    pub fn sc_star_closure(&self, a: &PointSet) -> Result<PointSet> {
        self.checked(a, |m| self.set(self.sc_closure_m(m)))
    }

    /// Like [`Classifier::sc_star_closure`], also reporting whether the
    /// intersection is itself SC*-closed.
    pub fn sc_star_closure_outcome(&self, a: &PointSet) -> Result<ClosureOutcome> {
        self.checked(a, |m| {
            let r = self.sc_closure_m(m);
            ClosureOutcome {
                set: self.set(r),
                in_family: self.sc_closed_m(r),
            }
        })
    }

    /// Union of all SC*-open subsets of `a`.
    pub fn sc_star_interior(&self, a: &PointSet) -> Result<PointSet> {
        self.checked(a, |m| self.set(self.sc_interior_m(m)))
    }

    pub fn is_g_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.g_closed_m(m))
    }

    pub fn is_gsc_star_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.gsc_closed_m(m))
    }

    pub fn is_sc_star_g_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.scg_closed_m(m))
    }

    /// Some regular open `u` has `u ⊆ a ⊆ SC*-cl(u)`.
    pub fn is_regularly_sc_star_open(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.regularly_sc_open_m(m))
    }

    pub fn is_regularly_sc_star_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.regularly_sc_open_m(!m & self.full()))
    }

    pub fn is_rgsc_star_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.rgsc_closed_m(m))
    }

    pub fn is_rgsc_star_open(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.rgsc_closed_m(!m & self.full()))
    }

    pub fn is_g_alpha_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.g_alpha_closed_m(m))
    }

    /// Per [`Settings::regular_alpha`].
    pub fn is_regularly_alpha_open(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.regularly_alpha_open_m(m))
    }

    pub fn is_rg_alpha_closed(&self, a: &PointSet) -> Result<bool> {
        self.checked(a, |m| self.rg_alpha_closed_m(m))
    }

    /// Some SC*-open `u` has `point ∈ u ⊆ n`.
    pub fn is_sc_star_neighborhood(&self, n: &PointSet, point: usize) -> Result<bool> {
        self.space.check(n)?;
        if point >= self.space.size() {
            return Err(Error::PointOutOfRange {
                point,
                size: self.space.size(),
            });
        }
        Ok(self.sc_neighborhood_m(n.mask(), point))
    }

    pub fn classify(&self, a: &PointSet) -> Result<ClassificationReport> {
        self.space.check(a)?;
        let labels = ClassLabel::ALL
            .into_iter()
            .filter(|&l| self.holds_m(l, a.mask()))
            .collect();
        Ok(ClassificationReport {
            space: self.space.clone(),
            subset: *a,
            labels,
        })
    }

    /// All subsets in the class, canonically ordered.
    pub fn family_of(&self, label: ClassLabel) -> SetFamily {
        SetFamily::from_masks_unchecked(self.space.size(), self.family_masks(label))
    }
}

fn subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

/// `closure ⊆ u` for every `u` in `family` that contains `a`.
fn trapped(closure: u32, a: u32, family: &[u32]) -> bool {
    family
        .iter()
        .filter(|&&u| subset(a, u))
        .all(|&u| subset(closure, u))
}
