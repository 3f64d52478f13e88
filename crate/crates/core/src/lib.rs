//! Generalized open and closed set classes, almost SC*-normality, and
//! exhaustive claim checking on finite topological spaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`space`] holds finite spaces, subsets, and the interior/closure operators.
//! * [`classes`] decides every set class (semi-open, α-open, c*-open, SC*-closed,
//!   gSC*-closed, ...) through a per-space memoizing [`Classifier`].
//! * [`separation`] decides normality, almost normality and almost
//!   SC*-normality, and evaluates the six equivalent characterisations.
//! * [`maps`] handles maps between finite spaces and the preservation checks.
//! * [`search`] enumerates topologies and maps and sweeps the claim registry.

pub mod classes;
pub mod error;
pub mod maps;
pub mod search;
pub mod separation;
pub mod space;

pub use classes::{ClassLabel, ClassificationReport, Classifier};
pub use error::{Error, Result};

pub use maps::{MapChecker, MapProfile, SpaceMap, Verdict};
pub use space::{closed_sets, closure, complement, interior, validate_topology, FiniteSpace, PointSet, SetFamily};

/// How "regularly α-open" is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RegularAlphaDefn {
    /// `u ⊆ a ⊆ α-cl(u)` for some regular open `u`.
    #[default]
    Analogy,
    /// `a = α-int(α-cl(a))`.
    AlphaIntAlphaCl,
}

/// Upper bound used in the closure-sandwich conditions (4) and (5) of the
/// almost SC*-normality characterisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SandwichReading {
    /// `I ⊆ M ⊆ SC*-cl(M) ⊆ J`.
    #[default]
    ClosureOfM,
    /// `I ⊆ M ⊆ SC*-cl(I) ⊆ J`, the literal statement.
    ClosureOfI,
}

/// Which sets count as SC*-neighborhoods `N` of `f(x)` in almost SC*-irresoluteness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NeighborhoodMode {
    /// Every superset of an SC*-open set containing the point.
    #[default]
    All,
    /// Only SC*-open sets containing the point.
    ScStarOpenOnly,
}

/// Switches between the readings of the underspecified definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Settings {
    pub regular_alpha: RegularAlphaDefn,
    pub sandwich: SandwichReading,
    pub neighborhoods: NeighborhoodMode,
}

impl Settings {
    /// Literal readings of the sandwich conditions and of the neighborhood
    /// quantifier.
    pub fn literal() -> Self {
        Settings {
            regular_alpha: RegularAlphaDefn::default(),
            sandwich: SandwichReading::ClosureOfI,
            neighborhoods: NeighborhoodMode::ScStarOpenOnly,
        }
    }

    pub fn with_regular_alpha(mut self, defn: RegularAlphaDefn) -> Self {
        self.regular_alpha = defn;
        self
    }
}
