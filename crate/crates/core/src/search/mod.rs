//! Enumeration of finite spaces and maps, and the claim sweeps over them.

pub mod claims;
pub mod enumerate;
pub mod sweep;

pub use claims::{Claim, ClaimId, ClaimKind, Scope, REGISTRY};
pub use enumerate::{
    assignments, canonical_form, enumerate_maps, enumerate_topologies, enumerate_up_to, up_to_homeomorphism, Method,
};
pub use sweep::{find_first, sweep_claim, CounterexampleReport, RelaxedTally, SweepConfig, SweepResult};
