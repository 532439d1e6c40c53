//! Finite-ring toolkit for clean, weakly clean and weakly exchange ideals.
//!
//! Rings are explicit operation tables over `0..n` with `0` as the zero
//! element. Constructions build such tables from smaller rings, the ideal
//! lattice and the clean-type predicates are computed by exhaustive search,
//! and `laws` checks structural statements over a catalog of small rings.
//! Localizations of `Z`, which are infinite, live in `localized`.

pub mod clean;
pub mod constructions;
pub mod ideals;
pub mod laws;
pub mod localized;
pub mod ring;

pub use ring::{FiniteRing, RingError, RingRecord};
