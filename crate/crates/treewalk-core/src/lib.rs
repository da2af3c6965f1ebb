//! Exact random-walk statistics on finite trees.
//!
//! Everything here is exact arithmetic: hitting and joining times are plain
//! integers (they always are on a tree), and quantities obtained by dividing
//! through the total degree, such as meeting times or stationary weights, are
//! arbitrary-precision rationals.
//!
//! The crate is organised around a small set of building blocks:
//!
//! * [`tree`] — the [`Tree`] type, Prüfer decoding, distances, diameter
//!   geodesics, edge splits and canonical (AHU) codes;
//! * [`spine`] — caterpillar spine decompositions;
//! * [`hitting`] — hitting times by closed formula and by exact linear solve,
//!   joining times, meeting times and a seeded Monte Carlo estimator;
//! * [`families`] — brooms, double brooms and near double brooms together
//!   with their closed-form extremal values;
//! * [`surgery`] — the three tree rewrites used to push joining times around;
//! * [`verify`] — isomorph-free enumeration of small trees and exhaustive
//!   checks of the extremal claims.
//!
//! The crate is `no_std` (with `alloc`); IO and serialization to files live
//! in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod families;
pub mod hitting;
pub mod rational;
pub mod spine;
pub mod surgery;
pub mod tree;
pub mod verify;

pub use error::Error;
pub use families::{FamilyKind, FamilySpec};
pub use hitting::{HittingProfile, McEstimate, StationaryDistribution};
pub use rational::Rational;
pub use spine::SpineDecomposition;
pub use tree::{EdgeCut, Tree};
pub use verify::{CheckStatus, LemmaCheck, VerificationReport};
