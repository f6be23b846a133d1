//! Exact symbolic engine for slope invariants of trigonal and hyperelliptic
//! fibrations.
//!
//! Everything is computed in exact rational arithmetic over sparse
//! multivariate polynomials, so identities are checked by
//! subtraction-to-zero rather than by floating-point tolerance.
//!
//! Module layout:
//! - [`rational`], [`poly`]: the arithmetic kernel (arbitrary-precision
//!   rationals and sparse polynomials over named indeterminates).
//! - [`trees`]: rooted trees of special-fiber components with the
//!   combinatorial functions m, theta, gamma and their differences.
//! - [`chow`]: the birationally ruled surface, its intersection form, and
//!   the Chow ring of the P^1-bundle PV with zeta-reduction and degree map.
//! - [`invariants`]: lambda, kappa, delta for triple-cover and double-cover
//!   families, computed both from closed forms and from the Chow engine.
//! - [`boundary`]: boundary-divisor templates, contribution sums, the
//!   coefficient tables and the assembled linear relations.
//! - [`maroni`]: Maroni invariants, locus dimensions, the Bogomolov-Maroni
//!   identity and the maximal-bound criterion.
//! - [`slopes`]: bound calculators, conjecture formulas, witness families
//!   and slope reports.
//! - [`verify`]: named self-check suites used by the CLI `verify` verb and
//!   by the acceptance tests.

pub mod boundary;
pub mod chow;
pub mod error;
pub mod invariants;
pub mod maroni;
pub mod poly;
pub mod rational;
pub mod slopes;
pub mod trees;
pub mod verify;

pub use error::Error;
pub use poly::MPoly;
pub use rational::Rat;
