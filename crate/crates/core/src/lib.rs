//! Exact computation and exhaustive verification of two-sided Eulerian
//! polynomials.
//!
//! The crate is organized in layers:
//!
//! * [`exactpoly`]: sparse multivariate polynomials with arbitrary-precision
//!   integer coefficients, plus an exact linear solver.
//! * [`permstat`]: permutations, signed permutations and inversion sequences
//!   together with their descent statistics and rank-addressable enumeration.
//! * [`genpoly`]: the generating polynomial families, each computed by
//!   brute-force enumeration and, where a recurrence exists, by that
//!   recurrence as an independent fast path.
//! * [`gammalab`]: the Gessel gamma basis: basis elements, exact expansion,
//!   the coefficient recurrences and the nonnegativity experiment.
//! * [`verify`]: executable checks for the identities the crate is built
//!   around, producing structured reports.
//!
//! Everything is exact: there is no floating point anywhere.

pub mod exactpoly;
pub mod gammalab;
pub mod genpoly;
pub mod permstat;
mod report;
pub mod verify;
