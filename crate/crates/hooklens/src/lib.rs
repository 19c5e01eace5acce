//! Exact and asymptotic tools for hook-length statistics of integer
//! partitions.
//!
//! The crate is organized around one family of counting problems: across all
//! partitions of n, how many cells have hook length exactly ℓ, and how does
//! that count distribute over residue classes? Three layers answer the
//! question at different scales and check each other:
//!
//! * [`partition`] — enumerative oracles: explicit partitions, hook lengths
//!   read off the diagram, and the pentagonal recurrence for p(n);
//! * [`series`] — the product generating series with a marking variable ζ,
//!   truncated exactly, plus residue-class filters (exact and
//!   root-of-unity-based);
//! * [`asym`] — Euler–Maclaurin expansions, arc integrals, and circle-method
//!   estimates describing how the residue classes equidistribute as n grows.
//!
//! [`ineq`] scans the resulting integer sequences for Turán-type and
//! Laguerre-type inequalities with exact arithmetic, and [`report`] renders
//! tables and JSON summaries for the CLI.

pub mod asym;
pub mod cnum;
pub mod ineq;
pub mod partition;
pub mod report;
pub mod series;
pub mod zeta;
