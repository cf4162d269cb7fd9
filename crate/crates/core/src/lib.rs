//! Small polygons of large area.
//!
//! A polygon is *small* when its diameter is 1. For even `n ≥ 6` this crate
//! builds `B_n`, the symmetric small `n`-gon obtained by maximizing the area
//! of a three-angle model over a single parameter, together with the
//! families it is compared against:
//!
//! - `R_n`, the regular small polygon ([`constructions::construct_regular`]),
//! - `R_{n−1}^+`, the regular `(n−1)`-gon with one added vertex,
//! - `M_n` and `M_n'`, Mossinghoff's polygons and their thin-model variant,
//! - the upper bound `Ā_n` ([`constructions::upper_bound`]).
//!
//! [`report`] reproduces the comparison table and the scaled asymptotic gaps,
//! [`oracle`] runs an independent brute-force search over all symmetric
//! polygons, and [`cli`] holds the command-line front end used by the
//! `smallgon` binary.
//!
//! ```
//! use smallgon::constructions::construct_bn;
//! use smallgon::geometry::{PolygonChecks, VERIFY_TOL};
//!
//! let b8 = construct_bn(8).unwrap();
//! assert!((b8.area - 0.7268542719).abs() < 5e-10);
//! let checks = PolygonChecks::run(b8.polygon.as_ref().unwrap(), VERIFY_TOL);
//! assert!(checks.small && checks.convex && checks.diameter_graph_optimal);
//! ```

pub mod asymptotics;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod export;
pub mod geometry;
pub mod numerics;
pub mod oracle;
pub mod report;
pub mod thin_model;

pub use constructions::{construct, ConstructionResult, Family};
pub use error::{Error, Result};
pub use geometry::{AngleSequence, Point, Polygon};
pub use thin_model::ThinParams;
