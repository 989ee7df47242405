//! Exact computation of multivariable topological Poincaré/zeta series and
//! their motivic refinements for resolution graphs of normal surface
//! singularities, in two regimes: rational trees and cusp cycles.
//!
//! Everything is exact: BigInt/BigRational arithmetic, truncated formal
//! series, and Laurent-polynomial identity checking. Each series is computed
//! by several independent routes (closed products, per-coefficient binomials,
//! inclusion-exclusion over vertex subsets, and subspace-arrangement
//! geometry), whose agreement is the test surface.

pub mod closure;
pub mod graph;
pub mod lattice;
pub mod motivic;
pub mod ratfun;
pub mod series;
pub mod verify;
pub mod zeta;
pub mod zoo;

use num_bigint::BigInt;

/// JSON encoding of a BigInt: a plain number when it fits in i64, a decimal
/// string otherwise (JSON numbers beyond 2^53 lose precision in most readers).
pub(crate) fn bigint_json(n: &BigInt) -> serde_json::Value {
    match i64::try_from(n.clone()) {
        Ok(v) => serde_json::json!(v),
        Err(_) => serde_json::Value::String(n.to_string()),
    }
}

pub use graph::{parse_graph, GraphClass, ResolutionGraph};
pub use lattice::LatticeContext;
pub use motivic::MotivicPoly;
pub use series::TruncatedSeries;
pub use zeta::{build_bundle, SeriesBundle, ZetaError};
