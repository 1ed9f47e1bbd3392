//! Exact combinatorics of the simplicial category Δ and the cyclic category
//! Λ, cyclic structures on intervals, the extension groups they classify,
//! and archimedean sets with their abstract circles.

pub mod abstract_circle;
pub mod audit;
pub mod cyclic;
pub mod cyclic_set;
pub mod error;
pub mod expr;
pub mod interval;
pub mod ordered_group;
pub mod rational;
pub mod realization;
pub mod relations;
pub mod simplicial;
pub mod tables;

pub use audit::AuditReport;
pub use cyclic::{FinMap, LambdaMap};
pub use error::{Error, Result};
pub use rational::Rational;
pub use simplicial::{DeltaMap, IntervalMap};
