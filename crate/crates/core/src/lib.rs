//! Numerics for Orlicz-Morrey spaces.
//!
//! The crate computes norms of radially simple functions in the Nakai and
//! Sawano-Sugano-Tanaka Orlicz-Morrey spaces, their weak counterparts and the Guliyev
//! variant, and turns the inclusion theorems between those spaces into executable
//! checks:
//!
//! * [`young`]: Young functions, generalized inverses, the `≺` order.
//! * [`growth`]: growth functions, the classes G₁, G₂, G_Θ and the `⪯` order.
//! * [`geometry`]: balls and simple radial functions with exact integrals.
//! * [`norms`]: local gauges, global sweeps and characteristic-function closed forms.
//! * [`inclusion`]: sufficiency and necessity checks with explicit constants.
//! * [`cli`]: the document formats and report writers behind the `omlab` binary.
//!
//! All values are immutable and every operation is a pure function.

pub mod bisect;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod grid;
pub mod growth;
pub mod inclusion;
pub mod norms;
pub mod relation;
pub mod young;

pub use error::{Error, Result};
pub use geometry::{Ball, SimpleRadialFunction};
pub use growth::GrowthFunction;
pub use norms::{NormResult, SpaceSpec, Variant};
pub use young::YoungFunction;
