//! Exact computation of graded characters of the wreath products
//! `W(r,n) = μ_r ≀ S_n` acting on the cohomology of projective hyperplane
//! complements `M(r,n)` and of their wonderful compactifications.
//!
//! Everything is exact: coefficients live in `ℚ[q]`, series are truncated
//! by total degree, and the generators `p_i(ζ)` are indexed by the exponent
//! `k` of `ζ = ω^k`.
//!
//! Module map:
//! - [`rational`], [`poly`], [`cyclotomic`], [`series`]: coefficient rings and
//!   the truncated series ring.
//! - [`plethysm`]: the two mixed plethysms and plethystic inversion.
//! - [`reps`]: conjugacy classes, the characteristic map, irreducible
//!   characters and decomposition.
//! - [`cohomology`]: the open and closed series and their Betti numbers.
//! - [`trees`]: brute-force tree species and their cycle indices.
//! - [`json`]: the series interchange format.

pub mod cohomology;
pub mod cyclotomic;
pub mod error;
pub mod json;
pub mod plethysm;
pub mod poly;
pub mod rational;
pub mod reps;
pub mod series;
pub mod trees;

/// Version tag of the computation engine, used to key on-disk caches.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use poly::CoeffPoly;
pub use rational::Rational;
pub use series::{CycloSeries, Generator, Monomial, NaturalSeries, Series, WreathSeries};
