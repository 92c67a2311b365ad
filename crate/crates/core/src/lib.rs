//! Equivariant K-theoretic Schubert classes of isotropic Grassmannians of
//! types B and C, computed exactly in a truncated power series ring.
//!
//! The modules build on each other in order: [`coeffring`] (series ring and
//! formal group law), [`weylcomb`] (signed permutations and k-strict
//! partitions), [`genfun`] (one-row classes and `GP`), [`pfaffengine`]
//! (Pfaffian-sum `GX_λ`), [`localization`] (fixed-point values and GKM
//! checks) and [`basisexp`] (basis expansions).

pub mod basisexp;
pub mod coeffring;
pub mod error;
pub mod genfun;
pub mod localization;
pub mod pfaffengine;
pub mod weylcomb;

pub use coeffring::{Monomial, Rational, Series, SeriesJson, TruncationContext, Var};
pub use error::{Error, Result};
pub use genfun::LaurentSeriesU;
pub use localization::LocalizationTable;
pub use pfaffengine::KernelTable;
pub use weylcomb::{CharIndex, KStrictPartition, LieType, Root, SignedPermutation};
