//! Finite spectral spaces and the patch topology.
//!
//! A finite spectral space is a finite poset read through its specialization
//! order: `x <= y` means `y` lies in the closure of `{x}`. Closed sets are the
//! up-sets, open sets are the down-sets, and the patch topology is discrete.
//! The interesting questions start once several finite spaces are glued into a
//! sequential inverse limit ([`prospace`]) or once only a dense fragment of a
//! space is known together with traces of its supports ([`support`]).
//!
//! Modules:
//!
//! * [`finspace`]: posets, subsets, spectral maps, Hochster duality, patch
//!   density and the three-way density lemma.
//! * [`lattice`]: finite distributive lattices of subsets and their spectral
//!   closure, computed both through join-irreducibles and through the
//!   evaluation map into a product of Sierpiński spaces.
//! * [`prospace`]: sequential limits of finite posets, level-presented
//!   constructible sets, sections and density verdicts.
//! * [`support`]: formal object terms with Thomason supports, distinguishing
//!   families, ideal shadows and reconstruction from a dense subset.
//! * [`enumerate`]: small posets up to isomorphism and seeded random
//!   generators for exhaustive and randomized checks.

pub mod enumerate;
mod error;
pub mod finspace;
pub mod lattice;
pub mod prospace;
pub mod support;

pub use error::{Error, Result};
pub use finspace::{DenseEpi, FinPoset, PointMap, SpectralMap, Subset};
pub use lattice::{ClosureResult, Realization, SetLattice};
pub use prospace::{
    DenseFamily, LevelSet, ProDensity, ProPoint, ProSpace, Rule, Sections, SingletonVerdict,
    Visibility, DEFAULT_DEPTH,
};
pub use support::{
    DistinguishReport, IdealShadow, InjectivityReport, MapFamily, ObjectTerm, Probe,
    Reconstruction, SupportDatum, TermCatalog, DEFAULT_BOUND,
};
