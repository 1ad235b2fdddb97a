//! selab: exact computations with finite groups — subgroup lattices,
//! internal actions, split extensions, and the cores that connect them.
//!
//! Groups are full multiplication tables validated against the group
//! axioms; every operation on top of them is exact. The crate covers:
//!
//! - [`group`], [`hom`], [`aut`]: group construction (a catalog of
//!   cyclic, dihedral, symmetric, alternating and quaternion groups plus
//!   products and Cayley-table files), homomorphism enumeration by
//!   generator-image backtracking, automorphism groups;
//! - [`subgroup`]: the subgroup lattice — generation by fixpoint
//!   closure, meets and joins, normality, Higgins commutators,
//!   centralizers, normal cores computed by two independent routes;
//! - [`action`], [`extension`]: internal actions as validated tables,
//!   semidirect products, the action/split-extension equivalence, action
//!   cores, split extension cores with their terminality contract, and
//!   the right adjoint to change of base along a split epimorphism;
//! - [`checks`]: one executable checker per verified property, each
//!   returning a replayable report;
//! - [`omega`]: a decidable fragment of the group `Z2^N x Z` carrying an
//!   infinitary operation under which bounded-support subgroups are
//!   normal but their union is not;
//! - [`catalog`], [`script`], [`suite`]: the batch surface backing the
//!   `selab` binary.
//!
//! Start with the `examples/` directory — one runnable example per
//! capability.

pub mod error;
pub mod group;
pub mod hom;
pub mod aut;
pub mod subgroup;
pub mod action;
pub mod extension;
pub mod catalog;
pub mod checks;
pub mod omega;
pub mod report;
pub mod script;
pub mod suite;

pub use action::BAction;
pub use catalog::Catalog;
pub use error::{Error, Result};
pub use extension::SplitExtension;
pub use group::{ArcGroup, FiniteGroup};
pub use hom::{GroupHom, GroupIso};
pub use omega::{OmegaElement, SeqDescriptor};
pub use report::{CheckReport, Verdict};
pub use subgroup::Subgroup;
