//! Exact computations with finite groups and their covering groups.
//!
//! The crate is organised around a handful of substrates:
//!
//! * [`group`] — finite groups as validated Cayley tables, with subgroup,
//!   series, quotient and isomorphism machinery;
//! * [`lattice`] — arbitrary-precision integer matrices, Smith normal form
//!   and finitely generated abelian groups;
//! * [`fp`] — words, finite presentations, Todd–Coxeter coset enumeration
//!   and free-product normal forms;
//! * [`homology`] — Schur multipliers by two independent algorithms,
//!   induced maps, universal 2-cocycles and relation-module splittings;
//! * [`covers`] — verbal/marginal subgroups, the stem-cover checker and
//!   both covering-group constructions;
//! * [`products`] — second nilpotent products, Sylow-decomposition covers
//!   and regular-product covers for small families;
//! * [`colimits`] — directed systems, direct limits, induced systems of
//!   covers and the colimit/cover compatibility checks.
//!
//! All values are immutable once constructed and all operations are pure,
//! so shared references may be used freely across threads.
//!
//! Maps compose left to right throughout: `compose(f, g)` applies `f`
//! first. This matches the right-action convention used for coset tables.

pub mod colimits;
pub mod covers;
pub mod error;
pub mod fp;
pub mod group;
pub mod homology;
pub mod lattice;
pub mod products;

pub use error::{Error, Result};

pub use lattice::{FgAbelianGroup, Int, IntMatrix};
