//! A finite simplicial set engine with a 2-Segal horn calculus.
//!
//! The crate provides:
//!
//! - a dimension-capped presentation of simplicial sets by non-degenerate
//!   cells in Eilenberg-Zilber normal form ([`sset`], [`ordinal`]);
//! - products, joins, pushouts along monomorphisms, and isomorphism search
//!   ([`product`], [`join`], [`pushout`], [`iso`]);
//! - the combinatorial shapes of the horn calculus: broken subsets,
//!   (generalized) 2-Segal horns, polygon triangulations, iso-horns, and the
//!   edgewise shapes ([`shapes`], [`triangulation`]);
//! - a lifting-problem solver with filler-property checkers ([`lifting`]),
//!   homotopy and edge-invertibility probes ([`homotopy`]), and the
//!   constructive filler for horns augmented by an invertible edge
//!   ([`augmented`]);
//! - replayable certificates that inclusions lie in the saturated class
//!   generated by 2-Segal horn inclusions, plus verified retract and
//!   pushout-join identities ([`cert`], [`retracts`]);
//! - nerves, path spaces, edgewise subdivision ([`cat`], [`constructions`]);
//! - example families: the layered-forest set and the discrete Waldhausen
//!   construction on small abelian groups ([`oracles`]);
//! - JSON encodings for all of the above ([`json`]).

pub mod augmented;
pub mod cat;
pub mod cert;
pub mod constructions;
pub mod error;
pub mod homotopy;
pub mod iso;
pub mod join;
pub mod json;
pub mod lifting;
pub mod map;
pub mod materialize;
pub mod oracles;
pub mod ordinal;
pub mod product;
pub mod pushout;
pub mod retracts;
pub mod shapes;
pub mod sset;
pub mod transport;
pub mod triangulation;

pub use error::{Error, Result};
pub use map::{Inclusion, SSetMap};
pub use ordinal::{DegeneracyOp, OrdinalMap};
pub use shapes::{build_shape, delta, GeneralizedHorn, ShapeSpec};
pub use sset::{Cap, Cell, CellId, SSet, SimplexRef, Subcomplex};
pub use triangulation::Triangulation;
