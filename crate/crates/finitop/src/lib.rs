//! Finite order topology, built for exhaustive verification.
//!
//! The pieces: preorders and their condensation to posets ([`order`]),
//! set-valued relations and the Γ configuration ([`relation`]),
//! downward-set families ([`ideal`]), explicit finite topologies with
//! separation and continuity checks ([`topology`]), constraint products
//! over ordered index sets ([`mahavier`]), and a verification suite
//! that exercises all of it on exhaustive small cases ([`verify`]).
//!
//! Everything is immutable after construction and every operation is a
//! pure function, so values can be shared freely across threads.
//!
//! Start with the `examples/` directory; each file demonstrates one
//! capability end to end.

pub mod catalog;
pub mod cli;
pub mod dot;
pub mod error;
pub mod ideal;
pub mod io;
pub mod mahavier;
pub mod order;
pub mod pointset;
pub mod relation;
pub mod topology;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::{count_ideals, enumerate_ideals, IdealFamily};
pub use mahavier::{enumerate_product, h_map, MahavierProduct};
pub use order::{Poset, Preorder, QuotientResult};
pub use pointset::PointSet;
pub use relation::SetRelation;
pub use topology::{is_continuous_pots, pots_topology, FinSpace, MinNbhds, OrderedSpace};
