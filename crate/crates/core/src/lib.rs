//! Finite commutative rings, their ideal lattices, and the ordered monoids
//! generated by the radical, annihilator and dualradical maps.

pub mod axioms;
pub mod catalog;
pub mod corpus;
pub mod desc;
pub mod error;
pub mod exec;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod monoid;
pub mod order;
pub mod poly;
pub mod pomonoid;
pub mod report;
pub mod ring;
pub mod verify;
pub mod word;

pub use desc::{parse_ring_description, RingDescription};
pub use error::{Error, Result};
pub use exec::Exec;
pub use ideal::Ideal;
pub use lattice::{all_ideals, IdealLattice};
pub use monoid::{generate_monoid, KReport, MapMonoid};
pub use ring::{build_ring, Elem, FiniteRing, RingOps};
pub use pomonoid::{from_presentation, is_isomorphic, odot, OrderedMonoid, RewritingPresentation};
pub use word::Generator;
