//! Burnside rings: tables of marks, ghost coordinates, restriction to
//! subgroups, unit groups and the transfer from the fused Burnside ring.

mod marks;
mod restrict;
mod transfer;
mod units;

pub use marks::{table_of_marks, BurnsideElement, GhostVector, MarkMatrix};
pub use restrict::{restrict, SubgroupRing};
pub use transfer::{transfer_tsg, SylowTransfer};
pub use units::{burnside_units, units_constant_on_blocks, DEFAULT_ENUM_CAP};
