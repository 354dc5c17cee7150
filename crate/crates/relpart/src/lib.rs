//! Partitioning schemes and shellings for (relative) simplicial complexes:
//! representation, verification, exhaustive decision procedures, a gluing /
//! folding / cutting toolkit, and constructive partitioners for disks, Möbius
//! strips, annuli, the projective plane, and the dunce hat.

pub mod assembly;
pub mod cli;
pub mod complex;
pub mod constructors;
pub mod corpus;
pub mod face;
pub mod io;
pub mod label;
pub mod relative;
pub mod scheme;
pub mod search;
pub mod vectors;

/// Entry point for the `relpart` binary; returns the process exit code.
pub fn cli_main() -> i32 {
    cli::run()
}

pub use complex::Complex;
pub use face::Face;
pub use label::Label;
pub use relative::RelComplex;
pub use scheme::{Interval, PartitionScheme, ShellingOrder};
