//! Constructive partitioning and shelling procedures for specific spaces:
//! disks, Möbius strips, annuli, graphs, projective planes, and dunce hats.

pub mod annulus;
pub mod disk;
pub mod dunce_hat;
pub mod graph;
pub mod mobius;
pub mod rp2;

pub use annulus::{partition_annulus, AnnulusError, AnnulusMode};
pub use disk::{shell_disk_relative, DiskError};
pub use dunce_hat::{
    detect_corner, partition_dunce_hat, partition_dunce_hat_rel_corner, DunceError,
};
pub use graph::{partition_graph_rel_empty, GraphDecision, GraphError};
pub use mobius::{partition_mobius_rel_boundary, partition_mobius_rel_empty, MobiusError};
pub use rp2::{decompose_rp2, partition_rp2, Rp2Error, Rp2Mode};
