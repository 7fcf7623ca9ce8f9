//! Symbolic-numeric workbench for the ten isomonodromic families of rank-2
//! connections on the projective line.
//!
//! The crate encodes each family's linear data (the z-connection matrix A,
//! the deformation matrix B, the induced flow, Hamiltonian and second-order
//! equation), derives and verifies the deformation equations by exact
//! rational-function arithmetic, verifies the ten affine monodromy cubics
//! and their singular-point tables, and certifies isomonodromy numerically
//! by monodromy-matrix invariance along integrated flows.

pub mod cubics;
pub mod cyclic;
pub mod deform;
pub mod exact;
pub mod families;
pub mod numerics;
pub mod suite;
