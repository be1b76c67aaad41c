//! Discrete geometry of digital quantum information: maximal commuting Pauli
//! sets, their exact eigenbases (the vertices of the uniform polytopes on
//! N-qubit state space), the generalized π/2 rotation calculus over them, and
//! an independent construction of the same polytopes from the 24-cell and
//! Gosset lattice shells.

pub mod cyc;
pub mod error;
pub mod lattice;
pub mod pauli;
pub mod pseudostab;
pub mod roadmap;
pub mod rotation;
pub mod state;

pub use cyc::{CMatrix, CycAmp};
pub use error::{Error, Result};
pub use pauli::{PauliOp, SignedPauli};
pub use pseudostab::{enumerate_maximal, Pseudostabilizer, StateClass};
pub use roadmap::{build_polytope, build_roadmap, decompose_named_gate, export_dot, navigate, synthesize, GateSequence, Polytope, Roadmap};
pub use rotation::{enumerate_rotations, group_closure, make_rotation, seed_rotation, PhasedRotation, Rotation};
pub use state::{eigenbasis, EigenvaluePattern, StateVector};
