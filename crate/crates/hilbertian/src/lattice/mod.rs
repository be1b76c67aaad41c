//! Lattice-side construction of the discrete state sets: 24-cell, Gosset
//! shell with its Hopf fibration, and higher E8 shells.

pub mod e8;
pub mod gosset;
pub mod quat;

pub use e8::{
    bloch_ball_discretization, e8_shell, shell_concurrence_spectrum, shell_count_formula,
    visible_filter, BlochPoint, E8Point,
};
pub use gosset::{
    classify_entanglement, concurrence, crosscheck_with_polytope, gosset_shell, hopf_map,
    one_qubit_physical_states, pair_to_state, physical_states, polytope_24cell, BasePoint,
    CellVariant, CrosscheckReport, EntanglementClass, QuaternionPair, Ray,
};
pub use quat::Quaternion;
