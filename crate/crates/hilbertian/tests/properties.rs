//! Standalone property suites: algebraic oracles that the rest of the
//! construction depends on, runnable with `cargo test --test properties`.

mod common;

#[test]
fn pauli_products_match_dense_oracle_exhaustively() {
    common::check_multiply_vs_dense_exhaustive(1);
    common::check_multiply_vs_dense_exhaustive(2);
}

#[test]
fn pauli_products_match_dense_oracle_randomized_three_qubits() {
    common::check_multiply_vs_dense_random(3, 10_000, 0x5eed);
}

#[test]
fn eigenprojectors_resolve_identity() {
    for n in 1..=3 {
        common::check_resolution_of_identity(n);
    }
}

#[test]
fn rotations_preserve_the_vertex_set() {
    for n in 1..=2 {
        common::check_polytope_invariance(n);
    }
}
