//! Shared fixtures for the integration suites: published reference tables
//! for the two-qubit construction and reusable exhaustive/randomized oracle
//! checks.

#![allow(dead_code)]

use hilbertian::cyc::{CMatrix, CycAmp};
use hilbertian::pauli::PauliOp;
use hilbertian::pseudostab::enumerate_maximal;
use hilbertian::rotation::enumerate_rotations;
use hilbertian::state::StateVector;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::HashSet;

/// The fifteen maximal commuting subsets of the two-qubit Pauli set, in
/// publication order, as catalog indices plus the entangled-sector flag.
pub const SUBSET_TABLE: [([u64; 4], bool); 15] = [
    ([0, 1, 4, 5], false),
    ([0, 2, 4, 6], false),
    ([0, 3, 4, 7], false),
    ([0, 1, 8, 9], false),
    ([0, 2, 8, 10], false),
    ([0, 3, 8, 11], false),
    ([0, 1, 12, 13], false),
    ([0, 2, 12, 14], false),
    ([0, 3, 12, 15], false),
    ([0, 5, 10, 15], true),
    ([0, 5, 11, 14], true),
    ([0, 6, 9, 15], true),
    ([0, 6, 11, 13], true),
    ([0, 7, 9, 14], true),
    ([0, 7, 10, 13], true),
];

/// Seed-rotation eigenvalues labelling the four columns of the eigenvector
/// table: λ·√2 = a + ib for (a, b) below.
pub const COLUMN_EIGENVALUES: [(i64, i64); 4] = [(-1, -1), (-1, 1), (1, -1), (1, 1)];

/// The sixty reference eigenvectors, one row per subset, one column per
/// eigenvalue in `COLUMN_EIGENVALUES` order. Each amplitude is (re, im)
/// with entries in {0, ±1}.
pub const EIGENVECTOR_TABLE: [[[(i8, i8); 4]; 4]; 15] = [
    [
        [(0, 0), (0, 0), (0, 0), (1, 0)],
        [(0, 0), (1, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (1, 0), (0, 0)],
        [(1, 0), (0, 0), (0, 0), (0, 0)],
    ],
    [
        [(0, 0), (0, 0), (-1, 0), (1, 0)],
        [(-1, 0), (1, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (1, 0), (1, 0)],
        [(1, 0), (1, 0), (0, 0), (0, 0)],
    ],
    [
        [(0, 0), (0, 0), (0, 1), (1, 0)],
        [(0, 1), (1, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (0, -1), (1, 0)],
        [(0, -1), (1, 0), (0, 0), (0, 0)],
    ],
    [
        [(0, 0), (-1, 0), (0, 0), (1, 0)],
        [(0, 0), (1, 0), (0, 0), (1, 0)],
        [(-1, 0), (0, 0), (1, 0), (0, 0)],
        [(1, 0), (0, 0), (1, 0), (0, 0)],
    ],
    [
        [(1, 0), (-1, 0), (-1, 0), (1, 0)],
        [(-1, 0), (1, 0), (-1, 0), (1, 0)],
        [(-1, 0), (-1, 0), (1, 0), (1, 0)],
        [(1, 0), (1, 0), (1, 0), (1, 0)],
    ],
    [
        [(0, -1), (-1, 0), (0, 1), (1, 0)],
        [(0, 1), (1, 0), (0, 1), (1, 0)],
        [(0, 1), (-1, 0), (0, -1), (1, 0)],
        [(0, -1), (1, 0), (0, -1), (1, 0)],
    ],
    [
        [(0, 0), (0, 1), (0, 0), (1, 0)],
        [(0, 0), (0, -1), (0, 0), (1, 0)],
        [(0, 1), (0, 0), (1, 0), (0, 0)],
        [(0, -1), (0, 0), (1, 0), (0, 0)],
    ],
    [
        [(0, -1), (0, 1), (-1, 0), (1, 0)],
        [(0, 1), (0, -1), (-1, 0), (1, 0)],
        [(0, 1), (0, 1), (1, 0), (1, 0)],
        [(0, -1), (0, -1), (1, 0), (1, 0)],
    ],
    [
        [(-1, 0), (0, 1), (0, 1), (1, 0)],
        [(1, 0), (0, -1), (0, 1), (1, 0)],
        [(1, 0), (0, 1), (0, -1), (1, 0)],
        [(1, 0), (0, 1), (0, 1), (-1, 0)],
    ],
    [
        [(0, 0), (-1, 0), (1, 0), (0, 0)],
        [(-1, 0), (0, 0), (0, 0), (1, 0)],
        [(1, 0), (0, 0), (0, 0), (1, 0)],
        [(0, 0), (1, 0), (1, 0), (0, 0)],
    ],
    [
        [(0, 1), (0, 0), (0, 0), (1, 0)],
        [(0, 0), (0, -1), (1, 0), (0, 0)],
        [(0, 0), (0, 1), (1, 0), (0, 0)],
        [(0, -1), (0, 0), (0, 0), (1, 0)],
    ],
    [
        [(1, 0), (1, 0), (-1, 0), (1, 0)],
        [(-1, 0), (1, 0), (1, 0), (1, 0)],
        [(1, 0), (-1, 0), (1, 0), (1, 0)],
        [(1, 0), (1, 0), (1, 0), (-1, 0)],
    ],
    [
        [(0, 1), (0, -1), (1, 0), (1, 0)],
        [(0, 1), (0, 1), (-1, 0), (1, 0)],
        [(0, 1), (0, 1), (1, 0), (-1, 0)],
        [(0, -1), (0, 1), (1, 0), (1, 0)],
    ],
    [
        [(0, 1), (1, 0), (0, -1), (1, 0)],
        [(0, -1), (1, 0), (0, 1), (1, 0)],
        [(0, 1), (-1, 0), (0, 1), (1, 0)],
        [(0, 1), (1, 0), (0, 1), (-1, 0)],
    ],
    [
        [(-1, 0), (0, -1), (0, 1), (1, 0)],
        [(-1, 0), (0, 1), (0, -1), (1, 0)],
        [(1, 0), (0, -1), (0, -1), (1, 0)],
        [(1, 0), (0, 1), (0, 1), (1, 0)],
    ],
];

pub fn golden_state(col: &[(i8, i8); 4]) -> StateVector {
    let amps = col.iter().map(|&(re, im)| CycAmp::gauss(re as i64, im as i64, 0)).collect();
    StateVector::new(2, amps)
}

/// The entangled "magic" basis, as canonical ray representatives:
/// (|00⟩+|11⟩)/√2, i(|00⟩−|11⟩)/√2, (|01⟩+|10⟩)/√2, i(|01⟩−|10⟩)/√2.
pub fn magic_basis() -> Vec<StateVector> {
    let rows: [[i64; 8]; 4] = [
        [1, 0, 0, 0, 0, 0, 1, 0],
        [0, 1, 0, 0, 0, 0, 0, -1],
        [0, 0, 1, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, -1, 0, 0],
    ];
    rows.iter()
        .map(|r| {
            let amps =
                (0..4).map(|c| CycAmp::gauss(r[2 * c], r[2 * c + 1], 0)).collect();
            StateVector::new(2, amps).canonicalize().unwrap()
        })
        .collect()
}

/// Symbolic Pauli products agree with the dense matrix oracle, exhaustively
/// over all ordered pairs at the given system size.
pub fn check_multiply_vs_dense_exhaustive(n: u32) {
    let count = 1u64 << (2 * n);
    for i in 0..count {
        let a = PauliOp::from_index(n, i).unwrap();
        let da = a.dense_matrix().unwrap();
        for j in 0..count {
            let b = PauliOp::from_index(n, j).unwrap();
            let prod = a.multiply(&b).unwrap();
            assert_eq!(
                prod.dense_matrix().unwrap(),
                da.matmul(&b.dense_matrix().unwrap()),
                "product mismatch at n={n}, indices ({i}, {j})"
            );
        }
    }
}

/// Randomized version of the product oracle for larger systems.
pub fn check_multiply_vs_dense_random(n: u32, cases: usize, seed: u64) {
    let mut rng = StdRng::seed_from_u64(seed);
    let count = 1u64 << (2 * n);
    for _ in 0..cases {
        let a = PauliOp::from_index(n, rng.gen_range(0..count)).unwrap();
        let b = PauliOp::from_index(n, rng.gen_range(0..count)).unwrap();
        let prod = a.multiply(&b).unwrap();
        assert_eq!(
            prod.dense_matrix().unwrap(),
            a.dense_matrix().unwrap().matmul(&b.dense_matrix().unwrap()),
            "product mismatch at n={n}, indices ({}, {})",
            a.index(),
            b.index()
        );
    }
}

/// Every maximal commuting subset resolves the identity: the sum of its
/// 2^N rank-1 eigenprojectors is the identity, exactly.
pub fn check_resolution_of_identity(n: u32) {
    let dim = 1usize << n;
    let id = CMatrix::identity(dim);
    let half = CycAmp::sqrt2_pow(-2);
    for s in enumerate_maximal(n).unwrap() {
        let gens: Vec<CMatrix> =
            s.generators().iter().map(|g| g.dense_matrix().unwrap()).collect();
        let mut sum = CMatrix::zeros(dim);
        for p in 0..1u32 << n {
            let mut proj = id.clone();
            for (j, g) in gens.iter().enumerate() {
                let signed =
                    if p >> j & 1 == 0 { g.clone() } else { g.scale(-CycAmp::ONE) };
                proj = proj.matmul(&id.add(&signed).scale(half));
            }
            sum = sum.add(&proj);
        }
        assert!(sum.is_identity(), "projectors of set {} do not sum to identity", s.label());
    }
}

/// Every enumerated rotation (and its inverse) permutes the canonical state
/// set, exhaustively.
pub fn check_polytope_invariance(n: u32) {
    let states: HashSet<StateVector> =
        hilbertian::roadmap::build_polytope(n).unwrap().states().iter().cloned().collect();
    for x in enumerate_rotations(n).unwrap() {
        let inv = x.inverse().matrix().unwrap();
        for v in &states {
            let image = x.apply(v).unwrap();
            assert!(states.contains(&image), "{} maps a vertex outside the set", x.text_form());
            let back = StateVector::new(n, inv.mul_vec(image.amps())).canonicalize().unwrap();
            assert_eq!(&back, v, "{} inverse does not return the vertex", x.text_form());
        }
    }
}
