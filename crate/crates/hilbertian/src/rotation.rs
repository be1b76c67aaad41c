//! The generalized π/2 rotations X_{jk} = (Σ_j + iΣ_k)/√2 and their algebra:
//! inverses, squares, symbolic Clifford conjugation, full enumeration and
//! projective group closure.

use crate::cyc::{CMatrix, CycAmp};
use crate::error::{Error, Result};
use crate::pauli::{PauliOp, SignedPauli};
use crate::pseudostab::Pseudostabilizer;
use crate::state::StateVector;
use serde::Serialize;
use std::collections::{HashMap, VecDeque};
use std::fmt;

/// Default cap on N for rotation enumeration.
pub const ROT_CAP: u32 = 3;

/// Default bound on projective closure size.
pub const CLOSURE_BOUND: usize = 1_000_000;

/// X_{jk} = (Σ_j + iΣ_k)/√2 for commuting, distinct, phase-0 constituents.
/// Either constituent may be the identity (the "primitive" rotations X_{0k}).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Rotation {
    j: PauliOp,
    k: PauliOp,
}

pub fn make_rotation(j: PauliOp, k: PauliOp) -> Result<Rotation> {
    if !j.commutes(&k)? {
        return Err(Error::domain(format!(
            "rotation constituents must commute: {} vs {}",
            j.number_notation(),
            k.number_notation()
        )));
    }
    if j.index() == k.index() {
        return Err(Error::domain("rotation constituents must be distinct"));
    }
    Ok(Rotation { j: j.phase0(), k: k.phase0() })
}

impl Rotation {
    pub fn j(&self) -> PauliOp {
        self.j
    }

    pub fn k(&self) -> PauliOp {
        self.k
    }

    pub fn n_qubits(&self) -> u32 {
        self.j.n_qubits()
    }

    /// True for the Hamiltonian-implementable form X_{0k}.
    pub fn is_primitive(&self) -> bool {
        self.j.is_identity()
    }

    pub fn matrix(&self) -> Result<CMatrix> {
        let mj = self.j.dense_matrix()?;
        let mk = self.k.dense_matrix()?;
        Ok(mj.add(&mk.scale(CycAmp::I)).scale(CycAmp::sqrt2_pow(-1)))
    }

    /// X^{-1} = −i·X_{kj}.
    pub fn inverse(&self) -> PhasedRotation {
        PhasedRotation { rotation: Rotation { j: self.k, k: self.j }, unit_exp: 3 }
    }

    /// X_{0k}² = i·Σ_k. General squares leave the Pauli set, so j must be the
    /// identity.
    pub fn square(&self) -> Result<SignedPauli> {
        if !self.is_primitive() {
            return Err(Error::domain(
                "square is a signed Pauli only for primitive rotations X_{0k}",
            ));
        }
        Ok(SignedPauli { pauli: self.k, unit_exp: 1 })
    }

    /// X Σ X^{-1}, computed symbolically. With ε_jl, ε_kl the commutation
    /// signs of Σ against the constituents: both equal → ε_jl·Σ; opposite →
    /// −i·ε_jl·ΣΣ_jΣ_k collapsed to a single signed Pauli.
    pub fn conjugate_pauli(&self, s: &PauliOp) -> Result<SignedPauli> {
        if s.n_qubits() != self.n_qubits() {
            return Err(Error::QubitMismatch(s.n_qubits(), self.n_qubits()));
        }
        let s = s.phase0();
        let e_jl = if s.commutes(&self.j)? { 0u8 } else { 2u8 }; // sign as power of i
        let e_kl = if s.commutes(&self.k)? { 0u8 } else { 2u8 };
        if e_jl == e_kl {
            return Ok(SignedPauli { pauli: s, unit_exp: e_jl });
        }
        let triple = s.multiply(&self.j)?.multiply(&self.k)?;
        Ok(SignedPauli {
            pauli: triple.phase0(),
            unit_exp: (3 + e_jl + triple.phase_exp()) % 4,
        })
    }

    /// X Y X^{-1} for another rotation Y: always i^m·X_{ab} where Σ_a, Σ_b are
    /// the conjugated constituents (the cyclic/anti-cyclic rule).
    pub fn conjugate_rotation(&self, y: &Rotation) -> Result<PhasedRotation> {
        let a = self.conjugate_pauli(&y.j)?;
        let b = self.conjugate_pauli(&y.k)?;
        // conjugation preserves Hermiticity, so both units are real signs
        debug_assert!(a.unit_exp % 2 == 0 && b.unit_exp % 2 == 0);
        // (s_a·Σ_a + i·s_b·Σ_b)/√2 regrouped as a unit times a rotation
        if a.unit_exp == b.unit_exp {
            Ok(PhasedRotation {
                rotation: make_rotation(a.pauli, b.pauli)?,
                unit_exp: a.unit_exp,
            })
        } else {
            // s_a·Σ_a − s_a·iΣ_b = s_a·(−i)(Σ_b + iΣ_a)
            Ok(PhasedRotation {
                rotation: make_rotation(b.pauli, a.pauli)?,
                unit_exp: (a.unit_exp + 3) % 4,
            })
        }
    }

    /// Transport a state: the dense action followed by canonicalization.
    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.n_qubits() != self.n_qubits() {
            return Err(Error::QubitMismatch(v.n_qubits(), self.n_qubits()));
        }
        StateVector::new(v.n_qubits(), self.matrix()?.mul_vec(v.amps())).canonicalize()
    }

    pub fn text_form(&self) -> String {
        format!("X[{},{}]", self.j.index(), self.k.index())
    }

    pub fn to_record(&self) -> RotationRecord {
        RotationRecord { j: self.j.index(), k: self.k.index() }
    }
}

impl fmt::Display for Rotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text_form())
    }
}

#[derive(Serialize)]
pub struct RotationRecord {
    pub j: u64,
    pub k: u64,
}

/// A unit i^m times a rotation — the closure of the rotation set under
/// inversion and conjugation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PhasedRotation {
    pub rotation: Rotation,
    /// power of i, mod 4.
    pub unit_exp: u8,
}

impl PhasedRotation {
    pub fn from_rotation(r: Rotation) -> PhasedRotation {
        PhasedRotation { rotation: r, unit_exp: 0 }
    }

    pub fn matrix(&self) -> Result<CMatrix> {
        Ok(self.rotation.matrix()?.scale(CycAmp::unit(2 * self.unit_exp)))
    }

    pub fn inverse(&self) -> PhasedRotation {
        let inv = self.rotation.inverse();
        PhasedRotation {
            rotation: inv.rotation,
            unit_exp: (inv.unit_exp + 4 - self.unit_exp % 4) % 4,
        }
    }
}

impl fmt::Display for PhasedRotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.unit_exp % 4 {
            0 => "",
            1 => "i·",
            2 => "-",
            _ => "-i·",
        };
        write!(f, "{}{}", prefix, self.rotation)
    }
}

/// All ordered pairs (j, k), j ≠ k, commuting, over the 4^N phase-0 Paulis
/// (identity included), in lexicographic (j, k) index order.
pub fn enumerate_rotations(n_qubits: u32) -> Result<Vec<Rotation>> {
    enumerate_rotations_capped(n_qubits, ROT_CAP)
}

pub fn enumerate_rotations_capped(n_qubits: u32, cap: u32) -> Result<Vec<Rotation>> {
    if n_qubits > cap {
        return Err(Error::CapExceeded {
            what: "rotation enumeration qubits",
            requested: n_qubits as u64,
            cap: cap as u64,
        });
    }
    let count = 1u64 << (2 * n_qubits);
    let mut out = Vec::new();
    for j in 0..count {
        let pj = PauliOp::from_index(n_qubits, j)?;
        for k in 0..count {
            if j == k {
                continue;
            }
            let pk = PauliOp::from_index(n_qubits, k)?;
            if pj.commutes(&pk)? {
                out.push(Rotation { j: pj, k: pk });
            }
        }
    }
    Ok(out)
}

/// The rotation mixing a pseudostabilizer's first two non-identity elements
/// (for one qubit: the identity and its single non-identity element). This
/// choice fixes which (λ₁ + iλ₂)/√2 eigenvalue labels each eigenvector.
pub fn seed_rotation(s: &Pseudostabilizer) -> Result<Rotation> {
    let els = s.elements();
    if s.n_qubits() == 1 {
        make_rotation(PauliOp::identity(1), els[1])
    } else {
        make_rotation(els[1], els[2])
    }
}

#[derive(Serialize, Debug)]
pub struct ClosureReport {
    pub order: usize,
    pub transitive: bool,
    pub stabilizer_order: usize,
}

/// BFS closure of the projective group generated by the given rotations,
/// with elements deduplicated by canonical unit-phase form. Also reports the
/// permutation action on the polytope states: whether the action is
/// transitive on `states` and the resulting point-stabilizer order.
pub fn group_closure(
    generators: &[Rotation],
    states: &[StateVector],
    bound: usize,
) -> Result<ClosureReport> {
    if generators.is_empty() {
        return Err(Error::domain("closure needs at least one generator"));
    }
    let dim = 1usize << generators[0].n_qubits();
    let mut gen_mats: Vec<CMatrix> = Vec::new();
    for g in generators {
        let m = g.matrix()?.canonical_projective().0;
        let minv = g.inverse().matrix()?.canonical_projective().0;
        if !gen_mats.contains(&m) {
            gen_mats.push(m);
        }
        if !gen_mats.contains(&minv) {
            gen_mats.push(minv);
        }
    }
    let id = CMatrix::identity(dim);
    let mut seen: HashMap<CMatrix, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut frontier = VecDeque::from([id]);
    while let Some(m) = frontier.pop_front() {
        for g in &gen_mats {
            let next = g.matmul(&m).canonical_projective().0;
            if !seen.contains_key(&next) {
                if seen.len() >= bound {
                    return Err(Error::CapExceeded {
                        what: "closure size",
                        requested: (seen.len() + 1) as u64,
                        cap: bound as u64,
                    });
                }
                seen.insert(next.clone(), ());
                frontier.push_back(next);
            }
        }
    }
    let order = seen.len();

    // orbit of the first state under the generators
    let (transitive, stabilizer_order) = if states.is_empty() {
        (false, 0)
    } else {
        let mut orbit: Vec<StateVector> = vec![states[0].canonicalize()?];
        let mut queue = VecDeque::from([orbit[0].clone()]);
        while let Some(v) = queue.pop_front() {
            for g in generators {
                for w in [g.apply(&v)?, g.inverse().rotation.apply(&v)?] {
                    if !orbit.contains(&w) {
                        orbit.push(w.clone());
                        queue.push_back(w);
                    }
                }
            }
        }
        (orbit.len() == states.len(), order / orbit.len())
    };
    Ok(ClosureReport { order, transitive, stabilizer_order })
}
