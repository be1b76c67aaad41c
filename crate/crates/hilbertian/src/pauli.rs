//! The N-qubit generalized Pauli matrices in binary symplectic form.
//!
//! Each operator Σ is a tensor product of one-qubit Paulis encoded by a pair
//! of bit vectors: per qubit, (z, x) = (0,0) is σ_w (identity), (0,1) is σ_x,
//! (1,0) is σ_z and (1,1) is σ_y. Concatenating the per-qubit two-bit codes
//! (x high, z low, qubit 0 most significant) gives the catalog index, e.g.
//! index 13 = σ_y⊗σ_z for two qubits. A power-of-i prefactor is tracked so
//! products are exact; phase 0 operators are Hermitian and square to the
//! identity.

use crate::cyc::{CMatrix, CycAmp};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default cap on N for dense-matrix expansion.
pub const DENSE_CAP: u32 = 5;

const LETTERS: [char; 4] = ['w', 'z', 'x', 'y'];

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Debug)]
pub struct PauliOp {
    n_qubits: u32,
    /// z bits; qubit q at bit position (n_qubits − 1 − q).
    z_bits: u64,
    /// x bits, same layout.
    x_bits: u64,
    /// power of i prefactor, mod 4.
    phase_exp: u8,
}

impl PauliOp {
    pub fn identity(n_qubits: u32) -> PauliOp {
        assert!(n_qubits >= 1 && n_qubits <= 32);
        PauliOp { n_qubits, z_bits: 0, x_bits: 0, phase_exp: 0 }
    }

    pub fn new(n_qubits: u32, z_bits: u64, x_bits: u64, phase_exp: u8) -> PauliOp {
        assert!(n_qubits >= 1 && n_qubits <= 32);
        let mask = if n_qubits == 64 { u64::MAX } else { (1u64 << n_qubits) - 1 };
        assert!(z_bits <= mask && x_bits <= mask);
        PauliOp { n_qubits, z_bits, x_bits, phase_exp: phase_exp % 4 }
    }

    /// Build the phase-0 operator with the given catalog index in [0, 4^N).
    pub fn from_index(n_qubits: u32, index: u64) -> Result<PauliOp> {
        let max = 1u64 << (2 * n_qubits);
        if index >= max {
            return Err(Error::IndexOutOfRange { index, n_qubits, max });
        }
        let mut z = 0u64;
        let mut x = 0u64;
        for b in 0..n_qubits {
            let code = (index >> (2 * b)) & 0b11;
            z |= (code & 1) << b;
            x |= (code >> 1) << b;
        }
        Ok(PauliOp { n_qubits, z_bits: z, x_bits: x, phase_exp: 0 })
    }

    /// Catalog index of the phase-0 part.
    pub fn index(&self) -> u64 {
        let mut idx = 0u64;
        for b in 0..self.n_qubits {
            let code = ((self.z_bits >> b) & 1) | (((self.x_bits >> b) & 1) << 1);
            idx |= code << (2 * b);
        }
        idx
    }

    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn z_bits(&self) -> u64 {
        self.z_bits
    }

    pub fn x_bits(&self) -> u64 {
        self.x_bits
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn is_identity(&self) -> bool {
        self.z_bits == 0 && self.x_bits == 0
    }

    /// The same operator with the i-power prefactor dropped.
    pub fn phase0(&self) -> PauliOp {
        PauliOp { phase_exp: 0, ..*self }
    }

    /// One-qubit Pauli code (0=w, 1=z, 2=x, 3=y) at qubit q (0 = leftmost factor).
    pub fn factor(&self, q: u32) -> u8 {
        let b = self.n_qubits - 1 - q;
        (((self.z_bits >> b) & 1) | (((self.x_bits >> b) & 1) << 1)) as u8
    }

    /// True when some tensor factor is the one-qubit identity σ_w.
    pub fn has_identity_factor(&self) -> bool {
        (0..self.n_qubits).any(|q| self.factor(q) == 0)
    }

    pub fn multiply(&self, rhs: &PauliOp) -> Result<PauliOp> {
        if self.n_qubits != rhs.n_qubits {
            return Err(Error::QubitMismatch(self.n_qubits, rhs.n_qubits));
        }
        let mut phase = self.phase_exp + rhs.phase_exp;
        for q in 0..self.n_qubits {
            phase += factor_product_phase(self.factor(q), rhs.factor(q));
        }
        Ok(PauliOp {
            n_qubits: self.n_qubits,
            z_bits: self.z_bits ^ rhs.z_bits,
            x_bits: self.x_bits ^ rhs.x_bits,
            phase_exp: phase % 4,
        })
    }

    /// Binary symplectic commutation test: ⟨z_p,x_q⟩ + ⟨x_p,z_q⟩ = 0 (mod 2).
    pub fn commutes(&self, rhs: &PauliOp) -> Result<bool> {
        if self.n_qubits != rhs.n_qubits {
            return Err(Error::QubitMismatch(self.n_qubits, rhs.n_qubits));
        }
        let s = (self.z_bits & rhs.x_bits).count_ones() + (self.x_bits & rhs.z_bits).count_ones();
        Ok(s % 2 == 0)
    }

    /// Exact 2^N × 2^N matrix, entries in {0, ±1, ±i} times i^phase.
    pub fn dense_matrix(&self) -> Result<CMatrix> {
        self.dense_matrix_capped(DENSE_CAP)
    }

    pub fn dense_matrix_capped(&self, cap: u32) -> Result<CMatrix> {
        if self.n_qubits > cap {
            return Err(Error::CapExceeded {
                what: "dense matrix qubits",
                requested: self.n_qubits as u64,
                cap: cap as u64,
            });
        }
        let mut m = sigma_dense(self.factor(0));
        for q in 1..self.n_qubits {
            m = m.kron(&sigma_dense(self.factor(q)));
        }
        Ok(m.scale(CycAmp::unit(2 * self.phase_exp)))
    }

    /// Letter notation, e.g. "Σ_zx"; one-qubit operators render as "σ_x".
    pub fn letter_notation(&self) -> String {
        let letters: String = (0..self.n_qubits).map(|q| LETTERS[self.factor(q) as usize]).collect();
        let sym = if self.n_qubits == 1 { "σ" } else { "Σ" };
        format!("{}{}_{}", phase_prefix(self.phase_exp), sym, letters)
    }

    /// Number notation, e.g. "Σ_6".
    pub fn number_notation(&self) -> String {
        let sym = if self.n_qubits == 1 { "σ" } else { "Σ" };
        format!("{}{}_{}", phase_prefix(self.phase_exp), sym, self.index())
    }
}

fn phase_prefix(p: u8) -> &'static str {
    match p % 4 {
        0 => "",
        1 => "i·",
        2 => "-",
        _ => "-i·",
    }
}

/// Power of i picked up by σ_a·σ_b (codes 0=w, 1=z, 2=x, 3=y).
/// σ_z σ_x = iσ_y and cyclically (z→x→y); the reversed order contributes i³.
fn factor_product_phase(a: u8, b: u8) -> u8 {
    if a == 0 || b == 0 || a == b {
        0
    } else if (a, b) == (1, 2) || (a, b) == (2, 3) || (a, b) == (3, 1) {
        1
    } else {
        3
    }
}

fn sigma_dense(code: u8) -> CMatrix {
    let o = CycAmp::ZERO;
    let l = CycAmp::ONE;
    let i = CycAmp::I;
    let entries = match code {
        0 => vec![l, o, o, l],
        1 => vec![l, o, o, -l],
        2 => vec![o, l, l, o],
        3 => vec![o, -i, i, o],
        _ => unreachable!(),
    };
    CMatrix { dim: 2, entries }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number_notation())
    }
}

/// A unit scalar in {±1, ±i} times a phase-0 Pauli.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignedPauli {
    pub pauli: PauliOp,
    /// power of i, mod 4.
    pub unit_exp: u8,
}

impl SignedPauli {
    pub fn from_phased(p: PauliOp) -> SignedPauli {
        SignedPauli { pauli: p.phase0(), unit_exp: p.phase_exp() }
    }

    pub fn dense_matrix(&self) -> Result<CMatrix> {
        Ok(self.pauli.dense_matrix()?.scale(CycAmp::unit(2 * self.unit_exp)))
    }
}

impl fmt::Display for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", phase_prefix(self.unit_exp), self.pauli.number_notation())
    }
}
