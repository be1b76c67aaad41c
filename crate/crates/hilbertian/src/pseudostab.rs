//! Enumeration of the maximal mutually-commuting subsets of the phase-free
//! Pauli set — equivalently, the maximal isotropic subspaces of the binary
//! symplectic space F₂^{2N}.

use crate::error::{Error, Result};
use crate::pauli::PauliOp;
use num_bigint::BigUint;
use serde::Serialize;

/// Default cap on N for full enumeration.
pub const ENUM_CAP: u32 = 4;

/// Number of maximal pseudostabilizers: ∏_{k=0}^{N−1} (2^{N−k} + 1).
pub fn count_formula(n_qubits: u32) -> BigUint {
    let mut s = BigUint::from(1u32);
    for k in 0..n_qubits {
        s *= BigUint::from(2u32).pow(n_qubits - k) + 1u32;
    }
    s
}

#[derive(Clone, Copy, PartialEq, Eq, Serialize, Debug)]
pub enum StateClass {
    Product,
    Entangled,
}

/// A maximal mutually-commuting subset of the phase-free N-qubit Pauli set:
/// 2^N elements including the identity, closed under phase-free products.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pseudostabilizer {
    n_qubits: u32,
    /// 1-based label; for N=2 this follows the published 1–15 table order.
    label: u32,
    /// all 2^N elements, sorted by catalog index; elements[0] is the identity.
    elements: Vec<PauliOp>,
    /// N independent non-identity generators, greedily chosen in element order.
    generators: Vec<PauliOp>,
}

impl Pseudostabilizer {
    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn label(&self) -> u32 {
        self.label
    }

    pub fn elements(&self) -> &[PauliOp] {
        &self.elements
    }

    pub fn generators(&self) -> &[PauliOp] {
        &self.generators
    }

    pub fn contains(&self, p: &PauliOp) -> bool {
        self.elements.binary_search_by_key(&p.index(), |e| e.index()).is_ok()
    }

    /// Intersection of element sets; always contains the identity.
    pub fn shared_elements(&self, other: &Pseudostabilizer) -> Vec<PauliOp> {
        self.elements.iter().filter(|e| other.contains(e)).copied().collect()
    }

    /// Nearest neighbors share half the elements.
    pub fn is_nearest_neighbor(&self, other: &Pseudostabilizer) -> bool {
        self != other && self.shared_elements(other).len() == 1 << (self.n_qubits - 1)
    }

    /// Product/entangled split for two qubits: a set is product exactly when
    /// some non-identity element carries σ_w as a one-qubit tensor factor.
    pub fn classify_two_qubit(&self) -> Result<StateClass> {
        if self.n_qubits != 2 {
            return Err(Error::domain(format!(
                "product/entangled classification is defined for 2 qubits, got {}",
                self.n_qubits
            )));
        }
        let product = self
            .elements
            .iter()
            .filter(|e| !e.is_identity())
            .any(|e| e.has_identity_factor());
        Ok(if product { StateClass::Product } else { StateClass::Entangled })
    }

    /// Sorted catalog indices of the elements.
    pub fn element_indices(&self) -> Vec<u64> {
        self.elements.iter().map(|e| e.index()).collect()
    }
}

/// Symplectic vector packed as (z << N) | x.
fn pack(p: &PauliOp) -> u64 {
    (p.z_bits() << p.n_qubits()) | p.x_bits()
}

fn unpack(n: u32, v: u64) -> PauliOp {
    let mask = (1u64 << n) - 1;
    PauliOp::new(n, v >> n, v & mask, 0)
}

fn symplectic_commutes(n: u32, a: u64, b: u64) -> bool {
    let mask = (1u64 << n) - 1;
    let (za, xa) = (a >> n, a & mask);
    let (zb, xb) = (b >> n, b & mask);
    ((za & xb).count_ones() + (xa & zb).count_ones()) % 2 == 0
}

/// Enumerate all maximal pseudostabilizers, in a deterministic canonical
/// order (for N=2 remapped to the published 1–15 numbering).
pub fn enumerate_maximal(n_qubits: u32) -> Result<Vec<Pseudostabilizer>> {
    enumerate_maximal_capped(n_qubits, ENUM_CAP)
}

pub fn enumerate_maximal_capped(n_qubits: u32, cap: u32) -> Result<Vec<Pseudostabilizer>> {
    if n_qubits > cap {
        return Err(Error::CapExceeded {
            what: "enumeration qubits",
            requested: n_qubits as u64,
            cap: cap as u64,
        });
    }
    // DFS over greedy bases: each isotropic subspace has a unique basis
    // (b_1 < b_2 < ...) where b_{i+1} is the minimal element outside the span
    // of the earlier ones, so every maximal subspace is reached exactly once.
    let mut found: Vec<Vec<u64>> = Vec::new();
    let mut span = vec![0u64]; // current subspace, sorted
    extend(n_qubits, &mut span, 1, &mut found);
    // deterministic order by sorted catalog indices, not packed form
    found.sort_by_cached_key(|packed| {
        let mut idx: Vec<u64> = packed.iter().map(|&v| unpack(n_qubits, v).index()).collect();
        idx.sort_unstable();
        idx
    });

    let mut sets: Vec<Vec<u64>> = found;
    if n_qubits == 2 {
        sets = reorder_to_paper_n2(sets);
    }

    Ok(sets
        .into_iter()
        .enumerate()
        .map(|(i, packed)| {
            let elements: Vec<PauliOp> = {
                let mut els: Vec<PauliOp> =
                    packed.iter().map(|&v| unpack(n_qubits, v)).collect();
                els.sort_by_key(|p| p.index());
                els
            };
            let generators = greedy_generators(&elements);
            Pseudostabilizer { n_qubits, label: (i + 1) as u32, elements, generators }
        })
        .collect())
}

fn extend(n: u32, span: &mut Vec<u64>, min_candidate: u64, found: &mut Vec<Vec<u64>>) {
    if span.len() == 1 << n {
        found.push(span.clone());
        return;
    }
    for v in min_candidate..(1u64 << (2 * n)) {
        if span.binary_search(&v).is_ok() {
            continue;
        }
        if !span.iter().all(|&s| symplectic_commutes(n, s, v)) {
            continue;
        }
        if span.iter().any(|&s| (v ^ s) < v) {
            // v must be the minimum of its coset v ⊕ span for the greedy basis
            continue;
        }
        let mut next: Vec<u64> = span.iter().map(|&s| s ^ v).chain(span.iter().copied()).collect();
        next.sort_unstable();
        extend(n, &mut next, v + 1, found);
    }
}

fn greedy_generators(elements: &[PauliOp]) -> Vec<PauliOp> {
    let n = elements[0].n_qubits();
    let mut gens: Vec<PauliOp> = Vec::new();
    let mut span: Vec<u64> = vec![0];
    for e in elements.iter().filter(|e| !e.is_identity()) {
        let v = pack(e);
        if span.contains(&v) {
            continue;
        }
        span = span.iter().map(|&s| s ^ v).chain(span.iter().copied()).collect();
        gens.push(*e);
        if gens.len() == n as usize {
            break;
        }
    }
    gens
}

/// The published two-qubit table order, as sorted catalog-index quadruples.
const PAPER_ORDER_N2: [[u64; 4]; 15] = [
    [0, 1, 4, 5],
    [0, 2, 4, 6],
    [0, 3, 4, 7],
    [0, 1, 8, 9],
    [0, 2, 8, 10],
    [0, 3, 8, 11],
    [0, 1, 12, 13],
    [0, 2, 12, 14],
    [0, 3, 12, 15],
    [0, 5, 10, 15],
    [0, 5, 11, 14],
    [0, 6, 9, 15],
    [0, 6, 11, 13],
    [0, 7, 9, 14],
    [0, 7, 10, 13],
];

fn reorder_to_paper_n2(sets: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let by_indices = |packed: &Vec<u64>| -> Vec<u64> {
        let mut idx: Vec<u64> = packed.iter().map(|&v| unpack(2, v).index()).collect();
        idx.sort_unstable();
        idx
    };
    let mut out: Vec<Vec<u64>> = Vec::with_capacity(15);
    for want in PAPER_ORDER_N2 {
        let pos = sets
            .iter()
            .position(|s| by_indices(s) == want)
            .expect("enumeration must produce every published two-qubit set");
        out.push(sets[pos].clone());
    }
    out
}

/// JSON record for a pseudostabilizer listing.
#[derive(Serialize)]
pub struct PseudostabilizerRecord {
    pub n: u32,
    pub label: u32,
    pub elements: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

impl PseudostabilizerRecord {
    pub fn from(s: &Pseudostabilizer) -> PseudostabilizerRecord {
        let class = s.classify_two_qubit().ok().map(|c| {
            match c {
                StateClass::Product => "product",
                StateClass::Entangled => "entangled",
            }
            .to_string()
        });
        PseudostabilizerRecord { n: s.n_qubits(), label: s.label(), elements: s.element_indices(), class }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        assert_eq!(count_formula(1), BigUint::from(3u32));
        assert_eq!(count_formula(2), BigUint::from(15u32));
        assert_eq!(count_formula(3), BigUint::from(135u32));
        assert_eq!(count_formula(4), BigUint::from(2295u32));
    }

    #[test]
    fn one_qubit_sets() {
        let sets = enumerate_maximal(1).unwrap();
        assert_eq!(sets.len(), 3);
        assert_eq!(sets[0].element_indices(), vec![0, 1]); // {σ_w, σ_z}
        assert_eq!(sets[1].element_indices(), vec![0, 2]); // {σ_w, σ_x}
        assert_eq!(sets[2].element_indices(), vec![0, 3]); // {σ_w, σ_y}
    }

    #[test]
    fn two_qubit_table() {
        let sets = enumerate_maximal(2).unwrap();
        assert_eq!(sets.len(), 15);
        for (i, s) in sets.iter().enumerate() {
            assert_eq!(s.label(), (i + 1) as u32);
            assert_eq!(s.element_indices(), PAPER_ORDER_N2[i].to_vec());
            // all pairs commute, closed under products
            for a in s.elements() {
                for b in s.elements() {
                    assert!(a.commutes(b).unwrap());
                    assert!(s.contains(&a.multiply(b).unwrap()));
                }
            }
        }
        assert_eq!(sets[9].element_indices(), vec![0, 5, 10, 15]);
    }

    #[test]
    fn classification_matches_starred_rows() {
        let sets = enumerate_maximal(2).unwrap();
        for s in &sets {
            let expect = if s.label() <= 9 { StateClass::Product } else { StateClass::Entangled };
            assert_eq!(s.classify_two_qubit().unwrap(), expect, "set {}", s.label());
        }
        assert!(enumerate_maximal(1).unwrap()[0].classify_two_qubit().is_err());
    }

    #[test]
    fn counts_match_formula() {
        for n in 1..=3u32 {
            let sets = enumerate_maximal(n).unwrap();
            assert_eq!(BigUint::from(sets.len()), count_formula(n));
        }
        assert!(enumerate_maximal(9).is_err());
    }

    #[test]
    fn shared_element_structure() {
        let sets = enumerate_maximal(2).unwrap();
        // sets 1 and 2 share {Σ_0, Σ_4}
        let sh = sets[0].shared_elements(&sets[1]);
        assert_eq!(sh.iter().map(|p| p.index()).collect::<Vec<_>>(), vec![0, 4]);
        assert!(sets[0].is_nearest_neighbor(&sets[1]));
        // sets 1 and 10 share {Σ_0, Σ_5}
        let sh = sets[0].shared_elements(&sets[9]);
        assert_eq!(sh.iter().map(|p| p.index()).collect::<Vec<_>>(), vec![0, 5]);
        // one-qubit sets share only the identity
        let one = enumerate_maximal(1).unwrap();
        assert_eq!(one[0].shared_elements(&one[1]).len(), 1);
        // achieved non-trivial intersection sizes for N=2 are exactly {1, 2}
        let mut sizes = std::collections::BTreeSet::new();
        for a in &sets {
            for b in &sets {
                if a != b {
                    sizes.insert(a.shared_elements(b).len());
                }
            }
        }
        assert_eq!(sizes.into_iter().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn element_coverage_and_triangle_sharing() {
        let sets = enumerate_maximal(2).unwrap();
        for idx in 1..16u64 {
            let p = PauliOp::from_index(2, idx).unwrap();
            let owners = sets.iter().filter(|s| s.contains(&p)).count();
            assert_eq!(owners, 3, "Σ_{idx} must sit in exactly three sets");
        }
        let covered: std::collections::BTreeSet<u64> =
            sets.iter().flat_map(|s| s.element_indices()).collect();
        assert_eq!(covered.len(), 16);
    }

    #[test]
    fn generators_generate() {
        for n in 1..=3u32 {
            for s in enumerate_maximal(n).unwrap() {
                assert_eq!(s.generators().len(), n as usize);
                let mut span = vec![PauliOp::identity(n)];
                for g in s.generators() {
                    let new: Vec<PauliOp> = span
                        .iter()
                        .map(|e| e.multiply(g).unwrap().phase0())
                        .collect();
                    span.extend(new);
                }
                let mut span_idx: Vec<u64> = span.iter().map(|p| p.index()).collect();
                span_idx.sort_unstable();
                span_idx.dedup();
                assert_eq!(span_idx, s.element_indices());
            }
        }
    }
}
