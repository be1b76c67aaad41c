//! Exact eigenbasis extraction for pseudostabilizers, canonical ray
//! representatives, overlaps and the polytope distance.

use crate::cyc::{CMatrix, CycAmp};
use crate::error::{Error, Result};
use crate::pseudostab::Pseudostabilizer;
use serde::Serialize;
use std::fmt;

/// Eigenvalue signs λ_j = ±1, one per generator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EigenvaluePattern(pub Vec<i8>);

impl EigenvaluePattern {
    /// Pattern number p encodes λ_j = +1 when bit j of p is clear.
    fn from_bits(n: u32, p: u32) -> EigenvaluePattern {
        EigenvaluePattern((0..n).map(|j| if p >> j & 1 == 0 { 1 } else { -1 }).collect())
    }
}

/// An N-qubit state with exact amplitudes.
///
/// Canonical representatives are primitive integer vectors in the cyclotomic
/// ring: no common √2 or rational-integer content, and the first nonzero
/// amplitude's argument lies in [0, π/4), which fixes the global phase among
/// the eight unit multiples.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StateVector {
    n_qubits: u32,
    amps: Vec<CycAmp>,
}

impl StateVector {
    pub fn new(n_qubits: u32, amps: Vec<CycAmp>) -> StateVector {
        assert_eq!(amps.len(), 1usize << n_qubits);
        StateVector { n_qubits, amps }
    }

    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn amps(&self) -> &[CycAmp] {
        &self.amps
    }

    pub fn is_zero(&self) -> bool {
        self.amps.iter().all(|a| a.is_zero())
    }

    /// Exact squared norm (a real ring element).
    pub fn norm_sq(&self) -> CycAmp {
        self.amps.iter().fold(CycAmp::ZERO, |acc, a| acc + a.mag_sq())
    }

    /// Canonical ray representative; see the type-level invariants.
    pub fn canonicalize(&self) -> Result<StateVector> {
        if self.is_zero() {
            return Err(Error::domain("cannot canonicalize the zero vector"));
        }
        // clear denominators, then strip common √2 factors
        let kmax = self.amps.iter().map(|a| a.sqrt2_denom_exp()).max().unwrap();
        let mut amps: Vec<CycAmp> =
            self.amps.iter().map(|a| a.mul_sqrt2_pow(kmax as i32)).collect();
        loop {
            let reduced: Vec<CycAmp> = amps.iter().map(|a| a.mul_sqrt2_pow(-1)).collect();
            if reduced.iter().all(|a| a.sqrt2_denom_exp() == 0) {
                amps = reduced;
            } else {
                break;
            }
        }
        // strip rational-integer content
        let g = amps.iter().flat_map(|a| a.coeffs()).fold(0i64, |g, c| gcd(g, c.abs()));
        if g > 1 {
            amps = amps
                .iter()
                .map(|a| {
                    let c = a.coeffs();
                    CycAmp::new([c[0] / g, c[1] / g, c[2] / g, c[3] / g], 0)
                })
                .collect();
        }
        // fix the unit phase by the first nonzero amplitude
        let m = amps.iter().find(|a| !a.is_zero()).unwrap().octant_correction().unwrap();
        Ok(StateVector {
            n_qubits: self.n_qubits,
            amps: amps.into_iter().map(|a| a.mul_unit(m)).collect(),
        })
    }

    pub fn scale(&self, s: CycAmp) -> StateVector {
        StateVector { n_qubits: self.n_qubits, amps: self.amps.iter().map(|&a| a * s).collect() }
    }

    /// Exact normalized inner product ⟨self|other⟩. Requires both squared
    /// norms to be powers of 2, which holds for every canonical polytope state.
    pub fn overlap(&self, other: &StateVector) -> Result<CycAmp> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::QubitMismatch(self.n_qubits, other.n_qubits));
        }
        let inner = self
            .amps
            .iter()
            .zip(&other.amps)
            .fold(CycAmp::ZERO, |acc, (a, b)| acc + a.conj() * *b);
        let pa = self.norm_sq().as_sqrt2_power().ok_or_else(|| {
            Error::domain("squared norm is not a power of two")
        })?;
        let pb = other.norm_sq().as_sqrt2_power().ok_or_else(|| {
            Error::domain("squared norm is not a power of two")
        })?;
        debug_assert_eq!((pa + pb) % 2, 0);
        Ok(inner.mul_sqrt2_pow(-(pa + pb) / 2))
    }

    /// d = 2·arccos(|⟨a|b⟩|), the polytope distance in radians.
    pub fn distance(&self, other: &StateVector) -> Result<f64> {
        let ov = self.overlap(other)?;
        Ok(2.0 * ov.abs_f64().clamp(0.0, 1.0).acos())
    }

    /// JSON record {n, amps: [[re, im, k], ...]}; amplitudes of canonical
    /// states are always expressible in Gaussian form.
    pub fn to_record(&self) -> Result<StateRecord> {
        let amps = self
            .amps
            .iter()
            .map(|a| {
                a.as_gauss()
                    .map(|(re, im, k)| [re, im as i64, k as i64])
                    .ok_or_else(|| Error::domain("amplitude has no Gaussian form"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(StateRecord { n: self.n_qubits, amps, set: None, pattern: None })
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.amps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", a)?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize)]
pub struct StateRecord {
    pub n: u32,
    pub amps: Vec<[i64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<Vec<i8>>,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The 2^N simultaneous eigenvectors of a maximal pseudostabilizer, one per
/// sign pattern over its generators, built from the exact rank-1 projector
/// P = ∏_j (I + λ_j Σ_j)/2.
pub fn eigenbasis(s: &Pseudostabilizer) -> Result<Vec<(EigenvaluePattern, StateVector)>> {
    let n = s.n_qubits();
    let dim = 1usize << n;
    let gens: Vec<CMatrix> =
        s.generators().iter().map(|g| g.dense_matrix()).collect::<Result<Vec<_>>>()?;
    let id = CMatrix::identity(dim);
    let half = CycAmp::sqrt2_pow(-2);
    let mut out = Vec::with_capacity(dim);
    for p in 0..dim as u32 {
        let pattern = EigenvaluePattern::from_bits(n, p);
        let mut proj = id.clone();
        for (g, &sign) in gens.iter().zip(&pattern.0) {
            let term = if sign > 0 { id.add(g) } else { id.add(&g.scale(-CycAmp::ONE)) };
            proj = proj.matmul(&term.scale(half));
        }
        // any nonzero column of a rank-1 projector spans its image
        let col = (0..dim)
            .find(|&c| (0..dim).any(|r| !proj[(r, c)].is_zero()))
            .expect("maximal pseudostabilizer projector has rank 1");
        let v = StateVector::new(n, (0..dim).map(|r| proj[(r, col)]).collect());
        out.push((pattern, v.canonicalize()?));
    }
    Ok(out)
}

/// Rotation angle implied by a ⟨σ_z⟩ deviation δ: 2·arccos√((δ+1)/2).
pub fn inferred_rotation_angle(delta: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&delta) {
        return Err(Error::domain(format!("deviation {delta} outside [-1, 1]")));
    }
    Ok(2.0 * ((delta + 1.0) / 2.0).sqrt().acos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseudostab::enumerate_maximal;
    use std::collections::HashSet;

    fn g(re: i64, im: i64, k: u32) -> CycAmp {
        CycAmp::gauss(re, im, k)
    }

    #[test]
    fn one_qubit_eigenbases() {
        let sets = enumerate_maximal(1).unwrap();
        // {σ_w, σ_z}: |0⟩ and |1⟩
        let b = eigenbasis(&sets[0]).unwrap();
        assert_eq!(b[0].1.amps(), &[CycAmp::ONE, CycAmp::ZERO]);
        assert_eq!(b[1].1.amps(), &[CycAmp::ZERO, CycAmp::ONE]);
        // {σ_w, σ_x}: (1, ±1)
        let b = eigenbasis(&sets[1]).unwrap();
        assert_eq!(b[0].1.amps(), &[CycAmp::ONE, CycAmp::ONE]);
        assert_eq!(b[1].1.amps(), &[CycAmp::ONE, -CycAmp::ONE]);
        // {σ_w, σ_y}: (1, ±i)
        let b = eigenbasis(&sets[2]).unwrap();
        assert_eq!(b[0].1.amps(), &[CycAmp::ONE, CycAmp::I]);
        assert_eq!(b[1].1.amps(), &[CycAmp::ONE, -CycAmp::I]);
    }

    #[test]
    fn eigen_equation_holds() {
        for n in 1..=2u32 {
            for s in enumerate_maximal(n).unwrap() {
                for (pattern, v) in eigenbasis(&s).unwrap() {
                    for (gen, &lambda) in s.generators().iter().zip(&pattern.0) {
                        let gv = gen.dense_matrix().unwrap().mul_vec(v.amps());
                        let expect: Vec<CycAmp> =
                            v.amps().iter().map(|&a| a * CycAmp::from_int(lambda as i64)).collect();
                        assert_eq!(gv, expect, "set {} pattern {:?}", s.label(), pattern);
                    }
                }
            }
        }
    }

    #[test]
    fn resolution_of_identity() {
        for s in enumerate_maximal(2).unwrap() {
            let dim = 4usize;
            let mut acc = CMatrix::zeros(dim);
            for (_, v) in eigenbasis(&s).unwrap() {
                let norm = v.norm_sq().as_sqrt2_power().unwrap();
                let mut proj = CMatrix::zeros(dim);
                for r in 0..dim {
                    for c in 0..dim {
                        proj[(r, c)] = v.amps()[r] * v.amps()[c].conj();
                    }
                }
                acc = acc.add(&proj.scale(CycAmp::sqrt2_pow(-norm)));
            }
            assert!(acc.is_identity(), "set {}", s.label());
        }
    }

    #[test]
    fn sixty_distinct_vertices() {
        let mut seen: HashSet<StateVector> = HashSet::new();
        for s in enumerate_maximal(2).unwrap() {
            for (_, v) in eigenbasis(&s).unwrap() {
                seen.insert(v);
            }
        }
        assert_eq!(seen.len(), 60);
    }

    #[test]
    fn canonicalize_examples() {
        // ζ⁵·(1, 1, −1, 1)/2 canonicalizes back to the primitive integer vector
        let eps = CycAmp::unit(5).mul_sqrt2_pow(-2);
        let v = StateVector::new(
            2,
            vec![eps, eps, -eps, eps],
        );
        let c = v.canonicalize().unwrap();
        assert_eq!(c.amps(), &[g(1, 0, 0), g(1, 0, 0), g(-1, 0, 0), g(1, 0, 0)]);
        // idempotence and scale invariance
        assert_eq!(c.canonicalize().unwrap(), c);
        assert_eq!(c.scale(g(0, -3, 5)).canonicalize().unwrap(), c);
        // zero vector is rejected
        assert!(StateVector::new(1, vec![CycAmp::ZERO; 2]).canonicalize().is_err());
    }

    #[test]
    fn overlap_and_distance() {
        let zero = StateVector::new(1, vec![CycAmp::ONE, CycAmp::ZERO]);
        let plus = StateVector::new(1, vec![CycAmp::ONE, CycAmp::ONE]);
        let ov = zero.overlap(&plus).unwrap();
        assert_eq!(ov, CycAmp::sqrt2_pow(-1));
        let d = zero.distance(&plus).unwrap();
        assert!((d - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        // orthogonal and identical extremes
        let one = StateVector::new(1, vec![CycAmp::ZERO, CycAmp::ONE]);
        assert!(zero.overlap(&one).unwrap().is_zero());
        assert!((zero.distance(&one).unwrap() - std::f64::consts::PI).abs() < 1e-12);
        assert!(zero.distance(&zero).unwrap().abs() < 1e-12);
        assert!(zero.overlap(&StateVector::new(2, vec![CycAmp::ONE; 4])).is_err());
    }

    #[test]
    fn inferred_angles() {
        assert!(inferred_rotation_angle(1.0).unwrap().abs() < 1e-12);
        assert!((inferred_rotation_angle(0.0).unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert!((inferred_rotation_angle(-1.0).unwrap() - std::f64::consts::PI).abs() < 1e-12);
        assert!(inferred_rotation_angle(1.5).is_err());
    }

    #[test]
    fn json_record_shape() {
        let plus = StateVector::new(1, vec![CycAmp::ONE, CycAmp::I]);
        let rec = plus.to_record().unwrap();
        let s = serde_json::to_string(&rec).unwrap();
        assert_eq!(s, r#"{"n":1,"amps":[[1,0,0],[0,1,0]]}"#);
    }
}
