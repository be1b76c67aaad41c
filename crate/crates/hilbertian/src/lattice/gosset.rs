//! The 24-cell in its two standard orientations, the 240-vertex Gosset shell
//! as ten quaternion-pair sets, the discrete Hopf fibration to S⁴ and the
//! physical-state quotient with its entanglement classification.

use super::quat::Quaternion;
use crate::cyc::CycAmp;
use crate::error::{Error, Result};
use crate::roadmap::Polytope;
use crate::state::StateVector;
use serde::Serialize;

/// The two 24-cell orientations of §3.1: T1 (8 axis points + 16 half-sum
/// points) and T2 (the 24 points (±1±u)/√2 over distinct unit pairs),
/// related by the π/4 screw motion q ↦ q·(1+i)/√2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CellVariant {
    T1,
    T2,
}

pub fn polytope_24cell(variant: CellVariant) -> Vec<Quaternion> {
    match variant {
        CellVariant::T1 => {
            let mut out = Vec::with_capacity(24);
            for axis in 0..4 {
                for sign in [1i64, -1] {
                    let mut c = [0i64; 4];
                    c[axis] = sign;
                    out.push(Quaternion::from_ints(c[0], c[1], c[2], c[3]));
                }
            }
            let half = CycAmp::sqrt2_pow(-2);
            for bits in 0..16u32 {
                let s = |b: u32| if bits >> b & 1 == 0 { 1i64 } else { -1 };
                out.push(Quaternion::from_ints(s(0), s(1), s(2), s(3)).scale(half));
            }
            out
        }
        CellVariant::T2 => {
            let inv_sqrt2 = CycAmp::sqrt2_pow(-1);
            let mut out = Vec::with_capacity(24);
            for a in 0..4 {
                for b in (a + 1)..4 {
                    for (sa, sb) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                        let mut c = [0i64; 4];
                        c[a] = sa;
                        c[b] = sb;
                        out.push(Quaternion::from_ints(c[0], c[1], c[2], c[3]).scale(inv_sqrt2));
                    }
                }
            }
            out
        }
    }
}

/// One-qubit reading of a unit quaternion: first two real components are the
/// real and imaginary parts of t₀, the last two those of t₁.
pub fn quaternion_to_one_qubit(q: &Quaternion) -> StateVector {
    let t0 = q.r + CycAmp::I * q.i;
    let t1 = q.j + CycAmp::I * q.k;
    StateVector::new(1, vec![t0, t1])
}

/// Collapse a 24-cell to physical states: canonical rays with phase
/// multiplicities (six octahedron states, four global phases each).
pub fn one_qubit_physical_states(variant: CellVariant) -> Result<Vec<(StateVector, usize)>> {
    let mut rays: Vec<(StateVector, usize)> = Vec::new();
    for q in polytope_24cell(variant) {
        let v = quaternion_to_one_qubit(&q).canonicalize()?;
        match rays.iter_mut().find(|(r, _)| *r == v) {
            Some((_, m)) => *m += 1,
            None => rays.push((v, 1)),
        }
    }
    Ok(rays)
}

/// A Gosset-polytope vertex as a quaternion pair with its S1..S10 tag.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuaternionPair {
    pub q1: Quaternion,
    pub q2: Quaternion,
    /// 1..=10.
    pub set: u8,
}

/// The 240 Gosset vertices: S1 = (T2, 0), S2 = (0, T2), and S3..S10 =
/// (T1/√2, u·T1/√2) for u = 1, −1, i, −i, j, −j, k, −k (u acting on the left).
pub fn gosset_shell() -> Vec<QuaternionPair> {
    let mut out = Vec::with_capacity(240);
    for q in polytope_24cell(CellVariant::T2) {
        out.push(QuaternionPair { q1: q, q2: Quaternion::ZERO, set: 1 });
    }
    for q in polytope_24cell(CellVariant::T2) {
        out.push(QuaternionPair { q1: Quaternion::ZERO, q2: q, set: 2 });
    }
    let inv_sqrt2 = CycAmp::sqrt2_pow(-1);
    let units = [
        Quaternion::unit(0),
        -Quaternion::unit(0),
        Quaternion::unit(1),
        -Quaternion::unit(1),
        Quaternion::unit(2),
        -Quaternion::unit(2),
        Quaternion::unit(3),
        -Quaternion::unit(3),
    ];
    for (m, u) in units.iter().enumerate() {
        for t in polytope_24cell(CellVariant::T1) {
            let q1 = t.scale(inv_sqrt2);
            out.push(QuaternionPair { q1, q2: *u * q1, set: (m + 3) as u8 });
        }
    }
    out
}

/// Complex-quadruplet reading (t00, t01, t10, t11) of a pair, with the
/// quaternion unit j acting on the right of the complex numbers:
/// q1 = t00 + t01·j, q2 = t10 + t11·j.
pub fn pair_to_state(p: &QuaternionPair) -> StateVector {
    let t00 = p.q1.r + CycAmp::I * p.q1.i;
    let t01 = p.q1.j + CycAmp::I * p.q1.k;
    let t10 = p.q2.r + CycAmp::I * p.q2.i;
    let t11 = p.q2.j + CycAmp::I * p.q2.k;
    StateVector::new(2, vec![t00, t01, t10, t11])
}

/// A point of the Hopf base S⁴ ⊂ R⁵.
#[derive(Clone, Copy, Debug)]
pub struct BasePoint(pub [f64; 5]);

impl BasePoint {
    /// Concurrence as read off the base: radius in the (x3, x4) plane.
    pub fn hopf_concurrence(&self) -> f64 {
        (self.0[3] * self.0[3] + self.0[4] * self.0[4]).sqrt()
    }
}

/// Discrete Hopf map: (q1, q2) ↦ Q = conj(q1·q2⁻¹), then inverse
/// stereographic embedding into S⁴. The pole (1,0,0,0,0) hosts q2 = 0.
pub fn hopf_map(p: &QuaternionPair) -> BasePoint {
    if p.q2.is_zero() {
        return BasePoint([1.0, 0.0, 0.0, 0.0, 0.0]);
    }
    let q1 = p.q1.to_f64();
    let q2 = p.q2.to_f64();
    let n2: f64 = q2.iter().map(|c| c * c).sum();
    // q2⁻¹ = conj(q2)/|q2|²; Q = conj(q1·q2⁻¹)
    let q2inv = [q2[0] / n2, -q2[1] / n2, -q2[2] / n2, -q2[3] / n2];
    let prod = qmul_f64(q1, q2inv);
    let q = [prod[0], -prod[1], -prod[2], -prod[3]];
    let nq: f64 = q.iter().map(|c| c * c).sum();
    let d = nq + 1.0;
    BasePoint([
        (nq - 1.0) / d,
        2.0 * q[0] / d,
        2.0 * q[1] / d,
        2.0 * q[2] / d,
        2.0 * q[3] / d,
    ])
}

fn qmul_f64(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

#[derive(Clone, Copy, PartialEq, Eq, Serialize, Debug)]
pub enum EntanglementClass {
    Separable,
    Intermediate,
    Maximal,
}

/// Exact determinant t00·t11 − t01·t10 of a two-qubit state.
fn det(v: &StateVector) -> Result<CycAmp> {
    if v.n_qubits() != 2 {
        return Err(Error::domain("concurrence is defined for two-qubit states"));
    }
    let a = v.amps();
    Ok(a[0] * a[3] - a[1] * a[2])
}

/// Concurrence c = 2|t00·t11 − t01·t10| (normalized internally).
pub fn concurrence(v: &StateVector) -> Result<f64> {
    let d = det(v)?;
    Ok(2.0 * d.abs_f64() / v.norm_sq().re_f64())
}

/// Exact entanglement classification: c = 0, c = 1, or strictly between.
pub fn classify_entanglement(v: &StateVector) -> Result<EntanglementClass> {
    let d = det(v)?;
    if d.is_zero() {
        return Ok(EntanglementClass::Separable);
    }
    let n = v.norm_sq();
    // c = 1 ⇔ 4·|d|² = (norm²)²
    if CycAmp::from_int(4) * d.mag_sq() == n * n {
        Ok(EntanglementClass::Maximal)
    } else {
        Ok(EntanglementClass::Intermediate)
    }
}

/// One physical state of a shell quotient: a canonical ray, its phase
/// multiplicity, its entanglement class and the S-sets contributing to it.
#[derive(Clone, Debug)]
pub struct Ray {
    pub state: StateVector,
    pub multiplicity: usize,
    pub class: EntanglementClass,
    pub sets: Vec<u8>,
}

/// Quotient a list of Gosset vertices by global phase.
pub fn physical_states(shell: &[QuaternionPair]) -> Result<Vec<Ray>> {
    let mut rays: Vec<Ray> = Vec::new();
    for p in shell {
        let raw = pair_to_state(p);
        let v = raw.canonicalize()?;
        match rays.iter_mut().find(|r| r.state == v) {
            Some(r) => {
                r.multiplicity += 1;
                if !r.sets.contains(&p.set) {
                    r.sets.push(p.set);
                }
            }
            None => rays.push(Ray {
                class: classify_entanglement(&v)?,
                state: v,
                multiplicity: 1,
                sets: vec![p.set],
            }),
        }
    }
    Ok(rays)
}

#[derive(Serialize, Debug)]
pub struct CrosscheckReport {
    pub rays: usize,
    pub polytope_states: usize,
    pub matched: usize,
    pub unmatched_rays: usize,
    pub bijective: bool,
}

/// Match shell rays against the polytope 𝔥₂ state set by canonical equality.
pub fn crosscheck_with_polytope(rays: &[Ray], h2: &Polytope) -> CrosscheckReport {
    let matched = rays.iter().filter(|r| h2.find(&r.state).is_some()).count();
    CrosscheckReport {
        rays: rays.len(),
        polytope_states: h2.states().len(),
        matched,
        unmatched_rays: rays.len() - matched,
        bijective: matched == rays.len() && rays.len() == h2.states().len(),
    }
}
