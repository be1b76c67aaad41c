//! The polytope 𝔥_N as a concrete state set, the roadmap graph over its
//! pseudostabilizer triangles, navigation between states, named Clifford
//! gate decompositions and synonym synthesis from restricted generator sets.

use crate::cyc::{CMatrix, CycAmp};
use crate::error::{Error, Result};
use crate::pseudostab::{enumerate_maximal, Pseudostabilizer, StateClass};
use crate::rotation::{enumerate_rotations, make_rotation, Rotation};
use crate::state::{eigenbasis, EigenvaluePattern, StateVector};
use crate::pauli::PauliOp;
use serde::Serialize;
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

/// Default cap on N for full state materialization.
pub const POLY_CAP: u32 = 3;

/// Default search depth for synonym synthesis.
pub const DEFAULT_MAX_DEPTH: usize = 16;

/// The vertex set of 𝔥_N with back-references into the pseudostabilizer list.
pub struct Polytope {
    n_qubits: u32,
    sets: Vec<Pseudostabilizer>,
    states: Vec<StateVector>,
    /// per state: (pseudostabilizer label, eigenvalue pattern)
    origin: Vec<(u32, EigenvaluePattern)>,
    index: HashMap<StateVector, usize>,
}

pub fn build_polytope(n_qubits: u32) -> Result<Polytope> {
    build_polytope_capped(n_qubits, POLY_CAP)
}

pub fn build_polytope_capped(n_qubits: u32, cap: u32) -> Result<Polytope> {
    if n_qubits > cap {
        return Err(Error::CapExceeded {
            what: "polytope qubits",
            requested: n_qubits as u64,
            cap: cap as u64,
        });
    }
    let sets = enumerate_maximal(n_qubits)?;
    let mut states = Vec::new();
    let mut origin = Vec::new();
    let mut index = HashMap::new();
    for s in &sets {
        for (pattern, v) in eigenbasis(s)? {
            if !index.contains_key(&v) {
                index.insert(v.clone(), states.len());
                origin.push((s.label(), pattern));
                states.push(v);
            }
        }
    }
    Ok(Polytope { n_qubits, sets, states, origin, index })
}

impl Polytope {
    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn states(&self) -> &[StateVector] {
        &self.states
    }

    pub fn sets(&self) -> &[Pseudostabilizer] {
        &self.sets
    }

    /// Index of a state (canonicalized first), if it is a vertex.
    pub fn find(&self, v: &StateVector) -> Option<usize> {
        self.index.get(&v.canonicalize().ok()?).copied()
    }

    /// (pseudostabilizer label, eigenvalue pattern) of vertex i.
    pub fn origin(&self, i: usize) -> &(u32, EigenvaluePattern) {
        &self.origin[i]
    }

    /// The computational basis state |b⟩.
    pub fn basis_state(&self, b: usize) -> StateVector {
        let dim = 1usize << self.n_qubits;
        let mut amps = vec![CycAmp::ZERO; dim];
        amps[b] = CycAmp::ONE;
        StateVector::new(self.n_qubits, amps)
    }
}

/// Roadmap graph: pseudostabilizer labels as nodes, verified rotations as
/// directed labeled edges (a → b whenever X maps set a's elements onto b's).
pub struct Roadmap {
    n_qubits: u32,
    node_classes: Vec<Option<StateClass>>,
    edges: Vec<(u32, u32, Rotation)>,
}

pub fn build_roadmap(n_qubits: u32) -> Result<Roadmap> {
    let sets = enumerate_maximal(n_qubits)?;
    let rotations = enumerate_rotations(n_qubits)?;
    // map sorted element indices → label for image lookup
    let by_indices: HashMap<Vec<u64>, u32> =
        sets.iter().map(|s| (s.element_indices(), s.label())).collect();
    let mut edges = Vec::new();
    for x in &rotations {
        for s in &sets {
            let mut image: Vec<u64> = s
                .elements()
                .iter()
                .map(|e| x.conjugate_pauli(e).map(|sp| sp.pauli.index()))
                .collect::<Result<Vec<_>>>()?;
            image.sort_unstable();
            let b = by_indices[&image]; // conjugation preserves maximal commuting sets
            if b != s.label() {
                edges.push((s.label(), b, *x));
            }
        }
    }
    edges.sort_by_key(|&(a, b, x)| (a, b, x.j().index(), x.k().index()));
    edges.dedup();
    let node_classes = sets.iter().map(|s| s.classify_two_qubit().ok()).collect();
    Ok(Roadmap { n_qubits, node_classes, edges })
}

impl Roadmap {
    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn node_count(&self) -> usize {
        self.node_classes.len()
    }

    pub fn edges(&self) -> &[(u32, u32, Rotation)] {
        &self.edges
    }

    pub fn neighbors(&self, a: u32) -> Vec<u32> {
        let mut out: Vec<u32> =
            self.edges.iter().filter(|&&(x, _, _)| x == a).map(|&(_, b, _)| b).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n + 1];
        seen[1] = true;
        let mut queue = VecDeque::from([1u32]);
        while let Some(a) = queue.pop_front() {
            for b in self.neighbors(a) {
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    queue.push_back(b);
                }
            }
        }
        seen[1..].iter().all(|&s| s)
    }
}

/// An ordered product of rotations with exponents ±1; `steps[0]` is the
/// leftmost factor of the matrix product.
#[derive(Clone, Debug)]
pub struct GateSequence {
    pub steps: Vec<(Rotation, i8)>,
}

impl GateSequence {
    pub fn empty() -> GateSequence {
        GateSequence { steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn product_matrix(&self, dim: usize) -> Result<CMatrix> {
        let mut m = CMatrix::identity(dim);
        for (x, e) in &self.steps {
            let f = if *e >= 0 { x.matrix()? } else { x.inverse().matrix()? };
            m = m.matmul(&f);
        }
        Ok(m)
    }

    /// JSON record; `phase` is the unit exponent m with product = ζ^m·target.
    pub fn to_record(&self, target: &str, phase: u8) -> GateSequenceRecord {
        GateSequenceRecord {
            target: target.to_string(),
            seq: self
                .steps
                .iter()
                .map(|(x, e)| GateStepRecord { j: x.j().index(), k: x.k().index(), exp: *e })
                .collect(),
            phase,
        }
    }
}

#[derive(Serialize)]
pub struct GateSequenceRecord {
    pub target: String,
    pub seq: Vec<GateStepRecord>,
    pub phase: u8,
}

#[derive(Serialize)]
pub struct GateStepRecord {
    pub j: u64,
    pub k: u64,
    pub exp: i8,
}

/// Shortest rotation sequence carrying vertex `a` to vertex `b` (both must be
/// polytope states), found by breadth-first search over the state-transition
/// graph. The result has at most N+1 steps.
pub fn navigate(p: &Polytope, a: &StateVector, b: &StateVector) -> Result<GateSequence> {
    let start = p.find(a).ok_or_else(|| Error::domain("source state is not a polytope vertex"))?;
    let goal = p.find(b).ok_or_else(|| Error::domain("target state is not a polytope vertex"))?;
    if start == goal {
        return Ok(GateSequence::empty());
    }
    let rotations = enumerate_rotations(p.n_qubits())?;
    // moves in tie-break order: generator index, then exponent +1 before −1
    let mut parent: HashMap<usize, (usize, Rotation, i8)> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    'bfs: while let Some(cur) = queue.pop_front() {
        for x in &rotations {
            for e in [1i8, -1] {
                let v = &p.states()[cur];
                let w = if e > 0 { x.apply(v)? } else { x.inverse().rotation.apply(v)? };
                let next = p.find(&w).expect("rotations leave the polytope invariant");
                if next != start && !parent.contains_key(&next) {
                    parent.insert(next, (cur, *x, e));
                    if next == goal {
                        break 'bfs;
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    let mut steps = Vec::new();
    let mut cur = goal;
    while cur != start {
        let (prev, x, e) = parent[&cur];
        steps.push((x, e));
        cur = prev;
    }
    // steps were collected goal-first; the matrix product applies rightmost
    // first, so this is already the left-to-right factor order
    Ok(GateSequence { steps })
}

/// The published Clifford decompositions: H (one qubit, three factors),
/// S = X_{01}, and CNOT (two qubits, three factors with a (1−i)/√2 prefactor).
pub fn decompose_named_gate(name: &str) -> Result<GateSequence> {
    let r1 = |j, k| make_rotation(p1(j), p1(k));
    let r2 = |j, k| make_rotation(p2(j), p2(k));
    match name {
        "S" => Ok(GateSequence { steps: vec![(r1(0, 1)?, 1)] }),
        "H" => Ok(GateSequence {
            steps: vec![(r1(0, 2)?, 1), (r1(0, 1)?, 1), (r1(2, 0)?, -1)],
        }),
        "CNOT" => Ok(GateSequence {
            steps: vec![(r2(0, 2)?, -1), (r2(0, 6)?, 1), (r2(0, 4)?, -1)],
        }),
        other => Err(Error::domain(format!("unknown gate name: {other}"))),
    }
}

fn p1(idx: u64) -> PauliOp {
    PauliOp::from_index(1, idx).unwrap()
}

fn p2(idx: u64) -> PauliOp {
    PauliOp::from_index(2, idx).unwrap()
}

/// Standard dense forms of the named gates. The phase gate follows the
/// rotation construction's convention: S = X_{01} is projectively diag(1, −i).
pub fn named_gate_matrix(name: &str) -> Result<CMatrix> {
    let o = CycAmp::ZERO;
    let l = CycAmp::ONE;
    match name {
        "S" => Ok(CMatrix { dim: 2, entries: vec![l, o, o, -CycAmp::I] }),
        "H" => Ok(CMatrix {
            dim: 2,
            entries: vec![
                CycAmp::sqrt2_pow(-1),
                CycAmp::sqrt2_pow(-1),
                CycAmp::sqrt2_pow(-1),
                -CycAmp::sqrt2_pow(-1),
            ],
        }),
        "CNOT" => Ok(CMatrix {
            dim: 4,
            entries: vec![l, o, o, o, o, l, o, o, o, o, o, l, o, o, l, o],
        }),
        other => Err(Error::domain(format!("unknown gate name: {other}"))),
    }
}

/// Shortest sequence over `generators` (exponents ±1) whose product equals
/// `target` up to a unit ζ^m, by breadth-first search with canonical
/// projective deduplication. Ties resolve to the first expansion in
/// (generator index, +1 before −1) order.
pub fn synthesize(
    target: &CMatrix,
    generators: &[Rotation],
    max_depth: usize,
) -> Result<GateSequence> {
    if generators.is_empty() {
        return Err(Error::domain("synthesis needs at least one generator"));
    }
    let dim = target.dim;
    let goal = target.canonical_projective().0;
    let id = CMatrix::identity(dim);
    if id.canonical_projective().0 == goal {
        return Ok(GateSequence::empty());
    }
    let moves: Vec<(Rotation, i8, CMatrix)> = {
        let mut m = Vec::new();
        for g in generators {
            m.push((*g, 1i8, g.matrix()?));
            m.push((*g, -1i8, g.inverse().matrix()?));
        }
        m
    };
    let mut seen: HashMap<CMatrix, usize> = HashMap::new();
    let mut nodes: Vec<(CMatrix, Option<(usize, Rotation, i8)>, usize)> =
        vec![(id.canonical_projective().0, None, 0)];
    seen.insert(nodes[0].0.clone(), 0);
    let mut head = 0;
    while head < nodes.len() {
        let (cur, _, depth) = nodes[head].clone();
        if depth >= max_depth {
            break;
        }
        for (g, e, f) in &moves {
            // append on the right of the matrix product
            let next = cur.matmul(f).canonical_projective().0;
            if seen.contains_key(&next) {
                continue;
            }
            let idx = nodes.len();
            seen.insert(next.clone(), idx);
            nodes.push((next.clone(), Some((head, *g, *e)), depth + 1));
            if next == goal {
                let mut steps = Vec::new();
                let mut at = idx;
                while let Some((prev, x, exp)) = nodes[at].1 {
                    steps.push((x, exp));
                    at = prev;
                }
                steps.reverse();
                return Ok(GateSequence { steps });
            }
        }
        head += 1;
    }
    Err(Error::SearchExhausted { explored: nodes.len(), max_depth })
}

/// Deterministic DOT rendering of the roadmap: nodes 1..s (entangled ones
/// shaded), one undirected edge line per (pair, rotation label).
pub fn export_dot(r: &Roadmap) -> String {
    let mut out = String::from("graph roadmap {\n");
    for (i, class) in r.node_classes.iter().enumerate() {
        let label = i + 1;
        match class {
            Some(StateClass::Entangled) => {
                let _ = writeln!(
                    out,
                    "  {label} [style=filled, fillcolor=gray80, label=\"{label}*\"];"
                );
            }
            _ => {
                let _ = writeln!(out, "  {label} [label=\"{label}\"];");
            }
        }
    }
    for &(a, b, x) in r.edges() {
        if a < b {
            let _ = writeln!(out, "  {a} -- {b} [label=\"{}\"];", x.text_form());
        }
    }
    out.push_str("}\n");
    out
}
