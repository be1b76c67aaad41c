//! E8 shells beyond the Gosset polytope: exact shell enumeration in the even
//! coordinate system, visible-point filtering, per-shell concurrence spectra
//! and the induced Bloch-ball discretization.

use crate::cyc::CycAmp;
use crate::error::{Error, Result};
use crate::state::StateVector;
use serde::Serialize;

/// Default cap on the shell index J.
pub const SHELL_CAP: u32 = 6;

/// An E8 lattice point in the even coordinate system, stored as doubled
/// integer coordinates (so half-integer points stay exact): all entries share
/// one parity and the doubled coordinate sum is ≡ 0 (mod 4).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct E8Point {
    /// 2× the actual coordinates.
    pub h: [i32; 8],
}

impl E8Point {
    pub fn is_valid(h: &[i32; 8]) -> bool {
        let parity = h[0].rem_euclid(2);
        h.iter().all(|&c| c.rem_euclid(2) == parity)
            && h.iter().sum::<i32>().rem_euclid(4) == 0
    }

    /// Shell index J with norm² = 2J; doubled coordinates give Σh² = 8J.
    pub fn shell(&self) -> u32 {
        let s: i32 = self.h.iter().map(|&c| c * c).sum();
        debug_assert_eq!(s % 8, 0);
        (s / 8) as u32
    }

    /// Primitive within the lattice: no proper divisor of the coordinates
    /// yields another E8 point.
    pub fn is_visible(&self) -> bool {
        let g = self.h.iter().fold(0i32, |g, &c| gcd(g, c.abs()));
        for d in 2..=g {
            if g % d == 0 {
                let mut reduced = [0i32; 8];
                for (r, &c) in reduced.iter_mut().zip(&self.h) {
                    *r = c / d;
                }
                if E8Point::is_valid(&reduced) {
                    return false;
                }
            }
        }
        true
    }

    /// Two-qubit reading: consecutive real pairs form the complex quadruplet
    /// (t00, t01, t10, t11); amplitudes are the (unnormalized) halves.
    pub fn to_state(&self) -> StateVector {
        let amps = (0..4)
            .map(|m| CycAmp::gauss(self.h[2 * m] as i64, self.h[2 * m + 1] as i64, 2))
            .collect();
        StateVector::new(2, amps)
    }
}

fn gcd(a: i32, b: i32) -> i32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// M_J = 240·Σ_{d|J} d³, the number of lattice sites on shell J.
pub fn shell_count_formula(j: u32) -> u64 {
    let mut s = 0u64;
    for d in 1..=j as u64 {
        if j as u64 % d == 0 {
            s += d * d * d;
        }
    }
    240 * s
}

/// All E8 points with norm² = 2J, in lexicographic doubled-coordinate order.
pub fn e8_shell(j: u32) -> Result<Vec<E8Point>> {
    e8_shell_capped(j, SHELL_CAP)
}

pub fn e8_shell_capped(j: u32, cap: u32) -> Result<Vec<E8Point>> {
    e8_shell_threads(j, cap, 1)
}

/// Shell enumeration with the leading-coordinate branches split across
/// worker threads; the final sort makes the result schedule-independent.
pub fn e8_shell_threads(j: u32, cap: u32, threads: usize) -> Result<Vec<E8Point>> {
    if j == 0 || j > cap {
        return Err(Error::CapExceeded {
            what: "E8 shell index",
            requested: j as u64,
            cap: cap as u64,
        });
    }
    let target = (8 * j) as i32;
    // leading-coordinate branches: (parity, first doubled coordinate)
    let mut branches: Vec<(i32, i32)> = Vec::new();
    for parity in [0i32, 1] {
        let start = if parity == 0 { 0 } else { 1 };
        let mut c = start;
        while c * c <= target {
            branches.push((parity, c));
            if c != 0 {
                branches.push((parity, -c));
            }
            c += 2;
        }
    }
    let run = |chunk: &[(i32, i32)]| {
        let mut local = Vec::new();
        for &(parity, first) in chunk {
            let mut h = [0i32; 8];
            h[0] = first;
            descend(target - first * first, parity, 1, first, &mut h, &mut local);
        }
        local
    };
    let mut out = if threads <= 1 {
        run(&branches)
    } else {
        let chunk = branches.len().div_ceil(threads);
        std::thread::scope(|scope| {
            let handles: Vec<_> =
                branches.chunks(chunk).map(|c| scope.spawn(move || run(c))).collect();
            handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
        })
    };
    out.sort_by_key(|p| p.h);
    Ok(out)
}

fn descend(
    remaining: i32,
    parity: i32,
    pos: usize,
    sum: i32,
    h: &mut [i32; 8],
    out: &mut Vec<E8Point>,
) {
    if pos == 8 {
        if remaining == 0 && sum.rem_euclid(4) == 0 {
            out.push(E8Point { h: *h });
        }
        return;
    }
    // remaining slots must absorb the rest of the squared norm
    let bound = isqrt(remaining);
    let start = if parity == 0 { 0 } else { 1 };
    let mut c = start;
    while c <= bound {
        for signed in if c == 0 { vec![0] } else { vec![c, -c] } {
            h[pos] = signed;
            descend(remaining - c * c, parity, pos + 1, sum + signed, h, out);
        }
        c += 2;
    }
}

fn isqrt(n: i32) -> i32 {
    if n <= 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as i32;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    while r * r > n {
        r -= 1;
    }
    r
}

pub fn visible_filter(points: &[E8Point]) -> Vec<E8Point> {
    points.iter().filter(|p| p.is_visible()).copied().collect()
}

/// Sorted concurrences of the visible shell-J states, deduplicated at 1e-9.
pub fn shell_concurrence_spectrum(j: u32) -> Result<Vec<f64>> {
    let mut values: Vec<f64> = Vec::new();
    for p in visible_filter(&e8_shell(j)?) {
        let c = super::gosset::concurrence(&p.to_state())?;
        if !values.iter().any(|&v| (v - c).abs() < 1e-9) {
            values.push(c);
        }
    }
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(values)
}

/// A Bloch-ball site: exact first-qubit Bloch vector (⟨σ_z⟩, ⟨σ_x⟩, ⟨σ_y⟩)
/// as integer numerators over a common denominator 8J.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Debug)]
pub struct BlochPoint {
    pub num: [i64; 3],
    pub den: i64,
}

impl BlochPoint {
    pub fn to_f64(&self) -> [f64; 3] {
        [
            self.num[0] as f64 / self.den as f64,
            self.num[1] as f64 / self.den as f64,
            self.num[2] as f64 / self.den as f64,
        ]
    }

    pub fn radius(&self) -> f64 {
        let [a, b, c] = self.to_f64();
        (a * a + b * b + c * c).sqrt()
    }

    fn reduced(num: [i64; 3], den: i64) -> BlochPoint {
        let g = num.iter().fold(den, |g, &n| gcd64(g, n.abs()));
        BlochPoint { num: [num[0] / g, num[1] / g, num[2] / g], den: den / g }
    }
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd64(b, a % b)
    }
}

/// Trace out the second qubit of every visible shell-J state and collect the
/// distinct first-qubit Bloch vectors with their site multiplicities.
pub fn bloch_ball_discretization(j: u32) -> Result<Vec<(BlochPoint, usize)>> {
    let den = (8 * j) as i64;
    let mut out: Vec<(BlochPoint, usize)> = Vec::new();
    for p in visible_filter(&e8_shell(j)?) {
        let h: Vec<i64> = p.h.iter().map(|&c| c as i64).collect();
        let nz = h[0] * h[0] + h[1] * h[1] + h[2] * h[2] + h[3] * h[3]
            - h[4] * h[4]
            - h[5] * h[5]
            - h[6] * h[6]
            - h[7] * h[7];
        let nx = 2 * (h[0] * h[4] + h[1] * h[5] + h[2] * h[6] + h[3] * h[7]);
        let ny = 2 * (h[1] * h[4] - h[0] * h[5] + h[3] * h[6] - h[2] * h[7]);
        let b = BlochPoint::reduced([nz, nx, ny], den);
        match out.iter_mut().find(|(q, _)| *q == b) {
            Some((_, m)) => *m += 1,
            None => out.push((b, 1)),
        }
    }
    out.sort_by_key(|(b, _)| (b.den, b.num));
    Ok(out)
}
