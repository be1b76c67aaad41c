//! Exact arithmetic in the ring generated by the Gaussian integers and 1/√2.
//!
//! Every amplitude, eigenvalue and gate-matrix entry in this crate lives in
//! the ring Z[ζ, 1/√2] with ζ = e^{iπ/4}. A value is stored as an integer
//! combination of 1, ζ, ζ², ζ³ (with ζ⁴ = −1) divided by a power of √2, so
//! equality tests are exact and no floating point enters the algebra.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of Z[ζ, 1/√2], ζ = e^{iπ/4}: value = (c0 + c1·ζ + c2·ζ² + c3·ζ³) / √2^k.
///
/// Kept in canonical form: `k` is the minimal exponent for which the
/// numerator has integer coefficients, and the zero value has `k = 0`.
/// Note ζ² = i and √2 = ζ − ζ³, so this contains the Gaussian integers and
/// every eighth root of unity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycAmp {
    c: [i64; 4],
    k: u32,
}

impl CycAmp {
    pub const ZERO: CycAmp = CycAmp { c: [0; 4], k: 0 };
    pub const ONE: CycAmp = CycAmp { c: [1, 0, 0, 0], k: 0 };
    pub const I: CycAmp = CycAmp { c: [0, 0, 1, 0], k: 0 };

    pub fn new(c: [i64; 4], k: u32) -> CycAmp {
        let mut v = CycAmp { c, k };
        v.reduce();
        v
    }

    /// (re + i·im) / √2^k.
    pub fn gauss(re: i64, im: i64, k: u32) -> CycAmp {
        CycAmp::new([re, 0, im, 0], k)
    }

    pub fn from_int(n: i64) -> CycAmp {
        CycAmp::new([n, 0, 0, 0], 0)
    }

    /// The unit ζ^m = e^{imπ/4}.
    pub fn unit(m: u8) -> CycAmp {
        let m = (m % 8) as usize;
        let mut c = [0i64; 4];
        if m < 4 {
            c[m] = 1;
        } else {
            c[m - 4] = -1;
        }
        CycAmp { c, k: 0 }
    }

    /// √2^p for any integer p (negative p gives inverse powers).
    pub fn sqrt2_pow(p: i32) -> CycAmp {
        CycAmp::ONE.mul_sqrt2_pow(p)
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0; 4]
    }

    /// Numerator coefficients over {1, ζ, ζ², ζ³} in canonical form.
    pub fn coeffs(&self) -> [i64; 4] {
        self.c
    }

    /// The canonical denominator exponent: value = numerator / √2^k.
    pub fn sqrt2_denom_exp(&self) -> u32 {
        self.k
    }

    fn reduce(&mut self) {
        if self.is_zero() {
            self.k = 0;
            return;
        }
        // x/√2 is integral iff x·√2/2 has integer coefficients.
        while self.k > 0 {
            let [a, b, c, d] = self.c;
            if (a + c) % 2 == 0 && (b + d) % 2 == 0 {
                self.c = [(b - d) / 2, (a + c) / 2, (b + d) / 2, (c - a) / 2];
                self.k -= 1;
            } else {
                break;
            }
        }
    }

    /// Numerator multiplication by √2 = ζ − ζ³ (exponent untouched).
    fn numer_times_sqrt2(c: [i64; 4]) -> [i64; 4] {
        let [a, b, cc, d] = c;
        [b - d, a + cc, b + d, cc - a]
    }

    /// Multiply by √2^p.
    pub fn mul_sqrt2_pow(self, p: i32) -> CycAmp {
        if p >= 0 {
            let p = p as u32;
            if self.k >= p {
                CycAmp::new(self.c, self.k - p)
            } else {
                let mut c = self.c;
                for _ in 0..(p - self.k) {
                    c = Self::numer_times_sqrt2(c);
                }
                CycAmp::new(c, 0)
            }
        } else {
            CycAmp::new(self.c, self.k + (-p) as u32)
        }
    }

    /// Multiply by the unit ζ^m.
    pub fn mul_unit(self, m: u8) -> CycAmp {
        let mut c = self.c;
        for _ in 0..(m % 8) {
            c = [-c[3], c[0], c[1], c[2]];
        }
        CycAmp { c, k: self.k }
    }

    pub fn conj(self) -> CycAmp {
        CycAmp {
            c: [self.c[0], -self.c[3], -self.c[2], -self.c[1]],
            k: self.k,
        }
    }

    /// |self|² as an exact ring element (always real).
    pub fn mag_sq(self) -> CycAmp {
        self * self.conj()
    }

    /// If the value equals √2^p exactly, return p.
    pub fn as_sqrt2_power(self) -> Option<i32> {
        let [a, b, c, d] = self.c;
        // 2^j / √2^k
        if b == 0 && c == 0 && d == 0 && a > 0 && a.count_ones() == 1 {
            return Some(2 * a.trailing_zeros() as i32 - self.k as i32);
        }
        // 2^j·(ζ − ζ³) / √2^k
        if a == 0 && c == 0 && b == -d && b > 0 && b.count_ones() == 1 {
            return Some(2 * b.trailing_zeros() as i32 + 1 - self.k as i32);
        }
        None
    }

    /// Gaussian form (re, im, k) with value = (re + i·im)/√2^k, when one exists.
    pub fn as_gauss(self) -> Option<(i64, i64, u32)> {
        let [a, b, c, d] = self.c;
        if b == 0 && d == 0 {
            return Some((a, c, self.k));
        }
        if a == 0 && c == 0 {
            // value·√2 is Gaussian
            return Some((b - d, b + d, self.k + 1));
        }
        None
    }

    pub fn re_f64(self) -> f64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        (self.c[0] as f64 + (self.c[1] - self.c[3]) as f64 * s) / 2f64.powf(self.k as f64 / 2.0)
    }

    pub fn im_f64(self) -> f64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        (self.c[2] as f64 + (self.c[1] + self.c[3]) as f64 * s) / 2f64.powf(self.k as f64 / 2.0)
    }

    pub fn abs_f64(self) -> f64 {
        self.mag_sq().re_f64().sqrt()
    }

    /// Exact sign of the real part.
    pub fn re_sign(self) -> i32 {
        sign_a_sqrt2_plus_b(self.c[0], self.c[1] - self.c[3])
    }

    /// Exact sign of the imaginary part.
    pub fn im_sign(self) -> i32 {
        sign_a_sqrt2_plus_b(self.c[2], self.c[1] + self.c[3])
    }

    /// Exact sign of Re − Im.
    fn re_minus_im_sign(self) -> i32 {
        sign_a_sqrt2_plus_b(self.c[0] - self.c[2], -2 * self.c[3])
    }

    /// True when the argument lies in [0, π/4), the canonical phase sector.
    pub fn in_first_octant(self) -> bool {
        self.re_sign() > 0 && self.im_sign() >= 0 && self.re_minus_im_sign() > 0
    }

    /// The unique m in 0..8 for which self·ζ^m lands in [0, π/4). None for zero.
    pub fn octant_correction(self) -> Option<u8> {
        if self.is_zero() {
            return None;
        }
        (0..8).find(|&m| self.mul_unit(m).in_first_octant())
    }
}

/// Exact sign of a·√2 + b.
fn sign_a_sqrt2_plus_b(a: i64, b: i64) -> i32 {
    match (a.signum(), b.signum()) {
        (0, s) => s as i32,
        (s, 0) => s as i32,
        (1, 1) => 1,
        (-1, -1) => -1,
        _ => {
            // opposite signs: |a√2| vs |b| decides
            let lhs = 2 * (a as i128) * (a as i128);
            let rhs = (b as i128) * (b as i128);
            if lhs == rhs {
                // a√2 = ±b impossible for nonzero integers
                unreachable!("sqrt(2) is irrational");
            }
            if (lhs > rhs) == (a > 0) {
                1
            } else {
                -1
            }
        }
    }
}

impl Add for CycAmp {
    type Output = CycAmp;
    fn add(self, rhs: CycAmp) -> CycAmp {
        let k = self.k.max(rhs.k);
        let mut a = self.c;
        for _ in 0..(k - self.k) {
            a = CycAmp::numer_times_sqrt2(a);
        }
        let mut b = rhs.c;
        for _ in 0..(k - rhs.k) {
            b = CycAmp::numer_times_sqrt2(b);
        }
        CycAmp::new([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]], k)
    }
}

impl Sub for CycAmp {
    type Output = CycAmp;
    fn sub(self, rhs: CycAmp) -> CycAmp {
        self + (-rhs)
    }
}

impl Neg for CycAmp {
    type Output = CycAmp;
    fn neg(self) -> CycAmp {
        CycAmp {
            c: [-self.c[0], -self.c[1], -self.c[2], -self.c[3]],
            k: self.k,
        }
    }
}

impl Mul for CycAmp {
    type Output = CycAmp;
    fn mul(self, rhs: CycAmp) -> CycAmp {
        let mut c = [0i64; 4];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let d = i + j;
                if d < 4 {
                    c[d] += a * b;
                } else {
                    c[d - 4] -= a * b; // ζ⁴ = −1
                }
            }
        }
        CycAmp::new(c, self.k + rhs.k)
    }
}

impl fmt::Debug for CycAmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}ζ+{}ζ²+{}ζ³)/√2^{}", self.c[0], self.c[1], self.c[2], self.c[3], self.k)
    }
}

impl fmt::Display for CycAmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_gauss() {
            Some((re, im, 0)) => write!(f, "{}{:+}i", re, im),
            Some((re, im, k)) => write!(f, "({}{:+}i)/√2^{}", re, im, k),
            None => write!(f, "{:?}", self),
        }
    }
}

/// A dense square matrix over [`CycAmp`], row major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CMatrix {
    pub dim: usize,
    pub entries: Vec<CycAmp>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> CMatrix {
        CMatrix { dim, entries: vec![CycAmp::ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> CMatrix {
        let mut m = CMatrix::zeros(dim);
        for r in 0..dim {
            m[(r, r)] = CycAmp::ONE;
        }
        m
    }

    pub fn scale(&self, s: CycAmp) -> CMatrix {
        CMatrix { dim: self.dim, entries: self.entries.iter().map(|&e| e * s).collect() }
    }

    pub fn add(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        CMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| a + b).collect(),
        }
    }

    pub fn matmul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)] + a * b;
                    }
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> CMatrix {
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycAmp]) -> Vec<CycAmp> {
        assert_eq!(self.dim, v.len());
        let n = self.dim;
        (0..n)
            .map(|r| {
                let mut acc = CycAmp::ZERO;
                for c in 0..n {
                    if !v[c].is_zero() && !self[(r, c)].is_zero() {
                        acc = acc + self[(r, c)] * v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == CMatrix::identity(self.dim)
    }

    /// Tensor (Kronecker) product; `self` acts on the more significant factor.
    pub fn kron(&self, rhs: &CMatrix) -> CMatrix {
        let n = self.dim;
        let m = rhs.dim;
        let mut out = CMatrix::zeros(n * m);
        for r1 in 0..n {
            for c1 in 0..m {
                for r2 in 0..n {
                    for c2 in 0..m {
                        out[(r1 * m + c1, r2 * m + c2)] = self[(r1, r2)] * rhs[(c1, c2)];
                    }
                }
            }
        }
        out
    }

    /// Canonical representative of the ray {ζ^m·M}: the unique unit multiple
    /// whose first nonzero entry (row major) has argument in [0, π/4).
    /// Returns the canonical matrix and the exponent m that was applied.
    pub fn canonical_projective(&self) -> (CMatrix, u8) {
        let lead = self.entries.iter().find(|e| !e.is_zero());
        let m = match lead {
            Some(e) => e.octant_correction().unwrap(),
            None => 0,
        };
        let out = CMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.mul_unit(m)).collect(),
        };
        (out, m)
    }

    /// Equality up to a unit phase ζ^m; returns m with self = ζ^m·rhs when it holds.
    pub fn eq_up_to_unit(&self, rhs: &CMatrix) -> Option<u8> {
        if self.dim != rhs.dim {
            return None;
        }
        let (a, ma) = self.canonical_projective();
        let (b, mb) = rhs.canonical_projective();
        if a == b {
            // self·ζ^ma = rhs·ζ^mb
            Some((mb + 8 - ma) % 8)
        } else {
            None
        }
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = CycAmp;
    fn index(&self, (r, c): (usize, usize)) -> &CycAmp {
        &self.entries[r * self.dim + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut CycAmp {
        &mut self.entries[r * self.dim + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn zeta_powers() {
        let zeta = CycAmp::unit(1);
        assert_eq!(zeta * zeta, CycAmp::I);
        let mut p = CycAmp::ONE;
        for _ in 0..8 {
            p = p * zeta;
        }
        assert_eq!(p, CycAmp::ONE);
        // ζ = (1+i)/√2
        assert_eq!(zeta, CycAmp::gauss(1, 1, 1));
    }

    #[test]
    fn sqrt2_reduction() {
        let two = CycAmp::gauss(2, 0, 0);
        assert_eq!(two.as_sqrt2_power(), Some(2));
        let s = CycAmp::sqrt2_pow(1);
        assert_eq!(s * s, two);
        assert_eq!(CycAmp::sqrt2_pow(-3).as_sqrt2_power(), Some(-3));
        assert_eq!(CycAmp::gauss(1, 1, 1).as_sqrt2_power(), None);
        // (2+2i)/2 = 1+i
        assert_eq!(CycAmp::gauss(2, 2, 2), CycAmp::gauss(1, 1, 0));
    }

    #[test]
    fn octant_selection() {
        // 1+i sits at π/4, rotates down to arg 0
        let v = CycAmp::gauss(1, 1, 0);
        let m = v.octant_correction().unwrap();
        assert_eq!(v.mul_unit(m), CycAmp::sqrt2_pow(1));
        // pure i rotates by −π/2
        assert_eq!(CycAmp::I.octant_correction(), Some(6));
        assert!(CycAmp::ONE.in_first_octant());
        assert!(!CycAmp::gauss(-1, 0, 0).in_first_octant());
        // every unit has exactly one correction into the first octant
        for m in 0..8 {
            let u = CycAmp::unit(m);
            assert_eq!(u.mul_unit(u.octant_correction().unwrap()), CycAmp::ONE);
        }
    }

    #[test]
    fn conjugation_and_magnitude() {
        let v = CycAmp::new([1, 2, -1, 3], 3);
        let m = v.mag_sq();
        assert_eq!(m.im_sign(), 0);
        assert!(close(m.re_f64(), v.re_f64().powi(2) + v.im_f64().powi(2)));
    }

    #[test]
    fn matrix_identities() {
        let h = CMatrix {
            dim: 2,
            entries: vec![
                CycAmp::gauss(1, 0, 1),
                CycAmp::gauss(1, 0, 1),
                CycAmp::gauss(1, 0, 1),
                CycAmp::gauss(-1, 0, 1),
            ],
        };
        assert!(h.matmul(&h).is_identity());
        assert!(h.adjoint().matmul(&h).is_identity());
        let (c1, _) = h.scale(CycAmp::unit(5)).canonical_projective();
        let (c2, _) = h.canonical_projective();
        assert_eq!(c1, c2);
        assert_eq!(h.scale(CycAmp::unit(3)).eq_up_to_unit(&h), Some(3));
    }

    proptest! {
        #[test]
        fn arithmetic_matches_f64(a in -20i64..20, b in -20i64..20, c in -20i64..20, d in -20i64..20,
                                  e in -20i64..20, f in -20i64..20, g in -20i64..20, h in -20i64..20,
                                  k1 in 0u32..4, k2 in 0u32..4) {
            let x = CycAmp::new([a, b, c, d], k1);
            let y = CycAmp::new([e, f, g, h], k2);
            let (xr, xi) = (x.re_f64(), x.im_f64());
            let (yr, yi) = (y.re_f64(), y.im_f64());
            let s = x + y;
            prop_assert!(close(s.re_f64(), xr + yr) && close(s.im_f64(), xi + yi));
            let p = x * y;
            prop_assert!(close(p.re_f64(), xr * yr - xi * yi));
            prop_assert!(close(p.im_f64(), xr * yi + xi * yr));
            prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
        }

        #[test]
        fn canonical_form_is_stable(a in -20i64..20, b in -20i64..20, c in -20i64..20, d in -20i64..20, k in 0u32..5) {
            let x = CycAmp::new([a, b, c, d], k);
            // scaling by 2/√2² is the identity
            prop_assert_eq!(x.mul_sqrt2_pow(2).mul_sqrt2_pow(-2), x);
            prop_assert_eq!(CycAmp::new([2 * a, 2 * b, 2 * c, 2 * d], k + 2), x);
        }
    }
}
