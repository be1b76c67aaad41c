//! Exact quaternions over the real subring of the cyclotomic scalars.

use crate::cyc::CycAmp;
use std::fmt;
use std::ops::{Add, Mul, Neg};

/// A quaternion r + i·**i** + j·**j** + k·**k** with exact real components
/// (CycAmp values with zero imaginary part).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Quaternion {
    pub r: CycAmp,
    pub i: CycAmp,
    pub j: CycAmp,
    pub k: CycAmp,
}

impl Quaternion {
    pub const ZERO: Quaternion =
        Quaternion { r: CycAmp::ZERO, i: CycAmp::ZERO, j: CycAmp::ZERO, k: CycAmp::ZERO };

    pub fn new(r: CycAmp, i: CycAmp, j: CycAmp, k: CycAmp) -> Quaternion {
        debug_assert!(
            r.im_sign() == 0 && i.im_sign() == 0 && j.im_sign() == 0 && k.im_sign() == 0,
            "quaternion components must be real scalars"
        );
        Quaternion { r, i, j, k }
    }

    pub fn unit(axis: usize) -> Quaternion {
        let mut c = [CycAmp::ZERO; 4];
        c[axis] = CycAmp::ONE;
        Quaternion::new(c[0], c[1], c[2], c[3])
    }

    pub fn from_ints(r: i64, i: i64, j: i64, k: i64) -> Quaternion {
        Quaternion::new(
            CycAmp::from_int(r),
            CycAmp::from_int(i),
            CycAmp::from_int(j),
            CycAmp::from_int(k),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion { r: self.r, i: -self.i, j: -self.j, k: -self.k }
    }

    pub fn norm_sq(&self) -> CycAmp {
        self.r * self.r + self.i * self.i + self.j * self.j + self.k * self.k
    }

    pub fn scale(&self, s: CycAmp) -> Quaternion {
        Quaternion { r: self.r * s, i: self.i * s, j: self.j * s, k: self.k * s }
    }

    /// Exact inverse; defined when the squared norm is a power of √2 (true
    /// for every point used here).
    pub fn inverse(&self) -> Option<Quaternion> {
        let p = self.norm_sq().as_sqrt2_power()?;
        Some(self.conj().scale(CycAmp::sqrt2_pow(-p)))
    }

    pub fn components(&self) -> [CycAmp; 4] {
        [self.r, self.i, self.j, self.k]
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [self.r.re_f64(), self.i.re_f64(), self.j.re_f64(), self.k.re_f64()]
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion { r: self.r + o.r, i: self.i + o.i, j: self.j + o.j, k: self.k + o.k }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion { r: -self.r, i: -self.i, j: -self.j, k: -self.k }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion {
            r: self.r * o.r - self.i * o.i - self.j * o.j - self.k * o.k,
            i: self.r * o.i + self.i * o.r + self.j * o.k - self.k * o.j,
            j: self.r * o.j - self.i * o.k + self.j * o.r + self.k * o.i,
            k: self.r * o.k + self.i * o.j - self.j * o.i + self.k * o.r,
        }
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i + {}j + {}k)", self.r, self.i, self.j, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let one = Quaternion::unit(0);
        let i = Quaternion::unit(1);
        let j = Quaternion::unit(2);
        let k = Quaternion::unit(3);
        assert_eq!(i * i, -one);
        assert_eq!(j * j, -one);
        assert_eq!(k * k, -one);
        assert_eq!(i * j, k);
        assert_eq!(j * i, -k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(i * j * k, -one);
    }

    #[test]
    fn norms_and_inverses() {
        let q = Quaternion::from_ints(1, 1, 1, 1).scale(CycAmp::sqrt2_pow(-2));
        assert_eq!(q.norm_sq(), CycAmp::ONE);
        let inv = q.inverse().unwrap();
        assert_eq!(q * inv, Quaternion::unit(0));
        // norm is multiplicative
        let p = Quaternion::from_ints(2, 0, -1, 3);
        let r = Quaternion::from_ints(0, 1, 1, 0);
        assert_eq!((p * r).norm_sq(), p.norm_sq() * r.norm_sq());
        assert!(Quaternion::ZERO.inverse().is_none());
    }
}
