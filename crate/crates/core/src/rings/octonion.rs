use std::fmt;

use super::{close, Quaternion, Ring};

/// Double-precision octonion built from two quaternions (Cayley-Dickson).
///
/// Multiplication is not associative, so octonions never reach the
/// determinant or Green-star code paths.
#[derive(Clone, PartialEq, Debug)]
pub struct Octonion {
    pub a: Quaternion<f64>,
    pub b: Quaternion<f64>,
}

impl Octonion {
    pub fn from_components(c: [f64; 8]) -> Self {
        Octonion {
            a: Quaternion::new(c[0], c[1], c[2], c[3]),
            b: Quaternion::new(c[4], c[5], c[6], c[7]),
        }
    }

    pub fn components(&self) -> [f64; 8] {
        [
            self.a.w, self.a.x, self.a.y, self.a.z, self.b.w, self.b.x, self.b.y, self.b.z,
        ]
    }

    /// Basis unit `e_i`, `e_0 = 1`.
    pub fn basis(i: usize) -> Self {
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Self::from_components(c)
    }

    pub fn norm_sq(&self) -> f64 {
        self.components().iter().map(|x| x * x).sum()
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.components())
    }
}

impl Ring for Octonion {
    const NAME: &'static str = "octonion";
    const ASSOCIATIVE: bool = false;
    const COMMUTATIVE: bool = false;
    const EXACT: bool = false;

    fn zero() -> Self {
        Self::from_components([0.0; 8])
    }
    fn one() -> Self {
        Self::basis(0)
    }
    fn from_int(n: i64) -> Self {
        let mut c = [0.0; 8];
        c[0] = n as f64;
        Self::from_components(c)
    }
    fn add(&self, o: &Self) -> Self {
        Octonion {
            a: self.a.add(&o.a),
            b: self.b.add(&o.b),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Octonion {
            a: self.a.sub(&o.a),
            b: self.b.sub(&o.b),
        }
    }
    // (a, b)(c, d) = (ac - d* b, da + b c*)
    fn mul(&self, o: &Self) -> Self {
        Octonion {
            a: self.a.mul(&o.a).sub(&o.b.conj().mul(&self.b)),
            b: o.b.mul(&self.a).add(&self.b.mul(&o.a.conj())),
        }
    }
    fn neg(&self) -> Self {
        Octonion {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }
    fn conj(&self) -> Self {
        Octonion {
            a: self.a.conj(),
            b: self.b.neg(),
        }
    }
    fn is_zero(&self) -> bool {
        self.components().iter().all(|&c| c == 0.0)
    }
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        close(
            self.sub(other).norm_sq().sqrt(),
            self.norm_sq().sqrt(),
            other.norm_sq().sqrt(),
            tol,
        )
    }
}
