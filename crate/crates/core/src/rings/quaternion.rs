use std::fmt;

use num_complex::Complex64;

use super::{close, Associative, Gaussian, Ring, Scalar};
use num_rational::BigRational;

/// `w + x i + y j + z k` over a real scalar type.
#[derive(Clone, PartialEq, Debug)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> Quaternion<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_real(w: T) -> Self {
        Quaternion::new(w, T::zero(), T::zero(), T::zero())
    }

    pub fn components(&self) -> [&T; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    /// `w^2 + x^2 + y^2 + z^2` as a scalar.
    pub fn norm_sq(&self) -> T {
        self.components()
            .iter()
            .fold(T::zero(), |acc, c| acc.add(&c.mul(c)))
    }

    /// Scalar part; the norm of any quaternion is purely real.
    pub fn real(&self) -> &T {
        &self.w
    }

    pub fn scale_by(&self, s: &T) -> Self {
        Quaternion::new(self.w.mul(s), self.x.mul(s), self.y.mul(s), self.z.mul(s))
    }
}

impl Quaternion<f64> {
    pub fn i() -> Self {
        Quaternion::new(0.0, 1.0, 0.0, 0.0)
    }
    pub fn j() -> Self {
        Quaternion::new(0.0, 0.0, 1.0, 0.0)
    }
    pub fn k() -> Self {
        Quaternion::new(0.0, 0.0, 0.0, 1.0)
    }

    /// The 2x2 complex block `[[w + x i, y + z i], [-y + z i, w - x i]]`.
    pub fn complex_block(&self) -> [[Complex64; 2]; 2] {
        [
            [
                Complex64::new(self.w, self.x),
                Complex64::new(self.y, self.z),
            ],
            [
                Complex64::new(-self.y, self.z),
                Complex64::new(self.w, -self.x),
            ],
        ]
    }
}

impl Quaternion<BigRational> {
    /// Same embedding as [`Quaternion::<f64>::complex_block`] with exact entries.
    pub fn complex_block(&self) -> [[Gaussian; 2]; 2] {
        [
            [
                Gaussian::new(self.w.clone(), self.x.clone()),
                Gaussian::new(self.y.clone(), self.z.clone()),
            ],
            [
                Gaussian::new(-&self.y, self.z.clone()),
                Gaussian::new(self.w.clone(), -&self.x),
            ],
        ]
    }

    pub fn to_f64(&self) -> Quaternion<f64> {
        Quaternion::new(
            self.w.to_f64(),
            self.x.to_f64(),
            self.y.to_f64(),
            self.z.to_f64(),
        )
    }
}

impl<T: Scalar> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {} i + {} j + {} k", self.w, self.x, self.y, self.z)
    }
}

impl<T: Scalar> Ring for Quaternion<T> {
    const NAME: &'static str = "quaternion";
    const COMMUTATIVE: bool = false;
    const EXACT: bool = T::EXACT;

    fn zero() -> Self {
        Quaternion::from_real(T::zero())
    }
    fn one() -> Self {
        Quaternion::from_real(T::one())
    }
    fn from_int(n: i64) -> Self {
        Quaternion::from_real(T::from_int(n))
    }
    fn add(&self, o: &Self) -> Self {
        Quaternion::new(
            self.w.add(&o.w),
            self.x.add(&o.x),
            self.y.add(&o.y),
            self.z.add(&o.z),
        )
    }
    fn sub(&self, o: &Self) -> Self {
        Quaternion::new(
            self.w.sub(&o.w),
            self.x.sub(&o.x),
            self.y.sub(&o.y),
            self.z.sub(&o.z),
        )
    }
    fn mul(&self, o: &Self) -> Self {
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion::new(
            a.mul(e).sub(&b.mul(f)).sub(&c.mul(g)).sub(&d.mul(h)),
            a.mul(f).add(&b.mul(e)).add(&c.mul(h)).sub(&d.mul(g)),
            a.mul(g).sub(&b.mul(h)).add(&c.mul(e)).add(&d.mul(f)),
            a.mul(h).add(&b.mul(g)).sub(&c.mul(f)).add(&d.mul(e)),
        )
    }
    fn neg(&self) -> Self {
        Quaternion::new(self.w.neg(), self.x.neg(), self.y.neg(), self.z.neg())
    }
    fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), self.x.neg(), self.y.neg(), self.z.neg())
    }
    fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }
    fn scale(&self, k: i64) -> Self {
        self.scale_by(&T::from_int(k))
    }
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let diff = self.sub(other).norm_sq().to_f64().sqrt();
        close(
            diff,
            self.norm_sq().to_f64().sqrt(),
            other.norm_sq().to_f64().sqrt(),
            tol,
        )
    }
}

impl<T: Scalar> Associative for Quaternion<T> {}
