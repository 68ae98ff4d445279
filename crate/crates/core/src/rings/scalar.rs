use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{close, Associative, Commutative, Field, IntegralDomain, Ring};

/// Real scalars that can carry quaternion and octonion components.
pub trait Scalar: Field + PartialOrd + std::fmt::Display {
    fn to_f64(&self) -> f64;

    /// The exact value, when the scalar is exact.
    fn to_rational(&self) -> Option<BigRational>;
}

impl Ring for BigRational {
    const NAME: &'static str = "rational";
    const COMMUTATIVE: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Associative for BigRational {}
impl Commutative for BigRational {}

impl IntegralDomain for BigRational {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!Zero::is_zero(d)).then(|| self / d)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Scalar for BigRational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

impl Ring for f64 {
    const NAME: &'static str = "real64";
    const COMMUTATIVE: bool = true;
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        *self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        close((self - other).abs(), self.abs(), other.abs(), tol)
    }
}

impl Associative for f64 {}
impl Commutative for f64 {}

impl IntegralDomain for f64 {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        (*d != 0.0).then(|| self / d)
    }
}

impl Field for f64 {
    fn inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }
}

impl Scalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }

    fn to_rational(&self) -> Option<BigRational> {
        None
    }
}

impl Ring for Complex64 {
    const NAME: &'static str = "complex64";
    const COMMUTATIVE: bool = true;
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        close(
            Complex64::norm(self - other),
            Complex64::norm(*self),
            Complex64::norm(*other),
            tol,
        )
    }
}

impl Associative for Complex64 {}
impl Commutative for Complex64 {}

impl IntegralDomain for Complex64 {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!Ring::is_zero(d)).then(|| self / d)
    }
}

impl Field for Complex64 {
    fn inv(&self) -> Option<Self> {
        (!Ring::is_zero(self)).then(|| Complex64::new(1.0, 0.0) / self)
    }
}
