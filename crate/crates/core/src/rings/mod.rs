//! Coefficient rings with conjugation.
//!
//! Every ring used for energies implements [`Ring`]. Capabilities that only
//! some rings have are expressed by marker traits: [`Associative`] for the
//! matrix products of the Green-star relation, [`IntegralDomain`] for
//! fraction-free elimination and [`Field`] for pivoting elimination.

use std::fmt;

mod free;
mod gaussian;
mod octonion;
pub mod parse;
mod poly;
mod quaternion;
pub mod sample;
mod scalar;
mod value;

pub use free::{FreeElem, Letter, Word};
pub use gaussian::Gaussian;
pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::BigRational;
pub use octonion::Octonion;
pub use poly::{Monomial, Poly};
pub use quaternion::Quaternion;
pub use scalar::Scalar;
pub use value::{RingTag, RingValue, Tagged};

/// Arbitrary-precision rational, the default exact scalar.
pub type Rational = BigRational;

/// A unital ring with an involutive anti-automorphism `conj`.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    const NAME: &'static str;
    const ASSOCIATIVE: bool = true;
    const COMMUTATIVE: bool;
    /// False for floating point payloads; comparisons then use tolerances.
    const EXACT: bool = true;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `N(a) = a* a`.
    fn norm(&self) -> Self {
        self.conj().mul(self)
    }

    /// Multiplication by an integer, which is central in every ring here.
    fn scale(&self, k: i64) -> Self {
        match k {
            0 => Self::zero(),
            1 => self.clone(),
            -1 => self.neg(),
            _ => Self::from_int(k).mul(self),
        }
    }

    /// Equality for exact rings, relative closeness for float rings.
    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn sum<'a, I: IntoIterator<Item = &'a Self>>(iter: I) -> Self {
        iter.into_iter().fold(Self::zero(), |acc, x| acc.add(x))
    }
}

pub trait Associative: Ring {}

pub trait Commutative: Associative {}

/// Commutative rings with exact division, as required by Bareiss elimination.
pub trait IntegralDomain: Commutative {
    /// `self / d` when the quotient exists in the ring.
    fn exact_div(&self, d: &Self) -> Option<Self>;
}

pub trait Field: IntegralDomain {
    fn inv(&self) -> Option<Self>;
}

/// Relative closeness `|a - b| <= tol * max(1, |a|, |b|)` on magnitudes.
pub(crate) fn close(diff: f64, a: f64, b: f64, tol: f64) -> bool {
    diff <= tol * 1f64.max(a).max(b)
}

/// Variable names used to render and parse symbolic values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Symbols(Vec<String>);

impl Symbols {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        Symbols(names.into_iter().map(Into::into).collect())
    }

    /// `x1, ..., xn`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Symbols((1..=n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn name(&self, var: u32) -> String {
        self.0
            .get(var as usize)
            .cloned()
            .unwrap_or_else(|| format!("v{var}"))
    }

    pub fn lookup(&self, name: &str) -> Option<u32> {
        self.0.iter().position(|n| n == name).map(|i| i as u32)
    }

    /// Returns the index of `name`, registering it when new.
    pub fn intern(&mut self, name: &str) -> u32 {
        if let Some(i) = self.lookup(name) {
            return i;
        }
        self.0.push(name.to_string());
        (self.0.len() - 1) as u32
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
