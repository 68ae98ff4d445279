use std::fmt;

use num_rational::BigRational;

use super::{Associative, Commutative, Field, IntegralDomain, Ring};

/// `re + im i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    /// `a^2 + b^2` as a rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// The exact point `(p^2 - q^2 + 2pq i) / (p^2 + q^2)` on the unit circle.
    pub fn unit_from_pythagorean(p: i64, q: i64) -> Self {
        assert!(p != 0 || q != 0);
        let den = BigRational::from_integer((p * p + q * q).into());
        Gaussian::new(
            BigRational::from_integer((p * p - q * q).into()) / &den,
            BigRational::from_integer((2 * p * q).into()) / den,
        )
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {} i", self.re, self.im)
    }
}

impl Ring for Gaussian {
    const NAME: &'static str = "gaussian";
    const COMMUTATIVE: bool = true;

    fn zero() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        Gaussian::new(BigRational::one(), BigRational::zero())
    }
    fn from_int(n: i64) -> Self {
        Gaussian::from_ints(n, 0)
    }
    fn add(&self, o: &Self) -> Self {
        Gaussian::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub(&self, o: &Self) -> Self {
        Gaussian::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul(&self, o: &Self) -> Self {
        Gaussian::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    fn neg(&self) -> Self {
        Gaussian::new(-&self.re, -&self.im)
    }
    fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -&self.im)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Associative for Gaussian {}
impl Commutative for Gaussian {}

impl IntegralDomain for Gaussian {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        d.inv().map(|i| self.mul(&i))
    }
}

impl Field for Gaussian {
    fn inv(&self) -> Option<Self> {
        let n = self.norm_sq();
        (!n.is_zero()).then(|| Gaussian::new(&self.re / &n, -&self.im / &n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_of_one_plus_two_i() {
        let a = Gaussian::from_ints(1, 2);
        assert_eq!(a.norm(), Gaussian::from_int(5));
        assert_eq!(a.norm_sq(), BigRational::from_integer(5.into()));
    }

    #[test]
    fn pythagorean_points_are_units() {
        for (p, q) in [(1, 2), (3, 5), (-4, 7), (0, 1)] {
            assert!(Gaussian::unit_from_pythagorean(p, q).norm().is_one());
        }
    }
}
