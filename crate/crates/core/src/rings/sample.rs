//! Energy assignments: symbolic generators, unit samplers and random values.

use std::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    FreeElem, Gaussian, Octonion, Poly, Quaternion, Ring, RingTag, RingValue, Symbols, Tagged,
};
use crate::complex::Geometry;
use crate::error::{Error, Result};

/// Float tolerance for the unit flag.
pub const UNIT_TOL: f64 = 1e-12;

/// Values of `h` in canonical simplex order, all in one ring.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergyAssignment {
    tag: RingTag,
    values: Vec<RingValue>,
    symbols: Symbols,
}

impl EnergyAssignment {
    pub fn new(tag: RingTag, values: Vec<RingValue>, symbols: Symbols) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| v.tag() != tag) {
            return Err(Error::RingMismatch(tag.to_string(), v.tag().to_string()));
        }
        Ok(EnergyAssignment {
            tag,
            values,
            symbols,
        })
    }

    pub fn from_typed<R: Tagged>(values: Vec<R>, symbols: Symbols) -> Self {
        EnergyAssignment {
            tag: R::TAG,
            values: values.into_iter().map(Tagged::into_value).collect(),
            symbols,
        }
    }

    pub fn typed<R: Tagged>(&self) -> Result<Vec<R>> {
        if self.tag != R::TAG {
            return Err(Error::RingMismatch(
                R::TAG.to_string(),
                self.tag.to_string(),
            ));
        }
        Ok(self
            .values
            .iter()
            .map(|v| R::from_value(v).expect("tag checked"))
            .collect())
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn values(&self) -> &[RingValue] {
        &self.values
    }

    pub fn symbols(&self) -> &Symbols {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// True iff `h(x)* h(x) = 1` everywhere, exactly or within [`UNIT_TOL`].
    pub fn is_unit(&self) -> bool {
        self.values.iter().all(|v| {
            let n = v.norm();
            match &n {
                RingValue::Complex64(c) => Ring::approx_eq(c, &Complex64::new(1.0, 0.0), UNIT_TOL),
                RingValue::Quaternion64(q) => q.approx_eq(&Quaternion::one(), UNIT_TOL),
                RingValue::Octonion(o) => o.approx_eq(&Octonion::one(), UNIT_TOL),
                _ => n.is_one(),
            }
        })
    }
}

/// Unit-valued typed assignments: `h(x)* h(x) = 1` for all `x`.
pub fn is_unit_valued<R: Ring>(values: &[R]) -> bool {
    let tol = if R::EXACT { 0.0 } else { UNIT_TOL };
    values.iter().all(|v| v.norm().approx_eq(&R::one(), tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolicRing {
    /// Free *-algebra generators.
    Free,
    /// Commuting real variables.
    Poly,
}

/// Assigns the i-th canonical simplex the i-th generator.
///
/// Names default to `x1, ..., xn`.
pub fn symbolic_generators(
    g: &Geometry,
    ring: SymbolicRing,
    names: Option<Symbols>,
) -> EnergyAssignment {
    let symbols = names.unwrap_or_else(|| Symbols::indexed("x", g.len()));
    let n = g.len() as u32;
    match ring {
        SymbolicRing::Free => {
            EnergyAssignment::from_typed((0..n).map(FreeElem::gen).collect(), symbols)
        }
        SymbolicRing::Poly => {
            EnergyAssignment::from_typed((0..n).map(Poly::var).collect(), symbols)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitFamily {
    /// `{-1, +1}` as rationals.
    Pm1,
    /// `h(x) = omega(x)`.
    Topological,
    /// `exp(2 pi i p/q)` as complex doubles.
    U1,
    /// Exact Pythagorean points on the unit circle.
    U1Exact,
    /// Normalized random quaternions in doubles.
    UnitQuaternion,
    /// `p^2 / N(p)` for random integer quaternions `p`, exact.
    UnitQuaternionExact,
}

impl FromStr for UnitFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "pm1" => UnitFamily::Pm1,
            "topological" | "omega" => UnitFamily::Topological,
            "u1" => UnitFamily::U1,
            "u1_exact" => UnitFamily::U1Exact,
            "unit_quaternion" => UnitFamily::UnitQuaternion,
            "unit_quaternion_exact" => UnitFamily::UnitQuaternionExact,
            _ => return Err(Error::Parse(format!("unknown unit family '{s}'"))),
        })
    }
}

pub fn sample_units(g: &Geometry, family: UnitFamily, seed: u64) -> EnergyAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.len();
    let none = Symbols::default;
    match family {
        UnitFamily::Pm1 => EnergyAssignment::from_typed(
            (0..n)
                .map(|_| BigRational::from_int(if rng.random_bool(0.5) { 1 } else { -1 }))
                .collect(),
            none(),
        ),
        UnitFamily::Topological => EnergyAssignment::from_typed(
            g.omegas().into_iter().map(BigRational::from_int).collect(),
            none(),
        ),
        UnitFamily::U1 => EnergyAssignment::from_typed(
            (0..n)
                .map(|_| random_u1(&mut rng))
                .collect::<Vec<Complex64>>(),
            none(),
        ),
        UnitFamily::U1Exact => EnergyAssignment::from_typed(
            (0..n)
                .map(|_| random_gaussian_unit(&mut rng))
                .collect::<Vec<Gaussian>>(),
            none(),
        ),
        UnitFamily::UnitQuaternion => EnergyAssignment::from_typed(
            (0..n)
                .map(|_| random_unit_quaternion(&mut rng))
                .collect::<Vec<Quaternion<f64>>>(),
            none(),
        ),
        UnitFamily::UnitQuaternionExact => EnergyAssignment::from_typed(
            (0..n)
                .map(|_| random_exact_unit_quaternion(&mut rng))
                .collect::<Vec<Quaternion<BigRational>>>(),
            none(),
        ),
    }
}

/// `exp(2 pi i p/q)` with `1 <= q <= 12`.
pub fn random_u1<R: Rng>(rng: &mut R) -> Complex64 {
    let q = rng.random_range(1..=12);
    let p = rng.random_range(0..q);
    Complex64::from_polar(1.0, std::f64::consts::TAU * p as f64 / q as f64)
}

pub fn random_gaussian_unit<R: Rng>(rng: &mut R) -> Gaussian {
    loop {
        let p = rng.random_range(-6i64..=6);
        let q = rng.random_range(-6i64..=6);
        if p != 0 || q != 0 {
            return Gaussian::unit_from_pythagorean(p, q);
        }
    }
}

pub fn random_unit_quaternion<R: Rng>(rng: &mut R) -> Quaternion<f64> {
    loop {
        let q = Quaternion::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        let n = q.norm_sq();
        if n > 1e-6 {
            return q.scale_by(&(1.0 / n.sqrt()));
        }
    }
}

pub fn random_exact_unit_quaternion<R: Rng>(rng: &mut R) -> Quaternion<BigRational> {
    loop {
        let p = random_quaternion(rng, 4);
        if !p.is_zero() {
            let n = p.norm_sq();
            return p.mul(&p).scale_by(&(BigRational::one() / n));
        }
    }
}

/// Small rational `p/q` with `|p| <= bound`, `1 <= q <= 3`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> BigRational {
    BigRational::new(
        rng.random_range(-bound..=bound).into(),
        rng.random_range(1i64..=3).into(),
    )
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> BigRational {
    loop {
        let q = random_rational(rng, bound);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn random_gaussian<R: Rng>(rng: &mut R, bound: i64) -> Gaussian {
    Gaussian::new(random_rational(rng, bound), random_rational(rng, bound))
}

pub fn random_quaternion<R: Rng>(rng: &mut R, bound: i64) -> Quaternion<BigRational> {
    Quaternion::new(
        random_rational(rng, bound),
        random_rational(rng, bound),
        random_rational(rng, bound),
        random_rational(rng, bound),
    )
}

pub fn random_quaternion64<R: Rng>(rng: &mut R) -> Quaternion<f64> {
    Quaternion::new(
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
    )
}

pub fn random_octonion<R: Rng>(rng: &mut R) -> Octonion {
    let mut c = [0.0; 8];
    for x in &mut c {
        *x = rng.random_range(-2.0..2.0);
    }
    Octonion::from_components(c)
}

pub fn random_complex64<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complete;

    #[test]
    fn symbolic_k2() {
        let k2 = complete(2);
        let a = symbolic_generators(&k2, SymbolicRing::Poly, None);
        let rendered: Vec<String> = a.values().iter().map(|v| v.render(a.symbols())).collect();
        assert_eq!(rendered, ["x1", "x2", "x3"]);
        let b = symbolic_generators(&k2, SymbolicRing::Free, None);
        assert_eq!(b.tag(), RingTag::Free);
        assert!(!b.is_unit());
        assert!(symbolic_generators(&Geometry::empty(), SymbolicRing::Free, None).is_empty());
    }

    #[test]
    fn unit_families_are_units() {
        let g = complete(3);
        for fam in [
            UnitFamily::Pm1,
            UnitFamily::Topological,
            UnitFamily::U1,
            UnitFamily::U1Exact,
            UnitFamily::UnitQuaternion,
            UnitFamily::UnitQuaternionExact,
        ] {
            let a = sample_units(&g, fam, 11);
            assert_eq!(a.len(), 7);
            assert!(a.is_unit(), "{fam:?}");
            assert_eq!(a, sample_units(&g, fam, 11));
        }
        let pm = sample_units(&g, UnitFamily::Pm1, 3)
            .typed::<BigRational>()
            .unwrap();
        assert!(pm.iter().all(|v| v.is_one() || v.neg().is_one()));
        assert!(sample_units(&g, UnitFamily::Pm1, 3)
            .typed::<Gaussian>()
            .is_err());
    }

    #[test]
    fn u1_within_tolerance() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            assert!((random_u1(&mut rng).norm_sqr() - 1.0).abs() < UNIT_TOL);
        }
    }
}
