//! Tagged ring values for the file formats and the command line.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::parse::{parse_free, parse_poly, parse_rational};
use super::{FreeElem, Gaussian, Octonion, Poly, Quaternion, Ring, Symbols};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RingTag {
    Rational,
    Gaussian,
    Complex64,
    Quaternion,
    Quaternion64,
    Octonion,
    Poly,
    Free,
}

impl RingTag {
    pub const ALL: [RingTag; 8] = [
        RingTag::Rational,
        RingTag::Gaussian,
        RingTag::Complex64,
        RingTag::Quaternion,
        RingTag::Quaternion64,
        RingTag::Octonion,
        RingTag::Poly,
        RingTag::Free,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RingTag::Rational => "rational",
            RingTag::Gaussian => "gaussian",
            RingTag::Complex64 => "complex64",
            RingTag::Quaternion => "quaternion",
            RingTag::Quaternion64 => "quaternion64",
            RingTag::Octonion => "octonion",
            RingTag::Poly => "poly",
            RingTag::Free => "free",
        }
    }

    pub fn is_exact(self) -> bool {
        !matches!(
            self,
            RingTag::Complex64 | RingTag::Quaternion64 | RingTag::Octonion
        )
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RingTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RingTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown ring '{s}'")))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum RingValue {
    Rational(BigRational),
    Gaussian(Gaussian),
    Complex64(Complex64),
    Quaternion(Quaternion<BigRational>),
    Quaternion64(Quaternion<f64>),
    Octonion(Octonion),
    Poly(Poly),
    Free(FreeElem),
}

/// Rings that have a [`RingValue`] variant.
pub trait Tagged: Ring {
    const TAG: RingTag;
    fn into_value(self) -> RingValue;
    fn from_value(v: &RingValue) -> Option<Self>;
}

macro_rules! tagged {
    ($ty:ty, $variant:ident) => {
        impl Tagged for $ty {
            const TAG: RingTag = RingTag::$variant;
            fn into_value(self) -> RingValue {
                RingValue::$variant(self)
            }
            fn from_value(v: &RingValue) -> Option<Self> {
                match v {
                    RingValue::$variant(x) => Some(x.clone()),
                    _ => None,
                }
            }
        }
    };
}

tagged!(BigRational, Rational);
tagged!(Gaussian, Gaussian);
tagged!(Complex64, Complex64);
tagged!(Quaternion<BigRational>, Quaternion);
tagged!(Quaternion<f64>, Quaternion64);
tagged!(Octonion, Octonion);
tagged!(Poly, Poly);
tagged!(FreeElem, Free);

macro_rules! binary {
    ($name:ident) => {
        pub fn $name(&self, other: &RingValue) -> Result<RingValue> {
            Ok(match (self, other) {
                (RingValue::Rational(a), RingValue::Rational(b)) => {
                    RingValue::Rational(Ring::$name(a, b))
                }
                (RingValue::Gaussian(a), RingValue::Gaussian(b)) => RingValue::Gaussian(a.$name(b)),
                (RingValue::Complex64(a), RingValue::Complex64(b)) => {
                    RingValue::Complex64(Ring::$name(a, b))
                }
                (RingValue::Quaternion(a), RingValue::Quaternion(b)) => {
                    RingValue::Quaternion(a.$name(b))
                }
                (RingValue::Quaternion64(a), RingValue::Quaternion64(b)) => {
                    RingValue::Quaternion64(a.$name(b))
                }
                (RingValue::Octonion(a), RingValue::Octonion(b)) => RingValue::Octonion(a.$name(b)),
                (RingValue::Poly(a), RingValue::Poly(b)) => RingValue::Poly(a.$name(b)),
                (RingValue::Free(a), RingValue::Free(b)) => RingValue::Free(a.$name(b)),
                _ => {
                    return Err(Error::RingMismatch(
                        self.tag().to_string(),
                        other.tag().to_string(),
                    ))
                }
            })
        }
    };
}

macro_rules! unary {
    ($self:ident, $x:ident => $body:expr) => {{
        match $self {
            RingValue::Rational($x) => RingValue::Rational($body),
            RingValue::Gaussian($x) => RingValue::Gaussian($body),
            RingValue::Complex64($x) => RingValue::Complex64($body),
            RingValue::Quaternion($x) => RingValue::Quaternion($body),
            RingValue::Quaternion64($x) => RingValue::Quaternion64($body),
            RingValue::Octonion($x) => RingValue::Octonion($body),
            RingValue::Poly($x) => RingValue::Poly($body),
            RingValue::Free($x) => RingValue::Free($body),
        }
    }};
}

macro_rules! predicate {
    ($self:ident, $x:ident => $body:expr) => {{
        match $self {
            RingValue::Rational($x) => $body,
            RingValue::Gaussian($x) => $body,
            RingValue::Complex64($x) => $body,
            RingValue::Quaternion($x) => $body,
            RingValue::Quaternion64($x) => $body,
            RingValue::Octonion($x) => $body,
            RingValue::Poly($x) => $body,
            RingValue::Free($x) => $body,
        }
    }};
}

impl RingValue {
    pub fn tag(&self) -> RingTag {
        match self {
            RingValue::Rational(_) => RingTag::Rational,
            RingValue::Gaussian(_) => RingTag::Gaussian,
            RingValue::Complex64(_) => RingTag::Complex64,
            RingValue::Quaternion(_) => RingTag::Quaternion,
            RingValue::Quaternion64(_) => RingTag::Quaternion64,
            RingValue::Octonion(_) => RingTag::Octonion,
            RingValue::Poly(_) => RingTag::Poly,
            RingValue::Free(_) => RingTag::Free,
        }
    }

    binary!(add);
    binary!(sub);
    binary!(mul);

    pub fn conj(&self) -> RingValue {
        unary!(self, x => Ring::conj(x))
    }

    pub fn norm(&self) -> RingValue {
        unary!(self, x => Ring::norm(x))
    }

    pub fn neg(&self) -> RingValue {
        unary!(self, x => Ring::neg(x))
    }

    pub fn is_zero(&self) -> bool {
        predicate!(self, x => Ring::is_zero(x))
    }

    pub fn is_one(&self) -> bool {
        predicate!(self, x => Ring::is_one(x))
    }

    pub fn one(tag: RingTag) -> RingValue {
        Self::from_int(tag, 1)
    }

    pub fn from_int(tag: RingTag, n: i64) -> RingValue {
        match tag {
            RingTag::Rational => RingValue::Rational(Ring::from_int(n)),
            RingTag::Gaussian => RingValue::Gaussian(Ring::from_int(n)),
            RingTag::Complex64 => RingValue::Complex64(Ring::from_int(n)),
            RingTag::Quaternion => RingValue::Quaternion(Ring::from_int(n)),
            RingTag::Quaternion64 => RingValue::Quaternion64(Ring::from_int(n)),
            RingTag::Octonion => RingValue::Octonion(Ring::from_int(n)),
            RingTag::Poly => RingValue::Poly(Ring::from_int(n)),
            RingTag::Free => RingValue::Free(Ring::from_int(n)),
        }
    }

    /// Human-readable rendering, used for symbolic witnesses.
    pub fn render(&self, names: &Symbols) -> String {
        match self {
            RingValue::Rational(q) => q.to_string(),
            RingValue::Gaussian(g) => g.to_string(),
            RingValue::Complex64(c) => format!("{} + {} i", c.re, c.im),
            RingValue::Quaternion(q) => q.to_string(),
            RingValue::Quaternion64(q) => q.to_string(),
            RingValue::Octonion(o) => o.to_string(),
            RingValue::Poly(p) => p.display(names).to_string(),
            RingValue::Free(e) => e.display(names).to_string(),
        }
    }

    /// JSON encoding: rationals and symbolic values as strings, exact
    /// composites as arrays of `"p/q"` strings, float composites as arrays
    /// of numbers, complex doubles as `{"re", "im"}`.
    pub fn to_json(&self, names: &Symbols) -> Value {
        match self {
            RingValue::Rational(q) => json!(q.to_string()),
            RingValue::Gaussian(g) => json!([g.re.to_string(), g.im.to_string()]),
            RingValue::Complex64(c) => json!({"re": c.re, "im": c.im}),
            RingValue::Quaternion(q) => json!(q.components().map(|c| c.to_string())),
            RingValue::Quaternion64(q) => json!([q.w, q.x, q.y, q.z]),
            RingValue::Octonion(o) => json!(o.components()),
            RingValue::Poly(p) => json!(p.display(names).to_string()),
            RingValue::Free(e) => json!(e.display(names).to_string()),
        }
    }

    pub fn from_json(tag: RingTag, v: &Value, names: &mut Symbols) -> Result<RingValue> {
        let bad = || Error::Parse(format!("cannot read {v} as a {tag} value"));
        let exact = |x: &Value| -> Result<BigRational> {
            match x {
                Value::String(s) => parse_rational(s),
                Value::Number(n) if n.is_i64() => {
                    Ok(BigRational::from_integer(n.as_i64().unwrap().into()))
                }
                _ => Err(bad()),
            }
        };
        let float = |x: &Value| x.as_f64().ok_or_else(bad);
        let array = |n: usize| -> Result<&Vec<Value>> {
            v.as_array().filter(|a| a.len() == n).ok_or_else(bad)
        };
        Ok(match tag {
            RingTag::Rational => RingValue::Rational(exact(v)?),
            RingTag::Gaussian => {
                let a = array(2)?;
                RingValue::Gaussian(Gaussian::new(exact(&a[0])?, exact(&a[1])?))
            }
            RingTag::Complex64 => match v {
                Value::Object(m) => RingValue::Complex64(Complex64::new(
                    float(m.get("re").ok_or_else(bad)?)?,
                    float(m.get("im").ok_or_else(bad)?)?,
                )),
                Value::Number(_) => RingValue::Complex64(Complex64::new(float(v)?, 0.0)),
                _ => return Err(bad()),
            },
            RingTag::Quaternion => {
                let a = array(4)?;
                RingValue::Quaternion(Quaternion::new(
                    exact(&a[0])?,
                    exact(&a[1])?,
                    exact(&a[2])?,
                    exact(&a[3])?,
                ))
            }
            RingTag::Quaternion64 => {
                let a = array(4)?;
                RingValue::Quaternion64(Quaternion::new(
                    float(&a[0])?,
                    float(&a[1])?,
                    float(&a[2])?,
                    float(&a[3])?,
                ))
            }
            RingTag::Octonion => {
                let a = array(8)?;
                let mut c = [0.0; 8];
                for (slot, x) in c.iter_mut().zip(a) {
                    *slot = float(x)?;
                }
                RingValue::Octonion(Octonion::from_components(c))
            }
            RingTag::Poly => match v {
                Value::String(s) => RingValue::Poly(parse_poly(s, names)?),
                Value::Number(_) => RingValue::Poly(Poly::constant(exact(v)?)),
                _ => return Err(bad()),
            },
            RingTag::Free => match v {
                Value::String(s) => RingValue::Free(parse_free(s, names)?),
                Value::Number(n) if n.is_i64() => {
                    RingValue::Free(FreeElem::from_int(n.as_i64().unwrap()))
                }
                _ => return Err(bad()),
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatched_tags_are_rejected() {
        let a = RingValue::from_int(RingTag::Rational, 2);
        let b = RingValue::from_int(RingTag::Gaussian, 2);
        assert_eq!(
            a.add(&b),
            Err(Error::RingMismatch("rational".into(), "gaussian".into()))
        );
        assert!(a.mul(&a).is_ok());
    }

    #[test]
    fn gaussian_norm_via_tagged_ops() {
        let a = RingValue::Gaussian(Gaussian::from_ints(1, 2));
        assert_eq!(a.norm(), RingValue::from_int(RingTag::Gaussian, 5));
    }

    #[test]
    fn json_round_trip_per_tag() {
        let mut names = Symbols::new(["x", "y"]);
        let samples = vec![
            RingValue::Rational(parse_rational("-7/3").unwrap()),
            RingValue::Gaussian(Gaussian::unit_from_pythagorean(1, 2)),
            RingValue::Complex64(Complex64::new(0.25, -1.5)),
            RingValue::Quaternion(Quaternion::new(
                parse_rational("1/2").unwrap(),
                parse_rational("0").unwrap(),
                parse_rational("-3").unwrap(),
                parse_rational("5/7").unwrap(),
            )),
            RingValue::Quaternion64(Quaternion::new(0.5, 0.5, -0.5, 0.5)),
            RingValue::Octonion(Octonion::basis(5)),
            RingValue::Poly(parse_poly("1/2 x^2 y - 3 y + 4", &mut names).unwrap()),
            RingValue::Free(parse_free("x* y - 2 y x + 1", &mut names).unwrap()),
        ];
        for s in samples {
            let j = s.to_json(&names);
            let back = RingValue::from_json(s.tag(), &j, &mut names).unwrap();
            assert_eq!(back, s, "{j}");
        }
        assert_eq!(names.len(), 2);
    }
}
