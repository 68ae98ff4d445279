//! Text forms of rationals, polynomials, free-algebra elements and complex numbers.
//!
//! Polynomial and free-algebra terms are written as an optional rational
//! coefficient followed by whitespace-separated factors, `2/3 x^2 y`. In the
//! free algebra a `*` glued to a generator marks its star, `x* y`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;

use super::{FreeElem, Letter, Monomial, Poly, Ring, Symbols};
use crate::error::{Error, Result};

/// Parses `p/q`, an integer, or a finite decimal into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim().replace('\u{2212}', "-");
    let err = || Error::Parse(format!("not a rational: '{s}'"));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if num_traits::Zero::is_zero(&d) {
            return Err(err());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let neg = int.trim_start().starts_with('-');
        let int_part: BigInt = match int.trim() {
            "" | "-" | "+" => num_traits::Zero::zero(),
            i => i.parse().map_err(|_| err())?,
        };
        let frac_part: BigInt = frac.parse().map_err(|_| err())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mag = BigRational::new(int_part.abs() * &scale + frac_part, scale);
        return Ok(if neg { -mag } else { mag });
    }
    Ok(BigRational::from_integer(t.parse().map_err(|_| err())?))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Star,
    Caret,
    Plus,
    Minus,
    Space,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.replace('\u{2212}', "-").chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            if out.last() != Some(&Tok::Space) {
                out.push(Tok::Space);
            }
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len()
                && (chars[i].is_ascii_digit() || chars[i] == '/' || chars[i] == '.')
            {
                i += 1;
            }
            let lit: String = chars[start..i].iter().collect();
            out.push(Tok::Num(parse_rational(&lit)?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else {
            out.push(match c {
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                _ => return Err(Error::Parse(format!("unexpected '{c}' in '{s}'"))),
            });
            i += 1;
        }
    }
    Ok(out)
}

struct Term {
    coeff: BigRational,
    factors: Vec<(String, bool, u32)>,
}

fn parse_terms(s: &str) -> Result<Vec<Term>> {
    let toks = tokenize(s)?;
    let err = |m: &str| Error::Parse(format!("{m} in '{s}'"));
    let mut terms = Vec::new();
    let mut i = 0;
    let skip_space = |i: &mut usize| {
        while *i < toks.len() && toks[*i] == Tok::Space {
            *i += 1;
        }
    };
    skip_space(&mut i);
    if i == toks.len() {
        return Err(err("empty expression"));
    }
    let mut first = true;
    while i < toks.len() {
        let mut sign = BigRational::one();
        skip_space(&mut i);
        match toks.get(i) {
            Some(Tok::Plus) => i += 1,
            Some(Tok::Minus) => {
                sign = -sign;
                i += 1;
            }
            _ if !first => return Err(err("expected '+' or '-'")),
            _ => {}
        }
        first = false;
        skip_space(&mut i);
        let mut coeff = sign;
        let mut saw_any = false;
        if let Some(Tok::Num(q)) = toks.get(i) {
            coeff *= q;
            i += 1;
            saw_any = true;
        }
        let mut factors = Vec::new();
        loop {
            skip_space(&mut i);
            match toks.get(i) {
                Some(Tok::Ident(name)) => {
                    i += 1;
                    let mut star = false;
                    let mut exp = 1u32;
                    if toks.get(i) == Some(&Tok::Star) {
                        star = true;
                        i += 1;
                    }
                    if toks.get(i) == Some(&Tok::Caret) {
                        i += 1;
                        match toks.get(i) {
                            Some(Tok::Num(q)) if q.is_integer() && q.is_positive() => {
                                exp = q
                                    .to_integer()
                                    .try_into()
                                    .map_err(|_| err("exponent too large"))?;
                                i += 1;
                            }
                            _ => return Err(err("bad exponent")),
                        }
                    }
                    factors.push((name.clone(), star, exp));
                    saw_any = true;
                }
                Some(Tok::Star) => i += 1,
                _ => break,
            }
        }
        if !saw_any {
            return Err(err("missing term"));
        }
        terms.push(Term { coeff, factors });
        skip_space(&mut i);
    }
    Ok(terms)
}

/// Parses a commutative polynomial; unknown names are added to `names`.
/// Stars are accepted and ignored, since polynomial variables are real.
pub fn parse_poly(s: &str, names: &mut Symbols) -> Result<Poly> {
    let mut out = Poly::zero();
    for t in parse_terms(s)? {
        let pairs = t
            .factors
            .iter()
            .map(|(n, _, e)| (names.intern(n), *e))
            .collect();
        out = out.add(&Poly::term(Monomial::from_pairs(pairs), t.coeff));
    }
    Ok(out)
}

/// Parses a free-algebra element; coefficients must be integers.
pub fn parse_free(s: &str, names: &mut Symbols) -> Result<FreeElem> {
    let mut out = FreeElem::zero();
    for t in parse_terms(s)? {
        if !t.coeff.is_integer() {
            return Err(Error::Parse(format!(
                "free-algebra coefficients are integers: '{s}'"
            )));
        }
        let mut letters = Vec::new();
        for (n, star, e) in &t.factors {
            let gen = names.intern(n);
            for _ in 0..*e {
                letters.push(Letter { gen, star: *star });
            }
        }
        out = out.add(&FreeElem::word(letters, t.coeff.to_integer()));
    }
    Ok(out)
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` with real `a`, `b`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || Error::Parse(format!("not a complex number: '{s}'"));
    if t.is_empty() {
        return Err(err());
    }
    let num = |x: &str| -> Result<f64> {
        match x {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => x.parse::<f64>().map_err(|_| err()),
        }
    };
    if let Some(body) = t.strip_suffix('i') {
        // split at the last sign that is not part of an exponent
        let bytes = body.as_bytes();
        let split = (1..bytes.len()).rev().find(|&k| {
            (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E')
        });
        return Ok(match split {
            Some(k) => Complex64::new(num(&body[..k])?, num(&body[k..])?),
            None => Complex64::new(0.0, num(body)?),
        });
    }
    Ok(Complex64::new(t.parse::<f64>().map_err(|_| err())?, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-7/3").unwrap(), q(-7, 3));
        assert_eq!(parse_rational("4").unwrap(), q(4, 1));
        assert_eq!(parse_rational("0.25").unwrap(), q(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), q(-3, 2));
        assert_eq!(parse_rational("\u{2212}1").unwrap(), q(-1, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn polynomials() {
        let mut s = Symbols::new(["x", "y", "z"]);
        let p = parse_poly("x + y + 9 z", &mut s).unwrap();
        assert_eq!(p.display(&s).to_string(), "x + y + 9 z");
        let p = parse_poly("-z^2 + 2/3 x y - 1", &mut s).unwrap();
        assert_eq!(p.display(&s).to_string(), "2/3 x y - z^2 - 1");
        assert!(parse_poly("x +", &mut s).is_err());
        assert!(parse_poly("", &mut s).is_err());
    }

    #[test]
    fn free_elements() {
        let mut s = Symbols::default();
        let e = parse_free("x1* x3 - 2 x3* x1", &mut s).unwrap();
        assert_eq!(s.names(), &["x1".to_string(), "x3".to_string()]);
        assert_eq!(e.display(&s).to_string(), "x1* x3 - 2 x3* x1");
        assert!(parse_free("1/2 x1", &mut s).is_err());
    }

    #[test]
    fn complex_numbers() {
        assert_eq!(parse_complex("0.5+2i").unwrap(), Complex64::new(0.5, 2.0));
        assert_eq!(parse_complex("1").unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("3i").unwrap(), Complex64::new(0.0, 3.0));
        assert_eq!(
            parse_complex("-1e-2-4i").unwrap(),
            Complex64::new(-0.01, -4.0)
        );
        assert!(parse_complex("x").is_err());
    }
}
