//! Commutative multivariate polynomials with rational coefficients.
//!
//! Monomials are ordered lexicographically with variable 0 the most
//! significant. Printing goes from the leading term down, so with variables
//! `x, y, z` a linear form prints as `x + y + 9 z`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use super::{Associative, Commutative, IntegralDomain, Ring, Symbols};

/// Sparse exponent vector: `(variable, exponent)` pairs, variables ascending,
/// exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < o.0.len() {
            match (self.0.get(i), o.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    out.push((a, ea));
                    i += 1;
                }
                (Some(&p), None) => {
                    out.push(p);
                    i += 1;
                }
                (_, Some(&p)) => {
                    out.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    /// `self / d` when `d` divides `self`.
    pub fn div(&self, d: &Monomial) -> Option<Monomial> {
        let mut out = Vec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            let de = match d.0.get(j) {
                Some(&(dv, de)) if dv == v => {
                    j += 1;
                    de
                }
                Some(&(dv, _)) if dv < v => return None,
                _ => 0,
            };
            if de > e {
                return None;
            }
            if e > de {
                out.push((v, e - de));
            }
        }
        (j == d.0.len()).then_some(Monomial(out))
    }

    pub fn eval<R: Ring>(&self, values: &[R]) -> R {
        let mut acc = R::one();
        for &(v, e) in &self.0 {
            for _ in 0..e {
                acc = acc.mul(&values[v as usize]);
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(a, ea)), Some(&(b, eb))) => {
                    if a != b {
                        // the side holding the smaller (more significant) variable wins
                        return if a < b {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn var(v: u32) -> Self {
        Self::term(Monomial::var(v), BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Substitutes ring values for the variables.
    pub fn eval<R: Ring>(&self, values: &[R], coeff: impl Fn(&BigRational) -> R) -> R {
        self.terms.iter().fold(R::zero(), |acc, (m, c)| {
            acc.add(&coeff(c).mul(&m.eval(values)))
        })
    }

    pub fn display<'a>(&'a self, names: &'a Symbols) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a Symbols,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut parts = Vec::new();
            if !abs.is_one() || m.is_one() {
                parts.push(abs.to_string());
            }
            for &(v, e) in m.pairs() {
                if e == 1 {
                    parts.push(self.names.name(v));
                } else {
                    parts.push(format!("{}^{}", self.names.name(v), e));
                }
            }
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl Ring for Poly {
    const NAME: &'static str = "poly";
    const COMMUTATIVE: bool = true;

    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(BigRational::one())
    }
    fn from_int(n: i64) -> Self {
        Poly::constant(BigRational::from_integer(n.into()))
    }
    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    /// Variables are real, so conjugation is the identity.
    fn conj(&self) -> Self {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Poly::default();
        }
        let k = BigRational::from_integer(k.into());
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * &k))
                .collect(),
        }
    }
}

impl Associative for Poly {}
impl Commutative for Poly {}

impl IntegralDomain for Poly {
    /// Multivariate division by leading terms; `None` unless the remainder
    /// vanishes.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::default();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(&dm)?;
            let c = rc / &dc;
            let t = Poly::term(m, c);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }
}
