//! Free *-algebra over integer coefficients.
//!
//! Elements are finite integer combinations of words in the generators
//! `g_i` and their stars `g_i*`. Words are never reordered, so equality of
//! normal forms decides identities without any commutativity assumption.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Associative, Ring, Symbols};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub gen: u32,
    pub star: bool,
}

/// Words compare by length first, then letter by letter.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    fn conj(&self) -> Word {
        Word(
            self.0
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    star: !l.star,
                })
                .collect(),
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeElem {
    terms: BTreeMap<Word, BigInt>,
}

impl FreeElem {
    pub fn gen(i: u32) -> Self {
        Self::word(
            vec![Letter {
                gen: i,
                star: false,
            }],
            BigInt::one(),
        )
    }

    pub fn word(letters: Vec<Letter>, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Word(letters), c);
        }
        FreeElem { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    /// Longest word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.0.len()).max().unwrap_or(0)
    }

    fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn display<'a>(&'a self, names: &'a Symbols) -> FreeDisplay<'a> {
        FreeDisplay { elem: self, names }
    }
}

pub struct FreeDisplay<'a> {
    elem: &'a FreeElem,
    names: &'a Symbols,
}

impl fmt::Display for FreeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.elem.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut parts = Vec::new();
            if !abs.is_one() || w.0.is_empty() {
                parts.push(abs.to_string());
            }
            for l in &w.0 {
                let name = self.names.name(l.gen);
                parts.push(if l.star { format!("{name}*") } else { name });
            }
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl Ring for FreeElem {
    const NAME: &'static str = "free";
    const COMMUTATIVE: bool = false;

    fn zero() -> Self {
        FreeElem::default()
    }
    fn one() -> Self {
        Self::word(vec![], BigInt::one())
    }
    fn from_int(n: i64) -> Self {
        Self::word(vec![], BigInt::from(n))
    }
    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
    fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = FreeElem::default();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &o.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        FreeElem {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
    fn conj(&self) -> Self {
        FreeElem {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.conj(), c.clone()))
                .collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return FreeElem::default();
        }
        FreeElem {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }
}

impl Associative for FreeElem {}
