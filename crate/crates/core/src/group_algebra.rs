//! The group ring `Z F`: finite integer combinations of reduced words.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};

use crate::error::Result;
use crate::freegroup::{parse_word, Generators, ReducedWord};
use crate::text::Cursor;

/// A noncommutative Laurent polynomial. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: HashMap<ReducedWord, BigInt>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `1·1_F`.
    pub fn one() -> Self {
        Self::monomial(BigInt::one(), ReducedWord::identity())
    }

    pub fn monomial(c: impl Into<BigInt>, w: ReducedWord) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c.into());
        e
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (ReducedWord, C)>,
        C: Into<BigInt>,
    {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c.into());
        }
        e
    }

    /// Adds `c·w` in place.
    pub fn add_term(&mut self, w: ReducedWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient `(a, g)`.
    pub fn coeff(&self, g: &ReducedWord) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ReducedWord, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical word order.
    pub fn sorted_terms(&self) -> Vec<(&ReducedWord, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Longest reduced word in the support, 0 for the zero element.
    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(ReducedWord::len).max().unwrap_or(0)
    }

    pub fn scalar_multiply(&self, lambda: &BigInt) -> Self {
        if lambda.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * lambda))
                .collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        out.accumulate_product(self, other, None);
        out
    }

    /// `self += a·b`, skipping products whose reduced length exceeds
    /// `max_len`.
    pub(crate) fn accumulate_product(
        &mut self,
        a: &AlgebraElement,
        b: &AlgebraElement,
        max_len: Option<usize>,
    ) {
        for (g1, c1) in &a.terms {
            for (g2, c2) in &b.terms {
                if let Some(m) = max_len {
                    if g1.concat_len(g2) > m {
                        continue;
                    }
                }
                self.add_term(g1.concat(g2), c1 * c2);
            }
        }
    }

    /// Drops every term longer than `max_len`.
    pub fn retain_max_len(&mut self, max_len: usize) {
        self.terms.retain(|w, _| w.len() <= max_len);
    }

    pub fn display<'a>(&'a self, gens: &'a Generators) -> ElementDisplay<'a> {
        ElementDisplay { elem: self, gens }
    }

    /// Parses `3*a b^-1 + -1*1 + d`, declaring unseen generator names.
    pub fn parse(text: &str, gens: &mut Generators) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let e = parse_element(&mut cur, gens)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(e)
    }
}

pub(crate) fn parse_element(cur: &mut Cursor<'_>, gens: &mut Generators) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    let mut negate_next = false;
    loop {
        cur.skip_ws();
        let mut neg = negate_next;
        if cur.eat('-') {
            neg = !neg;
        }
        cur.skip_ws();
        let (c, w) = if cur.peek_is_digit() {
            let digits = cur.digits().unwrap_or_default();
            let c: BigInt = digits
                .parse()
                .map_err(|_| cur.error("malformed coefficient"))?;
            if cur.eat('*') {
                (c, parse_word(cur, gens)?)
            } else {
                (c, ReducedWord::identity())
            }
        } else {
            (BigInt::one(), parse_word(cur, gens)?)
        };
        out.add_term(w, if neg { -c } else { c });
        cur.skip_ws();
        if cur.eat('+') {
            negate_next = false;
        } else if cur.eat('-') {
            negate_next = true;
        } else {
            break;
        }
    }
    Ok(out)
}

pub struct ElementDisplay<'a> {
    elem: &'a AlgebraElement,
    gens: &'a Generators,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.elem.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{}", w.display(self.gens))?;
            } else {
                write!(f, "{}*{}", c, w.display(self.gens))?;
            }
        }
        Ok(())
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (w, c) in &small.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs)
    }
}

impl AlgebraElement {
    /// Largest absolute coefficient, 0 for the zero element.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }
}
