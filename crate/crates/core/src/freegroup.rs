//! Reduced words in the free group on named generators.
//!
//! A letter is a nonzero `i32`: `k` stands for the `k`-th generator and `-k`
//! for its inverse. Generator ids start at 1 and are handed out in order of
//! first declaration.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::text::Cursor;

pub type Letter = i32;

/// Name table for the generators of one session.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Generators {
    names: Vec<String>,
    ids: HashMap<String, Letter>,
}

impl Generators {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut gens = Self::new();
        for name in names {
            let name = name.into();
            if gens.id(&name).is_some() {
                return Err(Error::validation(format!("duplicate generator '{name}'")));
            }
            gens.declare(&name);
        }
        Ok(gens)
    }

    /// Returns the id of `name`, declaring it if it is new.
    pub fn declare(&mut self, name: &str) -> Letter {
        if let Some(&id) = self.ids.get(name) {
            return id;
        }
        self.names.push(name.to_string());
        let id = self.names.len() as Letter;
        self.ids.insert(name.to_string(), id);
        id
    }

    pub fn id(&self, name: &str) -> Option<Letter> {
        self.ids.get(name).copied()
    }

    /// Name of generator `id` (sign ignored).
    pub fn name(&self, id: Letter) -> Option<&str> {
        let k = id.unsigned_abs() as usize;
        if k == 0 {
            return None;
        }
        self.names.get(k - 1).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter != 0 && (letter.unsigned_abs() as usize) <= self.names.len()
    }
}

/// An element of the free group as a cancellation-free sequence of letters.
/// The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ReducedWord(Vec<Letter>);

impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord(Vec::new())
    }

    /// The one-letter word. Panics on 0.
    pub fn letter(x: Letter) -> Self {
        assert!(x != 0, "letter 0 is not a generator");
        ReducedWord(vec![x])
    }

    /// `x^k` for a generator `x`.
    pub fn power(x: Letter, k: i32) -> Self {
        assert!(x != 0, "letter 0 is not a generator");
        let l = if k < 0 { -x } else { x };
        ReducedWord(vec![l; k.unsigned_abs() as usize])
    }

    /// Free reduction of a raw letter sequence, checking every letter
    /// against `gens`.
    pub fn reduce(raw: &[Letter], gens: &Generators) -> Result<Self> {
        if let Some(&bad) = raw.iter().find(|&&x| !gens.contains(x)) {
            return Err(Error::UnknownGenerator(bad));
        }
        Ok(Self::reduce_unchecked(raw.iter().copied()))
    }

    /// Free reduction without a generator table. Panics on a 0 letter.
    pub fn reduce_unchecked(raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for x in raw {
            assert!(x != 0, "letter 0 is not a generator");
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        ReducedWord(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// The group product `self · other`.
    pub fn concat(&self, other: &ReducedWord) -> ReducedWord {
        let a = &self.0;
        let b = &other.0;
        let mut k = 0;
        while k < a.len() && k < b.len() && a[a.len() - 1 - k] == -b[k] {
            k += 1;
        }
        let mut out = Vec::with_capacity(a.len() + b.len() - 2 * k);
        out.extend_from_slice(&a[..a.len() - k]);
        out.extend_from_slice(&b[k..]);
        ReducedWord(out)
    }

    /// Length of `self · other` without building it.
    pub fn concat_len(&self, other: &ReducedWord) -> usize {
        let a = &self.0;
        let b = &other.0;
        let mut k = 0;
        while k < a.len() && k < b.len() && a[a.len() - 1 - k] == -b[k] {
            k += 1;
        }
        a.len() + b.len() - 2 * k
    }

    pub fn invert(&self) -> ReducedWord {
        ReducedWord(self.0.iter().rev().map(|&x| -x).collect())
    }

    pub fn display<'a>(&'a self, gens: &'a Generators) -> WordDisplay<'a> {
        WordDisplay { word: self, gens }
    }

    /// Parses the display syntax, declaring unseen generator names.
    pub fn parse(text: &str, gens: &mut Generators) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let w = parse_word(&mut cur, gens)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(w)
    }
}

fn letter_key(x: Letter) -> (u32, bool) {
    (x.unsigned_abs(), x < 0)
}

/// Canonical order: by length, then letterwise with `x < x⁻¹ < y < …`.
impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| {
            self.0
                .iter()
                .map(|&x| letter_key(x))
                .cmp(other.0.iter().map(|&x| letter_key(x)))
        })
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct WordDisplay<'a> {
    word: &'a ReducedWord,
    gens: &'a Generators,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let x = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == x {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match self.gens.name(x) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "g{}", x.unsigned_abs())?,
            }
            let exp = if x < 0 { -(run as i64) } else { run as i64 };
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Parses `name(^k)? …` or `1`. Stops before any character that cannot
/// continue a word.
pub(crate) fn parse_word(cur: &mut Cursor<'_>, gens: &mut Generators) -> Result<ReducedWord> {
    let mut raw: Vec<Letter> = Vec::new();
    let mut factors = 0;
    loop {
        cur.skip_ws();
        if cur.peek() == Some('1') {
            let d = cur.digits().unwrap_or_default();
            if d != "1" {
                return Err(cur.error(format!("unexpected number '{d}' inside a word")));
            }
            factors += 1;
            continue;
        }
        let Some(name) = cur.ident() else { break };
        let id = gens.declare(name);
        let mut exp: i64 = 1;
        if cur.peek() == Some('^') {
            cur.bump();
            exp = cur
                .signed_int()
                .ok_or_else(|| cur.error("expected an integer exponent after '^'"))?;
            if exp == 0 || exp.unsigned_abs() > 1 << 20 {
                return Err(cur.error(format!("exponent {exp} out of range")));
            }
        }
        let l = if exp < 0 { -id } else { id };
        raw.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        factors += 1;
    }
    if factors == 0 {
        return Err(cur.error("expected a word"));
    }
    Ok(ReducedWord::reduce_unchecked(raw))
}
