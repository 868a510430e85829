//! Truncated solutions of proper algebraic systems `ξ_i = p_i(ξ, letters)`
//! in noncommuting variables.
//!
//! A system is proper when no right-hand side has a constant term or a
//! monomial consisting of a single variable. Such a system has a unique
//! solution, and fixed-point iteration from zero is exact on words of
//! length `<= k` after `k` rounds.

use std::collections::HashMap;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::text::Cursor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Var(usize),
    Letter(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: BigInt,
    pub symbols: Vec<Symbol>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperSystem {
    alphabet: Vec<String>,
    rhs: Vec<Vec<Monomial>>,
}

impl ProperSystem {
    /// `rhs[i]` is the right-hand side for variable `i` (zero-based).
    pub fn new(alphabet: Vec<String>, rhs: Vec<Vec<Monomial>>) -> Result<Self> {
        let n = rhs.len();
        if n == 0 {
            return Err(Error::validation("a system needs at least one equation"));
        }
        let sys = ProperSystem { alphabet, rhs };
        for (i, poly) in sys.rhs.iter().enumerate() {
            for m in poly {
                for s in &m.symbols {
                    match *s {
                        Symbol::Var(v) if v >= n => {
                            return Err(Error::validation(format!(
                                "equation {} uses undefined variable xi{}",
                                i + 1,
                                v + 1
                            )))
                        }
                        Symbol::Letter(l) if l >= sys.alphabet.len() => {
                            return Err(Error::validation(format!(
                                "equation {} uses unknown letter {l}",
                                i + 1
                            )))
                        }
                        _ => {}
                    }
                }
                if m.coeff.is_zero() {
                    continue;
                }
                if m.symbols.is_empty() {
                    return Err(Error::validation(format!(
                        "equation {} is not proper: it has a constant term {}",
                        i + 1,
                        m.coeff
                    )));
                }
                if let [Symbol::Var(v)] = m.symbols[..] {
                    return Err(Error::validation(format!(
                        "equation {} is not proper: monomial {} is the bare variable xi{}",
                        i + 1,
                        sys.monomial_text(m),
                        v + 1
                    )));
                }
            }
        }
        Ok(sys)
    }

    /// `ξ = a ξ ξ + b`, whose solution is the Łukasiewicz language.
    pub fn lukasiewicz() -> Self {
        Self::parse("xi1 = a xi1 xi1 + b").expect("well-formed")
    }

    pub fn var_count(&self) -> usize {
        self.rhs.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn rhs(&self, var: usize) -> &[Monomial] {
        &self.rhs[var]
    }

    fn monomial_text(&self, m: &Monomial) -> String {
        let body: Vec<String> = m
            .symbols
            .iter()
            .map(|s| match *s {
                Symbol::Var(v) => format!("xi{}", v + 1),
                Symbol::Letter(l) => self.alphabet[l].clone(),
            })
            .collect();
        if m.coeff.is_one() {
            body.join(" ")
        } else {
            format!("{} {}", m.coeff, body.join(" "))
        }
    }

    /// One equation per nonblank line: `xi1 = a xi1 xi1 + b`. Variables are
    /// `xi<k>`; any other identifier is a letter. Monomials may carry an
    /// integer prefix (`2 a xi1` or `2*a xi1`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet: Vec<String> = Vec::new();
        let mut letter_ids: HashMap<String, usize> = HashMap::new();
        let mut eqs: HashMap<usize, Vec<Monomial>> = HashMap::new();
        let mut max_var = 0usize;

        for (ln, line) in text.lines().enumerate() {
            let line_no = ln + 1;
            let line = line.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let mut cur = Cursor::at(line, line_no, 1);
            cur.skip_ws();
            let lhs = cur
                .ident()
                .ok_or_else(|| cur.error("expected a variable xi<k>"))?;
            let lhs = var_index(lhs)
                .ok_or_else(|| cur.error(format!("'{lhs}' is not a variable xi<k>")))?;
            cur.expect('=')?;
            let mut poly = Vec::new();
            let mut negate_next = false;
            loop {
                cur.skip_ws();
                let mut neg = negate_next;
                if cur.eat('-') {
                    neg = !neg;
                }
                cur.skip_ws();
                let mut coeff = BigInt::one();
                if let Some(d) = cur.digits() {
                    coeff = d.parse().map_err(|_| cur.error("malformed coefficient"))?;
                    cur.eat('*');
                }
                let mut symbols = Vec::new();
                loop {
                    cur.skip_ws();
                    let Some(name) = cur.ident() else { break };
                    match var_index(name) {
                        Some(v) => {
                            max_var = max_var.max(v + 1);
                            symbols.push(Symbol::Var(v));
                        }
                        None => {
                            let next = alphabet.len();
                            let id = *letter_ids.entry(name.to_string()).or_insert_with(|| {
                                alphabet.push(name.to_string());
                                next
                            });
                            symbols.push(Symbol::Letter(id));
                        }
                    }
                }
                if symbols.is_empty() && coeff.is_one() && !neg {
                    return Err(cur.error("expected a monomial"));
                }
                poly.push(Monomial {
                    coeff: if neg { -coeff } else { coeff },
                    symbols,
                });
                if cur.eat('+') {
                    negate_next = false;
                } else if cur.eat('-') {
                    negate_next = true;
                } else {
                    break;
                }
            }
            if !cur.at_end() {
                return Err(cur.error("unexpected trailing input"));
            }
            max_var = max_var.max(lhs + 1);
            if eqs.insert(lhs, poly).is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("duplicate equation for xi{}", lhs + 1),
                });
            }
        }
        let mut rhs = Vec::with_capacity(max_var);
        for v in 0..max_var {
            rhs.push(
                eqs.remove(&v)
                    .ok_or_else(|| Error::validation(format!("no equation for xi{}", v + 1)))?,
            );
        }
        Self::new(alphabet, rhs)
    }

    /// One round `S ↦ p(S)`, truncated to words of length `<= max_len`.
    pub fn iterate_once(
        &self,
        current: &[TruncatedNCSeries],
        max_len: usize,
    ) -> Vec<TruncatedNCSeries> {
        self.rhs
            .iter()
            .map(|poly| {
                let mut acc = TruncatedNCSeries::zero(max_len);
                for m in poly {
                    let mut prod = TruncatedNCSeries::one(max_len);
                    for s in &m.symbols {
                        let factor = match *s {
                            Symbol::Var(v) => current[v].clone(),
                            Symbol::Letter(l) => TruncatedNCSeries::letter(l, max_len),
                        };
                        prod = prod.mul(&factor);
                        if prod.is_zero() {
                            break;
                        }
                    }
                    acc.add_scaled(&prod, &m.coeff);
                }
                acc
            })
            .collect()
    }
}

fn var_index(name: &str) -> Option<usize> {
    let k: usize = name.strip_prefix("xi")?.parse().ok()?;
    (k >= 1).then(|| k - 1)
}

/// Integer combination of words (letter indices) of length `<= max_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedNCSeries {
    max_len: usize,
    terms: HashMap<Vec<usize>, BigInt>,
}

impl TruncatedNCSeries {
    pub fn zero(max_len: usize) -> Self {
        TruncatedNCSeries {
            max_len,
            terms: HashMap::new(),
        }
    }

    /// The empty word with coefficient 1.
    pub fn one(max_len: usize) -> Self {
        let mut s = Self::zero(max_len);
        s.terms.insert(Vec::new(), BigInt::one());
        s
    }

    pub fn letter(l: usize, max_len: usize) -> Self {
        let mut s = Self::zero(max_len);
        if max_len >= 1 {
            s.terms.insert(vec![l], BigInt::one());
        }
        s
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[usize]) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Terms ordered by length, then lexicographically.
    pub fn sorted_terms(&self) -> Vec<(&Vec<usize>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        v
    }

    /// The restriction to words of length `<= len`.
    pub fn restrict(&self, len: usize) -> Self {
        TruncatedNCSeries {
            max_len: self.max_len.min(len),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Concatenation product, truncated to `self.max_len`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.max_len);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if u.len() + v.len() > self.max_len {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }

    fn add_term(&mut self, w: Vec<usize>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    /// Word-length generating counts: entry `k` is the sum of coefficients
    /// of words of length `k`.
    pub fn length_profile(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.max_len + 1];
        for (w, c) in &self.terms {
            out[w.len()] += c;
        }
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a [String]) -> impl fmt::Display + 'a {
        struct D<'a>(&'a TruncatedNCSeries, &'a [String]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let sep = if self.1.iter().all(|n| n.chars().count() == 1) {
                    ""
                } else {
                    " "
                };
                for (w, c) in self.0.sorted_terms() {
                    let word: Vec<&str> = w.iter().map(|&l| self.1[l].as_str()).collect();
                    let word = if word.is_empty() {
                        "1".to_string()
                    } else {
                        word.join(sep)
                    };
                    writeln!(f, "{c}: {word}")?;
                }
                Ok(())
            }
        }
        D(self, alphabet)
    }
}

/// The unique solution of `sys`, exact on every word of length
/// `<= max_len`.
pub fn solve_truncated(sys: &ProperSystem, max_len: usize) -> Result<Vec<TruncatedNCSeries>> {
    if max_len == 0 {
        return Err(Error::validation("truncation length must be at least 1"));
    }
    let mut current = vec![TruncatedNCSeries::zero(max_len); sys.var_count()];
    for _ in 0..max_len + 2 {
        let next = sys.iterate_once(&current, max_len);
        if next == current {
            return Ok(current);
        }
        current = next;
    }
    Err(Error::resource(format!(
        "fixed-point iteration did not stabilize within {} rounds",
        max_len + 2
    )))
}

/// Membership in the Łukasiewicz language over `{a, b}`: one more `b` than
/// `a`, and every proper prefix has at least as many `a` as `b`.
pub fn lukasiewicz_predicate(w: &str) -> bool {
    let mut height: i64 = 0;
    let n = w.chars().count();
    for (k, ch) in w.chars().enumerate() {
        match ch {
            'a' => height += 1,
            'b' => height -= 1,
            _ => return false,
        }
        if k + 1 < n && height < 0 {
            return false;
        }
    }
    height == -1
}
