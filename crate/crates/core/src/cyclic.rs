//! The cyclic series `S_M` over the alphabet of triples `[g, i, j]`, Lyndon
//! words, and the Euler product of its zeta function.
//!
//! For a word `w = [g_1,i_1,j_1] ⋯ [g_n,i_n,j_n]` the coefficient `(S_M, w)`
//! is `Π (M_{i_k j_k}, g_k)` when the index path closes (`j_k = i_{k+1}`,
//! `j_n = i_1`) and `g_1⋯g_n = 1`, and zero otherwise. The empty word has
//! coefficient `d`. Summing over all words of length `n` gives `a_n(M)`.

use std::collections::HashMap;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::freegroup::{Generators, ReducedWord};
use crate::matrix::AlgebraMatrix;
use crate::series::TruncatedSeries;

/// Default ceiling on `|alphabet|^L` for the exhaustive enumerations.
pub const DEFAULT_ENUMERATION_GUARD: u128 = 200_000_000;

/// A letter `[g, i, j]`: the word `g` occurs in entry `(i, j)`. Indices are
/// zero-based; display is one-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleLetter {
    pub row: usize,
    pub col: usize,
    pub word: ReducedWord,
}

pub type TripleWord = Vec<TripleLetter>;

impl TripleLetter {
    pub fn new(word: ReducedWord, row: usize, col: usize) -> Self {
        TripleLetter { row, col, word }
    }

    pub fn display<'a>(&'a self, gens: &'a Generators) -> impl fmt::Display + 'a {
        struct D<'a>(&'a TripleLetter, &'a Generators);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(
                    f,
                    "[{},{},{}]",
                    self.0.word.display(self.1),
                    self.0.row + 1,
                    self.0.col + 1
                )
            }
        }
        D(self, gens)
    }
}

/// One letter per `(i, j, g)` with `g` in the support of `M_ij`, ordered by
/// row, column, then canonical word order.
pub fn alphabet_of(m: &AlgebraMatrix) -> Vec<TripleLetter> {
    let mut out = Vec::new();
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            for (g, _) in m.get(i, j).sorted_terms() {
                out.push(TripleLetter::new(g.clone(), i, j));
            }
        }
    }
    out
}

/// The alphabet with coefficients and lookups, in index form.
struct Compiled {
    letters: Vec<TripleLetter>,
    coeffs: Vec<BigInt>,
    by_row: Vec<Vec<usize>>,
    max_len: usize,
}

impl Compiled {
    fn new(m: &AlgebraMatrix) -> Self {
        let letters = alphabet_of(m);
        let coeffs = letters
            .iter()
            .map(|l| m.get(l.row, l.col).coeff(&l.word))
            .collect();
        let mut by_row = vec![Vec::new(); m.dim()];
        for (k, l) in letters.iter().enumerate() {
            by_row[l.row].push(k);
        }
        let max_len = letters.iter().map(|l| l.word.len()).max().unwrap_or(0);
        Compiled {
            letters,
            coeffs,
            by_row,
            max_len,
        }
    }

    /// `(S_M, w)` for a nonempty word given by letter indices.
    #[cfg(test)]
    fn coeff_of(&self, w: &[usize]) -> BigInt {
        let n = w.len();
        for k in 0..n {
            if self.letters[w[k]].col != self.letters[w[(k + 1) % n]].row {
                return BigInt::zero();
            }
        }
        let mut product = ReducedWord::identity();
        for (k, &x) in w.iter().enumerate() {
            product = product.concat(&self.letters[x].word);
            if product.len() > (n - 1 - k) * self.max_len {
                return BigInt::zero();
            }
        }
        if !product.is_identity() {
            return BigInt::zero();
        }
        w.iter().map(|&x| &self.coeffs[x]).product()
    }
}

/// The coefficient `(S_M, w)`.
pub fn s_coeff(m: &AlgebraMatrix, w: &[TripleLetter]) -> Result<BigInt> {
    if w.is_empty() {
        return Ok(BigInt::from(m.dim()));
    }
    let mut coeffs = Vec::with_capacity(w.len());
    for l in w {
        let c = if l.row < m.dim() && l.col < m.dim() {
            m.get(l.row, l.col).coeff(&l.word)
        } else {
            BigInt::zero()
        };
        if c.is_zero() {
            return Err(Error::validation(format!(
                "letter [{:?}, {}, {}] is not in the alphabet of the matrix",
                l.word.letters(),
                l.row + 1,
                l.col + 1
            )));
        }
        coeffs.push(c);
    }
    let n = w.len();
    if (0..n).any(|k| w[k].col != w[(k + 1) % n].row) {
        return Ok(BigInt::zero());
    }
    let max_len = w.iter().map(|l| l.word.len()).max().unwrap_or(0);
    let mut product = ReducedWord::identity();
    for (k, l) in w.iter().enumerate() {
        product = product.concat(&l.word);
        // the remaining letters cannot cancel more than this
        if product.len() > (n - 1 - k) * max_len {
            return Ok(BigInt::zero());
        }
    }
    Ok(coeffs.iter().product())
}

/// Lyndon words of length `1..=max_length`, sorted by length, then
/// lexicographically in alphabet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonList<T> {
    pub words: Vec<Vec<T>>,
    pub max_length: usize,
}

/// Calls `visit` on every Lyndon word of length `<= max_len` over
/// `0..q`, in lexicographic order (Duval's successor algorithm).
pub fn for_each_lyndon(q: usize, max_len: usize, mut visit: impl FnMut(&[usize])) {
    if q == 0 || max_len == 0 {
        return;
    }
    let mut w = vec![0usize];
    loop {
        visit(&w);
        let period = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&(q - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(x) => *x += 1,
            None => break,
        }
    }
}

pub fn lyndon_words<T: Clone>(alphabet: &[T], max_length: usize) -> Result<LyndonList<T>> {
    if alphabet.is_empty() {
        return Err(Error::validation("Lyndon words need a nonempty alphabet"));
    }
    if max_length == 0 {
        return Err(Error::validation(
            "maximum Lyndon word length must be at least 1",
        ));
    }
    let mut idx: Vec<Vec<usize>> = Vec::new();
    for_each_lyndon(alphabet.len(), max_length, |w| idx.push(w.to_vec()));
    idx.sort_by_key(Vec::len);
    Ok(LyndonList {
        words: idx
            .into_iter()
            .map(|w| w.into_iter().map(|k| alphabet[k].clone()).collect())
            .collect(),
        max_length,
    })
}

fn check_guard(q: usize, len: usize, guard: u128) -> Result<()> {
    let mut total: u128 = 1;
    for _ in 0..len {
        total = total.saturating_mul(q as u128);
    }
    if total > guard {
        return Err(Error::resource(format!(
            "enumerating words of length {len} over {q} letters ({total}) exceeds the guard {guard}"
        )));
    }
    Ok(())
}

/// `Π_ℓ 1/(1 − (S_M, ℓ) t^{|ℓ|})` over Lyndon words `ℓ` with `|ℓ| <= L`,
/// as a series of order `L`.
///
/// Lyndon words are generated as prenecklaces in lexicographic order.
/// A prefix is abandoned as soon as two adjacent letters fail to chain
/// (`j_k ≠ i_{k+1}`) or its running product is too long to cancel within
/// `L` letters; every extension of such a prefix has coefficient zero.
pub fn euler_product(m: &AlgebraMatrix, max_len: usize, guard: u128) -> Result<TruncatedSeries> {
    if max_len == 0 {
        return Err(Error::validation(
            "maximum Lyndon word length must be at least 1",
        ));
    }
    let alpha = Compiled::new(m);
    check_guard(alpha.letters.len(), max_len, guard)?;

    let mut factors: Vec<(Vec<usize>, BigInt)> = Vec::new();
    if !alpha.letters.is_empty() {
        let mut walk = LyndonWalk {
            alpha: &alpha,
            max_len,
            word: Vec::with_capacity(max_len),
            products: vec![ReducedWord::identity()],
            factors: &mut factors,
        };
        walk.extend(1);
    }
    Ok(multiply_factors(factors, max_len))
}

fn multiply_factors(mut factors: Vec<(Vec<usize>, BigInt)>, max_len: usize) -> TruncatedSeries {
    factors.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    let mut coeffs = vec![BigInt::zero(); max_len + 1];
    coeffs[0] = BigInt::one();
    for (w, c) in &factors {
        let m = w.len();
        for k in m..=max_len {
            let add = c * &coeffs[k - m];
            coeffs[k] += add;
        }
    }
    TruncatedSeries::from_integers(coeffs)
}

struct LyndonWalk<'a> {
    alpha: &'a Compiled,
    max_len: usize,
    word: Vec<usize>,
    /// `products[t]` is the reduced product of the first `t` letters.
    products: Vec<ReducedWord>,
    factors: &'a mut Vec<(Vec<usize>, BigInt)>,
}

impl LyndonWalk<'_> {
    /// Extends a prenecklace of length `t − 1` with period `p`
    /// (`p = t − 1` means it is a Lyndon word).
    fn extend(&mut self, p: usize) {
        let t = self.word.len() + 1;
        if t > self.max_len {
            return;
        }
        let q = self.alpha.letters.len();
        let lo = if t == 1 { 0 } else { self.word[t - 1 - p] };
        for x in lo..q {
            if !self.push(x) {
                continue;
            }
            let period = if t == 1 || x != lo { t } else { p };
            if period == t {
                self.record();
            }
            self.extend(period);
            self.pop();
        }
    }

    fn push(&mut self, x: usize) -> bool {
        let alpha = self.alpha;
        let letter = &alpha.letters[x];
        if let Some(&prev) = self.word.last() {
            if alpha.letters[prev].col != letter.row {
                return false;
            }
        }
        let product = self.products.last().unwrap().concat(&letter.word);
        let t = self.word.len() + 1;
        if product.len() > (self.max_len - t) * alpha.max_len {
            return false;
        }
        self.word.push(x);
        self.products.push(product);
        true
    }

    fn pop(&mut self) {
        self.word.pop();
        self.products.pop();
    }

    fn record(&mut self) {
        let alpha = self.alpha;
        let first = &alpha.letters[self.word[0]];
        let last = &alpha.letters[*self.word.last().unwrap()];
        if last.col == first.row && self.products.last().unwrap().is_identity() {
            let c: BigInt = self.word.iter().map(|&x| &alpha.coeffs[x]).product();
            self.factors.push((self.word.clone(), c));
        }
    }
}

/// `Σ_{|w| = n} (S_M, w)`, enumerating words along the index graph and
/// abandoning prefixes whose running product is too long to cancel.
pub fn sum_coeffs_by_length(m: &AlgebraMatrix, n: usize, guard: u128) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::validation("word length must be at least 1"));
    }
    let alpha = Compiled::new(m);
    check_guard(alpha.letters.len(), n, guard)?;

    struct Walk<'a> {
        alpha: &'a Compiled,
        n: usize,
        total: BigInt,
    }
    impl Walk<'_> {
        fn go(
            &mut self,
            start_row: usize,
            col: usize,
            depth: usize,
            product: ReducedWord,
            weight: BigInt,
        ) {
            if depth == self.n {
                if col == start_row && product.is_identity() {
                    self.total += weight;
                }
                return;
            }
            let alpha = self.alpha;
            for &x in &alpha.by_row[col] {
                let next = product.concat(&alpha.letters[x].word);
                if next.len() > (self.n - depth - 1) * alpha.max_len {
                    continue;
                }
                let col2 = alpha.letters[x].col;
                self.go(start_row, col2, depth + 1, next, &weight * &alpha.coeffs[x]);
            }
        }
    }

    let mut walk = Walk {
        alpha: &alpha,
        n,
        total: BigInt::zero(),
    };
    for start in 0..m.dim() {
        walk.go(start, start, 0, ReducedWord::identity(), BigInt::one());
    }
    Ok(walk.total)
}

/// Groups letters by their row, for sampling closed walks.
pub fn letters_by_row(alphabet: &[TripleLetter]) -> HashMap<usize, Vec<TripleLetter>> {
    let mut map: HashMap<usize, Vec<TripleLetter>> = HashMap::new();
    for l in alphabet {
        map.entry(l.row).or_default().push(l.clone());
    }
    map
}
