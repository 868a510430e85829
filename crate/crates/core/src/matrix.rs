//! Square matrices over the group algebra and the sequence
//! `a_n(M) = (Tr(Mⁿ), 1)`.

use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::freegroup::{Generators, ReducedWord};
use crate::group_algebra::AlgebraElement;

/// Default ceiling on the total number of stored terms across a matrix
/// power.
pub const DEFAULT_TERM_CEILING: usize = 50_000_000;

/// Default largest `n` accepted by [`AlgebraMatrix::a_n_oracle`].
pub const DEFAULT_ORACLE_GUARD: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMatrix {
    dim: usize,
    // row-major
    entries: Vec<AlgebraElement>,
}

/// Knobs for [`AlgebraMatrix::a_sequence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceOptions {
    pub prune: bool,
    pub term_ceiling: usize,
}

impl Default for SequenceOptions {
    fn default() -> Self {
        SequenceOptions {
            prune: true,
            term_ceiling: DEFAULT_TERM_CEILING,
        }
    }
}

impl AlgebraMatrix {
    pub fn zero(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::validation("matrix dimension must be at least 1"));
        }
        Ok(AlgebraMatrix {
            dim,
            entries: vec![AlgebraElement::zero(); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zero(dim)?;
        for i in 0..dim {
            m.set(i, i, AlgebraElement::one());
        }
        Ok(m)
    }

    /// Builds a matrix from `dim²` entries in row-major order.
    pub fn from_entries(dim: usize, entries: Vec<AlgebraElement>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::validation("matrix dimension must be at least 1"));
        }
        if entries.len() != dim * dim {
            return Err(Error::validation(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(AlgebraMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `(i, j)`, zero-based.
    pub fn get(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: AlgebraElement) {
        self.entries[i * self.dim + j] = value;
    }

    /// Longest reduced word over the supports of all entries (`ℓ_max`).
    pub fn max_word_len(&self) -> usize {
        self.entries
            .iter()
            .map(AlgebraElement::max_word_len)
            .max()
            .unwrap_or(0)
    }

    pub fn term_count(&self) -> usize {
        self.entries.iter().map(AlgebraElement::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AlgebraElement::is_zero)
    }

    pub fn mat_multiply(&self, other: &Self) -> Result<Self> {
        self.multiply_bounded(other, None)
    }

    /// Product keeping only terms of reduced length `<= max_len`.
    fn multiply_bounded(&self, other: &Self, max_len: Option<usize>) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = AlgebraElement::zero();
                for k in 0..d {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc.accumulate_product(a, b, max_len);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(AlgebraMatrix { dim: d, entries })
    }

    /// `Σ_i (A_ii, 1)`.
    pub fn trace_coeff_one(&self) -> BigInt {
        let one = ReducedWord::identity();
        (0..self.dim).map(|i| self.get(i, i).coeff(&one)).sum()
    }

    pub fn scalar_matrix(&self, lambda: &BigInt) -> Self {
        AlgebraMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|e| e.scalar_multiply(lambda))
                .collect(),
        }
    }

    /// `[a_1(M), …, a_n(M)]`.
    ///
    /// With pruning, after forming `M^k` every term longer than
    /// `(n − k)·ℓ_max` is discarded: one more factor of `M` shortens a word
    /// by at most `ℓ_max`, so such terms cannot reach the identity by step
    /// `n`.
    pub fn a_sequence(&self, n: usize, opts: SequenceOptions) -> Result<Vec<BigInt>> {
        if n == 0 {
            return Err(Error::validation("sequence length must be at least 1"));
        }
        let lmax = self.max_word_len();
        let bound = |k: usize| opts.prune.then(|| (n - k) * lmax);

        let mut power = self.clone();
        if let Some(b) = bound(1) {
            for e in &mut power.entries {
                e.retain_max_len(b);
            }
        }
        let mut out = Vec::with_capacity(n);
        out.push(power.trace_coeff_one());
        for k in 2..=n {
            power = power.multiply_bounded(self, bound(k))?;
            let terms = power.term_count();
            if terms > opts.term_ceiling {
                return Err(Error::resource(format!(
                    "M^{k} holds {terms} terms, above the ceiling of {}",
                    opts.term_ceiling
                )));
            }
            out.push(power.trace_coeff_one());
        }
        Ok(out)
    }

    /// `a_n(M)` by direct summation over closed index paths
    /// `i_1 → … → i_n → i_1` and all choices of support words, adding the
    /// coefficient product whenever `g_1⋯g_n = 1`. Exponential; `n` must not
    /// exceed `guard`.
    pub fn a_n_oracle(&self, n: usize, guard: usize) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::validation("n must be at least 1"));
        }
        if n > guard {
            return Err(Error::resource(format!(
                "brute-force enumeration of length {n} exceeds the guard {guard}"
            )));
        }
        let supports: Vec<Vec<(ReducedWord, BigInt)>> = self
            .entries
            .iter()
            .map(|e| e.iter().map(|(w, c)| (w.clone(), c.clone())).collect())
            .collect();
        let mut total = BigInt::zero();
        for start in 0..self.dim {
            self.oracle_walk(
                &supports,
                start,
                start,
                n,
                ReducedWord::identity(),
                BigInt::one(),
                &mut total,
            );
        }
        Ok(total)
    }

    #[allow(clippy::too_many_arguments)]
    fn oracle_walk(
        &self,
        supports: &[Vec<(ReducedWord, BigInt)>],
        start: usize,
        at: usize,
        remaining: usize,
        product: ReducedWord,
        weight: BigInt,
        total: &mut BigInt,
    ) {
        if remaining == 0 {
            if at == start && product.is_identity() {
                *total += weight;
            }
            return;
        }
        for next in 0..self.dim {
            for (g, c) in &supports[at * self.dim + next] {
                self.oracle_walk(
                    supports,
                    start,
                    next,
                    remaining - 1,
                    product.concat(g),
                    &weight * c,
                    total,
                );
            }
        }
    }

    pub fn display<'a>(&'a self, gens: &'a Generators) -> MatrixDisplay<'a> {
        MatrixDisplay { matrix: self, gens }
    }
}

/// The matrix document format: `dim d` followed by one `[i,j] = poly` line
/// per nonzero entry, row-major, 1-based.
pub struct MatrixDisplay<'a> {
    matrix: &'a AlgebraMatrix,
    gens: &'a Generators,
}

impl fmt::Display for MatrixDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.matrix.dim;
        writeln!(f, "dim {d}")?;
        for i in 0..d {
            for j in 0..d {
                let e = self.matrix.get(i, j);
                if !e.is_zero() {
                    writeln!(f, "[{},{}] = {}", i + 1, j + 1, e.display(self.gens))?;
                }
            }
        }
        Ok(())
    }
}
