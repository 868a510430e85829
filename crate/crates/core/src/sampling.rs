//! Random small matrices for property checks.

use rand::Rng;

use crate::freegroup::{Generators, ReducedWord};
use crate::group_algebra::AlgebraElement;
use crate::matrix::AlgebraMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomMatrixParams {
    pub max_dim: usize,
    /// Largest number of terms drawn per entry (an entry may still cancel).
    pub max_support: usize,
    pub max_word_len: usize,
    /// Coefficients are drawn from `[-max_coeff, max_coeff] \ {0}`.
    pub max_coeff: i64,
    pub generators: usize,
}

impl Default for RandomMatrixParams {
    /// `d ≤ 3`, support ≤ 2, word length ≤ 2, coefficients in `[-3, 3]`,
    /// two generators.
    fn default() -> Self {
        RandomMatrixParams {
            max_dim: 3,
            max_support: 2,
            max_word_len: 2,
            max_coeff: 3,
            generators: 2,
        }
    }
}

impl RandomMatrixParams {
    /// Generator table `x1, x2, …` matching the ids used by the sampler.
    pub fn generator_table(&self) -> Generators {
        Generators::from_names((1..=self.generators).map(|k| format!("x{k}")))
            .expect("distinct names")
    }
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, generators: usize, max_len: usize) -> ReducedWord {
    let len = rng.gen_range(0..=max_len);
    ReducedWord::reduce_unchecked((0..len).map(|_| {
        let g = rng.gen_range(1..=generators as i32);
        if rng.gen_bool(0.5) {
            g
        } else {
            -g
        }
    }))
}

pub fn random_element<R: Rng + ?Sized>(rng: &mut R, params: &RandomMatrixParams) -> AlgebraElement {
    let terms = rng.gen_range(0..=params.max_support);
    AlgebraElement::from_terms((0..terms).map(|_| {
        let w = random_word(rng, params.generators, params.max_word_len);
        let mut c = rng.gen_range(1..=params.max_coeff);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        (w, c)
    }))
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, params: &RandomMatrixParams) -> AlgebraMatrix {
    let dim = rng.gen_range(1..=params.max_dim.max(1));
    random_matrix_with_dim(rng, dim, params)
}

pub fn random_matrix_with_dim<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    params: &RandomMatrixParams,
) -> AlgebraMatrix {
    let entries = (0..dim * dim)
        .map(|_| random_element(rng, params))
        .collect();
    AlgebraMatrix::from_entries(dim, entries).expect("dim >= 1")
}
