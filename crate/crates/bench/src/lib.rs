//! Inputs shared by the benchmarks.

use bihom_core::corpus::{generate, CorpusConfig, CorpusEntry};
use bihom_core::{Field, Matrix};
use rand::Rng;

/// Seeded corpus entries of exactly dimension `dim`.
pub fn entries_of_dim(field: Field, dim: usize, count: usize) -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = generate(&CorpusConfig::new(7, field, dim, count * 8))
        .expect("corpus generation")
        .into_iter()
        .filter(|e| e.instance.dim() == dim)
        .collect();
    out.truncate(count);
    out
}

/// Dense matrix with small integer entries.
pub fn random_matrix(field: Field, rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut rng = bihom_core::corpus::rng(seed);
    let mut m = Matrix::zeros(field, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, field.from_i64(rng.gen_range(-5..=5)));
        }
    }
    m
}
