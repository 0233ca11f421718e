use std::fmt;

use super::{pi1, Presentation};
use crate::symbol::SeifertSymbol;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Option<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(IntegerMatrix {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn abelianize(p: &Presentation) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(p.relators().len(), p.generators().len());
    for (r, word) in p.relators().iter().enumerate() {
        for letter in word.letters() {
            let c = letter.generator;
            m.set(r, c, m.get(r, c) + letter.exponent);
        }
    }
    m
}

/// Smith invariants `d1 | d2 | ... ` of `m`, padded with zeros to
/// `min(rows, cols)` entries.
///
/// Elimination picks the entry of least absolute value as pivot, clears its
/// row and column by Euclidean steps, and repairs divisibility by folding an
/// offending row into the pivot row before moving on.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<u64> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<i128>> = (0..rows)
        .map(|r| m.row(r).iter().map(|&x| x as i128).collect())
        .collect();
    let size = rows.min(cols);
    let mut diagonal = Vec::with_capacity(size);

    for k in 0..size {
        loop {
            let Some((pr, pc)) = min_abs_entry(&a, k) else {
                diagonal.resize(size, 0);
                return diagonal;
            };
            a.swap(k, pr);
            for row in a.iter_mut() {
                row.swap(k, pc);
            }
            let pivot = a[k][k];

            let mut dirty = false;
            for r in k + 1..rows {
                let factor = a[r][k].div_euclid(pivot);
                if factor != 0 {
                    for c in k..cols {
                        a[r][c] -= factor * a[k][c];
                    }
                }
                dirty |= a[r][k] != 0;
            }
            for c in k + 1..cols {
                let factor = a[k][c].div_euclid(pivot);
                if factor != 0 {
                    for r in k..rows {
                        a[r][c] -= factor * a[r][k];
                    }
                }
                dirty |= a[k][c] != 0;
            }
            if dirty {
                continue;
            }

            let offending = (k + 1..rows)
                .find(|&r| (k + 1..cols).any(|c| a[r][c] % pivot != 0));
            match offending {
                Some(r) => {
                    for c in k..cols {
                        a[k][c] += a[r][c];
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[k][k].unsigned_abs() as u64);
    }
    diagonal
}

fn min_abs_entry(a: &[Vec<i128>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, u128)> = None;
    for (r, row) in a.iter().enumerate().skip(k) {
        for (c, &x) in row.iter().enumerate().skip(k) {
            if x != 0 && best.map_or(true, |(_, _, b)| x.unsigned_abs() < b) {
                best = Some((r, c, x.unsigned_abs()));
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

/// `Z^free_rank + Z/d1 + ... + Z/dk` with `2 <= d1 | d2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroupStructure {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroupStructure {
    /// Cokernel of a relation matrix given its Smith invariants.
    pub fn from_invariants(generators: usize, invariants: &[u64]) -> Self {
        let rank = invariants.iter().filter(|&&d| d != 0).count();
        AbelianGroupStructure {
            free_rank: generators - rank,
            torsion: invariants.iter().copied().filter(|&d| d > 1).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" + "))
    }
}

/// First homology of the manifold, from the abelianized presentation.
pub fn h1(s: &SeifertSymbol) -> AbelianGroupStructure {
    let presentation = pi1(s);
    let matrix = abelianize(&presentation);
    AbelianGroupStructure::from_invariants(matrix.cols(), &smith_normal_form(&matrix))
}
