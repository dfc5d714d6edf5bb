//! Matrices of homogeneous forms.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::polynomial::Polynomial;

/// An `m x n` matrix of homogeneous polynomials with `m <= n`.
///
/// Inputs with more rows than columns are transposed on construction; the
/// `transposed` flag and the provenance notes record that the stored matrix
/// is the transpose of the one supplied.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix<F: Field> {
    field: F,
    num_vars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
    degrees: Vec<Option<u32>>,
    transposed: bool,
    provenance: Vec<String>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn from_rows(field: F, num_vars: usize, rows: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        Self::build(field, num_vars, rows, false, Vec::new())
    }

    fn build(
        field: F,
        num_vars: usize,
        grid: Vec<Vec<Polynomial<F>>>,
        transposed: bool,
        mut provenance: Vec<String>,
    ) -> Result<Self> {
        let m = grid.len();
        let n = grid.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::OutOfRange("matrix must have at least one row and column".into()));
        }
        if grid.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed("rows of unequal length".into()));
        }
        for p in grid.iter().flatten() {
            if p.field() != &field {
                return Err(Error::FieldMismatch {
                    left: field.spec().to_string(),
                    right: p.field().spec().to_string(),
                });
            }
            if p.num_vars() != num_vars {
                return Err(Error::VarCountMismatch {
                    left: num_vars,
                    right: p.num_vars(),
                });
            }
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous(p.to_string()));
            }
        }
        let (rows, cols, entries, transposed) = if m > n {
            provenance.push(format!("transposed {m}x{n} input to {n}x{m}"));
            let mut t = Vec::with_capacity(m * n);
            for j in 0..n {
                for row in &grid {
                    t.push(row[j].clone());
                }
            }
            (n, m, t, !transposed)
        } else {
            (m, n, grid.into_iter().flatten().collect(), transposed)
        };
        let degrees = entries.iter().map(Polynomial::homogeneous_degree).collect();
        Ok(Self {
            field,
            num_vars,
            rows,
            cols,
            entries,
            degrees,
            transposed,
            provenance,
        })
    }

    fn derive(&self, grid: Vec<Vec<Polynomial<F>>>, note: String) -> Result<Self> {
        let mut provenance = self.provenance.clone();
        provenance.push(note);
        Self::build(
            self.field.clone(),
            self.num_vars,
            grid,
            self.transposed,
            provenance,
        )
    }

    /// The `m x n` matrix of distinct indeterminates `x_{i*n + j}`.
    pub fn generic(field: F, m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::OutOfRange("generic matrix needs m, n >= 1".into()));
        }
        let num_vars = m * n;
        let rows = (0..m)
            .map(|i| {
                (0..n)
                    .map(|j| Polynomial::var(field.clone(), num_vars, i * n + j))
                    .collect()
            })
            .collect();
        let mut out = Self::from_rows(field, num_vars, rows)?;
        out.provenance.push(format!("generic {m}x{n}"));
        Ok(out)
    }

    /// The `t x t` scalar matrix `form * Id`.
    pub fn hyper(form: &Polynomial<F>, t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::OutOfRange("t must be positive".into()));
        }
        if !form.is_homogeneous() || form.is_zero() {
            return Err(Error::NotHomogeneous(form.to_string()));
        }
        let zero = Polynomial::zero(form.field().clone(), form.num_vars());
        let rows = (0..t)
            .map(|i| {
                (0..t)
                    .map(|j| if i == j { form.clone() } else { zero.clone() })
                    .collect()
            })
            .collect();
        let mut out = Self::from_rows(form.field().clone(), form.num_vars(), rows)?;
        out.provenance.push(format!("hyper ({form}) {t}"));
        Ok(out)
    }

    /// Random entries with `deg F_ij = row_degrees[i] + col_degrees[j]`, so
    /// every minor is homogeneous. Each entry is a sum of up to `max_terms`
    /// random monomials; an entry is zero with probability `zero_prob`.
    pub fn random_forms(
        field: F,
        num_vars: usize,
        row_degrees: &[u32],
        col_degrees: &[u32],
        max_terms: usize,
        zero_prob: f64,
        seed: u64,
    ) -> Result<Self> {
        if num_vars == 0 || max_terms == 0 {
            return Err(Error::OutOfRange("need at least one variable and one term".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rows = Vec::with_capacity(row_degrees.len());
        for &a in row_degrees {
            let mut row = Vec::with_capacity(col_degrees.len());
            for &b in col_degrees {
                let d = a + b;
                if rng.gen_bool(zero_prob) {
                    row.push(Polynomial::zero(field.clone(), num_vars));
                    continue;
                }
                let k = rng.gen_range(1..=max_terms);
                let terms: Vec<_> = (0..k)
                    .map(|_| {
                        let mut exps = vec![0u16; num_vars];
                        for _ in 0..d {
                            exps[rng.gen_range(0..num_vars)] += 1;
                        }
                        let mut c = field.sample(&mut rng);
                        if field.is_zero(&c) {
                            c = field.one();
                        }
                        (Monomial::from_exponents(exps), c)
                    })
                    .collect();
                row.push(Polynomial::from_terms(field.clone(), num_vars, terms));
            }
            rows.push(row);
        }
        let mut out = Self::from_rows(field, num_vars, rows)?;
        out.provenance
            .push(format!("random forms rows {row_degrees:?} cols {col_degrees:?} seed {seed}"));
        Ok(out)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.cols + j]
    }

    /// Degree of a nonzero entry.
    pub fn degree(&self, i: usize, j: usize) -> Option<u32> {
        self.degrees[i * self.cols + j]
    }

    pub fn degree_layout(&self) -> Vec<Vec<Option<u32>>> {
        self.degrees.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    pub fn row_entries(&self, i: usize) -> &[Polynomial<F>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial<F>> {
        self.entries.iter()
    }

    /// Whether the stored matrix is the transpose of the one supplied.
    pub fn is_transposed(&self) -> bool {
        self.transposed
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn to_grid(&self) -> Vec<Vec<Polynomial<F>>> {
        self.entries.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        self.submatrix_noted(rows, cols, format!("submatrix rows {rows:?} cols {cols:?}"))
    }

    fn submatrix_noted(&self, rows: &[usize], cols: &[usize], note: String) -> Result<Self> {
        for &i in rows {
            if i >= self.rows {
                return Err(Error::OutOfRange(format!("row {i} of {}", self.rows)));
            }
        }
        for &j in cols {
            if j >= self.cols {
                return Err(Error::OutOfRange(format!("column {j} of {}", self.cols)));
            }
        }
        let grid = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.entry(i, j).clone()).collect())
            .collect();
        self.derive(grid, note)
    }

    /// Removes row `i` (0-based).
    pub fn delete_row(&self, i: usize) -> Result<Self> {
        if i >= self.rows {
            return Err(Error::OutOfRange(format!("row {i} of {}", self.rows)));
        }
        if self.rows == 1 {
            return Err(Error::OutOfRange("cannot delete the only row".into()));
        }
        let rows: Vec<usize> = (0..self.rows).filter(|&k| k != i).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix_noted(&rows, &cols, format!("deleted row {i}"))
    }

    /// Removes column `j` (0-based).
    pub fn delete_column(&self, j: usize) -> Result<Self> {
        if j >= self.cols {
            return Err(Error::OutOfRange(format!("column {j} of {}", self.cols)));
        }
        if self.cols == 1 {
            return Err(Error::OutOfRange("cannot delete the only column".into()));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&k| k != j).collect();
        self.submatrix_noted(&rows, &cols, format!("deleted column {j}"))
    }

    /// Drops the last row and the last column.
    pub fn corner_submatrix(&self) -> Result<Self> {
        if self.rows < 2 || self.cols < 2 {
            return Err(Error::OutOfRange(
                "corner submatrix needs at least 2 rows and 2 columns".into(),
            ));
        }
        let rows: Vec<usize> = (0..self.rows - 1).collect();
        let cols: Vec<usize> = (0..self.cols - 1).collect();
        self.submatrix_noted(&rows, &cols, "corner submatrix".into())
    }

    /// `T * self` for an `m x m` scalar matrix `T`.
    pub fn left_multiply(&self, t: &[Vec<F::Elem>], note: &str) -> Result<Self> {
        if t.len() != self.rows || t.iter().any(|r| r.len() != self.rows) {
            return Err(Error::OutOfRange("transform has the wrong size".into()));
        }
        let grid = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.combine((0..self.rows).map(|k| (&t[i][k], self.entry(k, j)))))
                    .collect()
            })
            .collect();
        self.derive(grid, note.to_string())
    }

    /// `self * S` for an `n x n` scalar matrix `S`.
    pub fn right_multiply(&self, s: &[Vec<F::Elem>], note: &str) -> Result<Self> {
        if s.len() != self.cols || s.iter().any(|r| r.len() != self.cols) {
            return Err(Error::OutOfRange("transform has the wrong size".into()));
        }
        let grid = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.combine((0..self.cols).map(|k| (&s[k][j], self.entry(i, k)))))
                    .collect()
            })
            .collect();
        self.derive(grid, note.to_string())
    }

    fn combine<'a>(
        &'a self,
        items: impl Iterator<Item = (&'a F::Elem, &'a Polynomial<F>)>,
    ) -> Polynomial<F> {
        let terms = items
            .filter(|(c, _)| !self.field.is_zero(c))
            .flat_map(|(c, p)| {
                p.terms()
                    .iter()
                    .map(move |(m, pc)| (m.clone(), self.field.mul(c, pc)))
            });
        Polynomial::from_terms(self.field.clone(), self.num_vars, terms)
    }

    /// Shuffles rows; used by tests and random instance generators.
    pub fn permute_rows(&self, seed: u64) -> Result<Self> {
        let mut order: Vec<usize> = (0..self.rows).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix(&order, &cols)
    }

    /// The matrix in the text file format.
    pub fn to_file_string(&self) -> String {
        let spec = self.field.spec();
        let mut s = String::new();
        match spec.kind {
            crate::field::FieldKind::Rationals => s.push_str("field: Q\n"),
            crate::field::FieldKind::PrimeField => {
                s.push_str(&format!("field: F {}\n", spec.characteristic))
            }
        }
        s.push_str(&format!("vars: {}\n", self.num_vars));
        s.push_str(&format!("dims: {} {}\n", self.rows, self.cols));
        for i in 0..self.rows {
            let row: Vec<String> = self.row_entries(i).iter().map(|p| p.to_string()).collect();
            s.push_str(&row.join(", "));
            s.push('\n');
        }
        s
    }

    /// Entries as strings, row by row.
    pub fn to_string_grid(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row_entries(i).iter().map(|p| p.to_string()).collect())
            .collect()
    }
}

impl<F: Field> fmt::Debug for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for row in self.to_string_grid() {
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Display for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_string_grid() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::parse::parse_polynomial;

    #[test]
    fn generic_layout() {
        let g = PolyMatrix::generic(Rationals, 2, 3).unwrap();
        assert_eq!(g.dims(), (2, 3));
        assert_eq!(g.num_vars(), 6);
        assert_eq!(g.entry(1, 2).to_string(), "x5");
        assert!(g.degree_layout().iter().flatten().all(|d| *d == Some(1)));
    }

    #[test]
    fn tall_input_is_transposed() {
        let f = Rationals;
        let rows = (0..3)
            .map(|i| (0..2).map(|j| Polynomial::var(f, 6, i * 2 + j)).collect())
            .collect();
        let m = PolyMatrix::from_rows(f, 6, rows).unwrap();
        assert_eq!(m.dims(), (2, 3));
        assert!(m.is_transposed());
        assert_eq!(m.entry(0, 1).to_string(), "x2");
        assert_eq!(m.provenance().len(), 1);
    }

    #[test]
    fn deletions() {
        let g = PolyMatrix::generic(Rationals, 3, 3).unwrap();
        let o = g.delete_column(2).unwrap();
        assert_eq!(o.dims(), (2, 3));
        assert!(o.is_transposed());
        // stored transposed: row 0 of the stored matrix is original column 0
        assert_eq!(o.entry(0, 2).to_string(), "x6");
        let n = g.corner_submatrix().unwrap();
        assert_eq!(n.to_string_grid(), vec![vec!["x0", "x1"], vec!["x3", "x4"]]);
        let row = PolyMatrix::generic(Rationals, 1, 3).unwrap();
        assert!(row.delete_row(0).is_err());
        assert!(g.delete_column(3).is_err());
        assert!(row.corner_submatrix().is_err());
    }

    #[test]
    fn nonhomogeneous_entries_rejected() {
        let p = parse_polynomial("x0^2 + x1", Rationals, 2).unwrap();
        let r = PolyMatrix::from_rows(Rationals, 2, vec![vec![p]]);
        assert!(matches!(r, Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn hyper_matrix() {
        let x0 = parse_polynomial("x0", Rationals, 2).unwrap();
        let h = PolyMatrix::hyper(&x0, 3).unwrap();
        assert_eq!(h.dims(), (3, 3));
        assert_eq!(h.degree(0, 1), None);
        assert_eq!(h.degree(2, 2), Some(1));
    }

    #[test]
    fn random_forms_are_reproducible() {
        let a = PolyMatrix::random_forms(Rationals, 4, &[1, 1], &[1, 1], 3, 0.0, 9).unwrap();
        let b = PolyMatrix::random_forms(Rationals, 4, &[1, 1], &[1, 1], 3, 0.0, 9).unwrap();
        assert_eq!(a, b);
        assert!(a.degree_layout().iter().flatten().all(|d| *d == Some(2)));
    }
}
