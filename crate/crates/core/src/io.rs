//! Reading the matrix text format:
//!
//! ```text
//! field: Q            (or `field: F 32003`)
//! vars: 6
//! dims: 2 3
//! x0, x1, x2
//! x3, x4, x5
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::path::Path;

use crate::error::{Error, Result};
use crate::field::{Field, FieldKind, FieldSpec, PrimeField, Rationals};
use crate::matrix::PolyMatrix;
use crate::parse::parse_polynomial;

/// A matrix over whichever field its file declares.
#[derive(Debug, Clone)]
pub enum AnyMatrix {
    Q(PolyMatrix<Rationals>),
    Fp(PolyMatrix<PrimeField>),
}

impl AnyMatrix {
    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyMatrix::Q(m) => m.field().spec(),
            AnyMatrix::Fp(m) => m.field().spec(),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        match self {
            AnyMatrix::Q(m) => m.dims(),
            AnyMatrix::Fp(m) => m.dims(),
        }
    }

    pub fn to_file_string(&self) -> String {
        match self {
            AnyMatrix::Q(m) => m.to_file_string(),
            AnyMatrix::Fp(m) => m.to_file_string(),
        }
    }
}

fn header<'a>(line: Option<(usize, &'a str)>, key: &str) -> Result<(usize, &'a str)> {
    let (no, line) = line.ok_or_else(|| Error::Malformed(format!("missing `{key}:` line")))?;
    let value = line
        .strip_prefix(key)
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .ok_or_else(|| Error::Malformed(format!("line {}: expected `{key}: ...`", no + 1)))?;
    Ok((no, value.trim()))
}

fn parse_usize(no: usize, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Malformed(format!("line {}: `{s}` is not a non-negative integer", no + 1)))
}

fn build<F: Field>(
    field: F,
    num_vars: usize,
    dims: (usize, usize),
    rows: &[(usize, &str)],
) -> Result<PolyMatrix<F>> {
    if rows.len() != dims.0 {
        return Err(Error::Malformed(format!(
            "dims say {} rows, found {}",
            dims.0,
            rows.len()
        )));
    }
    let mut grid = Vec::with_capacity(rows.len());
    for &(no, line) in rows {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != dims.1 {
            return Err(Error::Malformed(format!(
                "line {}: expected {} entries, found {}",
                no + 1,
                dims.1,
                cells.len()
            )));
        }
        let row = cells
            .iter()
            .map(|c| {
                parse_polynomial(c, field.clone(), num_vars).map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse {
                        pos,
                        msg: format!("line {}, entry `{}`: {msg}", no + 1, c.trim()),
                    },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        grid.push(row);
    }
    PolyMatrix::from_rows(field, num_vars, grid)
}

pub fn parse_matrix_file(text: &str) -> Result<AnyMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, field) = header(lines.next(), "field")?;
    let spec = FieldSpec::parse(field)?;
    let (no, vars) = header(lines.next(), "vars")?;
    let num_vars = parse_usize(no, vars)?;
    let (no, dims) = header(lines.next(), "dims")?;
    let parts: Vec<&str> = dims.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(Error::Malformed(format!("line {}: dims needs two numbers", no + 1)));
    }
    let dims = (parse_usize(no, parts[0])?, parse_usize(no, parts[1])?);
    let rows: Vec<(usize, &str)> = lines.collect();
    match spec.kind {
        FieldKind::Rationals => Ok(AnyMatrix::Q(build(Rationals, num_vars, dims, &rows)?)),
        FieldKind::PrimeField => Ok(AnyMatrix::Fp(build(
            PrimeField::new(spec.characteristic)?,
            num_vars,
            dims,
            &rows,
        )?)),
    }
}

pub fn read_matrix_file(path: &Path) -> Result<AnyMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix_file(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = PolyMatrix::generic(PrimeField::default(), 2, 3).unwrap();
        let text = g.to_file_string();
        assert!(text.starts_with("field: F 32003\nvars: 6\ndims: 2 3\n"));
        match parse_matrix_file(&text).unwrap() {
            AnyMatrix::Fp(m) => assert_eq!(m.to_grid(), g.to_grid()),
            AnyMatrix::Q(_) => panic!("wrong field"),
        }
    }

    #[test]
    fn rationals_with_comments_and_transposition() {
        let text = "# a tall matrix\nfield: Q\nvars: 2\ndims: 3 1\n\nx0\n1/2*x1\nx0 + x1\n";
        let AnyMatrix::Q(m) = parse_matrix_file(text).unwrap() else {
            panic!("wrong field")
        };
        assert_eq!(m.dims(), (1, 3));
        assert!(m.is_transposed());
        assert_eq!(m.entry(0, 1).to_string(), "1/2*x1");
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_matrix_file("").is_err());
        assert!(parse_matrix_file("field: R\nvars: 1\ndims: 1 1\nx0\n").is_err());
        assert!(parse_matrix_file("field: Q\nvars: 1\ndims: 2 1\nx0\n").is_err());
        assert!(parse_matrix_file("field: Q\nvars: 1\ndims: 1 2\nx0\n").is_err());
        assert!(parse_matrix_file("field: Q\nvars: 1\ndims: 1 1\nx1\n").is_err());
        assert!(matches!(
            parse_matrix_file("field: Q\nvars: 2\ndims: 1 1\nx0 + x1^2\n"),
            Err(Error::NotHomogeneous(_))
        ));
        assert!(parse_matrix_file("field: F 4\nvars: 1\ndims: 1 1\nx0\n").is_err());
    }
}
