use std::sync::Arc;

use super::CodeError;
use crate::field::{same_field, Elem, ExtField};

/// Row-reduced basis of a linear code. Rows are independent and kept in
/// reduced row echelon form, so membership tests and duals are direct.
#[derive(Clone, Debug)]
pub struct GeneratorMatrix {
    field: Arc<ExtField>,
    n: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl PartialEq for GeneratorMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows && same_field(&self.field, &other.field)
    }
}

impl Eq for GeneratorMatrix {}

/// In-place reduced row echelon form; returns pivot columns and drops zero rows.
pub(crate) fn rref(field: &ExtField, rows: &mut Vec<Vec<Elem>>, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let c = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = field.sub(*x, field.mul(c, p));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of {x : M x^T = 0} for an RREF matrix with the given pivots.
pub(crate) fn kernel_of_rref(
    field: &ExtField,
    rows: &[Vec<Elem>],
    pivots: &[usize],
    n: usize,
) -> Vec<Vec<Elem>> {
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Elem::ZERO; n];
            v[f] = Elem::ONE;
            for (row, &p) in rows.iter().zip(pivots) {
                v[p] = field.neg(row[f]);
            }
            v
        })
        .collect()
}

impl GeneratorMatrix {
    /// Spans the given rows; dependent rows are reduced away.
    pub fn from_rows(
        field: &Arc<ExtField>,
        n: usize,
        rows: Vec<Vec<Elem>>,
    ) -> Result<Self, CodeError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(CodeError::LengthMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        let mut rows = rows;
        let pivots = rref(field, &mut rows, n);
        Ok(GeneratorMatrix {
            field: Arc::clone(field),
            n,
            rows,
            pivots,
        })
    }

    pub fn zero(field: &Arc<ExtField>, n: usize) -> Self {
        GeneratorMatrix {
            field: Arc::clone(field),
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Dimension.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Generator matrix of the Euclidean dual.
    pub fn dual(&self) -> GeneratorMatrix {
        let basis = kernel_of_rref(&self.field, &self.rows, &self.pivots, self.n);
        GeneratorMatrix::from_rows(&self.field, self.n, basis).expect("kernel rows have length n")
    }

    /// Message times generator.
    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>, CodeError> {
        if msg.len() != self.k() {
            return Err(CodeError::LengthMismatch {
                expected: self.k(),
                got: msg.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.n];
        for (&m, row) in msg.iter().zip(&self.rows) {
            if m.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(m, x));
            }
        }
        Ok(out)
    }

    pub fn contains(&self, word: &[Elem]) -> bool {
        if word.len() != self.n {
            return false;
        }
        // in RREF the message is read off the pivot columns
        let msg: Vec<Elem> = self.pivots.iter().map(|&p| word[p]).collect();
        self.encode(&msg).map(|c| c == word).unwrap_or(false)
    }

    /// Whether every row of `self` is orthogonal to every row of `other`.
    pub fn orthogonal_to(&self, other: &GeneratorMatrix) -> bool {
        let f = &self.field;
        self.rows.iter().all(|a| {
            other.rows.iter().all(|b| {
                a.iter()
                    .zip(b)
                    .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
                    .is_zero()
            })
        })
    }

    /// The code extended by an overall check coordinate, minus the sum of the others.
    pub fn extended(&self) -> GeneratorMatrix {
        let f = &self.field;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let s = r.iter().fold(Elem::ZERO, |a, &x| f.add(a, x));
                let mut r = r.clone();
                r.push(f.neg(s));
                r
            })
            .collect();
        GeneratorMatrix::from_rows(f, self.n + 1, rows).expect("rows have length n + 1")
    }

    /// Same code (row spaces are equal).
    pub fn same_code(&self, other: &GeneratorMatrix) -> bool {
        self == other
    }
}
