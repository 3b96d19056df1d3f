//! Point sets in projective space and their hyperplane sections.

use std::sync::Arc;

use super::linalg::{rref, GeneratorMatrix};
use super::CodeError;
use crate::field::{build_field, Elem, ExtField};

/// Homogeneous coordinates, scaled so the last nonzero entry is 1.
pub type Point = Vec<Elem>;

fn normalize(field: &ExtField, mut v: Vec<Elem>) -> Option<Point> {
    let last = *v.iter().rev().find(|x| !x.is_zero())?;
    let inv = field.inv(last)?;
    for x in v.iter_mut() {
        *x = field.mul(*x, inv);
    }
    Some(v)
}

#[derive(Clone, Debug)]
pub struct EllipticQuadric {
    pub field: Arc<ExtField>,
    /// x^2 + x + a is irreducible
    pub a: Elem,
    pub points: Vec<Point>,
}

/// The q^2 + 1 points (0,0,1,0) and (x, y, x^2 + xy + a y^2, 1) of PG(3, q),
/// a the least field element with x^2 + x + a irreducible.
pub fn elliptic_quadric(q: u64) -> Result<EllipticQuadric, CodeError> {
    let (p, m) = super::families::prime_power(q)
        .filter(|&(p, _)| p % 2 == 1)
        .ok_or_else(|| CodeError::InvalidParameters(format!("q = {q} is not an odd prime power")))?;
    let f = build_field(p, m)?;
    let a = f
        .elements()
        .find(|&a| {
            f.elements()
                .all(|x| !f.add(f.add(f.mul(x, x), x), a).is_zero())
        })
        .expect("an irreducible quadratic exists");
    let mut points = vec![vec![Elem::ZERO, Elem::ZERO, Elem::ONE, Elem::ZERO]];
    for x in f.elements() {
        for y in f.elements() {
            let z = f.add(f.add(f.mul(x, x), f.mul(x, y)), f.mul(a, f.mul(y, y)));
            points.push(vec![x, y, z, Elem::ONE]);
        }
    }
    Ok(EllipticQuadric {
        field: f,
        a,
        points,
    })
}

/// Every hyperplane of the ambient projective space, as normalized dual vectors.
fn hyperplanes(field: &ExtField, dim: usize) -> Vec<Point> {
    let q = field.order();
    let total = q.pow(dim as u32);
    (1..total)
        .filter_map(|idx| {
            let mut rest = idx;
            let v: Vec<Elem> = (0..dim)
                .map(|_| {
                    let d = Elem((rest % q) as u32);
                    rest /= q;
                    d
                })
                .collect();
            // keep the representative that is already normalized
            let last = *v.iter().rev().find(|x| !x.is_zero())?;
            (last == Elem::ONE).then_some(v)
        })
        .collect()
}

/// For each hyperplane, the indices of the points lying on it.
pub fn plane_sections(field: &ExtField, points: &[Point]) -> Vec<Vec<usize>> {
    let Some(dim) = points.first().map(|p| p.len()) else {
        return Vec::new();
    };
    hyperplanes(field, dim)
        .into_iter()
        .map(|u| {
            points
                .iter()
                .enumerate()
                .filter(|(_, pt)| {
                    u.iter()
                        .zip(pt.iter())
                        .fold(Elem::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
                        .is_zero()
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

/// Whether every three of the points span a plane.
pub fn no_three_collinear(field: &ExtField, points: &[Point]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut rows = vec![points[i].clone(), points[j].clone(), points[k].clone()];
                let width = rows[0].len();
                if rref(field, &mut rows, width).len() < 3 {
                    return false;
                }
            }
        }
    }
    true
}

/// The code whose generator matrix has the points as columns.
pub fn points_matrix(field: &Arc<ExtField>, points: &[Point]) -> Result<GeneratorMatrix, CodeError> {
    let dim = points.first().map_or(0, |p| p.len());
    let rows = (0..dim)
        .map(|r| points.iter().map(|p| p[r]).collect())
        .collect();
    GeneratorMatrix::from_rows(field, points.len(), rows)
}

/// Columns of a generator matrix as projective points (zero columns give None).
pub fn columns_as_points(gen: &GeneratorMatrix) -> Vec<Option<Point>> {
    let f = gen.field();
    (0..gen.len())
        .map(|c| normalize(f, gen.rows().iter().map(|r| r[c]).collect()))
        .collect()
}
