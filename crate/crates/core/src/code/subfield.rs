use std::sync::Arc;

use super::linalg::{kernel_of_rref, rref, GeneratorMatrix};
use super::CodeError;
use crate::field::{Elem, Embedding, ExtField};

/// Tr from the code's field down to `emb.sub()`, pulled back.
fn trace_pull(big: &ExtField, emb: &Embedding, x: Elem) -> Elem {
    let t = big
        .trace_to(x, emb.sub().degree())
        .expect("subfield degree divides");
    emb.pull(t).expect("trace lies in the subfield")
}

/// 1, w, ..., w^(h-1) for the primitive w of the larger field: a basis over the subfield.
fn power_basis(big: &ExtField, h: u32) -> Vec<Elem> {
    (0..h as u64).map(|i| big.exp(i)).collect()
}

fn relative_degree(sub: &ExtField, big: &ExtField) -> Result<u32, CodeError> {
    if sub.characteristic() != big.characteristic() || !big.degree().is_multiple_of(sub.degree()) {
        return Err(crate::field::FieldError::DegreeNotDividing {
            a: big.degree(),
            b: sub.degree(),
        }
        .into());
    }
    Ok(big.degree() / sub.degree())
}

/// Coordinatewise trace code: the span over `sub` of Tr(theta c) for every
/// generator row c and every theta in a basis of the big field over `sub`.
pub fn trace_code(gen: &GeneratorMatrix, sub: &Arc<ExtField>) -> Result<GeneratorMatrix, CodeError> {
    let big = gen.field();
    let h = relative_degree(sub, big)?;
    let emb = Embedding::new(sub, big)?;
    let basis = power_basis(big, h);
    let mut rows = Vec::with_capacity(gen.k() * h as usize);
    for row in gen.rows() {
        for &theta in &basis {
            rows.push(
                row.iter()
                    .map(|&x| trace_pull(big, &emb, big.mul(theta, x)))
                    .collect(),
            );
        }
    }
    GeneratorMatrix::from_rows(sub, gen.len(), rows)
}

/// Subfield subcode C ∩ sub^n computed as the dual of the trace code of the dual.
pub fn subfield_subcode(
    gen: &GeneratorMatrix,
    sub: &Arc<ExtField>,
) -> Result<GeneratorMatrix, CodeError> {
    relative_degree(sub, gen.field())?;
    Ok(trace_code(&gen.dual(), sub)?.dual())
}

/// Subfield subcode by direct intersection: messages are expanded over a
/// basis of the big field and the non-constant basis coordinates of every
/// codeword entry are forced to vanish.
pub fn subfield_subcode_direct(
    gen: &GeneratorMatrix,
    sub: &Arc<ExtField>,
) -> Result<GeneratorMatrix, CodeError> {
    let big = gen.field();
    let h = relative_degree(sub, big)? as usize;
    let emb = Embedding::new(sub, big)?;
    let basis = power_basis(big, h as u32);
    let qs = sub.order();

    // coordinates over the basis for every element of the big field
    let mut coords = vec![Vec::new(); big.order() as usize];
    for idx in 0..qs.pow(h as u32) {
        let mut rest = idx;
        let mut c = Vec::with_capacity(h);
        let mut x = Elem::ZERO;
        for &theta in &basis {
            let d = Elem((rest % qs) as u32);
            rest /= qs;
            c.push(d);
            x = big.add(x, big.mul(emb.apply(d), theta));
        }
        coords[x.0 as usize] = c;
    }

    let k = gen.k();
    let n = gen.len();
    let unknowns = k * h;
    let mut system = Vec::with_capacity(n * (h - 1));
    for t in 0..n {
        for b in 1..h {
            let eq: Vec<Elem> = (0..unknowns)
                .map(|u| {
                    let (i, bb) = (u / h, u % h);
                    coords[big.mul(basis[bb], gen.rows()[i][t]).0 as usize][b]
                })
                .collect();
            system.push(eq);
        }
    }
    let pivots = rref(sub, &mut system, unknowns);
    let kernel = kernel_of_rref(sub, &system, &pivots, unknowns);
    let mut rows = Vec::with_capacity(kernel.len());
    for x in kernel {
        let msg: Vec<Elem> = (0..k)
            .map(|i| {
                (0..h).fold(Elem::ZERO, |acc, b| {
                    big.add(acc, big.mul(emb.apply(x[i * h + b]), basis[b]))
                })
            })
            .collect();
        let word = gen.encode(&msg)?;
        rows.push(
            word.into_iter()
                .map(|y| emb.pull(y).expect("constrained to the subfield"))
                .collect(),
        );
    }
    GeneratorMatrix::from_rows(sub, n, rows)
}
