use rayon::prelude::*;

use super::enumerate::EnumOptions;
use super::linalg::{kernel_of_rref, rref, GeneratorMatrix};
use super::CodeError;
use crate::field::{Elem, ExtField};

/// Weight-w words of a dual code, one per scalar class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowWeightWords {
    pub weight: usize,
    pub q: u64,
    /// (support, values on the support), first value equal to 1
    pub representatives: Vec<(Vec<usize>, Vec<Elem>)>,
}

impl LowWeightWords {
    /// Number of codewords, counting all scalar multiples.
    pub fn count(&self) -> u128 {
        self.representatives.len() as u128 * (self.q as u128 - 1)
    }

    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.representatives.iter().map(|(s, _)| s.clone()).collect()
    }

    /// Full-length words of the class representatives.
    pub fn words(&self, n: usize) -> Vec<Vec<Elem>> {
        self.representatives
            .iter()
            .map(|(s, v)| {
                let mut w = vec![Elem::ZERO; n];
                for (&i, &x) in s.iter().zip(v) {
                    w[i] = x;
                }
                w
            })
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Full-support kernel vectors of the k x w submatrix on `cols`, normalized.
fn solve_support(field: &ExtField, gen: &GeneratorMatrix, cols: &[usize]) -> Vec<Vec<Elem>> {
    let w = cols.len();
    let mut m: Vec<Vec<Elem>> = gen
        .rows()
        .iter()
        .map(|r| cols.iter().map(|&c| r[c]).collect())
        .collect();
    let pivots = rref(field, &mut m, w);
    if pivots.len() == w {
        return Vec::new();
    }
    let basis = kernel_of_rref(field, &m, &pivots, w);
    let dim = basis.len();
    let q = field.order();
    let mut out = Vec::new();
    // projective points of the kernel: coefficient vectors with first nonzero 1
    for lead in 0..dim {
        let free = dim - 1 - lead;
        for idx in 0..q.pow(free as u32) {
            let mut v = basis[lead].clone();
            let mut rest = idx;
            for b in &basis[lead + 1..] {
                let c = Elem((rest % q) as u32);
                rest /= q;
                if c.is_zero() {
                    continue;
                }
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = field.add(*x, field.mul(c, y));
                }
            }
            if v.iter().all(|x| !x.is_zero()) {
                let inv = field.inv(v[0]).expect("nonzero");
                out.push(v.into_iter().map(|x| field.mul(x, inv)).collect());
            }
        }
    }
    out
}

/// All weight-w codewords (up to scalars) of the dual of the code generated
/// by `gen`. Each w-subset of positions is tested for dual words supported
/// exactly there by solving the k x w system given by those columns.
pub fn low_weight_dual_words(
    gen: &GeneratorMatrix,
    w: usize,
    opts: &EnumOptions,
) -> Result<LowWeightWords, CodeError> {
    if w > 5 {
        return Err(CodeError::WeightTooLarge(w));
    }
    let n = gen.len();
    let field = gen.field();
    let required = binomial(n, w) * (gen.k().max(1) * w.max(1)) as u128;
    if required > opts.budget {
        return Err(CodeError::BudgetExceeded {
            required,
            budget: opts.budget,
        });
    }
    let q = field.order();
    if w == 0 || w > n {
        return Ok(LowWeightWords {
            weight: w,
            q,
            representatives: Vec::new(),
        });
    }
    let reps = opts.run(|| {
        (0..n)
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut found = Vec::new();
                let mut cols = vec![first];
                extend(field, gen, n, w, &mut cols, &mut found);
                found
            })
            .collect::<Vec<_>>()
    })?;
    Ok(LowWeightWords {
        weight: w,
        q,
        representatives: reps,
    })
}

fn extend(
    field: &ExtField,
    gen: &GeneratorMatrix,
    n: usize,
    w: usize,
    cols: &mut Vec<usize>,
    found: &mut Vec<(Vec<usize>, Vec<Elem>)>,
) {
    if cols.len() == w {
        for v in solve_support(field, gen, cols) {
            found.push((cols.clone(), v));
        }
        return;
    }
    let next = cols.last().map_or(0, |&c| c + 1);
    for c in next..=n - (w - cols.len()) {
        cols.push(c);
        extend(field, gen, n, w, cols, found);
        cols.pop();
    }
}
