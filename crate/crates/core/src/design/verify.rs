use rayon::prelude::*;

use super::{binomial, block_count, derived_lambda, DesignError, DesignParams, IncidenceStructure};
use crate::code::EnumOptions;

const BLOCK_CHUNK: usize = 256;
const MAX_COUNTERS: u128 = 1 << 28;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// every t-subset lies in exactly `lambda` blocks
    Design { lambda: u128 },
    /// t-subset multiplicities range over min..=max
    NotDesign { min: u64, max: u64 },
}

impl Verdict {
    pub fn lambda(&self) -> Option<u128> {
        match *self {
            Verdict::Design { lambda } => Some(lambda),
            Verdict::NotDesign { .. } => None,
        }
    }
}

/// Outcome of a design check, with the route that produced it. A failed
/// check through the complement reports the complement's multiplicities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DesignCheck {
    pub verdict: Verdict,
    pub params: Option<DesignParams>,
    pub via_complement: bool,
}

fn validate(d: &IncidenceStructure, t: usize) -> Result<usize, DesignError> {
    if t == 0 {
        return Err(DesignError::ZeroStrength);
    }
    if d.is_empty() {
        return Err(DesignError::Empty);
    }
    let k = d.block_size().ok_or(DesignError::NonUniform)?;
    if t > k {
        return Err(DesignError::StrengthTooLarge { t, k });
    }
    Ok(k)
}

/// Colex ranks: rank({c_0 < ... < c_{t-1}}) = sum C(c_i, i+1).
struct Ranker {
    t: usize,
    table: Vec<u64>,
}

impl Ranker {
    fn new(v: usize, t: usize) -> Self {
        let mut table = vec![0u64; v * (t + 1)];
        for x in 0..v {
            for j in 0..=t {
                table[x * (t + 1) + j] = binomial(x, j).expect("fits") as u64;
            }
        }
        Ranker { t, table }
    }

    fn rank(&self, subset: &[usize]) -> usize {
        subset
            .iter()
            .enumerate()
            .map(|(i, &c)| self.table[c * (self.t + 1) + i + 1])
            .sum::<u64>() as usize
    }

    /// Adds one to the counter of every t-subset of `block`.
    fn accumulate(&self, block: &[usize], counters: &mut [u64]) {
        let t = self.t;
        let k = block.len();
        let mut idx: Vec<usize> = (0..t).collect();
        let mut subset = vec![0usize; t];
        'next: loop {
            for (s, &i) in subset.iter_mut().zip(&idx) {
                *s = block[i];
            }
            counters[self.rank(&subset)] += 1;
            let mut i = t;
            while i > 0 {
                i -= 1;
                if idx[i] != i + k - t {
                    idx[i] += 1;
                    for j in i + 1..t {
                        idx[j] = idx[j - 1] + 1;
                    }
                    continue 'next;
                }
            }
            return;
        }
    }
}

/// Counts, for every t-subset, the blocks containing it.
pub fn verify_design_direct(
    d: &IncidenceStructure,
    t: usize,
    opts: &EnumOptions,
) -> Result<Verdict, DesignError> {
    validate(d, t)?;
    let total = binomial(d.points(), t).ok_or(DesignError::Overflow)?;
    if total > MAX_COUNTERS {
        return Err(DesignError::TooManySubsets(total));
    }
    let total = total as usize;
    let ranker = Ranker::new(d.points(), t);
    let counters = opts.run(|| {
        d.blocks()
            .par_chunks(BLOCK_CHUNK)
            .fold(
                || vec![0u64; total],
                |mut acc, chunk| {
                    for b in chunk {
                        ranker.accumulate(b, &mut acc);
                    }
                    acc
                },
            )
            .reduce(
                || vec![0u64; total],
                |mut x, y| {
                    for (a, b) in x.iter_mut().zip(y) {
                        *a += b;
                    }
                    x
                },
            )
    })?;
    let min = counters.iter().copied().min().unwrap_or(0);
    let max = counters.iter().copied().max().unwrap_or(0);
    Ok(if min == max {
        Verdict::Design { lambda: min as u128 }
    } else {
        Verdict::NotDesign { min, max }
    })
}

/// Direct check with the global thread pool.
pub fn verify_design(d: &IncidenceStructure, t: usize) -> Result<Verdict, DesignError> {
    verify_design_direct(d, t, &EnumOptions::default())
}

/// Lambda of a structure whose complement is the t-design `comp`, by
/// inclusion-exclusion over the subsets of a fixed t-set.
pub fn complement_lambda(comp: &DesignParams) -> Result<u128, DesignError> {
    let t = comp.t;
    let mut acc: i128 = 0;
    for i in 0..=t {
        let lam = if i == 0 {
            comp.b
        } else {
            derived_lambda(comp, i)?
        };
        let term = binomial(t, i)
            .and_then(|c| c.checked_mul(lam))
            .and_then(|x| i128::try_from(x).ok())
            .ok_or(DesignError::Overflow)?;
        acc = if i % 2 == 0 { acc + term } else { acc - term };
    }
    u128::try_from(acc).map_err(|_| DesignError::NotIntegral(format!("lambda = {acc}")))
}

fn cost(k: usize, t: usize, b: usize) -> u128 {
    binomial(k, t).unwrap_or(u128::MAX).saturating_mul(b as u128)
}

/// Direct check when C(k, t) b fits the budget, otherwise a check of the
/// complementary structure converted back through inclusion-exclusion.
pub fn verify_design_auto(
    d: &IncidenceStructure,
    t: usize,
    opts: &EnumOptions,
) -> Result<DesignCheck, DesignError> {
    let k = validate(d, t)?;
    let v = d.points();
    let direct = cost(k, t, d.len());
    let comp_k = v - k;
    let use_complement = direct > opts.budget && comp_k >= t && cost(comp_k, t, d.len()) < direct;
    let b = d.len() as u128;
    if !use_complement {
        let verdict = verify_design_direct(d, t, opts)?;
        let params = verdict.lambda().map(|lambda| DesignParams { t, v, k, lambda, b });
        return Ok(DesignCheck {
            verdict,
            params,
            via_complement: false,
        });
    }
    let comp = d.complement();
    let verdict = match verify_design_direct(&comp, t, opts)? {
        Verdict::Design { lambda } => {
            let cp = DesignParams {
                t,
                v,
                k: comp_k,
                lambda,
                b,
            };
            if !cp.counts_agree() {
                return Err(DesignError::NotIntegral(format!(
                    "complement block count {b} for lambda {lambda}"
                )));
            }
            Verdict::Design {
                lambda: complement_lambda(&cp)?,
            }
        }
        // a structure is a t-design exactly when its complement is
        other => other,
    };
    let params = verdict.lambda().map(|lambda| DesignParams { t, v, k, lambda, b });
    if let Some(p) = params {
        debug_assert_eq!(block_count(t, v, k, p.lambda).ok(), Some(b));
    }
    Ok(DesignCheck {
        verdict,
        params,
        via_complement: true,
    })
}
