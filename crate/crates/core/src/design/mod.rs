//! Incidence structures built from codeword supports, and exact t-design checks.

mod report;
mod verify;

use thiserror::Error;

use crate::code::{
    supports_of_weight_in, CodeError, ConstacyclicCode, EnumOptions, Enumerable, TraceSource,
};

pub use report::{parse_blocks, write_blocks, DesignReport, DesignSource};
pub use verify::{
    complement_lambda, verify_design, verify_design_auto, verify_design_direct, DesignCheck,
    Verdict,
};

/// Counter increments C(k, t) b above which the complement is checked instead.
pub const DEFAULT_DESIGN_BUDGET: u128 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesignError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("point {point} is outside 0..{v}")]
    PointOutOfRange { point: usize, v: usize },
    #[error("blocks have different sizes")]
    NonUniform,
    #[error("no blocks")]
    Empty,
    #[error("strength {t} exceeds block size {k}")]
    StrengthTooLarge { t: usize, k: usize },
    #[error("strength must be positive")]
    ZeroStrength,
    #[error("derived strength {s} exceeds design strength {t}")]
    DerivedTooStrong { s: usize, t: usize },
    #[error("{0} counters are too many to hold")]
    TooManySubsets(u128),
    #[error("{0} is not an integer")]
    NotIntegral(String),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("block file line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A simple incidence structure on points 0..v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    v: usize,
    blocks: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    /// Sorts each block and the block list, dropping repeats.
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Self, DesignError> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        for b in &blocks {
            if let Some(&point) = b.iter().find(|&&x| x >= v) {
                return Err(DesignError::PointOutOfRange { point, v });
            }
        }
        blocks.sort_unstable();
        blocks.dedup();
        Ok(IncidenceStructure { v, blocks })
    }

    pub fn points(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The common block size, if all blocks share one.
    pub fn block_size(&self) -> Option<usize> {
        let k = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == k).then_some(k)
    }

    /// Same points, every block replaced by its complement.
    pub fn complement(&self) -> IncidenceStructure {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut inside = vec![false; self.v];
                for &x in b {
                    inside[x] = true;
                }
                (0..self.v).filter(|&x| !inside[x]).collect()
            })
            .collect();
        IncidenceStructure::new(self.v, blocks).expect("complements stay in range")
    }
}

pub fn complement_design(d: &IncidenceStructure) -> IncidenceStructure {
    d.complement()
}

/// Parameters of a t-(v, k, lambda) design with b blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DesignParams {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: u128,
    pub b: u128,
}

impl DesignParams {
    /// C(v, t) lambda = C(k, t) b
    pub fn counts_agree(&self) -> bool {
        match (binomial(self.v, self.t), binomial(self.k, self.t)) {
            (Some(x), Some(y)) => x.checked_mul(self.lambda) == y.checked_mul(self.b),
            _ => false,
        }
    }

    pub fn is_steiner(&self) -> bool {
        self.lambda == 1
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(acc)
}

fn exact_div(num: u128, den: u128, what: &str) -> Result<u128, DesignError> {
    if den == 0 || !num.is_multiple_of(den) {
        return Err(DesignError::NotIntegral(format!("{what} = {num}/{den}")));
    }
    Ok(num / den)
}

/// lambda_s = lambda_t C(v-s, t-s) / C(k-s, t-s) for 1 <= s <= t.
pub fn derived_lambda(params: &DesignParams, s: usize) -> Result<u128, DesignError> {
    if s == 0 {
        return Err(DesignError::ZeroStrength);
    }
    if s > params.t {
        return Err(DesignError::DerivedTooStrong { s, t: params.t });
    }
    let d = params.t - s;
    let num = binomial(params.v - s, d)
        .and_then(|c| c.checked_mul(params.lambda))
        .ok_or(DesignError::Overflow)?;
    let den = binomial(params.k - s, d).ok_or(DesignError::Overflow)?;
    exact_div(num, den, "lambda_s")
}

/// b = C(v, t) lambda / C(k, t)
pub fn block_count(t: usize, v: usize, k: usize, lambda: u128) -> Result<u128, DesignError> {
    let num = binomial(v, t)
        .and_then(|c| c.checked_mul(lambda))
        .ok_or(DesignError::Overflow)?;
    let den = binomial(k, t).ok_or(DesignError::Overflow)?;
    exact_div(num, den, "b")
}

/// Supports of a code's weight-w codewords, enumerated through its trace form.
pub fn supports_of_weight(
    code: &ConstacyclicCode,
    w: usize,
    opts: &EnumOptions,
) -> Result<IncidenceStructure, DesignError> {
    if code.dimension() == 0 {
        return IncidenceStructure::new(code.len(), Vec::new());
    }
    let src = TraceSource::new(code)?;
    supports_from(&src, w, opts)
}

/// Supports of the weight-w codewords of any enumerable code.
pub fn supports_from<E: Enumerable>(
    src: &E,
    w: usize,
    opts: &EnumOptions,
) -> Result<IncidenceStructure, DesignError> {
    let blocks = supports_of_weight_in(src, w, opts)?;
    IncidenceStructure::new(src.length(), blocks)
}
