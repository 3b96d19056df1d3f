//! Projective enumeration of codewords.
//!
//! A source hands out one message per scalar class, indexed 0..classes.
//! Fixed-size chunks of that index range are processed in parallel and
//! their per-weight counts summed, so results never depend on scheduling.

use std::sync::Arc;

use rayon::prelude::*;

use super::constacyclic::{trace_down, ConstacyclicCode};
use super::linalg::GeneratorMatrix;
use super::weights::WeightDistribution;
use super::CodeError;
use crate::field::{Elem, ExtField};

/// Default cap on coordinate evaluations (classes times length).
pub const DEFAULT_BUDGET: u128 = 1 << 32;

const CHUNK: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub budget: u128,
    /// None runs on the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget: DEFAULT_BUDGET,
            workers: None,
        }
    }
}

impl EnumOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub(crate) fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> Result<R, CodeError> {
        match self.workers {
            None => Ok(f()),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w.max(1))
                    .build()
                    .map_err(|e| CodeError::ThreadPool(e.to_string()))?;
                Ok(pool.install(f))
            }
        }
    }
}

/// A code whose projective classes can be listed by index.
pub trait Enumerable: Sync {
    fn alphabet(&self) -> &Arc<ExtField>;
    fn length(&self) -> usize;
    fn dim(&self) -> usize;
    /// (q^k - 1)/(q - 1)
    fn class_count(&self) -> u64;
    /// Calls `f` with one codeword of each class in `start..end`.
    fn visit(&self, start: u64, end: u64, f: &mut dyn FnMut(&[Elem]));
}

fn check_budget(src: &dyn Enumerable, opts: &EnumOptions) -> Result<(), CodeError> {
    let required = src.class_count() as u128 * src.length() as u128;
    if required > opts.budget {
        return Err(CodeError::BudgetExceeded {
            required,
            budget: opts.budget,
        });
    }
    Ok(())
}

fn chunks(total: u64) -> Vec<(u64, u64)> {
    (0..total.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(total)))
        .collect()
}

/// Weight distribution of any enumerable code.
pub fn weight_distribution_of<E: Enumerable>(
    src: &E,
    opts: &EnumOptions,
) -> Result<WeightDistribution, CodeError> {
    check_budget(src, opts)?;
    let n = src.length();
    let q = src.alphabet().order();
    let per_class = opts.run(|| {
        chunks(src.class_count())
            .into_par_iter()
            .map(|(a, b)| {
                let mut counts = vec![0u64; n + 1];
                src.visit(a, b, &mut |word| {
                    counts[word.iter().filter(|x| !x.is_zero()).count()] += 1;
                });
                counts
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut x, y| {
                    for (a, b) in x.iter_mut().zip(y) {
                        *a += b;
                    }
                    x
                },
            )
    })?;
    let mut counts: Vec<u128> = per_class
        .into_iter()
        .map(|c| c as u128 * (q as u128 - 1))
        .collect();
    counts[0] = 1;
    Ok(WeightDistribution::from_counts(n, src.dim(), q, counts))
}

/// Sorted, deduplicated supports of all weight-w codewords.
pub fn supports_of_weight_in<E: Enumerable>(
    src: &E,
    w: usize,
    opts: &EnumOptions,
) -> Result<Vec<Vec<usize>>, CodeError> {
    check_budget(src, opts)?;
    let mut blocks: Vec<Vec<usize>> = opts.run(|| {
        chunks(src.class_count())
            .into_par_iter()
            .flat_map_iter(|(a, b)| {
                let mut found = Vec::new();
                src.visit(a, b, &mut |word| {
                    if word.iter().filter(|x| !x.is_zero()).count() == w {
                        found.push(
                            word.iter()
                                .enumerate()
                                .filter(|(_, x)| !x.is_zero())
                                .map(|(i, _)| i)
                                .collect::<Vec<_>>(),
                        );
                    }
                });
                found
            })
            .collect()
    })?;
    blocks.sort_unstable();
    blocks.dedup();
    Ok(blocks)
}

pub fn weight_distribution(
    code: &ConstacyclicCode,
    opts: &EnumOptions,
) -> Result<WeightDistribution, CodeError> {
    if code.dimension() == 0 {
        return Ok(WeightDistribution::zero_code(code.len(), code.alphabet().order()));
    }
    let src = TraceSource::new(code)?;
    weight_distribution_of(&src, opts)
}

pub fn min_distance(code: &ConstacyclicCode, opts: &EnumOptions) -> Result<Option<usize>, CodeError> {
    Ok(weight_distribution(code, opts)?.min_distance())
}

/// A q-ary addition table for small alphabets; falls back to field arithmetic.
struct Adder {
    field: Arc<ExtField>,
    table: Option<Vec<u32>>,
    q: usize,
}

impl Adder {
    fn new(field: &Arc<ExtField>) -> Self {
        let q = field.order() as usize;
        let table = (q <= 1 << 11).then(|| {
            let mut t = vec![0u32; q * q];
            for a in 0..q {
                for b in 0..q {
                    t[a * q + b] = field.add(Elem(a as u32), Elem(b as u32)).0;
                }
            }
            t
        });
        Adder {
            field: Arc::clone(field),
            table,
            q,
        }
    }

    #[inline]
    fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => Elem(t[a.0 as usize * self.q + b.0 as usize]),
            None => self.field.add(a, b),
        }
    }
}

/// One message component a_j of the trace representation.
struct Component {
    /// |GF(Q^{m_j})*|
    group: u64,
    /// (Q^{m_j} - 1)/(Q - 1): exponents of normalized leading components
    lead_range: u64,
    /// the exponent of a_j gamma^{-t i_j} drops by `step` as t grows
    step: u64,
    /// trace[u] = Tr(w_j^u) in the alphabet, w_j generating GF(Q^{m_j})*
    trace: Vec<Elem>,
}

/// Projective classes of the trace representation. The class of
/// (0, .., 0, a_j0, a_j0+1, ..) is represented with log a_j0 below the
/// lead range, which picks exactly one element per coset of GF(Q)*.
pub(crate) struct TraceSource {
    alphabet: Arc<ExtField>,
    n: usize,
    k: usize,
    comps: Vec<Component>,
    adder: Adder,
    /// classes whose first nonzero component is j, for each j
    block_sizes: Vec<u64>,
}

impl TraceSource {
    pub(crate) fn new(code: &ConstacyclicCode) -> Result<Self, CodeError> {
        let e = code.extension();
        let a = code.alphabet();
        let emb = code.embedding();
        let big = e.group_order();
        let q = a.order();
        let da = a.degree();
        let log_gamma = e.log(code.gamma().value()).ok_or(CodeError::ExtensionUntabulated)? as u64;
        let mut comps = Vec::new();
        for (j, coset) in code.nonzeros().iter().enumerate() {
            let mj = coset.size() as u32;
            let group = q.pow(mj) - 1;
            let cof = big / group;
            let gen_log = (code.nonzero_exponents()[j] * log_gamma) % big;
            if !gen_log.is_multiple_of(cof) {
                return Err(CodeError::BadComponent(j));
            }
            let step = (gen_log / cof) % group;
            let trace = (0..group)
                .map(|u| {
                    let x = e.exp(cof * u);
                    emb.pull(trace_down(e, x, da, mj)).expect("trace lands in the alphabet")
                })
                .collect();
            comps.push(Component {
                group,
                lead_range: group / (q - 1),
                step,
                trace,
            });
        }
        let s = comps.len();
        let block_sizes = (0..s)
            .map(|j0| {
                comps[j0].lead_range * comps[j0 + 1..].iter().map(|c| c.group + 1).product::<u64>()
            })
            .collect();
        Ok(TraceSource {
            alphabet: Arc::clone(a),
            n: code.len(),
            k: code.dimension(),
            comps,
            adder: Adder::new(a),
            block_sizes,
        })
    }

    /// Component exponents for class `idx`; None marks a zero component.
    fn decode(&self, mut idx: u64, out: &mut [Option<u64>]) {
        for (j0, &size) in self.block_sizes.iter().enumerate() {
            if idx >= size {
                idx -= size;
                out[j0] = None;
                continue;
            }
            for j in (j0 + 1..self.comps.len()).rev() {
                let radix = self.comps[j].group + 1;
                let d = idx % radix;
                idx /= radix;
                out[j] = if d == 0 { None } else { Some(d - 1) };
            }
            out[j0] = Some(idx);
            return;
        }
        unreachable!("class index out of range");
    }
}

impl Enumerable for TraceSource {
    fn alphabet(&self) -> &Arc<ExtField> {
        &self.alphabet
    }

    fn length(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        self.k
    }

    fn class_count(&self) -> u64 {
        self.block_sizes.iter().sum()
    }

    fn visit(&self, start: u64, end: u64, f: &mut dyn FnMut(&[Elem])) {
        let s = self.comps.len();
        let mut exps = vec![None; s];
        let mut cur = vec![0u64; s];
        let mut word = vec![Elem::ZERO; self.n];
        for idx in start..end {
            self.decode(idx, &mut exps);
            for j in 0..s {
                cur[j] = exps[j].unwrap_or(0);
            }
            for w in word.iter_mut() {
                let mut acc = Elem::ZERO;
                for (j, c) in self.comps.iter().enumerate() {
                    if exps[j].is_some() {
                        acc = self.adder.add(acc, c.trace[cur[j] as usize]);
                        cur[j] = if cur[j] >= c.step {
                            cur[j] - c.step
                        } else {
                            cur[j] + c.group - c.step
                        };
                    }
                }
                *w = acc;
            }
            f(&word);
        }
    }
}

/// A linear code given by a generator matrix, enumerated by messages whose
/// first nonzero entry is 1.
pub struct MatrixCode {
    gen: GeneratorMatrix,
    block_sizes: Vec<u64>,
}

impl MatrixCode {
    pub fn new(gen: GeneratorMatrix) -> Self {
        let k = gen.k();
        let q = gen.field().order();
        let block_sizes = (0..k).map(|i| q.pow((k - 1 - i) as u32)).collect();
        MatrixCode { gen, block_sizes }
    }

    pub fn generator(&self) -> &GeneratorMatrix {
        &self.gen
    }

    pub fn weight_distribution(&self, opts: &EnumOptions) -> Result<WeightDistribution, CodeError> {
        if self.gen.k() == 0 {
            return Ok(WeightDistribution::zero_code(
                self.gen.len(),
                self.gen.field().order(),
            ));
        }
        weight_distribution_of(self, opts)
    }
}

impl Enumerable for MatrixCode {
    fn alphabet(&self) -> &Arc<ExtField> {
        self.gen.field()
    }

    fn length(&self) -> usize {
        self.gen.len()
    }

    fn dim(&self) -> usize {
        self.gen.k()
    }

    fn class_count(&self) -> u64 {
        self.block_sizes.iter().sum()
    }

    fn visit(&self, start: u64, end: u64, f: &mut dyn FnMut(&[Elem])) {
        let field = self.gen.field();
        let q = field.order();
        let k = self.gen.k();
        let n = self.gen.len();
        let rows = self.gen.rows();
        let mut word = vec![Elem::ZERO; n];
        for idx in start..end {
            let mut rest = idx;
            let mut lead = 0;
            while rest >= self.block_sizes[lead] {
                rest -= self.block_sizes[lead];
                lead += 1;
            }
            word.copy_from_slice(&rows[lead]);
            for i in (lead + 1..k).rev() {
                let c = Elem((rest % q) as u32);
                rest /= q;
                if c.is_zero() {
                    continue;
                }
                for (w, &x) in word.iter_mut().zip(&rows[i]) {
                    *w = field.add(*w, field.mul(c, x));
                }
            }
            f(&word);
        }
    }
}
