use std::sync::Arc;

use super::descriptor::FamilyTag;
use super::linalg::GeneratorMatrix;
use super::CodeError;
use crate::field::{Elem, Embedding, ExtField, FieldElement};
use crate::poly::{cyclotomic_coset, min_poly_via, CyclotomicCoset, Polynomial};

/// A lambda-constacyclic code of length n over the alphabet field, together
/// with its nonzeros gamma^i (roots of the check polynomial) inside an
/// extension field.
#[derive(Clone, Debug)]
pub struct ConstacyclicCode {
    pub(crate) alphabet: Arc<ExtField>,
    pub(crate) ext: Arc<ExtField>,
    pub(crate) emb: Embedding,
    pub(crate) n: usize,
    pub(crate) lambda: Elem,
    pub(crate) shift_order: u64,
    pub(crate) gamma: Elem,
    pub(crate) nonzeros: Vec<CyclotomicCoset>,
    /// one exponent per coset, as given
    pub(crate) exponents: Vec<u64>,
    pub(crate) check: Polynomial,
    pub(crate) gen: Polynomial,
    pub(crate) tag: Option<FamilyTag>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Builds the code whose check polynomial is the product of the minimal
/// polynomials of gamma^e over the alphabet, e ranging over `exps`.
pub fn code_from_nonzeros(
    alphabet: &Arc<ExtField>,
    n: usize,
    lambda: Elem,
    gamma: &FieldElement,
    exps: &[u64],
) -> Result<ConstacyclicCode, CodeError> {
    let ext = gamma.field();
    let emb = Embedding::new(alphabet, ext)?;
    let q = alphabet.order();
    if n == 0 || gcd(n as u64, q) != 1 {
        return Err(CodeError::LengthNotCoprime { n, q });
    }
    let r = alphabet
        .multiplicative_order(lambda)
        .ok_or(CodeError::RootMismatch)?;
    let order = r * n as u64;
    let actual = gamma.multiplicative_order().unwrap_or(0);
    if actual != order {
        return Err(CodeError::WrongRootOrder {
            expected: order,
            actual,
        });
    }
    if ext.pow(gamma.value(), n as u64) != emb.apply(lambda) {
        return Err(CodeError::RootMismatch);
    }

    let mut nonzeros: Vec<CyclotomicCoset> = Vec::with_capacity(exps.len());
    let mut exponents = Vec::with_capacity(exps.len());
    for &e in exps {
        let e = e % order;
        exponents.push(e);
        if e % r != 1 % r {
            return Err(CodeError::NotARoot(e));
        }
        let coset = cyclotomic_coset(e, q, order)?;
        if let Some(other) = nonzeros.iter().find(|c| c.contains(e)) {
            return Err(CodeError::ConjugateExponents(other.rep, e));
        }
        nonzeros.push(coset);
    }

    let mut check = Polynomial::one(alphabet);
    for c in &nonzeros {
        let root = ext.pow(gamma.value(), c.rep);
        check = check.mul(&min_poly_via(root, &emb)?)?;
    }
    let binomial = Polynomial::binomial(alphabet, n, lambda);
    let (gen, rem) = binomial.divmod(&check)?;
    if !rem.is_zero() {
        return Err(CodeError::NotDividing);
    }
    Ok(ConstacyclicCode {
        alphabet: Arc::clone(alphabet),
        ext: Arc::clone(ext),
        emb,
        n,
        lambda,
        shift_order: r,
        gamma: gamma.value(),
        nonzeros,
        exponents,
        check,
        gen,
        tag: None,
    })
}

impl ConstacyclicCode {
    pub fn alphabet(&self) -> &Arc<ExtField> {
        &self.alphabet
    }

    /// The field holding gamma and the message components.
    pub fn extension(&self) -> &Arc<ExtField> {
        &self.ext
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.check.degree().unwrap_or(0)
    }

    pub fn lambda(&self) -> Elem {
        self.lambda
    }

    /// ord(lambda).
    pub fn shift_order(&self) -> u64 {
        self.shift_order
    }

    pub fn gamma(&self) -> FieldElement {
        FieldElement::new(&self.ext, self.gamma)
    }

    pub fn nonzeros(&self) -> &[CyclotomicCoset] {
        &self.nonzeros
    }

    /// One exponent per nonzero coset, as passed to the constructor.
    pub fn nonzero_exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn check_poly(&self) -> &Polynomial {
        &self.check
    }

    pub fn gen_poly(&self) -> &Polynomial {
        &self.gen
    }

    pub fn tag(&self) -> Option<&FamilyTag> {
        self.tag.as_ref()
    }

    pub fn with_tag(mut self, tag: FamilyTag) -> Self {
        self.tag = Some(tag);
        self
    }

    /// Rows x^i g(x), 0 <= i < k.
    pub fn generator_matrix(&self) -> GeneratorMatrix {
        let k = self.dimension();
        let rows = (0..k)
            .map(|i| {
                let mut row = vec![Elem::ZERO; self.n];
                for (j, &c) in self.gen.coeffs().iter().enumerate() {
                    row[i + j] = c;
                }
                row
            })
            .collect();
        GeneratorMatrix::from_rows(&self.alphabet, self.n, rows).expect("rows have length n")
    }

    /// Whether c(x) is a multiple of g(x).
    pub fn contains(&self, word: &[Elem]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let c = Polynomial::new(&self.alphabet, word.to_vec());
        c.divmod(&self.gen).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// (c_0, ..., c_{n-1}) -> (lambda c_{n-1}, c_0, ..., c_{n-2}).
    pub fn shift(&self, word: &[Elem]) -> Vec<Elem> {
        let mut out = Vec::with_capacity(word.len());
        if let Some(&last) = word.last() {
            out.push(self.alphabet.mul(self.lambda, last));
            out.extend_from_slice(&word[..word.len() - 1]);
        }
        out
    }

    /// Every exponent i (mod r n) with gamma^i a root of the check polynomial.
    pub fn nonzero_closure(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self.nonzeros.iter().flat_map(|c| c.members.clone()).collect();
        all.sort_unstable();
        all
    }

    /// Degree over the alphabet of the field holding message component j.
    pub fn component_degree(&self, j: usize) -> usize {
        self.nonzeros[j].size()
    }
}

/// The dual code, a lambda^{-1}-constacyclic code generated by the reciprocal
/// of the check polynomial scaled by h_0^{-1}. Its root is gamma^{-1}: the
/// dual's nonzeros are the exponents i = 1 mod r outside the closure of the
/// code's nonzeros.
pub fn dual_code(code: &ConstacyclicCode) -> Result<ConstacyclicCode, CodeError> {
    let a = &code.alphabet;
    let e = &code.ext;
    let order = code.shift_order * code.n as u64;
    let closure = code.nonzero_closure();
    let q = a.order();
    let mut reps = Vec::new();
    let mut seen = vec![false; order as usize];
    for &i in &closure {
        seen[i as usize] = true;
    }
    let r = code.shift_order;
    for i in (0..order).filter(|i| i % r == 1 % r) {
        if seen[i as usize] {
            continue;
        }
        let c = cyclotomic_coset(i, q, order)?;
        for &x in &c.members {
            seen[x as usize] = true;
        }
        reps.push(i);
    }
    let lambda_inv = a.inv(code.lambda).expect("lambda is nonzero");
    let gamma_inv = FieldElement::new(e, e.inv(code.gamma).expect("gamma is nonzero"));
    let dual = code_from_nonzeros(a, code.n, lambda_inv, &gamma_inv, &reps)?;

    // cross-check against h0^{-1} x^k h(1/x)
    let h0_inv = a.inv(code.check.coeff(0)).expect("h(0) is nonzero");
    let hhat = code.check.reciprocal().scale(h0_inv);
    if hhat != dual.gen {
        return Err(CodeError::ReferenceMismatch(
            "reciprocal check polynomial differs from the dual generator".into(),
        ));
    }
    Ok(dual)
}

/// t-th coordinate sum_j Tr_{Q^{m_j}/Q}(a_j gamma^{-t i_j}), with each a_j
/// given as an element of the extension field lying in its component field.
pub fn trace_codeword(msg: &[Elem], code: &ConstacyclicCode) -> Result<Vec<Elem>, CodeError> {
    let s = code.nonzeros.len();
    if msg.len() != s {
        return Err(CodeError::LengthMismatch {
            expected: s,
            got: msg.len(),
        });
    }
    let e = &code.ext;
    let da = code.alphabet.degree();
    for (j, &a) in msg.iter().enumerate() {
        let deg = da * code.nonzeros[j].size() as u32;
        if !e.in_subfield(a, deg) {
            return Err(CodeError::BadComponent(j));
        }
    }
    let gamma_inv = e.inv(code.gamma).expect("gamma is nonzero");
    let mut out = Vec::with_capacity(code.n);
    for t in 0..code.n as u64 {
        let mut acc = Elem::ZERO;
        for (j, &a) in msg.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let i_j = code.exponents[j];
            let x = e.mul(a, e.pow(gamma_inv, t * i_j));
            let tr = trace_down(e, x, da, code.nonzeros[j].size() as u32);
            acc = e.add(acc, tr);
        }
        out.push(code.emb.pull(acc).expect("trace lands in the alphabet"));
    }
    Ok(out)
}

/// Tr from the subfield of degree `base * steps` to the subfield of degree `base`.
pub(crate) fn trace_down(e: &ExtField, x: Elem, base: u32, steps: u32) -> Elem {
    let mut acc = Elem::ZERO;
    let mut conj = x;
    for _ in 0..steps {
        acc = e.add(acc, conj);
        conj = e.frobenius(conj, base);
    }
    acc
}
