//! Dense univariate polynomials over an [`ExtField`], q-cyclotomic cosets and
//! minimal polynomials of explicit elements.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{same_field, Elem, Embedding, ExtField, FieldElement, FieldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("polynomial division by zero")]
    DivisionByZero,
    #[error("multiplier {q} is not coprime to modulus {n}")]
    NotCoprime { q: u64, n: u64 },
    #[error("residue {h} is outside 0..{n}")]
    ResidueOutOfRange { h: u64, n: u64 },
    #[error("coefficient {0} of the conjugate product is not in the subfield")]
    NotOverSubfield(usize),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Coefficients low to high; the zero polynomial has no coefficients.
#[derive(Clone)]
pub struct Polynomial {
    field: Arc<ExtField>,
    coeffs: Vec<Elem>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_field(&self.field, &other.field)
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Polynomial {
    pub fn new(field: &Arc<ExtField>, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial {
            field: Arc::clone(field),
            coeffs,
        }
    }

    pub fn zero(field: &Arc<ExtField>) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn constant(field: &Arc<ExtField>, c: Elem) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: &Arc<ExtField>) -> Self {
        Self::constant(field, Elem::ONE)
    }

    /// c * x^k
    pub fn monomial(field: &Arc<ExtField>, c: Elem, k: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    /// x - a
    pub fn linear(field: &Arc<ExtField>, a: Elem) -> Self {
        Self::new(field, vec![field.neg(a), Elem::ONE])
    }

    /// x^n - lambda
    pub fn binomial(field: &Arc<ExtField>, n: usize, lambda: Elem) -> Self {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[0] = field.neg(lambda);
        coeffs[n] = Elem::ONE;
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(FieldError::Mismatch {
                left: self.field.descriptor(),
                right: other.field.descriptor(),
            }
            .into())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::new(f, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::new(f, coeffs))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::new(f, out))
    }

    pub fn scale(&self, c: Elem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Quotient and remainder with deg(rem) < deg(divisor).
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        self.check(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd]).expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = f.mul(rem[shift + dd], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[shift] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(self.field.inv(l).expect("nonzero")),
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// x^deg * p(1/x): the coefficient vector reversed.
    pub fn reciprocal(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(&self.field, c)
    }

    /// Pushes coefficients through an embedding into the larger field.
    pub fn embed(&self, emb: &Embedding) -> Result<Self, PolyError> {
        if !same_field(&self.field, emb.sub()) {
            return Err(FieldError::Mismatch {
                left: self.field.descriptor(),
                right: emb.sub().descriptor(),
            }
            .into());
        }
        Ok(Self::new(
            emb.sup(),
            self.coeffs.iter().map(|&c| emb.apply(c)).collect(),
        ))
    }

    /// Pulls coefficients back into the smaller field of an embedding.
    pub fn pull_back(&self, emb: &Embedding) -> Result<Self, PolyError> {
        if !same_field(&self.field, emb.sup()) {
            return Err(FieldError::Mismatch {
                left: self.field.descriptor(),
                right: emb.sup().descriptor(),
            }
            .into());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| emb.pull(c).ok_or(PolyError::NotOverSubfield(i)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(emb.sub(), coeffs))
    }

    fn coeff_text(&self, c: Elem) -> String {
        let coords = self.field.coords(c);
        if coords.len() == 1 {
            coords[0].to_string()
        } else {
            let parts: Vec<String> = coords.iter().map(|d| d.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }

    /// `[c0,c1,...]`, each coefficient a residue (prime fields) or its
    /// coordinate vector `[a0,...,a(m-1)]`.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|&c| self.coeff_text(c)).collect();
        format!("[{}]", parts.join(","))
    }

    pub fn from_text(field: &Arc<ExtField>, text: &str) -> Result<Self, PolyError> {
        let bad = || PolyError::Parse(text.to_string());
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let mut coeffs = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let (token, tail) = if let Some(r) = rest.strip_prefix('[') {
                let end = r.find(']').ok_or_else(bad)?;
                (&r[..end], &r[end + 1..])
            } else {
                match rest.find(',') {
                    Some(i) => (&rest[..i], &rest[i..]),
                    None => (rest, ""),
                }
            };
            let coords = token
                .split(',')
                .map(|d| d.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            coeffs.push(field.from_coords(&coords)?);
            rest = tail.trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        Ok(Self::new(field, coeffs))
    }
}

/// The orbit of a residue under multiplication by `multiplier` mod `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub modulus: u64,
    pub multiplier: u64,
    /// least element of the orbit
    pub rep: u64,
    /// sorted
    pub members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.members.binary_search(&(x % self.modulus)).is_ok()
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn cyclotomic_coset(h: u64, q: u64, n: u64) -> Result<CyclotomicCoset, PolyError> {
    if n == 0 || gcd(n, q % n) != 1 && n != 1 {
        return Err(PolyError::NotCoprime { q, n });
    }
    if h >= n {
        return Err(PolyError::ResidueOutOfRange { h, n });
    }
    let qm = (q % n) as u128;
    let mut members = BTreeSet::new();
    let mut x = h;
    loop {
        if !members.insert(x) {
            break;
        }
        x = ((x as u128 * qm) % n as u128) as u64;
    }
    let members: Vec<u64> = members.into_iter().collect();
    Ok(CyclotomicCoset {
        modulus: n,
        multiplier: q,
        rep: members[0],
        members,
    })
}

/// All cosets modulo `n`, ordered by representative.
pub fn all_cosets(q: u64, n: u64) -> Result<Vec<CyclotomicCoset>, PolyError> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for h in 0..n {
        if seen[h as usize] {
            continue;
        }
        let c = cyclotomic_coset(h, q, n)?;
        for &x in &c.members {
            seen[x as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// Minimal polynomial of `x` over the subfield image of `emb`, computed as
/// the product of (t - conjugate) over the Frobenius orbit of `x`.
/// The result lives over `emb.sub()`.
pub fn min_poly_via(x: Elem, emb: &Embedding) -> Result<Polynomial, PolyError> {
    let ext = emb.sup();
    let d = emb.sub().degree();
    let mut prod = Polynomial::one(ext);
    let mut conj = x;
    loop {
        prod = prod.mul(&Polynomial::linear(ext, conj))?;
        conj = ext.frobenius(conj, d);
        if conj == x {
            break;
        }
    }
    prod.pull_back(emb)
}

/// Minimal polynomial of `x` over `sub`, where `x` lives in an extension of `sub`.
pub fn min_poly(x: &FieldElement, sub: &Arc<ExtField>) -> Result<Polynomial, PolyError> {
    let emb = Embedding::new(sub, x.field())?;
    min_poly_via(x.value(), &emb)
}
