//! Finite fields GF(p^m).
//!
//! An element is stored as the integer whose base-p digits are its
//! coordinates over GF(p) in the polynomial basis 1, x, ..., x^(m-1) (constant
//! coordinate least significant). Fields below a configurable size carry
//! log/antilog and Zech tables; larger ones fall back to coordinate arithmetic.
//!
//! Fields are built deterministically: the defining polynomial is the first
//! monic primitive polynomial of degree m when coefficient vectors are ordered
//! with the constant term varying fastest, and the fixed primitive element is
//! the class of x.

mod embed;
mod prime_poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

pub use embed::{tower_embed, Embedding, Tower};

/// Fields up to this many elements get log/antilog tables.
pub const DEFAULT_TABLE_THRESHOLD: u64 = 1 << 20;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("characteristic 2 is only supported for m in {{1, 2, 4, 8}} (got m = {0})")]
    UnsupportedBinaryDegree(u32),
    #[error("GF({p}^{m}) does not fit the 32-bit element encoding")]
    TooLarge { p: u64, m: u32 },
    #[error("no primitive polynomial of degree {m} over GF({p}) was found")]
    NoPrimitivePolynomial { p: u64, m: u32 },
    #[error("elements belong to different fields ({left} vs {right})")]
    Mismatch { left: String, right: String },
    #[error("{sub} is not a subfield of {sup}")]
    NotASubfield { sub: String, sup: String },
    #[error("degree {b} does not divide degree {a}")]
    DegreeNotDividing { a: u32, b: u32 },
    #[error("{n} does not divide the multiplicative group order {group}")]
    OrderNotDividing { n: u64, group: u64 },
    #[error("base {0} must be odd and at least 3")]
    EvenBase(u64),
    #[error("argument must be positive")]
    ZeroArgument,
    #[error("division by zero")]
    DivisionByZero,
    #[error("coordinate {0} is not a residue mod p")]
    BadCoordinate(u32),
    #[error("integer overflow")]
    Overflow,
    #[error("cannot parse field descriptor: {0}")]
    Parse(String),
}

/// A field element by its coordinate index. Only meaningful with its field.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    /// exp[i] = primitive^i, stored twice over so sums of two logs need no reduction
    exp: Vec<u32>,
    log: Vec<u32>,
    /// zech[d] = log(1 + primitive^d), NONE when that sum is zero
    zech: Vec<u32>,
    neg: Vec<u32>,
}

/// The finite field GF(p^m) with a fixed defining polynomial and primitive element.
pub struct ExtField {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    primitive: Elem,
    group_factors: Vec<u64>,
    tables: Option<Tables>,
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtField({})", self.descriptor())
    }
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for ExtField {}

/// Builds GF(p^m) with table acceleration below [`DEFAULT_TABLE_THRESHOLD`].
pub fn build_field(p: u64, m: u32) -> Result<Arc<ExtField>, FieldError> {
    build_field_with_threshold(p, m, DEFAULT_TABLE_THRESHOLD)
}

pub fn build_field_with_threshold(
    p: u64,
    m: u32,
    table_threshold: u64,
) -> Result<Arc<ExtField>, FieldError> {
    if !prime_poly::is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if m == 0 {
        return Err(FieldError::ZeroDegree);
    }
    if p == 2 && ![1, 2, 4, 8].contains(&m) {
        return Err(FieldError::UnsupportedBinaryDegree(m));
    }
    let order = p
        .checked_pow(m)
        .filter(|&o| o < u32::MAX as u64)
        .ok_or(FieldError::TooLarge { p, m })?;
    let group = order - 1;
    let group_factors = prime_poly::prime_factors(group);

    // scan lower coefficient vectors in index order (constant term fastest)
    let lower_count = order;
    let mut modulus = None;
    for idx in 0..lower_count {
        let mut f = digits_of(idx, p, m);
        if f[0] == 0 {
            continue;
        }
        f.push(1);
        if !prime_poly::is_irreducible(&f, p) {
            continue;
        }
        if prime_poly::x_has_order(&f, p, group, &group_factors) {
            modulus = Some(f);
            break;
        }
    }
    let modulus: Vec<u32> = modulus
        .ok_or(FieldError::NoPrimitivePolynomial { p, m })?
        .into_iter()
        .map(|c| c as u32)
        .collect();

    // class of x: for m = 1 it is the residue -c0
    let primitive = if m == 1 {
        Elem(((p - modulus[0] as u64) % p) as u32)
    } else {
        Elem(p as u32)
    };

    let mut field = ExtField {
        p: p as u32,
        m,
        order: order as u32,
        modulus,
        primitive,
        group_factors,
        tables: None,
    };
    if order <= table_threshold {
        field.tables = Some(field.build_tables());
    }
    Ok(Arc::new(field))
}

fn digits_of(mut idx: u64, p: u64, m: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(idx % p);
        idx /= p;
    }
    out
}

impl ExtField {
    fn build_tables(&self) -> Tables {
        let n = (self.order - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![NONE; self.order as usize];
        let mut cur = Elem::ONE;
        for i in 0..n {
            exp[i] = cur.0;
            exp[i + n] = cur.0;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_by_x(cur);
        }
        debug_assert_eq!(cur, Elem::ONE);
        let p = self.p;
        let mut zech = vec![NONE; n];
        for (d, z) in zech.iter_mut().enumerate() {
            let x = exp[d];
            let plus_one = if x % p == p - 1 { x - (p - 1) } else { x + 1 };
            if plus_one != 0 {
                *z = log[plus_one as usize];
            }
        }
        let neg = (0..self.order).map(|x| self.neg_slow(Elem(x)).0).collect();
        Tables {
            exp,
            log,
            zech,
            neg,
        }
    }

    /// Multiplies by the class of x using the defining polynomial.
    fn mul_by_x(&self, a: Elem) -> Elem {
        let p = self.p as u64;
        let c = self.coords(a);
        let top = c[self.m as usize - 1] as u64;
        let mut out = vec![0u32; self.m as usize];
        for i in 0..self.m as usize {
            let below = if i == 0 { 0 } else { c[i - 1] as u64 };
            let reduce = top * self.modulus[i] as u64 % p;
            out[i] = ((below + p - reduce) % p) as u32;
        }
        self.from_coords_unchecked(&out)
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Number of elements, p^m.
    pub fn order(&self) -> u64 {
        self.order as u64
    }

    /// Order of the multiplicative group, p^m - 1.
    pub fn group_order(&self) -> u64 {
        self.order as u64 - 1
    }

    /// Defining polynomial, low to high, monic of degree m.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> Elem {
        self.primitive
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// Text form `p=3 m=4 modulus=[c0,...,cm]`.
    pub fn descriptor(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
        format!("p={} m={} modulus=[{}]", self.p, self.m, coeffs.join(","))
    }

    /// Rebuilds a field from its descriptor and checks the stored modulus matches.
    pub fn from_descriptor(text: &str) -> Result<Arc<ExtField>, FieldError> {
        let bad = || FieldError::Parse(text.to_string());
        let mut p = None;
        let mut m = None;
        let mut modulus = None;
        for part in text.split_whitespace() {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            match key {
                "p" => p = Some(value.parse::<u64>().map_err(|_| bad())?),
                "m" => m = Some(value.parse::<u32>().map_err(|_| bad())?),
                "modulus" => {
                    let inner = value
                        .strip_prefix('[')
                        .and_then(|v| v.strip_suffix(']'))
                        .ok_or_else(bad)?;
                    let coeffs: Result<Vec<u32>, _> =
                        inner.split(',').map(|c| c.trim().parse::<u32>()).collect();
                    modulus = Some(coeffs.map_err(|_| bad())?);
                }
                _ => return Err(bad()),
            }
        }
        let field = build_field(p.ok_or_else(bad)?, m.ok_or_else(bad)?)?;
        if let Some(modulus) = modulus {
            if modulus != field.modulus {
                return Err(FieldError::Parse(format!(
                    "{text}: modulus differs from the canonical {}",
                    field.descriptor()
                )));
            }
        }
        Ok(field)
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> Elem {
        Elem(k.rem_euclid(self.p as i64) as u32)
    }

    /// Coordinates over GF(p), constant term first.
    pub fn coords(&self, a: Elem) -> Vec<u32> {
        let mut x = a.0;
        (0..self.m)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<Elem, FieldError> {
        if coords.len() != self.m as usize {
            return Err(FieldError::Parse(format!(
                "expected {} coordinates, got {}",
                self.m,
                coords.len()
            )));
        }
        if let Some(&bad) = coords.iter().find(|&&c| c >= self.p) {
            return Err(FieldError::BadCoordinate(bad));
        }
        Ok(self.from_coords_unchecked(coords))
    }

    fn from_coords_unchecked(&self, coords: &[u32]) -> Elem {
        Elem(coords.iter().rev().fold(0u32, |acc, &c| acc * self.p + c))
    }

    /// Iterates over all elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(Elem)
    }

    /// Whether `a` lies in the prime subfield GF(p).
    pub fn is_prime_subfield(&self, a: Elem) -> bool {
        a.0 < self.p
    }

    fn neg_slow(&self, a: Elem) -> Elem {
        let c: Vec<u32> = self
            .coords(a)
            .into_iter()
            .map(|d| (self.p - d) % self.p)
            .collect();
        self.from_coords_unchecked(&c)
    }

    fn add_slow(&self, a: Elem, b: Elem) -> Elem {
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * place;
            place = place.wrapping_mul(self.p);
            x /= self.p;
            y /= self.p;
        }
        Elem(out)
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p as u64;
        let f: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        let mut x: Vec<u64> = self.coords(a).into_iter().map(u64::from).collect();
        let mut y: Vec<u64> = self.coords(b).into_iter().map(u64::from).collect();
        prime_poly::trim(&mut x);
        prime_poly::trim(&mut y);
        let mut r = prime_poly::mul_mod(&x, &y, &f, p);
        r.resize(self.m as usize, 0);
        let r: Vec<u32> = r.into_iter().map(|c| c as u32).collect();
        self.from_coords_unchecked(&r)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => {
                if a.0 == 0 {
                    return b;
                }
                if b.0 == 0 {
                    return a;
                }
                let n = self.order - 1;
                let la = t.log[a.0 as usize];
                let lb = t.log[b.0 as usize];
                let d = if lb >= la { lb - la } else { lb + n - la };
                let z = t.zech[d as usize];
                if z == NONE {
                    Elem::ZERO
                } else {
                    Elem(t.exp[(la + z) as usize])
                }
            }
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.neg[a.0 as usize]),
            None => self.neg_slow(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_slow(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            return None;
        }
        Some(match &self.tables {
            Some(t) => {
                let n = self.order - 1;
                let l = t.log[a.0 as usize];
                Elem(t.exp[((n - l) % n) as usize])
            }
            None => self.pow(a, self.group_order() - 1),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let n = self.group_order();
                let l = t.log[a.0 as usize] as u64;
                Elem(t.exp[((l * (e % n)) % n) as usize])
            }
            None => {
                let mut result = Elem::ONE;
                let mut base = a;
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        result = self.mul_slow(result, base);
                    }
                    base = self.mul_slow(base, base);
                    e >>= 1;
                }
                result
            }
        }
    }

    /// Power with a signed exponent; zero maps to zero for any exponent.
    pub fn pow_signed(&self, a: Elem, e: i64) -> Elem {
        let n = self.group_order() as i64;
        self.pow(a, e.rem_euclid(n) as u64)
    }

    /// primitive^e.
    pub fn exp(&self, e: u64) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.exp[(e % self.group_order()) as usize]),
            None => self.pow(self.primitive, e),
        }
    }

    /// Discrete log to the fixed primitive element (table fields only).
    pub fn log(&self, a: Elem) -> Option<u32> {
        let t = self.tables.as_ref()?;
        if a.is_zero() {
            None
        } else {
            Some(t.log[a.0 as usize])
        }
    }

    /// x -> x^(p^k).
    pub fn frobenius(&self, a: Elem, k: u32) -> Elem {
        let mut x = a;
        for _ in 0..k % self.m {
            x = self.pow(x, self.p as u64);
        }
        x
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut ord = self.group_order();
        for &r in &self.group_factors {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == Elem::ONE {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// Whether `a` lies in the subfield of absolute degree `d` (d | m).
    pub fn in_subfield(&self, a: Elem, d: u32) -> bool {
        self.frobenius(a, d) == a
    }

    /// Relative trace to the subfield of absolute degree `d`:
    /// the sum of a^(p^(d i)) for 0 <= i < m/d.
    pub fn trace_to(&self, a: Elem, d: u32) -> Result<Elem, FieldError> {
        if d == 0 || !self.m.is_multiple_of(d) {
            return Err(FieldError::DegreeNotDividing { a: self.m, b: d });
        }
        let mut acc = Elem::ZERO;
        let mut conj = a;
        for _ in 0..self.m / d {
            acc = self.add(acc, conj);
            conj = self.frobenius(conj, d);
        }
        Ok(acc)
    }
}

/// An element together with the field it lives in.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<ExtField>,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in GF({}^{})", self.coords(), self.field.p, self.field.m)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && same_field(&self.field, &other.field)
    }
}

impl Eq for FieldElement {}

pub(crate) fn same_field(a: &Arc<ExtField>, b: &Arc<ExtField>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn mismatch(a: &ExtField, b: &ExtField) -> FieldError {
    FieldError::Mismatch {
        left: a.descriptor(),
        right: b.descriptor(),
    }
}

impl FieldElement {
    pub fn new(field: &Arc<ExtField>, value: Elem) -> Self {
        debug_assert!(value.0 < field.order);
        FieldElement {
            field: Arc::clone(field),
            value,
        }
    }

    pub fn zero(field: &Arc<ExtField>) -> Self {
        Self::new(field, Elem::ZERO)
    }

    pub fn one(field: &Arc<ExtField>) -> Self {
        Self::new(field, Elem::ONE)
    }

    pub fn primitive(field: &Arc<ExtField>) -> Self {
        Self::new(field, field.primitive())
    }

    pub fn from_coords(field: &Arc<ExtField>, coords: &[u32]) -> Result<Self, FieldError> {
        Ok(Self::new(field, field.from_coords(coords)?))
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn coords(&self) -> Vec<u32> {
        self.field.coords(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(mismatch(&self.field, &other.field))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(Self::new(&self.field, self.field.add(self.value, other.value)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(Self::new(&self.field, self.field.sub(self.value, other.value)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(Self::new(&self.field, self.field.mul(self.value, other.value)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        let q = self
            .field
            .div(self.value, other.value)
            .ok_or(FieldError::DivisionByZero)?;
        Ok(Self::new(&self.field, q))
    }

    pub fn inv(&self) -> Option<Self> {
        self.field.inv(self.value).map(|v| Self::new(&self.field, v))
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::new(&self.field, self.field.pow(self.value, e))
    }

    pub fn frobenius(&self, k: u32) -> Self {
        Self::new(&self.field, self.field.frobenius(self.value, k))
    }

    pub fn multiplicative_order(&self) -> Option<u64> {
        self.field.multiplicative_order(self.value)
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &FieldElement {
            type Output = FieldElement;
            /// Panics when the operands live in different fields.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("cross-field arithmetic")
            }
        }
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(&self.field, self.field.neg(self.value))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Trace from GF(q^a) down to GF(q^b), where q = p^`q_degree` and `x` lives
/// in the degree-a field. The result is returned inside the same field.
pub fn rel_trace(
    x: &FieldElement,
    q_degree: u32,
    a: u32,
    b: u32,
) -> Result<FieldElement, FieldError> {
    if b == 0 || !a.is_multiple_of(b) {
        return Err(FieldError::DegreeNotDividing { a, b });
    }
    if x.field.degree() != q_degree * a {
        return Err(FieldError::DegreeNotDividing {
            a: x.field.degree(),
            b: q_degree * a,
        });
    }
    let t = x.field.trace_to(x.value, q_degree * b)?;
    Ok(FieldElement::new(&x.field, t))
}

/// primitive^((p^m - 1)/N), an element of exact multiplicative order N.
pub fn unity_root(field: &Arc<ExtField>, n: u64) -> Result<FieldElement, FieldError> {
    let group = field.group_order();
    if n == 0 || !group.is_multiple_of(n) {
        return Err(FieldError::OrderNotDividing { n, group });
    }
    Ok(FieldElement::new(field, field.exp(group / n)))
}

/// All N-th roots of unity, as successive powers of [`unity_root`].
pub fn unity_set(field: &Arc<ExtField>, n: u64) -> Result<Vec<FieldElement>, FieldError> {
    let root = unity_root(field, n)?;
    let mut out = Vec::with_capacity(n as usize);
    let mut cur = Elem::ONE;
    for _ in 0..n {
        out.push(FieldElement::new(field, cur));
        cur = field.mul(cur, root.value);
    }
    Ok(out)
}

/// 2-adic valuation.
pub fn v2(n: u64) -> Result<u32, FieldError> {
    if n == 0 {
        return Err(FieldError::ZeroArgument);
    }
    Ok(n.trailing_zeros())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Closed form for gcd(a^u + 1, a^v - 1) (`Sign::Minus`) or
/// gcd(a^u + 1, a^v + 1) (`Sign::Plus`) with a odd.
pub fn gcd_pm(a: u64, u: u32, v: u32, sign: Sign) -> Result<u128, FieldError> {
    if a < 3 || a.is_multiple_of(2) {
        return Err(FieldError::EvenBase(a));
    }
    if u == 0 || v == 0 {
        return Err(FieldError::ZeroArgument);
    }
    let (vu, vv) = (u.trailing_zeros(), v.trailing_zeros());
    let big = || {
        (a as u128)
            .checked_pow(gcd_u64(u as u64, v as u64) as u32)
            .and_then(|x| x.checked_add(1))
            .ok_or(FieldError::Overflow)
    };
    match sign {
        Sign::Minus if vv <= vu => Ok(2),
        Sign::Minus => big(),
        Sign::Plus if vv != vu => Ok(2),
        Sign::Plus => big(),
    }
}
