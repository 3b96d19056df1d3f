use std::sync::Arc;

use super::constacyclic::{code_from_nonzeros, ConstacyclicCode};
use super::descriptor::FamilyTag;
use super::CodeError;
use crate::field::{build_field, unity_root, Elem, Embedding, ExtField, FieldElement, Sign};
use crate::poly::{min_poly_via, Polynomial};

/// (p, m) with q = p^m, if q is a prime power.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut m = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// The cyclic code of length p^m + 1 over GF(p^m) with nonzeros
/// beta^((p^s-1)/2) and beta^((p^s+1)/2), beta of order p^m + 1.
pub fn family_cyclic(p: u64, m: u32, s: u32) -> Result<ConstacyclicCode, CodeError> {
    if p.is_multiple_of(2) {
        return Err(CodeError::InvalidParameters(format!("p = {p} must be odd")));
    }
    if m < 2 || s == 0 || s > m {
        return Err(CodeError::InvalidParameters(format!(
            "need m >= 2 and 1 <= s <= m, got m = {m}, s = {s}"
        )));
    }
    let alphabet = build_field(p, m)?;
    let ext = build_field(p, 2 * m)?;
    let q = alphabet.order();
    let beta = unity_root(&ext, q + 1)?;
    let ps = p.pow(s);
    let code = code_from_nonzeros(
        &alphabet,
        (q + 1) as usize,
        Elem::ONE,
        &beta,
        &[(ps - 1) / 2, ps.div_ceil(2)],
    )?;
    Ok(code.with_tag(FamilyTag {
        family: "cyclic".into(),
        p,
        m,
        s: Some(s),
        q,
    }))
}

/// The negacyclic code of length q^2 + 1 over GF(q^2) with nonzeros delta and
/// delta^(q^2 + q + 1) (`Sign::Plus`) or delta^(q^2 - q + 1) (`Sign::Minus`),
/// delta of order 2(q^2 + 1). The plus family needs q = 1 mod 4 and the minus
/// family q = 3 mod 4 unless `force` is set.
pub fn family_nega(q: u64, sign: Sign, force: bool) -> Result<ConstacyclicCode, CodeError> {
    let (p, m) = prime_power(q)
        .filter(|&(p, _)| p % 2 == 1)
        .ok_or_else(|| CodeError::InvalidParameters(format!("q = {q} is not an odd prime power")))?;
    let wanted = match sign {
        Sign::Plus => 1,
        Sign::Minus => 3,
    };
    if q % 4 != wanted && !force {
        return Err(CodeError::WrongCongruence { q, sign });
    }
    let alphabet = build_field(p, 2 * m)?;
    let ext = build_field(p, 4 * m)?;
    let n = q * q + 1;
    let delta = unity_root(&ext, 2 * n)?;
    let second = match sign {
        Sign::Plus => q * q + q + 1,
        Sign::Minus => q * q - q + 1,
    };
    let minus_one = alphabet.neg(Elem::ONE);
    let code = code_from_nonzeros(&alphabet, n as usize, minus_one, &delta, &[1, second])?;
    let family = match sign {
        Sign::Plus => "nega_plus",
        Sign::Minus => "nega_minus",
    };
    Ok(code.with_tag(FamilyTag {
        family: family.into(),
        p,
        m,
        s: None,
        q,
    }))
}

/// The lambda-constacyclic code of length q^2 + 1 over GF(q) whose check
/// polynomial is the minimal polynomial of alpha^(q+1), alpha primitive in
/// GF(q^4), with lambda = alpha^((q^2+1)(q+1)).
pub fn family_ovoid_constacyclic(q: u64) -> Result<ConstacyclicCode, CodeError> {
    if q <= 2 {
        return Err(CodeError::InvalidParameters(format!("q = {q} must exceed 2")));
    }
    let (p, m) = prime_power(q)
        .ok_or_else(|| CodeError::InvalidParameters(format!("q = {q} is not a prime power")))?;
    let alphabet = build_field(p, m)?;
    let ext = build_field(p, 4 * m)?;
    let emb = Embedding::new(&alphabet, &ext)?;
    let gamma = FieldElement::new(&ext, ext.exp(q + 1));
    let lambda = emb
        .pull(ext.exp((q * q + 1) * (q + 1)))
        .expect("alpha^((q^2+1)(q+1)) lies in GF(q)");
    let code = code_from_nonzeros(&alphabet, (q * q + 1) as usize, lambda, &gamma, &[1])?;
    Ok(code.with_tag(FamilyTag {
        family: "ovoid".into(),
        p,
        m,
        s: None,
        q,
    }))
}

/// GF(4), GF(256) and the GF(4) element lambda = w^85, w the primitive root
/// of x^8 + x^4 + x^3 + x^2 + 1.
fn gf4_setting() -> Result<(Arc<ExtField>, Arc<ExtField>, Embedding, Elem), CodeError> {
    let gf4 = build_field(2, 2)?;
    let gf256 = build_field(2, 8)?;
    if gf256.modulus() != [1, 0, 1, 1, 1, 0, 0, 0, 1] {
        return Err(CodeError::ReferenceMismatch(format!(
            "GF(256) modulus {:?}",
            gf256.modulus()
        )));
    }
    let emb = Embedding::new(&gf4, &gf256)?;
    let lambda = emb.pull(gf256.exp(85)).expect("w^85 lies in GF(4)");
    Ok((gf4, gf256, emb, lambda))
}

/// The minimal polynomials of w^5 and w^35 over GF(4) as published:
/// x^4 + l^2 x^3 + x^2 + x + l^2 and x^4 + x^3 + l x^2 + l x + l^2.
pub fn gf4_17_reference_factors() -> Result<(Polynomial, Polynomial), CodeError> {
    let (gf4, _, _, l) = gf4_setting()?;
    let l2 = gf4.mul(l, l);
    let one = Elem::ONE;
    let h1 = Polynomial::new(&gf4, vec![l2, one, one, l2, one]);
    let h7 = Polynomial::new(&gf4, vec![l2, l, l, one, one]);
    Ok((h1, h7))
}

/// The [17, 8] lambda-constacyclic code over GF(4) with check polynomial
/// h_1 h_7, built from gamma = w^5 and checked against the published factors.
pub fn code_gf4_17() -> Result<ConstacyclicCode, CodeError> {
    let (gf4, gf256, emb, lambda) = gf4_setting()?;
    let gamma = FieldElement::new(&gf256, gf256.exp(5));
    let code = code_from_nonzeros(&gf4, 17, lambda, &gamma, &[1, 7])?;
    let (h1, h7) = gf4_17_reference_factors()?;
    let built1 = min_poly_via(gf256.exp(5), &emb)?;
    let built7 = min_poly_via(gf256.exp(35), &emb)?;
    if built1 != h1 || built7 != h7 {
        return Err(CodeError::ReferenceMismatch(format!(
            "minimal polynomials {built1:?}, {built7:?} differ from {h1:?}, {h7:?}"
        )));
    }
    if *code.check_poly() != h1.mul(&h7)? {
        return Err(CodeError::ReferenceMismatch("check polynomial".into()));
    }
    Ok(code.with_tag(FamilyTag {
        family: "gf4_17".into(),
        p: 2,
        m: 2,
        s: None,
        q: 4,
    }))
}
