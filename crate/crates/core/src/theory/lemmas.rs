//! Brute-force counts behind the weight arguments for the cyclic and
//! negacyclic families.

use std::sync::Arc;

use num_integer::Integer;

use super::TheoryError;
use crate::field::{unity_set, Elem, ExtField, Sign};

/// q with |field| = q^2.
fn half_order(field: &ExtField) -> Result<u64, TheoryError> {
    let deg = field.degree();
    if !deg.is_multiple_of(2) {
        return Err(TheoryError::Domain(format!("degree {deg} is odd")));
    }
    Ok(field.characteristic().pow(deg / 2))
}

fn unit_circle(field: &Arc<ExtField>, order: u64) -> Result<Vec<Elem>, TheoryError> {
    Ok(unity_set(field, order)?.into_iter().map(|x| x.value()).collect())
}

fn sum(field: &ExtField, terms: impl IntoIterator<Item = Elem>) -> Elem {
    terms.into_iter().fold(Elem::ZERO, |a, x| field.add(a, x))
}

/// Number of y with y^(q+1) = 1 solving a y + b y^(p^s) + c y^(p^s+1) + d = 0
/// in GF(q^2).
pub fn count_kernel_solutions(
    field: &Arc<ExtField>,
    s: u32,
    [a, b, c, d]: [Elem; 4],
) -> Result<usize, TheoryError> {
    if [a, b, c, d].iter().all(|x| x.is_zero()) {
        return Err(TheoryError::Domain("all coefficients are zero".into()));
    }
    let q = half_order(field)?;
    let ps = field.characteristic().pow(s);
    let f = field.as_ref();
    Ok(unit_circle(field, q + 1)?
        .into_iter()
        .filter(|&y| {
            let yp = f.pow(y, ps);
            sum(f, [f.mul(a, y), f.mul(b, yp), f.mul(c, f.mul(yp, y)), d]).is_zero()
        })
        .count())
}

/// The solution counts allowed for GF(p^(2m)): 0, 1, 2 and p^gcd(s,m) + 1.
pub fn kernel_count_allowed(p: u64, m: u32, s: u32) -> [usize; 4] {
    [0, 1, 2, p.pow(m.gcd(&s)) as usize + 1]
}

/// Counts for one coefficient tuple (entries of GF(q^2) inside GF(q^4)).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BridgeCounts {
    /// roots x^(2(q^2+1)) = 1 of the four-term equation in x
    pub lifted: usize,
    /// roots y^(q^2+1) = 1 of a0 y + a1 y^q + a2 y^(q+1) + a3
    pub reduced: usize,
    /// roots y^(q^2+1) = 1 of the equation the substitution actually yields
    pub reduced_derived: usize,
}

/// Counts before and after the substitution y = x^(q+1) (`Sign::Plus`,
/// exponents 1, q^2, q^2+q+1, q^4+q^3+q^2) or y = x^(q-1) (`Sign::Minus`,
/// exponents 1, q^2, q^2-q+1, q^4-q^3+q^2).
pub fn bridge_counts(
    ext: &Arc<ExtField>,
    sign: Sign,
    coeffs: [Elem; 4],
) -> Result<BridgeCounts, TheoryError> {
    let deg = ext.degree();
    if !deg.is_multiple_of(4) {
        return Err(TheoryError::Domain(format!("degree {deg} is not a multiple of 4")));
    }
    let q = ext.characteristic().pow(deg / 4);
    if let Some(i) = coeffs.iter().position(|&a| !ext.in_subfield(a, deg / 2)) {
        return Err(TheoryError::Domain(format!("coefficient {i} is not in GF(q^2)")));
    }
    let f = ext.as_ref();
    let q2 = q * q;
    let exps = match sign {
        Sign::Plus => [1, q2, q2 + q + 1, q2 * q2 + q2 * q + q2],
        Sign::Minus => [1, q2, q2 - q + 1, q2 * q2 - q2 * q + q2],
    };
    let [a0, a1, a2, a3] = coeffs;
    let lifted = unit_circle(ext, 2 * (q2 + 1))?
        .into_iter()
        .filter(|&x| {
            sum(f, coeffs.iter().zip(exps).map(|(&a, e)| f.mul(a, f.pow(x, e)))).is_zero()
        })
        .count();
    let circle = unit_circle(ext, q2 + 1)?;
    let literal = |y: Elem| {
        let yq = f.pow(y, q);
        sum(f, [f.mul(a0, y), f.mul(a1, yq), f.mul(a2, f.mul(yq, y)), a3]).is_zero()
    };
    let reduced = circle.iter().filter(|&&y| literal(y)).count();
    let reduced_derived = match sign {
        Sign::Plus => reduced,
        Sign::Minus => circle
            .iter()
            .filter(|&&y| {
                let yq = f.pow(y, q);
                sum(f, [a0, f.mul(a1, f.mul(yq, y)), f.mul(a2, yq), f.mul(a3, y)]).is_zero()
            })
            .count(),
    };
    Ok(BridgeCounts {
        lifted,
        reduced,
        reduced_derived,
    })
}

fn base_elements(field: &ExtField) -> Result<Vec<Elem>, TheoryError> {
    let half = field.degree() / 2;
    half_order(field)?;
    Ok(field.elements().filter(|&u| field.in_subfield(u, half)).collect())
}

fn sorted(mut v: Vec<Elem>) -> Vec<Elem> {
    v.sort_unstable();
    v
}

/// (z + u)/(z^q + u) for u in GF(q), z in GF(q^2) outside GF(q); sorted,
/// repeats kept.
pub fn conjugate_ratio_set(field: &Arc<ExtField>, z: Elem) -> Result<Vec<Elem>, TheoryError> {
    let q = half_order(field)?;
    let zq = field.pow(z, q);
    if zq == z {
        return Err(TheoryError::Domain("z lies in GF(q)".into()));
    }
    let out = base_elements(field)?
        .into_iter()
        .map(|u| {
            let den = field.add(zq, u);
            field.div(field.add(z, u), den).expect("z^q + u is nonzero")
        })
        .collect();
    Ok(sorted(out))
}

/// (z + u)/(z - u) for u in GF(q); sorted, repeats kept.
pub fn difference_ratio_set(field: &Arc<ExtField>, z: Elem) -> Result<Vec<Elem>, TheoryError> {
    let q = half_order(field)?;
    if field.pow(z, q) == z {
        return Err(TheoryError::Domain("z lies in GF(q)".into()));
    }
    let out = base_elements(field)?
        .into_iter()
        .map(|u| field.div(field.add(z, u), field.sub(z, u)).expect("z - u is nonzero"))
        .collect();
    Ok(sorted(out))
}

/// (a b + 1)/(a + b) for a in GF(q), b on the unit circle other than +-1;
/// sorted, repeats kept.
pub fn pair_ratio_set(field: &Arc<ExtField>, beta: Elem) -> Result<Vec<Elem>, TheoryError> {
    let q = half_order(field)?;
    let on_circle = field.pow(beta, q + 1) == Elem::ONE;
    let minus_one = field.neg(Elem::ONE);
    if !on_circle || beta == Elem::ONE || beta == minus_one {
        return Err(TheoryError::Domain("beta must be a unit other than +-1".into()));
    }
    let out = base_elements(field)?
        .into_iter()
        .map(|a| {
            let num = field.add(field.mul(a, beta), Elem::ONE);
            field.div(num, field.add(a, beta)).expect("a + beta is nonzero")
        })
        .collect();
    Ok(sorted(out))
}

/// The unit circle y^(q+1) = 1 of GF(q^2), sorted.
pub fn unit_circle_points(field: &Arc<ExtField>) -> Result<Vec<Elem>, TheoryError> {
    let q = half_order(field)?;
    Ok(sorted(unit_circle(field, q + 1)?))
}
