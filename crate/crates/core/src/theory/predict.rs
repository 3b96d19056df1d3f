use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::assmus::Side;
use super::{pless_check, TheoryError};
use crate::code::WeightDistribution;

/// A code family with a closed-form description.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// length p^m + 1 cyclic code over GF(p^m)
    Cyclic { p: u64, m: u32, s: u32 },
    /// negacyclic over GF(q^2), q = 1 mod 4
    NegaPlus { q: u64 },
    /// negacyclic over GF(q^2), q = 3 mod 4
    NegaMinus { q: u64 },
    /// any ovoid code over GF(q)
    Ovoid { q: u64 },
    /// GF(q) subfield subcode of the q = 3 mod 4 negacyclic code
    SubfieldOvoid { q: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedDesign {
    pub side: Side,
    pub weight: usize,
    pub t: usize,
    pub v: usize,
    pub lambda: u128,
    /// the complementary blocks form a Steiner system
    pub complement_steiner: bool,
    pub formula: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub wd: WeightDistribution,
    pub dual_d: usize,
    pub dual_a4: Option<u128>,
    pub designs: Vec<PredictedDesign>,
}

fn b(x: u64) -> BigInt {
    BigInt::from(x)
}

fn exact(num: BigInt, den: BigInt, what: &str) -> Result<u128, TheoryError> {
    let (quot, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(TheoryError::NotIntegral(format!("{what} = {num}/{den}")));
    }
    quot.to_u128().ok_or_else(|| TheoryError::Overflow(what.into()))
}

fn odd_prime_power(q: u64) -> Result<(), TheoryError> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap_or(1);
    let mut r = q;
    while p > 1 && r.is_multiple_of(p) {
        r /= p;
    }
    if q < 3 || p == 2 || r != 1 {
        return Err(TheoryError::Domain(format!("q = {q} is not an odd prime power")));
    }
    Ok(())
}

fn square(x: BigInt) -> BigInt {
    &x * &x
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * b(n - i) / b(i + 1))
}

/// A_w = C(n,w) sum_{j<=w-d} (-1)^j C(w,j) (q^(w-d+1-j) - 1) for an [n, k, n-k+1] code.
fn mds_distribution(n: usize, k: usize, q: u64) -> Result<WeightDistribution, TheoryError> {
    let d = n - k + 1;
    let mut pairs = vec![(0, 1u128)];
    for w in d..=n {
        let mut s = BigInt::zero();
        for j in 0..=(w - d) {
            let term = binomial(w as u64, j as u64) * (b(q).pow((w - d + 1 - j) as u32) - 1);
            s = if j % 2 == 0 { s + term } else { s - term };
        }
        let a = binomial(n as u64, w as u64) * s;
        pairs.push((w, a.to_u128().ok_or_else(|| TheoryError::Overflow("A_w".into()))?));
    }
    Ok(WeightDistribution::from_pairs(n, k, q, &pairs))
}

fn cyclic(p: u64, m: u32, s: u32) -> Result<Profile, TheoryError> {
    if p.is_multiple_of(2) || m < 2 || s == 0 || s > m {
        return Err(TheoryError::Domain(format!("(p, m, s) = ({p}, {m}, {s})")));
    }
    let q = p.pow(m);
    let n = (q + 1) as usize;
    if s == m {
        let wd = mds_distribution(n, 3, q)?;
        return Ok(Profile {
            n,
            k: 3,
            d: n - 2,
            wd,
            dual_d: 4,
            dual_a4: None,
            designs: Vec::new(),
        });
    }
    let l = m.gcd(&s);
    let pl = b(p.pow(l));
    let qq = b(q);
    let q4 = qq.pow(4) - qq.pow(3) - qq.pow(2) + &qq;
    let sq = qq.pow(2) - 1;
    let d = (q - p.pow(l)) as usize;
    let a_min = exact(q4.clone(), pl.pow(3) - &pl, "A_min")?;
    let a_qm1 = exact(
        &sq * (&pl * qq.pow(2) + &pl * &qq - 2 * qq.pow(2)),
        2 * &pl - 2,
        "A_(q-1)",
    )?;
    let a_q = exact(&sq * (qq.pow(2) - &qq + &pl), pl.clone(), "A_q")?;
    let a_qp1 = exact(&pl * q4, 2 + 2 * &pl, "A_(q+1)")?;
    let wd = WeightDistribution::from_pairs(
        n,
        4,
        q,
        &[(0, 1), (d, a_min), (n - 2, a_qm1), (n - 1, a_q), (n, a_qp1)],
    );
    let dd = b(d as u64);
    let lambda = exact(
        &dd * (&dd - 1) * (&dd - 2),
        pl.pow(3) - &pl,
        "lambda",
    )?;
    let frac: BigInt = &pl + 4 * pl.pow(2) - 2 * pl.pow(3) - 2 * pl.pow(4) + pl.pow(5) - 2;
    let den = square(pl.pow(2) - 1);
    let lambda_dual = exact(frac.clone(), den.clone(), "dual lambda")?;
    let a4 = exact(
        &qq * (&qq + 1) * square(&qq - 1) * frac,
        b(24) * den,
        "A4 dual",
    )?;
    Ok(Profile {
        n,
        k: 4,
        d,
        wd,
        dual_d: 4,
        dual_a4: Some(a4),
        designs: vec![
            PredictedDesign {
                side: Side::Code,
                weight: d,
                t: 3,
                v: n,
                lambda,
                complement_steiner: true,
                formula: "(q-p^l)(q-p^l-1)(q-p^l-2)/(p^3l-p^l)".into(),
            },
            PredictedDesign {
                side: Side::Dual,
                weight: 4,
                t: 3,
                v: n,
                lambda: lambda_dual,
                complement_steiner: false,
                formula: "(p^l+4p^2l-2p^3l-2p^4l+p^5l-2)/(p^2l-1)^2".into(),
            },
        ],
    })
}

fn nega(q: u64, residue: u64) -> Result<Profile, TheoryError> {
    odd_prime_power(q)?;
    if q % 4 != residue {
        return Err(TheoryError::Domain(format!("q = {q} is not {residue} mod 4")));
    }
    let qq = b(q);
    let n = (q * q + 1) as usize;
    let d = (q * q - q) as usize;
    let a_min = exact(qq.pow(5) - &qq, b(1), "A_min")?;
    let a_side = exact((qq.pow(4) - 1) * (&qq - 1) * qq.pow(3), b(2), "A_(q^2+-1)")?;
    let a_mid = exact(
        qq.pow(7) - qq.pow(5) + qq.pow(4) - qq.pow(3) + &qq - 1,
        b(1),
        "A_(q^2)",
    )?;
    let wd = WeightDistribution::from_pairs(
        n,
        4,
        q * q,
        &[(0, 1), (d, a_min), (n - 2, a_side), (n - 1, a_mid), (n, a_side)],
    );
    let a4 = exact(
        qq.pow(2) * (&qq - 2) * (qq.pow(2) + 1) * square(qq.pow(2) - 1),
        b(24),
        "A4 dual",
    )?;
    Ok(Profile {
        n,
        k: 4,
        d,
        wd,
        dual_d: 4,
        dual_a4: Some(a4),
        designs: vec![
            PredictedDesign {
                side: Side::Code,
                weight: d,
                t: 3,
                v: n,
                lambda: ((q * q - q - 1) * (q - 2)) as u128,
                complement_steiner: true,
                formula: "(q^2-q-1)(q-2)".into(),
            },
            PredictedDesign {
                side: Side::Dual,
                weight: 4,
                t: 3,
                v: n,
                lambda: (q - 2) as u128,
                complement_steiner: false,
                formula: "q-2".into(),
            },
        ],
    })
}

fn ovoid(q: u64) -> Result<Profile, TheoryError> {
    if q <= 2 {
        return Err(TheoryError::Domain(format!("q = {q} must exceed 2")));
    }
    let n = (q * q + 1) as usize;
    let d = (q * q - q) as usize;
    let wd = WeightDistribution::from_pairs(
        n,
        4,
        q,
        &[
            (0, 1),
            (d, ((q * q - q) * (q * q + 1)) as u128),
            (n - 1, ((q - 1) * (q * q + 1)) as u128),
        ],
    );
    let a4 = pless_check(&wd, [0, 0, 0])?
        .a4_dual
        .and_then(|x| x.to_u128());
    Ok(Profile {
        n,
        k: 4,
        d,
        wd,
        dual_d: 4,
        dual_a4: a4,
        designs: vec![
            PredictedDesign {
                side: Side::Code,
                weight: d,
                t: 3,
                v: n,
                lambda: ((q - 2) * (q * q - q - 1)) as u128,
                complement_steiner: true,
                formula: "(q-2)(q^2-q-1)".into(),
            },
            PredictedDesign {
                side: Side::Dual,
                weight: 4,
                t: 3,
                v: n,
                lambda: (q - 2) as u128,
                complement_steiner: false,
                formula: "q-2".into(),
            },
        ],
    })
}

/// Parameters, weight distribution and designs stated for a family.
pub fn predicted_profile(family: &Family) -> Result<Profile, TheoryError> {
    match *family {
        Family::Cyclic { p, m, s } => cyclic(p, m, s),
        Family::NegaPlus { q } => nega(q, 1),
        Family::NegaMinus { q } => nega(q, 3),
        Family::Ovoid { q } => ovoid(q),
        Family::SubfieldOvoid { q } => {
            odd_prime_power(q)?;
            if q % 4 != 3 {
                return Err(TheoryError::Domain(format!("q = {q} is not 3 mod 4")));
            }
            ovoid(q)
        }
    }
}
