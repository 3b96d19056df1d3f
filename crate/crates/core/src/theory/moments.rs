use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::TheoryError;
use crate::code::WeightDistribution;

/// Residuals q^r sum i^r A_i - q^k B_r of the first four identities, and
/// the dual weight-4 count from the fifth when the dual has no words of
/// weight 1, 2 or 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentReport {
    pub residuals: Vec<BigInt>,
    pub a4_dual: Option<BigInt>,
}

impl MomentReport {
    pub fn consistent(&self) -> bool {
        self.residuals.iter().all(Zero::is_zero)
    }
}

fn big(x: impl Into<BigInt>) -> BigInt {
    x.into()
}

/// Brackets B_0..B_3 (so that sum i^r A_i = q^(k-r) B_r) for dual counts A1, A2, A3.
fn brackets(n: u64, q: u64, dual: &[BigInt; 3]) -> [BigInt; 4] {
    let (n, q) = (big(n), big(q));
    let [a1, a2, a3] = dual;
    let one = BigInt::one();
    let b0 = one.clone();
    let b1 = &q * &n - &n - a1;
    let b2 = (&q - 1) * &n * (&q * &n - &n + 1) - (2 * &q * &n - &q - 2 * &n + 2) * a1 + 2 * a2;
    let n2 = &n * &n;
    let q2 = &q * &q;
    let main = (&q - 1) * &n * (&q2 * &n2 - 2 * &q * &n2 + 3 * &q * &n - &q + &n2 - 3 * &n + 2);
    let c1 = 3 * &q2 * &n2 - 3 * &q2 * &n - 6 * &q * &n2 + 12 * &q * &n + &q2 - 6 * &q + 3 * &n2
        - 9 * &n
        + 6;
    let b3 = main - c1 * a1 + 6 * (&q * &n - &q - &n + 2) * a2 - 6 * a3;
    [b0, b1, b2, b3]
}

/// (q-1) n (...) in the fifth identity.
fn fifth_main(n: u64, q: u64) -> BigInt {
    let (n, q) = (big(n), big(q));
    let n2 = &n * &n;
    let n3 = &n2 * &n;
    let q2 = &q * &q;
    let q3 = &q2 * &q;
    (&q - 1)
        * &n
        * (&q3 * &n3 - 3 * &q2 * &n3 + 6 * &q2 * &n2 - 4 * &q2 * &n + &q2 + 3 * &q * &n3
            - 12 * &q * &n2
            + 15 * &q * &n
            - 6 * &q
            - &n3
            + 6 * &n2
            - 11 * &n
            + 6)
}

fn power_sum(wd: &WeightDistribution, r: u32) -> BigInt {
    wd.pairs()
        .into_iter()
        .map(|(i, a)| big(i as u64).pow(r) * big(a))
        .sum()
}

/// Evaluates the moment identities on a complete weight distribution.
pub fn pless_check(wd: &WeightDistribution, dual_low: [u128; 3]) -> Result<MomentReport, TheoryError> {
    let q = big(wd.q);
    let qk = q.pow(wd.k as u32);
    let total = big(wd.total());
    if total != qk {
        return Err(TheoryError::IncompleteWd {
            got: total.to_string(),
            expected: qk.to_string(),
        });
    }
    let dual = dual_low.map(big);
    let b = brackets(wd.n as u64, wd.q, &dual);
    let residuals = (0..4u32)
        .map(|r| q.pow(r) * power_sum(wd, r) - &qk * &b[r as usize])
        .collect();
    let a4_dual = if dual.iter().all(Zero::is_zero) {
        // q^4 sum i^4 A_i = q^k (P + 24 A4')
        let num: BigInt = q.pow(4) * power_sum(wd, 4) - &qk * fifth_main(wd.n as u64, wd.q);
        let den: BigInt = 24 * &qk;
        if (&num % &den).is_zero() {
            Some(num / den)
        } else {
            return Err(TheoryError::NotIntegral(format!("A4' = {num}/{den}")));
        }
    } else {
        None
    };
    Ok(MomentReport { residuals, a4_dual })
}

fn to_count(x: &BigRational) -> Result<u128, TheoryError> {
    if !x.is_integer() || x.is_negative() {
        return Err(TheoryError::NotIntegral(x.to_string()));
    }
    x.to_integer()
        .to_u128()
        .ok_or_else(|| TheoryError::Overflow(x.to_string()))
}

/// Counts at four candidate weights forced by the first four moment
/// identities when the dual has minimum distance at least 4.
pub fn solve_wd_from_moments(
    n: usize,
    k: usize,
    q: u64,
    weights: [usize; 4],
) -> Result<WeightDistribution, TheoryError> {
    let qb = big(q);
    let b = brackets(n as u64, q, &[BigInt::zero(), BigInt::zero(), BigInt::zero()]);
    // row r: sum_j w_j^r x_j = q^(k-r) B_r - [r = 0]
    let mut rows: Vec<Vec<BigRational>> = (0..4u32)
        .map(|r| {
            let mut row: Vec<BigRational> = weights
                .iter()
                .map(|&w| BigRational::from_integer(big(w as u64).pow(r)))
                .collect();
            let scale = BigRational::new(qb.pow(k as u32), qb.pow(r));
            let mut rhs = scale * BigRational::from_integer(b[r as usize].clone());
            if r == 0 {
                rhs -= BigRational::one();
            }
            row.push(rhs);
            row
        })
        .collect();
    for col in 0..4 {
        let piv = (col..4)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or(TheoryError::Singular)?;
        rows.swap(col, piv);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..4 {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..5 {
                    let sub = &f * &rows[col][c];
                    rows[r][c] -= sub;
                }
            }
        }
    }
    let mut pairs = vec![(0usize, 1u128)];
    for (j, &w) in weights.iter().enumerate() {
        pairs.push((w, to_count(&rows[j][4])?));
    }
    Ok(WeightDistribution::from_pairs(n, k, q, &pairs))
}
