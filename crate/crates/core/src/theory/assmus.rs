use serde::Serialize;

use super::TheoryError;
use crate::code::WeightDistribution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Code,
    Dual,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::Code => Side::Dual,
            Side::Dual => Side::Code,
        }
    }
}

/// The weight-`weight` words on `side` hold a t-design with t = `strength`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DesignPromise {
    pub side: Side,
    pub weight: usize,
    pub strength: usize,
}

/// Every count of a fully enumerated distribution, as known values.
pub fn known_counts(wd: &WeightDistribution) -> Vec<Option<u128>> {
    (0..=wd.n).map(|w| Some(wd.get(w))).collect()
}

/// Largest w <= n with w - floor((w + q - 2)/(q - 1)) < d.
pub fn weight_bound(n: usize, q: u64, d: usize) -> usize {
    let q = q as usize;
    (0..=n)
        .rev()
        .find(|&w| w - (w + q - 2) / (q - 1) < d)
        .unwrap_or(0)
}

fn count(c: &[Option<u128>], i: usize) -> Result<u128, TheoryError> {
    c.get(i).copied().flatten().ok_or(TheoryError::Unknown(i))
}

/// Least positive weight present, requiring every lighter count to be known.
fn min_weight(c: &[Option<u128>]) -> Result<Option<usize>, TheoryError> {
    for i in 1..c.len() {
        if count(c, i)? > 0 {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Designs promised for `code` (minimum distance `d`) and its dual, given
/// counts of both; unknown counts are None and must not be needed.
/// Returns an empty list when the hypothesis s <= d - t fails.
pub fn assmus_mattson(
    n: usize,
    q: u64,
    d: usize,
    code: &[Option<u128>],
    dual: &[Option<u128>],
    t: usize,
) -> Result<Vec<DesignPromise>, TheoryError> {
    if t == 0 || t >= d {
        return Err(TheoryError::StrengthTooLarge { t, d });
    }
    let mut s = 0;
    for i in 1..=n - t {
        if count(dual, i)? != 0 {
            s += 1;
        }
    }
    if s > d - t {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for i in d..=weight_bound(n, q, d) {
        if count(code, i)? != 0 {
            out.push(DesignPromise {
                side: Side::Code,
                weight: i,
                strength: t,
            });
        }
    }
    if let Some(dd) = min_weight(dual)? {
        let top = (n - t).min(weight_bound(n, q, dd));
        for i in dd..=top {
            if count(dual, i)? != 0 {
                out.push(DesignPromise {
                    side: Side::Dual,
                    weight: i,
                    strength: t,
                });
            }
        }
    }
    Ok(out)
}

/// Applies the theorem with the code and with its dual as the base code,
/// reporting sides relative to `code`. An orientation whose data are
/// insufficient or whose strength is too large is skipped.
pub fn assmus_mattson_either(
    n: usize,
    q: u64,
    code: &[Option<u128>],
    dual: &[Option<u128>],
    t: usize,
) -> Result<Vec<DesignPromise>, TheoryError> {
    let mut out = Vec::new();
    let mut tried = false;
    for (a, b, flip) in [(code, dual, false), (dual, code, true)] {
        let Ok(Some(d)) = min_weight(a) else { continue };
        if t >= d {
            continue;
        }
        match assmus_mattson(n, q, d, a, b, t) {
            Ok(ps) => {
                tried = true;
                out.extend(ps.into_iter().map(|mut p| {
                    if flip {
                        p.side = p.side.flip();
                    }
                    p
                }))
            }
            Err(TheoryError::Unknown(_)) => {}
            Err(e) => return Err(e),
        }
    }
    if !tried {
        return Err(TheoryError::Domain("no orientation has enough data".into()));
    }
    out.sort();
    out.dedup();
    Ok(out)
}
