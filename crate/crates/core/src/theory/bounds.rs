use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeClass {
    Mds,
    AlmostMds,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub class: CodeClass,
    /// n - k + 1 - d
    pub singleton_slack: i64,
    /// sum_{i<k} ceil(d / q^i)
    pub griesmer_sum: u128,
    pub griesmer_tight: bool,
}

pub fn classify_code(n: usize, k: usize, d: usize, q: u64) -> Classification {
    let slack = n as i64 - k as i64 + 1 - d as i64;
    let class = match slack {
        0 => CodeClass::Mds,
        1 => CodeClass::AlmostMds,
        _ => CodeClass::Neither,
    };
    let mut sum = 0u128;
    let mut pow = 1u128;
    for _ in 0..k {
        sum += (d as u128).div_ceil(pow);
        pow = pow.saturating_mul(q as u128);
    }
    Classification {
        class,
        singleton_slack: slack,
        griesmer_sum: sum,
        griesmer_tight: sum == n as u128,
    }
}
