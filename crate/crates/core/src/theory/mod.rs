//! Exact moment identities, design theorems and closed-form predictions used
//! as oracles against enumeration.

mod assmus;
mod bounds;
mod lemmas;
mod moments;
mod predict;

use thiserror::Error;

use crate::field::FieldError;

pub use assmus::{
    assmus_mattson, assmus_mattson_either, known_counts, weight_bound, DesignPromise, Side,
};
pub use bounds::{classify_code, Classification, CodeClass};
pub use lemmas::{
    bridge_counts, conjugate_ratio_set, count_kernel_solutions, difference_ratio_set,
    kernel_count_allowed, pair_ratio_set, unit_circle_points, BridgeCounts,
};
pub use moments::{pless_check, solve_wd_from_moments, MomentReport};
pub use predict::{predicted_profile, Family, PredictedDesign, Profile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("weight distribution sums to {got}, expected q^k = {expected}")]
    IncompleteWd { got: String, expected: String },
    #[error("weight count at {0} is unknown")]
    Unknown(usize),
    #[error("moment system is singular")]
    Singular,
    #[error("moment solution {0} is not a nonnegative integer")]
    NotIntegral(String),
    #[error("strength {t} must be below the minimum distance {d}")]
    StrengthTooLarge { t: usize, d: usize },
    #[error("outside the theorem's domain: {0}")]
    Domain(String),
    #[error("value {0} does not fit")]
    Overflow(String),
}
