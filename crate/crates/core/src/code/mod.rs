//! Constacyclic codes, their trace representation, and exact weight
//! enumeration.

mod constacyclic;
mod descriptor;
mod dual_words;
mod enumerate;
mod families;
mod geometry;
mod linalg;
mod subfield;
mod weights;

use thiserror::Error;

use crate::field::{FieldError, Sign};
use crate::poly::PolyError;

pub use constacyclic::{code_from_nonzeros, dual_code, trace_codeword, ConstacyclicCode};
pub use descriptor::{CodeDescriptor, FamilyTag};
pub use dual_words::{low_weight_dual_words, LowWeightWords};
pub use enumerate::{
    min_distance, supports_of_weight_in, weight_distribution, weight_distribution_of, EnumOptions,
    Enumerable, MatrixCode, DEFAULT_BUDGET,
};
pub use families::{
    code_gf4_17, family_cyclic, family_nega, family_ovoid_constacyclic, gf4_17_reference_factors,
};
pub use geometry::{
    columns_as_points, elliptic_quadric, no_three_collinear, plane_sections, points_matrix,
    EllipticQuadric, Point,
};
pub use linalg::GeneratorMatrix;
pub use subfield::{subfield_subcode, subfield_subcode_direct, trace_code};
pub use weights::WeightDistribution;

pub(crate) use enumerate::TraceSource;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("length {n} is not coprime to the alphabet size {q}")]
    LengthNotCoprime { n: usize, q: u64 },
    #[error("root has order {actual}, expected {expected}")]
    WrongRootOrder { expected: u64, actual: u64 },
    #[error("gamma^n differs from the shift constant")]
    RootMismatch,
    #[error("gamma^{0} is not a root of x^n - lambda")]
    NotARoot(u64),
    #[error("exponents {0} and {1} are conjugate")]
    ConjugateExponents(u64, u64),
    #[error("check polynomial does not divide x^n - lambda")]
    NotDividing,
    #[error("enumeration needs {required} coordinate evaluations, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("dual word search supports weights up to 5, got {0}")]
    WeightTooLarge(usize),
    #[error("component {0} is not in its trace field")]
    BadComponent(usize),
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("q = {q} is in the wrong residue class mod 4 for sign {sign:?}")]
    WrongCongruence { q: u64, sign: Sign },
    #[error("construction disagrees with the reference data: {0}")]
    ReferenceMismatch(String),
    #[error("the extension field has no log tables")]
    ExtensionUntabulated,
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
