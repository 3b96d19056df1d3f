use serde::{Deserialize, Serialize};

use super::constacyclic::ConstacyclicCode;

/// Which named construction produced a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTag {
    pub family: String,
    pub p: u64,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<u32>,
    pub q: u64,
}

/// JSON form of a constacyclic code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub family: String,
    pub p: u64,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<u32>,
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub alphabet: String,
    pub lambda: String,
    pub check_poly: String,
    pub gen_poly: String,
    pub nonzero_exponents: Vec<u64>,
}

impl CodeDescriptor {
    pub fn of(code: &ConstacyclicCode) -> Self {
        let a = code.alphabet();
        let tag = code.tag().cloned().unwrap_or(FamilyTag {
            family: "custom".into(),
            p: a.characteristic(),
            m: a.degree(),
            s: None,
            q: a.order(),
        });
        let lambda = a.coords(code.lambda());
        let lambda = if lambda.len() == 1 {
            lambda[0].to_string()
        } else {
            format!(
                "[{}]",
                lambda.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
            )
        };
        CodeDescriptor {
            family: tag.family,
            p: tag.p,
            m: tag.m,
            s: tag.s,
            q: tag.q,
            n: code.len(),
            k: code.dimension(),
            alphabet: a.descriptor(),
            lambda,
            check_poly: code.check_poly().to_text(),
            gen_poly: code.gen_poly().to_text(),
            nonzero_exponents: code.nonzero_exponents().to_vec(),
        }
    }
}
