//! Constacyclic codes over finite fields, their exact weight distributions,
//! and the combinatorial t-designs held by their fixed-weight codewords.

pub mod field;
pub mod code;
pub mod design;
pub mod poly;
pub mod theory;
