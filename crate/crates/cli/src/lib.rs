pub mod analysis;
pub mod suite;

pub use analysis::{
    analyze, cmd_analyze, cmd_design_verify, cmd_family, summary, Analysis, DesignVerifyReport,
    FamilyArgs, RunConfig, RunReport,
};
pub use suite::{paper_suite, SuiteRow, SuiteStatus, SUITE_IDS};
