//! The `E²` page, maximality inequalities and the criteria built on edge
//! morphisms and localization.

mod criteria;
mod duality;
mod e2;
mod gm;

pub use criteria::{
    rho_surjectivity_criteria, surjectivity_witness, witness_contract_holds, CriterionReport, CriterionVariant,
    WitnessOutcome, WITNESS_SEARCH_LIMIT,
};
pub use duality::{poincare_check, DualityReport, DualityRow};
pub use e2::{e2_page, E2Entry, E2Page};
pub use gm::{edge_table, gm_report, EdgeRow, GMReport, Inequality};
