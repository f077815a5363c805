//! Differential operators with opaque group-function atoms, partial Fourier
//! conjugation, and the realization checks built on them.

pub mod fourier;
pub mod op;
pub mod realization;
pub mod series;

use thiserror::Error;

pub use fourier::{
    build_fourier, fourier_conjugate, fourier_rules, FourierMap, FourierPair, RuleCheck,
};
pub use op::{Atom, Monomial, Var, VarKind, WeylOp};
pub use realization::{
    gk_dimension_audit, maximal_sl2_relation, phi_generator, psi_generator, sl2_series_check,
    verify_bracket_relations, verify_matching, weight_operator, BracketReport, GkAudit,
    MatchReport, RealizationCase, RealizationSpec,
};
pub use series::{series_coefficients, series_report, SeriesCoefficients, SeriesReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("pairing check failed: {0}")]
    Pairing(String),
    #[error("variable {0} is outside the source algebra")]
    ForeignVariable(Var),
    #[error("no transcribed operator for {0}")]
    NoPrintedFormula(String),
}
