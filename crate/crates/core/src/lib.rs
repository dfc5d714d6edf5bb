//! Exact polynomial arithmetic over Q and F_p, ideals of minors, height
//! verifiers and certified G-biliaison chains for determinantal schemes.
//!
//! Everything is generic over a [`Field`] context; [`Rationals`] and
//! [`PrimeField`] are the two implementations, with aliases below.

pub mod chain;
pub mod checks;
pub mod error;
pub mod field;
pub mod formulas;
pub mod ideal;
pub mod io;
pub mod matrix;
pub mod minors;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod rowops;

pub use chain::{
    biliaison_step, full_chain, huneke_ulrich_licci, ratio_relation_check, BettiShifts, BiliaisonStep,
    CertificateRecord, ChainCertificate, ChainStatus, LicciVerdict,
};
pub use checks::{
    herzog_trung_check, is_determinantal, local_ci_radius, regular_sequence_sweep, verify_column_deletion,
    verify_ladder_height, verify_laddcanc, verify_regular_sequence, verify_row_deletion, CheckOptions,
    Comparison, HeightReport, Statement, Verdict,
};
pub use error::{Error, Result};
pub use field::{Field, FieldKind, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use formulas::{ci_classification, cm_type, expected_codim, gaeta_inequality, CiClass, CiVariant};
pub use ideal::{groebner_basis, height, krull_dimension, normal_form, IdealHandle, DEFAULT_STEP_BUDGET};
pub use io::{parse_matrix_file, read_matrix_file, AnyMatrix};
pub use matrix::PolyMatrix;
pub use minors::{
    all_minors, check_t_homogeneous, determinant, ladder_minor_count, ladder_minors_ideal, minor_count,
    minors_ideal, LadderMask, THomogeneity,
};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use rowops::{generalized_column_ops, generalized_row_ops, RowOpRecord};

pub type QPolynomial = Polynomial<Rationals>;
pub type FpPolynomial = Polynomial<PrimeField>;
pub type QMatrix = PolyMatrix<Rationals>;
pub type FpMatrix = PolyMatrix<PrimeField>;
pub type QIdeal = IdealHandle<Rationals>;
pub type FpIdeal = IdealHandle<PrimeField>;
