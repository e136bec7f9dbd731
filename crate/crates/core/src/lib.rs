//! Exact arithmetic for Demazure-type transition coefficients in type `A_n`.
//!
//! The [`Engine`] computes the `p`, `a`, `g` and `h` tables, the `q = 0`
//! Macdonald polynomials in the Schur basis and the graded characters `G_λ`,
//! `G_{ν,λ}`. Everything is exact: weights are integer vectors, coefficients
//! are Laurent polynomials over `BigInt`.
#![no_std]

extern crate alloc;

pub mod characters;
pub mod error;
pub mod lattice;
pub mod qpoly;
pub mod schur;
pub mod sigma;
pub mod suites;
pub mod transition;

pub use characters::{charge, is_schur_positive, kostka_foulkes, Factorization};
pub use error::{Error, Result};
pub use lattice::{lt_min, Decomposition, Rational, RootSystem, RootVector, Weight};
pub use qpoly::{qbinom, qint, QPoly};
pub use schur::{
    content_counts, schur_expand, ssyt, tensor_decompose, to_schur, weight_multiplicities, weyl_dim, MonomialPoly,
    Partition, SchurSeries, Tableau,
};
pub use sigma::{sigma_family, SigmaCache, SigmaFamily};
pub use suites::{run_identity_suite, run_identity_suite_named, run_suite_rank, Bounds, Failure, IdentityReport, SuiteId};
pub use transition::{g0_two_lambda0, p_coeff, Engine, TableKind, TransitionTable};
