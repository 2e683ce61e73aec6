//! Exact character-theoretic toolkit for finite permutation groups.
//!
//! The pipeline: enumerate a permutation group, compute its conjugacy
//! classes, build the exact character table by the Dixon–Schneider modular
//! method, derive spectra and energies of normal Cayley graphs from the
//! characters, classify vanishing and rational classes, and verify the
//! centralizer lower bound `|C_G(x)| >= omega(G)` for rational
//! non-vanishing elements.
//!
//! All character values are exact cyclotomic integers; vanishing detection
//! is exact integer-vector zero testing, never a float comparison.

pub mod cli;
pub mod cyclotomic;
pub mod dixon;
pub mod error;
pub mod permgroup;
pub mod spectra;
pub mod vanishing;

pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use dixon::{
    character_table, character_table_with_prime, choose_prime, choose_prime_from,
    class_algebra_constants, decomposition_string, degree_multiset, is_valid_prime, lift_table,
    modular_table, CharacterTable, ClassAlgebra,
};
pub use error::{Error, Result};
pub use permgroup::{
    conjugacy_classes, enumerate, parse_cycles, ClassSet, ConjugacyClass, PermGroup, Permutation,
    DEFAULT_ENUMERATION_CAP,
};
pub use spectra::{
    brute_force_spectrum, expand_spectrum, graph_energy, is_singular, mcclelland_bound,
    normal_cayley_spectrum, ConnectionSet, Eigenvalue, Energy, SpectrumReport, DEFAULT_ORACLE_CAP,
};
pub use vanishing::{
    burnside_check, check_energy_bound, classify_classes, contrapositive_classify,
    verify_main_theorem, weight, ClassVerdict, EnergyCheck, VerifyReport, WeightComparison,
    WeightReport,
};
