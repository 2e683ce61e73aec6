//! Exact character tables via the Dixon–Schneider modular method.
//!
//! The pipeline: class-algebra structure constants → simultaneous
//! eigenvectors of the class matrices over a prime field F_p (p ≡ 1 mod
//! exponent, p > 2√|G|) → modular character rows → lift to exact
//! cyclotomic values through root-of-unity multiplicities.

mod algebra;
mod lift;
mod modmat;
mod modp;
mod solve;
mod table;

pub use algebra::{class_algebra_constants, ClassAlgebra};
pub use lift::lift_table;
pub use solve::{choose_prime, choose_prime_from, is_valid_prime, modular_table};
pub use table::{
    character_table, character_table_with_prime, decomposition_string, degree_multiset,
    CharacterTable,
};
