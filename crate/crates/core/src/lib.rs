//! Symbolic derivation and verification of multiplication-operator
//! identities in commutative right-nilalgebras of index 4.
//!
//! Everything is computed over the exact rationals. The engine re-derives,
//! degree by degree, the relation space of words in `L = L_x` and
//! `U = L_{x^2}` for three varieties (`x^4 = 0`, plus `x((x^2)(x^2)) = 0`,
//! plus `x(x((x^2)(x^2))) = 0`), reduces arbitrary operator words to
//! canonical form, and verifies the nilpotency bounds `L^10 = 0`, `L^7 = 0`
//! and `L^9 = 0` together with every intermediate identity they rest on.

pub mod linalg;
pub mod linearize;
pub mod magma;
pub mod onevar;
pub mod opalgebra;
pub mod parse;
pub mod theorems;

pub use linalg::{in_row_space, LinalgError, Rat, RatMatrix};
pub use linearize::{delta, delta_repeated};
pub use magma::{Generator, Monomial, Polynomial, RawTree};
pub use onevar::{basis_monomial, OneVarError, OneVarTables, Variety};
pub use opalgebra::{
    parse_op_poly, parse_word, EngineError, Letter, NormalFormTable, OpPoly, OpWord, TableJson,
    VarietyEngine,
};
pub use parse::{parse_monomial, parse_polynomial, ParseError};
pub use theorems::{
    denominator_audit, quotient_dimensions, verify_element_identities, verify_theorem1,
    verify_theorem2, verify_theorem3, Check, CheckStatus, VerificationReport,
};
