//! Operator words, translation of y-linear identities, and the degreewise
//! relation engine.

mod table;
mod translate;
mod word;

pub use table::{
    derive_letter_eliminations, eliminate_letters, EngineError, NormalFormTable, RuleJson,
    TableJson, TermJson, VarietyEngine,
};
pub use translate::{apply_to_y, cofactor_chain, translate, TranslateError};
pub use word::{parse_op_poly, parse_word, Letter, OpPoly, OpWord, WordParseError};
