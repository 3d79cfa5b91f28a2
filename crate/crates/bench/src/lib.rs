//! Shared fixtures for the engine benchmarks.

use nilops_core::onevar::Variety;
use nilops_core::opalgebra::{OpPoly, OpWord, VarietyEngine};

/// An engine with tables built through the given degree.
pub fn engine(variety: Variety, degree: u32) -> VarietyEngine {
    let mut e = VarietyEngine::new(variety).expect("engine");
    e.build_to(degree).expect("tables");
    e
}

/// Every word of the given degree as a one-term combination, the batch the
/// reduction benchmark sweeps.
pub fn word_batch(degree: u32) -> Vec<OpPoly> {
    OpWord::enumerate_lu(degree)
        .into_iter()
        .map(OpPoly::word)
        .collect()
}
