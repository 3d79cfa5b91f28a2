//! Degreewise derivation of operator relations and the reduction engine.
//!
//! Each degree is closed by linear algebra: the relation rows of one
//! x-degree are reduced to a rewrite system over the words of that degree,
//! ordered descending. No string-rewriting confluence is involved; lifting
//! lower-degree rules by all word pairs and adding fresh linearization
//! instances is exactly the degreewise elimination.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::linalg::{prime_factors, Rat};
use crate::linearize::delta;
use crate::magma::{Generator, Monomial, Polynomial};
use crate::onevar::{basis_monomial, OneVarError, OneVarTables, Variety};
use crate::opalgebra::translate::{translate, TranslateError};
use crate::opalgebra::word::{Letter, OpPoly, OpWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error(transparent)]
    OneVar(#[from] OneVarError),
    #[error(transparent)]
    Translate(#[from] TranslateError),
    #[error("letter elimination failed: no rule with pivot {0}")]
    EliminationImpossible(String),
    #[error("letter elimination for {0} has a tail outside the two-letter alphabet")]
    ImpureEliminationTail(String),
    #[error(
        "degree {degree} not derived (built through {built}) and vanishing closure unavailable"
    )]
    DegreeNotBuilt { degree: u32, built: u32 },
    #[error("degree {0} exceeds the variety cap {1}")]
    DegreeAboveCap(u32, u32),
}

/// The reduction table for one variety and one x-degree: which words
/// rewrite, into what, and which words survive.
#[derive(Debug, Clone)]
pub struct NormalFormTable {
    pub variety: Variety,
    pub degree: u32,
    /// All words of this degree, descending.
    pub words: Vec<OpWord>,
    /// pivot word -> combination of canonical words it rewrites to.
    pub rules: BTreeMap<OpWord, OpPoly>,
    /// Words surviving in the quotient, descending.
    pub canonical: Vec<OpWord>,
}

impl NormalFormTable {
    /// The reduced relation rows: `pivot - tail` per rule.
    pub fn relation_rows(&self) -> Vec<OpPoly> {
        self.rules
            .iter()
            .map(|(pivot, tail)| OpPoly::word(pivot.clone()).sub(tail))
            .collect()
    }

    pub fn quotient_dimension(&self) -> usize {
        self.canonical.len()
    }
}

/// Serialization form of a table; `{variety, degree, canonical, rules}`.
#[derive(Debug, Clone, Serialize)]
pub struct TableJson {
    pub variety: Variety,
    pub degree: u32,
    pub canonical: Vec<String>,
    pub rules: Vec<RuleJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RuleJson {
    pub pivot: String,
    pub tail: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TermJson {
    pub word: String,
    pub coeff: Rat,
}

impl From<&NormalFormTable> for TableJson {
    fn from(t: &NormalFormTable) -> Self {
        let mut canonical = t.canonical.clone();
        canonical.sort_by(|a, b| b.presentation_cmp(a));
        let mut pivots: Vec<&OpWord> = t.rules.keys().collect();
        pivots.sort_by(|a, b| b.presentation_cmp(a));
        TableJson {
            variety: t.variety,
            degree: t.degree,
            canonical: canonical.iter().map(|w| w.to_string()).collect(),
            rules: pivots
                .into_iter()
                .map(|pivot| {
                    let tail = &t.rules[pivot];
                    let mut words: Vec<&OpWord> = tail.words().collect();
                    words.sort_by(|a, b| b.presentation_cmp(a));
                    RuleJson {
                        pivot: pivot.to_string(),
                        tail: words
                            .into_iter()
                            .map(|w| TermJson {
                                word: w.to_string(),
                                coeff: tail.coeff(w),
                            })
                            .collect(),
                    }
                })
                .collect(),
        }
    }
}

/// Incremental reduced-row-echelon closure over words of one degree.
/// Inserting a row reduces it by the current rules; a nonzero remainder
/// contributes a new rule at its leading word.
#[derive(Debug, Default)]
struct RowReducer {
    rules: BTreeMap<OpWord, OpPoly>,
}

impl RowReducer {
    /// One descending pass: pop the largest word, substitute if it pivots.
    /// Tails only mention smaller words, so nothing re-enters above the
    /// cursor.
    fn reduce(&self, row: &OpPoly) -> OpPoly {
        let mut work: std::collections::BTreeMap<OpWord, Rat> =
            row.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = OpPoly::zero();
        while let Some((word, coeff)) = work.pop_last() {
            if coeff.is_zero() {
                continue;
            }
            match self.rules.get(&word) {
                Some(tail) => {
                    for (tw, tc) in tail.terms() {
                        let entry = work.entry(tw.clone()).or_insert_with(Rat::zero);
                        *entry += &(tc * &coeff);
                    }
                }
                None => out.add_term(word, coeff),
            }
        }
        out
    }

    fn insert(&mut self, row: &OpPoly) {
        let reduced = self.reduce(row);
        let Some(lead) = reduced.leading_word().cloned() else {
            return;
        };
        let lead_coeff = reduced.coeff(&lead);
        let mut tail = reduced;
        tail.add_term(lead.clone(), -&lead_coeff);
        let tail = tail.scale(
            &(-Rat::one())
                .checked_div(&lead_coeff)
                .expect("leading coefficient nonzero"),
        );
        self.rules.insert(lead, tail);
    }

    /// Rewrites every tail over non-pivot words only. Ascending pivot order
    /// suffices because tails only mention words below their pivot.
    fn back_substitute(&mut self) {
        let pivots: Vec<OpWord> = self.rules.keys().cloned().collect();
        for pivot in pivots {
            let tail = self.rules[&pivot].clone();
            let mut clean = OpPoly::zero();
            for (w, c) in tail.terms() {
                match self.rules.get(w) {
                    Some(t) => clean = clean.add(&t.scale(c)),
                    None => clean.add_term(w.clone(), c.clone()),
                }
            }
            self.rules.insert(pivot, clean);
        }
    }

    /// Denominators of the finished reduced system. The reduced form of a
    /// row space is unique, so this set is a property of the derivation, not
    /// of the insertion order.
    fn denominators(&self) -> BTreeSet<BigUint> {
        let mut out = BTreeSet::new();
        for tail in self.rules.values() {
            for (_, c) in tail.terms() {
                if !c.is_integer() {
                    out.insert(c.denom().magnitude().clone());
                }
            }
        }
        out
    }
}

/// All words over the extended alphabet of a given x-degree. Only the
/// bootstrap needs these, and only for small degrees.
fn enumerate_extended(degree: u32) -> Vec<OpWord> {
    fn go(remaining: u32, prefix: &mut Vec<Letter>, out: &mut Vec<OpWord>) {
        if remaining == 0 {
            out.push(OpWord::from_letters(prefix.iter().copied()));
            return;
        }
        for letter in [
            Letter::T6,
            Letter::T5,
            Letter::T4,
            Letter::T3,
            Letter::U,
            Letter::L,
        ] {
            if letter.x_degree() <= remaining {
                prefix.push(letter);
                go(remaining - letter.x_degree(), prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(degree, &mut Vec::new(), &mut out);
    out
}

/// Linearization instances of the defining identities at one x-degree,
/// translated into operator combinations (extended alphabet).
fn instance_rows(
    variety: Variety,
    onevar: &OneVarTables,
    degree: u32,
    exhaustive: bool,
) -> Result<Vec<OpPoly>, EngineError> {
    let pool: Vec<Monomial> = if exhaustive {
        (1..=6).flat_map(Monomial::enumerate_pure_x).collect()
    } else {
        (1..=6).map(basis_monomial).collect()
    };
    let y = Polynomial::monomial(Monomial::y());
    let mut rows = Vec::new();
    for p0 in variety.defining_identities() {
        let n0 = p0.degree();
        let target = Polynomial::monomial(p0);
        for r in 1..=n0 {
            let total = degree as i64 - n0 as i64 + r as i64;
            let pure_args = r - 1;
            if total < pure_args as i64 {
                continue;
            }
            for combo in multisets_with_degree(&pool, pure_args, total as u32) {
                let mut args = vec![y.clone()];
                args.extend(combo.iter().map(|m| Polynomial::monomial(m.clone())));
                let inst = delta(&args, &target, Generator::X);
                if inst.is_zero() {
                    continue;
                }
                let row = translate(&inst, onevar)?;
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
    }
    Ok(rows)
}

/// Multisets of `count` monomials from `pool` with degrees summing to
/// `total`, indices non-decreasing.
fn multisets_with_degree(pool: &[Monomial], count: u32, total: u32) -> Vec<Vec<Monomial>> {
    let mut out = Vec::new();
    fn go(
        pool: &[Monomial],
        start: usize,
        left: u32,
        total: u32,
        current: &mut Vec<Monomial>,
        out: &mut Vec<Vec<Monomial>>,
    ) {
        if left == 0 {
            if total == 0 {
                out.push(current.clone());
            }
            return;
        }
        for (i, m) in pool.iter().enumerate().skip(start) {
            let d = m.degree();
            if d > total || total - d < left - 1 {
                continue;
            }
            current.push(m.clone());
            go(pool, i, left - 1, total - d, current, out);
            current.pop();
        }
    }
    go(pool, 0, count, total, &mut Vec::new(), &mut out);
    out
}

/// Derives the elimination rules for the extended letters: bootstrap tables
/// over the full alphabet at x-degrees 3 through 6, from which the
/// single-letter pivots `T3..T6` are read off. Runs over the base variety;
/// subvarieties inherit the rules.
pub fn derive_letter_eliminations(
    onevar_nil4: &OneVarTables,
) -> Result<BTreeMap<Letter, OpPoly>, EngineError> {
    let mut per_degree: Vec<RowReducer> = Vec::new();
    for degree in 3..=6u32 {
        let mut reducer = RowReducer::default();
        // Liftings of the lower bootstrap rules by extended words on both
        // sides, then the fresh instances of this degree.
        for (i, lower) in per_degree.iter().enumerate() {
            let lower_degree = 3 + i as u32;
            for (pivot, tail) in &lower.rules {
                let rule = OpPoly::word(pivot.clone()).sub(tail);
                for split in 0..=(degree - lower_degree) {
                    for left in enumerate_extended(split) {
                        for right in enumerate_extended(degree - lower_degree - split) {
                            reducer.insert(&rule.sandwich(&left, &right));
                        }
                    }
                }
            }
        }
        for row in instance_rows(Variety::Nil4, onevar_nil4, degree, false)? {
            reducer.insert(&row);
        }
        reducer.back_substitute();
        per_degree.push(reducer);
    }

    let mut rules = BTreeMap::new();
    for letter in [Letter::T3, Letter::T4, Letter::T5, Letter::T6] {
        let reducer = &per_degree[(letter.x_degree() - 3) as usize];
        let pivot = OpWord::single(letter);
        let tail = reducer
            .rules
            .get(&pivot)
            .ok_or_else(|| EngineError::EliminationImpossible(pivot.to_string()))?;
        if !tail.is_pure_lu() {
            return Err(EngineError::ImpureEliminationTail(pivot.to_string()));
        }
        rules.insert(letter, tail.clone());
    }
    Ok(rules)
}

/// Substitutes every extended letter by its elimination tail until the
/// combination is over `{L, U}` only.
pub fn eliminate_letters(p: &OpPoly, rules: &BTreeMap<Letter, OpPoly>) -> OpPoly {
    let mut work = p.clone();
    loop {
        let hit = work.terms().find_map(|(w, c)| {
            w.letters()
                .iter()
                .position(|l| rules.contains_key(l))
                .map(|i| (w.clone(), c.clone(), i))
        });
        let Some((word, coeff, idx)) = hit else {
            return work;
        };
        work.add_term(word.clone(), -&coeff);
        let letters = word.letters();
        let prefix = OpWord::from_letters(letters[..idx].iter().copied());
        let suffix = OpWord::from_letters(letters[idx + 1..].iter().copied());
        let replacement = rules[&letters[idx]].sandwich(&prefix, &suffix);
        work = work.add(&replacement.scale(&coeff));
    }
}

/// The derivation engine for one variety: one-variable tables, the letter
/// eliminations, and the reduction tables built so far.
#[derive(Debug)]
pub struct VarietyEngine {
    variety: Variety,
    exhaustive: bool,
    onevar: OneVarTables,
    letter_rules: BTreeMap<Letter, OpPoly>,
    tables: Vec<NormalFormTable>,
    denominators: BTreeSet<BigUint>,
}

impl VarietyEngine {
    pub fn new(variety: Variety) -> Result<Self, EngineError> {
        Self::with_mode(variety, false)
    }

    pub fn with_mode(variety: Variety, exhaustive: bool) -> Result<Self, EngineError> {
        // Chain co-factors reach the full operator degree, so the
        // one-variable tables must cover at least the variety cap.
        let onevar_max = if variety == Variety::Nil4 {
            crate::onevar::MAX_DEGREE
        } else {
            crate::onevar::MAX_DEGREE.min(variety.operator_degree_cap() + 2)
        };
        let onevar = OneVarTables::build_with_mode(variety, onevar_max, exhaustive)?;
        let letter_rules = if variety == Variety::Nil4 {
            derive_letter_eliminations(&onevar)?
        } else {
            // The eliminations are a base-variety fact; subvarieties
            // inherit them.
            let nil4_tables = OneVarTables::build(Variety::Nil4, 9)?;
            derive_letter_eliminations(&nil4_tables)?
        };
        let mut denominators = onevar.denominators();
        for tail in letter_rules.values() {
            for (_, c) in tail.terms() {
                if !c.is_integer() {
                    denominators.insert(c.denom().magnitude().clone());
                }
            }
        }
        Ok(VarietyEngine {
            variety,
            exhaustive,
            onevar,
            letter_rules,
            tables: Vec::new(),
            denominators,
        })
    }

    pub fn variety(&self) -> Variety {
        self.variety
    }

    pub fn built_degree(&self) -> u32 {
        self.tables.len() as u32
    }

    pub fn onevar(&self) -> &OneVarTables {
        &self.onevar
    }

    /// The derived elimination of an extended letter over `{L, U}`.
    pub fn letter_elimination(&self, letter: Letter) -> Option<&OpPoly> {
        self.letter_rules.get(&letter)
    }

    /// Expands extended letters through the derived eliminations.
    pub fn expand_letters(&self, p: &OpPoly) -> OpPoly {
        eliminate_letters(p, &self.letter_rules)
    }

    /// Builds reduction tables for every degree up to `degree`.
    pub fn build_to(&mut self, degree: u32) -> Result<(), EngineError> {
        let cap = self.variety.operator_degree_cap();
        if degree > cap {
            return Err(EngineError::DegreeAboveCap(degree, cap));
        }
        while self.built_degree() < degree {
            let d = self.built_degree() + 1;
            let table = self.build_degree(d)?;
            self.tables.push(table);
        }
        Ok(())
    }

    /// The raw relation rows of one degree: liftings of every lower-degree
    /// rule by all word pairs, plus translated linearization instances with
    /// extended letters eliminated.
    pub fn generate_relations(&self, degree: u32) -> Result<Vec<OpPoly>, EngineError> {
        let mut rows = Vec::new();
        for lower in &self.tables {
            if lower.degree >= degree {
                break;
            }
            let gap = degree - lower.degree;
            for rule in lower.relation_rows() {
                for split in 0..=gap {
                    for left in OpWord::enumerate_lu(split) {
                        for right in OpWord::enumerate_lu(gap - split) {
                            rows.push(rule.sandwich(&left, &right));
                        }
                    }
                }
            }
        }
        for row in instance_rows(self.variety, &self.onevar, degree, self.exhaustive)? {
            let pure = eliminate_letters(&row, &self.letter_rules);
            if !pure.is_zero() {
                rows.push(pure);
            }
        }
        Ok(rows)
    }

    fn build_degree(&mut self, degree: u32) -> Result<NormalFormTable, EngineError> {
        let rows = self.generate_relations(degree)?;
        let mut reducer = RowReducer::default();
        for row in &rows {
            reducer.insert(row);
        }
        reducer.back_substitute();
        self.denominators.extend(reducer.denominators());

        let words = OpWord::enumerate_lu(degree);
        let canonical = words
            .iter()
            .filter(|w| !reducer.rules.contains_key(*w))
            .cloned()
            .collect();
        Ok(NormalFormTable {
            variety: self.variety,
            degree,
            words,
            rules: reducer.rules,
            canonical,
        })
    }

    pub fn table(&self, degree: u32) -> Option<&NormalFormTable> {
        if degree == 0 || degree > self.built_degree() {
            return None;
        }
        Some(&self.tables[(degree - 1) as usize])
    }

    pub fn tables(&self) -> &[NormalFormTable] {
        &self.tables
    }

    /// Whether every word of the two highest built degrees vanishes; words
    /// of any higher degree then vanish too, since each has a prefix in one
    /// of those two degrees.
    fn closed_above(&self) -> bool {
        let built = self.built_degree();
        built >= 2
            && self.tables[(built - 1) as usize].canonical.is_empty()
            && self.tables[(built - 2) as usize].canonical.is_empty()
    }

    pub fn reduce_word(&self, word: &OpWord) -> Result<OpPoly, EngineError> {
        let d = word.x_degree();
        if d == 0 {
            return Ok(OpPoly::word(word.clone()));
        }
        match self.table(d) {
            Some(table) => Ok(match table.rules.get(word) {
                Some(tail) => tail.clone(),
                None => OpPoly::word(word.clone()),
            }),
            None if self.closed_above() => Ok(OpPoly::zero()),
            None => Err(EngineError::DegreeNotBuilt {
                degree: d,
                built: self.built_degree(),
            }),
        }
    }

    /// Canonical representative of an operator combination: linear,
    /// idempotent, zero exactly on the derived relation space.
    pub fn reduce(&self, p: &OpPoly) -> Result<OpPoly, EngineError> {
        let mut out = OpPoly::zero();
        for (w, c) in p.terms() {
            out = out.add(&self.reduce_word(w)?.scale(c));
        }
        Ok(out)
    }

    /// Membership of `p` in the derived relation space.
    pub fn is_relation(&self, p: &OpPoly) -> Result<bool, EngineError> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// Quotient dimension per degree `1..=max_degree`. Degrees beyond the
    /// built tables are zero once the vanishing closure applies.
    pub fn quotient_dimensions(&self, max_degree: u32) -> Result<Vec<usize>, EngineError> {
        (1..=max_degree)
            .map(|d| match self.table(d) {
                Some(t) => Ok(t.quotient_dimension()),
                None if self.closed_above() => Ok(0),
                None => Err(EngineError::DegreeNotBuilt {
                    degree: d,
                    built: self.built_degree(),
                }),
            })
            .collect()
    }

    /// Primes dividing any denominator recorded while pivoting or in any
    /// rule tail, including the letter eliminations.
    pub fn denominator_primes(&self) -> BTreeSet<u64> {
        let mut primes = BTreeSet::new();
        for d in &self.denominators {
            for p in prime_factors(d) {
                primes.insert(u64::try_from(&p).expect("audit prime fits in u64"));
            }
        }
        primes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalgebra::word::{parse_op_poly, parse_word};
    use std::sync::OnceLock;

    fn nil4_to_7() -> &'static VarietyEngine {
        static ENGINE: OnceLock<VarietyEngine> = OnceLock::new();
        ENGINE.get_or_init(|| {
            let mut e = VarietyEngine::new(Variety::Nil4).unwrap();
            e.build_to(7).unwrap();
            e
        })
    }

    #[test]
    fn letter_eliminations_match_the_known_rules() {
        let e = nil4_to_7();
        let expected = [
            (Letter::T3, "-LU - 2L^3"),
            (Letter::T4, "-U^2 - 2UL^2 - 2LUL + 4L^4"),
            (Letter::T5, "-LU^2 - 2LUL^2 - 2L^2UL - 4L^3U - 12L^5"),
            (Letter::T6, "2L^2U^2 + 4L^2UL^2 + 4L^4U + 8L^6"),
        ];
        for (letter, tail) in expected {
            assert_eq!(
                e.letter_elimination(letter).unwrap(),
                &parse_op_poly(tail).unwrap(),
                "elimination of {letter:?}"
            );
        }
    }

    #[test]
    fn low_degrees_have_no_relations() {
        let e = nil4_to_7();
        for d in 1..=4u32 {
            let t = e.table(d).unwrap();
            assert!(t.rules.is_empty(), "degree {d} should be relation-free");
            assert_eq!(t.quotient_dimension(), t.words.len());
        }
    }

    #[test]
    fn degree_five_table_matches_the_known_rule() {
        let e = nil4_to_7();
        let t = e.table(5).unwrap();
        assert_eq!(t.rules.len(), 1);
        let tail = &t.rules[&parse_word("U^2L").unwrap()];
        assert_eq!(
            tail,
            &parse_op_poly("-LU^2 + 2UL^3 - 2L^3U - 8L^5").unwrap()
        );
        let canonical: Vec<String> = t.canonical.iter().map(|w| w.to_string()).collect();
        assert_eq!(
            canonical,
            vec!["ULU", "UL^3", "LU^2", "LUL^2", "L^2UL", "L^3U", "L^5"]
        );
    }

    #[test]
    fn degree_six_pivots_and_canonical_words() {
        let e = nil4_to_7();
        let t = e.table(6).unwrap();
        let pivots: Vec<String> = t.rules.keys().rev().map(|w| w.to_string()).collect();
        assert_eq!(pivots, vec!["U^3", "U^2L^2", "ULUL", "LU^2L"]);
        let canonical: Vec<String> = t.canonical.iter().map(|w| w.to_string()).collect();
        assert_eq!(
            canonical,
            vec!["UL^2U", "UL^4", "LULU", "LUL^3", "L^2U^2", "L^2UL^2", "L^3UL", "L^4U", "L^6"]
        );
    }

    #[test]
    fn reduction_is_linear_and_idempotent() {
        let e = nil4_to_7();
        let p = parse_op_poly("U^2L + 3ULU - 1/2L^5").unwrap();
        let q = parse_op_poly("LU^2 - UL^3").unwrap();
        let pr = e.reduce(&p).unwrap();
        let qr = e.reduce(&q).unwrap();
        let sum = e.reduce(&p.add(&q)).unwrap();
        assert_eq!(sum, pr.add(&qr));
        assert_eq!(e.reduce(&pr).unwrap(), pr);
        assert_eq!(
            e.reduce(&parse_op_poly("L").unwrap()).unwrap().to_string(),
            "L"
        );
    }

    #[test]
    fn lifting_closure_for_the_degree_five_rule() {
        let e = nil4_to_7();
        let rule = parse_op_poly("U^2L + LU^2 - 2UL^3 + 2L^3U + 8L^5").unwrap();
        for letter in ["L", "U"] {
            let l = parse_word(letter).unwrap();
            assert!(e.is_relation(&rule.sandwich(&l, &OpWord::empty())).unwrap());
            assert!(e.is_relation(&rule.sandwich(&OpWord::empty(), &l)).unwrap());
        }
    }

    #[test]
    fn derived_degree_seven_identities() {
        let e = nil4_to_7();
        for s in [
            // The three degree-7 reductions in the derivation chain.
            "L^3U^2 + 2L^3UL^2 + L^4UL + 5L^5U + 20L^7",
            "UL^5 + LUL^4 - 1/2L^2UL^3 - 3/4L^4UL - 3/4L^5U - 8L^7",
            "ULU^2 - 2UL^2UL + 2UL^3U + 2LUL^2U + 2L^2ULU + 8LUL^4 + 2L^2UL^3 + 3L^4UL - L^5U",
        ] {
            let p = parse_op_poly(s).unwrap();
            assert!(e.is_relation(&p).unwrap(), "not a relation: {s}");
        }
    }

    #[test]
    fn exhaustive_generation_agrees_at_low_degree() {
        let mut a = VarietyEngine::new(Variety::Nil4).unwrap();
        a.build_to(6).unwrap();
        let mut b = VarietyEngine::with_mode(Variety::Nil4, true).unwrap();
        b.build_to(6).unwrap();
        for d in 1..=6 {
            assert_eq!(
                a.table(d).unwrap().canonical,
                b.table(d).unwrap().canonical,
                "degree {d}"
            );
            assert_eq!(a.table(d).unwrap().rules, b.table(d).unwrap().rules);
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        let mut e = VarietyEngine::new(Variety::Nil4B5).unwrap();
        assert!(matches!(
            e.build_to(9),
            Err(EngineError::DegreeAboveCap(9, 8))
        ));
    }

    #[test]
    fn reducing_beyond_built_tables_is_an_error_until_closure() {
        let mut e = VarietyEngine::new(Variety::Nil4).unwrap();
        e.build_to(3).unwrap();
        let w = parse_word("U^2L").unwrap();
        assert!(matches!(
            e.reduce_word(&w),
            Err(EngineError::DegreeNotBuilt {
                degree: 5,
                built: 3
            })
        ));
    }
}
