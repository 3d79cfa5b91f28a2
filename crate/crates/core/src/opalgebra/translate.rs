//! Conversion between y-linear magma polynomials and operator combinations.
//!
//! A monomial of y-degree 1 decomposes uniquely as a chain
//! `q_k(q_{k-1}(...(q_1 y)...))` of multiplications by the pure-x co-factors
//! along the root-to-y path. Translation replaces each co-factor by its
//! one-variable normal form and maps the basis monomials `b1..b6` to the
//! letters `L, U, T3..T6`, expanding multilinearly. Co-factors that are
//! consequences of the variety's identities therefore kill their terms.

use crate::magma::{Monomial, Polynomial};
use crate::onevar::{basis_index, basis_monomial, OneVarTables};
use crate::opalgebra::word::{Letter, OpPoly, OpWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TranslateError {
    #[error("polynomial is not y-linear: {0}")]
    NotYLinear(Monomial),
    #[error("co-factor degree {0} exceeds the one-variable tables")]
    CoFactorTooDeep(u32),
    #[error("normal form of a co-factor left the basis list: {0}")]
    NonBasisSurvivor(Monomial),
}

/// Pure-x co-factors along the root-to-y path, outermost first, so the
/// resulting word reads left to right. A bare `y` has an empty chain.
pub fn cofactor_chain(m: &Monomial) -> Result<Vec<Monomial>, TranslateError> {
    if m.y_degree() != 1 {
        return Err(TranslateError::NotYLinear(m.clone()));
    }
    let mut chain = Vec::new();
    let mut node = m;
    loop {
        match node.children() {
            None => return Ok(chain), // reached the y leaf
            Some((a, b)) => {
                let (cofactor, next) = if a.y_degree() == 1 { (b, a) } else { (a, b) };
                if cofactor.y_degree() != 0 {
                    return Err(TranslateError::NotYLinear(m.clone()));
                }
                chain.push(cofactor.clone());
                node = next;
            }
        }
    }
}

/// Translates a y-linear polynomial into an operator combination over the
/// extended alphabet, normalizing every co-factor through `tables`.
pub fn translate(f: &Polynomial, tables: &OneVarTables) -> Result<OpPoly, TranslateError> {
    let mut out = OpPoly::zero();
    for (m, c) in f.terms() {
        let chain = cofactor_chain(m)?;
        // Normal form of each co-factor, then the multilinear expansion of
        // the chain into words.
        let mut expansions = Vec::with_capacity(chain.len());
        for q in &chain {
            let nf = tables
                .normal_form_monomial(q)
                .map_err(|_| TranslateError::CoFactorTooDeep(q.degree()))?;
            let mut letters = Vec::new();
            for (b, coeff) in nf.terms() {
                let idx =
                    basis_index(b).ok_or_else(|| TranslateError::NonBasisSurvivor(b.clone()))?;
                letters.push((Letter::for_basis_degree(idx), coeff.clone()));
            }
            expansions.push(letters);
        }
        expand_chain(&expansions, c, &mut out);
    }
    Ok(out)
}

fn expand_chain(
    expansions: &[Vec<(Letter, crate::linalg::Rat)>],
    scale: &crate::linalg::Rat,
    out: &mut OpPoly,
) {
    if expansions.iter().any(Vec::is_empty) {
        return; // some co-factor is a consequence
    }
    let mut choice = vec![0usize; expansions.len()];
    loop {
        let mut coeff = scale.clone();
        let letters: Vec<Letter> = choice
            .iter()
            .zip(expansions)
            .map(|(&i, opts)| {
                coeff *= &opts[i].1;
                opts[i].0
            })
            .collect();
        out.add_term(OpWord::from_letters(letters), coeff);
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return;
            }
            choice[pos] += 1;
            if choice[pos] < expansions[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Applies an operator combination to `y` symbolically, expanding each
/// letter back into multiplication by its basis monomial. Inverse direction
/// of [`translate`] and the oracle used to check it.
pub fn apply_to_y(op: &OpPoly) -> Polynomial {
    let mut out = Polynomial::zero();
    for (w, c) in op.terms() {
        let mut acc = Monomial::y();
        for letter in w.letters().iter().rev() {
            acc = Monomial::product(basis_monomial(letter.x_degree()), acc);
        }
        out.add_term(acc, c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::onevar::{OneVarTables, Variety};
    use crate::opalgebra::word::parse_op_poly;
    use crate::parse::parse_polynomial;

    fn tables() -> OneVarTables {
        OneVarTables::build(Variety::Nil4, 9).unwrap()
    }

    fn tr(s: &str) -> OpPoly {
        translate(&parse_polynomial(s).unwrap(), &tables()).unwrap()
    }

    #[test]
    fn plain_chains() {
        assert_eq!(tr("x(x(x(y)))"), parse_op_poly("L^3").unwrap());
        assert_eq!(tr("x^2(x^2(x(y)))"), parse_op_poly("U^2L").unwrap());
        assert_eq!(tr("y"), OpPoly::word(OpWord::empty()));
    }

    #[test]
    fn extended_letters_from_basis_cofactors() {
        let t3lt3 = OpWord::from_letters([Letter::T3, Letter::L, Letter::T3]);
        assert_eq!(tr("x^3(x(x^3(y)))"), OpPoly::word(t3lt3));
    }

    #[test]
    fn cofactors_reduce_through_normal_forms() {
        // (x^2)(x^3) normalizes to -b5, so the chain becomes -T5 L.
        let expected = OpPoly::term(
            OpWord::from_letters([Letter::T5, Letter::L]),
            crate::linalg::Rat::from_int(-1),
        );
        assert_eq!(tr("((x^2)(x^3))(x(y))"), expected);
        // A vanishing co-factor kills the term.
        assert_eq!(tr("x^4(x(y))"), OpPoly::zero());
    }

    #[test]
    fn translation_is_linear() {
        let a = tr("x(x(y)) + x^2(y)");
        let b = tr("x(x(y))").add(&tr("x^2(y)"));
        assert_eq!(a, b);
    }

    #[test]
    fn non_y_linear_is_rejected() {
        let t = tables();
        let p = parse_polynomial("x^2").unwrap();
        assert!(translate(&p, &t).is_err());
        let p = parse_polynomial("y(y(x))").unwrap();
        assert!(translate(&p, &t).is_err());
    }

    #[test]
    fn apply_inverts_translate_on_basis_chains() {
        let t = tables();
        for s in ["x(x(x(y)))", "x^2(x^2(x(y)))", "x^3(x(x^3(y)))"] {
            let p = parse_polynomial(s).unwrap();
            let round = apply_to_y(&translate(&p, &t).unwrap());
            assert_eq!(round, p, "via {s}");
        }
    }
}
