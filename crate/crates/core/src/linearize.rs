//! The operator linearization of identities.
//!
//! For a monomial with `k` leaves equal to the distinguished generator,
//! `delta(&[a1, ..., ar], p, var)` sums, over every injective assignment of
//! the `r` arguments to `r` of those `k` leaves, the monomial with the
//! assigned leaves replaced. It is zero when `k < r`, symmetric in the
//! arguments, and multilinear both in each argument and in the target.
//!
//! `delta_repeated(a, r, p, var)` is the divided form `delta([a; r]) / r!`:
//! the part of `p` with the substitution `var -> var + a` expanded that is
//! homogeneous of degree `r` in `a`. With that normalization,
//! `p(x + y) = p(x) + sum_j delta_repeated(y, j, p, x)` holds exactly.

use crate::linalg::Rat;
use crate::magma::{Generator, Monomial, Polynomial};

/// Positions of `var` leaves in a monomial, counted left to right in the
/// stored (canonical) tree shape.
fn count_var_leaves(m: &Monomial, var: Generator) -> usize {
    m.degree_in(var) as usize
}

/// Rebuilds `m` with the leaf replacements given by `assignment`, a map from
/// `var`-leaf index (left to right) to the replacing monomial. Linearity in
/// the replacements is handled by the callers, which pass monomials only.
fn replace_leaves(
    m: &Monomial,
    var: Generator,
    assignment: &[(usize, &Monomial)],
    next_index: &mut usize,
) -> Monomial {
    match m.as_generator() {
        Some(g) if g == var => {
            let idx = *next_index;
            *next_index += 1;
            for (i, repl) in assignment {
                if *i == idx {
                    return (*repl).clone();
                }
            }
            m.clone()
        }
        Some(_) => m.clone(),
        None => {
            let (a, b) = m.children().unwrap();
            let left = replace_leaves(a, var, assignment, next_index);
            let right = replace_leaves(b, var, assignment, next_index);
            Monomial::product(left, right)
        }
    }
}

/// All ways to pick an ordered sequence of `r` distinct elements from
/// `0..k`, visited via a callback to avoid materializing the whole set.
fn for_each_injection(k: usize, r: usize, mut f: impl FnMut(&[usize])) {
    fn go(
        k: usize,
        r: usize,
        used: &mut Vec<bool>,
        seq: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if seq.len() == r {
            f(seq);
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                seq.push(i);
                go(k, r, used, seq, f);
                seq.pop();
                used[i] = false;
            }
        }
    }
    go(k, r, &mut vec![false; k], &mut Vec::new(), &mut f);
}

fn delta_monomial_args(
    args: &[&Monomial],
    target: &Monomial,
    var: Generator,
    coeff: &Rat,
) -> Polynomial {
    let k = count_var_leaves(target, var);
    let r = args.len();
    let mut out = Polynomial::zero();
    if k < r {
        return out;
    }
    for_each_injection(k, r, |positions| {
        let assignment: Vec<(usize, &Monomial)> = positions
            .iter()
            .copied()
            .zip(args.iter().copied())
            .collect();
        let mut next = 0;
        let replaced = replace_leaves(target, var, &assignment, &mut next);
        out.add_term(replaced, coeff.clone());
    });
    out
}

/// The linearization operator with polynomial arguments and target, expanded
/// multilinearly. The argument list must be nonempty (an empty list would be
/// the identity map, which no caller wants implicitly).
pub fn delta(args: &[Polynomial], target: &Polynomial, var: Generator) -> Polynomial {
    assert!(!args.is_empty(), "delta needs at least one argument");
    let mut out = Polynomial::zero();
    // Cartesian product over the terms of each argument.
    let term_lists: Vec<Vec<(&Monomial, &Rat)>> =
        args.iter().map(|a| a.terms().collect()).collect();
    if term_lists.iter().any(|l| l.is_empty()) {
        return out; // some argument is the zero polynomial
    }
    let mut choice = vec![0usize; term_lists.len()];
    loop {
        let mut coeff = Rat::one();
        let arg_monos: Vec<&Monomial> = choice
            .iter()
            .zip(&term_lists)
            .map(|(&i, terms)| {
                coeff *= terms[i].1;
                terms[i].0
            })
            .collect();
        for (m, c) in target.terms() {
            let part = delta_monomial_args(&arg_monos, m, var, &(&coeff * c));
            out = out.add(&part);
        }
        // Advance the multi-index.
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return out;
            }
            choice[pos] += 1;
            if choice[pos] < term_lists[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// `delta` with `r` copies of one argument, divided by `r!` so that repeated
/// orderings of the identical arguments are counted once. This is the form
/// that satisfies the binomial expansion exactly.
pub fn delta_repeated(
    alpha: &Polynomial,
    r: u32,
    target: &Polynomial,
    var: Generator,
) -> Polynomial {
    assert!(r >= 1);
    let args = vec![alpha.clone(); r as usize];
    let mut factorial = Rat::one();
    for i in 2..=r as i64 {
        factorial *= &Rat::from_int(i);
    }
    delta(&args, target, var).scale(&factorial.recip().expect("factorial is nonzero"))
}
