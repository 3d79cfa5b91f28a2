//! Property tests for the algebraic core: canonical forms, parsing,
//! linearization, and exact row reduction.

use proptest::prelude::*;

use nilops_core::linalg::{in_row_space, Rat, RatMatrix};
use nilops_core::linearize::delta;
use nilops_core::magma::{Generator, Monomial, Polynomial, RawTree};
use nilops_core::parse::parse_polynomial;

fn raw_tree(max_depth: u32) -> impl Strategy<Value = RawTree> {
    let leaf = prop_oneof![
        Just(RawTree::Leaf(Generator::X)),
        Just(RawTree::Leaf(Generator::Y)),
    ];
    leaf.prop_recursive(max_depth, 64, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| RawTree::Node(Box::new(a), Box::new(b)))
    })
}

/// Random flips of internal nodes, preserving the commutativity class.
fn flip_some(tree: &RawTree, flips: &mut impl Iterator<Item = bool>) -> RawTree {
    match tree {
        RawTree::Leaf(g) => RawTree::Leaf(*g),
        RawTree::Node(a, b) => {
            let left = flip_some(a, flips);
            let right = flip_some(b, flips);
            if flips.next().unwrap_or(false) {
                RawTree::Node(Box::new(right), Box::new(left))
            } else {
                RawTree::Node(Box::new(left), Box::new(right))
            }
        }
    }
}

fn rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn monomial(max_depth: u32) -> impl Strategy<Value = Monomial> {
    raw_tree(max_depth).prop_map(|t| Monomial::canonicalize(&t))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((monomial(3), rat()), 0..6).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    })
}

proptest! {
    #[test]
    fn canonicalize_is_flip_invariant(tree in raw_tree(4), flips in proptest::collection::vec(any::<bool>(), 32)) {
        let canon = Monomial::canonicalize(&tree);
        let flipped = flip_some(&tree, &mut flips.into_iter());
        prop_assert_eq!(Monomial::canonicalize(&flipped), canon.clone());
        // Idempotence: rebuilding the canonical form changes nothing.
        let rebuilt = Monomial::canonicalize(&to_raw(&canon));
        prop_assert_eq!(rebuilt, canon);
    }

    #[test]
    fn parse_render_round_trips(p in polynomial()) {
        let rendered = p.to_string();
        let parsed = parse_polynomial(&rendered).unwrap();
        prop_assert_eq!(parsed, p, "through {}", rendered);
    }

    #[test]
    fn multiplication_is_commutative_and_degree_additive(p in polynomial(), q in polynomial()) {
        let pq = p.multiply(&q);
        prop_assert_eq!(pq.clone(), q.multiply(&p));
        prop_assert_eq!(p.multiply(&Polynomial::zero()), Polynomial::zero());
        if let (Some(a), Some(b), Some(c)) = (
            p.homogeneous_degree(),
            q.homogeneous_degree(),
            pq.homogeneous_degree(),
        ) {
            if !p.is_zero() && !q.is_zero() {
                prop_assert_eq!(a + b, c);
            }
        }
        // x- and y-degrees add on monomials.
        for (m1, _) in p.terms() {
            for (m2, _) in q.terms() {
                let prod = Monomial::product(m1.clone(), m2.clone());
                prop_assert_eq!(prod.x_degree(), m1.x_degree() + m2.x_degree());
                prop_assert_eq!(prod.y_degree(), m1.y_degree() + m2.y_degree());
            }
        }
    }

    #[test]
    fn delta_is_symmetric_and_multilinear(
        a in monomial(2),
        b in monomial(2),
        target in polynomial(),
    ) {
        let pa = Polynomial::monomial(a);
        let pb = Polynomial::monomial(b);
        let fwd = delta(&[pa.clone(), pb.clone()], &target, Generator::X);
        let rev = delta(&[pb.clone(), pa.clone()], &target, Generator::X);
        prop_assert_eq!(fwd.clone(), rev);

        let sum = pa.add(&pb);
        let joint = delta(&[sum, pb.clone()], &target, Generator::X);
        let split = delta(&[pa, pb.clone()], &target, Generator::X)
            .add(&delta(&[pb.clone(), pb], &target, Generator::X));
        prop_assert_eq!(joint, split);
    }

    #[test]
    fn delta_output_degrees_track_replacements(
        arg in monomial(2),
        target in monomial(3),
    ) {
        let k = target.x_degree();
        let out = delta(
            &[Polynomial::monomial(arg.clone())],
            &Polynomial::monomial(target.clone()),
            Generator::X,
        );
        if k == 0 {
            prop_assert!(out.is_zero());
        }
        for (m, _) in out.terms() {
            prop_assert_eq!(
                m.x_degree(),
                target.x_degree() - 1 + arg.x_degree()
            );
            prop_assert_eq!(
                m.y_degree(),
                target.y_degree() + arg.y_degree()
            );
        }
    }

    #[test]
    fn rref_is_idempotent_and_preserves_the_row_space(
        rows in proptest::collection::vec(proptest::collection::vec(rat(), 4), 1..5)
    ) {
        let m = RatMatrix::from_rows(rows).unwrap();
        let r = m.rref();
        let again = r.reduced.rref();
        prop_assert_eq!(&again.reduced, &r.reduced);
        prop_assert_eq!(again.rank, r.rank);
        // Mutual membership: every original row lies in the span of the
        // reduced rows and conversely.
        let reduced_basis = &r.reduced;
        for i in 0..m.rows() {
            prop_assert!(in_row_space(m.row(i), reduced_basis).unwrap().is_some());
        }
        for i in 0..r.rank {
            prop_assert!(in_row_space(reduced_basis.row(i), &m).unwrap().is_some());
        }
    }

    #[test]
    fn rational_arithmetic_is_exact(a in rat(), b in rat()) {
        prop_assert_eq!((a.clone() + b.clone()) - b.clone(), a.clone());
        if !b.is_zero() {
            let q = a.checked_div(&b).unwrap();
            prop_assert_eq!(q * b, a);
        }
    }
}

fn to_raw(m: &Monomial) -> RawTree {
    match m.as_generator() {
        Some(g) => RawTree::Leaf(g),
        None => {
            let (a, b) = m.children().unwrap();
            RawTree::Node(Box::new(to_raw(a)), Box::new(to_raw(b)))
        }
    }
}

mod reduction {
    use super::rat;
    use nilops_core::onevar::Variety;
    use nilops_core::opalgebra::{Letter, OpPoly, OpWord, VarietyEngine};
    use proptest::prelude::*;
    use std::sync::OnceLock;

    fn engine() -> &'static VarietyEngine {
        static ENGINE: OnceLock<VarietyEngine> = OnceLock::new();
        ENGINE.get_or_init(|| {
            let mut e = VarietyEngine::new(Variety::Nil4).expect("engine");
            e.build_to(8).expect("tables");
            e
        })
    }

    fn word() -> impl Strategy<Value = OpWord> {
        proptest::collection::vec(prop_oneof![Just(Letter::L), Just(Letter::U)], 0..6)
            .prop_filter_map("degree within built tables", |letters| {
                let w = OpWord::from_letters(letters);
                (w.x_degree() <= 8).then_some(w)
            })
    }

    fn op_poly() -> impl Strategy<Value = OpPoly> {
        proptest::collection::vec((word(), rat()), 0..6).prop_map(|terms| {
            let mut p = OpPoly::zero();
            for (w, c) in terms {
                p.add_term(w, c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn word_text_round_trips(w in word()) {
            let rendered = w.to_string();
            prop_assert_eq!(nilops_core::parse_word(&rendered).unwrap(), w);
        }

        #[test]
        fn reduce_is_linear_and_idempotent(p in op_poly(), q in op_poly(), k in rat()) {
            let e = engine();
            let pr = e.reduce(&p).unwrap();
            let qr = e.reduce(&q).unwrap();
            let combined = e.reduce(&p.scale(&k).add(&q)).unwrap();
            prop_assert_eq!(combined, pr.scale(&k).add(&qr));
            prop_assert_eq!(e.reduce(&pr).unwrap(), pr.clone());
        }

        #[test]
        fn lifted_rules_stay_relations(w in word()) {
            // Any rule, multiplied by a word on either side, reduces to zero.
            let e = engine();
            let rule = nilops_core::parse_op_poly("U^2L + LU^2 - 2UL^3 + 2L^3U + 8L^5").unwrap();
            if rule.homogeneous_degree().unwrap() + w.x_degree() <= 8 {
                prop_assert!(e.reduce(&rule.sandwich(&w, &OpWord::empty())).unwrap().is_zero());
                prop_assert!(e.reduce(&rule.sandwich(&OpWord::empty(), &w)).unwrap().is_zero());
            }
        }
    }
}
