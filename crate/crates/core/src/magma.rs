//! The free commutative nonassociative algebra on two generators.
//!
//! Monomials are binary trees over `{x, y}` taken up to flips at internal
//! nodes. We store one canonical representative per class: at every internal
//! node the children are ordered by a fixed total order (total degree first,
//! then structurally, with `x < y <` internal nodes). Polynomials are finite
//! rational-linear combinations of canonical monomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    X,
    Y,
}

impl Generator {
    pub fn symbol(self) -> char {
        match self {
            Generator::X => 'x',
            Generator::Y => 'y',
        }
    }
}

/// A binary product tree that has not been canonicalized. Input form for
/// [`Monomial::canonicalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawTree {
    Leaf(Generator),
    Node(Box<RawTree>, Box<RawTree>),
}

/// A canonical commutative monomial.
///
/// The invariant (children of every node in canonical order) is maintained by
/// the constructors; the inner representation is not exposed mutably.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Node);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Node {
    Leaf(Generator),
    Pair(Box<Monomial>, Box<Monomial>),
}

impl Monomial {
    pub fn generator(g: Generator) -> Self {
        Monomial(Node::Leaf(g))
    }

    pub fn x() -> Self {
        Self::generator(Generator::X)
    }

    pub fn y() -> Self {
        Self::generator(Generator::Y)
    }

    /// Commutative product of two monomials; the children are stored in
    /// canonical order, so `product(a, b) == product(b, a)`.
    pub fn product(a: Monomial, b: Monomial) -> Self {
        if a <= b {
            Monomial(Node::Pair(Box::new(a), Box::new(b)))
        } else {
            Monomial(Node::Pair(Box::new(b), Box::new(a)))
        }
    }

    /// Canonical form of an arbitrary product tree. Trees equal up to flips
    /// at internal nodes all map to the same monomial.
    pub fn canonicalize(tree: &RawTree) -> Self {
        match tree {
            RawTree::Leaf(g) => Self::generator(*g),
            RawTree::Node(l, r) => Self::product(Self::canonicalize(l), Self::canonicalize(r)),
        }
    }

    /// The principal power `g^n`: `g^1 = g`, `g^(i+1) = g * g^i`.
    pub fn principal_power(g: Generator, n: u32) -> Self {
        assert!(n >= 1, "principal powers start at 1");
        Self::power(&Self::generator(g), n)
    }

    /// Principal power of an arbitrary monomial, `m^(i+1) = m * m^i`.
    pub fn power(m: &Monomial, n: u32) -> Self {
        assert!(n >= 1, "principal powers start at 1");
        let mut acc = m.clone();
        for _ in 1..n {
            acc = Self::product(m.clone(), acc);
        }
        acc
    }

    pub fn as_generator(&self) -> Option<Generator> {
        match &self.0 {
            Node::Leaf(g) => Some(*g),
            Node::Pair(..) => None,
        }
    }

    pub fn children(&self) -> Option<(&Monomial, &Monomial)> {
        match &self.0 {
            Node::Leaf(_) => None,
            Node::Pair(a, b) => Some((a, b)),
        }
    }

    pub fn degree(&self) -> u32 {
        match &self.0 {
            Node::Leaf(_) => 1,
            Node::Pair(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn degree_in(&self, g: Generator) -> u32 {
        match &self.0 {
            Node::Leaf(h) => (*h == g) as u32,
            Node::Pair(a, b) => a.degree_in(g) + b.degree_in(g),
        }
    }

    pub fn x_degree(&self) -> u32 {
        self.degree_in(Generator::X)
    }

    pub fn y_degree(&self) -> u32 {
        self.degree_in(Generator::Y)
    }

    /// If this is `g^n` for a generator `g`, returns `(g, n)`.
    pub fn as_principal_power(&self) -> Option<(Generator, u32)> {
        match &self.0 {
            Node::Leaf(g) => Some((*g, 1)),
            Node::Pair(a, b) => {
                let g = a.as_generator()?;
                let (h, n) = b.as_principal_power()?;
                (g == h).then_some((g, n + 1))
            }
        }
    }

    /// Enumerates all canonical pure-`x` monomials of the given degree.
    /// Counts per degree are the Wedderburn-Etherington numbers.
    pub fn enumerate_pure_x(degree: u32) -> Vec<Monomial> {
        let mut by_degree: Vec<Vec<Monomial>> = vec![Vec::new(), vec![Monomial::x()]];
        for d in 2..=degree {
            let mut level = Vec::new();
            for i in 1..=d / 2 {
                for a in &by_degree[i as usize] {
                    for b in &by_degree[(d - i) as usize] {
                        if i < d - i || a <= b {
                            level.push(Monomial::product(a.clone(), b.clone()));
                        }
                    }
                }
            }
            level.sort();
            level.dedup();
            by_degree.push(level);
        }
        by_degree.swap_remove(degree as usize)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Total degree first, then leaves before pairs, `x < y`, and pairs
    /// lexicographically by children.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| match (&self.0, &other.0) {
                (Node::Leaf(a), Node::Leaf(b)) => a.cmp(b),
                (Node::Leaf(_), Node::Pair(..)) => Ordering::Less,
                (Node::Pair(..), Node::Leaf(_)) => Ordering::Greater,
                (Node::Pair(a1, b1), Node::Pair(a2, b2)) => a1.cmp(a2).then_with(|| b1.cmp(b2)),
            })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((g, n)) = self.as_principal_power() {
            return if n == 1 {
                write!(f, "{}", g.symbol())
            } else {
                write!(f, "{}^{}", g.symbol(), n)
            };
        }
        let (a, b) = self.children().expect("non-power monomial is a pair");
        if let Some(g) = a.as_generator() {
            write!(f, "{}({})", g.symbol(), b)
        } else {
            write!(f, "({})({})", a, b)
        }
    }
}

/// A finite rational-linear combination of canonical monomials. No zero
/// coefficients are stored; two polynomials are equal iff their maps are.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Bilinear commutative product.
    pub fn multiply(&self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                out.add_term(Monomial::product(m1.clone(), m2.clone()), c1 * c2);
            }
        }
        out
    }

    /// Replaces every leaf equal to `var` in every monomial by `value`,
    /// expanding multilinearly. Substituting a sum enumerates all leaf
    /// assignments, which is exactly the product expansion.
    pub fn substitute(&self, var: Generator, value: &Polynomial) -> Polynomial {
        fn subst_mono(m: &Monomial, var: Generator, value: &Polynomial) -> Polynomial {
            match m.as_generator() {
                Some(g) if g == var => value.clone(),
                Some(_) => Polynomial::monomial(m.clone()),
                None => {
                    let (a, b) = m.children().unwrap();
                    subst_mono(a, var, value).multiply(&subst_mono(b, var, value))
                }
            }
        }
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            out = out.add(&subst_mono(m, var, value).scale(c));
        }
        out
    }

    /// All monomials share a single total degree, or the polynomial is zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_y_linear(&self) -> bool {
        self.terms.keys().all(|m| m.y_degree() == 1)
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending canonical order; coefficients in lowest terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() {
                write!(f, "{}", mag)?;
            }
            write!(f, "{}", m)?;
        }
        Ok(())
    }
}
