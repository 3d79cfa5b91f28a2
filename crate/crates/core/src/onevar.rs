//! The one-generated quotient: normal forms of pure-`x` monomials modulo the
//! consequences of a variety's defining identities.
//!
//! Consequences are generated degree by degree: linearization instances of
//! the defining identities with pure-`x` monomial arguments, plus products of
//! any monomial with a lower-degree consequence. Each degree is closed by
//! exact row reduction over the canonical monomials of that degree ordered
//! descending, so normal forms rewrite large monomials into small ones. For
//! the base variety exactly one monomial survives at each degree 1 through 6
//! (`x`, `x^2`, `x^3`, `(x^2)(x^2)`, `x((x^2)(x^2))`, `x(x((x^2)(x^2)))`) and
//! nothing survives beyond.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::linalg::Rat;
use crate::linearize::delta;
use crate::magma::{Generator, Monomial, Polynomial};

/// Highest degree for which one-variable tables are built. Operator-relation
/// generation needs normal forms for every chain co-factor it encounters,
/// and those reach the full operator degree cap.
pub const MAX_DEGREE: u32 = 12;

/// The three supported varieties. Each adds one defining identity to the
/// previous: `x^4 = 0`, then `x((x^2)(x^2)) = 0`, then `x(x((x^2)(x^2))) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Variety {
    #[serde(rename = "nil4")]
    Nil4,
    #[serde(rename = "nil4-b5")]
    Nil4B5,
    #[serde(rename = "nil4-b6")]
    Nil4B6,
}

impl Variety {
    pub const ALL: [Variety; 3] = [Variety::Nil4, Variety::Nil4B5, Variety::Nil4B6];

    pub fn name(self) -> &'static str {
        match self {
            Variety::Nil4 => "nil4",
            Variety::Nil4B5 => "nil4-b5",
            Variety::Nil4B6 => "nil4-b6",
        }
    }

    pub fn from_name(s: &str) -> Option<Variety> {
        Variety::ALL.into_iter().find(|v| v.name() == s)
    }

    /// Defining identities, as monomials set to zero.
    pub fn defining_identities(self) -> Vec<Monomial> {
        let x4 = Monomial::principal_power(Generator::X, 4);
        match self {
            Variety::Nil4 => vec![x4],
            Variety::Nil4B5 => vec![x4, basis_monomial(5)],
            Variety::Nil4B6 => vec![x4, basis_monomial(6)],
        }
    }

    /// Highest operator-word degree the engine derives for this variety.
    /// Beyond the cap, every word vanishes because it has a vanishing prefix.
    pub fn operator_degree_cap(self) -> u32 {
        match self {
            Variety::Nil4 => 12,
            Variety::Nil4B5 => 8,
            Variety::Nil4B6 => 10,
        }
    }
}

impl std::fmt::Display for Variety {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The six one-variable basis monomials `b1..b6`:
/// `x`, `x^2`, `x^3`, `(x^2)(x^2)`, `x((x^2)(x^2))`, `x(x((x^2)(x^2)))`.
pub fn basis_monomial(index: u32) -> Monomial {
    assert!((1..=6).contains(&index));
    match index {
        1..=3 => Monomial::principal_power(Generator::X, index),
        4 => {
            let x2 = Monomial::principal_power(Generator::X, 2);
            Monomial::product(x2.clone(), x2)
        }
        _ => Monomial::product(Monomial::x(), basis_monomial(index - 1)),
    }
}

/// If `m` is one of `b1..b6`, its index.
pub fn basis_index(m: &Monomial) -> Option<u32> {
    let d = m.degree();
    (1..=6)
        .contains(&d)
        .then(|| basis_monomial(d))
        .filter(|b| b == m)
        .map(|_| d)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OneVarError {
    #[error("degree {0} outside the supported range 1..={MAX_DEGREE}")]
    DegreeOutOfRange(u32),
    #[error("monomial {0} is not pure in x")]
    NotPureX(Monomial),
}

/// One degree of the consequence filtration: the reduced relation rows and
/// the rewrite map they induce.
#[derive(Debug, Clone)]
struct DegreeTable {
    /// Canonical monomials of this degree, descending.
    monomials: Vec<Monomial>,
    /// Reduced basis of the consequence subspace, one polynomial per pivot.
    basis: Vec<Polynomial>,
    /// pivot monomial -> equivalent combination of surviving monomials.
    rewrite: BTreeMap<Monomial, Polynomial>,
    /// Monomials that survive in the quotient (non-pivots), descending.
    survivors: Vec<Monomial>,
}

/// Per-variety one-variable normal-form tables for degrees `1..=max_degree`.
#[derive(Debug, Clone)]
pub struct OneVarTables {
    variety: Variety,
    max_degree: u32,
    exhaustive: bool,
    degrees: Vec<DegreeTable>,
}

/// One exported normal-form entry; see [`OneVarTables::export`].
#[derive(Debug, Clone, Serialize)]
pub struct NormalFormEntry {
    pub degree: u32,
    pub monomial: String,
    pub normal_form: Vec<BasisTerm>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BasisTerm {
    pub basis: String,
    pub coeff: Rat,
}

impl OneVarTables {
    pub fn build(variety: Variety, max_degree: u32) -> Result<Self, OneVarError> {
        Self::build_with_mode(variety, max_degree, false)
    }

    /// `exhaustive` ranges linearization arguments over every canonical
    /// monomial instead of the six basis representatives. Same span, used as
    /// a cross-check.
    pub fn build_with_mode(
        variety: Variety,
        max_degree: u32,
        exhaustive: bool,
    ) -> Result<Self, OneVarError> {
        if !(1..=MAX_DEGREE).contains(&max_degree) {
            return Err(OneVarError::DegreeOutOfRange(max_degree));
        }
        let mut tables = OneVarTables {
            variety,
            max_degree,
            exhaustive,
            degrees: Vec::new(),
        };
        for d in 1..=max_degree {
            let table = tables.build_degree(d);
            tables.degrees.push(table);
        }
        Ok(tables)
    }

    pub fn variety(&self) -> Variety {
        self.variety
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Linearization arguments used when generating consequences.
    fn argument_pool(&self) -> Vec<Monomial> {
        if self.exhaustive {
            (1..=6).flat_map(Monomial::enumerate_pure_x).collect()
        } else {
            (1..=6).map(basis_monomial).collect()
        }
    }

    /// Generating set for the degree-`d` consequence subspace.
    fn generators(&self, d: u32) -> Vec<Polynomial> {
        let mut rows = Vec::new();
        let pool = self.argument_pool();

        // Linearization instances of each defining identity with pure-x
        // monomial arguments of total degree d - deg(p0) + r.
        for p0 in self.variety.defining_identities() {
            let n0 = p0.degree();
            let target = Polynomial::monomial(p0);
            if n0 == d {
                rows.push(target.clone());
            }
            for r in 1..=n0 {
                let needed = d as i64 - n0 as i64 + r as i64;
                if needed < r as i64 {
                    continue; // every argument has degree at least 1
                }
                for combo in multisets_with_degree(&pool, r, needed as u32) {
                    let args: Vec<Polynomial> = combo
                        .iter()
                        .map(|m| Polynomial::monomial(m.clone()))
                        .collect();
                    let inst = delta(&args, &target, Generator::X);
                    if !inst.is_zero() {
                        rows.push(inst);
                    }
                }
            }
        }

        // Products of a monomial with any lower-degree consequence.
        for e in 1..d {
            let lower = &self.degrees[(e - 1) as usize];
            if lower.basis.is_empty() {
                continue;
            }
            for m in Monomial::enumerate_pure_x(d - e) {
                let mp = Polynomial::monomial(m);
                for c in &lower.basis {
                    rows.push(mp.multiply(c));
                }
            }
        }
        rows
    }

    fn build_degree(&self, d: u32) -> DegreeTable {
        let mut monomials = Monomial::enumerate_pure_x(d);
        monomials.sort_by(|a, b| b.cmp(a)); // descending

        let rows = self.generators(d);
        let mut rewrite: BTreeMap<Monomial, Polynomial> = BTreeMap::new();

        // Incremental reduction to reduced echelon form over the descending
        // monomial order: leading monomials become pivots, tails rewrite
        // them into smaller monomials.
        for row in rows {
            if let Some((pivot, tail)) = reduce_row(&row, &rewrite) {
                rewrite.insert(pivot, tail);
            }
        }
        back_substitute(&mut rewrite);

        let survivors: Vec<Monomial> = monomials
            .iter()
            .filter(|m| !rewrite.contains_key(*m))
            .cloned()
            .collect();
        let basis = rewrite
            .iter()
            .map(|(pivot, tail)| Polynomial::monomial(pivot.clone()).sub(tail))
            .collect();
        DegreeTable {
            monomials,
            basis,
            rewrite,
            survivors,
        }
    }

    fn table(&self, d: u32) -> Result<&DegreeTable, OneVarError> {
        if d == 0 || d > self.max_degree {
            return Err(OneVarError::DegreeOutOfRange(d));
        }
        Ok(&self.degrees[(d - 1) as usize])
    }

    /// Reduced basis of the degree-`d` consequence subspace.
    pub fn consequence_space(&self, d: u32) -> Result<Vec<Polynomial>, OneVarError> {
        Ok(self.table(d)?.basis.clone())
    }

    /// Canonical monomials of degree `d` in the engine's descending order.
    pub fn monomials(&self, d: u32) -> Result<&[Monomial], OneVarError> {
        Ok(&self.table(d)?.monomials)
    }

    /// Monomials of degree `d` surviving in the quotient.
    pub fn survivors(&self, d: u32) -> Result<&[Monomial], OneVarError> {
        Ok(&self.table(d)?.survivors)
    }

    pub fn quotient_dimension(&self, d: u32) -> Result<usize, OneVarError> {
        Ok(self.table(d)?.survivors.len())
    }

    /// Normal form of a pure-`x` monomial: the unique combination of
    /// surviving monomials congruent to it modulo the consequence subspace.
    pub fn normal_form_monomial(&self, m: &Monomial) -> Result<Polynomial, OneVarError> {
        if m.y_degree() != 0 {
            return Err(OneVarError::NotPureX(m.clone()));
        }
        let d = m.degree();
        if d > self.max_degree {
            return Err(OneVarError::DegreeOutOfRange(d));
        }
        let table = self.table(d)?;
        Ok(match table.rewrite.get(m) {
            Some(tail) => tail.clone(),
            None => Polynomial::monomial(m.clone()),
        })
    }

    /// Linear extension of the monomial normal form.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, OneVarError> {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            out = out.add(&self.normal_form_monomial(m)?.scale(c));
        }
        Ok(out)
    }

    /// Whether `p` lies in the consequence span (its normal form vanishes).
    pub fn is_consequence(&self, p: &Polynomial) -> Result<bool, OneVarError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Denominators appearing in the reduced rewrite rules, for the
    /// characteristic audit.
    pub fn denominators(&self) -> std::collections::BTreeSet<num_bigint::BigUint> {
        let mut out = std::collections::BTreeSet::new();
        for table in &self.degrees {
            for tail in table.rewrite.values() {
                for (_, c) in tail.terms() {
                    if !c.is_integer() {
                        out.insert(c.denom().magnitude().clone());
                    }
                }
            }
        }
        out
    }

    /// Normal-form table rows for JSON export: one entry per canonical
    /// monomial per degree, with the normal form over the `b1..b6` basis.
    pub fn export(&self, up_to_degree: u32) -> Result<Vec<NormalFormEntry>, OneVarError> {
        let mut out = Vec::new();
        for d in 1..=up_to_degree.min(self.max_degree) {
            for m in self.monomials(d)? {
                let nf = self.normal_form_monomial(m)?;
                let normal_form = nf
                    .terms()
                    .map(|(b, c)| BasisTerm {
                        basis: format!(
                            "b{}",
                            basis_index(b).expect("survivor outside the basis list")
                        ),
                        coeff: c.clone(),
                    })
                    .collect();
                out.push(NormalFormEntry {
                    degree: d,
                    monomial: m.to_string(),
                    normal_form,
                });
            }
        }
        Ok(out)
    }
}

/// Reduces `row` by the current rewrite rules; returns the normalized
/// (pivot, tail) pair, or `None` when the row reduces to zero.
fn reduce_row(
    row: &Polynomial,
    rules: &BTreeMap<Monomial, Polynomial>,
) -> Option<(Monomial, Polynomial)> {
    // Descending pass: tails only mention smaller monomials, so one sweep
    // fully reduces the row.
    let mut queue: BTreeMap<Monomial, Rat> =
        row.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let mut work = Polynomial::zero();
    while let Some((m, c)) = queue.pop_last() {
        if c.is_zero() {
            continue;
        }
        match rules.get(&m) {
            Some(tail) => {
                for (tm, tc) in tail.terms() {
                    let entry = queue.entry(tm.clone()).or_insert_with(Rat::zero);
                    *entry += &(tc * &c);
                }
            }
            None => work.add_term(m, c),
        }
    }
    let (pivot, lead) = work
        .terms()
        .next_back()
        .map(|(m, c)| (m.clone(), c.clone()))?;
    // pivot + tail = 0 after scaling, i.e. pivot -> -tail/lead.
    work.add_term(pivot.clone(), -&lead);
    let tail = work.scale(
        &(-Rat::one()
            .checked_div(&lead)
            .expect("leading coefficient nonzero")),
    );
    Some((pivot, tail))
}

/// Rewrites every tail so it mentions only surviving monomials. Processing
/// pivots in ascending order is enough: tails only contain monomials smaller
/// than their pivot.
fn back_substitute(rules: &mut BTreeMap<Monomial, Polynomial>) {
    let pivots: Vec<Monomial> = rules.keys().cloned().collect();
    for pivot in pivots {
        let tail = rules[&pivot].clone();
        let mut reduced = Polynomial::zero();
        for (m, c) in tail.terms() {
            match rules.get(m) {
                Some(t) => reduced = reduced.add(&t.scale(c)),
                None => reduced.add_term(m.clone(), c.clone()),
            }
        }
        rules.insert(pivot, reduced);
    }
}

/// All multisets of `r` monomials from `pool` whose degrees sum to `total`,
/// with non-decreasing indices to avoid duplicates.
fn multisets_with_degree(pool: &[Monomial], r: u32, total: u32) -> Vec<Vec<Monomial>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
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
            if d > total {
                continue;
            }
            // Remaining arguments each need degree >= 1.
            if total - d < left - 1 {
                continue;
            }
            current.push(m.clone());
            go(pool, i, left - 1, total - d, current, out);
            current.pop();
        }
    }
    go(pool, 0, r, total, &mut current, &mut out);
    out
}
