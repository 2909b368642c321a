//! Orders of linear quotients, graded Betti tables, regularity and
//! projective dimension.
//!
//! Betti numbers of an ideal with linear quotients `f_1 < .. < f_m` are
//! `β_{i,j} = Σ_{deg f_t = j - i} C(|set(f_t)|, i)`. A decomposition
//! certificate yields such an order directly, and also a recursion
//! `β_{i,j}(I) = β_{i,j}(I^u) + Σ_l C(m, l) β_{i-l, j-l}(I_u)` with
//! `m = |supp(u)|`. Both are implemented here; [`crate::oracle`] supplies
//! the independent check.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::decomposition::{ComplexCertificate, IdealCertificate};
use crate::error::{Error, Result};
use crate::model::{Ctx, Monomial, MonomialIdeal, SimplicialComplex, VertexSet};
use crate::oracle::{self, Field};

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * BigUint::from(n - t) / BigUint::from(t + 1);
    }
    acc
}

/// Sparse graded Betti table `(i, j) -> β_{i,j}` of an ideal.
///
/// Tables carry a flag telling whether they come from a minimal resolution;
/// [`BettiTable::invariants`] refuses tables without it. Equality compares
/// entries only.
#[derive(Clone, Debug, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), BigUint>,
    minimal: bool,
}

impl PartialEq for BettiTable {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for BettiTable {}

impl BettiTable {
    /// Empty table from a minimal-resolution source.
    pub fn minimal() -> Self {
        BettiTable {
            entries: BTreeMap::new(),
            minimal: true,
        }
    }

    /// Empty table with no minimality guarantee.
    pub fn unverified() -> Self {
        BettiTable::default()
    }

    pub fn is_minimal_source(&self) -> bool {
        self.minimal
    }

    pub fn add<N: Into<BigUint>>(&mut self, i: usize, j: u32, count: N) {
        let count = count.into();
        if count.is_zero() {
            return;
        }
        *self.entries.entry((i, j)).or_default() += count;
    }

    pub fn get(&self, i: usize, j: u32) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), &BigUint)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    /// Entries as machine integers; panics if one does not fit.
    pub fn entries_u64(&self) -> Vec<((usize, u32), u64)> {
        self.entries
            .iter()
            .map(|(k, v)| (*k, v.to_u64().expect("Betti number fits in u64")))
            .collect()
    }

    /// `β_i = Σ_j β_{i,j}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<BigUint> {
        let len = self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![BigUint::zero(); len];
        for ((i, _), v) in &self.entries {
            out[*i] += v;
        }
        out
    }

    /// Adds `factor * β_{i - shift, j - shift}(other)` at `(i, j)`.
    fn add_shifted(&mut self, other: &BettiTable, shift: usize, factor: &BigUint) {
        for ((i, j), v) in &other.entries {
            self.add(i + shift, j + shift as u32, v * factor);
        }
    }

    /// `(pd, reg)` with `pd = max i` and `reg = max (j - i)` over nonzero
    /// entries. Only defined for tables of minimal resolutions.
    pub fn invariants(&self) -> Result<(usize, i64)> {
        if !self.minimal {
            return Err(Error::NonMinimalTable);
        }
        if self.entries.is_empty() {
            return Err(Error::EmptyTable);
        }
        let pd = self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let reg = self
            .entries
            .keys()
            .map(|(i, j)| *j as i64 - *i as i64)
            .max()
            .unwrap_or(0);
        Ok((pd, reg))
    }

    /// Text layout: one column per homological degree `i`, a `total:` row,
    /// then one row per value of `j - i`; zero entries print as `.`.
    pub fn render(&self) -> String {
        if self.entries.is_empty() {
            return "0\n".to_string();
        }
        let cols = self.totals().len();
        let lo = self.entries.keys().map(|(i, j)| *j as i64 - *i as i64).min().unwrap_or(0);
        let hi = self.entries.keys().map(|(i, j)| *j as i64 - *i as i64).max().unwrap_or(0);
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push((String::new(), (0..cols).map(|i| i.to_string()).collect()));
        rows.push((
            "total:".to_string(),
            self.totals().iter().map(|t| t.to_string()).collect(),
        ));
        for r in lo..=hi {
            let cells = (0..cols)
                .map(|i| {
                    let j = r + i as i64;
                    if j < 0 {
                        return ".".to_string();
                    }
                    match self.entries.get(&(i, j as u32)) {
                        Some(v) => v.to_string(),
                        None => ".".to_string(),
                    }
                })
                .collect();
            rows.push((format!("{r}:"), cells));
        }
        let label_w = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..cols)
            .map(|c| rows.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (label, cells) in &rows {
            let mut line = format!("{label:>label_w$}");
            for (cell, w) in cells.iter().zip(&widths) {
                let _ = write!(line, " {cell:>w$}");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_doc(&self) -> BettiDoc {
        BettiDoc {
            entries: self
                .entries
                .iter()
                .map(|((i, j), v)| BettiEntry {
                    i: *i,
                    j: *j,
                    value: v.to_string(),
                })
                .collect(),
            totals: self.totals().iter().map(|t| t.to_string()).collect(),
        }
    }
}

/// Structured form of a Betti table; counts are decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct BettiDoc {
    pub entries: Vec<BettiEntry>,
    pub totals: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub value: String,
}

/// An order of linear quotients `f_1 < .. < f_m` together with the
/// variable sets `set(f_i)` of the colon ideals `(f_1, .., f_{i-1}) : (f_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientOrder {
    pub gens: Vec<Monomial>,
    pub sets: Vec<VertexSet>,
}

impl QuotientOrder {
    /// Recomputes every colon ideal and checks that it is generated by
    /// exactly the recorded variables, and that the order lists `G(I)`.
    pub fn verify(&self, ideal: &MonomialIdeal) -> Result<()> {
        let mut sorted = self.gens.clone();
        crate::model::sort_lex_desc(&mut sorted);
        if sorted != ideal.gens() {
            return Err(Error::Precondition("order does not list the minimal generators".into()));
        }
        for (t, f) in self.gens.iter().enumerate() {
            match colon_is_variable_generated(&self.gens[..t], f) {
                Some(s) if s == self.sets[t] => {}
                Some(_) => {
                    return Err(Error::Internal(format!("recorded set of generator {t} is wrong")));
                }
                None => {
                    return Err(Error::Precondition(format!(
                        "colon ideal at position {t} is not generated by variables"
                    )))
                }
            }
        }
        Ok(())
    }
}

/// The variables generating `(prefix) : (f)`, or `None` when that colon
/// ideal is not generated by variables. An empty prefix gives `∅`.
pub fn colon_is_variable_generated(prefix: &[Monomial], f: &Monomial) -> Option<VertexSet> {
    let colons: Vec<Monomial> = prefix.iter().map(|g| g.colon_unchecked(f)).collect();
    let vars = colons
        .iter()
        .filter(|c| c.degree() == 1)
        .fold(VertexSet::EMPTY, |acc, c| acc.union(c.support()));
    // every colon generator must be a multiple of one of those variables
    colons
        .iter()
        .all(|c| c.support().intersects(vars))
        .then_some(vars)
}

/// Finds an order of linear quotients by depth-first extension, trying
/// unused generators in lex order. Dead ends are remembered by the set of
/// generators placed so far, since the next colon ideal only depends on
/// that set.
pub fn linear_quotients_order(ideal: &MonomialIdeal) -> Result<Option<QuotientOrder>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.gens();
    if gens.len() > 64 {
        return Err(Error::Budget("more than 64 generators".into()));
    }
    let full = if gens.len() == 64 { u64::MAX } else { (1u64 << gens.len()) - 1 };
    let mut order = Vec::with_capacity(gens.len());
    let mut sets = Vec::with_capacity(gens.len());
    let mut dead = HashSet::new();
    if extend(gens, full, 0, &mut order, &mut sets, &mut dead) {
        Ok(Some(QuotientOrder {
            gens: order.iter().map(|&t| gens[t].clone()).collect(),
            sets,
        }))
    } else {
        Ok(None)
    }
}

fn extend(
    gens: &[Monomial],
    full: u64,
    used: u64,
    order: &mut Vec<usize>,
    sets: &mut Vec<VertexSet>,
    dead: &mut HashSet<u64>,
) -> bool {
    if used == full {
        return true;
    }
    if dead.contains(&used) {
        return false;
    }
    let prefix: Vec<Monomial> = order.iter().map(|&t| gens[t].clone()).collect();
    for t in 0..gens.len() {
        if used >> t & 1 == 1 {
            continue;
        }
        if let Some(s) = colon_is_variable_generated(&prefix, &gens[t]) {
            order.push(t);
            sets.push(s);
            if extend(gens, full, used | 1 << t, order, sets, dead) {
                return true;
            }
            order.pop();
            sets.pop();
        }
    }
    dead.insert(used);
    false
}

/// The order `f_1 < .. < f_t < g_{t+1} < .. < g_r` built from a
/// certificate: the order of `I^u` followed by that of `I_u`, where each
/// `g_i` gains `supp(u)` in its set.
pub fn order_from_certificate(cert: &IdealCertificate, ctx: &Ctx) -> Result<QuotientOrder> {
    let ideal = cert.verify(ctx, None)?;
    let order = build_order(cert)?;
    order
        .verify(&ideal)
        .map_err(|e| Error::InvalidCertificate(format!("constructed order rejected: {e}")))?;
    Ok(order)
}

fn build_order(cert: &IdealCertificate) -> Result<QuotientOrder> {
    match cert {
        IdealCertificate::Leaf(g) => Ok(QuotientOrder {
            gens: vec![g.clone()],
            sets: vec![VertexSet::EMPTY],
        }),
        IdealCertificate::Node { u, deletion, link } => {
            let mut order = build_order(deletion)?;
            let tail = build_order(link)?;
            let support = u.support();
            for (g, s) in tail.gens.into_iter().zip(tail.sets) {
                if s.intersects(support) {
                    return Err(Error::InvalidCertificate(format!(
                        "supp(u) meets the set of a generator of I_u at {:?}",
                        s.intersection(support)
                    )));
                }
                order.gens.push(g);
                order.sets.push(s.union(support));
            }
            Ok(order)
        }
    }
}

/// `β_{i,j}(I) = Σ_{deg f_t = j - i} C(|set(f_t)|, i)`.
pub fn betti_from_order(order: &QuotientOrder) -> BettiTable {
    let mut table = BettiTable::minimal();
    for (f, s) in order.gens.iter().zip(&order.sets) {
        let size = s.len() as u64;
        for i in 0..=size {
            table.add(i as usize, f.degree() + i as u32, binomial(size, i));
        }
    }
    table
}

/// Evaluates the Betti recursion over a certificate tree.
pub fn betti_recursive(cert: &IdealCertificate, ctx: &Ctx) -> Result<BettiTable> {
    cert.verify(ctx, None)?;
    Ok(betti_tree(cert))
}

fn betti_tree(cert: &IdealCertificate) -> BettiTable {
    match cert {
        IdealCertificate::Leaf(g) => {
            let mut t = BettiTable::minimal();
            t.add(0, g.degree(), 1u32);
            t
        }
        IdealCertificate::Node { u, deletion, link } => {
            let mut table = betti_tree(deletion);
            let free = betti_tree(link);
            let m = u.support().len() as u64;
            for l in 0..=m {
                table.add_shifted(&free, l as usize, &binomial(m, l));
            }
            table
        }
    }
}

/// `(pd(I), reg(I))` from `pd(I) = max{pd(I^u), pd(I_u) + m}` and
/// `reg(I) = max{reg(I^u), reg(I_u)}`.
pub fn pd_reg_from_certificate(cert: &IdealCertificate, ctx: &Ctx) -> Result<(usize, i64)> {
    cert.verify(ctx, None)?;
    Ok(pd_reg_tree(cert))
}

fn pd_reg_tree(cert: &IdealCertificate) -> (usize, i64) {
    match cert {
        IdealCertificate::Leaf(g) => (0, g.degree() as i64),
        IdealCertificate::Node { u, deletion, link } => {
            let (pd_cap, reg_cap) = pd_reg_tree(deletion);
            let (pd_free, reg_free) = pd_reg_tree(link);
            (pd_cap.max(pd_free + u.support().len()), reg_cap.max(reg_free))
        }
    }
}

/// `(pd, reg)` of a minimal Betti table.
pub fn invariants_from_betti(table: &BettiTable) -> Result<(usize, i64)> {
    table.invariants()
}

/// `(reg(R/I_Δ), pd(R/I_Δ))` over the ground set of `Δ`, evaluated along
/// a complex certificate. The deletion `Δ \ σ` keeps the ground set `X`,
/// the link is taken over `X \ σ`. At a simplex leaf on facet `F` the
/// ideal is generated by the variables of `X \ F`, so `reg = 0` and
/// `pd = |X \ F|`.
pub fn reg_pd_complex(complex: &SimplicialComplex, cert: &ComplexCertificate) -> Result<(i64, usize)> {
    cert.verify(complex, None)?;
    reg_pd_tree(complex, cert)
}

fn reg_pd_tree(complex: &SimplicialComplex, cert: &ComplexCertificate) -> Result<(i64, usize)> {
    match cert {
        ComplexCertificate::Simplex(f) => Ok((0, complex.ground().difference(*f).len())),
        ComplexCertificate::Void => Err(Error::Precondition(
            "the void complex has the unit ideal; reg and pd are undefined".into(),
        )),
        ComplexCertificate::Node { sigma, deletion, link } => {
            let (reg_del, pd_del) = reg_pd_tree(&complex.delete_face(*sigma)?, deletion)?;
            let (reg_lk, pd_lk) = reg_pd_tree(&complex.link(*sigma)?, link)?;
            Ok((reg_del.max(reg_lk + sigma.len() as i64), pd_del.max(pd_lk)))
        }
    }
}

/// `pd(I^vee) == reg(R/I)`, both sides from the homology oracle.
pub fn terao_check(ideal: &MonomialIdeal) -> Result<bool> {
    let (lhs, rhs) = terao_sides(ideal)?;
    Ok(lhs as i64 == rhs)
}

/// `(pd(I^vee), reg(R/I))` via the oracle.
pub fn terao_sides(ideal: &MonomialIdeal) -> Result<(usize, i64)> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let dual = ideal.alexander_dual()?;
    let (pd_dual, _) = oracle::betti_hochster(&dual, Field::Rational)?.invariants()?;
    let (reg_quot, _) = oracle::quotient_reg_pd(ideal, Field::Rational)?;
    Ok((pd_dual, reg_quot))
}

/// Big height: the largest size of a minimal prime, i.e. of a minimal
/// vertex cover of the generator supports. Zero for the zero ideal.
pub fn bight(ideal: &MonomialIdeal) -> Result<usize> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_zero() {
        return Ok(0);
    }
    Ok(ideal
        .alexander_dual()?
        .gens()
        .iter()
        .map(|g| g.degree() as usize)
        .max()
        .unwrap_or(0))
}
