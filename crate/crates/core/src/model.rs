//! Value types: variable contexts, monomials, monomial ideals, simplicial
//! complexes and clutters, together with the Stanley-Reisner and Alexander
//! duality conversions between them.
//!
//! Vertex subsets are `u64` bitmasks, so a context holds at most 64
//! variables. Everything here is immutable once built.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A subset of the variables of a context, stored as a bitmask.
///
/// The `Ord` impl compares the sorted index lists lexicographically, so
/// `{x} < {x,y} < {x,z} < {y}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(i: usize) -> Self {
        VertexSet(1 << i)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | 1 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1 << i))
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// All subsets of `self`, in increasing bitmask order (the empty set first).
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(VertexSet(cur))
        })
    }

    /// Nonempty subsets of `self` with at most `max_len` elements, ordered by
    /// size first and then lexicographically. This is the candidate order
    /// used by the shedding searches.
    pub fn subsets_by_size(self, max_len: usize) -> Vec<VertexSet> {
        let elems: Vec<usize> = self.iter().collect();
        let mut out = Vec::new();
        for size in 1..=max_len.min(elems.len()) {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                out.push(VertexSet::from_indices(idx.iter().map(|&j| elems[j])));
                // advance the combination
                let mut p = size;
                while p > 0 && idx[p - 1] == elems.len() - size + p - 1 {
                    p -= 1;
                }
                if p == 0 {
                    break;
                }
                idx[p - 1] += 1;
                for q in p..size {
                    idx[q] = idx[q - 1] + 1;
                }
            }
        }
        out
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // first differing element `i`; the set lacking it is smaller only
        // when its index list has already ended
        let i = diff.trailing_zeros();
        let self_has = self.0 >> i & 1 == 1;
        let lacks = if self_has { other.0 } else { self.0 };
        let lacking_ended = i == 63 || lacks >> (i + 1) == 0;
        if self_has == lacking_ended {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Keeps the inclusion-minimal sets, sorted and deduplicated.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|m| m.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Keeps the inclusion-maximal sets, sorted and deduplicated.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.len()), *s));
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|m| s.is_subset(*m)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Minimal transversals (minimal hitting sets) of a family of sets, by
/// Berge's incremental algorithm. An empty member admits no transversal; an
/// empty family has the empty set as its only minimal transversal.
pub fn minimal_transversals(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut current = vec![VertexSet::EMPTY];
    for &edge in family {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t.intersects(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|v| t.with(v)));
            }
        }
        current = minimal_sets(next);
        if current.is_empty() {
            break;
        }
    }
    current
}

/// Ordered list of distinct variable labels shared by every object of one
/// computation.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

pub type Ctx = Arc<VariableContext>;

impl VariableContext {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Ctx> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > 64 {
            return Err(Error::TooManyVariables(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VariableContext { names }))
    }

    /// Context `x1, .., xn`.
    pub fn indexed(n: usize) -> Result<Ctx> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn set_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names
            .iter()
            .map(|n| self.index_of(n.as_ref()))
            .try_fold(VertexSet::EMPTY, |acc, i| Ok(acc.with(i?)))
    }

    pub fn set_names(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|i| self.names[i].clone()).collect()
    }

    /// `{x,y}` style rendering.
    pub fn fmt_set(&self, s: VertexSet) -> String {
        format!("{{{}}}", self.set_names(s).join(","))
    }
}

/// A monomial as a dense exponent vector; the zero vector is `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    /// `x^W`, the squarefree monomial with support `W`.
    pub fn of_set(n: usize, w: VertexSet) -> Self {
        Monomial {
            exps: (0..n).map(|i| w.contains(i) as u32).collect(),
        }
    }

    /// Parses `1`, `x`, `x^2*y`, `y*x^3` against a context. Repeated
    /// variables multiply.
    pub fn parse(ctx: &VariableContext, text: &str) -> Result<Self> {
        let err = |column: usize, reason: &str| Error::MonomialSyntax {
            text: text.to_string(),
            column,
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        let mut exps = vec![0u32; ctx.len()];
        if trimmed == "1" {
            return Ok(Monomial { exps });
        }
        if trimmed.is_empty() {
            return Err(err(1, "empty monomial"));
        }
        let offset = text.len() - text.trim_start().len();
        let mut col = offset;
        for factor in trimmed.split('*') {
            let here = col + 1 + (factor.len() - factor.trim_start().len());
            let f = factor.trim();
            if f.is_empty() {
                return Err(err(here, "empty factor"));
            }
            let (name, power) = match f.split_once('^') {
                Some((n, p)) => {
                    let p: u32 = p
                        .trim()
                        .parse()
                        .map_err(|_| err(here + n.len() + 1, "exponent is not a nonnegative integer"))?;
                    (n.trim(), p)
                }
                None => (f, 1),
            };
            if name == "1" && power == 1 {
                col += factor.len() + 1;
                continue;
            }
            let i = ctx.index_of(name).map_err(|_| match name.chars().next() {
                Some(c) if c.is_alphabetic() || c == '_' => Error::UnknownVariable(name.to_string()),
                _ => err(here, "expected a variable name"),
            })?;
            exps[i] += power;
            col += factor.len() + 1;
        }
        Ok(Monomial { exps })
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// `v_i(f)`.
    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&a| a == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&a| a <= 1)
    }

    pub fn support(&self) -> VertexSet {
        VertexSet(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .fold(0, |acc, (i, _)| acc | 1 << i),
        )
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    fn check_same(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// `f : g = f / gcd(f, g)`.
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(self.colon_unchecked(other))
    }

    #[inline]
    pub(crate) fn colon_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// If `f : g` is a single variable, its index.
    pub(crate) fn colon_variable(&self, other: &Monomial) -> Option<usize> {
        let mut found = None;
        for (i, (a, b)) in self.exps.iter().zip(&other.exps).enumerate() {
            let d = a.saturating_sub(*b);
            if d > 1 || (d == 1 && found.is_some()) {
                return None;
            }
            if d == 1 {
                found = Some(i);
            }
        }
        found
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        })
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, ctx }
    }

    pub fn to_string_with(&self, ctx: &VariableContext) -> String {
        self.display(ctx).to_string()
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &a) in self.m.exps.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

/// Sorts generators in lex order with `x_1 > x_2 > ..`, largest first.
pub(crate) fn sort_lex_desc(gens: &mut [Monomial]) {
    gens.sort_by(|a, b| b.exps.cmp(&a.exps));
}

/// A monomial ideal held by its minimal generating set `G(I)`.
///
/// Generators are pairwise incomparable under divisibility, never `1`, and
/// kept in lex order (largest first); the empty set is the zero ideal.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ctx: Ctx,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl std::hash::Hash for MonomialIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.gens.hash(state)
    }
}

impl MonomialIdeal {
    pub fn zero(ctx: &Ctx) -> Self {
        MonomialIdeal {
            ctx: ctx.clone(),
            gens: Vec::new(),
        }
    }

    /// Removes every monomial divisible by another one of the collection.
    pub fn minimalize<I: IntoIterator<Item = Monomial>>(ctx: &Ctx, monomials: I) -> Result<Self> {
        let mut ms: Vec<Monomial> = Vec::new();
        for m in monomials {
            if m.nvars() != ctx.len() {
                return Err(Error::ContextMismatch);
            }
            if m.is_one() {
                return Err(Error::ImproperIdeal);
            }
            ms.push(m);
        }
        ms.sort_by_key(|m| m.degree());
        ms.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(ms.len());
        for m in ms {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        sort_lex_desc(&mut gens);
        Ok(MonomialIdeal { ctx: ctx.clone(), gens })
    }

    /// For callers that already hold a subset of a minimal generating set.
    pub(crate) fn from_minimal(ctx: &Ctx, mut gens: Vec<Monomial>) -> Self {
        sort_lex_desc(&mut gens);
        MonomialIdeal { ctx: ctx.clone(), gens }
    }

    pub fn parse<S: AsRef<str>>(ctx: &Ctx, gens: &[S]) -> Result<Self> {
        let ms = gens
            .iter()
            .map(|g| Monomial::parse(ctx, g.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(ctx, ms)
    }

    /// Squarefree ideal `(x^W : W in sets)`.
    pub fn from_sets<I: IntoIterator<Item = VertexSet>>(ctx: &Ctx, sets: I) -> Result<Self> {
        Self::minimalize(ctx, sets.into_iter().map(|w| Monomial::of_set(ctx.len(), w)))
    }

    /// The prime `P_W = (x_i : i in W)`.
    pub fn prime(ctx: &Ctx, w: VertexSet) -> Self {
        Self::from_minimal(ctx, w.iter().map(|i| Monomial::variable(ctx.len(), i)).collect())
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Same as [`MonomialIdeal::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Supports of the generators; meaningful for squarefree ideals.
    pub fn supports(&self) -> Vec<VertexSet> {
        self.gens.iter().map(Monomial::support).collect()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Componentwise lcm of the generators (the monomial `1` for the zero ideal).
    pub fn lcm(&self) -> Monomial {
        let mut exps = vec![0; self.ctx.len()];
        for g in &self.gens {
            for (e, &a) in exps.iter_mut().zip(g.exponents()) {
                *e = (*e).max(a);
            }
        }
        Monomial::from_exponents(exps)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        if self.ctx.len() != other.ctx.len() {
            return Err(Error::ContextMismatch);
        }
        Self::minimalize(&self.ctx, self.gens.iter().chain(&other.gens).cloned())
    }

    /// `I^vee = P_{W_1} ∩ .. ∩ P_{W_t}`, generated by `x^T` over the minimal
    /// transversals `T` of the generator supports.
    pub fn alexander_dual(&self) -> Result<Self> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Self::from_sets(&self.ctx, minimal_transversals(&self.supports()))
    }

    /// The complex whose Stanley-Reisner ideal over `ground` is this ideal.
    pub fn stanley_reisner_complex(&self, ground: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let supports = self.supports();
        if let Some(s) = supports.iter().find(|s| !s.is_subset(ground)) {
            return Err(Error::OutsideGround(self.ctx.fmt_set(*s)));
        }
        // F is a face iff it contains no support, iff ground \ F is a transversal
        let facets = minimal_transversals(&supports)
            .into_iter()
            .map(|t| ground.difference(t))
            .collect();
        SimplicialComplex::new(&self.ctx, ground, facets)
    }

    pub fn display(&self) -> String {
        if self.gens.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string_with(&self.ctx)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// A simplicial complex given by its facets over a ground set `X`.
///
/// The ground set is the ambient vertex set used for Stanley-Reisner ideals
/// and Alexander duals; it may contain vertices that are not faces (after a
/// deletion, for instance). The void complex `{}` has no facets and `{∅}`
/// has the single facet `∅`.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    ctx: Ctx,
    ground: VertexSet,
    facets: Vec<VertexSet>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds a complex from generating faces; non-maximal ones are dropped.
    pub fn new(ctx: &Ctx, ground: VertexSet, faces: Vec<VertexSet>) -> Result<Self> {
        if !ground.is_subset(ctx.all()) {
            return Err(Error::OutsideGround(format!("{ground:?}")));
        }
        if let Some(f) = faces.iter().find(|f| !f.is_subset(ground)) {
            return Err(Error::OutsideGround(ctx.fmt_set(*f)));
        }
        Ok(Self::from_parts(ctx, ground, faces))
    }

    pub(crate) fn from_parts(ctx: &Ctx, ground: VertexSet, faces: Vec<VertexSet>) -> Self {
        SimplicialComplex {
            ctx: ctx.clone(),
            ground,
            facets: maximal_sets(faces),
        }
    }

    pub fn void(ctx: &Ctx, ground: VertexSet) -> Self {
        Self::from_parts(ctx, ground, Vec::new())
    }

    /// The complex `{∅}`.
    pub fn empty_face(ctx: &Ctx, ground: VertexSet) -> Self {
        Self::from_parts(ctx, ground, vec![VertexSet::EMPTY])
    }

    /// The full simplex on `ground`.
    pub fn simplex(ctx: &Ctx, ground: VertexSet) -> Self {
        Self::from_parts(ctx, ground, vec![ground])
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    /// Same faces over another ground set containing all of them.
    pub fn with_ground(&self, ground: VertexSet) -> Result<Self> {
        Self::new(&self.ctx, ground, self.facets.clone())
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Vertices that are faces.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f))
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_empty_face(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// A single facet, `{∅}` included.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    /// All faces, each exactly once. Exponential in the facet sizes.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut all: Vec<VertexSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        all.sort_by_key(|s| (s.len(), *s));
        all.dedup();
        all
    }

    /// Inclusion-minimal subsets of the ground set that are not faces.
    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        Ok(self.nonfaces_within(self.ground))
    }

    fn nonfaces_within(&self, ambient: VertexSet) -> Vec<VertexSet> {
        // N is a nonface iff it meets the complement of every facet
        let complements: Vec<VertexSet> = self.facets.iter().map(|f| ambient.difference(*f)).collect();
        minimal_transversals(&complements)
    }

    /// `I_Δ` viewed in the polynomial ring on `ambient`; ambient vertices that
    /// are not faces become degree-one generators.
    pub fn stanley_reisner_ideal(&self, ambient: VertexSet) -> Result<MonomialIdeal> {
        if self.is_void() {
            return Err(Error::UnitIdealOfVoid);
        }
        if let Some(f) = self.facets.iter().find(|f| !f.is_subset(ambient)) {
            return Err(Error::OutsideGround(self.ctx.fmt_set(*f)));
        }
        MonomialIdeal::from_sets(&self.ctx, self.nonfaces_within(ambient))
    }

    /// `I_Δ` over the complex's own ground set.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        self.stanley_reisner_ideal(self.ground)
    }

    /// `Δ^vee = {X \ F : F not in Δ}`; its facets are complements of the
    /// minimal nonfaces.
    pub fn alexander_dual(&self) -> Self {
        let facets = self
            .nonfaces_within(self.ground)
            .into_iter()
            .map(|n| self.ground.difference(n))
            .collect();
        Self::from_parts(&self.ctx, self.ground, facets)
    }

    /// `(I_Δ)^vee = (x^{X \ F} : F facet)`, which equals `I_{Δ^vee}`.
    pub fn dual_ideal(&self) -> Result<MonomialIdeal> {
        if self.is_void() {
            return Err(Error::UnitIdealOfVoid);
        }
        MonomialIdeal::from_sets(&self.ctx, self.facets.iter().map(|f| self.ground.difference(*f)))
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}` on the ground set `X \ F`.
    pub fn link(&self, f: VertexSet) -> Result<Self> {
        if !self.contains_face(f) {
            return Err(Error::NotAFace(self.ctx.fmt_set(f)));
        }
        let facets = self
            .facets
            .iter()
            .filter(|g| f.is_subset(**g))
            .map(|g| g.difference(f))
            .collect();
        Ok(Self::from_parts(&self.ctx, self.ground.difference(f), facets))
    }

    /// `Δ \ F = {G : F ⊄ G}` on the same ground set.
    pub fn delete_face(&self, f: VertexSet) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::EmptyFace);
        }
        let mut faces = Vec::with_capacity(self.facets.len() + f.len());
        for &g in &self.facets {
            if f.is_subset(g) {
                faces.extend(f.iter().map(|v| g.without(v)));
            } else {
                faces.push(g);
            }
        }
        Ok(Self::from_parts(&self.ctx, self.ground, faces))
    }

    pub fn display(&self) -> String {
        if self.is_void() {
            return "{}".to_string();
        }
        let parts: Vec<String> = self.facets.iter().map(|f| self.ctx.fmt_set(*f)).collect();
        format!("<{}>", parts.join(", "))
    }
}

/// A clutter: pairwise incomparable nonempty edges over a vertex set.
///
/// User-built clutters have edges of size at least two; minors produced by
/// contraction may carry singleton edges.
#[derive(Clone, Debug)]
pub struct Clutter {
    ctx: Ctx,
    vertices: VertexSet,
    edges: Vec<VertexSet>,
}

impl PartialEq for Clutter {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Clutter {}

impl std::hash::Hash for Clutter {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
        self.edges.hash(state);
    }
}

impl Clutter {
    pub fn new(ctx: &Ctx, vertices: VertexSet, edges: Vec<VertexSet>) -> Result<Self> {
        if !vertices.is_subset(ctx.all()) {
            return Err(Error::OutsideGround(format!("{vertices:?}")));
        }
        let mut edges = edges;
        edges.sort();
        edges.dedup();
        for (i, &e) in edges.iter().enumerate() {
            if e.len() < 2 {
                return Err(Error::EdgeTooSmall(ctx.fmt_set(e)));
            }
            if !e.is_subset(vertices) {
                return Err(Error::OutsideGround(ctx.fmt_set(e)));
            }
            if let Some(&g) = edges[..i].iter().find(|g| g.is_subset(e) || e.is_subset(**g)) {
                return Err(Error::ComparableEdges(ctx.fmt_set(g), ctx.fmt_set(e)));
            }
        }
        Ok(Clutter {
            ctx: ctx.clone(),
            vertices,
            edges,
        })
    }

    /// Minimalizes `edges`; singleton edges are allowed, the empty edge is not.
    pub(crate) fn from_minor_parts(ctx: &Ctx, vertices: VertexSet, edges: Vec<VertexSet>) -> Result<Self> {
        let edges = minimal_sets(edges);
        if edges.first().is_some_and(|e| e.is_empty()) {
            return Err(Error::ImproperContraction);
        }
        Ok(Clutter {
            ctx: ctx.clone(),
            vertices,
            edges,
        })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    /// Largest edge size, 0 when edgeless.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    /// `I(H) = (x^e : e in E(H))`; the zero ideal for an edgeless clutter.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_minimal(
            &self.ctx,
            self.edges.iter().map(|e| Monomial::of_set(self.ctx.len(), *e)).collect(),
        )
    }

    /// The independence complex `Δ_H = {F ⊆ V : e ⊄ F for each edge e}`.
    pub fn independence_complex(&self) -> SimplicialComplex {
        // maximal independent sets are complements of minimal vertex covers
        let facets = minimal_transversals(&self.edges)
            .into_iter()
            .map(|c| self.vertices.difference(c))
            .collect();
        SimplicialComplex::from_parts(&self.ctx, self.vertices, facets)
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self.edges.iter().map(|e| self.ctx.fmt_set(*e)).collect();
        format!("V={} E=[{}]", self.ctx.fmt_set(self.vertices), parts.join(", "))
    }
}
