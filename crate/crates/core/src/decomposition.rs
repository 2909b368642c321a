//! Shedding monomials and shedding faces, and the memoized searches that
//! decide k-decomposability of monomial ideals and simplicial complexes.
//!
//! A successful search returns a certificate: a binary tree of shedding
//! splits that can be re-verified without trusting the search. Candidates
//! are tried in a fixed order (smaller supports first, then lexicographic by
//! support, then by exponent vector) and the first one whose two halves are
//! themselves decomposable wins, so results are deterministic.
//!
//! `k` is passed as `Option<usize>`; `None` places no bound on the support
//! size of shedding monomials (or the dimension of shedding faces).

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Ctx, Monomial, MonomialIdeal, SimplicialComplex, VariableContext, VertexSet};

/// `[u, M] = 1`: no `x_i^{a_i}` with `x_i` in `supp(u)` divides `M`.
pub fn matches(u: &Monomial, m: &Monomial) -> Result<bool> {
    if u.nvars() != m.nvars() {
        return Err(Error::ContextMismatch);
    }
    if u.is_one() {
        return Err(Error::EmptySupport);
    }
    Ok(matches_unchecked(u, m))
}

#[inline]
fn matches_unchecked(u: &Monomial, m: &Monomial) -> bool {
    u.exponents()
        .iter()
        .zip(m.exponents())
        .all(|(&a, &b)| a == 0 || b < a)
}

/// Splits `G(I)` into `(G(I^u), G(I_u))`.
pub fn split(ideal: &MonomialIdeal, u: &Monomial) -> Result<(MonomialIdeal, MonomialIdeal)> {
    if u.nvars() != ideal.ctx().len() {
        return Err(Error::ContextMismatch);
    }
    if u.is_one() {
        return Err(Error::EmptySupport);
    }
    let (free, capped): (Vec<Monomial>, Vec<Monomial>) =
        ideal.gens().iter().cloned().partition(|m| matches_unchecked(u, m));
    Ok((
        MonomialIdeal::from_minimal(ideal.ctx(), capped),
        MonomialIdeal::from_minimal(ideal.ctx(), free),
    ))
}

/// True iff `I_u != 0` and for each `M_i` in `G(I_u)` and each `x_l` in
/// `supp(u)` some `M_j` in `G(I^u)` has `M_j : M_i = x_l`.
pub fn is_shedding_monomial(ideal: &MonomialIdeal, u: &Monomial) -> Result<bool> {
    let (capped, free) = split(ideal, u)?;
    if free.is_zero() {
        return Ok(false);
    }
    let support = u.support();
    Ok(free.gens().iter().all(|mi| {
        support.iter().all(|l| {
            capped
                .gens()
                .iter()
                .any(|mj| mj.colon_variable(mi) == Some(l))
        })
    }))
}

/// Exchange condition: every face `τ ⊇ σ` and every `v ∈ σ`
/// admit `w ∉ τ` with `(τ ∪ {w}) \ {v}` a face.
///
/// Checked literally over all faces containing `σ`.
pub fn is_shedding_face(complex: &SimplicialComplex, sigma: VertexSet) -> Result<bool> {
    if sigma.is_empty() {
        return Err(Error::EmptyFace);
    }
    if !complex.contains_face(sigma) {
        return Err(Error::NotAFace(complex.ctx().fmt_set(sigma)));
    }
    let ground = complex.ground();
    for facet in complex.facets().iter().filter(|f| sigma.is_subset(**f)) {
        for extra in facet.difference(sigma).subsets() {
            let tau = sigma.union(extra);
            for v in sigma.iter() {
                let exchanged = ground
                    .difference(tau)
                    .iter()
                    .any(|w| complex.contains_face(tau.with(w).without(v)));
                if !exchanged {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Search shedding faces of the complex itself.
    Direct,
    /// Search shedding monomials of `I_{Δ^vee}` and translate back.
    Dual,
}

/// Outcome of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<C> {
    Decomposable(C),
    NotDecomposable,
    /// The node budget ran out before the search could conclude.
    Undecided,
}

impl<C> Decision<C> {
    pub fn certificate(&self) -> Option<&C> {
        match self {
            Decision::Decomposable(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_decomposable(&self) -> bool {
        matches!(self, Decision::Decomposable(_))
    }

    pub fn map<D>(self, f: impl FnOnce(C) -> D) -> Decision<D> {
        match self {
            Decision::Decomposable(c) => Decision::Decomposable(f(c)),
            Decision::NotDecomposable => Decision::NotDecomposable,
            Decision::Undecided => Decision::Undecided,
        }
    }
}

pub const DEFAULT_NODE_LIMIT: usize = 2_000_000;

/// A tree of shedding splits of a monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealCertificate {
    Leaf(Monomial),
    Node {
        u: Monomial,
        /// certificate of `I^u`
        deletion: Box<IdealCertificate>,
        /// certificate of `I_u`
        link: Box<IdealCertificate>,
    },
}

impl IdealCertificate {
    /// The leaves, left to right.
    pub fn generators(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Monomial>) {
        match self {
            IdealCertificate::Leaf(m) => out.push(m.clone()),
            IdealCertificate::Node { deletion, link, .. } => {
                deletion.collect_leaves(out);
                link.collect_leaves(out);
            }
        }
    }

    pub fn root(&self) -> Option<&Monomial> {
        match self {
            IdealCertificate::Node { u, .. } => Some(u),
            IdealCertificate::Leaf(_) => None,
        }
    }

    /// Largest `|supp(u)|` over the nodes, 0 for a leaf.
    pub fn max_support(&self) -> usize {
        match self {
            IdealCertificate::Leaf(_) => 0,
            IdealCertificate::Node { u, deletion, link } => u
                .support()
                .len()
                .max(deletion.max_support())
                .max(link.max_support()),
        }
    }

    /// Rebuilds the ideal from the leaves and checks every node: the split
    /// by `u` must reproduce the two subtrees and `u` must be shedding with
    /// `|supp(u)| <= k + 1`.
    pub fn verify(&self, ctx: &Ctx, k: Option<usize>) -> Result<MonomialIdeal> {
        let ideal = MonomialIdeal::minimalize(ctx, self.generators())?;
        if ideal.len() != self.generators().len() {
            return Err(Error::InvalidCertificate(
                "leaves are not a minimal generating set".into(),
            ));
        }
        self.verify_node(&ideal, k)?;
        Ok(ideal)
    }

    fn verify_node(&self, ideal: &MonomialIdeal, k: Option<usize>) -> Result<()> {
        match self {
            IdealCertificate::Leaf(m) => {
                if ideal.gens() != std::slice::from_ref(m) {
                    return Err(Error::InvalidCertificate(format!(
                        "leaf {} does not match {}",
                        m.to_string_with(ideal.ctx()),
                        ideal
                    )));
                }
                Ok(())
            }
            IdealCertificate::Node { u, deletion, link } => {
                let ctx = ideal.ctx();
                if k.is_some_and(|k| u.support().len() > k + 1) {
                    return Err(Error::InvalidCertificate(format!(
                        "support of {} exceeds k + 1",
                        u.to_string_with(ctx)
                    )));
                }
                if !is_shedding_monomial(ideal, u)? {
                    return Err(Error::InvalidCertificate(format!(
                        "{} is not a shedding monomial of {}",
                        u.to_string_with(ctx),
                        ideal
                    )));
                }
                let (capped, free) = split(ideal, u)?;
                deletion.verify_node(&capped, k)?;
                link.verify_node(&free, k)
            }
        }
    }

    pub fn render(&self, ctx: &VariableContext) -> String {
        let mut out = String::new();
        self.render_into(ctx, "", 0, &mut out);
        out
    }

    fn render_into(&self, ctx: &VariableContext, tag: &str, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match self {
            IdealCertificate::Leaf(m) => {
                let _ = writeln!(out, "{pad}{tag}leaf {}", m.display(ctx));
            }
            IdealCertificate::Node { u, deletion, link } => {
                let _ = writeln!(out, "{pad}{tag}u = {}", u.display(ctx));
                deletion.render_into(ctx, "[I^u] ", depth + 1, out);
                link.render_into(ctx, "[I_u] ", depth + 1, out);
            }
        }
    }

    pub fn to_doc(&self, ctx: &VariableContext) -> CertificateDoc {
        match self {
            IdealCertificate::Leaf(m) => CertificateDoc {
                kind: "leaf".into(),
                generator: Some(m.to_string_with(ctx)),
                ..CertificateDoc::default()
            },
            IdealCertificate::Node { u, deletion, link } => CertificateDoc {
                kind: "node".into(),
                u: Some(u.to_string_with(ctx)),
                children: vec![deletion.to_doc(ctx), link.to_doc(ctx)],
                ..CertificateDoc::default()
            },
        }
    }

    pub fn from_doc(ctx: &VariableContext, doc: &CertificateDoc) -> Result<Self> {
        match (doc.kind.as_str(), &doc.generator, &doc.u, doc.children.as_slice()) {
            ("leaf", Some(g), None, []) => Ok(IdealCertificate::Leaf(Monomial::parse(ctx, g)?)),
            ("node", None, Some(u), [d, l]) => Ok(IdealCertificate::Node {
                u: Monomial::parse(ctx, u)?,
                deletion: Box::new(Self::from_doc(ctx, d)?),
                link: Box::new(Self::from_doc(ctx, l)?),
            }),
            _ => Err(Error::InvalidCertificate(format!(
                "malformed ideal certificate node of kind `{}`",
                doc.kind
            ))),
        }
    }
}

/// A tree of shedding faces of a simplicial complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexCertificate {
    /// A simplex with the given facet; `{∅}` has the empty facet.
    Simplex(VertexSet),
    /// The void complex.
    Void,
    Node {
        sigma: VertexSet,
        /// certificate of `Δ \ σ`
        deletion: Box<ComplexCertificate>,
        /// certificate of `lk(σ)`
        link: Box<ComplexCertificate>,
    },
}

impl ComplexCertificate {
    pub fn root(&self) -> Option<VertexSet> {
        match self {
            ComplexCertificate::Node { sigma, .. } => Some(*sigma),
            _ => None,
        }
    }

    /// Checks every node against `complex`: each `σ` is a face of dimension
    /// at most `k` with the exchange property, and leaves are simplices.
    pub fn verify(&self, complex: &SimplicialComplex, k: Option<usize>) -> Result<()> {
        let ctx = complex.ctx();
        match self {
            ComplexCertificate::Void => {
                if complex.is_void() {
                    Ok(())
                } else {
                    Err(Error::InvalidCertificate(format!("{} is not void", complex.display())))
                }
            }
            ComplexCertificate::Simplex(f) => {
                if complex.facets() == std::slice::from_ref(f) {
                    Ok(())
                } else {
                    Err(Error::InvalidCertificate(format!(
                        "{} is not the simplex on {}",
                        complex.display(),
                        ctx.fmt_set(*f)
                    )))
                }
            }
            ComplexCertificate::Node { sigma, deletion, link } => {
                if k.is_some_and(|k| sigma.len() > k + 1) {
                    return Err(Error::InvalidCertificate(format!(
                        "{} has dimension above k",
                        ctx.fmt_set(*sigma)
                    )));
                }
                if sigma.is_empty() || !complex.contains_face(*sigma) || !is_shedding_face(complex, *sigma)? {
                    return Err(Error::InvalidCertificate(format!(
                        "{} is not a shedding face of {}",
                        ctx.fmt_set(*sigma),
                        complex.display()
                    )));
                }
                deletion.verify(&complex.delete_face(*sigma)?, k)?;
                link.verify(&complex.link(*sigma)?, k)
            }
        }
    }

    pub fn max_face_size(&self) -> usize {
        match self {
            ComplexCertificate::Node { sigma, deletion, link } => sigma
                .len()
                .max(deletion.max_face_size())
                .max(link.max_face_size()),
            _ => 0,
        }
    }

    pub fn render(&self, ctx: &VariableContext) -> String {
        let mut out = String::new();
        self.render_into(ctx, "", 0, &mut out);
        out
    }

    fn render_into(&self, ctx: &VariableContext, tag: &str, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match self {
            ComplexCertificate::Void => {
                let _ = writeln!(out, "{pad}{tag}void");
            }
            ComplexCertificate::Simplex(f) => {
                let _ = writeln!(out, "{pad}{tag}simplex {}", ctx.fmt_set(*f));
            }
            ComplexCertificate::Node { sigma, deletion, link } => {
                let _ = writeln!(out, "{pad}{tag}sigma = {}", ctx.fmt_set(*sigma));
                deletion.render_into(ctx, "[del] ", depth + 1, out);
                link.render_into(ctx, "[lk] ", depth + 1, out);
            }
        }
    }

    pub fn to_doc(&self, ctx: &VariableContext) -> CertificateDoc {
        match self {
            ComplexCertificate::Void => CertificateDoc {
                kind: "void".into(),
                ..CertificateDoc::default()
            },
            ComplexCertificate::Simplex(f) => CertificateDoc {
                kind: "simplex".into(),
                facet: Some(ctx.set_names(*f)),
                ..CertificateDoc::default()
            },
            ComplexCertificate::Node { sigma, deletion, link } => CertificateDoc {
                kind: "node".into(),
                sigma: Some(ctx.set_names(*sigma)),
                children: vec![deletion.to_doc(ctx), link.to_doc(ctx)],
                ..CertificateDoc::default()
            },
        }
    }

    pub fn from_doc(ctx: &VariableContext, doc: &CertificateDoc) -> Result<Self> {
        match (doc.kind.as_str(), &doc.facet, &doc.sigma, doc.children.as_slice()) {
            ("void", None, None, []) => Ok(ComplexCertificate::Void),
            ("simplex", Some(f), None, []) => Ok(ComplexCertificate::Simplex(ctx.set_from_names(f)?)),
            ("node", None, Some(s), [d, l]) => Ok(ComplexCertificate::Node {
                sigma: ctx.set_from_names(s)?,
                deletion: Box::new(Self::from_doc(ctx, d)?),
                link: Box::new(Self::from_doc(ctx, l)?),
            }),
            _ => Err(Error::InvalidCertificate(format!(
                "malformed complex certificate node of kind `{}`",
                doc.kind
            ))),
        }
    }
}

/// Serialized certificate node: `kind` plus `u`/`sigma` and two children
/// for inner nodes, `generator`/`facet` for leaves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facet: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<CertificateDoc>,
}

enum Step<C> {
    Found(C),
    Fail,
    OutOfBudget,
}

/// Candidate shedding monomials of an ideal in search order.
///
/// Exponents of `x_i` are drawn from the positive exponents of `x_i` in
/// `G(I)`: `[u, M]` only compares thresholds, so any other exponent behaves
/// like one of these (or splits off nothing).
pub fn candidate_monomials(ideal: &MonomialIdeal, k: Option<usize>) -> Vec<Monomial> {
    let n = ideal.ctx().len();
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); n];
    for g in ideal.gens() {
        for (i, &a) in g.exponents().iter().enumerate() {
            if a > 0 && !levels[i].contains(&a) {
                levels[i].push(a);
            }
        }
    }
    levels.iter_mut().for_each(|l| l.sort_unstable());
    let used = VertexSet::from_indices((0..n).filter(|&i| !levels[i].is_empty()));
    let max = k.map_or(n, |k| k + 1);
    let mut out = Vec::new();
    for support in used.subsets_by_size(max) {
        let vars: Vec<usize> = support.iter().collect();
        let mut choice = vec![0usize; vars.len()];
        loop {
            let mut exps = vec![0u32; n];
            for (slot, &v) in vars.iter().enumerate() {
                exps[v] = levels[v][choice[slot]];
            }
            out.push(Monomial::from_exponents(exps));
            // odometer, last variable fastest
            let mut p = vars.len();
            let exhausted = loop {
                if p == 0 {
                    break true;
                }
                p -= 1;
                choice[p] += 1;
                if choice[p] < levels[vars[p]].len() {
                    break false;
                }
                choice[p] = 0;
            };
            if exhausted {
                break;
            }
        }
    }
    out
}

/// Memoized k-decomposability search for monomial ideals. One searcher can
/// be reused across many ideals with the same `k`.
pub struct IdealSearcher {
    k: Option<usize>,
    node_limit: usize,
    nodes: usize,
    memo: HashMap<Vec<Monomial>, Option<IdealCertificate>>,
}

impl IdealSearcher {
    pub fn new(k: Option<usize>) -> Self {
        Self::with_limit(k, DEFAULT_NODE_LIMIT)
    }

    pub fn with_limit(k: Option<usize>, node_limit: usize) -> Self {
        IdealSearcher {
            k,
            node_limit,
            nodes: 0,
            memo: HashMap::new(),
        }
    }

    /// Nodes expanded so far (memo hits excluded).
    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn decide(&mut self, ideal: &MonomialIdeal) -> Result<Decision<IdealCertificate>> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        self.nodes = 0;
        Ok(match self.search(ideal) {
            Step::Found(c) => Decision::Decomposable(c),
            Step::Fail => Decision::NotDecomposable,
            Step::OutOfBudget => Decision::Undecided,
        })
    }

    fn search(&mut self, ideal: &MonomialIdeal) -> Step<IdealCertificate> {
        let gens = ideal.gens();
        if gens.len() == 1 {
            return Step::Found(IdealCertificate::Leaf(gens[0].clone()));
        }
        if let Some(hit) = self.memo.get(gens) {
            return match hit {
                Some(c) => Step::Found(c.clone()),
                None => Step::Fail,
            };
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Step::OutOfBudget;
        }
        let r = gens.len();
        // colon_var[j * r + i] = Some(l) iff M_j : M_i = x_l
        let colon_var: Vec<Option<usize>> = (0..r * r)
            .map(|p| gens[p / r].colon_variable(&gens[p % r]))
            .collect();
        for u in candidate_monomials(ideal, self.k) {
            let free: Vec<bool> = gens.iter().map(|m| matches_unchecked(&u, m)).collect();
            let nfree = free.iter().filter(|&&b| b).count();
            // I_u = 0 fails the definition; I^u = 0 leaves the existential empty
            if nfree == 0 || nfree == r {
                continue;
            }
            let support = u.support();
            let shedding = (0..r).filter(|&i| free[i]).all(|i| {
                support.iter().all(|l| {
                    (0..r).any(|j| !free[j] && colon_var[j * r + i] == Some(l))
                })
            });
            if !shedding {
                continue;
            }
            let capped_ideal = MonomialIdeal::from_minimal(
                ideal.ctx(),
                (0..r).filter(|&j| !free[j]).map(|j| gens[j].clone()).collect(),
            );
            let deletion = match self.search(&capped_ideal) {
                Step::Found(c) => c,
                Step::Fail => continue,
                Step::OutOfBudget => return Step::OutOfBudget,
            };
            let free_ideal = MonomialIdeal::from_minimal(
                ideal.ctx(),
                (0..r).filter(|&i| free[i]).map(|i| gens[i].clone()).collect(),
            );
            let link = match self.search(&free_ideal) {
                Step::Found(c) => c,
                Step::Fail => continue,
                Step::OutOfBudget => return Step::OutOfBudget,
            };
            let cert = IdealCertificate::Node {
                u,
                deletion: Box::new(deletion),
                link: Box::new(link),
            };
            self.memo.insert(gens.to_vec(), Some(cert.clone()));
            return Step::Found(cert);
        }
        self.memo.insert(gens.to_vec(), None);
        Step::Fail
    }
}

/// Decides whether `I` is k-decomposable.
pub fn k_decomposable_ideal(ideal: &MonomialIdeal, k: Option<usize>) -> Result<Decision<IdealCertificate>> {
    IdealSearcher::new(k).decide(ideal)
}

/// Memoized k-decomposability search for complexes in direct mode.
pub struct ComplexSearcher {
    k: Option<usize>,
    node_limit: usize,
    nodes: usize,
    memo: HashMap<Vec<VertexSet>, Option<ComplexCertificate>>,
}

impl ComplexSearcher {
    pub fn new(k: Option<usize>) -> Self {
        Self::with_limit(k, DEFAULT_NODE_LIMIT)
    }

    pub fn with_limit(k: Option<usize>, node_limit: usize) -> Self {
        ComplexSearcher {
            k,
            node_limit,
            nodes: 0,
            memo: HashMap::new(),
        }
    }

    pub fn decide(&mut self, complex: &SimplicialComplex) -> Result<Decision<ComplexCertificate>> {
        self.nodes = 0;
        Ok(match self.search(complex)? {
            Step::Found(c) => Decision::Decomposable(c),
            Step::Fail => Decision::NotDecomposable,
            Step::OutOfBudget => Decision::Undecided,
        })
    }

    fn search(&mut self, complex: &SimplicialComplex) -> Result<Step<ComplexCertificate>> {
        if complex.is_void() {
            return Ok(Step::Found(ComplexCertificate::Void));
        }
        if complex.is_simplex() {
            return Ok(Step::Found(ComplexCertificate::Simplex(complex.facets()[0])));
        }
        if let Some(hit) = self.memo.get(complex.facets()) {
            return Ok(match hit {
                Some(c) => Step::Found(c.clone()),
                None => Step::Fail,
            });
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Ok(Step::OutOfBudget);
        }
        let max = self.k.map_or(64, |k| k + 1);
        for sigma in complex.vertices().subsets_by_size(max) {
            if !complex.contains_face(sigma) || !is_shedding_face(complex, sigma)? {
                continue;
            }
            let deletion = match self.search(&complex.delete_face(sigma)?)? {
                Step::Found(c) => c,
                Step::Fail => continue,
                Step::OutOfBudget => return Ok(Step::OutOfBudget),
            };
            let link = match self.search(&complex.link(sigma)?)? {
                Step::Found(c) => c,
                Step::Fail => continue,
                Step::OutOfBudget => return Ok(Step::OutOfBudget),
            };
            let cert = ComplexCertificate::Node {
                sigma,
                deletion: Box::new(deletion),
                link: Box::new(link),
            };
            self.memo.insert(complex.facets().to_vec(), Some(cert.clone()));
            return Ok(Step::Found(cert));
        }
        self.memo.insert(complex.facets().to_vec(), None);
        Ok(Step::Fail)
    }
}

/// Translates a certificate of `I_{Δ^vee}` into one of `Δ`: the shedding
/// monomial `x^σ` becomes the shedding face `σ`, and a leaf `x^{X \ F}`
/// becomes the simplex on `F`.
pub fn transport_certificate(cert: &IdealCertificate, ground: VertexSet) -> Result<ComplexCertificate> {
    match cert {
        IdealCertificate::Leaf(g) => {
            if !g.is_squarefree() {
                return Err(Error::NotSquarefree);
            }
            Ok(ComplexCertificate::Simplex(ground.difference(g.support())))
        }
        IdealCertificate::Node { u, deletion, link } => {
            if !u.is_squarefree() {
                return Err(Error::NotSquarefree);
            }
            let sigma = u.support();
            Ok(ComplexCertificate::Node {
                sigma,
                deletion: Box::new(transport_certificate(deletion, ground)?),
                link: Box::new(transport_certificate(link, ground.difference(sigma))?),
            })
        }
    }
}

/// Decides whether `Δ` is k-decomposable.
///
/// In dual mode the search runs on `I_{Δ^vee}` and the certificate is
/// carried back to `Δ`, then re-verified face by face; a rejection there is
/// reported as an internal error since both routes must agree.
pub fn k_decomposable_complex(
    complex: &SimplicialComplex,
    k: Option<usize>,
    mode: Mode,
) -> Result<Decision<ComplexCertificate>> {
    match mode {
        Mode::Direct => ComplexSearcher::new(k).decide(complex),
        Mode::Dual => DualSearcher::new(k).decide(complex),
    }
}

/// Dual-mode search, reusable across complexes.
pub struct DualSearcher {
    k: Option<usize>,
    ideals: IdealSearcher,
}

impl DualSearcher {
    pub fn new(k: Option<usize>) -> Self {
        DualSearcher {
            k,
            ideals: IdealSearcher::new(k),
        }
    }

    pub fn decide(&mut self, complex: &SimplicialComplex) -> Result<Decision<ComplexCertificate>> {
        if complex.is_void() {
            return Ok(Decision::Decomposable(ComplexCertificate::Void));
        }
        if complex.is_simplex() {
            return Ok(Decision::Decomposable(ComplexCertificate::Simplex(complex.facets()[0])));
        }
        let dual = complex.dual_ideal()?;
        let decision = self.ideals.decide(&dual)?;
        let ground = complex.ground();
        let out = match decision {
            Decision::Decomposable(c) => Decision::Decomposable(transport_certificate(&c, ground)?),
            Decision::NotDecomposable => Decision::NotDecomposable,
            Decision::Undecided => Decision::Undecided,
        };
        if let Decision::Decomposable(c) = &out {
            c.verify(complex, self.k)
                .map_err(|e| Error::Internal(format!("dual-mode certificate rejected: {e}")))?;
        }
        Ok(out)
    }
}
