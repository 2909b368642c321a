//! Clutter minors, simplicial vertices and chordality, plus the regularity
//! identities and bounds for chordal clutters.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Clutter, Monomial, MonomialIdeal, VariableContext, VertexSet};
use crate::oracle;

pub const DEFAULT_MINOR_LIMIT: usize = 5_000_000;

fn check_vertex(h: &Clutter, v: usize) -> Result<()> {
    if v < 64 && h.vertices().contains(v) {
        Ok(())
    } else {
        Err(Error::UnknownVertex(
            h.ctx().names().get(v).cloned().unwrap_or_else(|| format!("#{v}")),
        ))
    }
}

/// `H \ v`: drop `v` and every edge through it.
pub fn deletion(h: &Clutter, v: usize) -> Result<Clutter> {
    check_vertex(h, v)?;
    let edges = h.edges().iter().copied().filter(|e| !e.contains(v)).collect();
    Clutter::from_minor_parts(h.ctx(), h.vertices().without(v), edges)
}

/// `H / v`: the minimal sets among `e \ {v}`. Singleton edges may appear;
/// contracting a singleton edge is an error.
pub fn contraction(h: &Clutter, v: usize) -> Result<Clutter> {
    check_vertex(h, v)?;
    let edges = h.edges().iter().map(|e| e.without(v)).collect();
    Clutter::from_minor_parts(h.ctx(), h.vertices().without(v), edges)
}

/// Contracts the vertices of `s` one after another, in increasing order.
pub fn contraction_set(h: &Clutter, s: VertexSet) -> Result<Clutter> {
    if !s.is_subset(h.vertices()) {
        return Err(Error::OutsideGround(h.ctx().fmt_set(s)));
    }
    s.iter().try_fold(h.clone(), |acc, v| contraction(&acc, v))
}

/// Every two edges through `v` admit a third edge inside their union minus
/// `v`. Vacuous when at most one edge contains `v`.
pub fn is_simplicial_vertex(h: &Clutter, v: usize) -> Result<bool> {
    check_vertex(h, v)?;
    Ok(simplicial(h, v))
}

fn simplicial(h: &Clutter, v: usize) -> bool {
    let through: Vec<VertexSet> = h.edges().iter().copied().filter(|e| e.contains(v)).collect();
    through.iter().enumerate().all(|(a, e1)| {
        through[a + 1..].iter().all(|e2| {
            let room = e1.union(*e2).without(v);
            h.edges().iter().any(|e3| e3.is_subset(room))
        })
    })
}

pub fn simplicial_vertices(h: &Clutter) -> VertexSet {
    VertexSet::from_indices(h.vertices().iter().filter(|&v| simplicial(h, v)))
}

/// `(v, e)` with `v ∈ e` such that every other edge `e_2 ∋ v` has some edge
/// inside `(e ∪ e_2) \ {v}`.
pub fn is_containment_pair(h: &Clutter, v: usize, e: VertexSet) -> Result<bool> {
    check_vertex(h, v)?;
    if !h.edges().contains(&e) {
        return Err(Error::NotAnEdge(h.ctx().fmt_set(e)));
    }
    if !e.contains(v) {
        return Err(Error::Precondition(format!(
            "{} is not in {}",
            h.ctx().name(v),
            h.ctx().fmt_set(e)
        )));
    }
    Ok(h.edges()
        .iter()
        .filter(|e2| **e2 != e && e2.contains(v))
        .all(|e2| {
            let room = e.union(*e2).without(v);
            h.edges().iter().any(|e3| e3.is_subset(room))
        }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", content = "vertex", rename_all = "lowercase")]
pub enum MinorOp {
    Delete(usize),
    Contract(usize),
}

/// The operations leading from a root clutter to one of its minors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinorTrace {
    pub ops: Vec<MinorOp>,
}

impl MinorTrace {
    pub fn replay(&self, root: &Clutter) -> Result<Clutter> {
        self.ops.iter().try_fold(root.clone(), |h, op| match *op {
            MinorOp::Delete(v) => deletion(&h, v),
            MinorOp::Contract(v) => contraction(&h, v),
        })
    }

    /// Parses `d:x,c:y` (also `delete:x`, `contract:y`).
    pub fn parse(ctx: &VariableContext, text: &str) -> Result<Self> {
        let mut ops = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (kind, name) = item
                .split_once(':')
                .ok_or_else(|| Error::Precondition(format!("minor operation `{item}` lacks `:`")))?;
            let v = ctx.index_of(name.trim())?;
            ops.push(match kind.trim() {
                "d" | "delete" => MinorOp::Delete(v),
                "c" | "contract" => MinorOp::Contract(v),
                other => return Err(Error::Precondition(format!("unknown minor operation `{other}`"))),
            });
        }
        Ok(MinorTrace { ops })
    }

    pub fn render(&self, ctx: &VariableContext) -> String {
        if self.ops.is_empty() {
            return "(root)".to_string();
        }
        self.ops
            .iter()
            .map(|op| match *op {
                MinorOp::Delete(v) => format!("delete {}", ctx.name(v)),
                MinorOp::Contract(v) => format!("contract {}", ctx.name(v)),
            })
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn to_doc(&self, ctx: &VariableContext) -> Vec<MinorOpDoc> {
        self.ops
            .iter()
            .map(|op| match *op {
                MinorOp::Delete(v) => MinorOpDoc {
                    op: "delete".into(),
                    vertex: ctx.name(v).into(),
                },
                MinorOp::Contract(v) => MinorOpDoc {
                    op: "contract".into(),
                    vertex: ctx.name(v).into(),
                },
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorOpDoc {
    pub op: String,
    pub vertex: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal,
    /// A minor without a simplicial vertex, reached by the trace.
    NotChordal(MinorTrace),
    Undecided,
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal)
    }
}

/// Depth-first search over all minors, remembering minors already known to
/// be chordal. The memo is keyed by vertex set and edge list and can be
/// shared across many root clutters.
pub struct ChordalityChecker {
    limit: usize,
    nodes: usize,
    chordal: HashSet<(VertexSet, Vec<VertexSet>)>,
}

impl Default for ChordalityChecker {
    fn default() -> Self {
        Self::with_limit(DEFAULT_MINOR_LIMIT)
    }
}

enum Walk {
    Done,
    Witness(MinorTrace),
    OutOfBudget,
}

impl ChordalityChecker {
    pub fn with_limit(limit: usize) -> Self {
        ChordalityChecker {
            limit,
            nodes: 0,
            chordal: HashSet::new(),
        }
    }

    pub fn check(&mut self, h: &Clutter) -> Chordality {
        self.nodes = 0;
        let mut trace = Vec::new();
        match self.walk(h, &mut trace) {
            Walk::Done => Chordality::Chordal,
            Walk::Witness(t) => Chordality::NotChordal(t),
            Walk::OutOfBudget => Chordality::Undecided,
        }
    }

    fn walk(&mut self, h: &Clutter, trace: &mut Vec<MinorOp>) -> Walk {
        let key = (h.vertices(), h.edges().to_vec());
        if self.chordal.contains(&key) {
            return Walk::Done;
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Walk::OutOfBudget;
        }
        // a clutter without vertices has no minor needing a simplicial vertex
        if !h.vertices().is_empty() && simplicial_vertices(h).is_empty() {
            return Walk::Witness(MinorTrace { ops: trace.clone() });
        }
        for v in h.vertices().iter() {
            let mut children = Vec::with_capacity(2);
            if let Ok(d) = deletion(h, v) {
                children.push((MinorOp::Delete(v), d));
            }
            if let Ok(c) = contraction(h, v) {
                children.push((MinorOp::Contract(v), c));
            }
            for (op, minor) in children {
                trace.push(op);
                let step = self.walk(&minor, trace);
                trace.pop();
                match step {
                    Walk::Done => {}
                    other => return other,
                }
            }
        }
        // roots are rarely minors of later roots, keeping them out bounds the memo
        if !trace.is_empty() {
            self.chordal.insert(key);
        }
        Walk::Done
    }
}

/// Decides chordality: every minor has a simplicial vertex.
pub fn is_chordal(h: &Clutter) -> Chordality {
    ChordalityChecker::default().check(h)
}

/// The two ideals of the deletion/link identities for `σ = e \ {x}` in the
/// independence complex `Δ = Δ_H`:
/// `I_{Δ \ σ} = (x^σ) + Σ_{x_i ∈ σ} I(H \ x_i)` and `I_{lk σ} = I(H / σ)`.
///
/// Both right-hand sides are also computed from `Δ` directly; a mismatch is
/// an internal error.
pub fn lemma_h_ideals(h: &Clutter, e: VertexSet, x: usize) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let ctx = h.ctx();
    if !h.edges().contains(&e) {
        return Err(Error::NotAnEdge(ctx.fmt_set(e)));
    }
    if !e.contains(x) {
        return Err(Error::Precondition(format!("{} is not in {}", ctx.name(x), ctx.fmt_set(e))));
    }
    let sigma = e.without(x);
    if sigma.is_empty() {
        return Err(Error::EmptyFace);
    }
    let mut gens = vec![Monomial::of_set(ctx.len(), sigma)];
    for xi in sigma.iter() {
        gens.extend(deletion(h, xi)?.edge_ideal().gens().iter().cloned());
    }
    let deletion_ideal = MonomialIdeal::minimalize(ctx, gens)?;
    let link_ideal = contraction_set(h, sigma)?.edge_ideal();

    let complex = h.independence_complex();
    let lhs_deletion = complex.delete_face(sigma)?.stanley_reisner_ideal(h.vertices())?;
    let lhs_link = complex.link(sigma)?.stanley_reisner_ideal(h.vertices().difference(sigma))?;
    if lhs_deletion != deletion_ideal {
        return Err(Error::Internal(format!(
            "deletion ideal {deletion_ideal} differs from I_(Δ\\σ) = {lhs_deletion}"
        )));
    }
    if lhs_link != link_ideal {
        return Err(Error::Internal(format!(
            "link ideal {link_ideal} differs from I_lk(σ) = {lhs_link}"
        )));
    }
    Ok((deletion_ideal, link_ideal))
}

/// Both sides of the regularity identity (i) and the bound (ii) for a
/// chordal clutter `H`, simplicial vertex `x` and edge `e ∋ x`, with
/// `σ = e \ {x}` and `d = |σ|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub d: usize,
    /// `reg(R/I(H))`
    pub reg: i64,
    /// `reg(R/((x^σ) + I(H)))`
    pub reg_with_sigma: i64,
    /// `reg(R/I(H / σ))`
    pub reg_contraction: i64,
    /// `max{reg_with_sigma, reg_contraction + d}`, equal to `reg`
    pub identity_rhs: i64,
    /// `reg(R/I(H \ x_i))` for `x_i ∈ σ`, in vertex order
    pub reg_deletions: Vec<i64>,
    /// `max{Σ reg_deletions + d - 1, reg_contraction + d}`, at least `reg`
    pub bound_rhs: i64,
    /// Whether every `H \ x_i` and `H / σ` is chordal; `None` if not checked.
    pub minors_chordal: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundOptions {
    /// Check chordality of the minors `H \ x_i` and `H / σ` and report it.
    pub check_minor_chordality: bool,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            check_minor_chordality: true,
        }
    }
}

/// Computes a [`BoundReport`] with every regularity taken from the homology
/// oracle. The clutter must be chordal and `x` simplicial; a failure of the
/// identity or the bound is returned as [`Error::Violation`].
pub fn chordal_reg_bound(h: &Clutter, x: usize, e: VertexSet) -> Result<BoundReport> {
    chordal_reg_bound_with(&mut ChordalityChecker::default(), h, x, e, BoundOptions::default())
}

pub fn chordal_reg_bound_with(
    checker: &mut ChordalityChecker,
    h: &Clutter,
    x: usize,
    e: VertexSet,
    opts: BoundOptions,
) -> Result<BoundReport> {
    let ctx = h.ctx();
    if !is_simplicial_vertex(h, x)? {
        return Err(Error::Precondition(format!("{} is not a simplicial vertex", ctx.name(x))));
    }
    match checker.check(h) {
        Chordality::Chordal => {}
        Chordality::NotChordal(_) => return Err(Error::Precondition("the clutter is not chordal".into())),
        Chordality::Undecided => return Err(Error::Budget("chordality search ran out of nodes".into())),
    }
    let (with_sigma, link_ideal) = lemma_h_ideals(h, e, x)?;
    let sigma = e.without(x);
    let d = sigma.len();
    let reg = oracle::quotient_reg(&h.edge_ideal())?;
    let reg_with_sigma = oracle::quotient_reg(&with_sigma)?;
    let reg_contraction = oracle::quotient_reg(&link_ideal)?;
    let identity_rhs = reg_with_sigma.max(reg_contraction + d as i64);
    let mut reg_deletions = Vec::with_capacity(d);
    let mut minors = Vec::with_capacity(d + 1);
    for xi in sigma.iter() {
        let minor = deletion(h, xi)?;
        reg_deletions.push(oracle::quotient_reg(&minor.edge_ideal())?);
        minors.push(minor);
    }
    minors.push(contraction_set(h, sigma)?);
    let bound_rhs = (reg_deletions.iter().sum::<i64>() + d as i64 - 1).max(reg_contraction + d as i64);
    let minors_chordal = opts
        .check_minor_chordality
        .then(|| minors.iter().all(|m| checker.check(m).is_chordal()));
    let report = BoundReport {
        d,
        reg,
        reg_with_sigma,
        reg_contraction,
        identity_rhs,
        reg_deletions,
        bound_rhs,
        minors_chordal,
    };
    if report.reg != report.identity_rhs {
        return Err(Error::Violation(format!(
            "reg(R/I(H)) = {} but the deletion/contraction side is {}",
            report.reg, report.identity_rhs
        )));
    }
    if report.reg > report.bound_rhs {
        return Err(Error::Violation(format!(
            "reg(R/I(H)) = {} exceeds the bound {}",
            report.reg, report.bound_rhs
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Ctx, VariableContext};

    fn ctx(names: &[&str]) -> Ctx {
        VariableContext::new(names.iter().copied()).unwrap()
    }

    fn set(c: &Ctx, names: &[&str]) -> VertexSet {
        c.set_from_names(names).unwrap()
    }

    fn clutter(c: &Ctx, edges: &[&[&str]]) -> Clutter {
        Clutter::new(c, c.all(), edges.iter().map(|e| set(c, e)).collect()).unwrap()
    }

    fn edges(h: &Clutter) -> Vec<Vec<String>> {
        h.edges().iter().map(|e| h.ctx().set_names(*e)).collect()
    }

    #[test]
    fn deletions() {
        let c = ctx(&["x", "y", "z"]);
        let tri = clutter(&c, &[&["x", "y"], &["x", "z"], &["y", "z"]]);
        assert_eq!(edges(&deletion(&tri, 0).unwrap()), vec![vec!["y", "z"]]);
        let path = clutter(&c, &[&["x", "y"], &["y", "z"]]);
        let d = deletion(&path, 1).unwrap();
        assert!(d.is_edgeless());
        assert_eq!(d.vertices(), set(&c, &["x", "z"]));
        let c4 = ctx(&["x", "y", "z", "w"]);
        let h = clutter(&c4, &[&["x", "y", "z"], &["x", "y", "w"]]);
        assert_eq!(edges(&deletion(&h, 3).unwrap()), vec![vec!["x", "y", "z"]]);
        assert!(matches!(deletion(&d, 1), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn contractions() {
        let c = ctx(&["x", "y", "z"]);
        let tri = clutter(&c, &[&["x", "y"], &["x", "z"], &["y", "z"]]);
        assert_eq!(edges(&contraction(&tri, 0).unwrap()), vec![vec!["y"], vec!["z"]]);
        let c4 = ctx(&["x", "y", "z", "w"]);
        let h = clutter(&c4, &[&["x", "y", "z"], &["x", "y", "w"]]);
        assert_eq!(
            edges(&contraction(&h, 0).unwrap()),
            vec![vec!["y", "z"], vec!["y", "w"]]
        );
        let edgeless = Clutter::new(&c, c.all(), vec![]).unwrap();
        assert!(contraction(&edgeless, 1).unwrap().is_edgeless());
        // contracting a singleton edge leaves the empty edge
        let singled = contraction(&tri, 0).unwrap();
        assert_eq!(contraction(&singled, 1), Err(Error::ImproperContraction));
    }

    #[test]
    fn contraction_sets() {
        let c4 = ctx(&["x", "y", "z", "w"]);
        let h = clutter(&c4, &[&["x", "y", "z"], &["x", "y", "w"]]);
        let hs = contraction_set(&h, set(&c4, &["x", "y"])).unwrap();
        assert_eq!(edges(&hs), vec![vec!["z"], vec!["w"]]);
        let reversed = contraction(&contraction(&h, 1).unwrap(), 0).unwrap();
        assert_eq!(reversed, hs);
        assert_eq!(contraction_set(&h, VertexSet::EMPTY).unwrap(), h);
        let c = ctx(&["x", "y", "z"]);
        let tri = clutter(&c, &[&["x", "y"], &["x", "z"], &["y", "z"]]);
        assert_eq!(
            edges(&contraction_set(&tri, set(&c, &["y"])).unwrap()),
            vec![vec!["x"], vec!["z"]]
        );
        assert_eq!(
            contraction_set(&tri, set(&c, &["x", "y"])),
            Err(Error::ImproperContraction)
        );
    }

    #[test]
    fn simplicial_and_containment() {
        let c = ctx(&["x", "y", "z"]);
        let tri = clutter(&c, &[&["x", "y"], &["x", "z"], &["y", "z"]]);
        assert!(is_simplicial_vertex(&tri, 0).unwrap());
        let c4 = ctx(&["x", "y", "z", "w"]);
        let h = clutter(&c4, &[&["x", "y", "z"], &["x", "y", "w"]]);
        assert!(!is_simplicial_vertex(&h, 0).unwrap());
        assert!(is_simplicial_vertex(&h, 2).unwrap());

        assert!(is_containment_pair(&tri, 0, set(&c, &["x", "y"])).unwrap());
        assert!(is_containment_pair(&h, 2, set(&c4, &["x", "y", "z"])).unwrap());
        assert!(!is_containment_pair(&h, 0, set(&c4, &["x", "y", "z"])).unwrap());
        assert!(is_containment_pair(&h, 3, set(&c4, &["x", "y", "z"])).is_err());
    }

    #[test]
    fn chordality() {
        let c = ctx(&["x", "y", "z"]);
        let tri = clutter(&c, &[&["x", "y"], &["x", "z"], &["y", "z"]]);
        assert_eq!(is_chordal(&tri), Chordality::Chordal);
        let c4 = ctx(&["x", "y", "z", "w"]);
        let square = clutter(&c4, &[&["x", "y"], &["y", "z"], &["z", "w"], &["w", "x"]]);
        let verdict = is_chordal(&square);
        let Chordality::NotChordal(trace) = verdict else {
            panic!("the 4-cycle is not chordal");
        };
        assert!(trace.ops.is_empty());
        assert!(simplicial_vertices(&trace.replay(&square).unwrap()).is_empty());
        let edgeless = Clutter::new(&c, c.all(), vec![]).unwrap();
        assert!(is_chordal(&edgeless).is_chordal());
        assert_eq!(
            ChordalityChecker::with_limit(0).check(&tri),
            Chordality::Undecided
        );
    }

    #[test]
    fn five_cycle_witness_replays() {
        let c = VariableContext::indexed(6).unwrap();
        // a triangle with a pendant 4-cycle hanging off vertex 0
        let e = |a: usize, b: usize| VertexSet::from_indices([a, b]);
        let h = Clutter::new(&c, c.all(), vec![e(0, 1), e(1, 2), e(0, 2), e(0, 3), e(3, 4), e(4, 5), e(5, 0)]).unwrap();
        let Chordality::NotChordal(trace) = is_chordal(&h) else {
            panic!("contains an induced 4-cycle");
        };
        let minor = trace.replay(&h).unwrap();
        assert!(simplicial_vertices(&minor).is_empty());
    }

    #[test]
    fn trace_parsing() {
        let c = ctx(&["x", "y", "z"]);
        let t = MinorTrace::parse(&c, "d:x, c:y").unwrap();
        assert_eq!(t.ops, vec![MinorOp::Delete(0), MinorOp::Contract(1)]);
        assert_eq!(t.render(&c), "delete x, contract y");
        assert!(MinorTrace::parse(&c, "q:x").is_err());
    }

    #[test]
    fn lemma_h_examples() {
        let c = ctx(&["x", "y", "z"]);
        let tri = clutter(&c, &[&["x", "y"], &["x", "z"], &["y", "z"]]);
        let (del, lk) = lemma_h_ideals(&tri, set(&c, &["x", "y"]), 0).unwrap();
        assert_eq!(del, MonomialIdeal::parse(&c, &["y", "x*z"]).unwrap());
        assert_eq!(lk, MonomialIdeal::parse(&c, &["x", "z"]).unwrap());

        let c4 = ctx(&["x", "y", "z", "w"]);
        let h = clutter(&c4, &[&["x", "y", "z"], &["x", "y", "w"]]);
        let (del, lk) = lemma_h_ideals(&h, set(&c4, &["x", "y", "z"]), 2).unwrap();
        assert_eq!(del, MonomialIdeal::parse(&c4, &["x*y"]).unwrap());
        assert_eq!(lk, MonomialIdeal::parse(&c4, &["z", "w"]).unwrap());

        let path = clutter(&c, &[&["x", "y"], &["y", "z"]]);
        let (del, lk) = lemma_h_ideals(&path, set(&c, &["x", "y"]), 0).unwrap();
        assert_eq!(del, MonomialIdeal::parse(&c, &["y"]).unwrap());
        assert_eq!(lk, MonomialIdeal::parse(&c, &["x", "z"]).unwrap());
    }

    #[test]
    fn bound_examples() {
        let c = ctx(&["x", "y", "z"]);
        let tri = clutter(&c, &[&["x", "y"], &["x", "z"], &["y", "z"]]);
        let r = chordal_reg_bound(&tri, 0, set(&c, &["x", "y"])).unwrap();
        assert_eq!((r.reg, r.identity_rhs, r.bound_rhs), (1, 1, 1));
        assert_eq!(r.reg_deletions, vec![1]);

        let c4 = ctx(&["x", "y", "z", "w"]);
        let h = clutter(&c4, &[&["x", "y", "z"], &["x", "y", "w"]]);
        let r = chordal_reg_bound(&h, 2, set(&c4, &["x", "y", "z"])).unwrap();
        assert_eq!(r.d, 2);
        assert_eq!((r.reg, r.reg_with_sigma, r.reg_contraction), (2, 1, 0));
        assert_eq!((r.identity_rhs, r.bound_rhs), (2, 2));
        assert_eq!(r.minors_chordal, Some(true));

        let ab = ctx(&["x", "y"]);
        let single = clutter(&ab, &[&["x", "y"]]);
        let r = chordal_reg_bound(&single, 0, ab.all()).unwrap();
        assert_eq!((r.reg, r.reg_with_sigma, r.reg_contraction, r.identity_rhs), (1, 0, 0, 1));

        assert!(matches!(
            chordal_reg_bound(&h, 0, set(&c4, &["x", "y", "z"])),
            Err(Error::Precondition(_))
        ));
    }
}
