//! Randomized property runs with explicit seeds.
//!
//! Each run draws objects from a [`Sampler`], checks one identity against
//! the homology oracle and stops at the first counterexample.

use serde::Serialize;

use crate::clutters;
use crate::decomposition::{ComplexSearcher, Decision, IdealSearcher};
use crate::error::{Error, Result};
use crate::generate::Sampler;
use crate::model::SimplicialComplex;
use crate::oracle::{self, Field};
use crate::resolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    /// `pd(I^vee) = reg(R/I)` on squarefree ideals with up to 7 variables.
    Terao,
    /// `reg(R/I_Δ) <= max{reg(R/I_{Δ\σ}), reg(R/I_{lk σ}) + |σ|}` for random
    /// complexes on up to 6 vertices and random faces.
    Ha,
    /// The certificate recursion for `(reg, pd)` of decomposable complexes on
    /// up to 7 vertices, and tightness of the bound at the root face.
    Regp,
    /// Deletion and link ideals of independence complexes of random
    /// uniform clutters.
    LemmaH,
    /// Linear-quotient, recursive and Koszul Betti tables of 2-decomposable
    /// ideals, plus `(pd, reg)` read off the certificate.
    ThreeWay,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::Terao,
        Property::Ha,
        Property::Regp,
        Property::LemmaH,
        Property::ThreeWay,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Terao => "terao",
            Property::Ha => "ha",
            Property::Regp => "regp",
            Property::LemmaH => "lemma-h",
            Property::ThreeWay => "three-way",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub property: &'static str,
    pub seed: u64,
    pub requested: usize,
    /// Objects that met the preconditions and were checked.
    pub checked: usize,
    /// Samples drawn, including those skipped.
    pub drawn: usize,
    pub counterexample: Option<String>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Runs `property` on `count` objects drawn with `seed`. Runs that need
/// decomposable objects draw at most `50 * count` samples.
pub fn run(property: Property, seed: u64, count: usize) -> Result<RunReport> {
    let mut sampler = Sampler::new(seed);
    let mut report = RunReport {
        property: property.name(),
        seed,
        requested: count,
        checked: 0,
        drawn: 0,
        counterexample: None,
    };
    let max_draws = count.saturating_mul(50).max(count);
    let mut ideals = IdealSearcher::new(Some(2));
    let mut complexes = ComplexSearcher::new(None);
    while report.checked < count && report.drawn < max_draws {
        report.drawn += 1;
        let outcome = match property {
            Property::Terao => terao(&mut sampler),
            Property::Ha => ha(&mut sampler),
            Property::Regp => regp(&mut sampler, &mut complexes),
            Property::LemmaH => lemma_h(&mut sampler),
            Property::ThreeWay => three_way(&mut sampler, &mut ideals),
        }?;
        match outcome {
            Outcome::Skipped => {}
            Outcome::Held => report.checked += 1,
            Outcome::Failed(text) => {
                report.checked += 1;
                report.counterexample = Some(text);
                break;
            }
        }
    }
    Ok(report)
}

enum Outcome {
    Held,
    Skipped,
    Failed(String),
}

fn held_if(ok: bool, text: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Held
    } else {
        Outcome::Failed(text())
    }
}

fn terao(s: &mut Sampler) -> Result<Outcome> {
    let ctx = s.context(1, 7);
    let ideal = s.squarefree_ideal(&ctx, 8);
    let (pd_dual, reg) = resolution::terao_sides(&ideal)?;
    Ok(held_if(pd_dual as i64 == reg, || {
        format!("I = {ideal}: pd(I^vee) = {pd_dual}, reg(R/I) = {reg}")
    }))
}

/// Both sides of the deletion/link bound at `σ`.
pub fn ha_sides(complex: &SimplicialComplex, sigma: crate::model::VertexSet) -> Result<(i64, i64)> {
    let field = Field::Rational;
    let (reg, _) = oracle::complex_reg_pd(complex, field)?;
    let (reg_del, _) = oracle::complex_reg_pd(&complex.delete_face(sigma)?, field)?;
    let (reg_lk, _) = oracle::complex_reg_pd(&complex.link(sigma)?, field)?;
    Ok((reg, reg_del.max(reg_lk + sigma.len() as i64)))
}

fn ha(s: &mut Sampler) -> Result<Outcome> {
    let ctx = s.context(1, 6);
    let complex = s.complex(&ctx, 6);
    let Some(sigma) = s.face(&complex) else {
        return Ok(Outcome::Skipped);
    };
    let (lhs, rhs) = ha_sides(&complex, sigma)?;
    Ok(held_if(lhs <= rhs, || {
        format!(
            "Δ = {}, σ = {}: reg = {lhs} > {rhs}",
            complex.display(),
            ctx.fmt_set(sigma)
        )
    }))
}

fn regp(s: &mut Sampler, searcher: &mut ComplexSearcher) -> Result<Outcome> {
    let ctx = s.context(2, 7);
    let complex = s.complex(&ctx, 6);
    let Decision::Decomposable(cert) = searcher.decide(&complex)? else {
        return Ok(Outcome::Skipped);
    };
    let recursive = resolution::reg_pd_complex(&complex, &cert)?;
    let direct = oracle::complex_reg_pd(&complex, Field::Rational)?;
    if recursive != direct {
        return Ok(Outcome::Failed(format!(
            "Δ = {}: recursion gives (reg, pd) = {recursive:?}, oracle {direct:?}",
            complex.display()
        )));
    }
    if let Some(sigma) = cert.root() {
        let (lhs, rhs) = ha_sides(&complex, sigma)?;
        if lhs != rhs {
            return Ok(Outcome::Failed(format!(
                "Δ = {}: bound at shedding face {} is {rhs}, reg is {lhs}",
                complex.display(),
                ctx.fmt_set(sigma)
            )));
        }
    }
    Ok(Outcome::Held)
}

fn lemma_h(s: &mut Sampler) -> Result<Outcome> {
    let ctx = s.context(3, 7);
    let r = s.size(2, 3);
    let h = s.uniform_clutter(&ctx, r, 7);
    for &e in h.edges() {
        for x in e.iter() {
            match clutters::lemma_h_ideals(&h, e, x) {
                Ok(_) => {}
                Err(Error::Internal(why)) => {
                    return Ok(Outcome::Failed(format!("H = {}, e = {}, x = {}: {why}", h.display(), ctx.fmt_set(e), ctx.name(x))))
                }
                Err(other) => return Err(other),
            }
        }
    }
    Ok(Outcome::Held)
}

fn three_way(s: &mut Sampler, searcher: &mut IdealSearcher) -> Result<Outcome> {
    let ctx = s.context(1, 6);
    let ideal = s.ideal(&ctx, 10, 3);
    let Decision::Decomposable(cert) = searcher.decide(&ideal)? else {
        return Ok(Outcome::Skipped);
    };
    let order = resolution::order_from_certificate(&cert, &ctx)?;
    let from_order = resolution::betti_from_order(&order);
    let recursive = resolution::betti_recursive(&cert, &ctx)?;
    let koszul = oracle::betti_koszul(&ideal, Field::Rational)?;
    if from_order != koszul || recursive != koszul {
        return Ok(Outcome::Failed(format!(
            "I = {ideal}\norder:\n{}recursive:\n{}koszul:\n{}",
            from_order.render(),
            recursive.render(),
            koszul.render()
        )));
    }
    let from_cert = resolution::pd_reg_from_certificate(&cert, &ctx)?;
    let from_table = resolution::invariants_from_betti(&koszul)?;
    Ok(held_if(from_cert == from_table, || {
        format!("I = {ideal}: certificate gives (pd, reg) = {from_cert:?}, table {from_table:?}")
    }))
}
