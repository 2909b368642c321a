//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use kdecomp::clutters::{self, BoundOptions, Chordality, ChordalityChecker};
use kdecomp::decomposition::{ComplexCertificate, ComplexSearcher, Decision, DualSearcher, IdealCertificate, IdealSearcher};
use kdecomp::generate::{self, Sampler};
use kdecomp::oracle::{self, Field};
use kdecomp::resolution::{self, binomial};
use kdecomp::verify::ha_sides;
use kdecomp::{Clutter, MonomialIdeal, SimplicialComplex, VariableContext, VertexSet};

struct Verdict {
    passed: bool,
    detail: String,
}

fn pass(detail: String) -> Verdict {
    Verdict { passed: true, detail }
}

fn fail(detail: String) -> Verdict {
    Verdict { passed: false, detail }
}

/// Criterion 1 output reused by criterion 5.
type Certified = Vec<(MonomialIdeal, IdealCertificate)>;

fn three_way_betti(certified: &mut Certified) -> Verdict {
    let mut s = Sampler::new(1);
    let mut searcher = IdealSearcher::new(Some(2));
    let (mut drawn, mut principal, mut rejected, mut undecided) = (0, 0, 0, 0);
    while certified.len() < 500 {
        drawn += 1;
        let ctx = s.context(1, 6);
        let ideal = s.ideal(&ctx, 10, 3);
        // principal ideals are single leaves and say nothing
        if ideal.len() == 1 {
            principal += 1;
            continue;
        }
        match searcher.decide(&ideal).unwrap() {
            Decision::Decomposable(cert) => certified.push((ideal, cert)),
            Decision::NotDecomposable => rejected += 1,
            Decision::Undecided => undecided += 1,
        }
    }
    let mut largest = 0;
    for (ideal, cert) in certified.iter() {
        let ctx = ideal.ctx();
        largest = largest.max(ideal.len());
        let order = resolution::order_from_certificate(cert, ctx).unwrap();
        let from_order = resolution::betti_from_order(&order);
        let recursive = resolution::betti_recursive(cert, ctx).unwrap();
        let koszul = oracle::betti_koszul(ideal, Field::Rational).unwrap();
        if from_order != koszul || recursive != koszul {
            return fail(format!(
                "tables differ on {ideal}\norder:\n{}recursive:\n{}koszul:\n{}",
                from_order.render(),
                recursive.render(),
                koszul.render()
            ));
        }
    }
    pass(format!(
        "{} non-principal ideals agree entrywise (up to {largest} generators; {drawn} drawn, {principal} principal skipped, {rejected} not 2-decomposable, {undecided} undecided)",
        certified.len()
    ))
}

fn corvd(certified: &Certified) -> Verdict {
    for (ideal, cert) in certified {
        let from_cert = resolution::pd_reg_from_certificate(cert, ideal.ctx()).unwrap();
        let table = oracle::betti_oracle(ideal, Field::Rational).unwrap();
        let from_table = resolution::invariants_from_betti(&table).unwrap();
        if from_cert != from_table {
            return fail(format!("{ideal}: certificate (pd, reg) = {from_cert:?}, oracle {from_table:?}"));
        }
    }
    pass(format!("{} certificates match the oracle (pd, reg)", certified.len()))
}

fn regp(decomposable: &mut Vec<SimplicialComplex>) -> Verdict {
    let mut s = Sampler::new(2);
    let mut searcher = ComplexSearcher::new(Some(0));
    let mut drawn = 0;
    let mut checked_roots = 0;
    while checked_roots < 200 {
        drawn += 1;
        let ctx = s.context(2, 7);
        let complex = s.complex(&ctx, 6);
        let Decision::Decomposable(cert) = searcher.decide(&complex).unwrap() else {
            continue;
        };
        let recursive = resolution::reg_pd_complex(&complex, &cert).unwrap();
        let direct = oracle::complex_reg_pd(&complex, Field::Rational).unwrap();
        if recursive != direct {
            return fail(format!(
                "{}: recursion (reg, pd) = {recursive:?}, oracle {direct:?}",
                complex.display()
            ));
        }
        if let ComplexCertificate::Node { sigma, .. } = cert {
            let (lhs, rhs) = ha_sides(&complex, sigma).unwrap();
            if lhs != rhs {
                return fail(format!(
                    "{}: bound at root face {} is {rhs}, reg is {lhs}",
                    complex.display(),
                    ctx.fmt_set(sigma)
                ));
            }
            checked_roots += 1;
        }
        decomposable.push(complex);
    }
    pass(format!(
        "{} vertex-decomposable complexes ({} with a root face, {drawn} drawn): recursion equals oracle, bound tight at root",
        decomposable.len(),
        checked_roots
    ))
}

fn bight(decomposable: &[SimplicialComplex]) -> Verdict {
    for complex in decomposable {
        let (_, pd) = oracle::complex_reg_pd(complex, Field::Rational).unwrap();
        let b = resolution::bight(&complex.ideal().unwrap()).unwrap();
        if pd != b {
            return fail(format!("{}: pd = {pd}, bight = {b}", complex.display()));
        }
    }
    pass(format!("pd(R/I) = bight(I) on {} complexes", decomposable.len()))
}

fn ha_inequality() -> Verdict {
    let mut s = Sampler::new(3);
    let (mut complexes, mut pairs, mut tight) = (0, 0, 0);
    while complexes < 500 {
        let ctx = s.context(1, 6);
        let complex = s.complex(&ctx, 6);
        let faces: Vec<VertexSet> = complex.faces().into_iter().filter(|f| !f.is_empty()).collect();
        if faces.is_empty() {
            continue;
        }
        complexes += 1;
        for sigma in faces {
            let (lhs, rhs) = ha_sides(&complex, sigma).unwrap();
            if lhs > rhs {
                return fail(format!(
                    "{}, σ = {}: reg = {lhs} > {rhs}",
                    complex.display(),
                    ctx.fmt_set(sigma)
                ));
            }
            pairs += 1;
            tight += (lhs == rhs) as usize;
        }
    }
    pass(format!("{complexes} complexes, {pairs} (Δ, σ) pairs, 0 violations ({tight} tight)"))
}

fn terao() -> Verdict {
    let mut s = Sampler::new(4);
    for _ in 0..500 {
        let ctx = s.context(1, 7);
        let ideal = s.squarefree_ideal(&ctx, 8);
        let (pd_dual, reg) = resolution::terao_sides(&ideal).unwrap();
        if pd_dual as i64 != reg {
            return fail(format!("{ideal}: pd(I^vee) = {pd_dual}, reg(R/I) = {reg}"));
        }
    }
    pass("pd(I^vee) = reg(R/I) on 500 squarefree ideals".into())
}

fn check_bounds(checker: &mut ChordalityChecker, h: &Clutter, pairs: &mut usize, minors_not_chordal: &mut usize) -> Result<(), String> {
    for x in clutters::simplicial_vertices(h).iter() {
        for &e in h.edges().iter().filter(|e| e.contains(x)) {
            match clutters::chordal_reg_bound_with(checker, h, x, e, BoundOptions::default()) {
                Ok(report) => {
                    *pairs += 1;
                    if report.minors_chordal == Some(false) {
                        *minors_not_chordal += 1;
                    }
                }
                Err(err) => {
                    return Err(format!(
                        "{}, x = {}, e = {}: {err}",
                        h.display(),
                        h.ctx().name(x),
                        h.ctx().fmt_set(e)
                    ))
                }
            }
        }
    }
    Ok(())
}

fn chordal_regularity() -> Verdict {
    let mut checker = ChordalityChecker::default();
    let (mut chordal, mut pairs, mut minors_not_chordal) = (0, 0, 0);
    let mut total = 0;
    for n in 1..=5 {
        let ctx = VariableContext::indexed(n).unwrap();
        for h in generate::all_clutters(&ctx) {
            total += 1;
            match checker.check(&h) {
                Chordality::Chordal => chordal += 1,
                Chordality::NotChordal(_) => continue,
                Chordality::Undecided => return fail(format!("undecided on {}", h.display())),
            }
            if let Err(why) = check_bounds(&mut checker, &h, &mut pairs, &mut minors_not_chordal) {
                return fail(why);
            }
        }
    }
    let exhaustive = format!("exhaustive n<=5: {chordal} chordal of {total} clutters, {pairs} (x, e) pairs");
    let mut s = Sampler::new(7);
    let (mut sampled, mut sampled_chordal, mut sampled_pairs) = (0, 0, 0);
    for r in [2, 3] {
        for _ in 0..300 {
            let ctx = s.context(r.max(3), 8);
            let h = s.uniform_clutter(&ctx, r, 10);
            sampled += 1;
            match checker.check(&h) {
                Chordality::Chordal => sampled_chordal += 1,
                Chordality::NotChordal(_) => continue,
                Chordality::Undecided => return fail(format!("undecided on {}", h.display())),
            }
            if let Err(why) = check_bounds(&mut checker, &h, &mut sampled_pairs, &mut minors_not_chordal) {
                return fail(why);
            }
        }
    }
    pass(format!(
        "{exhaustive}; random 2-/3-uniform n<=8: {sampled_chordal} chordal of {sampled}, {sampled_pairs} pairs; (i) and (ii) hold; minors reported non-chordal: {minors_not_chordal}"
    ))
}

/// Chordal iff no induced cycle of length at least four.
fn brute_force_chordal_graph(n: usize, adj: &[u64]) -> bool {
    for w in 0u64..1 << n {
        if w.count_ones() < 4 {
            continue;
        }
        let all_degree_two = (0..n)
            .filter(|v| w >> v & 1 == 1)
            .all(|v| (adj[v] & w).count_ones() == 2);
        if !all_degree_two {
            continue;
        }
        // a 2-regular induced subgraph is a cycle iff connected
        let start = w.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & w & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        if seen == w {
            return false;
        }
    }
    true
}

fn graph_chordality() -> Verdict {
    let mut checker = ChordalityChecker::default();
    let (mut graphs, mut chordal) = (0u64, 0u64);
    for n in 1..=7 {
        let ctx = VariableContext::indexed(n).unwrap();
        for g in generate::all_graphs(&ctx) {
            let mut adj = vec![0u64; n];
            for e in g.edges() {
                let (a, b) = (e.first().unwrap(), e.without(e.first().unwrap()).first().unwrap());
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
            let expected = brute_force_chordal_graph(n, &adj);
            let got = match checker.check(&g) {
                Chordality::Chordal => true,
                Chordality::NotChordal(_) => false,
                Chordality::Undecided => return fail(format!("undecided on {}", g.display())),
            };
            if got != expected {
                return fail(format!("{}: minor search says {got}, brute force {expected}", g.display()));
            }
            graphs += 1;
            chordal += got as u64;
        }
    }
    pass(format!("{graphs} labeled graphs on 1..=7 vertices agree ({chordal} chordal)"))
}

fn duality_transport() -> Verdict {
    let mut classes = 0;
    let mut decomposable = [0usize; 3];
    for n in 0..=6 {
        let ctx = VariableContext::indexed(n).unwrap();
        let reps = generate::complex_classes(&ctx);
        classes += reps.len();
        for (k, count) in decomposable.iter_mut().enumerate() {
            let mut direct = ComplexSearcher::new(Some(k));
            let mut dual = DualSearcher::new(Some(k));
            for complex in &reps {
                let a = direct.decide(complex).unwrap();
                let b = dual.decide(complex).unwrap();
                if matches!(a, Decision::Undecided) || matches!(b, Decision::Undecided) {
                    return fail(format!("undecided at k = {k} on {}", complex.display()));
                }
                if a.is_decomposable() != b.is_decomposable() {
                    return fail(format!(
                        "k = {k}, {}: direct {}, dual {}",
                        complex.display(),
                        a.is_decomposable(),
                        b.is_decomposable()
                    ));
                }
                *count += a.is_decomposable() as usize;
            }
        }
    }
    pass(format!(
        "{classes} isomorphism classes of complexes on grounds of size 0..=6; decomposable for k=0,1,2: {decomposable:?}"
    ))
}

fn vandermonde() -> Verdict {
    for k in 0..=12u64 {
        for m in 0..=12u64 {
            for i in 0..=12u64 {
                let rhs = (0..=m.min(i)).map(|l| binomial(m, l) * binomial(k, i - l)).sum();
                if binomial(k + m, i) != rhs {
                    return fail(format!("k = {k}, m = {m}, i = {i}"));
                }
            }
        }
    }
    pass("C(k+m, i) = Σ C(m, l) C(k, i-l) for 0 <= k, m, i <= 12".into())
}

fn main() -> ExitCode {
    let mut certified = Vec::new();
    let mut decomposable = Vec::new();
    let mut all_passed = true;
    let mut report = |id: usize, name: &str, run: &mut dyn FnMut() -> Verdict| {
        let start = Instant::now();
        let v = run();
        all_passed &= v.passed;
        println!(
            "[{}] criterion {id:>2} {name}: {} ({:.1}s)",
            if v.passed { "PASS" } else { "FAIL" },
            v.detail,
            start.elapsed().as_secs_f64()
        );
    };
    report(1, "three-way Betti agreement", &mut || three_way_betti(&mut certified));
    report(2, "complex recursion and tight bound", &mut || regp(&mut decomposable));
    report(3, "deletion/link regularity bound", &mut ha_inequality);
    report(4, "dual pd equals quotient reg", &mut terao);
    report(5, "certificate pd/reg", &mut || corvd(&certified));
    report(6, "big height", &mut || bight(&decomposable));
    report(7, "chordal clutter regularity", &mut chordal_regularity);
    report(8, "graph chordality", &mut graph_chordality);
    report(9, "direct/dual mode agreement", &mut duality_transport);
    report(10, "Vandermonde identity", &mut vandermonde);
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
