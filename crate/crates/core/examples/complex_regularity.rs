//! Regularity and projective dimension of a decomposable complex from its
//! certificate, checked against the homology oracle.

use kdecomp::decomposition::{ComplexSearcher, Decision};
use kdecomp::oracle::{self, Field};
use kdecomp::resolution;
use kdecomp::verify::ha_sides;
use kdecomp::{SimplicialComplex, VariableContext};

fn main() -> kdecomp::Result<()> {
    // a path of triangles, plus a ghost vertex g
    let ctx = VariableContext::new(["a", "b", "c", "d", "e", "g"])?;
    let faces = [&["a", "b", "c"][..], &["b", "c", "d"], &["c", "d", "e"], &["a", "e"]]
        .iter()
        .map(|f| ctx.set_from_names(f))
        .collect::<kdecomp::Result<Vec<_>>>()?;
    let complex = SimplicialComplex::new(&ctx, ctx.all(), faces)?;
    println!("Δ = {} over {}", complex.display(), ctx.fmt_set(complex.ground()));

    let Decision::Decomposable(cert) = ComplexSearcher::new(Some(0)).decide(&complex)? else {
        println!("not vertex decomposable");
        return Ok(());
    };
    print!("{}", cert.render(&ctx));
    let (reg, pd) = resolution::reg_pd_complex(&complex, &cert)?;
    let (oracle_reg, oracle_pd) = oracle::complex_reg_pd(&complex, Field::Rational)?;
    println!("recursion: reg(R/I_Δ) = {reg}, pd(R/I_Δ) = {pd}");
    println!("oracle:    reg(R/I_Δ) = {oracle_reg}, pd(R/I_Δ) = {oracle_pd}");
    println!("bight(I_Δ) = {}", resolution::bight(&complex.ideal()?)?);

    if let Some(sigma) = cert.root() {
        let (lhs, rhs) = ha_sides(&complex, sigma)?;
        println!("at σ = {}: reg = {lhs}, max(deletion, link + |σ|) = {rhs}", ctx.fmt_set(sigma));
    }
    let (pd_dual, reg_quot) = resolution::terao_sides(&complex.ideal()?)?;
    println!("pd(I^vee) = {pd_dual}, reg(R/I) = {reg_quot}");
    Ok(())
}
