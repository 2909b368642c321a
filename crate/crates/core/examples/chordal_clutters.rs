//! Chordality of clutters by minor search, and the regularity identity at
//! a simplicial vertex.

use kdecomp::clutters::{self, Chordality};
use kdecomp::{Clutter, VariableContext};

fn main() -> kdecomp::Result<()> {
    let ctx = VariableContext::new(["x", "y", "z", "w", "v"])?;
    let edges = |list: &[&[&str]]| list.iter().map(|e| ctx.set_from_names(e)).collect::<kdecomp::Result<Vec<_>>>();

    let h = Clutter::new(&ctx, ctx.all(), edges(&[&["x", "y", "z"], &["x", "y", "w"], &["w", "v"]])?)?;
    println!("H = {}", h.display());
    println!("simplicial vertices: {}", ctx.fmt_set(clutters::simplicial_vertices(&h)));
    println!("chordal: {}", clutters::is_chordal(&h).is_chordal());

    let z = ctx.index_of("z")?;
    let e = ctx.set_from_names(&["x", "y", "z"])?;
    let (with_sigma, link) = clutters::lemma_h_ideals(&h, e, z)?;
    println!("I_(Δ\\σ) = {with_sigma}");
    println!("I_lk(σ)  = {link}");
    let report = clutters::chordal_reg_bound(&h, z, e)?;
    println!("{report:#?}");

    let cycle = Clutter::new(
        &ctx,
        ctx.all(),
        edges(&[&["x", "y"], &["y", "z"], &["z", "w"], &["w", "v"], &["v", "x"]])?,
    )?;
    if let Chordality::NotChordal(trace) = clutters::is_chordal(&cycle) {
        let minor = trace.replay(&cycle)?;
        println!("5-cycle: witness [{}] gives {}", trace.render(&ctx), minor.display());
    }
    Ok(())
}
