//! Decide k-decomposability of a monomial ideal and read off its
//! linear quotients and Betti numbers from the certificate.

use kdecomp::decomposition::{Decision, IdealSearcher};
use kdecomp::resolution;
use kdecomp::{MonomialIdeal, VariableContext};

fn main() -> kdecomp::Result<()> {
    let ctx = VariableContext::new(["x", "y", "z", "w"])?;
    let ideal = MonomialIdeal::parse(&ctx, &["x^2", "x*y", "y^2*z", "y*z*w"])?;
    println!("I = {ideal}");

    for k in 0..3 {
        match IdealSearcher::new(Some(k)).decide(&ideal)? {
            Decision::Decomposable(cert) => {
                println!("{k}-decomposable:\n{}", cert.render(&ctx));
                let order = resolution::order_from_certificate(&cert, &ctx)?;
                for (g, s) in order.gens.iter().zip(&order.sets) {
                    println!("  {:<8} set = {}", g.to_string_with(&ctx), ctx.fmt_set(*s));
                }
                let table = resolution::betti_recursive(&cert, &ctx)?;
                print!("{}", table.render());
                let (pd, reg) = resolution::pd_reg_from_certificate(&cert, &ctx)?;
                println!("pd(I) = {pd}, reg(I) = {reg}");
                return Ok(());
            }
            Decision::NotDecomposable => println!("not {k}-decomposable"),
            Decision::Undecided => println!("k = {k}: search budget exhausted"),
        }
    }
    Ok(())
}
