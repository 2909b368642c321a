//! Alexander duality and the two search modes for complexes.

use kdecomp::decomposition::{k_decomposable_complex, Mode};
use kdecomp::{SimplicialComplex, VariableContext};

fn main() -> kdecomp::Result<()> {
    let ctx = VariableContext::new(["a", "b", "c", "d", "e"])?;
    let facets = [&["a", "b", "c"][..], &["b", "c", "d"], &["c", "d", "e"], &["a", "e"]];
    let faces = facets
        .iter()
        .map(|f| ctx.set_from_names(f))
        .collect::<kdecomp::Result<Vec<_>>>()?;
    let complex = SimplicialComplex::new(&ctx, ctx.all(), faces)?;
    println!("Δ        = {}", complex.display());
    println!("I_Δ      = {}", complex.ideal()?);
    let dual = complex.alexander_dual();
    println!("Δ^vee    = {}", dual.display());
    println!("I_Δ^vee  = {}", complex.dual_ideal()?);
    assert_eq!(complex.ideal()?.alexander_dual()?, dual.ideal()?);

    for k in 0..=2 {
        let direct = k_decomposable_complex(&complex, Some(k), Mode::Direct)?;
        let through_dual = k_decomposable_complex(&complex, Some(k), Mode::Dual)?;
        println!(
            "k = {k}: direct {}, dual {}",
            direct.is_decomposable(),
            through_dual.is_decomposable()
        );
        if let Some(cert) = through_dual.certificate() {
            print!("{}", cert.render(&ctx));
            break;
        }
    }
    Ok(())
}
