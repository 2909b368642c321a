//! Betti tables three ways, and a case where the field matters.

use kdecomp::decomposition::{k_decomposable_ideal, Decision};
use kdecomp::oracle::{self, Field};
use kdecomp::resolution;
use kdecomp::{MonomialIdeal, SimplicialComplex, VariableContext, VertexSet};

fn main() -> kdecomp::Result<()> {
    let ctx = VariableContext::new(["x", "y", "z"])?;
    let ideal = MonomialIdeal::parse(&ctx, &["x^2*y", "x*y^2", "y^2*z", "x*y*z^2"])?;
    println!("I = {ideal}");

    println!("Koszul oracle:");
    print!("{}", oracle::betti_koszul(&ideal, Field::Rational)?.render());
    if let Some(order) = resolution::linear_quotients_order(&ideal)? {
        println!("linear quotients:");
        print!("{}", resolution::betti_from_order(&order).render());
    }
    if let Decision::Decomposable(cert) = k_decomposable_ideal(&ideal, None)? {
        println!("certificate recursion:");
        print!("{}", resolution::betti_recursive(&cert, &ctx)?.render());
    }

    // six-vertex triangulation of the real projective plane
    let six = VariableContext::indexed(6)?;
    let tri = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
        [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
    ];
    let rp2 = SimplicialComplex::new(&six, six.all(), tri.iter().map(|t| VertexSet::from_indices(*t)).collect())?;
    let i_rp2 = rp2.ideal()?;
    for field in [Field::Rational, Field::Prime(2)] {
        let table = oracle::betti_hochster(&i_rp2, field)?;
        println!("I_RP2 over {field:?}:");
        print!("{}", table.render());
    }
    Ok(())
}
