//! Normal forms, counit and coproduct in the FRT bialgebra of jimbo-a:2.

use std::sync::Arc;

use qwedge::algebra::{Algebra, Presentation};
use qwedge::braiding::jimbo_a;

fn main() -> qwedge::Result<()> {
    let p = Arc::new(Presentation::frt(&jimbo_a(2)));
    println!("graded dims: {:?}", (0..4).map(|d| p.graded_dim(d)).collect::<qwedge::Result<Vec<_>>>()?);
    let alg = Algebra::single(p);
    let t = |name: &str| alg.generator_named(0, name).expect("generator");
    let (a, b, c, d) = (t("T1_1"), t("T1_2"), t("T2_1"), t("T2_2"));
    println!("T1_2.T1_1 = {}", b.mul(&a)?);
    println!("T2_2.T1_1 = {}", d.mul(&a)?);
    println!("T2_1.T1_2 = {}", c.mul(&b)?);
    let x = a.mul(&d)?;
    println!("ε(T1_1.T2_2) = {}", x.counit()?);
    println!("Δ(T1_1) = {}", a.coproduct()?);
    Ok(())
}
