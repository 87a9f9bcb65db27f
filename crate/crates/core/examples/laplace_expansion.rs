//! Laplace expansion of the quantum minors for every split m + n <= 3.

use std::sync::Arc;

use qwedge::braiding::jimbo_a;
use qwedge::determinants::{canonical_comodule, laplace_check};
use qwedge::exterior::ExteriorAlgebra;

fn main() -> qwedge::Result<()> {
    let space = Arc::new(jimbo_a(3));
    let ext = ExteriorAlgebra::new(space.clone());
    let rho = canonical_comodule(space);
    for (m, n) in [(1, 1), (1, 2), (2, 1)] {
        let v = laplace_check(&ext, &rho, m, n)?;
        println!("m={m} n={n}: {}", if v.pass { "holds" } else { "fails" });
    }
    Ok(())
}
