//! Quantum minors and determinants of the canonical comodule.

use std::sync::Arc;

use qwedge::braiding::jimbo_a;
use qwedge::determinants::{canonical_comodule, det_q, minors};
use qwedge::exterior::ExteriorAlgebra;

fn main() -> qwedge::Result<()> {
    for n in 2..=3 {
        let space = Arc::new(jimbo_a(n));
        let ext = ExteriorAlgebra::new(space.clone());
        let rho = canonical_comodule(space);
        println!("jimbo-a:{n}: det_q = {}", det_q(&ext, &rho, n + 1)?);
        if n == 3 {
            let xi = minors(&ext, &rho, 2)?;
            for (i, row) in xi.entries().iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    println!("  ξ[{i}][{j}] = {e}");
                }
            }
        }
    }
    Ok(())
}
