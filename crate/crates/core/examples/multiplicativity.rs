//! det_q(F∘G) = det_q(F) det_q(G) for two comodules on commuting FRT legs.

use std::sync::Arc;

use qwedge::algebra::{Algebra, Presentation};
use qwedge::braiding::jimbo_a;
use qwedge::determinants::{comodule_on_leg, multiplicativity_check};
use qwedge::exterior::ExteriorAlgebra;

fn main() -> qwedge::Result<()> {
    let space = Arc::new(jimbo_a(2));
    let ext = ExteriorAlgebra::new(space.clone());
    let p = Arc::new(Presentation::frt(&space));
    let alg = Algebra::new(vec![p.clone(), p]);
    let f = comodule_on_leg(space.clone(), alg.clone(), 0);
    let g = comodule_on_leg(space, alg, 1);
    let fg = f.compose(&g)?;
    println!("(F∘G)[0][0] = {}", fg.entry(0, 0));
    let r = multiplicativity_check(&ext, &f, &g, 3)?;
    println!(
        "rank {}: compatible {}, cross powers {}, determinant {}",
        r.rank, r.compatible.pass, r.hypothesis.pass, r.determinant.pass
    );
    Ok(())
}
