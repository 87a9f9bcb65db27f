//! Braid relation, invertibility and Hecke condition of the built-in braidings.

use qwedge::braiding::{diagonal_cartan, jimbo_a, type_c_example, CartanData};

fn main() -> qwedge::Result<()> {
    let mut spaces = vec![jimbo_a(2), jimbo_a(3), type_c_example()];
    for name in ["A2", "B2"] {
        spaces.push(diagonal_cartan(&CartanData::named(name)?)?.with_name(format!("cartan:{name}")));
    }
    for s in &spaces {
        let f = s.verify();
        println!(
            "{:<10} dim {}  braid {:<5} invertible {:<5} hecke {}",
            s.name(),
            s.dim(),
            f.braid_ok,
            f.invertible,
            f.hecke
        );
    }
    Ok(())
}
