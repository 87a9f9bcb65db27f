//! Graded dimensions and basis of quantum exterior algebras.

use std::sync::Arc;

use qwedge::braiding::{jimbo_a, type_c_example};
use qwedge::exterior::ExteriorAlgebra;
use qwedge::tensor_ops::word_of;

fn main() {
    for space in [jimbo_a(3), type_c_example()] {
        let n = space.dim();
        let name = space.name().to_string();
        let ext = ExteriorAlgebra::new(Arc::new(space));
        println!("{name}: dims {:?}, rank {:?}", ext.dims(n + 1), ext.rank(n + 1));
        let basis = ext.basis(2);
        for i in 0..basis.dim() {
            let w = *basis.preimage(i).keys().next().unwrap();
            let letters: Vec<String> = word_of(n, 2, w).iter().map(|a| format!("v{}", a + 1)).collect();
            println!("  w{} = A({})", i + 1, letters.join(" ⊗ "));
        }
    }
}
