//! Degree-two wedge relations of the four-dimensional type C braiding.

use std::sync::Arc;

use qwedge::braiding::type_c_example;
use qwedge::exterior::ExteriorAlgebra;

fn main() {
    let ext = ExteriorAlgebra::new(Arc::new(type_c_example()));
    let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let mu = ext.wedge_constants(1, 1);
    for i in 1..=4 {
        for j in 1..=4 {
            let terms: Vec<String> = (0..6)
                .filter(|&k| !mu.mu.get(i - 1, j - 1, k).is_zero())
                .map(|k| format!("({}) v{}^v{}", mu.mu.get(i - 1, j - 1, k), pairs[k].0, pairs[k].1))
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            println!("v{i}^v{j} = {rhs}");
        }
    }
}
