//! Loading a braiding from a spec document and round-tripping it.

use qwedge::braiding::{emit_spec, load_spec};

const SPEC: &str = r#"{
  "dimension": 2,
  "entries": [
    {"from": [1, 1], "to": [1, 1], "coeff": "q"},
    {"from": [1, 2], "to": [2, 1], "coeff": "1"},
    {"from": [2, 1], "to": [1, 2], "coeff": "1"},
    {"from": [2, 1], "to": [2, 1], "coeff": "q - q^-1"},
    {"from": [2, 2], "to": [2, 2], "coeff": "q"}
  ]
}"#;

fn main() -> qwedge::Result<()> {
    let space = load_spec(SPEC)?;
    println!("{:?}", space.verify());
    let again = load_spec(&emit_spec(&space))?;
    println!("round trip equal: {}", again.matrix() == space.matrix());
    match load_spec(r#"{"dimension": 1, "entries": [{"from": [1, 1], "to": [1, 1], "coeff": "q^^2"}]}"#) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
